#!/usr/bin/env python3
"""Regenerates data/catalog.json and data/room_specs.json.

The asset dimensions below are hand-authored base sizes; instance variants are
derived from them with a fixed-seed jitter so the output is reproducible.
Spawn probabilities are stored together with the (object_count,
receptacle_count) pair they were derived from, so the table can be rebuilt from
scene counts with `p_spawn = min(1, object_count / receptacle_count)`.

Usage: python3 tools/make_catalog.py [OUT_DIR]
"""

import json
import random
import sys
from pathlib import Path

SCHEMA_VERSION = 1
RNG = random.Random(20220614)

BED, BATH, KIT, LIV = "bedroom", "bathroom", "kitchen", "living_room"

# name: (placements, room_weights, allow_dup, base_bbox [x,y,z], n_instances,
#        receptacle, states, material_class, extras)
FLOOR = {
    "Bed": (["edge"], {BED: 3}, False, (1.5, 0.7, 2.05), 14, True, ["dirtyable"], "fabric", {"widths": (1.0, 2.0)}),
    "Dresser": (["edge", "corner"], {BED: 2, LIV: 1}, True, (1.1, 0.85, 0.5), 10, True, [], "wood", {}),
    "SideTable": (["edge", "corner", "middle"], {BED: 2, LIV: 2}, True, (0.5, 0.6, 0.45), 12, True, [], "wood", {}),
    "Desk": (["edge"], {BED: 2, LIV: 1}, False, (1.25, 0.76, 0.62), 10, True, [], "wood", {}),
    "Chair": (["edge", "corner", "middle"], {BED: 1, KIT: 1, LIV: 1}, True, (0.48, 0.9, 0.5), 18, True, [], "wood", {"receptacle_bias": 0.0}),
    "ArmChair": (["edge", "corner", "middle"], {BED: 1, LIV: 2}, True, (0.85, 0.9, 0.85), 14, True, [], "fabric", {"receptacle_bias": 0.0}),
    "Sofa": (["edge", "middle"], {LIV: 3}, False, (2.0, 0.85, 0.9), 14, True, [], "fabric", {}),
    "CoffeeTable": (["middle"], {LIV: 2}, False, (1.05, 0.45, 0.6), 10, True, [], "wood", {}),
    "DiningTable": (["middle"], {KIT: 2, LIV: 1}, False, (1.45, 0.76, 0.9), 12, True, [], "wood", {}),
    "TVStand": (["edge"], {LIV: 2, BED: 1}, False, (1.35, 0.55, 0.45), 10, True, [], "wood", {}),
    "ShelvingUnit": (["edge", "corner"], {LIV: 2, KIT: 1, BED: 1, BATH: 1}, True, (0.9, 1.8, 0.4), 10, True, [], "wood", {"receptacle_bias": 0.4}),
    "FloorLamp": (["edge", "corner"], {LIV: 2, BED: 2}, True, (0.4, 1.6, 0.4), 10, False, ["toggleable"], "metal", {"emits_light": True}),
    "HousePlant": (["edge", "corner", "middle"], {LIV: 2, BED: 1, KIT: 1, BATH: 1}, True, (0.4, 0.8, 0.4), 12, False, [], "plant", {"object_bias": 0.25}),
    "Fridge": (["corner", "edge"], {KIT: 3}, False, (0.8, 1.8, 0.75), 10, True, ["openable"], "metal", {}),
    "CounterTop": (["corner", "edge"], {KIT: 3}, True, (1.6, 0.95, 0.65), 16, True, [], "stone", {"widths": (0.9, 2.4), "receptacle_bias": 0.2}),
    "Stove": (["edge"], {KIT: 3}, False, (0.76, 0.95, 0.65), 8, True, [], "metal", {}),
    "Sink": (["edge", "corner"], {BATH: 3, KIT: 1}, False, (0.6, 0.85, 0.5), 10, True, [], "ceramic", {}),
    "Toilet": (["corner", "edge"], {BATH: 3}, False, (0.45, 0.8, 0.7), 6, True, [], "ceramic", {}),
    "Bathtub": (["corner", "edge"], {BATH: 2}, False, (1.6, 0.6, 0.75), 6, True, [], "ceramic", {}),
    "GarbageCan": (["edge", "corner"], {BED: 1, BATH: 2, KIT: 2, LIV: 1}, False, (0.35, 0.45, 0.35), 8, False, [], "plastic", {}),
    "LaundryHamper": (["edge", "corner"], {BED: 1, BATH: 1}, False, (0.45, 0.6, 0.45), 5, False, [], "fabric", {}),
    "Safe": (["corner"], {BED: 1}, False, (0.45, 0.5, 0.45), 4, True, ["openable"], "metal", {}),
    "Ottoman": (["middle", "edge"], {LIV: 1, BED: 1}, True, (0.6, 0.45, 0.6), 6, True, [], "fabric", {}),
    "DogBed": (["corner", "edge"], {LIV: 1}, False, (0.8, 0.25, 0.6), 4, False, [], "fabric", {}),
    "Stool": (["middle", "edge"], {KIT: 1}, True, (0.4, 0.65, 0.4), 8, False, [], "wood", {}),
    "Box": (["corner", "edge"], {BED: 1, LIV: 1}, True, (0.5, 0.4, 0.4), 5, False, ["openable"], "cardboard", {}),
    "WashingMachine": (["corner", "edge"], {BATH: 1}, False, (0.6, 0.85, 0.6), 4, False, ["openable"], "metal", {}),
    "Bench": (["middle", "edge"], {LIV: 1, BED: 1}, False, (1.2, 0.45, 0.4), 5, True, [], "wood", {}),
    "VacuumCleaner": (["corner"], {LIV: 1}, False, (0.3, 1.1, 0.3), 3, False, [], "plastic", {}),
    "Plunger": (["corner", "edge"], {BATH: 1}, False, (0.2, 0.5, 0.2), 3, False, [], "plastic", {}),
    "Boots": (["edge"], {BED: 1, LIV: 1}, False, (0.3, 0.3, 0.3), 3, False, [], "leather", {}),
    "Dumbbell": (["edge", "corner"], {BED: 1, LIV: 1}, False, (0.3, 0.15, 0.15), 3, False, [], "metal", {}),
}

# name: (base_bbox, n_instances, material_class, extras)
SURFACE = {
    "Apple": ((0.08, 0.09, 0.08), 6, "apple", {}),
    "Orange": ((0.08, 0.08, 0.08), 3, "orange", {}),
    "Bread": ((0.25, 0.12, 0.13), 4, "bread", {}),
    "Tomato": ((0.08, 0.07, 0.08), 4, "tomato", {}),
    "Potato": ((0.1, 0.07, 0.07), 4, "potato", {}),
    "Lettuce": ((0.18, 0.16, 0.18), 4, "lettuce", {}),
    "Egg": ((0.05, 0.06, 0.05), 3, "egg", {}),
    "Bowl": ((0.18, 0.08, 0.18), 8, "ceramic", {"object_bias": 0.05}),
    "Plate": ((0.25, 0.03, 0.25), 8, "ceramic", {}),
    "Cup": ((0.09, 0.11, 0.09), 6, "glass", {}),
    "Mug": ((0.12, 0.1, 0.09), 8, "ceramic", {}),
    "Pot": ((0.3, 0.18, 0.3), 6, "metal", {"object_bias": 0.1}),
    "Pan": ((0.45, 0.07, 0.28), 6, "metal", {"object_bias": 0.1}),
    "Kettle": ((0.22, 0.24, 0.18), 4, "metal", {}),
    "Knife": ((0.3, 0.03, 0.05), 4, "metal", {}),
    "ButterKnife": ((0.2, 0.02, 0.03), 3, "metal", {}),
    "Fork": ((0.19, 0.02, 0.03), 3, "metal", {}),
    "Spoon": ((0.18, 0.02, 0.04), 3, "metal", {}),
    "Spatula": ((0.32, 0.03, 0.08), 3, "plastic", {}),
    "Ladle": ((0.3, 0.06, 0.09), 3, "metal", {}),
    "SaltShaker": ((0.05, 0.1, 0.05), 3, "glass", {}),
    "PepperShaker": ((0.05, 0.1, 0.05), 3, "glass", {}),
    "DishSponge": ((0.1, 0.04, 0.07), 3, "sponge", {}),
    "SoapBottle": ((0.08, 0.2, 0.08), 5, "plastic", {}),
    "Bottle": ((0.08, 0.28, 0.08), 6, "glass", {"color": True}),
    "WineBottle": ((0.08, 0.32, 0.08), 4, "glass", {}),
    "Vase": ((0.16, 0.3, 0.16), 10, "ceramic", {"color": True}),
    "Statue": ((0.14, 0.3, 0.12), 8, "stone", {"color": True}),
    "Book": ((0.17, 0.04, 0.24), 12, "paper", {}),
    "Laptop": ((0.34, 0.03, 0.24), 6, "plastic", {"states": ["openable"]}),
    "CellPhone": ((0.07, 0.01, 0.15), 5, "plastic", {}),
    "CreditCard": ((0.09, 0.005, 0.055), 3, "plastic", {}),
    "KeyChain": ((0.08, 0.02, 0.05), 3, "metal", {}),
    "Pen": ((0.15, 0.015, 0.015), 3, "plastic", {}),
    "Pencil": ((0.18, 0.01, 0.01), 3, "wood", {}),
    "RemoteControl": ((0.05, 0.025, 0.18), 4, "plastic", {}),
    "Newspaper": ((0.3, 0.02, 0.4), 3, "paper", {}),
    "Watch": ((0.05, 0.02, 0.05), 3, "metal", {}),
    "AlarmClock": ((0.15, 0.12, 0.08), 5, "plastic", {}),
    "DeskLamp": ((0.22, 0.45, 0.22), 6, "metal", {"states": ["toggleable"], "emits_light": True}),
    "Candle": ((0.08, 0.12, 0.08), 4, "wax", {}),
    "TissueBox": ((0.24, 0.1, 0.12), 4, "cardboard", {}),
    "ToiletPaper": ((0.12, 0.11, 0.12), 3, "paper", {}),
    "SprayBottle": ((0.1, 0.25, 0.07), 3, "plastic", {"object_bias": 0.2}),
    "Cloth": ((0.3, 0.02, 0.25), 4, "fabric", {}),
    "ScrubBrush": ((0.12, 0.06, 0.22), 3, "plastic", {}),
    "SoapBar": ((0.09, 0.03, 0.06), 3, "soap", {}),
    "Pillow": ((0.55, 0.15, 0.35), 10, "fabric", {}),
    "TeddyBear": ((0.3, 0.35, 0.25), 4, "fabric", {}),
    "CD": ((0.14, 0.01, 0.13), 3, "plastic", {}),
    "Television": ((1.0, 0.62, 0.12), 12, "plastic", {"widths": (0.7, 1.3)}),
    "Microwave": ((0.5, 0.3, 0.38), 6, "metal", {}),
    "CoffeeMachine": ((0.25, 0.35, 0.3), 6, "metal", {}),
    "Toaster": ((0.28, 0.2, 0.18), 5, "metal", {}),
    "Faucet": ((0.22, 0.28, 0.12), 6, "metal", {}),
    "PaperTowelRoll": ((0.13, 0.26, 0.13), 3, "paper", {}),
    "TennisRacket": ((0.3, 0.04, 0.68), 3, "plastic", {}),
    "Basketball": ((0.24, 0.24, 0.24), 3, "rubber", {"object_bias": 0.2}),
    "BaseballBat": ((0.08, 0.08, 0.84), 3, "wood", {"object_bias": 0.1}),
    "TableTopDecor": ((0.2, 0.18, 0.15), 6, "ceramic", {"color": True}),
    "WateringCan": ((0.3, 0.25, 0.14), 3, "metal", {}),
}

# Structural wall assets: exact (x, y, z) sizes per instance.
STRUCTURE = {
    "Doorway": [(0.8, 2.05, 0.1), (0.9, 2.05, 0.1), (0.95, 2.1, 0.1), (1.0, 2.1, 0.1), (1.75, 2.1, 0.1)],
    "Doorframe": [(0.9, 2.1, 0.1), (1.0, 2.1, 0.1), (1.1, 2.1, 0.1), (1.2, 2.2, 0.1), (1.3, 2.2, 0.1)],
    "Window": [
        (0.6, 0.9, 0.1), (0.8, 1.0, 0.1), (1.0, 1.2, 0.1), (1.2, 1.2, 0.1), (1.5, 1.4, 0.1), (2.0, 1.5, 0.1),
        (0.7, 1.0, 0.1), (0.9, 1.1, 0.1), (1.1, 1.3, 0.1), (1.4, 1.2, 0.1), (1.8, 1.6, 0.1), (0.65, 0.8, 0.1),
    ],
    "Painting": [
        (0.4, 0.5, 0.04), (0.6, 0.45, 0.04), (0.8, 0.6, 0.04), (1.0, 0.7, 0.04), (1.2, 0.8, 0.04), (0.5, 0.7, 0.04),
        (0.45, 0.45, 0.04), (0.7, 0.5, 0.04), (0.9, 0.6, 0.04), (1.4, 0.9, 0.04), (0.55, 0.4, 0.04), (0.75, 1.0, 0.04),
        (0.35, 0.35, 0.04), (1.1, 0.75, 0.04),
    ],
}

# receptacle type -> [(object type, object_count, receptacle_count)]
SPAWN = {
    "CounterTop": [("Apple", 3, 10), ("Bread", 3, 10), ("Tomato", 5, 20), ("Potato", 2, 10), ("Lettuce", 2, 10),
                   ("Egg", 1, 10), ("Bowl", 3, 10), ("Plate", 7, 20), ("Cup", 3, 10), ("Mug", 7, 20), ("Pot", 5, 20),
                   ("Pan", 5, 20), ("Kettle", 2, 10), ("Knife", 3, 10), ("ButterKnife", 5, 20), ("Fork", 5, 20),
                   ("Spoon", 5, 20), ("Spatula", 5, 20), ("Ladle", 3, 20), ("SaltShaker", 9, 20),
                   ("PepperShaker", 9, 20), ("DishSponge", 3, 10), ("SoapBottle", 7, 20), ("Bottle", 2, 10),
                   ("WineBottle", 2, 10), ("Vase", 1, 10), ("Microwave", 5, 10), ("CoffeeMachine", 6, 10),
                   ("Toaster", 5, 10), ("PaperTowelRoll", 3, 10), ("HousePlant", 1, 20), ("SprayBottle", 1, 10),
                   ("CellPhone", 1, 20), ("CreditCard", 1, 20), ("Orange", 1, 10), ("Cloth", 1, 10)],
    "DiningTable": [("Apple", 2, 10), ("Bread", 2, 10), ("Bowl", 4, 10), ("Plate", 5, 10), ("Cup", 4, 10),
                    ("Mug", 3, 10), ("Fork", 3, 10), ("Knife", 5, 20), ("Spoon", 3, 10), ("SaltShaker", 3, 10),
                    ("PepperShaker", 3, 10), ("Vase", 3, 10), ("Statue", 1, 10), ("Book", 2, 10), ("Laptop", 3, 20),
                    ("HousePlant", 2, 10), ("Candle", 3, 20), ("Newspaper", 3, 20), ("KeyChain", 1, 10),
                    ("CellPhone", 1, 10), ("Bottle", 3, 20), ("WineBottle", 2, 10), ("TableTopDecor", 2, 10),
                    ("Orange", 1, 10), ("Lettuce", 1, 20)],
    "CoffeeTable": [("Book", 4, 10), ("Vase", 3, 10), ("Statue", 5, 20), ("RemoteControl", 5, 10), ("Laptop", 5, 20),
                    ("Newspaper", 3, 10), ("KeyChain", 2, 10), ("CellPhone", 2, 10), ("Candle", 2, 10),
                    ("HousePlant", 2, 10), ("TableTopDecor", 3, 10), ("Mug", 1, 10), ("Bowl", 1, 10),
                    ("CreditCard", 3, 20), ("TissueBox", 3, 20), ("Watch", 1, 10)],
    "SideTable": [("AlarmClock", 4, 10), ("DeskLamp", 5, 10), ("Book", 3, 10), ("CellPhone", 5, 20), ("KeyChain", 3, 20),
                  ("Pen", 3, 20), ("Pencil", 1, 10), ("CD", 1, 10), ("Vase", 2, 10), ("Statue", 1, 10),
                  ("Watch", 3, 20), ("CreditCard", 1, 10), ("TissueBox", 2, 10), ("HousePlant", 1, 10),
                  ("Candle", 1, 10), ("RemoteControl", 1, 10), ("Mug", 1, 20)],
    "Dresser": [("AlarmClock", 3, 10), ("Book", 3, 10), ("Vase", 2, 10), ("Statue", 2, 10), ("Box", 3, 20),
                ("CellPhone", 2, 10), ("KeyChain", 2, 10), ("Watch", 2, 10), ("CD", 3, 20), ("Pen", 1, 10),
                ("Pencil", 1, 10), ("TissueBox", 2, 10), ("DeskLamp", 2, 10), ("TeddyBear", 1, 10),
                ("HousePlant", 1, 10), ("Candle", 1, 10), ("CreditCard", 1, 10)],
    "Desk": [("Laptop", 5, 10), ("Book", 4, 10), ("Pen", 4, 10), ("Pencil", 7, 20), ("CellPhone", 3, 10),
             ("DeskLamp", 5, 10), ("AlarmClock", 2, 10), ("CD", 2, 10), ("Mug", 2, 10), ("KeyChain", 3, 20),
             ("CreditCard", 3, 20), ("Vase", 1, 10), ("Statue", 1, 10), ("HousePlant", 1, 10),
             ("Newspaper", 1, 10), ("Watch", 1, 10), ("Bottle", 1, 10)],
    "ShelvingUnit": [("Book", 6, 10), ("Vase", 4, 10), ("Statue", 4, 10), ("Box", 2, 10), ("CD", 2, 10),
                     ("HousePlant", 2, 10), ("Candle", 2, 10), ("TeddyBear", 1, 10), ("Basketball", 1, 20),
                     ("AlarmClock", 1, 10), ("TableTopDecor", 3, 10), ("WateringCan", 1, 10), ("Bottle", 3, 20),
                     ("Cloth", 1, 10), ("SprayBottle", 1, 10), ("TissueBox", 3, 20), ("ToiletPaper", 1, 10)],
    "TVStand": [("Book", 2, 10), ("Vase", 2, 10), ("Statue", 2, 10), ("RemoteControl", 4, 10), ("CD", 2, 10),
                ("HousePlant", 3, 20), ("Box", 1, 10), ("DeskLamp", 1, 10), ("KeyChain", 1, 10), ("Candle", 1, 10),
                ("TableTopDecor", 2, 10)],
    "Bed": [("Pillow", 4, 10), ("Laptop", 2, 10), ("Book", 2, 10), ("CellPhone", 2, 10), ("TeddyBear", 3, 20),
            ("RemoteControl", 1, 20), ("Basketball", 1, 20), ("Cloth", 1, 10), ("BaseballBat", 1, 20),
            ("TennisRacket", 1, 20)],
    "Sofa": [("Pillow", 6, 10), ("RemoteControl", 2, 10), ("Laptop", 1, 10), ("Book", 1, 10), ("CellPhone", 1, 10),
             ("Newspaper", 1, 10), ("KeyChain", 1, 20), ("CreditCard", 1, 20), ("Box", 1, 20)],
    "ArmChair": [("Pillow", 4, 10), ("RemoteControl", 1, 10), ("Book", 1, 10), ("Laptop", 1, 20),
                 ("Newspaper", 1, 10), ("CellPhone", 1, 20), ("KeyChain", 1, 20)],
    "Chair": [("Book", 1, 20), ("Pillow", 1, 20), ("Laptop", 1, 40), ("Cloth", 1, 20)],
    "Ottoman": [("Book", 1, 10), ("Laptop", 1, 20), ("RemoteControl", 1, 10), ("Newspaper", 1, 10)],
    "Bench": [("Book", 1, 10), ("Box", 1, 10), ("Pillow", 1, 10)],
    "Fridge": [("Bowl", 1, 20), ("Box", 1, 10), ("Vase", 1, 20), ("Pot", 1, 20)],
    "Stove": [("Pot", 5, 10), ("Pan", 5, 10), ("Kettle", 4, 10)],
    "Sink": [("SoapBottle", 5, 10), ("SoapBar", 4, 10), ("ScrubBrush", 1, 10), ("Cloth", 2, 10), ("SprayBottle", 1, 10),
             ("DishSponge", 2, 10), ("Cup", 1, 10), ("Mug", 1, 20), ("ToiletPaper", 1, 10)],
    "Toilet": [("ToiletPaper", 5, 10), ("SoapBottle", 3, 10), ("SprayBottle", 2, 10), ("Candle", 1, 10),
               ("TissueBox", 2, 10), ("SoapBar", 1, 10), ("Cloth", 1, 10)],
    "Bathtub": [("SoapBottle", 4, 10), ("SoapBar", 4, 10), ("Cloth", 3, 10), ("ScrubBrush", 2, 10),
                ("SprayBottle", 1, 10)],
    "Safe": [("CreditCard", 3, 10), ("KeyChain", 3, 10), ("Watch", 3, 10), ("CellPhone", 2, 10)],
}

MATERIAL_CLASSES = {
    "wood": ["wood_oak", "wood_walnut", "wood_pine", "wood_cherry", "wood_ash", "wood_maple", "wood_birch", "wood_teak"],
    "fabric": ["fabric_linen", "fabric_velvet", "fabric_wool", "fabric_denim", "fabric_tweed", "fabric_cotton"],
    "metal": ["metal_steel", "metal_brushed", "metal_chrome", "metal_copper", "metal_black"],
    "ceramic": ["ceramic_white", "ceramic_glazed", "ceramic_speckled", "ceramic_terracotta", "ceramic_blue"],
    "glass": ["glass_clear", "glass_green", "glass_amber", "glass_frosted"],
    "plastic": ["plastic_white", "plastic_black", "plastic_grey", "plastic_red", "plastic_blue"],
    "stone": ["stone_granite", "stone_marble", "stone_slate", "stone_quartz"],
    "paper": ["paper_white", "paper_cream", "paper_newsprint"],
    "plant": ["plant_fern", "plant_ficus", "plant_snake"],
    "leather": ["leather_brown", "leather_black"],
    "cardboard": ["cardboard_plain", "cardboard_printed"],
    "rubber": ["rubber_orange", "rubber_brown"],
    "sponge": ["sponge_yellow", "sponge_green"],
    "soap": ["soap_white", "soap_pink"],
    "wax": ["wax_white", "wax_red"],
    "apple": ["apple_red", "apple_green", "apple_yellow"],
    "orange": ["orange_navel", "orange_blood"],
    "bread": ["bread_white", "bread_rye"],
    "tomato": ["tomato_red", "tomato_yellow"],
    "potato": ["potato_russet", "potato_red"],
    "lettuce": ["lettuce_green", "lettuce_red"],
    "egg": ["egg_white", "egg_brown"],
}

PAINT_COLORS = [
    (245, 245, 240), (236, 231, 219), (224, 218, 203), (250, 248, 239), (233, 228, 214), (214, 208, 192),
    (199, 194, 180), (183, 180, 171), (220, 222, 218), (205, 210, 207), (190, 197, 196), (170, 178, 178),
    (226, 217, 200), (211, 199, 180), (196, 183, 160), (236, 224, 205), (241, 232, 214), (229, 211, 190),
    (206, 214, 200), (189, 201, 184), (174, 186, 170), (210, 220, 226), (190, 205, 214), (168, 186, 199),
    (148, 166, 181), (226, 214, 214), (214, 198, 196), (199, 181, 178), (237, 226, 199), (232, 215, 178),
    (218, 200, 160), (160, 160, 155), (130, 134, 132), (108, 114, 116), (84, 92, 98), (66, 74, 82),
    (120, 132, 120), (98, 112, 104), (150, 120, 100), (250, 250, 250),
]

TEXTURE_FAMILIES = ["drywall", "brick", "tile", "plaster", "stucco", "wallpaper", "wood_panel", "concrete", "stone"]
FLOOR_FAMILIES = ["wood_plank", "wood_parquet", "laminate", "tile", "stone", "carpet", "vinyl", "concrete"]


def r3(v):
    return round(v, 3)


def split_for(index, count):
    if count <= 5:
        return "any"
    # 4 of every 6 to train, 1 to val, 1 to test
    return ["train", "train", "val", "train", "train", "test"][index % 6]


def jitter_bbox(base, i, n, widths=None):
    x, y, z = base
    if widths is not None:
        lo, hi = widths
        x = lo + (hi - lo) * (i / max(1, n - 1))
    else:
        x *= RNG.uniform(0.85, 1.18)
    y *= RNG.uniform(0.88, 1.15)
    z *= RNG.uniform(0.88, 1.15)
    return [r3(x), r3(y), r3(z)]


def build_catalog():
    types = []
    instances = []

    for name, (placements, weights, dup, base, n, recep, states, mclass, extra) in FLOOR.items():
        types.append({
            "name": name,
            "placeable_on_floor": True,
            "placements": placements,
            "room_weights": weights,
            "allow_duplicates_in_room": dup,
            "material_class": mclass,
            "color_randomizable": False,
            "states": states,
            "object_bias": extra.get("object_bias", 0.0),
            "receptacle_bias": extra.get("receptacle_bias", 0.2),
            "emits_light": extra.get("emits_light", False),
        })
        for i in range(n):
            instances.append({
                "id": f"{name}_{i + 1}",
                "asset_type": name,
                "bbox": jitter_bbox(base, i, n, extra.get("widths")),
                "split": split_for(i, n),
                "is_receptacle": recep,
            })

    for name, (base, n, mclass, extra) in SURFACE.items():
        types.append({
            "name": name,
            "placeable_on_floor": False,
            "placements": [],
            "room_weights": {},
            "allow_duplicates_in_room": True,
            "material_class": mclass,
            "color_randomizable": extra.get("color", False),
            "states": extra.get("states", []),
            "object_bias": extra.get("object_bias", 0.0),
            "receptacle_bias": 0.2,
            "emits_light": extra.get("emits_light", False),
        })
        for i in range(n):
            inst = {
                "id": f"{name}_{i + 1}",
                "asset_type": name,
                "bbox": jitter_bbox(base, i, n, extra.get("widths")),
                "split": split_for(i, n),
                "is_receptacle": False,
            }
            if name == "Television":
                inst["wall_mountable"] = i % 3 != 1
            instances.append(inst)

    for name, sizes in STRUCTURE.items():
        types.append({
            "name": name,
            "placeable_on_floor": False,
            "placements": [],
            "room_weights": {},
            "allow_duplicates_in_room": True,
            "material_class": None,
            "color_randomizable": False,
            "states": [],
            "object_bias": 0.0,
            "receptacle_bias": 0.2,
            "emits_light": False,
        })
        for i, size in enumerate(sizes):
            instances.append({
                "id": f"{name}_{i + 1}",
                "asset_type": name,
                "bbox": [r3(v) for v in size],
                "split": split_for(i, len(sizes)),
                "is_receptacle": False,
            })

    # every split must be able to furnish every type
    for t in types:
        members = [i for i in instances if i["asset_type"] == t["name"]]
        for split in ("train", "val", "test"):
            assert any(m["split"] in (split, "any") for m in members), (t["name"], split)
    for split in ("train", "val", "test"):
        assert any(i["asset_type"] == "Television" and i.get("wall_mountable") and i["split"] in (split, "any")
                   for i in instances), split

    spawn = []
    for recep, rows in SPAWN.items():
        for obj, count, total in rows:
            spawn.append({
                "receptacle_type": recep,
                "object_type": obj,
                "object_count": count,
                "receptacle_count": total,
                "p_spawn": round(min(1.0, count / total), 6),
            })
    spawn.sort(key=lambda e: (e["receptacle_type"], e["object_type"]))

    wall_textures = [f"wall_{TEXTURE_FAMILIES[i % len(TEXTURE_FAMILIES)]}_{i // len(TEXTURE_FAMILIES) + 1:02d}"
                     for i in range(122)]
    floor_materials = [f"floor_{FLOOR_FAMILIES[i % len(FLOOR_FAMILIES)]}_{i // len(FLOOR_FAMILIES) + 1:02d}"
                       for i in range(55)]
    materials = {
        "solid_colors": [list(c) for c in PAINT_COLORS],
        "wall_textures": wall_textures,
        "floor_materials": floor_materials,
        "skyboxes": {
            "midday": [f"sky_midday_{i + 1:02d}" for i in range(16)],
            "golden_hour": [f"sky_golden_hour_{i + 1:02d}" for i in range(5)],
            "blue_hour": ["sky_blue_hour_01"],
        },
        "object_materials": MATERIAL_CLASSES,
    }
    assert len(materials["solid_colors"]) == 40

    return {
        "schema_version": SCHEMA_VERSION,
        "asset_types": sorted(types, key=lambda t: t["name"]),
        "asset_instances": sorted(instances, key=lambda i: i["id"]),
        "materials": materials,
        "spawn_table": spawn,
        "semantic_asset_groups": build_sags(),
    }


def anchor(v, h):
    return {"v": v, "h": h}


def edge(parent, child, a, p, offset=(0.0, 0.0), rotation=0, allow_overlap=False, on_top=False):
    return {
        "parent": parent,
        "child": child,
        "anchor": anchor(*a),
        "pivot": anchor(*p),
        "offset": list(offset),
        "rotation": rotation,
        "allow_overlap": allow_overlap,
        "on_top": on_top,
    }


def sampler(sid, asset_type):
    return {"id": sid, "asset_type": asset_type}


def sag(gid, placements, weights, samplers, edges, links=()):
    return {
        "id": gid,
        "placements": placements,
        "room_weights": weights,
        "samplers": samplers,
        "edges": edges,
        "links": [list(l) for l in links],
    }


def build_sags():
    tuck = 0.18
    chairs4 = [
        edge("table", "chair_n", ("top", "center"), ("bottom", "center"), (0, -tuck), 0, True),
        edge("table", "chair_s", ("bottom", "center"), ("top", "center"), (0, tuck), 180, True),
        edge("table", "chair_e", ("center", "right"), ("center", "left"), (-tuck, 0), 270, True),
        edge("table", "chair_w", ("center", "left"), ("center", "right"), (tuck, 0), 90, True),
    ]
    pillows = [
        edge("bed", "pillow_l", ("top", "center"), ("top", "right"), (-0.03, -0.08), 0, on_top=True),
        edge("bed", "pillow_r", ("top", "center"), ("top", "left"), (0.03, -0.08), 0, on_top=True),
    ]
    tv_on_stand = edge("stand", "tv", ("center", "center"), ("center", "center"), (0, 0), 0, on_top=True)
    sofa_facing_tv = edge("stand", "sofa", ("bottom", "center"), ("top", "center"), (0, -1.5), 180)
    return [
        sag("dining_table_4_chairs", ["middle"], {KIT: 2, LIV: 1},
            [sampler("table", "DiningTable")] + [sampler(f"chair_{d}", "Chair") for d in "nsew"],
            chairs4, [("chair_n", "chair_s", "chair_e", "chair_w")]),
        sag("dining_table_2_chairs", ["middle"], {KIT: 1, LIV: 1},
            [sampler("table", "DiningTable"), sampler("chair_n", "Chair"), sampler("chair_s", "Chair")],
            chairs4[:2], [("chair_n", "chair_s")]),
        sag("bed_2_pillows", ["edge"], {BED: 3},
            [sampler("bed", "Bed"), sampler("pillow_l", "Pillow"), sampler("pillow_r", "Pillow")],
            pillows, [("pillow_l", "pillow_r")]),
        sag("bed_pillows_side_tables", ["edge"], {BED: 2},
            [sampler("bed", "Bed"), sampler("pillow_l", "Pillow"), sampler("pillow_r", "Pillow"),
             sampler("table_l", "SideTable"), sampler("table_r", "SideTable")],
            pillows + [
                edge("bed", "table_l", ("top", "left"), ("top", "right"), (-0.05, 0)),
                edge("bed", "table_r", ("top", "right"), ("top", "left"), (0.05, 0)),
            ], [("pillow_l", "pillow_r"), ("table_l", "table_r")]),
        sag("tv_stand_sofa", ["edge"], {LIV: 3},
            [sampler("stand", "TVStand"), sampler("tv", "Television"), sampler("sofa", "Sofa")],
            [tv_on_stand, sofa_facing_tv]),
        sag("tv_stand_sofa_armchair", ["edge"], {LIV: 2},
            [sampler("stand", "TVStand"), sampler("tv", "Television"), sampler("sofa", "Sofa"),
             sampler("armchair", "ArmChair")],
            [tv_on_stand, sofa_facing_tv,
             edge("sofa", "armchair", ("center", "left"), ("center", "right"), (-0.35, 0.3), 90)]),
        sag("tv_stand_tv", ["edge"], {LIV: 2, BED: 1},
            [sampler("stand", "TVStand"), sampler("tv", "Television")], [tv_on_stand]),
        sag("sink_faucet", ["edge"], {BATH: 3, KIT: 1},
            [sampler("sink", "Sink"), sampler("faucet", "Faucet")],
            [edge("sink", "faucet", ("top", "center"), ("top", "center"), (0, -0.03), 0, on_top=True)]),
        sag("desk_chair", ["edge"], {BED: 2, LIV: 1},
            [sampler("desk", "Desk"), sampler("chair", "Chair")],
            [edge("desk", "chair", ("bottom", "center"), ("top", "center"), (0, 0.2), 180, True)]),
        sag("desk_chair_lamp", ["edge"], {BED: 1, LIV: 1},
            [sampler("desk", "Desk"), sampler("chair", "Chair"), sampler("lamp", "DeskLamp")],
            [edge("desk", "chair", ("bottom", "center"), ("top", "center"), (0, 0.2), 180, True),
             edge("desk", "lamp", ("top", "right"), ("top", "right"), (-0.05, -0.05), 0, on_top=True)]),
        sag("armchair_floor_lamp", ["edge", "corner"], {LIV: 2, BED: 1},
            [sampler("armchair", "ArmChair"), sampler("lamp", "FloorLamp")],
            [edge("armchair", "lamp", ("top", "right"), ("top", "left"), (0.05, 0))]),
        sag("armchair_plant", ["edge", "corner"], {LIV: 1, BED: 1},
            [sampler("armchair", "ArmChair"), sampler("plant", "HousePlant")],
            [edge("armchair", "plant", ("top", "left"), ("top", "right"), (-0.05, 0))]),
        sag("sofa_coffee_table", ["edge", "middle"], {LIV: 2},
            [sampler("sofa", "Sofa"), sampler("table", "CoffeeTable")],
            [edge("sofa", "table", ("bottom", "center"), ("top", "center"), (0, -0.45), 0)]),
        sag("sofa_side_tables", ["edge"], {LIV: 2},
            [sampler("sofa", "Sofa"), sampler("table_l", "SideTable"), sampler("table_r", "SideTable")],
            [edge("sofa", "table_l", ("top", "left"), ("top", "right"), (-0.05, 0)),
             edge("sofa", "table_r", ("top", "right"), ("top", "left"), (0.05, 0))],
            [("table_l", "table_r")]),
        sag("coffee_table_armchairs", ["middle"], {LIV: 1},
            [sampler("table", "CoffeeTable"), sampler("chair_w", "ArmChair"), sampler("chair_e", "ArmChair")],
            [edge("table", "chair_w", ("center", "left"), ("center", "right"), (-0.4, 0), 90),
             edge("table", "chair_e", ("center", "right"), ("center", "left"), (0.4, 0), 270)],
            [("chair_w", "chair_e")]),
        sag("counter_stools", ["edge"], {KIT: 1},
            [sampler("counter", "CounterTop"), sampler("stool_l", "Stool"), sampler("stool_r", "Stool")],
            [edge("counter", "stool_l", ("bottom", "left"), ("top", "left"), (0.1, 0.15), 180, True),
             edge("counter", "stool_r", ("bottom", "right"), ("top", "right"), (-0.1, 0.15), 180, True)],
            [("stool_l", "stool_r")]),
        sag("dresser_tv", ["edge"], {BED: 1},
            [sampler("dresser", "Dresser"), sampler("tv", "Television")],
            [edge("dresser", "tv", ("center", "center"), ("center", "center"), (0, 0), 0, on_top=True)]),
        sag("toilet_garbage_can", ["edge", "corner"], {BATH: 2},
            [sampler("toilet", "Toilet"), sampler("bin", "GarbageCan")],
            [edge("toilet", "bin", ("top", "right"), ("top", "left"), (0.1, 0))]),
    ]


def leaf(room_type, weight=1.0, avoid=False):
    node = {"kind": "room", "roomType": room_type, "growthWeight": weight}
    if avoid:
        node["avoidDoorToParent"] = True
    return node


def zone(children, weight=1.0):
    return {"kind": "zone", "growthWeight": weight, "children": children}


def spec(sid, weight, root):
    return {"id": sid, "samplingWeight": weight, "root": root}


def bed_bath(bed_w=3.0, bath_w=1.5, weight=1.0):
    return zone([leaf(BED, bed_w), leaf(BATH, bath_w, avoid=True)], weight)


def kitchen_living(weight=1.0):
    return zone([leaf(KIT, 1.0), leaf(LIV, 1.6)], weight)


def build_room_specs():
    return [
        spec("bathroom", 1.0, leaf(BATH)),
        spec("studio", 2.0, leaf(LIV)),
        spec("kitchen", 1.0, leaf(KIT)),
        spec("bedroom", 2.0, leaf(BED)),
        spec("bedroom-bathroom", 2.0, zone([leaf(BED, 3.0), leaf(BATH, 1.5)])),
        spec("kitchen-living-room", 3.0, zone([leaf(KIT, 1.0), leaf(LIV, 1.6)])),
        spec("3-room-suite", 3.0, zone([leaf(LIV, 2.0), bed_bath()])),
        spec("3-room-open-plan", 2.0, zone([kitchen_living(2.0), leaf(BED, 1.0)])),
        spec("4-room", 6.0, zone([bed_bath(), kitchen_living()])),
        spec("5-room", 4.0, zone([kitchen_living(1.5), bed_bath(), leaf(BED, 0.8)])),
        spec("6-room", 3.0, zone([kitchen_living(1.5), bed_bath(), bed_bath()])),
        spec("7-room", 2.0, zone([kitchen_living(1.5), bed_bath(), bed_bath(), leaf(LIV, 0.8)])),
        spec("7-room-guest", 1.5, zone([zone([leaf(KIT, 1.0), leaf(LIV, 1.6), leaf(BATH, 0.6)], 1.8),
                                        bed_bath(), bed_bath()])),
        spec("8-room", 1.5, zone([kitchen_living(1.8), bed_bath(), bed_bath(), bed_bath()])),
        spec("9-room", 1.0, zone([kitchen_living(2.0), bed_bath(), bed_bath(), bed_bath(), leaf(BED, 0.8)])),
        spec("10-room", 1.0, zone([zone([leaf(KIT, 1.0), leaf(LIV, 1.6), leaf(LIV, 1.0)], 2.2),
                                   bed_bath(), bed_bath(), bed_bath(), leaf(BED, 0.8)])),
    ]


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data"
    out.mkdir(parents=True, exist_ok=True)
    catalog = build_catalog()
    (out / "catalog.json").write_text(json.dumps(catalog, indent=1, sort_keys=True) + "\n")
    specs = build_room_specs()
    (out / "room_specs.json").write_text(json.dumps(specs, indent=1) + "\n")
    print(f"{len(catalog['asset_types'])} types, {len(catalog['asset_instances'])} instances, "
          f"{len(catalog['semantic_asset_groups'])} groups, {len(specs)} room specs")


if __name__ == "__main__":
    main()
