#![allow(dead_code)]

pub mod checks;
pub mod oracle;

use std::path::PathBuf;

use prochouse::catalog::{load_catalog, Catalog};
use prochouse::connectivity::OpeningKind;
use prochouse::geom::{Rect, Vec2, Vec3};
use prochouse::house::{room_id, Door, House, Object, OpenWall, PlacementKind, Room, Wall};
use prochouse::pipeline::{generate_dataset, generate_house, DatasetHouse, PipelineParams};
use prochouse::roomspec::{load_room_specs, RoomSpec, RoomType};

pub fn data(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(file)
}

pub fn registry() -> Vec<RoomSpec> {
    load_room_specs(data("room_specs.json")).expect("shipped registry loads")
}

pub fn catalog() -> Catalog {
    load_catalog(data("catalog.json")).expect("shipped catalog loads")
}

pub fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

pub fn dataset(root: u64, count: u64) -> Vec<DatasetHouse> {
    generate_dataset(root, count, jobs(), &registry(), &catalog(), &PipelineParams::default())
        .expect("dataset generates")
}

/// A generated house stripped to metadata and dressing; fixtures fill in
/// their own geometry.
pub fn blank_house() -> House {
    let specs = registry();
    let spec = specs.iter().find(|s| s.id == "bathroom").expect("registry has a lone bathroom");
    let mut h = generate_house(1, spec, &catalog(), &PipelineParams::default()).expect("bathroom generates");
    h.rooms.clear();
    h.walls.clear();
    h.doors.clear();
    h.open_walls.clear();
    h.windows.clear();
    h.objects.clear();
    h.floor_placements.clear();
    h.procedural_parameters.lights.clear();
    h
}

pub fn rect_polygon(r: &Rect) -> Vec<Vec2> {
    vec![r.min, Vec2::new(r.max.x, r.min.z), r.max, Vec2::new(r.min.x, r.max.z)]
}

/// Rectangular rooms with one wall per edge; edges shared with another
/// room (exactly reversed) name it as the neighbor.
pub fn house_of_rects(rooms: &[(RoomType, Rect)]) -> House {
    let mut h = blank_house();
    let polys: Vec<Vec<Vec2>> = rooms.iter().map(|(_, r)| rect_polygon(r)).collect();
    for (i, (t, _)) in rooms.iter().enumerate() {
        h.rooms.push(Room {
            id: room_id(i),
            room_type: *t,
            floor_polygon: polys[i].clone(),
            floor_material: "floor_a".into(),
            wall_material: h.procedural_parameters.ceiling_material.clone(),
        });
        for k in 0..4 {
            let (a, b) = (polys[i][k], polys[i][(k + 1) % 4]);
            let neighbor = polys.iter().enumerate().find(|(j, p)| {
                *j != i && (0..4).any(|m| p[m].approx_eq(b) && p[(m + 1) % 4].approx_eq(a))
            });
            h.walls.push(Wall {
                id: format!("{}|wall|{k}", room_id(i)),
                room_id: room_id(i),
                neighbor_id: neighbor.map(|(j, _)| room_id(j)),
                from: a,
                to: b,
            });
        }
    }
    h
}

pub fn add_door(h: &mut House, room: usize, wall: usize, offset: f64, width: f64) {
    let w = h.walls.iter().find(|w| w.id == format!("{}|wall|{wall}", room_id(room))).expect("wall exists").clone();
    let n = h.doors.len();
    h.doors.push(Door {
        id: format!("door|{n}"),
        kind: OpeningKind::Doorway,
        asset_id: Some("Doorway_1".into()),
        wall_id: w.id.clone(),
        room_id: w.room_id.clone(),
        neighbor_id: w.neighbor_id.clone(),
        offset,
        width,
        height: 2.1,
        open_into: Some(w.room_id.clone()),
        passable: w.neighbor_id.is_some(),
    });
}

pub fn add_open_wall(h: &mut House, room: usize, wall: usize) {
    let w = h.walls.iter().find(|w| w.id == format!("{}|wall|{wall}", room_id(room))).expect("wall exists").clone();
    let n = h.open_walls.len();
    h.open_walls.push(OpenWall {
        id: format!("openwall|{n}"),
        wall_id: w.id.clone(),
        room_id: w.room_id.clone(),
        neighbor_id: w.neighbor_id.clone().expect("open walls join two rooms"),
        offset: 0.0,
        width: w.length(),
    });
}

/// A floor object with its footprint centered at `c`.
pub fn floor_object(id: &str, asset_type: &str, room: usize, c: Vec2, size: [f64; 3]) -> Object {
    Object {
        id: id.into(),
        asset_id: format!("{asset_type}_1"),
        asset_type: asset_type.into(),
        room_id: room_id(room),
        position: Vec3::new(c.x, size[1] / 2.0, c.z),
        rotation: 0,
        size: Vec3::new(size[0], size[1], size[2]),
        placement_kind: PlacementKind::Floor,
        placement_id: None,
        group_id: None,
        wall_id: None,
        wall_offset: None,
        kinematic: true,
        states: Default::default(),
        color: None,
        material: None,
        children: vec![],
    }
}
