//! The emitted house scene and its canonical JSON form.
//!
//! Canonical means: keys sorted, every float rounded to 6 decimals, pretty
//! printed with a trailing newline. `parse_json(emit_json(h)) == h` for any
//! house that has been through [`canonicalize`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::catalog::{Placement, Split, TimeOfDay};
use crate::connectivity::OpeningKind;
use crate::dressing::{DirectionalLight, PointLight, SurfaceMaterial};
use crate::error::{Error, Result};
use crate::geom::{rotated_extents, Aabb, Rect, Vec2, Vec3};
use crate::roomspec::RoomType;

pub const SCHEMA_VERSION: u32 = 1;
pub const GENERATOR_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const DECIMALS: i32 = 6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Metadata {
    pub seed: u64,
    pub room_spec_id: String,
    pub split: Split,
    pub schema_version: u32,
    pub generator_version: String,
    /// Resamples needed before this house validated.
    pub retries: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Room {
    pub id: String,
    pub room_type: RoomType,
    /// Counter-clockwise, meters.
    pub floor_polygon: Vec<Vec2>,
    pub floor_material: String,
    pub wall_material: SurfaceMaterial,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Wall {
    pub id: String,
    pub room_id: String,
    /// Room on the other side; absent for exterior walls.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neighbor_id: Option<String>,
    /// The room is on the left walking from `from` to `to`.
    pub from: Vec2,
    pub to: Vec2,
}

impl Wall {
    pub fn length(&self) -> f64 {
        self.from.dist(self.to)
    }

    pub fn direction(&self) -> Vec2 {
        self.to.sub(self.from).scale(1.0 / self.length())
    }

    pub fn inward_normal(&self) -> Vec2 {
        self.direction().left_normal()
    }

    pub fn point_at(&self, t: f64) -> Vec2 {
        self.from.add(self.direction().scale(t))
    }

    /// Position of `p` along the wall, from `from`.
    pub fn project(&self, p: Vec2) -> f64 {
        p.sub(self.from).dot(self.direction())
    }

    /// Perpendicular distance of `p` from the wall's line.
    pub fn line_distance(&self, p: Vec2) -> f64 {
        p.sub(self.from).dot(self.inward_normal()).abs()
    }
}

/// An opening between two rooms or to the outside.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Door {
    pub id: String,
    pub kind: OpeningKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub asset_id: Option<String>,
    pub wall_id: String,
    pub room_id: String,
    /// Absent for the exterior door.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neighbor_id: Option<String>,
    pub offset: f64,
    pub width: f64,
    pub height: f64,
    /// Room the leaf swings into, for doorways.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub open_into: Option<String>,
    /// Whether agents can pass (the exterior door is permanently closed).
    pub passable: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct OpenWall {
    pub id: String,
    pub wall_id: String,
    pub room_id: String,
    pub neighbor_id: String,
    pub offset: f64,
    pub width: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Window {
    pub id: String,
    pub asset_id: String,
    pub room_id: String,
    pub wall_id: String,
    pub wall_offset: f64,
    pub size: Vec3,
    pub position: Vec3,
    pub rotation: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum PlacementKind {
    Floor,
    Wall,
    Surface,
    SagMember,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Object {
    pub id: String,
    pub asset_id: String,
    pub asset_type: String,
    pub room_id: String,
    /// Center of the bounding box.
    pub position: Vec3,
    /// Yaw in degrees; 0 faces +z.
    pub rotation: i32,
    /// Unrotated bounding box extents (x width, y height, z depth).
    pub size: Vec3,
    pub placement_kind: PlacementKind,
    /// Floor placement this object belongs to.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub placement_id: Option<String>,
    /// Semantic asset group definition, for group members.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_offset: Option<f64>,
    pub kinematic: bool,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub states: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<[u8; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub material: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<Object>,
}

impl Object {
    pub fn footprint(&self) -> Rect {
        let (w, d) = rotated_extents(self.size.x, self.size.z, self.rotation);
        Rect::from_center(self.position.xz(), w, d)
    }

    pub fn bottom(&self) -> f64 {
        self.position.y - self.size.y / 2.0
    }

    pub fn top(&self) -> f64 {
        self.position.y + self.size.y / 2.0
    }

    pub fn aabb(&self) -> Aabb {
        Aabb { footprint: self.footprint(), y0: self.bottom(), y1: self.top() }
    }

    /// This object and all descendants, depth first.
    pub fn walk(&self) -> Vec<&Object> {
        let mut out = vec![self];
        for c in &self.children {
            out.extend(c.walk());
        }
        out
    }

    pub fn walk_mut(&mut self, f: &mut dyn FnMut(&mut Object)) {
        f(self);
        for c in &mut self.children {
            c.walk_mut(f);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct FloorPlacement {
    pub id: String,
    pub room_id: String,
    pub mode: Placement,
    pub rotation: i32,
    /// Bounding box of the placed object or group.
    pub footprint: Rect,
    /// Footprint plus navigation margin; these are pairwise disjoint.
    pub padded_footprint: Rect,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_id: Option<String>,
    pub object_ids: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ProceduralParameters {
    pub ceiling_height: f64,
    pub ceiling_material: SurfaceMaterial,
    pub wall_same: bool,
    pub floor_same: bool,
    pub skybox_id: String,
    pub time_of_day: TimeOfDay,
    pub directional_light: DirectionalLight,
    pub lights: Vec<PointLight>,
    pub house_bias: f64,
    pub material_randomization: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct House {
    pub metadata: Metadata,
    pub rooms: Vec<Room>,
    pub walls: Vec<Wall>,
    pub doors: Vec<Door>,
    pub open_walls: Vec<OpenWall>,
    pub windows: Vec<Window>,
    pub objects: Vec<Object>,
    pub floor_placements: Vec<FloorPlacement>,
    pub procedural_parameters: ProceduralParameters,
}

impl House {
    pub fn room(&self, id: &str) -> Option<&Room> {
        self.rooms.iter().find(|r| r.id == id)
    }

    pub fn room_index(&self, id: &str) -> Option<usize> {
        self.rooms.iter().position(|r| r.id == id)
    }

    pub fn wall(&self, id: &str) -> Option<&Wall> {
        self.walls.iter().find(|w| w.id == id)
    }

    /// Every object including nested children.
    pub fn all_objects(&self) -> Vec<&Object> {
        self.objects.iter().flat_map(Object::walk).collect()
    }

    /// Top-level objects standing on the floor (not wall-mounted).
    pub fn floor_objects(&self) -> impl Iterator<Item = &Object> {
        self.objects.iter().filter(|o| o.placement_kind != PlacementKind::Wall)
    }

    pub fn area(&self) -> f64 {
        self.rooms.iter().map(|r| crate::geom::polygon_area(&r.floor_polygon)).sum()
    }
}

pub fn room_id(i: usize) -> String {
    format!("room|{i}")
}

fn round(x: f64) -> f64 {
    let s = 10f64.powi(DECIMALS);
    let r = (x * s).round() / s;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let r = round(n.as_f64().expect("f64"));
            *v = serde_json::Number::from_f64(r).map_or(Value::Null, Value::Number);
        }
        Value::Array(a) => a.iter_mut().for_each(round_value),
        Value::Object(o) => o.values_mut().for_each(round_value),
        _ => {}
    }
}

pub fn to_canonical_value(house: &House) -> Value {
    let mut v = serde_json::to_value(house).expect("house serializes");
    round_value(&mut v);
    v
}

/// Round every float so the house survives an emit/parse round trip exactly.
pub fn canonicalize(house: &House) -> House {
    serde_json::from_value(to_canonical_value(house)).expect("canonical value deserializes")
}

pub fn emit_json(house: &House) -> String {
    let mut s = serde_json::to_string_pretty(&to_canonical_value(house)).expect("value serializes");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<House> {
    let house: House = serde_json::from_str(text).map_err(|e| Error::parse("house", e))?;
    if house.metadata.schema_version != SCHEMA_VERSION {
        return Err(Error::schema(
            "metadata/schemaVersion",
            format!("expected {SCHEMA_VERSION}, found {}", house.metadata.schema_version),
        ));
    }
    Ok(house)
}

pub fn load_house(path: impl AsRef<std::path::Path>) -> Result<House> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    parse_json(&text)
}
