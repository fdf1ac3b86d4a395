//! Structure materials, ceiling height, skybox and lights.

use rand::Rng;
use rand_distr::{Beta, Distribution};
use serde::{Deserialize, Serialize};

use crate::catalog::{MaterialCatalog, TimeOfDay};
use crate::geom::{centroid, point_strictly_inside, pole_of_inaccessibility, Vec2, Vec3};

pub const P_WALL_SAME: f64 = 0.35;
pub const P_FLOOR_SAME: f64 = 0.15;
pub const P_WALL_SOLID: f64 = 0.5;
pub const CEILING_MIN: f64 = 2.5;
pub const CEILING_MAX: f64 = 7.0;
/// Room lights hang this far below the ceiling.
pub const LIGHT_DROP: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum SurfaceMaterial {
    Solid { color: [u8; 3] },
    Texture { id: String },
}

impl SurfaceMaterial {
    pub fn is_solid(&self) -> bool {
        matches!(self, SurfaceMaterial::Solid { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StructureMaterials {
    pub walls: Vec<SurfaceMaterial>,
    pub floors: Vec<String>,
    pub ceiling: SurfaceMaterial,
    pub wall_same: bool,
    pub floor_same: bool,
}

fn wall_material<R: Rng + ?Sized>(m: &MaterialCatalog, rng: &mut R) -> SurfaceMaterial {
    if rng.random_bool(P_WALL_SOLID) {
        SurfaceMaterial::Solid { color: m.solid_colors[rng.random_range(0..m.solid_colors.len())] }
    } else {
        SurfaceMaterial::Texture { id: m.wall_textures[rng.random_range(0..m.wall_textures.len())].clone() }
    }
}

pub fn sample_structure_materials<R: Rng + ?Sized>(rooms: usize, m: &MaterialCatalog, rng: &mut R) -> StructureMaterials {
    let wall_same = rng.random_bool(P_WALL_SAME);
    let floor_same = rng.random_bool(P_FLOOR_SAME);
    let (walls, ceiling) = if wall_same {
        let w = wall_material(m, rng);
        (vec![w.clone(); rooms], w)
    } else {
        let walls = (0..rooms).map(|_| wall_material(m, rng)).collect();
        (walls, wall_material(m, rng))
    };
    let floor = |rng: &mut R| m.floor_materials[rng.random_range(0..m.floor_materials.len())].clone();
    let floors = if floor_same {
        vec![floor(rng); rooms]
    } else {
        (0..rooms).map(|_| floor(rng)).collect()
    };
    StructureMaterials { walls, floors, ceiling, wall_same, floor_same }
}

/// `c_h = 2.5 + 4.5 * Beta(1.25, 5.5)`.
pub fn sample_ceiling_height<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let b = Beta::new(1.25, 5.5).expect("valid Beta").sample(rng);
    (CEILING_MIN + (CEILING_MAX - CEILING_MIN) * b).min(CEILING_MAX - 1e-9)
}

/// Uniform over every skybox, unless the catalog weights times of day.
pub fn sample_skybox<R: Rng + ?Sized>(m: &MaterialCatalog, rng: &mut R) -> (String, TimeOfDay) {
    let mut all: Vec<(&String, TimeOfDay)> = Vec::new();
    let mut weights = Vec::new();
    for (tod, ids) in &m.skyboxes {
        let w = m.skybox_weights.as_ref().map_or(1.0, |ws| ws.get(tod).copied().unwrap_or(0.0));
        for id in ids {
            all.push((id, *tod));
            weights.push(w);
        }
    }
    let i = crate::random::choose_weighted(rng, &weights).expect("catalog has skyboxes");
    (all[i].0.clone(), all[i].1)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DirectionalLight {
    pub direction: Vec3,
    pub color: [u8; 3],
    pub intensity: f64,
}

/// Sun for a time of day: high and bright at midday, low and warm at golden
/// hour, dim and blue after sunset.
pub fn directional_light(tod: TimeOfDay) -> DirectionalLight {
    let (d, color, intensity): ((f64, f64, f64), [u8; 3], f64) = match tod {
        TimeOfDay::Midday => ((0.2, -0.95, 0.25), [255, 250, 240], 1.0),
        TimeOfDay::GoldenHour => ((0.8, -0.3, 0.5), [255, 190, 120], 0.7),
        TimeOfDay::BlueHour => ((0.5, -0.5, 0.7), [120, 150, 255], 0.25),
    };
    let n = (d.0 * d.0 + d.1 * d.1 + d.2 * d.2).sqrt();
    DirectionalLight { direction: Vec3::new(d.0 / n, d.1 / n, d.2 / n), color, intensity }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase", rename_all_fields = "camelCase")]
pub enum LightSource {
    Room { room_id: String },
    Object { object_id: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PointLight {
    pub id: String,
    pub position: Vec3,
    pub source: LightSource,
    pub color: [u8; 3],
    pub intensity: f64,
}

pub const ROOM_LIGHT_INTENSITY: f64 = 0.75;
pub const LAMP_INTENSITY: f64 = 0.5;

/// A light-emitting object and whether it is switched on.
#[derive(Debug, Clone, PartialEq)]
pub struct Lamp {
    pub object_id: String,
    pub top: Vec3,
    pub on: bool,
}

/// Point inside the polygon to hang a room light: the centroid, or the pole
/// of inaccessibility when the centroid falls outside.
pub fn light_anchor(poly: &[Vec2]) -> Vec2 {
    let c = centroid(poly);
    if point_strictly_inside(c, poly) {
        c
    } else {
        pole_of_inaccessibility(poly)
    }
}

/// One light per room under the ceiling plus one per lamp.
pub fn place_lights(rooms: &[(String, Vec<Vec2>)], lamps: &[Lamp], ceiling_height: f64) -> Vec<PointLight> {
    let mut out = Vec::with_capacity(rooms.len() + lamps.len());
    for (id, poly) in rooms {
        let p = light_anchor(poly);
        out.push(PointLight {
            id: format!("light|{id}"),
            position: Vec3::new(p.x, ceiling_height - LIGHT_DROP, p.z),
            source: LightSource::Room { room_id: id.clone() },
            color: [255, 244, 229],
            intensity: ROOM_LIGHT_INTENSITY,
        });
    }
    for lamp in lamps {
        out.push(PointLight {
            id: format!("light|{}", lamp.object_id),
            position: lamp.top,
            source: LightSource::Object { object_id: lamp.object_id.clone() },
            color: [255, 214, 170],
            intensity: if lamp.on { LAMP_INTENSITY } else { 0.0 },
        });
    }
    out
}
