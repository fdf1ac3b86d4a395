//! Small objects on receptacle tops.

use rand::Rng;
use rand_distr::{Beta, Distribution, Geometric};

use crate::catalog::{Catalog, Split};
use crate::geom::{rotated_extents, Aabb, Rect, Vec3};
use crate::house::{Object, PlacementKind};
use crate::random::choose;

pub const POSE_ATTEMPTS: u32 = 5;
/// Most copies of one type on one receptacle.
pub const S_MAX: u32 = 3;

/// `b_house = 0.4 * Beta(3.5, 1.9) - 0.3`.
pub fn sample_house_bias<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    0.4 * Beta::new(3.5, 1.9).expect("valid Beta").sample(rng) - 0.3
}

/// Extra copies after a successful spawn: `min(s_max, G - 1) - 1` with `G`
/// the trial count of the first success, floored at zero.
pub fn extra_copies<R: Rng + ?Sized>(p: f64, rng: &mut R) -> u32 {
    if p <= 0.0 {
        return 0;
    }
    let failures = Geometric::new(p.min(1.0)).expect("valid p").sample(rng);
    (failures.min(S_MAX as u64) as u32).saturating_sub(1)
}

pub fn effective_probability(p_spawn: f64, b_house: f64, b_receptacle: f64, b_object: f64) -> f64 {
    (p_spawn + b_house + b_receptacle + b_object).clamp(0.0, 1.0)
}

/// Try up to [`POSE_ATTEMPTS`] random poses for an instance on `parent`.
fn try_place<R: Rng + ?Sized>(
    parent: &mut Object,
    instance_id: &str,
    catalog: &Catalog,
    obstacles: &[Aabb],
    rng: &mut R,
) -> bool {
    let inst = catalog.instance(instance_id).expect("instance exists");
    let top_face = parent.footprint();
    let y0 = parent.top();
    for _ in 0..POSE_ATTEMPTS {
        let rotation = 90 * rng.random_range(0..4);
        let (ew, ed) = rotated_extents(inst.width(), inst.depth(), rotation);
        if ew > top_face.width() || ed > top_face.depth() {
            continue;
        }
        let x = top_face.min.x + ew / 2.0 + rng.random::<f64>() * (top_face.width() - ew);
        let z = top_face.min.z + ed / 2.0 + rng.random::<f64>() * (top_face.depth() - ed);
        let f = Rect::from_center(crate::geom::Vec2::new(x, z), ew, ed);
        let bb = Aabb { footprint: f, y0, y1: y0 + inst.height() };
        if parent.children.iter().any(|c| c.footprint().overlaps(&f)) || obstacles.iter().any(|o| o.overlaps(&bb)) {
            continue;
        }
        let n = parent.children.len();
        parent.children.push(Object {
            id: format!("{}|{n}", parent.id),
            asset_id: inst.id.clone(),
            asset_type: inst.asset_type.clone(),
            room_id: parent.room_id.clone(),
            position: Vec3::new(x, y0 + inst.height() / 2.0, z),
            rotation,
            size: Vec3::new(inst.width(), inst.height(), inst.depth()),
            placement_kind: PlacementKind::Surface,
            placement_id: None,
            group_id: None,
            wall_id: None,
            wall_offset: None,
            kinematic: false,
            states: Default::default(),
            color: None,
            material: None,
            children: vec![],
        });
        return true;
    }
    false
}

/// Spawn small objects on every floor-level receptacle. `obstacles` are
/// wall-mounted boxes the new objects must not poke into. Returns the
/// number of objects added.
pub fn place_surface_objects<R: Rng + ?Sized>(
    objects: &mut [Object],
    obstacles: &[Aabb],
    catalog: &Catalog,
    split: Split,
    b_house: f64,
    rng: &mut R,
) -> usize {
    let mut added = 0;
    for parent in objects.iter_mut().filter(|o| o.placement_kind != PlacementKind::Wall) {
        let inst = catalog.instance(&parent.asset_id).expect("instance exists");
        if !inst.is_receptacle {
            continue;
        }
        let b_rec = catalog.asset_type(&parent.asset_type).expect("type exists").receptacle_bias;
        for (object_type, p_spawn) in catalog.spawn_table.objects_for(&parent.asset_type) {
            let Some(t) = catalog.asset_type(object_type) else { continue };
            let p = effective_probability(*p_spawn, b_house, b_rec, t.object_bias);
            if p <= 0.0 || !rng.random_bool(p) {
                continue;
            }
            let pool = catalog.instances_in_split(object_type, split);
            let Some(first) = choose(rng, &pool) else { continue };
            if !try_place(parent, &first.id, catalog, obstacles, rng) {
                continue;
            }
            added += 1;
            for _ in 0..extra_copies(*p_spawn, rng) {
                let extra = choose(rng, &pool).expect("nonempty");
                added += try_place(parent, &extra.id, catalog, obstacles, rng) as usize;
            }
        }
    }
    added
}
