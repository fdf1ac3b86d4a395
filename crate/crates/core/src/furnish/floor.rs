//! Floor objects: pick a free rectangle, classify it, drop in an asset or an
//! asset group with a navigation margin, repeat.

use std::collections::BTreeSet;

use rand::Rng;

use super::nav::{NavGuard, NavSpec};
use super::open_area::{decompose_open_area, OpenArea};
use crate::catalog::{filter_floor_assets, fits_either_orientation, Catalog, Placement, Split};
use crate::geom::{distance_to_boundary, rotated_extents, Rect, Vec2, Vec3};
use crate::house::{FloorPlacement, Object, PlacementKind};
use crate::random::{choose, choose_weighted, sample_pmf};
use crate::roomspec::RoomType;
use crate::sag::{instantiate_sag, PlacedGroup, DEFAULT_MAX_ATTEMPTS};

pub const M_PAD: f64 = 0.35;
pub const W_PAD: f64 = 0.5;
pub const P_LARGEST: f64 = 0.8;
pub const P_EDGE: f64 = 0.7;
/// Chance to take a group over a single asset when both fit.
pub const P_PREFER_GROUP: f64 = 0.6;
pub const R_I_PMF: [(u32, f64); 5] =
    [(1, 1.0 / 200.0), (4, 2.0 / 200.0), (5, 4.0 / 200.0), (6, 20.0 / 200.0), (7, 173.0 / 200.0)];

const TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlacementBudget {
    pub r_i: u32,
    /// Margin on every side of middle placements.
    pub m_pad: f64,
    /// Margin in front of edge and corner placements.
    pub w_pad: f64,
}

impl PlacementBudget {
    pub fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self { r_i: sample_pmf(rng, &R_I_PMF), m_pad: M_PAD, w_pad: W_PAD }
    }

    fn pad(&self, mode: Placement) -> f64 {
        match mode {
            Placement::Middle => 2.0 * self.m_pad,
            _ => self.w_pad,
        }
    }
}

/// A room ready for furnishing.
#[derive(Debug, Clone)]
pub struct FloorRoom<'a> {
    pub id: &'a str,
    pub room_type: RoomType,
    pub polygon: &'a [Vec2],
    /// Door swings and clearances that must stay empty.
    pub keep_clear: Vec<Rect>,
    /// When set, poses that would split the free floor or cut off a
    /// clearance are dropped.
    pub nav: Option<NavSpec>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct FloorOutcome {
    pub objects: Vec<Object>,
    pub placements: Vec<FloorPlacement>,
    pub iterations: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    MinX,
    MaxX,
    MinZ,
    MaxZ,
}

impl Side {
    const ALL: [Side; 4] = [Side::MinZ, Side::MaxX, Side::MaxZ, Side::MinX];

    /// Rotation of an object whose back rests on this side.
    fn rotation(self) -> i32 {
        match self {
            Side::MinZ => 0,
            Side::MinX => 90,
            Side::MaxZ => 180,
            Side::MaxX => 270,
        }
    }

    fn segment(self, r: &Rect) -> (Vec2, Vec2) {
        match self {
            Side::MinZ => (r.min, Vec2::new(r.max.x, r.min.z)),
            Side::MaxZ => (Vec2::new(r.min.x, r.max.z), r.max),
            Side::MinX => (r.min, Vec2::new(r.min.x, r.max.z)),
            Side::MaxX => (Vec2::new(r.max.x, r.min.z), r.max),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Mode {
    /// Rectangle corner given by its two sides.
    Corner(Side, Side),
    Edge(Side),
    Middle,
}

impl Mode {
    fn placement(self) -> Placement {
        match self {
            Mode::Corner(..) => Placement::Corner,
            Mode::Edge(_) => Placement::Edge,
            Mode::Middle => Placement::Middle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Pose {
    rotation: i32,
    footprint: Rect,
    padded: Rect,
}

/// Whether the segment a..b is covered by the polygon's boundary.
fn on_boundary(a: Vec2, b: Vec2, poly: &[Vec2]) -> bool {
    let len = a.dist(b);
    if len < TOL {
        return distance_to_boundary(a, poly) < 1e-6;
    }
    let dir = b.sub(a).scale(1.0 / len);
    let n = poly.len();
    let mut spans: Vec<(f64, f64)> = Vec::new();
    for i in 0..n {
        let (p, q) = (poly[i], poly[(i + 1) % n]);
        let off = |v: Vec2| v.sub(a).cross(dir).abs();
        if off(p) > 1e-6 || off(q) > 1e-6 {
            continue;
        }
        let (s, t) = (p.sub(a).dot(dir), q.sub(a).dot(dir));
        let (s, t) = (s.min(t).max(0.0), s.max(t).min(len));
        if t > s {
            spans.push((s, t));
        }
    }
    spans.sort_by(|p, q| p.0.total_cmp(&q.0));
    let mut reach = 0.0;
    for (s, t) in spans {
        if s > reach + 1e-6 {
            return false;
        }
        reach = f64::max(reach, t);
    }
    reach >= len - 1e-6
}

/// Rectangle corners that sit in a room corner: both rectangle sides leaving
/// the corner run along walls.
fn room_corners(r: &Rect, poly: &[Vec2]) -> Vec<Mode> {
    let near = |a: Vec2, b: Vec2| {
        let d = 0.01f64.min(a.dist(b) / 2.0);
        let dir = b.sub(a).scale(1.0 / a.dist(b));
        on_boundary(a, a.add(dir.scale(d)), poly)
    };
    let mut out = Vec::new();
    for (zs, xs) in [(Side::MinZ, Side::MinX), (Side::MinZ, Side::MaxX), (Side::MaxZ, Side::MaxX), (Side::MaxZ, Side::MinX)] {
        let c = Vec2::new(
            if xs == Side::MinX { r.min.x } else { r.max.x },
            if zs == Side::MinZ { r.min.z } else { r.max.z },
        );
        let along_x = Vec2::new(if xs == Side::MinX { r.max.x } else { r.min.x }, c.z);
        let along_z = Vec2::new(c.x, if zs == Side::MinZ { r.max.z } else { r.min.z });
        if near(c, along_x) && near(c, along_z) {
            out.push(Mode::Corner(zs, xs));
        }
    }
    out
}

fn wall_sides(r: &Rect, poly: &[Vec2]) -> Vec<Side> {
    Side::ALL
        .into_iter()
        .filter(|s| {
            let (a, b) = s.segment(r);
            on_boundary(a, b, poly)
        })
        .collect()
}

/// Object of local extents `w` x `d` with its back on `side`, pushed to the
/// low or high end of that side.
fn wall_pose(r: &Rect, side: Side, low_end: bool, w: f64, d: f64, pad: f64) -> Option<Pose> {
    let rotation = side.rotation();
    let along_x = matches!(side, Side::MinZ | Side::MaxZ);
    let (span, depth) = if along_x { (r.width(), r.depth()) } else { (r.depth(), r.width()) };
    if w > span + TOL || d + pad > depth + TOL {
        return None;
    }
    let (lo, hi) = if along_x { (r.min.x, r.max.x) } else { (r.min.z, r.max.z) };
    let a0 = if low_end { lo } else { hi - w };
    let (a0, a1) = (a0, a0 + w);
    let (f, p) = match side {
        Side::MinZ => ((r.min.z, r.min.z + d), (r.min.z, r.min.z + d + pad)),
        Side::MaxZ => ((r.max.z - d, r.max.z), (r.max.z - d - pad, r.max.z)),
        Side::MinX => ((r.min.x, r.min.x + d), (r.min.x, r.min.x + d + pad)),
        Side::MaxX => ((r.max.x - d, r.max.x), (r.max.x - d - pad, r.max.x)),
    };
    let (footprint, padded) = if along_x {
        (Rect::from_bounds(a0, f.0, a1, f.1), Rect::from_bounds(a0, p.0, a1, p.1))
    } else {
        (Rect::from_bounds(f.0, a0, f.1, a1), Rect::from_bounds(p.0, a0, p.1, a1))
    };
    Some(Pose { rotation, footprint, padded })
}

/// Whether the footprint's `side` lies along the room boundary.
fn against(f: &Rect, side: Side, poly: &[Vec2]) -> bool {
    let (a, b) = side.segment(f);
    on_boundary(a, b, poly)
}

/// Candidate poses in `r`. Wall poses whose back (and, in a corner, whose
/// side) would leave the wall are dropped: rectangle sides are only partly
/// walls when the room turns a corner along them.
fn poses(r: &Rect, mode: Mode, w: f64, d: f64, budget: &PlacementBudget, poly: &[Vec2]) -> Vec<Pose> {
    match mode {
        Mode::Corner(zs, xs) => [
            (zs, xs, wall_pose(r, zs, xs == Side::MinX, w, d, budget.w_pad)),
            (xs, zs, wall_pose(r, xs, zs == Side::MinZ, w, d, budget.w_pad)),
        ]
        .into_iter()
        .filter_map(|(back, side, p)| {
            p.filter(|p| against(&p.footprint, back, poly) && against(&p.footprint, side, poly))
        })
        .collect(),
        Mode::Edge(side) => [true, false]
            .into_iter()
            .filter_map(|low| wall_pose(r, side, low, w, d, budget.w_pad))
            .filter(|p| against(&p.footprint, side, poly))
            .collect(),
        Mode::Middle => {
            let m = budget.m_pad;
            let mut out = Vec::new();
            for rotation in [0, 90, 180, 270] {
                let (ew, ed) = rotated_extents(w, d, rotation);
                let (pw, pd) = (ew + 2.0 * m, ed + 2.0 * m);
                if pw > r.width() + TOL || pd > r.depth() + TOL {
                    continue;
                }
                for c in r.corners() {
                    let x0 = if c.x == r.min.x { r.min.x } else { r.max.x - pw };
                    let z0 = if c.z == r.min.z { r.min.z } else { r.max.z - pd };
                    let padded = Rect::from_bounds(x0, z0, x0 + pw, z0 + pd);
                    out.push(Pose { rotation, footprint: padded.inflate(-m), padded });
                }
            }
            out
        }
    }
}

enum Candidate<'a> {
    Single(&'a crate::catalog::AssetInstance, Vec<Pose>),
    Group(PlacedGroup, Vec<Pose>),
}

fn same_rect(a: &Rect, b: &Rect) -> bool {
    a.min.approx_eq(b.min) && a.max.approx_eq(b.max)
}

fn classify<R: Rng + ?Sized>(r: &Rect, poly: &[Vec2], rng: &mut R) -> Mode {
    let corners = room_corners(r, poly);
    if let Some(&m) = choose(rng, &corners) {
        return m;
    }
    let sides = wall_sides(r, poly);
    if !sides.is_empty() && rng.random_bool(P_EDGE) {
        return Mode::Edge(*choose(rng, &sides).expect("nonempty"));
    }
    Mode::Middle
}

/// Run the placement loop for one room. Object ids are
/// `{room}|obj|{k}`; group members on top of another member become its
/// children.
pub fn place_floor_objects<R: Rng + ?Sized>(
    room: &FloorRoom<'_>,
    catalog: &Catalog,
    split: Split,
    budget: &PlacementBudget,
    rng: &mut R,
) -> FloorOutcome {
    let mut out = FloorOutcome::default();
    let mut holes = room.keep_clear.clone();
    let mut excluded: Vec<Rect> = Vec::new();
    let mut present: BTreeSet<String> = BTreeSet::new();
    let mut next_object = 0usize;
    let mut guard = room.nav.map(|spec| NavGuard::new(spec, room.polygon, &room.keep_clear));
    for _ in 0..budget.r_i {
        out.iterations += 1;
        let area = OpenArea { outer: room.polygon.to_vec(), holes: holes.clone() };
        let rects: Vec<Rect> =
            decompose_open_area(&area).into_iter().filter(|r| !excluded.iter().any(|e| same_rect(e, r))).collect();
        if rects.is_empty() {
            break;
        }
        let rect = if rng.random_bool(P_LARGEST) {
            rects[0]
        } else {
            let w: Vec<f64> = rects.iter().map(Rect::area).collect();
            rects[choose_weighted(rng, &w).expect("positive areas")]
        };
        let mode = classify(&rect, room.polygon, rng);
        let placement = mode.placement();
        let pad = budget.pad(placement);
        let dup_ok = |t: &str| {
            !present.contains(t) || catalog.asset_type(t).is_some_and(|a| a.allow_duplicates_in_room)
        };

        let mut singles = Vec::new();
        let mut single_w = Vec::new();
        for inst in filter_floor_assets(catalog, room.room_type, placement, split, (rect.width(), rect.depth()), pad) {
            if !dup_ok(&inst.asset_type) {
                continue;
            }
            let ps = poses(&rect, mode, inst.width(), inst.depth(), budget, room.polygon);
            if !ps.is_empty() {
                single_w.push(catalog.asset_type(&inst.asset_type).expect("indexed").room_weight(room.room_type) as f64);
                singles.push(Candidate::Single(inst, ps));
            }
        }
        let mut groups = Vec::new();
        let mut group_w = Vec::new();
        for def in &catalog.semantic_asset_groups {
            let weight = def.room_weight(room.room_type);
            if weight == 0 || !def.placements.contains(&placement) {
                continue;
            }
            let Ok(g) = instantiate_sag(def, catalog, split, rng, DEFAULT_MAX_ATTEMPTS) else { continue };
            if !g.members.iter().all(|m| dup_ok(&m.asset_type)) {
                continue;
            }
            let (u, v) = g.size();
            if !fits_either_orientation(u, v, rect.width(), rect.depth(), pad) {
                continue;
            }
            let ps = poses(&rect, mode, u, v, budget, room.polygon);
            if !ps.is_empty() {
                group_w.push(weight as f64);
                groups.push(Candidate::Group(g, ps));
            }
        }

        let pick_group = match (singles.is_empty(), groups.is_empty()) {
            (true, true) => {
                excluded.push(rect);
                continue;
            }
            (false, false) => rng.random_bool(P_PREFER_GROUP),
            (single_empty, _) => single_empty,
        };
        let chosen = if pick_group {
            let i = choose_weighted(rng, &group_w).expect("positive weights");
            groups.swap_remove(i)
        } else {
            let i = choose_weighted(rng, &single_w).expect("positive weights");
            singles.swap_remove(i)
        };

        let k = out.placements.len();
        let placement_id = format!("{}|fp|{k}", room.id);
        let first = next_object;
        let build = |pose: &Pose| -> Vec<Object> {
            match &chosen {
                Candidate::Single(inst, _) => {
                    let c = pose.footprint.center();
                    vec![Object {
                        id: format!("{}|obj|{first}", room.id),
                        asset_id: inst.id.clone(),
                        asset_type: inst.asset_type.clone(),
                        room_id: room.id.to_string(),
                        position: Vec3::new(c.x, inst.height() / 2.0, c.z),
                        rotation: pose.rotation,
                        size: Vec3::new(inst.width(), inst.height(), inst.depth()),
                        placement_kind: PlacementKind::Floor,
                        placement_id: Some(placement_id.clone()),
                        group_id: None,
                        wall_id: None,
                        wall_offset: None,
                        kinematic: true,
                        states: Default::default(),
                        color: None,
                        material: None,
                        children: vec![],
                    }]
                }
                Candidate::Group(g, _) => group_objects(g, pose, catalog, room.id, first, &placement_id),
            }
        };
        let all_poses = match &chosen {
            Candidate::Single(_, ps) | Candidate::Group(_, ps) => ps.clone(),
        };
        let mut options: Vec<(Pose, Vec<Object>)> = all_poses.iter().map(|p| (*p, build(p))).collect();
        let footprints = |objs: &[Object]| objs.iter().map(Object::footprint).collect::<Vec<_>>();
        if let Some(g) = &guard {
            options.retain(|(_, objs)| g.allows(&footprints(objs)));
        }
        if options.is_empty() {
            excluded.push(rect);
            continue;
        }
        let i = rng.random_range(0..options.len());
        let (pose, objects) = options.swap_remove(i);
        if let Some(g) = &mut guard {
            g.commit(&footprints(&objects));
        }
        let group_id = match &chosen {
            Candidate::Single(..) => None,
            Candidate::Group(g, _) => Some(g.def_id.clone()),
        };
        next_object += match &chosen {
            Candidate::Single(..) => 1,
            Candidate::Group(g, _) => g.members.len(),
        };
        let mut object_ids = Vec::new();
        for o in &objects {
            for d in o.walk() {
                present.insert(d.asset_type.clone());
                object_ids.push(d.id.clone());
            }
        }
        out.objects.extend(objects);
        out.placements.push(FloorPlacement {
            id: placement_id,
            room_id: room.id.to_string(),
            mode: placement,
            rotation: pose.rotation,
            footprint: pose.footprint,
            padded_footprint: pose.padded,
            group_id,
            object_ids,
        });
        holes.push(pose.padded);
    }
    out
}

/// Turn a group into objects; members standing on another member nest
/// under it.
fn group_objects(
    g: &PlacedGroup,
    pose: &Pose,
    catalog: &Catalog,
    room_id: &str,
    first_index: usize,
    placement_id: &str,
) -> Vec<Object> {
    let world = g.world_poses(pose.footprint.center(), pose.rotation);
    let mut flat: Vec<Option<Object>> = g
        .members
        .iter()
        .zip(&world)
        .enumerate()
        .map(|(i, (m, (c, rot)))| {
            let inst = catalog.instance(&m.instance_id).expect("resolved");
            Some(Object {
                id: format!("{room_id}|obj|{}", first_index + i),
                asset_id: inst.id.clone(),
                asset_type: inst.asset_type.clone(),
                room_id: room_id.to_string(),
                position: Vec3::new(c.x, (m.y0 + m.y1) / 2.0, c.z),
                rotation: *rot,
                size: Vec3::new(inst.width(), inst.height(), inst.depth()),
                placement_kind: PlacementKind::SagMember,
                placement_id: Some(placement_id.to_string()),
                group_id: Some(g.def_id.clone()),
                wall_id: None,
                wall_offset: None,
                kinematic: true,
                states: Default::default(),
                color: None,
                material: None,
                children: vec![],
            })
        })
        .collect();
    // attach deepest members first so grandchildren travel with their parent
    let depth = |mut i: usize| {
        let mut d = 0;
        while let Some(p) = g.members[i].on_top_of {
            i = p;
            d += 1;
        }
        d
    };
    let mut order: Vec<usize> = (0..flat.len()).filter(|&i| g.members[i].on_top_of.is_some()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(depth(i)));
    for i in order {
        let child = flat[i].take().expect("attached once");
        let parent = g.members[i].on_top_of.expect("filtered");
        flat[parent].as_mut().expect("parents attach later").children.insert(0, child);
    }
    flat.into_iter().flatten().collect()
}
