//! Navigability check on a 0.25 m grid and ObjectNav target selection.

use std::collections::{BTreeMap, VecDeque};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{point_in_polygon, point_segment_distance, segments_intersect, Rect, Vec2, Vec3};
use crate::house::{House, Object, PlacementKind};

pub const CELL_SIZE: f64 = 0.25;
pub const AGENT_RADIUS: f64 = 0.2;
pub const MIN_REACHABLE: usize = 5;
pub const CAMERA_HEIGHT: f64 = 1.0;
pub const NEAREST_CELLS: usize = 6;
pub const REACH_DISTANCE: f64 = 1.0;
pub const EPSILON: f64 = 0.2;

/// Wall pieces agents and sight lines cannot pass: every wall minus the
/// passable doors and open walls on it.
pub fn solid_walls(house: &House) -> Vec<(Vec2, Vec2)> {
    let mut spans: Vec<(Vec2, Vec2)> = Vec::new();
    for d in house.doors.iter().filter(|d| d.passable) {
        let w = house.wall(&d.wall_id).expect("door wall exists");
        spans.push((w.point_at(d.offset), w.point_at(d.offset + d.width)));
    }
    for o in &house.open_walls {
        let w = house.wall(&o.wall_id).expect("open wall exists");
        spans.push((w.point_at(o.offset), w.point_at(o.offset + o.width)));
    }
    let mut out = Vec::new();
    for w in &house.walls {
        let mut free = vec![(0.0, w.length())];
        for (a, b) in &spans {
            if w.line_distance(*a) > 1e-6 || w.line_distance(*b) > 1e-6 {
                continue;
            }
            let (s, t) = (w.project(*a), w.project(*b));
            let (s, t) = (s.min(t), s.max(t));
            let mut next = Vec::new();
            for (p, q) in free {
                if t <= p || s >= q {
                    next.push((p, q));
                    continue;
                }
                if s > p {
                    next.push((p, s));
                }
                if t < q {
                    next.push((t, q));
                }
            }
            free = next;
        }
        out.extend(free.into_iter().filter(|(p, q)| q - p > 1e-9).map(|(p, q)| (w.point_at(p), w.point_at(q))));
    }
    out
}

/// Free space sampled at cell centers, with the set reachable from the
/// first free cell in scan order.
#[derive(Debug, Clone, PartialEq)]
pub struct NavGrid {
    pub origin: Vec2,
    pub cell: f64,
    pub nx: usize,
    pub nz: usize,
    /// Room index of each cell center, if inside the house.
    pub room: Vec<Option<usize>>,
    pub free: Vec<bool>,
    pub reachable: Vec<bool>,
    pub seed: usize,
}

impl NavGrid {
    pub fn center(&self, i: usize) -> Vec2 {
        let (x, z) = (i % self.nx, i / self.nx);
        Vec2::new(self.origin.x + (x as f64 + 0.5) * self.cell, self.origin.z + (z as f64 + 0.5) * self.cell)
    }

    /// Cells whose centers fall within `r` of the rectangle's bounds.
    fn cells_near(&self, b: &Rect, r: f64) -> impl Iterator<Item = usize> + '_ {
        let lo = |v: f64, o: f64| (((v - r - o) / self.cell) - 0.5).floor().max(0.0) as usize;
        let hi = |v: f64, o: f64, n: usize| ((((v + r - o) / self.cell) - 0.5).ceil().max(0.0) as usize).min(n - 1);
        let (x0, x1) = (lo(b.min.x, self.origin.x), hi(b.max.x, self.origin.x, self.nx));
        let (z0, z1) = (lo(b.min.z, self.origin.z), hi(b.max.z, self.origin.z, self.nz));
        (z0..=z1).flat_map(move |z| (x0..=x1).map(move |x| z * self.nx + x))
    }

    pub fn reachable_count(&self) -> usize {
        self.reachable.iter().filter(|&&r| r).count()
    }

    /// Reachable cells per room index.
    pub fn room_counts(&self, rooms: usize) -> Vec<usize> {
        let mut c = vec![0; rooms];
        for (i, r) in self.reachable.iter().enumerate() {
            if *r {
                if let Some(k) = self.room[i] {
                    c[k] += 1;
                }
            }
        }
        c
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> {
        let (x, z, nx, nz) = (i % self.nx, i / self.nx, self.nx, self.nz);
        [
            (x > 0).then(|| i - 1),
            (x + 1 < nx).then(|| i + 1),
            (z > 0).then(|| i - nx),
            (z + 1 < nz).then(|| i + nx),
        ]
        .into_iter()
        .flatten()
    }
}

/// Objects that stand on the floor and block the agent.
fn floor_obstacles(house: &House) -> impl Iterator<Item = &Object> {
    house.objects.iter().filter(|o| o.placement_kind != PlacementKind::Wall)
}

pub fn reachable_positions(house: &House, agent_radius: f64, cell: f64) -> Result<NavGrid> {
    let pts = house.rooms.iter().flat_map(|r| r.floor_polygon.iter());
    let (mut x0, mut z0, mut x1, mut z1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for p in pts {
        x0 = x0.min(p.x);
        z0 = z0.min(p.z);
        x1 = x1.max(p.x);
        z1 = z1.max(p.z);
    }
    if house.rooms.is_empty() || x1 <= x0 || z1 <= z0 {
        return Err(Error::NoFreeCell);
    }
    let nx = ((x1 - x0) / cell).ceil() as usize;
    let nz = ((z1 - z0) / cell).ceil() as usize;
    let mut g = NavGrid {
        origin: Vec2::new(x0, z0),
        cell,
        nx,
        nz,
        room: vec![None; nx * nz],
        free: vec![false; nx * nz],
        reachable: vec![false; nx * nz],
        seed: 0,
    };
    for (k, r) in house.rooms.iter().enumerate() {
        let mut b = Rect::from_bounds(f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for p in &r.floor_polygon {
            b = b.union(&Rect::new(*p, *p));
        }
        let cells: Vec<usize> = g.cells_near(&b, 0.0).collect();
        for i in cells {
            if g.room[i].is_none() && point_in_polygon(g.center(i), &r.floor_polygon) {
                g.room[i] = Some(k);
                g.free[i] = true;
            }
        }
    }
    for (a, b) in solid_walls(house) {
        let cells: Vec<usize> = g.cells_near(&Rect::from_bounds(a.x, a.z, b.x, b.z), agent_radius).collect();
        for i in cells {
            if g.free[i] && point_segment_distance(g.center(i), a, b) < agent_radius {
                g.free[i] = false;
            }
        }
    }
    for o in floor_obstacles(house) {
        let f = o.footprint();
        let cells: Vec<usize> = g.cells_near(&f, agent_radius).collect();
        for i in cells {
            if g.free[i] && f.distance_to(g.center(i)) < agent_radius {
                g.free[i] = false;
            }
        }
    }
    g.seed = g.free.iter().position(|&f| f).ok_or(Error::NoFreeCell)?;
    let mut queue = VecDeque::from([g.seed]);
    g.reachable[g.seed] = true;
    while let Some(i) = queue.pop_front() {
        let ns: Vec<usize> = g.neighbors(i).collect();
        for n in ns {
            if g.free[n] && !g.reachable[n] {
                g.reachable[n] = true;
                queue.push_back(n);
            }
        }
    }
    Ok(g)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ValidationReport {
    pub pass: bool,
    /// Reachable cells per room id.
    pub room_counts: BTreeMap<String, usize>,
    pub deficient_rooms: Vec<String>,
    pub reasons: Vec<String>,
}

pub fn validate_house(house: &House) -> ValidationReport {
    validate_with(house, AGENT_RADIUS, CELL_SIZE)
}

pub fn validate_with(house: &House, agent_radius: f64, cell: f64) -> ValidationReport {
    let grid = match reachable_positions(house, agent_radius, cell) {
        Ok(g) => g,
        Err(e) => {
            return ValidationReport {
                pass: false,
                room_counts: house.rooms.iter().map(|r| (r.id.clone(), 0)).collect(),
                deficient_rooms: house.rooms.iter().map(|r| r.id.clone()).collect(),
                reasons: vec![e.to_string()],
            }
        }
    };
    report_from_grid(house, &grid)
}

pub fn report_from_grid(house: &House, grid: &NavGrid) -> ValidationReport {
    let counts = grid.room_counts(house.rooms.len());
    let mut room_counts = BTreeMap::new();
    let mut deficient_rooms = Vec::new();
    let mut reasons = Vec::new();
    for (r, c) in house.rooms.iter().zip(counts) {
        room_counts.insert(r.id.clone(), c);
        if c < MIN_REACHABLE {
            deficient_rooms.push(r.id.clone());
            reasons.push(format!("{} has {c} reachable cells, needs {MIN_REACHABLE}", r.id));
        }
    }
    ValidationReport { pass: deficient_rooms.is_empty(), room_counts, deficient_rooms, reasons }
}

/// Bounding-box face centers of an object in world space.
pub fn visibility_points(o: &Object) -> Vec<Vec3> {
    let f = o.footprint();
    let c = f.center();
    let (y0, y1, ym) = (o.bottom(), o.top(), o.position.y);
    vec![
        Vec3::new(f.min.x, ym, c.z),
        Vec3::new(f.max.x, ym, c.z),
        Vec3::new(c.x, y0, c.z),
        Vec3::new(c.x, y1, c.z),
        Vec3::new(c.x, ym, f.min.z),
        Vec3::new(c.x, ym, f.max.z),
    ]
}

fn line_of_sight(a: Vec2, b: Vec2, walls: &[(Vec2, Vec2)], occluders: &[Rect]) -> bool {
    !walls.iter().any(|(p, q)| segments_intersect(a, b, *p, *q)) && !occluders.iter().any(|r| r.segment_crosses_interior(a, b))
}

/// Ids of objects of `object_type` that an agent camera at a nearby
/// reachable cell sees within 1 m. Sight is tested top-down against solid
/// walls and against objects taller than the camera, ignoring the target
/// and anything it rests on.
pub fn reachable_targets(house: &House, grid: &NavGrid, object_type: &str) -> Vec<String> {
    let walls = solid_walls(house);
    let all = house.all_objects();
    let reach: Vec<usize> = (0..grid.reachable.len()).filter(|&i| grid.reachable[i]).collect();
    let mut out = Vec::new();
    for t in all.iter().filter(|o| o.asset_type == object_type) {
        let p = t.position.xz();
        let mut near: Vec<(f64, usize)> = reach.iter().map(|&i| (grid.center(i).dist(p), i)).collect();
        near.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        near.truncate(NEAREST_CELLS);
        let occluders: Vec<Rect> = all
            .iter()
            .filter(|o| o.id != t.id && o.top() > CAMERA_HEIGHT && o.top() > t.bottom() + 1e-9)
            .map(|o| o.footprint())
            .collect();
        let seen = near.iter().any(|&(_, i)| {
            let c = grid.center(i);
            let cam = Vec3::new(c.x, CAMERA_HEIGHT, c.z);
            visibility_points(t)
                .into_iter()
                .any(|v| cam.dist(v) < REACH_DISTANCE && line_of_sight(c, v.xz(), &walls, &occluders))
        });
        if seen {
            out.push(t.id.clone());
        }
    }
    out
}

/// Reachable instance ids for every object type present in the house.
pub fn targets_by_type(house: &House, grid: &NavGrid) -> BTreeMap<String, Vec<String>> {
    let types: std::collections::BTreeSet<&str> = house.all_objects().iter().map(|o| o.asset_type.as_str()).collect();
    types.into_iter().map(|t| (t.to_string(), reachable_targets(house, grid, t))).collect()
}

/// How often each target type has been drawn in a sampling session.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct EpisodeTargetState {
    pub counts: BTreeMap<String, u64>,
    pub epsilon: f64,
}

impl EpisodeTargetState {
    pub fn new() -> Self {
        Self { counts: BTreeMap::new(), epsilon: EPSILON }
    }
}

/// With probability epsilon a uniform available type, otherwise the least
/// drawn one (ties by name). Updates the counts.
pub fn sample_episode_target<R: Rng + ?Sized>(
    targets: &BTreeMap<String, Vec<String>>,
    state: &mut EpisodeTargetState,
    rng: &mut R,
) -> Result<String> {
    let available: Vec<&String> = targets.iter().filter(|(_, v)| !v.is_empty()).map(|(k, _)| k).collect();
    if available.is_empty() {
        return Err(Error::NoReachableTarget);
    }
    let pick = if rng.random_bool(state.epsilon) {
        available[rng.random_range(0..available.len())]
    } else {
        *available
            .iter()
            .min_by_key(|t| (state.counts.get(t.as_str()).copied().unwrap_or(0), t.as_str()))
            .expect("nonempty")
    };
    *state.counts.entry(pick.clone()).or_insert(0) += 1;
    Ok(pick.clone())
}
