//! Floorplan sampling on an integer grid: boundary, corner cuts, recursive
//! subdivision into rooms, and scaling to meters.
//!
//! Cell `(x, z)` covers `[x, x+1] x [z, z+1]` before scaling. Grid vertices
//! are integer points; polygons are traced counter-clockwise.

use std::collections::{BTreeMap, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::{Beta, Distribution};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{polygon_area, Vec2};
use crate::random::choose_weighted;
use crate::roomspec::{BoundaryOverride, RoomSpec, RoomType, SpecNode};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GenParams {
    /// Smallest boundary side.
    pub l_min: u32,
    /// Mean boundary side per sqrt(room).
    pub mu_a: f64,
    /// Largest cut area.
    pub a_max: u32,
    /// Second Beta parameter of the cut count.
    pub beta_c: f64,
    pub scale_min: f64,
    pub scale_max: f64,
    /// Smallest room, in cells.
    pub min_room_cells: usize,
    /// Split attempts per zone before giving up.
    pub subdivide_attempts: u32,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            l_min: 2,
            mu_a: 3.0,
            a_max: 6,
            beta_c: 6.0,
            scale_min: 1.6,
            scale_max: 2.2,
            min_room_cells: 4,
            subdivide_attempts: 20,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutStats {
    pub requested: u32,
    pub applied: u32,
    pub skipped: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InteriorBoundary {
    pub x_size: usize,
    pub z_size: usize,
    cells: Vec<bool>,
    pub cuts: CutStats,
}

impl InteriorBoundary {
    pub fn full(x_size: usize, z_size: usize) -> Self {
        assert!(x_size > 0 && z_size > 0, "boundary must be nonempty");
        InteriorBoundary { x_size, z_size, cells: vec![true; x_size * z_size], cuts: CutStats::default() }
    }

    pub fn index(&self, x: usize, z: usize) -> usize {
        z * self.x_size + x
    }

    pub fn coords(&self, i: usize) -> (usize, usize) {
        (i % self.x_size, i / self.x_size)
    }

    pub fn inside(&self, x: i64, z: i64) -> bool {
        x >= 0 && z >= 0 && (x as usize) < self.x_size && (z as usize) < self.z_size && self.cells[self.index(x as usize, z as usize)]
    }

    pub fn set(&mut self, x: usize, z: usize, v: bool) {
        let i = self.index(x, z);
        self.cells[i] = v;
    }

    pub fn inside_count(&self) -> usize {
        self.cells.iter().filter(|c| **c).count()
    }

    pub fn inside_cells(&self) -> Vec<usize> {
        (0..self.cells.len()).filter(|i| self.cells[*i]).collect()
    }

    pub fn is_full(&self) -> bool {
        self.cells.iter().all(|c| *c)
    }

    pub fn is_connected(&self) -> bool {
        let cells = self.inside_cells();
        !cells.is_empty() && component_size(self.x_size, self.z_size, &|i| self.cells[i], cells[0]) == cells.len()
    }
}

fn neighbors(x_size: usize, z_size: usize, i: usize) -> impl Iterator<Item = usize> {
    let (x, z) = ((i % x_size) as i64, (i / x_size) as i64);
    [(1, 0), (-1, 0), (0, 1), (0, -1)].into_iter().filter_map(move |(dx, dz)| {
        let (nx, nz) = (x + dx, z + dz);
        (nx >= 0 && nz >= 0 && (nx as usize) < x_size && (nz as usize) < z_size).then(|| nz as usize * x_size + nx as usize)
    })
}

fn component_size(x_size: usize, z_size: usize, member: &dyn Fn(usize) -> bool, start: usize) -> usize {
    let mut seen = vec![false; x_size * z_size];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    let mut n = 0;
    while let Some(i) = queue.pop_front() {
        n += 1;
        for j in neighbors(x_size, z_size, i) {
            if !seen[j] && member(j) {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    n
}

/// Inclusive integer support of the boundary side distribution, bounds
/// rounded inward.
pub fn boundary_support(n_r: usize, params: &GenParams) -> (u32, u32) {
    assert!(n_r >= 1, "room count must be positive");
    let c = params.mu_a * (n_r as f64).sqrt();
    let lo = (params.l_min as f64).max(c - params.mu_a / 2.0).ceil() as u32;
    let hi = (c + params.mu_a / 2.0).floor() as u32;
    (lo, hi.max(lo))
}

pub fn sample_boundary<R: Rng + ?Sized>(
    n_r: usize,
    params: &GenParams,
    over: Option<&BoundaryOverride>,
    rng: &mut R,
) -> InteriorBoundary {
    let (lo, hi) = boundary_support(n_r, params);
    let (xr, zr) = over.map_or(((lo, hi), (lo, hi)), |o| (o.x_size, o.z_size));
    let xs = rng.random_range(xr.0..=xr.1.max(xr.0));
    let zs = rng.random_range(zr.0..=zr.1.max(zr.0));
    InteriorBoundary::full(xs.max(1) as usize, zs.max(1) as usize)
}

/// `n_c = floor(10 * Beta(n_r / 2, beta_c) + 1/2)`.
pub fn sample_cut_count<R: Rng + ?Sized>(n_r: usize, params: &GenParams, rng: &mut R) -> u32 {
    let beta = Beta::new(n_r as f64 / 2.0, params.beta_c).expect("positive Beta parameters");
    (10.0 * beta.sample(rng) + 0.5).floor() as u32
}

/// Cut size `(c_x, c_z)` for a boundary `x_size` cells wide.
pub fn sample_cut_size<R: Rng + ?Sized>(x_size: usize, params: &GenParams, rng: &mut R) -> (u32, u32) {
    let cap = (x_size as i64 - 1).min((params.a_max / 2) as i64) - 1;
    let cx = rng.random_range(1..=cap.max(2) as u32);
    let cz = rng.random_range(1..=(params.a_max.saturating_sub(cx)).max(1));
    (cx, cz)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corner {
    SouthWest,
    SouthEast,
    NorthWest,
    NorthEast,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::SouthWest, Corner::SouthEast, Corner::NorthWest, Corner::NorthEast];
}

/// Remove a `cx` x `cz` rectangle anchored at `corner`. Returns false (and
/// leaves the boundary untouched) when the result would be disconnected or
/// smaller than `min_cells`.
pub fn cut_corner(b: &mut InteriorBoundary, corner: Corner, cx: usize, cz: usize, min_cells: usize) -> bool {
    let cx = cx.min(b.x_size);
    let cz = cz.min(b.z_size);
    let xs: Vec<usize> = match corner {
        Corner::SouthWest | Corner::NorthWest => (0..cx).collect(),
        _ => (b.x_size - cx..b.x_size).collect(),
    };
    let zs: Vec<usize> = match corner {
        Corner::SouthWest | Corner::SouthEast => (0..cz).collect(),
        _ => (b.z_size - cz..b.z_size).collect(),
    };
    let mut next = b.clone();
    for &x in &xs {
        for &z in &zs {
            next.set(x, z, false);
        }
    }
    let n = next.inside_count();
    if n == 0 || n < min_cells || !next.is_connected() {
        return false;
    }
    b.cells = next.cells;
    true
}

pub fn apply_cuts<R: Rng + ?Sized>(boundary: &InteriorBoundary, n_r: usize, params: &GenParams, rng: &mut R) -> InteriorBoundary {
    let mut b = boundary.clone();
    let n_c = sample_cut_count(n_r, params, rng);
    let min_cells = n_r * params.min_room_cells;
    b.cuts.requested += n_c;
    for _ in 0..n_c {
        let (cx, cz) = sample_cut_size(b.x_size, params, rng);
        let corner = Corner::ALL[rng.random_range(0..4)];
        if cut_corner(&mut b, corner, cx as usize, cz as usize, min_cells) {
            b.cuts.applied += 1;
        } else {
            b.cuts.skipped += 1;
        }
    }
    b
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlanRoom {
    /// Leaf index in pre-order; also the room's position in `FloorPlan::rooms`.
    pub index: usize,
    pub room_type: RoomType,
    /// Cell indices into the boundary grid, ascending.
    pub cells: Vec<usize>,
    /// Grid-vertex polygon, counter-clockwise, collinear vertices merged.
    pub outline: Vec<(i64, i64)>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct PlanDiagnostics {
    /// Zones whose child areas strayed from the growth weights by more than 2x.
    pub weight_ratio_violations: u32,
    pub split_retries: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FloorPlan {
    pub boundary: InteriorBoundary,
    /// Room index per boundary cell; `None` outside.
    pub owner: Vec<Option<usize>>,
    pub rooms: Vec<PlanRoom>,
    /// Meters per cell.
    pub scale: f64,
    pub diagnostics: PlanDiagnostics,
}

/// A straight stretch of one room's boundary with a single neighbor, oriented
/// so the room is on the left.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WallSegment {
    pub room: usize,
    /// `None` for the outside of the house.
    pub neighbor: Option<usize>,
    pub from: Vec2,
    pub to: Vec2,
}

impl WallSegment {
    pub fn length(&self) -> f64 {
        self.from.dist(self.to)
    }

    pub fn direction(&self) -> Vec2 {
        self.to.sub(self.from).scale(1.0 / self.length())
    }

    /// Unit normal pointing into the room.
    pub fn inward_normal(&self) -> Vec2 {
        self.direction().left_normal()
    }

    pub fn point_at(&self, t: f64) -> Vec2 {
        self.from.add(self.direction().scale(t))
    }

    pub fn is_exterior(&self) -> bool {
        self.neighbor.is_none()
    }
}

/// Directed unit boundary edge of a cell set: from grid vertex, to grid
/// vertex, and the owner of the cell on the right (outside) side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct UnitEdge {
    from: (i64, i64),
    to: (i64, i64),
    outside: (i64, i64),
}

fn unit_edges(x_size: usize, z_size: usize, member: &dyn Fn(i64, i64) -> bool) -> Vec<UnitEdge> {
    let mut out = Vec::new();
    for z in 0..z_size as i64 {
        for x in 0..x_size as i64 {
            if !member(x, z) {
                continue;
            }
            if !member(x, z - 1) {
                out.push(UnitEdge { from: (x, z), to: (x + 1, z), outside: (x, z - 1) });
            }
            if !member(x + 1, z) {
                out.push(UnitEdge { from: (x + 1, z), to: (x + 1, z + 1), outside: (x + 1, z) });
            }
            if !member(x, z + 1) {
                out.push(UnitEdge { from: (x + 1, z + 1), to: (x, z + 1), outside: (x, z + 1) });
            }
            if !member(x - 1, z) {
                out.push(UnitEdge { from: (x, z + 1), to: (x, z), outside: (x - 1, z) });
            }
        }
    }
    out
}

/// Boundary loops of a cell set as ordered unit edges. `None` when a vertex
/// is shared diagonally (the outline would not be a simple polygon).
fn trace_loops(x_size: usize, z_size: usize, member: &dyn Fn(i64, i64) -> bool) -> Option<Vec<Vec<UnitEdge>>> {
    let edges = unit_edges(x_size, z_size, member);
    let mut by_start: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for (i, e) in edges.iter().enumerate() {
        if by_start.insert(e.from, i).is_some() {
            return None;
        }
    }
    let mut used = vec![false; edges.len()];
    let mut loops = Vec::new();
    for start in 0..edges.len() {
        if used[start] {
            continue;
        }
        let mut lp = Vec::new();
        let mut cur = start;
        while !used[cur] {
            used[cur] = true;
            lp.push(edges[cur]);
            cur = by_start[&edges[cur].to];
        }
        loops.push(lp);
    }
    Some(loops)
}

fn dir(e: &UnitEdge) -> (i64, i64) {
    (e.to.0 - e.from.0, e.to.1 - e.from.1)
}

/// Group consecutive edges of a loop by `key`, returning (from, to, key) runs.
/// The loop is rotated so no run straddles the start.
fn runs<K: PartialEq + Copy>(lp: &[UnitEdge], key: impl Fn(&UnitEdge) -> K) -> Vec<((i64, i64), (i64, i64), K)> {
    let n = lp.len();
    let start = (0..n).find(|&i| key(&lp[i]) != key(&lp[(i + n - 1) % n])).unwrap_or(0);
    let mut out: Vec<((i64, i64), (i64, i64), K)> = Vec::new();
    for k in 0..n {
        let e = &lp[(start + k) % n];
        match out.last_mut() {
            Some(last) if last.2 == key(e) => last.1 = e.to,
            _ => out.push((e.from, e.to, key(e))),
        }
    }
    out
}

fn outline_of(x_size: usize, z_size: usize, member: &dyn Fn(i64, i64) -> bool) -> Option<Vec<(i64, i64)>> {
    let loops = trace_loops(x_size, z_size, member)?;
    if loops.len() != 1 {
        return None;
    }
    Some(runs(&loops[0], dir).into_iter().map(|r| r.0).collect())
}

impl FloorPlan {
    fn owner_at(&self, x: i64, z: i64) -> Option<usize> {
        if x < 0 || z < 0 || x as usize >= self.boundary.x_size || z as usize >= self.boundary.z_size {
            return None;
        }
        self.owner[self.boundary.index(x as usize, z as usize)]
    }

    fn to_m(&self, p: (i64, i64)) -> Vec2 {
        Vec2::new(p.0 as f64 * self.scale, p.1 as f64 * self.scale)
    }

    /// Room floor polygon in meters, counter-clockwise.
    pub fn room_polygon(&self, room: usize) -> Vec<Vec2> {
        self.rooms[room].outline.iter().map(|p| self.to_m(*p)).collect()
    }

    pub fn room_area(&self, room: usize) -> f64 {
        polygon_area(&self.room_polygon(room))
    }

    pub fn inside_area(&self) -> f64 {
        self.boundary.inside_count() as f64 * self.scale * self.scale
    }

    /// Outline of the whole house in meters.
    pub fn house_outline(&self) -> Vec<Vec2> {
        let b = &self.boundary;
        outline_of(b.x_size, b.z_size, &|x, z| b.inside(x, z))
            .unwrap_or_default()
            .into_iter()
            .map(|p| self.to_m(p))
            .collect()
    }

    /// Every room's walls, rooms in index order, each room counter-clockwise.
    pub fn walls(&self) -> Vec<WallSegment> {
        let b = &self.boundary;
        let mut out = Vec::new();
        for room in &self.rooms {
            let member = |x: i64, z: i64| self.owner_at(x, z) == Some(room.index);
            let loops = trace_loops(b.x_size, b.z_size, &member).expect("rooms are simple");
            for (from, to, (_, nb)) in runs(&loops[0], |e| (dir(e), self.owner_at(e.outside.0, e.outside.1))) {
                out.push(WallSegment { room: room.index, neighbor: nb, from: self.to_m(from), to: self.to_m(to) });
            }
        }
        out
    }

    /// Walls of `a` that face room `b`.
    pub fn shared_walls(&self, a: usize, b: usize) -> Vec<WallSegment> {
        self.walls().into_iter().filter(|w| w.room == a && w.neighbor == Some(b)).collect()
    }

    /// Length of the longest straight wall shared by two rooms (0 if none).
    pub fn longest_shared_wall(&self, a: usize, b: usize) -> f64 {
        self.shared_walls(a, b).iter().map(WallSegment::length).fold(0.0, f64::max)
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.rooms[a].cells.iter().any(|&i| {
            neighbors(self.boundary.x_size, self.boundary.z_size, i).any(|j| self.owner[j] == Some(b))
        })
    }

    /// Partition check: rooms are disjoint, cover every inside cell, and
    /// each is 4-connected.
    pub fn check_partition(&self) -> std::result::Result<(), String> {
        let b = &self.boundary;
        let mut count = vec![0usize; b.x_size * b.z_size];
        for r in &self.rooms {
            for &c in &r.cells {
                count[c] += 1;
                if self.owner[c] != Some(r.index) {
                    return Err(format!("cell {c} owner mismatch"));
                }
            }
            if r.cells.is_empty() {
                return Err(format!("room {} empty", r.index));
            }
            let member = |i: usize| self.owner[i] == Some(r.index);
            if component_size(b.x_size, b.z_size, &member, r.cells[0]) != r.cells.len() {
                return Err(format!("room {} not connected", r.index));
            }
        }
        for i in 0..count.len() {
            let inside = b.cells[i];
            if inside != (count[i] == 1) || count[i] > 1 {
                return Err(format!("cell {i} covered {} times", count[i]));
            }
        }
        Ok(())
    }
}

struct Grower<'a> {
    x_size: usize,
    z_size: usize,
    region: &'a [bool],
    claimed: Vec<Option<usize>>,
}

impl Grower<'_> {
    fn free(&self, x: i64, z: i64) -> bool {
        if x < 0 || z < 0 || x as usize >= self.x_size || z as usize >= self.z_size {
            return false;
        }
        let i = z as usize * self.x_size + x as usize;
        self.region[i] && self.claimed[i].is_none()
    }

    /// Cells of the strip just outside rectangle `r` in direction `d`, if all
    /// of them are free.
    fn rect_strip(&self, r: (i64, i64, i64, i64), d: usize) -> Option<Vec<(i64, i64)>> {
        let (x0, z0, x1, z1) = r;
        let cells: Vec<(i64, i64)> = match d {
            0 => (z0..=z1).map(|z| (x1 + 1, z)).collect(),
            1 => (z0..=z1).map(|z| (x0 - 1, z)).collect(),
            2 => (x0..=x1).map(|x| (x, z1 + 1)).collect(),
            _ => (x0..=x1).map(|x| (x, z0 - 1)).collect(),
        };
        cells.iter().all(|&(x, z)| self.free(x, z)).then_some(cells)
    }

    /// Longest contiguous run of free cells adjacent to `room` in direction `d`.
    fn l_strip(&self, room: usize, d: usize) -> Vec<(i64, i64)> {
        let (dx, dz) = [(1, 0), (-1, 0), (0, 1), (0, -1)][d];
        let mut cand: Vec<(i64, i64)> = Vec::new();
        for i in 0..self.claimed.len() {
            if self.claimed[i] == Some(room) {
                let (x, z) = ((i % self.x_size) as i64 + dx, (i / self.x_size) as i64 + dz);
                if self.free(x, z) {
                    cand.push((x, z));
                }
            }
        }
        // group by the coordinate along d, runs along the perpendicular axis
        let key = |c: &(i64, i64)| if dx != 0 { (c.0, c.1) } else { (c.1, c.0) };
        cand.sort_by_key(key);
        cand.dedup();
        let mut best: Vec<(i64, i64)> = Vec::new();
        let mut cur: Vec<(i64, i64)> = Vec::new();
        for c in cand {
            let contiguous = cur.last().is_some_and(|p| {
                let (pk, ck) = (key(p), key(&c));
                pk.0 == ck.0 && pk.1 + 1 == ck.1
            });
            if !contiguous {
                if cur.len() > best.len() {
                    best = std::mem::take(&mut cur);
                }
                cur.clear();
            }
            cur.push(c);
        }
        if cur.len() > best.len() {
            best = cur;
        }
        best
    }

    fn claim(&mut self, cells: &[(i64, i64)], room: usize) {
        for &(x, z) in cells {
            self.claimed[z as usize * self.x_size + x as usize] = Some(room);
        }
    }
}

/// Farthest-point seeds: the first uniformly, then each the cell farthest
/// from those already chosen (ties uniform).
fn pick_seeds<R: Rng + ?Sized>(cells: &[usize], x_size: usize, k: usize, rng: &mut R) -> Vec<usize> {
    let mut seeds = vec![cells[rng.random_range(0..cells.len())]];
    while seeds.len() < k {
        let d = |c: usize| {
            let (x, z) = ((c % x_size) as f64, (c / x_size) as f64);
            seeds
                .iter()
                .map(|&s| ((s % x_size) as f64 - x).hypot((s / x_size) as f64 - z))
                .fold(f64::MAX, f64::min)
        };
        let best = cells.iter().map(|&c| d(c)).fold(f64::MIN, f64::max);
        let ties: Vec<usize> = cells.iter().copied().filter(|&c| !seeds.contains(&c) && (d(c) - best).abs() < 1e-9).collect();
        seeds.push(ties[rng.random_range(0..ties.len())]);
    }
    seeds
}

/// Split a connected region among children with the given growth weights.
fn grow_region<R: Rng + ?Sized>(
    x_size: usize,
    z_size: usize,
    region_cells: &[usize],
    weights: &[f64],
    rng: &mut R,
) -> Vec<Vec<usize>> {
    let k = weights.len();
    let mut region = vec![false; x_size * z_size];
    for &c in region_cells {
        region[c] = true;
    }
    let mut g = Grower { x_size, z_size, region: &region, claimed: vec![None; x_size * z_size] };
    let mut seeds = pick_seeds(region_cells, x_size, k, rng);
    seeds.shuffle(rng);
    let total: f64 = weights.iter().sum();
    let target: Vec<f64> = weights.iter().map(|w| w / total * region_cells.len() as f64).collect();
    let mut size = vec![1usize; k];
    let mut rects: Vec<(i64, i64, i64, i64)> = Vec::with_capacity(k);
    for (i, &s) in seeds.iter().enumerate() {
        let (x, z) = ((s % x_size) as i64, (s / x_size) as i64);
        g.claim(&[(x, z)], i);
        rects.push((x, z, x, z));
    }

    // rectangular growth up to each target
    let mut active = vec![true; k];
    loop {
        let w: Vec<f64> = (0..k).map(|i| if active[i] && (size[i] as f64) < target[i] { weights[i] } else { 0.0 }).collect();
        let Some(i) = choose_weighted(rng, &w) else { break };
        let dirs: Vec<(usize, Vec<(i64, i64)>)> = (0..4).filter_map(|d| g.rect_strip(rects[i], d).map(|s| (d, s))).collect();
        if dirs.is_empty() {
            active[i] = false;
            continue;
        }
        let (d, strip) = &dirs[rng.random_range(0..dirs.len())];
        g.claim(strip, i);
        size[i] += strip.len();
        let r = &mut rects[i];
        match d {
            0 => r.2 += 1,
            1 => r.0 -= 1,
            2 => r.3 += 1,
            _ => r.1 -= 1,
        }
    }

    // L-shaped growth: rooms under target first, then anyone
    let mut active = vec![true; k];
    loop {
        let under: Vec<f64> = (0..k).map(|i| if active[i] && (size[i] as f64) < target[i] { weights[i] } else { 0.0 }).collect();
        let pick = choose_weighted(rng, &under)
            .or_else(|| choose_weighted(rng, &(0..k).map(|i| if active[i] { weights[i] } else { 0.0 }).collect::<Vec<_>>()));
        let Some(i) = pick else { break };
        let strips: Vec<Vec<(i64, i64)>> = (0..4).map(|d| g.l_strip(i, d)).filter(|s| !s.is_empty()).collect();
        if strips.is_empty() {
            active[i] = false;
            continue;
        }
        let strip = &strips[rng.random_range(0..strips.len())];
        g.claim(strip, i);
        size[i] += strip.len();
    }

    // leftover pockets join the smallest adjacent child
    for &c in region_cells {
        if g.claimed[c].is_some() {
            continue;
        }
        let mut pocket = vec![c];
        let mut queue = VecDeque::from([c]);
        let mut seen = vec![false; x_size * z_size];
        seen[c] = true;
        let mut adjacent: Vec<usize> = Vec::new();
        while let Some(p) = queue.pop_front() {
            for q in neighbors(x_size, z_size, p) {
                if !region[q] {
                    continue;
                }
                match g.claimed[q] {
                    Some(o) => adjacent.push(o),
                    None if !seen[q] => {
                        seen[q] = true;
                        pocket.push(q);
                        queue.push_back(q);
                    }
                    None => {}
                }
            }
        }
        if let Some(&o) = adjacent.iter().min_by_key(|&&o| (size[o], o)) {
            for &p in &pocket {
                g.claimed[p] = Some(o);
            }
            size[o] += pocket.len();
        }
    }

    let mut out = vec![Vec::new(); k];
    for &c in region_cells {
        if let Some(o) = g.claimed[c] {
            out[o].push(c);
        }
    }
    out
}

struct Subdivider<'a, R: Rng + ?Sized> {
    boundary: &'a InteriorBoundary,
    params: &'a GenParams,
    rng: &'a mut R,
    owner: Vec<Option<usize>>,
    diagnostics: PlanDiagnostics,
}

impl<R: Rng + ?Sized> Subdivider<'_, R> {
    fn simple(&self, cells: &[usize]) -> bool {
        let b = self.boundary;
        let mut set = vec![false; b.x_size * b.z_size];
        for &c in cells {
            set[c] = true;
        }
        let member = |x: i64, z: i64| {
            x >= 0 && z >= 0 && (x as usize) < b.x_size && (z as usize) < b.z_size && set[z as usize * b.x_size + x as usize]
        };
        outline_of(b.x_size, b.z_size, &member).is_some()
    }

    /// Assign `cells` to the leaves under `node`; `next_leaf` is the
    /// pre-order index of the first leaf below it.
    fn split(&mut self, node: &SpecNode, cells: &[usize], next_leaf: usize) -> bool {
        if node.is_leaf() {
            if !self.simple(cells) {
                return false;
            }
            for &c in cells {
                self.owner[c] = Some(next_leaf);
            }
            return true;
        }
        let weights: Vec<f64> = node.children.iter().map(|c| c.growth_weight).collect();
        let needed: Vec<usize> = node.children.iter().map(|c| c.leaf_count() * self.params.min_room_cells).collect();
        if cells.len() < needed.iter().sum() {
            return false;
        }
        let (xs, zs) = (self.boundary.x_size, self.boundary.z_size);
        for attempt in 0..self.params.subdivide_attempts {
            if attempt > 0 {
                self.diagnostics.split_retries += 1;
            }
            let parts = grow_region(xs, zs, cells, &weights, self.rng);
            if parts.iter().zip(&needed).any(|(p, n)| p.len() < *n) {
                continue;
            }
            let saved = self.owner.clone();
            let mut leaf = next_leaf;
            let mut ok = true;
            for (child, part) in node.children.iter().zip(&parts) {
                if !self.split(child, part, leaf) {
                    ok = false;
                    break;
                }
                leaf += child.leaf_count();
            }
            if ok {
                let total: f64 = weights.iter().sum();
                let n = cells.len() as f64;
                if parts.iter().zip(&weights).any(|(p, w)| {
                    let r = p.len() as f64 / (w / total * n);
                    !(0.5..=2.0).contains(&r)
                }) {
                    self.diagnostics.weight_ratio_violations += 1;
                }
                return true;
            }
            self.owner = saved;
        }
        false
    }
}

/// Partition the inside cells into one connected, simply shaped room per
/// spec leaf.
pub fn subdivide<R: Rng + ?Sized>(
    boundary: &InteriorBoundary,
    spec: &RoomSpec,
    params: &GenParams,
    rng: &mut R,
) -> Result<FloorPlan> {
    let leaves = spec.leaves();
    let cells = boundary.inside_cells();
    if cells.len() < leaves.len() * params.min_room_cells {
        return Err(Error::SubdivisionFailure(format!(
            "{} inside cells for {} rooms of at least {} cells",
            cells.len(),
            leaves.len(),
            params.min_room_cells
        )));
    }
    if !boundary.is_connected() {
        return Err(Error::SubdivisionFailure("boundary is not connected".into()));
    }
    let mut s = Subdivider {
        boundary,
        params,
        rng,
        owner: vec![None; boundary.x_size * boundary.z_size],
        diagnostics: PlanDiagnostics::default(),
    };
    if !s.split(&spec.root, &cells, 0) {
        return Err(Error::SubdivisionFailure(format!("spec {} did not fit after retries", spec.id)));
    }
    let owner = s.owner;
    let diagnostics = s.diagnostics;
    let b = boundary;
    let rooms = leaves
        .iter()
        .map(|leaf| {
            let cells: Vec<usize> = (0..owner.len()).filter(|&i| owner[i] == Some(leaf.index)).collect();
            let member = |x: i64, z: i64| {
                x >= 0 && z >= 0 && (x as usize) < b.x_size && (z as usize) < b.z_size && owner[b.index(x as usize, z as usize)] == Some(leaf.index)
            };
            let outline = outline_of(b.x_size, b.z_size, &member).expect("checked simple");
            PlanRoom { index: leaf.index, room_type: leaf.room_type, cells, outline }
        })
        .collect();
    Ok(FloorPlan { boundary: boundary.clone(), owner, rooms, scale: 1.0, diagnostics })
}

pub fn sample_scale<R: Rng + ?Sized>(params: &GenParams, rng: &mut R) -> f64 {
    rng.random_range(params.scale_min..params.scale_max)
}

pub fn scale_plan<R: Rng + ?Sized>(plan: &FloorPlan, params: &GenParams, rng: &mut R) -> FloorPlan {
    with_scale(plan, sample_scale(params, rng))
}

pub fn with_scale(plan: &FloorPlan, scale: f64) -> FloorPlan {
    FloorPlan { scale, ..plan.clone() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::HouseRng;
    use rand::SeedableRng;

    fn rng(s: u64) -> HouseRng {
        HouseRng::seed_from_u64(s)
    }

    #[test]
    fn support_rounds_inward() {
        let p = GenParams::default();
        assert_eq!(boundary_support(1, &p), (2, 4));
        assert_eq!(boundary_support(4, &p), (5, 7));
        for n in 1..=10 {
            let (lo, hi) = boundary_support(n, &p);
            assert!(lo >= 2 && lo <= hi);
        }
    }

    #[test]
    fn boundary_within_support() {
        let p = GenParams::default();
        let mut r = rng(1);
        let mut seen = std::collections::BTreeSet::new();
        for _ in 0..2000 {
            let b = sample_boundary(1, &p, None, &mut r);
            seen.insert(b.x_size);
            assert!((2..=4).contains(&b.x_size) && (2..=4).contains(&b.z_size));
        }
        assert_eq!(seen.into_iter().collect::<Vec<_>>(), vec![2, 3, 4]);
    }

    #[test]
    fn override_bounds() {
        let p = GenParams::default();
        let o = BoundaryOverride { x_size: (9, 9), z_size: (3, 4) };
        let b = sample_boundary(2, &p, Some(&o), &mut rng(2));
        assert_eq!(b.x_size, 9);
        assert!((3..=4).contains(&b.z_size));
    }

    #[test]
    fn single_ne_cut() {
        let mut b = InteriorBoundary::full(5, 5);
        assert!(cut_corner(&mut b, Corner::NorthEast, 1, 1, 4));
        assert_eq!(b.inside_count(), 24);
        assert!(!b.inside(4, 4));
        assert!(b.inside(3, 4) && b.inside(4, 3));
    }

    #[test]
    fn disconnecting_cut_skipped() {
        let mut b = InteriorBoundary::full(2, 2);
        assert!(cut_corner(&mut b, Corner::SouthWest, 1, 1, 1));
        let before = b.clone();
        // would leave (1,0) and (0,1) touching only diagonally
        assert!(!cut_corner(&mut b, Corner::NorthEast, 1, 1, 1));
        assert_eq!(b, before);
        // shrinking below the minimum is refused too
        assert!(!cut_corner(&mut b, Corner::SouthEast, 1, 1, 3));
        assert_eq!(b, before);
    }

    #[test]
    fn cut_count_range() {
        let p = GenParams::default();
        let mut r = rng(3);
        for n in 1..=12 {
            for _ in 0..500 {
                assert!(sample_cut_count(n, &p, &mut r) <= 10);
            }
        }
    }

    #[test]
    fn cut_sizes() {
        let p = GenParams::default();
        let mut r = rng(4);
        for _ in 0..1000 {
            let (cx, cz) = sample_cut_size(6, &p, &mut r);
            assert!((1..=2).contains(&cx));
            assert!(cz >= 1 && cx + cz <= 6);
        }
    }

    fn spec(root: SpecNode) -> RoomSpec {
        RoomSpec::new("t", 1.0, root).unwrap()
    }

    #[test]
    fn one_leaf_takes_everything() {
        let b = apply_cuts(&InteriorBoundary::full(5, 4), 1, &GenParams::default(), &mut rng(5));
        let plan = subdivide(&b, &spec(SpecNode::room(RoomType::Bathroom, 1.0)), &GenParams::default(), &mut rng(6)).unwrap();
        assert_eq!(plan.rooms.len(), 1);
        assert_eq!(plan.rooms[0].cells.len(), b.inside_count());
        plan.check_partition().unwrap();
    }

    fn four_room() -> RoomSpec {
        spec(SpecNode::zone(
            vec![
                SpecNode::zone(vec![SpecNode::room(RoomType::Bedroom, 2.0), SpecNode::room(RoomType::Bathroom, 1.0).avoiding_parent()], 1.0),
                SpecNode::zone(vec![SpecNode::room(RoomType::Kitchen, 1.0), SpecNode::room(RoomType::LivingRoom, 2.0)], 1.0),
            ],
            1.0,
        ))
    }

    #[test]
    fn four_rooms_partition_six_by_six() {
        let p = GenParams::default();
        for s in 0..200 {
            let plan = subdivide(&InteriorBoundary::full(6, 6), &four_room(), &p, &mut rng(s)).unwrap();
            assert_eq!(plan.rooms.len(), 4);
            plan.check_partition().unwrap();
            assert_eq!(plan.rooms.iter().map(|r| r.cells.len()).sum::<usize>(), 36);
            let types: Vec<_> = plan.rooms.iter().map(|r| r.room_type).collect();
            assert_eq!(types, vec![RoomType::Bedroom, RoomType::Bathroom, RoomType::Kitchen, RoomType::LivingRoom]);
            let area: f64 = (0..4).map(|i| plan.room_area(i)).sum();
            assert!((area - 36.0).abs() < 1e-9);
        }
    }

    #[test]
    fn equal_weights_balance() {
        let p = GenParams::default();
        let two = spec(SpecNode::zone(vec![SpecNode::room(RoomType::Bedroom, 1.0), SpecNode::room(RoomType::Kitchen, 1.0)], 1.0));
        let mut ratio = 0.0;
        let n = 2000;
        for s in 0..n {
            let plan = subdivide(&InteriorBoundary::full(6, 6), &two, &p, &mut rng(s)).unwrap();
            ratio += plan.rooms[0].cells.len() as f64 / plan.rooms[1].cells.len() as f64;
        }
        let mean = ratio / n as f64;
        assert!((0.8..=1.25).contains(&mean), "mean ratio {mean}");
    }

    #[test]
    fn walls_cover_each_room_outline() {
        let plan = with_scale(&subdivide(&InteriorBoundary::full(6, 6), &four_room(), &GenParams::default(), &mut rng(11)).unwrap(), 2.0);
        let walls = plan.walls();
        for r in 0..4 {
            let perim: f64 = walls.iter().filter(|w| w.room == r).map(WallSegment::length).sum();
            let poly = plan.room_polygon(r);
            let expect: f64 = (0..poly.len()).map(|i| poly[i].dist(poly[(i + 1) % poly.len()])).sum();
            assert!((perim - expect).abs() < 1e-9);
        }
        let exterior: f64 = walls.iter().filter(|w| w.is_exterior()).map(WallSegment::length).sum();
        assert!((exterior - 48.0).abs() < 1e-9);
        // shared walls come in mirrored pairs
        for w in walls.iter().filter(|w| !w.is_exterior()) {
            assert!(walls.iter().any(|o| o.room == w.neighbor.unwrap() && o.from.approx_eq(w.to) && o.to.approx_eq(w.from)));
        }
    }

    #[test]
    fn inward_normal_points_inside() {
        let plan = subdivide(&InteriorBoundary::full(3, 3), &spec(SpecNode::room(RoomType::Kitchen, 1.0)), &GenParams::default(), &mut rng(1)).unwrap();
        let poly = plan.room_polygon(0);
        for w in plan.walls() {
            let mid = w.point_at(w.length() / 2.0).add(w.inward_normal().scale(0.1));
            assert!(crate::geom::point_in_polygon(mid, &poly));
        }
    }

    #[test]
    fn scaling() {
        let plan = subdivide(&InteriorBoundary::full(6, 6), &four_room(), &GenParams::default(), &mut rng(3)).unwrap();
        let s = with_scale(&plan, 2.0);
        let outline = s.house_outline();
        let xmax = outline.iter().map(|p| p.x).fold(0.0, f64::max);
        let zmax = outline.iter().map(|p| p.z).fold(0.0, f64::max);
        assert_eq!((xmax, zmax), (12.0, 12.0));
        for r in 0..4 {
            assert!((s.room_area(r) / s.inside_area() - plan.room_area(r) / plan.inside_area()).abs() < 1e-12);
        }
    }

    #[test]
    fn scale_mean() {
        let p = GenParams::default();
        let mut r = rng(8);
        let n = 100_000;
        let mut sum = 0.0;
        for _ in 0..n {
            let s = sample_scale(&p, &mut r);
            assert!((1.6..2.2).contains(&s));
            sum += s;
        }
        assert!((sum / n as f64 - 1.9).abs() < 0.005);
    }

    #[test]
    fn determinism() {
        let p = GenParams::default();
        let a = subdivide(&InteriorBoundary::full(7, 6), &four_room(), &p, &mut rng(42)).unwrap();
        let b = subdivide(&InteriorBoundary::full(7, 6), &four_room(), &p, &mut rng(42)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn too_small_fails() {
        let r = subdivide(&InteriorBoundary::full(3, 2), &four_room(), &GenParams::default(), &mut rng(1));
        assert!(matches!(r, Err(Error::SubdivisionFailure(_))));
    }
}
