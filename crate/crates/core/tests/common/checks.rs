//! Invariant checks over emitted houses; each returns the violations found.

use std::collections::BTreeMap;

use prochouse::catalog::Placement;
use prochouse::connectivity::OPEN_WALL_CLEARANCE;
use prochouse::geom::{distance_to_boundary, facing, polygon_area, rect_in_polygon, Rect, Vec2};
use prochouse::house::{House, Object, PlacementKind, Wall};
use prochouse::layout::FloorPlan;

const TOL: f64 = 1e-5;

fn overlap_area(a: &Rect, b: &Rect) -> f64 {
    a.intersection(b).map_or(0.0, |r| r.area())
}

fn side_rect(w: &Wall, s: f64, e: f64, depth: f64, inward: bool) -> Rect {
    let n = if inward { w.inward_normal() } else { w.inward_normal().scale(-1.0) };
    let pts = [w.point_at(s), w.point_at(e), w.point_at(s).add(n.scale(depth)), w.point_at(e).add(n.scale(depth))];
    let mut r = Rect::new(pts[0], pts[0]);
    for p in &pts[1..] {
        r = r.union(&Rect::new(*p, *p));
    }
    r
}

/// Keep-clear zones in front of every opening, tagged with the room they lie in.
pub fn clearances(h: &House) -> Vec<(String, Rect)> {
    let mut out = Vec::new();
    for d in &h.doors {
        let w = h.wall(&d.wall_id).expect("door wall");
        out.push((d.room_id.clone(), side_rect(w, d.offset, d.offset + d.width, d.width, true)));
        if let Some(n) = &d.neighbor_id {
            out.push((n.clone(), side_rect(w, d.offset, d.offset + d.width, d.width, false)));
        }
    }
    for o in &h.open_walls {
        let w = h.wall(&o.wall_id).expect("open wall");
        out.push((o.room_id.clone(), side_rect(w, o.offset, o.offset + o.width, OPEN_WALL_CLEARANCE, true)));
        out.push((o.neighbor_id.clone(), side_rect(w, o.offset, o.offset + o.width, OPEN_WALL_CLEARANCE, false)));
    }
    out
}

/// Rooms partition the scaled boundary: the plan's cells are covered once
/// and the emitted polygons are the plan's, with matching total area.
pub fn partition(h: &House, plan: &FloorPlan) -> Vec<String> {
    let mut v = Vec::new();
    if let Err(e) = plan.check_partition() {
        v.push(format!("plan partition: {e}"));
    }
    if plan.rooms.len() != h.rooms.len() {
        v.push(format!("{} rooms emitted for {} planned", h.rooms.len(), plan.rooms.len()));
        return v;
    }
    for (i, r) in h.rooms.iter().enumerate() {
        let p = plan.room_polygon(i);
        if p.len() != r.floor_polygon.len() || p.iter().zip(&r.floor_polygon).any(|(a, b)| a.dist(*b) > TOL) {
            v.push(format!("{} polygon differs from the plan", r.id));
        }
    }
    let total: f64 = h.rooms.iter().map(|r| polygon_area(&r.floor_polygon)).sum();
    if (total - plan.inside_area()).abs() > 1e-3 {
        v.push(format!("room areas sum to {total}, boundary is {}", plan.inside_area()));
    }
    v
}

/// Padded floor footprints are pairwise disjoint, inside their room, and
/// clear of every opening's keep-clear zone.
pub fn floor_footprints(h: &House) -> Vec<String> {
    let mut v = Vec::new();
    let fps = &h.floor_placements;
    for (i, a) in fps.iter().enumerate() {
        for b in &fps[i + 1..] {
            if overlap_area(&a.padded_footprint.inflate(-TOL), &b.padded_footprint) > 0.0 {
                v.push(format!("{} overlaps {}", a.id, b.id));
            }
        }
        let room = h.room(&a.room_id).expect("placement room");
        if !rect_in_polygon(&a.padded_footprint.inflate(-TOL), &room.floor_polygon) {
            v.push(format!("{} leaves {}", a.id, a.room_id));
        }
        for (r, c) in clearances(h) {
            if r == a.room_id && overlap_area(&a.padded_footprint.inflate(-TOL), &c) > 0.0 {
                v.push(format!("{} blocks an opening", a.id));
            }
        }
    }
    v
}

fn interval_on(w: &Wall, a: Vec2, b: Vec2) -> Option<(f64, f64)> {
    if w.line_distance(a) > TOL || w.line_distance(b) > TOL {
        return None;
    }
    let (s, t) = (w.project(a), w.project(b));
    let (s, t) = (s.min(t).max(0.0), s.max(t).min(w.length()));
    (t - s > TOL).then_some((s, t))
}

fn aabb_overlap(a: &Object, b: &Object) -> bool {
    let (fa, fb) = (a.footprint(), b.footprint());
    overlap_area(&fa.inflate(-TOL), &fb) > 0.0 && a.bottom() < b.top() - TOL && b.bottom() < a.top() - TOL
}

/// Windows and wall objects sit inside their wall, off every opening, apart
/// from each other, and clear of every other object in 3D. Windows also
/// avoid walls with floor objects pushed against them.
pub fn wall_objects(h: &House) -> Vec<String> {
    let mut v = Vec::new();
    let w_max = h.procedural_parameters.ceiling_height.min(3.0);
    let mut spans: Vec<(Vec2, Vec2)> = Vec::new();
    for d in &h.doors {
        let w = h.wall(&d.wall_id).expect("door wall");
        spans.push((w.point_at(d.offset), w.point_at(d.offset + d.width)));
    }
    for o in &h.open_walls {
        let w = h.wall(&o.wall_id).expect("open wall");
        spans.push((w.point_at(o.offset), w.point_at(o.offset + o.width)));
    }
    let everything = h.all_objects();
    let mut per_wall: BTreeMap<&str, Vec<(f64, f64, String)>> = BTreeMap::new();
    let mut mounted: Vec<(&str, &str, f64, f64, f64, f64)> = Vec::new();
    for win in &h.windows {
        mounted.push((&win.id, &win.wall_id, win.wall_offset, win.size.x, win.position.y - win.size.y / 2.0, win.position.y + win.size.y / 2.0));
    }
    for o in h.objects.iter().filter(|o| o.placement_kind == PlacementKind::Wall) {
        let (Some(wid), Some(off)) = (o.wall_id.as_deref(), o.wall_offset) else {
            v.push(format!("{} has no wall reference", o.id));
            continue;
        };
        mounted.push((&o.id, wid, off, o.size.x, o.bottom(), o.top()));
        for other in &everything {
            if other.id != o.id && other.placement_kind != PlacementKind::Wall && aabb_overlap(o, other) {
                v.push(format!("{} intersects {}", o.id, other.id));
            }
        }
    }
    for (id, wid, off, width, y0, y1) in mounted {
        let Some(w) = h.wall(wid) else {
            v.push(format!("{id} on unknown wall {wid}"));
            continue;
        };
        if off < -TOL || off + width > w.length() + TOL {
            v.push(format!("{id} runs off {wid}"));
        }
        if y0 < -TOL || y1 > w_max + TOL {
            v.push(format!("{id} spans {y0}..{y1}, outside 0..{w_max}"));
        }
        for (a, b) in &spans {
            if let Some((s, e)) = interval_on(w, *a, *b) {
                if s < off + width - TOL && e > off + TOL {
                    v.push(format!("{id} covers an opening on {wid}"));
                }
            }
        }
        per_wall.entry(wid).or_default().push((off, off + width, id.to_string()));
    }
    for (wid, mut xs) in per_wall {
        xs.sort_by(|a, b| a.0.total_cmp(&b.0));
        for p in xs.windows(2) {
            if p[1].0 < p[0].1 - TOL {
                v.push(format!("{} and {} overlap on {wid}", p[0].2, p[1].2));
            }
        }
    }
    for win in &h.windows {
        let w = h.wall(&win.wall_id).expect("window wall");
        if w.neighbor_id.is_some() {
            v.push(format!("{} on an interior wall", win.id));
        }
        for o in h.objects.iter().filter(|o| o.room_id == win.room_id && o.placement_kind != PlacementKind::Wall) {
            let f = o.footprint();
            let gap = f.corners().iter().map(|c| c.sub(w.from).dot(w.inward_normal())).fold(f64::INFINITY, f64::min);
            if gap > 0.1 + TOL {
                continue;
            }
            let ts: Vec<f64> = f.corners().iter().map(|c| w.project(*c)).collect();
            let (s, e) = (ts.iter().copied().fold(f64::INFINITY, f64::min), ts.iter().copied().fold(f64::NEG_INFINITY, f64::max));
            if s < win.wall_offset + win.size.x - TOL && e > win.wall_offset + TOL {
                v.push(format!("{} above {}", win.id, o.id));
            }
        }
    }
    v
}

/// Surface objects rest on their receptacle's top face.
pub fn surface_children(h: &House) -> Vec<String> {
    let mut v = Vec::new();
    for o in h.all_objects() {
        for c in o.children.iter().filter(|c| c.placement_kind == PlacementKind::Surface) {
            if !o.footprint().inflate(TOL).contains_rect(&c.footprint()) {
                v.push(format!("{} hangs off {}", c.id, o.id));
            }
            if (c.bottom() - o.top()).abs() > TOL {
                v.push(format!("{} floats at {} over {} at {}", c.id, c.bottom(), o.id, o.top()));
            }
        }
    }
    v
}

fn on_boundary(a: Vec2, b: Vec2, poly: &[Vec2]) -> bool {
    (0..=10).all(|k| distance_to_boundary(a.add(b.sub(a).scale(k as f64 / 10.0)), poly) < TOL)
}

/// Rotations are quarter turns; edge and corner placements have their back
/// against a wall, corners also a side.
pub fn rotations(h: &House) -> Vec<String> {
    let mut v = Vec::new();
    for o in h.all_objects() {
        if o.rotation.rem_euclid(90) != 0 || !(0..360).contains(&o.rotation) {
            v.push(format!("{} rotated {}", o.id, o.rotation));
        }
    }
    for p in &h.floor_placements {
        if p.mode == Placement::Middle {
            continue;
        }
        let poly = &h.room(&p.room_id).expect("room").floor_polygon;
        let f = &p.footprint;
        let back = facing(p.rotation).scale(-1.0);
        let c = f.corners();
        // corners: min, (max.x, min.z), max, (min.x, max.z)
        let sides = [(c[0], c[1], Vec2::new(0.0, -1.0)), (c[1], c[2], Vec2::new(1.0, 0.0)), (c[2], c[3], Vec2::new(0.0, 1.0)), (c[3], c[0], Vec2::new(-1.0, 0.0))];
        let against = |dir: Vec2| sides.iter().any(|(a, b, n)| n.approx_eq(dir) && on_boundary(*a, *b, poly));
        if !against(back) {
            v.push(format!("{} ({:?}) does not have its back to a wall", p.id, p.mode));
        }
        if p.mode == Placement::Corner {
            let lateral = Vec2::new(back.z, -back.x);
            if !against(lateral) && !against(lateral.scale(-1.0)) {
                v.push(format!("{} is not in a corner", p.id));
            }
        }
    }
    v
}

pub fn all(h: &House, plan: &FloorPlan) -> Vec<String> {
    let mut v = partition(h, plan);
    v.extend(floor_footprints(h));
    v.extend(wall_objects(h));
    v.extend(surface_children(h));
    v.extend(rotations(h));
    v
}

/// Histogram shape: bin it, then require a rise to one mode and a fall
/// after it, allowing steps against the trend of up to three standard
/// errors. Returns the modal bin.
pub fn unimodal(hist: &BTreeMap<usize, u64>, bin: usize) -> Result<usize, String> {
    let max = *hist.keys().max().ok_or("empty histogram")?;
    let mut b = vec![0u64; max / bin + 1];
    for (k, c) in hist {
        b[k / bin] += c;
    }
    let mode = (0..b.len()).max_by_key(|&i| (b[i], std::cmp::Reverse(i))).expect("nonempty");
    let noise = |x: u64, y: u64| 3.0 * ((x + y) as f64).sqrt();
    for i in 0..b.len() - 1 {
        let (x, y) = (b[i], b[i + 1]);
        let bad = if i < mode { (y as f64) < x as f64 - noise(x, y) } else { (y as f64) > x as f64 + noise(x, y) };
        if bad {
            return Err(format!("bins {} and {} ({x}, {y}) break the shape around mode bin {mode}", i, i + 1));
        }
    }
    Ok(mode)
}
