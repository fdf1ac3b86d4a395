//! Windows, paintings and wall televisions.

use rand::Rng;
use rand_distr::{Beta, Distribution};

use crate::catalog::{names, AssetInstance, Catalog, Split};
use crate::geom::{rotation_facing, Vec3};
use crate::house::{House, Object, PlacementKind, Room, Wall, Window};
use crate::random::{choose, choose_weighted, sample_pmf};
use crate::roomspec::RoomType;

pub const N_W_PMF: [(u32, f64); 3] = [(0, 0.125), (1, 0.375), (2, 0.5)];
pub const N_P_PMF: [(u32, f64); 5] = [(0, 0.05), (1, 0.1), (2, 0.5), (3, 0.25), (4, 0.1)];
/// Paintings may hang above wall-side objects shorter than this.
pub const TALL_OBJECT: f64 = 1.15;
/// Floor objects this close to a wall count as standing along it.
pub const WALL_TOUCH: f64 = 0.1;
pub const WALL_HEIGHT_CAP: f64 = 3.0;
pub const PAINTING_BETA: f64 = 12.0;

const TOL: f64 = 1e-9;

pub fn has_windows(rt: RoomType) -> bool {
    matches!(rt, RoomType::Kitchen | RoomType::LivingRoom | RoomType::Bedroom)
}

/// Chance of trying a wall television in a room without one.
pub fn television_probability(rt: RoomType) -> f64 {
    match rt {
        RoomType::LivingRoom => 0.8,
        RoomType::Kitchen => 0.25,
        RoomType::Bedroom => 0.4,
        RoomType::Bathroom => 0.0,
    }
}

/// A free stretch of wall with the tallest short object below it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub wall: usize,
    pub start: f64,
    pub end: f64,
    pub w_min: f64,
}

impl Segment {
    pub fn length(&self) -> f64 {
        self.end - self.start
    }
}

/// Wall intervals of one room and what occupies them.
#[derive(Debug, Clone)]
pub struct WallSpace {
    pub room_id: String,
    pub walls: Vec<Wall>,
    /// Openings, windows and wall objects: nothing else may overlap these.
    blocked: Vec<Vec<(f64, f64)>>,
    /// Floor objects standing along each wall, with their heights.
    along: Vec<Vec<(f64, f64, f64)>>,
    window_used: Vec<bool>,
    /// Top of the usable wall, `min(3, c_h)`.
    pub w_max: f64,
}

fn interval_on(wall: &Wall, a: crate::geom::Vec2, b: crate::geom::Vec2) -> Option<(f64, f64)> {
    if wall.line_distance(a) > 1e-6 || wall.line_distance(b) > 1e-6 {
        return None;
    }
    let (s, t) = (wall.project(a), wall.project(b));
    let (s, t) = (s.min(t).max(0.0), s.max(t).min(wall.length()));
    (t - s > TOL).then_some((s, t))
}

fn subtract(segs: Vec<(f64, f64)>, cut: (f64, f64)) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(segs.len() + 1);
    for (s, e) in segs {
        if cut.1 <= s + TOL || cut.0 >= e - TOL {
            out.push((s, e));
            continue;
        }
        if cut.0 > s + TOL {
            out.push((s, cut.0));
        }
        if cut.1 < e - TOL {
            out.push((cut.1, e));
        }
    }
    out
}

impl WallSpace {
    /// Collect a room's walls, the door and open-wall spans on them, the
    /// windows and wall objects already placed, and floor objects within
    /// [`WALL_TOUCH`] of each wall.
    pub fn for_room(house: &House, room_id: &str) -> Self {
        let walls: Vec<Wall> = house.walls.iter().filter(|w| w.room_id == room_id).cloned().collect();
        let mut spans = Vec::new();
        for d in &house.doors {
            let w = house.wall(&d.wall_id).expect("door wall exists");
            spans.push((w.point_at(d.offset), w.point_at(d.offset + d.width)));
        }
        for o in &house.open_walls {
            let w = house.wall(&o.wall_id).expect("open wall exists");
            spans.push((w.point_at(o.offset), w.point_at(o.offset + o.width)));
        }
        let mut blocked = vec![Vec::new(); walls.len()];
        for (i, w) in walls.iter().enumerate() {
            blocked[i].extend(spans.iter().filter_map(|(a, b)| interval_on(w, *a, *b)));
            for win in house.windows.iter().filter(|x| x.wall_id == w.id) {
                blocked[i].push((win.wall_offset, win.wall_offset + win.size.x));
            }
            for o in house.objects.iter().filter(|o| o.wall_id.as_deref() == Some(w.id.as_str())) {
                let off = o.wall_offset.expect("wall objects record their offset");
                blocked[i].push((off, off + o.size.x));
            }
        }
        let mut along = vec![Vec::new(); walls.len()];
        for o in house.objects.iter().filter(|o| o.room_id == room_id && o.placement_kind != PlacementKind::Wall) {
            let f = o.footprint();
            let top = o.walk().iter().map(|d| d.top()).fold(0.0, f64::max);
            for (i, w) in walls.iter().enumerate() {
                let n = w.inward_normal();
                let gap = f.corners().iter().map(|c| c.sub(w.from).dot(n)).fold(f64::INFINITY, f64::min);
                if gap > WALL_TOUCH + TOL {
                    continue;
                }
                let ts: Vec<f64> = f.corners().iter().map(|c| w.project(*c)).collect();
                let s = ts.iter().copied().fold(f64::INFINITY, f64::min).max(0.0);
                let e = ts.iter().copied().fold(f64::NEG_INFINITY, f64::max).min(w.length());
                if e - s > TOL {
                    along[i].push((s, e, top));
                }
            }
        }
        let w_max = house.procedural_parameters.ceiling_height.min(WALL_HEIGHT_CAP);
        let window_used = walls.iter().map(|w| house.windows.iter().any(|x| x.wall_id == w.id)).collect();
        Self { room_id: room_id.to_string(), walls, blocked, along, window_used, w_max }
    }

    /// Free segments. Windows avoid every wall-side object; other wall
    /// objects may hang above short ones.
    pub fn segments(&self, for_window: bool) -> Vec<Segment> {
        let mut out = Vec::new();
        for (i, w) in self.walls.iter().enumerate() {
            if for_window && (w.neighbor_id.is_some() || self.window_used[i]) {
                continue;
            }
            let mut free = vec![(0.0, w.length())];
            for &b in &self.blocked[i] {
                free = subtract(free, b);
            }
            for &(s, e, h) in &self.along[i] {
                if for_window || h >= TALL_OBJECT {
                    free = subtract(free, (s, e));
                }
            }
            for (s, e) in free {
                let w_min = self.along[i]
                    .iter()
                    .filter(|(a, b, _)| *a < e - TOL && *b > s + TOL)
                    .map(|x| x.2)
                    .fold(0.0, f64::max);
                out.push(Segment { wall: i, start: s, end: e, w_min });
            }
        }
        out
    }

    fn block(&mut self, wall: usize, s: f64, e: f64) {
        self.blocked[wall].push((s, e));
    }

    fn pick_segment<R: Rng + ?Sized>(&self, for_window: bool, min_len: f64, rng: &mut R) -> Option<Segment> {
        let segs: Vec<Segment> =
            self.segments(for_window).into_iter().filter(|s| s.length() >= min_len - TOL).collect();
        let w: Vec<f64> = segs.iter().map(Segment::length).collect();
        choose_weighted(rng, &w).map(|i| segs[i])
    }

    fn position(&self, wall: usize, offset: f64, inst: &AssetInstance, y: f64, inset: bool) -> (Vec3, i32) {
        let w = &self.walls[wall];
        let n = w.inward_normal();
        let depth = if inset { 0.0 } else { inst.depth() / 2.0 };
        let p = w.point_at(offset + inst.width() / 2.0).add(n.scale(depth));
        (Vec3::new(p.x, y, p.z), rotation_facing(n))
    }
}

fn min_width(pool: &[&AssetInstance]) -> Option<f64> {
    pool.iter().map(|i| i.width()).min_by(f64::total_cmp)
}

/// Windows on exterior walls, at most one per wall, vertically centered
/// between the floor and `w_max`.
pub fn place_windows<R: Rng + ?Sized>(
    space: &mut WallSpace,
    room: &Room,
    catalog: &Catalog,
    split: Split,
    rng: &mut R,
) -> Vec<Window> {
    if !has_windows(room.room_type) {
        return Vec::new();
    }
    let n_w = sample_pmf(rng, &N_W_PMF);
    let pool = catalog.instances_in_split(names::WINDOW, split);
    let Some(w_min_len) = min_width(&pool) else { return Vec::new() };
    let mut out = Vec::new();
    for k in 0..n_w {
        let Some(seg) = space.pick_segment(true, w_min_len, rng) else { break };
        let fits: Vec<&AssetInstance> = pool
            .iter()
            .copied()
            .filter(|i| i.width() <= seg.length() + TOL && i.height() <= space.w_max + TOL)
            .collect();
        let Some(inst) = choose(rng, &fits).copied() else { break };
        let offset = seg.start + rng.random::<f64>() * (seg.length() - inst.width()).max(0.0);
        let (position, rotation) = space.position(seg.wall, offset, inst, space.w_max / 2.0, true);
        let wall = &space.walls[seg.wall];
        out.push(Window {
            id: format!("{}|window|{k}", room.id),
            asset_id: inst.id.clone(),
            room_id: room.id.clone(),
            wall_id: wall.id.clone(),
            wall_offset: offset,
            size: Vec3::new(inst.width(), inst.height(), inst.depth()),
            position,
            rotation,
        });
        space.window_used[seg.wall] = true;
        space.block(seg.wall, offset, offset + inst.width());
    }
    out
}

/// Hang one wall object from `pool` on a free segment, with its center
/// drawn from a Beta(12, 12) over the band that keeps it between `w_min`
/// and `w_max`.
fn hang<R: Rng + ?Sized>(
    space: &mut WallSpace,
    pool: &[&AssetInstance],
    id: String,
    rng: &mut R,
) -> Option<Object> {
    let seg = space.pick_segment(false, min_width(pool)?, rng)?;
    let room_for = space.w_max - seg.w_min;
    let fits: Vec<&AssetInstance> = pool
        .iter()
        .copied()
        .filter(|i| i.width() <= seg.length() + TOL && i.height() <= room_for + TOL)
        .collect();
    let inst = *choose(rng, &fits)?;
    let offset = seg.start + rng.random::<f64>() * (seg.length() - inst.width()).max(0.0);
    let lo = seg.w_min + inst.height() / 2.0;
    let hi = (space.w_max - inst.height() / 2.0).max(lo);
    let b = Beta::new(PAINTING_BETA, PAINTING_BETA).expect("valid Beta").sample(rng);
    let (position, rotation) = space.position(seg.wall, offset, inst, lo + (hi - lo) * b, false);
    let wall = &space.walls[seg.wall];
    let obj = Object {
        id,
        asset_id: inst.id.clone(),
        asset_type: inst.asset_type.clone(),
        room_id: space.room_id.clone(),
        position,
        rotation,
        size: Vec3::new(inst.width(), inst.height(), inst.depth()),
        placement_kind: PlacementKind::Wall,
        placement_id: None,
        group_id: None,
        wall_id: Some(wall.id.clone()),
        wall_offset: Some(offset),
        kinematic: true,
        states: Default::default(),
        color: None,
        material: None,
        children: vec![],
    };
    space.block(seg.wall, offset, offset + inst.width());
    Some(obj)
}

pub fn place_paintings<R: Rng + ?Sized>(
    space: &mut WallSpace,
    catalog: &Catalog,
    split: Split,
    rng: &mut R,
) -> Vec<Object> {
    let n_p = sample_pmf(rng, &N_P_PMF);
    let pool = catalog.instances_in_split(names::PAINTING, split);
    let mut out = Vec::new();
    for k in 0..n_p {
        let id = format!("{}|painting|{k}", space.room_id);
        if let Some(o) = hang(space, &pool, id, rng) {
            out.push(o);
        }
    }
    out
}

/// At most one wall-mounted television, skipped when the room already has
/// one.
pub fn place_television<R: Rng + ?Sized>(
    space: &mut WallSpace,
    room_type: RoomType,
    room_has_tv: bool,
    catalog: &Catalog,
    split: Split,
    rng: &mut R,
) -> Option<Object> {
    let p = television_probability(room_type);
    if room_has_tv || p == 0.0 || !rng.random_bool(p) {
        return None;
    }
    let pool: Vec<&AssetInstance> =
        catalog.instances_in_split(names::TELEVISION, split).into_iter().filter(|i| i.wall_mountable).collect();
    hang(space, &pool, format!("{}|tv", space.room_id), rng)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pmf_means() {
        let e = |pmf: &[(u32, f64)]| pmf.iter().map(|(v, p)| *v as f64 * p).sum::<f64>();
        assert!((e(&N_W_PMF) - 1.375).abs() < 1e-12);
        assert!((e(&N_P_PMF) - 2.25).abs() < 1e-12);
    }

    #[test]
    fn beta_12_mean() {
        use crate::random::HouseRng;
        use rand::SeedableRng;
        let mut r = HouseRng::seed_from_u64(12);
        let b = Beta::new(PAINTING_BETA, PAINTING_BETA).unwrap();
        let n = 1_000_000;
        let m = (0..n).map(|_| b.sample(&mut r)).sum::<f64>() / n as f64;
        assert!((m - 0.5).abs() < 0.005);
    }

    #[test]
    fn interval_subtraction() {
        assert_eq!(subtract(vec![(0.0, 5.0)], (1.0, 2.0)), vec![(0.0, 1.0), (2.0, 5.0)]);
        assert_eq!(subtract(vec![(0.0, 5.0)], (-1.0, 6.0)), vec![]);
        assert_eq!(subtract(vec![(0.0, 5.0)], (5.0, 6.0)), vec![(0.0, 5.0)]);
    }

    #[test]
    fn television_rates() {
        assert_eq!(television_probability(RoomType::Bathroom), 0.0);
        assert!(!has_windows(RoomType::Bathroom));
    }
}
