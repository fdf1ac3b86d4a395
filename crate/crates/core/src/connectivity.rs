//! Room connections: which rooms share a door, of which kind, and where the
//! openings sit on the walls.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::catalog::{names, AssetInstance, Catalog, Split};
use crate::error::{Error, Result};
use crate::geom::{rect_in_polygon, Rect, Vec2};
use crate::layout::{FloorPlan, WallSegment};
use crate::random::sample_pmf;
use crate::roomspec::{RoomSpec, RoomType, SpecNode};

/// Rejection budget for opening placement.
pub const OPENING_ATTEMPTS: u32 = 100;
/// Depth of the keep-clear strip on both sides of an open wall.
pub const OPEN_WALL_CLEARANCE: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ConnectionKind {
    Doorway,
    DoorFrame,
    OpenWall,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum OpeningKind {
    Doorway,
    DoorFrame,
    OpenWall,
    ExteriorDoor,
}

impl From<ConnectionKind> for OpeningKind {
    fn from(k: ConnectionKind) -> Self {
        match k {
            ConnectionKind::Doorway => OpeningKind::Doorway,
            ConnectionKind::DoorFrame => OpeningKind::DoorFrame,
            ConnectionKind::OpenWall => OpeningKind::OpenWall,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Connection {
    pub a: usize,
    pub b: usize,
    pub kind: ConnectionKind,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Opening {
    pub kind: OpeningKind,
    /// The wall on room `wall.room`'s side; `wall.neighbor` is the other room.
    pub wall: WallSegment,
    pub asset_id: Option<String>,
    /// Distance from `wall.from` to the near edge of the opening.
    pub offset: f64,
    pub width: f64,
    /// Room the door swings into (doorways only).
    pub open_into: Option<usize>,
}

impl Opening {
    pub fn start(&self) -> Vec2 {
        self.wall.point_at(self.offset)
    }

    pub fn end(&self) -> Vec2 {
        self.wall.point_at(self.offset + self.width)
    }

    fn side_rect(&self, into: usize, depth: f64) -> Rect {
        let n = if into == self.wall.room { self.wall.inward_normal() } else { self.wall.inward_normal().scale(-1.0) };
        let (p0, p1) = (self.start(), self.end());
        let q1 = p1.add(n.scale(depth));
        Rect::from_bounds(p0.x.min(q1.x), p0.z.min(q1.z), p0.x.max(q1.x), p0.z.max(q1.z))
    }

    /// The door leaf's sweep: a width x width square on the open side.
    pub fn swing(&self) -> Option<Rect> {
        self.open_into.map(|r| self.side_rect(r, self.width))
    }

    /// Areas in front of the opening that furniture must leave free, per room.
    pub fn clearance(&self) -> Vec<(usize, Rect)> {
        let depth = match self.kind {
            OpeningKind::OpenWall => OPEN_WALL_CLEARANCE,
            _ => self.width,
        };
        let mut out = vec![(self.wall.room, self.side_rect(self.wall.room, depth))];
        if let Some(b) = self.wall.neighbor {
            out.push((b, self.side_rect(b, depth)));
        }
        out
    }

    pub fn rooms(&self) -> (usize, Option<usize>) {
        (self.wall.room, self.wall.neighbor)
    }
}

/// Pre-order leaf indices under `node` that may take a door at the zone
/// above it. A flagged node strictly below the zone child hides its leaves.
fn eligible_leaves(node: &SpecNode, first_leaf: usize, strictly_below: bool, out: &mut Vec<usize>) {
    if strictly_below && node.avoid_door_to_parent {
        return;
    }
    if node.is_leaf() {
        out.push(first_leaf);
        return;
    }
    let mut leaf = first_leaf;
    for c in &node.children {
        eligible_leaves(c, leaf, true, out);
        leaf += c.leaf_count();
    }
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, i: usize) -> usize {
        if self.0[i] != i {
            let r = self.find(self.0[i]);
            self.0[i] = r;
        }
        self.0[i]
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
        ra != rb
    }
}

fn connect_zone<R: Rng + ?Sized>(
    node: &SpecNode,
    first_leaf: usize,
    shared: &[Vec<f64>],
    min_width: f64,
    rng: &mut R,
    out: &mut Vec<(usize, usize)>,
) -> Result<()> {
    if node.is_leaf() {
        return Ok(());
    }
    let mut leaf = first_leaf;
    let mut eligible = Vec::new();
    for c in &node.children {
        connect_zone(c, leaf, shared, min_width, rng, out)?;
        let mut e = Vec::new();
        eligible_leaves(c, leaf, false, &mut e);
        eligible.push(e);
        leaf += c.leaf_count();
    }
    let k = node.children.len();
    let mut pairs: Vec<(usize, usize, Vec<(usize, usize)>)> = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let cands: Vec<(usize, usize)> = eligible[i]
                .iter()
                .flat_map(|&a| eligible[j].iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| shared[a][b] + 1e-9 >= min_width)
                .collect();
            if !cands.is_empty() {
                pairs.push((i, j, cands));
            }
        }
    }
    pairs.shuffle(rng);
    let mut dsu = Dsu((0..k).collect());
    let mut joined = 1;
    for (i, j, cands) in &pairs {
        if dsu.union(*i, *j) {
            let (a, b) = cands[rng.random_range(0..cands.len())];
            out.push((a.min(b), a.max(b)));
            joined += 1;
        }
    }
    if joined < k {
        return Err(Error::ConnectivityInfeasible(format!("zone with {k} children has no spanning set of doors")));
    }
    Ok(())
}

/// Room pairs that get an opening: a random spanning tree over each zone's
/// children, recursively, honoring avoid-door-to-parent.
pub fn plan_connections<R: Rng + ?Sized>(
    spec: &RoomSpec,
    plan: &FloorPlan,
    min_width: f64,
    rng: &mut R,
) -> Result<Vec<(usize, usize)>> {
    let n = plan.rooms.len();
    let mut shared = vec![vec![0.0; n]; n];
    for w in plan.walls() {
        if let Some(b) = w.neighbor {
            shared[w.room][b] = f64::max(shared[w.room][b], w.length());
        }
    }
    let mut out = Vec::new();
    connect_zone(&spec.root, 0, &shared, min_width, rng, &mut out)?;
    Ok(out)
}

pub const KITCHEN_LIVING_KINDS: [(ConnectionKind, f64); 3] =
    [(ConnectionKind::OpenWall, 0.375), (ConnectionKind::DoorFrame, 0.375), (ConnectionKind::Doorway, 0.25)];

pub fn choose_connection_kind<R: Rng + ?Sized>(a: RoomType, b: RoomType, rng: &mut R) -> ConnectionKind {
    use RoomType::{Kitchen, LivingRoom};
    match (a, b) {
        (Kitchen, LivingRoom) | (LivingRoom, Kitchen) => sample_pmf(rng, &KITCHEN_LIVING_KINDS),
        _ => ConnectionKind::Doorway,
    }
}

fn door_assets<'a>(catalog: &'a Catalog, kind: OpeningKind, split: Split) -> Vec<&'a AssetInstance> {
    let t = match kind {
        OpeningKind::DoorFrame => names::DOORFRAME,
        _ => names::DOORWAY,
    };
    catalog.instances_in_split(t, split)
}

/// Narrowest door asset that can serve any connection kind.
pub fn min_door_width(catalog: &Catalog, split: Split) -> f64 {
    [OpeningKind::Doorway, OpeningKind::DoorFrame]
        .iter()
        .map(|k| door_assets(catalog, *k, split).iter().map(|i| i.width()).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max)
}

/// One random placement of a door asset on one of `walls`.
fn sample_door<R: Rng + ?Sized>(
    kind: OpeningKind,
    walls: &[WallSegment],
    assets: &[&AssetInstance],
    swings_into: Option<(usize, usize)>,
    rng: &mut R,
) -> Option<Opening> {
    let longest = walls.iter().map(WallSegment::length).fold(0.0, f64::max);
    let fitting: Vec<&&AssetInstance> = assets.iter().filter(|a| a.width() <= longest + 1e-9).collect();
    if fitting.is_empty() {
        return None;
    }
    let asset = fitting[rng.random_range(0..fitting.len())];
    let ws: Vec<&WallSegment> = walls.iter().filter(|w| w.length() + 1e-9 >= asset.width()).collect();
    let wall = *ws[rng.random_range(0..ws.len())];
    let slack = (wall.length() - asset.width()).max(0.0);
    let offset = if slack > 0.0 { rng.random_range(0.0..slack) } else { 0.0 };
    let open_into = swings_into.map(|(a, b)| if rng.random_bool(0.5) { a } else { b });
    Some(Opening { kind, wall, asset_id: Some(asset.id.clone()), offset, width: asset.width(), open_into })
}

fn swing_ok(o: &Opening, plan: &FloorPlan, placed: &[Opening]) -> bool {
    for (room, r) in o.swing().into_iter().map(|s| (o.open_into.unwrap(), s)).chain(
        // a closed exterior door still needs its inside approach clear
        (o.kind == OpeningKind::ExteriorDoor).then(|| o.clearance()).into_iter().flatten(),
    ) {
        if !rect_in_polygon(&r, &plan.room_polygon(room)) {
            return false;
        }
        if placed.iter().filter_map(Opening::swing).any(|s| s.overlaps(&r)) {
            return false;
        }
    }
    true
}

/// Place one opening per connection. Door swings must stay inside their room
/// and clear of each other; the whole set is resampled on collision.
pub fn place_openings<R: Rng + ?Sized>(
    plan: &FloorPlan,
    connections: &[Connection],
    catalog: &Catalog,
    split: Split,
    rng: &mut R,
) -> Result<Vec<Opening>> {
    let walls = plan.walls();
    let shared = |a: usize, b: usize| -> Vec<WallSegment> {
        walls.iter().filter(|w| w.room == a && w.neighbor == Some(b)).copied().collect()
    };
    let mut last_err = String::from("no connections");
    'attempt: for _ in 0..OPENING_ATTEMPTS {
        let mut placed: Vec<Opening> = Vec::with_capacity(connections.len());
        for c in connections {
            let ws = shared(c.a, c.b);
            if ws.is_empty() {
                return Err(Error::PlacementExhausted(format!("rooms {} and {} share no wall", c.a, c.b)));
            }
            if c.kind == ConnectionKind::OpenWall {
                let wall = *ws.iter().max_by(|x, y| x.length().total_cmp(&y.length())).expect("nonempty");
                placed.push(Opening { kind: OpeningKind::OpenWall, wall, asset_id: None, offset: 0.0, width: wall.length(), open_into: None });
                continue;
            }
            let kind = OpeningKind::from(c.kind);
            let assets = door_assets(catalog, kind, split);
            let swings = (kind == OpeningKind::Doorway).then_some((c.a, c.b));
            match sample_door(kind, &ws, &assets, swings, rng) {
                None => {
                    return Err(Error::PlacementExhausted(format!(
                        "no {kind:?} asset fits between rooms {} and {}",
                        c.a, c.b
                    )))
                }
                Some(o) if swing_ok(&o, plan, &placed) => placed.push(o),
                Some(_) => {
                    last_err = format!("door swing collision between rooms {} and {}", c.a, c.b);
                    continue 'attempt;
                }
            }
        }
        return Ok(placed);
    }
    Err(Error::PlacementExhausted(last_err))
}

/// Exactly one closed door to the outside, on a kitchen or living room wall
/// when one can take it.
pub fn place_exterior_door<R: Rng + ?Sized>(
    plan: &FloorPlan,
    catalog: &Catalog,
    split: Split,
    openings: &[Opening],
    rng: &mut R,
) -> Result<Opening> {
    let assets = door_assets(catalog, OpeningKind::ExteriorDoor, split);
    let narrowest = assets.iter().map(|a| a.width()).fold(f64::INFINITY, f64::min);
    let walls = plan.walls();
    let exterior = |room: usize| -> Vec<WallSegment> {
        walls.iter().filter(|w| w.room == room && w.is_exterior() && w.length() + 1e-9 >= narrowest).copied().collect()
    };
    let with_wall: Vec<usize> = (0..plan.rooms.len()).filter(|&r| !exterior(r).is_empty()).collect();
    let preferred: Vec<usize> = with_wall
        .iter()
        .copied()
        .filter(|&r| matches!(plan.rooms[r].room_type, RoomType::Kitchen | RoomType::LivingRoom))
        .collect();
    let candidates = if preferred.is_empty() { with_wall } else { preferred };
    if candidates.is_empty() {
        return Err(Error::PlacementExhausted("no exterior wall fits a door".into()));
    }
    for _ in 0..OPENING_ATTEMPTS {
        let room = candidates[rng.random_range(0..candidates.len())];
        if let Some(o) = sample_door(OpeningKind::ExteriorDoor, &exterior(room), &assets, None, rng) {
            if swing_ok(&o, plan, openings) {
                return Ok(o);
            }
        }
    }
    Err(Error::PlacementExhausted("exterior door approach always blocked".into()))
}
