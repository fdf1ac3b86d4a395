//! Semantic asset groups: trees of samplers placed relative to each other.
//!
//! Group frame: `u` points right, `v` points back (Top is `+v`). The group
//! faces `-v`, so when the whole group is placed like a single object its
//! local axes are `x = u`, `z = -v`.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::catalog::{AssetInstance, Catalog, Placement, Split};
use crate::error::{Error, Result};
use crate::geom::{rotate, rotated_extents, Aabb, Rect, Vec2};
use crate::roomspec::RoomType;

pub const DEFAULT_MAX_ATTEMPTS: u32 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnchorV {
    Top,
    Center,
    Bottom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnchorH {
    Left,
    Center,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Anchor {
    pub v: AnchorV,
    pub h: AnchorH,
}

impl Anchor {
    pub const fn new(v: AnchorV, h: AnchorH) -> Self {
        Anchor { v, h }
    }

    /// The point of `r` (in the group frame) this anchor names.
    pub fn point_on(self, r: &Rect) -> Vec2 {
        let u = match self.h {
            AnchorH::Left => r.min.x,
            AnchorH::Center => (r.min.x + r.max.x) / 2.0,
            AnchorH::Right => r.max.x,
        };
        let v = match self.v {
            AnchorV::Bottom => r.min.z,
            AnchorV::Center => (r.min.z + r.max.z) / 2.0,
            AnchorV::Top => r.max.z,
        };
        Vec2::new(u, v)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssetSampler {
    pub id: String,
    /// Draw from every instance of this type.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub asset_type: Option<String>,
    /// Or from an explicit list of instance ids.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub candidates: Vec<String>,
    #[serde(skip)]
    resolved: Vec<String>,
}

impl AssetSampler {
    pub fn of_type(id: &str, asset_type: &str) -> Self {
        AssetSampler { id: id.into(), asset_type: Some(asset_type.into()), candidates: vec![], resolved: vec![] }
    }

    pub fn of_candidates(id: &str, candidates: &[&str]) -> Self {
        AssetSampler {
            id: id.into(),
            asset_type: None,
            candidates: candidates.iter().map(|s| s.to_string()).collect(),
            resolved: vec![],
        }
    }

    /// Candidate instance ids, sorted. Empty until the owning catalog is loaded.
    pub fn resolved(&self) -> &[String] {
        &self.resolved
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SagEdge {
    pub parent: String,
    pub child: String,
    pub anchor: Anchor,
    pub pivot: Anchor,
    #[serde(default)]
    pub offset: [f64; 2],
    /// Child yaw relative to the group, in degrees (0 faces the group front).
    #[serde(default)]
    pub rotation: i32,
    #[serde(default)]
    pub allow_overlap: bool,
    /// Child rests on the parent's top face instead of the floor.
    #[serde(default)]
    pub on_top: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SagDef {
    pub id: String,
    #[serde(default)]
    pub placements: Vec<Placement>,
    #[serde(default)]
    pub room_weights: BTreeMap<RoomType, u8>,
    pub samplers: Vec<AssetSampler>,
    #[serde(default)]
    pub edges: Vec<SagEdge>,
    #[serde(default)]
    pub links: Vec<Vec<String>>,
}

impl SagDef {
    pub fn room_weight(&self, room: RoomType) -> u8 {
        self.room_weights.get(&room).copied().unwrap_or(0)
    }

    fn sampler_index(&self, id: &str) -> Option<usize> {
        self.samplers.iter().position(|s| s.id == id)
    }

    /// Resolve sampler candidates against the catalog and check the tree
    /// and link invariants.
    pub(crate) fn resolve(&mut self, catalog: &Catalog) -> Result<()> {
        let loc = |m: &str| format!("semantic_asset_groups/{}{m}", self.id);
        for s in &mut self.samplers {
            let mut ids: Vec<String> = match (&s.asset_type, s.candidates.is_empty()) {
                (Some(t), true) => catalog.instances_of(t).map(|i| i.id.clone()).collect(),
                (None, false) => s.candidates.clone(),
                _ => {
                    return Err(Error::schema(
                        format!("semantic_asset_groups/{}/{}", self.id, s.id),
                        "sampler needs exactly one of asset_type or candidates",
                    ))
                }
            };
            ids.sort();
            ids.dedup();
            if ids.is_empty() {
                return Err(Error::schema(format!("semantic_asset_groups/{}/{}", self.id, s.id), "no candidates"));
            }
            let mut types = BTreeSet::new();
            for id in &ids {
                let inst = catalog.instance(id).ok_or_else(|| {
                    Error::schema(format!("semantic_asset_groups/{}/{}", self.id, s.id), format!("unknown instance {id}"))
                })?;
                types.insert(inst.asset_type.as_str());
            }
            if types.len() != 1 {
                return Err(Error::schema(
                    format!("semantic_asset_groups/{}/{}", self.id, s.id),
                    "candidates must share one asset type",
                ));
            }
            s.resolved = ids;
        }
        if !self.samplers.is_empty() {
            self.check_tree().map_err(|m| Error::schema(loc(""), m))?;
        }
        for group in &self.links {
            let mut types = BTreeSet::new();
            for id in group {
                let i = self.sampler_index(id).ok_or_else(|| Error::schema(loc(""), format!("link names unknown sampler {id}")))?;
                types.insert(catalog.instance(&self.samplers[i].resolved[0]).map(|x| x.asset_type.clone()));
            }
            if types.len() > 1 {
                return Err(Error::schema(loc(""), "link members must share an asset type"));
            }
        }
        Ok(())
    }

    fn check_tree(&self) -> std::result::Result<(), String> {
        let n = self.samplers.len();
        let mut parent = vec![None; n];
        for e in &self.edges {
            let p = self.sampler_index(&e.parent).ok_or(format!("edge names unknown sampler {}", e.parent))?;
            let c = self.sampler_index(&e.child).ok_or(format!("edge names unknown sampler {}", e.child))?;
            if parent[c].replace(p).is_some() {
                return Err(format!("sampler {} has two parents", e.child));
            }
        }
        let roots: Vec<_> = (0..n).filter(|i| parent[*i].is_none()).collect();
        if roots.len() != 1 {
            return Err(format!("sampler graph needs exactly one root, found {}", roots.len()));
        }
        for start in 0..n {
            let mut cur = start;
            for _ in 0..=n {
                match parent[cur] {
                    Some(p) => cur = p,
                    None => break,
                }
            }
            if parent[cur].is_some() {
                return Err("sampler graph has a cycle".into());
            }
        }
        Ok(())
    }

    /// Index of the root sampler.
    pub fn root(&self) -> usize {
        let children: BTreeSet<&str> = self.edges.iter().map(|e| e.child.as_str()).collect();
        self.samplers.iter().position(|s| !children.contains(s.id.as_str())).unwrap_or(0)
    }

    /// Edges in an order where every parent is placed before its children.
    fn edge_order(&self) -> Vec<&SagEdge> {
        let mut placed: BTreeSet<&str> = BTreeSet::new();
        if let Some(r) = self.samplers.get(self.root()) {
            placed.insert(&r.id);
        }
        let mut out = Vec::with_capacity(self.edges.len());
        while out.len() < self.edges.len() {
            let before = out.len();
            for e in &self.edges {
                if placed.contains(e.parent.as_str()) && !placed.contains(e.child.as_str()) {
                    placed.insert(&e.child);
                    out.push(e);
                }
            }
            if out.len() == before {
                break;
            }
        }
        out
    }

    fn link_of(&self, sampler: &str) -> Option<usize> {
        self.links.iter().position(|g| g.iter().any(|s| s == sampler))
    }
}

/// One concrete member of an instantiated group.
#[derive(Debug, Clone, PartialEq)]
pub struct PlacedMember {
    pub sampler_id: String,
    pub instance_id: String,
    pub asset_type: String,
    /// Footprint in the group frame.
    pub footprint: Rect,
    /// Bottom and top heights above the floor.
    pub y0: f64,
    pub y1: f64,
    /// Yaw relative to the group.
    pub rotation: i32,
    /// Index of the member this one stands on.
    pub on_top_of: Option<usize>,
}

impl PlacedMember {
    pub fn center(&self) -> Vec2 {
        self.footprint.center()
    }

    pub fn aabb(&self) -> Aabb {
        Aabb { footprint: self.footprint, y0: self.y0, y1: self.y1 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlacedGroup {
    pub def_id: String,
    /// Members in sampler order; the root comes first.
    pub members: Vec<PlacedMember>,
    /// Bounding box of every member footprint, in the group frame.
    pub footprint: Rect,
}

impl PlacedGroup {
    pub fn root(&self) -> &PlacedMember {
        &self.members[0]
    }

    /// Group footprint extents (u, v).
    pub fn size(&self) -> (f64, f64) {
        (self.footprint.width(), self.footprint.depth())
    }

    /// World position and yaw of each member when the group's footprint
    /// center sits at `center` with yaw `rotation`.
    pub fn world_poses(&self, center: Vec2, rotation: i32) -> Vec<(Vec2, i32)> {
        let c = self.footprint.center();
        self.members
            .iter()
            .map(|m| {
                let d = m.center().sub(c);
                let local = Vec2::new(d.x, -d.z);
                (center.add(rotate(local, rotation)), (rotation + m.rotation).rem_euclid(360))
            })
            .collect()
    }
}

/// Lay out chosen instances (one per sampler, in sampler order) with the
/// root's footprint centered at `root_center`.
pub fn layout_members(def: &SagDef, chosen: &[&AssetInstance], root_center: Vec2) -> Vec<PlacedMember> {
    assert_eq!(chosen.len(), def.samplers.len());
    let root = def.root();
    let mut slots: Vec<Option<PlacedMember>> = vec![None; def.samplers.len()];
    let r = chosen[root];
    slots[root] = Some(PlacedMember {
        sampler_id: def.samplers[root].id.clone(),
        instance_id: r.id.clone(),
        asset_type: r.asset_type.clone(),
        footprint: Rect::from_center(root_center, r.width(), r.depth()),
        y0: 0.0,
        y1: r.height(),
        rotation: 0,
        on_top_of: None,
    });
    for e in def.edge_order() {
        let p = def.sampler_index(&e.parent).expect("validated");
        let c = def.sampler_index(&e.child).expect("validated");
        let parent = slots[p].clone().expect("parent placed first");
        let inst = chosen[c];
        let (w, d) = rotated_extents(inst.width(), inst.depth(), e.rotation);
        let target = e.anchor.point_on(&parent.footprint).add(Vec2::new(e.offset[0], e.offset[1]));
        // the pivot of a w x d rect sitting at the origin
        let pivot = e.pivot.point_on(&Rect::from_bounds(0.0, 0.0, w, d));
        let min = target.sub(pivot);
        let y0 = if e.on_top { parent.y1 } else { 0.0 };
        slots[c] = Some(PlacedMember {
            sampler_id: e.child.clone(),
            instance_id: inst.id.clone(),
            asset_type: inst.asset_type.clone(),
            footprint: Rect::from_bounds(min.x, min.z, min.x + w, min.z + d),
            y0,
            y1: y0 + inst.height(),
            rotation: e.rotation.rem_euclid(360),
            on_top_of: if e.on_top { Some(p) } else { None },
        });
    }
    let mut members: Vec<PlacedMember> = slots.into_iter().map(|m| m.expect("tree spans all samplers")).collect();
    // root first, the rest in sampler order
    let root_m = members.remove(root);
    members.insert(0, root_m);
    let remap = |i: usize| if i == root { 0 } else if i < root { i + 1 } else { i };
    for m in &mut members {
        m.on_top_of = m.on_top_of.map(remap);
    }
    members
}

/// Pairs of members (indices into `members`) whose overlap is sanctioned by
/// an `allow_overlap` or `on_top` edge.
fn exempt_pairs(def: &SagDef, members: &[PlacedMember]) -> BTreeSet<(usize, usize)> {
    let idx = |id: &str| members.iter().position(|m| m.sampler_id == id).expect("member per sampler");
    def.edges
        .iter()
        .filter(|e| e.allow_overlap || e.on_top)
        .map(|e| {
            let (a, b) = (idx(&e.parent), idx(&e.child));
            (a.min(b), a.max(b))
        })
        .collect()
}

/// True when every non-exempt pair of members is 3D-disjoint and stacked
/// members rest within their support's top face.
pub fn members_valid(def: &SagDef, members: &[PlacedMember]) -> bool {
    let exempt = exempt_pairs(def, members);
    for (i, m) in members.iter().enumerate() {
        if let Some(p) = m.on_top_of {
            if !members[p].footprint.inflate(1e-9).contains_rect(&m.footprint) {
                return false;
            }
        }
        for j in i + 1..members.len() {
            if !exempt.contains(&(i, j)) && m.aabb().overlaps(&members[j].aabb()) {
                return false;
            }
        }
    }
    true
}

fn bounding(members: &[PlacedMember]) -> Rect {
    members.iter().skip(1).fold(members[0].footprint, |acc, m| acc.union(&m.footprint))
}

/// Draw instances for every sampler, honoring links, and lay them out;
/// resample up to `max_attempts` times while members clip.
pub fn instantiate_sag<R: Rng + ?Sized>(
    def: &SagDef,
    catalog: &Catalog,
    split: Split,
    rng: &mut R,
    max_attempts: u32,
) -> Result<PlacedGroup> {
    if def.samplers.is_empty() {
        return Err(Error::RejectionExhausted(format!("{}: no samplers", def.id)));
    }
    let pools: Vec<Vec<&AssetInstance>> = def
        .samplers
        .iter()
        .map(|s| {
            s.resolved()
                .iter()
                .filter_map(|id| catalog.instance(id))
                .filter(|i| i.split.admits(split))
                .collect()
        })
        .collect();
    if let Some(s) = pools.iter().position(Vec::is_empty) {
        return Err(Error::RejectionExhausted(format!(
            "{}: sampler {} has no candidates in split {}",
            def.id,
            def.samplers[s].id,
            split.as_str()
        )));
    }
    for _ in 0..max_attempts {
        let mut link_pick: Vec<Option<&AssetInstance>> = vec![None; def.links.len()];
        let mut chosen = Vec::with_capacity(pools.len());
        for (s, pool) in def.samplers.iter().zip(&pools) {
            let inst = match def.link_of(&s.id) {
                Some(g) => *link_pick[g].get_or_insert_with(|| pool[rng.random_range(0..pool.len())]),
                None => pool[rng.random_range(0..pool.len())],
            };
            chosen.push(inst);
        }
        let members = layout_members(def, &chosen, Vec2::new(0.0, 0.0));
        if members_valid(def, &members) {
            let footprint = bounding(&members);
            return Ok(PlacedGroup { def_id: def.id.clone(), members, footprint });
        }
    }
    Err(Error::RejectionExhausted(format!("{} after {max_attempts} attempts", def.id)))
}

/// Number of distinct instance assignments the group can produce.
pub fn count_combinations(def: &SagDef, catalog: &Catalog) -> u128 {
    let mut total: u128 = 1;
    let linked: BTreeSet<&str> = def.links.iter().flatten().map(String::as_str).collect();
    let candidates = |s: &AssetSampler| -> BTreeSet<String> {
        if !s.resolved.is_empty() {
            s.resolved.iter().cloned().collect()
        } else if let Some(t) = &s.asset_type {
            catalog.instances_of(t).map(|i| i.id.clone()).collect()
        } else {
            s.candidates.iter().cloned().collect()
        }
    };
    for s in def.samplers.iter().filter(|s| !linked.contains(s.id.as_str())) {
        total *= candidates(s).len() as u128;
    }
    for group in &def.links {
        let mut shared: Option<BTreeSet<String>> = None;
        for id in group {
            if let Some(s) = def.samplers.iter().find(|s| &s.id == id) {
                let c = candidates(s);
                shared = Some(match shared {
                    None => c,
                    Some(prev) => prev.intersection(&c).cloned().collect(),
                });
            }
        }
        total *= shared.map_or(1, |s| s.len()) as u128;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{AssetType, MaterialCatalog};
    use crate::random::HouseRng;
    use rand::SeedableRng;

    fn ty(name: &str) -> AssetType {
        AssetType {
            name: name.into(),
            placeable_on_floor: true,
            placements: vec![Placement::Middle],
            room_weights: [(RoomType::Kitchen, 1)].into_iter().collect(),
            allow_duplicates_in_room: false,
            material_class: None,
            color_randomizable: false,
            states: vec![],
            object_bias: 0.0,
            receptacle_bias: 0.2,
            emits_light: false,
        }
    }

    fn inst(id: &str, t: &str, bbox: [f64; 3]) -> AssetInstance {
        AssetInstance {
            id: id.into(),
            asset_type: t.into(),
            bbox,
            split: Split::Train,
            is_receptacle: false,
            visibility_points: vec![],
            wall_mountable: false,
        }
    }

    fn materials() -> MaterialCatalog {
        serde_json::from_value(crate::catalog::tests::minimal_materials()).unwrap()
    }

    fn edge(parent: &str, child: &str, anchor: Anchor, pivot: Anchor, offset: [f64; 2]) -> SagEdge {
        SagEdge { parent: parent.into(), child: child.into(), anchor, pivot, offset, rotation: 0, allow_overlap: false, on_top: false }
    }

    fn table_chair(table_w: f64) -> (Catalog, SagDef) {
        let def = SagDef {
            id: "g".into(),
            placements: vec![Placement::Middle],
            room_weights: BTreeMap::new(),
            samplers: vec![AssetSampler::of_type("table", "Table"), AssetSampler::of_type("chair", "Chair")],
            edges: vec![edge(
                "table",
                "chair",
                Anchor::new(AnchorV::Center, AnchorH::Right),
                Anchor::new(AnchorV::Center, AnchorH::Left),
                [0.0, 0.0],
            )],
            links: vec![],
        };
        let c = Catalog::from_parts(
            vec![ty("Table"), ty("Chair")],
            vec![inst("Table_1", "Table", [table_w, 0.75, 0.8]), inst("Chair_1", "Chair", [0.5, 0.9, 0.5])],
            materials(),
            vec![],
            vec![def],
        )
        .unwrap();
        let def = c.semantic_asset_groups[0].clone();
        (c, def)
    }

    #[test]
    fn anchor_pivot_contact() {
        let (c, def) = table_chair(1.2);
        let g = instantiate_sag(&def, &c, Split::Train, &mut HouseRng::seed_from_u64(1), 20).unwrap();
        let table = &g.members[0];
        let chair = &g.members[1];
        // chair's left-middle touches table's right-middle
        assert!((chair.footprint.min.x - table.footprint.max.x).abs() < 1e-12);
        assert!((chair.center().z - table.center().z).abs() < 1e-12);
        assert!((chair.center().x - (0.6 + 0.25)).abs() < 1e-12);
    }

    #[test]
    fn wider_table_pushes_chair() {
        let (c1, d1) = table_chair(1.2);
        let (c2, d2) = table_chair(2.4);
        let mut rng = HouseRng::seed_from_u64(1);
        let a = instantiate_sag(&d1, &c1, Split::Train, &mut rng, 20).unwrap();
        let b = instantiate_sag(&d2, &c2, Split::Train, &mut rng, 20).unwrap();
        let shift = b.members[1].center().x - a.members[1].center().x;
        assert!((shift - 0.6).abs() < 1e-12, "shift {shift}");
        assert!((b.members[1].footprint.min.x - b.members[0].footprint.max.x).abs() < 1e-12);
    }

    #[test]
    fn translation_equivariance() {
        let (c, def) = table_chair(1.2);
        let chosen: Vec<&AssetInstance> = vec![c.instance("Table_1").unwrap(), c.instance("Chair_1").unwrap()];
        let a = layout_members(&def, &chosen, Vec2::new(0.0, 0.0));
        let t = Vec2::new(3.25, -1.5);
        let b = layout_members(&def, &chosen, t);
        for (x, y) in a.iter().zip(&b) {
            assert!(x.center().add(t).approx_eq(y.center()));
        }
    }

    #[test]
    fn clipping_everywhere_exhausts() {
        let (c, mut def) = table_chair(1.2);
        // pivot at the chair's center lands it half inside the table
        def.edges[0].pivot = Anchor::new(AnchorV::Center, AnchorH::Center);
        let r = instantiate_sag(&def, &c, Split::Train, &mut HouseRng::seed_from_u64(3), 20);
        assert!(matches!(r, Err(Error::RejectionExhausted(_))));
        // the same clip is fine when the edge allows overlap
        def.edges[0].allow_overlap = true;
        assert!(instantiate_sag(&def, &c, Split::Train, &mut HouseRng::seed_from_u64(3), 20).is_ok());
    }

    fn many(n: usize, t: &str) -> Vec<AssetInstance> {
        (0..n).map(|i| inst(&format!("{t}_{i:02}"), t, [0.5, 0.5, 0.5])).collect()
    }

    fn combo_catalog(def: SagDef, types: &[&str]) -> (Catalog, SagDef) {
        let instances = types.iter().flat_map(|t| many(30, t)).collect();
        let c = Catalog::from_parts(types.iter().map(|t| ty(t)).collect(), instances, materials(), vec![], vec![def]).unwrap();
        let d = c.semantic_asset_groups[0].clone();
        (c, d)
    }

    fn star(ids: &[(&str, &str)], links: Vec<Vec<String>>) -> SagDef {
        let a = Anchor::new(AnchorV::Center, AnchorH::Right);
        let p = Anchor::new(AnchorV::Center, AnchorH::Left);
        SagDef {
            id: "s".into(),
            placements: vec![],
            room_weights: BTreeMap::new(),
            samplers: ids.iter().map(|(id, t)| AssetSampler::of_type(id, t)).collect(),
            edges: ids.windows(2).map(|w| edge(w[0].0, w[1].0, a, p, [0.0, 0.0])).collect(),
            links,
        }
    }

    #[test]
    fn four_samplers_thirty_each() {
        let (c, d) = combo_catalog(star(&[("a", "A"), ("b", "B"), ("c", "C"), ("d", "D")], vec![]), &["A", "B", "C", "D"]);
        assert_eq!(count_combinations(&d, &c), 810_000);
    }

    #[test]
    fn linked_pair_collapses() {
        let (c, d) = combo_catalog(star(&[("a", "A"), ("b", "A")], vec![vec!["a".into(), "b".into()]]), &["A"]);
        assert_eq!(count_combinations(&d, &c), 30);
        let g = instantiate_sag(&d, &c, Split::Train, &mut HouseRng::seed_from_u64(9), 20).unwrap();
        assert_eq!(g.members[0].instance_id, g.members[1].instance_id);
    }

    #[test]
    fn empty_def_counts_one() {
        let (c, _) = table_chair(1.0);
        let def = SagDef { id: "e".into(), placements: vec![], room_weights: BTreeMap::new(), samplers: vec![], edges: vec![], links: vec![] };
        assert_eq!(count_combinations(&def, &c), 1);
    }

    #[test]
    fn world_poses_follow_convention() {
        let (c, def) = table_chair(1.2);
        let g = instantiate_sag(&def, &c, Split::Train, &mut HouseRng::seed_from_u64(1), 20).unwrap();
        // group footprint spans u in [-0.6, 1.1]; center u = 0.25
        let poses = g.world_poses(Vec2::new(5.0, 5.0), 0);
        assert!(poses[1].0.approx_eq(Vec2::new(5.0 + 0.6, 5.0)));
        // yaw 180 mirrors u
        let poses = g.world_poses(Vec2::new(5.0, 5.0), 180);
        assert!(poses[1].0.approx_eq(Vec2::new(5.0 - 0.6, 5.0)));
    }

    #[test]
    fn two_roots_rejected() {
        let def = SagDef {
            id: "bad".into(),
            placements: vec![],
            room_weights: BTreeMap::new(),
            samplers: vec![AssetSampler::of_type("a", "A"), AssetSampler::of_type("b", "A")],
            edges: vec![],
            links: vec![],
        };
        let r = Catalog::from_parts(vec![ty("A")], many(2, "A"), materials(), vec![], vec![def]);
        assert!(matches!(r, Err(Error::Schema { .. })));
    }
}
