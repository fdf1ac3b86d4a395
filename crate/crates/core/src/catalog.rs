//! Asset, material and spawn-probability databases.
//!
//! The catalog file is a single JSON document; see `data/catalog.schema.md`
//! for the field reference. Everything here is immutable after [`load_catalog`]
//! and safe to share between generator threads.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::Vec3;
use crate::roomspec::RoomType;
use crate::sag::SagDef;

pub const CATALOG_SCHEMA_VERSION: u32 = 1;

/// Asset types the generator treats specially.
pub mod names {
    pub const DOORWAY: &str = "Doorway";
    pub const DOORFRAME: &str = "Doorframe";
    pub const WINDOW: &str = "Window";
    pub const PAINTING: &str = "Painting";
    pub const TELEVISION: &str = "Television";
}

/// Types with at most this many instances may use the `any` split.
pub const ANY_SPLIT_MAX_INSTANCES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Placement {
    Edge,
    Corner,
    Middle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Split {
    Train,
    Val,
    Test,
    Any,
}

impl Split {
    /// Whether an instance tagged `self` may appear in a house of split `house`.
    pub fn admits(self, house: Split) -> bool {
        self == Split::Any || self == house || house == Split::Any
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Split::Train => "train",
            Split::Val => "val",
            Split::Test => "test",
            Split::Any => "any",
        }
    }
}

impl std::str::FromStr for Split {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "train" => Ok(Split::Train),
            "val" => Ok(Split::Val),
            "test" => Ok(Split::Test),
            "any" => Ok(Split::Any),
            other => Err(format!("unknown split `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StateKind {
    Toggleable,
    Dirtyable,
    Openable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TimeOfDay {
    Midday,
    GoldenHour,
    BlueHour,
}

fn default_receptacle_bias() -> f64 {
    0.2
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssetType {
    pub name: String,
    pub placeable_on_floor: bool,
    #[serde(default)]
    pub placements: Vec<Placement>,
    #[serde(default)]
    pub room_weights: BTreeMap<RoomType, u8>,
    #[serde(default)]
    pub allow_duplicates_in_room: bool,
    #[serde(default)]
    pub material_class: Option<String>,
    #[serde(default)]
    pub color_randomizable: bool,
    #[serde(default)]
    pub states: Vec<StateKind>,
    #[serde(default)]
    pub object_bias: f64,
    #[serde(default = "default_receptacle_bias")]
    pub receptacle_bias: f64,
    #[serde(default)]
    pub emits_light: bool,
}

impl AssetType {
    pub fn room_weight(&self, room: RoomType) -> u8 {
        self.room_weights.get(&room).copied().unwrap_or(0)
    }

    pub fn supports(&self, p: Placement) -> bool {
        self.placements.contains(&p)
    }

    pub fn has_state(&self, s: StateKind) -> bool {
        self.states.contains(&s)
    }
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssetInstance {
    pub id: String,
    pub asset_type: String,
    /// Extents (x width, y height, z depth) in meters; the front faces +z.
    pub bbox: [f64; 3],
    pub split: Split,
    #[serde(default)]
    pub is_receptacle: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub visibility_points: Vec<[f64; 3]>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub wall_mountable: bool,
}

impl AssetInstance {
    pub fn width(&self) -> f64 {
        self.bbox[0]
    }

    pub fn height(&self) -> f64 {
        self.bbox[1]
    }

    pub fn depth(&self) -> f64 {
        self.bbox[2]
    }

    /// Visibility points relative to the bbox center; the 6 face centers when
    /// none are authored.
    pub fn visibility_points(&self) -> Vec<Vec3> {
        if !self.visibility_points.is_empty() {
            return self.visibility_points.iter().map(|p| Vec3::new(p[0], p[1], p[2])).collect();
        }
        let [x, y, z] = self.bbox.map(|v| v / 2.0);
        vec![
            Vec3::new(x, 0.0, 0.0),
            Vec3::new(-x, 0.0, 0.0),
            Vec3::new(0.0, y, 0.0),
            Vec3::new(0.0, -y, 0.0),
            Vec3::new(0.0, 0.0, z),
            Vec3::new(0.0, 0.0, -z),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaterialCatalog {
    pub solid_colors: Vec<[u8; 3]>,
    pub wall_textures: Vec<String>,
    pub floor_materials: Vec<String>,
    pub skyboxes: BTreeMap<TimeOfDay, Vec<String>>,
    /// Per-time-of-day selection weight for every skybox in that group;
    /// uniform over all skyboxes when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skybox_weights: Option<BTreeMap<TimeOfDay, f64>>,
    #[serde(default)]
    pub object_materials: BTreeMap<String, Vec<String>>,
}

impl MaterialCatalog {
    pub fn skybox_count(&self) -> usize {
        self.skyboxes.values().map(Vec::len).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpawnEntry {
    pub receptacle_type: String,
    pub object_type: String,
    /// Times the object type was seen on the receptacle type.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object_count: Option<u32>,
    /// Times the receptacle type was seen.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub receptacle_count: Option<u32>,
    pub p_spawn: f64,
}

/// `(receptacle_type, object_type) -> p_spawn`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SpawnTable {
    entries: Vec<SpawnEntry>,
    #[serde(skip)]
    lookup: HashMap<String, Vec<(String, f64)>>,
}

impl SpawnTable {
    pub fn new(entries: Vec<SpawnEntry>) -> Self {
        let mut t = SpawnTable { entries, lookup: HashMap::new() };
        t.reindex();
        t
    }

    fn reindex(&mut self) {
        self.lookup.clear();
        for e in &self.entries {
            self.lookup.entry(e.receptacle_type.clone()).or_default().push((e.object_type.clone(), e.p_spawn));
        }
        for v in self.lookup.values_mut() {
            v.sort_by(|a, b| a.0.cmp(&b.0));
        }
    }

    pub fn entries(&self) -> &[SpawnEntry] {
        &self.entries
    }

    /// Object types that have been seen on a receptacle type, sorted by name.
    pub fn objects_for(&self, receptacle_type: &str) -> &[(String, f64)] {
        self.lookup.get(receptacle_type).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Probability that `object_type` appears on a `receptacle_type`; 0 when the
/// pair never co-occurs.
pub fn spawn_probability(table: &SpawnTable, receptacle_type: &str, object_type: &str) -> f64 {
    table
        .objects_for(receptacle_type)
        .binary_search_by(|(o, _)| o.as_str().cmp(object_type))
        .map(|i| table.objects_for(receptacle_type)[i].1)
        .unwrap_or(0.0)
}

#[derive(Debug, Clone, Default)]
struct CatalogIndex {
    types: HashMap<String, usize>,
    instances: HashMap<String, usize>,
    by_type: HashMap<String, Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Catalog {
    pub schema_version: u32,
    pub asset_types: Vec<AssetType>,
    pub asset_instances: Vec<AssetInstance>,
    pub materials: MaterialCatalog,
    pub spawn_table: SpawnTable,
    #[serde(default)]
    pub semantic_asset_groups: Vec<SagDef>,
    #[serde(skip)]
    index: CatalogIndex,
}

impl PartialEq for Catalog {
    fn eq(&self, o: &Self) -> bool {
        self.schema_version == o.schema_version
            && self.asset_types == o.asset_types
            && self.asset_instances == o.asset_instances
            && self.materials == o.materials
            && self.spawn_table == o.spawn_table
            && self.semantic_asset_groups == o.semantic_asset_groups
    }
}

impl Catalog {
    /// Build and validate a catalog from its parts.
    pub fn from_parts(
        asset_types: Vec<AssetType>,
        asset_instances: Vec<AssetInstance>,
        materials: MaterialCatalog,
        spawn_entries: Vec<SpawnEntry>,
        semantic_asset_groups: Vec<SagDef>,
    ) -> Result<Self> {
        let mut c = Catalog {
            schema_version: CATALOG_SCHEMA_VERSION,
            asset_types,
            asset_instances,
            materials,
            spawn_table: SpawnTable::new(spawn_entries),
            semantic_asset_groups,
            index: CatalogIndex::default(),
        };
        c.finish()?;
        Ok(c)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let mut c: Catalog = serde_json::from_str(text).map_err(|e| Error::parse("catalog", e))?;
        c.spawn_table.reindex();
        c.finish()?;
        Ok(c)
    }

    fn finish(&mut self) -> Result<()> {
        if self.schema_version != CATALOG_SCHEMA_VERSION {
            return Err(Error::schema(
                "schema_version",
                format!("expected {CATALOG_SCHEMA_VERSION}, found {}", self.schema_version),
            ));
        }
        self.asset_types.sort_by(|a, b| a.name.cmp(&b.name));
        self.asset_instances.sort_by(|a, b| a.id.cmp(&b.id));
        self.semantic_asset_groups.sort_by(|a, b| a.id.cmp(&b.id));

        let mut index = CatalogIndex::default();
        for (i, t) in self.asset_types.iter().enumerate() {
            let loc = format!("asset_types/{}", t.name);
            if index.types.insert(t.name.clone(), i).is_some() {
                return Err(Error::schema(loc, "duplicate asset type"));
            }
            if let Some((room, w)) = t.room_weights.iter().find(|(_, w)| **w > 3) {
                return Err(Error::schema(loc, format!("room weight {w} for {room} outside 0..=3")));
            }
            if t.placeable_on_floor == t.placements.is_empty() {
                return Err(Error::schema(loc, "placements must be nonempty exactly when placeable_on_floor"));
            }
            if !t.object_bias.is_finite() || !t.receptacle_bias.is_finite() {
                return Err(Error::schema(loc, "biases must be finite"));
            }
        }
        for (i, inst) in self.asset_instances.iter().enumerate() {
            let loc = format!("asset_instances/{}", inst.id);
            if index.instances.insert(inst.id.clone(), i).is_some() {
                return Err(Error::schema(loc, "duplicate instance id"));
            }
            if !index.types.contains_key(&inst.asset_type) {
                return Err(Error::schema(loc, format!("unknown asset type {}", inst.asset_type)));
            }
            if inst.bbox.iter().any(|v| !(v.is_finite() && *v > 0.0)) {
                return Err(Error::schema(loc, "bbox extents must be positive"));
            }
            if inst.visibility_points.len() > 6 {
                return Err(Error::schema(loc, "at most 6 visibility points"));
            }
            index.by_type.entry(inst.asset_type.clone()).or_default().push(i);
        }
        for inst in &self.asset_instances {
            let n = index.by_type[&inst.asset_type].len();
            if inst.split == Split::Any && n > ANY_SPLIT_MAX_INSTANCES {
                return Err(Error::schema(
                    format!("asset_instances/{}", inst.id),
                    format!("split `any` requires <= {ANY_SPLIT_MAX_INSTANCES} instances of {}, found {n}", inst.asset_type),
                ));
            }
        }

        let m = &self.materials;
        if m.solid_colors.is_empty() || m.wall_textures.is_empty() || m.floor_materials.is_empty() {
            return Err(Error::schema("materials", "material lists must be nonempty"));
        }
        if m.skybox_count() == 0 || m.skyboxes.values().any(Vec::is_empty) {
            return Err(Error::schema("materials/skyboxes", "every time of day needs at least one skybox"));
        }
        if let Some(w) = &m.skybox_weights {
            if w.values().any(|v| !(v.is_finite() && *v >= 0.0)) || w.values().all(|v| *v == 0.0) {
                return Err(Error::schema("materials/skybox_weights", "weights must be nonnegative, not all zero"));
            }
        }
        for t in &self.asset_types {
            if let Some(class) = &t.material_class {
                if let Some(list) = m.object_materials.get(class) {
                    if list.is_empty() {
                        return Err(Error::schema(format!("materials/object_materials/{class}"), "empty class"));
                    }
                }
            }
        }

        for e in self.spawn_table.entries() {
            let loc = format!("spawn_table/{}/{}", e.receptacle_type, e.object_type);
            if !(0.0..=1.0).contains(&e.p_spawn) {
                return Err(Error::schema(loc, "p_spawn outside [0, 1]"));
            }
            if !index.types.contains_key(&e.receptacle_type) || !index.types.contains_key(&e.object_type) {
                return Err(Error::schema(loc, "unknown asset type"));
            }
        }

        self.index = index;
        let mut groups = std::mem::take(&mut self.semantic_asset_groups);
        for g in &mut groups {
            g.resolve(self)?;
        }
        self.semantic_asset_groups = groups;
        Ok(())
    }

    pub fn asset_type(&self, name: &str) -> Option<&AssetType> {
        self.index.types.get(name).map(|i| &self.asset_types[*i])
    }

    pub fn instance(&self, id: &str) -> Option<&AssetInstance> {
        self.index.instances.get(id).map(|i| &self.asset_instances[*i])
    }

    pub fn instance_type(&self, id: &str) -> Option<&AssetType> {
        self.instance(id).and_then(|i| self.asset_type(&i.asset_type))
    }

    /// Instances of a type, sorted by id.
    pub fn instances_of<'a>(&'a self, asset_type: &str) -> impl Iterator<Item = &'a AssetInstance> + 'a {
        self.index
            .by_type
            .get(asset_type)
            .into_iter()
            .flatten()
            .map(move |i| &self.asset_instances[*i])
    }

    pub fn instances_in_split<'a>(&'a self, asset_type: &str, split: Split) -> Vec<&'a AssetInstance> {
        self.instances_of(asset_type).filter(|i| i.split.admits(split)).collect()
    }

    pub fn sag(&self, id: &str) -> Option<&SagDef> {
        self.semantic_asset_groups.iter().find(|g| g.id == id)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("catalog serializes")
    }
}

pub fn load_catalog(path: impl AsRef<Path>) -> Result<Catalog> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    Catalog::from_json_str(&text)
}

/// Padded fit of an object footprint (`o_w` x `o_h`) into a rectangle
/// (`r_w` x `r_h`), in either of the two axis-aligned orientations.
pub fn fits_either_orientation(o_w: f64, o_h: f64, r_w: f64, r_h: f64, pad: f64) -> bool {
    const TOL: f64 = 1e-9;
    (o_h + pad <= r_w + TOL && o_w + pad <= r_h + TOL) || (o_h + pad <= r_h + TOL && o_w + pad <= r_w + TOL)
}

/// Floor-placeable instances that semantically and physically fit a
/// rectangle, sorted by id.
pub fn filter_floor_assets<'a>(
    catalog: &'a Catalog,
    room_type: RoomType,
    placement: Placement,
    split: Split,
    max_footprint: (f64, f64),
    pad: f64,
) -> Vec<&'a AssetInstance> {
    assert!(max_footprint.0 > 0.0 && max_footprint.1 > 0.0, "max_footprint must be positive");
    catalog
        .asset_instances
        .iter()
        .filter(|inst| {
            let t = catalog.asset_type(&inst.asset_type).expect("indexed");
            t.placeable_on_floor
                && t.room_weight(room_type) > 0
                && t.supports(placement)
                && inst.split.admits(split)
                && fits_either_orientation(inst.width(), inst.depth(), max_footprint.0, max_footprint.1, pad)
        })
        .collect()
}
