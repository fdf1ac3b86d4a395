//! Weighted room-spec trees: which rooms a house has, how large they are
//! relative to their siblings, and which of them may share doors.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::random::choose_weighted;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RoomType {
    Bedroom,
    Bathroom,
    Kitchen,
    LivingRoom,
}

impl RoomType {
    pub const ALL: [RoomType; 4] = [RoomType::Bedroom, RoomType::Bathroom, RoomType::Kitchen, RoomType::LivingRoom];

    pub fn as_str(self) -> &'static str {
        match self {
            RoomType::Bedroom => "bedroom",
            RoomType::Bathroom => "bathroom",
            RoomType::Kitchen => "kitchen",
            RoomType::LivingRoom => "living_room",
        }
    }
}

impl fmt::Display for RoomType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    Zone,
    Room,
}

/// Inclusive integer bounds overriding the default boundary-size sampler.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundaryOverride {
    pub x_size: (u32, u32),
    pub z_size: (u32, u32),
}

fn default_weight() -> f64 {
    1.0
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SpecNode {
    pub kind: NodeKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub room_type: Option<RoomType>,
    #[serde(default = "default_weight")]
    pub growth_weight: f64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<SpecNode>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub avoid_door_to_parent: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary_override: Option<BoundaryOverride>,
}

impl SpecNode {
    pub fn room(room_type: RoomType, growth_weight: f64) -> Self {
        SpecNode {
            kind: NodeKind::Room,
            room_type: Some(room_type),
            growth_weight,
            children: Vec::new(),
            avoid_door_to_parent: false,
            boundary_override: None,
        }
    }

    pub fn zone(children: Vec<SpecNode>, growth_weight: f64) -> Self {
        SpecNode {
            kind: NodeKind::Zone,
            room_type: None,
            growth_weight,
            children,
            avoid_door_to_parent: false,
            boundary_override: None,
        }
    }

    pub fn avoiding_parent(mut self) -> Self {
        self.avoid_door_to_parent = true;
        self
    }

    pub fn is_leaf(&self) -> bool {
        self.kind == NodeKind::Room
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a SpecNode>) {
        if self.is_leaf() {
            out.push(self);
        } else {
            for c in &self.children {
                c.collect_leaves(out);
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        if self.is_leaf() {
            1
        } else {
            self.children.iter().map(SpecNode::leaf_count).sum()
        }
    }

    fn check(&self, path: &str, is_root: bool) -> Result<()> {
        if !(self.growth_weight.is_finite() && self.growth_weight > 0.0) {
            return Err(Error::schema(path, "growthWeight must be a positive number"));
        }
        if !is_root && self.boundary_override.is_some() {
            return Err(Error::schema(path, "boundaryOverride is only allowed on the root node"));
        }
        if let Some(b) = &self.boundary_override {
            if b.x_size.0 < 2 || b.z_size.0 < 2 || b.x_size.0 > b.x_size.1 || b.z_size.0 > b.z_size.1 {
                return Err(Error::schema(path, "boundaryOverride bounds must satisfy 2 <= min <= max"));
            }
        }
        match self.kind {
            NodeKind::Room => {
                if self.room_type.is_none() {
                    return Err(Error::schema(path, "room node needs a roomType"));
                }
                if !self.children.is_empty() {
                    return Err(Error::schema(path, "room node cannot have children"));
                }
            }
            NodeKind::Zone => {
                if self.room_type.is_some() {
                    return Err(Error::schema(path, "zone node cannot have a roomType"));
                }
                if self.children.len() < 2 {
                    return Err(Error::schema(path, "zone needs at least 2 children"));
                }
                for (i, c) in self.children.iter().enumerate() {
                    c.check(&format!("{path}/children/{i}"), false)?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct RoomSpec {
    pub id: String,
    pub sampling_weight: f64,
    pub root: SpecNode,
}

/// Room leaf flattened out of a spec, in pre-order.
#[derive(Debug, Clone, PartialEq)]
pub struct LeafInfo {
    pub index: usize,
    pub room_type: RoomType,
    /// Child-index path from the root.
    pub path: Vec<usize>,
    pub avoid_door_to_parent: bool,
}

impl RoomSpec {
    pub fn new(id: impl Into<String>, sampling_weight: f64, root: SpecNode) -> Result<Self> {
        let spec = RoomSpec { id: id.into(), sampling_weight, root };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let loc = format!("spec {}", self.id);
        if !(self.sampling_weight.is_finite() && self.sampling_weight > 0.0) {
            return Err(Error::schema(loc, "samplingWeight must be positive"));
        }
        self.root.check(&format!("{loc}/root"), true)
    }

    /// Leaves in pre-order.
    pub fn leaves(&self) -> Vec<LeafInfo> {
        fn walk(node: &SpecNode, path: &mut Vec<usize>, out: &mut Vec<LeafInfo>) {
            if node.is_leaf() {
                out.push(LeafInfo {
                    index: out.len(),
                    room_type: node.room_type.expect("validated"),
                    path: path.clone(),
                    avoid_door_to_parent: node.avoid_door_to_parent,
                });
                return;
            }
            for (i, c) in node.children.iter().enumerate() {
                path.push(i);
                walk(c, path, out);
                path.pop();
            }
        }
        let mut out = Vec::new();
        walk(&self.root, &mut Vec::new(), &mut out);
        out
    }

    pub fn room_count(&self) -> usize {
        self.root.leaf_count()
    }

    pub fn node_at(&self, path: &[usize]) -> &SpecNode {
        path.iter().fold(&self.root, |n, i| &n.children[*i])
    }

    pub fn leaf_nodes(&self) -> Vec<&SpecNode> {
        let mut out = Vec::new();
        self.root.collect_leaves(&mut out);
        out
    }
}

pub fn parse_room_spec(doc: &serde_json::Value) -> Result<RoomSpec> {
    let spec: RoomSpec = serde_json::from_value(doc.clone()).map_err(|e| Error::parse("room spec", e))?;
    spec.validate()?;
    Ok(spec)
}

/// Parse a room-spec file body: a JSON array of specs.
pub fn parse_room_specs(text: &str) -> Result<Vec<RoomSpec>> {
    let docs: Vec<serde_json::Value> = serde_json::from_str(text).map_err(|e| Error::parse("room-spec file", e))?;
    let specs = docs.iter().map(parse_room_spec).collect::<Result<Vec<_>>>()?;
    let mut ids: Vec<&str> = specs.iter().map(|s| s.id.as_str()).collect();
    ids.sort_unstable();
    if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::schema(format!("spec {}", w[0]), "duplicate spec id"));
    }
    Ok(specs)
}

pub fn load_room_specs(path: impl AsRef<std::path::Path>) -> Result<Vec<RoomSpec>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    parse_room_specs(&text)
}

pub fn sample_room_spec<'a, R: Rng + ?Sized>(registry: &'a [RoomSpec], rng: &mut R) -> Result<&'a RoomSpec> {
    if registry.is_empty() {
        return Err(Error::EmptyRegistry);
    }
    let weights: Vec<f64> = registry.iter().map(|s| s.sampling_weight).collect();
    let i = choose_weighted(rng, &weights).ok_or(Error::EmptyRegistry)?;
    Ok(&registry[i])
}
