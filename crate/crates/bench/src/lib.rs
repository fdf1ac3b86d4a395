//! Shared inputs for the generator benchmarks.

use std::path::PathBuf;

use prochouse::catalog::{load_catalog, Catalog};
use prochouse::roomspec::{load_room_specs, RoomSpec};

/// Shipped data directory, resolved from this crate so benches run from any cwd.
pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub fn shipped_inputs() -> (Vec<RoomSpec>, Catalog) {
    let d = data_dir();
    let specs = load_room_specs(d.join("room_specs.json")).expect("shipped registry loads");
    let catalog = load_catalog(d.join("catalog.json")).expect("shipped catalog loads");
    (specs, catalog)
}
