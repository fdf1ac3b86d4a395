//! Per-object color, material and state randomization.

use rand::Rng;

use crate::catalog::{Catalog, StateKind};
use crate::house::Object;

pub const P_COLOR: f64 = 0.8;
pub const P_MATERIAL: f64 = 0.8;
pub const P_STATE: f64 = 0.5;

pub fn state_name(s: StateKind) -> &'static str {
    match s {
        StateKind::Toggleable => "isToggled",
        StateKind::Dirtyable => "isDirty",
        StateKind::Openable => "isOpen",
    }
}

/// Random colors on color-randomizable objects and, with probability
/// [`P_MATERIAL`] per house, material swaps within each object's material
/// class. A no-op when `enabled` is false. Returns whether materials were
/// swapped.
pub fn randomize_appearance<R: Rng + ?Sized>(
    objects: &mut [Object],
    catalog: &Catalog,
    enabled: bool,
    rng: &mut R,
) -> bool {
    if !enabled {
        return false;
    }
    let swap = rng.random_bool(P_MATERIAL);
    for o in objects {
        o.walk_mut(&mut |o| {
            let t = catalog.asset_type(&o.asset_type).expect("type exists");
            if t.color_randomizable && rng.random_bool(P_COLOR) {
                o.color = Some([rng.random(), rng.random(), rng.random()]);
            }
            if swap {
                if let Some(pool) = t.material_class.as_ref().and_then(|c| catalog.materials.object_materials.get(c)) {
                    if !pool.is_empty() {
                        o.material = Some(pool[rng.random_range(0..pool.len())].clone());
                    }
                }
            }
        });
    }
    swap
}

/// Coin-flip every state an object's type declares.
pub fn randomize_states<R: Rng + ?Sized>(objects: &mut [Object], catalog: &Catalog, rng: &mut R) {
    for o in objects {
        o.walk_mut(&mut |o| {
            let t = catalog.asset_type(&o.asset_type).expect("type exists");
            for s in &t.states {
                o.states.insert(state_name(*s).to_string(), rng.random_bool(P_STATE));
            }
        });
    }
}
