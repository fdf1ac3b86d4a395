//! Floor, wall and surface object placement, then appearance and states.

pub mod floor;
pub mod nav;
pub mod open_area;
pub mod randomize;
pub mod surface;
pub mod wall;

pub use floor::{place_floor_objects, FloorOutcome, FloorRoom, PlacementBudget};
pub use nav::{NavGuard, NavSpec};
pub use open_area::{decompose_open_area, OpenArea};
pub use randomize::{randomize_appearance, randomize_states};
pub use surface::{place_surface_objects, sample_house_bias};
pub use wall::{place_paintings, place_television, place_windows, WallSpace};
