pub mod catalog;
pub mod connectivity;
pub mod dressing;
pub mod error;
pub mod furnish;
pub mod geom;
pub mod house;
pub mod layout;
pub mod pipeline;
pub mod random;
pub mod roomspec;
pub mod sag;
pub mod stats;
pub mod svg;
pub mod validate;

pub use error::{Error, Result};
