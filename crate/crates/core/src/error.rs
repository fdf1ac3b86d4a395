use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error in {context}: {message}")]
    Parse { context: String, message: String },

    #[error("schema error at {location}: {message}")]
    Schema { location: String, message: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("room-spec registry is empty")]
    EmptyRegistry,

    #[error("floor-plan subdivision failed: {0}")]
    SubdivisionFailure(String),

    #[error("room connectivity infeasible: {0}")]
    ConnectivityInfeasible(String),

    #[error("placement exhausted: {0}")]
    PlacementExhausted(String),

    #[error("asset group {0} rejected on every attempt")]
    RejectionExhausted(String),

    #[error("agent cannot be placed anywhere in the house")]
    NoFreeCell,

    #[error("no target type has a reachable instance")]
    NoReachableTarget,

    #[error("house generation failed after {attempts} attempts: {last}")]
    GenerationFailure { attempts: u32, last: String },
}

impl Error {
    pub fn schema(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema { location: location.into(), message: message.into() }
    }

    pub fn parse(context: impl Into<String>, message: impl std::fmt::Display) -> Self {
        Error::Parse { context: context.into(), message: message.to_string() }
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
