use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("point difference is torsion of order {order}")]
    Torsion { order: u32 },
    #[error("place not defined over the base field: {0}")]
    UnresolvedPlace(String),
    #[error("local expansion precision exhausted: {0}")]
    Precision(String),
    #[error("generators do not span degree {degree}: missing pole order {pole} at the primary point")]
    NotGenerated { degree: i64, pole: i64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
