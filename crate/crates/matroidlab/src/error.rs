use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A subset referenced elements outside the ground set, or an argument
    /// was structurally malformed (bad partition, unknown label, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The ground-set size guard or another hard resource bound was exceeded.
    #[error("resource guard: {0}")]
    Resource(String),

    /// An operation's precondition (3-connectivity, minimum size, ...) failed.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Two routes that must agree disagreed. Always a library bug, never a
    /// user-reachable state.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    /// A constructor was given invalid parameters or its post-construction
    /// validation failed.
    #[error("construction error: {0}")]
    Construction(String),

    /// A document could not be parsed into a matroid.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
