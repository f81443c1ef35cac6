use thiserror::Error;

/// Errors raised while building or checking algebraic objects.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("algebra violates {law}: {detail}")]
    Algebra { law: &'static str, detail: String },

    #[error("invalid group action at {element}: {detail}")]
    Action { element: String, detail: String },

    #[error("reduced tensor slots need the unit as basis vector 0 ({detail})")]
    ReducedBasis { detail: String },

    #[error("map does not descend to the quotient ({context}): {detail}")]
    WellDefinedness { context: String, detail: String },

    #[error("d∘d ≠ 0 in {context} at degree {degree}: {detail}")]
    Complex {
        context: String,
        degree: usize,
        detail: String,
    },

    #[error("not a chain map ({context}) at degree {degree}: {detail}")]
    ChainMap {
        context: String,
        degree: usize,
        detail: String,
    },

    #[error("identity check `{name}` failed: {detail}")]
    Identity { name: String, detail: String },

    #[error("dimension mismatch: {0}")]
    Shape(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
