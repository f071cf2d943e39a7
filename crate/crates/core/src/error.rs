use thiserror::Error;

/// Errors raised by the categorical kernel and its instances.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatError {
    /// `compose(g, f)` with `cod(f) != dom(g)`, or any other object mismatch.
    #[error("{op}: expected {expected}, found {found}")]
    Mismatch {
        op: &'static str,
        expected: String,
        found: String,
    },

    #[error("{0} is not a product object")]
    NotAProduct(String),

    #[error("{0} is not a coproduct object")]
    NotACoproduct(String),

    #[error("{0} is not an exponential object")]
    NotAnExponential(String),

    /// The hom-set is empty (e.g. a nonempty set into the empty set, or `a ≰ b`).
    #[error("no arrow {dom} -> {cod}")]
    NoArrow { dom: String, cod: String },

    /// A finite-set object or arrow space would exceed the configured bound.
    #[error("{what} has {count} elements, above the cap of {cap}")]
    TooLarge { what: String, count: u128, cap: u128 },

    #[error("interpretation failed: {0}")]
    Interpretation(String),
}

pub type Result<T> = std::result::Result<T, CatError>;

pub(crate) fn mismatch(op: &'static str, expected: impl ToString, found: impl ToString) -> CatError {
    CatError::Mismatch {
        op,
        expected: expected.to_string(),
        found: found.to_string(),
    }
}
