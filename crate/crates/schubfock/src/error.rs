use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An enumeration was asked to run past the configured caps.
    #[error("bound exceeded: {what} = {got} > cap {cap}")]
    BoundExceeded {
        what: &'static str,
        got: usize,
        cap: usize,
    },

    /// A word was required to be reduced and is not.
    #[error("word is not reduced")]
    NotReduced,

    /// A permutation was required to be k-Grassmannian and is not.
    #[error("permutation is not {k}-Grassmannian")]
    NotGrassmannian { k: i64 },

    /// A Maya diagram violates its balance or window invariants.
    #[error("malformed Maya diagram: {0}")]
    MalformedMaya(String),

    /// A partition argument has the wrong size for the operation.
    #[error("size mismatch: |alpha| = {got}, expected {expected}")]
    SizeMismatch { got: usize, expected: usize },

    /// Edelman-Greene extraction met a basis vector outside the
    /// k-Grassmannians; this signals an implementation bug.
    #[error("non-Grassmannian support in EG extraction: {0}")]
    NonGrassmannianSupport(String),

    /// Edelman-Greene extraction met a non-integral coefficient; this
    /// signals an implementation bug.
    #[error("non-integral coefficient in EG extraction: {0}")]
    NonIntegralCoefficient(String),

    /// The pair handed to a primitivity test is not a strong ribbon.
    #[error("not a k-strong ribbon pair")]
    NotStrongRibbon,

    /// The permutation mixes {..,-1,0} with {1,2,..}, so it does not lie
    /// in the subgroup generated by the s_i with i != 0.
    #[error("permutation is not in S_{{!=0}}")]
    NotInSNeq0,

    /// Schubert polynomials are only defined on positive windows here.
    #[error("permutation moves a nonpositive integer")]
    UnsupportedWindow,

    /// The back-stable shift limit did not stabilize within its cutoff,
    /// which indicates a convention bug rather than a small cap.
    #[error("shift limit did not converge within m <= {cutoff}")]
    NoConvergence { cutoff: i64 },

    /// Skew-shape operation with mu not contained in lambda.
    #[error("partition {inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    /// Schur expansion of a polynomial that is not symmetric in the
    /// declared variables.
    #[error("polynomial is not symmetric in x_1..x_{nvars}")]
    NotSymmetric { nvars: usize },

    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
