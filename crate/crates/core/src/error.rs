//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors reported by the library.
///
/// Every operation that can fail returns `Result<T, Error>`; operations whose
/// preconditions are enforced by construction (e.g. matrix shapes) panic on
/// violation instead, since that indicates a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Polynomial division left a nonzero remainder (or a non-integer
    /// quotient coefficient). Doubles as the "not a factor" signal during
    /// trial division.
    #[error("inexact polynomial division")]
    InexactDivision,

    /// A nontrivial residue remained after trial division by every candidate
    /// cyclotomic polynomial, so the input is not a product of cyclotomics.
    #[error("polynomial is not a product of cyclotomic polynomials")]
    NotCyclotomicProduct,

    /// Requested rank is outside the valid range for the family.
    #[error("rank {rank} out of range for family {family}")]
    RankOutOfRange {
        /// Family name as displayed (e.g. "B").
        family: &'static str,
        /// The offending rank.
        rank: usize,
    },

    /// The left kernel of a supposedly affine Cartan matrix does not have
    /// dimension one, or its generator cannot be normalized to positive
    /// integer entries. Impossible for matrices built by this crate.
    #[error("left kernel is not one-dimensional positive")]
    KernelDimension,

    /// A linear system with a singular coefficient matrix. Impossible for
    /// finite Cartan matrices (their determinant is positive).
    #[error("singular matrix in exact linear solve")]
    SingularMatrix,

    /// Family A requires an explicit branch-vertex choice (every vertex of
    /// the cycle attains the maximal weight).
    #[error("family A requires an explicit branch vertex choice")]
    ChoiceRequired,

    /// An explicit branch-vertex choice was supplied for a family whose
    /// branch vertex is determined by the weight function.
    #[error("branch vertex choice is only accepted for family A")]
    ChoiceForbidden,

    /// A branch-vertex choice outside 1..=rank.
    #[error("branch vertex {vertex} out of range 1..={rank}")]
    ChoiceOutOfRange {
        /// The offending vertex.
        vertex: usize,
        /// Rank of the diagram.
        rank: usize,
    },

    /// Family A requires a conjugacy-class index for its Coxeter polynomial.
    #[error("family A requires a conjugacy class index")]
    ClassIndexRequired,

    /// A class index was supplied for a tree diagram (single class).
    #[error("class index is only accepted for family A")]
    ClassIndexForbidden,

    /// Class index outside 1..=floor((rank+1)/2).
    #[error("class index {index} out of range 1..={max}")]
    ClassIndexOutOfRange {
        /// The offending class index.
        index: usize,
        /// Largest valid class index.
        max: usize,
    },

    /// No Chebyshev closed form exists for the requested family.
    #[error("no closed form for family {family}")]
    UnsupportedFamily {
        /// Family name as displayed.
        family: &'static str,
    },

    /// The multiplicity of the cyclotomic factor x - 1 is not exactly two,
    /// so the polynomial is not an affine Coxeter polynomial.
    #[error("multiplicity of (x-1) is {found}, expected exactly 2")]
    UnitMultiplicity {
        /// Multiplicity found for the index-1 cyclotomic factor.
        found: u32,
    },

    /// Spectrum checks require a bipartite diagram; the odd cycles of family
    /// A (odd matrix dimension) are rejected rather than silently compared.
    #[error("diagram is not bipartite")]
    NotBipartite,
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
