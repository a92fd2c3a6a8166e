//! Exact computation of the characteristic polynomials, Coxeter polynomials,
//! affine exponents and affine Coxeter numbers of untwisted affine Lie
//! algebras, with every quantity derivable by at least two independent
//! routes.
//!
//! For an affine Cartan matrix `C` of dimension `n` with Coxeter adjacency
//! matrix `A = 2I - C`, the crate works with four polynomial families:
//!
//! * `p_n(x) = det(xI - C)` — characteristic polynomial of the Cartan matrix,
//! * `q_n(x) = det(2xI + A)`,
//! * `a_n(x) = q_n(x/2) = det(xI + A)` — characteristic polynomial of `-A`,
//! * `Q_n(x) = x^n a_n(x + 1/x)` — the palindromic lift,
//!
//! related by `p_n(x) = a_n(x - 2) = q_n(x/2 - 1)`. The `q_n` have Chebyshev
//! closed forms for the classical families, the `a_n` factor into the
//! polynomials Ψ_j, and the Coxeter polynomials factor into cyclotomics,
//! which is what makes exact cross-verification possible.
//!
//! Module map:
//!
//! * [`polyalgebra`] — big-integer polynomials, Chebyshev/cyclotomic/Ψ
//!   generators, cyclotomic factorization, symmetrized lift.
//! * [`matrix`] — exact dense linear algebra (characteristic polynomial,
//!   kernel and solve over the rationals).
//! * [`rootdata`] — Dynkin diagrams, canonical Cartan matrices, marks,
//!   branch vertices, vertex deletion.
//! * [`spectra`] — the p/q/a/Q bundle per diagram, determinant route and
//!   closed-form route, numeric spectrum checks.
//! * [`coxeter`] — reflection matrices, Coxeter elements and their
//!   polynomials, affine exponents, defect check.
//! * [`weights`] — Steinberg branch-deletion products and coweight
//!   expansions, the two independent exponent derivations.

pub mod coxeter;
pub mod error;
pub mod matrix;
pub mod polyalgebra;
pub mod rootdata;
pub mod spectra;
pub mod weights;

pub use error::{Error, Result};
