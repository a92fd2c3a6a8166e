//! The four polynomial families attached to an affine diagram, each
//! computable by two independent routes:
//!
//! * `p(x) = det(xI - C)` — characteristic polynomial of the Cartan matrix,
//! * `q(x) = det(2xI + A)` for the Coxeter adjacency matrix `A = 2I - C`,
//! * `a(x) = det(xI + A)` — the monic normalization, `q(x) = a(2x)`,
//! * `Q(x) = x^n a(x + 1/x)` — the palindromic lift.
//!
//! [`bundle_from_determinants`] is the oracle route (exact characteristic
//! polynomials of the actual matrices); [`q_closed_form`] and
//! [`p_coefficient_formula`] are the Chebyshev closed forms and explicit
//! coefficient sums for the classical families, and
//! [`a_psi_factorization`] gives the Ψ-product shapes of `a` for B/C/D.
//! Their agreement is exercised in the acceptance suite.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::coxeter::ExponentData;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::polyalgebra::{chebyshev_t, divisors, psi, symmetrized_lift, IntPolynomial};
use crate::rootdata::{adjacency, cartan_matrix, DiagramId, Family};

/// Exact characteristic polynomial `det(xI - M)`, monic.
///
/// Thin wrapper over the Faddeev–LeVerrier implementation; the oracle for
/// every determinant claim in this crate.
pub fn charpoly_exact(m: &IntMatrix) -> IntPolynomial {
    m.charpoly()
}

/// The polynomials `p, q, a, Q` of one affine diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralBundle {
    id: DiagramId,
    p: IntPolynomial,
    q: IntPolynomial,
    a: IntPolynomial,
    lift: IntPolynomial,
}

impl SpectralBundle {
    /// The owning diagram.
    pub fn id(&self) -> DiagramId {
        self.id
    }

    /// `det(xI - C)`.
    pub fn p(&self) -> &IntPolynomial {
        &self.p
    }

    /// `det(2xI + A)`; integer form with leading coefficient `2^n`.
    pub fn q(&self) -> &IntPolynomial {
        &self.q
    }

    /// `det(xI + A)`, the monic characteristic polynomial of `-A`.
    pub fn a(&self) -> &IntPolynomial {
        &self.a
    }

    /// The lift `Q(x) = x^n a(x + 1/x)`.
    pub fn lift(&self) -> &IntPolynomial {
        &self.lift
    }
}

/// Compute the full bundle from exact determinants: `p` and `a` as
/// characteristic polynomials of `C` and `-A`, `q` by the rescaling
/// `q_k = a_k 2^k` (so `q(x) = a(2x) = det(2xI + A)` stays in integer
/// form), and `Q` as the symmetrized lift of `a`.
pub fn bundle_from_determinants(id: DiagramId) -> SpectralBundle {
    assert!(id.is_affine(), "spectral bundles are defined for affine diagrams");
    let c = cartan_matrix(id);
    let p = c.to_int_matrix().charpoly();
    let a = adjacency(&c).neg().charpoly();
    let q = scale_argument_by_two(&a);
    let lift = symmetrized_lift(&a);
    SpectralBundle { id, p, q, a, lift }
}

/// `p(2x)` over the integers: coefficient `k` multiplied by `2^k`.
fn scale_argument_by_two(p: &IntPolynomial) -> IntPolynomial {
    let mut pow = BigInt::one();
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| {
            let v = c * &pow;
            pow = &pow * BigInt::from(2);
            v
        })
        .collect();
    IntPolynomial::from_coeffs(coeffs)
}

/// The Chebyshev closed form of `q` for the classical families; matrix
/// dimension `n = rank + 1`:
///
/// * A: `2 (T_n + (-1)^{n-1})`
/// * B: `2 (T_n - T_{n-4})`
/// * C: `2 (T_n - T_{n-2})`
/// * D: `8x^2 (T_{n-2} - T_{n-4})`
///
/// The exceptional families have no such form and report
/// `Error::UnsupportedFamily`; the determinant route covers them.
pub fn q_closed_form(id: DiagramId) -> Result<IntPolynomial> {
    assert!(id.is_affine(), "closed forms are stated for affine diagrams");
    let n = id.matrix_size();
    let two = BigInt::from(2);
    match id.family() {
        Family::A => {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let t = &chebyshev_t(n) + &IntPolynomial::from_i64(&[sign]);
            Ok(t.scale(&two))
        }
        Family::B => Ok((&chebyshev_t(n) - &chebyshev_t(n - 4)).scale(&two)),
        Family::C => Ok((&chebyshev_t(n) - &chebyshev_t(n - 2)).scale(&two)),
        Family::D => {
            let diff = &chebyshev_t(n - 2) - &chebyshev_t(n - 4);
            Ok(diff.scale(&BigInt::from(8)).mul_xpow(2))
        }
        f => Err(Error::UnsupportedFamily { family: f.name() }),
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// The explicit coefficient-sum formulas for `p` in the classical families;
/// `n` is the matrix dimension (rank + 1):
///
/// * A: `Σ_{j=1}^{n} (-1)^{n+j} 2n (n+j-1)! / ((n-j)! (2j)!) x^j`
/// * B: `x(x-2)(x-4) Σ_{j=0}^{n-3} (-1)^{n+j+1} C(n+j-2, 2j+1) x^j`
/// * C: `x(x-4) Σ_{j=0}^{n-2} (-1)^{n+j} C(n+j-1, 2j+1) x^j`
/// * D: `x(x-2)^2(x-4) Σ_{j=0}^{n-4} (-1)^{n+j} C(n+j-3, 2j+1) x^j`
pub fn p_coefficient_formula(family: Family, n: usize) -> Result<IntPolynomial> {
    let rank = n.checked_sub(1).ok_or(Error::RankOutOfRange {
        family: family.name(),
        rank: 0,
    })?;
    // Reuse the id validation for the rank floors.
    DiagramId::affine(family, rank)?;
    let sign = |e: usize| {
        if e % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };
    match family {
        Family::A => {
            let mut coeffs = vec![BigInt::zero(); n + 1];
            for (j, c) in coeffs.iter_mut().enumerate().take(n + 1).skip(1) {
                let num = BigInt::from(2 * n) * factorial(n + j - 1);
                let den = factorial(n - j) * factorial(2 * j);
                let (q, r) = num.div_rem(&den);
                debug_assert!(r.is_zero());
                *c = sign(n + j) * q;
            }
            Ok(IntPolynomial::from_coeffs(coeffs))
        }
        Family::B => {
            let mut sum = IntPolynomial::zero();
            for j in 0..=n - 3 {
                let c = sign(n + j + 1) * binomial(n + j - 2, 2 * j + 1);
                sum = &sum + &IntPolynomial::monomial(c, j);
            }
            let prefix = &(&IntPolynomial::x() * &IntPolynomial::from_i64(&[-2, 1]))
                * &IntPolynomial::from_i64(&[-4, 1]);
            Ok(&prefix * &sum)
        }
        Family::C => {
            let mut sum = IntPolynomial::zero();
            for j in 0..=n - 2 {
                let c = sign(n + j) * binomial(n + j - 1, 2 * j + 1);
                sum = &sum + &IntPolynomial::monomial(c, j);
            }
            let prefix = &IntPolynomial::x() * &IntPolynomial::from_i64(&[-4, 1]);
            Ok(&prefix * &sum)
        }
        Family::D => {
            let mut sum = IntPolynomial::zero();
            for j in 0..=n - 4 {
                let c = sign(n + j) * binomial(n + j - 3, 2 * j + 1);
                sum = &sum + &IntPolynomial::monomial(c, j);
            }
            let prefix = &(&IntPolynomial::x() * &IntPolynomial::from_i64(&[-2, 1]).pow(2))
                * &IntPolynomial::from_i64(&[-4, 1]);
            Ok(&prefix * &sum)
        }
        f => Err(Error::UnsupportedFamily { family: f.name() }),
    }
}

/// The Ψ-index multiset whose product is `a` for the B/C/D families
/// (matrix dimension `n`), under the conventions `Ψ_1 = x-2`, `Ψ_2 = x+2`:
///
/// * B: `Ψ_4 · Π_{j | 2(n-2)} Ψ_j`
/// * C: `Π_{j | 2(n-1)} Ψ_j`
/// * D: `Ψ_4^2 · Π_{j | 2(n-3)} Ψ_j`
pub fn a_psi_factorization(id: DiagramId) -> Result<Vec<u64>> {
    assert!(id.is_affine(), "psi factorizations are stated for affine diagrams");
    let n = id.matrix_size() as u64;
    let mut indices = match id.family() {
        Family::B => {
            let mut v = vec![4];
            v.extend(divisors(2 * (n - 2)));
            v
        }
        Family::C => divisors(2 * (n - 1)),
        Family::D => {
            let mut v = vec![4, 4];
            v.extend(divisors(2 * (n - 3)));
            v
        }
        f => return Err(Error::UnsupportedFamily { family: f.name() }),
    };
    indices.sort_unstable();
    Ok(indices)
}

/// Multiply out a Ψ-index multiset.
pub fn expand_psi_product(indices: &[u64]) -> IntPolynomial {
    indices
        .iter()
        .fold(IntPolynomial::one(), |acc, &j| &acc * &psi(j))
}

/// Numerically verify that the spectrum predicted by the affine exponents
/// matches the bundle: the roots of `a` must be `{2cos(m_j π / h)}` and the
/// roots of `p` must be `{4cos^2(m_j π / 2h)}`, both within `tol`.
///
/// The multisets are compared by expanding the product of predicted linear
/// factors in `f64` and comparing coefficients against the exact ones
/// (which pins multiplicities), plus a direct `|poly(root)| ≈ 0` evaluation
/// at every candidate. Rejects non-bipartite diagrams (the odd cycles of
/// family A) with `Error::NotBipartite` instead of comparing the wrong
/// sets.
pub fn spectrum_numeric_check(
    bundle: &SpectralBundle,
    exps: &ExponentData,
    tol: f64,
) -> Result<bool> {
    if !bundle.id().is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let n = bundle.id().matrix_size();
    if exps.exponents().len() != n {
        return Ok(false);
    }
    let h = exps.h() as f64;
    let a_roots: Vec<f64> = exps
        .exponents()
        .iter()
        .map(|&m| 2.0 * (m as f64 * std::f64::consts::PI / h).cos())
        .collect();
    let p_roots: Vec<f64> = exps
        .exponents()
        .iter()
        .map(|&m| {
            let c = (m as f64 * std::f64::consts::PI / (2.0 * h)).cos();
            4.0 * c * c
        })
        .collect();
    Ok(roots_match(bundle.a(), &a_roots, tol) && roots_match(bundle.p(), &p_roots, tol))
}

fn roots_match(poly: &IntPolynomial, roots: &[f64], tol: f64) -> bool {
    if poly.degree() != Some(roots.len()) {
        return false;
    }
    // Coefficient comparison of the monic product of predicted factors.
    let mut prod = vec![1.0f64];
    for &r in roots {
        let mut next = vec![0.0; prod.len() + 1];
        for (k, &c) in prod.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= r * c;
        }
        prod = next;
    }
    let scale: f64 = poly
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::MAX).abs())
        .fold(1.0, f64::max);
    for (k, c) in prod.iter().enumerate() {
        let exact = poly.coeff(k).to_f64().expect("coefficient exceeds f64");
        if (c - exact).abs() > tol * scale {
            return false;
        }
    }
    // Direct evaluation at each candidate root.
    roots.iter().all(|&r| {
        let bound: f64 = poly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c.to_f64().unwrap_or(f64::MAX).abs() * r.abs().max(1.0).powi(k as i32))
            .sum();
        poly.eval_f64(r).abs() <= tol * bound.max(1.0)
    })
}
