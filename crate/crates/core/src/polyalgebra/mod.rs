//! Exact univariate polynomial algebra: Chebyshev polynomials of both
//! kinds, cyclotomic polynomials Φ_n, the polynomials Ψ_n (minimal
//! polynomials of 2cos(2kπ/n)), the product-of-cyclotomics factorizer, and
//! the symmetrizing lift a(x) ↦ x^deg(a) · a(x + 1/x).
//!
//! Everything here is a pure function over immutable values; there is no
//! interior mutability, so concurrent use is unrestricted.

mod poly;

pub use poly::{IntPolynomial, RationalPolynomial};

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// All positive divisors of `n`, ascending. `n` must be positive.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0, "divisors of 0 are not defined");
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Euler's totient by trial factorization.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0, "phi(0) is not defined");
    let mut n = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// Chebyshev polynomial of the first kind, `T_n`.
///
/// Seeds `T_0 = 1`, `T_1 = x` under the recurrence `F_{n+1} = 2x F_n - F_{n-1}`.
/// Degree `n`, leading coefficient `2^{n-1}` for `n >= 1`.
pub fn chebyshev_t(n: usize) -> IntPolynomial {
    chebyshev(n, IntPolynomial::x())
}

/// Chebyshev polynomial of the second kind, `U_n`.
///
/// Seeds `U_0 = 1`, `U_1 = 2x`; degree `n`, leading coefficient `2^n`.
pub fn chebyshev_u(n: usize) -> IntPolynomial {
    chebyshev(n, IntPolynomial::from_i64(&[0, 2]))
}

fn chebyshev(n: usize, seed1: IntPolynomial) -> IntPolynomial {
    let two_x = IntPolynomial::from_i64(&[0, 2]);
    let mut prev = IntPolynomial::one();
    if n == 0 {
        return prev;
    }
    let mut cur = seed1;
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The `n`-th cyclotomic polynomial Φ_n: monic, irreducible, degree φ(n).
///
/// Computed by recursive division of `x^n - 1` by Φ_d over the proper
/// divisors `d | n`, with the intermediate Φ_d memoized within the call.
pub fn cyclotomic(n: u64) -> IntPolynomial {
    assert!(n > 0, "cyclotomic index must be positive");
    let mut cache: HashMap<u64, IntPolynomial> = HashMap::new();
    for d in divisors(n) {
        let mut rem = IntPolynomial::x_pow_minus_one(d as usize);
        for e in divisors(d) {
            if e < d {
                rem = rem
                    .div_exact(&cache[&e])
                    .expect("cyclotomic division is always exact");
            }
        }
        cache.insert(d, rem);
    }
    cache.remove(&n).unwrap()
}

/// Minimal polynomial Ψ_n of 2cos(2kπ/n) over the integers, gcd(k, n) = 1.
///
/// For n >= 3 it is the unique monic integer polynomial of degree φ(n)/2
/// with `Φ_n(x) = x^{φ(n)/2} Ψ_n(x + 1/x)`. The degenerate small indices are
/// fixed by the same "minimal polynomial of 2cos(2kπ/n)" reading:
/// `Ψ_1 = x - 2` (root 2cos 0 = 2) and `Ψ_2 = x + 2` (root 2cos π = -2).
/// These conventions are exactly what makes the a_n product formulas over
/// `Ψ_j, j | 2m` hold verbatim, since they supply the roots ±2; the Ψ_2
/// choice is validated indirectly through those product identities.
pub fn psi(n: u64) -> IntPolynomial {
    match n {
        0 => panic!("psi index must be positive"),
        1 => return IntPolynomial::from_i64(&[-2, 1]),
        2 => return IntPolynomial::from_i64(&[2, 1]),
        _ => {}
    }
    let phi = euler_phi(n) as usize;
    debug_assert!(phi % 2 == 0);
    let m = phi / 2;
    // Peel coefficients top-down: x^{m-k} (x^2+1)^k is the unique term of
    // degree m+k among the expansions with index <= k.
    let s = IntPolynomial::from_i64(&[1, 0, 1]);
    let mut rem = cyclotomic(n);
    let mut coeffs = vec![BigInt::zero(); m + 1];
    for k in (0..=m).rev() {
        let c = rem.coeff(m + k);
        if !c.is_zero() {
            let term = s.pow(k as u32).mul_xpow(m - k).scale(&c);
            rem = &rem - &term;
            coeffs[k] = c;
        }
    }
    assert!(
        rem.is_zero(),
        "cyclotomic polynomial failed to symmetrize; Phi_{n} is reciprocal so this is a bug"
    );
    IntPolynomial::from_coeffs(coeffs)
}

/// The lift `Q(x) = x^n a(x + 1/x)` for `a` of degree `n >= 0`.
///
/// `Q` has degree `2n` and is palindromic. Panics on the zero polynomial.
pub fn symmetrized_lift(a: &IntPolynomial) -> IntPolynomial {
    let n = a.degree().expect("symmetrized_lift requires a nonzero polynomial");
    let s = IntPolynomial::from_i64(&[1, 0, 1]); // x^2 + 1 = x * (x + 1/x)
    let mut acc = IntPolynomial::zero();
    let mut s_pow = IntPolynomial::one();
    for k in 0..=n {
        let c = a.coeff(k);
        if !c.is_zero() {
            acc = &acc + &s_pow.mul_xpow(n - k).scale(&c);
        }
        if k < n {
            s_pow = &s_pow * &s;
        }
    }
    acc
}

/// A factorization into cyclotomic polynomials: the multiset ∏ Φ_d^m.
///
/// All handled polynomials are monic, so no extra unit is tracked; every
/// stored multiplicity is at least one and `expand` reproduces the source
/// polynomial exactly.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CyclotomicFactorization {
    factors: BTreeMap<u64, u32>,
}

impl CyclotomicFactorization {
    /// Build from (index, multiplicity) pairs; zero multiplicities are
    /// dropped, repeated indices accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (u64, u32)>>(pairs: I) -> Self {
        let mut f = CyclotomicFactorization::default();
        for (d, m) in pairs {
            if m > 0 {
                *f.factors.entry(d).or_insert(0) += m;
            }
        }
        f
    }

    fn bump(&mut self, d: u64) {
        *self.factors.entry(d).or_insert(0) += 1;
    }

    /// Multiplicity of Φ_d (zero if absent).
    pub fn multiplicity(&self, d: u64) -> u32 {
        self.factors.get(&d).copied().unwrap_or(0)
    }

    /// Iterate `(index, multiplicity)` in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.factors.iter().map(|(&d, &m)| (d, m))
    }

    /// The pairs as a sorted vector (stable serialization order).
    pub fn to_pairs(&self) -> Vec<(u64, u32)> {
        self.iter().collect()
    }

    /// Multiply the factorization back out.
    pub fn expand(&self) -> IntPolynomial {
        let mut acc = IntPolynomial::one();
        for (d, m) in self.iter() {
            acc = &acc * &cyclotomic(d).pow(m);
        }
        acc
    }

    /// Total degree of the expansion.
    pub fn degree(&self) -> u64 {
        self.iter().map(|(d, m)| euler_phi(d) * m as u64).sum()
    }
}

impl fmt::Display for CyclotomicFactorization {
    /// Renders like the tables: `Φ1^2 Φ2 Φ3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (d, m) in self.iter() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "Φ{d}")?;
            } else {
                write!(f, "Φ{d}^{m}")?;
            }
        }
        Ok(())
    }
}

/// Factor a monic polynomial as a product of cyclotomic polynomials.
///
/// Trial-divides by Φ_d for ascending d with φ(d) ≤ the remaining degree;
/// returns `Error::NotCyclotomicProduct` when a nontrivial residue survives
/// every candidate (the input has a root off the unit circle, e.g. a
/// non-affine characteristic polynomial), or when the input is not monic.
pub fn factor_cyclotomic(f: &IntPolynomial) -> Result<CyclotomicFactorization> {
    if !f.is_monic() {
        return Err(Error::NotCyclotomicProduct);
    }
    let mut rem = f.clone();
    let mut out = CyclotomicFactorization::default();
    let deg0 = rem.degree().unwrap() as u64;
    if deg0 == 0 {
        return Ok(out);
    }
    // phi(d) >= sqrt(d/2), so phi(d) <= deg0 forces d <= 2*deg0^2.
    let bound = 2 * deg0 * deg0 + 1;
    for d in 1..=bound {
        let deg = rem.degree().unwrap() as u64;
        if deg == 0 {
            break;
        }
        if euler_phi(d) > deg {
            continue;
        }
        let phi_d = cyclotomic(d);
        while let Ok(q) = rem.div_exact(&phi_d) {
            rem = q;
            out.bump(d);
            if rem.degree() == Some(0) {
                break;
            }
        }
    }
    if rem.degree() != Some(0) {
        return Err(Error::NotCyclotomicProduct);
    }
    Ok(out)
}
