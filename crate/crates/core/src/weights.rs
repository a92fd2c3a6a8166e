//! The two exponent derivations that run on the finite diagram: the
//! Steinberg branch-deletion product and the Berman–Lee–Moody coweight
//! expansion, both extended to family A by treating the chosen vertex of
//! the cycle's finite part as the branch root.
//!
//! With the convention `C_{i,j} = 2(α_i, α_j)/(α_j, α_j)`, the fundamental
//! coweight at the branch vertex β expands in the coroot basis with
//! coefficient vector `C^{-1} e_β`, so the expansion is computed as an
//! exact rational solve of `C u = e_β` with denominators cleared by their
//! least common multiple. The B4 worked example pins this convention (the
//! symmetric A-family matrices cannot distinguish `C^{-1}` from its
//! transpose); a dedicated test asserts it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::coxeter::ExponentData;
use crate::error::Result;
use crate::polyalgebra::IntPolynomial;
use crate::rootdata::{branch_vertex, cartan_matrix, delete_vertex, DiagramId, Family};

/// The cleared-denominator expansion `c·w_{β∨} = Σ m_i α_i∨` of the
/// fundamental coweight at a branch root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoweightExpansion {
    branch: usize,
    c: BigInt,
    m: Vec<BigInt>,
    h: u64,
}

impl CoweightExpansion {
    /// The branch vertex (1-based).
    pub fn branch(&self) -> usize {
        self.branch
    }

    /// The least positive integer `c` with `c·w_{β∨}` in the coroot lattice.
    pub fn scale(&self) -> &BigInt {
        &self.c
    }

    /// The coefficients `m_i`, indexed by vertex 1..=rank.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.m
    }

    /// The affine Coxeter number: the coefficient at the branch vertex.
    pub fn h(&self) -> u64 {
        self.h
    }
}

/// Steinberg's product formula evaluated on the finite diagram: delete the
/// branch root, take the Coxeter polynomial of the reduced system (a
/// product over its type-A components of `(x^{m+1}-1)/(x-1)`), and multiply
/// by `(x-1)^2`. The result is a Coxeter polynomial of the affine diagram.
///
/// `branch_choice` follows the branch-vertex rules: required for family A
/// (any vertex; `j` and `rank+1-j` give the same polynomial), forbidden
/// elsewhere.
pub fn steinberg_polynomial(id: DiagramId, branch_choice: Option<usize>) -> Result<IntPolynomial> {
    assert!(!id.is_affine(), "Steinberg's reduction runs on the finite diagram");
    let branch = branch_vertex(id, branch_choice)?;
    let reduced = delete_vertex(id, branch);
    let mut f = IntPolynomial::x_pow_minus_one(1).pow(2);
    for comp in reduced.components() {
        assert_eq!(
            comp.family(),
            Family::A,
            "branch deletion must reduce to type-A components"
        );
        // (x^{m+1} - 1)/(x - 1) = 1 + x + ... + x^m.
        let geometric = IntPolynomial::from_coeffs(vec![BigInt::one(); comp.rank() + 1]);
        f = &f * &geometric;
    }
    Ok(f)
}

/// The Berman–Lee–Moody expansion: solve `C u = e_branch` exactly over the
/// rationals, clear denominators by their lcm to get `c`, and read off
/// `m = c·u` with `h = m[branch]`.
pub fn blm_expansion(id: DiagramId, branch_choice: Option<usize>) -> Result<CoweightExpansion> {
    assert!(!id.is_affine(), "coweights live on the finite diagram");
    let branch = branch_vertex(id, branch_choice)?;
    let c_matrix = cartan_matrix(id).to_int_matrix();
    let mut rhs = vec![BigInt::zero(); id.rank()];
    rhs[branch - 1] = BigInt::one();
    let u = c_matrix.solve(&rhs)?;
    let mut denom_lcm = BigInt::one();
    for x in &u {
        denom_lcm = denom_lcm.lcm(x.denom());
    }
    let scale = BigRational::from(denom_lcm.clone());
    let m: Vec<BigInt> = u.iter().map(|x| (x * &scale).to_integer()).collect();
    debug_assert!(m.iter().all(|v| !v.is_negative()));
    let h = m[branch - 1]
        .to_u64()
        .expect("affine Coxeter number exceeds u64");
    Ok(CoweightExpansion {
        branch,
        c: denom_lcm,
        m,
        h,
    })
}

/// The exponent data carried by a coweight expansion: the coefficients
/// `m_i` together with one `0`, and `h` the branch coefficient.
pub fn blm_exponents(e: &CoweightExpansion) -> ExponentData {
    let mut exps: Vec<u64> = e
        .coefficients()
        .iter()
        .map(|v| v.to_u64().expect("exponent exceeds u64"))
        .collect();
    exps.push(0);
    ExponentData::new(e.h(), exps)
}
