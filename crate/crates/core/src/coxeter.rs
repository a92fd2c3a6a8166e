//! Coxeter transformations in the simple-root basis: exact reflection
//! matrices, Coxeter elements and their characteristic polynomials, the
//! conjugacy-class representatives of the affine A cycle, and the
//! extraction of affine exponents and the affine Coxeter number from a
//! cyclotomic factorization.
//!
//! The simple reflection at vertex `i` acts by
//! `σ_i(α_j) = α_j - C_{j,i} α_i`; in the simple-root basis its matrix has
//! column `j` equal to `e_j - C_{j,i} e_i`, so it differs from the identity
//! only in row `i`. Every reflection fixes the marks vector of the affine
//! diagram, which is why Coxeter elements act with finite order on the
//! quotient by the marks line.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::polyalgebra::{factor_cyclotomic, IntPolynomial};
use crate::rootdata::{cartan_matrix, marks, CartanMatrix, DiagramId, Family};

/// The matrix of a simple reflection together with its generating vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionMatrix {
    matrix: IntMatrix,
    vertex: usize,
}

impl ReflectionMatrix {
    /// The underlying matrix (simple-root basis, columns are images).
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// The generating vertex index.
    pub fn vertex(&self) -> usize {
        self.vertex
    }
}

/// The simple reflection at vertex `i` (zero-based over the full matrix).
///
/// The result is an involution and fixes the marks vector of an affine
/// diagram; both facts are exercised in tests.
pub fn reflection_matrix(c: &CartanMatrix, i: usize) -> ReflectionMatrix {
    let n = c.size();
    assert!(i < n, "vertex out of range");
    let mut m = IntMatrix::identity(n);
    for j in 0..n {
        let delta = if i == j { 1 } else { 0 };
        m.set(i, j, BigInt::from(delta - c.entry(j, i)));
    }
    ReflectionMatrix { matrix: m, vertex: i }
}

/// An ordering of all vertices: the application order of the simple
/// reflections making up a Coxeter element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterWord {
    order: Vec<usize>,
}

impl CoxeterWord {
    /// Build from an ordering; panics unless it is a permutation of
    /// `0..order.len()`.
    pub fn new(order: Vec<usize>) -> Self {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            assert!(v < n && !seen[v], "word must be a permutation of 0..n");
            seen[v] = true;
        }
        CoxeterWord { order }
    }

    /// The identity order `0, 1, ..., n-1`.
    pub fn identity(n: usize) -> Self {
        CoxeterWord {
            order: (0..n).collect(),
        }
    }

    /// The vertex ordering.
    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

/// The Coxeter element of a word: the product of the reflection matrices in
/// the given order.
pub fn coxeter_element(c: &CartanMatrix, word: &CoxeterWord) -> IntMatrix {
    assert_eq!(word.order().len(), c.size(), "word does not match matrix size");
    let mut acc = IntMatrix::identity(c.size());
    for &v in word.order() {
        acc = acc.mul(reflection_matrix(c, v).matrix());
    }
    acc
}

/// Conjugacy-class representative word for the affine A cycle on vertices
/// `0..=rank`: apply `0, 1, ..., rank-j` in increasing order, then
/// `rank, rank-1, ..., rank-j+1` in decreasing order. This orients `j`
/// cycle edges against the majority direction, which selects class `j`;
/// the construction is self-checking, not trusted — the resulting
/// characteristic polynomial is verified against
/// `(x^j - 1)(x^{rank+1-j} - 1)` and mismatch panics.
pub fn an_class_representative(rank: usize, class: usize) -> Result<CoxeterWord> {
    let max = (rank + 1) / 2;
    if class < 1 || class > max {
        return Err(Error::ClassIndexOutOfRange { index: class, max });
    }
    let mut order: Vec<usize> = (0..=rank - class).collect();
    order.extend((rank - class + 1..=rank).rev());
    let word = CoxeterWord::new(order);

    let id = DiagramId::affine(Family::A, rank).expect("rank validated above");
    let f = coxeter_element(&cartan_matrix(id), &word).charpoly();
    let expected = an_class_polynomial(rank, class);
    assert_eq!(
        f, expected,
        "class-{class} representative on the A{rank} cycle produced the wrong polynomial"
    );
    Ok(word)
}

/// The closed form `(x^j - 1)(x^{rank+1-j} - 1)`.
pub fn an_class_polynomial(rank: usize, class: usize) -> IntPolynomial {
    &IntPolynomial::x_pow_minus_one(class) * &IntPolynomial::x_pow_minus_one(rank + 1 - class)
}

/// The Coxeter polynomial of an affine diagram.
///
/// Trees have a single conjugacy class, so the identity application order
/// is used and a class index is rejected; the affine A cycle has
/// `⌊(rank+1)/2⌋` classes and requires one.
pub fn coxeter_polynomial(id: DiagramId, class: Option<usize>) -> Result<IntPolynomial> {
    assert!(id.is_affine(), "Coxeter polynomials are taken for affine diagrams");
    if id.family() == Family::A {
        let j = class.ok_or(Error::ClassIndexRequired)?;
        let word = an_class_representative(id.rank(), j)?;
        Ok(coxeter_element(&cartan_matrix(id), &word).charpoly())
    } else {
        if class.is_some() {
            return Err(Error::ClassIndexForbidden);
        }
        let c = cartan_matrix(id);
        Ok(coxeter_element(&c, &CoxeterWord::identity(c.size())).charpoly())
    }
}

/// Affine Coxeter number `h` plus the sorted multiset of affine exponents.
///
/// Values are produced by the derivation routes (cyclotomic factorization,
/// coweight expansion, Steinberg reduction, closed-form tables); the
/// constructor sorts but does not otherwise validate, so that deliberately
/// perturbed data can be fed to the numeric checks as negative controls.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentData {
    h: u64,
    exponents: Vec<u64>,
}

impl ExponentData {
    /// Build from a Coxeter number and an exponent multiset (sorted on
    /// entry).
    pub fn new(h: u64, mut exponents: Vec<u64>) -> Self {
        exponents.sort_unstable();
        ExponentData { h, exponents }
    }

    /// The affine Coxeter number.
    pub fn h(&self) -> u64 {
        self.h
    }

    /// The sorted exponent multiset.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Duality: the multiset is closed under `m ↦ h - m`.
    pub fn is_self_dual(&self) -> bool {
        let reflected: Vec<u64> = self
            .exponents
            .iter()
            .rev()
            .map(|&m| self.h.checked_sub(m).unwrap_or(u64::MAX))
            .collect();
        reflected == self.exponents
    }
}

/// Extract the affine exponents and affine Coxeter number from a Coxeter
/// polynomial.
///
/// The polynomial must factor as `Φ_1^2 · Π_{d>1} Φ_d^{m_d}`; then `h` is
/// the least common multiple of the indices `d > 1` (`h = 1` when there are
/// none, the unipotent `A_1` cycle case where `(x-1)^2` contributes
/// everything), the forced `Φ_1^2` contributes the exponents `0` and `h`,
/// and each `Φ_d^m` contributes `h·k/d` for every `k` coprime to `d`, `m`
/// times; `h·k/d` is an integer by construction of `h`.
///
/// A `Φ_1` multiplicity other than two signals a non-affine input and is
/// reported as `Error::UnitMultiplicity`.
pub fn exponents_from_polynomial(f: &IntPolynomial) -> Result<ExponentData> {
    let fact = factor_cyclotomic(f)?;
    let unit = fact.multiplicity(1);
    if unit != 2 {
        return Err(Error::UnitMultiplicity { found: unit });
    }
    let h = fact
        .iter()
        .filter(|&(d, _)| d > 1)
        .fold(1u64, |acc, (d, _)| acc.lcm(&d));
    let mut exponents = vec![0, h];
    for (d, mult) in fact.iter() {
        if d == 1 {
            continue;
        }
        for k in 1..d {
            if k.gcd(&d) == 1 {
                for _ in 0..mult {
                    exponents.push(h / d * k);
                }
            }
        }
    }
    Ok(ExponentData::new(h, exponents))
}

/// Check the defect identity at a claimed order `h`: `σ^h - I` must vanish
/// on the quotient by the marks line, i.e. every nonzero column of
/// `σ^h - I` must be an integer multiple of the marks vector. Since the
/// marks are primitive, this is equivalent to rank ≤ 1 with image on the
/// marks line.
pub fn defect_check(c: &CartanMatrix, word: &CoxeterWord, h: u64) -> bool {
    let z = marks(c).expect("valid affine Cartan matrix").entries().to_vec();
    let sigma = coxeter_element(c, word);
    let power = sigma.pow(h);
    let n = c.size();
    let diff = power.sub(&IntMatrix::identity(n));
    for j in 0..n {
        let col = diff.column(j);
        if col.iter().all(Zero::is_zero) {
            continue;
        }
        // Marks entries are positive, so the ratio is pinned by row 0.
        let (k, rem) = col[0].div_rem(&z[0]);
        if !rem.is_zero() {
            return false;
        }
        for (ci, zi) in col.iter().zip(&z) {
            if ci != &(&k * zi) {
                return false;
            }
        }
    }
    true
}

/// The affine exponents and Coxeter number from the closed-form table rows,
/// instantiated at a concrete rank (for affine A, at a concrete class):
///
/// * A, class j: `0, k_j, 2k_j, …, j·k_j` and `n_j, 2n_j, …, (rank-j)·n_j`
///   with `k_j = (rank+1-j)/d_j`, `n_j = j/d_j`, `d_j = gcd(rank+1, j)`;
///   `h = j·k_j`.
/// * B, rank odd: `{0..rank-1}` plus `(rank-1)/2`; `h = rank-1`.
/// * B, rank even: `{0, 2, …, 2(rank-1)}` plus `rank-1`; `h = 2(rank-1)`.
/// * C: `{0..rank}`; `h = rank`.
/// * D, rank odd: `{0, 2, …, 2(rank-2)}` plus `rank-2` twice; `h = 2(rank-2)`.
/// * D, rank even: `{0..rank-2}` plus `rank/2 - 1` twice; `h = rank-2`.
/// * E6/E7/E8/F4/G2: the fixed lists.
pub fn closed_form_exponents(id: DiagramId, class: Option<usize>) -> Result<ExponentData> {
    assert!(id.is_affine(), "closed-form exponents are stated for affine diagrams");
    let l = id.rank() as u64;
    if id.family() != Family::A && class.is_some() {
        return Err(Error::ClassIndexForbidden);
    }
    let data = match id.family() {
        Family::A => {
            let j = class.ok_or(Error::ClassIndexRequired)? as u64;
            let max = (l + 1) / 2;
            if j < 1 || j > max {
                return Err(Error::ClassIndexOutOfRange {
                    index: j as usize,
                    max: max as usize,
                });
            }
            let d = (l + 1).gcd(&j);
            let k = (l + 1 - j) / d;
            let m = j / d;
            let mut exps = vec![0];
            exps.extend((1..=j).map(|t| t * k));
            exps.extend((1..=l - j).map(|t| t * m));
            ExponentData::new(j * k, exps)
        }
        Family::B if l % 2 == 1 => {
            let mut exps: Vec<u64> = (0..l).collect();
            exps.push((l - 1) / 2);
            ExponentData::new(l - 1, exps)
        }
        Family::B => {
            let mut exps: Vec<u64> = (0..l).map(|t| 2 * t).collect();
            exps.push(l - 1);
            ExponentData::new(2 * (l - 1), exps)
        }
        Family::C => ExponentData::new(l, (0..=l).collect()),
        Family::D if l % 2 == 1 => {
            let mut exps: Vec<u64> = (0..l - 1).map(|t| 2 * t).collect();
            exps.push(l - 2);
            exps.push(l - 2);
            ExponentData::new(2 * (l - 2), exps)
        }
        Family::D => {
            let mut exps: Vec<u64> = (0..=l - 2).collect();
            exps.push(l / 2 - 1);
            exps.push(l / 2 - 1);
            ExponentData::new(l - 2, exps)
        }
        Family::E6 => ExponentData::new(6, vec![0, 2, 2, 3, 4, 4, 6]),
        Family::E7 => ExponentData::new(12, vec![0, 3, 4, 6, 6, 8, 9, 12]),
        Family::E8 => ExponentData::new(30, vec![0, 6, 10, 12, 15, 18, 20, 24, 30]),
        Family::F4 => ExponentData::new(6, vec![0, 2, 3, 4, 6]),
        Family::G2 => ExponentData::new(2, vec![0, 1, 2]),
    };
    Ok(data)
}

/// The Table-2 closed form of the Coxeter polynomial, instantiated at a
/// concrete rank/class:
///
/// * A, class i: `(x^i - 1)(x^{rank+1-i} - 1)`
/// * B: `(x^{rank-1} - 1)(x^2 - 1)`
/// * C: `(x^rank - 1)(x - 1)`
/// * D: `(x^{rank-2} - 1)(x - 1)(x + 1)^2`
/// * E6..G2: the printed polynomials.
pub fn closed_form_coxeter_polynomial(id: DiagramId, class: Option<usize>) -> Result<IntPolynomial> {
    assert!(id.is_affine(), "closed forms are stated for affine diagrams");
    let l = id.rank();
    if id.family() != Family::A && class.is_some() {
        return Err(Error::ClassIndexForbidden);
    }
    let poly = match id.family() {
        Family::A => {
            let j = class.ok_or(Error::ClassIndexRequired)?;
            let max = (l + 1) / 2;
            if j < 1 || j > max {
                return Err(Error::ClassIndexOutOfRange { index: j, max });
            }
            an_class_polynomial(l, j)
        }
        Family::B => {
            &IntPolynomial::x_pow_minus_one(l - 1) * &IntPolynomial::x_pow_minus_one(2)
        }
        Family::C => &IntPolynomial::x_pow_minus_one(l) * &IntPolynomial::x_pow_minus_one(1),
        Family::D => {
            let plus_one_sq = IntPolynomial::from_i64(&[1, 1]).pow(2);
            &(&IntPolynomial::x_pow_minus_one(l - 2) * &IntPolynomial::x_pow_minus_one(1))
                * &plus_one_sq
        }
        Family::E6 => IntPolynomial::from_i64(&[1, 1, 0, -2, -2, 0, 1, 1]),
        Family::E7 => IntPolynomial::from_i64(&[1, 1, 0, -1, -2, -1, 0, 1, 1]),
        Family::E8 => IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, -1, 0, 1, 1]),
        Family::F4 => IntPolynomial::from_i64(&[1, 0, -1, -1, 0, 1]),
        Family::G2 => IntPolynomial::from_i64(&[1, -1, -1, 1]),
    };
    Ok(poly)
}

/// All valid class indices for an affine id: `1..=⌊(rank+1)/2⌋` for family
/// A, the single unlabeled class (`None`) for trees.
pub fn class_indices(id: DiagramId) -> Vec<Option<usize>> {
    if id.family() == Family::A && id.is_affine() {
        (1..=id.class_count()).map(Some).collect()
    } else {
        vec![None]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::affine_ids_up_to;
    use crate::polyalgebra::divisors;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn p64(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(cs)
    }

    fn aff(f: Family, r: usize) -> DiagramId {
        DiagramId::affine(f, r).unwrap()
    }

    #[test]
    fn reflections_are_involutions_and_fix_marks() {
        for id in affine_ids_up_to(8) {
            let c = cartan_matrix(id);
            let z = marks(&c).unwrap();
            for i in 0..c.size() {
                let m = reflection_matrix(&c, i);
                assert_eq!(
                    m.matrix().mul(m.matrix()),
                    IntMatrix::identity(c.size()),
                    "{id} reflection {i} squared"
                );
                assert_eq!(
                    m.matrix().mul_vec(z.entries()),
                    z.entries().to_vec(),
                    "{id} reflection {i} fixes marks"
                );
            }
        }
    }

    #[test]
    fn g2_middle_reflection_matrix() {
        let c = cartan_matrix(aff(Family::G2, 2));
        let m = reflection_matrix(&c, 1);
        let expect = IntMatrix::from_rows(&[vec![1, 0, 0], vec![1, -1, 1], vec![0, 0, 1]]);
        assert_eq!(m.matrix(), &expect);
    }

    #[test]
    fn single_vertex_coxeter_element() {
        let c = cartan_matrix(DiagramId::finite(Family::A, 1).unwrap());
        let m = coxeter_element(&c, &CoxeterWord::identity(1));
        assert_eq!(m, IntMatrix::from_rows(&[vec![-1]]));
    }

    #[test]
    fn worked_coxeter_polynomials() {
        // B4 affine, identity order: x^5 - x^3 - x^2 + 1.
        let c = cartan_matrix(aff(Family::B, 4));
        let f = coxeter_element(&c, &CoxeterWord::identity(5)).charpoly();
        assert_eq!(f, p64(&[1, 0, -1, -1, 0, 1]));
        // G2 affine: x^3 - x^2 - x + 1.
        let c = cartan_matrix(aff(Family::G2, 2));
        let f = coxeter_element(&c, &CoxeterWord::identity(3)).charpoly();
        assert_eq!(f, p64(&[1, -1, -1, 1]));
    }

    #[test]
    fn coxeter_polynomial_examples() {
        // C_l: (x^l - 1)(x - 1).
        for l in 2..=7 {
            let f = coxeter_polynomial(aff(Family::C, l), None).unwrap();
            let expect = &IntPolynomial::x_pow_minus_one(l) * &IntPolynomial::x_pow_minus_one(1);
            assert_eq!(f, expect, "C{l}");
        }
        // A4 class 2: (x^2 - 1)(x^3 - 1).
        let f = coxeter_polynomial(aff(Family::A, 4), Some(2)).unwrap();
        assert_eq!(f, p64(&[1, 0, -1, -1, 0, 1]));
        // E6: x^7 + x^6 - 2x^4 - 2x^3 + x + 1.
        let f = coxeter_polynomial(aff(Family::E6, 6), None).unwrap();
        assert_eq!(f, p64(&[1, 1, 0, -2, -2, 0, 1, 1]));
    }

    #[test]
    fn class_index_errors() {
        assert_eq!(
            coxeter_polynomial(aff(Family::A, 5), None),
            Err(Error::ClassIndexRequired)
        );
        assert_eq!(
            coxeter_polynomial(aff(Family::B, 4), Some(1)),
            Err(Error::ClassIndexForbidden)
        );
        assert!(matches!(
            coxeter_polynomial(aff(Family::A, 5), Some(4)),
            Err(Error::ClassIndexOutOfRange { .. })
        ));
    }

    #[test]
    fn class_representatives_match_closed_form() {
        // The constructor self-checks; these assert the resulting
        // polynomials explicitly.
        let w = an_class_representative(5, 3).unwrap();
        let c = cartan_matrix(aff(Family::A, 5));
        assert_eq!(coxeter_element(&c, &w).charpoly(), p64(&[1, 0, 0, -2, 0, 0, 1]));

        let w = an_class_representative(4, 1).unwrap();
        let c = cartan_matrix(aff(Family::A, 4));
        let expect = &IntPolynomial::x_pow_minus_one(1) * &IntPolynomial::x_pow_minus_one(4);
        assert_eq!(coxeter_element(&c, &w).charpoly(), expect);

        let w = an_class_representative(1, 1).unwrap();
        let c = cartan_matrix(aff(Family::A, 1));
        assert_eq!(coxeter_element(&c, &w).charpoly(), p64(&[1, -2, 1]));
    }

    #[test]
    fn a_family_class_formula_to_rank_12() {
        for l in 1..=12 {
            for j in 1..=(l + 1) / 2 {
                let f = coxeter_polynomial(aff(Family::A, l), Some(j)).unwrap();
                assert_eq!(f, an_class_polynomial(l, j), "A{l} class {j}");
            }
        }
    }

    #[test]
    fn tree_conjugacy_order_independence() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x0c0ffee);
        for id in affine_ids_up_to(9) {
            if id.family() == Family::A {
                continue;
            }
            let c = cartan_matrix(id);
            let reference = coxeter_polynomial(id, None).unwrap();
            for _ in 0..50 {
                let mut order: Vec<usize> = (0..c.size()).collect();
                order.shuffle(&mut rng);
                let f = coxeter_element(&c, &CoxeterWord::new(order)).charpoly();
                assert_eq!(f, reference, "{id}");
            }
        }
    }

    #[test]
    fn exponent_extraction_examples() {
        // E8 Coxeter polynomial.
        let f = p64(&[1, 1, 0, -1, -1, -1, -1, 0, 1, 1]);
        let e = exponents_from_polynomial(&f).unwrap();
        assert_eq!(e.h(), 30);
        assert_eq!(e.exponents(), &[0, 6, 10, 12, 15, 18, 20, 24, 30]);

        // B4: Phi_1^2 Phi_2 Phi_3 = (x-1)^2 (x+1)(x^2+x+1).
        let f = p64(&[1, 0, -1, -1, 0, 1]);
        let e = exponents_from_polynomial(&f).unwrap();
        assert_eq!(e.h(), 6);
        assert_eq!(e.exponents(), &[0, 2, 3, 4, 6]);

        // (x^3 - 1)^2: the A5 class-3 polynomial.
        let f = IntPolynomial::x_pow_minus_one(3).pow(2);
        let e = exponents_from_polynomial(&f).unwrap();
        assert_eq!(e.h(), 3);
        assert_eq!(e.exponents(), &[0, 1, 1, 2, 2, 3]);

        // Degenerate A1 cycle: (x-1)^2 gives h = 1, exponents {0, 1}.
        let f = IntPolynomial::x_pow_minus_one(1).pow(2);
        let e = exponents_from_polynomial(&f).unwrap();
        assert_eq!(e.h(), 1);
        assert_eq!(e.exponents(), &[0, 1]);
    }

    #[test]
    fn exponent_extraction_errors() {
        // Phi_1^3 is not an affine Coxeter polynomial.
        let f = IntPolynomial::x_pow_minus_one(1).pow(3);
        assert_eq!(
            exponents_from_polynomial(&f),
            Err(Error::UnitMultiplicity { found: 3 })
        );
        // (x+1)^2 alone: Phi_1 multiplicity 0.
        let f = p64(&[1, 1]).pow(2);
        assert_eq!(
            exponents_from_polynomial(&f),
            Err(Error::UnitMultiplicity { found: 0 })
        );
        // Non-cyclotomic input.
        assert_eq!(
            exponents_from_polynomial(&p64(&[0, 0, 0, -4, 0, 1])),
            Err(Error::NotCyclotomicProduct)
        );
    }

    #[test]
    fn exponent_duality_all_routes() {
        for id in affine_ids_up_to(10) {
            for class in class_indices(id) {
                let f = coxeter_polynomial(id, class).unwrap();
                let e = exponents_from_polynomial(&f).unwrap();
                assert!(e.is_self_dual(), "{id} class {class:?}");
                assert_eq!(e.exponents().len(), id.matrix_size(), "{id}");
                assert_eq!(e.exponents().first(), Some(&0));
                assert_eq!(e.exponents().last(), Some(&e.h()));
            }
        }
    }

    #[test]
    fn closed_form_exponents_match_factorization_route() {
        for id in affine_ids_up_to(12) {
            for class in class_indices(id) {
                let via_poly =
                    exponents_from_polynomial(&coxeter_polynomial(id, class).unwrap()).unwrap();
                let via_table = closed_form_exponents(id, class).unwrap();
                assert_eq!(via_poly, via_table, "{id} class {class:?}");
            }
        }
    }

    #[test]
    fn closed_form_polynomials_match_reflection_route() {
        for id in affine_ids_up_to(12) {
            for class in class_indices(id) {
                let computed = coxeter_polynomial(id, class).unwrap();
                let closed = closed_form_coxeter_polynomial(id, class).unwrap();
                assert_eq!(computed, closed, "{id} class {class:?}");
            }
        }
    }

    #[test]
    fn moody_square_relation() {
        // Q(x) = f(x^2) for bipartite diagrams, with the largest-class
        // polynomial on the even A cycles.
        use crate::spectra::bundle_from_determinants;
        let x_squared = p64(&[0, 0, 1]);
        for id in affine_ids_up_to(10) {
            if !id.is_bipartite() {
                continue;
            }
            let class = if id.family() == Family::A {
                Some(id.class_count())
            } else {
                None
            };
            let f = coxeter_polynomial(id, class).unwrap();
            let b = bundle_from_determinants(id);
            assert_eq!(&f.compose(&x_squared), b.lift(), "{id}");
        }
    }

    #[test]
    fn defect_examples() {
        // B4 affine at h = 6.
        let c = cartan_matrix(aff(Family::B, 4));
        assert!(defect_check(&c, &CoxeterWord::identity(5), 6));
        assert!(!defect_check(&c, &CoxeterWord::identity(5), 5));

        // A4 class-1 word at h = 4.
        let c = cartan_matrix(aff(Family::A, 4));
        let w = an_class_representative(4, 1).unwrap();
        assert!(defect_check(&c, &w, 4));
        assert!(!defect_check(&c, &w, 2));

        // Wrong h on a tree fails.
        let c = cartan_matrix(aff(Family::E6, 6));
        assert!(defect_check(&c, &CoxeterWord::identity(7), 6));
        assert!(!defect_check(&c, &CoxeterWord::identity(7), 5));
    }

    #[test]
    fn defect_minimality_small() {
        for id in affine_ids_up_to(7) {
            let c = cartan_matrix(id);
            for class in class_indices(id) {
                let word = match class {
                    Some(j) => an_class_representative(id.rank(), j).unwrap(),
                    None => CoxeterWord::identity(c.size()),
                };
                let f = coxeter_element(&c, &word).charpoly();
                let e = exponents_from_polynomial(&f).unwrap();
                assert!(defect_check(&c, &word, e.h()), "{id} at h");
                for d in divisors(e.h()) {
                    if d < e.h() {
                        assert!(!defect_check(&c, &word, d), "{id} at divisor {d}");
                    }
                }
            }
        }
    }
}
