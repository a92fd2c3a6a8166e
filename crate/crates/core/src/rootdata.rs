//! Dynkin diagrams and their generalized Cartan matrices, finite and
//! untwisted affine, together with the diagram combinatorics the exponent
//! methods need: marks (the positive left null vector), branch vertices, and
//! vertex-deletion decomposition into finite components.
//!
//! # Canonical vertex numbering
//!
//! The affine vertex is always index 0 and occupies the first row/column;
//! finite diagrams use vertices 1..=rank. Concretely:
//!
//! * `A`: the cycle 0 – 1 – … – ℓ – 0 (for ℓ = 1 the two vertices are
//!   joined by a double bond, entries -2 on both sides).
//! * `B`: fork {0, 1} joined at 2, chain to ℓ, double bond `C[ℓ-1][ℓ] = -2`.
//! * `C`: chain with `C[0][1] = -2` and `C[ℓ][ℓ-1] = -2`.
//! * `D`: forks at both ends of a chain.
//! * `E6`/`E7`/`E8`: the printed matrices with the affine vertex first.
//! * `F4`: chain 0 – 1 – 2 – 3 – 4 with the double bond mid-chain,
//!   `C[2][3] = -2`; the finite part is
//!   `[[2,-1,0,0],[-1,2,-2,0],[0,-1,2,-1],[0,0,-1,2]]`.
//! * `G2`: chain 0 – 1 – 2 with `C[1][2] = -3`; finite `[[2,-1],[-3,2]]`.
//!
//! A permutation relabeling never changes a characteristic polynomial, so
//! every polynomial output is independent of these choices; fixing them
//! makes the branch vertex well defined.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// The nine families of finite/untwisted-affine indecomposable diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Family {
    /// Display name ("A", …, "G2").
    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
        }
    }

    /// The rank for families whose rank is fixed.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        }
    }

    /// All families, in table order.
    pub const ALL: [Family; 9] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
    ];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Names a finite or untwisted affine Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagramId {
    family: Family,
    rank: usize,
    affine: bool,
}

impl DiagramId {
    /// Validated constructor. Rank floors are chosen so every canonical
    /// matrix indexes validly: A ℓ≥1, B ℓ≥3 affine / ℓ≥2 finite, C ℓ≥2,
    /// D ℓ≥4, and the exceptional ranks are fixed.
    pub fn new(family: Family, rank: usize, affine: bool) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= if affine { 3 } else { 2 },
            Family::C => rank >= 2,
            Family::D => rank >= 4,
            _ => Some(rank) == family.fixed_rank(),
        };
        if !ok {
            return Err(Error::RankOutOfRange {
                family: family.name(),
                rank,
            });
        }
        Ok(DiagramId {
            family,
            rank,
            affine,
        })
    }

    /// Validated affine diagram.
    pub fn affine(family: Family, rank: usize) -> Result<Self> {
        Self::new(family, rank, true)
    }

    /// Validated finite diagram.
    pub fn finite(family: Family, rank: usize) -> Result<Self> {
        Self::new(family, rank, false)
    }

    /// The family.
    pub fn family(self) -> Family {
        self.family
    }

    /// The rank ℓ (number of finite vertices).
    pub fn rank(self) -> usize {
        self.rank
    }

    /// Whether this is the affine diagram.
    pub fn is_affine(self) -> bool {
        self.affine
    }

    /// Matrix dimension: ℓ+1 when affine, ℓ when finite.
    pub fn matrix_size(self) -> usize {
        self.rank + usize::from(self.affine)
    }

    /// The finite diagram with the same family and rank.
    pub fn finite_part(self) -> DiagramId {
        DiagramId {
            affine: false,
            ..self
        }
    }

    /// Bipartiteness of the underlying graph. Trees are always bipartite;
    /// the cycle of affine A is bipartite exactly when its matrix dimension
    /// ℓ+1 is even.
    pub fn is_bipartite(self) -> bool {
        match (self.family, self.affine) {
            (Family::A, true) => self.matrix_size() % 2 == 0,
            _ => true,
        }
    }

    /// Number of Coxeter conjugacy classes: ⌊(ℓ+1)/2⌋ for the affine A
    /// cycle, one for every tree.
    pub fn class_count(self) -> usize {
        if self.family == Family::A && self.affine {
            (self.rank + 1) / 2
        } else {
            1
        }
    }
}

impl fmt::Display for DiagramId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family.fixed_rank() {
            Some(_) => write!(f, "{}", self.family)?,
            None => write!(f, "{}{}", self.family, self.rank)?,
        }
        if self.affine {
            write!(f, "^(1)")?;
        }
        Ok(())
    }
}

/// A generalized Cartan matrix together with the diagram it belongs to.
///
/// Invariants (checked by the constructors in this module and exercised in
/// tests): diagonal all 2, off-diagonal ≤ 0 with symmetric zero pattern;
/// affine matrices are singular with every proper principal minor positive,
/// finite ones have positive determinant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    id: DiagramId,
    n: usize,
    e: Vec<i64>,
}

impl CartanMatrix {
    /// The owning diagram.
    pub fn id(&self) -> DiagramId {
        self.id
    }

    /// Matrix dimension.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry at (i, j), zero-based over the full matrix (affine vertex
    /// first when present).
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.e[i * self.n + j]
    }

    /// The rows as vectors of machine integers.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Exact copy as a big-integer matrix.
    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.rows())
    }

    fn vertex_count_neighbors(&self, i: usize) -> usize {
        (0..self.n)
            .filter(|&j| j != i && self.entry(i, j) != 0)
            .count()
    }
}

/// The canonical Cartan matrix of a diagram.
///
/// Rank validity is enforced when the [`DiagramId`] is constructed, so this
/// cannot fail.
pub fn cartan_matrix(id: DiagramId) -> CartanMatrix {
    let n = id.matrix_size();
    let mut e = vec![0i64; n * n];
    for i in 0..n {
        e[i * n + i] = 2;
    }
    let mut bond = |i: usize, j: usize, cij: i64, cji: i64| {
        e[i * n + j] += cij;
        e[j * n + i] += cji;
    };
    match (id.family, id.affine) {
        (Family::A, true) => {
            // Cycle 0 - 1 - ... - l - 0; for l = 1 both bonds land on the
            // same pair and accumulate to -2.
            for i in 0..n {
                bond(i, (i + 1) % n, -1, 0);
                bond(i, (i + n - 1) % n, -1, 0);
            }
        }
        (Family::A, false) => {
            for i in 0..n - 1 {
                bond(i, i + 1, -1, -1);
            }
        }
        (Family::B, true) => {
            bond(0, 2, -1, -1);
            bond(1, 2, -1, -1);
            for i in 2..n - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(n - 2, n - 1, -2, -1);
        }
        (Family::B, false) => {
            for i in 0..n - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(n - 2, n - 1, -2, -1);
        }
        (Family::C, true) | (Family::C, false) => {
            // Affine: -2 entries at both chain ends; finite: only at the
            // far end (rows 1..=l of the affine matrix).
            for i in 0..n - 1 {
                bond(i, i + 1, -1, -1);
            }
            if id.affine {
                e[1] += -1; // C[0][1] = -2
            }
            e[(n - 1) * n + (n - 2)] += -1; // C[l][l-1] = -2
        }
        (Family::D, true) => {
            bond(0, 2, -1, -1);
            bond(1, 2, -1, -1);
            for i in 2..n - 3 {
                bond(i, i + 1, -1, -1);
            }
            bond(n - 3, n - 2, -1, -1);
            bond(n - 3, n - 1, -1, -1);
        }
        (Family::D, false) => {
            for i in 0..n - 3 {
                bond(i, i + 1, -1, -1);
            }
            bond(n - 3, n - 2, -1, -1);
            bond(n - 3, n - 1, -1, -1);
        }
        (Family::E6, _) | (Family::E7, _) | (Family::E8, _) => {
            let (chain, tail): (&[usize], &[(usize, usize)]) = match id.family {
                // E6: chain 1-2-3-4-5, tail 3-6-0 (0 is the affine vertex).
                Family::E6 => (&[1, 2, 3, 4, 5], &[(3, 6), (6, 0)]),
                // E7: chain 0-1-2-3-4-5-6, pendant 7 at 3.
                Family::E7 => (&[0, 1, 2, 3, 4, 5, 6], &[(3, 7)]),
                // E8: chain 1-2-3-4-5-6-7-0, pendant 8 at 3.
                Family::E8 => (&[1, 2, 3, 4, 5, 6, 7, 0], &[(3, 8)]),
                _ => unreachable!(),
            };
            let offset = usize::from(!id.affine); // finite: drop vertex 0, shift by 1
            let mut add = |a: usize, b: usize| {
                if id.affine {
                    bond(a, b, -1, -1);
                } else if a != 0 && b != 0 {
                    bond(a - offset, b - offset, -1, -1);
                }
            };
            for w in chain.windows(2) {
                add(w[0], w[1]);
            }
            for &(a, b) in tail {
                add(a, b);
            }
        }
        (Family::F4, true) => {
            bond(0, 1, -1, -1);
            bond(1, 2, -1, -1);
            bond(2, 3, -2, -1);
            bond(3, 4, -1, -1);
        }
        (Family::F4, false) => {
            bond(0, 1, -1, -1);
            bond(1, 2, -2, -1);
            bond(2, 3, -1, -1);
        }
        (Family::G2, true) => {
            bond(0, 1, -1, -1);
            bond(1, 2, -3, -1);
        }
        (Family::G2, false) => {
            bond(0, 1, -1, -3);
        }
    }
    CartanMatrix { id, n, e }
}

/// The Coxeter adjacency matrix `A = 2I - C`.
pub fn adjacency(c: &CartanMatrix) -> IntMatrix {
    let n = c.size();
    let mut a = IntMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            let v = if i == j { 0 } else { -c.entry(i, j) };
            a.set(i, j, BigInt::from(v));
        }
    }
    a
}

/// The marks of an affine diagram: the unique positive integer generator of
/// the left kernel of `C`, normalized to content 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarksVector {
    z: Vec<BigInt>,
}

impl MarksVector {
    /// The entries, indexed by vertex (affine vertex first).
    pub fn entries(&self) -> &[BigInt] {
        &self.z
    }
}

/// Compute the marks of an affine Cartan matrix by an exact rational kernel
/// solve. Panics if called on a finite matrix; returns
/// `Error::KernelDimension` if the left kernel is not one-dimensional with
/// same-signed entries (impossible for matrices built by this crate, but it
/// defends against corrupted input).
pub fn marks(c: &CartanMatrix) -> Result<MarksVector> {
    assert!(c.id().is_affine(), "marks are defined for affine matrices");
    let z = c.to_int_matrix().transpose().kernel_vector()?;
    if z.iter().any(|v| !v.is_positive()) {
        return Err(Error::KernelDimension);
    }
    Ok(MarksVector { z })
}

/// The branch weight `b` of every vertex of a finite diagram, indexed by
/// vertex 1..=rank: `b(r_i) = [r_i has exactly one neighbor] - Σ_{j≠i} C_{i,j}`.
pub fn branch_weights(id: DiagramId) -> Vec<i64> {
    assert!(!id.is_affine(), "branch weights are defined on finite diagrams");
    let c = cartan_matrix(id);
    (0..c.size())
        .map(|i| {
            let single = c.vertex_count_neighbors(i) == 1;
            let row_sum: i64 = (0..c.size()).filter(|&j| j != i).map(|j| c.entry(i, j)).sum();
            i64::from(single) - row_sum
        })
        .collect()
}

/// The branch vertex of a finite diagram (1-based).
///
/// For family A every vertex attains the maximal weight b = 2, so a choice
/// in 1..=rank is required; for every other family the weight function has
/// a unique argmax and a choice is rejected.
pub fn branch_vertex(id: DiagramId, choice: Option<usize>) -> Result<usize> {
    assert!(!id.is_affine(), "branch vertex is defined on finite diagrams");
    if id.family() == Family::A {
        let v = choice.ok_or(Error::ChoiceRequired)?;
        if v < 1 || v > id.rank() {
            return Err(Error::ChoiceOutOfRange {
                vertex: v,
                rank: id.rank(),
            });
        }
        return Ok(v);
    }
    if choice.is_some() {
        return Err(Error::ChoiceForbidden);
    }
    let w = branch_weights(id);
    let max = *w.iter().max().expect("nonempty diagram");
    let argmax: Vec<usize> = (0..w.len()).filter(|&i| w[i] == max).map(|i| i + 1).collect();
    assert_eq!(
        argmax.len(),
        1,
        "branch weight argmax must be unique outside family A"
    );
    Ok(argmax[0])
}

/// A product of finite diagrams: the connected components left by a vertex
/// deletion, in canonical (family, rank) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteProduct {
    components: Vec<DiagramId>,
}

impl FiniteProduct {
    /// The components, sorted by (family, rank).
    pub fn components(&self) -> &[DiagramId] {
        &self.components
    }

    /// True for the empty product.
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

impl fmt::Display for FiniteProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "1");
        }
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Delete vertex `v` (1-based) from a finite diagram and classify the
/// connected components of the induced subdiagram.
///
/// Components of a finite Dynkin diagram minus a vertex are always finite
/// Dynkin diagrams, so classification is total. Panics if `v` is out of
/// range.
pub fn delete_vertex(id: DiagramId, v: usize) -> FiniteProduct {
    assert!(!id.is_affine(), "vertex deletion acts on finite diagrams");
    assert!(v >= 1 && v <= id.rank(), "vertex out of range");
    let c = cartan_matrix(id);
    let n = c.size();
    let removed = v - 1;
    let mut seen = vec![false; n];
    seen[removed] = true;
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut comp = Vec::new();
        seen[start] = true;
        while let Some(i) = stack.pop() {
            comp.push(i);
            for j in 0..n {
                if !seen[j] && c.entry(i, j) != 0 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        components.push(classify_component(&c, &comp));
    }
    components.sort();
    FiniteProduct { components }
}

/// Classify a connected induced subdiagram of a finite Dynkin diagram.
fn classify_component(c: &CartanMatrix, comp: &[usize]) -> DiagramId {
    let m = comp.len();
    let a1 = DiagramId::finite(Family::A, 1).unwrap();
    if m == 1 {
        return a1;
    }
    let local = |i: usize| comp[i];
    let neighbors: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j != i && c.entry(local(i), local(j)) != 0)
                .collect()
        })
        .collect();
    let mut multi: Vec<(usize, usize, i64)> = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let prod = c.entry(local(i), local(j)) * c.entry(local(j), local(i));
            if prod >= 2 {
                multi.push((i, j, prod));
            }
        }
    }
    let not_dynkin = || -> ! { panic!("component is not a finite Dynkin diagram") };

    if multi.is_empty() {
        // Simply laced: a path or a tree with one trivalent vertex.
        let tri: Vec<usize> = (0..m).filter(|&i| neighbors[i].len() == 3).collect();
        if neighbors.iter().any(|ns| ns.len() > 3) || tri.len() > 1 {
            not_dynkin();
        }
        if tri.is_empty() {
            return DiagramId::finite(Family::A, m).unwrap();
        }
        let center = tri[0];
        let mut legs: Vec<usize> = neighbors[center]
            .iter()
            .map(|&s| {
                let mut len = 1;
                let (mut prev, mut cur) = (center, s);
                while let Some(&next) = neighbors[cur].iter().find(|&&x| x != prev) {
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                len
            })
            .collect();
        legs.sort_unstable();
        return match (legs[0], legs[1], legs[2]) {
            (1, 1, _) => DiagramId::finite(Family::D, m).unwrap(),
            (1, 2, 2) => DiagramId::finite(Family::E6, 6).unwrap(),
            (1, 2, 3) => DiagramId::finite(Family::E7, 7).unwrap(),
            (1, 2, 4) => DiagramId::finite(Family::E8, 8).unwrap(),
            _ => not_dynkin(),
        };
    }
    if multi.len() != 1 {
        not_dynkin();
    }
    let (bi, bj, prod) = multi[0];
    if prod == 3 {
        if m == 2 {
            return DiagramId::finite(Family::G2, 2).unwrap();
        }
        not_dynkin();
    }
    // One double bond on a path.
    if neighbors.iter().any(|ns| ns.len() > 2) {
        not_dynkin();
    }
    if m == 2 {
        // B_2 and C_2 name the same two-vertex diagram; canonicalize to B.
        return DiagramId::finite(Family::B, 2).unwrap();
    }
    // Order the path from an endpoint; put the double bond at the far end
    // if possible.
    let start = (0..m).find(|&i| neighbors[i].len() == 1).unwrap_or_else(|| not_dynkin());
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = neighbors[start][0];
    order.push(cur);
    while let Some(&next) = neighbors[cur].iter().find(|&&x| x != prev) {
        prev = cur;
        cur = next;
        order.push(cur);
    }
    if order.len() != m {
        not_dynkin();
    }
    let pos = (0..m - 1)
        .find(|&k| {
            (order[k] == bi && order[k + 1] == bj) || (order[k] == bj && order[k + 1] == bi)
        })
        .unwrap();
    let pos = if pos == 0 {
        order.reverse();
        m - 2
    } else {
        pos
    };
    if pos == m - 2 {
        let (u, w) = (order[m - 2], order[m - 1]);
        if c.entry(local(u), local(w)) == -2 {
            DiagramId::finite(Family::B, m).unwrap()
        } else {
            DiagramId::finite(Family::C, m).unwrap()
        }
    } else if m == 4 && pos == 1 {
        DiagramId::finite(Family::F4, 4).unwrap()
    } else {
        not_dynkin()
    }
}

/// All affine diagrams with rank at most `max_rank`, in table order.
pub fn affine_ids_up_to(max_rank: usize) -> Vec<DiagramId> {
    let mut ids = Vec::new();
    for family in Family::ALL {
        let ranks: Vec<usize> = match family {
            Family::A => (1..=max_rank).collect(),
            Family::B => (3..=max_rank).collect(),
            Family::C => (2..=max_rank).collect(),
            Family::D => (4..=max_rank).collect(),
            _ => match family.fixed_rank() {
                Some(r) if r <= max_rank => vec![r],
                _ => vec![],
            },
        };
        for r in ranks {
            ids.push(DiagramId::affine(family, r).unwrap());
        }
    }
    ids
}
