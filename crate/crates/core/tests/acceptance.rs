//! Acceptance suite: every criterion runs at its stated tolerance and
//! prints one pass/fail line (visible with `--nocapture`; a failed
//! criterion aborts its test before printing PASS).
//!
//! Run with `cargo test --test acceptance` (add `-- --nocapture` to see the
//! per-criterion lines).

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;

use affine_coxeter::coxeter::{
    an_class_polynomial, an_class_representative, class_indices, closed_form_coxeter_polynomial,
    closed_form_exponents, coxeter_element, coxeter_polynomial, defect_check,
    exponents_from_polynomial, CoxeterWord,
};
use affine_coxeter::polyalgebra::{
    cyclotomic, divisors, factor_cyclotomic, psi, symmetrized_lift, CyclotomicFactorization,
    IntPolynomial,
};
use affine_coxeter::rootdata::{affine_ids_up_to, cartan_matrix, DiagramId, Family};
use affine_coxeter::spectra::{
    a_psi_factorization, bundle_from_determinants, expand_psi_product, p_coefficient_formula,
    q_closed_form, spectrum_numeric_check, SpectralBundle,
};
use affine_coxeter::weights::{blm_expansion, blm_exponents, steinberg_polynomial};

fn p64(cs: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(cs)
}

fn product(factors: &[IntPolynomial]) -> IntPolynomial {
    factors.iter().fold(IntPolynomial::one(), |acc, f| &acc * f)
}

fn aff(f: Family, r: usize) -> DiagramId {
    DiagramId::affine(f, r).unwrap()
}

/// Classical ids (families A-D) with matrix dimension up to `max_size`.
fn classical_ids(max_size: usize) -> Vec<DiagramId> {
    affine_ids_up_to(max_size - 1)
        .into_iter()
        .filter(|id| {
            matches!(id.family(), Family::A | Family::B | Family::C | Family::D)
                && id.matrix_size() <= max_size
        })
        .collect()
}

/// Bundles for all classical ids up to dimension 40, shared between
/// criteria 1 and 2 (each needs one of the two charpolys).
fn bundles_to_40() -> &'static BTreeMap<DiagramId, SpectralBundle> {
    static BUNDLES: OnceLock<BTreeMap<DiagramId, SpectralBundle>> = OnceLock::new();
    BUNDLES.get_or_init(|| {
        classical_ids(40)
            .into_iter()
            .map(|id| (id, bundle_from_determinants(id)))
            .collect()
    })
}

#[test]
fn criterion_01_theorem1_reproduction() {
    for (id, bundle) in bundles_to_40() {
        assert_eq!(
            &q_closed_form(*id).unwrap(),
            bundle.q(),
            "{id}: Chebyshev closed form differs from det(2xI + A)"
        );
    }
    println!("criterion 1 (Theorem 1 reproduction, sizes <= 40): PASS");
}

#[test]
fn criterion_02_proposition_reproduction() {
    for (id, bundle) in bundles_to_40() {
        assert_eq!(
            &p_coefficient_formula(id.family(), id.matrix_size()).unwrap(),
            bundle.p(),
            "{id}: coefficient formula differs from det(xI - C)"
        );
    }

    // Spot goldens: every polynomial printed in the classical sections.
    let x = p64(&[0, 1]);
    let a_p: [(usize, IntPolynomial); 5] = [
        (3, p64(&[0, 9, -6, 1])),
        (4, p64(&[0, -16, 20, -8, 1])),
        (5, p64(&[0, 25, -50, 35, -10, 1])),
        (6, p64(&[0, -36, 105, -112, 54, -12, 1])),
        // x(x^3 - 7x^2 + 14x - 7)^2
        (7, &x * &p64(&[-7, 14, -7, 1]).pow(2)),
    ];
    let a_q: [(usize, IntPolynomial); 5] = [
        (3, p64(&[2, -6, 0, 8])),
        (4, p64(&[0, 0, -16, 0, 16])),
        (5, p64(&[2, 10, 0, -40, 0, 32])),
        (6, p64(&[-4, 0, 36, 0, -96, 0, 64])),
        (7, p64(&[2, -14, 0, 112, 0, -224, 0, 128])),
    ];
    for (n, expect) in &a_p {
        let b = &bundles_to_40()[&aff(Family::A, n - 1)];
        assert_eq!(b.p(), expect, "A family p_{n}");
    }
    for (n, expect) in &a_q {
        let b = &bundles_to_40()[&aff(Family::A, n - 1)];
        assert_eq!(b.q(), expect, "A family q_{n}");
    }

    let b_p: [(usize, IntPolynomial); 4] = [
        (4, p64(&[0, -16, 20, -8, 1])),
        (5, p64(&[0, 24, -50, 35, -10, 1])),
        (6, p64(&[0, -32, 104, -112, 54, -12, 1])),
        (7, p64(&[0, 40, -190, 293, -210, 77, -14, 1])),
    ];
    let b_q: [(usize, IntPolynomial); 4] = [
        (4, p64(&[0, 0, -16, 0, 16])),
        (5, p64(&[0, 8, 0, -40, 0, 32])),
        (6, p64(&[0, 0, 32, 0, -96, 0, 64])),
        // 8x(x-1)(x+1)(4x^2-2x-1)(4x^2+2x-1)
        (
            7,
            product(&[
                p64(&[0, 8]),
                p64(&[-1, 1]),
                p64(&[1, 1]),
                p64(&[-1, -2, 4]),
                p64(&[-1, 2, 4]),
            ]),
        ),
    ];
    for (n, expect) in &b_p {
        let b = &bundles_to_40()[&aff(Family::B, n - 1)];
        assert_eq!(b.p(), expect, "B family p_{n}");
    }
    for (n, expect) in &b_q {
        let b = &bundles_to_40()[&aff(Family::B, n - 1)];
        assert_eq!(b.q(), expect, "B family q_{n}");
    }

    let c_p: [(usize, IntPolynomial); 5] = [
        (3, p64(&[0, 8, -6, 1])),
        (4, p64(&[0, -12, 19, -8, 1])),
        (5, p64(&[0, 16, -44, 34, -10, 1])),
        (6, p64(&[0, -20, 85, -104, 53, -12, 1])),
        (7, p64(&[0, 24, -146, 259, -200, 76, -14, 1])),
    ];
    for (n, expect) in &c_p {
        let b = &bundles_to_40()[&aff(Family::C, n - 1)];
        assert_eq!(b.p(), expect, "C family p_{n}");
    }

    let two = p64(&[-2, 1]);
    let four = p64(&[-4, 1]);
    let d_p: [(usize, IntPolynomial); 5] = [
        (5, product(&[x.clone(), four.clone(), two.pow(3)])),
        (
            6,
            product(&[x.clone(), p64(&[-1, 1]), two.pow(2), p64(&[-3, 1]), four.clone()]),
        ),
        (7, product(&[x.clone(), two.pow(3), four.clone(), p64(&[2, -4, 1])])),
        (
            8,
            product(&[x.clone(), two.pow(2), four.clone(), p64(&[1, -3, 1]), p64(&[5, -5, 1])]),
        ),
        (
            9,
            product(&[
                x.clone(),
                two.pow(3),
                four.clone(),
                p64(&[-1, 1]),
                p64(&[-3, 1]),
                p64(&[1, -4, 1]),
            ]),
        ),
    ];
    for (n, expect) in &d_p {
        let b = &bundles_to_40()[&aff(Family::D, n - 1)];
        assert_eq!(b.p(), expect, "D family p_{n}");
    }
    println!("criterion 2 (proposition reproduction + section goldens): PASS");
}

#[test]
fn criterion_03_exceptional_golden_set() {
    struct Golden {
        family: Family,
        rank: usize,
        p: IntPolynomial,
        a: IntPolynomial,
        f: IntPolynomial,
    }
    let goldens = [
        Golden {
            family: Family::E6,
            rank: 6,
            p: p64(&[0, 72, -246, 329, -220, 78, -14, 1]),
            a: p64(&[0, -4, 0, 9, 0, -6, 0, 1]),
            f: p64(&[1, 1, 0, -2, -2, 0, 1, 1]),
        },
        Golden {
            family: Family::E7,
            rank: 7,
            p: p64(&[0, -96, 440, -784, 714, -364, 105, -16, 1]),
            a: p64(&[0, 0, -8, 0, 14, 0, -7, 0, 1]),
            f: p64(&[1, 1, 0, -1, -2, -1, 0, 1, 1]),
        },
        Golden {
            family: Family::E8,
            rank: 8,
            p: p64(&[0, 120, -730, 1679, -1992, 1364, -560, 136, -18, 1]),
            a: p64(&[0, 4, 0, -17, 0, 20, 0, -8, 0, 1]),
            f: p64(&[1, 1, 0, -1, -1, -1, -1, 0, 1, 1]),
        },
        Golden {
            family: Family::F4,
            rank: 4,
            // The printed p_5 (x^5-10x^4+33x^3-38x^2+2x+12) is a misprint:
            // it has p(0) = 12, impossible since det C = 0, and it
            // contradicts p(x) = a(x-2) applied to the printed a_5. The
            // value consistent with both is x(x-1)(x-2)(x-3)(x-4), asserted
            // here; the discrepancy is logged, not guessed around.
            p: p64(&[0, 24, -50, 35, -10, 1]),
            a: p64(&[0, 4, 0, -5, 0, 1]),
            f: p64(&[1, 0, -1, -1, 0, 1]),
        },
        Golden {
            family: Family::G2,
            rank: 2,
            p: p64(&[0, 8, -6, 1]),
            a: p64(&[0, -4, 0, 1]),
            f: p64(&[1, -1, -1, 1]),
        },
    ];
    for g in &goldens {
        let id = aff(g.family, g.rank);
        let bundle = bundle_from_determinants(id);
        assert_eq!(bundle.p(), &g.p, "{id}: p");
        assert_eq!(bundle.a(), &g.a, "{id}: a");
        assert_eq!(coxeter_polynomial(id, None).unwrap(), g.f, "{id}: f");
    }
    println!("criterion 3 (exceptional golden set, F4 p_5 misprint corrected): PASS");
}

#[test]
fn criterion_04_table2_closed_forms_and_factors() {
    let mut rows = 0;
    for rank in 3..=12 {
        for family in [Family::A, Family::B, Family::C, Family::D] {
            let Ok(id) = DiagramId::affine(family, rank) else {
                continue;
            };
            for class in class_indices(id) {
                check_table2_row(id, class);
                rows += 1;
            }
        }
    }
    for family in [Family::E6, Family::E7, Family::E8, Family::F4, Family::G2] {
        let id = aff(family, family.fixed_rank().unwrap());
        check_table2_row(id, None);
        rows += 1;
    }
    println!("criterion 4 (Table 2 closed forms + factor columns, {rows} rows): PASS");
}

fn check_table2_row(id: DiagramId, class: Option<usize>) {
    // Reflection-product route vs. the table's closed form.
    let f = coxeter_polynomial(id, class).unwrap();
    let closed = closed_form_coxeter_polynomial(id, class).unwrap();
    assert_eq!(f, closed, "{id} class {class:?}: polynomial");

    // Cyclotomic factorization vs. the table's factor column.
    let l = id.rank();
    let mut pairs: Vec<(u64, u32)> = Vec::new();
    let push_divisors = |pairs: &mut Vec<(u64, u32)>, n: usize| {
        for d in divisors(n as u64) {
            pairs.push((d, 1));
        }
    };
    match id.family() {
        Family::A => {
            let i = class.unwrap();
            push_divisors(&mut pairs, i);
            push_divisors(&mut pairs, l + 1 - i);
        }
        Family::B => {
            pairs.extend([(1, 1), (2, 1)]);
            push_divisors(&mut pairs, l - 1);
        }
        Family::C => {
            pairs.push((1, 1));
            push_divisors(&mut pairs, l);
        }
        Family::D => {
            pairs.extend([(1, 1), (2, 2)]);
            push_divisors(&mut pairs, l - 2);
        }
        Family::E6 => pairs.extend([(1, 2), (2, 1), (3, 2)]),
        // The printed E7 factor column reads Phi_1^2 Phi_2^2 Phi_3 Phi_4^2,
        // which has degree 10 and cannot factor the degree-8 polynomial;
        // the roots e^{2πi m/12}, m in {0,3,4,6,6,8,9,12}, give Phi_4 once
        // (only m = 3, 9 land on ±i). Computed value supersedes.
        Family::E7 => pairs.extend([(1, 2), (2, 2), (3, 1), (4, 1)]),
        Family::E8 => pairs.extend([(1, 2), (2, 1), (3, 1), (5, 1)]),
        Family::F4 => pairs.extend([(1, 2), (2, 1), (3, 1)]),
        Family::G2 => pairs.extend([(1, 2), (2, 1)]),
    }
    let expected = CyclotomicFactorization::from_pairs(pairs);
    let computed = factor_cyclotomic(&f).unwrap();
    assert_eq!(computed, expected, "{id} class {class:?}: factor column");
}

#[test]
fn criterion_05_table3_representative_words() {
    for l in 3..=12 {
        let id = aff(Family::A, l);
        let c = cartan_matrix(id);
        for j in 1..=(l + 1) / 2 {
            let word = an_class_representative(l, j).unwrap();
            let f = coxeter_element(&c, &word).charpoly();
            assert_eq!(f, an_class_polynomial(l, j), "A{l} class {j}");
        }
    }
    // The printed factorization for rank 3, class 1 reads Phi_1^2 Phi_2;
    // the polynomial x^4 - x^3 - x + 1 = (x-1)(x^3-1) actually factors as
    // Phi_1^2 Phi_3. The computed value supersedes the misprint.
    let f = coxeter_polynomial(aff(Family::A, 3), Some(1)).unwrap();
    assert_eq!(f, p64(&[1, -1, 0, -1, 1]));
    assert_eq!(
        factor_cyclotomic(&f).unwrap().to_pairs(),
        vec![(1, 2), (3, 1)]
    );
    println!("criterion 5 (Table 3 representative words; rank-3 class-1 misprint superseded): PASS");
}

#[test]
fn criterion_06_table1_three_way_agreement() {
    let mut rows = 0;
    for id in affine_ids_up_to(12) {
        for class in class_indices(id) {
            let via_factorization =
                exponents_from_polynomial(&coxeter_polynomial(id, class).unwrap()).unwrap();
            let via_blm = blm_exponents(&blm_expansion(id.finite_part(), class).unwrap());
            let via_steinberg = exponents_from_polynomial(
                &steinberg_polynomial(id.finite_part(), class).unwrap(),
            )
            .unwrap();
            let table_row = closed_form_exponents(id, class).unwrap();
            assert_eq!(via_factorization, via_blm, "{id} class {class:?}: blm");
            assert_eq!(
                via_factorization, via_steinberg,
                "{id} class {class:?}: steinberg"
            );
            assert_eq!(via_factorization, table_row, "{id} class {class:?}: table row");
            rows += 1;
        }
    }
    // Spot value from the table.
    let e7 = closed_form_exponents(aff(Family::E7, 7), None).unwrap();
    assert_eq!(e7.h(), 12);
    assert_eq!(e7.exponents(), &[0, 3, 4, 6, 6, 8, 9, 12]);
    println!("criterion 6 (Table 1 three-way agreement, {rows} rows): PASS");
}

#[test]
fn criterion_07_worked_examples() {
    // B4 Coxeter element characteristic polynomial.
    let f = coxeter_polynomial(aff(Family::B, 4), None).unwrap();
    assert_eq!(f, p64(&[1, 0, -1, -1, 0, 1]));

    // BLM expansions: (5w, A4), (2v, B4), (v, D6).
    let e = blm_expansion(DiagramId::finite(Family::A, 4).unwrap(), Some(2)).unwrap();
    assert_eq!(e.scale(), &BigInt::from(5));
    let m: Vec<i64> = e.coefficients().iter().map(|v| i64::try_from(v).unwrap()).collect();
    assert_eq!(m, vec![3, 6, 4, 2]);

    let e = blm_expansion(DiagramId::finite(Family::B, 4).unwrap(), None).unwrap();
    assert_eq!(e.scale(), &BigInt::from(2));
    let m: Vec<i64> = e.coefficients().iter().map(|v| i64::try_from(v).unwrap()).collect();
    assert_eq!(m, vec![2, 4, 6, 3]);

    let e = blm_expansion(DiagramId::finite(Family::D, 6).unwrap(), None).unwrap();
    assert_eq!(e.scale(), &BigInt::from(1));
    let m: Vec<i64> = e.coefficients().iter().map(|v| i64::try_from(v).unwrap()).collect();
    assert_eq!(m, vec![1, 2, 3, 4, 2, 2]);

    // A5 class 3: h = 3, exponents {0,1,1,2,2,3}.
    let data =
        exponents_from_polynomial(&coxeter_polynomial(aff(Family::A, 5), Some(3)).unwrap())
            .unwrap();
    assert_eq!(data.h(), 3);
    assert_eq!(data.exponents(), &[0, 1, 1, 2, 2, 3]);
    println!("criterion 7 (worked examples): PASS");
}

#[test]
fn criterion_08_spectrum_property_suite() {
    let x_squared = p64(&[0, 0, 1]);
    let mut checked = 0;
    for id in affine_ids_up_to(12) {
        let bundle = bundle_from_determinants(id);
        // p(0) = 0 holds for every affine id, bipartite or not.
        assert!(bundle.p().coeff(0).is_zero(), "{id}: p(0)");
        if !id.is_bipartite() {
            continue;
        }
        let class = if id.family() == Family::A {
            Some(id.class_count())
        } else {
            None
        };
        let f = coxeter_polynomial(id, class).unwrap();
        let exps = exponents_from_polynomial(&f).unwrap();
        assert_eq!(
            spectrum_numeric_check(&bundle, &exps, 1e-9),
            Ok(true),
            "{id}: numeric spectrum"
        );
        // a(x) = ±a(-x), exact.
        let n = id.matrix_size();
        let flipped = bundle.a().flip_argument();
        let expect = if n % 2 == 0 {
            bundle.a().clone()
        } else {
            -bundle.a()
        };
        assert_eq!(flipped, expect, "{id}: sign symmetry");
        // Q = f(x^2) with the largest-class polynomial on even A cycles.
        assert_eq!(&f.compose(&x_squared), bundle.lift(), "{id}: Moody square");
        checked += 1;
    }
    println!("criterion 8 (spectrum property suite, {checked} bipartite ids): PASS");
}

#[test]
fn criterion_09_psi_cyclotomic_suite() {
    for n in 3..=100u64 {
        assert_eq!(
            symmetrized_lift(&psi(n)),
            cyclotomic(n),
            "Psi identity at n={n}"
        );
    }
    let mut checked = 0;
    for id in affine_ids_up_to(29) {
        if !matches!(id.family(), Family::B | Family::C | Family::D) || id.matrix_size() > 30 {
            continue;
        }
        let indices = a_psi_factorization(id).unwrap();
        let bundle = bundle_from_determinants(id);
        assert_eq!(
            &expand_psi_product(&indices),
            bundle.a(),
            "{id}: Psi product"
        );
        checked += 1;
    }
    println!("criterion 9 (Psi identity to 100; Psi products for {checked} B/C/D ids): PASS");
}

#[test]
fn criterion_10_defect_suite() {
    let mut checked = 0;
    for id in affine_ids_up_to(9) {
        let c = cartan_matrix(id);
        for class in class_indices(id) {
            let word = match class {
                Some(j) => an_class_representative(id.rank(), j).unwrap(),
                None => CoxeterWord::identity(c.size()),
            };
            let f = coxeter_element(&c, &word).charpoly();
            let h = exponents_from_polynomial(&f).unwrap().h();
            assert!(defect_check(&c, &word, h), "{id} class {class:?} at h={h}");
            for d in divisors(h) {
                if d < h {
                    assert!(
                        !defect_check(&c, &word, d),
                        "{id} class {class:?} at proper divisor {d}"
                    );
                }
            }
            checked += 1;
        }
    }
    println!("criterion 10 (defect identity + minimality, {checked} words): PASS");
}
