//! The cross-verification suites behind `affine-coxeter verify`: each suite
//! re-derives a family of results by two independent routes and counts
//! mismatches instead of panicking, so a corrupted build reports every
//! failure deterministically.

use serde::Serialize;

use affine_coxeter::coxeter::{
    class_indices, closed_form_coxeter_polynomial, closed_form_exponents, coxeter_element,
    coxeter_polynomial, defect_check, exponents_from_polynomial, an_class_representative,
    CoxeterWord,
};
use affine_coxeter::polyalgebra::{cyclotomic, divisors, psi, symmetrized_lift, IntPolynomial};
use affine_coxeter::rootdata::{affine_ids_up_to, cartan_matrix, DiagramId, Family};
use affine_coxeter::spectra::{
    a_psi_factorization, bundle_from_determinants, p_coefficient_formula, q_closed_form,
};
use affine_coxeter::weights::{blm_expansion, blm_exponents, steinberg_polynomial};

/// All suite names, in execution order.
pub const SUITE_NAMES: [&str; 7] = [
    "theorem1",
    "props",
    "psi",
    "tables",
    "threeway",
    "moody_square",
    "defect",
];

/// Outcome of one suite.
#[derive(Debug, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(describe());
        }
    }
}

fn classical_ids(max_rank: usize) -> Vec<DiagramId> {
    affine_ids_up_to(max_rank)
        .into_iter()
        .filter(|id| matches!(id.family(), Family::A | Family::B | Family::C | Family::D))
        .collect()
}

fn suite_theorem1(max_rank: usize) -> SuiteResult {
    let mut r = SuiteResult::new("theorem1");
    for id in classical_ids(max_rank) {
        let oracle = bundle_from_determinants(id);
        let closed = q_closed_form(id).expect("classical family");
        r.check(&closed == oracle.q(), || {
            format!("{id}: Chebyshev form of q differs from det(2xI+A)")
        });
    }
    r
}

fn suite_props(max_rank: usize) -> SuiteResult {
    let mut r = SuiteResult::new("props");
    for id in classical_ids(max_rank) {
        let oracle = bundle_from_determinants(id);
        let formula =
            p_coefficient_formula(id.family(), id.matrix_size()).expect("classical family");
        r.check(&formula == oracle.p(), || {
            format!("{id}: coefficient formula differs from det(xI-C)")
        });
    }
    r
}

/// `corrupt_psi2` is a negative-control hook for tests: it replaces the
/// Ψ_2 = x+2 convention with x-2, which must make this suite fail.
fn suite_psi(max_rank: usize, corrupt_psi2: bool) -> SuiteResult {
    let psi_hook = |n: u64| -> IntPolynomial {
        if corrupt_psi2 && n == 2 {
            IntPolynomial::from_i64(&[-2, 1])
        } else {
            psi(n)
        }
    };
    let mut r = SuiteResult::new("psi");
    for n in 3..=100u64 {
        r.check(symmetrized_lift(&psi(n)) == cyclotomic(n), || {
            format!("Psi identity fails at n={n}")
        });
    }
    for id in affine_ids_up_to(max_rank) {
        if !matches!(id.family(), Family::B | Family::C | Family::D) {
            continue;
        }
        let indices = a_psi_factorization(id).expect("B/C/D family");
        let product = indices
            .iter()
            .fold(IntPolynomial::one(), |acc, &j| &acc * &psi_hook(j));
        let oracle = bundle_from_determinants(id);
        r.check(&product == oracle.a(), || {
            format!("{id}: Psi-product differs from det(xI+A)")
        });
    }
    r
}

fn suite_tables(max_rank: usize) -> SuiteResult {
    let mut r = SuiteResult::new("tables");
    for id in affine_ids_up_to(max_rank) {
        for class in class_indices(id) {
            let f = coxeter_polynomial(id, class).expect("valid class");
            let closed = closed_form_coxeter_polynomial(id, class).expect("valid class");
            r.check(f == closed, || {
                format!("{id} class {class:?}: polynomial differs from table closed form")
            });
            let exps = exponents_from_polynomial(&f).expect("affine Coxeter polynomial");
            let table_row = closed_form_exponents(id, class).expect("valid class");
            r.check(exps == table_row, || {
                format!("{id} class {class:?}: exponents differ from table row")
            });
        }
    }
    r
}

fn suite_threeway(max_rank: usize) -> SuiteResult {
    let mut r = SuiteResult::new("threeway");
    for id in affine_ids_up_to(max_rank) {
        for class in class_indices(id) {
            let via_factorization =
                exponents_from_polynomial(&coxeter_polynomial(id, class).expect("valid class"))
                    .expect("affine Coxeter polynomial");
            let via_blm = blm_exponents(
                &blm_expansion(id.finite_part(), class).expect("valid branch"),
            );
            let via_steinberg = exponents_from_polynomial(
                &steinberg_polynomial(id.finite_part(), class).expect("valid branch"),
            )
            .expect("Steinberg polynomial is cyclotomic");
            r.check(via_factorization == via_blm, || {
                format!("{id} class {class:?}: factorization vs coweight routes disagree")
            });
            r.check(via_factorization == via_steinberg, || {
                format!("{id} class {class:?}: factorization vs Steinberg routes disagree")
            });
        }
    }
    r
}

fn suite_moody_square(max_rank: usize) -> SuiteResult {
    let mut r = SuiteResult::new("moody_square");
    let x_squared = IntPolynomial::from_i64(&[0, 0, 1]);
    for id in affine_ids_up_to(max_rank) {
        if !id.is_bipartite() {
            continue;
        }
        let class = if id.family() == Family::A {
            Some(id.class_count())
        } else {
            None
        };
        let f = coxeter_polynomial(id, class).expect("valid class");
        let bundle = bundle_from_determinants(id);
        r.check(&f.compose(&x_squared) == bundle.lift(), || {
            format!("{id}: Q(x) != f(x^2)")
        });
    }
    r
}

fn suite_defect(max_rank: usize) -> SuiteResult {
    let mut r = SuiteResult::new("defect");
    for id in affine_ids_up_to(max_rank) {
        let c = cartan_matrix(id);
        for class in class_indices(id) {
            let word = match class {
                Some(j) => an_class_representative(id.rank(), j).expect("valid class"),
                None => CoxeterWord::identity(c.size()),
            };
            let f = coxeter_element(&c, &word).charpoly();
            let h = exponents_from_polynomial(&f)
                .expect("affine Coxeter polynomial")
                .h();
            r.check(defect_check(&c, &word, h), || {
                format!("{id} class {class:?}: defect identity fails at h={h}")
            });
            for d in divisors(h) {
                if d < h {
                    r.check(!defect_check(&c, &word, d), || {
                        format!("{id} class {class:?}: defect passes at proper divisor {d}")
                    });
                }
            }
        }
    }
    r
}

/// Run the named suites (in canonical order) at the given rank bound.
/// Returns `Err` with the offending name if a suite is unknown.
pub fn run_suites(
    requested: &[String],
    max_rank: usize,
    corrupt_psi2: bool,
) -> Result<Vec<SuiteResult>, String> {
    for name in requested {
        if !SUITE_NAMES.contains(&name.as_str()) {
            return Err(name.clone());
        }
    }
    let selected = |name: &str| requested.iter().any(|r| r == name);
    let mut results = Vec::new();
    for name in SUITE_NAMES {
        if !selected(name) {
            continue;
        }
        let result = match name {
            "theorem1" => suite_theorem1(max_rank),
            "props" => suite_props(max_rank),
            "psi" => suite_psi(max_rank, corrupt_psi2),
            "tables" => suite_tables(max_rank),
            "threeway" => suite_threeway(max_rank),
            "moody_square" => suite_moody_square(max_rank),
            "defect" => suite_defect(max_rank),
            _ => unreachable!(),
        };
        results.push(result);
    }
    Ok(results)
}
