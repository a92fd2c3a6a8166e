//! Concrete reproduction of the three tables: affine exponents (1), Coxeter
//! polynomials with their cyclotomic factors (2), and the A-family
//! conjugacy classes (3). Symbolic rows are instantiated at every concrete
//! rank up to `--max-rank`; rows are emitted in deterministic
//! family/rank/class order.

use affine_coxeter::coxeter::{
    class_indices, coxeter_polynomial, exponents_from_polynomial,
};
use affine_coxeter::polyalgebra::{factor_cyclotomic, CyclotomicFactorization, IntPolynomial};
use affine_coxeter::rootdata::{affine_ids_up_to, DiagramId, Family};

use crate::output::{OutputRecord, Payload, Request, TableDocument};

/// One computed table row before serialization.
pub struct TableRow {
    pub id: DiagramId,
    pub class: Option<usize>,
    pub polynomial: IntPolynomial,
    pub factors: CyclotomicFactorization,
}

fn rows_for(max_rank: usize, families: &[Family]) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for id in affine_ids_up_to(max_rank) {
        if !families.contains(&id.family()) {
            continue;
        }
        for class in class_indices(id) {
            let polynomial = coxeter_polynomial(id, class).expect("valid class enumeration");
            let factors = factor_cyclotomic(&polynomial).expect("Coxeter polynomials are cyclotomic");
            rows.push(TableRow {
                id,
                class,
                polynomial,
                factors,
            });
        }
    }
    rows
}

/// Generate the rows of table `which` for ranks up to `max_rank`.
pub fn generate(which: u8, max_rank: usize) -> Vec<TableRow> {
    match which {
        1 | 2 => rows_for(max_rank, &Family::ALL),
        3 => rows_for(max_rank, &[Family::A]),
        _ => unreachable!("table index validated by the argument parser"),
    }
}

/// Serialize rows into the table document, payload per table:
/// exponent data for table 1, polynomial + factors for tables 2 and 3.
pub fn to_document(which: u8, max_rank: usize, rows: &[TableRow]) -> TableDocument {
    let records = rows
        .iter()
        .map(|row| {
            let mut request = Request::for_id(row.id);
            request.class = row.class.map(|j| j as u64);
            let (method, payload) = if which == 1 {
                let exps = exponents_from_polynomial(&row.polynomial)
                    .expect("affine Coxeter polynomial");
                (
                    "cyclotomic-factorization",
                    Payload::default().with_exponents(&exps),
                )
            } else {
                (
                    "reflection-product",
                    Payload::default()
                        .with_polynomial(&row.polynomial)
                        .with_factorization(&row.factors),
                )
            };
            OutputRecord {
                request,
                method: method.to_string(),
                payload,
            }
        })
        .collect();
    TableDocument {
        table: which,
        max_rank: max_rank as u64,
        rows: records,
    }
}

/// Aligned text rendering.
pub fn to_text(which: u8, rows: &[TableRow]) -> String {
    let mut out = String::new();
    for row in rows {
        let name = match row.class {
            Some(j) => format!("{} i={j}", row.id),
            None => row.id.to_string(),
        };
        let line = if which == 1 {
            let exps = exponents_from_polynomial(&row.polynomial)
                .expect("affine Coxeter polynomial");
            format!(
                "{name:<12} h={:<3} exponents {}",
                exps.h(),
                crate::output::exponent_list(&exps)
            )
        } else {
            format!("{name:<12} {}  =  {}", row.polynomial, row.factors)
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}
