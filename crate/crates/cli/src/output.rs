//! JSON output records and the shared text helpers.
//!
//! Big values (polynomial coefficients, exponents, coweight data) are
//! carried as decimal strings so consumers never hit 64-bit overflow;
//! structural values (ranks, class indices, cyclotomic indices) stay plain
//! numbers. Struct field order fixes the serialization order, and
//! factorizations are sorted pair lists, so the same request always
//! produces byte-identical output.

use std::path::PathBuf;

use serde::Serialize;

use affine_coxeter::coxeter::ExponentData;
use affine_coxeter::polyalgebra::{CyclotomicFactorization, IntPolynomial};
use affine_coxeter::rootdata::DiagramId;
use affine_coxeter::weights::CoweightExpansion;
use affine_coxeter::Error;

/// Echo of the resolved request.
#[derive(Debug, Clone, Serialize)]
pub struct Request {
    pub family: String,
    pub rank: u64,
    pub affine: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub which: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<u64>,
}

impl Request {
    pub fn for_id(id: DiagramId) -> Self {
        Request {
            family: id.family().name().to_string(),
            rank: id.rank() as u64,
            affine: id.is_affine(),
            which: None,
            class: None,
            branch: None,
        }
    }
}

/// Polynomial payload: ascending coefficients as decimal strings plus the
/// rendered text form.
#[derive(Debug, Clone, Serialize)]
pub struct PolynomialJson {
    pub coeffs: Vec<String>,
}

impl From<&IntPolynomial> for PolynomialJson {
    fn from(p: &IntPolynomial) -> Self {
        PolynomialJson {
            coeffs: p.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExponentsJson {
    pub h: String,
    pub exponents: Vec<String>,
}

impl From<&ExponentData> for ExponentsJson {
    fn from(e: &ExponentData) -> Self {
        ExponentsJson {
            h: e.h().to_string(),
            exponents: e.exponents().iter().map(|m| m.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpansionJson {
    pub branch: u64,
    pub c: String,
    pub m: Vec<String>,
    pub h: String,
}

impl From<&CoweightExpansion> for ExpansionJson {
    fn from(e: &CoweightExpansion) -> Self {
        ExpansionJson {
            branch: e.branch() as u64,
            c: e.scale().to_string(),
            m: e.coefficients().iter().map(|v| v.to_string()).collect(),
            h: e.h().to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Default)]
pub struct Payload {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<PolynomialJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorization: Option<Vec<(u64, u32)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponents: Option<ExponentsJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expansion: Option<ExpansionJson>,
}

impl Payload {
    pub fn with_polynomial(mut self, p: &IntPolynomial) -> Self {
        self.polynomial = Some(p.into());
        self
    }

    pub fn with_factorization(mut self, f: &CyclotomicFactorization) -> Self {
        self.factorization = Some(f.to_pairs());
        self
    }

    pub fn with_exponents(mut self, e: &ExponentData) -> Self {
        self.exponents = Some(e.into());
        self
    }

    pub fn with_expansion(mut self, e: &CoweightExpansion) -> Self {
        self.expansion = Some(e.into());
        self
    }
}

/// One result record: the echoed request, the route that produced the
/// payload, and the payload itself.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub request: Request,
    pub method: String,
    pub payload: Payload,
}

/// A whole reproduced table.
#[derive(Debug, Clone, Serialize)]
pub struct TableDocument {
    pub table: u8,
    pub max_rank: u64,
    pub rows: Vec<OutputRecord>,
}

/// Stable machine-readable name for an error.
pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InexactDivision => "InexactDivision",
        Error::NotCyclotomicProduct => "NotCyclotomicProduct",
        Error::RankOutOfRange { .. } => "RankOutOfRange",
        Error::KernelDimension => "KernelDimension",
        Error::SingularMatrix => "SingularMatrix",
        Error::ChoiceRequired => "ChoiceRequired",
        Error::ChoiceForbidden => "ChoiceForbidden",
        Error::ChoiceOutOfRange { .. } => "ChoiceOutOfRange",
        Error::ClassIndexRequired => "ClassIndexRequired",
        Error::ClassIndexForbidden => "ClassIndexForbidden",
        Error::ClassIndexOutOfRange { .. } => "ClassIndexOutOfRange",
        Error::UnsupportedFamily { .. } => "UnsupportedFamily",
        Error::UnitMultiplicity { .. } => "UnitMultiplicity",
        Error::NotBipartite => "NotBipartite",
    }
}

/// Print a machine-readable error object on stderr and exit with the
/// usage/domain status (2).
pub fn exit_domain_error(e: &Error) -> ! {
    eprintln!(
        "{}",
        serde_json::json!({"error": {"kind": error_kind(e), "message": e.to_string()}})
    );
    std::process::exit(2);
}

/// Same exit path for argument problems clap cannot catch itself.
pub fn exit_usage(message: &str) -> ! {
    eprintln!(
        "{}",
        serde_json::json!({"error": {"kind": "Usage", "message": message}})
    );
    std::process::exit(2);
}

/// Unwrap a library result or exit with the domain error object.
pub fn ok_or_exit<T>(r: Result<T, Error>) -> T {
    match r {
        Ok(v) => v,
        Err(e) => exit_domain_error(&e),
    }
}

/// Write the rendered output to `--out PATH` or stdout.
pub fn emit(out: &Option<PathBuf>, content: &str) {
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, content) {
                exit_usage(&format!("cannot write {}: {e}", path.display()));
            }
        }
        None => print!("{content}"),
    }
}

/// Comma-separated exponent list for text output.
pub fn exponent_list(e: &ExponentData) -> String {
    e.exponents()
        .iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
