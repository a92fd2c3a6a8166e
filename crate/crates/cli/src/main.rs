//! Command-line front end: compute any polynomial or exponent object on
//! demand, reproduce the tables, and run the cross-verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error
//! (domain errors print a machine-readable JSON object on stderr).

mod output;
mod tables;
mod verify;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use affine_coxeter::coxeter::{coxeter_polynomial, exponents_from_polynomial, ExponentData};
use affine_coxeter::polyalgebra::factor_cyclotomic;
use affine_coxeter::rootdata::{cartan_matrix, DiagramId, Family};
use affine_coxeter::spectra::bundle_from_determinants;
use affine_coxeter::weights::{blm_expansion, blm_exponents, steinberg_polynomial};

use output::{
    emit, exit_domain_error, exit_usage, exponent_list, ok_or_exit, OutputRecord, Payload, Request,
};

#[derive(Parser)]
#[command(
    name = "affine-coxeter",
    version,
    about = "Exact characteristic and Coxeter polynomials, affine exponents and Coxeter numbers of untwisted affine Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one polynomial of a diagram (p, q, a, Q, or coxeter)
    Poly(PolyArgs),
    /// Compute affine exponents and the affine Coxeter number
    Exponents(ExponentsArgs),
    /// Reproduce a table: 1 exponents, 2 Coxeter polynomials, 3 A-family classes
    Table(TableArgs),
    /// Cross-verify the closed forms against the exact oracles
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
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

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::B => Family::B,
            FamilyArg::C => Family::C,
            FamilyArg::D => Family::D,
            FamilyArg::E6 => Family::E6,
            FamilyArg::E7 => Family::E7,
            FamilyArg::E8 => Family::E8,
            FamilyArg::F4 => Family::F4,
            FamilyArg::G2 => Family::G2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Which {
    P,
    Q,
    A,
    Lift,
    Coxeter,
}

impl Which {
    fn name(self) -> &'static str {
        match self {
            Which::P => "p",
            Which::Q => "q",
            Which::A => "a",
            Which::Lift => "Q",
            Which::Coxeter => "coxeter",
        }
    }
}

fn parse_which(s: &str) -> Result<Which, String> {
    match s {
        "p" => Ok(Which::P),
        "q" => Ok(Which::Q),
        "a" => Ok(Which::A),
        "Q" => Ok(Which::Lift),
        "coxeter" => Ok(Which::Coxeter),
        _ => Err(format!("unknown polynomial {s:?}; expected p, q, a, Q or coxeter")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct RenderArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PolyArgs {
    /// Diagram family
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Rank (required for A-D, fixed for E6/E7/E8/F4/G2)
    #[arg(long)]
    rank: Option<usize>,
    /// Use the affine diagram (the default)
    #[arg(long, conflicts_with = "finite")]
    affine: bool,
    /// Use the finite diagram (only --which p is defined)
    #[arg(long)]
    finite: bool,
    /// Which polynomial: p, q, a, Q or coxeter
    #[arg(long, value_parser = parse_which)]
    which: Which,
    /// Conjugacy class index (family A Coxeter polynomials only)
    #[arg(long)]
    class: Option<usize>,
    #[command(flatten)]
    render: RenderArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Factor the Coxeter polynomial into cyclotomics
    Factorization,
    /// Berman-Lee-Moody coweight expansion on the finite diagram
    Blm,
    /// Steinberg branch-deletion product on the finite diagram
    Steinberg,
    /// All three routes, cross-checked
    All,
}

#[derive(Args)]
struct ExponentsArgs {
    /// Diagram family (the affine diagram is implied)
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Rank (required for A-D, fixed for E6/E7/E8/F4/G2)
    #[arg(long)]
    rank: Option<usize>,
    /// Derivation route
    #[arg(long, value_enum, default_value_t = Method::All)]
    method: Method,
    /// Conjugacy class index for family A, 1..=floor((rank+1)/2)
    #[arg(long, conflicts_with = "branch")]
    class: Option<usize>,
    /// Branch vertex for family A, 1..=rank (classes j and rank+1-j agree)
    #[arg(long)]
    branch: Option<usize>,
    #[command(flatten)]
    render: RenderArgs,
}

#[derive(Args)]
struct TableArgs {
    /// Which table to reproduce (1, 2 or 3)
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    which: u8,
    /// Largest rank to instantiate
    #[arg(long, default_value_t = 8)]
    max_rank: usize,
    #[command(flatten)]
    render: RenderArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest rank exercised by the suites
    #[arg(long, default_value_t = 12)]
    max_rank: usize,
    /// Comma-separated subset of suites
    #[arg(long, value_delimiter = ',', default_values_t = verify::SUITE_NAMES.map(String::from))]
    suites: Vec<String>,
    /// Negative-control hook: corrupt the Psi_2 convention (tests only)
    #[arg(long, hide = true)]
    corrupt_psi2: bool,
    #[command(flatten)]
    render: RenderArgs,
}

fn main() {
    match Cli::parse().command {
        Command::Poly(args) => cmd_poly(args),
        Command::Exponents(args) => cmd_exponents(args),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

/// Resolve family/rank into a validated id, defaulting the fixed ranks.
fn resolve_id(family: FamilyArg, rank: Option<usize>, affine: bool) -> DiagramId {
    let family: Family = family.into();
    let rank = match (rank, family.fixed_rank()) {
        (Some(r), _) => r,
        (None, Some(r)) => r,
        (None, None) => exit_usage(&format!("--rank is required for family {family}")),
    };
    ok_or_exit(DiagramId::new(family, rank, affine))
}

fn render_record(record: &OutputRecord, render: &RenderArgs, text: String) {
    let content = match render.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(record).expect("serializable record");
            s.push('\n');
            s
        }
        Format::Text => text,
    };
    emit(&render.out, &content);
}

fn cmd_poly(args: PolyArgs) {
    let affine = !args.finite;
    let id = resolve_id(args.family, args.rank, affine);
    let mut request = Request::for_id(id);
    request.which = Some(args.which.name().to_string());
    request.class = args.class.map(|j| j as u64);

    if args.class.is_some() && args.which != Which::Coxeter {
        exit_usage("--class only applies to --which coxeter");
    }

    let (method, payload, text) = match (args.which, affine) {
        (Which::Coxeter, true) => {
            let f = ok_or_exit(coxeter_polynomial(id, args.class));
            let factors = ok_or_exit(factor_cyclotomic(&f));
            let text = match args.class {
                Some(j) => format!("{id} i={j} coxeter: {f}  =  {factors}\n"),
                None => format!("{id} coxeter: {f}  =  {factors}\n"),
            };
            (
                "reflection-product",
                Payload::default().with_polynomial(&f).with_factorization(&factors),
                text,
            )
        }
        (Which::Coxeter, false) => {
            exit_usage("Coxeter polynomials are computed for affine diagrams; drop --finite")
        }
        (Which::P, false) => {
            let p = cartan_matrix(id).to_int_matrix().charpoly();
            let text = format!("{id} p: {p}\n");
            ("determinant", Payload::default().with_polynomial(&p), text)
        }
        (_, false) => {
            exit_usage("only --which p is defined for finite diagrams")
        }
        (which, true) => {
            let bundle = bundle_from_determinants(id);
            let poly = match which {
                Which::P => bundle.p(),
                Which::Q => bundle.q(),
                Which::A => bundle.a(),
                Which::Lift => bundle.lift(),
                Which::Coxeter => unreachable!(),
            };
            let text = format!("{id} {}: {poly}\n", which.name());
            (
                "determinant",
                Payload::default().with_polynomial(poly),
                text,
            )
        }
    };
    let record = OutputRecord {
        request,
        method: method.to_string(),
        payload,
    };
    render_record(&record, &args.render, text);
}

/// Class/branch resolution for the exponents command. For family A exactly
/// one of --class/--branch must identify the conjugacy class; for other
/// families both are rejected by the library routes.
fn resolve_class_branch(
    id: DiagramId,
    class: Option<usize>,
    branch: Option<usize>,
) -> (Option<usize>, Option<usize>) {
    use affine_coxeter::Error;
    if id.family() != Family::A {
        if class.is_some() {
            exit_domain_error(&Error::ClassIndexForbidden);
        }
        if branch.is_some() {
            exit_domain_error(&Error::ChoiceForbidden);
        }
        return (None, None);
    }
    let rank = id.rank();
    match (class, branch) {
        (Some(j), None) => (Some(j), Some(j)),
        (None, Some(v)) => {
            if v < 1 || v > rank {
                exit_domain_error(&Error::ChoiceOutOfRange { vertex: v, rank });
            }
            (Some(v.min(rank + 1 - v)), Some(v))
        }
        (None, None) => exit_domain_error(&Error::ClassIndexRequired),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    }
}

fn cmd_exponents(args: ExponentsArgs) {
    let id = resolve_id(args.family, args.rank, true);
    let (class, branch) = resolve_class_branch(id, args.class, args.branch);
    let mut request = Request::for_id(id);
    request.class = class.map(|j| j as u64);
    request.branch = branch.map(|v| v as u64);

    let finite = id.finite_part();
    let branch_choice = if id.family() == Family::A { branch } else { None };

    let mut payload = Payload::default();
    let exps: ExponentData;
    let method_name;
    match args.method {
        Method::Factorization => {
            let f = ok_or_exit(coxeter_polynomial(id, class));
            let factors = ok_or_exit(factor_cyclotomic(&f));
            exps = ok_or_exit(exponents_from_polynomial(&f));
            payload = payload
                .with_polynomial(&f)
                .with_factorization(&factors)
                .with_exponents(&exps);
            method_name = "cyclotomic-factorization";
        }
        Method::Blm => {
            let expansion = ok_or_exit(blm_expansion(finite, branch_choice));
            exps = blm_exponents(&expansion);
            payload = payload.with_expansion(&expansion).with_exponents(&exps);
            method_name = "blm-coweight";
        }
        Method::Steinberg => {
            let f = ok_or_exit(steinberg_polynomial(finite, branch_choice));
            let factors = ok_or_exit(factor_cyclotomic(&f));
            exps = ok_or_exit(exponents_from_polynomial(&f));
            payload = payload
                .with_polynomial(&f)
                .with_factorization(&factors)
                .with_exponents(&exps);
            method_name = "steinberg-reduction";
        }
        Method::All => {
            let f = ok_or_exit(coxeter_polynomial(id, class));
            let factors = ok_or_exit(factor_cyclotomic(&f));
            let via_factorization = ok_or_exit(exponents_from_polynomial(&f));
            let expansion = ok_or_exit(blm_expansion(finite, branch_choice));
            let via_blm = blm_exponents(&expansion);
            let via_steinberg = ok_or_exit(exponents_from_polynomial(&ok_or_exit(
                steinberg_polynomial(finite, branch_choice),
            )));
            if via_factorization != via_blm || via_factorization != via_steinberg {
                eprintln!("{id}: exponent routes disagree");
                std::process::exit(1);
            }
            exps = via_factorization;
            payload = payload
                .with_polynomial(&f)
                .with_factorization(&factors)
                .with_expansion(&expansion)
                .with_exponents(&exps);
            method_name = "all-routes-agree";
        }
    }

    let text = {
        let name = match class {
            Some(j) => format!("{id} i={j}"),
            None => id.to_string(),
        };
        let mut t = format!(
            "{name}: h = {}, exponents = {}  [{}]\n",
            exps.h(),
            exponent_list(&exps),
            method_name
        );
        if let Some(expansion) = payload.expansion.as_ref() {
            let m = expansion.m.join(",");
            let _ = writeln!(
                t,
                "coweight expansion: branch = {}, c = {}, m = ({m})",
                expansion.branch, expansion.c
            );
        }
        t
    };
    let record = OutputRecord {
        request,
        method: method_name.to_string(),
        payload,
    };
    render_record(&record, &args.render, text);
}

fn cmd_table(args: TableArgs) {
    if args.max_rank < 1 {
        exit_usage("--max-rank must be at least 1");
    }
    let rows = tables::generate(args.which, args.max_rank);
    let content = match args.render.format {
        Format::Json => {
            let doc = tables::to_document(args.which, args.max_rank, &rows);
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable table");
            s.push('\n');
            s
        }
        Format::Text => tables::to_text(args.which, &rows),
    };
    emit(&args.render.out, &content);
}

fn cmd_verify(args: VerifyArgs) {
    if args.max_rank < 4 {
        exit_usage("--max-rank below 4 leaves some families without a row");
    }
    let results = match verify::run_suites(&args.suites, args.max_rank, args.corrupt_psi2) {
        Ok(r) => r,
        Err(unknown) => exit_usage(&format!(
            "unknown suite {unknown:?}; available: {}",
            verify::SUITE_NAMES.join(",")
        )),
    };
    let total_checks: usize = results.iter().map(|r| r.checks).sum();
    let total_failures: usize = results.iter().map(|r| r.failures.len()).sum();
    let content = match args.render.format {
        Format::Json => {
            let doc = serde_json::json!({
                "max_rank": args.max_rank,
                "suites": results.iter().map(|r| serde_json::json!({
                    "name": r.name,
                    "checks": r.checks,
                    "failures": r.failures,
                })).collect::<Vec<_>>(),
                "ok": total_failures == 0,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable summary");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut t = String::new();
            for r in &results {
                let verdict = if r.failures.is_empty() { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    t,
                    "suite {:<13} {:>4} checks, {:>2} failures: {verdict}",
                    r.name,
                    r.checks,
                    r.failures.len()
                );
                for f in &r.failures {
                    let _ = writeln!(t, "  FAIL: {f}");
                }
            }
            let verdict = if total_failures == 0 { "PASS" } else { "FAIL" };
            let _ = writeln!(
                t,
                "verify: {verdict} ({} suites, {total_checks} checks, {total_failures} failures)",
                results.len()
            );
            t
        }
    };
    emit(&args.render.out, &content);
    if total_failures > 0 {
        std::process::exit(1);
    }
}
