use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};

use thagomizer_core::dyck::{self, catalan};
use thagomizer_core::eqkl::{self, EqKLTable};
use thagomizer_core::flats::{self, FlatLattice};
use thagomizer_core::thagkl::{self, KLTable};
use thagomizer_core::{Error, IntPoly};

mod output;

use output::*;

/// Kazhdan-Lusztig polynomials of thagomizer matroids.
#[derive(Parser)]
#[command(name = "thagomizer", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Enum,
    Dp,
    Closed,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Enum => "enum",
            Method::Dp => "dp",
            Method::Closed => "closed",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// P_n(t) from the flat recursion.
    Poly {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The coefficient triangle c_{n,k} for n <= max.
    Table {
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Dyck paths of semilength n counted by long ascents.
    Dyck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "dp")]
        method: Method,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Lattice of flats of M_n and the KL polynomial computed over it.
    Flats {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Frobenius characteristic of the S_n-equivariant KL polynomial.
    Equivariant {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare the equivariant polynomials with the conjectured closed form.
    Conjecture {
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run every cross-check for n <= max.
    Verify {
        #[arg(long)]
        max: usize,
        /// Corrupt one coefficient of the recursion table first (negative control).
        #[arg(long)]
        inject_fault: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EnumerationBound { .. } | Error::RankGuard { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

type CmdResult = Result<String, Failure>;

fn unsupported(format: Format, cmd: &str) -> Failure {
    let name = match format {
        Format::Text => "text",
        Format::Json => "json",
        Format::Csv => "csv",
    };
    Failure::Usage(format!("--format {name} is not supported by `{cmd}`"))
}

fn cmd_poly(n: usize, format: Format) -> CmdResult {
    let p = thagkl::kl_poly(n)?;
    match format {
        Format::Text => Ok(format!("{p}\n")),
        Format::Json => Ok(Record::new(Kind::Poly, PolyPayload { n, coeffs: coeffs(&p) }).to_json() + "\n"),
        Format::Csv => Err(unsupported(format, "poly")),
    }
}

fn cmd_table(max: usize, format: Format) -> CmdResult {
    let table = KLTable::build(max)?;
    let rows = || {
        table.entries().iter().enumerate().flat_map(|(n, p)| {
            p.coeffs().iter().enumerate().map(move |(k, c)| (n, k, c.clone()))
        })
    };
    match format {
        Format::Text => {
            let mut out = String::new();
            for (n, p) in table.entries().iter().enumerate() {
                writeln!(out, "P_{n} = {p}").unwrap();
            }
            Ok(out)
        }
        Format::Csv => {
            let mut out = String::from("n,k,c\n");
            for (n, k, c) in rows() {
                writeln!(out, "{n},{k},{c}").unwrap();
            }
            Ok(out)
        }
        Format::Json => {
            let rows = rows().map(|(n, k, c)| TableRow { n, k, c: Num(c) }).collect();
            Ok(Record::new(Kind::Table, TablePayload { rows }).to_json() + "\n")
        }
    }
}

fn cmd_dyck(n: usize, k: Option<usize>, method: Method, format: Format) -> CmdResult {
    let row: Vec<BigUint> = match (method, k) {
        (Method::Closed, Some(k)) => vec![dyck::closed_form(n, k)?],
        (Method::Closed, None) => dyck::closed_form_row(n)?,
        (Method::Enum, _) => dyck::count_by_ascents_enum(n)?,
        (Method::Dp, _) => dyck::count_by_ascents_dp(n),
    };
    let counts: Vec<BigUint> = match (method, k) {
        (Method::Closed, _) | (_, None) => row,
        (_, Some(k)) => vec![row.get(k).cloned().unwrap_or_default()],
    };
    match format {
        Format::Text => {
            let mut out = String::new();
            match k {
                Some(k) => writeln!(out, "a({n},{k}) = {}", counts[0]).unwrap(),
                None => {
                    for (k, c) in counts.iter().enumerate() {
                        writeln!(out, "a({n},{k}) = {c}").unwrap();
                    }
                }
            }
            Ok(out)
        }
        Format::Csv => {
            let mut out = String::from("n,k,a\n");
            let base = k.unwrap_or(0);
            for (i, c) in counts.iter().enumerate() {
                writeln!(out, "{n},{},{c}", base + i).unwrap();
            }
            Ok(out)
        }
        Format::Json => {
            let payload = DyckPayload { n, method: method.name(), k, counts: counts.iter().map(Num::from).collect() };
            Ok(Record::new(Kind::Table, payload).to_json() + "\n")
        }
    }
}

fn cmd_flats(n: usize, format: Format) -> CmdResult {
    let g = flats::thagomizer_graph(n);
    let lattice = FlatLattice::build(&g)?;
    let chi = flats::char_poly_lattice(&lattice, g.all_edges())?;
    let kl = flats::kl_generic(&lattice)?;
    let rank_counts = lattice.rank_counts();
    match format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "flats: {}", lattice.len()).unwrap();
            writeln!(out, "by rank: {rank_counts:?}").unwrap();
            writeln!(out, "chi: {chi}").unwrap();
            writeln!(out, "P: {kl}").unwrap();
            Ok(out)
        }
        Format::Json => {
            let payload = FlatsPayload {
                n,
                flats: lattice.len(),
                rank_counts,
                char_poly: coeffs(&chi),
                kl: coeffs(&kl),
            };
            Ok(Record::new(Kind::Report, payload).to_json() + "\n")
        }
        Format::Csv => Err(unsupported(format, "flats")),
    }
}

fn cmd_equivariant(n: usize, format: Format) -> CmdResult {
    let p = eqkl::eq_kl(n)?;
    match format {
        Format::Text => {
            let mut out = String::new();
            for (lambda, c) in p.terms() {
                writeln!(out, "{lambda}: {c}").unwrap();
            }
            Ok(out)
        }
        Format::Json => Ok(Record::new(Kind::Schur, SchurPayload { n, terms: schur_terms(&p) }).to_json() + "\n"),
        Format::Csv => Err(unsupported(format, "equivariant")),
    }
}

fn cmd_conjecture(max: usize, format: Format) -> CmdResult {
    let report = eqkl::verify_conjecture(max)?;
    let body = match format {
        Format::Text => {
            let mut out = String::new();
            for n in 1..=max {
                let bad: Vec<_> = report.discrepancies.iter().filter(|d| d.n == n).collect();
                if bad.is_empty() {
                    writeln!(out, "n={n}: ok").unwrap();
                }
                for d in bad {
                    writeln!(out, "n={n}: {} computed {} conjectured {}", d.lambda, d.computed, d.conjectured).unwrap();
                }
            }
            out
        }
        Format::Json => {
            let discrepancies = report
                .discrepancies
                .iter()
                .map(|d| ConjectureDiscrepancy {
                    n: d.n,
                    partition: d.lambda.parts().to_vec(),
                    computed: coeffs(&d.computed),
                    conjectured: coeffs(&d.conjectured),
                })
                .collect();
            let payload = ConjecturePayload { max, passed: report.passed(), discrepancies };
            Record::new(Kind::Report, payload).to_json() + "\n"
        }
        Format::Csv => return Err(unsupported(format, "conjecture")),
    };
    if report.passed() {
        Ok(body)
    } else {
        Err(Failure::Verification(body))
    }
}

fn check(name: &'static str, details: Vec<String>) -> Check {
    Check { name, passed: details.is_empty(), details }
}

fn verify_checks(max: usize, inject_fault: bool) -> Result<Vec<Check>, Error> {
    let mut table = KLTable::build(max)?;
    if inject_fault {
        let bumped = table.get(max) + &IntPoly::one();
        table.entries_mut()[max] = bumped;
    }
    let mut checks = Vec::new();

    let phi = thagkl::phi_series(max + 1);
    let rows: Vec<_> = (0..=max).map(dyck::count_by_ascents_dp).collect();
    let report = thagkl::compare_pipelines(&table, &phi, &rows, max + 1);
    checks.push(check(
        "theorem",
        report
            .mismatches
            .iter()
            .map(|m| format!("n={} k={} {:?}: recursion {} vs {}", m.n, m.k, m.pipeline, m.expected, m.found))
            .collect(),
    ));

    let mut details = Vec::new();
    for n in 0..=max {
        let closed = IntPoly::from_coeffs(dyck::closed_form_row(n)?.into_iter().map(BigInt::from).collect());
        if &closed != table.get(n) {
            details.push(format!("n={n}: closed form {closed} vs recursion {}", table.get(n)));
        }
    }
    checks.push(check("closed-form", details));

    let mut details = Vec::new();
    for n in 0..=max.min(5) {
        let p = flats::kl_generic(&FlatLattice::build(&flats::thagomizer_graph(n))?)?;
        if &p != table.get(n) {
            details.push(format!("n={n}: lattice {p} vs recursion {}", table.get(n)));
        }
    }
    checks.push(check("lattice", details));

    let mut details = Vec::new();
    if max >= 1 {
        let eq = EqKLTable::build(max)?;
        for n in 0..=max {
            if &eq.get(n).graded_dim() != table.get(n) {
                details.push(format!("n={n}: equivariant dimension disagrees with recursion"));
            }
        }
        for d in eqkl::compare_conjecture(&eq, max, eqkl::kappa).discrepancies {
            details.push(format!("n={} {}: computed {} conjectured {}", d.n, d.lambda, d.computed, d.conjectured));
        }
    }
    checks.push(check("conjecture", details));

    let mut details = Vec::new();
    for n in 0..=max {
        let at_one = table.get(n).eval(&BigInt::from(1));
        if at_one != BigInt::from(catalan(n)) {
            details.push(format!("P_{n}(1) = {at_one}, expected {}", catalan(n)));
        }
    }
    for m in 0..=max / 2 {
        let lead = table.get(2 * m).leading_coeff();
        if lead != BigInt::from(catalan(m)) {
            details.push(format!("leading coefficient of P_{} = {lead}, expected {}", 2 * m, catalan(m)));
        }
    }
    checks.push(check("catalan", details));
    Ok(checks)
}

fn cmd_verify(max: usize, inject_fault: bool, format: Format) -> CmdResult {
    let checks = verify_checks(max, inject_fault)?;
    let passed = checks.iter().all(|c| c.passed);
    let body = match format {
        Format::Text => {
            let mut out = String::new();
            for c in &checks {
                writeln!(out, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name).unwrap();
                for d in &c.details {
                    writeln!(out, "    {d}").unwrap();
                }
            }
            out
        }
        Format::Json => Record::new(Kind::Report, VerifyPayload { max, passed, checks }).to_json() + "\n",
        Format::Csv => return Err(unsupported(format, "verify")),
    };
    if passed {
        Ok(body)
    } else {
        Err(Failure::Verification(body))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let result = match cli.command {
        Command::Poly { n, format } => cmd_poly(n, format),
        Command::Table { max, format } => cmd_table(max, format),
        Command::Dyck { n, k, method, format } => cmd_dyck(n, k, method, format),
        Command::Flats { n, format } => cmd_flats(n, format),
        Command::Equivariant { n, format } => cmd_equivariant(n, format),
        Command::Conjecture { max, format } => cmd_conjecture(max, format),
        Command::Verify { max, inject_fault, format } => cmd_verify(max, inject_fault, format),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
