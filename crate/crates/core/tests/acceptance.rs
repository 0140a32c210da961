//! Acceptance battery. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Every check is an exact integer identity.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use thagomizer_core::dyck::{self, binom, catalan};
use thagomizer_core::eqkl::{compare_conjecture, kappa, EqKLTable};
use thagomizer_core::flats::{char_poly_lattice, kl_generic, thagomizer_graph, FlatLattice};
use thagomizer_core::symmfn::{plethysm, v_poly, w_poly, SchurPoly};
use thagomizer_core::thagkl::{char_poly_thag, phi_series, KLTable};
use thagomizer_core::{IntPoly, Result};

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn row_poly(row: &[BigUint]) -> IntPoly {
    IntPoly::from_coeffs(row.iter().cloned().map(BigInt::from).collect())
}

fn closed_poly(n: usize) -> Result<IntPoly> {
    Ok(row_poly(&dyck::closed_form_row(n)?))
}

fn four_way(out: &mut Outcome) -> Result<()> {
    let table = KLTable::build(14)?;
    let phi = phi_series(15);
    for n in 0..=14 {
        let rec = table.get(n);
        let gf = phi.coeff(n + 1);
        let en = row_poly(&dyck::count_by_ascents_enum(n)?);
        let cf = closed_poly(n)?;
        out.check(rec == gf && *rec == en && *rec == cf, || {
            format!("n={n}: recursion {rec}, series {gf}, enumeration {en}, closed form {cf}")
        });
    }
    Ok(())
}

fn extended(out: &mut Outcome) -> Result<()> {
    let table = KLTable::build(20)?;
    let phi = phi_series(21);
    for n in 15..=20 {
        let rec = table.get(n);
        let gf = phi.coeff(n + 1);
        let dp = row_poly(&dyck::count_by_ascents_dp(n));
        let cf = closed_poly(n)?;
        out.check(rec == gf && *rec == dp && *rec == cf, || {
            format!("n={n}: recursion {rec}, series {gf}, dp {dp}, closed form {cf}")
        });
    }
    Ok(())
}

fn catalan_checks(out: &mut Outcome) -> Result<()> {
    let table = KLTable::build(20)?;
    for n in 0..=20 {
        let value = table.get(n).eval(&BigInt::one());
        out.check(value == BigInt::from(catalan(n)), || format!("P_{n}(1) = {value}"));
    }
    for m in 0..=10 {
        let lead = table.get(2 * m).leading_coeff();
        out.check(lead == BigInt::from(catalan(m)), || format!("lead P_{} = {lead}", 2 * m));
    }
    Ok(())
}

fn lattice(out: &mut Outcome) -> Result<()> {
    let table = KLTable::build(6)?;
    for n in 0..=6 {
        let g = thagomizer_graph(n);
        let lattice = FlatLattice::build(&g)?;
        let census = lattice.rank_counts();
        let expected: Vec<usize> = (0..=n + 1)
            .map(|i| {
                let v = binom(n as i64, i as i64) * (BigUint::one() << i) + binom(n as i64, i as i64 - 1);
                usize::try_from(v).unwrap()
            })
            .collect();
        out.check(census == expected, || format!("n={n}: census {census:?} != {expected:?}"));
        let chi = char_poly_lattice(&lattice, g.all_edges())?;
        out.check(chi == char_poly_thag(n), || format!("n={n}: chi = {chi}"));
        if n <= 5 {
            let p = kl_generic(&lattice)?;
            out.check(&p == table.get(n), || format!("n={n}: lattice P = {p}, recursion {}", table.get(n)));
        }
    }
    Ok(())
}

fn symmetric_functions(out: &mut Outcome) -> Result<()> {
    let w: Vec<SchurPoly> = (0..=12).map(w_poly).collect();
    let v: Vec<SchurPoly> = (0..=12).map(v_poly).collect();
    for j in 0..=12 {
        let dw = w[j].graded_dim();
        out.check(dw == IntPoly::linear(-1).pow(j), || format!("dim w_{j} = {dw}"));
        let dv = v[j].graded_dim();
        out.check(dv == IntPoly::linear(-2).pow(j), || format!("dim v_{j} = {dv}"));
        let mut conv = SchurPoly::zero(j);
        for (ell, v_ell) in v.iter().enumerate().take(j + 1) {
            conv.add_assign(&v_ell.mul_h(j - ell));
        }
        out.check(conv == w[j], || format!("sum v_l s[{j}-l] != w_{j}"));
    }
    for ell in 0..=6 {
        let pl = plethysm::h_of_linear(ell, 2)?;
        out.check(pl == v[ell], || format!("plethysm v_{ell}: {pl} vs {}", v[ell]));
    }
    Ok(())
}

fn equivariant(out: &mut Outcome, eq: &EqKLTable) -> Result<()> {
    let table = KLTable::build(10)?;
    for n in 0..=10 {
        let pn = eq.get(n);
        let dim = pn.graded_dim();
        out.check(&dim == table.get(n), || format!("n={n}: dim {dim} vs {}", table.get(n)));
        out.check(pn.all_coeffs_nonnegative(), || format!("n={n}: negative coefficient in {pn}"));
        let deg = pn.max_coeff_degree().unwrap_or(0);
        out.check(deg <= n / 2, || format!("n={n}: coefficient degree {deg}"));
    }
    Ok(())
}

fn conjecture(out: &mut Outcome, eq: &EqKLTable, max_n: usize) {
    let report = compare_conjecture(eq, max_n, kappa);
    for d in &report.discrepancies {
        out.check(false, || {
            format!("n={} {}: computed {}, conjectured {}", d.n, d.lambda, d.computed, d.conjectured)
        });
    }
}

fn main() -> ExitCode {
    let mut all_passed = true;
    let mut run = |label: &str, limit: Option<Duration>, f: &mut dyn FnMut(&mut Outcome) -> Result<()>| {
        let start = Instant::now();
        let mut out = Outcome::new();
        if let Err(e) = f(&mut out) {
            out.failures.push(format!("error: {e}"));
        }
        let elapsed = start.elapsed();
        if let Some(limit) = limit {
            out.check(elapsed <= limit, || format!("took {elapsed:?}, limit {limit:?}"));
        }
        let status = if out.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} {label} ({:.2}s)", elapsed.as_secs_f64());
        for msg in &out.failures {
            println!("    {msg}");
        }
        all_passed &= out.failures.is_empty();
    };

    run("1 four-way agreement n<=14", Some(Duration::from_secs(30)), &mut four_way);
    run("2 extended agreement 15<=n<=20", Some(Duration::from_secs(10)), &mut extended);
    run("3 Catalan values and leading coefficients", None, &mut catalan_checks);
    run("4 lattice of flats cross-check", Some(Duration::from_secs(60)), &mut lattice);
    run("5 symmetric-function identities j<=12", None, &mut symmetric_functions);

    let start = Instant::now();
    let eq = EqKLTable::build(19);
    let eq_time = start.elapsed();
    println!("equivariant table n<=19 built in {:.2}s", eq_time.as_secs_f64());
    match eq {
        Ok(eq) => {
            run("6 equivariant consistency n<=10", Some(Duration::from_secs(300)), &mut |out| {
                out.check(eq_time <= Duration::from_secs(300), || format!("table build took {eq_time:?}"));
                equivariant(out, &eq)
            });
            run("7 conjectured closed form n<=10", None, &mut |out| {
                conjecture(out, &eq, 10);
                Ok(())
            });
            run("7+ conjectured closed form n<=19 (stretch)", None, &mut |out| {
                conjecture(out, &eq, 19);
                Ok(())
            });
        }
        Err(e) => {
            run("6/7 equivariant table", None, &mut |_| Err(e.clone()));
        }
    }

    if all_passed {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
