//! Kazhdan-Lusztig polynomials `P_n(t)` of the thagomizer matroids `M_n`,
//! from the flat-type recursion and from the generating function `u F(t,u)`.

use num_bigint::{BigInt, BigUint};

use crate::dyck;
use crate::error::{Error, Result};
use crate::exactpoly::{expand_f, IntPoly, PolySeries};
use crate::par;

/// `(t - 1)^r`, the characteristic polynomial of a rank-`r` Boolean matroid.
pub fn char_poly_boolean(r: usize) -> IntPoly {
    IntPoly::linear(-1).pow(r)
}

/// `(t - 1)(t - 2)^i`, the characteristic polynomial of `M_i`.
pub fn char_poly_thag(i: usize) -> IntPoly {
    &IntPoly::linear(-1) * &IntPoly::linear(-2).pow(i)
}

/// Solves `t^rank P(1/t) - P(t) = rhs` for the unique `P` with
/// `2 deg P < rank`.
///
/// The two sides occupy disjoint coefficient windows, so `P` is read off the
/// top of `rhs`; the whole residual is then checked exactly.
pub fn solve_reflected(rank: usize, rhs: &IntPoly) -> Result<IntPoly> {
    if rank == 0 {
        return if rhs.is_zero() {
            Ok(IntPoly::one())
        } else {
            Err(Error::ReflectionMismatch { rank })
        };
    }
    let top = (rank - 1) / 2;
    let p = IntPoly::from_coeffs((0..=top).map(|k| rhs.coeff(rank - k)).collect());
    let check = &p.reverse(rank)? - &p;
    if &check != rhs {
        return Err(Error::ReflectionMismatch { rank });
    }
    Ok(p)
}

/// `P_0, ..., P_max` built bottom-up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KLTable {
    entries: Vec<IntPoly>,
}

impl KLTable {
    pub fn build(max_n: usize) -> Result<Self> {
        let mut table = KLTable { entries: Vec::with_capacity(max_n + 1) };
        for n in 0..=max_n {
            let pn = table.next_entry(n)?;
            table.entries.push(pn);
        }
        Ok(table)
    }

    /// Wraps externally supplied values, e.g. a deliberately corrupted table.
    pub fn from_entries(entries: Vec<IntPoly>) -> Self {
        KLTable { entries }
    }

    pub fn max_n(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn get(&self, n: usize) -> &IntPoly {
        &self.entries[n]
    }

    pub fn entries(&self) -> &[IntPoly] {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut [IntPoly] {
        &mut self.entries
    }

    /// Right-hand side of the recursion for `P_n` with the `i = n` term
    /// (which is `P_n` itself) left out.
    fn recursion_rhs(&self, n: usize) -> IntPoly {
        let t_minus_1 = IntPoly::linear(-1);
        let mut rhs = t_minus_1.pow(n + 1);
        let terms = par::map_range(n, |i| {
            let weight = BigInt::from(dyck::binom(n as i64, i as i64)) * (BigInt::from(1) << (n - i));
            (&t_minus_1.pow(n - i) * &self.entries[i]).scale(&weight)
        });
        for term in &terms {
            rhs += term;
        }
        rhs
    }

    fn next_entry(&self, n: usize) -> Result<IntPoly> {
        solve_reflected(n + 1, &self.recursion_rhs(n))
    }

    /// Checks `t^{n+1} P_n(1/t) = (t-1)^{n+1} + sum_i binom(n,i) 2^{n-i} (t-1)^{n-i} P_i`
    /// for every stored `n`, with all terms present.
    pub fn recursion_residual_is_zero(&self) -> bool {
        (0..self.entries.len()).all(|n| {
            let Ok(lhs) = self.entries[n].reverse(n + 1) else {
                return false;
            };
            lhs == &self.recursion_rhs(n) + &self.entries[n]
        })
    }
}

/// `P_n(t)`.
pub fn kl_poly(n: usize) -> Result<IntPoly> {
    Ok(KLTable::build(n)?.entries.pop().expect("table is nonempty"))
}

/// `Phi(t, u) = sum_n P_n(t) u^{n+1}`, computed as `u F(t, u)`.
pub fn phi_series(order: usize) -> PolySeries {
    expand_f(order).shift_u()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pipeline {
    Recursion,
    GeneratingFunction,
    DyckDp,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub k: usize,
    pub pipeline: Pipeline,
    pub expected: BigInt,
    pub found: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    /// Every `n` in `0..checked` was compared.
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the recursion table against the `u^{n+1}` coefficients of `phi`
/// and the Dyck rows for every `n < order`. The recursion value is the
/// `expected` side of each reported mismatch.
pub fn compare_pipelines(
    table: &KLTable,
    phi: &PolySeries,
    dyck_rows: &[Vec<BigUint>],
    order: usize,
) -> TheoremReport {
    let mut mismatches = Vec::new();
    for n in 0..order {
        let rec = table.get(n);
        let gf = phi.coeff(n + 1);
        let dp = IntPoly::from_coeffs(dyck::to_signed(&dyck_rows[n]));
        let width = [rec, gf, &dp].iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
        for k in 0..width {
            let expected = rec.coeff(k);
            for (pipeline, p) in [(Pipeline::GeneratingFunction, gf), (Pipeline::DyckDp, &dp)] {
                let found = p.coeff(k);
                if found != expected {
                    mismatches.push(Mismatch { n, k, pipeline, expected: expected.clone(), found });
                }
            }
        }
    }
    TheoremReport { checked: order, mismatches }
}

/// For every `n < order`: the `u^{n+1}` coefficient of `phi_series`, the
/// recursion value `kl_poly(n)` and the DP row `a_{n,*}` all agree.
pub fn verify_theorem(order: usize) -> Result<TheoremReport> {
    let order = order.max(1);
    let table = KLTable::build(order - 1)?;
    let phi = phi_series(order);
    let rows = par::map_range(order, dyck::count_by_ascents_dp);
    Ok(compare_pipelines(&table, &phi, &rows, order))
}
