//! The `S_n`-equivariant Kazhdan-Lusztig polynomial of `M_n`, as its
//! Frobenius characteristic `p_n(t)`, and the conjectured closed form.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactpoly::IntPoly;
use crate::par;
use crate::symmfn::{partitions_of, v_poly, Partition, SchurPoly};
use crate::thagkl::{solve_reflected, KLTable};

/// `p_0, ..., p_max`, plus the products `p_i * w_j` reused across levels.
#[derive(Clone, Debug)]
pub struct EqKLTable {
    entries: Vec<SchurPoly>,
    // times_w[i][j] = p_i * w_j for i + j <= max_n
    times_w: Vec<Vec<SchurPoly>>,
}

impl EqKLTable {
    /// Builds bottom-up from
    /// `t^{n+1} p_n(1/t) = (t-1) sum_l v_l s[n-l] + sum_{i+j+m=n} p_i w_j w_m`,
    /// the triple sum running over ordered `(i, j, m)`. Each level is checked
    /// against the non-equivariant `P_n` by graded dimension.
    pub fn build(max_n: usize) -> Result<Self> {
        let kl = KLTable::build(max_n)?;
        let v: Vec<SchurPoly> = par::map_range(max_n + 1, v_poly);
        let mut table = EqKLTable { entries: Vec::new(), times_w: Vec::new() };
        for n in 0..=max_n {
            let rhs = table.rhs(n, &v, true);
            let pn = solve_level(n, &rhs)?;
            if &pn.graded_dim() != kl.get(n) {
                return Err(Error::DimensionMismatch { n });
            }
            let row = par::map_range(max_n - n + 1, |j| pn.mul_w(j));
            table.entries.push(pn);
            table.times_w.push(row);
        }
        Ok(table)
    }

    pub fn max_n(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn get(&self, n: usize) -> &SchurPoly {
        &self.entries[n]
    }

    pub fn entries(&self) -> &[SchurPoly] {
        &self.entries
    }

    /// The ordered triple sum over `i < n`. With `optimized`, the `j <-> m`
    /// symmetry is used to halve the work.
    pub fn triple_sum(&self, n: usize, optimized: bool) -> SchurPoly {
        let mut triples = Vec::new();
        for i in 0..n.min(self.entries.len()) {
            let rest = n - i;
            for j in 0..=rest {
                let m = rest - j;
                if !optimized {
                    triples.push((i, j, m, 1));
                } else if j < m {
                    triples.push((i, j, m, 2));
                } else if j == m {
                    triples.push((i, j, m, 1));
                }
            }
        }
        par::map_reduce(
            triples,
            |(i, j, m, mult)| {
                let prod = match self.times_w.get(i).and_then(|row| row.get(j)) {
                    Some(pw) => pw.mul_w(m),
                    None => self.entries[i].mul_w(j).mul_w(m),
                };
                if mult == 1 {
                    prod
                } else {
                    prod.scale(&IntPoly::constant(mult))
                }
            },
            || SchurPoly::zero(n),
            |mut a, b| {
                a.add_assign(&b);
                a
            },
        )
    }

    fn rhs(&self, n: usize, v: &[SchurPoly], optimized: bool) -> SchurPoly {
        let mut spikes = SchurPoly::zero(n);
        for (ell, v_ell) in v.iter().enumerate().take(n + 1) {
            spikes.add_assign(&v_ell.mul_h(n - ell));
        }
        let mut rhs = spikes.scale(&IntPoly::linear(-1));
        rhs.add_assign(&self.triple_sum(n, optimized));
        rhs
    }
}

// Independent coefficient-reflection solve for each lambda of size n.
fn solve_level(n: usize, rhs: &SchurPoly) -> Result<SchurPoly> {
    let solved = par::map(partitions_of(n), |lambda| {
        let p = solve_reflected(n + 1, &rhs.coeff(&lambda))?;
        Ok((lambda, p))
    });
    let mut out = SchurPoly::zero(n);
    for r in solved {
        let (lambda, p) = r?;
        out.add_term(lambda, &p);
    }
    Ok(out)
}

/// `p_n(t) = ch P^{S_n}_{M_n}(t)`.
pub fn eq_kl(n: usize) -> Result<SchurPoly> {
    Ok(EqKLTable::build(n)?.entries.pop().expect("table is nonempty"))
}

/// Partitions `[a, b, 2^i, 1^eta]` of `n` with `1 < a < n`, `i >= 0`,
/// `eta` in `{0, 1}` and `b = n - a - 2i - eta`, where `b` is either absent
/// (`b = 0`) or satisfies `2 <= b <= a`. Canonical order.
pub fn upsilon(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for a in 2..n {
        for eta in 0..=1 {
            let mut i = 0;
            while a + 2 * i + eta <= n {
                let b = n - a - 2 * i - eta;
                if b == 0 || (2..=a).contains(&b) {
                    let mut parts = vec![a];
                    if b > 0 {
                        parts.push(b);
                    }
                    parts.extend(std::iter::repeat_n(2, i));
                    parts.extend(std::iter::repeat_n(1, eta));
                    out.push(Partition::new(parts).expect("built weakly decreasing"));
                }
                i += 1;
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// `lambda_1 - lambda_2 + 1`, or `lambda_1 - 1` for `[n-1, 1]`.
pub fn kappa(lambda: &Partition, n: usize) -> u64 {
    assert!(lambda.len() >= 2, "kappa is only used on partitions with at least two parts");
    if n >= 2 && lambda.parts() == [n - 1, 1] {
        (lambda.part(1) - 1) as u64
    } else {
        (lambda.part(1) - lambda.part(2) + 1) as u64
    }
}

/// `1` unless the smallest part is `1`.
pub fn omega(lambda: &Partition) -> u32 {
    u32::from(lambda.smallest_part() != Some(1))
}

pub type KappaFn = fn(&Partition, usize) -> u64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureTerm {
    pub lambda: Partition,
    pub kappa: u64,
    pub ell: usize,
    pub omega: u32,
}

impl ConjectureTerm {
    /// `kappa t^{ell - 1} (t + 1)^omega`.
    pub fn coefficient(&self) -> IntPoly {
        IntPoly::linear(1)
            .pow(self.omega as usize)
            .shift(self.ell - 1)
            .scale(&BigInt::from(self.kappa))
    }
}

pub fn conjecture_terms_with(n: usize, kappa_fn: KappaFn) -> Vec<ConjectureTerm> {
    upsilon(n)
        .into_iter()
        .map(|lambda| {
            let term = ConjectureTerm {
                kappa: kappa_fn(&lambda, n),
                ell: lambda.len(),
                omega: omega(&lambda),
                lambda,
            };
            let hook_case = term.lambda.parts() == [n - 1, 1];
            assert!(!(hook_case && term.omega == 1), "omega = 1 on [n-1,1]");
            term
        })
        .collect()
}

pub fn conjecture_terms(n: usize) -> Vec<ConjectureTerm> {
    conjecture_terms_with(n, kappa)
}

/// `sum_{lambda in Upsilon_n} kappa t^{l-1} (t+1)^omega s[lambda] + ((n-1)t + 1) s[n]`.
pub fn conjecture_poly_with(n: usize, kappa_fn: KappaFn) -> SchurPoly {
    let mut out = SchurPoly::term(
        Partition::row(n),
        IntPoly::from_coeffs(vec![BigInt::from(1), BigInt::from(n as i64 - 1)]),
    );
    for term in conjecture_terms_with(n, kappa_fn) {
        out.add_term(term.lambda.clone(), &term.coefficient());
    }
    out
}

pub fn conjecture_poly(n: usize) -> SchurPoly {
    conjecture_poly_with(n, kappa)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub n: usize,
    pub lambda: Partition,
    pub computed: IntPoly,
    pub conjectured: IntPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub max_n: usize,
    pub discrepancies: Vec<Discrepancy>,
}

impl ConjectureReport {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn failing_levels(&self) -> Vec<usize> {
        let mut ns: Vec<usize> = self.discrepancies.iter().map(|d| d.n).collect();
        ns.dedup();
        ns
    }
}

/// Compares `table` against the conjectured formula for `1 <= n <= max_n`.
pub fn compare_conjecture(table: &EqKLTable, max_n: usize, kappa_fn: KappaFn) -> ConjectureReport {
    let mut discrepancies = Vec::new();
    for n in 1..=max_n {
        let computed = table.get(n);
        let conjectured = conjecture_poly_with(n, kappa_fn);
        for lambda in partitions_of(n) {
            let (a, b) = (computed.coeff(&lambda), conjectured.coeff(&lambda));
            if a != b {
                discrepancies.push(Discrepancy { n, lambda, computed: a, conjectured: b });
            }
        }
    }
    ConjectureReport { max_n, discrepancies }
}

pub fn verify_conjecture(max_n: usize) -> Result<ConjectureReport> {
    let table = EqKLTable::build(max_n.max(1))?;
    Ok(compare_conjecture(&table, max_n, kappa))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thagkl::kl_poly;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn schur(terms: &[(&[usize], &[i64])]) -> SchurPoly {
        let n = terms[0].0.iter().sum();
        let mut out = SchurPoly::zero(n);
        for (l, c) in terms {
            out.add_term(part(l), &poly(c));
        }
        out
    }

    #[test]
    fn small_levels() {
        assert_eq!(eq_kl(0).unwrap(), SchurPoly::one());
        assert_eq!(eq_kl(1).unwrap(), schur(&[(&[1], &[1])]));
        assert_eq!(eq_kl(2).unwrap(), schur(&[(&[2], &[1, 1])]));
        assert_eq!(eq_kl(3).unwrap(), schur(&[(&[3], &[1, 2]), (&[2, 1], &[0, 1])]));
        assert_eq!(
            eq_kl(4).unwrap(),
            schur(&[(&[4], &[1, 3]), (&[3, 1], &[0, 2]), (&[2, 2], &[0, 1, 1])])
        );
    }

    #[test]
    fn table_invariants() {
        let table = EqKLTable::build(8).unwrap();
        for (n, pn) in table.entries().iter().enumerate() {
            assert_eq!(pn.graded_dim(), kl_poly(n).unwrap());
            assert!(pn.all_coeffs_nonnegative());
            assert!(pn.max_coeff_degree().unwrap() <= n / 2);
            assert_eq!(pn.coeff(&Partition::row(n)).coeff(0), BigInt::from(1));
        }
    }

    #[test]
    fn symmetric_triple_sum_matches_full() {
        let table = EqKLTable::build(6).unwrap();
        for n in 0..=6 {
            assert_eq!(table.triple_sum(n, true), table.triple_sum(n, false), "n={n}");
        }
    }

    #[test]
    fn upsilon_examples() {
        assert!(upsilon(1).is_empty());
        assert!(upsilon(2).is_empty());
        assert_eq!(upsilon(3), vec![part(&[2, 1])]);
        assert_eq!(upsilon(4), vec![part(&[3, 1]), part(&[2, 2])]);
        assert_eq!(upsilon(5), vec![part(&[4, 1]), part(&[3, 2]), part(&[2, 2, 1])]);
        for n in 1..=14 {
            for lambda in upsilon(n) {
                assert_eq!(lambda.size(), n);
                assert!(lambda.len() >= 2);
                if lambda.len() > 2 {
                    assert!(lambda.part(2) >= 2, "{lambda}");
                }
            }
        }
    }

    #[test]
    fn kappa_and_omega() {
        assert_eq!(kappa(&part(&[2, 1]), 3), 1);
        assert_eq!(kappa(&part(&[3, 1]), 4), 2);
        assert_eq!(kappa(&part(&[2, 2]), 4), 1);
        assert_eq!(kappa(&part(&[5, 2, 2]), 9), 4);
        assert_eq!(omega(&part(&[2, 2])), 1);
        assert_eq!(omega(&part(&[3, 1])), 0);
    }

    #[test]
    fn conjecture_examples() {
        assert_eq!(conjecture_poly(1), schur(&[(&[1], &[1])]));
        assert_eq!(conjecture_poly(3), schur(&[(&[3], &[1, 2]), (&[2, 1], &[0, 1])]));
        assert_eq!(
            conjecture_poly(4),
            schur(&[(&[4], &[1, 3]), (&[3, 1], &[0, 2]), (&[2, 2], &[0, 1, 1])])
        );
        assert_eq!(conjecture_poly(5).graded_dim(), poly(&[1, 26, 15]));
    }

    #[test]
    fn conjecture_holds_small_and_negative_control() {
        assert!(verify_conjecture(5).unwrap().passed());

        fn bad_kappa(lambda: &Partition, n: usize) -> u64 {
            if lambda.parts() == [2, 2] {
                2
            } else {
                kappa(lambda, n)
            }
        }
        let table = EqKLTable::build(5).unwrap();
        let report = compare_conjecture(&table, 5, bad_kappa);
        assert!(!report.passed());
        assert_eq!(report.failing_levels(), vec![4]);
        assert_eq!(report.discrepancies[0].lambda, part(&[2, 2]));
    }
}
