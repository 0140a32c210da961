//! Dyck paths and the long-ascent statistic, counted three independent ways:
//! exhaustive enumeration, a dynamic program, and the known closed form.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::par;

/// Largest semilength accepted by [`enumerate_paths`] (`C_14 = 2674440`).
pub const ENUMERATION_MAX: usize = 14;

/// Largest semilength storable in a [`DyckPath`].
pub const PATH_MAX: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    U,
    D,
}

/// A Dyck word packed into a bit mask: bit `i` set means step `i` is `U`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    bits: u64,
    semilength: u8,
}

impl DyckPath {
    pub fn from_steps(steps: &[Step]) -> Result<Self> {
        if steps.len() % 2 != 0 || steps.len() > 2 * PATH_MAX {
            return Err(Error::InvalidPath(format!("length {}", steps.len())));
        }
        let mut height = 0i64;
        let mut bits = 0u64;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::U => {
                    height += 1;
                    bits |= 1 << i;
                }
                Step::D => height -= 1,
            }
            if height < 0 {
                return Err(Error::InvalidPath(format!("prefix of length {} dips below zero", i + 1)));
            }
        }
        if height != 0 {
            return Err(Error::InvalidPath("does not return to height zero".into()));
        }
        Ok(DyckPath {
            bits,
            semilength: (steps.len() / 2) as u8,
        })
    }

    pub fn semilength(&self) -> usize {
        self.semilength as usize
    }

    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        (0..2 * self.semilength()).map(move |i| {
            if self.bits >> i & 1 == 1 {
                Step::U
            } else {
                Step::D
            }
        })
    }

    /// Number of maximal runs of at least two consecutive `U` steps.
    pub fn long_ascents_by_runs(&self) -> usize {
        let mut count = 0;
        let mut run = 0;
        for s in self.steps().chain(std::iter::once(Step::D)) {
            match s {
                Step::U => run += 1,
                Step::D => {
                    if run >= 2 {
                        count += 1;
                    }
                    run = 0;
                }
            }
        }
        count
    }

    /// Number of occurrences of the factor `UUD`.
    pub fn uud_occurrences(&self) -> usize {
        let steps: Vec<Step> = self.steps().collect();
        steps
            .windows(3)
            .filter(|w| w == &[Step::U, Step::U, Step::D])
            .count()
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::U),
                'D' | 'd' => Ok(Step::D),
                _ => Err(Error::InvalidPath(format!("unexpected character {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::from_steps(&steps)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.steps() {
            f.write_str(match s {
                Step::U => "U",
                Step::D => "D",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

/// Long ascents of `p`. Counts maximal runs and `UUD` factors and asserts
/// that they agree.
pub fn long_ascents(p: &DyckPath) -> usize {
    let runs = p.long_ascents_by_runs();
    assert_eq!(runs, p.uud_occurrences(), "run scan and UUD count disagree on {p}");
    runs
}

fn check_bound(n: usize) -> Result<()> {
    if n > ENUMERATION_MAX {
        return Err(Error::EnumerationBound { n, max: ENUMERATION_MAX });
    }
    Ok(())
}

// Depth-first walk over all completions of a prefix with `ups` U's and `downs` D's.
fn extend(n: usize, bits: u64, ups: usize, downs: usize, visit: &mut impl FnMut(DyckPath)) {
    if ups == n && downs == n {
        visit(DyckPath { bits, semilength: n as u8 });
        return;
    }
    let pos = ups + downs;
    if ups < n {
        extend(n, bits | 1 << pos, ups + 1, downs, visit);
    }
    if downs < ups {
        extend(n, bits, ups, downs + 1, visit);
    }
}

/// All Dyck paths of semilength `n`, in lexicographic order with `U < D`.
pub fn enumerate_paths(n: usize) -> Result<Vec<DyckPath>> {
    check_bound(n)?;
    let mut out = Vec::new();
    extend(n, 0, 0, 0, &mut |p| out.push(p));
    Ok(out)
}

// Valid prefixes of a fixed length, used to split the enumeration into
// independent parallel chunks.
fn prefixes(n: usize, len: usize) -> Vec<(u64, usize, usize)> {
    let mut frontier = vec![(0u64, 0usize, 0usize)];
    for pos in 0..len {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for (bits, u, d) in frontier {
            if u < n {
                next.push((bits | 1 << pos, u + 1, d));
            }
            if d < u {
                next.push((bits, u, d + 1));
            }
        }
        frontier = next;
    }
    frontier
}

fn trim(mut v: Vec<BigUint>) -> Vec<BigUint> {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// `a_{n,k}` for every `k`, by enumerating all paths. Index `k` of the
/// result holds `a_{n,k}`; trailing zeros are dropped.
pub fn count_by_ascents_enum(n: usize) -> Result<Vec<BigUint>> {
    check_bound(n)?;
    let width = n / 2 + 1;
    let chunks = prefixes(n, n.min(10));
    let counts = par::map_reduce(
        chunks,
        |(bits, u, d)| {
            let mut local = vec![0u64; width];
            extend(n, bits, u, d, &mut |p| local[long_ascents(&p)] += 1);
            local
        },
        || vec![0u64; width],
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    Ok(trim(counts.into_iter().map(BigUint::from).collect()))
}

/// `a_{n,k}` by dynamic programming over (height, trailing run of U's
/// saturated at 2, long ascents so far), one step at a time.
pub fn count_by_ascents_dp(n: usize) -> Vec<BigUint> {
    let kmax = n / 2;
    let width = kmax + 1;
    let idx = |h: usize, run: usize, k: usize| (h * 3 + run) * width + k;
    let mut cur = vec![BigUint::zero(); (n + 1) * 3 * width];
    cur[idx(0, 0, 0)] = BigUint::one();
    for pos in 0..2 * n {
        let mut next = vec![BigUint::zero(); cur.len()];
        let remaining = 2 * n - pos - 1;
        let hmax = pos.min(2 * n - pos);
        for h in (pos % 2..=hmax).step_by(2) {
            for run in 0..3 {
                for k in 0..width {
                    let c = &cur[idx(h, run, k)];
                    if c.is_zero() {
                        continue;
                    }
                    if h < n && h < remaining {
                        let (nrun, nk) = match run {
                            0 => (1, k),
                            1 => (2, k + 1),
                            _ => (2, k),
                        };
                        next[idx(h + 1, nrun, nk)] += c;
                    }
                    if h > 0 {
                        next[idx(h - 1, 0, k)] += c;
                    }
                }
            }
        }
        cur = next;
    }
    let counts = (0..width)
        .map(|k| (0..3).map(|run| &cur[idx(0, run, k)]).sum())
        .collect();
    trim(counts)
}

/// `binom(a, b)` for signed arguments, zero whenever either is negative or
/// `b > a`.
pub fn binom(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc = BigUint::one();
    for i in 0..b {
        acc = acc * BigUint::from(a - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn catalan(n: usize) -> BigUint {
    binom(2 * n as i64, n as i64) / BigUint::from(n + 1)
}

/// `a_{n,k} = 1/(n+1) binom(n+1,k) sum_{j=2k}^{n} binom(j-k-1,k-1) binom(n+1-k,n-j)`.
///
/// For `k = 0` the inner `binom(j-1, -1)` is read as `1` when `j = 0` and `0`
/// otherwise, which gives `a_{n,0} = 1`.
pub fn closed_form(n: usize, k: usize) -> Result<BigUint> {
    let (ni, ki) = (n as i64, k as i64);
    let mut sum = BigUint::zero();
    for j in 2 * ki..=ni {
        let inner = if k == 0 {
            if j == 0 {
                BigUint::one()
            } else {
                BigUint::zero()
            }
        } else {
            binom(j - ki - 1, ki - 1)
        };
        sum += inner * binom(ni + 1 - ki, ni - j);
    }
    let total = binom(ni + 1, ki) * sum;
    let (q, r) = total.div_rem(&BigUint::from(n + 1));
    if !r.is_zero() {
        return Err(Error::InexactDivision { n, k });
    }
    Ok(q)
}

/// Closed-form row `[a_{n,0}, ..., a_{n,floor(n/2)}]`.
pub fn closed_form_row(n: usize) -> Result<Vec<BigUint>> {
    (0..=n / 2).map(|k| closed_form(n, k)).collect::<Result<Vec<_>>>().map(trim)
}

pub(crate) fn to_signed(v: &[BigUint]) -> Vec<BigInt> {
    v.iter().cloned().map(BigInt::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn enumeration_small() {
        let p0 = enumerate_paths(0).unwrap();
        assert_eq!(p0.len(), 1);
        assert_eq!(p0[0].to_string(), "");
        let p2: Vec<String> = enumerate_paths(2).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(p2, ["UUDD", "UDUD"]);
        let p6 = enumerate_paths(6).unwrap();
        assert_eq!(p6.len(), 132);
        assert!(p6.contains(&"UUDUUUDDUDDD".parse().unwrap()));
        assert!(matches!(enumerate_paths(15), Err(Error::EnumerationBound { n: 15, .. })));
    }

    #[test]
    fn enumerated_paths_are_distinct_and_valid() {
        for n in 0..=9 {
            let paths = enumerate_paths(n).unwrap();
            assert_eq!(BigUint::from(paths.len()), catalan(n));
            let set: std::collections::HashSet<_> = paths.iter().collect();
            assert_eq!(set.len(), paths.len());
            for p in &paths {
                let steps: Vec<Step> = p.steps().collect();
                assert_eq!(DyckPath::from_steps(&steps).unwrap(), *p);
            }
        }
    }

    #[test]
    fn ascent_statistic() {
        let p: DyckPath = "uuduuudduddd".parse().unwrap();
        assert_eq!(long_ascents(&p), 2);
        assert_eq!(long_ascents(&"UDUDUD".parse().unwrap()), 0);
        assert_eq!(long_ascents(&"UUUDDD".parse().unwrap()), 1);
    }

    #[test]
    fn rejects_bad_words() {
        assert!("UDD".parse::<DyckPath>().is_err());
        assert!("DU".parse::<DyckPath>().is_err());
        assert!("UUD".parse::<DyckPath>().is_err());
        assert!("UXDD".parse::<DyckPath>().is_err());
    }

    // Rows frozen from an independent brute-force enumeration.
    const ROWS: &[&[u64]] = &[
        &[1],
        &[1],
        &[1, 1],
        &[1, 4],
        &[1, 11, 2],
        &[1, 26, 15],
        &[1, 57, 69, 5],
        &[1, 120, 252, 56],
        &[1, 247, 804, 364, 14],
        &[1, 502, 2349, 1800, 210],
        &[1, 1013, 6455, 7515, 1770, 42],
    ];

    #[test]
    fn three_oracles_match_frozen_rows() {
        for (n, expected) in ROWS.iter().enumerate() {
            let expected = row(expected);
            assert_eq!(count_by_ascents_enum(n).unwrap(), expected, "enum n={n}");
            assert_eq!(count_by_ascents_dp(n), expected, "dp n={n}");
            assert_eq!(closed_form_row(n).unwrap(), expected, "closed n={n}");
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form(4, 2).unwrap(), BigUint::from(2u32));
        assert_eq!(closed_form(5, 1).unwrap(), BigUint::from(26u32));
        assert_eq!(closed_form(5, 2).unwrap(), BigUint::from(15u32));
        for n in 0..40 {
            assert_eq!(closed_form(n, 0).unwrap(), BigUint::one());
            // beyond the degree bound
            assert!(closed_form(n, n / 2 + 1).unwrap().is_zero());
        }
    }

    #[test]
    fn dp_rows_sum_to_catalan() {
        for n in [0, 1, 2, 17, 50, 120, 200] {
            let r = count_by_ascents_dp(n);
            let total: BigUint = r.iter().sum();
            assert_eq!(total, catalan(n), "n={n}");
            if n >= 2 {
                assert_eq!(r.len() - 1, n / 2);
            }
        }
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binom(5, 2), BigUint::from(10u32));
        assert!(binom(-1, 0).is_zero());
        assert!(binom(3, -1).is_zero());
        assert!(binom(2, 3).is_zero());
        assert_eq!(binom(0, 0), BigUint::one());
        assert_eq!(catalan(14), BigUint::from(2674440u32));
    }
}
