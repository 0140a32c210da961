//! Integer partitions and symmetric functions in the Schur basis with
//! polynomial coefficients in `t`.
//!
//! Products are only ever taken against `h_a = s[a]` (Pieri rule) and
//! `e_b = s[1^b]` (dual Pieri rule). The characteristic series of `W(t)` and
//! `V(t)` tensor powers are assembled from those:
//!
//! * `w(t,u) = s(tu) / s(u)`, so `w_j = sum_{a+b=j} (-1)^b t^a h_a e_b`;
//! * `v(t,u) = s(tu) / s(u)^2`, so `v_l = sum_{a+b+c=l} (-1)^{b+c} t^a h_a e_b e_c`.
//!
//! The power-sum route in [`plethysm`] recomputes the same series
//! independently.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactpoly::IntPoly;

/// A weakly decreasing sequence of positive integers.
///
/// Ordered reverse-lexicographically, so `[4] < [3,1] < [2,2] < [2,1,1]`;
/// this is the canonical order used everywhere in output.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `[n]`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// `[1^n]`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `lambda_i` with 1-based `i`; zero past the length.
    pub fn part(&self, i: usize) -> usize {
        i.checked_sub(1).and_then(|i| self.parts.get(i)).copied().unwrap_or(0)
    }

    pub fn smallest_part(&self) -> Option<usize> {
        self.parts.last().copied()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        Partition {
            parts: (1..=width).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect(),
        }
    }

    /// Hook lengths in row-major order.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                out.push(row - j + conj.parts[j] - i - 1);
            }
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n`, in canonical order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Dimension of the irreducible representation `V_lambda`, by the hook
/// length formula.
pub fn hook_dim(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    let fact: BigUint = (1..=n).map(BigUint::from).product();
    let hooks: BigUint = lambda.hooks().into_iter().map(BigUint::from).product();
    fact / hooks
}

// All mu with mu / lambda a horizontal strip of size `a`.
fn horizontal_strips(lambda: &Partition, a: usize) -> Vec<Partition> {
    fn go(lam: &[usize], row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let base = lam.get(row).copied().unwrap_or(0);
        if row == lam.len() {
            // the new row may take whatever is left, capped by the row above
            let cap = if row == 0 { usize::MAX } else { lam[row - 1] };
            if left <= cap {
                let mut parts = cur.clone();
                if left > 0 {
                    parts.push(left);
                }
                out.push(Partition { parts });
            }
            return;
        }
        let cap = if row == 0 { left } else { (lam[row - 1] - base).min(left) };
        for add in 0..=cap {
            cur.push(base + add);
            go(lam, row + 1, left - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&lambda.parts, 0, a, &mut Vec::new(), &mut out);
    out
}

// Border strips of size k added to lambda, with their signs, via beta-numbers.
fn border_strips(lambda: &Partition, k: usize) -> Vec<(Partition, i32)> {
    let len = lambda.len() + k;
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i + 1) + (len - 1 - i)).collect();
    let mut out = Vec::new();
    for i in 0..len {
        let moved = beta[i] + k;
        if beta.contains(&moved) {
            continue;
        }
        let crossed = beta.iter().filter(|&&b| b > beta[i] && b < moved).count();
        let mut nb = beta.clone();
        nb[i] = moved;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts = nb.iter().enumerate().map(|(j, &b)| b - (len - 1 - j)).collect();
        out.push((Partition::from_unsorted(parts), if crossed % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// A homogeneous symmetric function of fixed degree, expanded in Schur
/// functions with [`IntPoly`] coefficients. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SchurPoly {
    degree: usize,
    terms: BTreeMap<Partition, IntPoly>,
}

impl SchurPoly {
    pub fn zero(degree: usize) -> Self {
        SchurPoly { degree, terms: BTreeMap::new() }
    }

    /// `s[lambda]`.
    pub fn schur(lambda: Partition) -> Self {
        Self::term(lambda, IntPoly::one())
    }

    pub fn term(lambda: Partition, coeff: IntPoly) -> Self {
        let mut s = Self::zero(lambda.size());
        s.add_term(lambda, &coeff);
        s
    }

    /// The unit `s[]`.
    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &IntPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> IntPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: &IntPoly) {
        assert_eq!(lambda.size(), self.degree, "inhomogeneous term {lambda}");
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add_assign(&mut self, other: &SchurPoly) {
        assert_eq!(self.degree, other.degree);
        for (lambda, c) in &other.terms {
            self.add_term(lambda.clone(), c);
        }
    }

    pub fn sub_assign(&mut self, other: &SchurPoly) {
        self.add_assign(&other.scale(&IntPoly::constant(-1)));
    }

    pub fn scale(&self, c: &IntPoly) -> SchurPoly {
        let mut out = SchurPoly::zero(self.degree);
        for (lambda, x) in &self.terms {
            out.add_term(lambda.clone(), &(x * c));
        }
        out
    }

    /// Product with `h_a = s[a]` (Pieri rule).
    pub fn mul_h(&self, a: usize) -> SchurPoly {
        let mut out = SchurPoly::zero(self.degree + a);
        for (lambda, c) in &self.terms {
            for mu in horizontal_strips(lambda, a) {
                out.add_term(mu, c);
            }
        }
        out
    }

    /// Product with `e_b = s[1^b]` (dual Pieri rule), via conjugation.
    pub fn mul_e(&self, b: usize) -> SchurPoly {
        let mut out = SchurPoly::zero(self.degree + b);
        for (lambda, c) in &self.terms {
            for mu in horizontal_strips(&lambda.conjugate(), b) {
                out.add_term(mu.conjugate(), c);
            }
        }
        out
    }

    /// Product with the power sum `p_k` (Murnaghan-Nakayama rule).
    pub fn mul_p(&self, k: usize) -> SchurPoly {
        let mut out = SchurPoly::zero(self.degree + k);
        for (lambda, c) in &self.terms {
            for (mu, sign) in border_strips(lambda, k) {
                out.add_term(mu, &c.scale(&BigInt::from(sign)));
            }
        }
        out
    }

    /// Product with `w_j(t)`, expanded through `h_a e_b`.
    pub fn mul_w(&self, j: usize) -> SchurPoly {
        let mut out = SchurPoly::zero(self.degree + j);
        for a in 0..=j {
            let b = j - a;
            let sign = if b % 2 == 0 { 1 } else { -1 };
            out.add_assign(&self.mul_h(a).mul_e(b).scale(&IntPoly::monomial(sign, a)));
        }
        out
    }

    /// `sum_lambda dim V_lambda * coeff_lambda(t)`.
    pub fn graded_dim(&self) -> IntPoly {
        self.terms
            .iter()
            .map(|(lambda, c)| c.scale(&BigInt::from(hook_dim(lambda))))
            .sum()
    }

    pub fn max_coeff_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(IntPoly::degree).max()
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.terms.values().all(IntPoly::is_nonnegative)
    }
}

impl fmt::Debug for SchurPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchurPoly({self})")
    }
}

/// `(1 + t)*s[2] + t*s[1,1]`.
impl fmt::Display for SchurPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*s{lambda}")?;
        }
        Ok(())
    }
}

pub fn mul_h(f: &SchurPoly, a: usize) -> SchurPoly {
    f.mul_h(a)
}

pub fn mul_e(f: &SchurPoly, b: usize) -> SchurPoly {
    f.mul_e(b)
}

/// `w_j(t) = ch W(t)^{(x) j}`.
pub fn w_poly(j: usize) -> SchurPoly {
    SchurPoly::one().mul_w(j)
}

/// `v_l(t) = ch V(t)^{(x) l}`.
pub fn v_poly(ell: usize) -> SchurPoly {
    let mut out = SchurPoly::zero(ell);
    for a in 0..=ell {
        let ha = SchurPoly::schur(Partition::row(a)).scale(&IntPoly::monomial(1, a));
        for b in 0..=ell - a {
            let c = ell - a - b;
            let sign = if (b + c) % 2 == 0 { 1 } else { -1 };
            out.add_assign(&ha.mul_e(b).mul_e(c).scale(&IntPoly::constant(sign)));
        }
    }
    out
}

/// Plethysm `h_l[(t - a) s[1]]` through the power-sum basis.
pub mod plethysm {
    use super::*;
    use num_rational::BigRational;

    /// `z_mu = prod_i i^{m_i} m_i!`.
    pub fn z(mu: &Partition) -> BigUint {
        let mut counts = BTreeMap::new();
        for &p in mu.parts() {
            *counts.entry(p).or_insert(0usize) += 1;
        }
        counts
            .into_iter()
            .map(|(i, m)| {
                let fact: BigUint = (1..=m).map(BigUint::from).product();
                BigUint::from(i).pow(m as u32) * fact
            })
            .product()
    }

    /// `p_mu` in the Schur basis.
    pub fn power_sum(mu: &Partition) -> SchurPoly {
        mu.parts().iter().fold(SchurPoly::one(), |acc, &k| acc.mul_p(k))
    }

    /// `h_l[(t - a) s[1]] = sum_{mu |- l} z_mu^{-1} prod_i (t^{mu_i} - a) p_mu`,
    /// accumulated with rational coefficients and checked to be integral.
    pub fn h_of_linear(ell: usize, a: i64) -> Result<SchurPoly> {
        // Schur index -> rational coefficient of t^k
        let mut acc: BTreeMap<Partition, Vec<BigRational>> = BTreeMap::new();
        for mu in partitions_of(ell) {
            let weight = mu
                .parts()
                .iter()
                .fold(IntPoly::one(), |w, &k| &w * &(&IntPoly::monomial(1, k) - &IntPoly::constant(a)));
            let zmu = BigInt::from(z(&mu));
            for (lambda, chi) in power_sum(&mu).terms() {
                let coeff = &weight * chi;
                let slot = acc.entry(lambda.clone()).or_default();
                if slot.len() < coeff.coeffs().len() {
                    slot.resize(coeff.coeffs().len(), BigRational::zero());
                }
                for (k, c) in coeff.coeffs().iter().enumerate() {
                    slot[k] += BigRational::new(c.clone(), zmu.clone());
                }
            }
        }
        let mut out = SchurPoly::zero(ell);
        for (lambda, coeffs) in acc {
            let ints = coeffs
                .into_iter()
                .map(|c| if c.is_integer() { Ok(c.to_integer()) } else { Err(Error::NonIntegral(lambda.parts().to_vec())) })
                .collect::<Result<Vec<_>>>()?;
            out.add_term(lambda, &IntPoly::from_coeffs(ints));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn s(p: &[usize]) -> SchurPoly {
        SchurPoly::schur(part(p))
    }

    fn sum(terms: &[&[usize]]) -> SchurPoly {
        let mut out = SchurPoly::zero(terms[0].iter().sum());
        for t in terms {
            out.add_assign(&s(t));
        }
        out
    }

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn partition_validation_and_order() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 0, 3]), part(&[3, 1]));
        assert_eq!(part(&[3, 1, 1]).conjugate(), part(&[3, 1, 1]));
        assert_eq!(part(&[4, 2]).conjugate(), part(&[2, 2, 1, 1]));
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4),
            vec![part(&[4]), part(&[3, 1]), part(&[2, 2]), part(&[2, 1, 1]), part(&[1, 1, 1, 1])]
        );
        let mut four = partitions_of(4);
        four.reverse();
        four.sort();
        assert_eq!(four, partitions_of(4));
    }

    // Independent count p(n) by Euler's pentagonal recurrence.
    fn partition_count(n: usize) -> u64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[m] += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    p[m] += sign * p[m - g2];
                }
                k += 1;
            }
        }
        p[n] as u64
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(10).len(), 42);
        for n in 0..=20 {
            assert_eq!(partitions_of(n).len() as u64, partition_count(n));
        }
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(hook_dim(&part(&[5])), BigUint::from(1u32));
        assert_eq!(hook_dim(&part(&[2, 1])), BigUint::from(2u32));
        assert_eq!(hook_dim(&part(&[3, 1])), BigUint::from(3u32));
        assert_eq!(hook_dim(&part(&[2, 2])), BigUint::from(2u32));
        for n in 0..=9 {
            let total: BigUint = partitions_of(n).iter().map(|l| hook_dim(l).pow(2)).sum();
            let fact: BigUint = (1..=n).map(BigUint::from).product();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(s(&[1]).mul_h(1), sum(&[&[2], &[1, 1]]));
        assert_eq!(s(&[2, 1]).mul_h(2), sum(&[&[4, 1], &[3, 2], &[3, 1, 1], &[2, 2, 1]]));
        assert_eq!(s(&[3, 1]).mul_h(0), s(&[3, 1]));
        assert_eq!(s(&[1]).mul_e(1), sum(&[&[2], &[1, 1]]));
        assert_eq!(s(&[2]).mul_e(2), sum(&[&[3, 1], &[2, 1, 1]]));
        assert_eq!(s(&[2, 2]).mul_e(0), s(&[2, 2]));
        assert_eq!(SchurPoly::one().mul_h(3), s(&[3]));
        assert_eq!(SchurPoly::one().mul_e(3), s(&[1, 1, 1]));
    }

    #[test]
    fn pieri_commutes() {
        let f = sum(&[&[2, 1], &[3]]).scale(&poly(&[1, -2]));
        for (a, b) in [(1, 2), (2, 3), (0, 4)] {
            assert_eq!(f.mul_h(a).mul_h(b), f.mul_h(b).mul_h(a));
            assert_eq!(f.mul_e(a).mul_e(b), f.mul_e(b).mul_e(a));
            assert_eq!(f.mul_h(a).mul_e(b), f.mul_e(b).mul_h(a));
        }
    }

    #[test]
    fn pieri_dimension_count() {
        // dim(V_lambda (x) triv_a induced up) = binom(n+a, a) dim V_lambda
        let f = s(&[3, 2, 1]);
        let dim_f = hook_dim(&part(&[3, 2, 1]));
        for a in 0..5 {
            let expected = BigInt::from(crate::dyck::binom(6 + a as i64, a as i64) * &dim_f);
            assert_eq!(f.mul_h(a).graded_dim(), IntPoly::constant(expected.clone()));
            assert_eq!(f.mul_e(a).graded_dim(), IntPoly::constant(expected));
        }
    }

    #[test]
    fn murnaghan_nakayama_characters() {
        // p_2 = s[2] - s[1,1]; p_1^3 = s3 + 2 s21 + s111
        let mut p2 = s(&[2]);
        p2.sub_assign(&s(&[1, 1]));
        assert_eq!(SchurPoly::one().mul_p(2), p2);
        let mut p111 = s(&[3]);
        p111.add_assign(&s(&[2, 1]).scale(&poly(&[2])));
        p111.add_assign(&s(&[1, 1, 1]));
        assert_eq!(plethysm::power_sum(&part(&[1, 1, 1])), p111);
        // p_3 = s3 - s21 + s111
        let mut p3 = s(&[3]);
        p3.sub_assign(&s(&[2, 1]));
        p3.add_assign(&s(&[1, 1, 1]));
        assert_eq!(SchurPoly::one().mul_p(3), p3);
    }

    #[test]
    fn w_and_v_small() {
        assert_eq!(w_poly(0), SchurPoly::one());
        assert_eq!(w_poly(1), SchurPoly::term(part(&[1]), poly(&[-1, 1])));
        let mut w2 = SchurPoly::term(part(&[2]), poly(&[0, -1, 1]));
        w2.add_term(part(&[1, 1]), &poly(&[1, -1]));
        assert_eq!(w_poly(2), w2);

        assert_eq!(v_poly(0), SchurPoly::one());
        assert_eq!(v_poly(1), SchurPoly::term(part(&[1]), poly(&[-2, 1])));
        let mut v2 = SchurPoly::term(part(&[2]), poly(&[1, -2, 1]));
        v2.add_term(part(&[1, 1]), &poly(&[3, -2]));
        assert_eq!(v_poly(2), v2);
    }

    #[test]
    fn e_h_duality() {
        for m in 1..=12 {
            let mut acc = SchurPoly::zero(m);
            for a in 0..=m {
                let b = m - a;
                let sign = if b % 2 == 0 { 1 } else { -1 };
                acc.add_assign(&s(&[]).mul_h(a).mul_e(b).scale(&IntPoly::constant(sign)));
            }
            assert!(acc.is_zero(), "m={m}");
        }
    }

    #[test]
    fn w_is_v_times_s() {
        for j in 0..=8 {
            let mut acc = SchurPoly::zero(j);
            for ell in 0..=j {
                acc.add_assign(&v_poly(ell).mul_h(j - ell));
            }
            assert_eq!(acc, w_poly(j), "j={j}");
        }
    }

    #[test]
    fn plethysm_matches_series_route() {
        for ell in 0..=5 {
            assert_eq!(plethysm::h_of_linear(ell, 2).unwrap(), v_poly(ell), "v {ell}");
            assert_eq!(plethysm::h_of_linear(ell, 1).unwrap(), w_poly(ell), "w {ell}");
        }
    }

    #[test]
    fn mul_w_dimensions() {
        // dim of s[2,1] * w_j is binom(3+j, j) * 2 * (t-1)^j
        let f = s(&[2, 1]);
        for j in 0..4 {
            let weight = BigInt::from(crate::dyck::binom(3 + j as i64, j as i64) * BigUint::from(2u32));
            let expected = IntPoly::linear(-1).pow(j).scale(&weight);
            assert_eq!(f.mul_w(j).graded_dim(), expected);
        }
        assert_eq!(SchurPoly::one().mul_w(3), w_poly(3));
    }

    #[test]
    fn display_form() {
        let mut x = SchurPoly::term(part(&[2]), poly(&[1, 1]));
        x.add_term(part(&[1, 1]), &poly(&[0, 1]));
        assert_eq!(x.to_string(), "(1 + t)*s[2] + (t)*s[1,1]");
        assert_eq!(SchurPoly::zero(3).to_string(), "0");
    }
}
