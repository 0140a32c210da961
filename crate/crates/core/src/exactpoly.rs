//! Dense univariate polynomials in `t` over the big integers, and truncated
//! power series in `u` whose coefficients are such polynomials.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in `t` with arbitrary-precision integer coefficients.
///
/// `coeffs[k]` is the coefficient of `t^k`. The highest stored coefficient
/// is always nonzero; the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * t^k`.
    pub fn monomial<T: Into<BigInt>>(c: T, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// `t + c`, the usual building block `(t - 1)`, `(t - 2)`, ...
    pub fn linear<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs(vec![c.into(), BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        let mut acc = IntPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `t^r * p(1/t)`: reflects the coefficient window `[0, r]`.
    pub fn reverse(&self, r: usize) -> Result<IntPoly> {
        match self.degree() {
            None => Ok(IntPoly::zero()),
            Some(d) if d > r => Err(Error::ReverseDegree { degree: d, window: r }),
            Some(_) => Ok(IntPoly::from_coeffs(
                (0..=r).map(|k| self.coeff(r - k)).collect(),
            )),
        }
    }
}

/// Free-function form of [`IntPoly::mul`].
pub fn poly_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    a * b
}

/// Free-function form of [`IntPoly::reverse`].
pub fn poly_reverse(r: usize, p: &IntPoly) -> Result<IntPoly> {
    p.reverse(r)
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Ascending powers: `1 + 11*t + 2*t^2`, `2 - 3*t + t^2`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// A power series in `u` truncated after `u^order`, with [`IntPoly`]
/// coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolySeries {
    coeffs: Vec<IntPoly>,
}

impl PolySeries {
    pub fn zero(order: usize) -> Self {
        PolySeries {
            coeffs: vec![IntPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = IntPoly::one();
        s
    }

    /// Pads with zeros or truncates so that exactly `order + 1` terms remain.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<IntPoly>) -> Self {
        coeffs.resize(order + 1, IntPoly::zero());
        PolySeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> &IntPoly {
        &self.coeffs[m]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(IntPoly::is_zero)
    }

    /// Multiplication by `u`, dropping the term pushed past the order.
    pub fn shift_u(&self) -> PolySeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(IntPoly::zero());
        coeffs.extend(self.coeffs[..self.order()].iter().cloned());
        PolySeries { coeffs }
    }

    pub fn scale(&self, c: &IntPoly) -> PolySeries {
        PolySeries {
            coeffs: self.coeffs.iter().map(|p| p * c).collect(),
        }
    }

    fn check_order(&self, other: &PolySeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &PolySeries) -> Result<PolySeries> {
        self.check_order(other)?;
        Ok(PolySeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &PolySeries) -> Result<PolySeries> {
        self.check_order(other)?;
        Ok(PolySeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &PolySeries) -> Result<PolySeries> {
        self.check_order(other)?;
        let n = self.order();
        let coeffs = (0..=n)
            .map(|m| (0..=m).map(|a| &self.coeffs[a] * &other.coeffs[m - a]).sum())
            .collect();
        Ok(PolySeries { coeffs })
    }

    /// Evaluates every coefficient at the integer `t`.
    pub fn eval_t(&self, t: &BigInt) -> Vec<BigInt> {
        self.coeffs.iter().map(|p| p.eval(t)).collect()
    }
}

pub fn series_mul(a: &PolySeries, b: &PolySeries) -> Result<PolySeries> {
    a.mul(b)
}

/// The Dyck generating function `F(t, u) = sum_{n,k} a_{n,k} t^k u^n`,
/// expanded through `u^order` as the power-series root of
/// `u (1 - u + t u) F^2 - F + 1 = 0`.
///
/// Uses the coefficient recurrence of `F = 1 + u (1 - u + t u) F^2`:
/// `F_m = S_{m-1} + (t - 1) S_{m-2}` with `S_j = sum_{a+b=j} F_a F_b`.
pub fn expand_f(order: usize) -> PolySeries {
    let t_minus_1 = IntPoly::linear(-1);
    let mut f: Vec<IntPoly> = Vec::with_capacity(order + 1);
    // squares[j] = sum_{a+b=j} F_a F_b, filled as soon as F_0..F_j exist
    let mut squares: Vec<IntPoly> = Vec::with_capacity(order + 1);
    for m in 0..=order {
        let fm = if m == 0 {
            IntPoly::one()
        } else {
            let mut x = squares[m - 1].clone();
            if m >= 2 {
                x += &(&squares[m - 2] * &t_minus_1);
            }
            x
        };
        f.push(fm);
        squares.push((0..=m).map(|a| &f[a] * &f[m - a]).sum());
    }
    PolySeries { coeffs: f }
}
