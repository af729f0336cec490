//! Truncated formal power series in `t` with exact coefficients.

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::poly::RationalPolynomial;

/// Coefficient ring for [`TruncatedSeries`].
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, q: &Rational) -> Self;
    /// Multiplicative inverse, when the element is a unit.
    fn inverse(&self) -> Option<Self>;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Rational::new()
    }
    fn one() -> Self {
        Rational::from(1)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, other: &Self) -> Self {
        Rational::from(self + other)
    }
    fn sub(&self, other: &Self) -> Self {
        Rational::from(self - other)
    }
    fn mul(&self, other: &Self) -> Self {
        Rational::from(self * other)
    }
    fn scale(&self, q: &Rational) -> Self {
        Rational::from(self * q)
    }
    fn inverse(&self) -> Option<Self> {
        (*self != 0).then(|| Rational::from(self.recip_ref()))
    }
}

impl Coeff for RationalPolynomial {
    fn zero() -> Self {
        RationalPolynomial::zero()
    }
    fn one() -> Self {
        RationalPolynomial::one()
    }
    fn is_zero(&self) -> bool {
        RationalPolynomial::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, q: &Rational) -> Self {
        RationalPolynomial::scale(self, q)
    }
    fn inverse(&self) -> Option<Self> {
        // only nonzero constants are units in Q[x]
        match self.degree() {
            Some(0) => Some(RationalPolynomial::constant(Rational::from(self.coeff(0).recip_ref()))),
            _ => None,
        }
    }
}

/// `sum_{n<=order} c_n t^n`, all arithmetic truncated at `t^order`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    /// Pads or truncates `coeffs` to exactly `order + 1` terms.
    pub fn new(order: usize, mut coeffs: Vec<C>) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        TruncatedSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![C::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    fn same_order(&self, other: &Self) -> usize {
        assert_eq!(self.order(), other.order(), "series truncated at different orders");
        self.order()
    }

    pub fn add(&self, other: &Self) -> Self {
        let m = self.same_order(other);
        Self::from_fn(m, |n| self.coeffs[n].add(&other.coeffs[n]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let m = self.same_order(other);
        Self::from_fn(m, |n| self.coeffs[n].sub(&other.coeffs[n]))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let m = self.same_order(other);
        Self::from_fn(m, |n| {
            (0..=n).fold(C::zero(), |acc, i| acc.add(&self.coeffs[i].mul(&other.coeffs[n - i])))
        })
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::from_fn(self.order(), |n| self.coeffs[n].scale(q))
    }

    /// `self / other`; the divisor must have a unit constant term.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let m = self.same_order(other);
        let inv0 = other.coeffs[0].inverse().ok_or(Error::NonUnitSeries)?;
        let mut q: Vec<C> = Vec::with_capacity(m + 1);
        for n in 0..=m {
            let mut acc = self.coeffs[n].clone();
            for i in 1..=n {
                acc = acc.sub(&other.coeffs[i].mul(&q[n - i]));
            }
            q.push(acc.mul(&inv0));
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    /// Formal derivative `d/dt`; the top coefficient becomes zero.
    pub fn derivative(&self) -> Self {
        let m = self.order();
        Self::from_fn(m, |n| {
            if n < m {
                self.coeffs[n + 1].scale(&Rational::from(n as u64 + 1))
            } else {
                C::zero()
            }
        })
    }

    /// Antiderivative with zero constant term (the top input coefficient is dropped).
    pub fn integral(&self) -> Self {
        Self::from_fn(self.order(), |n| {
            if n == 0 {
                C::zero()
            } else {
                self.coeffs[n - 1].scale(&Rational::from((1, n as u64)))
            }
        })
    }

    /// `log(self)` for a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != C::one() {
            return Err(Error::LogConstantTerm);
        }
        Ok(self.derivative().div(self)?.integral())
    }

    /// The Euler operator `t d/dt`: `c_n -> n c_n`.
    pub fn euler_operator(&self) -> Self {
        Self::from_fn(self.order(), |n| self.coeffs[n].scale(&Rational::from(n as u64)))
    }

    /// Multiplication by `c t^k`, truncated.
    pub fn shift_up(&self, k: usize, c: &Rational) -> Self {
        Self::from_fn(self.order(), |n| {
            if n >= k {
                self.coeffs[n - k].scale(c)
            } else {
                C::zero()
            }
        })
    }
}

/// `log(1 + t) = t - t^2/2 + t^3/3 - ...`.
pub fn series_log1p(order: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::from_fn(order, |n| match n {
        0 => Rational::new(),
        _ if n % 2 == 1 => Rational::from((1, n as u64)),
        _ => Rational::from((-1, n as u64)),
    })
}

/// `log(1 + t) / t = sum (-1)^n t^n / (n + 1)`.
pub fn series_log1p_over_t(order: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::from_fn(order, |n| {
        let v = Rational::from((1, n as u64 + 1));
        if n % 2 == 1 {
            -v
        } else {
            v
        }
    })
}

/// `(1 + t)^x = sum C(x, n) t^n` for a rational exponent.
pub fn series_pow_binomial(x: &Rational, order: usize) -> TruncatedSeries<Rational> {
    let mut c = Rational::from(1);
    TruncatedSeries::from_fn(order, |n| {
        if n > 0 {
            c *= Rational::from(x - (n as u64 - 1));
            c /= n as u64;
        }
        c.clone()
    })
}

/// `(1 + t)^x` with the exponent left symbolic: coefficients `C(x, n)` in `Q[x]`.
pub fn series_pow_binomial_symbolic(order: usize) -> TruncatedSeries<RationalPolynomial> {
    TruncatedSeries::from_fn(order, RationalPolynomial::binomial)
}

pub fn series_mul<C: Coeff>(a: &TruncatedSeries<C>, b: &TruncatedSeries<C>) -> TruncatedSeries<C> {
    a.mul(b)
}

pub fn series_div<C: Coeff>(a: &TruncatedSeries<C>, b: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    a.div(b)
}

/// Applies the Euler operator `r` times to `E(z) = sum z^{rn} / (n!)^r` and
/// compares with `(rz)^r E(z)`, coefficientwise up to `z^order`.
pub fn check_euler_operator_ode(r: usize, order: usize) -> bool {
    assert!(r >= 1 && order >= r, "need r >= 1 and order >= r");
    let e = TruncatedSeries::from_fn(order, |k| {
        if k % r != 0 {
            return Rational::new();
        }
        let n = (k / r) as u32;
        let f = Integer::from(Integer::factorial(n));
        Rational::from((Integer::from(1), f.pow(r as u32)))
    });
    let lhs = (0..r).fold(e.clone(), |acc, _| acc.euler_operator());
    let rr = Integer::from(r).pow(r as u32);
    let rhs = e.shift_up(r, &Rational::from(rr));
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn mercator() {
        let l = series_log1p(3);
        assert_eq!(l.coeffs(), &[q(0, 1), q(1, 1), q(-1, 2), q(1, 3)]);
    }

    #[test]
    fn square_root_series() {
        let s = series_pow_binomial(&q(1, 2), 2);
        assert_eq!(s.coeffs(), &[q(1, 1), q(1, 2), q(-1, 8)]);
        assert_eq!(s.mul(&s), TruncatedSeries::new(2, vec![q(1, 1), q(1, 1)]));
    }

    #[test]
    fn gregory_coefficients_from_division() {
        let g = TruncatedSeries::one(4).div(&series_log1p_over_t(4)).unwrap();
        assert_eq!(g.coeffs(), &[q(1, 1), q(1, 2), q(-1, 12), q(1, 24), q(-19, 720)]);
    }

    #[test]
    fn division_needs_a_unit() {
        let l = series_log1p(5);
        assert_eq!(TruncatedSeries::one(5).div(&l), Err(Error::NonUnitSeries));
        let xs = TruncatedSeries::new(3, vec![RationalPolynomial::x(), RationalPolynomial::one()]);
        assert_eq!(TruncatedSeries::one(3).div(&xs), Err(Error::NonUnitSeries));
    }

    #[test]
    fn log_inverts_binomial_power() {
        // log((1+t)^x) = x log(1+t)
        let x = q(-5, 3);
        let lg = series_pow_binomial(&x, 10).log().unwrap();
        assert_eq!(lg, series_log1p(10).scale(&x));
        assert_eq!(series_log1p(4).log(), Err(Error::LogConstantTerm));
    }

    #[test]
    fn euler_operator_identity() {
        assert!(check_euler_operator_ode(1, 10));
        assert!(check_euler_operator_ode(2, 20));
        assert!(check_euler_operator_ode(3, 30));
    }
}
