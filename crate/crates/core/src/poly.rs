//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::Rational;

use crate::arith::PrimeCtx;

/// Dense polynomial in `x` with rational coefficients; `coeffs[i]` is the
/// coefficient of `x^i`. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::from(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `x + c`.
    pub fn linear(c: Rational) -> Self {
        Self::new(vec![c, Rational::from(1)])
    }

    /// `None` for the zero polynomial (degree minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Evaluation mod `p`; `None` if `p` divides a coefficient denominator or
    /// the denominator of `x`.
    pub fn eval_mod(&self, x: &Rational, ctx: &PrimeCtx) -> Option<u64> {
        let xr = ctx.reduce(x)?;
        let mut acc = 0;
        for c in self.coeffs.iter().rev() {
            acc = ctx.add(ctx.mul(acc, xr), ctx.reduce(c)?);
        }
        Some(acc)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| Rational::from(c * q)).collect())
    }

    /// `p(x + c)` by Horner recomposition.
    pub fn shift(&self, c: &Rational) -> Self {
        let lin = Self::linear(c.clone());
        let mut acc = Self::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(a.clone());
        }
        acc
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(Rational::new());
        for (i, c) in self.coeffs.iter().enumerate() {
            out.push(Rational::from(c / (i as u64 + 1)));
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| Rational::from(c * i as u64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `C(x, n) = x(x-1)...(x-n+1)/n!` as a polynomial in `x`.
    pub fn binomial(n: usize) -> Self {
        let mut acc = Self::one();
        for i in 0..n {
            acc = &acc * &Self::linear(Rational::from(-(i as i64)));
            acc = acc.scale(&Rational::from((1, i as u64 + 1)));
        }
        acc
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::new(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += Rational::from(a * b);
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| Rational::from(-c)).collect())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            let neg = *c < 0;
            let abs = Rational::from(c.abs_ref());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match i {
                0 => write!(f, "{abs}")?,
                _ if abs == 1 => {}
                _ => write!(f, "{abs}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn trims_and_reports_degree() {
        assert_eq!(RationalPolynomial::from_ints(&[0, 0, 0]).degree(), None);
        assert_eq!(RationalPolynomial::from_ints(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn arithmetic_and_eval() {
        let a = RationalPolynomial::from_ints(&[1, 1]);
        let b = RationalPolynomial::from_ints(&[-1, 1]);
        assert_eq!(&a * &b, RationalPolynomial::from_ints(&[-1, 0, 1]));
        assert_eq!((&a + &b).eval(&q(3, 2)), 3);
        assert_eq!(&a - &a, RationalPolynomial::zero());
        assert_eq!(a.pow(3).eval(&Rational::from(2)), 27);
    }

    #[test]
    fn shift_matches_pointwise_evaluation() {
        let p = RationalPolynomial::new(vec![q(1, 3), q(-2, 5), q(7, 2), q(1, 1)]);
        let c = q(-4, 3);
        let s = p.shift(&c);
        for t in [q(0, 1), q(1, 2), q(-3, 1), q(9, 7)] {
            assert_eq!(s.eval(&t), p.eval(&Rational::from(&t + &c)));
        }
    }

    #[test]
    fn binomial_polynomial() {
        let b = RationalPolynomial::binomial(3);
        assert_eq!(b.eval(&Rational::from(5)), 10);
        assert_eq!(b.eval(&Rational::from(-1)), -1);
        assert_eq!(RationalPolynomial::binomial(0), RationalPolynomial::one());
    }

    #[test]
    fn calculus() {
        let p = RationalPolynomial::from_ints(&[3, 0, 6]);
        assert_eq!(p.antiderivative().derivative(), p);
        assert_eq!(p.antiderivative(), RationalPolynomial::from_ints(&[0, 3, 0, 2]));
    }

    #[test]
    fn display() {
        let p = RationalPolynomial::new(vec![q(-1, 12), q(0, 1), q(1, 2)]);
        assert_eq!(p.to_string(), "1/2*x^2 - 1/12");
        assert_eq!(RationalPolynomial::x().to_string(), "x");
    }

    #[test]
    fn eval_mod_matches_exact() {
        let p = RationalPolynomial::new(vec![q(-19, 720), q(1, 6), q(0, 1), q(5, 7)]);
        let ctx = PrimeCtx::new(101);
        let x = q(3, 11);
        assert_eq!(p.eval_mod(&x, &ctx), ctx.reduce(&p.eval(&x)));
        assert_eq!(p.eval_mod(&x, &PrimeCtx::new(7)), None);
    }
}
