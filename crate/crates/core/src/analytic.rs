//! Real evaluation of the Gregory-series formulas for Euler's constant and of
//! the generalised Dobiński series, on MPFR floats.

use std::fmt;

use rug::float::Round;
use rug::ops::{AssignRound, Pow};
use rug::{Float, Integer, Rational};

use crate::arith::harmonic;
use crate::error::{Error, Result};

/// Euler's constant to 80 decimal places (OEIS A001620).
pub const GAMMA_REF: &str =
    "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467";

/// Smallest precision accepted by the float routines.
pub const MIN_PRECISION: u32 = 64;

/// Doublings tried before a recurrence is declared unstable.
const MAX_DOUBLINGS: u32 = 3;

/// An MPFR float together with the precision it is reported at.
#[derive(Clone, Debug, PartialEq)]
pub struct BigFloat {
    value: Float,
}

impl BigFloat {
    pub fn new(value: Float) -> Self {
        BigFloat { value }
    }

    pub fn value(&self) -> &Float {
        &self.value
    }

    pub fn into_inner(self) -> Float {
        self.value
    }

    pub fn precision(&self) -> u32 {
        self.value.prec()
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// `|self - other|` as an `f64`.
    pub fn abs_diff(&self, other: &Float) -> f64 {
        Float::with_val(self.precision().max(other.prec()), &self.value - other).abs().to_f64()
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // enough decimal digits to represent the binary precision
        let digits = (f64::from(self.precision()) * std::f64::consts::LOG10_2).ceil() as usize + 1;
        write!(f, "{}", self.value.to_string_radix(10, Some(digits)))
    }
}

/// Euler's constant from [`GAMMA_REF`] at precision `prec`.
pub fn gamma_ref(prec: u32) -> Float {
    Float::with_val(prec, Float::parse(GAMMA_REF).expect("valid literal"))
}

fn check_precision(prec: u32) -> Result<()> {
    if prec < MIN_PRECISION {
        return Err(Error::InvalidArgument(format!("precision {prec} is below {MIN_PRECISION} bits")));
    }
    Ok(())
}

fn check_domain(x: &Rational) -> Result<()> {
    if *x <= -1 {
        return Err(Error::InvalidArgument(format!("x = {x} must exceed -1")));
    }
    Ok(())
}

/// One pass of `G_n = C(x, n) - sum_{j<n} (-1)^{n-j} G_j / (n-j+1)` at precision `prec`.
fn gregory_pass(x: &Rational, n_max: usize, prec: u32) -> Vec<Float> {
    gregory_pass_scaled(x, n_max, prec).0
}

/// As [`gregory_pass`], also returning `|C(x,n)| + sum_{j<n} |G_j| / (n-j+1)`,
/// the magnitude against which rounding in step `n` is measured.
fn gregory_pass_scaled(x: &Rational, n_max: usize, prec: u32) -> (Vec<Float>, Vec<f64>) {
    let xf = Float::with_val(prec, x);
    // kernel[d] = -(-1)^d / (d+1), so that G_n = C(x,n) + sum kernel[n-j] G_j
    let kernel: Vec<Float> = (0..=n_max)
        .map(|d| {
            let s: i32 = if d % 2 == 0 { -1 } else { 1 };
            Float::with_val(prec, s) / (d as u64 + 1)
        })
        .collect();
    let mut g = Vec::with_capacity(n_max + 1);
    let mut abs = Vec::with_capacity(n_max + 1);
    let mut scale = vec![1.0];
    g.push(Float::with_val(prec, 1));
    abs.push(1.0);
    let mut binom = Float::with_val(prec, 1);
    for n in 1..=n_max {
        binom *= Float::with_val(prec, &xf - (n as u64 - 1));
        binom /= n as u64;
        let mut acc = binom.clone();
        for (j, gj) in g.iter().enumerate() {
            acc += &kernel[n - j] * gj;
        }
        let s: f64 = abs.iter().enumerate().map(|(j, a)| a / (n - j + 1) as f64).sum();
        scale.push(binom.to_f64().abs() + s);
        abs.push(acc.to_f64().abs());
        g.push(acc);
    }
    (g, scale)
}

/// `|a - b| <= 2^{-bits} max(|b|, scale)`.
fn agrees(a: &Float, b: &Float, scale: f64, bits: u32) -> bool {
    if a == b {
        return true;
    }
    let diff = Float::with_val(b.prec(), a - b).abs();
    let mag = Float::with_val(b.prec(), b.abs_ref()).max(&Float::with_val(53, scale));
    diff <= (mag >> bits as i32)
}

/// Gregory values at the working precision that passed validation.
///
/// Agreement is relative to the larger of `|G_n|` and the cancellation scale
/// of step `n`, since some `G_n(x)` vanish exactly (e.g. `G_3(1/2)`).
fn gregory_validated(x: &Rational, n_max: usize, prec: u32) -> Result<Vec<Float>> {
    check_precision(prec)?;
    let mut work = prec;
    let mut lo = gregory_pass(x, n_max, work);
    for _ in 0..MAX_DOUBLINGS {
        let (hi, scale) = gregory_pass_scaled(x, n_max, 2 * work);
        if lo.iter().zip(&hi).zip(&scale).all(|((a, b), s)| agrees(a, b, *s, prec / 2)) {
            return Ok(hi);
        }
        work *= 2;
        lo = hi;
    }
    Err(Error::UnstableRecurrence(n_max))
}

/// `G_0(x), ..., G_{n_max}(x)` at precision `prec`, each stable to `prec/2`
/// bits under precision doubling.
pub fn gregory_value_float(x: &Rational, n_max: usize, prec: u32) -> Result<Vec<BigFloat>> {
    Ok(gregory_validated(x, n_max, prec)?
        .into_iter()
        .map(|v| BigFloat::new(Float::with_val(prec, v)))
        .collect())
}

/// `sum_{n=1}^{N} (-1)^{n-1} a_n / d(n)`.
fn alternating_sum<F>(values: &[Float], prec: u32, divisor: F) -> Float
where
    F: Fn(u64) -> Integer,
{
    let mut s = Float::with_val(prec, 0);
    for (n, v) in values.iter().enumerate().skip(1) {
        let t = Float::with_val(prec, v / &divisor(n as u64));
        if n % 2 == 1 {
            s += t;
        } else {
            s -= t;
        }
    }
    s
}

fn log_rational(x: &Rational, prec: u32) -> Float {
    Float::with_val(prec, x).ln()
}

fn round_to(v: &Float, prec: u32) -> BigFloat {
    let mut out = Float::new(prec);
    out.assign_round(v, Round::Nearest);
    BigFloat::new(out)
}

/// `m! sum_{n=1}^{N} (-1)^{n-1} G_n(x) / (n)_{m+1} + H_m - log(x+m+1)`.
pub fn mascheroni_partial(x: &Rational, m: u32, terms: usize, prec: u32) -> Result<BigFloat> {
    check_domain(x)?;
    let g = gregory_validated(x, terms, prec)?;
    let work = g[0].prec();
    let s = alternating_sum(&g, work, |n| (n..=n + u64::from(m)).map(Integer::from).product());
    let m_fact = Integer::from(Integer::factorial(m));
    let mut v = Float::with_val(work, &s * &m_fact);
    v += &harmonic(u64::from(m));
    v -= log_rational(&Rational::from(x + (m + 1)), work);
    Ok(round_to(&v, prec))
}

/// `(1/k) sum_{n=1}^{N} (-1)^{n-1} N_{n,k}(x) / n - (1/k) sum_{j=1}^k log(x+j)`
/// with `N_{n,k}(x) = sum_{j<k} G_n(x+j)`.
pub fn bla101_partial(k: u32, x: &Rational, terms: usize, prec: u32) -> Result<BigFloat> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    check_domain(x)?;
    let lists = (0..k)
        .map(|j| gregory_validated(&Rational::from(x + j), terms, prec))
        .collect::<Result<Vec<_>>>()?;
    let work = lists.iter().map(|l| l[0].prec()).max().unwrap();
    let mut nk = lists[0].iter().map(|v| Float::with_val(work, v)).collect::<Vec<_>>();
    for list in &lists[1..] {
        for (a, b) in nk.iter_mut().zip(list) {
            *a += b;
        }
    }
    let s = alternating_sum(&nk, work, Integer::from);
    let mut logs = log_rational(&Rational::from(x + 1), work);
    for j in 2..=k {
        logs += log_rational(&Rational::from(x + j), work);
    }
    let v = Float::with_val(work, &s / k) - Float::with_val(work, &logs / k);
    Ok(round_to(&v, prec))
}

/// Ratio of `G_n(x)` to the two-term asymptotic
/// `(-1)^{n+1} / (pi n^{x+1} log n) * (sin(pi x) Gamma(x+1)
///  + (pi cos(pi x) Gamma(x+1) + sin(pi x) Gamma(x+1) Psi(x+1)) / log n)`.
///
/// Descriptive only; the approach to 1 is logarithmically slow.
pub fn asymptotic_sanity(x: &Rational, n: usize) -> Result<BigFloat> {
    check_domain(x)?;
    const PREC: u32 = 128;
    let g = gregory_validated(x, n, PREC)?.pop().expect("non-empty");
    let xf = Float::with_val(PREC, x);
    let pi = Float::with_val(PREC, rug::float::Constant::Pi);
    let pix = Float::with_val(PREC, &pi * &xf);
    let (sin, cos) = (Float::with_val(PREC, pix.sin_ref()), Float::with_val(PREC, pix.cos_ref()));
    let x1 = Float::with_val(PREC, &xf + 1u32);
    let gam = Float::with_val(PREC, x1.gamma_ref());
    let psi = Float::with_val(PREC, x1.digamma_ref());
    let nf = Float::with_val(PREC, n as u64);
    let logn = Float::with_val(PREC, nf.ln_ref());
    let second = Float::with_val(PREC, &pi * &cos) * &gam + Float::with_val(PREC, &sin * &gam) * &psi;
    let bracket = Float::with_val(PREC, &sin * &gam) + Float::with_val(PREC, &second / &logn);
    let denom = pi * Float::with_val(PREC, (&nf).pow(&x1)) * &logn;
    let mut main = Float::with_val(PREC, &bracket / &denom);
    if n.is_multiple_of(2) {
        main = -main;
    }
    Ok(BigFloat::new(g / main))
}

/// `D_r(n; x) = sum_{k>=0} k^n x^k / (k!)^r`, summed until the tail is
/// below `2^{-P-8}` of the running sum.
pub fn d_r_numeric(r: u32, n: u32, x: &Rational, prec: u32) -> Result<BigFloat> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    check_precision(prec)?;
    let work = prec + 32;
    let xf = Float::with_val(work, x);
    let ax = x.to_f64().abs();
    let eps = Float::with_val(work, 1) >> (prec as i32 + 8);
    // u = x^k / (k!)^r
    let mut u = Float::with_val(work, 1);
    let mut sum = Float::with_val(work, if n == 0 { 1 } else { 0 });
    let mut k: u64 = 0;
    loop {
        k += 1;
        u *= &xf;
        for _ in 0..r {
            u /= k;
        }
        let t = Float::with_val(work, &u * Integer::from(Integer::u_pow_u(k as u32, n)));
        sum += &t;
        // ratio of successive terms beyond k
        let kf = k as f64;
        let ratio = ax * (1.0 + 1.0 / kf).powi(n as i32) / (kf + 1.0).powi(r as i32);
        if ratio <= 0.5 {
            let tail = Float::with_val(work, t.abs_ref()) * 2u32;
            let floor = Float::with_val(work, sum.abs_ref()).max(&Float::with_val(work, 1)) * &eps;
            if tail < floor {
                break;
            }
        }
    }
    Ok(round_to(&sum, prec))
}
