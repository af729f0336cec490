//! Helpers on exact rationals: parsing, bad-prime bounds, small closed forms.

use rug::{Integer, Rational};

use crate::error::{Error, Result};

/// Parses `"a/b"` or `"a"` with an optional leading sign and no whitespace.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let (sign, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || den.is_some_and(|d| !digits(d)) {
        return Err(bad());
    }
    let mut n: Integer = num.parse().map_err(|_| bad())?;
    let d: Integer = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => Integer::from(1),
    };
    if d == 0 {
        return Err(bad());
    }
    if sign {
        n = -n;
    }
    Ok(Rational::from((n, d)))
}

/// Largest prime factor of `|n|`, or 0 when `|n| <= 1`.
///
/// Trial division runs up to 10^6; a cofactor left after that is returned as is,
/// which keeps the result an upper bound on every prime divisor.
pub fn largest_prime_factor(n: &Integer) -> u64 {
    let Some(mut m) = n.clone().abs().to_u64() else {
        return u64::MAX;
    };
    if m <= 1 {
        return 0;
    }
    let mut best = 0;
    let mut d = 2u64;
    while d * d <= m && d <= 1_000_000 {
        while m % d == 0 {
            best = d;
            m /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        best = best.max(m);
    }
    best
}

/// Largest prime dividing the denominator of `q` (0 for integers).
pub fn denominator_bound(q: &Rational) -> u64 {
    largest_prime_factor(q.denom())
}

/// Largest prime dividing the numerator or the denominator of `q`.
pub fn rational_bound(q: &Rational) -> u64 {
    largest_prime_factor(q.numer()).max(largest_prime_factor(q.denom()))
}

/// `true` iff `p` divides the denominator of `q`.
pub fn p_divides_denominator(q: &Rational, p: u64) -> bool {
    q.denom().is_divisible(&Integer::from(p))
}

/// `true` iff `p` divides the numerator of `q` (so also when `q = 0`).
pub fn p_divides_numerator(q: &Rational, p: u64) -> bool {
    q.numer().is_divisible(&Integer::from(p))
}

/// Harmonic number `H_m = 1 + 1/2 + ... + 1/m`, with `H_0 = 0`.
pub fn harmonic(m: u64) -> Rational {
    (1..=m).fold(Rational::new(), |acc, j| acc + Rational::from((1, j)))
}

/// Indicator of `{-1}` on the rationals.
pub fn delta_minus_one(x: &Rational) -> u64 {
    u64::from(*x == -1)
}

/// Binomial coefficient `C(n, k)` as an exact integer.
pub fn binomial(n: u64, k: u64) -> Integer {
    Integer::from(Integer::binomial_u(n as u32, k as u32))
}

/// `x + c` for an integer shift.
pub fn shifted(x: &Rational, c: i64) -> Rational {
    Rational::from(x + c)
}
