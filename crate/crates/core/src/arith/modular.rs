//! Residues mod `p` and `p^2`, per-prime tables, and reduction of rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use rug::{Integer, Rational};

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % m as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

pub fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// `n mod m` in `[0, m)` for an arbitrary-size signed integer.
pub fn integer_mod(n: &Integer, m: u64) -> u64 {
    if m < 1 << 32 {
        return u64::from(n.mod_u(m as u32));
    }
    let mut r = Integer::from(n % &Integer::from(m));
    if r < 0 {
        r += m;
    }
    r.to_u64().expect("remainder fits the modulus")
}

/// An element of `Z/pZ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    pub fn new(value: u64, modulus: u64) -> Self {
        Residue { value: value % modulus, modulus }
    }

    pub fn zero(modulus: u64) -> Self {
        Residue { value: 0, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn inverse(self) -> Option<Residue> {
        inv_mod(self.value, self.modulus).map(|v| Residue::new(v, self.modulus))
    }

    fn check(self, other: Residue) {
        assert_eq!(self.modulus, other.modulus, "mixing residues of different moduli");
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        self.check(rhs);
        Residue { value: add_mod(self.value, rhs.value, self.modulus), modulus: self.modulus }
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        self.check(rhs);
        Residue { value: sub_mod(self.value, rhs.value, self.modulus), modulus: self.modulus }
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        self.check(rhs);
        Residue { value: mul_mod(self.value, rhs.value, self.modulus), modulus: self.modulus }
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue { value: sub_mod(0, self.value, self.modulus), modulus: self.modulus }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Evaluation context for one prime: the modulus plus lazily built tables of
/// inverses and (inverse) factorials of `0..p`.
#[derive(Debug)]
pub struct PrimeCtx {
    p: u64,
    inv: OnceLock<Vec<u64>>,
    fact: OnceLock<Vec<u64>>,
    inv_fact: OnceLock<Vec<u64>>,
}

impl PrimeCtx {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2, "modulus must be a prime >= 2");
        debug_assert!(p > 1 << 32 || super::sieve::is_prime(p), "{p} is not prime");
        PrimeCtx { p, inv: OnceLock::new(), fact: OnceLock::new(), inv_fact: OnceLock::new() }
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        add_mod(a, b, self.p)
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        sub_mod(a, b, self.p)
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        sub_mod(0, a, self.p)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    pub fn residue(&self, v: u64) -> Residue {
        Residue::new(v, self.p)
    }

    /// Reduction of a signed machine integer.
    pub fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    /// Inverses of `1..p` (index 0 holds 0), built in one pass by
    /// `inv[i] = -(p / i) * inv[p mod i]`.
    pub fn inv_table(&self) -> &[u64] {
        self.inv.get_or_init(|| {
            let p = self.p;
            let n = p as usize;
            let mut inv = vec![0u64; n];
            if n > 1 {
                inv[1] = 1;
            }
            for i in 2..n {
                let q = p / i as u64;
                let r = (p % i as u64) as usize;
                inv[i] = self.neg(self.mul(q % p, inv[r]));
            }
            inv
        })
    }

    /// `k! mod p` for `0 <= k < p`.
    pub fn fact_table(&self) -> &[u64] {
        self.fact.get_or_init(|| {
            let n = self.p as usize;
            let mut f = Vec::with_capacity(n);
            f.push(1 % self.p);
            for k in 1..n {
                let prev = f[k - 1];
                f.push(self.mul(prev, k as u64));
            }
            f
        })
    }

    /// `(k!)^{-1} mod p` for `0 <= k < p`.
    pub fn inv_fact_table(&self) -> &[u64] {
        self.inv_fact.get_or_init(|| {
            let inv = self.inv_table();
            let n = self.p as usize;
            let mut f = Vec::with_capacity(n);
            f.push(1 % self.p);
            for k in 1..n {
                let prev = f[k - 1];
                f.push(self.mul(prev, inv[k]));
            }
            f
        })
    }

    /// Inverse of a single nonzero residue without touching the table.
    pub fn inv(&self, a: u64) -> Option<u64> {
        inv_mod(a, self.p)
    }

    /// `q mod p`, or `None` when `p` divides the denominator.
    pub fn reduce(&self, q: &Rational) -> Option<u64> {
        let den = integer_mod(q.denom(), self.p);
        if den == 0 {
            return None;
        }
        let num = integer_mod(q.numer(), self.p);
        Some(self.mul(num, inv_mod(den, self.p)?))
    }
}

/// Residue of `q` in `Z/pZ`, or `None` ("undefined") when `p | denominator(q)`.
pub fn rational_mod(q: &Rational, ctx: &PrimeCtx) -> Option<Residue> {
    ctx.reduce(q).map(|v| ctx.residue(v))
}

/// `x^e mod p^2` for a rational `x` coprime to `p`.
///
/// Supports `p < 2^32` so that `p^2` fits a machine word. Returns `None` when
/// `p` divides the numerator or denominator of `x`.
pub fn rational_pow_mod_p2(x: &Rational, e: u64, p: u64) -> Option<u64> {
    assert!(p < 1 << 32, "mod p^2 arithmetic needs p < 2^32");
    let m = p * p;
    let num = integer_mod(x.numer(), m);
    let den = integer_mod(x.denom(), m);
    if num.is_multiple_of(p) || den.is_multiple_of(p) {
        return None;
    }
    let base = mul_mod(num, inv_mod(den, m)?, m);
    Some(pow_mod(base, e, m))
}

/// `C(x, k) = x(x-1)...(x-k+1)/k!` reduced mod `p`.
///
/// `None` when `p` divides the denominator of `x` or when `k >= p`.
pub fn binom_rational_mod(x: &Rational, k: u64, ctx: &PrimeCtx) -> Option<Residue> {
    let p = ctx.p();
    if k >= p {
        return None;
    }
    let xr = ctx.reduce(x)?;
    let mut num = 1 % p;
    let mut den = 1 % p;
    for i in 0..k {
        num = ctx.mul(num, ctx.sub(xr, i % p));
        den = ctx.mul(den, i + 1);
    }
    Some(ctx.residue(ctx.mul(num, ctx.inv(den)?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::sieve_primes;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn rational_mod_examples() {
        assert_eq!(rational_mod(&q(1, 2), &PrimeCtx::new(5)).unwrap().value(), 3);
        assert!(rational_mod(&q(7, 3), &PrimeCtx::new(3)).is_none());
        // brute force: the unique r in [0,7) with 720 r = -19 (mod 7)
        let r = (0..7).find(|r| (720 * r + 19) % 7 == 0).unwrap();
        assert_eq!(r, 5);
        assert_eq!(rational_mod(&q(-19, 720), &PrimeCtx::new(7)).unwrap().value(), r);
    }

    #[test]
    fn pow_mod_p2_examples() {
        assert_eq!(rational_pow_mod_p2(&q(2, 1), 4, 5), Some(16));
        assert_eq!(rational_pow_mod_p2(&q(2, 1), 2, 3), Some(4));
        // 3^6 * inv(2^6) mod 49, inverse by search
        let inv64 = (1..49u64).find(|i| (64 * i) % 49 == 1).unwrap();
        assert_eq!(rational_pow_mod_p2(&q(3, 2), 6, 7), Some((729 % 49) * inv64 % 49));
        assert_eq!(rational_pow_mod_p2(&q(7, 2), 6, 7), None);
        assert_eq!(rational_pow_mod_p2(&q(3, 14), 6, 7), None);
    }

    #[test]
    fn binom_examples() {
        let c7 = PrimeCtx::new(7);
        assert_eq!(binom_rational_mod(&q(-1, 1), 6, &c7).unwrap().value(), 1);
        let c11 = PrimeCtx::new(11);
        assert_eq!(binom_rational_mod(&q(3, 1), 10, &c11).unwrap().value(), 0);
        // (1/2)(-1/2)/2 = -1/8
        let c5 = PrimeCtx::new(5);
        let expect = rational_mod(&q(-1, 8), &c5).unwrap();
        assert_eq!(binom_rational_mod(&q(1, 2), 2, &c5).unwrap(), expect);
        assert!(binom_rational_mod(&q(1, 2), 5, &c5).is_none());
        assert!(binom_rational_mod(&q(1, 5), 2, &c5).is_none());
    }

    #[test]
    fn tables_hold_their_invariants() {
        for p in sieve_primes(2, 400) {
            let ctx = PrimeCtx::new(p);
            let inv = ctx.inv_table();
            for i in 1..p {
                assert_eq!(mul_mod(i, inv[i as usize], p), 1, "p={p} i={i}");
            }
            let fact = ctx.fact_table();
            assert_eq!(fact[0], 1 % p);
            // Wilson
            assert_eq!(fact[(p - 1) as usize], p - 1);
            let ifact = ctx.inv_fact_table();
            for k in 0..p as usize {
                assert_eq!(mul_mod(fact[k], ifact[k], p), 1 % p);
            }
        }
    }

    #[test]
    fn residue_ops() {
        let a = Residue::new(3, 7);
        let b = Residue::new(5, 7);
        assert_eq!((a + b).value(), 1);
        assert_eq!((a - b).value(), 5);
        assert_eq!((a * b).value(), 1);
        assert_eq!((-a).value(), 4);
        assert_eq!(a.inverse().unwrap().value(), 5);
    }

    #[test]
    #[should_panic]
    fn residue_moduli_must_match() {
        let _ = Residue::new(1, 5) + Residue::new(1, 7);
    }
}
