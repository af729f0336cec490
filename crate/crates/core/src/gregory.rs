//! Gregory polynomials `G_n(x)`, the coefficients of `t (1+t)^x / log(1+t)`.
//!
//! Everything here runs off the division-free recurrence
//! `G_n(x) = C(x, n) - sum_{j<n} (-1)^{n-j} G_j(x) / (n-j+1)`,
//! obtained by multiplying the generating function through by `log(1+t)/t`.
//! The same recurrence serves exact polynomials, exact values and residues.

use rug::{Integer, Rational};

use crate::arith::PrimeCtx;
use crate::error::{Error, Result};
use crate::poly::RationalPolynomial;
use crate::stirling::stirling_rows;

/// `(-1)^i / (i+1)`, the coefficients of `log(1+t)/t`.
fn kernel(i: usize) -> Rational {
    let v = Rational::from((1, i as u64 + 1));
    if i % 2 == 1 {
        -v
    } else {
        v
    }
}

/// `G_0(x), ..., G_{n_max}(x)` as exact polynomials.
pub fn gregory_polynomials(n_max: usize) -> Vec<RationalPolynomial> {
    let mut out: Vec<RationalPolynomial> = Vec::with_capacity(n_max + 1);
    let mut binom = RationalPolynomial::one();
    for n in 0..=n_max {
        if n > 0 {
            binom = (&binom * &RationalPolynomial::linear(Rational::from(1 - n as i64)))
                .scale(&Rational::from((1, n as u64)));
        }
        let mut g = binom.clone();
        for (j, gj) in out.iter().enumerate() {
            g = &g - &gj.scale(&kernel(n - j));
        }
        out.push(g);
    }
    out
}

pub fn gregory_polynomial(n: usize) -> RationalPolynomial {
    gregory_polynomials(n).pop().expect("non-empty")
}

/// `G_n(x)` from the first-kind Stirling numbers:
/// `((-1)^n / n!) sum_{j=1}^n ((-1)^j / (j+1)) [n j] ((x+1)^{j+1} - x^{j+1})`.
pub fn gregory_explicit(n: usize) -> RationalPolynomial {
    assert!(n >= 1, "explicit formula needs n >= 1");
    let s = stirling_rows(n);
    let x = RationalPolynomial::x();
    let x1 = RationalPolynomial::linear(Rational::from(1));
    let mut acc = RationalPolynomial::zero();
    for j in 1..=n {
        let diff = &x1.pow(j as u32 + 1) - &x.pow(j as u32 + 1);
        let mut c = Rational::from((s.first(n, j).clone(), Integer::from(j + 1)));
        if j % 2 == 1 {
            c = -c;
        }
        acc = &acc + &diff.scale(&c);
    }
    let mut lead = Rational::from((Integer::from(1), Integer::from(Integer::factorial(n as u32))));
    if n % 2 == 1 {
        lead = -lead;
    }
    acc.scale(&lead)
}

/// Exact values `G_0(x), ..., G_{n_max}(x)` at a rational point.
pub fn gregory_values(x: &Rational, n_max: usize) -> Vec<Rational> {
    let kern: Vec<Rational> = (0..=n_max + 1).map(kernel).collect();
    let mut out: Vec<Rational> = Vec::with_capacity(n_max + 1);
    let mut binom = Rational::from(1);
    for n in 0..=n_max {
        if n > 0 {
            binom *= Rational::from(x - (n as u64 - 1));
            binom /= n as u64;
        }
        let mut g = binom.clone();
        for (j, gj) in out.iter().enumerate() {
            g -= Rational::from(gj * &kern[n - j]);
        }
        out.push(g);
    }
    out
}

/// Residues `G_0(x), ..., G_{n_max}(x) mod p`, in `O(n_max^2)` time.
///
/// `G_n(x)` is `p`-integral for `n <= p - 2` whenever `x` is; `G_{p-1}`
/// carries a `1/p!` term, so larger `n_max` is refused.
pub fn gregory_residue_stream(x: &Rational, n_max: usize, ctx: &PrimeCtx) -> Result<Vec<u64>> {
    let p = ctx.p();
    if n_max as u64 + 2 > p {
        return Err(Error::GregoryOutOfRange { n_max, p });
    }
    let xr = ctx
        .reduce(x)
        .ok_or_else(|| Error::Undefined(format!("{p} divides the denominator of {x}")))?;
    let inv = ctx.inv_table();
    let mut g: Vec<u64> = Vec::with_capacity(n_max + 1);
    let mut binom = 1 % p;
    let wide = p < 1 << 32;
    for n in 0..=n_max {
        if n > 0 {
            binom = ctx.mul(ctx.mul(binom, ctx.sub(xr, (n as u64 - 1) % p)), inv[n]);
        }
        // term j carries sign (-1)^{n-j} and weight inv[n-j+1]
        let (plus, minus) = if wide {
            let (mut even, mut odd) = (0u128, 0u128);
            for (j, &gj) in g.iter().enumerate() {
                let t = gj as u128 * inv[n - j + 1] as u128;
                if (n - j) % 2 == 0 {
                    even += t;
                } else {
                    odd += t;
                }
            }
            ((even % p as u128) as u64, (odd % p as u128) as u64)
        } else {
            let (mut even, mut odd) = (0u64, 0u64);
            for (j, &gj) in g.iter().enumerate() {
                let t = ctx.mul(gj, inv[n - j + 1]);
                if (n - j) % 2 == 0 {
                    even = ctx.add(even, t);
                } else {
                    odd = ctx.add(odd, t);
                }
            }
            (even, odd)
        };
        // G_n = C(x,n) - sum (-1)^{n-j} ... = C(x,n) - even + odd
        g.push(ctx.add(ctx.sub(binom, plus), minus));
    }
    Ok(g)
}

/// `N_{n,k}(x) = sum_{j=0}^{k-1} G_n(x + j)`.
pub fn n_nk(n: usize, k: usize, x: &Rational) -> Rational {
    let g = gregory_polynomial(n);
    (0..k as u64).map(|j| g.eval(&Rational::from(x + j))).sum()
}

/// `G_n(x) = (-1)^N sum_{j=0}^N (-1)^j C(N, j) G_{n+N}(x + j)`, checked exactly.
pub fn check_shift_identity(n: usize, big_n: usize, x: &Rational) -> bool {
    let gs = gregory_polynomials(n + big_n);
    let mut rhs = Rational::new();
    for j in 0..=big_n {
        let c = Integer::from(Integer::binomial_u(big_n as u32, j as u32));
        let term = gs[n + big_n].eval(&Rational::from(x + j as u64)) * c;
        if j % 2 == 0 {
            rhs += term;
        } else {
            rhs -= term;
        }
    }
    if big_n % 2 == 1 {
        rhs = -rhs;
    }
    gs[n].eval(x) == rhs
}

/// `G_n(x) + G_{n-1}(x) = G_n(x + 1)` as a polynomial identity.
pub fn check_binom_recurrence(n: usize) -> bool {
    assert!(n >= 1);
    let gs = gregory_polynomials(n);
    &gs[n] + &gs[n - 1] == gs[n].shift(&Rational::from(1))
}

/// `G_n(x) = int_x^{x+1} C(u, n) du`, via the exact antiderivative.
pub fn check_integral_characterization(n: usize) -> bool {
    let anti = RationalPolynomial::binomial(n).antiderivative();
    &anti.shift(&Rational::from(1)) - &anti == gregory_polynomial(n)
}

/// `sum_{n=1}^{k-1} (-1)^{n-1} G_n(x) / (k-n) = (-1)^k C(x, k-1) + 1/k`.
pub fn check_log_inverse_identity(k: usize) -> bool {
    assert!(k >= 2);
    let gs = gregory_polynomials(k - 1);
    let mut lhs = RationalPolynomial::zero();
    for (n, g) in gs.iter().enumerate().take(k).skip(1) {
        let mut c = Rational::from((1, (k - n) as u64));
        if n % 2 == 0 {
            c = -c;
        }
        lhs = &lhs + &g.scale(&c);
    }
    let mut rhs = RationalPolynomial::binomial(k - 1);
    if k % 2 == 1 {
        rhs = -&rhs;
    }
    rhs = &rhs + &RationalPolynomial::constant(Rational::from((1, k as u64)));
    lhs == rhs
}
