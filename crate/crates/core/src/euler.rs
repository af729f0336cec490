//! Finite analogues of Euler's constant built from Gregory polynomials,
//! Fermat quotients and the Wilson quotient, with verifiers for the
//! congruences relating them.
//!
//! Component functions (`*_component`) evaluate one prime; the matching
//! `AElement` constructors map them over a window and attach the exceptional
//! bound. Verifiers always compute the two sides of a congruence along
//! separate code paths: the left side from Gregory residue streams, the right
//! side from Wilson and Fermat quotients only.

use rug::{Integer, Rational};

use crate::arith::{
    binom_rational_mod, delta_minus_one, denominator_bound, harmonic, integer_mod, p_divides_denominator,
    p_divides_numerator, rational_bound, rational_pow_mod_p2, AElement, PrimeCtx, Residue,
};
use crate::error::{Error, Result};
use crate::gregory::gregory_residue_stream;
use crate::report::{params, run_per_prime, CheckRecord, PrimeOutcome, VerificationReport};
use crate::window::PrimeWindow;

/// Fermat quotient `q_p(x) = (x^{p-1} - 1)/p mod p`.
///
/// `None` for `p = 2` or when `p` divides the numerator or denominator of `x`.
pub fn fermat_quotient(x: &Rational, p: u64) -> Option<Residue> {
    if p == 2 {
        return None;
    }
    let pw = rational_pow_mod_p2(x, p - 1, p)?;
    // x^{p-1} = 1 + p*q (mod p^2)
    let q = (pw + p * p - 1) % (p * p) / p;
    Some(Residue::new(q, p))
}

/// `ell_A(x)` at one prime: `x q_p(x)`, and exactly 0 for `x` in `{0, 1}`.
pub fn ell_component(x: &Rational, ctx: &PrimeCtx) -> Option<u64> {
    if *x == 0 || *x == 1 {
        return Some(0);
    }
    let q = fermat_quotient(x, ctx.p())?;
    Some(ctx.mul(ctx.reduce(x)?, q.value()))
}

/// Exceptional bound of `ell_A(x)`.
pub fn ell_bound(x: &Rational) -> u64 {
    if *x == 0 || *x == 1 {
        0
    } else {
        rational_bound(x).max(2)
    }
}

/// `ell_A(x) = x log_A(x)`.
pub fn ell_a(x: &Rational, window: &PrimeWindow) -> AElement {
    AElement::from_fn(window.primes(), ell_bound(x), |ctx| ell_component(x, ctx))
}

/// `log_A(x) = (q_p(x))_p` for `x != 0`.
pub fn log_a(x: &Rational, window: &PrimeWindow) -> AElement {
    assert!(*x != 0, "log_A is defined on nonzero rationals");
    AElement::from_fn(window.primes(), rational_bound(x).max(2), |ctx| {
        fermat_quotient(x, ctx.p()).map(Residue::value)
    })
}

/// Wilson quotient `((p-1)! + 1)/p mod p`, one pass mod `p^2`.
pub fn wilson_component(ctx: &PrimeCtx) -> u64 {
    let p = ctx.p();
    assert!(p < 1 << 32, "mod p^2 arithmetic needs p < 2^32");
    let m = p * p;
    let mut f = 1u64;
    for k in 2..p {
        f = f * k % m;
    }
    let w = (f + 1) % m;
    debug_assert_eq!(w % p, 0, "Wilson's theorem");
    w / p
}

/// `gamma_A^W`.
pub fn wilson_gamma(window: &PrimeWindow) -> AElement {
    AElement::from_fn(window.primes(), 0, |ctx| Some(wilson_component(ctx)))
}

/// `sum_{n=1}^{p-2} (-1)^{n-1} G_n(x) / n mod p`.
pub fn gamma_m_component(x: &Rational, ctx: &PrimeCtx) -> Option<u64> {
    let p = ctx.p();
    let g = gregory_residue_stream(x, (p - 2) as usize, ctx).ok()?;
    let inv = ctx.inv_table();
    let mut acc = 0;
    for n in 1..g.len() {
        let t = ctx.mul(g[n], inv[n]);
        acc = if n % 2 == 1 { ctx.add(acc, t) } else { ctx.sub(acc, t) };
    }
    Some(acc)
}

/// `gamma_A^M(x)`.
pub fn gamma_m(x: &Rational, window: &PrimeWindow) -> AElement {
    AElement::from_fn(window.primes(), denominator_bound(x), |ctx| gamma_m_component(x, ctx))
}

/// Exceptional bound of `gamma_A^{K,m}(x)`.
pub fn gamma_k_bound(m: u64, x: &Rational) -> u64 {
    (m + 1)
        .max(denominator_bound(x))
        .max(denominator_bound(&harmonic(m)))
        .max(ell_bound(&Rational::from(x + (m + 1))))
}

/// `m! sum_{n=1}^{p-m-1} (-1)^{n-1} G_n(x) / (n)_{m+1} + H_m - ell_A(x+m+1)` mod `p`,
/// for `p > m + 1`.
pub fn gamma_k_component(m: u64, x: &Rational, ctx: &PrimeCtx) -> Option<u64> {
    let p = ctx.p();
    if p <= m + 1 {
        return None;
    }
    let top = (p - m - 1) as usize;
    let g = gregory_residue_stream(x, top, ctx).ok()?;
    let mut acc = 0;
    for n in 1..=top {
        let rising = (n as u64..=n as u64 + m).fold(1, |a, i| ctx.mul(a, i));
        let t = ctx.mul(g[n], ctx.inv(rising)?);
        acc = if n % 2 == 1 { ctx.add(acc, t) } else { ctx.sub(acc, t) };
    }
    let m_fact = (1..=m).fold(1 % p, |a, i| ctx.mul(a, i));
    let hm = ctx.reduce(&harmonic(m))?;
    let ell = ell_component(&Rational::from(x + (m + 1)), ctx)?;
    Some(ctx.sub(ctx.add(ctx.mul(m_fact, acc), hm), ell))
}

/// `gamma_A^{K,m}(x)`.
pub fn gamma_k(m: u64, x: &Rational, window: &PrimeWindow) -> AElement {
    assert!(m >= 1, "Kluyver order must be positive");
    AElement::from_fn(window.primes(), gamma_k_bound(m, x), |ctx| gamma_k_component(m, x, ctx))
}

/// `G_{p-k}(x) mod p` for `p > k`.
pub fn g_a_component(k: u64, x: &Rational, ctx: &PrimeCtx) -> Option<u64> {
    let p = ctx.p();
    if p <= k {
        return None;
    }
    gregory_residue_stream(x, (p - k) as usize, ctx).ok()?.pop()
}

/// `G_A(k; x) = (G_{p-k}(x) mod p)_p`.
pub fn g_a(k: u64, x: &Rational, window: &PrimeWindow) -> AElement {
    assert!(k >= 2, "G_A(k; x) needs k >= 2");
    AElement::from_fn(window.primes(), k.max(denominator_bound(x)), |ctx| g_a_component(k, x, ctx))
}

/// `-sum_{n=1}^{p-1} (1-x)^n / n mod p`.
pub fn l1_component(x: &Rational, ctx: &PrimeCtx) -> Option<u64> {
    let y = ctx.sub(1 % ctx.p(), ctx.reduce(x)?);
    let inv = ctx.inv_table();
    let mut pw = 1 % ctx.p();
    let mut acc = 0;
    for n in 1..ctx.p() {
        pw = ctx.mul(pw, y);
        acc = ctx.add(acc, ctx.mul(pw, inv[n as usize]));
    }
    Some(ctx.neg(acc))
}

/// `L_1(x)`.
pub fn l1(x: &Rational, window: &PrimeWindow) -> AElement {
    AElement::from_fn(window.primes(), denominator_bound(x), |ctx| l1_component(x, ctx))
}

/// Both sides of Eisenstein's congruence
/// `sum_{m=1}^{p-1} (-1)^{m-1} x^m / m = (x+1) q_p(x+1) - x q_p(x) (mod p)`.
pub fn eisenstein_sides(x: &Rational, ctx: &PrimeCtx) -> Option<(u64, u64)> {
    let xr = ctx.reduce(x)?;
    let inv = ctx.inv_table();
    let mut pw = 1 % ctx.p();
    let mut lhs = 0;
    for m in 1..ctx.p() {
        pw = ctx.mul(pw, xr);
        let t = ctx.mul(pw, inv[m as usize]);
        lhs = if m % 2 == 1 { ctx.add(lhs, t) } else { ctx.sub(lhs, t) };
    }
    let x1 = Rational::from(x + 1);
    let rhs = ctx.sub(ell_component(&x1, ctx)?, ell_component(x, ctx)?);
    Some((lhs, rhs))
}

pub fn check_eisenstein(x: &Rational, p: u64) -> Result<bool> {
    eisenstein_sides(x, &PrimeCtx::new(p))
        .map(|(l, r)| l == r)
        .ok_or_else(|| Error::Undefined(format!("{p} divides a numerator or denominator of {x} or {x}+1")))
}

/// `(q_p(xy), q_p(x) + q_p(y))`.
pub fn log_additivity_sides(x: &Rational, y: &Rational, ctx: &PrimeCtx) -> Option<(u64, u64)> {
    let p = ctx.p();
    let xy = Rational::from(x * y);
    let lhs = fermat_quotient(&xy, p)?;
    let rhs = fermat_quotient(x, p)? + fermat_quotient(y, p)?;
    Some((lhs.value(), rhs.value()))
}

/// `C(x, p-1) mod p` against the indicator of `x = -1`.
pub fn binom_cong_sides(x: &Rational, ctx: &PrimeCtx) -> Option<(u64, u64)> {
    let lhs = binom_rational_mod(x, ctx.p() - 1, ctx)?;
    Some((lhs.value(), delta_minus_one(x)))
}

/// Primes above which `C(x, p-1) = [x = -1] (mod p)` is asserted.
pub fn binom_cong_bound(x: &Rational) -> u64 {
    rational_bound(x).max(rational_bound(&Rational::from(x + 1))).max(2)
}

fn signed(ctx: &PrimeCtx, c: &Integer) -> u64 {
    integer_mod(c, ctx.p())
}

/// Right side of the Mascheroni-type congruence:
/// `gamma_W + ell(x+2) - ell(x+1) + [x = -1] - 1`.
pub fn mascheroni_rhs(x: &Rational, ctx: &PrimeCtx) -> Option<u64> {
    let w = wilson_component(ctx);
    let a = ell_component(&Rational::from(x + 2), ctx)?;
    let b = ell_component(&Rational::from(x + 1), ctx)?;
    let d = delta_minus_one(x);
    Some(ctx.sub(ctx.add(ctx.sub(ctx.add(w, a), b), d), 1))
}

pub fn mascheroni_bound(x: &Rational) -> u64 {
    denominator_bound(x)
        .max(ell_bound(&Rational::from(x + 2)))
        .max(ell_bound(&Rational::from(x + 1)))
}

/// Right side of the Gregory-interlude congruence:
/// `(-1)^{k-1} sum_{j=0}^k (-1)^j C(k, j) ell(x+j+1)`.
pub fn interlude_rhs(k: u64, x: &Rational, ctx: &PrimeCtx) -> Option<u64> {
    let mut acc = 0;
    for j in 0..=k {
        let c = signed(ctx, &Integer::from(Integer::binomial_u(k as u32, j as u32)));
        let t = ctx.mul(c, ell_component(&Rational::from(x + (j + 1)), ctx)?);
        acc = if j % 2 == 0 { ctx.add(acc, t) } else { ctx.sub(acc, t) };
    }
    Some(if k % 2 == 1 { acc } else { ctx.neg(acc) })
}

pub fn interlude_bound(k: u64, x: &Rational) -> u64 {
    (0..=k).fold(k.max(denominator_bound(x)), |b, j| b.max(ell_bound(&Rational::from(x + (j + 1)))))
}

/// Right side of the Kluyver-type congruence:
/// `gamma_W + [x+m = -1] - 1 + (H_m - 1) ell(x+m+1)
///  + sum_{j<m} (-1)^{m-j} C(m, j) ell(x+j+1) / (m-j)`.
pub fn kluyver_rhs(m: u64, x: &Rational, ctx: &PrimeCtx) -> Option<u64> {
    let w = wilson_component(ctx);
    let d = delta_minus_one(&Rational::from(x + m));
    let hm1 = ctx.reduce(&(harmonic(m) - Rational::from(1)))?;
    let mut acc = ctx.sub(ctx.add(w, d), 1);
    acc = ctx.add(acc, ctx.mul(hm1, ell_component(&Rational::from(x + (m + 1)), ctx)?));
    for j in 0..m {
        let c = Rational::from((Integer::from(Integer::binomial_u(m as u32, j as u32)), Integer::from(m - j)));
        let t = ctx.mul(ctx.reduce(&c)?, ell_component(&Rational::from(x + (j + 1)), ctx)?);
        acc = if (m - j).is_multiple_of(2) { ctx.add(acc, t) } else { ctx.sub(acc, t) };
    }
    Some(acc)
}

pub fn kluyver_bound(m: u64, x: &Rational) -> u64 {
    let mut b = gamma_k_bound(m, x).max(rational_bound(&(harmonic(m) - Rational::from(1))));
    for j in 0..m {
        b = b.max(ell_bound(&Rational::from(x + (j + 1)))).max(rational_bound(&Rational::from(m - j)));
    }
    b
}

/// Primes `2` and `3` are never tested by the Euler verifiers.
const SMALL_PRIME_CUTOFF: u64 = 3;

fn euler_verifier<F>(
    theorem: &str,
    pars: std::collections::BTreeMap<String, String>,
    window: &PrimeWindow,
    bound: u64,
    index: Option<i64>,
    sides: F,
) -> VerificationReport
where
    F: Fn(&PrimeCtx) -> Option<(u64, u64)> + Sync,
{
    run_per_prime(theorem, pars, window.bounds(), window.primes(), |ctx| {
        let p = ctx.p();
        if p <= SMALL_PRIME_CUTOFF {
            return PrimeOutcome::Skipped(format!("{p} <= {SMALL_PRIME_CUTOFF} is excluded"));
        }
        if p <= bound {
            return PrimeOutcome::Skipped(format!("{p} <= exceptional bound {bound}"));
        }
        match sides(ctx) {
            Some((l, r)) => PrimeOutcome::Checked(vec![CheckRecord::new(p, index, l, r)]),
            None => PrimeOutcome::Skipped(format!("component undefined at {p}")),
        }
    })
}

/// `gamma_A^M(x) = gamma_A^W + ell_A(x+2) - ell_A(x+1) + [x = -1] - 1`.
pub fn verify_mascheroni(x: &Rational, window: &PrimeWindow) -> VerificationReport {
    euler_verifier("mascheroni", params([("x", x)]), window, mascheroni_bound(x), None, |ctx| {
        Some((gamma_m_component(x, ctx)?, mascheroni_rhs(x, ctx)?))
    })
}

/// `G_A(k; x) = (-1)^{k-1} sum_{j=0}^k (-1)^j C(k, j) ell_A(x+j+1)`.
pub fn verify_interlude(k: u64, x: &Rational, window: &PrimeWindow) -> VerificationReport {
    assert!(k >= 2);
    let pars = params([("x", x.to_string()), ("k", k.to_string())]);
    euler_verifier("interlude", pars, window, interlude_bound(k, x), Some(k as i64), |ctx| {
        Some((g_a_component(k, x, ctx)?, interlude_rhs(k, x, ctx)?))
    })
}

/// `gamma_A^{K,m}(x)` against its expression in `gamma_A^W` and `ell_A`.
pub fn verify_kluyver(m: u64, x: &Rational, window: &PrimeWindow) -> VerificationReport {
    assert!(m >= 1);
    let pars = params([("x", x.to_string()), ("m", m.to_string())]);
    euler_verifier("kluyver", pars, window, kluyver_bound(m, x), Some(m as i64), |ctx| {
        Some((gamma_k_component(m, x, ctx)?, kluyver_rhs(m, x, ctx)?))
    })
}

/// Eisenstein's congruence at every window prime.
pub fn verify_eisenstein(x: &Rational, window: &PrimeWindow) -> VerificationReport {
    let bound = denominator_bound(x).max(ell_bound(x)).max(ell_bound(&Rational::from(x + 1)));
    euler_verifier("eisenstein", params([("x", x)]), window, bound, None, |ctx| eisenstein_sides(x, ctx))
}

/// `q_p(xy) = q_p(x) + q_p(y) (mod p)`.
pub fn verify_log_additivity(x: &Rational, y: &Rational, window: &PrimeWindow) -> VerificationReport {
    assert!(*x != 0 && *y != 0, "log_A is defined on nonzero rationals");
    let bound = rational_bound(x).max(rational_bound(y));
    let pars = params([("x", x.to_string()), ("y", y.to_string())]);
    euler_verifier("logadd", pars, window, bound, None, |ctx| log_additivity_sides(x, y, ctx))
}

/// `C(x, p-1) = [x = -1] (mod p)` for primes above the bound.
pub fn verify_binom_cong(x: &Rational, window: &PrimeWindow) -> VerificationReport {
    euler_verifier("binom-cong", params([("x", x)]), window, binom_cong_bound(x), None, |ctx| {
        binom_cong_sides(x, ctx)
    })
}

/// `gamma_A^M(-1) = gamma_A^W`, both sides from their definitions.
pub fn verify_mascheroni_at_minus_one(window: &PrimeWindow) -> VerificationReport {
    let x = Rational::from(-1);
    euler_verifier("mascheroni-minus-one", params([("x", "-1")]), window, 0, None, |ctx| {
        Some((gamma_m_component(&x, ctx)?, wilson_component(ctx)))
    })
}

/// `true` iff `p` is exceptional for `x` in the sense of `ell_A`.
pub fn ell_exceptional(x: &Rational, p: u64) -> bool {
    !(*x == 0 || *x == 1) && (p_divides_numerator(x, p) || p_divides_denominator(x, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::sieve_primes;
    use crate::gregory::gregory_values;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    /// `((x^{p-1} - 1)/p) mod p` by exact rational arithmetic.
    fn brute_fermat(x: &Rational, p: u64) -> u64 {
        use rug::ops::Pow;
        let v = (Rational::from(x.pow((p - 1) as u32)) - Rational::from(1)) / Rational::from(p);
        PrimeCtx::new(p).reduce(&v).unwrap()
    }

    fn brute_wilson(p: u64) -> u64 {
        let f = Integer::from(Integer::factorial(p as u32 - 1)) + 1u32;
        assert!(f.is_divisible_u(p as u32));
        integer_mod(&(f / p as u32), p)
    }

    #[test]
    fn fermat_quotient_examples() {
        assert_eq!(fermat_quotient(&q(2, 1), 3).unwrap().value(), 1);
        for p in sieve_primes(3, 50) {
            assert_eq!(fermat_quotient(&q(1, 1), p).unwrap().value(), 0);
        }
        assert_eq!(fermat_quotient(&q(3, 2), 7).unwrap().value(), brute_fermat(&q(3, 2), 7));
        for (x, p) in [(q(5, 3), 11), (q(-4, 1), 13), (q(7, 3), 101)] {
            assert_eq!(fermat_quotient(&x, p).unwrap().value(), brute_fermat(&x, p));
        }
        assert!(fermat_quotient(&q(3, 1), 3).is_none());
        assert!(fermat_quotient(&q(1, 2), 2).is_none());
    }

    #[test]
    fn ell_examples() {
        let w = PrimeWindow::new(2, 100);
        assert!(ell_a(&q(0, 1), &w).is_zero());
        assert!(ell_a(&q(1, 1), &w).is_zero());
        assert_eq!(ell_a(&q(2, 1), &PrimeWindow::new(3, 3)).component(3), Some(2));
        assert_eq!(ell_a(&q(2, 1), &w).exceptional_bound(), 2);
    }

    #[test]
    fn wilson_examples() {
        let w = PrimeWindow::new(5, 13);
        let g = wilson_gamma(&w);
        assert_eq!(g.component(5), Some(0));
        assert_eq!(g.component(7), Some(5));
        assert_eq!(g.component(13), Some(0));
        for p in sieve_primes(5, 200) {
            assert_eq!(wilson_component(&PrimeCtx::new(p)), brute_wilson(p));
        }
    }

    #[test]
    fn gamma_m_against_exact_sums() {
        // x = 0, p = 5: G_1/1 - G_2/2 + G_3/3 = 1/2 + 1/24 + 1/72
        let ctx = PrimeCtx::new(5);
        let exact = q(1, 2) + q(1, 24) + q(1, 72);
        assert_eq!(gamma_m_component(&q(0, 1), &ctx), ctx.reduce(&exact));
        for x in [q(0, 1), q(1, 2), q(-3, 1), q(7, 3)] {
            for p in sieve_primes(5, 60) {
                let ctx = PrimeCtx::new(p);
                if ctx.reduce(&x).is_none() {
                    continue;
                }
                let g = gregory_values(&x, (p - 2) as usize);
                let mut s = Rational::new();
                for n in 1..=(p - 2) as usize {
                    let t = Rational::from(&g[n] / n as u64);
                    if n % 2 == 1 { s += t } else { s -= t }
                }
                assert_eq!(gamma_m_component(&x, &ctx), ctx.reduce(&s), "x={x} p={p}");
            }
        }
    }

    #[test]
    fn gamma_k_against_exact_sums() {
        let m = 1;
        let x = q(0, 1);
        for p in sieve_primes(5, 40) {
            let ctx = PrimeCtx::new(p);
            let g = gregory_values(&x, p as usize);
            let mut s = Rational::new();
            for n in 1..=(p - m - 1) as usize {
                let t = Rational::from(&g[n] / (n as u64 * (n as u64 + 1)));
                if n % 2 == 1 { s += t } else { s -= t }
            }
            let hm = harmonic(m);
            let expect = ctx.sub(ctx.add(ctx.reduce(&s).unwrap(), ctx.reduce(&hm).unwrap()), ell_component(&q(2, 1), &ctx).unwrap());
            assert_eq!(gamma_k_component(m, &x, &ctx), Some(expect), "p={p}");
        }
    }

    #[test]
    fn g_a_example() {
        let ctx = PrimeCtx::new(7);
        assert_eq!(g_a_component(2, &q(0, 1), &ctx), ctx.reduce(&q(3, 160)));
        assert_eq!(g_a_component(7, &q(0, 1), &ctx), None);
    }

    #[test]
    fn interlude_telescopes_at_minus_two() {
        let w = PrimeWindow::new(5, 300);
        let lhs = g_a(2, &q(-2, 1), &w);
        assert!(lhs.agrees_with(&ell_a(&q(-1, 1), &w).with_bound(2)));
    }

    #[test]
    fn l1_examples() {
        let w = PrimeWindow::new(3, 200);
        assert!(l1(&q(1, 1), &w).is_zero());
        // x = 2, p = 5: -sum (-1)^n / n
        let ctx = PrimeCtx::new(5);
        let s: Rational = (1..5).map(|n| q(if n % 2 == 0 { 1 } else { -1 }, n)).sum();
        assert_eq!(l1_component(&q(2, 1), &ctx), ctx.reduce(&-s));
        for x in [q(2, 1), q(1, 2), q(-3, 1), q(7, 3), q(0, 1)] {
            let x1 = Rational::from(&x - 1);
            let rhs = ell_a(&x, &w).sub(&ell_a(&x1, &w));
            assert!(l1(&x, &w).agrees_with(&rhs), "x={x}");
        }
    }

    #[test]
    fn eisenstein_examples() {
        assert!(check_eisenstein(&q(1, 1), 3).unwrap());
        assert!(check_eisenstein(&q(0, 1), 7).unwrap());
        assert!(check_eisenstein(&q(5, 3), 11).unwrap());
        assert!(check_eisenstein(&q(1, 3), 3).is_err());
    }

    #[test]
    fn binom_cong_lemma() {
        for x in [q(-1, 1), q(0, 1), q(3, 1), q(1, 2), q(-7, 3)] {
            let rep = verify_binom_cong(&x, &PrimeWindow::new(5, 400));
            assert!(rep.all_pass() && !rep.records.is_empty(), "x={x}");
        }
    }

    #[test]
    fn verifiers_on_small_windows() {
        let w = PrimeWindow::new(5, 150);
        for x in [q(0, 1), q(-1, 1), q(1, 2), q(-3, 1), q(7, 3)] {
            assert!(verify_mascheroni(&x, &w).all_pass(), "mascheroni x={x}");
            for k in 2..=4 {
                assert!(verify_interlude(k, &x, &w).all_pass(), "interlude k={k} x={x}");
            }
            for m in 1..=3 {
                let rep = verify_kluyver(m, &x, &w);
                assert!(rep.all_pass(), "kluyver m={m} x={x}: {:?}", rep.failures().next());
            }
            assert!(verify_eisenstein(&x, &w).all_pass());
        }
        assert!(verify_kluyver(1, &q(-2, 1), &w).all_pass());
        assert!(verify_mascheroni_at_minus_one(&w).all_pass());
        assert!(verify_log_additivity(&q(2, 1), &q(-4, 1), &w).all_pass());
    }

    #[test]
    fn skipped_primes_lie_below_the_bound() {
        let x = q(7, 3);
        let rep = verify_kluyver(2, &x, &PrimeWindow::new(2, 100));
        let bound = kluyver_bound(2, &x);
        assert!(rep.skipped.iter().all(|s| s.prime <= bound.max(3)), "{:?}", rep.skipped);
    }

    #[test]
    fn exceptional_flags() {
        assert!(!ell_exceptional(&q(0, 1), 5));
        assert!(ell_exceptional(&q(10, 3), 5));
        assert!(ell_exceptional(&q(10, 3), 3));
        assert!(!ell_exceptional(&q(10, 3), 7));
    }
}
