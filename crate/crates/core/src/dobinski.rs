//! Dobinski-type sums `D_r(n; x) = sum_k k^n x^k / (k!)^r`, their coefficient
//! polynomials, and the mod-p analogues `D_{r,A}(n; x)`.

use rug::{Float, Integer, Rational};

use crate::arith::{denominator_bound, p_divides_denominator, AElement, PrimeCtx};
use crate::error::{Error, Result};
use crate::poly::RationalPolynomial;
use crate::report::{params, run_per_prime, CheckRecord, PrimeOutcome, VerificationReport};
use crate::window::PrimeWindow;

/// Sequence with the binomial-transform recurrence `a(n+1) = sum_k C(n,k) a(k)`
/// applied after the given initial terms.
fn binomial_transform_sequence(initial: &[i64], n_max: usize) -> Vec<Integer> {
    let mut a: Vec<Integer> = initial.iter().map(|&v| Integer::from(v)).collect();
    while a.len() <= n_max {
        let n = a.len() - 1;
        let next = (0..=n)
            .map(|k| Integer::from(Integer::binomial_u(n as u32, k as u32)) * &a[k])
            .sum();
        a.push(next);
    }
    a.truncate(n_max + 1);
    a
}

/// Bell numbers `b(0..=n_max)`.
pub fn bell(n_max: usize) -> Vec<Integer> {
    binomial_transform_sequence(&[1], n_max)
}

/// The correction sequence `g(0..=n_max)`: `g(0) = 0`, `g(1) = 1`, and the Bell
/// recurrence from `n = 1` on.
pub fn g_seq(n_max: usize) -> Vec<Integer> {
    binomial_transform_sequence(&[0, 1], n_max)
}

/// The polynomials `b_{r,j}(n; x)` (`0 <= j < r`) and `g_r(n; x)` for `0 <= n <= n_max`.
///
/// Both families obey `f(n + r) = x sum_{k<=n} C(n, k) f(k)`; the `b` family
/// from `n = 0`, seeded by `b_{r,j}(n) = [j = n]` for `n < r`, and the `g`
/// family from `n = 1`, seeded by `g_r(n) = (-1)^{r-1} x [n = r]` for `n <= r`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffFamily {
    r: usize,
    b: Vec<Vec<RationalPolynomial>>,
    g: Vec<RationalPolynomial>,
}

fn recurrence_step(prefix: &[RationalPolynomial], n: usize) -> RationalPolynomial {
    let mut acc = RationalPolynomial::zero();
    for (k, f) in prefix.iter().enumerate().take(n + 1) {
        let c = Rational::from(Integer::from(Integer::binomial_u(n as u32, k as u32)));
        acc = &acc + &f.scale(&c);
    }
    &acc * &RationalPolynomial::x()
}

impl CoeffFamily {
    pub fn new(r: usize, n_max: usize) -> Self {
        assert!(r >= 1, "r must be positive");
        let mut b = Vec::with_capacity(r);
        for j in 0..r {
            let mut col: Vec<RationalPolynomial> = Vec::with_capacity(n_max + 1);
            for n in 0..=n_max {
                let v = if n < r {
                    if n == j {
                        RationalPolynomial::one()
                    } else {
                        RationalPolynomial::zero()
                    }
                } else {
                    recurrence_step(&col, n - r)
                };
                col.push(v);
            }
            b.push(col);
        }
        let mut g: Vec<RationalPolynomial> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let v = if n < r {
                RationalPolynomial::zero()
            } else if n == r {
                let s = if r % 2 == 1 { 1 } else { -1 };
                RationalPolynomial::from_ints(&[0, s])
            } else {
                recurrence_step(&g, n - r)
            };
            g.push(v);
        }
        CoeffFamily { r, b, g }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n_max(&self) -> usize {
        self.g.len() - 1
    }

    /// `b_{r,j}(n; x)`.
    pub fn b(&self, j: usize, n: usize) -> &RationalPolynomial {
        &self.b[j][n]
    }

    /// `g_r(n; x)`.
    pub fn g(&self, n: usize) -> &RationalPolynomial {
        &self.g[n]
    }
}

pub fn coeff_family(r: usize, n_max: usize) -> CoeffFamily {
    CoeffFamily::new(r, n_max)
}

/// `1 / (k!)^r` as an exact rational.
fn inv_fact_pow(k: u64, r: usize) -> Rational {
    let f = Integer::from(Integer::factorial(k as u32));
    let mut den = Integer::from(1);
    for _ in 0..r {
        den *= &f;
    }
    Rational::from((Integer::from(1), den))
}

/// `D_r^{(N)}(n; x) = sum_{k=0}^{N-1} k^n x^k / (k!)^r` exactly, with `0^0 = 1`.
pub fn partial_sum_exact(r: usize, n: u32, big_n: u64, x: &Rational) -> Rational {
    let mut acc = Rational::new();
    let mut xk = Rational::from(1);
    for k in 0..big_n {
        let kn = Integer::from(Integer::u_pow_u(k as u32, n));
        acc += Rational::from(&xk * kn) * inv_fact_pow(k, r);
        xk *= x;
    }
    acc
}

/// `D_r^{(N)}(n+r; x) = x sum_{k<=n} C(n,k) D_r^{(N)}(k; x) - N^n x^N / ((N-1)!)^r`.
pub fn check_truncation_identity(r: usize, n: u32, big_n: u64, x: &Rational) -> bool {
    assert!(r >= 1 && big_n >= 1);
    let lhs = partial_sum_exact(r, n + r as u32, big_n, x);
    let mut sum = Rational::new();
    for k in 0..=n {
        let c = Integer::from(Integer::binomial_u(n, k));
        sum += partial_sum_exact(r, k, big_n, x) * c;
    }
    let xn = x.pow_ref_int(big_n);
    let boundary = Rational::from(Integer::from(Integer::u_pow_u(big_n as u32, n))) * xn * inv_fact_pow(big_n - 1, r);
    lhs == (x * sum) - boundary
}

trait PowRef {
    fn pow_ref_int(&self, e: u64) -> Rational;
}

impl PowRef for Rational {
    fn pow_ref_int(&self, e: u64) -> Rational {
        use rug::ops::Pow;
        Rational::from(self.pow(e as u32))
    }
}

/// `D_r^{(p)}(n; x) mod p` for all `0 <= n <= n_max`, in `O(p n_max)`.
///
/// `None` when `p` divides the denominator of `x`.
pub fn d_sums_mod(r: usize, n_max: usize, x: &Rational, ctx: &PrimeCtx) -> Option<Vec<u64>> {
    let p = ctx.p();
    let xr = ctx.reduce(x)?;
    let inv = ctx.inv_table();
    let mut acc = vec![0u64; n_max + 1];
    // w = x^k / (k!)^r
    let mut w = 1 % p;
    for k in 0..p {
        if k > 0 {
            let ik = inv[k as usize];
            let mut ikr = 1 % p;
            for _ in 0..r {
                ikr = ctx.mul(ikr, ik);
            }
            w = ctx.mul(w, ctx.mul(xr, ikr));
            if w == 0 {
                break;
            }
        }
        let mut pw = 1 % p;
        for a in acc.iter_mut() {
            *a = ctx.add(*a, ctx.mul(pw, w));
            pw = ctx.mul(pw, k);
        }
    }
    Some(acc)
}

/// `D_{r,A}(n; x)` on a window.
pub fn d_r_a(r: usize, n: usize, x: &Rational, window: &PrimeWindow) -> AElement {
    let bound = denominator_bound(x);
    AElement::from_fn(window.primes(), bound, |ctx| d_sums_mod(r, n, x, ctx).map(|v| v[n]))
}

/// `D_{r,A}(0; x), ..., D_{r,A}(n_max; x)` from one pass per prime.
pub fn d_r_a_family(r: usize, n_max: usize, x: &Rational, window: &PrimeWindow) -> Vec<AElement> {
    let bound = denominator_bound(x);
    let per_prime: Vec<Option<Vec<u64>>> = window
        .primes()
        .iter()
        .map(|&p| d_sums_mod(r, n_max, x, &PrimeCtx::new(p)))
        .collect();
    (0..=n_max)
        .map(|n| {
            let comps = per_prime.iter().map(|c| c.as_ref().map(|v| v[n])).collect();
            AElement::from_parts(window.primes(), comps, bound)
        })
        .collect()
}

/// The finite analogue of `e`: `D_{1,A}(0; 1)`.
pub fn e_a(window: &PrimeWindow) -> AElement {
    d_r_a(1, 0, &Rational::from(1), window)
}

/// Checks `D_{r,A}(n; x) = sum_j b_{r,j}(n; x) D_{r,A}(j; x) + g_r(n; x)` at every
/// window prime for `0 <= n <= n_max`.
pub fn verify_dobinski(r: usize, n_max: usize, x: &Rational, window: &PrimeWindow) -> VerificationReport {
    let fam = CoeffFamily::new(r, n_max.max(r));
    let top = n_max.max(r - 1);
    let b_vals: Vec<Vec<Rational>> =
        (0..r).map(|j| (0..=n_max).map(|n| fam.b(j, n).eval(x)).collect()).collect();
    let g_vals: Vec<Rational> = (0..=n_max).map(|n| fam.g(n).eval(x)).collect();
    let pars = params([("r", r.to_string()), ("n_max", n_max.to_string()), ("x", x.to_string())]);
    run_per_prime("dobinski", pars, window.bounds(), window.primes(), |ctx| {
        let p = ctx.p();
        if p_divides_denominator(x, p) {
            return PrimeOutcome::Skipped(format!("{p} divides the denominator of x"));
        }
        let reduce_all = |vs: &[Rational]| vs.iter().map(|v| ctx.reduce(v)).collect::<Option<Vec<u64>>>();
        let Some(b_mod) = b_vals.iter().map(|col| reduce_all(col)).collect::<Option<Vec<_>>>() else {
            return PrimeOutcome::Skipped(format!("{p} divides a denominator of b_r,j(n; x)"));
        };
        let Some(g_mod) = reduce_all(&g_vals) else {
            return PrimeOutcome::Skipped(format!("{p} divides a denominator of g_r(n; x)"));
        };
        let d = d_sums_mod(r, top, x, ctx).expect("x is p-integral");
        let records = (0..=n_max)
            .map(|n| {
                let mut rhs = g_mod[n];
                for j in 0..r {
                    rhs = ctx.add(rhs, ctx.mul(b_mod[j][n], d[j]));
                }
                CheckRecord::new(p, Some(n as i64), d[n], rhs)
            })
            .collect();
        PrimeOutcome::Checked(records)
    })
}

/// Upper bound on `sum_{k >= N} k^n |x|^k / (k!)^r` by a geometric majorant.
fn tail_bound(r: usize, n: u32, big_n: u64, ax: f64) -> f64 {
    if ax == 0.0 {
        return 0.0;
    }
    let nf = big_n as f64;
    let ln_fact: f64 = (2..=big_n).map(|i| (i as f64).ln()).sum();
    let ln_first = n as f64 * nf.ln() + nf * ax.ln() - r as f64 * ln_fact;
    let ratio = (1.0 + 1.0 / nf).powi(n as i32) * ax / (nf + 1.0).powi(r as i32);
    if ratio >= 1.0 {
        return f64::INFINITY;
    }
    ln_first.exp() / (1.0 - ratio)
}

/// Checks the real identity `D_r(n; x) = sum_j b_{r,j}(n; x) D_r(j; x)` on
/// `N`-term truncations evaluated exactly.
///
/// Fails with [`Error::TailBound`] unless the truncation error of both sides,
/// bounded crudely, is below `tolerance / 2`.
pub fn numeric_identity_check(r: usize, n: usize, x: &Rational, big_n: u64, tolerance: f64) -> Result<bool> {
    let fam = CoeffFamily::new(r, n.max(r));
    let ax = x.to_f64().abs();
    let b: Vec<Rational> = (0..r).map(|j| fam.b(j, n).eval(x)).collect();
    let mut bound = tail_bound(r, n as u32, big_n, ax);
    for (j, bj) in b.iter().enumerate() {
        bound += bj.to_f64().abs() * tail_bound(r, j as u32, big_n, ax);
    }
    if !(bound < tolerance / 2.0) {
        return Err(Error::TailBound { bound, half_tol: tolerance / 2.0 });
    }
    let lhs = partial_sum_exact(r, n as u32, big_n, x);
    let mut rhs = Rational::new();
    for (j, bj) in b.iter().enumerate() {
        rhs += bj * partial_sum_exact(r, j as u32, big_n, x);
    }
    let diff = (lhs - rhs).abs();
    let tol = Rational::from_f64(tolerance).ok_or_else(|| Error::InvalidArgument("tolerance".into()))?;
    Ok(diff < tol)
}

/// `D_r^{(N)}(n; x)` rounded to a float, for reporting.
pub fn partial_sum_float(r: usize, n: u32, big_n: u64, x: &Rational, precision: u32) -> Float {
    Float::with_val(precision, &partial_sum_exact(r, n, big_n, x))
}
