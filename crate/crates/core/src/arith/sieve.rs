//! Segmented sieve of Eratosthenes over `[lo, hi]`.

const SEGMENT: u64 = 1 << 16;

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Primes up to and including `n` by the plain sieve.
fn small_primes(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// All primes in the closed interval `[lo, hi]`, ascending.
///
/// An empty interval (`lo > hi`) yields an empty list. Values of `lo` below 2
/// are clamped to 2.
pub fn sieve_primes(lo: u64, hi: u64) -> Vec<u64> {
    let lo = lo.max(2);
    if lo > hi {
        return Vec::new();
    }
    let base = small_primes(isqrt(hi));
    let mut out = Vec::new();
    let mut seg_lo = lo;
    let mut marks = vec![false; SEGMENT as usize];
    loop {
        let seg_hi = hi.min(seg_lo.saturating_add(SEGMENT - 1));
        let len = (seg_hi - seg_lo + 1) as usize;
        marks[..len].iter_mut().for_each(|m| *m = false);
        for &q in &base {
            if q * q > seg_hi {
                break;
            }
            let first = (q * q).max(seg_lo.div_ceil(q) * q);
            let mut m = first;
            while m <= seg_hi {
                marks[(m - seg_lo) as usize] = true;
                m += q;
            }
        }
        out.extend(
            marks[..len]
                .iter()
                .enumerate()
                .filter(|(_, &c)| !c)
                .map(|(i, _)| seg_lo + i as u64),
        );
        if seg_hi == hi {
            break;
        }
        seg_lo = seg_hi + 1;
    }
    out
}

/// Deterministic trial-division primality test; fine for the small moduli used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
