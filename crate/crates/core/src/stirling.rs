//! Stirling triangles. The first kind is stored unsigned (`[n j]`, cycle
//! counts); signs are carried by whatever formula uses them.

use rug::Integer;

use crate::arith::PrimeCtx;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTriangles {
    /// `s1[n][j] = [n j]`, unsigned first kind.
    pub s1: Vec<Vec<Integer>>,
    /// `s2[n][k] = {n k}`, second kind.
    pub s2: Vec<Vec<Integer>>,
}

impl StirlingTriangles {
    pub fn first(&self, n: usize, j: usize) -> &Integer {
        &self.s1[n][j]
    }

    pub fn second(&self, n: usize, k: usize) -> &Integer {
        &self.s2[n][k]
    }
}

/// Rows `0..=n_max` of both triangles, by
/// `[n+1 k] = n [n k] + [n k-1]` and `{n+1 k} = k {n k} + {n k-1}`.
pub fn stirling_rows(n_max: usize) -> StirlingTriangles {
    let mut s1 = vec![vec![Integer::from(1)]];
    let mut s2 = vec![vec![Integer::from(1)]];
    for n in 0..n_max {
        let (p1, p2) = (&s1[n], &s2[n]);
        let mut r1 = vec![Integer::new(); n + 2];
        let mut r2 = vec![Integer::new(); n + 2];
        for k in 0..=n + 1 {
            if k <= n {
                r1[k] += Integer::from(&p1[k] * n as u64);
                r2[k] += Integer::from(&p2[k] * k as u64);
            }
            if k >= 1 {
                r1[k] += &p1[k - 1];
                r2[k] += &p2[k - 1];
            }
        }
        s1.push(r1);
        s2.push(r2);
    }
    StirlingTriangles { s1, s2 }
}

/// Row `n` of the unsigned first-kind triangle mod `p`, entries `j = 0..=n`.
pub fn stirling1_row_mod(n: usize, ctx: &PrimeCtx) -> Vec<u64> {
    let mut row = vec![1 % ctx.p()];
    for m in 0..n {
        let mut next = vec![0u64; m + 2];
        let mm = m as u64 % ctx.p();
        for k in 0..=m + 1 {
            let mut v = 0;
            if k <= m {
                v = ctx.mul(row[k], mm);
            }
            if k >= 1 {
                v = ctx.add(v, row[k - 1]);
            }
            next[k] = v;
        }
        row = next;
    }
    row
}
