//! Prime searches for vanishing components of `e_A` and of the Wilson quotient.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::arith::PrimeCtx;
use crate::cache::{e_a_component, ResidueCache, ResidueCacheRecord, TAG_E_A, TAG_GAMMA_W};
use crate::error::Result;
use crate::euler::wilson_component;
use crate::window::PrimeWindow;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchTarget {
    /// `sum_{k<p} 1/k! = 0 (mod p)`.
    EAZero,
    /// `(p-1)! = -1 (mod p^2)`.
    Wilson,
}

impl SearchTarget {
    pub fn tag(self) -> &'static str {
        match self {
            SearchTarget::EAZero => TAG_E_A,
            SearchTarget::Wilson => TAG_GAMMA_W,
        }
    }

    fn residue(self, ctx: &PrimeCtx) -> u64 {
        match self {
            SearchTarget::EAZero => e_a_component(ctx),
            SearchTarget::Wilson => wilson_component(ctx),
        }
    }
}

/// Residues of the target at every window prime, taken from `cache` when
/// present; newly computed ones are appended to it.
pub fn residues(target: SearchTarget, window: &PrimeWindow, cache: Option<&mut ResidueCache>) -> Result<Vec<(u64, u64)>> {
    let params = BTreeMap::new();
    let cached = |p| cache.as_ref().and_then(|c| c.get(target.tag(), &params, p));
    let known: Vec<(u64, Option<u64>)> = window.primes().iter().map(|&p| (p, cached(p))).collect();
    let out: Vec<(u64, u64, bool)> = known
        .into_par_iter()
        .map(|(p, hit)| match hit {
            Some(r) => (p, r, false),
            None => (p, target.residue(&PrimeCtx::new(p)), true),
        })
        .collect();
    if let Some(cache) = cache {
        cache.extend(
            out.iter()
                .filter(|(_, _, fresh)| *fresh)
                .map(|&(p, r, _)| ResidueCacheRecord::new(target.tag(), params.clone(), p, r)),
        )?;
    }
    Ok(out.into_iter().map(|(p, r, _)| (p, r)).collect())
}

/// Window primes whose target residue is zero, in ascending order.
pub fn search(target: SearchTarget, window: &PrimeWindow, cache: Option<&mut ResidueCache>) -> Result<Vec<u64>> {
    Ok(residues(target, window, cache)?.into_iter().filter(|&(_, r)| r == 0).map(|(p, _)| p).collect())
}
