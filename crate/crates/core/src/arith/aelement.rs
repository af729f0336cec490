//! Windowed representatives of elements of the ring `prod Z/pZ / sum Z/pZ`.

use std::sync::Arc;

use rayon::prelude::*;
use rug::Rational;

use super::modular::{add_mod, mul_mod, sub_mod, PrimeCtx};
use super::rational::rational_bound;

/// A prime-indexed family of residues over a finite window of primes.
///
/// Components at primes `<= exceptional_bound` carry no meaning; two elements
/// are equal when they agree at every window prime above both bounds.
/// Individual components may also be `None` where the defining expression is
/// undefined (e.g. the prime divides a denominator); such primes always lie
/// at or below the bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AElement {
    window: Arc<[u64]>,
    components: Vec<Option<u64>>,
    exceptional_bound: u64,
}

impl AElement {
    /// Builds the element by evaluating `f` at every window prime, in parallel.
    pub fn from_fn<F>(window: &[u64], exceptional_bound: u64, f: F) -> Self
    where
        F: Fn(&PrimeCtx) -> Option<u64> + Sync,
    {
        let components = window.par_iter().map(|&p| f(&PrimeCtx::new(p))).collect();
        AElement { window: window.into(), components, exceptional_bound }
    }

    pub fn from_parts(window: &[u64], components: Vec<Option<u64>>, exceptional_bound: u64) -> Self {
        assert_eq!(window.len(), components.len());
        for (&p, c) in window.iter().zip(&components) {
            if let Some(v) = c {
                assert!(*v < p, "component {v} not reduced mod {p}");
            }
        }
        AElement { window: window.into(), components, exceptional_bound }
    }

    /// Diagonal image of a rational.
    pub fn constant(q: &Rational, window: &[u64]) -> Self {
        let bound = super::rational::denominator_bound(q);
        Self::from_fn(window, bound, |ctx| ctx.reduce(q))
    }

    pub fn zero(window: &[u64]) -> Self {
        AElement { window: window.into(), components: vec![Some(0); window.len()], exceptional_bound: 0 }
    }

    pub fn window(&self) -> &[u64] {
        &self.window
    }

    pub fn components(&self) -> &[Option<u64>] {
        &self.components
    }

    pub fn exceptional_bound(&self) -> u64 {
        self.exceptional_bound
    }

    pub fn with_bound(mut self, bound: u64) -> Self {
        self.exceptional_bound = self.exceptional_bound.max(bound);
        self
    }

    /// Component at `p`, if `p` is in the window and the value is defined.
    pub fn component(&self, p: u64) -> Option<u64> {
        let i = self.window.binary_search(&p).ok()?;
        self.components[i]
    }

    /// `(prime, residue)` pairs above the exceptional bound.
    pub fn meaningful(&self) -> impl Iterator<Item = (u64, Option<u64>)> + '_ {
        self.window
            .iter()
            .zip(&self.components)
            .filter(move |(&p, _)| p > self.exceptional_bound)
            .map(|(&p, &c)| (p, c))
    }

    fn zip_with(&self, other: &AElement, f: impl Fn(u64, u64, u64) -> u64) -> AElement {
        assert_eq!(self.window, other.window, "elements live on different windows");
        let components = self
            .window
            .iter()
            .zip(self.components.iter().zip(&other.components))
            .map(|(&p, (a, b))| Some(f((*a)?, (*b)?, p)))
            .collect();
        AElement {
            window: self.window.clone(),
            components,
            exceptional_bound: self.exceptional_bound.max(other.exceptional_bound),
        }
    }

    pub fn add(&self, other: &AElement) -> AElement {
        self.zip_with(other, add_mod)
    }

    pub fn sub(&self, other: &AElement) -> AElement {
        self.zip_with(other, sub_mod)
    }

    pub fn mul(&self, other: &AElement) -> AElement {
        self.zip_with(other, mul_mod)
    }

    /// `q * self`; primes dividing the numerator or denominator of `q` join the bound.
    pub fn scale(&self, q: &Rational) -> AElement {
        let components = self
            .window
            .iter()
            .zip(&self.components)
            .map(|(&p, c)| {
                let s = PrimeCtx::new(p).reduce(q)?;
                Some(mul_mod(s, (*c)?, p))
            })
            .collect();
        AElement {
            window: self.window.clone(),
            components,
            exceptional_bound: self.exceptional_bound.max(rational_bound(q)),
        }
    }

    /// `self + q` for a rational constant.
    pub fn add_rational(&self, q: &Rational) -> AElement {
        self.add(&AElement::constant(q, &self.window))
    }

    /// Window primes above both bounds where the two elements differ
    /// (including primes where either side is undefined).
    pub fn mismatches(&self, other: &AElement) -> Vec<u64> {
        assert_eq!(self.window, other.window, "elements live on different windows");
        let bound = self.exceptional_bound.max(other.exceptional_bound);
        self.window
            .iter()
            .zip(self.components.iter().zip(&other.components))
            .filter(|(&p, (a, b))| p > bound && (a.is_none() || a != b))
            .map(|(&p, _)| p)
            .collect()
    }

    /// Equality in the ring: agreement at every window prime above both bounds.
    pub fn agrees_with(&self, other: &AElement) -> bool {
        self.mismatches(other).is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.agrees_with(&AElement::zero(&self.window))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::sieve_primes;

    #[test]
    fn constant_and_scaling() {
        let w = sieve_primes(2, 50);
        let half = AElement::constant(&Rational::from((1, 2)), &w);
        assert_eq!(half.component(2), None);
        assert_eq!(half.component(5), Some(3));
        assert_eq!(half.exceptional_bound(), 2);
        let one = half.scale(&Rational::from(2));
        assert!(one.agrees_with(&AElement::constant(&Rational::from(1), &w)));
    }

    #[test]
    fn equality_ignores_primes_below_the_bound() {
        let w = sieve_primes(2, 30);
        let a = AElement::from_parts(&w, w.iter().map(|_| Some(1)).collect(), 0);
        let mut comps: Vec<Option<u64>> = w.iter().map(|_| Some(1)).collect();
        comps[0] = Some(0);
        comps[1] = None;
        let b = AElement::from_parts(&w, comps.clone(), 3);
        assert!(a.agrees_with(&b));
        let c = AElement::from_parts(&w, comps, 2);
        assert_eq!(a.mismatches(&c), vec![3]);
    }

    #[test]
    fn ring_operations() {
        let w = sieve_primes(5, 100);
        let a = AElement::constant(&Rational::from((2, 3)), &w);
        let b = AElement::constant(&Rational::from((5, 7)), &w);
        let sum = AElement::constant(&Rational::from((29, 21)), &w);
        let prod = AElement::constant(&Rational::from((10, 21)), &w);
        assert!(a.add(&b).agrees_with(&sum));
        assert!(a.mul(&b).agrees_with(&prod));
        assert!(sum.sub(&b).agrees_with(&a));
        assert!(a.sub(&a).is_zero());
    }
}
