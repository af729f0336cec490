use serde::{Deserialize, Serialize};

use crate::arith::sieve_primes;
use crate::report::Window;

/// The primes of a closed interval `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeWindow {
    lo: u64,
    hi: u64,
    primes: Vec<u64>,
}

impl PrimeWindow {
    pub fn new(lo: u64, hi: u64) -> Self {
        PrimeWindow { lo, hi, primes: sieve_primes(lo, hi) }
    }

    /// Default window for the Dobinski verifiers.
    pub fn dobinski_default() -> Self {
        Self::new(5, 2003)
    }

    /// Default window for the Euler-constant verifiers (O(p^2) per prime).
    pub fn euler_default() -> Self {
        Self::new(5, 1009)
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn bounds(&self) -> Window {
        Window { lo: self.lo, hi: self.hi }
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }
}
