//! Prime generation and exact modular arithmetic.

mod aelement;
mod modular;
mod rational;
mod sieve;

pub use aelement::AElement;
pub use modular::{
    add_mod, binom_rational_mod, integer_mod, inv_mod, mul_mod, pow_mod, rational_mod,
    rational_pow_mod_p2, sub_mod, PrimeCtx, Residue,
};
pub use rational::{
    binomial, delta_minus_one, denominator_bound, harmonic, largest_prime_factor,
    p_divides_denominator, p_divides_numerator, parse_rational, rational_bound, shifted,
};
pub use sieve::{is_prime, sieve_primes};
