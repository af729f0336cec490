//! Finite (mod p) analogues of e and Euler's constant over the ring of
//! residue families `A = prod_p F_p / sum_p F_p`, with the combinatorial
//! sequences they are built from and prime-by-prime verifiers.

pub mod analytic;
pub mod arith;
pub mod bfile;
pub mod cache;
pub mod dobinski;
pub mod error;
pub mod euler;
pub mod gregory;
pub mod poly;
pub mod report;
pub mod search;
pub mod series;
pub mod stirling;
pub mod window;

pub use analytic::BigFloat;
pub use arith::{parse_rational, AElement, PrimeCtx, Residue};
pub use cache::{ResidueCache, ResidueCacheRecord};
pub use error::{Error, Result};
pub use poly::RationalPolynomial;
pub use report::{CheckRecord, SkippedPrime, VerificationReport};
pub use rug::{Float, Integer, Rational};
pub use search::SearchTarget;
pub use series::TruncatedSeries;
pub use window::PrimeWindow;
