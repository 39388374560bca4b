//! Integer and character arithmetic: factorization, Kronecker symbols, Bernoulli numbers
//! and exact or numeric values of `zeta` and quadratic Dirichlet L-series.

pub mod bernoulli;
pub mod kronecker;
pub mod lseries;
pub mod primes;

pub use bernoulli::{bernoulli, generalized_bernoulli};
pub use kronecker::{kronecker, Discriminant};
pub use lseries::{l_value_exact, l_value_numeric, zeta_exact};
pub use primes::{factorize, is_prime, Factorization};
