use alloc::string::String;

/// Errors produced by the computational core.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("malformed form text {text:?}: {reason}")]
    MalformedForm { text: String, reason: String },
    #[error("invalid form: {0}")]
    InvalidForm(String),
    #[error("invalid discriminant {0}")]
    InvalidDiscriminant(i64),
    #[error("cannot factor zero")]
    FactorZero,
    #[error("argument {0} is outside the supported factorization range")]
    FactorRange(i128),
    #[error("bernoulli index {index} exceeds bound {bound}")]
    BernoulliBound { index: u32, bound: u32 },
    #[error("zeta({0}) has no closed form in this library (need an even argument >= 2)")]
    ZetaArgument(u32),
    #[error("L({s}, {d}) has no closed form: character parity does not match s")]
    ParityMismatch { s: u32, d: i64 },
    #[error("numeric L-series parameters do not converge: {0}")]
    NonConvergent(String),
    #[error("symbolic sum of incompatible terms: pi^{e1}*sqrt({s1}) + pi^{e2}*sqrt({s2})")]
    IncompatibleTerms { e1: i32, s1: u64, e2: i32, s2: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed symbolic constant {0:?}")]
    MalformedSymbolic(String),
    #[error("prime {p} divides 2*det (or the field discriminant); use residue counting")]
    BadPrime { p: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("local density at p={p} did not stabilize by p^{j_max}")]
    Unstable { p: u64, j_max: u32 },
    #[error("k must be nonzero")]
    ZeroTarget,
    #[error("main coefficient is zero: -k is not represented, the experiment is undefined")]
    ExperimentInvalid,
    #[error("provider {provider} cannot handle this form; feasible providers: {feasible}")]
    UnsupportedProvider { provider: String, feasible: String },
    #[error("table bound {needed} exceeds the configured budget of {budget} coefficients")]
    TableBudget { needed: u64, budget: u64 },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("not enough points for a power-law fit ({0})")]
    FitDegenerate(&'static str),
    #[error("envelope is empty (Psi vanishes on the window)")]
    EmptyEnvelope,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = core::result::Result<T, Error>;
