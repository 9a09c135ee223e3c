use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A coordinate exceeds the ±(2³¹−1) bound that keeps norms exact in u64.
    #[error("coordinate {value} out of range (|a|,|b| must be <= {limit})")]
    CoordinateOutOfRange { value: i64, limit: i64 },

    /// A product left the representable coordinate range.
    #[error("gaussian multiply overflowed coordinate bounds: ({re}, {im})")]
    MulOverflow { re: i128, im: i128 },

    /// The operation is undefined at zero (arg, orbit, sector membership).
    #[error("zero input rejected: {op} is undefined at 0")]
    ZeroInput { op: &'static str },

    /// Angle text did not match `pi/N`, `Kpi/N`, `Kpi`, or a decimal literal.
    #[error("cannot parse angle: bad token `{token}`")]
    AngleParse { token: String },

    /// A numeric argument violated a domain precondition.
    #[error("domain error: {what}")]
    Domain { what: String },

    /// A runtime guard (sieve range, pi3 limit, scatter bound) was exceeded.
    #[error("guard exceeded: {what} = {requested} (limit {limit})")]
    GuardExceeded {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    /// The estimated lattice workload is over the configured budget.
    #[error("workload budget exceeded: estimated {estimated} lattice points (budget {budget})")]
    BudgetExceeded { estimated: u64, budget: u64 },

    /// The quotient search hit its doubling cap before finding a witness.
    /// This signals an exhausted budget, never nonexistence.
    #[error(
        "iteration cap reached after {iterations} window doublings \
         (final magnitude threshold {final_threshold})"
    )]
    IterationCap {
        iterations: u32,
        final_threshold: f64,
    },

    /// trial_divide_zi only runs at oracle scale (norm <= 10^8).
    #[error("norm {norm} beyond trial-division oracle scale (limit {limit})")]
    OracleScale { norm: u64, limit: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
