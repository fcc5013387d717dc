use alloc::string::String;
use core::fmt;

/// Errors surfaced by the exact kernels.
///
/// Each variant names the violated contract; the payload carries enough
/// context to identify the offending call.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Series division requested with a divisor whose constant term is zero.
    DivisionByNonUnit,
    /// An analytic operation was applied outside its domain; the payload
    /// names the failing condition.
    PreconditionViolated(String),
    /// The M-transform was applied to a Laurent series with a nonzero
    /// coefficient at a negative power of w.
    NotHolomorphicAtZero { exponent: i64 },
    /// The M-transform normalizer H(0,q) does not have constant term 1.
    NonUnitEvaluation,
    /// A rational function was evaluated at a series annihilating its
    /// denominator's constant term.
    SingularEvaluation,
    /// A series that must be holomorphic at w = 0 has a surviving negative
    /// power; this signals an inconsistent coefficient table.
    HolomorphyViolation { p: i64, exponent: i64, degree: usize },
    /// Coefficient tables were requested for a Calabi-Yau geometry.
    NotFano,
    /// The first-order ODE for an asymptotic-expansion coefficient has an
    /// integrand with nonzero constant term.
    ObstructionNonzero { b: usize },
    /// A combinatorial identity failed; payload names it and the witness.
    IdentityViolation(String),
    /// A structure-constant key admits no solution of the support relation.
    InfeasibleKey(String),
    /// An invariant query violating the virtual-dimension constraint.
    DimensionMismatch(String),
    /// A closed-form specialization was invoked outside its hypotheses.
    HypothesisViolated(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByNonUnit => write!(f, "series division by a non-unit"),
            Error::PreconditionViolated(what) => write!(f, "precondition violated: {what}"),
            Error::NotHolomorphicAtZero { exponent } => {
                write!(f, "nonzero coefficient at w^{exponent} < 0")
            }
            Error::NonUnitEvaluation => write!(f, "normalizer H(0,q) has constant term != 1"),
            Error::SingularEvaluation => {
                write!(f, "denominator constant term vanishes at the evaluation point")
            }
            Error::HolomorphyViolation { p, exponent, degree } => write!(
                f,
                "F_{p}: surviving coefficient at w^{exponent} < 0 in degree q^{degree}"
            ),
            Error::NotFano => write!(f, "coefficient tables are defined only for nu_a > 0"),
            Error::ObstructionNonzero { b } => {
                write!(f, "ODE for Phi_{b} obstructed: integrand has nonzero constant term")
            }
            Error::IdentityViolation(what) => write!(f, "identity violated: {what}"),
            Error::InfeasibleKey(key) => write!(f, "infeasible structure-constant key: {key}"),
            Error::DimensionMismatch(what) => write!(f, "dimension mismatch: {what}"),
            Error::HypothesisViolated(what) => write!(f, "hypothesis violated: {what}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
