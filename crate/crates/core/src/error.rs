use thiserror::Error;

/// Errors raised by the geometry, counting and bijection routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polytope is unbounded: {0}")]
    UnboundedPolytope(String),
    #[error("polytope is empty")]
    EmptyPolytope,
    #[error("polytope is zero-dimensional; facets are undefined")]
    ZeroDimensional,
    #[error("point violates a constraint of the polytope")]
    NotInPolytope,
    #[error("infeasible margins: row total {alpha} differs from column total {beta}")]
    InfeasibleMargins { alpha: u64, beta: u64 },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("entry cap exceeded: y_nn = {found} > k = {cap}")]
    CapExceeded { found: String, cap: i64 },
    #[error("matrix has a non-integer entry")]
    NonIntegerInput,
    #[error("matrix has a negative entry")]
    NegativeEntry,
    #[error("tableaux have different shapes or sizes")]
    ShapeMismatch,
    #[error("matrix is not a valid gluing of two Gelfand-Tsetlin patterns: {0}")]
    NotAValidGluing(String),
    #[error("matrix is not in the monotone cone")]
    NotInCone,
    #[error("data points are inconsistent with degree {0}")]
    DegreeOverflow(usize),
    #[error("count at t = {t} is {actual}, fitted polynomial predicts {predicted}")]
    NotAPolynomial {
        t: u64,
        actual: String,
        predicted: String,
    },
    #[error("no period dividing {0} reproduces the counts")]
    NoPeriodFound(u64),
    #[error("function is not in the order polytope")]
    NotInOrderPolytope,
    #[error("function is not in the chain polytope")]
    NotInChainPolytope,
    #[error("poset is not a product of two chains")]
    NotProductOfChains,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
