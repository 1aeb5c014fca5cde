use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parent array contains a cycle through vertex {0}")]
    CycleDetected(usize),
    #[error("structure is disconnected")]
    Disconnected,
    #[error("structure has {0} roots")]
    MultipleRoots(usize),
    #[error("invalid tree description: {0}")]
    InvalidTree(String),
    #[error("tree is not a hedge")]
    NotAHedge,
    #[error("hedge is not lush")]
    NotLush,
    #[error("not a valid pendent path: {0}")]
    BadPath(String),
    #[error("subtrees are not mutually independent")]
    SubtreesNotIndependent,
    #[error("principal submatrix on subtree {0} is singular")]
    SubmatrixSingular(usize),
    #[error("edge {0}-{1} has non-positive weight")]
    NonPositiveEdgeWeight(usize, usize),
    #[error("vertex {branch} is not adjacent to {vertex}")]
    NotABranch { vertex: usize, branch: usize },
    #[error("bad split: {0}")]
    BadSplit(String),
    #[error("branches at vertex {vertex} are not collapsible: {detail}")]
    NotCollapsible { vertex: usize, detail: String },
    #[error("distinguished values are not pairwise distinct")]
    DuplicateValues,
    #[error("coefficient b_{0} is not positive")]
    NotInB(usize),
    #[error("alpha2 + beta2 equals beta3 + beta4")]
    DegenerateSum,
    #[error("division by (x - alpha_{0})(x - beta_{0}) left a nonzero remainder")]
    NonzeroRemainder(usize),
    #[error("path matrix has order {found}, hedge needs {expected}")]
    HeightMismatch { expected: usize, found: usize },
    #[error("collapse cascade failed at step {step}: {detail}")]
    NotFromConstruction { step: usize, detail: String },
    #[error("values do not satisfy the truncated feasibility conditions")]
    NotInB3,
    #[error("spectrum has a single distinct eigenvalue")]
    SingleEigenvalue,
    #[error("expected {expected} values, found {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("hedge height {0} is too small")]
    HeightTooSmall(usize),
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("solution routes disagree: {0}")]
    RoutesDisagree(String),
    #[error("unexpected eigenvalue coincidence: {0}")]
    UnexpectedCoincidence(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("eigenvalue iteration did not converge")]
    NoConvergence,
    #[error("unknown example id {0:?}")]
    UnknownExample(String),
    #[error("{0}")]
    Io(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
