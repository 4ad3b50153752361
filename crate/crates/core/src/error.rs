use thiserror::Error;

/// Errors raised across the toolkit.
///
/// Variants are grouped by the subsystem that raises them; [`Error::exit_code`]
/// maps them onto the command-line exit codes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polynomials live in different rings (n = {left} vs n = {right})")]
    VariableMismatch { left: usize, right: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not divisible by the divisor")]
    NotDivisible,
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("variable {0} does not exist in this ring")]
    UnknownVariable(String),
    #[error("contract violated: {0}")]
    Contract(String),
    #[error("linear map is singular")]
    SingularMap,
    #[error("missing value for variable {0}")]
    MissingAssignment(String),

    #[error("coefficients are not Hermitian-symmetric: {0} violating pair(s)")]
    NotHermitian(usize),
    #[error("the polynomial does not define a real hypersurface (no Hermitian part is a constant multiple)")]
    NoRealForm,
    #[error("the defining polynomial is identically zero")]
    ZeroDefiningFunction,
    #[error("hypersurface is not Levi-flat; classification refused")]
    NotLeviFlat,

    #[error("center is Segre degenerate: every slice coefficient vanishes")]
    SegreDegenerateCenter,
    #[error("no generic direction found after {0} trials")]
    NoGenericDirection(usize),
    #[error("frame is degenerate: the axis lies in the Segre variety")]
    DegenerateFrame,
    #[error("polynomial specialization vanishes identically")]
    IdenticallyZero,

    #[error("point is not regular: {0}")]
    NotRegular(String),
    #[error("continuation corrector diverged after {0} step halvings")]
    CorrectorDivergence(usize),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("numerically inconclusive: {0}")]
    Inconclusive(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("expression is not real-valued ({0} non-Hermitian coefficient pair(s))")]
    NotRealValued(usize),
    #[error("input error: {0}")]
    Input(String),
    #[error("dimension n = {0} exceeds the symbolic size limit (n <= 3)")]
    TooLarge(usize),
    #[error("I/O error: {0}")]
    Io(String),
}

impl Error {
    /// Command-line exit code: 2 input/parse, 3 hypothesis violation, 4 numeric inconclusiveness.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. }
            | Error::NotRealValued(_)
            | Error::Input(_)
            | Error::TooLarge(_)
            | Error::Io(_)
            | Error::NotHermitian(_)
            | Error::ZeroDefiningFunction
            | Error::VariableMismatch { .. }
            | Error::UnknownVariable(_)
            | Error::MissingAssignment(_) => 2,
            Error::NotLeviFlat
            | Error::Hypothesis(_)
            | Error::NotRegular(_)
            | Error::SegreDegenerateCenter
            | Error::NoRealForm
            | Error::DegenerateFrame
            | Error::Contract(_)
            | Error::SingularMap
            | Error::DivisionByZero
            | Error::NotDivisible
            | Error::DegenerateInput(_) => 3,
            Error::Inconclusive(_)
            | Error::CorrectorDivergence(_)
            | Error::NoGenericDirection(_)
            | Error::IdenticallyZero => 4,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
