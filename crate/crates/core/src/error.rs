use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("dimensions differ: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("series with zero constant term is not invertible")]
    NonInvertibleConstantTerm,
    #[error("exp/log1p need a series with zero constant term")]
    NonNilpotentArgument,
    #[error("binomial power needs a series with constant term 1")]
    ConstantTermNotOne,
    #[error("division by zero")]
    DivisionByZero,
    #[error("series is not divisible by t^{0}")]
    NotDivisible(usize),
    #[error("tensor does not start with the unit term 1⊗1")]
    NonInvertibleTensor,
    #[error("operator degree {0} exceeds the cap {1}")]
    DegreeOverflow(usize, usize),
    #[error("dimension {0} out of the supported range 2..={1}")]
    UnsupportedDimension(usize, usize),
    #[error("index {0} out of range for dimension {1}")]
    IndexOutOfRange(usize, usize),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("Jordanian parameter r must be nonzero")]
    ZeroJordanianParameter,
    #[error("psi must have constant term 1")]
    NonUnitPsiConstantTerm,
    #[error("{0}")]
    InvalidSpec(String),
    #[error("outside the model domain: {0}")]
    DomainViolation(String),
    #[error("no sign change of m0^2(k0) - m0^2 over [{0}, {1}]")]
    NoSignChange(f64, f64),
    #[error("i/o failure: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
