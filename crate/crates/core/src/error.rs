use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable context mismatch")]
    ContextMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("polynomial has degree 0 in `{0}`")]
    ZeroDegree(String),
    #[error("expected a univariate polynomial")]
    NotUnivariate,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series context or order mismatch")]
    Mismatch,
    #[error("series is not a unit (zero constant term)")]
    NotUnit,
    #[error("constant term {0} has no square root in the coefficient field")]
    NoConstantRoot(String),
    #[error("not a square: first failing degree {degree}")]
    NotASquare { degree: usize },
    #[error("polynomial is not even in the split variable (odd power {0})")]
    Parity(u32),
    #[error("polynomial has degree {0} in the split variable, expected 4")]
    SplitDegree(u32),
    #[error("discriminant lowest form is not a monomial square times a unit: {0}")]
    DiscriminantShape(String),
    #[error("curve arity {got} does not match series arity {expected}")]
    Arity { expected: usize, got: usize },
    #[error("truncation order {0} out of range")]
    Order(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("λ{} must be nonzero", subscript(*.0))]
    ZeroLambda(usize),
    #[error("frame inconsistent with λ: {0}")]
    Frame(String),
    #[error("no rational frame: {0} is not a rational square")]
    IrrationalFrame(String),
    #[error("vertex index {0} out of range")]
    Vertex(usize),
    #[error("degree mismatch: base degree {base}, deformer degree {deformer}")]
    DegreeMismatch { base: u32, deformer: u32 },
    #[error("deformer vanishes at vertex p{0}")]
    DeformerVanishesAtVertex(usize),
    #[error("arrangement needs at least 4 forms, got {0}")]
    TooFewForms(usize),
    #[error("duplicate linear form at index {0}")]
    DuplicateForm(usize),
    #[error("zero linear form")]
    ZeroForm,
    #[error("generator failed after {0} draws")]
    GeneratorExhausted(usize),
    #[error("invalid model file: {0}")]
    File(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("order {0} outside [6, 20]")]
    Order(usize),
    #[error("{0}")]
    Model(#[from] ModelError),
    #[error("invalid config: {0}")]
    Invalid(String),
}

fn subscript(i: usize) -> char {
    char::from_u32(0x2080 + (i % 10) as u32).unwrap_or('?')
}
