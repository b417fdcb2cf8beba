use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("expected a rank-1 polynomial, got rank {0}")]
    NotUnivariate(usize),
    #[error("covector has non-integer entries")]
    NonIntegerCovector,
    #[error("covector is not primitive: {0:?}")]
    NotPrimitive(Vec<i64>),
    #[error("covector is zero")]
    ZeroCovector,
    #[error("zero polynomial has no Newton polytope")]
    ZeroPolynomial,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: undeclared generator `{name}`")]
    UndeclaredGenerator { line: usize, name: String },
    #[error("line {line}: duplicate generator `{name}`")]
    DuplicateGenerator { line: usize, name: String },
    #[error("line {line}: malformed exponent in `{token}`")]
    MalformedExponent { line: usize, token: String },
    #[error("unknown generator index {0}")]
    UnknownGenerator(usize),
    #[error("cover degree must be at least 1")]
    BadCoverDegree,

    #[error("free abelianization is trivial (b1 = 0)")]
    TrivialAbelianization,
    #[error("Alexander polynomial vanishes for psi = {0:?}")]
    VanishingAlexander(Vec<i64>),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not invertible over the integers (det = {0})")]
    NotUnimodular(String),
    #[error("matrix is not square")]
    NotSquare,

    #[error("empty point set")]
    EmptyInput,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("functionals do not span the ambient space (seminorm, rank {rank} < {dim})")]
    DegenerateNorm { rank: usize, dim: usize },
    #[error("functional {0:?} is not an even lattice point")]
    OddFunctional(Vec<i64>),
    #[error("polytope does not contain the origin in its interior")]
    OriginNotInterior,
    #[error("point is in the interior of the polytope")]
    PointInterior,
    #[error("point lies outside the polytope")]
    PointExterior,
    #[error("empty face")]
    EmptyFace,
    #[error("points do not form a face of the polytope")]
    NotAFace,

    #[error("base multiplicity m0 must be at least 1")]
    ZeroBaseMultiplicity,
    #[error("block order does not match multiplicities: {0}")]
    OrderMismatch(String),
    #[error("frontier label mismatch at position {0}")]
    FrontierMismatch(usize),
    #[error("special block count must be at least 1")]
    NoSpecialBlocks,
    #[error("target is not in the face")]
    TargetNotInFace,
    #[error("target lies on the face boundary where the base point forces mu0 = 0")]
    BoundaryInfeasible,
    #[error("base point is not in the face")]
    BasePointNotInFace,
    #[error("weights must sum to one with mu0 > 0")]
    BadWeights,
    #[error("target is not on the unit sphere of the dual norm")]
    TargetNotOnBoundary,
    #[error("PD(psi) is not in the cone over the interior of the dual face")]
    PsiNotInCone,
    #[error("fixture has no norm-ball data")]
    MissingBall,

    #[error("surgery coefficient {p}/{q} is not reduced")]
    NonCoprimeSlope { p: i64, q: i64 },
    #[error("surgery coefficient must have p >= 0")]
    NegativeSlope,
    #[error("zero surgery must go through the zero-surgery formula")]
    ZeroSlope,
    #[error("fixture has no meridian/longitude words")]
    MissingPeripheral,
    #[error("exact division failed: surgery formula violated")]
    FormulaViolation,
    #[error("filled and base manifolds do not share an H^1 identification")]
    IncompatibleCohomology,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
}
