use thiserror::Error;

/// Errors raised by the engine. Every variant carries a stable code (see
/// [`Error::code`]) that the command-line front end reports verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix entry is not integral: {0}")]
    InputNotIntegral(String),
    #[error("generators do not span a full-rank lattice")]
    RankDeficient,
    #[error("lattice is not contained in the claimed super-lattice")]
    NotSublattice,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("structure constants are not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("supplied unit is not a two-sided identity")]
    BadUnit,
    #[error(
        "central idempotents cannot be computed automatically over this ground ring; supply them"
    )]
    NeedsSuppliedIdempotents,
    #[error("idempotent system is invalid: {0}")]
    BadIdempotents(String),
    #[error(
        "element {element} is not integral: characteristic polynomial coefficient {coefficient}"
    )]
    NotIntegral {
        element: String,
        coefficient: String,
    },
    #[error("generators do not span the algebra")]
    NotFullRank,
    #[error("lattice is not an order: {0}")]
    NotAnOrder(String),
    #[error("{0} is not a prime of the ground ring")]
    NotPrime(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("discriminant vanishes; supply candidate primes explicitly")]
    NeedsSuppliedPrimes,
    #[error("algebra is not commutative")]
    NotCommutative,
    #[error("residue algebra of dimension {0} exceeds the enumeration bound {1}")]
    DimensionTooLarge(usize, usize),
    #[error("element is zero")]
    ZeroElement,
    #[error("algebra is not central simple of square dimension: {0}")]
    NotCentralSimple(String),
    #[error("supplied embedding is not an algebra map: {0}")]
    EmbeddingNotAlgebraMap(String),
    #[error("action matrices do not match the order: {0}")]
    ActionMismatch(String),
    #[error("order is not contained in the larger order")]
    NotContained,
    #[error("map is not a module homomorphism: {0}")]
    NotAModuleMap(String),
    #[error("algebra is not semisimple (degenerate trace form); mark it trusted to proceed")]
    NotSemisimple,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    /// An engine error raised while processing the input at `location`.
    #[error("{source}")]
    At {
        location: String,
        source: Box<Error>,
    },
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InputNotIntegral(_) => "InputNotIntegral",
            Error::RankDeficient => "RankDeficient",
            Error::NotSublattice => "NotSublattice",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::AlgebraMismatch => "AlgebraMismatch",
            Error::NotAssociative(..) => "NotAssociative",
            Error::BadUnit => "BadUnit",
            Error::NeedsSuppliedIdempotents => "NeedsSuppliedIdempotents",
            Error::BadIdempotents(_) => "BadIdempotents",
            Error::NotIntegral { .. } => "NotIntegral",
            Error::NotFullRank => "NotFullRank",
            Error::NotAnOrder(_) => "NotAnOrder",
            Error::NotPrime(_) => "NotPrime",
            Error::Internal(_) => "InternalError",
            Error::NeedsSuppliedPrimes => "NeedsSuppliedPrimes",
            Error::NotCommutative => "NotCommutative",
            Error::DimensionTooLarge(..) => "DimensionTooLarge",
            Error::ZeroElement => "ZeroElement",
            Error::NotCentralSimple(_) => "NotCentralSimple",
            Error::EmbeddingNotAlgebraMap(_) => "EmbeddingNotAlgebraMap",
            Error::ActionMismatch(_) => "ActionMismatch",
            Error::NotContained => "NotContained",
            Error::NotAModuleMap(_) => "NotAModuleMap",
            Error::NotSemisimple => "NotSemisimple",
            Error::Unsupported(_) => "Unsupported",
            Error::Parse { .. } => "ParseError",
            Error::At { source, .. } => source.code(),
        }
    }

    /// Input location the error refers to, if known.
    pub fn location(&self) -> Option<&str> {
        match self {
            Error::Parse { location, .. } | Error::At { location, .. } => Some(location),
            _ => None,
        }
    }

    /// The error without location wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::At { source, .. } => source.root(),
            e => e,
        }
    }

    /// Message without the location.
    pub fn message(&self) -> String {
        match self.root() {
            Error::Parse { message, .. } => message.clone(),
            e => e.to_string(),
        }
    }

    /// Attach an input location. Parse errors raised on a raw token keep the
    /// token in their message and take the new location.
    pub fn at(self, location: impl Into<String>) -> Self {
        match self {
            Error::Parse {
                location: token,
                message,
            } => Error::Parse {
                location: location.into(),
                message: format!("{message} (in '{token}')"),
            },
            e @ Error::At { .. } => e,
            e => Error::At {
                location: location.into(),
                source: Box::new(e),
            },
        }
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
