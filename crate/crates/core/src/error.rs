use alloc::string::String;
use core::fmt;

/// Every failure the algebra layer can report. Variants that stem from a
/// failed axiom or closure check carry the witness that broke it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidConstruction { reason: String },
    SizeLimit { requested: usize, cap: usize },
    NotASubring { reason: String },
    NotSubgroup { degree: String, a: usize, b: usize },
    NotDirectSum { element: usize, decompositions: usize },
    ProductEscapes { sigma: String, tau: String, a: usize, b: usize },
    UnityNotInIdentityComponent,
    InvalidDegree { degree: String },
    WrongConstruction { expected: &'static str },
    IdealCountLimit { cap: usize },
    GraphTooLarge { order: usize, cap: usize },
    NotEFaithful { witness: String },
    WellDefinednessViolation { detail: String },
    IsoViolation { detail: String },
    NotIntegerGraded,
    UnknownTheorem(String),
    WrongInstanceKind { theorem: &'static str, needs: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidConstruction { reason } => write!(f, "invalid construction: {reason}"),
            Error::SizeLimit { requested, cap } => {
                write!(f, "ring of {requested} elements exceeds the size cap {cap}")
            }
            Error::NotASubring { reason } => write!(f, "not a subring: {reason}"),
            Error::NotSubgroup { degree, a, b } => write!(
                f,
                "component of degree {degree} is not an additive subgroup: {a} + {b} escapes it"
            ),
            Error::NotDirectSum { element, decompositions } => write!(
                f,
                "components do not form a direct sum: element {element} has {decompositions} decompositions"
            ),
            Error::ProductEscapes { sigma, tau, a, b } => write!(
                f,
                "product of {a} (degree {sigma}) and {b} (degree {tau}) leaves the component of degree {sigma}{tau}"
            ),
            Error::UnityNotInIdentityComponent => {
                write!(f, "the unity does not lie in the identity component")
            }
            Error::InvalidDegree { degree } => write!(f, "degree {degree} is not in the grade group"),
            Error::WrongConstruction { expected } => {
                write!(f, "grading needs a ring built as {expected}")
            }
            Error::IdealCountLimit { cap } => write!(f, "ideal lattice exceeds {cap} ideals"),
            Error::GraphTooLarge { order, cap } => {
                write!(f, "graph of order {order} exceeds the exact-invariant cap {cap}")
            }
            Error::NotEFaithful { witness } => write!(f, "grading is not e-faithful: {witness}"),
            Error::WellDefinednessViolation { detail } => {
                write!(f, "quotient adjacency depends on representatives: {detail}")
            }
            Error::IsoViolation { detail } => write!(f, "correspondence is not an isomorphism: {detail}"),
            Error::NotIntegerGraded => write!(f, "operation needs a grading by the ordered integers"),
            Error::UnknownTheorem(id) => write!(f, "unknown theorem id `{id}`"),
            Error::WrongInstanceKind { theorem, needs } => {
                write!(f, "check `{theorem}` needs {needs}")
            }
        }
    }
}

impl core::error::Error for Error {}
