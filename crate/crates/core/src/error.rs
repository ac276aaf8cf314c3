//! Error type shared by every module in the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed PD code at byte {position}: {reason}")]
    MalformedSyntax { position: usize, reason: String },

    #[error("arc label {label} appears {count} times, expected exactly 2")]
    ArcLabelNotTwice { label: u32, count: usize },

    #[error("empty PD code; the zero-crossing unknot is constructed with Diagram::unknot()")]
    EmptyCode,

    #[error("PD code does not describe a diagram on the sphere: {details}")]
    NonPlanar { details: String },

    #[error("no consistent strand orientation: {details}")]
    InconsistentOrientation { details: String },

    #[error("crossing {crossing} joins Seifert circle {circle} to itself")]
    BandSelfLoop { crossing: usize, circle: usize },

    #[error("Euler characteristic {chi} with {mu} boundary components does not give an integer genus")]
    NonIntegerGenus { chi: i64, mu: usize },

    #[error("circle {circle} is not nested")]
    NotNested { circle: usize },

    #[error("crossing {crossing} does not belong to a parallel band group")]
    NotParallel { crossing: usize },

    #[error("diagram is not special: nested Seifert circles {nested:?}")]
    NotSpecial { nested: Vec<usize> },

    #[error("checkerboard coloring failed: faces {a} and {b} share an arc but got the same color")]
    ImproperColoring { a: usize, b: usize },

    #[error("reduced edge between black vertices {u} and {v} carries crossings of both signs")]
    MixedSignGroup { u: usize, v: usize },

    #[error("precondition not met: {details}")]
    PreconditionFailed { details: String },

    #[error("Alexander determinant vanished for a knot diagram")]
    ZeroDeterminantUnexpected,

    #[error("polynomial cannot be normalised to a symmetric Alexander polynomial: {details}")]
    NotSymmetrizable { details: String },

    #[error("rank formula produced a negative value {value} at s = {s}")]
    NegativeRank { s: i64, value: i64 },

    #[error("top-coefficient equality holds but its consequence fails: {details}")]
    ImplicationViolated { details: String },

    #[error("diagram is not alternating")]
    NotAlternating,

    #[error("diagram is not reduced: nugatory crossing {crossing}")]
    NotReduced { crossing: usize },

    #[error("diagram is not a knot: {mu} components")]
    NotKnot { mu: usize },

    #[error("corpus file not found: {path}")]
    FileMissing { path: String },

    #[error("corpus header mismatch: expected `name,pd[,alexander,signature,genus,fibered]`, got `{got}`")]
    HeaderMismatch { got: String },

    #[error("corpus row {row}: {details}")]
    RowParseError { row: usize, details: String },
}
