use thiserror::Error;

use crate::spherical::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unknown color `{0}`")]
    UnknownColor(String),
    #[error("duplicate color name `{0}`")]
    DuplicateColor(String),
    #[error("invalid colored cone: {0}")]
    InvalidColoredCone(ValidationReport),
    #[error("invalid colored fan: {0}")]
    InvalidFan(ValidationReport),
    #[error("cone does not meet the valuation cone in its relative interior")]
    NotAColoredFace,
    #[error("unknown stratum `{0}`")]
    UnknownStratum(String),
    #[error("character {0} lies outside the dual of every maximal cone containing the stratum")]
    OutsideDualCone(String),
    #[error("point {0} lies outside the valuation cone")]
    OutsideValuationCone(String),
    #[error("set supplied for stratum `{0}` escapes its valuation cone")]
    SetEscapesStratum(String),
    #[error("stratum `{0}` is not a coordinate face of a toric fan")]
    NotToric(String),
    #[error("infinite weight entries are not allowed on a Laurent polynomial")]
    InfiniteWeightOnLaurent,
    #[error("operation requires a polynomial in ordinary (non-Laurent) mode")]
    LaurentNotAllowed,
    #[error("operation requires finite weights")]
    InfiniteWeight,
    #[error("the zero polynomial has no tropical hypersurface")]
    ZeroPolynomial,
    #[error("witness coordinate {0} is zero")]
    ZeroWitnessCoordinate(usize),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("unknown {kind} `{name}` (available: {available})")]
    UnknownStrategy {
        kind: &'static str,
        name: String,
        available: String,
    },
    #[error("rendering supports rank at most 2, got {0}")]
    RenderRank(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
