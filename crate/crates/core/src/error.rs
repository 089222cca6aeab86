use thiserror::Error;

use crate::colorwheel::Hue;
use crate::pattern::PrimitiveKind;

/// Errors produced by encoding, synthesis, layout, decoding, and scoring.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// All three pigment components are too close to equal; no wheel hue applies.
    #[error("achromatic mix: components differ by less than 0.05, no wheel hue applies")]
    AchromaticMix,

    /// Input color has too little saturation to quantize to a hue.
    #[error("achromatic color: saturation {saturation} is below the minimum of {minimum}")]
    AchromaticColor { saturation: u8, minimum: u8 },

    #[error("invalid fraction {0}: expected 0 < f <= 1")]
    InvalidFraction(f64),

    /// A mix with more than two nonzero primaries (or not normalized) cannot be
    /// encoded as a wheel pattern.
    #[error("not a wheel mix: need at most two nonzero primaries summing to 1, got r={r} y={y} b={b}")]
    NotWheelMix { r: f64, y: f64, b: f64 },

    #[error("region too small: cannot fit one lattice period ({min_period_mm} mm)")]
    RegionTooSmall { min_period_mm: f64 },

    /// No lattice period within the bounded search satisfies the clearance floor.
    #[error("clearance infeasible: no period up to {max_period_mm} mm keeps gaps >= {min_gap_mm} mm")]
    ClearanceInfeasible {
        max_period_mm: f64,
        min_gap_mm: f64,
    },

    #[error("ring too thin: radial thickness {thickness_mm} mm is below {required_mm} mm")]
    RingTooThin {
        thickness_mm: f64,
        required_mm: f64,
    },

    #[error("invalid radii: need outer > inner > 0, got inner={inner_mm} outer={outer_mm}")]
    InvalidRadii { inner_mm: f64, outer_mm: f64 },

    #[error("dpi {0} out of range, expected 100..=1200")]
    DpiOutOfRange(u32),

    #[error("manifest version {found:?} not supported, expected {expected:?}")]
    ManifestVersionMismatch { found: String, expected: String },

    #[error("malformed manifest: {0}")]
    MalformedManifest(String),

    #[error("malformed session file: {0}")]
    MalformedSession(String),

    #[error("element geometry matches no pattern primitive")]
    Unclassifiable,

    #[error("too few elements: {count} of kind {kind}, need at least {minimum}")]
    TooFewElements {
        kind: PrimitiveKind,
        count: usize,
        minimum: usize,
    },

    #[error("piece {0} placed more than once")]
    DuplicatePiece(Hue),

    #[error("reference arrangement must place all 12 pieces")]
    IncompleteReference,

    #[error("invalid legibility constraints: {0}")]
    InvalidConstraints(String),
}

pub type Result<T> = std::result::Result<T, Error>;
