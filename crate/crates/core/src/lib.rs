//! # tactile-color
//!
//! Encodes color as touch-readable raised patterns and builds the learning
//! materials around the encoding:
//!
//! - **colorwheel** — the 12-hue red/yellow/blue pigment wheel: the fixed
//!   mix table, clock-face positions, and quantization of arbitrary RGB
//!   colors onto the wheel.
//! - **pattern** — lattice synthesis: dots stand for yellow, straight lines
//!   for red, wavy lines for blue, and element size tracks each primary's
//!   share of the mix.
//! - **layout** — the annular 12-sector wheel, the congruent detachable
//!   pieces, and the case tray for reconstruction practice.
//! - **decode** — shape classification and mix recovery from geometry, plus
//!   legibility validation against minimum feature sizes.
//! - **render** — deterministic SVG, binary PGM heightmaps, and the JSON
//!   pattern manifest.
//! - **study** — scoring of reconstruction sessions against a reference
//!   wheel.
//!
//! Everything is pure computation over immutable inputs; all operations are
//! safe to call concurrently.

pub mod colorwheel;
pub mod decode;
pub mod error;
pub mod geom;
pub mod layout;
pub mod pattern;
pub mod render;
pub mod study;

pub use colorwheel::{hue_of_mix, rgb_to_hue, ryb_to_rgb, ClockPosition, Hue, HueCategory, Rgb8, RybMix};
pub use decode::{classify_element, decode_elements, validate_legibility, DecodedMix, LegibilityReport};
pub use error::{Error, Result};
pub use geom::{Point, Region};
pub use layout::{build_kit, build_wheel, CaseLayout, Kit, KitPiece, WheelLayout};
pub use pattern::{
    elements_of, size_for_fraction, synthesize_swatch, Element, Geometry, Layer,
    LegibilityConstraints, PatternSpec, PrimitiveKind, SizeScale,
};
pub use render::{
    read_manifest, to_heightmap, write_manifest, HeightmapRaster, PatternManifest, SvgDocument,
    ToSvg, MANIFEST_VERSION,
};
pub use study::{circular_distance, score_arrangement, Arrangement, ScoreReport, Session};
