//! Fabrication output: vector SVG, binary PGM heightmaps, and the JSON
//! pattern manifest. All three emitters are byte-deterministic for a given
//! input; SVG coordinates are written with three decimals (1 µm), well below
//! fabrication tolerance.

mod manifest;
mod pgm;
mod svg;

pub use manifest::{read_manifest, write_manifest, PatternManifest, MANIFEST_VERSION};
pub use pgm::{to_heightmap, HeightmapRaster, MAX_DPI, MIN_DPI};
pub use svg::{SvgDocument, ToSvg};

/// Fixed three-decimal coordinate formatting. Negative zero is normalized so
/// equal geometry always prints equal bytes.
pub(crate) fn fmt_mm(v: f64) -> String {
    let r = (v * 1000.0).round() / 1000.0;
    let r = if r == 0.0 { 0.0 } else { r };
    format!("{r:.3}")
}

#[cfg(test)]
mod tests {
    use super::fmt_mm;

    #[test]
    fn three_decimals_and_no_negative_zero() {
        assert_eq!(fmt_mm(1.0), "1.000");
        assert_eq!(fmt_mm(0.12345), "0.123");
        assert_eq!(fmt_mm(-0.0004), "0.000");
        assert_eq!(fmt_mm(-1.5), "-1.500");
    }
}
