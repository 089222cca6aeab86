//! Binary heightmap rasterization for swell paper and relief printing.
//!
//! Output is binary PGM (P5, maxval 255): raised areas 255, background 0.
//! Pixels are filled by exact point-to-geometry distance at the pixel
//! center, so the raster is a pure function of the element geometry.

use crate::error::{Error, Result};
use crate::geom::{point_segment_distance, Point};
use crate::pattern::{Geometry, PatternSpec};

pub const MIN_DPI: u32 = 100;
pub const MAX_DPI: u32 = 1200;

const MM_PER_INCH: f64 = 25.4;

/// 8-bit grayscale raster, row 0 at the top.
#[derive(Debug, Clone, PartialEq)]
pub struct HeightmapRaster {
    pub width_px: u32,
    pub height_px: u32,
    pub dpi: u32,
    pub pixels: Vec<u8>,
}

impl HeightmapRaster {
    pub fn get(&self, col: u32, row: u32) -> u8 {
        self.pixels[(row * self.width_px + col) as usize]
    }

    /// Serializes as binary PGM (P5).
    pub fn to_pgm_bytes(&self) -> Vec<u8> {
        let header = format!(
            "P5\n# raised = 255, background = 0\n{} {}\n255\n",
            self.width_px, self.height_px
        );
        let mut bytes = header.into_bytes();
        bytes.extend_from_slice(&self.pixels);
        bytes
    }
}

/// Rasterizes a pattern at `dpi`. The raster covers the region's bounding
/// box; pixel dimensions are `ceil(mm * dpi / 25.4)`.
pub fn to_heightmap(spec: &PatternSpec, dpi: u32) -> Result<HeightmapRaster> {
    if !(MIN_DPI..=MAX_DPI).contains(&dpi) {
        return Err(Error::DpiOutOfRange(dpi));
    }
    let bounds = spec.region.bounds();
    let px_per_mm = f64::from(dpi) / MM_PER_INCH;
    let width_px = (bounds.width() * px_per_mm).ceil() as u32;
    let height_px = (bounds.height() * px_per_mm).ceil() as u32;
    let mut pixels = vec![0u8; (width_px as usize) * (height_px as usize)];

    let mm_of_col = |col: u32| bounds.min.x + (f64::from(col) + 0.5) / px_per_mm;
    let mm_of_row = |row: u32| bounds.max.y - (f64::from(row) + 0.5) / px_per_mm;
    let col_range = |x0: f64, x1: f64| -> (u32, u32) {
        let lo = ((x0 - bounds.min.x) * px_per_mm - 1.0).floor().max(0.0) as u32;
        let hi = (((x1 - bounds.min.x) * px_per_mm + 1.0).ceil() as u32).min(width_px);
        (lo, hi)
    };
    let row_range = |y0: f64, y1: f64| -> (u32, u32) {
        let lo = ((bounds.max.y - y1) * px_per_mm - 1.0).floor().max(0.0) as u32;
        let hi = (((bounds.max.y - y0) * px_per_mm + 1.0).ceil() as u32).min(height_px);
        (lo, hi)
    };

    for element in &spec.elements {
        match &element.geometry {
            Geometry::Circle { center, diameter_mm } => {
                let r = diameter_mm / 2.0;
                let (c0, c1) = col_range(center.x - r, center.x + r);
                let (r0, r1) = row_range(center.y - r, center.y + r);
                for row in r0..r1 {
                    for col in c0..c1 {
                        let p = Point::new(mm_of_col(col), mm_of_row(row));
                        if p.distance(*center) <= r {
                            pixels[(row * width_px + col) as usize] = 255;
                        }
                    }
                }
            }
            Geometry::Polyline { points } => {
                let half = element.size_mm / 2.0;
                for seg in points.windows(2) {
                    let x0 = seg[0].x.min(seg[1].x) - half;
                    let x1 = seg[0].x.max(seg[1].x) + half;
                    let y0 = seg[0].y.min(seg[1].y) - half;
                    let y1 = seg[0].y.max(seg[1].y) + half;
                    let (c0, c1) = col_range(x0, x1);
                    let (r0, r1) = row_range(y0, y1);
                    for row in r0..r1 {
                        for col in c0..c1 {
                            let p = Point::new(mm_of_col(col), mm_of_row(row));
                            let (d, _) = point_segment_distance(p, seg[0], seg[1]);
                            if d <= half {
                                pixels[(row * width_px + col) as usize] = 255;
                            }
                        }
                    }
                }
            }
        }
    }

    Ok(HeightmapRaster {
        width_px,
        height_px,
        dpi,
        pixels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorwheel::Hue;
    use crate::geom::Region;
    use crate::pattern::{synthesize_swatch, LegibilityConstraints, SizeScale};

    fn yellow_40() -> PatternSpec {
        synthesize_swatch(
            &Hue::Yellow.mix(),
            Region::rect(40.0, 40.0),
            &SizeScale::default(),
            &LegibilityConstraints::default(),
        )
        .unwrap()
    }

    #[test]
    fn pixel_dimensions_round_up() {
        let raster = to_heightmap(&yellow_40(), 300).unwrap();
        assert_eq!(raster.width_px, 473);
        assert_eq!(raster.height_px, 473);
    }

    #[test]
    fn dpi_bounds_are_enforced() {
        let spec = yellow_40();
        assert!(matches!(to_heightmap(&spec, 50), Err(Error::DpiOutOfRange(50))));
        assert!(matches!(to_heightmap(&spec, 2400), Err(Error::DpiOutOfRange(2400))));
        assert!(to_heightmap(&spec, 100).is_ok());
        assert!(to_heightmap(&spec, 1200).is_ok());
    }

    #[test]
    fn output_is_binary_valued() {
        let raster = to_heightmap(&yellow_40(), 150).unwrap();
        assert!(raster.pixels.iter().all(|&p| p == 0 || p == 255));
        assert!(raster.pixels.iter().any(|&p| p == 255));
    }

    #[test]
    fn pgm_header_matches_dimensions() {
        let raster = to_heightmap(&yellow_40(), 150).unwrap();
        let bytes = raster.to_pgm_bytes();
        assert!(bytes.starts_with(b"P5\n"));
        let header = String::from_utf8_lossy(&bytes[..64]);
        assert!(header.contains("237 237"), "{header}");
        assert_eq!(raster.pixels.len(), 237 * 237);
    }

    #[test]
    fn raster_is_reproducible() {
        let spec = yellow_40();
        assert_eq!(
            to_heightmap(&spec, 300).unwrap().to_pgm_bytes(),
            to_heightmap(&spec, 300).unwrap().to_pgm_bytes()
        );
    }
}
