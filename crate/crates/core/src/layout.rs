//! Wheel and kit construction: the annular 12-sector color wheel, the
//! detachable pattern pieces, and the case tray they drop into.
//!
//! Pieces are deliberately shape-congruent — every outline is the same
//! annular sector up to a 30-degree rotation — so a piece can only be
//! identified by reading its pattern, never by its silhouette.

use serde::{Deserialize, Serialize};

use crate::colorwheel::Hue;
use crate::error::{Error, Result};
use crate::geom::{Point, Region};
use crate::pattern::{synthesize_swatch, LegibilityConstraints, PatternSpec, SizeScale};

/// Angular width of one sector.
pub const SECTOR_SPAN_DEG: f64 = 30.0;

/// Piece-to-recess assembly clearance.
pub const PIECE_CLEARANCE_MM: f64 = 0.5;

/// Arc sampling step for outline polygons.
const ARC_STEP_DEG: f64 = 2.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WheelSector {
    pub hue: Hue,
    pub start_angle_deg: f64,
    pub end_angle_deg: f64,
    pub pattern: PatternSpec,
}

impl WheelSector {
    pub fn center_angle_deg(&self) -> f64 {
        (self.start_angle_deg + SECTOR_SPAN_DEG / 2.0).rem_euclid(360.0)
    }
}

/// The assembled wheel: 12 sectors at clock positions around a shared
/// center at (outer_radius, outer_radius).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WheelLayout {
    pub inner_radius_mm: f64,
    pub outer_radius_mm: f64,
    pub sectors: Vec<WheelSector>,
}

impl WheelLayout {
    pub fn center(&self) -> Point {
        Point::new(self.outer_radius_mm, self.outer_radius_mm)
    }
}

/// One detachable piece: a sector outline inset by the assembly clearance,
/// filled with that hue's pattern.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KitPiece {
    pub hue: Hue,
    pub label: String,
    pub outline: Vec<Point>,
    pub pattern: PatternSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Recess {
    pub hue: Hue,
    pub center_angle_deg: f64,
    pub outline: Vec<Point>,
}

/// The case tray: the wheel's ring outline with one recess per sector.
/// Recesses are congruent up to rotation by multiples of 30 degrees.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseLayout {
    pub inner_radius_mm: f64,
    pub outer_radius_mm: f64,
    pub recesses: Vec<Recess>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Kit {
    pub pieces: Vec<KitPiece>,
    pub case: CaseLayout,
}

fn sector_angles(hue: Hue) -> (f64, f64) {
    let start = (hue.clock_position().angle_deg - SECTOR_SPAN_DEG / 2.0).rem_euclid(360.0);
    (start, start + SECTOR_SPAN_DEG)
}

/// Builds the 12-sector wheel. Every sector is synthesized from its hue's
/// mix with the given scale and constraints.
pub fn build_wheel(
    inner_radius_mm: f64,
    outer_radius_mm: f64,
    scale: &SizeScale,
    constraints: &LegibilityConstraints,
) -> Result<WheelLayout> {
    if !(outer_radius_mm > inner_radius_mm && inner_radius_mm > 0.0) {
        return Err(Error::InvalidRadii {
            inner_mm: inner_radius_mm,
            outer_mm: outer_radius_mm,
        });
    }
    let thickness = outer_radius_mm - inner_radius_mm;
    let required = 2.0 * constraints.min_period_mm;
    if thickness < required {
        return Err(Error::RingTooThin {
            thickness_mm: thickness,
            required_mm: required,
        });
    }
    let center = Point::new(outer_radius_mm, outer_radius_mm);
    let mut sectors = Vec::with_capacity(12);
    for hue in Hue::ALL {
        let (start, end) = sector_angles(hue);
        let region = Region::AnnularSector {
            center,
            inner_radius_mm,
            outer_radius_mm,
            start_angle_deg: start,
            end_angle_deg: end,
            edge_inset_mm: 0.0,
        };
        let pattern = synthesize_swatch(&hue.mix(), region, scale, constraints).map_err(|e| {
            match e {
                Error::RegionTooSmall { .. } => Error::RingTooThin {
                    thickness_mm: thickness,
                    required_mm: required,
                },
                other => other,
            }
        })?;
        sectors.push(WheelSector {
            hue,
            start_angle_deg: start,
            end_angle_deg: end,
            pattern,
        });
    }
    Ok(WheelLayout {
        inner_radius_mm,
        outer_radius_mm,
        sectors,
    })
}

/// Cuts the 12 pieces and the matching case from a wheel layout.
///
/// Outlines are generated once in a canonical frame and rotated into place,
/// so congruence across pieces and recesses is exact by construction. Piece
/// patterns are re-synthesized on the inset region; their lattices stay in
/// the global frame like the wheel's.
pub fn build_kit(layout: &WheelLayout) -> Result<Kit> {
    let center = layout.center();
    let canonical_piece = canonical_outline(layout, PIECE_CLEARANCE_MM);
    let canonical_recess = canonical_outline(layout, 0.0);

    let mut pieces = Vec::with_capacity(12);
    let mut recesses = Vec::with_capacity(12);
    for sector in &layout.sectors {
        let rotate_by = sector.center_angle_deg();
        let outline: Vec<Point> = canonical_piece
            .iter()
            .map(|p| p.rotated(rotate_by, center))
            .collect();
        let region = Region::AnnularSector {
            center,
            inner_radius_mm: layout.inner_radius_mm + PIECE_CLEARANCE_MM,
            outer_radius_mm: layout.outer_radius_mm - PIECE_CLEARANCE_MM,
            start_angle_deg: sector.start_angle_deg,
            end_angle_deg: sector.end_angle_deg,
            edge_inset_mm: PIECE_CLEARANCE_MM,
        };
        let pattern = synthesize_swatch(
            &sector.hue.mix(),
            region,
            &sector.pattern.scale,
            &sector.pattern.constraints,
        )?;
        pieces.push(KitPiece {
            hue: sector.hue,
            label: sector.hue.label(),
            outline,
            pattern,
        });
        recesses.push(Recess {
            hue: sector.hue,
            center_angle_deg: rotate_by,
            outline: canonical_recess
                .iter()
                .map(|p| p.rotated(rotate_by, center))
                .collect(),
        });
    }
    Ok(Kit {
        pieces,
        case: CaseLayout {
            inner_radius_mm: layout.inner_radius_mm,
            outer_radius_mm: layout.outer_radius_mm,
            recesses,
        },
    })
}

/// Outline of a sector centered on angle zero, optionally inset for a piece.
fn canonical_outline(layout: &WheelLayout, inset: f64) -> Vec<Point> {
    let region = Region::AnnularSector {
        center: layout.center(),
        inner_radius_mm: layout.inner_radius_mm + inset,
        outer_radius_mm: layout.outer_radius_mm - inset,
        start_angle_deg: -SECTOR_SPAN_DEG / 2.0,
        end_angle_deg: SECTOR_SPAN_DEG / 2.0,
        edge_inset_mm: inset,
    };
    region.boundary_polygon(ARC_STEP_DEG)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Bounds;

    fn small_wheel() -> WheelLayout {
        build_wheel(
            40.0,
            90.0,
            &SizeScale::default(),
            &LegibilityConstraints::default(),
        )
        .unwrap()
    }

    #[test]
    fn sector_centers_sit_at_clock_angles() {
        let wheel = small_wheel();
        for sector in &wheel.sectors {
            let want = sector.hue.clock_position().angle_deg;
            assert!(
                (sector.center_angle_deg() - want).abs() < 1e-9,
                "{}: {} vs {}",
                sector.hue,
                sector.center_angle_deg(),
                want
            );
        }
    }

    #[test]
    fn sectors_partition_the_circle() {
        let wheel = small_wheel();
        let mut starts: Vec<f64> = wheel.sectors.iter().map(|s| s.start_angle_deg).collect();
        starts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (i, w) in starts.windows(2).enumerate() {
            assert!((w[1] - w[0] - SECTOR_SPAN_DEG).abs() < 1e-9, "gap after {i}");
        }
        let total: f64 = wheel
            .sectors
            .iter()
            .map(|s| s.end_angle_deg - s.start_angle_deg)
            .sum();
        assert!((total - 360.0).abs() < 1e-9);
    }

    #[test]
    fn hue_order_runs_clockwise_from_yellow() {
        let wheel = small_wheel();
        for (i, sector) in wheel.sectors.iter().enumerate() {
            assert_eq!(sector.hue.index(), i);
        }
        // Clockwise means each next hue sits 30 degrees lower.
        for w in wheel.sectors.windows(2) {
            let step = (w[0].center_angle_deg() - w[1].center_angle_deg()).rem_euclid(360.0);
            assert!((step - 30.0).abs() < 1e-9);
        }
    }

    #[test]
    fn thin_ring_is_rejected() {
        let result = build_wheel(
            40.0,
            41.0,
            &SizeScale::default(),
            &LegibilityConstraints::default(),
        );
        assert!(matches!(result, Err(Error::RingTooThin { .. })), "{result:?}");
    }

    #[test]
    fn bad_radii_are_rejected() {
        let scale = SizeScale::default();
        let c = LegibilityConstraints::default();
        assert!(matches!(
            build_wheel(90.0, 40.0, &scale, &c),
            Err(Error::InvalidRadii { .. })
        ));
        assert!(matches!(
            build_wheel(0.0, 90.0, &scale, &c),
            Err(Error::InvalidRadii { .. })
        ));
    }

    #[test]
    fn kit_has_twelve_of_each() {
        let kit = build_kit(&small_wheel()).unwrap();
        assert_eq!(kit.pieces.len(), 12);
        assert_eq!(kit.case.recesses.len(), 12);
        let mut hues: Vec<Hue> = kit.pieces.iter().map(|p| p.hue).collect();
        hues.sort();
        hues.dedup();
        assert_eq!(hues.len(), 12);
    }

    #[test]
    fn piece_outline_fits_inside_its_sector() {
        let wheel = small_wheel();
        let kit = build_kit(&wheel).unwrap();
        for (piece, sector) in kit.pieces.iter().zip(&wheel.sectors) {
            let region = &sector.pattern.region;
            for p in &piece.outline {
                assert!(
                    region.contains_disk(*p, PIECE_CLEARANCE_MM - 1e-9),
                    "{}: {:?}",
                    piece.hue,
                    p
                );
            }
        }
    }

    #[test]
    fn recesses_are_congruent_up_to_rotation() {
        let wheel = small_wheel();
        let kit = build_kit(&wheel).unwrap();
        let center = wheel.center();
        let reference = &kit.case.recesses[0];
        for recess in &kit.case.recesses[1..] {
            let back = recess.center_angle_deg - reference.center_angle_deg;
            assert_eq!(recess.outline.len(), reference.outline.len());
            for (p, q) in recess.outline.iter().zip(&reference.outline) {
                let aligned = p.rotated(-back, center);
                assert!(aligned.distance(*q) < 0.01, "{}", recess.hue);
            }
        }
    }

    #[test]
    fn piece_patterns_stay_inside_their_outline_region() {
        let kit = build_kit(&small_wheel()).unwrap();
        for piece in &kit.pieces {
            for e in &piece.pattern.elements {
                let b = e.bounds();
                let rb = piece.pattern.region.bounds();
                let expanded = Bounds {
                    min: Point::new(rb.min.x - 1e-6, rb.min.y - 1e-6),
                    max: Point::new(rb.max.x + 1e-6, rb.max.y + 1e-6),
                };
                assert!(b.min.x >= expanded.min.x && b.max.x <= expanded.max.x);
                assert!(b.min.y >= expanded.min.y && b.max.y <= expanded.max.y);
            }
        }
    }
}
