//! Inverts the tactile encoding: classifies elements by shape alone,
//! recovers the pigment mix from element sizes, and checks patterns against
//! the legibility floors.
//!
//! Classification uses only rotation- and translation-invariant quantities
//! (closedness, curvature sign changes, deviation from the end-to-end
//! chord), so a pattern reads the same from any direction.

use serde::{Deserialize, Serialize};

use crate::colorwheel::{hue_of_mix, Hue, RybMix};
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::pattern::{
    clearance_violations, Element, Geometry, LegibilityConstraints, PatternSpec, PrimitiveKind,
    SizeScale,
};

/// Fewest elements of one kind that decode will average over.
pub const MIN_ELEMENTS_PER_KIND: usize = 3;

/// Chord-deviation bound for straight lines, as a fraction of chord length.
const STRAIGHTNESS_RATIO: f64 = 0.1;

/// Curvature sign changes needed before a polyline counts as wavy.
const MIN_WAVE_SIGN_CHANGES: usize = 2;

/// Vertex radii of a closed polyline may spread this much (relative to the
/// mean) and still count as circular.
const CIRCULARITY_SPREAD: f64 = 0.1;

/// Result of decoding a pattern back to color space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecodedMix {
    pub mix: RybMix,
    pub hue: Hue,
    pub kinds: Vec<KindStats>,
}

/// Per-primitive summary used for the mix inversion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KindStats {
    pub kind: PrimitiveKind,
    pub count: usize,
    pub mean_size_mm: f64,
    pub fraction: f64,
}

/// Classifies an element from its geometry alone.
///
/// Dots are closed circular shapes. Among open polylines, anything with two
/// or more curvature sign changes is wavy; what remains is straight when it
/// hugs its end-to-end chord. The wave test runs first: a long, gentle wave
/// can deviate less than a tenth of its chord and would otherwise pass as
/// straight.
pub fn classify_element(element: &Element) -> Result<PrimitiveKind> {
    let points = match &element.geometry {
        Geometry::Circle { .. } => return Ok(PrimitiveKind::Dot),
        Geometry::Polyline { points } => points,
    };
    if points.len() < 2 {
        return Err(Error::Unclassifiable);
    }
    let first = points[0];
    let last = *points.last().unwrap();
    let closed = points.len() >= 4 && first.distance(last) < 1e-6;
    if closed {
        return if is_circular(&points[..points.len() - 1]) {
            Ok(PrimitiveKind::Dot)
        } else {
            Err(Error::Unclassifiable)
        };
    }
    if curvature_sign_changes(points) >= MIN_WAVE_SIGN_CHANGES {
        return Ok(PrimitiveKind::WavyLine);
    }
    let chord = first.distance(last);
    if chord < 1e-9 {
        return Err(Error::Unclassifiable);
    }
    let ux = (last.x - first.x) / chord;
    let uy = (last.y - first.y) / chord;
    let deviation = points
        .iter()
        .map(|p| (ux * (p.y - first.y) - uy * (p.x - first.x)).abs())
        .fold(0.0, f64::max);
    if deviation < STRAIGHTNESS_RATIO * chord {
        Ok(PrimitiveKind::StraightLine)
    } else {
        Err(Error::Unclassifiable)
    }
}

fn is_circular(points: &[Point]) -> bool {
    if points.len() < 3 {
        return false;
    }
    let n = points.len() as f64;
    let cx = points.iter().map(|p| p.x).sum::<f64>() / n;
    let cy = points.iter().map(|p| p.y).sum::<f64>() / n;
    let center = Point::new(cx, cy);
    let radii: Vec<f64> = points.iter().map(|p| p.distance(center)).collect();
    let mean = radii.iter().sum::<f64>() / n;
    if mean < 1e-9 {
        return false;
    }
    radii.iter().all(|r| (r - mean).abs() / mean <= CIRCULARITY_SPREAD)
}

/// Counts sign flips of the discrete turn direction along a polyline.
/// Turns with |sin| below 1e-7 are treated as collinear, so a rotated
/// straight line never picks up phantom curvature from rounding.
pub fn curvature_sign_changes(points: &[Point]) -> usize {
    let mut changes = 0;
    let mut previous_sign = 0i8;
    for w in points.windows(3) {
        let (ax, ay) = (w[1].x - w[0].x, w[1].y - w[0].y);
        let (bx, by) = (w[2].x - w[1].x, w[2].y - w[1].y);
        let cross = ax * by - ay * bx;
        let len_product = (ax * ax + ay * ay).sqrt() * (bx * bx + by * by).sqrt();
        if cross.abs() <= 1e-7 * len_product {
            continue;
        }
        let sign = if cross > 0.0 { 1 } else { -1 };
        if previous_sign != 0 && sign != previous_sign {
            changes += 1;
        }
        previous_sign = sign;
    }
    changes
}

/// Recovers the pigment mix from a set of elements by inverting the linear
/// size map per present kind and normalizing across kinds. Element order,
/// position, and orientation do not matter.
pub fn decode_elements(elements: &[Element], scale: &SizeScale) -> Result<DecodedMix> {
    let mut counts = [0usize; 3];
    let mut size_sums = [0.0f64; 3];
    for element in elements {
        let kind = classify_element(element)?;
        let slot = kind as usize;
        counts[slot] += 1;
        size_sums[slot] += element.size_mm;
    }

    let mut kinds = Vec::new();
    let mut raw = [0.0f64; 3];
    for kind in PrimitiveKind::ALL {
        let slot = kind as usize;
        if counts[slot] == 0 {
            continue;
        }
        if counts[slot] < MIN_ELEMENTS_PER_KIND {
            return Err(Error::TooFewElements {
                kind,
                count: counts[slot],
                minimum: MIN_ELEMENTS_PER_KIND,
            });
        }
        let mean = size_sums[slot] / counts[slot] as f64;
        let range = scale.range(kind);
        let fraction = ((mean - range.min_mm) / (range.max_mm - range.min_mm)).clamp(0.0, 1.0);
        raw[slot] = fraction;
        kinds.push(KindStats {
            kind,
            count: counts[slot],
            mean_size_mm: mean,
            fraction,
        });
    }
    let total: f64 = raw.iter().sum();
    if kinds.is_empty() || total <= 1e-12 {
        return Err(Error::AchromaticMix);
    }
    for stat in &mut kinds {
        stat.fraction = raw[stat.kind as usize] / total;
    }
    let fraction_of = |kind: PrimitiveKind| raw[kind as usize] / total;
    let mix = RybMix {
        r: fraction_of(PrimitiveKind::StraightLine),
        y: fraction_of(PrimitiveKind::Dot),
        b: fraction_of(PrimitiveKind::WavyLine),
    };
    let hue = hue_of_mix(&mix)?;
    Ok(DecodedMix { mix, hue, kinds })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    Width,
    Diameter,
    Gap,
    Period,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub location: Point,
    pub measured_mm: f64,
    pub limit_mm: f64,
}

/// Outcome of a legibility check. `pass` holds exactly when no violations
/// were found.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LegibilityReport {
    pub violations: Vec<Violation>,
    pub pass: bool,
}

impl LegibilityReport {
    fn new(violations: Vec<Violation>) -> Self {
        let pass = violations.is_empty();
        LegibilityReport { violations, pass }
    }
}

/// Checks every element size against its floor, every pairwise gap against
/// the clearance floor, and every layer period against the period floor.
/// Violations are data, not errors; fabrication gates read `pass`.
pub fn validate_legibility(spec: &PatternSpec, constraints: &LegibilityConstraints) -> LegibilityReport {
    let mut violations = Vec::new();
    for layer in &spec.layers {
        if layer.period_mm < constraints.min_period_mm {
            violations.push(Violation {
                kind: ViolationKind::Period,
                location: spec.region.bounds().min,
                measured_mm: layer.period_mm,
                limit_mm: constraints.min_period_mm,
            });
        }
    }
    for element in &spec.elements {
        let (kind, limit) = match element.kind {
            PrimitiveKind::Dot => (ViolationKind::Diameter, constraints.min_dot_diameter_mm),
            PrimitiveKind::StraightLine | PrimitiveKind::WavyLine => {
                (ViolationKind::Width, constraints.min_line_width_mm)
            }
        };
        if element.size_mm < limit {
            violations.push(Violation {
                kind,
                location: element.center,
                measured_mm: element.size_mm,
                limit_mm: limit,
            });
        }
    }
    for hit in clearance_violations(&spec.elements, constraints.min_gap_mm, false) {
        violations.push(Violation {
            kind: ViolationKind::Gap,
            location: hit.location,
            measured_mm: hit.measured_mm,
            limit_mm: constraints.min_gap_mm,
        });
    }
    LegibilityReport::new(violations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{synthesize_swatch, WaveShape};
    use crate::geom::Region;

    fn dot(center: Point, diameter: f64) -> Element {
        Element {
            kind: PrimitiveKind::Dot,
            center,
            orientation_deg: 0.0,
            size_mm: diameter,
            wave: None,
            geometry: Geometry::Circle { center, diameter_mm: diameter },
        }
    }

    fn segment(a: Point, b: Point, width: f64) -> Element {
        Element {
            kind: PrimitiveKind::StraightLine,
            center: a.midpoint(b),
            orientation_deg: 0.0,
            size_mm: width,
            wave: None,
            geometry: Geometry::Polyline { points: vec![a, b] },
        }
    }

    fn sinusoid(length: f64, amplitude: f64, wavelength: f64, width: f64) -> Element {
        let n = (length / wavelength * 16.0).ceil() as usize;
        let points: Vec<Point> = (0..=n)
            .map(|k| {
                let x = length * k as f64 / n as f64;
                Point::new(x, amplitude * (x / wavelength * std::f64::consts::TAU).sin())
            })
            .collect();
        Element {
            kind: PrimitiveKind::WavyLine,
            center: Point::new(length / 2.0, 0.0),
            orientation_deg: 0.0,
            size_mm: width,
            wave: Some(WaveShape { amplitude_mm: amplitude, wavelength_mm: wavelength }),
            geometry: Geometry::Polyline { points },
        }
    }

    #[test]
    fn classifies_the_three_primitives() {
        assert_eq!(
            classify_element(&dot(Point::new(0.0, 0.0), 3.0)).unwrap(),
            PrimitiveKind::Dot
        );
        assert_eq!(
            classify_element(&segment(Point::new(0.0, 0.0), Point::new(13.0, 7.0), 2.0)).unwrap(),
            PrimitiveKind::StraightLine
        );
        // Discrete-curvature oracle: a sampled sinusoid flips turn direction
        // twice per wavelength, so three periods give at least six flips.
        let wave = sinusoid(30.0, 2.0, 10.0, 1.5);
        if let Geometry::Polyline { points } = &wave.geometry {
            assert!(curvature_sign_changes(points) >= 6);
        }
        assert_eq!(classify_element(&wave).unwrap(), PrimitiveKind::WavyLine);
    }

    #[test]
    fn gentle_long_wave_is_still_wavy() {
        // Deviation under a tenth of the chord, which the straightness test
        // alone would accept.
        let wave = sinusoid(100.0, 1.5, 12.0, 1.0);
        assert_eq!(classify_element(&wave).unwrap(), PrimitiveKind::WavyLine);
    }

    #[test]
    fn rotated_straight_line_stays_straight() {
        let base = segment(Point::new(0.0, 0.0), Point::new(40.0, 0.0), 2.0);
        for i in 0..16 {
            let rotated = base.rotated(22.5 * i as f64, Point::new(3.0, -7.0));
            assert_eq!(
                classify_element(&rotated).unwrap(),
                PrimitiveKind::StraightLine,
                "angle {}",
                22.5 * i as f64
            );
        }
    }

    #[test]
    fn open_square_wave_of_one_corner_is_unclassifiable() {
        let points = vec![
            Point::new(0.0, 0.0),
            Point::new(10.0, 0.0),
            Point::new(10.0, 10.0),
        ];
        let e = Element {
            kind: PrimitiveKind::StraightLine,
            center: Point::new(5.0, 5.0),
            orientation_deg: 0.0,
            size_mm: 1.0,
            wave: None,
            geometry: Geometry::Polyline { points },
        };
        assert_eq!(classify_element(&e), Err(Error::Unclassifiable));
    }

    #[test]
    fn decode_round_trips_synthesis() {
        let scale = SizeScale::default();
        let constraints = LegibilityConstraints::default();
        for hue in [Hue::Orange, Hue::BluePurple] {
            let spec =
                synthesize_swatch(&hue.mix(), Region::rect(60.0, 60.0), &scale, &constraints)
                    .unwrap();
            let decoded = decode_elements(&spec.elements, &scale).unwrap();
            assert_eq!(decoded.hue, hue);
            let want = hue.mix();
            assert!((decoded.mix.r - want.r).abs() < 1e-9);
            assert!((decoded.mix.y - want.y).abs() < 1e-9);
            assert!((decoded.mix.b - want.b).abs() < 1e-9);
        }
    }

    #[test]
    fn two_dots_are_too_few() {
        let scale = SizeScale::default();
        let elements = vec![dot(Point::new(0.0, 0.0), 3.0), dot(Point::new(10.0, 0.0), 3.0)];
        assert!(matches!(
            decode_elements(&elements, &scale),
            Err(Error::TooFewElements { count: 2, .. })
        ));
    }

    #[test]
    fn decode_ignores_order_translation_and_rotation() {
        let scale = SizeScale::default();
        let constraints = LegibilityConstraints::default();
        let spec = synthesize_swatch(
            &Hue::Green.mix(),
            Region::rect(60.0, 60.0),
            &scale,
            &constraints,
        )
        .unwrap();
        let baseline = decode_elements(&spec.elements, &scale).unwrap();

        let mut shuffled = spec.elements.clone();
        shuffled.reverse();
        shuffled.rotate_left(spec.elements.len() / 3);
        assert_eq!(decode_elements(&shuffled, &scale).unwrap(), baseline);

        let moved: Vec<Element> =
            spec.elements.iter().map(|e| e.translated(-120.0, 55.5)).collect();
        assert_eq!(decode_elements(&moved, &scale).unwrap(), baseline);

        let turned: Vec<Element> = spec
            .elements
            .iter()
            .map(|e| e.rotated(67.0, Point::new(30.0, 30.0)))
            .collect();
        let decoded = decode_elements(&turned, &scale).unwrap();
        assert_eq!(decoded.hue, baseline.hue);
        assert_eq!(decoded.mix, baseline.mix);
    }

    #[test]
    fn legibility_passes_on_synthesized_output() {
        let scale = SizeScale::default();
        let constraints = LegibilityConstraints::default();
        let spec = synthesize_swatch(
            &Hue::Purple.mix(),
            Region::rect(60.0, 60.0),
            &scale,
            &constraints,
        )
        .unwrap();
        let report = validate_legibility(&spec, &constraints);
        assert!(report.pass, "{:?}", report.violations);
    }

    #[test]
    fn legibility_flags_seeded_breaches() {
        let scale = SizeScale::default();
        let constraints = LegibilityConstraints::default();
        let base = synthesize_swatch(
            &Hue::Yellow.mix(),
            Region::rect(40.0, 40.0),
            &scale,
            &constraints,
        )
        .unwrap();

        // A 1.0 mm dot against a 1.5 mm floor.
        let mut thin_dot = base.clone();
        thin_dot.elements[0].size_mm = 1.0;
        if let Geometry::Circle { diameter_mm, .. } = &mut thin_dot.elements[0].geometry {
            *diameter_mm = 1.0;
        }
        let report = validate_legibility(&thin_dot, &constraints);
        assert!(!report.pass);
        assert!(report
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::Diameter && v.measured_mm == 1.0));

        // Two dots 1.0 mm apart against a 2.0 mm gap floor.
        let mut crowded = base.clone();
        let c = Point::new(20.0, 20.0);
        let d = Point::new(24.0, 20.0); // surfaces 4.0 - 1.5 - 1.5 = 1.0 apart
        crowded.elements = vec![dot(c, 3.0), dot(d, 3.0)];
        let report = validate_legibility(&crowded, &constraints);
        let gaps: Vec<_> = report
            .violations
            .iter()
            .filter(|v| v.kind == ViolationKind::Gap)
            .collect();
        assert_eq!(gaps.len(), 1);
        assert!((gaps[0].measured_mm - 1.0).abs() < 1e-9);

        // A layer period below the floor.
        let mut dense = base;
        dense.layers[0].period_mm = 3.0;
        let report = validate_legibility(&dense, &constraints);
        assert!(report
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::Period && v.measured_mm == 3.0));
    }
}
