//! Tactile lattice synthesis: maps a pigment mix to raised-element geometry.
//!
//! Each primary is bound to one primitive — dots for yellow, straight lines
//! for red, wavy lines for blue — and the element size (dot diameter or
//! stroke width) scales linearly with that primary's fraction in the mix.
//! A mix of two primaries becomes two interleaved lattices sharing one
//! period, offset from each other by half a period in both axes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colorwheel::{hue_of_mix, Hue, RybMix};
use crate::error::{Error, Result};
use crate::geom::{point_polyline_distance, polyline_distance, Bounds, Point, Region};

/// The three tactile primitives and their fixed primary-color bindings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimitiveKind {
    Dot,
    StraightLine,
    WavyLine,
}

impl PrimitiveKind {
    pub const ALL: [PrimitiveKind; 3] = [
        PrimitiveKind::Dot,
        PrimitiveKind::StraightLine,
        PrimitiveKind::WavyLine,
    ];

    /// dot = yellow, straight line = red, wavy line = blue.
    pub fn bound_primary(self) -> Hue {
        match self {
            PrimitiveKind::Dot => Hue::Yellow,
            PrimitiveKind::StraightLine => Hue::Red,
            PrimitiveKind::WavyLine => Hue::Blue,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PrimitiveKind::Dot => "dot",
            PrimitiveKind::StraightLine => "straight_line",
            PrimitiveKind::WavyLine => "wavy_line",
        }
    }
}

impl fmt::Display for PrimitiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SizeRange {
    pub min_mm: f64,
    pub max_mm: f64,
}

/// Element size bounds per primitive: dot diameter or line stroke width.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SizeScale {
    pub dot: SizeRange,
    pub straight_line: SizeRange,
    pub wavy_line: SizeRange,
}

impl Default for SizeScale {
    fn default() -> Self {
        SizeScale {
            dot: SizeRange { min_mm: 1.5, max_mm: 4.0 },
            straight_line: SizeRange { min_mm: 1.0, max_mm: 3.0 },
            wavy_line: SizeRange { min_mm: 1.0, max_mm: 3.0 },
        }
    }
}

impl SizeScale {
    pub fn range(&self, kind: PrimitiveKind) -> SizeRange {
        match kind {
            PrimitiveKind::Dot => self.dot,
            PrimitiveKind::StraightLine => self.straight_line,
            PrimitiveKind::WavyLine => self.wavy_line,
        }
    }
}

/// Minimum feature sizes for tactile legibility. The defaults follow common
/// tactile-graphics practice: 1 mm strokes, 1.5 mm dots, 2 mm gaps.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LegibilityConstraints {
    pub min_line_width_mm: f64,
    pub min_dot_diameter_mm: f64,
    pub min_gap_mm: f64,
    pub min_period_mm: f64,
}

impl Default for LegibilityConstraints {
    fn default() -> Self {
        LegibilityConstraints {
            min_line_width_mm: 1.0,
            min_dot_diameter_mm: 1.5,
            min_gap_mm: 2.0,
            min_period_mm: 5.0,
        }
    }
}

impl LegibilityConstraints {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("min_line_width_mm", self.min_line_width_mm),
            ("min_dot_diameter_mm", self.min_dot_diameter_mm),
            ("min_gap_mm", self.min_gap_mm),
            ("min_period_mm", self.min_period_mm),
        ];
        for (name, v) in fields {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidConstraints(format!("{name} must be positive, got {v}")));
            }
        }
        if self.min_period_mm <= self.min_gap_mm {
            return Err(Error::InvalidConstraints(format!(
                "min_period_mm ({}) must exceed min_gap_mm ({})",
                self.min_period_mm, self.min_gap_mm
            )));
        }
        Ok(())
    }
}

/// Wave shape for wavy-line elements. The amplitude tracks the stroke width
/// so waves stay distinguishable from straight lines at every size.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WaveShape {
    pub amplitude_mm: f64,
    pub wavelength_mm: f64,
}

pub const WAVE_AMPLITUDE_FACTOR: f64 = 1.5;
const WAVE_SAMPLES_PER_WAVELENGTH: usize = 16;

pub fn wave_amplitude(stroke_width_mm: f64) -> f64 {
    WAVE_AMPLITUDE_FACTOR * stroke_width_mm
}

pub fn wave_length(period_mm: f64) -> f64 {
    2.0 * period_mm / 3.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Geometry {
    Circle { center: Point, diameter_mm: f64 },
    Polyline { points: Vec<Point> },
}

/// One raised element: a dot or a (possibly wavy) line fragment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Element {
    pub kind: PrimitiveKind,
    pub center: Point,
    pub orientation_deg: f64,
    /// Dot diameter or stroke width.
    pub size_mm: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wave: Option<WaveShape>,
    pub geometry: Geometry,
}

impl Element {
    /// Half-width of the raised footprint around the stored geometry:
    /// the radius for dots, half the stroke width for lines.
    pub fn surface_extent(&self) -> f64 {
        self.size_mm / 2.0
    }

    pub fn bounds(&self) -> Bounds {
        match &self.geometry {
            Geometry::Circle { center, diameter_mm } => Bounds {
                min: Point::new(center.x - diameter_mm / 2.0, center.y - diameter_mm / 2.0),
                max: Point::new(center.x + diameter_mm / 2.0, center.y + diameter_mm / 2.0),
            },
            Geometry::Polyline { points } => {
                Bounds::of_points(points).expanded(self.surface_extent())
            }
        }
    }

    /// Copy rotated counterclockwise about `about`. Wave parameters and sizes
    /// are intrinsic and unchanged.
    pub fn rotated(&self, deg: f64, about: Point) -> Element {
        let geometry = match &self.geometry {
            Geometry::Circle { center, diameter_mm } => Geometry::Circle {
                center: center.rotated(deg, about),
                diameter_mm: *diameter_mm,
            },
            Geometry::Polyline { points } => Geometry::Polyline {
                points: points.iter().map(|p| p.rotated(deg, about)).collect(),
            },
        };
        Element {
            center: self.center.rotated(deg, about),
            orientation_deg: (self.orientation_deg + deg).rem_euclid(360.0),
            geometry,
            ..self.clone()
        }
    }

    pub fn translated(&self, dx: f64, dy: f64) -> Element {
        let geometry = match &self.geometry {
            Geometry::Circle { center, diameter_mm } => Geometry::Circle {
                center: center.translated(dx, dy),
                diameter_mm: *diameter_mm,
            },
            Geometry::Polyline { points } => Geometry::Polyline {
                points: points.iter().map(|p| p.translated(dx, dy)).collect(),
            },
        };
        Element {
            center: self.center.translated(dx, dy),
            geometry,
            ..self.clone()
        }
    }
}

/// One lattice of identical elements filling the region.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Layer {
    pub kind: PrimitiveKind,
    pub size_mm: f64,
    pub period_mm: f64,
    pub phase_mm: (f64, f64),
    pub orientation_deg: f64,
}

/// A bounded region filled by one or two tactile lattices, plus the context
/// needed to understand it later: the source mix, the size scale, and the
/// legibility constraints it was built against.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatternSpec {
    pub region: Region,
    pub layers: Vec<Layer>,
    pub elements: Vec<Element>,
    pub source_mix: RybMix,
    pub source_hue: Hue,
    pub scale: SizeScale,
    pub constraints: LegibilityConstraints,
}

/// Linear size map: `s_min + f * (s_max - s_min)`. Strictly increasing, so
/// fraction order is readable as size order; the floor keeps even the
/// smallest encoded fraction tactually legible.
pub fn size_for_fraction(kind: PrimitiveKind, fraction: f64, scale: &SizeScale) -> Result<f64> {
    if !(fraction > 0.0 && fraction <= 1.0) {
        return Err(Error::InvalidFraction(fraction));
    }
    let range = scale.range(kind);
    Ok(range.min_mm + fraction * (range.max_mm - range.min_mm))
}

const PERIOD_STEP_MM: f64 = 0.5;
const PERIOD_CAP_FACTOR: f64 = 4.0;

/// Builds the lattice pattern for a wheel mix inside `region`.
///
/// One layer per nonzero primary (yellow, then red, then blue), element size
/// from `size_for_fraction`. The shared lattice period starts at the minimum
/// and grows in 0.5 mm steps until every pairwise element gap clears
/// `min_gap_mm`; if no period up to four times the minimum works, the scale
/// and constraints conflict and synthesis fails.
pub fn synthesize_swatch(
    mix: &RybMix,
    region: Region,
    scale: &SizeScale,
    constraints: &LegibilityConstraints,
) -> Result<PatternSpec> {
    constraints.validate()?;
    if !mix.is_wheel_mix() {
        return Err(Error::NotWheelMix { r: mix.r, y: mix.y, b: mix.b });
    }
    if region.area() < constraints.min_period_mm.powi(2) {
        return Err(Error::RegionTooSmall { min_period_mm: constraints.min_period_mm });
    }
    let source_hue = hue_of_mix(mix)?;

    // Layer order is fixed: yellow < red < blue.
    let mut parts: Vec<(PrimitiveKind, f64)> = Vec::new();
    for (kind, fraction) in [
        (PrimitiveKind::Dot, mix.y),
        (PrimitiveKind::StraightLine, mix.r),
        (PrimitiveKind::WavyLine, mix.b),
    ] {
        if fraction > 0.0 {
            parts.push((kind, size_for_fraction(kind, fraction, scale)?));
        }
    }

    let cap = PERIOD_CAP_FACTOR * constraints.min_period_mm;
    let mut period = constraints.min_period_mm;
    loop {
        let layers: Vec<Layer> = parts
            .iter()
            .enumerate()
            .map(|(i, &(kind, size_mm))| Layer {
                kind,
                size_mm,
                period_mm: period,
                phase_mm: if i == 0 { (0.0, 0.0) } else { (period / 2.0, period / 2.0) },
                orientation_deg: 0.0,
            })
            .collect();
        let elements = expand_layers(&region, &layers, scale);
        for layer in &layers {
            if !elements.iter().any(|e| e.kind == layer.kind) {
                return Err(Error::RegionTooSmall { min_period_mm: constraints.min_period_mm });
            }
        }
        if clearance_violations(&elements, constraints.min_gap_mm, true).is_empty() {
            return Ok(PatternSpec {
                region,
                layers,
                elements,
                source_mix: *mix,
                source_hue,
                scale: *scale,
                constraints: *constraints,
            });
        }
        period += PERIOD_STEP_MM;
        if period > cap + 1e-9 {
            return Err(Error::ClearanceInfeasible {
                max_period_mm: cap,
                min_gap_mm: constraints.min_gap_mm,
            });
        }
    }
}

/// Re-expands a spec's layers into its element list. Same spec, same list.
pub fn elements_of(spec: &PatternSpec) -> Vec<Element> {
    expand_layers(&spec.region, &spec.layers, &spec.scale)
}

/// Deterministic lattice expansion with clipping.
///
/// Grid anchor: `floor(span / period)` cells per axis, centered in the
/// region's bounding box, shifted by the layer phase. Dots that would cross
/// the region border are dropped whole; line rows are clipped to the region
/// inset by the stroke half-width (plus the wave envelope for wavy rows) and
/// fragments shorter than the kind's minimum size are dropped. Wavy
/// fragments must also cover at least one full wavelength, otherwise the
/// wave shape is not recognizable by touch.
pub(crate) fn expand_layers(region: &Region, layers: &[Layer], scale: &SizeScale) -> Vec<Element> {
    let bounds = region.bounds();
    let mut elements = Vec::new();
    for layer in layers {
        let period = layer.period_mm;
        let n_x = (bounds.width() / period).floor() as i64;
        let n_y = (bounds.height() / period).floor() as i64;
        if n_x < 1 || n_y < 1 {
            continue;
        }
        let off_x = bounds.min.x + (bounds.width() - (n_x - 1) as f64 * period) / 2.0 + layer.phase_mm.0;
        let off_y = bounds.min.y + (bounds.height() - (n_y - 1) as f64 * period) / 2.0 + layer.phase_mm.1;
        let min_len = scale.range(layer.kind).min_mm;
        match layer.kind {
            PrimitiveKind::Dot => {
                let radius = layer.size_mm / 2.0;
                for j in -1..=n_y {
                    for i in -1..=n_x {
                        let c = Point::new(off_x + i as f64 * period, off_y + j as f64 * period);
                        if region.contains_disk(c, radius) {
                            elements.push(Element {
                                kind: PrimitiveKind::Dot,
                                center: c,
                                orientation_deg: layer.orientation_deg,
                                size_mm: layer.size_mm,
                                wave: None,
                                geometry: Geometry::Circle {
                                    center: c,
                                    diameter_mm: layer.size_mm,
                                },
                            });
                        }
                    }
                }
            }
            PrimitiveKind::StraightLine => {
                let inset = layer.size_mm / 2.0;
                for j in -1..=n_y {
                    let y = off_y + j as f64 * period;
                    let a = Point::new(bounds.min.x, y);
                    let b = Point::new(bounds.max.x, y);
                    for (p, q) in region.clip_segment(a, b, inset) {
                        if p.distance(q) < min_len {
                            continue;
                        }
                        elements.push(Element {
                            kind: PrimitiveKind::StraightLine,
                            center: p.midpoint(q),
                            orientation_deg: layer.orientation_deg,
                            size_mm: layer.size_mm,
                            wave: None,
                            geometry: Geometry::Polyline { points: vec![p, q] },
                        });
                    }
                }
            }
            PrimitiveKind::WavyLine => {
                let amplitude = wave_amplitude(layer.size_mm);
                let wavelength = wave_length(period);
                let inset = layer.size_mm / 2.0 + amplitude;
                let step = wavelength / WAVE_SAMPLES_PER_WAVELENGTH as f64;
                for j in -1..=n_y {
                    let y = off_y + j as f64 * period;
                    let a = Point::new(bounds.min.x, y);
                    let b = Point::new(bounds.max.x, y);
                    for (p, q) in region.clip_segment(a, b, inset) {
                        let len = q.x - p.x;
                        if len < min_len.max(wavelength) {
                            continue;
                        }
                        let n = (len / step).ceil() as usize;
                        let points: Vec<Point> = (0..=n)
                            .map(|k| {
                                let x = if k == n { q.x } else { p.x + k as f64 * step };
                                let u = (x - off_x) / wavelength * std::f64::consts::TAU;
                                Point::new(x, y + amplitude * u.sin())
                            })
                            .collect();
                        elements.push(Element {
                            kind: PrimitiveKind::WavyLine,
                            center: p.midpoint(q),
                            orientation_deg: layer.orientation_deg,
                            size_mm: layer.size_mm,
                            wave: Some(WaveShape {
                                amplitude_mm: amplitude,
                                wavelength_mm: wavelength,
                            }),
                            geometry: Geometry::Polyline { points },
                        });
                    }
                }
            }
        }
    }
    elements
}

/// A pair of elements closer than the clearance floor.
#[derive(Debug, Clone, PartialEq)]
pub struct GapViolation {
    pub first: usize,
    pub second: usize,
    pub measured_mm: f64,
    pub location: Point,
}

/// Surface-to-surface distance between two elements: geometry distance minus
/// both footprint half-widths. Exact over segment pairs, no sampling error.
pub fn surface_distance(a: &Element, b: &Element) -> (f64, Point) {
    let (d, pa, pb) = match (&a.geometry, &b.geometry) {
        (Geometry::Circle { center: ca, .. }, Geometry::Circle { center: cb, .. }) => {
            (ca.distance(*cb), *ca, *cb)
        }
        (Geometry::Circle { center, .. }, Geometry::Polyline { points }) => {
            let (d, q) = point_polyline_distance(*center, points);
            (d, *center, q)
        }
        (Geometry::Polyline { points }, Geometry::Circle { center, .. }) => {
            let (d, q) = point_polyline_distance(*center, points);
            (d, q, *center)
        }
        (Geometry::Polyline { points: pa }, Geometry::Polyline { points: pb }) => {
            polyline_distance(pa, pb)
        }
    };
    (
        d - a.surface_extent() - b.surface_extent(),
        pa.midpoint(pb),
    )
}

/// Scans all element pairs for gaps below `min_gap_mm`. With `stop_early`
/// the scan returns on the first hit (enough for the synthesis search);
/// otherwise every violating pair is reported.
pub fn clearance_violations(
    elements: &[Element],
    min_gap_mm: f64,
    stop_early: bool,
) -> Vec<GapViolation> {
    let boxes: Vec<Bounds> = elements.iter().map(Element::bounds).collect();
    let mut hits = Vec::new();
    for i in 0..elements.len() {
        for j in (i + 1)..elements.len() {
            if boxes[i].gap_to(&boxes[j]) >= min_gap_mm {
                continue;
            }
            let (gap, location) = surface_distance(&elements[i], &elements[j]);
            if gap < min_gap_mm {
                hits.push(GapViolation {
                    first: i,
                    second: j,
                    measured_mm: gap,
                    location,
                });
                if stop_early {
                    return hits;
                }
            }
        }
    }
    hits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorwheel::Hue;

    fn defaults() -> (SizeScale, LegibilityConstraints) {
        (SizeScale::default(), LegibilityConstraints::default())
    }

    #[test]
    fn size_map_endpoints_and_midpoint() {
        let (scale, _) = defaults();
        assert_eq!(
            size_for_fraction(PrimitiveKind::StraightLine, 1.0, &scale).unwrap(),
            3.0
        );
        assert_eq!(
            size_for_fraction(PrimitiveKind::StraightLine, 0.5, &scale).unwrap(),
            2.0
        );
        assert_eq!(size_for_fraction(PrimitiveKind::Dot, 0.25, &scale).unwrap(), 2.125);
    }

    #[test]
    fn size_map_rejects_out_of_range_fractions() {
        let (scale, _) = defaults();
        for bad in [0.0, -0.5, 1.0 + 1e-9, f64::NAN] {
            assert!(
                matches!(
                    size_for_fraction(PrimitiveKind::Dot, bad, &scale),
                    Err(Error::InvalidFraction(_))
                ),
                "{bad}"
            );
        }
    }

    #[test]
    fn yellow_swatch_is_a_36_dot_grid() {
        // Grid-enumeration oracle for the 40x40 default swatch: dot diameter
        // 4.0 needs period 6.0 for a 2.0 gap, and floor(40/6) = 6 per axis.
        let (scale, constraints) = defaults();
        let spec = synthesize_swatch(
            &Hue::Yellow.mix(),
            Region::rect(40.0, 40.0),
            &scale,
            &constraints,
        )
        .unwrap();
        assert_eq!(spec.layers.len(), 1);
        assert_eq!(spec.layers[0].kind, PrimitiveKind::Dot);
        assert_eq!(spec.layers[0].size_mm, 4.0);
        assert_eq!(spec.layers[0].period_mm, 6.0);
        assert_eq!(spec.elements.len(), 36);
    }

    #[test]
    fn orange_swatch_sizes_sit_at_both_midpoints() {
        let (scale, constraints) = defaults();
        let spec = synthesize_swatch(
            &Hue::Orange.mix(),
            Region::rect(40.0, 40.0),
            &scale,
            &constraints,
        )
        .unwrap();
        assert_eq!(spec.layers.len(), 2);
        assert_eq!(spec.layers[0].kind, PrimitiveKind::Dot);
        assert_eq!(spec.layers[0].size_mm, 2.75);
        assert_eq!(spec.layers[1].kind, PrimitiveKind::StraightLine);
        assert_eq!(spec.layers[1].size_mm, 2.0);
    }

    #[test]
    fn red_orange_swatch_thins_dots_and_thickens_lines() {
        let (scale, constraints) = defaults();
        let spec = synthesize_swatch(
            &Hue::RedOrange.mix(),
            Region::rect(40.0, 40.0),
            &scale,
            &constraints,
        )
        .unwrap();
        assert_eq!(spec.layers[0].size_mm, 2.125);
        assert_eq!(spec.layers[1].size_mm, 2.5);
    }

    #[test]
    fn layer_order_is_yellow_red_blue() {
        let (scale, constraints) = defaults();
        for hue in Hue::ALL {
            let spec =
                synthesize_swatch(&hue.mix(), Region::rect(60.0, 60.0), &scale, &constraints)
                    .unwrap();
            let kinds: Vec<_> = spec.layers.iter().map(|l| l.kind).collect();
            let mut sorted = kinds.clone();
            sorted.sort();
            assert_eq!(kinds, sorted, "{hue}");
        }
    }

    #[test]
    fn expansion_is_deterministic() {
        let (scale, constraints) = defaults();
        let a = synthesize_swatch(
            &Hue::Green.mix(),
            Region::rect(60.0, 60.0),
            &scale,
            &constraints,
        )
        .unwrap();
        let b = synthesize_swatch(
            &Hue::Green.mix(),
            Region::rect(60.0, 60.0),
            &scale,
            &constraints,
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(elements_of(&a), a.elements);
    }

    #[test]
    fn elements_stay_inside_the_region() {
        let (scale, constraints) = defaults();
        for hue in [Hue::Yellow, Hue::Orange, Hue::Blue, Hue::Green] {
            let region = Region::rect(60.0, 60.0);
            let spec = synthesize_swatch(&hue.mix(), region, &scale, &constraints).unwrap();
            for e in &spec.elements {
                let b = e.bounds();
                assert!(b.min.x >= -1e-6 && b.min.y >= -1e-6, "{hue}");
                assert!(b.max.x <= 60.0 + 1e-6 && b.max.y <= 60.0 + 1e-6, "{hue}");
            }
        }
    }

    #[test]
    fn rejects_three_primary_mixes() {
        let (scale, constraints) = defaults();
        let mud = RybMix { r: 0.5, y: 0.3, b: 0.2 };
        assert!(matches!(
            synthesize_swatch(&mud, Region::rect(40.0, 40.0), &scale, &constraints),
            Err(Error::NotWheelMix { .. })
        ));
    }

    #[test]
    fn rejects_regions_below_one_period() {
        let (scale, constraints) = defaults();
        assert!(matches!(
            synthesize_swatch(&Hue::Yellow.mix(), Region::rect(4.0, 4.0), &scale, &constraints),
            Err(Error::RegionTooSmall { .. })
        ));
    }

    #[test]
    fn infeasible_constraints_are_reported() {
        let (scale, mut constraints) = defaults();
        // A gap floor close to the period cap can never be satisfied.
        constraints.min_gap_mm = 4.5;
        constraints.min_period_mm = 5.0;
        let result = synthesize_swatch(
            &Hue::Blue.mix(),
            Region::rect(25.0, 25.0),
            &scale,
            &constraints,
        );
        assert!(
            matches!(
                result,
                Err(Error::ClearanceInfeasible { .. }) | Err(Error::RegionTooSmall { .. })
            ),
            "{result:?}"
        );
    }

    #[test]
    fn synthesized_gaps_respect_the_floor() {
        let (scale, constraints) = defaults();
        for hue in Hue::ALL {
            let spec =
                synthesize_swatch(&hue.mix(), Region::rect(60.0, 60.0), &scale, &constraints)
                    .unwrap();
            let hits = clearance_violations(&spec.elements, constraints.min_gap_mm, false);
            assert!(hits.is_empty(), "{hue}: {hits:?}");
        }
    }

    #[test]
    fn wavy_fragments_cover_a_full_wavelength() {
        let (scale, constraints) = defaults();
        let spec = synthesize_swatch(
            &Hue::Blue.mix(),
            Region::rect(60.0, 60.0),
            &scale,
            &constraints,
        )
        .unwrap();
        for e in &spec.elements {
            let wave = e.wave.unwrap();
            if let Geometry::Polyline { points } = &e.geometry {
                let chord = points[0].distance(*points.last().unwrap());
                assert!(chord >= wave.wavelength_mm);
            }
        }
    }

    #[test]
    fn constraint_validation_catches_bad_values() {
        let mut c = LegibilityConstraints::default();
        c.min_gap_mm = -1.0;
        assert!(c.validate().is_err());
        let mut c = LegibilityConstraints::default();
        c.min_period_mm = c.min_gap_mm;
        assert!(c.validate().is_err());
        assert!(LegibilityConstraints::default().validate().is_ok());
    }
}
