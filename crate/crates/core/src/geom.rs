//! Planar geometry used by pattern synthesis and layout: points, bounded
//! regions (rectangles and annular sectors), segment clipping against inset
//! regions, and exact polyline/circle distance queries.
//!
//! All coordinates are millimeters in a right-handed frame (x right, y up,
//! angles counterclockwise from the +x axis).

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn distance(self, other: Point) -> f64 {
        ((self.x - other.x).powi(2) + (self.y - other.y).powi(2)).sqrt()
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new((self.x + other.x) / 2.0, (self.y + other.y) / 2.0)
    }

    /// Rotates counterclockwise by `deg` about `about`.
    pub fn rotated(self, deg: f64, about: Point) -> Point {
        let (s, c) = deg.to_radians().sin_cos();
        let dx = self.x - about.x;
        let dy = self.y - about.y;
        Point::new(about.x + c * dx - s * dy, about.y + s * dx + c * dy)
    }

    pub fn translated(self, dx: f64, dy: f64) -> Point {
        Point::new(self.x + dx, self.y + dy)
    }
}

fn cross(ax: f64, ay: f64, bx: f64, by: f64) -> f64 {
    ax * by - ay * bx
}

/// Axis-aligned bounding box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    pub min: Point,
    pub max: Point,
}

impl Bounds {
    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    pub fn expanded(&self, margin: f64) -> Bounds {
        Bounds {
            min: Point::new(self.min.x - margin, self.min.y - margin),
            max: Point::new(self.max.x + margin, self.max.y + margin),
        }
    }

    pub fn union(&self, other: &Bounds) -> Bounds {
        Bounds {
            min: Point::new(self.min.x.min(other.min.x), self.min.y.min(other.min.y)),
            max: Point::new(self.max.x.max(other.max.x), self.max.y.max(other.max.y)),
        }
    }

    pub fn of_points(pts: &[Point]) -> Bounds {
        let mut b = Bounds {
            min: Point::new(f64::INFINITY, f64::INFINITY),
            max: Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        };
        for p in pts {
            b.min.x = b.min.x.min(p.x);
            b.min.y = b.min.y.min(p.y);
            b.max.x = b.max.x.max(p.x);
            b.max.y = b.max.y.max(p.y);
        }
        b
    }

    /// Distance between two boxes; 0 when they touch or overlap.
    pub fn gap_to(&self, other: &Bounds) -> f64 {
        let dx = (self.min.x - other.max.x).max(other.min.x - self.max.x).max(0.0);
        let dy = (self.min.y - other.max.y).max(other.min.y - self.max.y).max(0.0);
        (dx * dx + dy * dy).sqrt()
    }
}

/// A bounded fill region. Rectangles sit with their lower-left corner at the
/// origin; annular sectors are described by center, radii, and a
/// counterclockwise angular span (`end > start`, span below 180 degrees).
///
/// `edge_inset_mm` pulls the two straight sector edges inward by a fixed
/// perpendicular distance. Kit pieces use it for their assembly clearance;
/// plain wheel sectors leave it at zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Region {
    Rect {
        width_mm: f64,
        height_mm: f64,
    },
    AnnularSector {
        center: Point,
        inner_radius_mm: f64,
        outer_radius_mm: f64,
        start_angle_deg: f64,
        end_angle_deg: f64,
        #[serde(default)]
        edge_inset_mm: f64,
    },
}

impl Region {
    pub fn rect(width_mm: f64, height_mm: f64) -> Region {
        Region::Rect { width_mm, height_mm }
    }

    pub fn area(&self) -> f64 {
        match self {
            Region::Rect { width_mm, height_mm } => width_mm * height_mm,
            Region::AnnularSector {
                inner_radius_mm,
                outer_radius_mm,
                start_angle_deg,
                end_angle_deg,
                ..
            } => {
                let span = (end_angle_deg - start_angle_deg).to_radians();
                0.5 * span * (outer_radius_mm.powi(2) - inner_radius_mm.powi(2))
            }
        }
    }

    pub fn bounds(&self) -> Bounds {
        match self {
            Region::Rect { width_mm, height_mm } => Bounds {
                min: Point::new(0.0, 0.0),
                max: Point::new(*width_mm, *height_mm),
            },
            Region::AnnularSector {
                center,
                inner_radius_mm,
                outer_radius_mm,
                start_angle_deg,
                end_angle_deg,
                ..
            } => {
                let mut pts = Vec::with_capacity(8);
                for &r in &[*inner_radius_mm, *outer_radius_mm] {
                    for &a in &[*start_angle_deg, *end_angle_deg] {
                        let (s, c) = a.to_radians().sin_cos();
                        pts.push(Point::new(center.x + r * c, center.y + r * s));
                    }
                }
                // Outer arc may bulge past the chord at each axis crossing.
                let mut axis = (start_angle_deg / 90.0).ceil() * 90.0;
                while axis <= *end_angle_deg {
                    let (s, c) = axis.to_radians().sin_cos();
                    pts.push(Point::new(
                        center.x + outer_radius_mm * c,
                        center.y + outer_radius_mm * s,
                    ));
                    axis += 90.0;
                }
                Bounds::of_points(&pts)
            }
        }
    }

    /// True when the disk of radius `clearance` around `p` lies fully inside.
    pub fn contains_disk(&self, p: Point, clearance: f64) -> bool {
        match self {
            Region::Rect { width_mm, height_mm } => {
                p.x >= clearance
                    && p.y >= clearance
                    && p.x <= width_mm - clearance
                    && p.y <= height_mm - clearance
            }
            Region::AnnularSector {
                center,
                inner_radius_mm,
                outer_radius_mm,
                start_angle_deg,
                end_angle_deg,
                edge_inset_mm,
            } => {
                let vx = p.x - center.x;
                let vy = p.y - center.y;
                let rho = (vx * vx + vy * vy).sqrt();
                if rho < inner_radius_mm + clearance || rho > outer_radius_mm - clearance {
                    return false;
                }
                let (s0, c0) = start_angle_deg.to_radians().sin_cos();
                let (s1, c1) = end_angle_deg.to_radians().sin_cos();
                let margin = edge_inset_mm + clearance;
                cross(c0, s0, vx, vy) >= margin && cross(vx, vy, c1, s1) >= margin
            }
        }
    }

    /// Clips segment `a`..`b` against this region shrunk inward by `inset`,
    /// returning the surviving pieces in order along the segment.
    pub fn clip_segment(&self, a: Point, b: Point, inset: f64) -> Vec<(Point, Point)> {
        let spans = match self {
            Region::Rect { width_mm, height_mm } => {
                let mut lo = 0.0f64;
                let mut hi = 1.0f64;
                let dims = [
                    (a.x, b.x - a.x, inset, width_mm - inset),
                    (a.y, b.y - a.y, inset, height_mm - inset),
                ];
                let mut ok = true;
                for (start, delta, min, max) in dims {
                    if delta.abs() < 1e-12 {
                        if start < min || start > max {
                            ok = false;
                            break;
                        }
                        continue;
                    }
                    let t0 = (min - start) / delta;
                    let t1 = (max - start) / delta;
                    lo = lo.max(t0.min(t1));
                    hi = hi.min(t0.max(t1));
                }
                if ok && lo < hi {
                    vec![(lo, hi)]
                } else {
                    vec![]
                }
            }
            Region::AnnularSector {
                center,
                inner_radius_mm,
                outer_radius_mm,
                start_angle_deg,
                end_angle_deg,
                edge_inset_mm,
            } => {
                let mut spans = vec![(0.0f64, 1.0f64)];
                spans = intersect_spans(
                    &spans,
                    &inside_disk_spans(a, b, *center, outer_radius_mm - inset),
                );
                let hole = inside_disk_spans(a, b, *center, inner_radius_mm + inset);
                spans = intersect_spans(&spans, &complement_spans(&hole));
                let margin = edge_inset_mm + inset;
                let (s0, c0) = start_angle_deg.to_radians().sin_cos();
                spans = intersect_spans(&spans, &halfplane_spans(a, b, *center, c0, s0, margin, false));
                let (s1, c1) = end_angle_deg.to_radians().sin_cos();
                spans = intersect_spans(&spans, &halfplane_spans(a, b, *center, c1, s1, margin, true));
                spans
            }
        };
        spans
            .into_iter()
            .filter(|(lo, hi)| hi - lo > 1e-12)
            .map(|(lo, hi)| (lerp_point(a, b, lo), lerp_point(a, b, hi)))
            .collect()
    }

    /// Boundary sampled as a closed polygon (last vertex joins the first).
    /// Arcs are sampled at most `arc_step_deg` apart.
    pub fn boundary_polygon(&self, arc_step_deg: f64) -> Vec<Point> {
        match self {
            Region::Rect { width_mm, height_mm } => vec![
                Point::new(0.0, 0.0),
                Point::new(*width_mm, 0.0),
                Point::new(*width_mm, *height_mm),
                Point::new(0.0, *height_mm),
            ],
            Region::AnnularSector {
                center,
                inner_radius_mm,
                outer_radius_mm,
                start_angle_deg,
                end_angle_deg,
                edge_inset_mm,
            } => {
                // The straight edges are the sector edge lines offset inward,
                // so the arc sweep shrinks by asin(inset/radius) at each end.
                let delta_out = (edge_inset_mm / outer_radius_mm).asin().to_degrees();
                let delta_in = (edge_inset_mm / inner_radius_mm).asin().to_degrees();
                let mut pts = Vec::new();
                sample_arc(
                    &mut pts,
                    *center,
                    *outer_radius_mm,
                    start_angle_deg + delta_out,
                    end_angle_deg - delta_out,
                    arc_step_deg,
                );
                sample_arc(
                    &mut pts,
                    *center,
                    *inner_radius_mm,
                    end_angle_deg - delta_in,
                    start_angle_deg + delta_in,
                    arc_step_deg,
                );
                pts
            }
        }
    }
}

fn lerp_point(a: Point, b: Point, t: f64) -> Point {
    Point::new(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t)
}

fn sample_arc(out: &mut Vec<Point>, center: Point, radius: f64, from_deg: f64, to_deg: f64, step: f64) {
    let span = to_deg - from_deg;
    let n = (span.abs() / step).ceil().max(1.0) as usize;
    for i in 0..=n {
        let a = (from_deg + span * i as f64 / n as f64).to_radians();
        out.push(Point::new(
            center.x + radius * a.cos(),
            center.y + radius * a.sin(),
        ));
    }
}

/// Parameter span(s) of segment a..b lying inside the disk |p - c| <= radius.
fn inside_disk_spans(a: Point, b: Point, c: Point, radius: f64) -> Vec<(f64, f64)> {
    if radius <= 0.0 {
        return vec![];
    }
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let fx = a.x - c.x;
    let fy = a.y - c.y;
    let qa = dx * dx + dy * dy;
    let qb = 2.0 * (fx * dx + fy * dy);
    let qc = fx * fx + fy * fy - radius * radius;
    if qa < 1e-18 {
        return if qc <= 0.0 { vec![(0.0, 1.0)] } else { vec![] };
    }
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < 0.0 {
        return vec![];
    }
    let sq = disc.sqrt();
    let t0 = ((-qb - sq) / (2.0 * qa)).max(0.0);
    let t1 = ((-qb + sq) / (2.0 * qa)).min(1.0);
    if t0 < t1 {
        vec![(t0, t1)]
    } else {
        vec![]
    }
}

/// Span(s) of a..b where the signed distance to the line through `c` with unit
/// direction (ux, uy) is at least `margin`, on the counterclockwise side
/// (`flip = false`) or the clockwise side (`flip = true`).
fn halfplane_spans(
    a: Point,
    b: Point,
    c: Point,
    ux: f64,
    uy: f64,
    margin: f64,
    flip: bool,
) -> Vec<(f64, f64)> {
    let sign = if flip { -1.0 } else { 1.0 };
    let da = sign * cross(ux, uy, a.x - c.x, a.y - c.y) - margin;
    let db = sign * cross(ux, uy, b.x - c.x, b.y - c.y) - margin;
    if da >= 0.0 && db >= 0.0 {
        vec![(0.0, 1.0)]
    } else if da < 0.0 && db < 0.0 {
        vec![]
    } else {
        let t = da / (da - db);
        if da >= 0.0 {
            vec![(0.0, t)]
        } else {
            vec![(t, 1.0)]
        }
    }
}

fn intersect_spans(xs: &[(f64, f64)], ys: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for &(xl, xh) in xs {
        for &(yl, yh) in ys {
            let lo = xl.max(yl);
            let hi = xh.min(yh);
            if lo < hi {
                out.push((lo, hi));
            }
        }
    }
    out
}

fn complement_spans(xs: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let mut cursor = 0.0;
    for &(lo, hi) in xs {
        if lo > cursor {
            out.push((cursor, lo));
        }
        cursor = cursor.max(hi);
    }
    if cursor < 1.0 {
        out.push((cursor, 1.0));
    }
    out
}

/// Distance from point `p` to segment `a`..`b`, plus the closest point.
pub fn point_segment_distance(p: Point, a: Point, b: Point) -> (f64, Point) {
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let len2 = dx * dx + dy * dy;
    let t = if len2 < 1e-18 {
        0.0
    } else {
        (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0)
    };
    let q = Point::new(a.x + t * dx, a.y + t * dy);
    (p.distance(q), q)
}

/// Minimum distance between two segments and the pair of closest points.
pub fn segment_segment_distance(a1: Point, a2: Point, b1: Point, b2: Point) -> (f64, Point, Point) {
    if segments_intersect(a1, a2, b1, b2) {
        // Any shared point will do for reporting.
        let p = a1.midpoint(a2);
        return (0.0, p, p);
    }
    let mut best = (f64::INFINITY, a1, b1);
    for (p, sa, sb, p_on_a) in [
        (a1, b1, b2, true),
        (a2, b1, b2, true),
        (b1, a1, a2, false),
        (b2, a1, a2, false),
    ] {
        let (d, q) = point_segment_distance(p, sa, sb);
        if d < best.0 {
            best = if p_on_a { (d, p, q) } else { (d, q, p) };
        }
    }
    best
}

fn segments_intersect(a1: Point, a2: Point, b1: Point, b2: Point) -> bool {
    let d1 = cross(a2.x - a1.x, a2.y - a1.y, b1.x - a1.x, b1.y - a1.y);
    let d2 = cross(a2.x - a1.x, a2.y - a1.y, b2.x - a1.x, b2.y - a1.y);
    let d3 = cross(b2.x - b1.x, b2.y - b1.y, a1.x - b1.x, a1.y - b1.y);
    let d4 = cross(b2.x - b1.x, b2.y - b1.y, a2.x - b1.x, a2.y - b1.y);
    ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
}

/// Minimum distance between two polylines (exact over segment pairs).
pub fn polyline_distance(a: &[Point], b: &[Point]) -> (f64, Point, Point) {
    let mut best = (f64::INFINITY, a[0], b[0]);
    for wa in a.windows(2) {
        for wb in b.windows(2) {
            let seg_gap = Bounds::of_points(wa).gap_to(&Bounds::of_points(wb));
            if seg_gap >= best.0 {
                continue;
            }
            let (d, pa, pb) = segment_segment_distance(wa[0], wa[1], wb[0], wb[1]);
            if d < best.0 {
                best = (d, pa, pb);
            }
        }
    }
    best
}

/// Minimum distance from a point to a polyline.
pub fn point_polyline_distance(p: Point, poly: &[Point]) -> (f64, Point) {
    let mut best = (f64::INFINITY, poly[0]);
    for w in poly.windows(2) {
        let (d, q) = point_segment_distance(p, w[0], w[1]);
        if d < best.0 {
            best = (d, q);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sector() -> Region {
        Region::AnnularSector {
            center: Point::new(0.0, 0.0),
            inner_radius_mm: 40.0,
            outer_radius_mm: 90.0,
            start_angle_deg: 75.0,
            end_angle_deg: 105.0,
            edge_inset_mm: 0.0,
        }
    }

    #[test]
    fn rect_clip_keeps_interior_piece() {
        let r = Region::rect(40.0, 40.0);
        let pieces = r.clip_segment(Point::new(-5.0, 20.0), Point::new(45.0, 20.0), 1.0);
        assert_eq!(pieces.len(), 1);
        let (a, b) = pieces[0];
        assert!((a.x - 1.0).abs() < 1e-9 && (b.x - 39.0).abs() < 1e-9);
    }

    #[test]
    fn rect_clip_outside_is_empty() {
        let r = Region::rect(40.0, 40.0);
        assert!(r.clip_segment(Point::new(0.0, 45.0), Point::new(40.0, 45.0), 0.0).is_empty());
    }

    #[test]
    fn sector_contains_its_centroid_direction() {
        let s = sector();
        assert!(s.contains_disk(Point::new(0.0, 65.0), 1.0));
        assert!(!s.contains_disk(Point::new(0.0, 39.0), 0.0));
        assert!(!s.contains_disk(Point::new(65.0, 0.0), 0.0));
    }

    #[test]
    fn sector_clip_splits_on_inner_hole() {
        // A horizontal chord through the annulus below the inner circle's top
        // pierces the hole and must come back as two pieces.
        let s = Region::AnnularSector {
            center: Point::new(0.0, 0.0),
            inner_radius_mm: 40.0,
            outer_radius_mm: 90.0,
            start_angle_deg: 20.0,
            end_angle_deg: 160.0,
            edge_inset_mm: 0.0,
        };
        let pieces = s.clip_segment(Point::new(-95.0, 20.0), Point::new(95.0, 20.0), 0.0);
        assert_eq!(pieces.len(), 2);
    }

    #[test]
    fn edge_inset_shrinks_clip() {
        let s = sector();
        let y = 70.0;
        let wide = s.clip_segment(Point::new(-90.0, y), Point::new(90.0, y), 0.0);
        let narrow = s.clip_segment(Point::new(-90.0, y), Point::new(90.0, y), 2.0);
        assert_eq!(wide.len(), 1);
        assert_eq!(narrow.len(), 1);
        let w = wide[0].0.distance(wide[0].1);
        let n = narrow[0].0.distance(narrow[0].1);
        assert!(n < w);
    }

    #[test]
    fn segment_distance_parallel() {
        let (d, _, _) = segment_segment_distance(
            Point::new(0.0, 0.0),
            Point::new(10.0, 0.0),
            Point::new(0.0, 3.0),
            Point::new(10.0, 3.0),
        );
        assert!((d - 3.0).abs() < 1e-12);
    }

    #[test]
    fn segment_distance_crossing_is_zero() {
        let (d, _, _) = segment_segment_distance(
            Point::new(-1.0, -1.0),
            Point::new(1.0, 1.0),
            Point::new(-1.0, 1.0),
            Point::new(1.0, -1.0),
        );
        assert_eq!(d, 0.0);
    }

    #[test]
    fn sector_bounds_cover_arc_bulge() {
        // Sector straddling 90 degrees: the bbox top must reach the outer radius.
        let s = sector();
        let b = s.bounds();
        assert!((b.max.y - 90.0).abs() < 1e-9);
    }
}
