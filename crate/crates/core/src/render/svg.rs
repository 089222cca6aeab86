//! SVG 1.1 output (circle/path/rect subset, millimeter user units).
//!
//! Raised features are black; light gray 0.1 mm hairlines mark cut and
//! assembly references and are not raised. The document's y axis is flipped
//! on emission so 12 o'clock appears at the top.

use std::fmt::Write;

use crate::geom::{Point, Region};
use crate::layout::{CaseLayout, KitPiece, WheelLayout};
use crate::pattern::{Element, Geometry, PatternSpec};

use super::fmt_mm;

const HAIRLINE_WIDTH: f64 = 0.1;
const HAIRLINE_COLOR: &str = "#999999";
const PIECE_MARGIN_MM: f64 = 2.0;
const OUTLINE_ARC_STEP_DEG: f64 = 2.0;

/// A complete SVG document, millimeter-sized.
#[derive(Debug, Clone, PartialEq)]
pub struct SvgDocument {
    pub width_mm: f64,
    pub height_mm: f64,
    pub xml: String,
}

impl SvgDocument {
    pub fn as_bytes(&self) -> &[u8] {
        self.xml.as_bytes()
    }
}

pub trait ToSvg {
    fn to_svg(&self) -> SvgDocument;
}

/// Maps pattern coordinates into the SVG frame: translate by the canvas
/// origin, then flip y.
struct Canvas {
    width: f64,
    height: f64,
    origin: Point,
    body: String,
}

impl Canvas {
    fn new(width: f64, height: f64, origin: Point) -> Canvas {
        Canvas {
            width,
            height,
            origin,
            body: String::new(),
        }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        (p.x - self.origin.x, self.height - (p.y - self.origin.y))
    }

    fn circle(&mut self, center: Point, radius: f64, fill: &str) {
        let (cx, cy) = self.map(center);
        let _ = writeln!(
            self.body,
            r#"<circle cx="{}" cy="{}" r="{}" fill="{}"/>"#,
            fmt_mm(cx),
            fmt_mm(cy),
            fmt_mm(radius),
            fill
        );
    }

    fn hairline_circle(&mut self, center: Point, radius: f64) {
        let (cx, cy) = self.map(center);
        let _ = writeln!(
            self.body,
            r#"<circle cx="{}" cy="{}" r="{}" fill="none" stroke="{}" stroke-width="{}"/>"#,
            fmt_mm(cx),
            fmt_mm(cy),
            fmt_mm(radius),
            HAIRLINE_COLOR,
            fmt_mm(HAIRLINE_WIDTH)
        );
    }

    fn path_data(&self, points: &[Point], close: bool) -> String {
        let mut d = String::new();
        for (i, p) in points.iter().enumerate() {
            let (x, y) = self.map(*p);
            let _ = write!(d, "{}{},{}", if i == 0 { "M" } else { " L" }, fmt_mm(x), fmt_mm(y));
        }
        if close {
            d.push_str(" Z");
        }
        d
    }

    fn stroked_path(&mut self, points: &[Point], width: f64, color: &str, close: bool) {
        let _ = writeln!(
            self.body,
            r#"<path d="{}" fill="none" stroke="{}" stroke-width="{}" stroke-linecap="round" stroke-linejoin="round"/>"#,
            self.path_data(points, close),
            color,
            fmt_mm(width)
        );
    }

    fn element(&mut self, e: &Element) {
        match &e.geometry {
            Geometry::Circle { center, diameter_mm } => {
                self.circle(*center, diameter_mm / 2.0, "black");
            }
            Geometry::Polyline { points } => {
                self.stroked_path(points, e.size_mm, "black", false);
            }
        }
    }

    fn region_outline(&mut self, region: &Region) {
        let polygon = region.boundary_polygon(OUTLINE_ARC_STEP_DEG);
        self.stroked_path(&polygon, HAIRLINE_WIDTH, HAIRLINE_COLOR, true);
    }

    fn finish(self) -> SvgDocument {
        let mut xml = String::new();
        xml.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        xml.push_str(
            "<!-- raised features: black. gray hairlines are cut/assembly references, not raised. units: millimeters. -->\n",
        );
        let _ = writeln!(
            xml,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}mm" height="{h}mm" viewBox="0 0 {w} {h}">"#,
            w = fmt_mm(self.width),
            h = fmt_mm(self.height)
        );
        let _ = writeln!(
            xml,
            r#"<rect x="0" y="0" width="{}" height="{}" fill="white"/>"#,
            fmt_mm(self.width),
            fmt_mm(self.height)
        );
        xml.push_str(&self.body);
        xml.push_str("</svg>\n");
        SvgDocument {
            width_mm: self.width,
            height_mm: self.height,
            xml,
        }
    }
}

impl ToSvg for PatternSpec {
    fn to_svg(&self) -> SvgDocument {
        let bounds = self.region.bounds();
        let mut canvas = Canvas::new(bounds.width(), bounds.height(), bounds.min);
        canvas.region_outline(&self.region);
        for e in &self.elements {
            canvas.element(e);
        }
        canvas.finish()
    }
}

impl ToSvg for WheelLayout {
    fn to_svg(&self) -> SvgDocument {
        let side = 2.0 * self.outer_radius_mm;
        let mut canvas = Canvas::new(side, side, Point::new(0.0, 0.0));
        let center = self.center();
        canvas.hairline_circle(center, self.outer_radius_mm);
        canvas.hairline_circle(center, self.inner_radius_mm);
        for sector in &self.sectors {
            let a = sector.start_angle_deg.to_radians();
            let inner = Point::new(
                center.x + self.inner_radius_mm * a.cos(),
                center.y + self.inner_radius_mm * a.sin(),
            );
            let outer = Point::new(
                center.x + self.outer_radius_mm * a.cos(),
                center.y + self.outer_radius_mm * a.sin(),
            );
            canvas.stroked_path(&[inner, outer], HAIRLINE_WIDTH, HAIRLINE_COLOR, false);
        }
        for sector in &self.sectors {
            for e in &sector.pattern.elements {
                canvas.element(e);
            }
        }
        canvas.finish()
    }
}

impl ToSvg for KitPiece {
    fn to_svg(&self) -> SvgDocument {
        let bounds = crate::geom::Bounds::of_points(&self.outline).expanded(PIECE_MARGIN_MM);
        let mut canvas = Canvas::new(bounds.width(), bounds.height(), bounds.min);
        canvas.stroked_path(&self.outline, HAIRLINE_WIDTH, HAIRLINE_COLOR, true);
        for e in &self.pattern.elements {
            canvas.element(e);
        }
        canvas.finish()
    }
}

impl ToSvg for CaseLayout {
    fn to_svg(&self) -> SvgDocument {
        let side = 2.0 * self.outer_radius_mm;
        let center = Point::new(self.outer_radius_mm, self.outer_radius_mm);
        let mut canvas = Canvas::new(side, side, Point::new(0.0, 0.0));
        canvas.hairline_circle(center, self.outer_radius_mm);
        canvas.hairline_circle(center, self.inner_radius_mm);
        for recess in &self.recesses {
            canvas.stroked_path(&recess.outline, HAIRLINE_WIDTH, HAIRLINE_COLOR, true);
        }
        canvas.finish()
    }
}
