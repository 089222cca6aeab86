//! The 12-hue red/yellow/blue pigment wheel: the fixed mix table, clock-face
//! geometry, and quantization of arbitrary colors onto the wheel.
//!
//! The ring runs clockwise from yellow at 12 o'clock, with red at 4 and blue
//! at 8. Secondaries sit midway between their primaries as equal mixes;
//! tertiaries sit between a primary and a secondary as a 3:1 mix toward the
//! named primary (the standard wheel construction — blending the primary with
//! the adjacent secondary in equal parts).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the 12 wheel hues, ordered clockwise from yellow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Hue {
    Yellow,
    YellowOrange,
    Orange,
    RedOrange,
    Red,
    RedPurple,
    Purple,
    BluePurple,
    Blue,
    BlueGreen,
    Green,
    YellowGreen,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HueCategory {
    Primary,
    Secondary,
    Tertiary,
}

/// Position on the clock-face ring. Angles use the math convention
/// (0 degrees at 3 o'clock, counterclockwise positive), so 12 o'clock is 90.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClockPosition {
    pub hour: u8,
    pub angle_deg: f64,
}

impl Hue {
    pub const ALL: [Hue; 12] = [
        Hue::Yellow,
        Hue::YellowOrange,
        Hue::Orange,
        Hue::RedOrange,
        Hue::Red,
        Hue::RedPurple,
        Hue::Purple,
        Hue::BluePurple,
        Hue::Blue,
        Hue::BlueGreen,
        Hue::Green,
        Hue::YellowGreen,
    ];

    /// Wheel index, 0..12 clockwise from yellow.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<Hue> {
        Hue::ALL.get(index).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            Hue::Yellow => "yellow",
            Hue::YellowOrange => "yellow_orange",
            Hue::Orange => "orange",
            Hue::RedOrange => "red_orange",
            Hue::Red => "red",
            Hue::RedPurple => "red_purple",
            Hue::Purple => "purple",
            Hue::BluePurple => "blue_purple",
            Hue::Blue => "blue",
            Hue::BlueGreen => "blue_green",
            Hue::Green => "green",
            Hue::YellowGreen => "yellow_green",
        }
    }

    /// Human label for piece engraving and reports ("yellow orange").
    pub fn label(self) -> String {
        self.name().replace('_', " ")
    }

    pub fn category(self) -> HueCategory {
        match self.index() % 4 {
            0 => HueCategory::Primary,
            2 => HueCategory::Secondary,
            _ => HueCategory::Tertiary,
        }
    }

    /// The fixed pigment mix for this hue: primaries are pure, secondaries
    /// half-and-half, tertiaries 3:1 toward the named primary.
    pub fn mix(self) -> RybMix {
        match self {
            Hue::Yellow => RybMix { r: 0.0, y: 1.0, b: 0.0 },
            Hue::YellowOrange => RybMix { r: 0.25, y: 0.75, b: 0.0 },
            Hue::Orange => RybMix { r: 0.5, y: 0.5, b: 0.0 },
            Hue::RedOrange => RybMix { r: 0.75, y: 0.25, b: 0.0 },
            Hue::Red => RybMix { r: 1.0, y: 0.0, b: 0.0 },
            Hue::RedPurple => RybMix { r: 0.75, y: 0.0, b: 0.25 },
            Hue::Purple => RybMix { r: 0.5, y: 0.0, b: 0.5 },
            Hue::BluePurple => RybMix { r: 0.25, y: 0.0, b: 0.75 },
            Hue::Blue => RybMix { r: 0.0, y: 0.0, b: 1.0 },
            Hue::BlueGreen => RybMix { r: 0.0, y: 0.25, b: 0.75 },
            Hue::Green => RybMix { r: 0.0, y: 0.5, b: 0.5 },
            Hue::YellowGreen => RybMix { r: 0.0, y: 0.75, b: 0.25 },
        }
    }

    /// Clock-face position: yellow reads 12, every other hue reads its index.
    pub fn clock_position(self) -> ClockPosition {
        let hour = if self.index() == 0 { 12 } else { self.index() as u8 };
        let angle_deg = (90.0 - 30.0 * f64::from(hour % 12)).rem_euclid(360.0);
        ClockPosition { hour, angle_deg }
    }

    /// Reference RGB for display and quantization, blended from the pigment
    /// anchor colors. Deterministic, not perceptually tuned.
    pub fn canonical_rgb(self) -> Rgb8 {
        ryb_to_rgb(&self.mix())
    }
}

impl fmt::Display for Hue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Hue {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Hue, String> {
        let needle = s.trim().to_ascii_lowercase().replace([' ', '-'], "_");
        Hue::ALL
            .iter()
            .copied()
            .find(|h| h.name() == needle)
            .ok_or_else(|| format!("unknown hue name {s:?}"))
    }
}

/// Normalized red/yellow/blue pigment fractions. Chromatic mixes sum to 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RybMix {
    pub r: f64,
    pub y: f64,
    pub b: f64,
}

impl RybMix {
    pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

    /// Builds a mix, requiring nonnegative components summing to 1.
    pub fn new(r: f64, y: f64, b: f64) -> Result<RybMix> {
        let sum = r + y + b;
        if r < 0.0 || y < 0.0 || b < 0.0 || (sum - 1.0).abs() > Self::NORMALIZATION_TOLERANCE {
            return Err(Error::NotWheelMix { r, y, b });
        }
        Ok(RybMix { r, y, b })
    }

    /// Scales arbitrary nonnegative weights to a normalized mix.
    pub fn from_weights(r: f64, y: f64, b: f64) -> Result<RybMix> {
        let sum = r + y + b;
        if r < 0.0 || y < 0.0 || b < 0.0 || sum <= 0.0 {
            return Err(Error::NotWheelMix { r, y, b });
        }
        Ok(RybMix {
            r: r / sum,
            y: y / sum,
            b: b / sum,
        })
    }

    pub fn component_count(&self) -> usize {
        [self.r, self.y, self.b].iter().filter(|&&v| v > 0.0).count()
    }

    /// Wheel-hue mixes combine at most two primaries.
    pub fn is_wheel_mix(&self) -> bool {
        self.component_count() <= 2
            && (self.r + self.y + self.b - 1.0).abs() <= Self::NORMALIZATION_TOLERANCE
            && self.r >= 0.0
            && self.y >= 0.0
            && self.b >= 0.0
    }

    /// All three components within 0.05 of each other; no hue applies.
    pub fn is_achromatic(&self) -> bool {
        let hi = self.r.max(self.y).max(self.b);
        let lo = self.r.min(self.y).min(self.b);
        hi - lo <= 0.05
    }

    fn distance2(&self, other: &RybMix) -> f64 {
        (self.r - other.r).powi(2) + (self.y - other.y).powi(2) + (self.b - other.b).powi(2)
    }
}

impl fmt::Display for RybMix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y:{:.2} r:{:.2} b:{:.2}", self.y, self.r, self.b)
    }
}

/// The wheel hue whose table mix is nearest (Euclidean) to `mix`.
/// Ties break toward the lowest index.
pub fn hue_of_mix(mix: &RybMix) -> Result<Hue> {
    if mix.is_achromatic() {
        return Err(Error::AchromaticMix);
    }
    let mut best = Hue::Yellow;
    let mut best_d = f64::INFINITY;
    for hue in Hue::ALL {
        let d = mix.distance2(&hue.mix());
        if d < best_d {
            best_d = d;
            best = hue;
        }
    }
    Ok(best)
}

/// 8-bit RGB input color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rgb8 {
    pub r: u8,
    pub g: u8,
    pub b: u8,
}

impl Rgb8 {
    pub const fn new(r: u8, g: u8, b: u8) -> Rgb8 {
        Rgb8 { r, g, b }
    }

    /// Parses "#rrggbb" or "rrggbb".
    pub fn parse_hex(s: &str) -> std::result::Result<Rgb8, String> {
        let hex = s.trim().trim_start_matches('#');
        if hex.len() != 6 || !hex.chars().all(|c| c.is_ascii_hexdigit()) {
            return Err(format!("expected #rrggbb, got {s:?}"));
        }
        let v = u32::from_str_radix(hex, 16).map_err(|e| e.to_string())?;
        Ok(Rgb8::new((v >> 16) as u8, (v >> 8) as u8, v as u8))
    }

    /// Spread between the largest and smallest component.
    pub fn saturation(&self) -> u8 {
        let hi = self.r.max(self.g).max(self.b);
        let lo = self.r.min(self.g).min(self.b);
        hi - lo
    }

    pub fn hex(&self) -> String {
        format!("#{:02x}{:02x}{:02x}", self.r, self.g, self.b)
    }
}

impl fmt::Display for Rgb8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex())
    }
}

/// Pigment anchor colors: the RGB values of the pure primaries. Mixed hues
/// blend these linearly, matching a subtractive-style cube interpolation
/// restricted to normalized mixes.
const ANCHOR_RED: [f64; 3] = [254.0, 39.0, 18.0];
const ANCHOR_YELLOW: [f64; 3] = [255.0, 255.0, 0.0];
const ANCHOR_BLUE: [f64; 3] = [2.0, 71.0, 254.0];

/// Blends the pigment anchors by the mix fractions and rounds to 8 bits.
pub fn ryb_to_rgb(mix: &RybMix) -> Rgb8 {
    let channel = |i: usize| -> u8 {
        let v = mix.r * ANCHOR_RED[i] + mix.y * ANCHOR_YELLOW[i] + mix.b * ANCHOR_BLUE[i];
        v.round().clamp(0.0, 255.0) as u8
    };
    Rgb8::new(channel(0), channel(1), channel(2))
}

/// Minimum saturation (max - min component) for a color to carry a hue.
pub const MIN_SATURATION: u8 = 16;

/// Quantizes an RGB color to the nearest wheel hue. Candidates and the input
/// are scaled to equal luma (component sum) before the distance comparison so
/// lightness does not dominate. Ties break toward the lowest index.
pub fn rgb_to_hue(color: Rgb8) -> Result<Hue> {
    let saturation = color.saturation();
    if saturation < MIN_SATURATION {
        return Err(Error::AchromaticColor {
            saturation,
            minimum: MIN_SATURATION,
        });
    }
    let normalize = |c: Rgb8| -> [f64; 3] {
        let sum = f64::from(c.r) + f64::from(c.g) + f64::from(c.b);
        [
            f64::from(c.r) / sum,
            f64::from(c.g) / sum,
            f64::from(c.b) / sum,
        ]
    };
    let target = normalize(color);
    let mut best = Hue::Yellow;
    let mut best_d = f64::INFINITY;
    for hue in Hue::ALL {
        let cand = normalize(hue.canonical_rgb());
        let d: f64 = (0..3).map(|i| (target[i] - cand[i]).powi(2)).sum();
        if d < best_d {
            best_d = d;
            best = hue;
        }
    }
    Ok(best)
}
