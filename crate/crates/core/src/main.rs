//! Command-line front end: swatch/wheel/kit generation, manifest decoding
//! and validation, and session scoring.
//!
//! Exit codes: 0 success, 1 failed validation or I/O trouble, 2 unparseable
//! or malformed input, 3 achromatic input, 4 synthesis or geometry failure,
//! 5 duplicate piece in a session.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tactile_color::colorwheel::{hue_of_mix, rgb_to_hue, Hue, HueCategory, Rgb8, RybMix};
use tactile_color::decode::{decode_elements, validate_legibility};
use tactile_color::error::Error;
use tactile_color::layout::{build_kit, build_wheel, Kit, WheelLayout};
use tactile_color::pattern::{synthesize_swatch, Layer, LegibilityConstraints, PatternSpec, SizeScale};
use tactile_color::render::{read_manifest, to_heightmap, write_manifest, ToSvg};
use tactile_color::study::{score_arrangement, Arrangement, Session};
use tactile_color::Region;

#[derive(Parser)]
#[command(
    name = "tactile-color",
    version,
    about = "Tactile color patterns: encode colors as raised dot/line/wave lattices, build the 12-hue learning wheel and kit, decode patterns, and score reconstruction sessions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode a wheel hue or RGB color ("yellow", "#ff8000") as a swatch
    Hue {
        /// Hue name or #rrggbb color
        color: String,
        #[command(flatten)]
        geometry: SwatchGeometry,
        #[command(flatten)]
        output: OutputOpts,
        #[command(flatten)]
        constraints: ConstraintOpts,
    },
    /// Encode an explicit pigment mix, e.g. --mix y=0.75,r=0.25
    Swatch {
        /// Comma-separated pigment weights (r=, y=, b=); normalized to sum 1
        #[arg(long)]
        mix: String,
        #[command(flatten)]
        geometry: SwatchGeometry,
        #[command(flatten)]
        output: OutputOpts,
        #[command(flatten)]
        constraints: ConstraintOpts,
    },
    /// Generate the 12-sector learning wheel as SVG
    Wheel {
        #[command(flatten)]
        radii: RadiiOpt,
        /// Output file (default wheel.svg)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        constraints: ConstraintOpts,
    },
    /// Generate the 12 kit pieces, the case tray, and a kit index
    Kit {
        #[command(flatten)]
        radii: RadiiOpt,
        /// Output directory (default kit/)
        #[arg(long, default_value = "kit")]
        out_dir: PathBuf,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        constraints: ConstraintOpts,
    },
    /// Decode a pattern manifest back to its hue and mix
    Decode {
        manifest: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check a pattern manifest against the legibility floors
    Validate {
        manifest: PathBuf,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        constraints: ConstraintOpts,
    },
    /// Score a reconstruction session file against a reference
    Score {
        /// Session JSON with the answered arrangement
        session: PathBuf,
        /// Reference session JSON (default: the canonical wheel)
        #[arg(long)]
        reference: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct SwatchGeometry {
    /// Swatch size in mm, WIDTHxHEIGHT
    #[arg(long, default_value = "40x40")]
    size: String,
    /// Raster resolution for pgm output
    #[arg(long, default_value_t = 300)]
    dpi: u32,
}

#[derive(Args)]
struct RadiiOpt {
    /// Ring radii in mm, INNER,OUTER
    #[arg(long, default_value = "40,90")]
    radii: String,
}

#[derive(Args)]
struct OutputOpts {
    /// Output path base; the extension follows the format
    #[arg(long)]
    out: Option<PathBuf>,
    /// Directory for outputs with default names
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// Output formats (svg, pgm, manifest), comma separated
    #[arg(long, value_delimiter = ',', default_value = "svg")]
    format: Vec<OutputFormat>,
    /// Print a machine-readable JSON report instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ConstraintOpts {
    /// Minimum gap between raised elements, mm
    #[arg(long)]
    min_gap: Option<f64>,
    /// Minimum lattice period, mm
    #[arg(long)]
    min_period: Option<f64>,
    /// Minimum stroke width, mm
    #[arg(long)]
    min_line_width: Option<f64>,
    /// Minimum dot diameter, mm
    #[arg(long)]
    min_dot_diameter: Option<f64>,
}

impl ConstraintOpts {
    fn apply_over(&self, base: LegibilityConstraints) -> Result<LegibilityConstraints, Failure> {
        let constraints = LegibilityConstraints {
            min_gap_mm: self.min_gap.unwrap_or(base.min_gap_mm),
            min_period_mm: self.min_period.unwrap_or(base.min_period_mm),
            min_line_width_mm: self.min_line_width.unwrap_or(base.min_line_width_mm),
            min_dot_diameter_mm: self.min_dot_diameter.unwrap_or(base.min_dot_diameter_mm),
        };
        constraints.validate().map_err(Failure::from)?;
        Ok(constraints)
    }

    fn resolve(&self) -> Result<LegibilityConstraints, Failure> {
        self.apply_over(LegibilityConstraints::default())
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum OutputFormat {
    Svg,
    Pgm,
    Manifest,
}

impl OutputFormat {
    fn extension(self) -> &'static str {
        match self {
            OutputFormat::Svg => "svg",
            OutputFormat::Pgm => "pgm",
            OutputFormat::Manifest => "json",
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    fn io(context: &str, err: std::io::Error) -> Failure {
        Failure { code: 1, message: format!("{context}: {err}") }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::AchromaticColor { .. } | Error::AchromaticMix => 3,
            Error::RegionTooSmall { .. }
            | Error::ClearanceInfeasible { .. }
            | Error::RingTooThin { .. }
            | Error::InvalidRadii { .. }
            | Error::InvalidFraction(_)
            | Error::NotWheelMix { .. }
            | Error::DpiOutOfRange(_)
            | Error::InvalidConstraints(_) => 4,
            Error::DuplicatePiece(_) => 5,
            Error::ManifestVersionMismatch { .. }
            | Error::MalformedManifest(_)
            | Error::MalformedSession(_)
            | Error::Unclassifiable
            | Error::TooFewElements { .. }
            | Error::IncompleteReference => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Hue { color, geometry, output, constraints } => {
            let hue = parse_color(&color)?;
            cmd_swatch(hue.mix(), Some(hue), &geometry, &output, &constraints)
        }
        Command::Swatch { mix, geometry, output, constraints } => {
            let mix = parse_mix(&mix)?;
            cmd_swatch(mix, None, &geometry, &output, &constraints)
        }
        Command::Wheel { radii, out, json, constraints } => cmd_wheel(&radii, out, json, &constraints),
        Command::Kit { radii, out_dir, json, constraints } => cmd_kit(&radii, &out_dir, json, &constraints),
        Command::Decode { manifest, json } => cmd_decode(&manifest, json),
        Command::Validate { manifest, json, constraints } => cmd_validate(&manifest, json, &constraints),
        Command::Score { session, reference, json } => cmd_score(&session, reference.as_deref(), json),
    }
}

fn parse_color(input: &str) -> Result<Hue, Failure> {
    if let Ok(hue) = input.parse::<Hue>() {
        return Ok(hue);
    }
    if input.trim().starts_with('#') || input.trim().chars().all(|c| c.is_ascii_hexdigit()) {
        let rgb = Rgb8::parse_hex(input).map_err(Failure::input)?;
        return Ok(rgb_to_hue(rgb)?);
    }
    Err(Failure::input(format!(
        "unparseable color {input:?}: expected a wheel hue name or #rrggbb"
    )))
}

fn parse_mix(input: &str) -> Result<RybMix, Failure> {
    let mut weights = [None::<f64>; 3]; // r, y, b
    for part in input.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Failure::input(format!("bad mix component {part:?}, expected k=v")))?;
        let slot = match key.trim() {
            "r" => 0,
            "y" => 1,
            "b" => 2,
            other => return Err(Failure::input(format!("unknown primary {other:?}, expected r, y, or b"))),
        };
        if weights[slot].is_some() {
            return Err(Failure::input(format!("primary {:?} given twice", key.trim())));
        }
        let v: f64 = value
            .trim()
            .parse()
            .map_err(|e| Failure::input(format!("bad weight {value:?}: {e}")))?;
        weights[slot] = Some(v);
    }
    let mix = RybMix::from_weights(
        weights[0].unwrap_or(0.0),
        weights[1].unwrap_or(0.0),
        weights[2].unwrap_or(0.0),
    )?;
    Ok(mix)
}

fn parse_size(input: &str) -> Result<(f64, f64), Failure> {
    let (w, h) = input
        .split_once(['x', 'X'])
        .ok_or_else(|| Failure::input(format!("bad size {input:?}, expected WIDTHxHEIGHT")))?;
    let parse = |s: &str| -> Result<f64, Failure> {
        let v: f64 = s.trim().parse().map_err(|e| Failure::input(format!("bad size {input:?}: {e}")))?;
        if !(v.is_finite() && v > 0.0) {
            return Err(Failure::input(format!("size dimensions must be positive, got {v}")));
        }
        Ok(v)
    };
    Ok((parse(w)?, parse(h)?))
}

fn parse_radii(input: &str) -> Result<(f64, f64), Failure> {
    let (i, o) = input
        .split_once(',')
        .ok_or_else(|| Failure::input(format!("bad radii {input:?}, expected INNER,OUTER")))?;
    let parse = |s: &str| -> Result<f64, Failure> {
        s.trim().parse().map_err(|e| Failure::input(format!("bad radii {input:?}: {e}")))
    };
    Ok((parse(i)?, parse(o)?))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent).map_err(|e| Failure::io("creating output directory", e))?;
        }
    }
    fs::write(path, bytes).map_err(|e| Failure::io(&format!("writing {}", path.display()), e))
}

#[derive(Serialize)]
struct SwatchReport {
    hue: Hue,
    index: usize,
    category: HueCategory,
    clock_hour: u8,
    mix: RybMix,
    layers: Vec<Layer>,
    element_count: usize,
    files: Vec<String>,
}

fn cmd_swatch(
    mix: RybMix,
    named: Option<Hue>,
    geometry: &SwatchGeometry,
    output: &OutputOpts,
    constraints: &ConstraintOpts,
) -> Result<(), Failure> {
    let (width, height) = parse_size(&geometry.size)?;
    let constraints = constraints.resolve()?;
    let scale = SizeScale::default();
    let spec = synthesize_swatch(&mix, Region::rect(width, height), &scale, &constraints)?;
    let hue = named.unwrap_or(spec.source_hue);

    let base = match (&output.out, &output.out_dir) {
        (Some(path), _) => path.clone(),
        (None, Some(dir)) => dir.join(hue.name()),
        (None, None) => PathBuf::from(hue.name()),
    };
    let mut files = Vec::new();
    for format in &output.format {
        let path = base.with_extension(format.extension());
        let bytes = match format {
            OutputFormat::Svg => spec.to_svg().xml.into_bytes(),
            OutputFormat::Pgm => to_heightmap(&spec, geometry.dpi)?.to_pgm_bytes(),
            OutputFormat::Manifest => write_manifest(&spec).to_json_string().into_bytes(),
        };
        write_file(&path, &bytes)?;
        files.push(path.display().to_string());
    }

    let report = SwatchReport {
        hue,
        index: hue.index(),
        category: hue.category(),
        clock_hour: hue.clock_position().hour,
        mix: spec.source_mix,
        layers: spec.layers.clone(),
        element_count: spec.elements.len(),
        files,
    };
    if output.json {
        println!("{}", to_json(&report));
    } else {
        println!("hue: {} ({} o'clock)", report.hue, report.clock_hour);
        println!("mix: {}", report.mix);
        for layer in &report.layers {
            println!(
                "layer: {} size {:.2} mm, period {:.1} mm",
                layer.kind, layer.size_mm, layer.period_mm
            );
        }
        println!("elements: {}", report.element_count);
        for file in &report.files {
            println!("wrote {file}");
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct WheelReport {
    inner_radius_mm: f64,
    outer_radius_mm: f64,
    sectors: Vec<WheelSectorReport>,
    file: String,
}

#[derive(Serialize)]
struct WheelSectorReport {
    hue: Hue,
    clock_hour: u8,
    center_angle_deg: f64,
    layers: Vec<Layer>,
}

fn cmd_wheel(
    radii: &RadiiOpt,
    out: Option<PathBuf>,
    json: bool,
    constraints: &ConstraintOpts,
) -> Result<(), Failure> {
    let (inner, outer) = parse_radii(&radii.radii)?;
    let constraints = constraints.resolve()?;
    let wheel = build_wheel(inner, outer, &SizeScale::default(), &constraints)?;
    let path = out.unwrap_or_else(|| PathBuf::from("wheel.svg"));
    write_file(&path, wheel.to_svg().as_bytes())?;

    let report = WheelReport {
        inner_radius_mm: wheel.inner_radius_mm,
        outer_radius_mm: wheel.outer_radius_mm,
        sectors: wheel
            .sectors
            .iter()
            .map(|s| WheelSectorReport {
                hue: s.hue,
                clock_hour: s.hue.clock_position().hour,
                center_angle_deg: s.center_angle_deg(),
                layers: s.pattern.layers.clone(),
            })
            .collect(),
        file: path.display().to_string(),
    };
    if json {
        println!("{}", to_json(&report));
    } else {
        println!(
            "wheel: 12 sectors, radii {:.1}..{:.1} mm",
            report.inner_radius_mm, report.outer_radius_mm
        );
        for s in &report.sectors {
            println!("sector {:>2} o'clock: {}", s.clock_hour, s.hue);
        }
        println!("wrote {}", report.file);
    }
    Ok(())
}

#[derive(Serialize)]
struct KitIndex {
    version: String,
    inner_radius_mm: f64,
    outer_radius_mm: f64,
    case_file: String,
    pieces: Vec<KitIndexPiece>,
}

#[derive(Serialize)]
struct KitIndexPiece {
    hue: Hue,
    label: String,
    clock_hour: u8,
    file: String,
    mix: RybMix,
    layers: Vec<Layer>,
}

fn kit_index(kit: &Kit, wheel: &WheelLayout, files: &[String], case_file: &str) -> KitIndex {
    KitIndex {
        version: "1".to_string(),
        inner_radius_mm: wheel.inner_radius_mm,
        outer_radius_mm: wheel.outer_radius_mm,
        case_file: case_file.to_string(),
        pieces: kit
            .pieces
            .iter()
            .zip(files)
            .map(|(piece, file)| KitIndexPiece {
                hue: piece.hue,
                label: piece.label.clone(),
                clock_hour: piece.hue.clock_position().hour,
                file: file.clone(),
                mix: piece.pattern.source_mix,
                layers: piece.pattern.layers.clone(),
            })
            .collect(),
    }
}

fn cmd_kit(
    radii: &RadiiOpt,
    out_dir: &Path,
    json: bool,
    constraints: &ConstraintOpts,
) -> Result<(), Failure> {
    let (inner, outer) = parse_radii(&radii.radii)?;
    let constraints = constraints.resolve()?;
    let wheel = build_wheel(inner, outer, &SizeScale::default(), &constraints)?;
    let kit = build_kit(&wheel)?;

    let mut piece_files = Vec::new();
    for piece in &kit.pieces {
        let name = format!("piece_{:02}_{}.svg", piece.hue.index() + 1, piece.hue.name());
        write_file(&out_dir.join(&name), piece.to_svg().as_bytes())?;
        piece_files.push(name);
    }
    let case_file = "case.svg";
    write_file(&out_dir.join(case_file), kit.case.to_svg().as_bytes())?;
    let index = kit_index(&kit, &wheel, &piece_files, case_file);
    let index_json = {
        let mut s = to_json(&index);
        s.push('\n');
        s
    };
    write_file(&out_dir.join("kit_index.json"), index_json.as_bytes())?;

    if json {
        println!("{}", to_json(&index));
    } else {
        println!("kit: 12 pieces + case + index in {}", out_dir.display());
        for f in &piece_files {
            println!("wrote {}", out_dir.join(f).display());
        }
        println!("wrote {}", out_dir.join(case_file).display());
        println!("wrote {}", out_dir.join("kit_index.json").display());
    }
    Ok(())
}

fn cmd_decode(manifest: &Path, json: bool) -> Result<(), Failure> {
    let text = fs::read_to_string(manifest)
        .map_err(|e| Failure::io(&format!("reading {}", manifest.display()), e))?;
    let spec = read_manifest(&text)?;
    let decoded = decode_elements(&spec.elements, &spec.scale)?;
    if json {
        println!("{}", to_json(&decoded));
    } else {
        println!("hue: {}", decoded.hue);
        println!("mix: {}", decoded.mix);
        for stats in &decoded.kinds {
            println!(
                "{}: {} elements, mean size {:.2} mm",
                stats.kind, stats.count, stats.mean_size_mm
            );
        }
    }
    Ok(())
}

fn cmd_validate(manifest: &Path, json: bool, overrides: &ConstraintOpts) -> Result<(), Failure> {
    let text = fs::read_to_string(manifest)
        .map_err(|e| Failure::io(&format!("reading {}", manifest.display()), e))?;
    let spec = read_manifest(&text)?;
    let constraints = overrides.apply_over(spec.constraints)?;
    let report = validate_legibility(&spec, &constraints);
    if json {
        println!("{}", to_json(&report));
    } else if report.pass {
        println!("legibility: pass (0 violations)");
    } else {
        println!("legibility: FAIL ({} violations)", report.violations.len());
        for v in &report.violations {
            println!(
                "  {:?} at ({:.1}, {:.1}): measured {:.3} mm, limit {:.3} mm",
                v.kind, v.location.x, v.location.y, v.measured_mm, v.limit_mm
            );
        }
    }
    if report.pass {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: format!("{} legibility violations", report.violations.len()),
        })
    }
}

fn cmd_score(session: &Path, reference: Option<&Path>, json: bool) -> Result<(), Failure> {
    let text = fs::read_to_string(session)
        .map_err(|e| Failure::io(&format!("reading {}", session.display()), e))?;
    let session = Session::from_json_str(&text)?;
    let reference_arrangement = match reference {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::io(&format!("reading {}", path.display()), e))?;
            Session::from_json_str(&text)?.answer
        }
        None => Arrangement::canonical(),
    };
    let report =
        score_arrangement(&session.answer, &reference_arrangement)?.with_duration(session.duration_s);
    if json {
        println!("{}", to_json(&report));
    } else {
        println!("correct: {} of {} placed", report.n_correct, report.placed);
        let histogram = report
            .histogram
            .iter()
            .enumerate()
            .map(|(d, n)| format!("d{d}:{n}"))
            .collect::<Vec<_>>()
            .join(" ");
        println!("histogram: {histogram}");
        if let Some(duration) = report.duration_s {
            println!("duration: {duration} s");
        }
        if !report.confusions.is_empty() {
            println!("confusions:");
            for c in &report.confusions {
                println!(
                    "  slot {:>2}: expected {}, placed {} (distance {})",
                    c.slot, c.expected, c.placed, c.distance
                );
            }
        }
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}
