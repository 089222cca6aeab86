//! C ABI for the tactile-color library.
//!
//! Conventions:
//! - Every fallible call returns a [`TcStatus`]; results come back through
//!   out-pointers. `TC_STATUS_OK` is zero.
//! - Patterns are opaque [`TcPattern`] handles; free them with
//!   [`tc_pattern_free`].
//! - Returned strings and byte buffers are owned by the caller and must be
//!   released with [`tc_string_free`] / [`tc_bytes_free`]. Strings from
//!   [`tc_hue_name`], [`tc_version`], and [`tc_last_error_message`] are
//!   borrowed and must not be freed.
//! - [`tc_last_error_message`] describes the most recent failure on the
//!   calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use tactile_color::colorwheel::{rgb_to_hue, Hue, Rgb8, RybMix};
use tactile_color::decode::decode_elements;
use tactile_color::error::Error;
use tactile_color::pattern::{synthesize_swatch, LegibilityConstraints, PatternSpec, SizeScale};
use tactile_color::render::{read_manifest, to_heightmap, write_manifest, ToSvg};
use tactile_color::study::{score_arrangement, Arrangement, Session};
use tactile_color::Region;

/// Status codes for every fallible call. Matches the CLI exit-code classes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TcStatus {
    /// Success.
    TcStatusOk = 0,
    /// Null pointer or out-of-range argument.
    TcStatusInvalidArgument = 1,
    /// Unparseable or malformed input (manifest, session, UTF-8).
    TcStatusParseError = 2,
    /// Input carries no usable hue.
    TcStatusAchromatic = 3,
    /// Synthesis or geometry failure.
    TcStatusSynthesisError = 4,
    /// A piece appears twice in a session.
    TcStatusDuplicatePiece = 5,
}

/// Normalized red/yellow/blue pigment fractions.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TcMix {
    pub r: f64,
    pub y: f64,
    pub b: f64,
}

/// Opaque handle to a synthesized pattern.
pub struct TcPattern {
    spec: PatternSpec,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn fail(status: TcStatus, message: &str) -> TcStatus {
    set_error(message);
    status
}

fn status_of(error: &Error) -> TcStatus {
    match error {
        Error::AchromaticColor { .. } | Error::AchromaticMix => TcStatus::TcStatusAchromatic,
        Error::DuplicatePiece(_) => TcStatus::TcStatusDuplicatePiece,
        Error::RegionTooSmall { .. }
        | Error::ClearanceInfeasible { .. }
        | Error::RingTooThin { .. }
        | Error::InvalidRadii { .. }
        | Error::InvalidFraction(_)
        | Error::NotWheelMix { .. }
        | Error::DpiOutOfRange(_)
        | Error::InvalidConstraints(_) => TcStatus::TcStatusSynthesisError,
        _ => TcStatus::TcStatusParseError,
    }
}

fn fail_with(error: Error) -> TcStatus {
    let status = status_of(&error);
    set_error(&error.to_string());
    status
}

/// Version of the underlying tactile-color library, as a static string.
#[no_mangle]
pub extern "C" fn tc_version() -> *const c_char {
    const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

/// Message for the most recent failure on this thread. Borrowed; valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Number of wheel hues (always 12).
#[no_mangle]
pub extern "C" fn tc_hue_count() -> u32 {
    Hue::ALL.len() as u32
}

/// Static name of the hue at `index` (0..12 clockwise from yellow), or null.
#[no_mangle]
pub extern "C" fn tc_hue_name(index: u32) -> *const c_char {
    // Names with a trailing NUL so they can be handed out as C strings.
    const NAMES: [&str; 12] = [
        "yellow\0",
        "yellow_orange\0",
        "orange\0",
        "red_orange\0",
        "red\0",
        "red_purple\0",
        "purple\0",
        "blue_purple\0",
        "blue\0",
        "blue_green\0",
        "green\0",
        "yellow_green\0",
    ];
    match NAMES.get(index as usize) {
        Some(name) => name.as_ptr().cast(),
        None => ptr::null(),
    }
}

/// Pigment mix of the hue at `index`.
///
/// # Safety
/// `out_mix` must point to writable memory for one `TcMix`.
#[no_mangle]
pub unsafe extern "C" fn tc_hue_mix(index: u32, out_mix: *mut TcMix) -> TcStatus {
    if out_mix.is_null() {
        return fail(TcStatus::TcStatusInvalidArgument, "out_mix is null");
    }
    let Some(hue) = Hue::from_index(index as usize) else {
        return fail(TcStatus::TcStatusInvalidArgument, "hue index out of range");
    };
    let mix = hue.mix();
    *out_mix = TcMix { r: mix.r, y: mix.y, b: mix.b };
    TcStatus::TcStatusOk
}

/// Quantizes an RGB color to the nearest wheel hue index.
///
/// # Safety
/// `out_index` must point to writable memory for one `u32`.
#[no_mangle]
pub unsafe extern "C" fn tc_rgb_to_hue(r: u8, g: u8, b: u8, out_index: *mut u32) -> TcStatus {
    if out_index.is_null() {
        return fail(TcStatus::TcStatusInvalidArgument, "out_index is null");
    }
    match rgb_to_hue(Rgb8::new(r, g, b)) {
        Ok(hue) => {
            *out_index = hue.index() as u32;
            TcStatus::TcStatusOk
        }
        Err(e) => fail_with(e),
    }
}

unsafe fn synthesize_into(
    mix: RybMix,
    width_mm: f64,
    height_mm: f64,
    out: *mut *mut TcPattern,
) -> TcStatus {
    if out.is_null() {
        return fail(TcStatus::TcStatusInvalidArgument, "out is null");
    }
    *out = ptr::null_mut();
    if !(width_mm.is_finite() && width_mm > 0.0 && height_mm.is_finite() && height_mm > 0.0) {
        return fail(TcStatus::TcStatusInvalidArgument, "swatch dimensions must be positive");
    }
    match synthesize_swatch(
        &mix,
        Region::rect(width_mm, height_mm),
        &SizeScale::default(),
        &LegibilityConstraints::default(),
    ) {
        Ok(spec) => {
            *out = Box::into_raw(Box::new(TcPattern { spec }));
            TcStatus::TcStatusOk
        }
        Err(e) => fail_with(e),
    }
}

/// Synthesizes the swatch for a wheel hue on a width x height rectangle.
///
/// # Safety
/// `out` must point to writable memory for one pattern pointer. On success it
/// receives a handle that must be released with [`tc_pattern_free`].
#[no_mangle]
pub unsafe extern "C" fn tc_pattern_from_hue(
    hue_index: u32,
    width_mm: f64,
    height_mm: f64,
    out: *mut *mut TcPattern,
) -> TcStatus {
    let Some(hue) = Hue::from_index(hue_index as usize) else {
        return fail(TcStatus::TcStatusInvalidArgument, "hue index out of range");
    };
    synthesize_into(hue.mix(), width_mm, height_mm, out)
}

/// Synthesizes the swatch for an explicit mix (weights are normalized).
///
/// # Safety
/// See [`tc_pattern_from_hue`].
#[no_mangle]
pub unsafe extern "C" fn tc_pattern_from_mix(
    mix: TcMix,
    width_mm: f64,
    height_mm: f64,
    out: *mut *mut TcPattern,
) -> TcStatus {
    match RybMix::from_weights(mix.r, mix.y, mix.b) {
        Ok(mix) => synthesize_into(mix, width_mm, height_mm, out),
        Err(e) => fail_with(e),
    }
}

/// Releases a pattern handle. Null is a no-op.
///
/// # Safety
/// `pattern` must be a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tc_pattern_free(pattern: *mut TcPattern) {
    if !pattern.is_null() {
        drop(Box::from_raw(pattern));
    }
}

/// Number of raised elements in the pattern; 0 for a null handle.
///
/// # Safety
/// `pattern` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn tc_pattern_element_count(pattern: *const TcPattern) -> usize {
    match pattern.as_ref() {
        Some(p) => p.spec.elements.len(),
        None => 0,
    }
}

unsafe fn string_out(out: *mut *mut c_char, text: String) -> TcStatus {
    match CString::new(text) {
        Ok(s) => {
            *out = s.into_raw();
            TcStatus::TcStatusOk
        }
        Err(_) => fail(TcStatus::TcStatusParseError, "output contained an interior NUL"),
    }
}

/// Renders the pattern as an SVG document string.
///
/// # Safety
/// `pattern` must be a live handle; `out` receives a string to be released
/// with [`tc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tc_pattern_svg(pattern: *const TcPattern, out: *mut *mut c_char) -> TcStatus {
    let (Some(p), false) = (pattern.as_ref(), out.is_null()) else {
        return fail(TcStatus::TcStatusInvalidArgument, "null pattern or out pointer");
    };
    string_out(out, p.spec.to_svg().xml)
}

/// Serializes the pattern as a JSON manifest string.
///
/// # Safety
/// See [`tc_pattern_svg`].
#[no_mangle]
pub unsafe extern "C" fn tc_pattern_manifest(
    pattern: *const TcPattern,
    out: *mut *mut c_char,
) -> TcStatus {
    let (Some(p), false) = (pattern.as_ref(), out.is_null()) else {
        return fail(TcStatus::TcStatusInvalidArgument, "null pattern or out pointer");
    };
    string_out(out, write_manifest(&p.spec).to_json_string())
}

/// Rasterizes the pattern as binary PGM bytes at `dpi`.
///
/// # Safety
/// `pattern` must be a live handle; `out_bytes`/`out_len` receive a buffer to
/// be released with [`tc_bytes_free`].
#[no_mangle]
pub unsafe extern "C" fn tc_pattern_pgm(
    pattern: *const TcPattern,
    dpi: u32,
    out_bytes: *mut *mut u8,
    out_len: *mut usize,
) -> TcStatus {
    let (Some(p), false, false) = (pattern.as_ref(), out_bytes.is_null(), out_len.is_null()) else {
        return fail(TcStatus::TcStatusInvalidArgument, "null pattern or out pointer");
    };
    match to_heightmap(&p.spec, dpi) {
        Ok(raster) => {
            let bytes = raster.to_pgm_bytes().into_boxed_slice();
            *out_len = bytes.len();
            *out_bytes = Box::into_raw(bytes).cast();
            TcStatus::TcStatusOk
        }
        Err(e) => fail_with(e),
    }
}

/// Decodes the pattern back to its hue index and mix.
///
/// # Safety
/// `pattern` must be a live handle; `out_hue_index` and `out_mix` must be
/// writable or null (null outputs are skipped).
#[no_mangle]
pub unsafe extern "C" fn tc_pattern_decode(
    pattern: *const TcPattern,
    out_hue_index: *mut u32,
    out_mix: *mut TcMix,
) -> TcStatus {
    let Some(p) = pattern.as_ref() else {
        return fail(TcStatus::TcStatusInvalidArgument, "null pattern");
    };
    match decode_elements(&p.spec.elements, &p.spec.scale) {
        Ok(decoded) => {
            if !out_hue_index.is_null() {
                *out_hue_index = decoded.hue.index() as u32;
            }
            if !out_mix.is_null() {
                *out_mix = TcMix {
                    r: decoded.mix.r,
                    y: decoded.mix.y,
                    b: decoded.mix.b,
                };
            }
            TcStatus::TcStatusOk
        }
        Err(e) => fail_with(e),
    }
}

/// Parses a manifest JSON string and decodes it to a hue index and mix.
///
/// # Safety
/// `manifest_json` must be a NUL-terminated UTF-8 string; outputs as in
/// [`tc_pattern_decode`].
#[no_mangle]
pub unsafe extern "C" fn tc_manifest_decode(
    manifest_json: *const c_char,
    out_hue_index: *mut u32,
    out_mix: *mut TcMix,
) -> TcStatus {
    if manifest_json.is_null() {
        return fail(TcStatus::TcStatusInvalidArgument, "manifest_json is null");
    }
    let Ok(text) = CStr::from_ptr(manifest_json).to_str() else {
        return fail(TcStatus::TcStatusParseError, "manifest_json is not valid UTF-8");
    };
    let spec = match read_manifest(text) {
        Ok(spec) => spec,
        Err(e) => return fail_with(e),
    };
    match decode_elements(&spec.elements, &spec.scale) {
        Ok(decoded) => {
            if !out_hue_index.is_null() {
                *out_hue_index = decoded.hue.index() as u32;
            }
            if !out_mix.is_null() {
                *out_mix = TcMix {
                    r: decoded.mix.r,
                    y: decoded.mix.y,
                    b: decoded.mix.b,
                };
            }
            TcStatus::TcStatusOk
        }
        Err(e) => fail_with(e),
    }
}

/// Scores a session JSON string against the canonical wheel.
///
/// # Safety
/// `session_json` must be a NUL-terminated UTF-8 string; `out_n_correct` and
/// `out_placed` must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn tc_score_session(
    session_json: *const c_char,
    out_n_correct: *mut u32,
    out_placed: *mut u32,
) -> TcStatus {
    if session_json.is_null() {
        return fail(TcStatus::TcStatusInvalidArgument, "session_json is null");
    }
    let Ok(text) = CStr::from_ptr(session_json).to_str() else {
        return fail(TcStatus::TcStatusParseError, "session_json is not valid UTF-8");
    };
    let session = match Session::from_json_str(text) {
        Ok(s) => s,
        Err(e) => return fail_with(e),
    };
    match score_arrangement(&session.answer, &Arrangement::canonical()) {
        Ok(report) => {
            if !out_n_correct.is_null() {
                *out_n_correct = report.n_correct as u32;
            }
            if !out_placed.is_null() {
                *out_placed = report.placed as u32;
            }
            TcStatus::TcStatusOk
        }
        Err(e) => fail_with(e),
    }
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn tc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases a byte buffer returned by this library. Null is a no-op.
///
/// # Safety
/// `ptr`/`len` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn tc_bytes_free(ptr: *mut u8, len: usize) {
    if !ptr.is_null() {
        drop(Box::from_raw(std::ptr::slice_from_raw_parts_mut(ptr, len)));
    }
}
