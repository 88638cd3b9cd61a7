//! C ABI over `approxquasi`.
//!
//! Objects are opaque heap handles created by `aq_*_new`/`aq_*_parse` and
//! released by the matching `aq_*_free`. Every fallible call returns an
//! [`AqStatus`]; on failure `aq_last_error()` describes the problem for
//! the calling thread. No call unwinds across the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};
use std::ptr;

use approxquasi::edit::factor_coverage;
use approxquasi::hamming::{
    enhanced_cover_approx_border, enhanced_cover_exact_border, k_restricted_covers, k_restricted_seeds,
    prefix_coverage,
};
use approxquasi::lcpk::pref_k;
use approxquasi::penalty::PenaltyFile;
use approxquasi::report::{FactorCoverage, ThresholdReport};
use approxquasi::restricted::{restricted_covers_ed, restricted_seeds_ed};
use approxquasi::{Alphabet, Cost, Error, Metric, PenaltyMatrix, Text};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AqStatus {
    Ok = 0,
    NullPointer = 1,
    /// Malformed text, penalty file or UTF-8.
    InvalidInput = 2,
    /// An argument is out of range or inconsistent with another.
    InvalidArgument = 3,
    /// An exhaustive search would exceed its budget.
    BudgetExceeded = 4,
    /// The output buffer is too short; the required length was written.
    BufferTooSmall = 5,
    /// Internal error; the library state is unaffected.
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AqDistance {
    Hamming = 0,
    Levenshtein = 1,
    /// Weighted edit distance; needs a penalty handle.
    Edit = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AqVariant {
    Cover = 0,
    Seed = 1,
}

/// An encoded input string.
pub struct AqText {
    text: Text,
}

/// A validated penalty matrix, with the alphabet of its file if it was
/// parsed from one.
pub struct AqPenalty {
    alphabet: Option<Alphabet>,
    matrix: PenaltyMatrix,
}

/// k-coverage of every factor of a text.
pub struct AqCoverage {
    table: FactorCoverage,
}

/// Minimal thresholds of the distinct candidate factors.
pub struct AqThresholds {
    report: ThresholdReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> AqStatus {
    match e {
        Error::BudgetExceeded { .. } => AqStatus::BudgetExceeded,
        Error::IndexOutOfRange { .. } | Error::IndexMismatch | Error::LengthMismatch { .. } => {
            AqStatus::InvalidArgument
        }
        _ => AqStatus::InvalidInput,
    }
}

struct Fail(AqStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null() -> Fail {
    Fail(AqStatus::NullPointer, "null pointer argument".into())
}

fn invalid(msg: &str) -> Fail {
    Fail(AqStatus::InvalidArgument, msg.into())
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> AqStatus {
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AqStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            AqStatus::Panic
        }
    }
}

unsafe fn slice<'a>(data: *const u8, len: usize) -> Result<&'a [u8], Fail> {
    match (data.is_null(), len) {
        (_, 0) => Ok(&[]),
        (true, _) => Err(null()),
        (false, _) => Ok(std::slice::from_raw_parts(data, len)),
    }
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(null)
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn free<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Message of the last failed call on this thread, or NULL. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn aq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn aq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Encodes `bytes` over the alphabet of its own distinct bytes; `wildcard`
/// marks the wildcard symbol.
///
/// # Safety
/// `bytes` must point to `len` readable bytes (or be NULL with `len` 0) and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aq_text_new(bytes: *const u8, len: usize, wildcard: u8, out: *mut *mut AqText) -> AqStatus {
    guard(|| {
        let input = slice(bytes, len)?;
        let text = Alphabet::from_input(input, wildcard).encode(input)?;
        put(out, AqText { text })
    })
}

/// Encodes `bytes` over the alphabet of a parsed penalty file.
///
/// # Safety
/// As [`aq_text_new`]; `penalty` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn aq_text_new_for(
    penalty: *const AqPenalty,
    bytes: *const u8,
    len: usize,
    out: *mut *mut AqText,
) -> AqStatus {
    guard(|| {
        let p = get(penalty)?;
        let alphabet = p.alphabet.as_ref().ok_or_else(|| invalid("penalty handle has no alphabet"))?;
        let text = alphabet.encode(slice(bytes, len)?)?;
        put(out, AqText { text })
    })
}

/// Number of symbols of `text` (0 for NULL).
///
/// # Safety
/// `text` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn aq_text_len(text: *const AqText) -> usize {
    text.as_ref().map_or(0, |t| t.text.len())
}

/// Alphabet size of `text` (0 for NULL).
///
/// # Safety
/// `text` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn aq_text_sigma(text: *const AqText) -> usize {
    text.as_ref().map_or(0, |t| t.text.sigma())
}

/// # Safety
/// `text` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn aq_text_free(text: *mut AqText) {
    free(text)
}

/// Unit costs over `sigma` symbols.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aq_penalty_unit(sigma: usize, out: *mut *mut AqPenalty) -> AqStatus {
    guard(|| put(out, AqPenalty { alphabet: None, matrix: PenaltyMatrix::unit(sigma) }))
}

/// Parses a TOML penalty file (`alphabet`, `substitution`, `insertion`,
/// `deletion`) and checks the metric axioms.
///
/// # Safety
/// `source` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn aq_penalty_parse(source: *const c_char, wildcard: u8, out: *mut *mut AqPenalty) -> AqStatus {
    guard(|| {
        if source.is_null() {
            return Err(null());
        }
        let src = CStr::from_ptr(source)
            .to_str()
            .map_err(|e| Fail(AqStatus::InvalidInput, e.to_string()))?;
        let (alphabet, matrix) = PenaltyFile::parse(src)?.into_matrix(wildcard)?;
        put(out, AqPenalty { alphabet: Some(alphabet), matrix })
    })
}

/// # Safety
/// `penalty` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn aq_penalty_free(penalty: *mut AqPenalty) {
    free(penalty)
}

unsafe fn metric<'a>(distance: AqDistance, penalty: *const AqPenalty) -> Result<Metric<'a>, Fail> {
    Ok(match distance {
        AqDistance::Hamming => Metric::Hamming,
        AqDistance::Levenshtein => Metric::Levenshtein,
        AqDistance::Edit => Metric::Edit(&get(penalty)?.matrix),
    })
}

/// Hamming k-coverage of every prefix: `out[l]` for `l = 0..=n`. Needs
/// `out_len ≥ n + 1`; otherwise writes `n + 1` to `*needed` and returns
/// `BufferTooSmall`.
///
/// # Safety
/// `text` must be live; `out` must hold `out_len` entries; `needed` may be
/// NULL.
#[no_mangle]
pub unsafe extern "C" fn aq_prefix_coverage(
    text: *const AqText,
    k: u32,
    out: *mut usize,
    out_len: usize,
    needed: *mut usize,
) -> AqStatus {
    guard(|| {
        let t = &get(text)?.text;
        if !needed.is_null() {
            *needed = t.len() + 1;
        }
        if out_len < t.len() + 1 {
            return Err(Fail(AqStatus::BufferTooSmall, format!("need {} entries", t.len() + 1)));
        }
        if out.is_null() {
            return Err(null());
        }
        let cov = prefix_coverage(t, &pref_k(t, k as usize))?;
        ptr::copy_nonoverlapping(cov.as_ptr(), out, cov.len());
        Ok(())
    })
}

/// k-coverage of every factor under `distance`; `penalty` is read only for
/// `AQ_DISTANCE_EDIT`.
///
/// # Safety
/// `text` must be live, `penalty` live or NULL, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn aq_factor_coverage(
    text: *const AqText,
    distance: AqDistance,
    penalty: *const AqPenalty,
    k: i64,
    out: *mut *mut AqCoverage,
) -> AqStatus {
    guard(|| {
        let t = &get(text)?.text;
        let table = factor_coverage(t, metric(distance, penalty)?, k as Cost)?;
        put(out, AqCoverage { table })
    })
}

/// Coverage of the factor `[a, b]`.
///
/// # Safety
/// `coverage` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn aq_coverage_get(coverage: *const AqCoverage, a: usize, b: usize, out: *mut usize) -> AqStatus {
    guard(|| {
        let c = &get(coverage)?.table;
        if a > b || b >= c.text_len() {
            return Err(invalid("factor outside the text"));
        }
        if out.is_null() {
            return Err(null());
        }
        *out = c.get(a, b);
        Ok(())
    })
}

/// # Safety
/// `coverage` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn aq_coverage_free(coverage: *mut AqCoverage) {
    free(coverage)
}

/// Restricted covers or seeds. Under Hamming distance thresholds up to `k`
/// are searched; under the edit distances `k` is ignored and exact minimal
/// thresholds are reported.
///
/// # Safety
/// `text` must be live, `penalty` live or NULL, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn aq_restricted(
    text: *const AqText,
    variant: AqVariant,
    distance: AqDistance,
    penalty: *const AqPenalty,
    k: u32,
    out: *mut *mut AqThresholds,
) -> AqStatus {
    guard(|| {
        let t = &get(text)?.text;
        let report = match distance {
            AqDistance::Hamming => match variant {
                AqVariant::Cover => k_restricted_covers(t, k as usize),
                AqVariant::Seed => k_restricted_seeds(t, k as usize),
            },
            _ => {
                let unit;
                let p = match distance {
                    AqDistance::Edit => &get(penalty)?.matrix,
                    _ => {
                        unit = PenaltyMatrix::unit(t.sigma());
                        &unit
                    }
                };
                match variant {
                    AqVariant::Cover => restricted_covers_ed(t, p)?,
                    AqVariant::Seed => restricted_seeds_ed(t, p)?,
                }
            }
        };
        put(out, AqThresholds { report })
    })
}

/// Number of distinct candidate factors (0 for NULL).
///
/// # Safety
/// `report` must be NULL or live.
#[no_mangle]
pub unsafe extern "C" fn aq_thresholds_len(report: *const AqThresholds) -> usize {
    report.as_ref().map_or(0, |r| r.report.entries.len())
}

/// Entry `i`: leftmost occurrence `[start, end]` and threshold (−1 when
/// none was found).
///
/// # Safety
/// `report` must be live; the out pointers writable.
#[no_mangle]
pub unsafe extern "C" fn aq_thresholds_entry(
    report: *const AqThresholds,
    i: usize,
    start: *mut usize,
    end: *mut usize,
    threshold: *mut i64,
) -> AqStatus {
    guard(|| {
        let r = &get(report)?.report;
        let e = r.entries.get(i).ok_or_else(|| invalid("entry index out of range"))?;
        if start.is_null() || end.is_null() || threshold.is_null() {
            return Err(null());
        }
        *start = e.start();
        *end = e.end();
        *threshold = e.threshold.unwrap_or(-1);
        Ok(())
    })
}

/// Least threshold over all entries, or −1.
///
/// # Safety
/// `report` must be NULL or live.
#[no_mangle]
pub unsafe extern "C" fn aq_thresholds_minimal(report: *const AqThresholds) -> i64 {
    report.as_ref().and_then(|r| r.report.minimal_threshold()).unwrap_or(-1)
}

/// # Safety
/// `report` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn aq_thresholds_free(report: *mut AqThresholds) {
    free(report)
}

/// Hamming enhanced cover. `approx_border` selects k-approximate borders
/// instead of exact ones. `*found` is false when there is no candidate.
///
/// # Safety
/// `text` must be live; the out pointers writable.
#[no_mangle]
pub unsafe extern "C" fn aq_enhanced_cover(
    text: *const AqText,
    k: u32,
    approx_border: bool,
    found: *mut bool,
    start: *mut usize,
    len: *mut usize,
    coverage: *mut usize,
) -> AqStatus {
    guard(|| {
        let t = &get(text)?.text;
        if found.is_null() || start.is_null() || len.is_null() || coverage.is_null() {
            return Err(null());
        }
        let best = match approx_border {
            false => enhanced_cover_exact_border(t, k as usize),
            true => enhanced_cover_approx_border(t, k as usize),
        };
        *found = best.is_some();
        if let Some(e) = best {
            (*start, *len, *coverage) = (e.start, e.len, e.coverage);
        }
        Ok(())
    })
}
