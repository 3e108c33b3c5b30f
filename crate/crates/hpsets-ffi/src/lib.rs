//! C ABI over the hpsets library.
//!
//! Complexes and cochains cross the boundary as opaque handles; every
//! fallible call returns an [`HpsStatus`] and leaves a human-readable
//! message retrievable through [`hps_last_error_message`]. Rational
//! values cross as text in the `num/den` form, so nothing is rounded at
//! the boundary. Strings returned by this library are owned by the
//! caller and must be released with [`hps_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use hpsets::cochain::Cochain;
use hpsets::complex::{OrientationOutcome, SimplicialComplex};
use hpsets::error::Error;
use hpsets::flags::parse_signature_list;

/// Opaque handle to an immutable simplicial complex.
pub struct HpsComplex {
    inner: SimplicialComplex,
}

/// Opaque handle to a cochain tied to the complex it was parsed
/// against.
pub struct HpsCochain {
    inner: Cochain,
}

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HpsStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Unparseable input: facet file, cochain file, signature list or
    /// generator spec.
    Parse = 3,
    /// A domain precondition failed (validation, closedness,
    /// orientability).
    Domain = 4,
    /// A dimension argument was out of range.
    OutOfRange = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let cleaned = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(cleaned).expect("nul bytes removed");
    });
}

fn status_of(err: &Error) -> HpsStatus {
    match err {
        Error::DimensionOutOfRange { .. } | Error::InvalidRange(_) => HpsStatus::OutOfRange,
        Error::UnknownGenerator(_)
        | Error::FileUnreadable { .. }
        | Error::MalformedFacetFile { .. }
        | Error::MalformedCochainFile { .. }
        | Error::MalformedSignature(_)
        | Error::MalformedRational(_) => HpsStatus::Parse,
        _ => HpsStatus::Domain,
    }
}

fn fail(err: &Error) -> HpsStatus {
    set_error(&err.to_string());
    status_of(err)
}

/// Last error message for the current thread; empty until an error
/// occurs. The pointer stays valid until the next failing call on the
/// same thread.
#[no_mangle]
pub extern "C" fn hps_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, HpsStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(HpsStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        HpsStatus::InvalidUtf8
    })
}

fn give_string(text: String, out: *mut *mut c_char) -> HpsStatus {
    let cleaned = text.replace('\0', " ");
    let c = CString::new(cleaned).expect("nul bytes removed");
    unsafe {
        *out = c.into_raw();
    }
    HpsStatus::Ok
}

/// Builds a complex from a generator spec (`sphere:n`, `torus-grid:k`,
/// `klein-grid:k`, `rp2-min`) or a facet file path.
///
/// # Safety
/// `spec` must be a valid NUL-terminated string and `out` a valid
/// pointer; on `Ok` the handle must be released with
/// [`hps_complex_free`].
#[no_mangle]
pub unsafe extern "C" fn hps_complex_from_spec(
    spec: *const c_char,
    out: *mut *mut HpsComplex,
) -> HpsStatus {
    if out.is_null() {
        set_error("null output pointer");
        return HpsStatus::NullPointer;
    }
    let spec = match read_str(spec) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match hpsets::corpus::build_input(spec) {
        Ok((_, complex)) => {
            *out = Box::into_raw(Box::new(HpsComplex { inner: complex }));
            HpsStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Builds a complex from facet file text (one facet per line).
///
/// # Safety
/// Same contract as [`hps_complex_from_spec`].
#[no_mangle]
pub unsafe extern "C" fn hps_complex_from_facet_text(
    text: *const c_char,
    out: *mut *mut HpsComplex,
) -> HpsStatus {
    if out.is_null() {
        set_error("null output pointer");
        return HpsStatus::NullPointer;
    }
    let text = match read_str(text) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let build = hpsets::files::parse_facet_lines(text)
        .and_then(|facets| SimplicialComplex::build(&facets));
    match build {
        Ok(complex) => {
            *out = Box::into_raw(Box::new(HpsComplex { inner: complex }));
            HpsStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Releases a complex handle. Null is ignored.
///
/// # Safety
/// `ptr` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hps_complex_free(ptr: *mut HpsComplex) {
    if !ptr.is_null() {
        drop(Box::from_raw(ptr));
    }
}

/// Dimension of the complex; 0 on a null handle.
///
/// # Safety
/// `ptr` must be a live handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn hps_complex_dim(ptr: *const HpsComplex) -> usize {
    ptr.as_ref().map_or(0, |c| c.inner.dim())
}

/// Number of p-cells; 0 when p exceeds the dimension or the handle is
/// null.
///
/// # Safety
/// `ptr` must be a live handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn hps_complex_cell_count(ptr: *const HpsComplex, p: usize) -> usize {
    ptr.as_ref().map_or(0, |c| c.inner.cell_count(p))
}

/// Euler characteristic; 0 on a null handle.
///
/// # Safety
/// `ptr` must be a live handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn hps_complex_euler_characteristic(ptr: *const HpsComplex) -> i64 {
    ptr.as_ref().map_or(0, |c| c.inner.euler_characteristic())
}

/// Whether the complex passes the closed-pseudomanifold checks.
///
/// # Safety
/// `ptr` must be a live handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn hps_complex_is_pseudomanifold(ptr: *const HpsComplex) -> bool {
    ptr.as_ref()
        .is_some_and(|c| c.inner.validate_manifold().is_closed_pseudomanifold())
}

/// Whether a coherent orientation exists. False on non-pseudomanifolds.
///
/// # Safety
/// `ptr` must be a live handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn hps_complex_is_orientable(ptr: *const HpsComplex) -> bool {
    ptr.as_ref().is_some_and(|c| {
        matches!(
            c.inner.orient(),
            Ok(OrientationOutcome::Orientable(_))
        )
    })
}

/// Rational Betti number in dimension p.
///
/// # Safety
/// `ptr` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hps_complex_betti(
    ptr: *const HpsComplex,
    p: usize,
    out: *mut usize,
) -> HpsStatus {
    let Some(complex) = ptr.as_ref() else {
        set_error("null complex handle");
        return HpsStatus::NullPointer;
    };
    if out.is_null() {
        set_error("null output pointer");
        return HpsStatus::NullPointer;
    }
    match hpsets::betti(&complex.inner, p) {
        Ok(b) => {
            *out = b;
            HpsStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Dimension of the harmonic space in dimension p (equals the Betti
/// number).
///
/// # Safety
/// `ptr` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hps_complex_harmonic_dim(
    ptr: *const HpsComplex,
    p: usize,
    out: *mut usize,
) -> HpsStatus {
    let Some(complex) = ptr.as_ref() else {
        set_error("null complex handle");
        return HpsStatus::NullPointer;
    };
    if out.is_null() {
        set_error("null output pointer");
        return HpsStatus::NullPointer;
    }
    match hpsets::harmonic_basis(&complex.inner, p) {
        Ok(basis) => {
            *out = basis.basis.len();
            HpsStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Parses a cochain file (`pset <p>` header, one cell and value per
/// line) against the complex.
///
/// # Safety
/// `complex` must be a live handle, `text` a valid string, `out` a
/// valid pointer; on `Ok` release the result with [`hps_cochain_free`].
#[no_mangle]
pub unsafe extern "C" fn hps_cochain_parse(
    complex: *const HpsComplex,
    text: *const c_char,
    out: *mut *mut HpsCochain,
) -> HpsStatus {
    let Some(complex) = complex.as_ref() else {
        set_error("null complex handle");
        return HpsStatus::NullPointer;
    };
    if out.is_null() {
        set_error("null output pointer");
        return HpsStatus::NullPointer;
    }
    let text = match read_str(text) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match hpsets::files::parse_cochain(text, &complex.inner) {
        Ok(cochain) => {
            *out = Box::into_raw(Box::new(HpsCochain { inner: cochain }));
            HpsStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Releases a cochain handle. Null is ignored.
///
/// # Safety
/// `ptr` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hps_cochain_free(ptr: *mut HpsCochain) {
    if !ptr.is_null() {
        drop(Box::from_raw(ptr));
    }
}

/// Degree of the cochain; 0 on a null handle.
///
/// # Safety
/// `ptr` must be a live handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn hps_cochain_dim(ptr: *const HpsCochain) -> usize {
    ptr.as_ref().map_or(0, |c| c.inner.dim())
}

/// Whether the cochain is closed on the complex.
///
/// # Safety
/// Both handles must be live and matched; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hps_cochain_is_closed(
    complex: *const HpsComplex,
    cochain: *const HpsCochain,
    out: *mut bool,
) -> HpsStatus {
    let (Some(complex), Some(cochain)) = (complex.as_ref(), cochain.as_ref()) else {
        set_error("null handle");
        return HpsStatus::NullPointer;
    };
    if out.is_null() {
        set_error("null output pointer");
        return HpsStatus::NullPointer;
    }
    match hpsets::is_closed(&complex.inner, &cochain.inner) {
        Ok(b) => {
            *out = b;
            HpsStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Whether the cochain is harmonic (closed and dual closed).
///
/// # Safety
/// Both handles must be live and matched; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hps_cochain_is_harmonic(
    complex: *const HpsComplex,
    cochain: *const HpsCochain,
    out: *mut bool,
) -> HpsStatus {
    let (Some(complex), Some(cochain)) = (complex.as_ref(), cochain.as_ref()) else {
        set_error("null handle");
        return HpsStatus::NullPointer;
    };
    if out.is_null() {
        set_error("null output pointer");
        return HpsStatus::NullPointer;
    }
    match hpsets::is_harmonic(&complex.inner, &cochain.inner) {
        Ok(b) => {
            *out = b;
            HpsStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Harmonic projection of a closed cochain; fails with `Domain` when
/// the input is not closed.
///
/// # Safety
/// Both handles must be live and matched; `out` must be valid; on `Ok`
/// release the result with [`hps_cochain_free`].
#[no_mangle]
pub unsafe extern "C" fn hps_cochain_harmonic_projection(
    complex: *const HpsComplex,
    cochain: *const HpsCochain,
    out: *mut *mut HpsCochain,
) -> HpsStatus {
    let (Some(complex), Some(cochain)) = (complex.as_ref(), cochain.as_ref()) else {
        set_error("null handle");
        return HpsStatus::NullPointer;
    };
    if out.is_null() {
        set_error("null output pointer");
        return HpsStatus::NullPointer;
    }
    match hpsets::harmonic_projection(&complex.inner, &cochain.inner) {
        Ok(projected) => {
            *out = Box::into_raw(Box::new(HpsCochain { inner: projected }));
            HpsStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Renders a cochain in the pset text format (exact rationals).
///
/// # Safety
/// Both handles must be live and matched; `out` must be valid; free the
/// string with [`hps_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hps_cochain_format(
    complex: *const HpsComplex,
    cochain: *const HpsCochain,
    out: *mut *mut c_char,
) -> HpsStatus {
    let (Some(complex), Some(cochain)) = (complex.as_ref(), cochain.as_ref()) else {
        set_error("null handle");
        return HpsStatus::NullPointer;
    };
    if out.is_null() {
        set_error("null output pointer");
        return HpsStatus::NullPointer;
    }
    if let Err(e) = cochain.inner.check_on(&complex.inner, cochain.inner.dim()) {
        return fail(&e);
    }
    give_string(
        hpsets::files::format_cochain(&complex.inner, &cochain.inner),
        out,
    )
}

/// Runs the search harness over newline-separated corpus specs with a
/// signature list like `(2),(0,2)`. The report is the same
/// machine-format text the CLI emits.
///
/// # Safety
/// `corpus_specs` and `signatures` must be valid strings, `out` a valid
/// pointer; free the report with [`hps_string_free`].
#[no_mangle]
pub unsafe extern "C" fn hps_search(
    corpus_specs: *const c_char,
    p: usize,
    signatures: *const c_char,
    signed: bool,
    subdivision_invariance: bool,
    out: *mut *mut c_char,
) -> HpsStatus {
    if out.is_null() {
        set_error("null output pointer");
        return HpsStatus::NullPointer;
    }
    let specs_text = match read_str(corpus_specs) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let signature_text = match read_str(signatures) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let specs: Vec<String> = specs_text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(ToString::to_string)
        .collect();
    let run = || -> hpsets::Result<String> {
        let sigs = parse_signature_list(signature_text)?;
        let corpus = hpsets::build_corpus(&specs)?;
        let outcome = hpsets::search(&corpus, p, &sigs, signed, subdivision_invariance)?;
        Ok(hpsets::cli::search_machine_report(
            &outcome,
            p,
            signed,
            subdivision_invariance,
        ))
    };
    match run() {
        Ok(report) => give_string(report, out),
        Err(e) => fail(&e),
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `ptr` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hps_string_free(ptr: *mut c_char) {
    if !ptr.is_null() {
        drop(CString::from_raw(ptr));
    }
}
