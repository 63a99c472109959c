//! C ABI for `lieder`.
//!
//! Algebras and derivation spaces are opaque handles released with their
//! `_free` function. Every call returns a [`LiederStatus`]; on failure
//! [`lieder_last_error`] describes the error. Reports come back as JSON
//! strings owned by the caller and released with [`lieder_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lieder::dercalc::{derivation_space, is_derivation, verify_schrodinger_derivations, DerSpace};
use lieder::io::{algebra_from_json, algebra_to_json};
use lieder::liecore::build_schrodinger;
use lieder::locder::{candidate_space, SamplingConfig};
use lieder::proofreplay::replay;
use lieder::{Error, LieAlgebra, LinearMap};

/// Result of every exported function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiederStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidAlgebra = 4,
    InvalidParameter = 5,
    DimensionMismatch = 6,
    NotSchrodinger = 7,
    Precondition = 8,
    JacobiViolation = 9,
    Io = 10,
    Panic = 11,
}

/// A Lie algebra given by structure constants.
pub struct LiederAlgebra {
    inner: LieAlgebra,
}

/// The derivation space of an algebra.
pub struct LiederDerSpace {
    inner: DerSpace,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LiederStatus {
    match e {
        Error::DimensionMismatch { .. } => LiederStatus::DimensionMismatch,
        Error::InvalidParameter(_) => LiederStatus::InvalidParameter,
        Error::InvalidAlgebra(_) => LiederStatus::InvalidAlgebra,
        Error::Parse(_) | Error::Json(_) => LiederStatus::Parse,
        Error::JacobiViolation { .. } => LiederStatus::JacobiViolation,
        Error::NotSchrodinger => LiederStatus::NotSchrodinger,
        Error::Precondition(_) => LiederStatus::Precondition,
        Error::Io(_) => LiederStatus::Io,
    }
}

struct Fail(LiederStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

impl From<serde_json::Error> for Fail {
    fn from(e: serde_json::Error) -> Self {
        Fail(LiederStatus::Parse, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> LiederStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LiederStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            LiederStatus::Panic
        }
    }
}

unsafe fn as_ref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(LiederStatus::NullPointer, format!("{what} is null")))
}

unsafe fn out_ptr<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| {
        Fail(
            LiederStatus::NullPointer,
            "output pointer is null".to_string(),
        )
    })
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(LiederStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(LiederStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("nul bytes removed")
        .into_raw()
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lieder_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn lieder_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the Schrödinger algebra `s_n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lieder_algebra_schrodinger(
    n: usize,
    out: *mut *mut LiederAlgebra,
) -> LiederStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let inner = build_schrodinger(n)?;
        *out = Box::into_raw(Box::new(LiederAlgebra { inner }));
        Ok(())
    })
}

/// Parses an algebra file (`{"dim", "labels", "brackets"}`).
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lieder_algebra_from_json(
    json: *const c_char,
    skip_jacobi: bool,
    out: *mut *mut LiederAlgebra,
) -> LiederStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let text = read_str(json, "json")?;
        let inner = algebra_from_json(text, "algebra", skip_jacobi)?;
        *out = Box::into_raw(Box::new(LiederAlgebra { inner }));
        Ok(())
    })
}

/// # Safety
/// `alg` must be a handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn lieder_algebra_free(alg: *mut LiederAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lieder_algebra_dim(
    alg: *const LiederAlgebra,
    out: *mut usize,
) -> LiederStatus {
    guard(|| {
        let alg = as_ref(alg, "algebra")?;
        *out_ptr(out)? = alg.inner.dim();
        Ok(())
    })
}

/// Number of basis triples on which the Jacobi identity fails.
///
/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lieder_algebra_jacobi_violations(
    alg: *const LiederAlgebra,
    out: *mut usize,
) -> LiederStatus {
    guard(|| {
        let alg = as_ref(alg, "algebra")?;
        *out_ptr(out)? = alg.inner.jacobi_check().len();
        Ok(())
    })
}

/// Serializes the algebra in file format.
///
/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lieder_algebra_to_json(
    alg: *const LiederAlgebra,
    out: *mut *mut c_char,
) -> LiederStatus {
    guard(|| {
        let alg = as_ref(alg, "algebra")?;
        *out_ptr(out)? = to_c_string(algebra_to_json(&alg.inner));
        Ok(())
    })
}

/// Computes `Der(L)`.
///
/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lieder_der_compute(
    alg: *const LiederAlgebra,
    out: *mut *mut LiederDerSpace,
) -> LiederStatus {
    guard(|| {
        let alg = as_ref(alg, "algebra")?;
        let out = out_ptr(out)?;
        let inner = derivation_space(&alg.inner);
        *out = Box::into_raw(Box::new(LiederDerSpace { inner }));
        Ok(())
    })
}

/// # Safety
/// `der` must be a handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn lieder_der_free(der: *mut LiederDerSpace) {
    if !der.is_null() {
        drop(Box::from_raw(der));
    }
}

/// # Safety
/// `der` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lieder_der_dim(
    der: *const LiederDerSpace,
    out: *mut usize,
) -> LiederStatus {
    guard(|| {
        let der = as_ref(der, "derivation space")?;
        *out_ptr(out)? = der.inner.dim();
        Ok(())
    })
}

/// Report on `Der(s_n) = Inn(s_n) ⊕ named outer derivations`, as JSON.
///
/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lieder_der_verify_theorem(
    alg: *const LiederAlgebra,
    out: *mut *mut c_char,
) -> LiederStatus {
    guard(|| {
        let alg = as_ref(alg, "algebra")?;
        let out = out_ptr(out)?;
        let report = verify_schrodinger_derivations(&alg.inner)?;
        *out = to_c_string(serde_json::to_string(&report)?);
        Ok(())
    })
}

/// Whether the map (`{"dim", "matrix"}` JSON) is a derivation.
///
/// # Safety
/// `alg` must be a live handle, `map_json` a NUL-terminated string and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lieder_is_derivation(
    alg: *const LiederAlgebra,
    map_json: *const c_char,
    out: *mut bool,
) -> LiederStatus {
    guard(|| {
        let alg = as_ref(alg, "algebra")?;
        let out = out_ptr(out)?;
        let m: LinearMap = serde_json::from_str(read_str(map_json, "map")?)?;
        *out = is_derivation(&alg.inner, &m)?.is_pass();
        Ok(())
    })
}

/// Local-derivation classification report as JSON.
///
/// # Safety
/// `alg` and `der` must be live handles for the same algebra and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lieder_locder_classify(
    alg: *const LiederAlgebra,
    der: *const LiederDerSpace,
    seed: u64,
    stabilization_window: usize,
    max_samples: usize,
    out: *mut *mut c_char,
) -> LiederStatus {
    guard(|| {
        let alg = as_ref(alg, "algebra")?;
        let der = as_ref(der, "derivation space")?;
        let out = out_ptr(out)?;
        let config = SamplingConfig {
            seed,
            stabilization_window,
            max_samples,
        };
        let (_, report) = candidate_space(&alg.inner, &der.inner, config)?;
        *out = to_c_string(serde_json::to_string(&report)?);
        Ok(())
    })
}

/// Replay trace for a map on `s_n`, as JSON.
///
/// # Safety
/// `alg` and `der` must be live handles for the same algebra, `map_json` a
/// NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lieder_replay(
    alg: *const LiederAlgebra,
    der: *const LiederDerSpace,
    map_json: *const c_char,
    out: *mut *mut c_char,
) -> LiederStatus {
    guard(|| {
        let alg = as_ref(alg, "algebra")?;
        let der = as_ref(der, "derivation space")?;
        let out = out_ptr(out)?;
        let m: LinearMap = serde_json::from_str(read_str(map_json, "map")?)?;
        let trace = replay(&alg.inner, &der.inner, &m)?;
        *out = to_c_string(serde_json::to_string(&trace)?);
        Ok(())
    })
}
