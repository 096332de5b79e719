//! C ABI over `hydroxi`.
//!
//! Every fallible call returns an [`HxStatus`] and writes its result through
//! an out-pointer. On failure the message is kept per thread and can be read
//! with [`hx_last_error_message`]. Objects are opaque and owned by the caller
//! once returned; release them with the matching `*_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hydroxi::hydrogen::{AngularKind, QuantumNumbers, Wavefunction};
use hydroxi::spectral::{self, DecompositionReport};
use hydroxi::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    Numerical = 4,
    ResourceCap = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HxKind {
    Regular = 0,
    Pseudo = 1,
}

/// Decomposition of a pseudo-state onto bound states.
pub struct HxDecomposition {
    report: DecompositionReport,
}

/// An axial hydrogen function, regular or pseudo.
pub struct HxWavefunction {
    inner: Wavefunction,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> HxStatus {
    match err {
        Error::ResourceCap { .. } => HxStatus::ResourceCap,
        Error::Domain { .. } | Error::SingularPoint { .. } => HxStatus::OutOfRange,
        Error::Quadrature { .. } | Error::Numerical(_) | Error::DivisionByZero => HxStatus::Numerical,
        _ => HxStatus::InvalidArgument,
    }
}

/// Runs `f`, recording errors and catching panics at the boundary.
fn guard(f: impl FnOnce() -> Result<(), (HxStatus, String)>) -> HxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HxStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside hydroxi".into());
            HxStatus::Panic
        }
    }
}

fn lib<T>(r: hydroxi::Result<T>) -> Result<T, (HxStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

unsafe fn out<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, (HxStatus, String)> {
    p.as_mut().ok_or((HxStatus::NullPointer, format!("{name} is null")))
}

unsafe fn obj<'a, T>(p: *const T, name: &str) -> Result<&'a T, (HxStatus, String)> {
    p.as_ref().ok_or((HxStatus::NullPointer, format!("{name} is null")))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hx_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hx_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Coefficients of `Ξ_{n,ell,0}` on every bound state with `n' <= n_max`.
///
/// # Safety
/// `out_report` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hx_decompose(n: u32, ell: u32, n_max: u32, digits: u32, out_report: *mut *mut HxDecomposition) -> HxStatus {
    guard(|| {
        let slot = out(out_report, "out_report")?;
        let report = lib(spectral::decompose(n, ell, n_max, digits))?;
        *slot = Box::into_raw(Box::new(HxDecomposition { report }));
        Ok(())
    })
}

/// # Safety
/// `report` must come from [`hx_decompose`] and not be freed twice. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn hx_decomposition_free(report: *mut HxDecomposition) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Number of coefficient entries, ordered by `n'` then `ell'`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn hx_decomposition_len(report: *const HxDecomposition, out_len: *mut usize) -> HxStatus {
    guard(|| {
        *out(out_len, "out_len")? = obj(report, "report")?.report.entries.len();
        Ok(())
    })
}

/// Entry `index`: quantum numbers, sign and value to double precision.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn hx_decomposition_entry(
    report: *const HxDecomposition,
    index: usize,
    out_n: *mut u32,
    out_ell: *mut u32,
    out_sign: *mut i8,
    out_value: *mut f64,
) -> HxStatus {
    guard(|| {
        let r = &obj(report, "report")?.report;
        let e = r.entries.get(index).ok_or((HxStatus::OutOfRange, format!("entry {index} of {}", r.entries.len())))?;
        let (n, l, s, v) = (out(out_n, "out_n")?, out(out_ell, "out_ell")?, out(out_sign, "out_sign")?, out(out_value, "out_value")?);
        *n = e.n_p;
        *l = e.ell_p;
        *s = e.amplitude.sign();
        *v = lib(e.amplitude.value_f64(r.digits))?;
        Ok(())
    })
}

/// Exact square of entry `index` as canonical text, e.g. `(512/243)/(pi^2)`.
/// Free with [`hx_string_free`].
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn hx_decomposition_entry_square(report: *const HxDecomposition, index: usize, out_text: *mut *mut c_char) -> HxStatus {
    guard(|| {
        let r = &obj(report, "report")?.report;
        let e = r.entries.get(index).ok_or((HxStatus::OutOfRange, format!("entry {index} of {}", r.entries.len())))?;
        *out(out_text, "out_text")? = c_string(e.amplitude.square().to_string());
        Ok(())
    })
}

/// `P(N)^2` for `1 <= n_cap <= n_max`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn hx_decomposition_p_squared(report: *const HxDecomposition, n_cap: u32, out_value: *mut f64) -> HxStatus {
    guard(|| {
        let r = &obj(report, "report")?.report;
        let row = n_cap.checked_sub(1).and_then(|i| r.p_of_n.get(i as usize));
        let row = row.ok_or((HxStatus::OutOfRange, format!("N = {n_cap} outside 1..={}", r.n_max())))?;
        *out(out_value, "out_value")? = row.p_squared_f64();
        Ok(())
    })
}

/// `1 - P(n_max)^2`, a lower bound on the continuum weight.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn hx_decomposition_continuum_lower_bound(report: *const HxDecomposition, out_value: *mut f64) -> HxStatus {
    guard(|| {
        *out(out_value, "out_value")? = obj(report, "report")?.report.continuum_lower_bound;
        Ok(())
    })
}

/// # Safety
/// `out_wf` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hx_wavefunction_new(n: u32, ell: u32, kind: HxKind, out_wf: *mut *mut HxWavefunction) -> HxStatus {
    guard(|| {
        let slot = out(out_wf, "out_wf")?;
        let kind = match kind {
            HxKind::Regular => AngularKind::Regular,
            HxKind::Pseudo => AngularKind::Pseudo,
        };
        let inner = lib(QuantumNumbers::axial(n, ell).and_then(|qn| Wavefunction::new(qn, kind)))?;
        *slot = Box::into_raw(Box::new(HxWavefunction { inner }));
        Ok(())
    })
}

/// # Safety
/// `wf` must come from [`hx_wavefunction_new`] and not be freed twice. Null
/// is ignored.
#[no_mangle]
pub unsafe extern "C" fn hx_wavefunction_free(wf: *mut HxWavefunction) {
    if !wf.is_null() {
        drop(Box::from_raw(wf));
    }
}

/// Value at `(r, theta)`. The pseudo kind fails with `OutOfRange` on the axis.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn hx_wavefunction_eval(wf: *const HxWavefunction, r: f64, theta: f64, out_value: *mut f64) -> HxStatus {
    guard(|| {
        let wf = obj(wf, "wf")?;
        let slot = out(out_value, "out_value")?;
        let p = lib(hydroxi::hydrogen::SpatialPoint::new(r, theta, 0.0))?;
        *slot = lib(wf.inner.eval(&p))?;
        Ok(())
    })
}

/// Finite-difference residual of the pseudo-eigenvalue relation at `(r, theta)`.
///
/// # Safety
/// `out_value` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hx_residual_check(n: u32, ell: u32, r: f64, theta: f64, h: f64, out_value: *mut f64) -> HxStatus {
    guard(|| {
        let slot = out(out_value, "out_value")?;
        let p = lib(hydroxi::hydrogen::SpatialPoint::new(r, theta, 0.0))?;
        *slot = lib(spectral::residual_check(n, ell, &p, h))?;
        Ok(())
    })
}

/// Reads the last error as an owned Rust string. For tests and Rust callers.
pub fn last_error() -> Option<String> {
    let p = hx_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}
