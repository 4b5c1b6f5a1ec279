//! C ABI for `newton-leja`.
//!
//! Functions return an [`NlStatus`]; on failure a description is kept per thread
//! and can be read with [`nl_last_error_message`]. Node pools and interpolants
//! are opaque handles released with their `*_free` function. Output arrays are
//! caller-allocated; a call whose buffer is too short fails with
//! `NL_STATUS_BUFFER_TOO_SMALL` and writes nothing.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::ptr;
use std::slice;

use newton_leja::library::{load_library, precompute_library};
use newton_leja::nodes::{
    self, chebyshev_ascending, chebyshev_leja, chebyshev_roots, fast_leja, CandidatePool,
    Interval, NodeSequence,
};
use newton_leja::testbed::{self, TestFunction};
use newton_leja::{Error, NewtonInterpolant};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NlStatus {
    Ok = 0,
    InvalidArgument = 1,
    DuplicateNode = 2,
    Io = 3,
    Parse = 4,
    NullPointer = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NlFunction {
    Runge = 0,
    Heaviside = 1,
    Sawtooth = 2,
    SqrtAbs = 3,
}

impl From<NlFunction> for TestFunction {
    fn from(f: NlFunction) -> Self {
        match f {
            NlFunction::Runge => TestFunction::Runge,
            NlFunction::Heaviside => TestFunction::Heaviside,
            NlFunction::Sawtooth => TestFunction::Sawtooth,
            NlFunction::SqrtAbs => TestFunction::SqrtAbs,
        }
    }
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NlFamily {
    ChebyshevAscending = 0,
    ChebyshevLeja = 1,
    FastLeja = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct NlNorms {
    pub l1: f64,
    pub l2: f64,
    pub linf: f64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct NlErrorRecord {
    pub n: usize,
    pub l1: f64,
    pub l2: f64,
    pub linf: f64,
    pub residual: f64,
    pub wall_time: f64,
}

/// Opaque Fast Leja candidate pool.
pub struct NlNodePool(CandidatePool);

/// Opaque Newton interpolant.
pub struct NlInterpolant(NewtonInterpolant);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(message: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = message);
}

enum Failure {
    Lib(Error),
    Null(&'static str),
    Buffer { need: usize, have: usize },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type FfiResult = Result<(), Failure>;

fn guard(body: impl FnOnce() -> FfiResult) -> NlStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => NlStatus::Ok,
        Ok(Err(failure)) => {
            let (status, message) = match failure {
                Failure::Lib(e) => {
                    let status = match &e {
                        Error::InvalidArgument(_) => NlStatus::InvalidArgument,
                        Error::DuplicateNode(_) => NlStatus::DuplicateNode,
                        Error::Io { .. } => NlStatus::Io,
                        Error::Parse { .. } => NlStatus::Parse,
                    };
                    (status, e.to_string())
                }
                Failure::Null(name) => (NlStatus::NullPointer, format!("`{name}` is null")),
                Failure::Buffer { need, have } => (
                    NlStatus::BufferTooSmall,
                    format!("output buffer holds {have} values, {need} needed"),
                ),
            };
            set_error(message);
            status
        }
        Err(_) => {
            set_error("panic inside newton-leja".into());
            NlStatus::Panic
        }
    }
}

unsafe fn input<'a>(data: *const f64, len: usize, name: &'static str) -> Result<&'a [f64], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(Failure::Null(name));
    }
    Ok(slice::from_raw_parts(data, len))
}

unsafe fn write_out(values: &[f64], out: *mut f64, out_len: usize) -> FfiResult {
    if values.len() > out_len {
        return Err(Failure::Buffer {
            need: values.len(),
            have: out_len,
        });
    }
    if values.is_empty() {
        return Ok(());
    }
    if out.is_null() {
        return Err(Failure::Null("out"));
    }
    ptr::copy_nonoverlapping(values.as_ptr(), out, values.len());
    Ok(())
}

unsafe fn path_arg(path: *const c_char) -> Result<PathBuf, Failure> {
    if path.is_null() {
        return Err(Failure::Null("path"));
    }
    let s = CStr::from_ptr(path)
        .to_str()
        .map_err(|_| Error::InvalidArgument("path is not valid UTF-8".into()))?;
    Ok(PathBuf::from(s))
}

fn family_nodes(family: NlFamily, interval: Interval, n: usize) -> Result<NodeSequence, Error> {
    match family {
        NlFamily::ChebyshevAscending => chebyshev_ascending(interval, n),
        NlFamily::ChebyshevLeja => chebyshev_leja(interval, n),
        NlFamily::FastLeja => fast_leja(interval, n),
    }
}

/// Copies the calling thread's last error message into `buf` (NUL-terminated,
/// truncated to `len`) and returns the full message length excluding the NUL.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn nl_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let message = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = message.len().min(len - 1);
            ptr::copy_nonoverlapping(message.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        message.len()
    })
}

/// Writes the `m` Chebyshev roots on `[-b, b]` in index order.
///
/// # Safety
/// `out` must point to `out_len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn nl_chebyshev_roots(m: usize, b: f64, out: *mut f64, out_len: usize) -> NlStatus {
    guard(|| write_out(chebyshev_roots(m, b)?.values(), out, out_len))
}

/// Writes `n` nodes of `family` on `[lo, hi]`.
///
/// # Safety
/// `out` must point to `out_len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn nl_nodes(
    family: NlFamily,
    lo: f64,
    hi: f64,
    n: usize,
    out: *mut f64,
    out_len: usize,
) -> NlStatus {
    guard(|| {
        let seq = family_nodes(family, Interval::new(lo, hi)?, n)?;
        write_out(seq.values(), out, out_len)
    })
}

/// Writes the Leja ordering of `points` into `out` (both of length `len`).
///
/// # Safety
/// `points` must point to `len` readable doubles and `out` to `len` writable ones.
#[no_mangle]
pub unsafe extern "C" fn nl_leja_order(points: *const f64, len: usize, out: *mut f64) -> NlStatus {
    guard(|| {
        let ordered = nodes::leja_order(input(points, len, "points")?)?;
        write_out(&ordered, out, len)
    })
}

/// `sum_k ln|point - placed_k|`; negative infinity when `point` is a placed node.
///
/// # Safety
/// `placed` must point to `len` readable doubles.
#[no_mangle]
pub unsafe extern "C" fn nl_log_multiplicative_distance(point: f64, placed: *const f64, len: usize) -> f64 {
    match input(placed, len, "placed") {
        Ok(placed) => nodes::log_multiplicative_distance(point, placed),
        Err(_) => f64::NAN,
    }
}

/// Creates a Fast Leja pool on `[lo, hi]` holding the two endpoints.
///
/// # Safety
/// `pool` must be a valid pointer to write the handle into.
#[no_mangle]
pub unsafe extern "C" fn nl_pool_new(lo: f64, hi: f64, pool: *mut *mut NlNodePool) -> NlStatus {
    guard(|| {
        if pool.is_null() {
            return Err(Failure::Null("pool"));
        }
        let handle = Box::new(NlNodePool(CandidatePool::new(Interval::new(lo, hi)?)));
        *pool = Box::into_raw(handle);
        Ok(())
    })
}

/// Selects `extra` more nodes; earlier nodes are unchanged.
///
/// # Safety
/// `pool` must come from [`nl_pool_new`] and not be freed.
#[no_mangle]
pub unsafe extern "C" fn nl_pool_extend(pool: *mut NlNodePool, extra: usize) -> NlStatus {
    guard(|| {
        let pool = pool.as_mut().ok_or(Failure::Null("pool"))?;
        pool.0.extend(extra);
        Ok(())
    })
}

/// Number of selected nodes, or 0 for a null handle.
///
/// # Safety
/// `pool` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nl_pool_len(pool: *const NlNodePool) -> usize {
    pool.as_ref().map_or(0, |p| p.0.len())
}

/// Writes the first `n` selected nodes on the pool's interval.
///
/// # Safety
/// `pool` must be a live handle and `out` must point to `n` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn nl_pool_nodes(pool: *const NlNodePool, n: usize, out: *mut f64) -> NlStatus {
    guard(|| {
        let pool = pool.as_ref().ok_or(Failure::Null("pool"))?;
        if n > pool.0.len() {
            return Err(Error::InvalidArgument(format!(
                "requested {n} nodes but the pool holds {}",
                pool.0.len()
            ))
            .into());
        }
        write_out(pool.0.selected_prefix(n).values(), out, n)
    })
}

/// # Safety
/// `pool` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn nl_pool_free(pool: *mut NlNodePool) {
    if !pool.is_null() {
        drop(Box::from_raw(pool));
    }
}

/// Fits the Newton interpolant of `values` at `nodes` (both of length `len`).
///
/// # Safety
/// Input arrays must hold `len` doubles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nl_interp_fit(
    nodes: *const f64,
    values: *const f64,
    len: usize,
    out: *mut *mut NlInterpolant,
) -> NlStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        let p = NewtonInterpolant::fit(input(nodes, len, "nodes")?, input(values, len, "values")?)?;
        *out = Box::into_raw(Box::new(NlInterpolant(p)));
        Ok(())
    })
}

/// Adds one node in place; existing coefficients are unchanged.
///
/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn nl_interp_append(p: *mut NlInterpolant, x: f64, y: f64) -> NlStatus {
    guard(|| {
        let p = p.as_mut().ok_or(Failure::Null("p"))?;
        p.0.push(x, y)?;
        Ok(())
    })
}

/// Number of nodes, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nl_interp_len(p: *const NlInterpolant) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Writes the Newton coefficients.
///
/// # Safety
/// `p` must be a live handle and `out` must point to `out_len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn nl_interp_coeffs(p: *const NlInterpolant, out: *mut f64, out_len: usize) -> NlStatus {
    guard(|| {
        let p = p.as_ref().ok_or(Failure::Null("p"))?;
        write_out(p.0.coeffs(), out, out_len)
    })
}

/// Horner evaluation at `x`; NaN for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nl_interp_evaluate(p: *const NlInterpolant, x: f64) -> f64 {
    p.as_ref().map_or(f64::NAN, |p| p.0.evaluate(x))
}

/// Evaluates at each of the `len` points `xs`, writing into `out`.
///
/// # Safety
/// `p` must be a live handle; `xs` and `out` must hold `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn nl_interp_evaluate_grid(
    p: *const NlInterpolant,
    xs: *const f64,
    len: usize,
    out: *mut f64,
) -> NlStatus {
    guard(|| {
        let p = p.as_ref().ok_or(Failure::Null("p"))?;
        write_out(&p.0.evaluate_grid(input(xs, len, "xs")?), out, len)
    })
}

/// # Safety
/// `p` must be null or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn nl_interp_free(p: *mut NlInterpolant) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

#[no_mangle]
pub extern "C" fn nl_test_function(function: NlFunction, x: f64) -> f64 {
    TestFunction::from(function).eval(x)
}

/// Normalized trapezoidal L1/L2 norms and the maximum of `len` grid samples.
///
/// # Safety
/// `errors` must hold `len` doubles and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nl_norms(errors: *const f64, len: usize, out: *mut NlNorms) -> NlStatus {
    guard(|| {
        let out = out.as_mut().ok_or(Failure::Null("out"))?;
        let r = testbed::norms(input(errors, len, "errors")?)?;
        *out = NlNorms {
            l1: r.l1,
            l2: r.l2,
            linf: r.linf,
        };
        Ok(())
    })
}

/// Interpolates `function` on `n` nodes of `family` over `[lo, hi]` and
/// measures the error on the `2n`-strip grid.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nl_measure(
    function: NlFunction,
    family: NlFamily,
    lo: f64,
    hi: f64,
    n: usize,
    out: *mut NlErrorRecord,
) -> NlStatus {
    guard(|| {
        let out = out.as_mut().ok_or(Failure::Null("out"))?;
        let seq = family_nodes(family, Interval::new(lo, hi)?, n)?;
        let r = testbed::measure(function.into(), &seq)?;
        *out = NlErrorRecord {
            n: r.n,
            l1: r.l1,
            l2: r.l2,
            linf: r.linf,
            residual: r.residual,
            wall_time: r.wall_time,
        };
        Ok(())
    })
}

/// Stores the first `n` Fast Leja points on `[lo, hi]` as a node library.
///
/// # Safety
/// `path` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn nl_library_precompute(path: *const c_char, lo: f64, hi: f64, n: usize) -> NlStatus {
    guard(|| {
        precompute_library(Interval::new(lo, hi)?, n, &path_arg(path)?)?;
        Ok(())
    })
}

/// Loads the first `n` library nodes mapped onto `[lo, hi]`.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` must point to `n` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn nl_library_load(
    path: *const c_char,
    n: usize,
    lo: f64,
    hi: f64,
    out: *mut f64,
) -> NlStatus {
    guard(|| {
        let seq = load_library(&path_arg(path)?, n, Interval::new(lo, hi)?)?;
        write_out(seq.values(), out, n)
    })
}
