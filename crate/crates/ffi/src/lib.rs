//! C interface to `hesspin`.
//!
//! Objects cross the boundary as opaque handles created by constructors
//! such as `hp_permutation_parse` and released with the matching
//! `hp_*_free`. Every
//! fallible call returns `HP_OK` or a negative error code; the message for
//! the most recent failure on the calling thread is available through
//! [`hp_last_error_message`].
//!
//! Variable-length results are written into caller buffers. The required
//! length is always stored in `*len_out`, so a call with `cap = 0` can be
//! used to size the buffer; it fails with `HP_ERR_BUFFER_TOO_SMALL`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hesspin::hess334::h334;
use hesspin::{
    bruhat_leq, closed_form_restriction, degree, p_restriction, rolldown, verify_334_theorem,
    verify_pinball, HessenbergFunction, Permutation, S1Value, YoungDiagram,
};

pub const HP_OK: i32 = 0;
/// A required pointer argument was null.
pub const HP_ERR_NULL: i32 = -1;
/// An argument failed validation.
pub const HP_ERR_INVALID_INPUT: i32 = -2;
/// The permutation is not a fixed point of the requested variety.
pub const HP_ERR_NOT_FIXED_POINT: i32 = -3;
/// The output buffer is too small; `*len_out` holds the required length.
pub const HP_ERR_BUFFER_TOO_SMALL: i32 = -4;
/// Unexpected failure inside the library.
pub const HP_ERR_INTERNAL: i32 = -5;
/// A panic was caught at the boundary.
pub const HP_ERR_PANIC: i32 = -6;

/// A permutation of `1..=n`.
pub struct HpPermutation(Permutation);

/// A Hessenberg function `h: [n] -> [n]`.
pub struct HpHessenberg(HessenbergFunction);

/// Outcome of [`hp_verify_pinball`].
#[repr(C)]
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct HpPinballSummary {
    pub fixed_points: usize,
    pub injective: bool,
    pub bruhat_decreasing: bool,
    pub betti_match: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<hesspin::Error> for Failure {
    fn from(e: hesspin::Error) -> Self {
        let code = match e {
            hesspin::Error::NotFixedPoint { .. } | hesspin::Error::Unclassifiable(..) => HP_ERR_NOT_FIXED_POINT,
            _ => HP_ERR_INVALID_INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Outcome) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            HP_OK
        }
        Ok(Err(failure)) => {
            set_last_error(failure.message);
            failure.code
        }
        Err(payload) => {
            let detail = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("panic: {detail}"));
            HP_ERR_PANIC
        }
    }
}

unsafe fn arg<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure::new(HP_ERR_NULL, format!("{name} is null")))
}

unsafe fn out<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| Failure::new(HP_ERR_NULL, format!("{name} is null")))
}

unsafe fn text<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::new(HP_ERR_NULL, format!("{name} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::new(HP_ERR_INVALID_INPUT, format!("{name} is not valid UTF-8")))
}

unsafe fn fill<T: Copy>(src: &[T], buf: *mut T, cap: usize, len_out: *mut usize) -> Outcome {
    *out(len_out, "len_out")? = src.len();
    if cap < src.len() {
        return Err(Failure::new(
            HP_ERR_BUFFER_TOO_SMALL,
            format!("buffer holds {cap}, need {}", src.len()),
        ));
    }
    if !src.is_empty() {
        if buf.is_null() {
            return Err(Failure::new(HP_ERR_NULL, "buf is null"));
        }
        std::ptr::copy_nonoverlapping(src.as_ptr(), buf, src.len());
    }
    Ok(())
}

/// Writes `s` plus a NUL terminator; `*len_out` excludes the terminator.
unsafe fn fill_str(s: &str, buf: *mut c_char, cap: usize, len_out: *mut usize) -> Outcome {
    *out(len_out, "len_out")? = s.len();
    if cap <= s.len() {
        return Err(Failure::new(
            HP_ERR_BUFFER_TOO_SMALL,
            format!("buffer holds {cap} bytes, need {}", s.len() + 1),
        ));
    }
    if buf.is_null() {
        return Err(Failure::new(HP_ERR_NULL, "buf is null"));
    }
    std::ptr::copy_nonoverlapping(s.as_ptr().cast(), buf, s.len());
    *buf.add(s.len()) = 0;
    Ok(())
}

unsafe fn write_s1(value: &S1Value, buf: *mut c_char, cap: usize, len_out: *mut usize, degree_out: *mut u32) -> Outcome {
    let deg = out(degree_out, "degree_out")?;
    fill_str(&value.coefficient().to_string(), buf, cap, len_out)?;
    *deg = value.degree();
    Ok(())
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Length in bytes of the last error message on this thread, 0 if none.
#[no_mangle]
pub extern "C" fn hp_last_error_length() -> usize {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(0, |c| c.as_bytes().len()))
}

/// Copies the last error message (NUL-terminated) into `buf`. Returns the
/// number of bytes written excluding the terminator, or
/// `HP_ERR_BUFFER_TOO_SMALL` / `HP_ERR_NULL`.
#[no_mangle]
pub unsafe extern "C" fn hp_last_error_message(buf: *mut c_char, cap: usize) -> i32 {
    LAST_ERROR.with(|slot| {
        let slot = slot.borrow();
        let bytes = slot.as_ref().map_or(&[][..], |c| c.as_bytes());
        if buf.is_null() {
            return HP_ERR_NULL;
        }
        if cap <= bytes.len() {
            return HP_ERR_BUFFER_TOO_SMALL;
        }
        std::ptr::copy_nonoverlapping(bytes.as_ptr().cast(), buf, bytes.len());
        *buf.add(bytes.len()) = 0;
        bytes.len() as i32
    })
}

/// Parses one-line notation such as `"43215"` or `"4,3,2,1,5"`.
#[no_mangle]
pub unsafe extern "C" fn hp_permutation_parse(s: *const c_char, out_perm: *mut *mut HpPermutation) -> i32 {
    guard(|| {
        let slot = out(out_perm, "out_perm")?;
        let w: Permutation = text(s, "s")?.parse()?;
        *slot = boxed(HpPermutation(w));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hp_permutation_from_one_line(
    values: *const u32,
    n: usize,
    out_perm: *mut *mut HpPermutation,
) -> i32 {
    guard(|| {
        let slot = out(out_perm, "out_perm")?;
        if values.is_null() && n > 0 {
            return Err(Failure::new(HP_ERR_NULL, "values is null"));
        }
        let raw = if n == 0 { &[][..] } else { std::slice::from_raw_parts(values, n) };
        let w = Permutation::new(raw.iter().map(|&v| v as usize).collect())?;
        *slot = boxed(HpPermutation(w));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hp_permutation_free(p: *mut HpPermutation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// `n` for a permutation of `1..=n`; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn hp_permutation_size(p: *const HpPermutation) -> usize {
    p.as_ref().map_or(0, |p| p.0.n())
}

#[no_mangle]
pub unsafe extern "C" fn hp_permutation_one_line(
    p: *const HpPermutation,
    buf: *mut u32,
    cap: usize,
    len_out: *mut usize,
) -> i32 {
    guard(|| {
        let w = &arg(p, "p")?.0;
        let values: Vec<u32> = w.iter().map(|v| v as u32).collect();
        fill(&values, buf, cap, len_out)
    })
}

#[no_mangle]
pub unsafe extern "C" fn hp_permutation_to_string(
    p: *const HpPermutation,
    buf: *mut c_char,
    cap: usize,
    len_out: *mut usize,
) -> i32 {
    guard(|| fill_str(&arg(p, "p")?.0.to_string(), buf, cap, len_out))
}

/// Coxeter length (number of inversions).
#[no_mangle]
pub unsafe extern "C" fn hp_permutation_length(p: *const HpPermutation, len_out: *mut usize) -> i32 {
    guard(|| {
        let w = &arg(p, "p")?.0;
        *out(len_out, "len_out")? = w.length();
        Ok(())
    })
}

/// `*result = v <= w` in Bruhat order.
#[no_mangle]
pub unsafe extern "C" fn hp_bruhat_leq(v: *const HpPermutation, w: *const HpPermutation, result: *mut bool) -> i32 {
    guard(|| {
        let v = &arg(v, "v")?.0;
        let w = &arg(w, "w")?.0;
        let slot = out(result, "result")?;
        *slot = bruhat_leq(v, w)?;
        Ok(())
    })
}

/// Parses a comma-separated Hessenberg function such as `"3,3,4,5,5"`.
#[no_mangle]
pub unsafe extern "C" fn hp_hessenberg_parse(s: *const c_char, out_h: *mut *mut HpHessenberg) -> i32 {
    guard(|| {
        let slot = out(out_h, "out_h")?;
        let h: HessenbergFunction = text(s, "s")?.parse()?;
        *slot = boxed(HpHessenberg(h));
        Ok(())
    })
}

/// The function `(3,3,4,5,...,n,n)`; requires `n >= 4`.
#[no_mangle]
pub unsafe extern "C" fn hp_hessenberg_334(n: usize, out_h: *mut *mut HpHessenberg) -> i32 {
    guard(|| {
        let slot = out(out_h, "out_h")?;
        *slot = boxed(HpHessenberg(h334(n)?));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn hp_hessenberg_free(h: *mut HpHessenberg) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Rolldown of the fixed point `w` in the regular nilpotent Hessenberg
/// variety of `h`. The result is a new handle owned by the caller.
#[no_mangle]
pub unsafe extern "C" fn hp_rolldown(
    w: *const HpPermutation,
    h: *const HpHessenberg,
    out_perm: *mut *mut HpPermutation,
) -> i32 {
    guard(|| {
        let w = &arg(w, "w")?.0;
        let h = &arg(h, "h")?.0;
        let slot = out(out_perm, "out_perm")?;
        let r = rolldown(w, &YoungDiagram::single_row(w.n()), h)?;
        *slot = boxed(HpPermutation(r));
        Ok(())
    })
}

/// Dimension of the affine cell of the fixed point `w`.
#[no_mangle]
pub unsafe extern "C" fn hp_degree(w: *const HpPermutation, h: *const HpHessenberg, degree_out: *mut usize) -> i32 {
    guard(|| {
        let w = &arg(w, "w")?.0;
        let h = &arg(h, "h")?.0;
        let slot = out(degree_out, "degree_out")?;
        *slot = degree(w, &YoungDiagram::single_row(w.n()), h)?;
        Ok(())
    })
}

/// Betti numbers `b_0, b_1, ...` of the regular nilpotent Hessenberg variety.
#[no_mangle]
pub unsafe extern "C" fn hp_betti_numbers(
    h: *const HpHessenberg,
    buf: *mut usize,
    cap: usize,
    len_out: *mut usize,
) -> i32 {
    guard(|| {
        let h = &arg(h, "h")?.0;
        let b = hesspin::betti_numbers(&YoungDiagram::single_row(h.n()), h)?;
        fill(&b.0, buf, cap, len_out)
    })
}

/// Runs the pinball checks. `lambda` is a comma-separated partition of `n`,
/// or null for the single row.
#[no_mangle]
pub unsafe extern "C" fn hp_verify_pinball(
    h: *const HpHessenberg,
    lambda: *const c_char,
    summary: *mut HpPinballSummary,
) -> i32 {
    guard(|| {
        let h = &arg(h, "h")?.0;
        let slot = out(summary, "summary")?;
        let shape = if lambda.is_null() {
            YoungDiagram::single_row(h.n())
        } else {
            let rows = text(lambda, "lambda")?
                .split(',')
                .map(|p| p.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::new(HP_ERR_INVALID_INPUT, format!("invalid partition: {e}")))?;
            YoungDiagram::new(rows)?
        };
        let report = verify_pinball(&shape, h)?;
        *slot = HpPinballSummary {
            fixed_points: report.fixed_points,
            injective: report.injective,
            bruhat_decreasing: report.bruhat_decreasing,
            betti_match: report.betti_match,
        };
        Ok(())
    })
}

/// `p_v(w) = c * t^d`. The decimal digits of `c` are written to `coeff_buf`
/// and `d` to `*degree_out`. Zero is reported as `"0"` with degree 0.
#[no_mangle]
pub unsafe extern "C" fn hp_p_restriction(
    v: *const HpPermutation,
    w: *const HpPermutation,
    coeff_buf: *mut c_char,
    cap: usize,
    len_out: *mut usize,
    degree_out: *mut u32,
) -> i32 {
    guard(|| {
        let v = &arg(v, "v")?.0;
        let w = &arg(w, "w")?.0;
        write_s1(&p_restriction(v, w)?, coeff_buf, cap, len_out, degree_out)
    })
}

/// Closed-form value of `p_{roll(w)}(w)` for a 334-type fixed point `w`,
/// in the format of [`hp_p_restriction`].
#[no_mangle]
pub unsafe extern "C" fn hp_closed_form_restriction(
    w: *const HpPermutation,
    coeff_buf: *mut c_char,
    cap: usize,
    len_out: *mut usize,
    degree_out: *mut u32,
) -> i32 {
    guard(|| {
        let w = &arg(w, "w")?.0;
        write_s1(&closed_form_restriction(w)?, coeff_buf, cap, len_out, degree_out)
    })
}

/// Verifies every property of the 334-type basis at size `n >= 4`.
#[no_mangle]
pub unsafe extern "C" fn hp_verify_334(n: usize, passed: *mut bool, fixed_points: *mut usize) -> i32 {
    guard(|| {
        let passed = out(passed, "passed")?;
        let count = out(fixed_points, "fixed_points")?;
        let report = verify_334_theorem(n)?;
        *passed = report.passed();
        *count = report.fixed_points;
        Ok(())
    })
}
