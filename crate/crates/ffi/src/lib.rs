//! C ABI over `nu-partitions`.
//!
//! Partitions and odd Ferrers graphs cross the boundary as opaque handles
//! created by `nu_*_new` (or returned through out-parameters) and released
//! with the matching `nu_*_free`. Every fallible call returns a [`NuStatus`];
//! on failure `nu_last_error()` holds a description until the next failing
//! call on the same thread. Strings returned by the library are released with
//! `nu_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nu_partitions::{classes, qseries, Error, OddFerrersGraph, Partition};

/// Opaque partition handle.
pub struct NuPartition(Partition);

/// Opaque odd Ferrers graph handle.
pub struct NuGraph(OddFerrersGraph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NuStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidPartition = 3,
    EmptyShape = 4,
    NotSelfConjugate = 5,
    InvalidHookList = 6,
    NotDistinctOdd = 7,
    MalformedSClass = 8,
    MalformedDClass = 9,
    MalformedDoClass = 10,
    PostconditionViolated = 11,
    TruncationMismatch = 12,
    NonUnitConstantTerm = 13,
    Overflow = 14,
    Panic = 15,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NuClass {
    O = 0,
    S = 1,
    D = 2,
    Do = 3,
}

impl From<NuClass> for classes::ClassId {
    fn from(c: NuClass) -> Self {
        match c {
            NuClass::O => classes::ClassId::O,
            NuClass::S => classes::ClassId::S,
            NuClass::D => classes::ClassId::D,
            NuClass::Do => classes::ClassId::DO,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> NuStatus {
    match e {
        Error::InvalidPartition(_) => NuStatus::InvalidPartition,
        Error::EmptyShape => NuStatus::EmptyShape,
        Error::NotSelfConjugate(_) => NuStatus::NotSelfConjugate,
        Error::InvalidHookList(_) => NuStatus::InvalidHookList,
        Error::NotDistinctOdd(_) => NuStatus::NotDistinctOdd,
        Error::MalformedSClass(_) => NuStatus::MalformedSClass,
        Error::MalformedDClass(_) => NuStatus::MalformedDClass,
        Error::MalformedDOClass(_) => NuStatus::MalformedDoClass,
        Error::PostconditionViolated(_) => NuStatus::PostconditionViolated,
        Error::TruncationMismatch { .. } => NuStatus::TruncationMismatch,
        Error::NonUnitConstantTerm(_) => NuStatus::NonUnitConstantTerm,
        Error::Overflow => NuStatus::Overflow,
    }
}

enum Fail {
    Lib(Error),
    Null(&'static str),
    Arg(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

/// Runs `f`, translating errors and panics into a status plus last-error text.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> NuStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NuStatus::Ok,
        Ok(Err(Fail::Lib(e))) => {
            set_last_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Null(name))) => {
            set_last_error(format!("NullPointer: argument `{name}` is null"));
            NuStatus::NullPointer
        }
        Ok(Err(Fail::Arg(msg))) => {
            set_last_error(format!("InvalidArgument: {msg}"));
            NuStatus::InvalidArgument
        }
        Err(_) => {
            set_last_error("Panic: internal error".into());
            NuStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, name: &'static str) -> Result<&'a T, Fail> {
    // SAFETY: the caller passes either null or a live handle from this library.
    unsafe { p.as_ref() }.ok_or(Fail::Null(name))
}

unsafe fn emit<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null("out"));
    }
    // SAFETY: `out` is non-null and points to writable storage per the contract.
    unsafe { *out = Box::into_raw(Box::new(value)) };
    Ok(())
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null("out"));
    }
    // SAFETY: as above.
    unsafe { *out = value };
    Ok(())
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn nu_status_message(status: NuStatus) -> *const c_char {
    let msg: &'static CStr = match status {
        NuStatus::Ok => c"ok",
        NuStatus::NullPointer => c"null pointer argument",
        NuStatus::InvalidArgument => c"invalid argument",
        NuStatus::InvalidPartition => c"parts must be positive and weakly decreasing",
        NuStatus::EmptyShape => c"an odd Ferrers graph needs at least one cell",
        NuStatus::NotSelfConjugate => c"partition is not self-conjugate",
        NuStatus::InvalidHookList => c"hook arms must be positive and strictly decreasing",
        NuStatus::NotDistinctOdd => c"parts are not distinct and odd",
        NuStatus::MalformedSClass => c"input is not a self-conjugate partition into odd parts",
        NuStatus::MalformedDClass => c"input is not in the class D",
        NuStatus::MalformedDoClass => c"input is not in the class DO",
        NuStatus::PostconditionViolated => c"image failed its class check",
        NuStatus::TruncationMismatch => c"truncation orders differ",
        NuStatus::NonUnitConstantTerm => c"constant term is not a unit",
        NuStatus::Overflow => c"64-bit integer overflow",
        NuStatus::Panic => c"internal error",
    };
    msg.as_ptr()
}

/// Description of the last failure on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn nu_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nu_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by CString::into_raw below.
        drop(unsafe { CString::from_raw(s) });
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// Builds a partition from `len` parts (weakly decreasing, each >= 1).
/// `parts` may be null when `len` is 0.
///
/// # Safety
/// `parts` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nu_partition_new(
    parts: *const u64,
    len: usize,
    out: *mut *mut NuPartition,
) -> NuStatus {
    guard(|| {
        let parts = if len == 0 {
            Vec::new()
        } else if parts.is_null() {
            return Err(Fail::Null("parts"));
        } else {
            // SAFETY: non-null with `len` elements per the contract.
            unsafe { std::slice::from_raw_parts(parts, len) }.to_vec()
        };
        unsafe { emit(out, NuPartition(Partition::new(parts)?)) }
    })
}

/// Parses comma-separated parts such as `"5,5,5,3,3"`.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nu_partition_parse(
    text: *const c_char,
    out: *mut *mut NuPartition,
) -> NuStatus {
    guard(|| {
        if text.is_null() {
            return Err(Fail::Null("text"));
        }
        // SAFETY: non-null, nul-terminated per the contract.
        let text = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|_| Fail::Arg("text is not UTF-8".into()))?;
        let p: Partition = text.parse()?;
        unsafe { emit(out, NuPartition(p)) }
    })
}

/// # Safety
/// `p` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nu_partition_free(p: *mut NuPartition) {
    if !p.is_null() {
        // SAFETY: produced by Box::into_raw in `emit`.
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Number of parts; 0 for null.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nu_partition_len(p: *const NuPartition) -> usize {
    unsafe { p.as_ref() }.map_or(0, |p| p.0.len())
}

/// Sum of the parts; 0 for null.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nu_partition_weight(p: *const NuPartition) -> u64 {
    unsafe { p.as_ref() }.map_or(0, |p| p.0.weight())
}

/// Copies up to `cap` parts into `buf` and returns the total number of parts,
/// so a short buffer can be detected and resized.
///
/// # Safety
/// `p` must be null or a live handle; `buf` must have room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn nu_partition_copy_parts(
    p: *const NuPartition,
    buf: *mut u64,
    cap: usize,
) -> usize {
    let Some(p) = (unsafe { p.as_ref() }) else {
        return 0;
    };
    let parts = p.0.parts();
    if !buf.is_null() {
        let n = parts.len().min(cap);
        // SAFETY: `buf` holds at least `cap >= n` values.
        unsafe { ptr::copy_nonoverlapping(parts.as_ptr(), buf, n) };
    }
    parts.len()
}

/// Comma-separated text form; free with `nu_string_free`. Null for null.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nu_partition_to_string(p: *const NuPartition) -> *mut c_char {
    unsafe { p.as_ref() }.map_or(ptr::null_mut(), |p| into_c_string(p.0.to_string()))
}

/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nu_partition_is_self_conjugate(p: *const NuPartition) -> bool {
    unsafe { p.as_ref() }.is_some_and(|p| p.0.is_self_conjugate())
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nu_partition_conjugate(
    p: *const NuPartition,
    out: *mut *mut NuPartition,
) -> NuStatus {
    guard(|| {
        let p = unsafe { borrow(p, "p") }?;
        unsafe { emit(out, NuPartition(p.0.conjugate())) }
    })
}

/// Wraps a copy of `shape` as an odd Ferrers graph.
///
/// # Safety
/// `shape` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nu_graph_new(
    shape: *const NuPartition,
    out: *mut *mut NuGraph,
) -> NuStatus {
    guard(|| {
        let shape = unsafe { borrow(shape, "shape") }?;
        let g = OddFerrersGraph::new(shape.0.clone())?;
        unsafe { emit(out, NuGraph(g)) }
    })
}

/// # Safety
/// `g` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nu_graph_free(g: *mut NuGraph) {
    if !g.is_null() {
        // SAFETY: produced by Box::into_raw in `emit`.
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Sum of the cell weights; 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nu_graph_weight(g: *const NuGraph) -> u64 {
    unsafe { g.as_ref() }.map_or(0, |g| g.0.weight())
}

/// A copy of the graph's shape.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nu_graph_shape(g: *const NuGraph, out: *mut *mut NuPartition) -> NuStatus {
    guard(|| {
        let g = unsafe { borrow(g, "g") }?;
        unsafe { emit(out, NuPartition(g.0.shape().clone())) }
    })
}

/// Digit diagram, rows separated by `\n`; free with `nu_string_free`.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nu_graph_render_ascii(g: *const NuGraph) -> *mut c_char {
    unsafe { g.as_ref() }.map_or(ptr::null_mut(), |g| into_c_string(g.0.render_ascii()))
}

/// Applies `f` to the value behind `input` and hands the image out as a new
/// handle.
unsafe fn map_handle<I, O, A: ?Sized, B>(
    input: *const I,
    out: *mut *mut O,
    view: impl FnOnce(&I) -> &A,
    f: impl FnOnce(&A) -> nu_partitions::Result<B>,
    wrap: impl FnOnce(B) -> O,
) -> NuStatus {
    guard(|| {
        let input = unsafe { borrow(input, "input") }?;
        let image = f(view(input))?;
        unsafe { emit(out, wrap(image)) }
    })
}

/// φ with its image checked for membership in S.
///
/// # Safety
/// `input` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nu_phi(input: *const NuGraph, out: *mut *mut NuPartition) -> NuStatus {
    unsafe {
        map_handle(
            input,
            out,
            |g: &NuGraph| &g.0,
            nu_partitions::phi_verified,
            NuPartition,
        )
    }
}

/// # Safety
/// `input` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nu_phi_inverse(
    input: *const NuPartition,
    out: *mut *mut NuGraph,
) -> NuStatus {
    unsafe {
        map_handle(
            input,
            out,
            |p: &NuPartition| &p.0,
            nu_partitions::phi_inverse,
            NuGraph,
        )
    }
}

/// # Safety
/// `input` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nu_o_to_d(input: *const NuGraph, out: *mut *mut NuPartition) -> NuStatus {
    unsafe {
        map_handle(
            input,
            out,
            |g: &NuGraph| &g.0,
            nu_partitions::o_to_d,
            NuPartition,
        )
    }
}

/// # Safety
/// `input` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nu_d_to_o(input: *const NuPartition, out: *mut *mut NuGraph) -> NuStatus {
    unsafe {
        map_handle(
            input,
            out,
            |p: &NuPartition| &p.0,
            nu_partitions::d_to_o,
            NuGraph,
        )
    }
}

/// # Safety
/// `input` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nu_d_to_do(
    input: *const NuPartition,
    out: *mut *mut NuPartition,
) -> NuStatus {
    unsafe {
        map_handle(
            input,
            out,
            |p: &NuPartition| &p.0,
            nu_partitions::d_to_do,
            NuPartition,
        )
    }
}

/// # Safety
/// `input` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nu_do_to_d(
    input: *const NuPartition,
    out: *mut *mut NuPartition,
) -> NuStatus {
    unsafe {
        map_handle(
            input,
            out,
            |p: &NuPartition| &p.0,
            nu_partitions::do_to_d,
            NuPartition,
        )
    }
}

/// # Safety
/// `input` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nu_sc_to_distinct_odd(
    input: *const NuPartition,
    out: *mut *mut NuPartition,
) -> NuStatus {
    unsafe {
        map_handle(
            input,
            out,
            |p: &NuPartition| &p.0,
            nu_partitions::sc_to_distinct_odd,
            NuPartition,
        )
    }
}

/// # Safety
/// `input` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nu_distinct_odd_to_sc(
    input: *const NuPartition,
    out: *mut *mut NuPartition,
) -> NuStatus {
    unsafe {
        map_handle(
            input,
            out,
            |p: &NuPartition| &p.0,
            nu_partitions::distinct_odd_to_sc,
            NuPartition,
        )
    }
}

/// Membership of `p` in class `class` at index `n`. For `NU_CLASS_O`, `p` is
/// read as the graph's shape.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nu_is_in_class(
    class: NuClass,
    p: *const NuPartition,
    n: u64,
    out: *mut bool,
) -> NuStatus {
    guard(|| {
        let p = &unsafe { borrow(p, "p") }?.0;
        let member = match class {
            NuClass::O => OddFerrersGraph::new(p.clone()).is_ok_and(|g| classes::is_in_o(&g, n)),
            NuClass::S => classes::is_in_s(p, n),
            NuClass::D => classes::is_in_d(p, n),
            NuClass::Do => classes::is_in_do(p, n),
        };
        unsafe { write_out(out, member) }
    })
}

/// Class index bound accepted by `nu_count` and `nu_p_nu`.
pub const NU_MAX_N: u64 = 100_000;

fn check_n(n: u64) -> Result<(), Fail> {
    if n > NU_MAX_N {
        return Err(Fail::Arg(format!("n = {n} exceeds {NU_MAX_N}")));
    }
    Ok(())
}

/// Size of class `class` at index `n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nu_count(class: NuClass, n: u64, out: *mut u64) -> NuStatus {
    guard(|| {
        check_n(n)?;
        unsafe { write_out(out, classes::count(class.into(), n)) }
    })
}

/// Coefficient of q^n in ν(−q).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nu_p_nu(n: u64, out: *mut u64) -> NuStatus {
    guard(|| {
        check_n(n)?;
        let value = qseries::p_nu(n as usize, n as usize)?;
        unsafe { write_out(out, value) }
    })
}
