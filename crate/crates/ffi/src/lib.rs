//! C ABI for the index-codes library.
//!
//! Handles are opaque; every fallible call returns an [`IcStatus`] and writes
//! results through out-pointers. On failure a thread-local message is kept
//! and can be read with [`ic_last_error_message`]. Strings returned through
//! out-pointers are heap-allocated and must be released with
//! [`ic_string_free`].
//!
//! Pointer contract for every `unsafe` export: handle arguments are either
//! null or were produced by this library and not yet freed; out-pointers are
//! either null (caught) or writable. Null handles and null out-pointers are
//! reported as [`IcStatus::NullPointer`], never dereferenced.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CString};

use index_codes::construct::{construct, CodeBook};
use index_codes::minrank::{is_critical, minrank, SearchLimits};
use index_codes::model::{capacity_general, Case, CaseParams, ProblemSpec};
use index_codes::textio::render_matrix;
use index_codes::verify::{verify_all, DecodeReport, ReceiverStatus, VerifyOptions};
use index_codes::Error;

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IcStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was outside its domain (bad enum value, zero K, ...).
    InvalidArgument = 2,
    /// Case preconditions (divisibility and ranges) do not hold.
    InvalidParameters = 3,
    /// Operand dimensions disagree.
    DimensionMismatch = 4,
    /// A bounded search gave up; the result is unknown, not wrong.
    Inconclusive = 5,
}

/// Case selector for [`ic_code_new`] and [`ic_problem_new_case`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IcCase {
    I = 1,
    II = 2,
    III = 3,
    IV = 4,
    V = 5,
    VI = 6,
    VII = 7,
    VIII = 8,
    IX = 9,
    X = 10,
}

impl From<IcCase> for Case {
    fn from(c: IcCase) -> Case {
        match c {
            IcCase::I => Case::I,
            IcCase::II => Case::II,
            IcCase::III => Case::III,
            IcCase::IV => Case::IV,
            IcCase::V => Case::V,
            IcCase::VI => Case::VI,
            IcCase::VII => Case::VII,
            IcCase::VIII => Case::VIII,
            IcCase::IX => Case::IX,
            IcCase::X => Case::X,
        }
    }
}

/// Opaque side-information pattern handle.
pub struct IcProblem {
    inner: ProblemSpec,
}

/// Opaque code handle: the generator matrix plus its parameters.
pub struct IcCode {
    inner: CodeBook,
}

/// Opaque per-receiver verification report.
pub struct IcReport {
    inner: DecodeReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn fail(err: Error) -> IcStatus {
    let status = match err {
        Error::InvalidParameters(_) => IcStatus::InvalidParameters,
        Error::DimensionMismatch(_) => IcStatus::DimensionMismatch,
        Error::Inconclusive(_) => IcStatus::Inconclusive,
        Error::Parse(_) => IcStatus::InvalidArgument,
    };
    set_error(&err.to_string());
    status
}

fn null_arg(name: &str) -> IcStatus {
    set_error(&format!("{name} must not be null"));
    IcStatus::NullPointer
}

/// Message of the last failure on this thread. Valid until the next failing
/// call on the same thread; never null.
#[no_mangle]
pub extern "C" fn ic_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        let mut borrow = slot.borrow_mut();
        if borrow.is_none() {
            *borrow = Some(CString::new("no error").unwrap());
        }
        borrow.as_ref().unwrap().as_ptr()
    })
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ic_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Capacity per message of the general neighboring pattern, as an exact
/// reduced fraction.
#[no_mangle]
pub unsafe extern "C" fn ic_capacity(
    k: u32,
    u: u32,
    d: u32,
    numerator: *mut u64,
    denominator: *mut u64,
) -> IcStatus {
    if numerator.is_null() || denominator.is_null() {
        return null_arg("numerator/denominator");
    }
    match capacity_general(k as usize, u as usize, d as usize) {
        Ok(c) => {
            unsafe {
                *numerator = c.numerator();
                *denominator = c.denominator();
            }
            IcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

fn params_from(case: IcCase, k: u32, d: u32, lambda: u32) -> Result<CaseParams, Error> {
    let case: Case = case.into();
    let lambda = if lambda == 0 {
        None
    } else {
        Some(lambda as usize)
    };
    CaseParams::new(case, k as usize, d as usize, lambda)
}

/// Builds the side-information pattern of one of the ten cases. Pass
/// lambda = 0 for cases I..IV.
#[no_mangle]
pub unsafe extern "C" fn ic_problem_new_case(
    case: IcCase,
    k: u32,
    d: u32,
    lambda: u32,
    out: *mut *mut IcProblem,
) -> IcStatus {
    if out.is_null() {
        return null_arg("out");
    }
    let result = params_from(case, k, d, lambda).and_then(|p| ProblemSpec::from_case(&p));
    match result {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(IcProblem { inner })) };
            IcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Builds the full one-sided pattern: receiver k knows the next D messages.
#[no_mangle]
pub unsafe extern "C" fn ic_problem_new_one_sided(
    k: u32,
    d: u32,
    out: *mut *mut IcProblem,
) -> IcStatus {
    if out.is_null() {
        return null_arg("out");
    }
    match ProblemSpec::one_sided(k as usize, d as usize) {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(IcProblem { inner })) };
            IcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Builds the pattern with no side information at all.
#[no_mangle]
pub unsafe extern "C" fn ic_problem_new_empty(k: u32, out: *mut *mut IcProblem) -> IcStatus {
    if out.is_null() {
        return null_arg("out");
    }
    match ProblemSpec::empty(k as usize) {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(IcProblem { inner })) };
            IcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Releases a problem handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ic_problem_free(problem: *mut IcProblem) {
    if !problem.is_null() {
        drop(unsafe { Box::from_raw(problem) });
    }
}

/// Number of side-information edges of the pattern.
#[no_mangle]
pub unsafe extern "C" fn ic_problem_edge_count(
    problem: *const IcProblem,
    out: *mut u64,
) -> IcStatus {
    if problem.is_null() {
        return null_arg("problem");
    }
    if out.is_null() {
        return null_arg("out");
    }
    unsafe { *out = (*problem).inner.edge_count() as u64 };
    IcStatus::Ok
}

/// Constructs the optimal code for a case. Pass lambda = 0 for cases I..IV.
#[no_mangle]
pub unsafe extern "C" fn ic_code_new(
    case: IcCase,
    k: u32,
    d: u32,
    lambda: u32,
    out: *mut *mut IcCode,
) -> IcStatus {
    if out.is_null() {
        return null_arg("out");
    }
    let result = params_from(case, k, d, lambda).and_then(|p| construct(&p));
    match result {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(IcCode { inner })) };
            IcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Releases a code handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ic_code_free(code: *mut IcCode) {
    if !code.is_null() {
        drop(unsafe { Box::from_raw(code) });
    }
}

/// Number of messages K.
#[no_mangle]
pub unsafe extern "C" fn ic_code_message_count(code: *const IcCode, out: *mut u32) -> IcStatus {
    if code.is_null() {
        return null_arg("code");
    }
    if out.is_null() {
        return null_arg("out");
    }
    unsafe { *out = (*code).inner.params().k() as u32 };
    IcStatus::Ok
}

/// Code length N (number of transmissions).
#[no_mangle]
pub unsafe extern "C" fn ic_code_length(code: *const IcCode, out: *mut u32) -> IcStatus {
    if code.is_null() {
        return null_arg("code");
    }
    if out.is_null() {
        return null_arg("out");
    }
    unsafe { *out = (*code).inner.len() as u32 };
    IcStatus::Ok
}

/// Generator matrix entry at 1-based (row, col); writes 0 or 1.
#[no_mangle]
pub unsafe extern "C" fn ic_code_matrix_entry(
    code: *const IcCode,
    row: u32,
    col: u32,
    out: *mut u8,
) -> IcStatus {
    if code.is_null() {
        return null_arg("code");
    }
    if out.is_null() {
        return null_arg("out");
    }
    let matrix = unsafe { (*code).inner.matrix() };
    let (row, col) = (row as usize, col as usize);
    if row < 1 || row > matrix.rows() || col < 1 || col > matrix.cols() {
        set_error(&format!(
            "entry ({row}, {col}) outside a {}x{} matrix",
            matrix.rows(),
            matrix.cols()
        ));
        return IcStatus::InvalidArgument;
    }
    unsafe { *out = matrix.get(row, col) as u8 };
    IcStatus::Ok
}

/// Generator matrix in the text format ("K N" header then 0/1 rows). The
/// returned string must be released with [`ic_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ic_code_matrix_text(
    code: *const IcCode,
    out: *mut *mut c_char,
) -> IcStatus {
    if code.is_null() {
        return null_arg("code");
    }
    if out.is_null() {
        return null_arg("out");
    }
    let text = render_matrix(unsafe { (*code).inner.matrix() });
    match CString::new(text) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            IcStatus::Ok
        }
        Err(_) => {
            set_error("matrix text contained an interior NUL");
            IcStatus::InvalidArgument
        }
    }
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ic_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(unsafe { CString::from_raw(text) });
    }
}

/// Verifies a code against a pattern. Pass max_cardinality = 0 for the
/// default cap on the fallback transmission-count search.
#[no_mangle]
pub unsafe extern "C" fn ic_verify(
    problem: *const IcProblem,
    code: *const IcCode,
    max_cardinality: u32,
    out: *mut *mut IcReport,
) -> IcStatus {
    if problem.is_null() {
        return null_arg("problem");
    }
    if code.is_null() {
        return null_arg("code");
    }
    if out.is_null() {
        return null_arg("out");
    }
    let mut options = VerifyOptions::default();
    if max_cardinality > 0 {
        options.max_cardinality = max_cardinality as usize;
    }
    match verify_all(
        unsafe { &(*problem).inner },
        unsafe { &(*code).inner },
        &options,
    ) {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(IcReport { inner })) };
            IcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Releases a report handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ic_report_free(report: *mut IcReport) {
    if !report.is_null() {
        drop(unsafe { Box::from_raw(report) });
    }
}

/// True iff every receiver can decode.
#[no_mangle]
pub unsafe extern "C" fn ic_report_all_decodable(
    report: *const IcReport,
    out: *mut u8,
) -> IcStatus {
    if report.is_null() {
        return null_arg("report");
    }
    if out.is_null() {
        return null_arg("out");
    }
    unsafe { *out = (*report).inner.all_decodable() as u8 };
    IcStatus::Ok
}

/// Per-receiver result (1-based k). Writes decodable as 0/1 and the exact
/// minimum transmission count, or 0 when it is unknown or the receiver
/// cannot decode.
#[no_mangle]
pub unsafe extern "C" fn ic_report_receiver(
    report: *const IcReport,
    k: u32,
    decodable: *mut u8,
    min_tx: *mut u32,
) -> IcStatus {
    if report.is_null() {
        return null_arg("report");
    }
    if decodable.is_null() || min_tx.is_null() {
        return null_arg("decodable/min_tx");
    }
    let inner = unsafe { &(*report).inner };
    let k = k as usize;
    if k < 1 || k > inner.k() {
        set_error(&format!("receiver {k} outside 1..={}", inner.k()));
        return IcStatus::InvalidArgument;
    }
    let status = inner.receiver(k);
    unsafe {
        *decodable = status.decodable() as u8;
        *min_tx = match status {
            ReceiverStatus::Decoded { min_tx, .. } => *min_tx as u32,
            _ => 0,
        };
    }
    IcStatus::Ok
}

/// True iff the code length equals the capacity denominator K-D.
#[no_mangle]
pub unsafe extern "C" fn ic_check_optimal_length(code: *const IcCode, out: *mut u8) -> IcStatus {
    if code.is_null() {
        return null_arg("code");
    }
    if out.is_null() {
        return null_arg("out");
    }
    unsafe { *out = index_codes::verify::check_optimal_length(&(*code).inner) as u8 };
    IcStatus::Ok
}

fn limits_from(max_edges: u32, max_nodes: u64) -> SearchLimits {
    let mut limits = SearchLimits::default();
    if max_edges > 0 {
        limits.max_edges = max_edges as usize;
    }
    if max_nodes > 0 {
        limits.max_nodes = max_nodes;
    }
    limits
}

/// Exact minrank of the pattern. Pass 0 budgets for the defaults. Returns
/// `Inconclusive` when a budget is exhausted.
#[no_mangle]
pub unsafe extern "C" fn ic_minrank(
    problem: *const IcProblem,
    max_edges: u32,
    max_nodes: u64,
    value: *mut u32,
    explored: *mut u64,
) -> IcStatus {
    if problem.is_null() {
        return null_arg("problem");
    }
    if value.is_null() {
        return null_arg("value");
    }
    match minrank(
        unsafe { &(*problem).inner },
        &limits_from(max_edges, max_nodes),
    ) {
        Ok(result) => {
            unsafe {
                *value = result.value as u32;
                if !explored.is_null() {
                    *explored = result.explored;
                }
            }
            IcStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Whether every edge of the pattern is critical for the minrank. Pass 0
/// budgets for the defaults.
#[no_mangle]
pub unsafe extern "C" fn ic_critical(
    problem: *const IcProblem,
    max_edges: u32,
    max_nodes: u64,
    overall: *mut u8,
) -> IcStatus {
    if problem.is_null() {
        return null_arg("problem");
    }
    if overall.is_null() {
        return null_arg("overall");
    }
    match is_critical(
        unsafe { &(*problem).inner },
        &limits_from(max_edges, max_nodes),
    ) {
        Ok(report) => {
            unsafe { *overall = report.overall as u8 };
            IcStatus::Ok
        }
        Err(e) => fail(e),
    }
}
