//! C ABI over `turan-core`.
//!
//! Graphs cross the boundary as opaque `TuranGraph` handles owned by the
//! caller and released with `turan_graph_free`. Strings returned by the
//! library are released with `turan_string_free`. Every fallible function
//! returns a `TuranStatus`; on failure `turan_last_error` describes the
//! problem for the calling thread. Panics never unwind into C.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use turan_core::constructions::Construction;
use turan_core::exact::{self, SearchOptions};
use turan_core::heuristic::{self, SearchBudget};
use turan_core::{canonical_form, graph6, Error, Graph, Pattern, PatternSet};

/// Opaque graph handle.
pub struct TuranGraph(Graph);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TuranStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed graph6, pattern or construction string.
    Parse = 3,
    /// An argument is outside its documented range.
    Range = 4,
    /// A construction was asked for an impossible parity combination.
    Parity = 5,
    /// The exhaustive search lies outside the feasibility envelope.
    Infeasible = 6,
    Overflow = 7,
    /// An internal error; the message holds the panic payload.
    Internal = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> TuranStatus {
    match err {
        Error::Pattern(_) | Error::Construction(_) | Error::Graph6(_) => TuranStatus::Parse,
        Error::Parity(_) => TuranStatus::Parity,
        Error::Infeasible { .. } => TuranStatus::Infeasible,
        Error::Overflow { .. } | Error::OrderOverflow(_) => TuranStatus::Overflow,
        _ => TuranStatus::Range,
    }
}

struct Fail(TuranStatus, String);

impl From<Error> for Fail {
    fn from(err: Error) -> Self {
        Fail(status_of(&err), err.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> TuranStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            TuranStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&msg);
            TuranStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(
            TuranStatus::NullPointer,
            "null string argument".into(),
        ));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        Fail(
            TuranStatus::InvalidUtf8,
            "string argument is not UTF-8".into(),
        )
    })
}

fn non_null<T>(p: *const T) -> Result<(), Fail> {
    if p.is_null() {
        Err(Fail(
            TuranStatus::NullPointer,
            "null pointer argument".into(),
        ))
    } else {
        Ok(())
    }
}

unsafe fn graph<'a>(p: *const TuranGraph) -> Result<&'a Graph, Fail> {
    non_null(p)?;
    Ok(&(*p).0)
}

fn new_string(s: String) -> *mut c_char {
    CString::new(s).expect("graph6 has no NUL").into_raw()
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into the library.
#[no_mangle]
pub extern "C" fn turan_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Decodes a graph6 string into a new handle.
///
/// # Safety
/// `code` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn turan_graph_from_graph6(
    code: *const c_char,
    out: *mut *mut TuranGraph,
) -> TuranStatus {
    guard(|| {
        non_null(out)?;
        let g = graph6::decode(text(code)?).map_err(Error::from)?;
        *out = Box::into_raw(Box::new(TuranGraph(g)));
        Ok(())
    })
}

/// Builds a graph from a construction spec such as `g5:p=4`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn turan_graph_construct(
    spec: *const c_char,
    out: *mut *mut TuranGraph,
) -> TuranStatus {
    guard(|| {
        non_null(out)?;
        let c: Construction = text(spec)?.parse()?;
        *out = Box::into_raw(Box::new(TuranGraph(c.build()?)));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn turan_graph_free(g: *mut TuranGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn turan_graph_order(g: *const TuranGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn turan_graph_size(g: *const TuranGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.size())
}

/// graph6 of the graph as labelled; free with `turan_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn turan_graph_to_graph6(
    g: *const TuranGraph,
    out: *mut *mut c_char,
) -> TuranStatus {
    guard(|| {
        non_null(out)?;
        *out = new_string(graph6::encode(graph(g)?));
        Ok(())
    })
}

/// graph6 of the canonical form; equal strings mean isomorphic graphs.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn turan_graph_canonical_graph6(
    g: *const TuranGraph,
    out: *mut *mut c_char,
) -> TuranStatus {
    guard(|| {
        non_null(out)?;
        *out = new_string(canonical_form(graph(g)?).to_graph6());
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn turan_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of copies of `pattern` (for example `b:4` or `c4`) in `g`.
///
/// # Safety
/// `g` must be a live handle, `pattern` NUL-terminated, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn turan_count(
    g: *const TuranGraph,
    pattern: *const c_char,
    out: *mut u64,
) -> TuranStatus {
    guard(|| {
        non_null(out)?;
        let p: Pattern = text(pattern)?.parse()?;
        *out = p.count(graph(g)?);
        Ok(())
    })
}

fn options(jobs: usize, override_envelope: bool) -> SearchOptions {
    SearchOptions {
        jobs: jobs.max(1),
        override_envelope,
    }
}

/// Turán number `ex(n, patterns)` by exhaustive search. `patterns` is a
/// single pattern or `family:a,b,...`.
///
/// # Safety
/// `patterns` must be NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn turan_ex(
    n: usize,
    patterns: *const c_char,
    jobs: usize,
    override_envelope: bool,
    out: *mut usize,
) -> TuranStatus {
    guard(|| {
        non_null(out)?;
        let set: PatternSet = text(patterns)?.parse()?;
        *out = exact::turan_number(n, &set, options(jobs, override_envelope))?.ex;
        Ok(())
    })
}

/// Minimum copies of `pattern` over graphs of order `n` and size `e`, by
/// exhaustive search. `witness`, when not null, receives one minimiser.
///
/// # Safety
/// `pattern` must be NUL-terminated, `out` valid, `witness` null or valid.
#[no_mangle]
pub unsafe extern "C" fn turan_min_copies(
    n: usize,
    e: usize,
    pattern: *const c_char,
    jobs: usize,
    override_envelope: bool,
    out: *mut u64,
    witness: *mut *mut TuranGraph,
) -> TuranStatus {
    guard(|| {
        non_null(out)?;
        let p: Pattern = text(pattern)?.parse()?;
        let r = exact::min_copies(n, e, &p, options(jobs, override_envelope))?;
        *out = r.min_copies;
        if !witness.is_null() {
            let g = graph6::decode(&r.witnesses[0]).map_err(Error::from)?;
            *witness = Box::into_raw(Box::new(TuranGraph(g)));
        }
        Ok(())
    })
}

/// Annealing search for a graph of order `n` and size `e` with few copies of
/// `pattern`. The count is an upper bound only. Zero `steps` or `restarts`
/// keep the library defaults.
///
/// # Safety
/// `pattern` must be NUL-terminated, `out` valid, `witness` null or valid.
#[no_mangle]
pub unsafe extern "C" fn turan_witness_search(
    n: usize,
    e: usize,
    pattern: *const c_char,
    seed: u64,
    steps: u64,
    restarts: u32,
    jobs: usize,
    out: *mut u64,
    witness: *mut *mut TuranGraph,
) -> TuranStatus {
    guard(|| {
        non_null(out)?;
        let p: Pattern = text(pattern)?.parse()?;
        let mut budget = SearchBudget {
            seed,
            ..SearchBudget::default()
        };
        if steps > 0 {
            budget.max_steps = steps;
        }
        if restarts > 0 {
            budget.restarts = restarts;
        }
        let r = heuristic::search_min_copies(n, e, &p, &budget, None, jobs.max(1))?;
        *out = r.min_copies;
        if !witness.is_null() {
            let g = graph6::decode(&r.witnesses[0]).map_err(Error::from)?;
            *witness = Box::into_raw(Box::new(TuranGraph(g)));
        }
        Ok(())
    })
}
