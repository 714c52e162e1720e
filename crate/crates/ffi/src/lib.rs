//! C ABI for `nprime`.
//!
//! Graphs and labelings cross the boundary as opaque handles that the caller
//! frees with `np_graph_free` / `np_labeling_free`. Every fallible call
//! returns an [`NpStatus`]; on failure a message is available from
//! `np_last_error_message` until the next failing call on the same thread.
//! Vertices and labels are 1-based, as in the Rust API.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::{c_char, size_t};

use nprime::search::{bertrand_prime, coprime_matching, VertexOrder};
use nprime::{Error, FamilySpec, Graph, Labeling, SearchConfig, Status};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NpStatus {
    Ok = 0,
    NullPointer = 1,
    Usage = 2,
    LabelingInvalid = 3,
    InvalidSpec = 4,
    UnsupportedParameters = 5,
    PreconditionViolated = 6,
    UnsupportedStructure = 7,
    Parse = 8,
    InvalidUtf8 = 9,
    BufferTooSmall = 10,
    Panic = 11,
}

/// Outcome of `np_find_labeling`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NpSearchStatus {
    Found = 0,
    Exhausted = 1,
    Inconclusive = 2,
}

/// Opaque graph handle.
pub struct NpGraph(Graph);

/// Opaque labeling handle.
pub struct NpLabeling(Labeling);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: NpStatus, msg: impl Into<String>) -> NpStatus {
    set_error(msg.into());
    status
}

fn from_error(e: Error) -> NpStatus {
    let status = match &e {
        Error::Usage(_) => NpStatus::Usage,
        Error::LabelingInvalid(_) => NpStatus::LabelingInvalid,
        Error::InvalidSpec(_) => NpStatus::InvalidSpec,
        Error::UnsupportedParameters(_) => NpStatus::UnsupportedParameters,
        Error::PreconditionViolated(_) => NpStatus::PreconditionViolated,
        Error::UnsupportedStructure(_) => NpStatus::UnsupportedStructure,
        Error::Parse { .. } => NpStatus::Parse,
    };
    fail(status, e.to_string())
}

/// Runs `body`, turning panics into `NpStatus::Panic`.
fn guard(body: impl FnOnce() -> Result<(), NpStatus>) -> NpStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => NpStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(NpStatus::Panic, "internal panic"),
    }
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, NpStatus> {
    if s.is_null() {
        return Err(fail(NpStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(NpStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn out_ptr<'a, T>(p: *mut T) -> Result<&'a mut T, NpStatus> {
    p.as_mut().ok_or_else(|| fail(NpStatus::NullPointer, "null output pointer"))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, NpStatus> {
    p.as_ref().ok_or_else(|| fail(NpStatus::NullPointer, "null handle"))
}

unsafe fn copy_out(values: &[usize], buf: *mut size_t, len: size_t) -> Result<(), NpStatus> {
    if len < values.len() {
        return Err(fail(
            NpStatus::BufferTooSmall,
            format!("buffer holds {len} values, need {}", values.len()),
        ));
    }
    if values.is_empty() {
        return Ok(());
    }
    if buf.is_null() {
        return Err(fail(NpStatus::NullPointer, "null buffer"));
    }
    ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    Ok(())
}

/// Message for the last failing call on this thread, or NULL. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn np_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a family member from a spec string such as `"gear:4"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn np_graph_generate(spec: *const c_char, out: *mut *mut NpGraph) -> NpStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let spec: FamilySpec = c_str(spec)?.parse().map_err(from_error)?;
        let g = nprime::generate(&spec).map_err(from_error)?;
        *out = Box::into_raw(Box::new(NpGraph(g)));
        Ok(())
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0, v0, u1, v1, ...`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` values (or be NULL when zero);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn np_graph_from_edges(
    n: size_t,
    edges: *const size_t,
    edge_count: size_t,
    out: *mut *mut NpGraph,
) -> NpStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(fail(NpStatus::NullPointer, "null edge array"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let g = Graph::new(n, flat.chunks_exact(2).map(|e| (e[0], e[1]))).map_err(from_error)?;
        *out = Box::into_raw(Box::new(NpGraph(g)));
        Ok(())
    })
}

/// Parses edge-list text (`n m` header, then `u v` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn np_graph_parse_edge_list(text: *const c_char, out: *mut *mut NpGraph) -> NpStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let g = nprime::io::parse_edge_list(c_str(text)?).map_err(from_error)?;
        *out = Box::into_raw(Box::new(NpGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `g` must come from this library and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn np_graph_free(g: *mut NpGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn np_graph_vertex_count(g: *const NpGraph) -> size_t {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Number of edges, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn np_graph_edge_count(g: *const NpGraph) -> size_t {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Copies the sorted edges flat into `buf`, which must hold
/// `2 * np_graph_edge_count(g)` values.
///
/// # Safety
/// `g` must be a live handle; `buf` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn np_graph_copy_edges(g: *const NpGraph, buf: *mut size_t, len: size_t) -> NpStatus {
    guard(|| {
        let g = handle(g)?;
        let flat: Vec<usize> = g.0.edges().iter().flat_map(|&(u, v)| [u, v]).collect();
        copy_out(&flat, buf, len)
    })
}

/// Runs the family's constructive labeler. On success both outputs are set
/// and must be freed by the caller.
///
/// # Safety
/// `spec` must be a NUL-terminated string; both outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn np_label_family(
    spec: *const c_char,
    out_graph: *mut *mut NpGraph,
    out_labeling: *mut *mut NpLabeling,
) -> NpStatus {
    guard(|| {
        let out_graph = out_ptr(out_graph)?;
        let out_labeling = out_ptr(out_labeling)?;
        let spec: FamilySpec = c_str(spec)?.parse().map_err(from_error)?;
        let (g, f) = nprime::label_family(&spec).map_err(from_error)?;
        *out_graph = Box::into_raw(Box::new(NpGraph(g)));
        *out_labeling = Box::into_raw(Box::new(NpLabeling(f)));
        Ok(())
    })
}

/// Wraps `labels[0..n]` (label of vertex `v` at index `v - 1`); fails with
/// `LabelingInvalid` unless it is a bijection onto `1..=n`.
///
/// # Safety
/// `labels` must point to `n` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn np_labeling_new(labels: *const size_t, n: size_t, out: *mut *mut NpLabeling) -> NpStatus {
    guard(|| {
        let out = out_ptr(out)?;
        if labels.is_null() && n > 0 {
            return Err(fail(NpStatus::NullPointer, "null label array"));
        }
        let values = if n == 0 { Vec::new() } else { std::slice::from_raw_parts(labels, n).to_vec() };
        let f = Labeling::new(values).map_err(from_error)?;
        *out = Box::into_raw(Box::new(NpLabeling(f)));
        Ok(())
    })
}

/// # Safety
/// `f` must come from this library and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn np_labeling_free(f: *mut NpLabeling) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Number of labeled vertices, or 0 for NULL.
///
/// # Safety
/// `f` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn np_labeling_len(f: *const NpLabeling) -> size_t {
    f.as_ref().map_or(0, |f| f.0.len())
}

/// Label of vertex `v`, or 0 when `f` is NULL or `v` is out of range.
///
/// # Safety
/// `f` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn np_labeling_get(f: *const NpLabeling, v: size_t) -> size_t {
    match f.as_ref() {
        Some(f) if (1..=f.0.len()).contains(&v) => f.0.label(v),
        _ => 0,
    }
}

/// Copies all labels into `buf` (vertex `v` at index `v - 1`).
///
/// # Safety
/// `f` must be a live handle; `buf` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn np_labeling_copy(f: *const NpLabeling, buf: *mut size_t, len: size_t) -> NpStatus {
    guard(|| copy_out(handle(f)?.0.as_slice(), buf, len))
}

/// Checks `f` against `g`. `out_ok` receives whether every vertex of degree
/// at least 2 has coprime neighbor labels; `out_violations` (optional)
/// receives the number of vertices that do not.
///
/// # Safety
/// Handles must be live; `out_ok` must be writable; `out_violations` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn np_verify(
    g: *const NpGraph,
    f: *const NpLabeling,
    out_ok: *mut bool,
    out_violations: *mut size_t,
) -> NpStatus {
    guard(|| {
        let (g, f) = (handle(g)?, handle(f)?);
        let ok = out_ptr(out_ok)?;
        let report = nprime::verify(&g.0, &f.0).map_err(from_error)?;
        *ok = report.ok;
        if let Some(v) = out_violations.as_mut() {
            *v = report.violations.len();
        }
        Ok(())
    })
}

/// Exact search. `budget` caps label assignments (0 = unbounded);
/// `natural_order` visits vertices by id instead of by degree. When the
/// status is `Found`, `*out_labeling` is set and owned by the caller;
/// otherwise it is set to NULL.
///
/// # Safety
/// `g` must be a live handle; both outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn np_find_labeling(
    g: *const NpGraph,
    budget: u64,
    natural_order: bool,
    out_status: *mut NpSearchStatus,
    out_labeling: *mut *mut NpLabeling,
) -> NpStatus {
    guard(|| {
        let g = handle(g)?;
        let out_status = out_ptr(out_status)?;
        let out_labeling = out_ptr(out_labeling)?;
        let cfg = SearchConfig {
            node_budget: (budget > 0).then_some(budget),
            order: if natural_order {
                VertexOrder::NaturalOrder
            } else {
                VertexOrder::DegreeDescending
            },
            find_all: false,
        };
        *out_labeling = ptr::null_mut();
        *out_status = match nprime::find_labeling(&g.0, &cfg).status {
            Status::Found(f) => {
                *out_labeling = Box::into_raw(Box::new(NpLabeling(f)));
                NpSearchStatus::Found
            }
            Status::Exhausted => NpSearchStatus::Exhausted,
            Status::Inconclusive => NpSearchStatus::Inconclusive,
        };
        Ok(())
    })
}

/// Writes the partner of `x` at `buf[x - 1]` for the smallest coprime
/// matching of `1..=n` into `2n+1..=3n`.
///
/// # Safety
/// `buf` must hold `len >= n` values.
#[no_mangle]
pub unsafe extern "C" fn np_coprime_matching(n: size_t, buf: *mut size_t, len: size_t) -> NpStatus {
    guard(|| {
        if n == 0 {
            return Err(fail(NpStatus::Usage, "n must be at least 1"));
        }
        copy_out(coprime_matching(n).as_slice(), buf, len)
    })
}

/// Smallest prime in `(n, 2n]`, or 0 when `n == 0`.
#[no_mangle]
pub extern "C" fn np_bertrand_prime(n: size_t) -> size_t {
    if n == 0 {
        0
    } else {
        bertrand_prime(n)
    }
}
