//! C ABI for the trigraph toolkit: opaque handles over graphs, solve reports
//! and constructions, with status codes for every fallible call.
//!
//! Conventions:
//! - Every function is safe to call with null pointers; constructors report
//!   `TgStatus::NullArgument` instead of crashing.
//! - Objects returned through out-pointers are owned by the caller and must
//!   be released with the matching `tg_*_free` function.
//! - Strings returned as `char*` are NUL-terminated, owned by the caller,
//!   and released with `tg_string_free`.
//!
//! The matching header is generated into `include/trigraph.h` by the build
//! script (cbindgen).

use std::ffi::{c_char, CStr, CString};
use std::time::Duration;

use trigraph::build;
use trigraph::constructions::{self, Construction, ConstructionKind};
use trigraph::formulas;
use trigraph::model::Graph;
use trigraph::solver::{
    brute_force_mis, max_independent_set, verify_independent, Budget, SolveOptions, SolveReport,
};

/// Status code of a fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TgStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// An argument was out of range or otherwise invalid.
    InvalidArgument = 2,
    /// Text input failed to parse.
    ParseError = 3,
    /// The instance exceeds a hard limit (dimension or brute-force order).
    TooLarge = 4,
    /// The candidate set is not independent or indices are out of range.
    VerifyFailed = 5,
}

/// Opaque graph handle.
pub struct TgGraph(Graph);

/// Opaque solve-report handle.
pub struct TgReport(SolveReport);

/// Opaque construction handle.
pub struct TgConstruction(Construction);

fn graph_out(out: *mut *mut TgGraph, graph: Graph) -> TgStatus {
    // SAFETY: caller passed a writable out-pointer; null was checked before.
    unsafe { *out = Box::into_raw(Box::new(TgGraph(graph))) };
    TgStatus::Ok
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn tg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Builds the full sign-vector graph of dimension `n` (8 C(n,3) vertices).
///
/// # Safety
/// `out` must be a valid pointer to a `TgGraph*` slot.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_gn(n: u32, out: *mut *mut TgGraph) -> TgStatus {
    if out.is_null() {
        return TgStatus::NullArgument;
    }
    match build::build_gn(n as usize) {
        Ok(g) => graph_out(out, g),
        Err(_) => TgStatus::TooLarge,
    }
}

/// Builds the 0/1 restriction of dimension `n` (C(n,3) vertices).
///
/// # Safety
/// `out` must be a valid pointer to a `TgGraph*` slot.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_nagy(n: u32, out: *mut *mut TgGraph) -> TgStatus {
    if out.is_null() {
        return TgStatus::NullArgument;
    }
    match build::build_nagy(n as usize) {
        Ok(g) => graph_out(out, g),
        Err(_) => TgStatus::TooLarge,
    }
}

/// Builds the canonical signplace configuration with `doubles` two-sign
/// places and `singles` plus-only places.
///
/// # Safety
/// `out` must be a valid pointer to a `TgGraph*` slot.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_config(
    doubles: u32,
    singles: u32,
    out: *mut *mut TgGraph,
) -> TgStatus {
    if out.is_null() {
        return TgStatus::NullArgument;
    }
    match build::build_config(build::SignplaceConfig::new(doubles as usize, singles as usize)) {
        Ok(g) => graph_out(out, g),
        Err(_) => TgStatus::TooLarge,
    }
}

/// Parses a DIMACS graph (`p edge` header, `e` lines, 1-based indices).
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` a valid slot.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_from_dimacs(
    text: *const c_char,
    out: *mut *mut TgGraph,
) -> TgStatus {
    if text.is_null() || out.is_null() {
        return TgStatus::NullArgument;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return TgStatus::ParseError;
    };
    match build::from_dimacs(text) {
        Ok(g) => graph_out(out, g),
        Err(_) => TgStatus::ParseError,
    }
}

/// Serializes the adjacency relation as DIMACS text. Returns null when `g`
/// is null; release with `tg_string_free`.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_to_dimacs(g: *const TgGraph) -> *mut c_char {
    if g.is_null() {
        return std::ptr::null_mut();
    }
    let text = build::to_dimacs(&(*g).0);
    CString::new(text).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Complement on the same vertex set.
///
/// # Safety
/// `g` must be a live graph handle; `out` a valid slot.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_complement(
    g: *const TgGraph,
    out: *mut *mut TgGraph,
) -> TgStatus {
    if g.is_null() || out.is_null() {
        return TgStatus::NullArgument;
    }
    graph_out(out, (*g).0.complement())
}

/// Number of vertices, or -1 when `g` is null.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_order(g: *const TgGraph) -> i64 {
    if g.is_null() {
        return -1;
    }
    (*g).0.order() as i64
}

/// Number of edges, or -1 when `g` is null.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_edge_count(g: *const TgGraph) -> i64 {
    if g.is_null() {
        return -1;
    }
    (*g).0.edge_count() as i64
}

/// Writes whether vertices `u` and `v` are adjacent into `out`.
///
/// # Safety
/// `g` must be a live graph handle; `out` a valid `bool` slot.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_adjacent(
    g: *const TgGraph,
    u: u32,
    v: u32,
    out: *mut bool,
) -> TgStatus {
    if g.is_null() || out.is_null() {
        return TgStatus::NullArgument;
    }
    let graph = &(*g).0;
    if u as usize >= graph.order() || v as usize >= graph.order() || u == v {
        return TgStatus::InvalidArgument;
    }
    *out = graph.adjacent(u as usize, v as usize);
    TgStatus::Ok
}

/// Releases a graph handle. Null is a no-op.
///
/// # Safety
/// `g` must be null or a pointer obtained from a `tg_graph_*` constructor,
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tg_graph_free(g: *mut TgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Exact maximum-independent-set solve.
///
/// `time_limit_ms` and `node_limit` of 0 mean unlimited; `threads` of 0 uses
/// the available parallelism. The report is exact unless the budget ran out,
/// in which case it carries a lower/upper bound pair.
///
/// # Safety
/// `g` must be a live graph handle; `out` a valid slot.
#[no_mangle]
pub unsafe extern "C" fn tg_solve(
    g: *const TgGraph,
    time_limit_ms: u64,
    node_limit: u64,
    threads: u32,
    out: *mut *mut TgReport,
) -> TgStatus {
    if g.is_null() || out.is_null() {
        return TgStatus::NullArgument;
    }
    let budget = Budget {
        time: (time_limit_ms > 0).then(|| Duration::from_millis(time_limit_ms)),
        nodes: (node_limit > 0).then_some(node_limit),
    };
    let opts = SolveOptions { budget, threads: (threads > 0).then_some(threads as usize) };
    let report = max_independent_set(&(*g).0, opts);
    *out = Box::into_raw(Box::new(TgReport(report)));
    TgStatus::Ok
}

/// Whether the report carries the exact independence number.
///
/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn tg_report_is_exact(r: *const TgReport) -> bool {
    !r.is_null() && (*r).0.outcome.is_exact()
}

/// Best proven lower bound (witness size); the exact value when exact.
///
/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn tg_report_lower(r: *const TgReport) -> u64 {
    if r.is_null() {
        return 0;
    }
    (*r).0.outcome.lower() as u64
}

/// Best proven upper bound; the exact value when exact.
///
/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn tg_report_upper(r: *const TgReport) -> u64 {
    if r.is_null() {
        return 0;
    }
    (*r).0.outcome.upper() as u64
}

/// Search-tree nodes visited.
///
/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn tg_report_nodes(r: *const TgReport) -> u64 {
    if r.is_null() {
        return 0;
    }
    (*r).0.nodes
}

/// Wall-clock solve time in milliseconds.
///
/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn tg_report_elapsed_ms(r: *const TgReport) -> u64 {
    if r.is_null() {
        return 0;
    }
    (*r).0.elapsed.as_millis() as u64
}

/// Size of the witness independent set.
///
/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn tg_report_witness_len(r: *const TgReport) -> u64 {
    if r.is_null() {
        return 0;
    }
    (*r).0.witness.len() as u64
}

/// Copies up to `capacity` witness vertex indices into `buf`; returns the
/// number copied.
///
/// # Safety
/// `r` must be a live report handle; `buf` must point to at least
/// `capacity` writable `uint32_t` slots.
#[no_mangle]
pub unsafe extern "C" fn tg_report_witness(
    r: *const TgReport,
    buf: *mut u32,
    capacity: u64,
) -> u64 {
    if r.is_null() || buf.is_null() {
        return 0;
    }
    let members = (*r).0.witness.members();
    let count = members.len().min(capacity as usize);
    std::ptr::copy_nonoverlapping(members.as_ptr(), buf, count);
    count as u64
}

/// Releases a report handle. Null is a no-op.
///
/// # Safety
/// `r` must be null or a pointer obtained from `tg_solve`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tg_report_free(r: *mut TgReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Exhaustive oracle for graphs of at most 25 vertices; writes the exact
/// independence number into `out`.
///
/// # Safety
/// `g` must be a live graph handle; `out` a valid slot.
#[no_mangle]
pub unsafe extern "C" fn tg_brute_force_mis(g: *const TgGraph, out: *mut u64) -> TgStatus {
    if g.is_null() || out.is_null() {
        return TgStatus::NullArgument;
    }
    match brute_force_mis(&(*g).0) {
        Ok(alpha) => {
            *out = alpha as u64;
            TgStatus::Ok
        }
        Err(_) => TgStatus::TooLarge,
    }
}

/// Writes into `out` whether the given vertex indices are pairwise
/// non-adjacent. Out-of-range indices yield `VerifyFailed`.
///
/// # Safety
/// `g` must be a live graph handle; `members` must point to `len` readable
/// `uint32_t` values; `out` must be a valid `bool` slot.
#[no_mangle]
pub unsafe extern "C" fn tg_verify_independent(
    g: *const TgGraph,
    members: *const u32,
    len: u64,
    out: *mut bool,
) -> TgStatus {
    if g.is_null() || out.is_null() || (members.is_null() && len > 0) {
        return TgStatus::NullArgument;
    }
    let slice = if len == 0 {
        &[]
    } else {
        std::slice::from_raw_parts(members, len as usize)
    };
    match verify_independent(&(*g).0, slice) {
        Ok(ok) => {
            *out = ok;
            TgStatus::Ok
        }
        Err(_) => TgStatus::VerifyFailed,
    }
}

/// The closed-form independence number `max(6n - 28, 4n - 4 c(n))`.
#[no_mangle]
pub extern "C" fn tg_alpha_formula(n: u64) -> u64 {
    formulas::alpha_formula(n as usize) as u64
}

/// The residue constant c(n) in {0, 1, 2}.
#[no_mangle]
pub extern "C" fn tg_c_const(n: u64) -> u32 {
    formulas::c_const(n as usize) as u32
}

/// Independence number `n - c(n)` of the 0/1 restriction.
#[no_mangle]
pub extern "C" fn tg_nagy_alpha(n: u64) -> u64 {
    (n as usize).saturating_sub(formulas::c_const(n as usize)) as u64
}

/// Chromatic lower bound for dimension `n >= 3`: writes the graph order,
/// the independence number and `ceil(order / alpha)`.
///
/// # Safety
/// The out-pointers must each be null or valid slots.
#[no_mangle]
pub unsafe extern "C" fn tg_chi_lower_bound(
    n: u64,
    out_order: *mut u64,
    out_alpha: *mut u64,
    out_bound: *mut u64,
) -> TgStatus {
    if n < 3 {
        return TgStatus::InvalidArgument;
    }
    let b = formulas::chi_lower_bound(n as usize);
    if !out_order.is_null() {
        *out_order = b.order;
    }
    if !out_alpha.is_null() {
        *out_alpha = b.alpha;
    }
    if !out_bound.is_null() {
        *out_bound = b.bound;
    }
    TgStatus::Ok
}

fn build_construction(kind: ConstructionKind, n: usize) -> Result<Construction, trigraph::Error> {
    match kind {
        ConstructionKind::QuadPacking => constructions::quad_packing(n),
        ConstructionKind::Cobra => constructions::cobra(n),
        ConstructionKind::DoubleCobra => constructions::double_cobra(n),
        ConstructionKind::NagySet => constructions::nagy_set(n),
        ConstructionKind::Snake => Err(trigraph::Error::BadCobraLayout),
    }
}

/// Generates a construction by kind name: "quad", "cobra", "double-cobra"
/// or "nagy".
///
/// # Safety
/// `kind` must be a valid NUL-terminated string; `out` a valid slot.
#[no_mangle]
pub unsafe extern "C" fn tg_construction_new(
    kind: *const c_char,
    n: u32,
    out: *mut *mut TgConstruction,
) -> TgStatus {
    if kind.is_null() || out.is_null() {
        return TgStatus::NullArgument;
    }
    let Ok(kind) = CStr::from_ptr(kind).to_str() else {
        return TgStatus::ParseError;
    };
    let Some(kind) = ConstructionKind::parse(kind) else {
        return TgStatus::InvalidArgument;
    };
    match build_construction(kind, n as usize) {
        Ok(c) => {
            *out = Box::into_raw(Box::new(TgConstruction(c)));
            TgStatus::Ok
        }
        Err(_) => TgStatus::InvalidArgument,
    }
}

/// Parses the line-based construction text format.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` a valid slot.
#[no_mangle]
pub unsafe extern "C" fn tg_construction_from_text(
    text: *const c_char,
    out: *mut *mut TgConstruction,
) -> TgStatus {
    if text.is_null() || out.is_null() {
        return TgStatus::NullArgument;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return TgStatus::ParseError;
    };
    match Construction::from_text(text) {
        Ok(c) => {
            *out = Box::into_raw(Box::new(TgConstruction(c)));
            TgStatus::Ok
        }
        Err(_) => TgStatus::ParseError,
    }
}

/// Number of vertices, or -1 when `c` is null.
///
/// # Safety
/// `c` must be null or a live construction handle.
#[no_mangle]
pub unsafe extern "C" fn tg_construction_len(c: *const TgConstruction) -> i64 {
    if c.is_null() {
        return -1;
    }
    (*c).0.len() as i64
}

/// Whether all pairwise scalar products avoid 1.
///
/// # Safety
/// `c` must be null or a live construction handle.
#[no_mangle]
pub unsafe extern "C" fn tg_construction_is_independent(c: *const TgConstruction) -> bool {
    !c.is_null() && (*c).0.is_independent()
}

/// Number of distinct signplaces intersected, or -1 when `c` is null.
///
/// # Safety
/// `c` must be null or a live construction handle.
#[no_mangle]
pub unsafe extern "C" fn tg_construction_signplaces(c: *const TgConstruction) -> i64 {
    if c.is_null() {
        return -1;
    }
    (*c).0.signplace_count() as i64
}

/// Copies the distinct pairwise scalar products (ascending) into `buf`, up
/// to `capacity`; returns the number copied.
///
/// # Safety
/// `c` must be a live construction handle; `buf` must point to at least
/// `capacity` writable `int32_t` slots.
#[no_mangle]
pub unsafe extern "C" fn tg_construction_spectrum(
    c: *const TgConstruction,
    buf: *mut i32,
    capacity: u64,
) -> u64 {
    if c.is_null() || buf.is_null() {
        return 0;
    }
    let spectrum: Vec<i32> = (*c).0.spectrum().into_iter().collect();
    let count = spectrum.len().min(capacity as usize);
    std::ptr::copy_nonoverlapping(spectrum.as_ptr(), buf, count);
    count as u64
}

/// Serializes the construction in its line-based text format; release with
/// `tg_string_free`. Returns null when `c` is null.
///
/// # Safety
/// `c` must be null or a live construction handle.
#[no_mangle]
pub unsafe extern "C" fn tg_construction_to_text(c: *const TgConstruction) -> *mut c_char {
    if c.is_null() {
        return std::ptr::null_mut();
    }
    CString::new((*c).0.to_text()).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Builds the product-1 graph on the construction's vertices.
///
/// # Safety
/// `c` must be a live construction handle; `out` a valid slot.
#[no_mangle]
pub unsafe extern "C" fn tg_construction_to_graph(
    c: *const TgConstruction,
    out: *mut *mut TgGraph,
) -> TgStatus {
    if c.is_null() || out.is_null() {
        return TgStatus::NullArgument;
    }
    match (*c).0.to_graph() {
        Ok(g) => graph_out(out, g),
        Err(_) => TgStatus::InvalidArgument,
    }
}

/// Releases a construction handle. Null is a no-op.
///
/// # Safety
/// `c` must be null or a pointer obtained from a construction constructor,
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tg_construction_free(c: *mut TgConstruction) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a pointer returned by a `tg_*` function that
/// documents `tg_string_free`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
