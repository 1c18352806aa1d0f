//! C ABI over the `unicyclic` crate.
//!
//! Graphs and audit reports are opaque handles owned by the caller and
//! released with `uc_graph_free` / `uc_audit_free`. Every fallible call
//! returns a [`UcStatus`]; on failure the message is available from
//! `uc_last_error` until the next call on the same thread. Strings returned
//! through `char **` out-parameters are released with `uc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use unicyclic::bounds::{audit, AuditConfig, AuditReport};
use unicyclic::enumerate::count_classes;
use unicyclic::extremal::ExtremalFamily;
use unicyclic::{index, parse_edge_list, Error, Graph, IndexSpec};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidGraph = 4,
    Domain = 5,
    Range = 6,
    NotUnicyclic = 7,
    Precondition = 8,
    InvalidSpec = 9,
    BufferTooSmall = 10,
    Panic = 11,
}

/// Opaque graph handle.
pub struct UcGraph(Graph);

/// Opaque audit report handle.
pub struct UcAuditReport(AuditReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> UcStatus {
    match e {
        Error::Parse { .. } => UcStatus::Parse,
        Error::VertexOutOfRange { .. }
        | Error::SelfLoop(_)
        | Error::IsolatedVertex(_)
        | Error::Disconnected
        | Error::LengthMismatch { .. } => UcStatus::InvalidGraph,
        Error::Domain(_) => UcStatus::Domain,
        Error::Range(_) | Error::TooLarge { .. } => UcStatus::Range,
        Error::NotUnicyclic => UcStatus::NotUnicyclic,
        Error::Precondition(_) => UcStatus::Precondition,
        Error::InvalidSpec(_) => UcStatus::InvalidSpec,
    }
}

/// Runs `f`, recording errors and converting panics into `UcStatus::Panic`.
fn guard(f: impl FnOnce() -> Result<(), (UcStatus, String)>) -> UcStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => UcStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            UcStatus::Panic
        }
    }
}

trait IntoFfi<T> {
    fn ffi(self) -> Result<T, (UcStatus, String)>;
}

impl<T> IntoFfi<T> for unicyclic::Result<T> {
    fn ffi(self) -> Result<T, (UcStatus, String)> {
        self.map_err(|e| (status_of(&e), e.to_string()))
    }
}

fn null(what: &str) -> (UcStatus, String) {
    (UcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (UcStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (UcStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn graph_ref<'a>(g: *const UcGraph) -> Result<&'a Graph, (UcStatus, String)> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (UcStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (UcStatus, String)> {
    let c = CString::new(s).map_err(|_| (UcStatus::Domain, "string contains nul".to_string()))?;
    write_out(out, c.into_raw())
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn uc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn uc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the edge-list text format.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn uc_graph_parse(text: *const c_char, out: *mut *mut UcGraph) -> UcStatus {
    guard(|| {
        let g = parse_edge_list(read_str(text, "text")?).ffi()?;
        write_out(out, Box::into_raw(Box::new(UcGraph(g))))
    })
}

/// Builds a graph from `edge_count` pairs stored flat in `pairs`.
///
/// # Safety
/// `pairs` must hold `2 * edge_count` readable values (may be NULL when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn uc_graph_from_edges(
    n: usize,
    pairs: *const usize,
    edge_count: usize,
    out: *mut *mut UcGraph,
) -> UcStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if pairs.is_null() {
            return Err(null("pairs"));
        } else {
            std::slice::from_raw_parts(pairs, 2 * edge_count)
        };
        let edges = flat.chunks_exact(2).map(|c| (c[0], c[1]));
        let g = Graph::new(n, edges).ffi()?;
        write_out(out, Box::into_raw(Box::new(UcGraph(g))))
    })
}

/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn uc_graph_free(g: *mut UcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn uc_graph_vertex_count(g: *const UcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Edge count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn uc_graph_edge_count(g: *const UcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn uc_graph_is_unicyclic(g: *const UcGraph, out: *mut bool) -> UcStatus {
    guard(|| write_out(out, graph_ref(g)?.is_unicyclic()))
}

/// Writes the non-increasing degree sequence into `buf`. `len` receives the
/// sequence length even when `cap` is too small.
///
/// # Safety
/// `buf` must hold `cap` writable values; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn uc_graph_degree_sequence(
    g: *const UcGraph,
    buf: *mut u32,
    cap: usize,
    len: *mut usize,
) -> UcStatus {
    guard(|| {
        let seq = graph_ref(g)?.degree_sequence().ffi()?;
        write_out(len, seq.len())?;
        if cap < seq.len() {
            return Err((
                UcStatus::BufferTooSmall,
                format!("need {} slots, got {cap}", seq.len()),
            ));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(seq.as_slice().as_ptr(), buf, seq.len());
        Ok(())
    })
}

/// Serialises to the edge-list text format.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn uc_graph_to_edge_list(
    g: *const UcGraph,
    out: *mut *mut c_char,
) -> UcStatus {
    guard(|| write_string(out, graph_ref(g)?.to_edge_list()))
}

/// Evaluates an index such as "M1", "NK*", "SEI_2" or "M1^-0.5" as a double.
///
/// # Safety
/// `g` must be a live handle, `spec` a nul-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uc_index_eval(
    g: *const UcGraph,
    spec: *const c_char,
    out: *mut f64,
) -> UcStatus {
    guard(|| {
        let spec = IndexSpec::parse(read_str(spec, "spec")?).ffi()?;
        let v = index::eval(&spec, graph_ref(g)?).ffi()?;
        write_out(out, v.to_f64())
    })
}

/// Evaluates an index and returns its exact rendering ("432", "5/2"), or 12
/// significant digits for floating-point values.
///
/// # Safety
/// `g` must be a live handle, `spec` a nul-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uc_index_eval_exact(
    g: *const UcGraph,
    spec: *const c_char,
    out: *mut *mut c_char,
) -> UcStatus {
    guard(|| {
        let spec = IndexSpec::parse(read_str(spec, "spec")?).ffi()?;
        let v = index::eval(&spec, graph_ref(g)?).ffi()?;
        write_string(out, v.exact_repr())
    })
}

/// Builds the representative of an extremal family: "cycle", "unthree", "H",
/// "K" (param = Δ), "A" or "B" (param = p). `param` is ignored for the first
/// two.
///
/// # Safety
/// `family` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn uc_construct(
    family: *const c_char,
    n: usize,
    param: usize,
    out: *mut *mut UcGraph,
) -> UcStatus {
    guard(|| {
        let fam = match read_str(family, "family")?.to_ascii_lowercase().as_str() {
            "cycle" => ExtremalFamily::Cycle { n },
            "unthree" => ExtremalFamily::UnThree { n },
            "h" => ExtremalFamily::H { n, delta: param },
            "k" => ExtremalFamily::K { n, delta: param },
            "a" => ExtremalFamily::SeqA { n, p: param },
            "b" => ExtremalFamily::SeqB { n, p: param },
            other => return Err((UcStatus::InvalidSpec, format!("unknown family '{other}'"))),
        };
        let g = fam.representative().ffi()?;
        write_out(out, Box::into_raw(Box::new(UcGraph(g))))
    })
}

/// Audits a unicyclic graph over the default parameter grid.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn uc_audit(
    g: *const UcGraph,
    tolerance: f64,
    out: *mut *mut UcAuditReport,
) -> UcStatus {
    guard(|| {
        let config = AuditConfig {
            tolerance,
            ..AuditConfig::default()
        };
        let report = audit(graph_ref(g)?, &config).ffi()?;
        write_out(out, Box::into_raw(Box::new(UcAuditReport(report))))
    })
}

/// # Safety
/// `r` must come from `uc_audit` and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn uc_audit_free(r: *mut UcAuditReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// True when every applicable bound holds and tightness matches membership.
///
/// # Safety
/// `r` must be a live report; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn uc_audit_is_clean(r: *const UcAuditReport, out: *mut bool) -> UcStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("report"))?;
        write_out(out, r.0.is_clean())
    })
}

/// Number of violated bound instances.
///
/// # Safety
/// `r` must be a live report; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn uc_audit_violation_count(
    r: *const UcAuditReport,
    out: *mut usize,
) -> UcStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("report"))?;
        write_out(out, r.0.violations().count())
    })
}

/// CSV rendering with header.
///
/// # Safety
/// `r` must be a live report; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn uc_audit_to_csv(
    r: *const UcAuditReport,
    out: *mut *mut c_char,
) -> UcStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("report"))?;
        write_string(
            out,
            format!("{}\n{}", AuditReport::TABULAR_HEADER, r.0.to_tabular_rows()),
        )
    })
}

/// Number of unicyclic graphs on `n` vertices up to isomorphism, `3 <= n <= 9`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn uc_count_classes(n: usize, out: *mut usize) -> UcStatus {
    guard(|| write_out(out, count_classes(n).ffi()?))
}
