//! C ABI for the verification engine: opaque workspace and report handles,
//! integer status codes, and a thread-local last-error message.  The header
//! `include/hopfforge.h` is regenerated by cbindgen on every build.
//!
//! Ownership rules: every `*mut` handle returned through an out-pointer is
//! owned by the caller and must be released with the matching `_free`
//! function; every `char*` returned by value must be released with
//! `hf_string_free`.  `hf_last_error` borrows thread-local storage and must
//! not be freed.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hopfforge::dsl;
use hopfforge::report::Report;
use hopfforge::runner::{
    build_workspace, builtin_workspace, run_checks, RunOptions, Workspace, BUILTIN_NAMES,
    KNOWN_SUITES,
};
use hopfforge::scalar::FieldDescriptor;

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfStatus {
    /// The call succeeded.
    Ok = 0,
    /// A pointer was null, a string was not UTF-8, or a name was unknown.
    InvalidArgument = 1,
    /// The document or an option failed to parse or build.
    InputError = 2,
    /// An internal invariant failed; the library state is still usable.
    Internal = 3,
}

/// Opaque handle: a parsed document or builtin catalog entry together with
/// everything it declares.
pub struct HfWorkspace {
    inner: Workspace,
}

/// Opaque handle: the outcome of one verification run.
pub struct HfReport {
    inner: Report,
}

/// Run parameters.  Obtain defaults from `hf_run_options_default` and
/// override individual fields before passing the struct to
/// `hf_workspace_run`.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct HfRunOptions {
    /// Maximum degree of randomly sampled elements.
    pub max_degree: u32,
    /// Number of random samples per law.
    pub samples: u32,
    /// Seed for the deterministic sampler.
    pub seed: u64,
    /// Rewrite-step budget per normal form.
    pub fuel: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

/// Run `body` with panic isolation, mapping a panic to `Internal`.
fn guarded(body: impl FnOnce() -> HfStatus) -> HfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic".to_string());
            HfStatus::Internal
        }
    }
}

/// Borrow a required C string argument, recording an error on failure.
///
/// # Safety
/// `ptr` must be null or a valid NUL-terminated string.
unsafe fn required_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, HfStatus> {
    if ptr.is_null() {
        set_error(format!("{what} must not be null"));
        return Err(HfStatus::InvalidArgument);
    }
    match CStr::from_ptr(ptr).to_str() {
        Ok(s) => Ok(s),
        Err(_) => {
            set_error(format!("{what} is not valid UTF-8"));
            Err(HfStatus::InvalidArgument)
        }
    }
}

/// Borrow an optional C string argument.
///
/// # Safety
/// `ptr` must be null or a valid NUL-terminated string.
unsafe fn optional_str<'a>(ptr: *const c_char, what: &str) -> Result<Option<&'a str>, HfStatus> {
    if ptr.is_null() {
        Ok(None)
    } else {
        required_str(ptr, what).map(Some)
    }
}

fn parse_field_arg(name: Option<&str>) -> Result<Option<FieldDescriptor>, HfStatus> {
    match name {
        None => Ok(None),
        Some(s) => match s.parse() {
            Ok(f) => Ok(Some(f)),
            Err(e) => {
                set_error(format!("{e}"));
                Err(HfStatus::InputError)
            }
        },
    }
}

fn into_c_string(s: String) -> *mut c_char {
    match CString::new(s) {
        Ok(c) => c.into_raw(),
        Err(_) => ptr::null_mut(),
    }
}

/// The most recent error message on this thread, or null if the last call
/// succeeded.  The pointer is owned by the library and is invalidated by
/// the next call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn hf_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => msg.as_ptr(),
        None => ptr::null(),
    })
}

/// The default run parameters: degree 6, 100 samples, seed 42, fuel 10^6.
#[no_mangle]
pub extern "C" fn hf_run_options_default() -> HfRunOptions {
    let d = RunOptions::default();
    HfRunOptions {
        max_degree: d.max_degree as u32,
        samples: d.samples as u32,
        seed: d.seed,
        fuel: d.fuel,
    }
}

/// Parse a document and build everything it declares.
///
/// `field` optionally overrides the declared coefficient field
/// (`"rational"`, `"gf:P"`, or `"ratfunc"`).  On success `*out` owns the
/// workspace; release it with `hf_workspace_free`.
///
/// # Safety
/// `text` and `field` must be null or valid NUL-terminated strings; `out`
/// must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_workspace_parse(
    text: *const c_char,
    field: *const c_char,
    fuel: u64,
    out: *mut *mut HfWorkspace,
) -> HfStatus {
    guarded(|| {
        if out.is_null() {
            set_error("out must not be null".to_string());
            return HfStatus::InvalidArgument;
        }
        let text = match required_str(text, "text") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let field = match optional_str(field, "field").and_then(parse_field_arg) {
            Ok(f) => f,
            Err(status) => return status,
        };
        let doc = match dsl::parse_document(text) {
            Ok(d) => d,
            Err(e) => {
                set_error(e.to_string());
                return HfStatus::InputError;
            }
        };
        match build_workspace(&doc, field, fuel) {
            Ok(ws) => {
                *out = Box::into_raw(Box::new(HfWorkspace { inner: ws }));
                clear_error();
                HfStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                HfStatus::InputError
            }
        }
    })
}

/// Build a catalog workspace by name: `axb-universal`, `axb-q`, `axb-qn`,
/// or `laurent`.
///
/// `q` is an optional scalar expression such as `"2"`, `"q"`, or `"1/3"`;
/// `n` optionally points to the twist period; `field` optionally names the
/// coefficient field.  On success `*out` owns the workspace.
///
/// # Safety
/// String arguments must be null or valid NUL-terminated strings; `n` must
/// be null or point to an `int64_t`; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_workspace_builtin(
    name: *const c_char,
    q: *const c_char,
    n: *const i64,
    field: *const c_char,
    out: *mut *mut HfWorkspace,
) -> HfStatus {
    guarded(|| {
        if out.is_null() {
            set_error("out must not be null".to_string());
            return HfStatus::InvalidArgument;
        }
        let name = match required_str(name, "name") {
            Ok(s) => s,
            Err(status) => return status,
        };
        if !BUILTIN_NAMES.contains(&name) {
            set_error(format!(
                "unknown builtin `{name}`; expected one of {}",
                BUILTIN_NAMES.join(", ")
            ));
            return HfStatus::InvalidArgument;
        }
        let field = match optional_str(field, "field").and_then(parse_field_arg) {
            Ok(f) => f,
            Err(status) => return status,
        };
        let field = field.unwrap_or(if name == "laurent" {
            FieldDescriptor::Rationals
        } else {
            FieldDescriptor::RationalFunctions
        });
        let q = match optional_str(q, "q") {
            Ok(None) => None,
            Ok(Some(expr)) => {
                let parsed = dsl::parse_expr(expr).and_then(|e| dsl::eval_scalar(&e, field));
                match parsed {
                    Ok(v) => Some(v),
                    Err(e) => {
                        set_error(format!("q: {e}"));
                        return HfStatus::InputError;
                    }
                }
            }
            Err(status) => return status,
        };
        let n = if n.is_null() { None } else { Some(*n) };
        match builtin_workspace(name, field, q, n) {
            Ok(ws) => {
                *out = Box::into_raw(Box::new(HfWorkspace { inner: ws }));
                clear_error();
                HfStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                HfStatus::InputError
            }
        }
    })
}

/// Release a workspace.  Null is ignored.
///
/// # Safety
/// `ws` must be null or a pointer returned by a workspace constructor that
/// has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn hf_workspace_free(ws: *mut HfWorkspace) {
    if !ws.is_null() {
        drop(Box::from_raw(ws));
    }
}

/// Run the declared checks.
///
/// `suites` optionally selects suites by name (`suite_count` entries; pass
/// null/0 to run everything declared, or include `"all"`).  `options` may
/// be null for defaults.  On success `*out` owns the report; release it
/// with `hf_report_free`.
///
/// # Safety
/// `ws` must be a live workspace handle; `suites` must be null or point to
/// `suite_count` valid NUL-terminated strings; `options` must be null or
/// valid; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_workspace_run(
    ws: *const HfWorkspace,
    suites: *const *const c_char,
    suite_count: usize,
    options: *const HfRunOptions,
    out: *mut *mut HfReport,
) -> HfStatus {
    guarded(|| {
        if ws.is_null() || out.is_null() {
            set_error("ws and out must not be null".to_string());
            return HfStatus::InvalidArgument;
        }
        let mut filter = Vec::with_capacity(suite_count);
        if !suites.is_null() {
            for i in 0..suite_count {
                let name = match required_str(*suites.add(i), "suite name") {
                    Ok(s) => s,
                    Err(status) => return status,
                };
                if name != "all" && !KNOWN_SUITES.contains(&name) {
                    set_error(format!("unknown suite `{name}`"));
                    return HfStatus::InvalidArgument;
                }
                filter.push(name.to_string());
            }
        }
        let opts = if options.is_null() {
            RunOptions::default()
        } else {
            let o = &*options;
            RunOptions {
                max_degree: o.max_degree as usize,
                samples: o.samples as usize,
                seed: o.seed,
                fuel: o.fuel,
            }
        };
        let report = run_checks(&(*ws).inner, &filter, &opts);
        *out = Box::into_raw(Box::new(HfReport { inner: report }));
        clear_error();
        HfStatus::Ok
    })
}

/// The process exit code the CLI would use for this report: 0 if every
/// case passed, 1 if any failed, 3 if none failed but some were
/// unverified.  Returns -1 for a null handle.
///
/// # Safety
/// `report` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn hf_report_exit_code(report: *const HfReport) -> i32 {
    if report.is_null() {
        return -1;
    }
    (*report).inner.exit_code()
}

/// Number of cases in the report.  Returns 0 for a null handle.
///
/// # Safety
/// `report` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn hf_report_case_count(report: *const HfReport) -> usize {
    if report.is_null() {
        return 0;
    }
    (*report).inner.cases.len()
}

/// The report as deterministic JSON.  Free with `hf_string_free`; returns
/// null for a null handle.
///
/// # Safety
/// `report` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn hf_report_json(report: *const HfReport) -> *mut c_char {
    if report.is_null() {
        return ptr::null_mut();
    }
    into_c_string((*report).inner.to_json())
}

/// The report as human-readable text.  Free with `hf_string_free`; returns
/// null for a null handle.
///
/// # Safety
/// `report` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn hf_report_text(report: *const HfReport) -> *mut c_char {
    if report.is_null() {
        return ptr::null_mut();
    }
    into_c_string((*report).inner.to_text())
}

/// Release a report.  Null is ignored.
///
/// # Safety
/// `report` must be null or a pointer returned by `hf_workspace_run` that
/// has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn hf_report_free(report: *mut HfReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Evaluate `expr` in the named algebra of the workspace and return its
/// canonical normal form, or null on error (see `hf_last_error`).  Free
/// the result with `hf_string_free`.
///
/// # Safety
/// `ws` must be a live workspace handle; `algebra` and `expr` must be
/// valid NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn hf_normal_form(
    ws: *const HfWorkspace,
    algebra: *const c_char,
    expr: *const c_char,
) -> *mut c_char {
    let mut result = ptr::null_mut();
    guarded(|| {
        if ws.is_null() {
            set_error("ws must not be null".to_string());
            return HfStatus::InvalidArgument;
        }
        let algebra = match required_str(algebra, "algebra") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let expr = match required_str(expr, "expr") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let pres = match (*ws).inner.algebras.get(algebra) {
            Some(p) => p,
            None => {
                set_error(format!("no algebra named `{algebra}` in this workspace"));
                return HfStatus::InvalidArgument;
            }
        };
        let value = dsl::parse_expr(expr)
            .and_then(|e| dsl::eval_element(&e, pres))
            .map_err(|e| e.to_string())
            .and_then(|x| {
                x.normal_form(pres.default_fuel())
                    .map_err(|e| e.to_string())
            });
        match value {
            Ok(x) => {
                result = into_c_string(x.to_string());
                clear_error();
                HfStatus::Ok
            }
            Err(msg) => {
                set_error(msg);
                HfStatus::InputError
            }
        }
    });
    result
}

/// Release a string returned by this library.  Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by a function documented to be
/// freed this way, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
