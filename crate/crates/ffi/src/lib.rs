//! C interface. Objects cross the boundary as opaque handles; every call
//! returns a [`CbStatus`] and leaves a message in [`cb_last_error`] on failure.
//!
//! Strings returned through `out` parameters are owned by the caller and must
//! be released with [`cb_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use contrabench::catalog;
use contrabench::comodcontra::{free_contramodule, Contramodule};
use contrabench::functors::induce;
use contrabench::interchange::{contramodule_to_doc, hopf_to_doc, scheme_to_doc, Document, HopfDoc, Workspace};
use contrabench::mockproj::{self, Level, Mock, Tower};
use contrabench::suite::{self, Manifest};
use contrabench::Error;

/// Same meaning as the command-line exit codes, plus two boundary errors.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CbStatus {
    Ok = 0,
    /// A validator or a certified statement failed.
    Falsified = 1,
    /// Unparseable or inconsistent input.
    Input = 2,
    NullArgument = 3,
    /// A Rust panic was caught at the boundary.
    Internal = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CbMock {
    NotMockProjective = 0,
    ProperMockProjective = 1,
    Projective = 2,
}

/// A loaded interchange document.
pub struct CbWorkspace {
    ws: Workspace,
}

/// A contramodule together with the algebra it lives over.
pub struct CbContramodule {
    b: Contramodule,
    algebra: HopfDoc,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

type Fallible<T> = Result<T, (CbStatus, String)>;

fn lift(e: Error) -> (CbStatus, String) {
    let status = match e {
        Error::Axiom { .. } | Error::Falsified(_) | Error::Morphism(_) | Error::Unsplit { .. } => CbStatus::Falsified,
        _ => CbStatus::Input,
    };
    (status, e.to_string())
}

fn guard(f: impl FnOnce() -> Fallible<CbStatus>) -> CbStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            CbStatus::Internal
        }
    }
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Fallible<&'a str> {
    if s.is_null() {
        return Err((CbStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (CbStatus::Input, format!("{what} is not UTF-8")))
}

unsafe fn target<'a, T>(p: *mut T, what: &str) -> Fallible<&'a mut T> {
    p.as_mut().ok_or_else(|| (CbStatus::NullArgument, format!("{what} is null")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Fallible<&'a T> {
    p.as_ref().ok_or_else(|| (CbStatus::NullArgument, format!("{what} is null")))
}

fn out_string(out: &mut *mut c_char, s: String) -> Fallible<()> {
    *out = CString::new(s).map_err(|e| (CbStatus::Internal, e.to_string()))?.into_raw();
    Ok(())
}

fn boxed<T>(out: &mut *mut T, v: T) {
    *out = Box::into_raw(Box::new(v));
}

fn tower(name: &str) -> Fallible<Tower> {
    catalog::tower(name).map_err(lift)
}

fn level<'a>(t: &'a Tower, along: &str) -> Fallible<&'a Level> {
    if along == "pi_H" {
        return Ok(&t.finite_subgroup);
    }
    along
        .strip_prefix("pi_")
        .and_then(|s| s.parse::<usize>().ok())
        .and_then(|s| s.checked_sub(1))
        .and_then(|s| t.kernels.get(s))
        .ok_or_else(|| (CbStatus::Input, format!("unknown map {along}")))
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn cb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn cb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and loads an interchange document.
///
/// # Safety
/// `json` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cb_workspace_parse(json: *const c_char, out: *mut *mut CbWorkspace) -> CbStatus {
    guard(|| {
        let out = target(out, "out")?;
        *out = ptr::null_mut();
        let doc = Document::parse(text(json, "json")?).map_err(lift)?;
        let ws = doc.load().map_err(lift)?;
        boxed(out, CbWorkspace { ws });
        Ok(CbStatus::Ok)
    })
}

/// Runs every structural validator. `CB_STATUS_FALSIFIED` when one fails;
/// the message lists the failed axioms.
///
/// # Safety
/// `ws` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn cb_workspace_validate(ws: *const CbWorkspace) -> CbStatus {
    guard(|| {
        let cert = handle(ws, "workspace")?.ws.validate();
        if cert.verdict() {
            return Ok(CbStatus::Ok);
        }
        let labels: Vec<String> = cert.failures().iter().map(|f| f.label.clone()).collect();
        Err((CbStatus::Falsified, labels.join(", ")))
    })
}

/// Copies out a named contramodule of the document.
///
/// # Safety
/// `ws` is a live handle, `name` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_workspace_contramodule(
    ws: *const CbWorkspace,
    name: *const c_char,
    out: *mut *mut CbContramodule,
) -> CbStatus {
    guard(|| {
        let out = target(out, "out")?;
        *out = ptr::null_mut();
        let ws = &handle(ws, "workspace")?.ws;
        let name = text(name, "name")?;
        let b = ws
            .contramodules
            .get(name)
            .ok_or_else(|| (CbStatus::Input, format!("no contramodule {name}")))?;
        let (alg, frob) = ws
            .algebras
            .iter()
            .find(|(_, (h, _))| *h.coalgebra == *b.over)
            .map(|(_, v)| v)
            .ok_or_else(|| (CbStatus::Input, format!("{name} is not over a Hopf algebra of the document")))?;
        boxed(
            out,
            CbContramodule {
                b: b.clone(),
                algebra: hopf_to_doc(alg, frob.as_ref()),
            },
        );
        Ok(CbStatus::Ok)
    })
}

/// # Safety
/// `ws` comes from [`cb_workspace_parse`], or is null.
#[no_mangle]
pub unsafe extern "C" fn cb_workspace_free(ws: *mut CbWorkspace) {
    if !ws.is_null() {
        drop(Box::from_raw(ws));
    }
}

/// Interchange document of a builtin group scheme such as `s3_p3`.
///
/// # Safety
/// `name` is NUL-terminated; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cb_builtin_document(name: *const c_char, out: *mut *mut c_char) -> CbStatus {
    guard(|| {
        let out = target(out, "out")?;
        *out = ptr::null_mut();
        let g = catalog::scheme(text(name, "name")?).map_err(lift)?;
        let doc = Document {
            algebras: vec![scheme_to_doc(&g)],
            ..Default::default()
        };
        out_string(out, doc.to_json())?;
        Ok(CbStatus::Ok)
    })
}

/// `kind` is `free` (of the given rank) or `trivial` (`k^rank`).
///
/// # Safety
/// Strings are NUL-terminated; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cb_contramodule_builtin(
    scheme: *const c_char,
    kind: *const c_char,
    rank: usize,
    out: *mut *mut CbContramodule,
) -> CbStatus {
    guard(|| {
        let out = target(out, "out")?;
        *out = ptr::null_mut();
        let g = catalog::scheme(text(scheme, "scheme")?).map_err(lift)?;
        let b = match text(kind, "kind")? {
            "free" => free_contramodule(g.coalgebra(), rank),
            "trivial" => Contramodule::trivial_hopf(&g.ring, rank),
            other => return Err((CbStatus::Input, format!("unknown kind {other}"))),
        };
        boxed(out, CbContramodule { b, algebra: scheme_to_doc(&g) });
        Ok(CbStatus::Ok)
    })
}

/// Like [`cb_contramodule_builtin`], over the source of a tower map
/// (`pi_1`, `pi_2`, ..., `pi_H`), or over the ambient for `ambient`.
///
/// # Safety
/// Strings are NUL-terminated; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cb_contramodule_on_tower(
    tower_name: *const c_char,
    along: *const c_char,
    kind: *const c_char,
    rank: usize,
    out: *mut *mut CbContramodule,
) -> CbStatus {
    guard(|| {
        let out = target(out, "out")?;
        *out = ptr::null_mut();
        let t = tower(text(tower_name, "tower")?)?;
        let along = text(along, "along")?;
        let g = if along == "ambient" { &t.ambient } else { &level(&t, along)?.scheme };
        let b = match text(kind, "kind")? {
            "free" => free_contramodule(g.coalgebra(), rank),
            "trivial" => Contramodule::trivial_hopf(&g.ring, rank),
            other => return Err((CbStatus::Input, format!("unknown kind {other}"))),
        };
        boxed(out, CbContramodule { b, algebra: scheme_to_doc(g) });
        Ok(CbStatus::Ok)
    })
}

/// The induced module `Ind k` of a builtin tower.
///
/// # Safety
/// `tower_name` is NUL-terminated; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cb_contramodule_witness(tower_name: *const c_char, out: *mut *mut CbContramodule) -> CbStatus {
    guard(|| {
        let out = target(out, "out")?;
        *out = ptr::null_mut();
        let t = tower(text(tower_name, "tower")?)?;
        let w = mockproj::build_witness(&t).map_err(lift)?.result;
        boxed(out, CbContramodule { b: w, algebra: scheme_to_doc(&t.ambient) });
        Ok(CbStatus::Ok)
    })
}

/// Induces `b` along a tower map (`pi_1`, `pi_2`, ..., `pi_H`).
///
/// # Safety
/// Strings are NUL-terminated, `b` is a live handle, `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cb_contramodule_induce(
    tower_name: *const c_char,
    along: *const c_char,
    b: *const CbContramodule,
    out: *mut *mut CbContramodule,
) -> CbStatus {
    guard(|| {
        let out = target(out, "out")?;
        *out = ptr::null_mut();
        let t = tower(text(tower_name, "tower")?)?;
        let l = level(&t, text(along, "along")?)?;
        let b = &handle(b, "module")?.b;
        let ind = induce(&l.map, b).map_err(lift)?;
        boxed(out, CbContramodule { b: ind.result, algebra: scheme_to_doc(&t.ambient) });
        Ok(CbStatus::Ok)
    })
}

/// Dimension over F_p; 0 for a null handle.
///
/// # Safety
/// `b` is a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn cb_contramodule_dim(b: *const CbContramodule) -> usize {
    b.as_ref().map_or(0, |b| b.b.dim)
}

/// Projectivity verdict; `obstruction` is the rank of the failed splitting
/// (0 when projective). Either pointer may be null.
///
/// # Safety
/// `b` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn cb_contramodule_is_projective(
    b: *const CbContramodule,
    verdict: *mut bool,
    obstruction: *mut usize,
) -> CbStatus {
    guard(|| {
        let v = handle(b, "module")?.b.is_projective();
        if let Some(x) = verdict.as_mut() {
            *x = v.verdict;
        }
        if let Some(x) = obstruction.as_mut() {
            *x = v.residual_rank;
        }
        Ok(CbStatus::Ok)
    })
}

/// Mock projectivity of `b` against a builtin tower.
///
/// # Safety
/// `tower_name` is NUL-terminated, `b` is a live handle, `kind` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_contramodule_mock(
    tower_name: *const c_char,
    b: *const CbContramodule,
    kind: *mut CbMock,
) -> CbStatus {
    guard(|| {
        let kind = target(kind, "kind")?;
        let t = tower(text(tower_name, "tower")?)?;
        let v = mockproj::is_mock_projective(&handle(b, "module")?.b, &t).map_err(lift)?;
        *kind = match v.kind() {
            Mock::NotMockProjective => CbMock::NotMockProjective,
            Mock::ProperMockProjective => CbMock::ProperMockProjective,
            Mock::Projective => CbMock::Projective,
        };
        Ok(CbStatus::Ok)
    })
}

/// Interchange document holding the module and its algebra.
///
/// # Safety
/// `b` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cb_contramodule_to_json(b: *const CbContramodule, out: *mut *mut c_char) -> CbStatus {
    guard(|| {
        let out = target(out, "out")?;
        *out = ptr::null_mut();
        let b = handle(b, "module")?;
        let doc = Document {
            algebras: vec![b.algebra.clone()],
            contramodules: vec![contramodule_to_doc("b", &b.algebra.name, &b.b)],
            ..Default::default()
        };
        out_string(out, doc.to_json())?;
        Ok(CbStatus::Ok)
    })
}

/// # Safety
/// `b` comes from this library, or is null.
#[no_mangle]
pub unsafe extern "C" fn cb_contramodule_free(b: *mut CbContramodule) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Runs the certification suite. `manifest_json` may be null for the default
/// suite; `jobs` = 0 uses every core. The canonical report goes to `out`.
/// `CB_STATUS_FALSIFIED` when any record is not a pass.
///
/// # Safety
/// `manifest_json` is NUL-terminated or null; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cb_suite_run(manifest_json: *const c_char, jobs: usize, out: *mut *mut c_char) -> CbStatus {
    guard(|| {
        let out = target(out, "out")?;
        *out = ptr::null_mut();
        let m: Manifest = if manifest_json.is_null() {
            Manifest::default()
        } else {
            serde_json::from_str(text(manifest_json, "manifest")?).map_err(|e| (CbStatus::Input, e.to_string()))?
        };
        let report = suite::run_suite(&m, jobs).map_err(lift)?;
        out_string(out, report.canonical_json())?;
        Ok(if report.all_pass() { CbStatus::Ok } else { CbStatus::Falsified })
    })
}
