use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use contrabench_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(cb_last_error()) }.to_string_lossy().into_owned()
}

fn golden(name: &str) -> CString {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/golden").join(name);
    c(&std::fs::read_to_string(path).unwrap())
}

#[test]
fn golden_documents_through_the_boundary() {
    unsafe {
        let mut ws = ptr::null_mut();
        assert_eq!(cb_workspace_parse(golden("z2_p3.json").as_ptr(), &mut ws), CbStatus::Ok);
        assert_eq!(cb_workspace_validate(ws), CbStatus::Ok);
        assert_eq!(last_error(), "");
        cb_workspace_free(ws);

        assert_eq!(cb_workspace_parse(golden("z2_p3_bad_antipode.json").as_ptr(), &mut ws), CbStatus::Ok);
        assert_eq!(cb_workspace_validate(ws), CbStatus::Falsified);
        assert!(last_error().contains("antipode"));
        cb_workspace_free(ws);

        let mut ws = ptr::null_mut();
        assert_eq!(cb_workspace_parse(golden("z2_p3_bad_shape.json").as_ptr(), &mut ws), CbStatus::Input);
        assert!(ws.is_null());
        assert!(!last_error().is_empty());
    }
}

#[test]
fn handles_and_verdicts() {
    unsafe {
        let mut w = ptr::null_mut();
        assert_eq!(cb_contramodule_witness(c("tower_p3_r1").as_ptr(), &mut w), CbStatus::Ok);
        assert_eq!(cb_contramodule_dim(w), 3);
        let mut kind = CbMock::Projective;
        assert_eq!(cb_contramodule_mock(c("tower_p3_r1").as_ptr(), w, &mut kind), CbStatus::Ok);
        assert_eq!(kind, CbMock::ProperMockProjective);
        let mut verdict = true;
        assert_eq!(cb_contramodule_is_projective(w, &mut verdict, ptr::null_mut()), CbStatus::Ok);
        assert!(!verdict);

        let mut json = ptr::null_mut();
        assert_eq!(cb_contramodule_to_json(w, &mut json), CbStatus::Ok);
        let mut ws = ptr::null_mut();
        assert_eq!(cb_workspace_parse(json, &mut ws), CbStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(cb_workspace_contramodule(ws, c("b").as_ptr(), &mut back), CbStatus::Ok);
        assert_eq!(cb_contramodule_dim(back), 3);
        assert_eq!(cb_workspace_contramodule(ws, c("missing").as_ptr(), &mut back), CbStatus::Input);
        assert!(back.is_null());
        cb_workspace_free(ws);
        cb_string_free(json);
        cb_contramodule_free(w);

        let mut f = ptr::null_mut();
        assert_eq!(cb_contramodule_builtin(c("s3_p3").as_ptr(), c("free").as_ptr(), 2, &mut f), CbStatus::Ok);
        assert_eq!(cb_contramodule_dim(f), 12);
        let mut obstruction = 9;
        assert_eq!(cb_contramodule_is_projective(f, &mut verdict, &mut obstruction), CbStatus::Ok);
        assert!(verdict && obstruction == 0);
        cb_contramodule_free(f);

        assert_eq!(cb_contramodule_builtin(c("s3_p3").as_ptr(), c("cofree").as_ptr(), 1, &mut f), CbStatus::Input);
        assert_eq!(cb_contramodule_builtin(ptr::null(), c("free").as_ptr(), 1, &mut f), CbStatus::NullArgument);
        assert_eq!(cb_contramodule_dim(ptr::null()), 0);
    }
}

#[test]
fn suite_and_documents() {
    unsafe {
        let mut doc = ptr::null_mut();
        assert_eq!(cb_builtin_document(c("mu3_p2").as_ptr(), &mut doc), CbStatus::Ok);
        assert!(CStr::from_ptr(doc).to_str().unwrap().contains("mu3_p2"));
        cb_string_free(doc);

        let mut report = ptr::null_mut();
        let m = c(r#"{"checks": ["semidirect_induction"], "seed": 3}"#);
        assert_eq!(cb_suite_run(m.as_ptr(), 1, &mut report), CbStatus::Ok);
        let text = CStr::from_ptr(report).to_str().unwrap().to_string();
        cb_string_free(report);
        let mut again = ptr::null_mut();
        assert_eq!(cb_suite_run(m.as_ptr(), 2, &mut again), CbStatus::Ok);
        assert_eq!(CStr::from_ptr(again).to_str().unwrap(), text);
        cb_string_free(again);
        assert_eq!(cb_suite_run(c("{nope").as_ptr(), 1, &mut again), CbStatus::Input);
    }
}

/// Compiles `smoke.c` against the generated header and the static library.
#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // cargo test refreshes the library next to the test binary
    let lib = std::env::current_exe().unwrap().parent().unwrap().join("libcontrabench_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let dir = tempfile_dir();
    let exe = dir.join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status();
    let status = match status {
        Ok(s) => s,
        Err(e) => {
            eprintln!("no C compiler available: {e}");
            return;
        }
    };
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
    let _ = std::fs::remove_dir_all(&dir);
}

fn tempfile_dir() -> PathBuf {
    let d = std::env::temp_dir().join(format!("contrabench-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}
