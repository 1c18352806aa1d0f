use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use unicyclic_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn parse(text: &str) -> *mut UcGraph {
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { uc_graph_parse(cstr(text).as_ptr(), &mut g) },
        UcStatus::Ok
    );
    g
}

fn exact(g: *const UcGraph, spec: &str) -> String {
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { uc_index_eval_exact(g, cstr(spec).as_ptr(), &mut out) },
        UcStatus::Ok
    );
    let s = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_owned();
    unsafe { uc_string_free(out) };
    s
}

fn last_error() -> String {
    let p = uc_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn parse_and_evaluate() {
    let g = parse("5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    unsafe {
        assert_eq!(uc_graph_vertex_count(g), 5);
        assert_eq!(uc_graph_edge_count(g), 5);
        let mut uni = false;
        assert_eq!(uc_graph_is_unicyclic(g, &mut uni), UcStatus::Ok);
        assert!(uni);
        let mut v = 0.0;
        assert_eq!(uc_index_eval(g, cstr("M1").as_ptr(), &mut v), UcStatus::Ok);
        assert_eq!(v, 20.0);
    }
    assert_eq!(exact(g, "F"), "40");
    assert_eq!(exact(g, "ID"), "5/2");
    unsafe { uc_graph_free(g) };
}

#[test]
fn degree_sequence_buffer() {
    let edges: [usize; 8] = [0, 1, 1, 2, 2, 0, 0, 3];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(
            uc_graph_from_edges(4, edges.as_ptr(), 4, &mut g),
            UcStatus::Ok
        );
        let mut buf = [0u32; 2];
        let mut len = 0;
        assert_eq!(
            uc_graph_degree_sequence(g, buf.as_mut_ptr(), 2, &mut len),
            UcStatus::BufferTooSmall
        );
        assert_eq!(len, 4);
        let mut buf = [0u32; 4];
        assert_eq!(
            uc_graph_degree_sequence(g, buf.as_mut_ptr(), 4, &mut len),
            UcStatus::Ok
        );
        assert_eq!(buf, [3, 2, 2, 1]);
        uc_graph_free(g);
    }
}

#[test]
fn errors_set_status_and_message() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(
            uc_graph_parse(cstr("3\n0 3\n").as_ptr(), &mut g),
            UcStatus::Parse
        );
        assert!(last_error().contains("vertex index out of range"));
        assert_eq!(uc_graph_parse(ptr::null(), &mut g), UcStatus::NullPointer);
        let edges = [0usize, 0];
        assert_eq!(
            uc_graph_from_edges(2, edges.as_ptr(), 1, &mut g),
            UcStatus::InvalidGraph
        );
    }
    let path = parse("4\n0 1\n1 2\n2 3\n");
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(uc_audit(path, 1e-9, &mut r), UcStatus::NotUnicyclic);
        let mut v = 0.0;
        assert_eq!(
            uc_index_eval(path, cstr("nope").as_ptr(), &mut v),
            UcStatus::InvalidSpec
        );
        uc_graph_free(path);
        let mut c = 0;
        assert_eq!(uc_count_classes(12, &mut c), UcStatus::Range);
    }
}

#[test]
fn construct_and_audit() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(uc_construct(cstr("K").as_ptr(), 7, 3, &mut g), UcStatus::Ok);
        let mut r = ptr::null_mut();
        assert_eq!(uc_audit(g, 1e-9, &mut r), UcStatus::Ok);
        let mut clean = false;
        assert_eq!(uc_audit_is_clean(r, &mut clean), UcStatus::Ok);
        assert!(clean);
        let mut violations = 1;
        assert_eq!(uc_audit_violation_count(r, &mut violations), UcStatus::Ok);
        assert_eq!(violations, 0);
        let mut csv = ptr::null_mut();
        assert_eq!(uc_audit_to_csv(r, &mut csv), UcStatus::Ok);
        let text = CStr::from_ptr(csv).to_str().unwrap().to_owned();
        uc_string_free(csv);
        assert!(
            text.starts_with("graph_id,bound_id,param,value,bound_value,satisfied,tight,member\n")
        );
        assert!(text.contains(",thm-M1-delta-upper,-,34,34,true,true,true"));
        uc_audit_free(r);
        uc_graph_free(g);
        assert_eq!(
            uc_construct(cstr("H").as_ptr(), 7, 7, &mut g),
            UcStatus::Range
        );
        assert_eq!(
            uc_construct(cstr("Z").as_ptr(), 7, 3, &mut g),
            UcStatus::InvalidSpec
        );
    }
}

#[test]
fn c_header_smoke_test() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = manifest.join("include").join("unicyclic.h");
    assert!(header.exists(), "header not generated");
    let Ok(exe) = std::env::current_exe() else {
        return;
    };
    let target_dir = exe.parent().and_then(|p| p.parent()).unwrap().to_path_buf();
    let lib = target_dir.join("libunicyclic_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping C smoke test: no C compiler or static library");
        return;
    }
    let out_bin = std::env::temp_dir().join(format!("uc_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out_bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let run = Command::new(&out_bin).output().unwrap();
    let _ = std::fs::remove_file(&out_bin);
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
