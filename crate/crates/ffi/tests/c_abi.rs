use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use bnmono_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(bnm_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn gray_network_through_the_abi() {
    unsafe {
        let mut gray = ptr::null_mut();
        assert_eq!(bnm_gray_code_network(2, &mut gray), BnmStatus::Ok);
        // literal "00" -> "01", i.e. encoding 0 -> 2
        let mut y = 0u32;
        assert_eq!(bnm_network_evaluate(gray, 0, &mut y), BnmStatus::Ok);
        assert_eq!(y, 2);

        let mut diameter = 0u64;
        assert_eq!(bnm_diameter(gray, &mut diameter), BnmStatus::Ok);
        assert_eq!(diameter, 3);

        let mut flag = true;
        assert_eq!(bnm_has_negative_loop(gray, &mut flag), BnmStatus::Ok);
        assert!(!flag);
        assert_eq!(bnm_has_two_cycle(gray, &mut flag), BnmStatus::Ok);
        assert!(!flag);

        let mut count = 0usize;
        assert_eq!(
            bnm_fixed_points(gray, ptr::null_mut(), 0, &mut count),
            BnmStatus::Ok
        );
        assert_eq!(count, 1);

        let mut json = ptr::null_mut();
        assert_eq!(bnm_network_to_json(gray, &mut json), BnmStatus::Ok);
        let mut copy = ptr::null_mut();
        assert_eq!(bnm_network_from_json(json, &mut copy), BnmStatus::Ok);
        bnm_string_free(json);
        assert_eq!(bnm_network_evaluate(copy, 0, &mut y), BnmStatus::Ok);
        assert_eq!(y, 2);

        bnm_network_free(copy);
        bnm_network_free(gray);
    }
}

#[test]
fn errors_map_to_status_codes() {
    unsafe {
        let neg = [1u32, 0];
        let mut f = ptr::null_mut();
        assert_eq!(
            bnm_network_from_images(1, neg.as_ptr(), 2, &mut f),
            BnmStatus::Ok
        );

        let mut host = ptr::null_mut();
        assert_eq!(bnm_embed(f, false, &mut host), BnmStatus::NegativeLoop);
        assert!(last_error().contains("negative loop"));
        assert_eq!(bnm_embed(f, true, &mut host), BnmStatus::Ok);
        assert_eq!(bnm_network_components(host), 2);

        let mut y = 0;
        assert_eq!(
            bnm_network_evaluate(f, 2, &mut y),
            BnmStatus::InvalidArgument
        );

        let mut reachable = true;
        let mut d = 99u64;
        assert_eq!(bnm_distance(f, 0, 0, &mut reachable, &mut d), BnmStatus::Ok);
        assert!(reachable);
        assert_eq!(d, 0);

        let bad = CString::new(r#"{"n": 2, "tables": ["01"]}"#).unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(
            bnm_network_from_json(bad.as_ptr(), &mut g),
            BnmStatus::InvalidArgument
        );
        let junk = CString::new("{").unwrap();
        assert_eq!(
            bnm_network_from_json(junk.as_ptr(), &mut g),
            BnmStatus::Parse
        );

        let short = [0u32; 3];
        assert_eq!(
            bnm_network_from_images(2, short.as_ptr(), 3, &mut g),
            BnmStatus::InvalidArgument
        );

        let big = vec![0u32; 1 << 15];
        let mut zero15 = ptr::null_mut();
        assert_eq!(
            bnm_network_from_images(15, big.as_ptr(), big.len(), &mut zero15),
            BnmStatus::Ok
        );
        let mut diameter = 0;
        assert_eq!(bnm_diameter(zero15, &mut diameter), BnmStatus::SizeLimit);

        let suite = CString::new("embedding").unwrap();
        let mut passed = false;
        let mut report = ptr::null_mut();
        assert_eq!(
            bnm_verify(f, suite.as_ptr(), &mut passed, &mut report),
            BnmStatus::Ok
        );
        assert!(passed);
        let text = CStr::from_ptr(report).to_str().unwrap().to_owned();
        assert!(text.contains("\"skipped\": true"));
        bnm_string_free(report);

        bnm_network_free(zero15);
        bnm_network_free(host);
        bnm_network_free(f);
    }
}

#[test]
fn header_declares_the_abi() {
    let header =
        std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/bnmono.h"))
            .unwrap();
    for symbol in [
        "typedef struct BnmNetwork BnmNetwork;",
        "BNM_STATUS_NEGATIVE_LOOP = 5",
        "bnm_network_from_json",
        "bnm_network_from_images",
        "bnm_embed",
        "bnm_distance",
        "bnm_verify",
        "bnm_last_error_message",
    ] {
        assert!(header.contains(symbol), "missing {symbol}");
    }
}

/// Compiles and runs the C smoke program against the static library.
#[test]
fn c_program_links_against_static_library() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let lib = profile_dir.join("libbnmono_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!(
            "skipping: no C compiler or static library at {}",
            lib.display()
        );
        return;
    }
    let out_dir = tempfile_dir();
    let binary = out_dir.join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&binary)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let output = Command::new(&binary).output().unwrap();
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&output.stdout).trim(), "ok");
}

fn tempfile_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bnmono-ffi-smoke-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
