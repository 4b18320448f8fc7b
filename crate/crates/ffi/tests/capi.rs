//! Exercises the C ABI from Rust: handle life cycles, out-pointer results,
//! status codes and the thread-local error message.

use std::ffi::CStr;
use std::ptr;

use indexcodes::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(ic_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn capacity_through_the_abi() {
    unsafe {
        let (mut num, mut den) = (0u64, 0u64);
        assert_eq!(ic_capacity(20, 0, 4, &mut num, &mut den), IcStatus::Ok);
        assert_eq!((num, den), (1, 16));
        assert_eq!(ic_capacity(5, 2, 2, &mut num, &mut den), IcStatus::Ok);
        assert_eq!((num, den), (1, 1));
        assert_eq!(ic_capacity(5, 1, 1, &mut num, &mut den), IcStatus::Ok);
        assert_eq!((num, den), (2, 5));
    }
}

#[test]
fn capacity_error_paths() {
    unsafe {
        let (mut num, mut den) = (0u64, 0u64);
        assert_eq!(
            ic_capacity(5, 3, 2, &mut num, &mut den),
            IcStatus::InvalidParameters
        );
        assert!(last_error().contains("U+D"));
        assert_eq!(
            ic_capacity(5, 0, 1, ptr::null_mut(), &mut den),
            IcStatus::NullPointer
        );
    }
}

#[test]
fn code_construction_and_matrix_access() {
    unsafe {
        let mut code: *mut IcCode = ptr::null_mut();
        assert_eq!(ic_code_new(IcCase::I, 20, 4, 0, &mut code), IcStatus::Ok);
        let (mut k, mut n) = (0u32, 0u32);
        assert_eq!(ic_code_message_count(code, &mut k), IcStatus::Ok);
        assert_eq!(ic_code_length(code, &mut n), IcStatus::Ok);
        assert_eq!((k, n), (20, 16));

        let mut entry = 0u8;
        assert_eq!(ic_code_matrix_entry(code, 5, 1, &mut entry), IcStatus::Ok);
        assert_eq!(entry, 1);
        assert_eq!(ic_code_matrix_entry(code, 2, 1, &mut entry), IcStatus::Ok);
        assert_eq!(entry, 0);
        assert_eq!(
            ic_code_matrix_entry(code, 21, 1, &mut entry),
            IcStatus::InvalidArgument
        );

        let mut text: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(ic_code_matrix_text(code, &mut text), IcStatus::Ok);
        let rendered = CStr::from_ptr(text).to_string_lossy().into_owned();
        assert!(rendered.starts_with("20 16\n1 0 0 0"));
        ic_string_free(text);

        let mut optimal = 0u8;
        assert_eq!(ic_check_optimal_length(code, &mut optimal), IcStatus::Ok);
        assert_eq!(optimal, 1);
        ic_code_free(code);
    }
}

#[test]
fn invalid_parameters_are_signalled() {
    unsafe {
        let mut code: *mut IcCode = ptr::null_mut();
        assert_eq!(
            ic_code_new(IcCase::I, 6, 4, 0, &mut code),
            IcStatus::InvalidParameters
        );
        assert_eq!(last_error(), "D must divide K");
        assert_eq!(
            ic_code_new(IcCase::V, 21, 4, 3, &mut code),
            IcStatus::InvalidParameters
        );
        assert_eq!(
            ic_code_new(IcCase::I, 20, 4, 0, ptr::null_mut()),
            IcStatus::NullPointer
        );
    }
}

#[test]
fn verify_report_round_trip() {
    unsafe {
        let mut problem: *mut IcProblem = ptr::null_mut();
        let mut code: *mut IcCode = ptr::null_mut();
        assert_eq!(
            ic_problem_new_case(IcCase::VI, 21, 17, 1, &mut problem),
            IcStatus::Ok
        );
        assert_eq!(ic_code_new(IcCase::VI, 21, 17, 1, &mut code), IcStatus::Ok);

        let mut edges = 0u64;
        assert_eq!(ic_problem_edge_count(problem, &mut edges), IcStatus::Ok);
        assert_eq!(edges, 21 * 17);

        let mut report: *mut IcReport = ptr::null_mut();
        assert_eq!(ic_verify(problem, code, 0, &mut report), IcStatus::Ok);
        let mut all = 0u8;
        assert_eq!(ic_report_all_decodable(report, &mut all), IcStatus::Ok);
        assert_eq!(all, 1);

        let mut ones = 0;
        let mut twos = 0;
        for k in 1..=21 {
            let (mut decodable, mut min_tx) = (0u8, 0u32);
            assert_eq!(
                ic_report_receiver(report, k, &mut decodable, &mut min_tx),
                IcStatus::Ok
            );
            assert_eq!(decodable, 1);
            match min_tx {
                1 => ones += 1,
                2 => twos += 1,
                other => panic!("unexpected count {other}"),
            }
        }
        assert_eq!((ones, twos), (18, 3));

        let (mut d, mut t) = (0u8, 0u32);
        assert_eq!(
            ic_report_receiver(report, 22, &mut d, &mut t),
            IcStatus::InvalidArgument
        );

        ic_report_free(report);
        ic_code_free(code);
        ic_problem_free(problem);
    }
}

#[test]
fn minrank_and_criticality() {
    unsafe {
        let mut problem: *mut IcProblem = ptr::null_mut();
        assert_eq!(
            ic_problem_new_case(IcCase::I, 6, 2, 0, &mut problem),
            IcStatus::Ok
        );
        let (mut value, mut explored) = (0u32, 0u64);
        assert_eq!(
            ic_minrank(problem, 0, 0, &mut value, &mut explored),
            IcStatus::Ok
        );
        assert_eq!(value, 4);
        assert!(explored > 0);

        let mut overall = 0u8;
        assert_eq!(ic_critical(problem, 0, 0, &mut overall), IcStatus::Ok);
        assert_eq!(overall, 1);
        ic_problem_free(problem);

        let mut full: *mut IcProblem = ptr::null_mut();
        assert_eq!(ic_problem_new_one_sided(6, 2, &mut full), IcStatus::Ok);
        assert_eq!(ic_critical(full, 0, 0, &mut overall), IcStatus::Ok);
        assert_eq!(overall, 0);
        ic_problem_free(full);

        // Budget exhaustion surfaces as the inconclusive status.
        let mut empty: *mut IcProblem = ptr::null_mut();
        assert_eq!(ic_problem_new_one_sided(8, 7, &mut empty), IcStatus::Ok);
        assert_eq!(
            ic_minrank(empty, 4, 0, &mut value, &mut explored),
            IcStatus::Inconclusive
        );
        assert!(last_error().contains("free entries exceed"));
        ic_problem_free(empty);
    }
}

#[test]
fn version_and_error_defaults() {
    unsafe {
        let version = CStr::from_ptr(ic_version()).to_string_lossy().into_owned();
        assert!(!version.is_empty());
        // Frees of null are no-ops.
        ic_problem_free(ptr::null_mut());
        ic_code_free(ptr::null_mut());
        ic_report_free(ptr::null_mut());
        ic_string_free(ptr::null_mut());
    }
}
