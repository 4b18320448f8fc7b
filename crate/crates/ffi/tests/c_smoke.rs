//! Compiles and runs a small C program against the generated header and the
//! cdylib, proving the advertised ABI actually links from C.

use std::path::PathBuf;
use std::process::Command;

const C_SOURCE: &str = r#"
#include <stdio.h>
#include <string.h>
#include "indexcodes.h"

static int failures = 0;
#define CHECK(cond) do { if (!(cond)) { failures++; fprintf(stderr, "FAIL %s:%d %s\n", __FILE__, __LINE__, #cond); } } while (0)

int main(void) {
    uint64_t num = 0, den = 0;
    CHECK(ic_capacity(20, 0, 4, &num, &den) == IC_STATUS_OK);
    CHECK(num == 1 && den == 16);

    ic_code *code = NULL;
    CHECK(ic_code_new(IC_CASE_I, 20, 4, 0, &code) == IC_STATUS_OK);
    uint32_t k = 0, n = 0;
    CHECK(ic_code_message_count(code, &k) == IC_STATUS_OK && k == 20);
    CHECK(ic_code_length(code, &n) == IC_STATUS_OK && n == 16);

    char *text = NULL;
    CHECK(ic_code_matrix_text(code, &text) == IC_STATUS_OK);
    CHECK(strncmp(text, "20 16\n", 6) == 0);
    ic_string_free(text);

    ic_problem *problem = NULL;
    CHECK(ic_problem_new_case(IC_CASE_I, 20, 4, 0, &problem) == IC_STATUS_OK);
    ic_report *report = NULL;
    CHECK(ic_verify(problem, code, 0, &report) == IC_STATUS_OK);
    uint8_t all = 0;
    CHECK(ic_report_all_decodable(report, &all) == IC_STATUS_OK && all == 1);
    uint8_t decodable = 0;
    uint32_t min_tx = 0;
    CHECK(ic_report_receiver(report, 17, &decodable, &min_tx) == IC_STATUS_OK);
    CHECK(decodable == 1 && min_tx == 4);
    ic_report_free(report);
    ic_problem_free(problem);
    ic_code_free(code);

    CHECK(ic_code_new(IC_CASE_I, 6, 4, 0, &code) == IC_STATUS_INVALID_PARAMETERS);
    CHECK(strcmp(ic_last_error_message(), "D must divide K") == 0);

    ic_problem *sparse = NULL;
    CHECK(ic_problem_new_case(IC_CASE_I, 6, 2, 0, &sparse) == IC_STATUS_OK);
    uint32_t value = 0;
    CHECK(ic_minrank(sparse, 0, 0, &value, NULL) == IC_STATUS_OK && value == 4);
    ic_problem_free(sparse);

    if (failures) {
        fprintf(stderr, "%d check(s) failed\n", failures);
        return 1;
    }
    return 0;
}
"#;

/// target/debug, derived from the test executable's own location.
fn target_dir() -> PathBuf {
    let mut dir = std::env::current_exe().expect("test executable path");
    dir.pop(); // the executable
    if dir.ends_with("deps") {
        dir.pop();
    }
    dir
}

#[test]
fn c_program_links_and_passes() {
    let include_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let target = target_dir();
    let work = tempfile::tempdir().unwrap();
    let source = work.path().join("smoke.c");
    let program = work.path().join("smoke");
    std::fs::write(&source, C_SOURCE).unwrap();

    let compile = Command::new("cc")
        .arg(&source)
        .arg("-o")
        .arg(&program)
        .arg(format!("-I{}", include_dir.display()))
        .arg(format!("-L{}", target.display()))
        .arg("-lindexcodes")
        .arg(format!("-Wl,-rpath,{}", target.display()))
        .arg("-Wall")
        .arg("-Werror")
        .output()
        .expect("run cc");
    assert!(
        compile.status.success(),
        "cc failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&program).output().expect("run smoke test");
    assert!(
        run.status.success(),
        "smoke test failed:\n{}",
        String::from_utf8_lossy(&run.stderr)
    );
}
