//! Compiles and runs a small C program against the generated header
//! and the static library, exercising the ABI end to end. Skipped when
//! no C compiler is on the path.

use std::path::PathBuf;
use std::process::Command;

const C_PROGRAM: &str = r#"
#include <assert.h>
#include <stdio.h>
#include <string.h>
#include "hpsets.h"

int main(void) {
    HpsComplex *torus = NULL;
    HpsStatus status = hps_complex_from_spec("torus-grid:3", &torus);
    assert(status == HPS_STATUS_OK);
    assert(hps_complex_dim(torus) == 2);
    assert(hps_complex_cell_count(torus, 0) == 9);
    assert(hps_complex_cell_count(torus, 1) == 27);
    assert(hps_complex_cell_count(torus, 2) == 18);
    assert(hps_complex_euler_characteristic(torus) == 0);
    assert(hps_complex_is_pseudomanifold(torus));
    assert(hps_complex_is_orientable(torus));

    size_t betti = 0;
    assert(hps_complex_betti(torus, 1, &betti) == HPS_STATUS_OK);
    assert(betti == 2);
    size_t harmonic = 0;
    assert(hps_complex_harmonic_dim(torus, 1, &harmonic) == HPS_STATUS_OK);
    assert(harmonic == betti);

    assert(hps_complex_betti(torus, 9, &betti) == HPS_STATUS_OUT_OF_RANGE);
    assert(strlen(hps_last_error_message()) > 0);

    char *report = NULL;
    status = hps_search("sphere:2\ntorus-grid:3", 2, "(2),(0,2),(1,2)",
                        true, false, &report);
    assert(status == HPS_STATUS_OK);
    assert(strstr(report, "solution dim=3") != NULL);
    hps_string_free(report);

    HpsComplex *bad = NULL;
    assert(hps_complex_from_spec("sphere:0", &bad) == HPS_STATUS_PARSE);

    hps_complex_free(torus);
    printf("c smoke test passed\n");
    return 0;
}
"#;

fn target_debug_dir() -> PathBuf {
    // tests run from the workspace target directory's sibling layout
    let mut dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    dir.pop();
    dir.pop();
    dir.join("target").join("debug")
}

#[test]
fn c_program_links_and_runs() {
    let compiler = ["cc", "gcc", "clang"]
        .iter()
        .find(|c| {
            Command::new(c)
                .arg("--version")
                .output()
                .is_ok_and(|o| o.status.success())
        })
        .copied();
    let Some(compiler) = compiler else {
        eprintln!("no C compiler found, skipping");
        return;
    };

    let include_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let lib = target_debug_dir().join("libhpsets_ffi.a");
    assert!(
        lib.exists(),
        "static library missing at {} (built before tests run)",
        lib.display()
    );

    let scratch = std::env::temp_dir().join(format!("hpsets-c-smoke-{}", std::process::id()));
    std::fs::create_dir_all(&scratch).unwrap();
    let source = scratch.join("smoke.c");
    let binary = scratch.join("smoke");
    std::fs::write(&source, C_PROGRAM).unwrap();

    let compile = Command::new(compiler)
        .arg(&source)
        .arg(&lib)
        .arg("-I")
        .arg(&include_dir)
        .arg("-o")
        .arg(&binary)
        .args(["-lpthread", "-ldl", "-lm"])
        .output()
        .expect("compiler runs");
    assert!(
        compile.status.success(),
        "compilation failed: {}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&binary).output().expect("program runs");
    assert!(
        run.status.success(),
        "smoke program failed: {}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert!(String::from_utf8_lossy(&run.stdout).contains("c smoke test passed"));

    std::fs::remove_dir_all(&scratch).ok();
}
