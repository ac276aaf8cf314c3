use std::path::Path;
use std::process::{Command, Output};

const TREFOIL: &str = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";
const FIGURE_EIGHT: &str = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]";

fn knotscope(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotscope"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_by_name_emits_valid_json() {
    let out = knotscope(&["analyze", "--name", "3_1", "--json"]);
    assert!(out.status.success(), "{out:?}");
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["alexander"]["g"], 1);
    assert_eq!(report["invariants"]["fibered"], true);
    assert_eq!(report["prop22"], "sqp-fibered-after-mirror");
    assert_eq!(report["reference_mismatches"], serde_json::json!([]));
}

#[test]
fn analyze_unknown_name_is_an_input_error() {
    let out = knotscope(&["analyze", "--name", "99_99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_rejects_malformed_pd() {
    let out = knotscope(&["analyze", "--pd", "[[1,2,3]]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn theorem_confirms_the_trefoil() {
    let out = knotscope(&["theorem", "--pd", TREFOIL]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["verdict"], "confirmed-T(3,2)");
    assert_eq!(report["mirrored"], true);
}

#[test]
fn theorem_rejects_links() {
    let out = knotscope(&["theorem", "--pd", "[[4,2,1,3],[2,4,3,1]]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn desum_splits_the_figure_eight() {
    let out = knotscope(&["desum", "--pd", FIGURE_EIGHT, "--circle", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("left:") && text.contains("right:"));
    let out = knotscope(&["desum", "--pd", FIGURE_EIGHT, "--circle", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn corpus_run_passes_on_the_bundled_file() {
    let out = knotscope(&["corpus", "run"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("0 failures"));
}

#[test]
fn corpus_run_is_deterministic_across_job_counts() {
    let one = knotscope(&["corpus", "run", "--jobs", "1"]);
    let eight = knotscope(&["corpus", "run", "--jobs", "8"]);
    assert!(one.status.success() && eight.status.success());
    assert_eq!(one.stdout, eight.stdout);
}

#[test]
fn corpus_run_lenient_skips_bad_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corpus.csv");
    std::fs::write(
        &path,
        format!("name,pd\ngood,\"{TREFOIL}\"\nbad,\"[[1,2,3]]\"\n"),
    )
    .unwrap();
    let strict = knotscope(&["corpus", "run", path.to_str().unwrap()]);
    assert_eq!(strict.status.code(), Some(2));
    let lenient = knotscope(&["corpus", "run", path.to_str().unwrap(), "--lenient"]);
    assert!(lenient.status.success(), "{}", stdout(&lenient));
    let text = stdout(&lenient);
    assert!(text.contains("skipped line 3"));
    assert!(text.contains("1 skipped"));
}

#[test]
fn corpus_run_reports_check_failures_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corpus.csv");
    std::fs::write(
        &path,
        format!("name,pd,alexander,signature,genus,fibered\nwrong,\"{TREFOIL}\",1 -1 1,2,3,true\n"),
    )
    .unwrap();
    let out = knotscope(&["corpus", "run", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("genus-cross=FAIL"));
}

#[test]
fn corpus_dir_env_var_overrides_the_bundled_location() {
    let dir = tempfile::tempdir().unwrap();
    let name = "alternating-knots-to-9-crossings.csv";
    let bundled = Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name);
    std::fs::copy(&bundled, dir.path().join(name)).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_knotscope"))
        .args(["analyze", "--name", "6_2"])
        .env("KNOTSCOPE_CORPUS_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "{out:?}");

    let missing = Command::new(env!("CARGO_BIN_EXE_knotscope"))
        .args(["analyze", "--name", "6_2"])
        .env("KNOTSCOPE_CORPUS_DIR", dir.path().join("nowhere"))
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn schema_print_emits_json() {
    let out = knotscope(&["schema", "print"]);
    assert!(out.status.success());
    let schema: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(schema["title"], "knotscope analyze report");
}

#[test]
fn unknown_check_name_is_an_input_error() {
    let out = knotscope(&["corpus", "run", "--check", "euler,bogus"]);
    assert_eq!(out.status.code(), Some(2));
}
