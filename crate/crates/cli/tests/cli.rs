use std::process::{Command, Output};

const D1: &str = "8/p1p1p3/2P1P3/8/p3P3/P1P2Kp1/2P3Pk/8";
const D2: &str = "8/8/1p2p3/7p/1P6/4P3/7P/8";
const D5: &str = "8/1p5p/p7/4k3/4Pp2/5K1P/PP6/8";
const D7: &str = "8/2p4p/p4p2/2p5/2p3PP/2P2p2/PP3Pk1/4KR2";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pawncgt")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_prints_total_and_verdict() {
    let o = run(&["analyze", D5]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("total: v* ; first player wins"), "{text}");
    assert!(text.contains("h3-h4"));
}

#[test]
fn analyze_lists_component_values() {
    let o = run(&["analyze", D2]);
    assert!(stdout(&o).contains("components: *, 0, ^"), "{}", stdout(&o));
}

#[test]
fn analyze_diagram_nine_winner() {
    let text = stdout(&run(&["analyze", "--corpus", "d9"]));
    assert!(text.contains("Black wins either way"), "{text}");
    assert!(text.contains("warning:"));
}

#[test]
fn analyze_json_round_trips_values() {
    let o = run(&["analyze", "--json", "--corpus", "d6"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["mzz"], true);
    for c in doc["components"].as_array().unwrap() {
        pawncgt::kernel::parse_value_expr(c["value"].as_str().unwrap()).unwrap();
    }
}

#[test]
fn analyze_offset_and_bad_input() {
    let o = run(&["analyze", D1, "--offset", "-3"]);
    assert!(stdout(&o).contains("second player wins"));
    assert_eq!(run(&["analyze", "8/8/8"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", D1, "--offset", "1/3"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "--corpus", "nope"]).status.code(), Some(2));
}

#[test]
fn value_names_and_compares() {
    assert!(stdout(&run(&["value", "{0,*|*}"])).starts_with("^ (up), positive"));
    assert!(stdout(&run(&["value", "^ + v"])).starts_with("0 "));
    assert!(stdout(&run(&["value", "Tiny(1)", "1/4"])).contains("Tiny(1) < 1/4"));
    assert!(stdout(&run(&["value", "*", "0"])).contains("* ‖ 0"));
    assert_eq!(run(&["value", "{0|"]).status.code(), Some(2));
}

#[test]
fn mzz_exit_codes() {
    assert_eq!(run(&["mzz", "--corpus", "d3"]).status.code(), Some(0));
    assert_eq!(run(&["mzz", "--corpus", "d6"]).status.code(), Some(0));
    let o = run(&["mzz", D5]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "v*");
}

#[test]
fn oracle_winners() {
    for side in ["w", "b"] {
        assert!(stdout(&run(&["oracle", D1, "--side", side])).starts_with("White"));
    }
    assert!(stdout(&run(&["oracle", D5, "--side", "w"])).starts_with("White"));
    assert!(stdout(&run(&["oracle", D5, "--side", "b"])).starts_with("Black"));
    let o = run(&["oracle", D7, "--side", "w"]);
    assert!(stdout(&o).starts_with("Black"));
    assert!(stdout(&o).contains("nodes:"));
    assert_eq!(run(&["oracle", D7, "--side", "w", "--budget", "10"]).status.code(), Some(2));
}

#[test]
fn fuzz_is_stable() {
    let args = ["fuzz", "--seed", "7", "--count", "200"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let short = stdout(&run(&["fuzz", "--seed", "11", "--count", "150", "--height", "6", "--max-files", "1", "--max-pawns", "3"]));
    assert!(short.contains("*2"), "{short}");
}
