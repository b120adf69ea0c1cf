//! The `rps` binary, driven as a subprocess with caching disabled.

use std::process::{Command, Output};

fn rps(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rps"))
        .arg("--no-cache")
        .args(args)
        .env("RUST_LOG", "error")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn solve_equal_letters() {
    let o = rps(&["solve", "--m", "2", "--w1", "H", "--w2", "T"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("(1-4*t^2)*P^2 - 1 = 0"), "{text}");
    assert!(text.contains("(n+2)*a(n+2) - (4*n+4)*a(n) = 0"), "{text}");
}

#[test]
fn solve_emits_json() {
    let o = rps(&["solve", "--m", "2", "--w1", "H", "--w2", "T", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["terms"][2], "2");
    assert_eq!(v["algebraic"]["degP"], 2);
}

#[test]
fn solve_multi_several_words() {
    let o = rps(&["solve-multi", "--m", "2", "--pattern", "HH:1", "--pattern", "HT:1", "--pattern", "TH:-2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("#HH(w) + #HT(w) - 2*#TH(w) = 0"), "{}", stdout(&o));
}

#[test]
fn identical_words_are_a_usage_error() {
    let o = rps(&["solve", "--m", "2", "--w1", "HT", "--w2", "HT"]);
    assert!(!o.status.success());
    assert!(!String::from_utf8_lossy(&o.stderr).is_empty());
}

#[test]
fn letters_outside_the_alphabet_are_rejected() {
    let o = rps(&["solve", "--m", "2", "--w1", "ab", "--w2", "ac"]);
    assert!(!o.status.success());
}

#[test]
fn webbook_writes_text_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let o = rps(&["webbook", "--m", "2", "--k", "2", "--out", dir.path().to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(dir.path().join("oRPS22.txt")).unwrap();
    assert!(text.contains("This webbook contains 3 propositions."));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("oRPS22.json")).unwrap()).unwrap();
    assert!(json.is_array() || json.is_object());
}

#[test]
fn offline_oeis_lookup_without_cache_is_unavailable() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_rps"))
        .args(["oeis", "--terms", "1,2,2,3,6,10,20", "--offline"])
        .env("RPS_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
