//! JSON round-trips and the on-disk cache.

use std::fs;

use rps::cache::{solve_cached, Cache};
use rps::json;
use rps::pipeline::{solve_instance, SolveOptions};
use rps_core::words::InstanceSpec;

fn stanley() -> InstanceSpec {
    InstanceSpec::parse(2, &["HT", "TT"], vec![1, -1], 0).unwrap()
}

fn quick() -> SolveOptions {
    SolveOptions { asymptotic_terms: 400, ..SolveOptions::default() }
}

#[test]
fn proposition_survives_json() {
    let p = solve_instance(&stanley(), &quick());
    let text = json::to_string(&p);
    let back = json::from_str(&text).unwrap();
    assert_eq!(back.spec, p.spec);
    assert_eq!(back.terms, p.terms);
    assert_eq!(back.algebraic, p.algebraic);
    assert_eq!(back.ode, p.ode);
    assert_eq!(back.recurrence, p.recurrence);
    assert_eq!(json::to_string(&back), text);
}

#[test]
fn json_has_stable_keys() {
    let p = solve_instance(&stanley(), &quick());
    let v: serde_json::Value = serde_json::from_str(&json::to_string(&p)).unwrap();
    for key in ["spec", "terms", "enumerator", "algebraic", "ode", "recurrence", "asymptotics", "verification", "version"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    for key in ["coefficients", "degT", "degP", "verifiedOrder"] {
        assert!(v["algebraic"].get(key).is_some(), "missing algebraic.{key}");
    }
}

#[test]
fn malformed_json_is_an_error() {
    assert!(json::from_str("{").is_err());
    assert!(json::from_str("{\"spec\": 3}").is_err());
}

#[test]
fn cache_store_load_and_miss() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    let spec = stanley();
    let opts = quick();
    let key = Cache::key(&spec, &opts);
    assert!(cache.load(&key).is_none());

    let cold = solve_cached(&spec, &opts, Some(&cache));
    let stored = fs::read_to_string(dir.path().join(format!("{key}.json"))).unwrap();
    let warm = solve_cached(&spec, &opts, Some(&cache));
    assert_eq!(json::to_string(&cold), json::to_string(&warm));
    cache.store(&key, &warm).unwrap();
    assert_eq!(fs::read_to_string(dir.path().join(format!("{key}.json"))).unwrap(), stored);
}

#[test]
fn cache_key_depends_on_options() {
    let spec = stanley();
    let a = Cache::key(&spec, &SolveOptions::default());
    let b = Cache::key(&spec, &SolveOptions { terms: 60, ..SolveOptions::default() });
    assert_ne!(a, b);
    assert_eq!(a, Cache::key(&spec, &SolveOptions::default()));
}

#[test]
fn corrupt_cache_entry_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    let spec = stanley();
    let opts = quick();
    let key = Cache::key(&spec, &opts);
    fs::write(dir.path().join(format!("{key}.json")), "not json").unwrap();
    assert!(cache.load(&key).is_none());
    let p = solve_cached(&spec, &opts, Some(&cache));
    assert_eq!(p.terms.len(), 50);
    assert!(cache.load(&key).is_some());
}
