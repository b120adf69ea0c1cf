//! Webbook generation: class counts, ordering and reproducible text.

use rps::pipeline::SolveOptions;
use rps::report::webbook_text;
use rps::webbook::{generate_webbook, webbook_specs};
use rps_core::words::Symmetry;

fn quick() -> SolveOptions {
    SolveOptions { asymptotic_terms: 400, ..SolveOptions::default() }
}

#[test]
fn representatives_come_in_class_order() {
    let (classes, specs) = webbook_specs(2, 3, Symmetry::default()).unwrap();
    assert_eq!(classes.len(), 11);
    let reps: Vec<_> = classes.iter().map(|c| c.representative.clone()).collect();
    let mut sorted = reps.clone();
    sorted.sort();
    assert_eq!(reps, sorted);
    assert_eq!(specs[0].canonical_key(), webbook_specs(2, 3, Symmetry::default()).unwrap().1[0].canonical_key());
}

#[test]
fn small_alphabet_is_rejected() {
    assert!(webbook_specs(1, 2, Symmetry::default()).is_err());
    assert!(webbook_specs(2, 0, Symmetry::default()).is_err());
}

#[test]
fn webbook_text_is_reproducible() {
    let a = generate_webbook(2, 2, Symmetry::default(), &quick(), None).unwrap();
    let b = generate_webbook(2, 2, Symmetry::default(), &quick(), None).unwrap();
    assert_eq!(a.propositions.len(), 3);
    let text = webbook_text(&a);
    assert_eq!(text, webbook_text(&b));
    assert!(text.contains("This webbook contains 3 propositions."));
}

#[test]
fn cached_webbook_matches_uncached() {
    let dir = tempfile::tempdir().unwrap();
    let cache = rps::cache::Cache::open(dir.path()).unwrap();
    let plain = generate_webbook(2, 2, Symmetry::default(), &quick(), None).unwrap();
    let cold = generate_webbook(2, 2, Symmetry::default(), &quick(), Some(&cache)).unwrap();
    let warm = generate_webbook(2, 2, Symmetry::default(), &quick(), Some(&cache)).unwrap();
    assert_eq!(webbook_text(&plain), webbook_text(&cold));
    assert_eq!(webbook_text(&cold), webbook_text(&warm));
}
