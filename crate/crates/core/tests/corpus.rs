mod common;

use std::sync::OnceLock;

use common::*;
use qtspec_core::QtCode;

fn shared() -> &'static [QtCode] {
    static CORPUS: OnceLock<Vec<QtCode>> = OnceLock::new();
    CORPUS.get_or_init(corpus)
}

fn assert_none(failures: Vec<String>) {
    assert!(failures.is_empty(), "{} failures:\n{}", failures.len(), failures.join("\n"));
}

#[test]
fn corpus_is_varied() {
    let codes = shared();
    assert!(codes.len() >= 200);
    assert!(codes.iter().any(|c| c.field().order() == 2));
    assert!(codes.iter().any(|c| c.field().order() == 3 && c.lambda() != c.field().one()));
    for ell in 1..=3 {
        assert!(codes.iter().any(|c| c.ell() == ell));
    }
    assert!(codes.iter().any(|c| c.is_full_code()) || codes.iter().any(|c| c.dimension() == c.length()));
    assert!(codes.iter().filter(|c| oracle_feasible(c)).count() >= 100);
    let multi_eigen = codes.iter().filter(|c| c.determinant().degree().unwrap_or(0) > c.m()).count();
    assert!(multi_eigen > 10);
}

#[test]
fn multiplicity_equals_eigenspace_dimension() {
    assert_none(check_lemma1(shared()));
}

#[test]
fn parity_check_rank_and_annihilation() {
    assert_none(check_parity(shared(), 20));
}

#[test]
fn bounds_never_exceed_exact_distance() {
    let (failures, stats) = check_soundness(shared());
    eprintln!("{stats:?}");
    assert!(stats.codes >= 100, "only {} oracle-feasible codes", stats.codes);
    assert!(stats.nontrivial * 3 >= stats.bounds, "{stats:?}");
    assert_none(failures);
}

#[test]
fn degenerate_characterizations() {
    assert_none(check_degenerate(shared()));
}

#[test]
fn reduced_form_and_dimension() {
    assert_none(check_reduction(shared()));
}
