//! Suites at the ranks where the identities are claimed exhaustively.

use hopftab::tableau;
use hopftab::verify;

fn check(name: &str, nmax: usize) {
    let r = verify::run_suite(name, nmax).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn orders_and_lemma1_through_rank_5() {
    check("orders", 5);
    check("lemma1", 5);
    check("representatives", 5);
}

#[test]
fn factorization_through_rank_7() {
    check("factorization", 7);
}

#[test]
fn tableau_factorization_through_rank_8() {
    for t in tableau::enumerate_tableaux(8) {
        let f = t.triangle_factorize();
        assert_eq!(tableau::triangle_tab_all(&f), t);
        assert!(
            f.iter().all(|x| x.is_triangle_indecomposable().unwrap()),
            "{t}"
        );
    }
}

#[test]
fn dual_basis_pairing_through_rank_6() {
    check("duality", 6);
    check("quotient", 5);
    check("counit", 6);
}
