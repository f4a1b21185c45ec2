use proptest::prelude::*;

use hopftab::hopf;
use hopftab::linear::{LinComb, TensorComb};
use hopftab::perm::{self, Permutation};
use hopftab::tableau::{self, StandardTableau};

fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn arb_tab(max: usize) -> impl Strategy<Value = StandardTableau> {
    arb_perm(max).prop_map(|s| tableau::insertion_tableau(&s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rsk_round_trip(s in arb_perm(12)) {
        let (p, q) = tableau::rsk(&s);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(tableau::inverse_rsk(&p, &q).unwrap(), s);
    }

    #[test]
    fn reversal_conjugates_the_products(u in arb_perm(7), v in arb_perm(7)) {
        let lhs = perm::triangle(&v, &u);
        let rhs = perm::box_product(&u.reverse(), &v.reverse()).reverse();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn products_are_associative(u in arb_perm(5), v in arb_perm(5), w in arb_perm(5)) {
        prop_assert_eq!(
            perm::box_product(&perm::box_product(&u, &v), &w),
            perm::box_product(&u, &perm::box_product(&v, &w))
        );
        prop_assert_eq!(
            perm::triangle(&perm::triangle(&u, &v), &w),
            perm::triangle(&u, &perm::triangle(&v, &w))
        );
    }

    #[test]
    fn insertion_is_a_triangle_morphism(u in arb_perm(6), v in arb_perm(6)) {
        let pu = tableau::insertion_tableau(&u);
        let pv = tableau::insertion_tableau(&v);
        prop_assert_eq!(
            tableau::insertion_tableau(&perm::triangle(&v, &u)),
            tableau::triangle_tab(&pv, &pu)
        );
        prop_assert_eq!(
            tableau::insertion_tableau(&perm::box_product(&u, &v)),
            tableau::box_tab(&pu, &pv)
        );
    }

    #[test]
    fn interval_restriction_commutes_with_insertion(s in arb_perm(10), a in 0u32..12, b in 0u32..12) {
        let (lo, hi) = (a.min(b) + 1, a.max(b));
        let direct = s.as_word().restrict_range(lo, hi).standardize().unwrap();
        prop_assert_eq!(
            tableau::insertion_tableau(&direct),
            tableau::insertion_tableau(&s).restrict_range(lo, hi)
        );
    }

    #[test]
    fn triangle_factorizations_multiply_back(s in arb_perm(10)) {
        let f = s.triangle_factorize();
        prop_assert_eq!(perm::triangle_all(&f), s.clone());
        prop_assert_eq!(f.len(), s.global_descents().len() + usize::from(!s.is_empty()));
        let t = tableau::insertion_tableau(&s);
        let g = t.triangle_factorize();
        prop_assert_eq!(tableau::triangle_tab_all(&g), t);
        for x in &g {
            prop_assert!(x.is_triangle_indecomposable().unwrap());
        }
    }

    #[test]
    fn covers_add_one_inversion(s in arb_perm(8)) {
        for c in s.weak_covers() {
            prop_assert_eq!(c.length(), s.length() + 1);
            prop_assert!(s.leq_weak(&c).unwrap());
        }
    }

    #[test]
    fn text_round_trips(s in arb_perm(12), t in arb_tab(12)) {
        prop_assert_eq!(s.to_string().parse::<Permutation>().unwrap(), s.clone());
        prop_assert_eq!(t.to_string().parse::<StandardTableau>().unwrap(), t.clone());
        let d = hopf::delta_perm(&s);
        prop_assert_eq!(d.to_string().parse::<TensorComb<Permutation>>().unwrap(), d.clone());
        prop_assert_eq!(d.to_ascii().parse::<TensorComb<Permutation>>().unwrap(), d);
        let dt = hopf::delta_tab(&t);
        prop_assert_eq!(dt.to_string().parse::<TensorComb<StandardTableau>>().unwrap(), dt);
    }

    #[test]
    fn json_round_trips(s in arb_perm(12), t in arb_tab(12)) {
        let js = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<Permutation>(&js).unwrap(), s.clone());
        let jt = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<StandardTableau>(&jt).unwrap(), t);
        let d = hopf::delta_perm(&s);
        let jd = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<TensorComb<Permutation>>(&jd).unwrap(), d);
    }

    #[test]
    fn combination_round_trip(u in arb_perm(3), v in arb_perm(3), k in -5i64..5) {
        let x = hopf::star_perm(&u, &v).scale(&k.into());
        let back = x.to_string().parse::<LinComb<Permutation>>().unwrap();
        prop_assert_eq!(&back, &x);
        let j = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<LinComb<Permutation>>(&j).unwrap(), x);
    }

    #[test]
    fn coproduct_has_one_term_per_cut(s in arb_perm(10)) {
        let d = hopf::delta_perm(&s);
        prop_assert_eq!(d.len(), s.size() + 1);
        prop_assert_eq!(d.coeff(&s, &Permutation::empty()), 1.into());
        prop_assert_eq!(d.coeff(&Permutation::empty(), &s), 1.into());
    }
}
