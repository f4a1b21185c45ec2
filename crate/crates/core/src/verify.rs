//! Named exhaustive checks of the algebraic identities at small rank.
//!
//! Each suite enumerates its cases up front, checks them (in parallel where
//! the case count warrants it) and reports the first failing case in
//! enumeration order, so reports are deterministic.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hopf::{self, Basis, HopfBasis, OrderedBasis, PosetFamily};
use crate::linear::{Coeff, LinComb, MonomialCoords, TensorComb};
use crate::perm::{self, Letter, Permutation, Word};
use crate::poset::FinitePoset;
use crate::tableau::{self, StandardTableau};

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub nmax: usize,
    pub checks: usize,
    /// First counterexample, if any.
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(
                f,
                "PASS {} (nmax {}, {} checks)",
                self.name, self.nmax, self.checks
            ),
            Some(c) => write!(
                f,
                "FAIL {} (nmax {}, {} checks): {c}",
                self.name, self.nmax, self.checks
            ),
        }
    }
}

pub const SUITES: &[&str] = &[
    "orders",
    "lemma1",
    "lemma2",
    "lemma3",
    "conjugation",
    "monoid",
    "factorization",
    "rsk",
    "knuth",
    "homomorphism",
    "lemma4",
    "representatives",
    "lemma5",
    "lemma6",
    "lemma7",
    "mobius",
    "thm1",
    "thm3",
    "loday-ronco",
    "taskin",
    "duality",
    "counit",
    "coassoc",
    "bialgebra",
    "quotient",
    "primitives",
];

pub fn run_suite(name: &str, nmax: usize) -> Result<SuiteReport> {
    let (checks, failure) = match name {
        "orders" => orders(nmax),
        "lemma1" => restriction_monotone_perm(nmax),
        "lemma2" => triangle_monotone_perm(nmax),
        "lemma3" => split_criterion_perm(nmax),
        "conjugation" => conjugation(nmax),
        "monoid" => monoid(nmax),
        "factorization" => factorization(nmax),
        "rsk" => rsk_bijection(nmax),
        "knuth" => knuth_closure(nmax),
        "homomorphism" => homomorphism(nmax),
        "lemma4" => plactic_triangle_compat(nmax),
        "representatives" => representatives(nmax),
        "lemma5" => triangle_monotone_tab(nmax)?,
        "lemma6" => restriction_monotone_tab(nmax)?,
        "lemma7" => split_criterion_tab(nmax)?,
        "mobius" => mobius(nmax)?,
        "thm1" => delta_monomial_perms(nmax)?,
        "thm3" => delta_monomial_tabs(nmax)?,
        "loday-ronco" => loday_ronco(nmax)?,
        "taskin" => taskin_interval(nmax)?,
        "duality" => duality(nmax)?,
        "counit" => counit(nmax),
        "coassoc" => coassociativity(nmax),
        "bialgebra" => bialgebra(nmax),
        "quotient" => quotient(nmax),
        "primitives" => primitives(nmax)?,
        _ => {
            return Err(Error::invalid(format!(
                "unknown suite {name:?}; known suites: all, {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(SuiteReport {
        name: name.to_string(),
        nmax,
        checks,
        failure,
    })
}

/// Runs every suite, or the single named one.
pub fn run(name: &str, nmax: usize) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        SUITES.iter().map(|s| run_suite(s, nmax)).collect()
    } else {
        Ok(vec![run_suite(name, nmax)?])
    }
}

type Outcome = (usize, Option<String>);

/// Checks every case; the failure reported is the first in case order.
fn check_cases<T: Sync>(cases: &[T], f: impl Fn(&T) -> Option<String> + Sync + Send) -> Outcome {
    (cases.len(), cases.par_iter().find_map_first(f))
}

fn combine(parts: impl IntoIterator<Item = Outcome>) -> Outcome {
    let mut total = 0;
    for (n, fail) in parts {
        total += n;
        if fail.is_some() {
            return (total, fail);
        }
    }
    (total, None)
}

fn fail_if(bad: bool, msg: impl FnOnce() -> String) -> Option<String> {
    bad.then(msg)
}

fn perms_up_to(n: usize) -> Vec<Permutation> {
    (0..=n).flat_map(Permutation::all).collect()
}

fn tabs_up_to(n: usize) -> Vec<StandardTableau> {
    (0..=n).flat_map(tableau::enumerate_tableaux).collect()
}

/// Pairs `(x, y)` with `rank x + rank y ≤ n`.
fn pairs_up_to<B: Basis>(n: usize) -> Vec<(B, B)> {
    let mut out = Vec::new();
    for p in 0..=n {
        for q in 0..=n - p {
            for a in B::of_rank(p) {
                for b in B::of_rank(q) {
                    out.push((a.clone(), b));
                }
            }
        }
    }
    out
}

/// Nonempty intervals `lo..=hi` within `1..=n`, plus the empty one.
fn intervals(n: usize) -> Vec<(Letter, Letter)> {
    let n = n as Letter;
    let mut out = vec![(1, 0)];
    for lo in 1..=n {
        for hi in lo..=n {
            out.push((lo, hi));
        }
    }
    out
}

fn leq(u: &Permutation, v: &Permutation) -> bool {
    u.leq_weak(v).unwrap()
}

fn st_restrict(s: &Permutation, lo: Letter, hi: Letter) -> Permutation {
    s.as_word().restrict_range(lo, hi).standardize().unwrap()
}

// ---- permutations ----

/// Order axioms of the weak order, and agreement of the closure of
/// `weak_covers` with inversion-set containment.
fn orders(nmax: usize) -> Outcome {
    combine((0..=nmax).map(|n| {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let axioms = check_cases(&perms, |u| {
            if !leq(u, u) {
                return Some(format!("{u} ≰ {u}"));
            }
            for v in &perms {
                if u != v && leq(u, v) && leq(v, u) {
                    return Some(format!("{u} ≤ {v} ≤ {u}"));
                }
                if leq(u, v) {
                    for w in &perms {
                        if leq(v, w) && !leq(u, w) {
                            return Some(format!("{u} ≤ {v} ≤ {w} but {u} ≰ {w}"));
                        }
                    }
                }
            }
            None
        });
        let closure = check_cases(&perms, |u| {
            let mut seen: BTreeSet<Permutation> = BTreeSet::new();
            let mut queue = VecDeque::from([u.clone()]);
            while let Some(x) = queue.pop_front() {
                if seen.insert(x.clone()) {
                    queue.extend(x.weak_covers());
                }
            }
            let by_inv: BTreeSet<Permutation> =
                perms.iter().filter(|v| leq(u, v)).cloned().collect();
            fail_if(seen != by_inv, || {
                format!("closure of covers above {u} differs from inversion containment")
            })
        });
        combine([axioms, closure])
    }))
}

fn restriction_monotone_perm(nmax: usize) -> Outcome {
    combine((0..=nmax).map(|n| {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let ivs = intervals(n);
        check_cases(&perms, |s| {
            for t in perms.iter().filter(|t| leq(s, t)) {
                for &(lo, hi) in &ivs {
                    let (a, b) = (st_restrict(s, lo, hi), st_restrict(t, lo, hi));
                    if !leq(&a, &b) {
                        return Some(format!("s={s} ≤ t={t}, I={lo}..{hi}: {a} ≰ {b}"));
                    }
                }
            }
            None
        })
    }))
}

fn triangle_monotone_perm(nmax: usize) -> Outcome {
    let pairs = pairs_up_to::<Permutation>(nmax);
    check_cases(&pairs, |(u, v)| {
        for u2 in Permutation::all(u.size()).filter(|x| leq(u, x)) {
            for v2 in Permutation::all(v.size()).filter(|x| leq(v, x)) {
                let lhs = perm::triangle(v, u);
                let rhs = perm::triangle(&v2, &u2);
                if !leq(&lhs, &rhs) {
                    return Some(format!("u={u}≤{u2}, v={v}≤{v2} but {lhs} ≰ {rhs}"));
                }
            }
        }
        None
    })
}

fn split_criterion_perm(nmax: usize) -> Outcome {
    let perms = perms_up_to(nmax);
    check_cases(&perms, |sigma| {
        let n = sigma.size();
        for p in 0..=n {
            let a = st_restrict(sigma, 1, p as Letter);
            let b = st_restrict(sigma, p as Letter + 1, n as Letter);
            for u in Permutation::all(p) {
                for v in Permutation::all(n - p) {
                    let lhs = leq(sigma, &perm::triangle(&v, &u));
                    let rhs = leq(&a, &u) && leq(&b, &v);
                    if lhs != rhs {
                        return Some(format!("σ={sigma}, u={u}, v={v}: {lhs} vs {rhs}"));
                    }
                }
            }
        }
        None
    })
}

fn conjugation(nmax: usize) -> Outcome {
    let pairs = pairs_up_to::<Permutation>(nmax);
    check_cases(&pairs, |(u, v)| {
        let lhs = perm::triangle(v, u);
        let rhs = perm::box_product(&u.reverse(), &v.reverse()).reverse();
        fail_if(lhs != rhs, || format!("u={u}, v={v}: {lhs} ≠ {rhs}"))
    })
}

fn monoid(nmax: usize) -> Outcome {
    let pairs = pairs_up_to::<Permutation>(nmax);
    let perm_laws = check_cases(&pairs, |(u, v)| {
        let e = Permutation::empty();
        if perm::box_product(&e, u) != *u || perm::box_product(u, &e) != *u {
            return Some(format!("ε is not a unit for □ at {u}"));
        }
        if perm::triangle(&e, u) != *u || perm::triangle(u, &e) != *u {
            return Some(format!("ε is not a unit for △ at {u}"));
        }
        for w in perms_up_to(nmax - u.size() - v.size()) {
            let b1 = perm::box_product(&perm::box_product(u, v), &w);
            let b2 = perm::box_product(u, &perm::box_product(v, &w));
            let t1 = perm::triangle(&perm::triangle(u, v), &w);
            let t2 = perm::triangle(u, &perm::triangle(v, &w));
            if b1 != b2 || t1 != t2 {
                return Some(format!("associativity fails at ({u}, {v}, {w})"));
            }
        }
        None
    });
    let tpairs = pairs_up_to::<StandardTableau>(nmax);
    let tab_laws = check_cases(&tpairs, |(a, b)| {
        let e = StandardTableau::empty();
        if tableau::box_tab(&e, a) != *a || tableau::box_tab(a, &e) != *a {
            return Some(format!("empty tableau is not a unit for □ at {a}"));
        }
        if tableau::triangle_tab(&e, a) != *a || tableau::triangle_tab(a, &e) != *a {
            return Some(format!("empty tableau is not a unit for △ at {a}"));
        }
        for c in tabs_up_to(nmax - a.size() - b.size()) {
            let b1 = tableau::box_tab(&tableau::box_tab(a, b), &c);
            let b2 = tableau::box_tab(a, &tableau::box_tab(b, &c));
            let t1 = tableau::triangle_tab(&tableau::triangle_tab(a, b), &c);
            let t2 = tableau::triangle_tab(a, &tableau::triangle_tab(b, &c));
            if b1 != b2 || t1 != t2 {
                return Some(format!("associativity fails at ({a}, {b}, {c})"));
            }
        }
        None
    });
    combine([perm_laws, tab_laws])
}

/// Unique `△`-factorization of permutations and tableaux.
fn factorization(nmax: usize) -> Outcome {
    let perms = perms_up_to(nmax);
    let p = check_cases(&perms, |s| {
        let f = s.triangle_factorize();
        if perm::triangle_all(&f) != *s {
            return Some(format!("factors of {s} do not multiply back"));
        }
        fail_if(
            f.iter().any(|x| !x.is_triangle_indecomposable().unwrap()),
            || format!("{s} has a decomposable factor"),
        )
    });
    let tabs = tabs_up_to(nmax);
    let t = check_cases(&tabs, |s| {
        let f = s.triangle_factorize();
        if tableau::triangle_tab_all(&f) != *s {
            return Some(format!("factors of {s} do not multiply back"));
        }
        fail_if(
            f.iter().any(|x| !x.is_triangle_indecomposable().unwrap()),
            || format!("{s} has a decomposable factor"),
        )
    });
    combine([p, t])
}

// ---- tableaux ----

fn rsk_bijection(nmax: usize) -> Outcome {
    combine((0..=nmax).map(|n| {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let round = check_cases(&perms, |s| {
            let (p, q) = tableau::rsk(s);
            let back = tableau::inverse_rsk(&p, &q).unwrap();
            fail_if(back != *s, || format!("inverse_rsk(rsk({s})) = {back}"))
        });
        let images: HashSet<(StandardTableau, StandardTableau)> =
            perms.iter().map(tableau::rsk).collect();
        let tabs = tableau::enumerate_tableaux(n);
        let same_shape_pairs: usize = tabs
            .iter()
            .map(|p| tabs.iter().filter(|q| q.shape() == p.shape()).count())
            .sum();
        let class_total: usize = tabs.iter().map(|t| t.plactic_class().len()).sum();
        let image = (
            3,
            if images.len() != perms.len() {
                Some(format!("rsk is not injective on S_{n}"))
            } else if same_shape_pairs != perms.len() {
                Some(format!(
                    "{same_shape_pairs} same-shape pairs in rank {n}, expected n!"
                ))
            } else if class_total != perms.len() {
                Some(format!(
                    "plactic classes of rank {n} have {class_total} elements"
                ))
            } else {
                None
            },
        );
        combine([round, image])
    }))
}

fn knuth_class(sigma: &Permutation) -> BTreeSet<Word> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([sigma.as_word().clone()]);
    while let Some(w) = queue.pop_front() {
        if seen.insert(w.clone()) {
            queue.extend(tableau::knuth_neighbors(&w));
        }
    }
    seen
}

fn knuth_closure(nmax: usize) -> Outcome {
    let perms = perms_up_to(nmax);
    check_cases(&perms, |s| {
        let closure = knuth_class(s);
        let fiber: BTreeSet<Word> = tableau::insertion_tableau(s)
            .plactic_class()
            .into_iter()
            .map(Permutation::into_word)
            .collect();
        fail_if(closure != fiber, || {
            format!(
                "Knuth closure of {s} has {} words, fiber has {}",
                closure.len(),
                fiber.len()
            )
        })
    })
}

fn homomorphism(nmax: usize) -> Outcome {
    let pairs = pairs_up_to::<Permutation>(nmax);
    check_cases(&pairs, |(u, v)| {
        let lhs = tableau::insertion_tableau(&perm::triangle(v, u));
        let rhs = tableau::triangle_tab(
            &tableau::insertion_tableau(v),
            &tableau::insertion_tableau(u),
        );
        fail_if(lhs != rhs, || {
            format!("P({v}△{u}) = {lhs} but P({v})△P({u}) = {rhs}")
        })
    })
}

fn plactic_triangle_compat(nmax: usize) -> Outcome {
    let pairs = pairs_up_to::<Permutation>(nmax);
    check_cases(&pairs, |(u, v)| {
        let target_left = tableau::insertion_tableau(&perm::triangle(v, u));
        let target_right = tableau::insertion_tableau(&perm::triangle(u, v));
        for u2 in tableau::insertion_tableau(u).plactic_class() {
            let l = tableau::insertion_tableau(&perm::triangle(v, &u2));
            let r = tableau::insertion_tableau(&perm::triangle(&u2, v));
            if l != target_left || r != target_right {
                return Some(format!(
                    "{u} ~ {u2} but products with {v} are not equivalent"
                ));
            }
        }
        None
    })
}

fn representatives(nmax: usize) -> Outcome {
    let pairs = pairs_up_to::<StandardTableau>(nmax);
    let products = check_cases(&pairs, |(a, b)| {
        let tri = tableau::triangle_tab(b, a);
        let bx = tableau::box_tab(a, b);
        for x in a.plactic_class() {
            for y in b.plactic_class() {
                let t = tableau::insertion_tableau(&perm::triangle(&y, &x));
                let s = tableau::insertion_tableau(&perm::box_product(&x, &y));
                if t != tri || s != bx {
                    return Some(format!(
                        "representatives {x} of {a}, {y} of {b} change a product"
                    ));
                }
            }
        }
        None
    });
    let tabs = tabs_up_to(nmax);
    let restrictions = check_cases(&tabs, |t| {
        for (lo, hi) in intervals(t.size()) {
            let r = t.restrict_range(lo, hi);
            for u in t.plactic_class() {
                let via = tableau::insertion_tableau(&st_restrict(&u, lo, hi));
                if via != r {
                    return Some(format!("st({t}|{lo}..{hi}) depends on representative {u}"));
                }
            }
        }
        None
    });
    combine([products, restrictions])
}

fn tab_leq(
    family: &PosetFamily<StandardTableau>,
    a: &StandardTableau,
    b: &StandardTableau,
) -> bool {
    family.poset(a.size()).unwrap().leq(a, b).unwrap()
}

fn triangle_monotone_tab(nmax: usize) -> Result<Outcome> {
    let family = PosetFamily::<StandardTableau>::new(nmax);
    for n in 0..=nmax {
        family.poset(n)?;
    }
    let pairs = pairs_up_to::<StandardTableau>(nmax);
    Ok(check_cases(&pairs, |(u, v)| {
        let pu = family.poset(u.size()).unwrap();
        let pv = family.poset(v.size()).unwrap();
        let lhs = tableau::triangle_tab(v, u);
        for u2 in pu.upset(u).unwrap() {
            for v2 in pv.upset(v).unwrap() {
                let rhs = tableau::triangle_tab(&v2, &u2);
                if !tab_leq(&family, &lhs, &rhs) {
                    return Some(format!("U={u}≤{u2}, V={v}≤{v2} but {lhs} ≰ {rhs}"));
                }
            }
        }
        None
    }))
}

fn restriction_monotone_tab(nmax: usize) -> Result<Outcome> {
    let family = PosetFamily::<StandardTableau>::new(nmax);
    let mut parts = Vec::new();
    for n in 0..=nmax {
        let poset = family.poset(n)?;
        let tabs = tableau::enumerate_tableaux(n);
        parts.push(check_cases(&tabs, |a| {
            for b in poset.upset(a).unwrap() {
                for (lo, hi) in intervals(n) {
                    let (ra, rb) = (a.restrict_range(lo, hi), b.restrict_range(lo, hi));
                    if !tab_leq(&family, &ra, &rb) {
                        return Some(format!("{a} ≤ {b}, I={lo}..{hi}: {ra} ≰ {rb}"));
                    }
                }
            }
            None
        }));
    }
    Ok(combine(parts))
}

fn split_criterion_tab(nmax: usize) -> Result<Outcome> {
    let family = PosetFamily::<StandardTableau>::new(nmax);
    for n in 0..=nmax {
        family.poset(n)?;
    }
    let tabs = tabs_up_to(nmax);
    Ok(check_cases(&tabs, |sigma| {
        let n = sigma.size();
        for p in 0..=n {
            let (a, b) = StandardTableau::split(sigma, p);
            for u in tableau::enumerate_tableaux(p) {
                for v in tableau::enumerate_tableaux(n - p) {
                    let lhs = tab_leq(&family, sigma, &tableau::triangle_tab(&v, &u));
                    let rhs = tab_leq(&family, &a, &u) && tab_leq(&family, &b, &v);
                    if lhs != rhs {
                        return Some(format!("Σ={sigma}, U={u}, V={v}: {lhs} vs {rhs}"));
                    }
                }
            }
        }
        None
    }))
}

// ---- posets ----

fn mobius_checks<K>(poset: &FinitePoset<K>) -> Outcome
where
    K: Basis,
{
    let idx: Vec<usize> = (0..poset.len()).collect();
    let identity = check_cases(&idx, |&x| {
        let row = poset.mobius_row(x);
        for y in poset.upset_idx(x) {
            let s: BigInt = poset
                .upset_idx(x)
                .into_iter()
                .filter(|&z| poset.leq_idx(z, y))
                .map(|z| row[z].clone())
                .sum();
            let expected = if x == y {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            if s != expected {
                let el = poset.elements();
                return Some(format!(
                    "Σ μ({}, z) over [{}, {}] = {s}",
                    el[x], el[x], el[y]
                ));
            }
        }
        None
    });
    // inversion round trip for a fixed pseudo-random f
    let f: Vec<BigInt> = (0..poset.len())
        .map(|i| BigInt::from(((i * 7919 + 13) % 11) as i64 - 5))
        .collect();
    let g: Vec<BigInt> = (0..poset.len())
        .map(|x| poset.upset_idx(x).into_iter().map(|w| f[w].clone()).sum())
        .collect();
    let round = check_cases(&idx, |&x| {
        let row = poset.mobius_row(x);
        let back: BigInt = poset
            .upset_idx(x)
            .into_iter()
            .map(|w| &row[w] * &g[w])
            .sum();
        fail_if(back != f[x], || {
            format!(
                "Möbius inversion at {} gives {back}, expected {}",
                poset.elements()[x],
                f[x]
            )
        })
    });
    combine([identity, round])
}

fn mobius(nmax: usize) -> Result<Outcome> {
    let weak = PosetFamily::<Permutation>::new(nmax);
    let taskin = PosetFamily::<StandardTableau>::new(nmax);
    let mut parts = Vec::new();
    for n in 0..=nmax {
        parts.push(mobius_checks(weak.poset(n)?));
        parts.push(mobius_checks(taskin.poset(n)?));
    }
    Ok(combine(parts))
}

// ---- Hopf algebra ----

/// `δ(M_x)` computed by expanding `M_x` in the fundamental basis, applying
/// `δ` termwise and converting both tensor legs back.
pub fn delta_monomial_by_expansion<B: OrderedBasis>(
    x: &B,
    family: &PosetFamily<B>,
) -> Result<TensorComb<B>> {
    let m = family.from_monomial(&MonomialCoords::unit(x.clone()))?;
    family.tensor_to_monomial(&hopf::delta(&m))
}

fn delta_monomial_perms(nmax: usize) -> Result<Outcome> {
    let family = PosetFamily::<Permutation>::new(nmax);
    for n in 0..=nmax {
        family.poset(n)?.precompute_mobius();
    }
    let perms = perms_up_to(nmax);
    Ok(check_cases(&perms, |s| {
        let oracle = delta_monomial_by_expansion(s, &family).unwrap();
        let formula = hopf::delta_monomial_perm(s);
        if formula != hopf::delta_monomial(s) {
            return Some(format!("factorization and split scan disagree at {s}"));
        }
        fail_if(oracle != formula, || {
            format!("δ(M_{s}): expansion gives {oracle}, factorization gives {formula}")
        })
    }))
}

fn delta_monomial_tabs(nmax: usize) -> Result<Outcome> {
    let family = PosetFamily::<StandardTableau>::new(nmax);
    for n in 0..=nmax {
        family.poset(n)?.precompute_mobius();
    }
    let tabs = tabs_up_to(nmax);
    Ok(check_cases(&tabs, |s| {
        let oracle = delta_monomial_by_expansion(s, &family).unwrap();
        let formula = hopf::delta_monomial_tab(s);
        fail_if(oracle != formula, || {
            format!("δ(M_{s}): expansion gives {oracle}, split scan gives {formula}")
        })
    }))
}

fn loday_ronco(nmax: usize) -> Result<Outcome> {
    let family = PosetFamily::<Permutation>::new(nmax);
    for n in 0..=nmax {
        family.poset(n)?;
    }
    let pairs = pairs_up_to::<Permutation>(nmax);
    Ok(check_cases(&pairs, |(a, b)| {
        let shuffle = hopf::shifted_shuffle_perm(a, b);
        let interval = hopf::weak_interval_sum(a, b, &family).unwrap();
        fail_if(shuffle != interval, || {
            format!("{a} ⧢̄ {b} = {shuffle} but the interval sum is {interval}")
        })
    }))
}

fn taskin_interval(nmax: usize) -> Result<Outcome> {
    let family = PosetFamily::<StandardTableau>::new(nmax);
    for n in 0..=nmax {
        family.poset(n)?;
    }
    let pairs = pairs_up_to::<StandardTableau>(nmax);
    Ok(check_cases(&pairs, |(a, b)| {
        let shuffle = hopf::shifted_shuffle_tab(a, b, &family).unwrap();
        for sigma in tableau::enumerate_tableaux(a.size() + b.size()) {
            let lhs = shuffle.coeff(&sigma);
            let rhs = hopf::delta_tab(&sigma).coeff(a, b);
            if lhs != rhs {
                return Some(format!(
                    "⟨{a}⧢̄{b}, {sigma}⟩ = {lhs} but ⟨{a}⊗{b}, δ({sigma})⟩ = {rhs}"
                ));
            }
        }
        None
    }))
}

/// Pairing form of the multiplicativity of the dual monomial basis: the
/// coefficient of `M_U ⊗ M_V` in `δ(M_Σ)` is `[Σ = V △ U]`.
fn duality(nmax: usize) -> Result<Outcome> {
    let family = PosetFamily::<StandardTableau>::new(nmax);
    for n in 0..=nmax {
        family.poset(n)?.precompute_mobius();
    }
    let tabs = tabs_up_to(nmax);
    Ok(check_cases(&tabs, |sigma| {
        let d = delta_monomial_by_expansion(sigma, &family).unwrap();
        let n = sigma.size();
        for p in 0..=n {
            for u in tableau::enumerate_tableaux(p) {
                for v in tableau::enumerate_tableaux(n - p) {
                    let expected = if tableau::triangle_tab(&v, &u) == *sigma {
                        Coeff::one()
                    } else {
                        Coeff::zero()
                    };
                    if d.coeff(&u, &v) != expected {
                        return Some(format!(
                            "coefficient of M_{u}⊗M_{v} in δ(M_{sigma}) is {}",
                            d.coeff(&u, &v)
                        ));
                    }
                }
            }
        }
        None
    }))
}

fn counit_for<B: HopfBasis>(nmax: usize) -> Outcome {
    let basis: Vec<B> = (0..=nmax).flat_map(B::of_rank).collect();
    check_cases(&basis, |x| {
        let d = B::coproduct(x);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for (a, b, c) in d.iter() {
            if b.rank() == 0 {
                left.add_term(a.clone(), c.clone());
            }
            if a.rank() == 0 {
                right.add_term(b.clone(), c.clone());
            }
        }
        let id = LinComb::basis(x.clone());
        fail_if(left != id || right != id, || {
            format!("counit law fails at {x}")
        })
    })
}

fn counit(nmax: usize) -> Outcome {
    combine([
        counit_for::<Permutation>(nmax),
        counit_for::<StandardTableau>(nmax),
    ])
}

type Triple<B> = BTreeMap<(B, B, B), Coeff>;

fn coassoc_for<B: HopfBasis>(nmax: usize) -> Outcome {
    let basis: Vec<B> = (0..=nmax).flat_map(B::of_rank).collect();
    check_cases(&basis, |x| {
        let mut left: Triple<B> = BTreeMap::new();
        let mut right: Triple<B> = BTreeMap::new();
        for (a, b, c) in B::coproduct(x).iter() {
            for (a1, a2, d) in B::coproduct(a).iter() {
                *left.entry((a1.clone(), a2.clone(), b.clone())).or_default() += c * d;
            }
            for (b1, b2, d) in B::coproduct(b).iter() {
                *right
                    .entry((a.clone(), b1.clone(), b2.clone()))
                    .or_default() += c * d;
            }
        }
        left.retain(|_, v| !v.is_zero());
        right.retain(|_, v| !v.is_zero());
        fail_if(left != right, || format!("coassociativity fails at {x}"))
    })
}

fn coassociativity(nmax: usize) -> Outcome {
    combine([
        coassoc_for::<Permutation>(nmax),
        coassoc_for::<StandardTableau>(nmax),
    ])
}

fn bialgebra_for<B: HopfBasis>(nmax: usize) -> Outcome {
    let pairs = pairs_up_to::<B>(nmax);
    check_cases(&pairs, |(a, b)| {
        let lhs = hopf::delta(&B::product(a, b));
        let rhs = hopf::tensor_star(&B::coproduct(a), &B::coproduct(b));
        fail_if(lhs != rhs, || format!("δ({a}*{b}) ≠ δ({a})δ({b})"))
    })
}

fn bialgebra(nmax: usize) -> Outcome {
    combine([
        bialgebra_for::<Permutation>(nmax),
        bialgebra_for::<StandardTableau>(nmax),
    ])
}

fn quotient(nmax: usize) -> Outcome {
    let pairs = pairs_up_to::<Permutation>(nmax);
    let products = check_cases(&pairs, |(a, b)| {
        let lhs = hopf::plactic_projection(&hopf::star_perm(a, b));
        let rhs = hopf::star_tab(
            &tableau::insertion_tableau(a),
            &tableau::insertion_tableau(b),
        );
        fail_if(lhs != rhs, || format!("P̂({a}*{b}) ≠ P({a})*P({b})"))
    });
    let perms = perms_up_to(nmax);
    let coproducts = check_cases(&perms, |s| {
        let lhs = hopf::plactic_projection_tensor(&hopf::delta_perm(s));
        let pt = tableau::insertion_tableau(s);
        let rhs = hopf::delta_tab(&pt);
        if rhs != hopf::delta_tab_via_perm(&pt) {
            return Some(format!("the two coproducts of {pt} disagree"));
        }
        fail_if(lhs != rhs, || format!("(P̂⊗P̂)δ({s}) ≠ δ(P({s}))"))
    });
    combine([products, coproducts])
}

fn primitives(nmax: usize) -> Result<Outcome> {
    let family = PosetFamily::<StandardTableau>::new(nmax);
    let mut parts = Vec::new();
    for n in 1..=nmax {
        let indec = tableau::count_indecomposable(n);
        let dim = hopf::primitive_dimension::<StandardTableau>(n);
        parts.push((
            1,
            fail_if(dim != indec, || {
                format!("rank {n}: primitive dimension {dim}, indecomposables {indec}")
            }),
        ));
        let perm_dim = hopf::primitive_dimension::<Permutation>(n);
        let perm_indec = Permutation::all(n)
            .filter(|s| s.global_descents().is_empty())
            .count();
        parts.push((
            1,
            fail_if(perm_dim != perm_indec, || {
                format!("rank {n}: ZS primitive dimension {perm_dim}, indecomposables {perm_indec}")
            }),
        ));
        let poset = family.poset(n)?;
        poset.precompute_mobius();
        let tabs = tableau::enumerate_tableaux(n);
        parts.push(check_cases(&tabs, |s| {
            let m = family.monomial_element(s).unwrap();
            let prim = hopf::is_primitive(&m).unwrap();
            let indec = s.is_triangle_indecomposable().unwrap();
            fail_if(prim != indec, || {
                format!("M_{s}: primitive = {prim}, indecomposable = {indec}")
            })
        }));
    }
    Ok(combine(parts))
}
