//! The Hopf algebras `ZS` of permutations and `ZT` of standard tableaux.
//!
//! `ZS` carries the destandardized concatenation product `*` and the
//! standardized unshuffling coproduct `δ`. `ZT` is its quotient by plactic
//! equivalence; every operation on tableaux is computed through reading words
//! and the insertion tableau map `P`.
//!
//! The monomial bases are defined by `x = Σ_{x ≤ w} M_w` in the weak order
//! (permutations) or in the order on tableaux induced by `P`; the change of
//! basis goes through the Möbius function of the relevant [`FinitePoset`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::OnceLock;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg;
use crate::linear::{Coeff, LinComb, MonomialCoords, TensorComb};
use crate::perm::{self, Letter, Permutation};
use crate::poset::{self, FinitePoset};
use crate::tableau::{self, StandardTableau};

/// A graded basis index.
pub trait Basis:
    Clone + Ord + Hash + Display + FromStr<Err = Error> + Send + Sync + 'static
{
    fn rank(&self) -> usize;

    /// The rank-0 element, unit of the algebra.
    fn unit() -> Self;

    /// All basis elements of rank `n`, sorted.
    fn of_rank(n: usize) -> Vec<Self>;
}

/// A basis of a graded connected bialgebra, products and coproducts given on
/// basis elements.
pub trait HopfBasis: Basis {
    fn product(a: &Self, b: &Self) -> LinComb<Self>;
    fn coproduct(x: &Self) -> TensorComb<Self>;
}

/// A basis ordered within each rank, with the `△` product, giving rise to a
/// monomial basis.
pub trait OrderedBasis: HopfBasis {
    fn build_poset(n: usize) -> Result<FinitePoset<Self>>;

    /// `v △ u`.
    fn triangle(v: &Self, u: &Self) -> Self;

    /// The pair `(x|{1..p}, st(x|{p+1..n}))`, both standardized.
    fn split(x: &Self, p: usize) -> (Self, Self);
}

impl Basis for Permutation {
    fn rank(&self) -> usize {
        self.size()
    }

    fn unit() -> Self {
        Permutation::empty()
    }

    fn of_rank(n: usize) -> Vec<Self> {
        Permutation::all(n).collect()
    }
}

impl HopfBasis for Permutation {
    fn product(a: &Self, b: &Self) -> LinComb<Self> {
        star_perm(a, b)
    }

    fn coproduct(x: &Self) -> TensorComb<Self> {
        delta_perm(x)
    }
}

impl OrderedBasis for Permutation {
    fn build_poset(n: usize) -> Result<FinitePoset<Self>> {
        Ok(poset::weak_order_poset(n))
    }

    fn triangle(v: &Self, u: &Self) -> Self {
        perm::triangle(v, u)
    }

    fn split(x: &Self, p: usize) -> (Self, Self) {
        let w = x.as_word();
        let n = x.size() as Letter;
        let p = p as Letter;
        (
            w.restrict_range(1, p).standardize().unwrap(),
            w.restrict_range(p + 1, n).standardize().unwrap(),
        )
    }
}

impl Basis for StandardTableau {
    fn rank(&self) -> usize {
        self.size()
    }

    fn unit() -> Self {
        StandardTableau::empty()
    }

    fn of_rank(n: usize) -> Vec<Self> {
        tableau::enumerate_tableaux(n)
    }
}

impl HopfBasis for StandardTableau {
    fn product(a: &Self, b: &Self) -> LinComb<Self> {
        star_tab(a, b)
    }

    fn coproduct(x: &Self) -> TensorComb<Self> {
        delta_tab(x)
    }
}

impl OrderedBasis for StandardTableau {
    fn build_poset(n: usize) -> Result<FinitePoset<Self>> {
        poset::taskin_poset(n)
    }

    fn triangle(v: &Self, u: &Self) -> Self {
        tableau::triangle_tab(v, u)
    }

    fn split(x: &Self, p: usize) -> (Self, Self) {
        let n = x.size() as Letter;
        let p = p as Letter;
        (x.restrict_range(1, p), x.restrict_range(p + 1, n))
    }
}

// ---- ZS ----

/// `α * β`: every `uv` with `st(u) = α`, `st(v) = β`.
pub fn star_perm(alpha: &Permutation, beta: &Permutation) -> LinComb<Permutation> {
    let (p, q) = (alpha.size(), beta.size());
    let n = (p + q) as Letter;
    let mut out = LinComb::zero();
    for left in (1..=n).combinations(p) {
        let right: Vec<Letter> = (1..=n).filter(|x| !left.contains(x)).collect();
        let letters = alpha
            .letters()
            .iter()
            .map(|&a| left[a as usize - 1])
            .chain(beta.letters().iter().map(|&b| right[b as usize - 1]))
            .collect();
        out.add_term(Permutation::from_letters_unchecked(letters), Coeff::one());
    }
    out
}

/// `δ(σ) = Σ_i σ|{1..i} ⊗ st(σ|{i+1..n})`.
pub fn delta_perm(sigma: &Permutation) -> TensorComb<Permutation> {
    let mut out = TensorComb::zero();
    for i in 0..=sigma.size() {
        let (a, b) = Permutation::split(sigma, i);
        out.add_term(a, b, Coeff::one());
    }
    out
}

/// `a ⧢̄ b`: all interleavings of `a` with `b` shifted up by `|a|`.
pub fn shifted_shuffle_perm(a: &Permutation, b: &Permutation) -> LinComb<Permutation> {
    let (p, q) = (a.size(), b.size());
    let shifted = b.shift(p);
    let mut out = LinComb::zero();
    for slots in (0..p + q).combinations(p) {
        let mut ai = a.letters().iter();
        let mut bi = shifted.letters().iter();
        let mut slot = slots.iter().peekable();
        let letters = (0..p + q)
            .map(|pos| {
                if slot.peek() == Some(&&pos) {
                    slot.next();
                    *ai.next().unwrap()
                } else {
                    *bi.next().unwrap()
                }
            })
            .collect();
        out.add_term(Permutation::from_letters_unchecked(letters), Coeff::one());
    }
    out
}

// ---- ZT ----

/// The quotient map `ZS → ZT`, `σ ↦ P(σ)`.
pub fn plactic_projection(x: &LinComb<Permutation>) -> LinComb<StandardTableau> {
    x.map_linear(|s| LinComb::basis(tableau::insertion_tableau(s)))
}

pub fn plactic_projection_tensor(x: &TensorComb<Permutation>) -> TensorComb<StandardTableau> {
    let p = |s: &Permutation| LinComb::basis(tableau::insertion_tableau(s));
    x.map_legs(p, p)
}

/// `A * B` in `ZT`: `P` applied to `rw(A) * rw(B)`.
pub fn star_tab(a: &StandardTableau, b: &StandardTableau) -> LinComb<StandardTableau> {
    plactic_projection(&star_perm(&a.reading_word(), &b.reading_word()))
}

/// `δ(Σ) = Σ_p st(Σ|{1..p}) ⊗ st(Σ|{p+1..n})`.
pub fn delta_tab(sigma: &StandardTableau) -> TensorComb<StandardTableau> {
    let mut out = TensorComb::zero();
    for p in 0..=sigma.size() {
        let (a, b) = StandardTableau::split(sigma, p);
        out.add_term(a, b, Coeff::one());
    }
    out
}

/// `δ(Σ)` as `(P ⊗ P)(δ(rw(Σ)))`.
pub fn delta_tab_via_perm(sigma: &StandardTableau) -> TensorComb<StandardTableau> {
    plactic_projection_tensor(&delta_perm(&sigma.reading_word()))
}

// ---- bilinear extensions ----

pub fn star<B: HopfBasis>(x: &LinComb<B>, y: &LinComb<B>) -> LinComb<B> {
    let mut out = LinComb::zero();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_scaled(&B::product(a, b), &(c * d));
        }
    }
    out
}

pub fn delta<B: HopfBasis>(x: &LinComb<B>) -> TensorComb<B> {
    let mut out = TensorComb::zero();
    for (b, c) in x.iter() {
        out.add_scaled(&B::coproduct(b), c);
    }
    out
}

/// Componentwise product on `A ⊗ A`.
pub fn tensor_star<B: HopfBasis>(s: &TensorComb<B>, t: &TensorComb<B>) -> TensorComb<B> {
    let mut out = TensorComb::zero();
    for (a, b, c) in s.iter() {
        for (x, y, d) in t.iter() {
            let left = B::product(a, x);
            let right = B::product(b, y);
            out.add_scaled(&TensorComb::tensor(&left, &right), &(c * d));
        }
    }
    out
}

fn homogeneous_rank<B: Basis>(x: &LinComb<B>) -> Result<Option<usize>> {
    let ranks: BTreeSet<usize> = x.support().map(Basis::rank).collect();
    match ranks.len() {
        0 => Ok(None),
        1 => Ok(ranks.first().copied()),
        _ => Err(Error::invalid(format!(
            "expected a homogeneous element, got ranks {ranks:?}"
        ))),
    }
}

/// Whether `δ(x) = x ⊗ 1 + 1 ⊗ x`.
pub fn is_primitive<B: HopfBasis>(x: &LinComb<B>) -> Result<bool> {
    match homogeneous_rank(x)? {
        Some(0) => Err(Error::invalid("primitivity is tested in positive rank")),
        None => Ok(true),
        Some(_) => {
            let unit = LinComb::basis(B::unit());
            let mut expected = TensorComb::tensor(x, &unit);
            expected.add_scaled(&TensorComb::tensor(&unit, x), &Coeff::one());
            Ok(delta(x) == expected)
        }
    }
}

/// Dimension of the primitive elements of rank `n`, as the kernel of
/// `x ↦ δ(x) − x⊗1 − 1⊗x` on the rank-`n` component.
pub fn primitive_dimension<B: HopfBasis>(n: usize) -> usize {
    let basis = B::of_rank(n);
    let mut columns: BTreeMap<(B, B), usize> = BTreeMap::new();
    let mut sparse = Vec::with_capacity(basis.len());
    for b in &basis {
        let mut row = Vec::new();
        for (x, y, c) in B::coproduct(b).iter() {
            if x.rank() == 0 || y.rank() == 0 {
                continue;
            }
            let k = columns.len();
            let col = *columns.entry((x.clone(), y.clone())).or_insert(k);
            row.push((col, c.clone()));
        }
        sparse.push(row);
    }
    let dense = sparse
        .into_iter()
        .map(|row| {
            let mut r = vec![BigInt::default(); columns.len()];
            for (c, v) in row {
                r[c] += v;
            }
            r
        })
        .collect();
    basis.len() - linalg::rank(dense)
}

// ---- monomial bases ----

/// `x = Σ_σ x_σ σ` rewritten with `σ = Σ_{σ≤w} M_w`.
pub fn to_monomial<B: Basis>(x: &LinComb<B>, poset: &FinitePoset<B>) -> Result<MonomialCoords<B>> {
    homogeneous_rank(x)?;
    let mut out = LinComb::zero();
    for (b, c) in x.iter() {
        let i = poset.index_of(b)?;
        for w in poset.upset_idx(i) {
            out.add_term(poset.elements()[w].clone(), c.clone());
        }
    }
    Ok(MonomialCoords(out))
}

/// `Σ_b c_b M_b` expanded with `M_b = Σ_{b≤w} μ(b,w) w`.
pub fn from_monomial<B: Basis>(
    m: &MonomialCoords<B>,
    poset: &FinitePoset<B>,
) -> Result<LinComb<B>> {
    homogeneous_rank(&m.0)?;
    let mut out = LinComb::zero();
    for (b, c) in m.0.iter() {
        let i = poset.index_of(b)?;
        let row = poset.mobius_row(i);
        for w in poset.upset_idx(i) {
            out.add_term(poset.elements()[w].clone(), c * &row[w]);
        }
    }
    Ok(out)
}

/// Posets of every rank up to a bound, built on first use and shared.
pub struct PosetFamily<B> {
    posets: Vec<OnceLock<FinitePoset<B>>>,
}

impl<B: OrderedBasis> PosetFamily<B> {
    pub fn new(max_rank: usize) -> Self {
        PosetFamily {
            posets: (0..=max_rank).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn max_rank(&self) -> usize {
        self.posets.len() - 1
    }

    pub fn poset(&self, n: usize) -> Result<&FinitePoset<B>> {
        let slot = self.posets.get(n).ok_or_else(|| {
            Error::invalid(format!(
                "rank {n} exceeds the configured limit {}",
                self.max_rank()
            ))
        })?;
        if let Some(p) = slot.get() {
            return Ok(p);
        }
        let built = B::build_poset(n)?;
        Ok(slot.get_or_init(|| built))
    }

    fn rank_of(&self, x: &LinComb<B>) -> Result<usize> {
        Ok(homogeneous_rank(x)?.unwrap_or(0))
    }

    pub fn to_monomial(&self, x: &LinComb<B>) -> Result<MonomialCoords<B>> {
        to_monomial(x, self.poset(self.rank_of(x)?)?)
    }

    pub fn from_monomial(&self, m: &MonomialCoords<B>) -> Result<LinComb<B>> {
        from_monomial(m, self.poset(self.rank_of(&m.0)?)?)
    }

    /// `M_b` in the fundamental basis.
    pub fn monomial_element(&self, b: &B) -> Result<LinComb<B>> {
        self.from_monomial(&MonomialCoords::unit(b.clone()))
    }

    /// Converts both legs of a tensor to monomial coordinates.
    pub fn tensor_to_monomial(&self, t: &TensorComb<B>) -> Result<TensorComb<B>> {
        let mut out = TensorComb::zero();
        for (a, b, c) in t.iter() {
            let ma = self.to_monomial(&LinComb::basis(a.clone()))?;
            let mb = self.to_monomial(&LinComb::basis(b.clone()))?;
            out.add_scaled(&TensorComb::tensor(&ma.0, &mb.0), c);
        }
        Ok(out)
    }

    /// `M_a * M_b` in monomial coordinates.
    pub fn m_structure_constants(&self, a: &B, b: &B) -> Result<MonomialCoords<B>> {
        let x = self.monomial_element(a)?;
        let y = self.monomial_element(b)?;
        self.to_monomial(&star(&x, &y))
    }

    /// Sum of the interval `[lo, hi]` of the rank-`n` poset.
    pub fn interval_sum(&self, lo: &B, hi: &B) -> Result<LinComb<B>> {
        let poset = self.poset(lo.rank())?;
        Ok(poset
            .interval(lo, hi)?
            .into_iter()
            .map(|z| (z, Coeff::one()))
            .collect())
    }
}

/// `δ(M_x)` in `M ⊗ M` coordinates: `M_u ⊗ M_v` over the splits with
/// `x = v △ u`, found by scanning split points.
pub fn delta_monomial<B: OrderedBasis>(x: &B) -> TensorComb<B> {
    let mut out = TensorComb::zero();
    for p in 0..=x.rank() {
        let (u, v) = B::split(x, p);
        if p == 0 || p == x.rank() || B::triangle(&v, &u) == *x {
            out.add_term(u, v, Coeff::one());
        }
    }
    out
}

/// Theorem form for permutations: terms read off the `△`-factorization.
pub fn delta_monomial_perm(sigma: &Permutation) -> TensorComb<Permutation> {
    let factors = sigma.triangle_factorize();
    let mut out = TensorComb::zero();
    for j in 0..=factors.len() {
        let v = perm::triangle_all(&factors[..j]);
        let u = perm::triangle_all(&factors[j..]);
        out.add_term(u, v, Coeff::one());
    }
    out
}

/// Theorem form for tableaux: split-point scan.
pub fn delta_monomial_tab(sigma: &StandardTableau) -> TensorComb<StandardTableau> {
    delta_monomial(sigma)
}

/// `a ⧢̄ b` for tableaux as the interval `[A □ B, B △ A]` of the order on
/// `T_{|A|+|B|}`.
pub fn shifted_shuffle_tab(
    a: &StandardTableau,
    b: &StandardTableau,
    family: &PosetFamily<StandardTableau>,
) -> Result<LinComb<StandardTableau>> {
    family.interval_sum(&tableau::box_tab(a, b), &tableau::triangle_tab(b, a))
}

/// The interval `[a □ b, b △ a]` of the weak order.
pub fn weak_interval_sum(
    a: &Permutation,
    b: &Permutation,
    family: &PosetFamily<Permutation>,
) -> Result<LinComb<Permutation>> {
    family.interval_sum(&perm::box_product(a, b), &perm::triangle(b, a))
}

/// Indices of a basis of the primitives of `ZT` in rank `n`: the
/// `△`-indecomposable tableaux.
pub fn primitive_basis_tab(n: usize) -> Vec<StandardTableau> {
    tableau::indecomposable_tableaux(n)
}

pub fn m_structure_constants_tab(
    a: &StandardTableau,
    b: &StandardTableau,
    family: &PosetFamily<StandardTableau>,
) -> Result<MonomialCoords<StandardTableau>> {
    family.m_structure_constants(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn t(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    fn c(n: i64) -> Coeff {
        Coeff::from(n)
    }

    #[test]
    fn star_perm_examples() {
        let x = star_perm(&p("12"), &p("21"));
        let expected: LinComb<Permutation> = ["1243", "1342", "1432", "2341", "2431", "3421"]
            .iter()
            .map(|s| (p(s), c(1)))
            .collect();
        assert_eq!(x, expected);
        assert_eq!(
            star_perm(&Permutation::empty(), &p("21")),
            LinComb::basis(p("21"))
        );
        assert_eq!(star_perm(&p("231"), &p("12")).len(), 10);
    }

    #[test]
    fn delta_perm_examples() {
        let d = delta_perm(&p("3124"));
        assert_eq!(
            d.to_string(),
            "1*(e⊗3124) + 1*(1⊗213) + 1*(12⊗12) + 1*(312⊗1) + 1*(3124⊗e)"
        );
        assert_eq!(
            delta_perm(&Permutation::empty()),
            TensorComb::basis(Permutation::empty(), Permutation::empty())
        );
    }

    #[test]
    fn shuffle_examples() {
        let x = shifted_shuffle_perm(&p("1"), &p("1"));
        assert_eq!(x.to_string(), "1*12 + 1*21");
        assert_eq!(
            shifted_shuffle_perm(&p("21"), &Permutation::empty()),
            LinComb::basis(p("21"))
        );
        assert_eq!(shifted_shuffle_perm(&p("21"), &p("312")).len(), 10);
    }

    #[test]
    fn tableau_products() {
        let e = StandardTableau::empty();
        assert_eq!(star_tab(&e, &t("13/2")), LinComb::basis(t("13/2")));
        let x = star_tab(&t("12"), &t("1/2"));
        let mass: Coeff = x.iter().map(|(_, c)| c.clone()).sum();
        assert_eq!(mass, c(6));
        assert_eq!(delta_tab(&e), TensorComb::basis(e.clone(), e.clone()));
        let s = tableau::insertion_tableau(&p("3124"));
        assert_eq!(delta_tab(&s).len(), 5);
        assert_eq!(delta_tab(&s), delta_tab_via_perm(&s));
    }

    #[test]
    fn shuffle_tab_small() {
        let fam = PosetFamily::new(4);
        let one = t("1");
        let x = shifted_shuffle_tab(&one, &one, &fam).unwrap();
        assert_eq!(x.to_string(), "1*12 + 1*1/2");
        let e = StandardTableau::empty();
        assert_eq!(
            shifted_shuffle_tab(&e, &t("12/3"), &fam).unwrap(),
            LinComb::basis(t("12/3"))
        );
    }

    #[test]
    fn monomial_round_trip_and_examples() {
        let fam = PosetFamily::<Permutation>::new(4);
        let top = Permutation::longest(3);
        assert_eq!(
            fam.monomial_element(&top).unwrap(),
            LinComb::basis(top.clone())
        );
        let m = fam.to_monomial(&LinComb::basis(p("213"))).unwrap();
        let up: Vec<String> = m.0.support().map(|x| x.to_string()).collect();
        assert_eq!(up, vec!["213", "231", "321"]);
        assert!(m.0.iter().all(|(_, c)| *c == c_one()));
        let x: LinComb<Permutation> = [(p("132"), c(3)), (p("321"), c(-2))].into_iter().collect();
        let back = fam.from_monomial(&fam.to_monomial(&x).unwrap()).unwrap();
        assert_eq!(back, x);
        let mixed: LinComb<Permutation> = [(p("1"), c(1)), (p("12"), c(1))].into_iter().collect();
        assert!(fam.to_monomial(&mixed).is_err());
        assert!(fam.poset(5).is_err());
    }

    fn c_one() -> Coeff {
        Coeff::one()
    }

    #[test]
    fn delta_monomial_examples() {
        let d = delta_monomial_perm(&p("78465213"));
        assert_eq!(d.len(), 4);
        assert_eq!(d.coeff(&p("213"), &p("45132")), c(1));
        assert_eq!(d.coeff(&p("465213"), &p("12")), c(1));
        assert_eq!(delta_monomial(&p("78465213")), d);

        let ind = p("2413");
        assert_eq!(delta_monomial_perm(&ind).len(), 2);

        let u = t("13/2");
        let v = t("12");
        let s = tableau::triangle_tab(&v, &u);
        let d = delta_monomial_tab(&s);
        // 13/2 = 12 △ 1, so Σ has three factors
        assert_eq!(d.len(), 4);
        assert_eq!(d.coeff(&u, &v), c(1));
    }

    #[test]
    fn primitivity() {
        let fam = PosetFamily::<StandardTableau>::new(4);
        assert!(is_primitive(&LinComb::basis(t("1"))).unwrap());
        for s in StandardTableau::of_rank(4) {
            let m = fam.monomial_element(&s).unwrap();
            assert_eq!(
                is_primitive(&m).unwrap(),
                s.is_triangle_indecomposable().unwrap(),
                "{s}"
            );
        }
        let mixed: LinComb<StandardTableau> =
            [(t("1"), c(1)), (t("12"), c(1))].into_iter().collect();
        assert!(is_primitive(&mixed).is_err());
        assert_eq!(primitive_basis_tab(4).len(), 3);
        assert_eq!(primitive_dimension::<StandardTableau>(4), 3);
        assert_eq!(primitive_dimension::<Permutation>(3), 3);
    }

    #[test]
    fn m_unit_product() {
        let fam = PosetFamily::<StandardTableau>::new(4);
        let a = t("13/2");
        let m = fam
            .m_structure_constants(&StandardTableau::empty(), &a)
            .unwrap();
        assert_eq!(m, MonomialCoords::unit(a));
    }
}
