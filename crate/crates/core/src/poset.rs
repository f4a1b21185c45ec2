//! Finite posets given by a generating (cover) relation, with dense
//! reachability and a lazily memoized Möbius function.

use std::collections::HashMap;
use std::fmt::{self, Display};
use std::hash::Hash;
use std::io::{self, Write};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tableau::{self, StandardTableau};

/// Square boolean matrix, one bit row per element.
#[derive(Clone, Debug)]
struct BitMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix {
            words,
            bits: vec![0; words * n],
        }
    }

    fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    fn set(&mut self, r: usize, c: usize) {
        self.bits[r * self.words + c / 64] |= 1 << (c % 64);
    }

    /// row `dst` |= row `src`
    fn or_row(&mut self, dst: usize, src: usize) {
        let w = self.words;
        for k in 0..w {
            let v = self.bits[src * w + k];
            self.bits[dst * w + k] |= v;
        }
    }

    fn row_ones(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.bits[r * self.words..(r + 1) * self.words];
        row.iter().enumerate().flat_map(|(k, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(k * 64 + b)
            })
        })
    }
}

/// A finite poset over keys `K`.
///
/// Built from any generating relation; the order is its reflexive-transitive
/// closure and [`FinitePoset::covers`] holds the Hasse diagram. Möbius rows
/// are computed on first use and are safe to read from several threads.
#[derive(Debug)]
pub struct FinitePoset<K> {
    elements: Vec<K>,
    index: HashMap<K, usize>,
    covers: Vec<Vec<usize>>,
    reach: BitMatrix,
    /// position of each element in a fixed linear extension
    topo_pos: Vec<usize>,
    mobius_rows: Vec<OnceLock<Vec<BigInt>>>,
}

impl<K: Clone + Eq + Hash + Display> FinitePoset<K> {
    /// Builds the poset generated by `relations` (pairs `x < y`).
    /// Fails if the relation has a cycle (including `x < x`).
    pub fn from_covers(
        elements: Vec<K>,
        relations: impl IntoIterator<Item = (K, K)>,
    ) -> Result<Self> {
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::invalid(format!("duplicate poset element {e}")));
            }
        }
        let lookup = |k: &K| {
            index
                .get(k)
                .copied()
                .ok_or_else(|| Error::UnknownElement(k.to_string()))
        };
        let mut pairs = Vec::new();
        for (x, y) in relations {
            pairs.push((lookup(&x)?, lookup(&y)?));
        }
        Self::from_index_pairs(elements, index, pairs)
    }

    fn from_index_pairs(
        elements: Vec<K>,
        index: HashMap<K, usize>,
        mut pairs: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let n = elements.len();
        pairs.sort_unstable();
        pairs.dedup();
        let mut succ = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(x, y) in &pairs {
            succ[x].push(y);
            indegree[y] += 1;
        }

        // Kahn's algorithm; leftovers lie on or behind a cycle
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).rev().filter(|&i| indegree[i] == 0).collect();
        while let Some(x) = stack.pop() {
            order.push(x);
            for &y in succ[x].iter().rev() {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    stack.push(y);
                }
            }
        }
        if order.len() < n {
            return Err(Error::Cycle(witness_cycle(&elements, &succ, &indegree)));
        }

        let mut reach = BitMatrix::new(n);
        for &x in order.iter().rev() {
            reach.set(x, x);
            for &y in &succ[x] {
                reach.or_row(x, y);
            }
        }

        // (x, y) is a cover iff no other generator successor of x lies below y
        let covers = succ
            .iter()
            .map(|ys| {
                ys.iter()
                    .copied()
                    .filter(|&y| !ys.iter().any(|&c| c != y && reach.get(c, y)))
                    .collect()
            })
            .collect();

        let mut topo_pos = vec![0; n];
        for (p, &x) in order.iter().enumerate() {
            topo_pos[x] = p;
        }
        Ok(FinitePoset {
            elements,
            index,
            covers,
            reach,
            topo_pos,
            mobius_rows: (0..n).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[K] {
        &self.elements
    }

    pub fn contains(&self, x: &K) -> bool {
        self.index.contains_key(x)
    }

    pub fn index_of(&self, x: &K) -> Result<usize> {
        self.index
            .get(x)
            .copied()
            .ok_or_else(|| Error::UnknownElement(x.to_string()))
    }

    pub fn leq(&self, x: &K, y: &K) -> Result<bool> {
        Ok(self.reach.get(self.index_of(x)?, self.index_of(y)?))
    }

    pub fn leq_idx(&self, x: usize, y: usize) -> bool {
        self.reach.get(x, y)
    }

    /// `{z : x ≤ z ≤ y}` in element order; empty when `x ≰ y`.
    pub fn interval(&self, x: &K, y: &K) -> Result<Vec<K>> {
        let (i, j) = (self.index_of(x)?, self.index_of(y)?);
        Ok(self
            .reach
            .row_ones(i)
            .filter(|&z| self.reach.get(z, j))
            .map(|z| self.elements[z].clone())
            .collect())
    }

    /// Indices of `{w : x ≤ w}`, ascending.
    pub fn upset_idx(&self, x: usize) -> Vec<usize> {
        self.reach.row_ones(x).collect()
    }

    pub fn upset(&self, x: &K) -> Result<Vec<K>> {
        let i = self.index_of(x)?;
        Ok(self
            .reach
            .row_ones(i)
            .map(|z| self.elements[z].clone())
            .collect())
    }

    /// Hasse diagram as pairs of indices `(x, y)`, `y` covering `x`.
    pub fn cover_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.covers
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
    }

    pub fn covers(&self) -> impl Iterator<Item = (&K, &K)> + '_ {
        self.cover_pairs()
            .map(|(x, y)| (&self.elements[x], &self.elements[y]))
    }

    pub fn minimal_elements(&self) -> Vec<&K> {
        (0..self.len())
            .filter(|&y| (0..self.len()).all(|x| x == y || !self.reach.get(x, y)))
            .map(|y| &self.elements[y])
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<&K> {
        (0..self.len())
            .filter(|&x| self.covers[x].is_empty())
            .map(|x| &self.elements[x])
            .collect()
    }

    /// The row `y ↦ μ(x, y)`, zero off the upset of `x`.
    pub fn mobius_row(&self, x: usize) -> &[BigInt] {
        self.mobius_rows[x].get_or_init(|| {
            let mut up = self.upset_idx(x);
            up.sort_by_key(|&z| self.topo_pos[z]);
            let mut row = vec![BigInt::zero(); self.len()];
            row[x] = BigInt::one();
            for (k, &y) in up.iter().enumerate().skip(1) {
                let mut s = BigInt::zero();
                for &z in &up[..k] {
                    if self.reach.get(z, y) {
                        s += &row[z];
                    }
                }
                row[y] = -s;
            }
            row
        })
    }

    pub fn mobius_idx(&self, x: usize, y: usize) -> BigInt {
        self.mobius_row(x)[y].clone()
    }

    pub fn mobius(&self, x: &K, y: &K) -> Result<BigInt> {
        Ok(self.mobius_idx(self.index_of(x)?, self.index_of(y)?))
    }

    /// Fills every Möbius row, in parallel.
    pub fn precompute_mobius(&self)
    where
        K: Sync + Send,
    {
        (0..self.len()).into_par_iter().for_each(|x| {
            self.mobius_row(x);
        });
    }

    /// Writes the Hasse diagram, one `x < y` line per cover.
    pub fn write_edges(&self, out: &mut impl Write) -> io::Result<()> {
        for (x, y) in self.covers() {
            writeln!(out, "{x} < {y}")?;
        }
        Ok(())
    }

    pub fn edge_list(&self) -> String {
        let mut buf = Vec::new();
        self.write_edges(&mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }
}

fn witness_cycle<K: Display>(elements: &[K], succ: &[Vec<usize>], indegree: &[usize]) -> String {
    // every leftover node has a leftover predecessor; walk predecessors
    let n = elements.len();
    let mut pred = vec![None; n];
    for (x, ys) in succ.iter().enumerate() {
        for &y in ys {
            if indegree[x] > 0 && indegree[y] > 0 {
                pred[y] = Some(x);
            }
        }
    }
    let start = (0..n).find(|&i| indegree[i] > 0).unwrap();
    let mut seen = vec![usize::MAX; n];
    let mut path = Vec::new();
    let mut cur = start;
    while seen[cur] == usize::MAX {
        seen[cur] = path.len();
        path.push(cur);
        cur = pred[cur].expect("leftover node has a leftover predecessor");
    }
    let mut cycle: Vec<usize> = path[seen[cur]..].to_vec();
    cycle.reverse();
    cycle.push(cycle[0]);
    cycle
        .iter()
        .map(|&i| elements[i].to_string())
        .collect::<Vec<_>>()
        .join(" < ")
}

impl<K: Display> Display for FinitePoset<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poset on {} elements", self.elements.len())
    }
}

/// The right weak order on `S_n`, generated by [`Permutation::weak_covers`].
pub fn weak_order_poset(n: usize) -> FinitePoset<Permutation> {
    let elements: Vec<Permutation> = Permutation::all(n).collect();
    let index: HashMap<Permutation, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let pairs = elements
        .iter()
        .enumerate()
        .flat_map(|(i, p)| p.weak_covers().into_iter().map(move |q| (i, q)))
        .map(|(i, q)| (i, index[&q]))
        .collect();
    FinitePoset::from_index_pairs(elements, index, pairs)
        .expect("the weak order is acyclic: covers increase the length")
}

/// The order on `T_n` generated by `P(u) < P(v)` for weak-order covers
/// `u ⋖ v`. Fails only if that relation is not antisymmetric.
pub fn taskin_poset(n: usize) -> Result<FinitePoset<StandardTableau>> {
    let elements = tableau::enumerate_tableaux(n);
    let index: HashMap<StandardTableau, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let mut pairs: Vec<(usize, usize)> = perms
        .par_iter()
        .flat_map_iter(|u| {
            let pu = index[&tableau::insertion_tableau(u)];
            u.weak_covers().into_iter().map(move |v| (pu, v))
        })
        .map(|(pu, v)| (pu, index[&tableau::insertion_tableau(&v)]))
        .filter(|(a, b)| a != b)
        .collect();
    pairs.sort_unstable();
    FinitePoset::from_index_pairs(elements, index, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> FinitePoset<String> {
        let el = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        FinitePoset::from_covers(
            el,
            [("a", "b"), ("b", "c")].map(|(x, y)| (x.to_string(), y.to_string())),
        )
        .unwrap()
    }

    fn s(x: &str) -> String {
        x.to_string()
    }

    #[test]
    fn chain_closure() {
        let c = chain();
        let true_pairs = c
            .elements()
            .iter()
            .flat_map(|x| c.elements().iter().map(move |y| (x, y)))
            .filter(|(x, y)| c.leq(x, y).unwrap())
            .count();
        assert_eq!(true_pairs, 6);
        assert_eq!(c.mobius(&s("a"), &s("a")).unwrap(), BigInt::one());
        assert_eq!(c.mobius(&s("a"), &s("b")).unwrap(), BigInt::from(-1));
        assert_eq!(c.mobius(&s("a"), &s("c")).unwrap(), BigInt::zero());
        assert_eq!(c.mobius(&s("c"), &s("a")).unwrap(), BigInt::zero());
        assert_eq!(c.interval(&s("a"), &s("a")).unwrap(), vec![s("a")]);
        assert!(c.interval(&s("c"), &s("a")).unwrap().is_empty());
        assert_eq!(c.edge_list(), "a < b\nb < c\n");
    }

    #[test]
    fn non_cover_generators_are_reduced() {
        let p = FinitePoset::from_covers(
            vec![s("a"), s("b"), s("c")],
            [(s("a"), s("b")), (s("b"), s("c")), (s("a"), s("c"))],
        )
        .unwrap();
        assert_eq!(p.covers().count(), 2);
    }

    #[test]
    fn antichain() {
        let p = FinitePoset::from_covers(vec![s("x"), s("y"), s("z")], []).unwrap();
        for (i, x) in p.elements().iter().enumerate() {
            for (j, y) in p.elements().iter().enumerate() {
                assert_eq!(p.leq(x, y).unwrap(), i == j);
            }
        }
    }

    #[test]
    fn cycles_rejected() {
        let err =
            FinitePoset::from_covers(vec![s("x"), s("y")], [(s("x"), s("y")), (s("y"), s("x"))])
                .unwrap_err();
        match err {
            Error::Cycle(w) => assert!(w == "x < y < x" || w == "y < x < y", "{w}"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            FinitePoset::from_covers(vec![s("x")], [(s("x"), s("x"))]),
            Err(Error::Cycle(_))
        ));
    }

    #[test]
    fn unknown_elements() {
        let c = chain();
        assert!(matches!(
            c.leq(&s("a"), &s("q")),
            Err(Error::UnknownElement(_))
        ));
        assert!(FinitePoset::from_covers(vec![s("a")], [(s("a"), s("b"))]).is_err());
    }

    #[test]
    fn weak_order_s3() {
        let p = weak_order_poset(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.covers().count(), 6);
        let id = Permutation::identity(3);
        let top = Permutation::longest(3);
        assert_eq!(p.minimal_elements(), vec![&id]);
        assert_eq!(p.maximal_elements(), vec![&top]);
        assert_eq!(p.interval(&id, &top).unwrap().len(), 6);
        // μ(e, w0) = (-1)^(n-1) on the weak order
        assert_eq!(p.mobius(&id, &top).unwrap(), BigInt::one());
    }

    #[test]
    fn taskin_small() {
        let p3 = taskin_poset(3).unwrap();
        assert_eq!(p3.len(), 4);
        assert_eq!(p3.minimal_elements(), vec![&StandardTableau::row(3)]);
        assert_eq!(taskin_poset(1).unwrap().len(), 1);
        assert_eq!(taskin_poset(0).unwrap().len(), 1);
    }
}
