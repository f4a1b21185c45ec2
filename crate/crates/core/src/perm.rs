//! Words over the positive integers and permutations in one-line notation.
//!
//! A permutation `σ ∈ S_n` is stored as the word `σ(1)σ(2)…σ(n)`. The empty
//! permutation `ε ∈ S_0` is an ordinary value and is the unit of both shifted
//! concatenation products.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Letter = u32;

/// A finite word on the positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::invalid("word letters must be positive integers"));
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_distinct_letters(&self) -> bool {
        self.0.iter().all_unique()
    }

    /// The subword of letters belonging to `values`, in their original order
    /// (`w | I`, not the restriction of the map `w` to positions in `I`).
    pub fn restrict(&self, values: &BTreeSet<Letter>) -> Word {
        self.restrict_by(|x| values.contains(&x))
    }

    /// The subword of letters in `lo..=hi`.
    pub fn restrict_range(&self, lo: Letter, hi: Letter) -> Word {
        self.restrict_by(|x| lo <= x && x <= hi)
    }

    pub fn restrict_by(&self, keep: impl Fn(Letter) -> bool) -> Word {
        Word(self.0.iter().copied().filter(|&x| keep(x)).collect())
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    /// Replaces each letter by its rank among the letters of the word.
    pub fn standardize(&self) -> Result<Permutation> {
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!(
                "cannot standardize {self}: repeated letters"
            )));
        }
        let letters = self
            .0
            .iter()
            .map(|x| sorted.binary_search(x).unwrap() as Letter + 1)
            .collect();
        Ok(Permutation(Word(letters)))
    }

    /// Inversions by values: pairs `(j, i)` with `j > i` and `j` to the left
    /// of `i`.
    pub fn inversion_set(&self) -> BTreeSet<Inversion> {
        let mut out = BTreeSet::new();
        for (a, &x) in self.0.iter().enumerate() {
            for &y in &self.0[a + 1..] {
                if x > y {
                    out.insert(Inversion {
                        larger: x,
                        smaller: y,
                    });
                }
            }
        }
        out
    }
}

pub fn standardize(w: &Word) -> Result<Permutation> {
    w.standardize()
}

pub fn inversion_set(w: &Word) -> BTreeSet<Inversion> {
    w.inversion_set()
}

pub fn reverse(w: &Word) -> Word {
    w.reverse()
}

/// An inversion `(j, i)`, `j > i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Inversion {
    pub larger: Letter,
    pub smaller: Letter,
}

impl fmt::Display for Inversion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.larger, self.smaller)
    }
}

/// A permutation of `{1,…,n}` in one-line notation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Letter>", into = "Vec<Letter>")]
pub struct Permutation(Word);

impl Permutation {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &x in &letters {
            let i = x as usize;
            if i == 0 || i > n || seen[i] {
                return Err(Error::invalid(format!(
                    "{} is not a permutation of 1..{n}",
                    Word(letters.clone())
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation(Word(letters)))
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(Permutation::new(letters.clone()).is_ok());
        Permutation(Word(letters))
    }

    /// The empty permutation `ε`.
    pub fn empty() -> Self {
        Permutation(Word::empty())
    }

    pub fn identity(n: usize) -> Self {
        Permutation(Word((1..=n as Letter).collect()))
    }

    /// The longest element `n n-1 … 1`.
    pub fn longest(n: usize) -> Self {
        Permutation(Word((1..=n as Letter).rev().collect()))
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n as Letter)
            .permutations(n)
            .map(|v| Permutation(Word(v)))
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        self.0.letters()
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    /// `positions[x]` is the 0-based position of letter `x` (index 0 unused).
    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.size() + 1];
        for (i, &x) in self.letters().iter().enumerate() {
            pos[x as usize] = i;
        }
        pos
    }

    pub fn inversion_set(&self) -> BTreeSet<Inversion> {
        self.0.inversion_set()
    }

    pub fn length(&self) -> usize {
        let w = self.letters();
        (0..w.len())
            .map(|a| w[a + 1..].iter().filter(|&&y| y < w[a]).count())
            .sum()
    }

    pub fn reverse(&self) -> Permutation {
        Permutation(self.0.reverse())
    }

    /// Adds `k` to every letter.
    pub fn shift(&self, k: usize) -> Word {
        Word(self.letters().iter().map(|&x| x + k as Letter).collect())
    }

    /// Right weak order: `Inv(self) ⊆ Inv(other)`.
    pub fn leq_weak(&self, other: &Permutation) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::invalid(format!(
                "cannot compare {self} and {other}: different sizes"
            )));
        }
        let pos = other.positions();
        let w = self.letters();
        for a in 0..w.len() {
            for &y in &w[a + 1..] {
                if w[a] > y && pos[w[a] as usize] > pos[y as usize] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Upper covers in the right weak order: swap an adjacent ascent
    /// `σ(i) < σ(i+1)` in positions.
    pub fn weak_covers(&self) -> Vec<Permutation> {
        let w = self.letters();
        (0..w.len().saturating_sub(1))
            .filter(|&i| w[i] < w[i + 1])
            .map(|i| {
                let mut v = w.to_vec();
                v.swap(i, i + 1);
                Permutation(Word(v))
            })
            .collect()
    }

    /// Positions `i ∈ {1,…,n-1}` such that every letter in positions `≤ i`
    /// exceeds every letter in positions `> i`.
    pub fn global_descents(&self) -> Vec<usize> {
        let n = self.size();
        let w = self.letters();
        let mut out = Vec::new();
        let mut min_left = Letter::MAX;
        for i in 1..n {
            min_left = min_left.min(w[i - 1]);
            // the first i positions hold exactly {n-i+1, …, n}
            if min_left as usize == n - i + 1 {
                out.push(i);
            }
        }
        out
    }

    /// Factorization `σ = σ_1 △ σ_2 △ … △ σ_k` into `△`-indecomposables;
    /// `σ_1` is the leftmost block of the word.
    pub fn triangle_factorize(&self) -> Vec<Permutation> {
        if self.is_empty() {
            return Vec::new();
        }
        let mut cuts = vec![0];
        cuts.extend(self.global_descents());
        cuts.push(self.size());
        cuts.iter()
            .tuple_windows()
            .map(|(&a, &b)| {
                Word(self.letters()[a..b].to_vec())
                    .standardize()
                    .expect("blocks of a permutation have distinct letters")
            })
            .collect()
    }

    pub fn is_triangle_indecomposable(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::invalid(
                "the empty permutation is the unit, neither decomposable nor indecomposable",
            ));
        }
        Ok(self.global_descents().is_empty())
    }
}

/// `u □ v`: `u` followed by `v` shifted up by `|u|`.
pub fn box_product(u: &Permutation, v: &Permutation) -> Permutation {
    let mut letters = u.letters().to_vec();
    letters.extend(v.letters().iter().map(|&x| x + u.size() as Letter));
    Permutation(Word(letters))
}

/// `v △ u`: `v` shifted up by `|u|`, followed by `u`.
pub fn triangle(v: &Permutation, u: &Permutation) -> Permutation {
    let mut letters: Vec<Letter> = v
        .letters()
        .iter()
        .map(|&x| x + u.size() as Letter)
        .collect();
    letters.extend_from_slice(u.letters());
    Permutation(Word(letters))
}

/// Folds `factors` with `△` from the left.
pub fn triangle_all<'a>(factors: impl IntoIterator<Item = &'a Permutation>) -> Permutation {
    factors
        .into_iter()
        .fold(Permutation::empty(), |acc, f| triangle(&acc, f))
}

pub fn leq_weak(u: &Permutation, v: &Permutation) -> Result<bool> {
    u.leq_weak(v)
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.letters().cmp(other.letters()))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<Letter>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<Letter>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<Letter> {
    fn from(p: Permutation) -> Self {
        p.0 .0
    }
}

pub(crate) fn fmt_letters(
    letters: &[Letter],
    sep: &str,
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    if letters.iter().all(|&x| x <= 9) {
        letters.iter().try_for_each(|x| write!(f, "{x}"))
    } else {
        write!(f, "{}", letters.iter().join(sep))
    }
}

pub(crate) fn parse_letters(s: &str, what: &'static str) -> Result<Vec<Letter>> {
    let s = s.trim();
    if s == "e" || s == "ε" {
        return Ok(Vec::new());
    }
    if s.is_empty() {
        return Err(Error::parse(
            what,
            s,
            "empty input (write `e` for the empty word)",
        ));
    }
    let parse_one = |tok: &str| -> Result<Letter> {
        match tok.trim().parse::<Letter>() {
            Ok(0) => Err(Error::parse(what, s, "letters must be positive")),
            Ok(x) => Ok(x),
            Err(e) => Err(Error::parse(what, s, e.to_string())),
        }
    };
    if s.contains(',') {
        s.split(',').map(parse_one).collect()
    } else if s.contains(char::is_whitespace) {
        s.split_whitespace().map(parse_one).collect()
    } else {
        s.chars()
            .map(|c| match c.to_digit(10) {
                Some(0) | None => Err(Error::parse(what, s, format!("unexpected character {c:?}"))),
                Some(d) => Ok(d as Letter),
            })
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("e");
        }
        fmt_letters(&self.0, ",", f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::new(parse_letters(s, "word")?)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s, "permutation")?;
        Permutation::new(letters).map_err(|e| Error::parse("permutation", s, e.to_string()))
    }
}
