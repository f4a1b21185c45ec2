//! Young tableaux, Schensted insertion and plactic classes.
//!
//! Tableaux use English convention: row 1 is the longest and is stored
//! first, columns increase downward. A standard tableau of size `n` is
//! identified with its plactic class, the set of permutations having it as
//! insertion tableau.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{self, fmt_letters, Letter, Permutation, Word};

/// A partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!("{parts:?} is not a partition")));
        }
        Ok(Shape(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of standard tableaux of this shape, by the hook length formula.
    pub fn hook_length_count(&self) -> u128 {
        let n = self.size();
        let mut num: u128 = (1..=n as u128).product();
        let conj: Vec<usize> = (0..self.0.first().copied().unwrap_or(0))
            .map(|c| self.0.iter().filter(|&&r| r > c).count())
            .collect();
        let mut den: u128 = 1;
        for (r, &len) in self.0.iter().enumerate() {
            for (c, &col) in conj.iter().enumerate().take(len) {
                den *= ((len - c - 1) + (col - r - 1) + 1) as u128;
            }
        }
        num /= den;
        num
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn partitions(n: usize) -> Vec<Shape> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
            if rest == 0 {
                out.push(Shape(cur.clone()));
                return;
            }
            for k in (1..=rest.min(max)).rev() {
                cur.push(k);
                go(rest - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// A Young tableau with distinct positive entries, rows and columns strictly
/// increasing. Entries need not be `1..n`; this is the type Schensted
/// insertion works on.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self> {
        let t = Tableau { rows };
        t.validate()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    fn validate(&self) -> Result<()> {
        let rows = &self.rows;
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::invalid("tableau rows must be nonempty"));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::invalid("tableau row lengths must weakly decrease"));
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::invalid("tableau entries must be positive"));
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return Err(Error::invalid("tableau rows must strictly increase"));
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(below, above)| below <= above) {
                return Err(Error::invalid("tableau columns must strictly increase"));
            }
        }
        if !rows.iter().flatten().all_unique() {
            return Err(Error::invalid("tableau entries must be distinct"));
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    pub fn contains(&self, x: Letter) -> bool {
        self.rows.iter().any(|r| r.binary_search(&x).is_ok())
    }

    /// Schensted row insertion.
    pub fn row_insert(&self, x: Letter) -> Result<Tableau> {
        if x == 0 {
            return Err(Error::invalid("cannot insert 0"));
        }
        if self.contains(x) {
            return Err(Error::invalid(format!("{x} is already an entry")));
        }
        let mut t = self.clone();
        t.insert_in_place(x);
        Ok(t)
    }

    /// Inserts `x` and returns the row index of the new cell.
    fn insert_in_place(&mut self, mut x: Letter) -> usize {
        for (r, row) in self.rows.iter_mut().enumerate() {
            let k = row.partition_point(|&y| y < x);
            if k == row.len() {
                row.push(x);
                return r;
            }
            x = std::mem::replace(&mut row[k], x);
        }
        self.rows.push(vec![x]);
        self.rows.len() - 1
    }

    /// Concatenation of the rows from the last one up to row 1.
    pub fn reading_word(&self) -> Word {
        Word::new(self.rows.iter().rev().flatten().copied().collect()).unwrap()
    }
}

/// A standard Young tableau: entries exactly `{1,…,n}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Letter>>", into = "Vec<Vec<Letter>>")]
pub struct StandardTableau(Tableau);

impl StandardTableau {
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self> {
        Self::from_tableau(Tableau::new(rows)?)
    }

    pub fn from_tableau(t: Tableau) -> Result<Self> {
        let n = t.size();
        if t.rows.iter().flatten().any(|&x| x as usize > n) {
            return Err(Error::invalid(format!(
                "tableau entries must be exactly 1..{n}"
            )));
        }
        Ok(StandardTableau(t))
    }

    pub fn empty() -> Self {
        StandardTableau(Tableau::empty())
    }

    /// The single-row tableau `1 2 … n`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        StandardTableau(Tableau {
            rows: vec![(1..=n as Letter).collect()],
        })
    }

    pub fn as_tableau(&self) -> &Tableau {
        &self.0
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.0.rows
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn shape(&self) -> Shape {
        self.0.shape()
    }

    /// The reading word; a permutation whose insertion tableau is `self`.
    pub fn reading_word(&self) -> Permutation {
        Permutation::from_letters_unchecked(self.0.rows.iter().rev().flatten().copied().collect())
    }

    /// Row and column (0-based) of entry `x`.
    fn locate(&self, x: Letter) -> Option<(usize, usize)> {
        self.rows()
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.binary_search(&x).ok().map(|c| (r, c)))
    }

    /// The plactic class: every permutation with insertion tableau `self`.
    pub fn plactic_class(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = tableaux_of_shape(&self.shape())
            .iter()
            .map(|q| inverse_rsk(self, q).expect("same shape"))
            .collect();
        out.sort();
        out
    }

    /// `st(T | lo..=hi)`: standardized restriction to an interval of values.
    pub fn restrict_range(&self, lo: Letter, hi: Letter) -> StandardTableau {
        let w = self.reading_word().as_word().restrict_range(lo, hi);
        insertion_tableau(&w.standardize().expect("distinct letters"))
    }

    /// `st(T | I)` for a set `I` of values that must be an interval.
    pub fn restrict_std(&self, values: &BTreeSet<Letter>) -> Result<StandardTableau> {
        let (Some(&lo), Some(&hi)) = (values.first(), values.last()) else {
            return Ok(StandardTableau::empty());
        };
        if (hi - lo + 1) as usize != values.len() {
            return Err(Error::invalid(format!(
                "restriction of tableaux needs an interval of values, got {values:?}"
            )));
        }
        Ok(self.restrict_range(lo, hi))
    }

    /// Whether `self = st(T|{p+1..n}) △ st(T|{1..p})`.
    pub fn splits_at(&self, p: usize) -> bool {
        let n = self.size();
        let lower = self.restrict_range(1, p as Letter);
        let upper = self.restrict_range(p as Letter + 1, n as Letter);
        triangle_tab(&upper, &lower) == *self
    }

    /// Split points `p ∈ {1,…,n-1}` at which the tableau decomposes.
    pub fn split_points(&self) -> Vec<usize> {
        (1..self.size()).filter(|&p| self.splits_at(p)).collect()
    }

    pub fn is_triangle_indecomposable(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::invalid(
                "the empty tableau is the unit, neither decomposable nor indecomposable",
            ));
        }
        Ok((1..self.size()).all(|p| !self.splits_at(p)))
    }

    /// Factors `T_1, …, T_k`, indecomposable, with `T = T_1 △ … △ T_k`.
    pub fn triangle_factorize(&self) -> Vec<StandardTableau> {
        let mut factors = Vec::new();
        let mut rest = self.clone();
        while !rest.is_empty() {
            let n = rest.size();
            let p = (1..n).find(|&p| rest.splits_at(p)).unwrap_or(n);
            factors.push(rest.restrict_range(1, p as Letter));
            rest = rest.restrict_range(p as Letter + 1, n as Letter);
        }
        factors.reverse();
        factors
    }

    /// Text rendering, one line per row; `french` puts row 1 at the bottom.
    pub fn render(&self, french: bool) -> String {
        let width = self.size().to_string().len();
        let mut lines: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| format!("{x:>width$}")).join(" "))
            .collect();
        if french {
            lines.reverse();
        }
        lines.join("\n")
    }
}

impl Ord for StandardTableau {
    /// Size first, then shapes in decreasing lexicographic order, then the
    /// row-by-row reading of entries.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.shape().cmp(&self.shape()))
            .then_with(|| {
                self.rows()
                    .iter()
                    .flatten()
                    .cmp(other.rows().iter().flatten())
            })
    }
}

impl PartialOrd for StandardTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<Vec<Letter>>> for StandardTableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<Letter>>) -> Result<Self> {
        StandardTableau::new(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<Letter>> {
    fn from(t: StandardTableau) -> Self {
        t.0.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("e");
        }
        let sep = if self.rows.iter().flatten().all(|&x| x <= 9) {
            ""
        } else {
            " "
        };
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            if sep.is_empty() {
                fmt_letters(row, "", f)?;
            } else {
                write!(f, "{}", row.iter().join(" "))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    /// Accepts `rows/joined/by/slashes`, `e` for the empty tableau, and
    /// `P(<permutation>)` for an insertion tableau.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("P(").and_then(|r| r.strip_suffix(')')) {
            let sigma: Permutation = inner.parse()?;
            return Ok(insertion_tableau(&sigma));
        }
        if s == "e" || s == "ε" {
            return Ok(StandardTableau::empty());
        }
        let separated = s.contains(|c: char| c == ',' || c.is_whitespace());
        let rows = if separated {
            s.split('/')
                .map(parse_separated_row)
                .collect::<Result<Vec<_>>>()
        } else {
            let digits = s
                .split('/')
                .map(|r| perm::parse_letters(r, "tableau"))
                .collect::<Result<Vec<_>>>();
            // a column with two-digit entries, such as 1/2/.../10, has no separators
            match digits {
                Err(e) => s
                    .split('/')
                    .map(parse_separated_row)
                    .collect::<Result<Vec<_>>>()
                    .map_err(|_| e),
                ok => ok,
            }
        }
        .map_err(|e| match e {
            Error::Parse { reason, .. } => Error::parse("tableau", s, reason),
            other => other,
        })?;
        StandardTableau::new(rows).map_err(|e| Error::parse("tableau", s, e.to_string()))
    }
}

fn parse_separated_row(row: &str) -> Result<Vec<Letter>> {
    let tokens: Vec<&str> = row
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.is_empty() {
        return Err(Error::parse("tableau", row, "empty row"));
    }
    tokens
        .into_iter()
        .map(|t| match t.parse::<Letter>() {
            Ok(x) if x > 0 => Ok(x),
            _ => Err(Error::parse("tableau", row, format!("bad entry {t:?}"))),
        })
        .collect()
}

/// Robinson-Schensted: insertion tableau `P` and recording tableau `Q`.
pub fn rsk(sigma: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p = Tableau::empty();
    let mut q = Tableau::empty();
    for (i, &x) in sigma.letters().iter().enumerate() {
        let r = p.insert_in_place(x);
        if r == q.rows.len() {
            q.rows.push(Vec::new());
        }
        q.rows[r].push(i as Letter + 1);
    }
    (StandardTableau(p), StandardTableau(q))
}

/// `P(σ)`.
pub fn insertion_tableau(sigma: &Permutation) -> StandardTableau {
    let mut p = Tableau::empty();
    for &x in sigma.letters() {
        p.insert_in_place(x);
    }
    StandardTableau(p)
}

/// Inverse of [`rsk`], by reverse bumping driven by the entries of `q` from
/// largest to smallest.
pub fn inverse_rsk(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::invalid(format!(
            "shapes differ: {} vs {}",
            p.shape(),
            q.shape()
        )));
    }
    let n = p.size();
    let mut rows = p.rows().to_vec();
    let mut letters = vec![0; n];
    for k in (1..=n as Letter).rev() {
        let (r, c) = q.locate(k).expect("q is standard");
        debug_assert_eq!(c + 1, rows[r].len(), "recording cell must be a corner");
        let mut x = rows[r].pop().unwrap();
        if rows[r].is_empty() {
            rows.pop();
        }
        for row in rows[..r].iter_mut().rev() {
            let j = row.partition_point(|&y| y < x) - 1;
            x = std::mem::replace(&mut row[j], x);
        }
        letters[k as usize - 1] = x;
    }
    Ok(Permutation::from_letters_unchecked(letters))
}

/// Words reachable by one elementary Knuth move
/// (`xjiky ~ xjkiy`, `xikjy ~ xkijy`, `i < j < k`).
pub fn knuth_neighbors(w: &Word) -> Vec<Word> {
    let l = w.letters();
    let mut out = BTreeSet::new();
    for s in 0..l.len().saturating_sub(2) {
        let (a, b, c) = (l[s], l[s + 1], l[s + 2]);
        let between = |x: Letter, y: Letter, z: Letter| (y < x && x < z) || (z < x && x < y);
        if between(a, b, c) {
            let mut v = l.to_vec();
            v.swap(s + 1, s + 2);
            out.insert(v);
        }
        if between(c, a, b) {
            let mut v = l.to_vec();
            v.swap(s, s + 1);
            out.insert(v);
        }
    }
    out.into_iter().map(|v| Word::new(v).unwrap()).collect()
}

/// All standard tableaux of a given shape, sorted.
pub fn tableaux_of_shape(shape: &Shape) -> Vec<StandardTableau> {
    // place the largest entry at each removable corner
    fn go(parts: &mut Vec<usize>, rows: &mut Vec<Vec<Letter>>, out: &mut Vec<StandardTableau>) {
        let n: usize = parts.iter().sum();
        if n == 0 {
            let t: Vec<Vec<Letter>> = rows.iter().filter(|r| !r.is_empty()).cloned().collect();
            out.push(StandardTableau(Tableau { rows: t }));
            return;
        }
        for r in 0..parts.len() {
            let removable = parts[r] > 0 && parts.get(r + 1).is_none_or(|&next| next < parts[r]);
            if removable {
                parts[r] -= 1;
                let c = parts[r];
                rows[r][c] = n as Letter;
                go(parts, rows, out);
                parts[r] += 1;
            }
        }
    }
    let mut parts = shape.0.clone();
    let mut rows: Vec<Vec<Letter>> = parts.iter().map(|&k| vec![0; k]).collect();
    let mut out = Vec::new();
    go(&mut parts, &mut rows, &mut out);
    out.sort();
    out
}

/// All of `T_n`, built by adding the cell `n` at each addable corner of each
/// tableau in `T_{n-1}`; sorted.
pub fn enumerate_tableaux(n: usize) -> Vec<StandardTableau> {
    let mut level = vec![StandardTableau::empty()];
    for k in 1..=n as Letter {
        let mut next = Vec::new();
        for t in &level {
            let rows = t.rows();
            for r in 0..=rows.len() {
                let addable = r == 0 || rows.get(r).map_or(0, Vec::len) < rows[r - 1].len();
                if addable {
                    let mut new_rows = rows.to_vec();
                    if r == new_rows.len() {
                        new_rows.push(Vec::new());
                    }
                    new_rows[r].push(k);
                    next.push(StandardTableau(Tableau { rows: new_rows }));
                }
            }
        }
        level = next;
    }
    level.sort();
    level
}

/// `V △ U`, computed as `P(rw(V) △ rw(U))`.
pub fn triangle_tab(v: &StandardTableau, u: &StandardTableau) -> StandardTableau {
    insertion_tableau(&perm::triangle(&v.reading_word(), &u.reading_word()))
}

/// `A □ B`, computed as `P(rw(A) □ rw(B))`.
pub fn box_tab(a: &StandardTableau, b: &StandardTableau) -> StandardTableau {
    insertion_tableau(&perm::box_product(&a.reading_word(), &b.reading_word()))
}

/// Folds `factors` with `△` from the left.
pub fn triangle_tab_all<'a>(
    factors: impl IntoIterator<Item = &'a StandardTableau>,
) -> StandardTableau {
    factors
        .into_iter()
        .fold(StandardTableau::empty(), |acc, f| triangle_tab(&acc, f))
}

/// The number of `△`-indecomposable tableaux in `T_n`.
pub fn count_indecomposable(n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    enumerate_tableaux(n)
        .par_iter()
        .filter(|t| t.is_triangle_indecomposable().unwrap())
        .count()
}

/// The `△`-indecomposable tableaux of `T_n`, sorted.
pub fn indecomposable_tableaux(n: usize) -> Vec<StandardTableau> {
    if n == 0 {
        return Vec::new();
    }
    enumerate_tableaux(n)
        .into_par_iter()
        .filter(|t| t.is_triangle_indecomposable().unwrap())
        .collect()
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

    fn rows(r: &[&[Letter]]) -> StandardTableau {
        StandardTableau::new(r.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    #[test]
    fn row_insert_examples() {
        let base = Tableau::new(vec![vec![1, 3], vec![2]]).unwrap();
        assert_eq!(
            base.row_insert(4).unwrap(),
            Tableau::new(vec![vec![1, 3, 4], vec![2]]).unwrap()
        );
        assert_eq!(
            Tableau::empty().row_insert(7).unwrap(),
            Tableau::new(vec![vec![7]]).unwrap()
        );
        assert!(base.row_insert(3).is_err());
        let mut acc = Tableau::empty();
        for x in [3, 1, 2, 4] {
            acc = acc.row_insert(x).unwrap();
        }
        assert_eq!(acc.rows(), &[vec![1, 2, 4], vec![3]]);
    }

    #[test]
    fn rsk_examples() {
        assert_eq!(rsk(&p("45231")).0, rows(&[&[1, 3], &[2, 5], &[4]]));
        let (pp, qq) = rsk(&p("1234"));
        assert_eq!(pp, StandardTableau::row(4));
        assert_eq!(qq, StandardTableau::row(4));
        assert_eq!(rsk(&p("213")).0, rows(&[&[1, 3], &[2]]));
        assert_eq!(rsk(&Permutation::empty()).0, StandardTableau::empty());
    }

    #[test]
    fn inverse_rsk_examples() {
        let row = StandardTableau::row(4);
        assert_eq!(inverse_rsk(&row, &row).unwrap(), p("1234"));
        let col = rows(&[&[1], &[2], &[3]]);
        assert_eq!(inverse_rsk(&col, &col).unwrap(), p("321"));
        assert!(inverse_rsk(&row, &t("13/2/4")).is_err());
    }

    #[test]
    fn reading_word_examples() {
        assert_eq!(t("13/2").reading_word(), p("213"));
        assert_eq!(StandardTableau::row(3).reading_word(), p("123"));
        assert_eq!(t("14/2/3").reading_word(), p("3214"));
        assert_eq!(insertion_tableau(&p("3214")), t("14/2/3"));
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| enumerate_tableaux(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26, 76, 232, 764]);
        assert_eq!(enumerate_tableaux(0), vec![StandardTableau::empty()]);
        let t3 = enumerate_tableaux(3);
        assert_eq!(t3, vec![t("123"), t("12/3"), t("13/2"), t("1/2/3")]);
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(Shape::new(vec![2, 1]).unwrap().hook_length_count(), 2);
        assert_eq!(Shape::new(vec![3, 2]).unwrap().hook_length_count(), 5);
        assert_eq!(Shape::new(vec![3, 2, 1]).unwrap().hook_length_count(), 16);
        for n in 0..=7 {
            for shape in Shape::partitions(n) {
                assert_eq!(
                    tableaux_of_shape(&shape).len() as u128,
                    shape.hook_length_count()
                );
            }
        }
    }

    #[test]
    fn plactic_class_examples() {
        assert_eq!(StandardTableau::row(4).plactic_class(), vec![p("1234")]);
        assert_eq!(t("13/2").plactic_class(), vec![p("213"), p("231")]);
    }

    #[test]
    fn knuth_examples() {
        let w: Word = "213".parse().unwrap();
        assert_eq!(knuth_neighbors(&w), vec!["231".parse().unwrap()]);
        assert!(knuth_neighbors(&"1234".parse().unwrap()).is_empty());
    }

    #[test]
    fn figure_products() {
        let u = t("13/2");
        let v = t("12");
        assert_eq!(triangle_tab(&v, &u), t("13/25/4"));
        assert_eq!(triangle_tab(&StandardTableau::empty(), &u), u);
        assert_eq!(triangle_tab(&v, &StandardTableau::empty()), v);

        let a = t("13/2");
        let b = t("14/2/3");
        assert_eq!(box_tab(&a, &b), t("1347/25/6"));
        assert_eq!(box_tab(&StandardTableau::empty(), &b), b);
        assert_eq!(box_tab(&a, &StandardTableau::empty()), a);
    }

    #[test]
    fn restriction_examples() {
        let s = insertion_tableau(&p("3124"));
        let full: BTreeSet<Letter> = (1..=4).collect();
        assert_eq!(s.restrict_std(&full).unwrap(), s);
        assert_eq!(
            s.restrict_std(&BTreeSet::new()).unwrap(),
            StandardTableau::empty()
        );
        let upper: BTreeSet<Letter> = (2..=4).collect();
        assert_eq!(s.restrict_std(&upper).unwrap(), t("13/2"));
        let gap: BTreeSet<Letter> = [1, 3].into_iter().collect();
        assert!(s.restrict_std(&gap).is_err());
    }

    #[test]
    fn indecomposability() {
        assert!(t("1").is_triangle_indecomposable().unwrap());
        assert!(!t("13/25/4").is_triangle_indecomposable().unwrap());
        assert!(StandardTableau::empty()
            .is_triangle_indecomposable()
            .is_err());
        let counts: Vec<usize> = (1..=7).map(count_indecomposable).collect();
        assert_eq!(counts, vec![1, 1, 1, 3, 7, 23, 71]);
    }

    #[test]
    fn factorization_reconstitutes() {
        let s = t("13/25/4");
        let f = s.triangle_factorize();
        assert_eq!(triangle_tab_all(&f), s);
        assert!(f.iter().all(|x| x.is_triangle_indecomposable().unwrap()));
    }

    #[test]
    fn text_and_json() {
        assert_eq!(t("1347/25/6").to_string(), "1347/25/6");
        assert_eq!(StandardTableau::empty().to_string(), "e");
        assert_eq!(t("P(45231)"), t("13/25/4"));
        assert!("12//3".parse::<StandardTableau>().is_err());
        assert!("13/2/5".parse::<StandardTableau>().is_err());
        assert!("21/3".parse::<StandardTableau>().is_err());
        let big = insertion_tableau(&Permutation::longest(10));
        assert_eq!(big.to_string().parse::<StandardTableau>().unwrap(), big);
        let wide = StandardTableau::row(10);
        assert_eq!(wide.to_string(), "1 2 3 4 5 6 7 8 9 10");
        assert_eq!(wide.to_string().parse::<StandardTableau>().unwrap(), wide);
        let j = serde_json::to_string(&t("13/2")).unwrap();
        assert_eq!(j, "[[1,3],[2]]");
        assert_eq!(
            serde_json::from_str::<StandardTableau>(&j).unwrap(),
            t("13/2")
        );
    }

    #[test]
    fn rendering() {
        let s = t("13/25/4");
        assert_eq!(s.render(false), "1 3\n2 5\n4");
        assert_eq!(s.render(true), "4\n2 5\n1 3");
    }
}
