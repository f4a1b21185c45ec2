//! Finitely supported integer linear combinations over a basis, and over
//! ordered pairs of basis elements for coproducts.

use std::collections::BTreeMap;
use std::fmt::{self, Display};
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Coeff = BigInt;

/// `Σ c_b · b` with integer coefficients; zero coefficients are never stored
/// and terms iterate in the basis order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Coeff>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, 1)
    }

    pub fn term(b: B, c: impl Into<Coeff>) -> Self {
        let mut x = Self::zero();
        x.add_term(b, c.into());
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, b: B, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<B>, c: &Coeff) {
        for (b, d) in &other.terms {
            self.add_term(b.clone(), d * c);
        }
    }

    pub fn coeff(&self, b: &B) -> Coeff {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Coeff)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }
}

impl<B: Ord + Clone> FromIterator<(B, Coeff)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Coeff)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;

    fn add(self, rhs: Self) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Coeff::from(1));
        out
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;

    fn sub(self, rhs: Self) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Coeff::from(-1));
        out
    }
}

impl<B: Ord + Clone> Neg for &LinComb<B> {
    type Output = LinComb<B>;

    fn neg(self) -> LinComb<B> {
        self.scale(&Coeff::from(-1))
    }
}

/// `Σ c · (a ⊗ b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorComb<B: Ord> {
    terms: BTreeMap<(B, B), Coeff>,
}

impl<B: Ord> Default for TensorComb<B> {
    fn default() -> Self {
        TensorComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> TensorComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(a: B, b: B) -> Self {
        let mut t = Self::zero();
        t.add_term(a, b, Coeff::from(1));
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: B, b: B, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add_scaled(&mut self, other: &TensorComb<B>, c: &Coeff) {
        for ((a, b), d) in &other.terms {
            self.add_term(a.clone(), b.clone(), d * c);
        }
    }

    pub fn coeff(&self, a: &B, b: &B) -> Coeff {
        self.terms
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &B, &Coeff)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    /// `x ⊗ y` for linear combinations.
    pub fn tensor(x: &LinComb<B>, y: &LinComb<B>) -> Self {
        let mut out = Self::zero();
        for (a, c) in x.iter() {
            for (b, d) in y.iter() {
                out.add_term(a.clone(), b.clone(), c * d);
            }
        }
        out
    }

    /// Applies `f ⊗ g`.
    pub fn map_legs<C: Ord + Clone>(
        &self,
        mut f: impl FnMut(&B) -> LinComb<C>,
        mut g: impl FnMut(&B) -> LinComb<C>,
    ) -> TensorComb<C> {
        let mut out = TensorComb::zero();
        for ((a, b), c) in &self.terms {
            let t = TensorComb::tensor(&f(a), &g(b));
            out.add_scaled(&t, c);
        }
        out
    }
}

impl<B: Ord + Clone> Sub for &TensorComb<B> {
    type Output = TensorComb<B>;

    fn sub(self, rhs: Self) -> TensorComb<B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Coeff::from(-1));
        out
    }
}

/// Coordinates in a monomial basis `M_b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialCoords<B: Ord>(pub LinComb<B>);

impl<B: Ord + Clone> MonomialCoords<B> {
    pub fn unit(b: B) -> Self {
        MonomialCoords(LinComb::basis(b))
    }

    pub fn coords(&self) -> &LinComb<B> {
        &self.0
    }

    pub fn coeff(&self, b: &B) -> Coeff {
        self.0.coeff(b)
    }
}

// ---- text forms ----

fn write_signed(f: &mut fmt::Formatter<'_>, first: bool, c: &Coeff) -> fmt::Result {
    match (first, c.is_negative()) {
        (true, false) => write!(f, "{c}"),
        (true, true) => write!(f, "-{}", c.abs()),
        (false, false) => write!(f, " + {c}"),
        (false, true) => write!(f, " - {}", c.abs()),
    }
}

impl<B: Ord + Display> Display for LinComb<B> {
    /// `c1*key1 + c2*key2 - c3*key3`; the zero combination prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            write_signed(f, i == 0, c)?;
            write!(f, "*{b}")?;
        }
        Ok(())
    }
}

impl<B: Ord + Display> Display for MonomialCoords<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.0.terms.iter().enumerate() {
            write_signed(f, i == 0, c)?;
            write!(f, "*M[{b}]")?;
        }
        Ok(())
    }
}

impl<B: Ord + Display> TensorComb<B> {
    /// Text form with a chosen tensor separator.
    pub fn to_string_with(&self, sep: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            let head = match (i == 0, c.is_negative()) {
                (true, false) => format!("{c}"),
                (true, true) => format!("-{}", c.abs()),
                (false, false) => format!(" + {c}"),
                (false, true) => format!(" - {}", c.abs()),
            };
            s.push_str(&format!("{head}*({a}{sep}{b})"));
        }
        s
    }

    /// ASCII form, `ox` as tensor sign.
    pub fn to_ascii(&self) -> String {
        self.to_string_with("ox")
    }
}

impl<B: Ord + Display> Display for TensorComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with("⊗"))
    }
}

/// Splits `c1*k1 + c2*k2 - …` into signed coefficient / key text pairs.
fn split_terms(s: &str, what: &'static str) -> Result<Vec<(Coeff, String)>> {
    let s = s.trim();
    if s == "0" {
        return Ok(Vec::new());
    }
    let s = s.replace('−', "-");
    let mut out = Vec::new();
    let mut sign = 1;
    let mut rest = s.as_str();
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r;
    }
    loop {
        let next = [" + ", " - "]
            .iter()
            .filter_map(|sep| rest.find(sep).map(|i| (i, *sep)))
            .min();
        let (chunk, tail) = match next {
            Some((i, sep)) => (&rest[..i], Some((&rest[i + 3..], sep))),
            None => (rest, None),
        };
        let (c, key) = chunk
            .split_once('*')
            .ok_or_else(|| Error::parse(what, &s, format!("term {chunk:?} lacks `*`")))?;
        let c: Coeff = c
            .trim()
            .parse()
            .map_err(|_| Error::parse(what, &s, format!("bad coefficient {c:?}")))?;
        out.push((c * sign, key.trim().to_string()));
        match tail {
            Some((t, sep)) => {
                sign = if sep == " - " { -1 } else { 1 };
                rest = t;
            }
            None => break,
        }
    }
    Ok(out)
}

impl<B: Ord + Clone + FromStr<Err = Error>> FromStr for LinComb<B> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = LinComb::zero();
        for (c, key) in split_terms(s, "linear combination")? {
            let key = key
                .strip_prefix("M[")
                .and_then(|k| k.strip_suffix(']'))
                .unwrap_or(&key);
            out.add_term(key.parse()?, c);
        }
        Ok(out)
    }
}

impl<B: Ord + Clone + FromStr<Err = Error>> FromStr for TensorComb<B> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = TensorComb::zero();
        for (c, key) in split_terms(s, "tensor combination")? {
            let inner = key
                .strip_prefix('(')
                .and_then(|k| k.strip_suffix(')'))
                .ok_or_else(|| Error::parse("tensor combination", s, "expected (a⊗b)"))?;
            let (a, b) = inner
                .split_once('⊗')
                .or_else(|| inner.split_once("ox"))
                .ok_or_else(|| Error::parse("tensor combination", s, "missing tensor sign"))?;
            out.add_term(a.parse()?, b.parse()?, c);
        }
        Ok(out)
    }
}

// ---- JSON forms ----

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Small(i64),
    Big(String),
}

impl CoeffRepr {
    fn from_coeff(c: &Coeff) -> Self {
        c.to_i64()
            .map(CoeffRepr::Small)
            .unwrap_or_else(|| CoeffRepr::Big(c.to_string()))
    }

    fn into_coeff<E: serde::de::Error>(self) -> std::result::Result<Coeff, E> {
        match self {
            CoeffRepr::Small(v) => Ok(Coeff::from(v)),
            CoeffRepr::Big(s) => s.parse().map_err(E::custom),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: CoeffRepr,
    key: String,
}

#[derive(Serialize, Deserialize)]
struct TensorTermRepr {
    coeff: CoeffRepr,
    left: String,
    right: String,
}

impl<B: Ord + Display> Serialize for LinComb<B> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(b, c)| TermRepr {
                coeff: CoeffRepr::from_coeff(c),
                key: b.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de, B: Ord + Clone + FromStr<Err = Error>> Deserialize<'de> for LinComb<B> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let terms = Vec::<TermRepr>::deserialize(d)?;
        let mut out = LinComb::zero();
        for t in terms {
            let key = t.key.parse().map_err(D::Error::custom)?;
            out.add_term(key, t.coeff.into_coeff()?);
        }
        Ok(out)
    }
}

impl<B: Ord + Display> Serialize for TensorComb<B> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TensorTermRepr> = self
            .terms
            .iter()
            .map(|((a, b), c)| TensorTermRepr {
                coeff: CoeffRepr::from_coeff(c),
                left: a.to_string(),
                right: b.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de, B: Ord + Clone + FromStr<Err = Error>> Deserialize<'de> for TensorComb<B> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let terms = Vec::<TensorTermRepr>::deserialize(d)?;
        let mut out = TensorComb::zero();
        for t in terms {
            let a = t.left.parse().map_err(D::Error::custom)?;
            let b = t.right.parse().map_err(D::Error::custom)?;
            out.add_term(a, b, t.coeff.into_coeff()?);
        }
        Ok(out)
    }
}

impl<B: Ord + Display> Serialize for MonomialCoords<B> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}
