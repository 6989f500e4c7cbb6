//! Exact half-integer vectors, dominance orders and Weyl canonical forms.
//!
//! Everything here is integer arithmetic on doubled values; no floating
//! point. Vectors of any length are legal, including length zero (rank-0
//! groups appear as induction base cases).

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Index, Neg, Sub};
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact half-integer, stored as twice its value.
///
/// `HalfInt::from_doubled(3)` is 3/2; `HalfInt::from_int(3)` is 3.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    /// The half-integer `d/2`.
    pub const fn from_doubled(d: i64) -> Self {
        HalfInt(d)
    }

    /// The integer `n` as a half-integer.
    pub const fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    /// Twice the value, always exact.
    pub const fn doubled(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.0 / 2)
        } else {
            None
        }
    }

    pub fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    /// Lossy conversion for diagnostics only.
    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.0 += rhs.0;
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl Sum for HalfInt {
    fn sum<I: Iterator<Item = HalfInt>>(iter: I) -> HalfInt {
        iter.fold(HalfInt::ZERO, |a, b| a + b)
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::from_int(n)
    }
}

impl fmt::Display for HalfInt {
    /// Lowest terms: `"2"`, `"3/2"`, `"-1/2"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::OutOfRange(format!("cannot parse half-integer {s:?}"));
        if let Some((num, den)) = s.split_once('/') {
            if den.trim() != "2" {
                return Err(bad());
            }
            let n: i64 = num.trim().parse().map_err(|_| bad())?;
            Ok(HalfInt::from_doubled(n))
        } else {
            let n: i64 = s.trim().parse().map_err(|_| bad())?;
            Ok(HalfInt::from_int(n))
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// A finite vector of exact half-integers.
///
/// The universal carrier for weights, exponents, rho-vectors and
/// infinitesimal characters. Serializes as a JSON array of half-integer
/// strings.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfIntVec(Vec<HalfInt>);

impl HalfIntVec {
    pub fn new(entries: Vec<HalfInt>) -> Self {
        HalfIntVec(entries)
    }

    pub fn empty() -> Self {
        HalfIntVec(Vec::new())
    }

    pub fn zeros(n: usize) -> Self {
        HalfIntVec(vec![HalfInt::ZERO; n])
    }

    pub fn from_integers(ints: &[i64]) -> Self {
        ints.iter().copied().map(HalfInt::from_int).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, HalfInt> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[HalfInt] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Option<HalfInt> {
        self.0.get(i).copied()
    }

    pub fn last(&self) -> Option<HalfInt> {
        self.0.last().copied()
    }

    pub fn push(&mut self, e: HalfInt) {
        self.0.push(e);
    }

    pub fn extend_from(&mut self, other: &HalfIntVec) {
        self.0.extend_from_slice(&other.0);
    }

    /// Appends zeros until the vector has length `n`.
    pub fn zero_padded(&self, n: usize) -> HalfIntVec {
        let mut v = self.0.clone();
        while v.len() < n {
            v.push(HalfInt::ZERO);
        }
        HalfIntVec(v)
    }

    pub fn sum(&self) -> HalfInt {
        self.0.iter().copied().sum()
    }

    pub fn prefix_sums(&self) -> Vec<HalfInt> {
        let mut acc = HalfInt::ZERO;
        self.0
            .iter()
            .map(|&e| {
                acc += e;
                acc
            })
            .collect()
    }

    /// Entrywise difference; lengths must agree.
    pub fn sub(&self, other: &HalfIntVec) -> Result<HalfIntVec> {
        check_len(self, other)?;
        Ok(self
            .iter()
            .zip(other.iter())
            .map(|(&a, &b)| a - b)
            .collect())
    }

    /// Entrywise sum; lengths must agree.
    pub fn add(&self, other: &HalfIntVec) -> Result<HalfIntVec> {
        check_len(self, other)?;
        Ok(self
            .iter()
            .zip(other.iter())
            .map(|(&a, &b)| a + b)
            .collect())
    }

    pub fn is_nonincreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl Index<usize> for HalfIntVec {
    type Output = HalfInt;
    fn index(&self, i: usize) -> &HalfInt {
        &self.0[i]
    }
}

impl FromIterator<HalfInt> for HalfIntVec {
    fn from_iter<I: IntoIterator<Item = HalfInt>>(iter: I) -> Self {
        HalfIntVec(iter.into_iter().collect())
    }
}

impl From<Vec<HalfInt>> for HalfIntVec {
    fn from(v: Vec<HalfInt>) -> Self {
        HalfIntVec(v)
    }
}

impl<'a> IntoIterator for &'a HalfIntVec {
    type Item = &'a HalfInt;
    type IntoIter = std::slice::Iter<'a, HalfInt>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Debug for HalfIntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

fn check_len(a: &HalfIntVec, b: &HalfIntVec) -> Result<()> {
    if a.len() != b.len() {
        Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        })
    } else {
        Ok(())
    }
}

/// The Weyl group flavor acting on a rank-k weight space.
///
/// `B`: permutations and arbitrary sign changes. `D`: permutations and sign
/// changes on an even number of coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum WeylType {
    B,
    D,
}

/// The sign class of a type-D canonical weight.
///
/// `Merged` means the two classes coincide (always for type B, and for
/// type D whenever a coordinate vanishes).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignClass {
    Plus,
    Minus,
    Merged,
}

/// Canonical representative of a Weyl orbit: magnitudes sorted
/// nonincreasing, plus the sign class for split type-D orbits.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalWeight {
    pub magnitudes: HalfIntVec,
    pub class: SignClass,
}

impl CanonicalWeight {
    /// A vector in the orbit this canonical weight names: the magnitudes,
    /// with the final entry negated for the `Minus` class.
    pub fn representative(&self) -> HalfIntVec {
        let mut v: Vec<HalfInt> = self.magnitudes.iter().copied().collect();
        if self.class == SignClass::Minus {
            if let Some(last) = v.last_mut() {
                *last = -*last;
            }
        }
        HalfIntVec::new(v)
    }

    /// The canonical weight with the opposite sign class, when split.
    pub fn sign_twin(&self) -> CanonicalWeight {
        let class = match self.class {
            SignClass::Plus => SignClass::Minus,
            SignClass::Minus => SignClass::Plus,
            SignClass::Merged => SignClass::Merged,
        };
        CanonicalWeight {
            magnitudes: self.magnitudes.clone(),
            class,
        }
    }
}

/// The multiset of entries of `mu`, sorted nonincreasing.
pub fn rearrange_desc(mu: &HalfIntVec) -> HalfIntVec {
    let mut v: Vec<HalfInt> = mu.iter().copied().collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    HalfIntVec::new(v)
}

/// Entrywise absolute value, order preserved.
pub fn abs_vec(mu: &HalfIntVec) -> HalfIntVec {
    mu.iter().map(|e| e.abs()).collect()
}

/// Strict dominance: every prefix sum of `mu` is strictly below the
/// corresponding prefix sum of `lambda`.
///
/// This is also the encoding of every "for some epsilon > 0" bound in the
/// calculus: a uniform epsilon shift of the first coordinate pushes every
/// prefix down by exactly epsilon.
pub fn strictly_dominated(mu: &HalfIntVec, lambda: &HalfIntVec) -> Result<bool> {
    check_len(mu, lambda)?;
    let mut a = HalfInt::ZERO;
    let mut b = HalfInt::ZERO;
    for (&x, &y) in mu.iter().zip(lambda.iter()) {
        a += x;
        b += y;
        if a >= b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Weak dominance: every prefix sum of `mu` is at most the corresponding
/// prefix sum of `lambda`.
pub fn weakly_dominated(mu: &HalfIntVec, lambda: &HalfIntVec) -> Result<bool> {
    check_len(mu, lambda)?;
    let mut a = HalfInt::ZERO;
    let mut b = HalfInt::ZERO;
    for (&x, &y) in mu.iter().zip(lambda.iter()) {
        a += x;
        b += y;
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Canonical form of `v` under the Weyl group of the given type.
///
/// Type B: sort the absolute values, class `Merged`. Type D: same
/// magnitudes; if some entry vanishes the even/odd sign orbits coincide
/// (`Merged`), otherwise the class records the parity of the number of
/// negative entries (`Plus` even, `Minus` odd). The empty vector
/// canonicalizes to `Merged` for both types: a rank-0 orbit has no class
/// distinction to record.
pub fn weyl_canonical(v: &HalfIntVec, t: WeylType) -> CanonicalWeight {
    let magnitudes = rearrange_desc(&abs_vec(v));
    let class = match t {
        WeylType::B => SignClass::Merged,
        WeylType::D => {
            if v.is_empty() || v.iter().any(|&e| e == HalfInt::ZERO) {
                SignClass::Merged
            } else if v.iter().filter(|e| e.is_negative()).count() % 2 == 0 {
                SignClass::Plus
            } else {
                SignClass::Minus
            }
        }
    };
    CanonicalWeight { magnitudes, class }
}

/// Total order used for deterministic output: lexicographic on entries.
impl PartialOrd for HalfIntVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HalfIntVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}
