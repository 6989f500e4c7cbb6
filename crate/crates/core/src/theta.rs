//! The combinatorial layer of the dual-pair correspondence: the degree
//! function on K-types, the lowest-degree K-type map in both directions,
//! and the stable-range nonvanishing predicate.
//!
//! Everything is pure weight bookkeeping; no oscillator model is ever
//! constructed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ktypes::{pad_ktype, sopq_type, Sign, SOpqKType, SOWeight};
use crate::weights::{HalfInt, HalfIntVec};

/// A highest weight of the double cover of U(m): nonincreasing entries in
/// a single half-integer coset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SpKTypeRepr", into = "SpKTypeRepr")]
pub struct SpKType {
    m: u32,
    weight: HalfIntVec,
}

#[derive(Serialize, Deserialize)]
struct SpKTypeRepr {
    m: u32,
    weight: HalfIntVec,
}

impl TryFrom<SpKTypeRepr> for SpKType {
    type Error = Error;
    fn try_from(r: SpKTypeRepr) -> Result<Self> {
        SpKType::new(r.m, r.weight)
    }
}

impl From<SpKType> for SpKTypeRepr {
    fn from(t: SpKType) -> Self {
        SpKTypeRepr {
            m: t.m,
            weight: t.weight,
        }
    }
}

impl SpKType {
    pub fn new(m: u32, weight: HalfIntVec) -> Result<SpKType> {
        if weight.len() != m as usize {
            return Err(Error::LengthMismatch {
                left: weight.len(),
                right: m as usize,
            });
        }
        if !weight.is_nonincreasing() {
            return Err(Error::InvalidWeight {
                p: m,
                reason: "entries must be nonincreasing".into(),
            });
        }
        if let Some(first) = weight.get(0) {
            if weight
                .iter()
                .any(|e| !(*e - first).is_integer())
            {
                return Err(Error::InvalidWeight {
                    p: m,
                    reason: "entries must lie in a single coset mod 1".into(),
                });
            }
        }
        Ok(SpKType { m, weight })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn weight(&self) -> &HalfIntVec {
        &self.weight
    }
}

/// The stable-range hypothesis under which the round trip through the
/// dual pair is nonvanishing on one of pi, pi tensor det.
pub fn nonvanishing_stable(p: u32, q: u32, m: u32) -> bool {
    2 * m + 1 >= p + q
}

/// The lowest occurrence degree of the K-type with magnitude weights
/// (xi1, xi2): the sum of all entries. Independent of the symplectic rank
/// m in the stable range.
pub fn degree(xi1: &HalfIntVec, xi2: &HalfIntVec) -> Result<i64> {
    for e in xi1.iter().chain(xi2.iter()) {
        if e.is_negative() {
            return Err(Error::InvalidWeight {
                p: 0,
                reason: format!("degree takes magnitude data; entry {e} is negative"),
            });
        }
    }
    let total = xi1.sum() + xi2.sum();
    total
        .as_integer()
        .ok_or_else(|| Error::InvalidWeight {
            p: 0,
            reason: "magnitude weights must be integral".into(),
        })
}

fn check_plus_shape(w: &SOWeight) -> Result<()> {
    if w.xi().iter().any(|e| e.is_negative()) {
        return Err(Error::Hypothesis(format!(
            "the correspondence is defined on plus-type magnitude data; got {:?}",
            w.xi()
        )));
    }
    Ok(())
}

/// The lowest-degree K-type correspondence from the orthogonal to the
/// symplectic side: (xi2, 0-block, -reverse(xi1)) shifted by the constant
/// (q - p)/2, a weight of the double cover of U(m).
///
/// Requires the stable-range hypothesis 2m + 1 >= p + q (which also makes
/// the central zero block, of length m - floor(q/2) - floor(p/2),
/// nonnegative) and plus-type magnitude data on both factors.
pub fn theta0_forward(
    q: u32,
    p: u32,
    m: u32,
    xi2: &SOWeight,
    xi1: &SOWeight,
) -> Result<SpKType> {
    if xi2.p() != q || xi1.p() != p {
        return Err(Error::InvalidWeight {
            p: xi1.p(),
            reason: format!("weights must live on SO({q}) and SO({p})"),
        });
    }
    if !nonvanishing_stable(p, q, m) {
        return Err(Error::Hypothesis(format!(
            "stable range requires 2m+1 >= p+q: m = {m}, p = {p}, q = {q}"
        )));
    }
    check_plus_shape(xi2)?;
    check_plus_shape(xi1)?;
    let zeros = m as usize - xi2.rank() - xi1.rank();
    let shift = HalfInt::from_doubled(q as i64 - p as i64);
    let mut w: Vec<HalfInt> = Vec::with_capacity(m as usize);
    w.extend(xi2.xi().iter().map(|&e| e + shift));
    w.extend(std::iter::repeat_n(shift, zeros));
    w.extend(xi1.xi().iter().rev().map(|&e| -e + shift));
    SpKType::new(m, HalfIntVec::new(w))
}

/// The round trip on lowest-degree K-types: the K-type
/// ((xi2 + zeros, +), (xi1 + zeros, +)) of S(O(q+d)O(p+d)), i.e. the
/// zero-padded plus-extension. Agrees with `pad_ktype` applied to the
/// plus-type over (xi2, xi1).
pub fn theta0_back(
    m: u32,
    q: u32,
    p: u32,
    d: u32,
    xi2: &SOWeight,
    xi1: &SOWeight,
) -> Result<SOpqKType> {
    if xi2.p() != q || xi1.p() != p {
        return Err(Error::InvalidWeight {
            p: xi1.p(),
            reason: format!("weights must live on SO({q}) and SO({p})"),
        });
    }
    if !nonvanishing_stable(p, q, m) {
        return Err(Error::Hypothesis(format!(
            "stable range requires 2m+1 >= p+q: m = {m}, p = {p}, q = {q}"
        )));
    }
    check_plus_shape(xi2)?;
    check_plus_shape(xi1)?;
    let plus = sopq_type(xi2, xi1)
        .into_iter()
        .find(|t| t.sign() != Some(Sign::Minus))
        .expect("sopq_type always yields a plus-shaped type");
    Ok(pad_ktype(&plus, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ktypes::pad_ktype;

    fn w(p: u32, xi: &[i64]) -> SOWeight {
        SOWeight::from_integers(p, xi).unwrap()
    }

    fn v(ints: &[i64]) -> HalfIntVec {
        HalfIntVec::from_integers(ints)
    }

    #[test]
    fn nonvanishing_examples() {
        assert!(nonvanishing_stable(2, 3, 2));
        assert!(!nonvanishing_stable(2, 3, 1));
        assert!(nonvanishing_stable(0, 1, 0));
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degree(&v(&[1, 0]), &v(&[2, 1])).unwrap(), 4);
        assert_eq!(degree(&v(&[]), &v(&[])).unwrap(), 0);
        assert_eq!(degree(&v(&[3]), &v(&[0])).unwrap(), 3);
        assert!(degree(&v(&[-1]), &v(&[])).is_err());
    }

    #[test]
    fn forward_examples() {
        let t = theta0_forward(3, 1, 2, &w(3, &[1]), &w(1, &[])).unwrap();
        assert_eq!(t.weight(), &v(&[2, 1]));

        let t = theta0_forward(2, 2, 2, &w(2, &[0]), &w(2, &[0])).unwrap();
        assert_eq!(t.weight(), &v(&[0, 0]));

        let t = theta0_forward(3, 3, 3, &w(3, &[1]), &w(3, &[1])).unwrap();
        assert_eq!(t.weight(), &v(&[1, 0, -1]));

        // hypothesis violated
        assert!(theta0_forward(3, 3, 2, &w(3, &[1]), &w(3, &[1])).is_err());
        // negative entries rejected
        assert!(theta0_forward(4, 1, 3, &w(4, &[1, -1]), &w(1, &[])).is_err());
    }

    #[test]
    fn forward_output_shape() {
        // nonincreasing, single coset (q - p)/2 + Z
        for (q, p, m, xi2, xi1) in [
            (3u32, 1u32, 2u32, w(3, &[1]), w(1, &[])),
            (4, 2, 4, w(4, &[3, 0]), w(2, &[0])),
            (5, 3, 5, w(5, &[2, 1]), w(3, &[2])),
            (2, 3, 3, w(2, &[1]), w(3, &[1])),
        ] {
            let t = theta0_forward(q, p, m, &xi2, &xi1).unwrap();
            assert!(t.weight().is_nonincreasing());
            let coset = HalfInt::from_doubled(q as i64 - p as i64);
            for &e in t.weight() {
                assert!((e - coset).is_integer());
            }
        }
    }

    /// The degree read off the forward image minus its central shift is
    /// independent of m in the stable range.
    #[test]
    fn degree_stability_in_m() {
        let (q, p) = (3u32, 3u32);
        let xi2 = w(3, &[2]);
        let xi1 = w(3, &[1]);
        let shifted_degree = |m: u32| {
            let t = theta0_forward(q, p, m, &xi2, &xi1).unwrap();
            let total: HalfInt = t.weight().iter().map(|e| e.abs()).sum();
            total
        };
        assert_eq!(shifted_degree(3), shifted_degree(6));
        assert_eq!(
            shifted_degree(3).as_integer().unwrap(),
            degree(&xi1.magnitudes(), &xi2.magnitudes()).unwrap()
        );
    }

    #[test]
    fn back_examples() {
        let t = theta0_back(2, 3, 1, 1, &w(3, &[1]), &w(1, &[])).unwrap();
        assert_eq!(
            t,
            SOpqKType::extended(w(4, &[1, 0]), w(2, &[0]), Sign::Plus)
        );

        // d = 0 is the identity padding
        let t = theta0_back(3, 3, 3, 0, &w(3, &[1]), &w(3, &[0])).unwrap();
        assert_eq!(t.groups(), (3, 3));

        let t = theta0_back(2, 2, 2, 3, &w(2, &[0]), &w(2, &[0])).unwrap();
        assert_eq!(
            t,
            SOpqKType::extended(w(5, &[0, 0]), w(5, &[0, 0]), Sign::Plus)
        );
    }

    /// theta0_back is pad_ktype of the plus-type over the same weights.
    #[test]
    fn back_is_padding_of_the_plus_type() {
        for (q, p, m, d, xi2, xi1) in [
            (3u32, 1u32, 2u32, 1u32, w(3, &[1]), w(1, &[])),
            (4, 2, 3, 2, w(4, &[2, 0]), w(2, &[0])),
            (5, 4, 5, 1, w(5, &[1, 1]), w(4, &[2, 0])),
        ] {
            let back = theta0_back(m, q, p, d, &xi2, &xi1).unwrap();
            let plus = sopq_type(&xi2, &xi1)
                .into_iter()
                .find(|t| t.sign() != Some(Sign::Minus))
                .unwrap();
            assert_eq!(back, pad_ktype(&plus, d));
        }
    }
}
