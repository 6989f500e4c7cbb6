//! Restricted root data for SO(p,q): roots with multiplicities, the
//! rho-vector, Weyl chamber membership and GL rho-shifts.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::{HalfInt, HalfIntVec};

/// A signature (p, q), normalized so that p <= q.
///
/// The split rank of SO(p,q) is p. `swapped` records whether the
/// constructor exchanged the inputs; it does not take part in equality or
/// serialization.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(from = "SigRepr", into = "SigRepr")]
pub struct Signature {
    p: u32,
    q: u32,
    swapped: bool,
}

#[derive(Serialize, Deserialize)]
struct SigRepr {
    p: u32,
    q: u32,
}

impl From<SigRepr> for Signature {
    fn from(r: SigRepr) -> Self {
        Signature::new(r.p, r.q)
    }
}

impl From<Signature> for SigRepr {
    fn from(s: Signature) -> Self {
        SigRepr { p: s.p, q: s.q }
    }
}

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.q == other.q
    }
}
impl Eq for Signature {}

impl Signature {
    pub fn new(p: u32, q: u32) -> Self {
        if p <= q {
            Signature {
                p,
                q,
                swapped: false,
            }
        } else {
            Signature {
                p: q,
                q: p,
                swapped: true,
            }
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// The split rank, i.e. the smaller of the two parameters.
    pub fn rank(&self) -> usize {
        self.p as usize
    }

    pub fn swapped(&self) -> bool {
        self.swapped
    }

    pub fn sum(&self) -> u32 {
        self.p + self.q
    }

    pub fn is_split(&self) -> bool {
        self.p == self.q
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// A restricted root together with its multiplicity.
///
/// Root vectors are +-e_i +- e_j (multiplicity 1) or +-e_i (multiplicity
/// q - p), written in the standard coordinates of rank p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedRoot {
    pub vector: HalfIntVec,
    pub multiplicity: u32,
}

fn unit(rank: usize, i: usize, sign: i64) -> HalfIntVec {
    let mut v = vec![HalfInt::ZERO; rank];
    v[i] = HalfInt::from_int(sign);
    HalfIntVec::new(v)
}

fn pair_root(rank: usize, i: usize, si: i64, j: usize, sj: i64) -> HalfIntVec {
    let mut v = vec![HalfInt::ZERO; rank];
    v[i] = HalfInt::from_int(si);
    v[j] = HalfInt::from_int(sj);
    HalfIntVec::new(v)
}

/// The full restricted root system of SO(p,q).
///
/// For p = q only the long roots +-e_i +- e_j occur; for q > p the short
/// roots +-e_i occur with multiplicity q - p. Returns an empty system for
/// p = 0.
pub fn restricted_roots(sig: &Signature) -> Vec<RestrictedRoot> {
    let p = sig.rank();
    let mut roots = Vec::new();
    for i in 0..p {
        for j in 0..i {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                roots.push(RestrictedRoot {
                    vector: pair_root(p, i, si, j, sj),
                    multiplicity: 1,
                });
            }
        }
    }
    if sig.q > sig.p {
        for i in 0..p {
            for s in [1, -1] {
                roots.push(RestrictedRoot {
                    vector: unit(p, i, s),
                    multiplicity: sig.q - sig.p,
                });
            }
        }
    }
    roots
}

/// Half sum of the positive restricted roots with multiplicities:
/// ((q+p)/2 - 1, (q+p)/2 - 2, ..., (q-p)/2), of length p.
pub fn rho(sig: &Signature) -> HalfIntVec {
    let p = sig.p as i64;
    let q = sig.q as i64;
    (1..=p)
        .map(|i| HalfInt::from_doubled(q + p - 2 * i))
        .collect()
}

/// Whether H lies in the open positive Weyl chamber.
///
/// For q > p this is H_1 > H_2 > ... > H_p > 0; for q = p the last
/// condition is replaced by H_{p-1} > |H_p| (vacuous when p = 1).
pub fn in_open_chamber(h: &HalfIntVec, sig: &Signature) -> Result<bool> {
    if h.len() != sig.rank() {
        return Err(Error::LengthMismatch {
            left: h.len(),
            right: sig.rank(),
        });
    }
    let p = h.len();
    if p == 0 {
        return Ok(true);
    }
    let strict_prefix = (1..p.saturating_sub(1)).all(|i| h[i - 1] > h[i]);
    if !strict_prefix {
        return Ok(false);
    }
    if sig.is_split() {
        Ok(p == 1 || h[p - 2] > h[p - 1].abs())
    } else {
        let tail = if p == 1 {
            true
        } else {
            h[p - 2] > h[p - 1]
        };
        Ok(tail && h[p - 1] > HalfInt::ZERO)
    }
}

/// The d GL(1) exponents of the character |det|^{m - (p+q+d-1)/2} on GL(d),
/// expanded against the rho-shift of SL(d):
/// (m - (p+q)/2, m - 1 - (p+q)/2, ..., m - (p+q)/2 - d + 1).
pub fn gl_rho_shift(m: HalfInt, p: u32, q: u32, d: u32) -> HalfIntVec {
    let base = m - HalfInt::from_doubled((p + q) as i64);
    (0..d as i64)
        .map(|j| base - HalfInt::from_int(j))
        .collect()
}
