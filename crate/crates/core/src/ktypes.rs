//! Parametrization of irreducible representations of SO(p), O(p) and
//! S(O(p)O(q)), with the extension/restriction bookkeeping between them.
//!
//! Only the formal parameters are tracked, never character models: a
//! highest weight, whether the representation extends across the
//! disconnected group, and an abstract +/- marker for the two extensions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::{HalfInt, HalfIntVec};

/// The +/- marker distinguishing the two extensions of a self-associate
/// representation. Serializes as `"+"` / `"-"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// A dominant integral highest weight for SO(p), of length floor(p/2).
///
/// For odd p all entries are ordered nonincreasing and nonnegative; for
/// even p the final entry may be negative as long as it is bounded by the
/// one before it in absolute value. `p = 0` and `p = 1` carry the empty
/// weight (the trivial representation).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SOWeightRepr", into = "SOWeightRepr")]
pub struct SOWeight {
    p: u32,
    xi: HalfIntVec,
}

#[derive(Serialize, Deserialize)]
struct SOWeightRepr {
    p: u32,
    xi: HalfIntVec,
}

impl TryFrom<SOWeightRepr> for SOWeight {
    type Error = Error;
    fn try_from(r: SOWeightRepr) -> Result<Self> {
        SOWeight::new(r.p, r.xi)
    }
}

impl From<SOWeight> for SOWeightRepr {
    fn from(w: SOWeight) -> Self {
        SOWeightRepr { p: w.p, xi: w.xi }
    }
}

impl SOWeight {
    /// Validates the dominance conditions for SO(p).
    pub fn new(p: u32, xi: HalfIntVec) -> Result<SOWeight> {
        let rank = (p / 2) as usize;
        if xi.len() != rank {
            return Err(Error::InvalidWeight {
                p,
                reason: format!("expected {rank} entries, got {}", xi.len()),
            });
        }
        if let Some(e) = xi.iter().find(|e| !e.is_integer()) {
            return Err(Error::InvalidWeight {
                p,
                reason: format!("entry {e} is not an integer"),
            });
        }
        for i in 1..xi.len() {
            let bound = if i == xi.len() - 1 && p % 2 == 0 {
                xi[i].abs()
            } else {
                xi[i]
            };
            if xi[i - 1] < bound {
                return Err(Error::InvalidWeight {
                    p,
                    reason: format!("dominance violated at position {i}"),
                });
            }
        }
        if p % 2 == 1 {
            if let Some(last) = xi.last() {
                if last.is_negative() {
                    return Err(Error::InvalidWeight {
                        p,
                        reason: "odd rank requires a nonnegative final entry".into(),
                    });
                }
            }
        }
        Ok(SOWeight { p, xi })
    }

    /// The all-zero weight, i.e. the trivial representation of SO(p).
    pub fn trivial(p: u32) -> SOWeight {
        SOWeight {
            p,
            xi: HalfIntVec::zeros((p / 2) as usize),
        }
    }

    pub fn from_integers(p: u32, xi: &[i64]) -> Result<SOWeight> {
        SOWeight::new(p, HalfIntVec::from_integers(xi))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn xi(&self) -> &HalfIntVec {
        &self.xi
    }

    pub fn rank(&self) -> usize {
        self.xi.len()
    }

    pub fn last_entry(&self) -> HalfInt {
        self.xi.last().unwrap_or(HalfInt::ZERO)
    }

    /// Whether the corresponding representation extends to O(p): true for
    /// odd p, and for even p exactly when the final entry vanishes.
    pub fn extends_individually(&self) -> bool {
        self.p % 2 == 1 || self.last_entry() == HalfInt::ZERO
    }

    /// The associate weight with the final entry negated (even p only).
    pub fn associate(&self) -> SOWeight {
        let mut v: Vec<HalfInt> = self.xi.iter().copied().collect();
        if self.p % 2 == 0 {
            if let Some(last) = v.last_mut() {
                *last = -*last;
            }
        }
        SOWeight {
            p: self.p,
            xi: HalfIntVec::new(v),
        }
    }

    /// The entrywise absolute value of the weight.
    pub fn magnitudes(&self) -> HalfIntVec {
        crate::weights::abs_vec(&self.xi)
    }

    /// The same weight viewed in SO(p + d), zero-padded to the new rank.
    pub fn pad(&self, d: u32) -> SOWeight {
        let p = self.p + d;
        SOWeight {
            p,
            xi: self.xi.zero_padded((p / 2) as usize),
        }
    }
}

/// An irreducible representation of O(p).
///
/// `Signed` covers self-associate weights with their two extensions;
/// `Induced` covers even p with nonzero final entry, where the single
/// O(p)-irreducible restricts to the pair {xi, xi^-}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "camelCase")]
pub enum OType {
    Signed { weight: SOWeight, sign: Sign },
    Induced { abs: SOWeight },
}

impl OType {
    /// The SO(p)-content of the restriction.
    pub fn so_restriction(&self) -> Vec<SOWeight> {
        match self {
            OType::Signed { weight, .. } => vec![weight.clone()],
            OType::Induced { abs } => vec![abs.clone(), abs.associate()],
        }
    }
}

/// The set of O(p)-irreducibles lying over an SO(p)-weight: two signed
/// extensions when the weight is self-associate, otherwise the single
/// induced type over the magnitude weight.
pub fn o_extensions(w: &SOWeight) -> Vec<OType> {
    if w.extends_individually() {
        vec![
            OType::Signed {
                weight: w.clone(),
                sign: Sign::Plus,
            },
            OType::Signed {
                weight: w.clone(),
                sign: Sign::Minus,
            },
        ]
    } else {
        let mut v: Vec<HalfInt> = w.xi.iter().copied().collect();
        if let Some(last) = v.last_mut() {
            *last = last.abs();
        }
        vec![OType::Induced {
            abs: SOWeight {
                p: w.p,
                xi: HalfIntVec::new(v),
            },
        }]
    }
}

/// An irreducible representation of S(O(p)O(q)).
///
/// `Extended` when the SO-level tensor extends to O(p)O(q) (two signed
/// extensions); `Fused` when it does not, parametrized by the magnitude
/// weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "camelCase")]
pub enum SOpqKType {
    #[serde(rename_all = "camelCase")]
    Extended {
        xi: SOWeight,
        eta: SOWeight,
        sign: Sign,
    },
    #[serde(rename_all = "camelCase")]
    Fused { abs_xi: SOWeight, abs_eta: SOWeight },
}

impl SOpqKType {
    pub fn extended(xi: SOWeight, eta: SOWeight, sign: Sign) -> SOpqKType {
        SOpqKType::Extended { xi, eta, sign }
    }

    /// The trivial K-type of S(O(p)O(q)).
    pub fn trivial(p: u32, q: u32) -> SOpqKType {
        SOpqKType::Extended {
            xi: SOWeight::trivial(p),
            eta: SOWeight::trivial(q),
            sign: Sign::Plus,
        }
    }

    /// The pair of group parameters (p, q) this K-type lives on.
    pub fn groups(&self) -> (u32, u32) {
        match self {
            SOpqKType::Extended { xi, eta, .. } => (xi.p(), eta.p()),
            SOpqKType::Fused { abs_xi, abs_eta } => (abs_xi.p(), abs_eta.p()),
        }
    }

    pub fn sign(&self) -> Option<Sign> {
        match self {
            SOpqKType::Extended { sign, .. } => Some(*sign),
            SOpqKType::Fused { .. } => None,
        }
    }

    pub fn weights(&self) -> (&SOWeight, &SOWeight) {
        match self {
            SOpqKType::Extended { xi, eta, .. } => (xi, eta),
            SOpqKType::Fused { abs_xi, abs_eta } => (abs_xi, abs_eta),
        }
    }
}

/// The S(O(p)O(q))-types over a pair of SO-weights: the two signed
/// extensions when both weights individually extend, otherwise the single
/// fused type over the magnitudes.
pub fn sopq_type(xi: &SOWeight, eta: &SOWeight) -> Vec<SOpqKType> {
    if xi.extends_individually() && eta.extends_individually() {
        vec![
            SOpqKType::Extended {
                xi: xi.clone(),
                eta: eta.clone(),
                sign: Sign::Plus,
            },
            SOpqKType::Extended {
                xi: xi.clone(),
                eta: eta.clone(),
                sign: Sign::Minus,
            },
        ]
    } else {
        let abs = |w: &SOWeight| SOWeight {
            p: w.p,
            xi: {
                let mut v: Vec<HalfInt> = w.xi.iter().copied().collect();
                if let Some(last) = v.last_mut() {
                    *last = last.abs();
                }
                HalfIntVec::new(v)
            },
        };
        vec![SOpqKType::Fused {
            abs_xi: abs(xi),
            abs_eta: abs(eta),
        }]
    }
}

/// The K-type viewed in S(O(p+d)O(q+d)): each weight zero-padded to the
/// rank of the larger group.
///
/// An extended type keeps its sign. A fused type whose padded weights both
/// extend (which happens for every d >= 1, either because a zero was
/// appended or because the group parameter turned odd) becomes the
/// extension with sign +, matching the minimal K-types the padded modules
/// carry. `pad_ktype(t, 0)` is the identity.
pub fn pad_ktype(t: &SOpqKType, d: u32) -> SOpqKType {
    match t {
        SOpqKType::Extended { xi, eta, sign } => SOpqKType::Extended {
            xi: xi.pad(d),
            eta: eta.pad(d),
            sign: *sign,
        },
        SOpqKType::Fused { abs_xi, abs_eta } => {
            let xi = abs_xi.pad(d);
            let eta = abs_eta.pad(d);
            if xi.extends_individually() && eta.extends_individually() {
                SOpqKType::Extended {
                    xi,
                    eta,
                    sign: Sign::Plus,
                }
            } else {
                SOpqKType::Fused {
                    abs_xi: xi,
                    abs_eta: eta,
                }
            }
        }
    }
}
