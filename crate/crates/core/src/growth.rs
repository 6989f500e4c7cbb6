//! The decay-exponent calculus: tempered criteria, decay bounds for
//! Langlands quotients, and the growth hypotheses consumed by the
//! certification engine.
//!
//! Exponent vectors live in the chamber coordinates of the split part;
//! bounds compare by prefix-sum dominance, with an epsilon-strict bound
//! encoded as strict dominance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{rho, Signature};
use crate::weights::{
    abs_vec, rearrange_desc, strictly_dominated, weakly_dominated, HalfInt, HalfIntVec,
};

/// A decay-exponent bound. `strict` records an epsilon-subtracted first
/// coordinate ("for some epsilon > 0"): an exponent vector E is within
/// the bound iff E is strictly (resp. weakly) prefix-dominated by
/// `vector`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentBound {
    pub vector: HalfIntVec,
    pub strict: bool,
}

/// The growth bound under which quantum induction through the rank-m dual
/// pair applies to a representation of SO(p,q): the ascending vector
/// (m+2-p-q, m+3-p-q, ..., m+1-q) of length p, epsilon-strict.
///
/// Requires p <= q (normalize the signature first); p = 0 yields the
/// empty bound.
pub fn quantum_induction_bound(p: u32, q: u32, m: u32) -> Result<ExponentBound> {
    if p > q {
        return Err(Error::OutOfRange(format!(
            "bound requires p <= q, got p = {p}, q = {q}"
        )));
    }
    let (p, q, m) = (p as i64, q as i64, m as i64);
    let vector: HalfIntVec = (1..=p)
        .map(|i| HalfInt::from_int(m + 1 + i - p - q))
        .collect();
    Ok(ExponentBound {
        vector,
        strict: true,
    })
}

/// The exponent vector bounding the K-finite matrix coefficients of a
/// Langlands quotient with continuous parameter v on SO(p,q), modulo
/// polynomial factors: the sorted magnitudes of v, zero-padded to the
/// rank, minus rho.
pub fn decay_exponent(v: &HalfIntVec, sig: &Signature) -> Result<HalfIntVec> {
    if v.len() > sig.rank() {
        return Err(Error::LengthMismatch {
            left: v.len(),
            right: sig.rank(),
        });
    }
    rearrange_desc(&abs_vec(v))
        .zero_padded(sig.rank())
        .sub(&rho(sig))
}

/// Whether the exponent vector E satisfies the bound: strict dominance
/// for an epsilon-strict bound, weak dominance otherwise.
pub fn satisfies_bound(e: &HalfIntVec, b: &ExponentBound) -> Result<bool> {
    if b.strict {
        strictly_dominated(e, &b.vector)
    } else {
        weakly_dominated(e, &b.vector)
    }
}

/// The leading-exponent condition licensing the identification of the
/// invariant tensor product with the full induced module:
/// eta + (mu, 0_{q+d}) - ((d+1, ..., d+p), 0_{q+d}) strictly dominated by
/// zero.
pub fn subrepresentation_condition(
    eta: &HalfIntVec,
    mu: &HalfIntVec,
    p: u32,
    q: u32,
    d: u32,
) -> Result<bool> {
    let n = (p + q + d) as usize;
    if eta.len() != n {
        return Err(Error::LengthMismatch {
            left: eta.len(),
            right: n,
        });
    }
    if mu.len() != p as usize {
        return Err(Error::LengthMismatch {
            left: mu.len(),
            right: p as usize,
        });
    }
    let mu_padded = mu.zero_padded(n);
    let ramp: HalfIntVec = (1..=p as i64)
        .map(|i| HalfInt::from_int(d as i64 + i))
        .collect();
    let ramp_padded = ramp.zero_padded(n);
    let total = eta.add(&mu_padded)?.sub(&ramp_padded)?;
    strictly_dominated(&total, &HalfIntVec::zeros(n))
}

/// The tempered leading-exponent criterion: every prefix sum of v + rho
/// is nonpositive, i.e. v + rho is nonpositive on the closed positive
/// chamber's extreme rays.
pub fn tempered_leading_ok(v: &HalfIntVec, sig: &Signature) -> Result<bool> {
    let shifted = v.add(&rho(sig))?;
    Ok(shifted
        .prefix_sums()
        .iter()
        .all(|&s| s <= HalfInt::ZERO))
}
