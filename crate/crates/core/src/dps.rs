//! Composition-series data for the degenerate principal series of
//! SO(n,n) induced from |det|^s on the Siegel parabolic: which
//! constituents exist at a reducibility point, which diagonal K-types they
//! carry, which are unitary, and the decay data of the small spherical
//! constituents.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ktypes::{Sign, SOWeight};
use crate::weights::{HalfInt, HalfIntVec};

/// A point (n, s) of the family. Constituent queries additionally require
/// s to lie on the reducibility grid (n-1)/2 + Z.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DPSPoint {
    pub n: u32,
    pub s: HalfInt,
}

impl DPSPoint {
    pub fn new(n: u32, s: HalfInt) -> Result<DPSPoint> {
        if n < 2 {
            return Err(Error::OutOfRange(format!("n must be >= 2, got {n}")));
        }
        Ok(DPSPoint { n, s })
    }

    /// Whether s lies on the reducibility grid (n-1)/2 + Z.
    pub fn on_grid(&self) -> bool {
        (self.s - self.half_n_minus_1()).is_integer()
    }

    fn half_n_minus_1(&self) -> HalfInt {
        HalfInt::from_doubled(self.n as i64 - 1)
    }

    fn require_grid(&self) -> Result<()> {
        if self.on_grid() {
            Ok(())
        } else {
            Err(Error::OffGrid {
                n: self.n,
                s: self.s.to_string(),
            })
        }
    }

    /// The index cutoff (n-1)/2 - |s|: small constituents exist from this
    /// index upward.
    fn cutoff(&self) -> HalfInt {
        self.half_n_minus_1() - self.s.abs()
    }
}

/// Names one composition factor: `Small(i)` for the indexed constituents
/// (including the large one at i = (n-1)/2 for odd n), `Large(+-)` for the
/// two large constituents of even n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstituentId {
    Small(u32),
    Large(Sign),
}

/// All constituent ids that can occur for this n, in a fixed order.
/// Empty for n < 2.
pub fn constituent_ids(n: u32) -> Vec<ConstituentId> {
    if n < 2 {
        return Vec::new();
    }
    let mut ids: Vec<ConstituentId> = (0..=(n - 1) / 2).map(ConstituentId::Small).collect();
    if n % 2 == 0 {
        ids.push(ConstituentId::Large(Sign::Plus));
        ids.push(ConstituentId::Large(Sign::Minus));
    }
    ids
}

/// The infinitesimal character ((n-1)/2 + s, (n-3)/2 + s, ..., -(n-1)/2 + s).
pub fn infinitesimal_char(pt: &DPSPoint) -> HalfIntVec {
    let n = pt.n as i64;
    (0..n)
        .map(|j| HalfInt::from_doubled(n - 1 - 2 * j) + pt.s)
        .collect()
}

/// Whether the named composition factor exists at this grid point.
///
/// A small index i exists iff i >= (n-1)/2 - |s| (and i stays within the
/// index range for the parity of n); the two large constituents of even n
/// always exist.
pub fn constituent_exists(pt: &DPSPoint, c: ConstituentId) -> Result<bool> {
    pt.require_grid()?;
    match c {
        ConstituentId::Large(_) => {
            if pt.n % 2 != 0 {
                return Err(Error::NoConstituent(format!(
                    "large(+-) requires even n, got n = {}",
                    pt.n
                )));
            }
            Ok(true)
        }
        ConstituentId::Small(i) => {
            let max = if pt.n % 2 == 0 {
                pt.n / 2 - 1
            } else {
                (pt.n - 1) / 2
            };
            if i > max {
                return Ok(false);
            }
            Ok(HalfInt::from_int(i as i64) >= pt.cutoff())
        }
    }
}

fn require_exists(pt: &DPSPoint, c: ConstituentId) -> Result<()> {
    if constituent_exists(pt, c)? {
        Ok(())
    } else {
        Err(Error::NoConstituent(format!(
            "{c:?} does not exist at n = {}, s = {}",
            pt.n, pt.s
        )))
    }
}

/// Whether the diagonal K-type (lambda, lambda) belongs to the named
/// constituent.
///
/// Small i: lambda_i >= c_i >= lambda_{i+1} with c_i = |s| - (n-1)/2 + i,
/// reading lambda_0 = +infinity, entries beyond the weight length as 0,
/// and the absolute value of the final coordinate when n is even and i+1
/// lands on it. Large(+-): +-lambda_{n/2} >= |s| + 1/2.
pub fn ktype_in_constituent(pt: &DPSPoint, c: ConstituentId, lambda: &SOWeight) -> Result<bool> {
    require_exists(pt, c)?;
    if lambda.p() != pt.n {
        return Err(Error::InvalidWeight {
            p: lambda.p(),
            reason: format!("expected an SO({}) weight", pt.n),
        });
    }
    let xi = lambda.xi();
    let len = xi.len();
    match c {
        ConstituentId::Large(sign) => {
            let last = xi[len - 1];
            let signed = match sign {
                Sign::Plus => last,
                Sign::Minus => -last,
            };
            Ok(signed >= pt.s.abs() + HalfInt::from_doubled(1))
        }
        ConstituentId::Small(i) => {
            let i = i as usize;
            let c_i = pt.s.abs() - pt.half_n_minus_1() + HalfInt::from_int(i as i64);
            // left endpoint: lambda_i with lambda_0 = +infinity
            if i >= 1 {
                let left = xi.get(i - 1).unwrap_or(HalfInt::ZERO);
                if left < c_i {
                    return Ok(false);
                }
            }
            // right endpoint: |.| on the final coordinate of an even-n
            // weight, 0 beyond the weight length
            let right = match xi.get(i) {
                None => HalfInt::ZERO,
                Some(e) => {
                    if pt.n % 2 == 0 && i + 1 == len {
                        e.abs()
                    } else {
                        e
                    }
                }
            };
            Ok(c_i >= right)
        }
    }
}

/// Whether the named constituent is unitary: the small constituent at
/// index (n-1)/2 - |s| (when that lands in range), and every large
/// constituent of even n.
pub fn constituent_is_unitary(pt: &DPSPoint, c: ConstituentId) -> Result<bool> {
    require_exists(pt, c)?;
    match c {
        ConstituentId::Large(_) => Ok(true),
        ConstituentId::Small(i) => Ok(HalfInt::from_int(i as i64) == pt.cutoff()),
    }
}

/// The infinitesimal character of the small spherical constituent at
/// s = (n-1)/2 - m: the block (n-m-1, n-m-2, ..., m) followed by
/// (m, m-1, m-1, ..., 1, 1, 0).
pub fn eta(n: u32, m: u32) -> Result<HalfIntVec> {
    check_m(n, m)?;
    let n = n as i64;
    let m = m as i64;
    let mut v: Vec<HalfInt> = (m..=(n - m - 1)).rev().map(HalfInt::from_int).collect();
    if m > 0 {
        v.push(HalfInt::from_int(m));
        for j in (1..m).rev() {
            v.push(HalfInt::from_int(j));
            v.push(HalfInt::from_int(j));
        }
        v.push(HalfInt::ZERO);
    }
    debug_assert_eq!(v.len(), n as usize);
    Ok(HalfIntVec::new(v))
}

/// The decay exponent bounding the matrix coefficients of the small
/// constituent: -m repeated n-2m times, then the doubled ramp
/// (-m+1, -m+1, ..., -1, -1, 0, 0).
pub fn vm_decay_exponent(n: u32, m: u32) -> Result<HalfIntVec> {
    check_m(n, m)?;
    let n = n as i64;
    let m = m as i64;
    let mut v: Vec<HalfInt> =
        std::iter::repeat_n(HalfInt::from_int(-m), (n - 2 * m) as usize).collect();
    for j in (0..m).rev() {
        v.push(HalfInt::from_int(-j));
        v.push(HalfInt::from_int(-j));
    }
    debug_assert_eq!(v.len(), n as usize);
    Ok(HalfIntVec::new(v))
}

fn check_m(n: u32, m: u32) -> Result<()> {
    if n < 2 || m > (n - 1) / 2 {
        Err(Error::OutOfRange(format!(
            "m must satisfy 0 <= m <= (n-1)/2, got n = {n}, m = {m}"
        )))
    } else {
        Ok(())
    }
}

/// The normalized spherical matrix coefficient profile
/// prod_i (e^{H_i} + e^{-H_i})^{-1/2}.
///
/// The only floating-point computation in the library; used for
/// diagnostic decay profiles, never in any certified arithmetic.
pub fn fn_eval(h: &[f64]) -> f64 {
    h.iter().map(|&x| (x.exp() + (-x).exp()).powf(-0.5)).product()
}
