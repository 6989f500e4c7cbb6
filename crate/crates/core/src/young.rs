//! Orthogonal and symplectic Young diagrams and the weighted Dynkin
//! datum v_D attached to a nilpotent orbit.
//!
//! A diagram is a partition of an even number 2k; orthogonal diagrams
//! classify nilpotent orbits of so(2k, C) (even parts in even
//! multiplicity), symplectic diagrams those of sp(2k, C) (odd parts in
//! even multiplicity). The datum v_D is the semisimple half of the
//! attached sl2-triple, read off block by block.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::{weyl_canonical, CanonicalWeight, HalfInt, HalfIntVec, SignClass, WeylType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Orthogonal,
    Symplectic,
}

/// A validated partition with ascending parts and a flavor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DiagramRepr", into = "DiagramRepr")]
pub struct YoungDiagram {
    parts: Vec<u32>,
    flavor: Flavor,
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    parts: Vec<u32>,
    flavor: Flavor,
}

impl TryFrom<DiagramRepr> for YoungDiagram {
    type Error = Error;
    fn try_from(r: DiagramRepr) -> Result<Self> {
        validate_diagram(r.parts, r.flavor)
    }
}

impl From<YoungDiagram> for DiagramRepr {
    fn from(d: YoungDiagram) -> Self {
        DiagramRepr {
            parts: d.parts,
            flavor: d.flavor,
        }
    }
}

impl YoungDiagram {
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Half the size; the rank of the ambient classical algebra.
    pub fn k(&self) -> u32 {
        self.size() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Sorts, then checks the flavor's multiplicity rule and that the total
/// size is even.
pub fn validate_diagram(mut parts: Vec<u32>, flavor: Flavor) -> Result<YoungDiagram> {
    if parts.contains(&0) {
        return Err(Error::InvalidDiagram("parts must be positive".into()));
    }
    parts.sort_unstable();
    let size: u32 = parts.iter().sum();
    if size % 2 != 0 {
        return Err(Error::InvalidDiagram(format!(
            "total size {size} is odd"
        )));
    }
    let constrained_parity = match flavor {
        Flavor::Orthogonal => 0,
        Flavor::Symplectic => 1,
    };
    let mut i = 0;
    while i < parts.len() {
        let d = parts[i];
        let mut mult = 0;
        while i < parts.len() && parts[i] == d {
            mult += 1;
            i += 1;
        }
        if d % 2 == constrained_parity && mult % 2 != 0 {
            return Err(Error::InvalidDiagram(format!(
                "part {d} occurs {mult} times; {} parts need even multiplicity",
                match flavor {
                    Flavor::Orthogonal => "even",
                    Flavor::Symplectic => "odd",
                }
            )));
        }
    }
    Ok(YoungDiagram { parts, flavor })
}

/// Whether an orthogonal diagram has only even parts (the orbits that
/// split into two SO-classes).
///
/// The empty diagram is not considered very even: rank 0 carries a single
/// class.
pub fn is_very_even(d: &YoungDiagram) -> Result<bool> {
    if d.flavor != Flavor::Orthogonal {
        return Err(Error::InvalidDiagram(
            "very-even is defined for orthogonal diagrams only".into(),
        ));
    }
    Ok(!d.parts.is_empty() && d.parts.iter().all(|p| p % 2 == 0))
}

/// The weighted Dynkin datum of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "VDRepr", into = "VDRepr")]
pub struct VDResult {
    /// The block-by-block construction before canonicalization.
    pub raw: HalfIntVec,
    /// Canonical form of `raw` under the type-D (orthogonal) or type-B
    /// (symplectic) Weyl group.
    pub canonical: CanonicalWeight,
    pub very_even: bool,
    /// Both sign classes for a very even orthogonal diagram; otherwise
    /// the single canonical class (omitted from JSON in that case).
    pub classes: Vec<CanonicalWeight>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct VDRepr {
    raw: HalfIntVec,
    canonical: CanonicalWeight,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    very_even: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    classes: Vec<CanonicalWeight>,
}

impl From<VDRepr> for VDResult {
    fn from(r: VDRepr) -> Self {
        let classes = if r.classes.is_empty() {
            vec![r.canonical.clone()]
        } else {
            r.classes
        };
        VDResult {
            raw: r.raw,
            canonical: r.canonical,
            very_even: r.very_even,
            classes,
        }
    }
}

impl From<VDResult> for VDRepr {
    fn from(v: VDResult) -> Self {
        let classes = if v.classes.len() <= 1 {
            Vec::new()
        } else {
            v.classes
        };
        VDRepr {
            raw: v.raw,
            canonical: v.canonical,
            very_even: v.very_even,
            classes,
        }
    }
}

/// String ((d-1)/2, (d-3)/2, ..., (1-d)/2) of an identical pair (d, d).
fn identical_pair_string(d: u32) -> HalfIntVec {
    let d = d as i64;
    (0..d).map(|j| HalfInt::from_doubled(d - 1 - 2 * j)).collect()
}

/// String ((hi-1)/2, ..., 1, 0, -1, ..., (1-lo)/2) of a descending odd
/// pair, hi >= lo.
fn odd_pair_string(hi: u32, lo: u32) -> HalfIntVec {
    let top = (hi as i64 - 1) / 2;
    let bottom = (1 - lo as i64) / 2;
    (bottom..=top).rev().map(HalfInt::from_int).collect()
}

/// String ((d-1)/2, (d-3)/2, ..., 1/2) of a lone even part.
fn even_single_string(d: u32) -> HalfIntVec {
    let d = d as i64;
    (0..d / 2)
        .map(|j| HalfInt::from_doubled(d - 1 - 2 * j))
        .collect()
}

/// Splits the parts into identical pairs and the leftover single parts,
/// both descending.
fn split_identical_pairs(parts: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut pairs = Vec::new();
    let mut leftovers = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        if i + 1 < parts.len() && parts[i] == parts[i + 1] {
            pairs.push(parts[i]);
            i += 2;
        } else {
            leftovers.push(parts[i]);
            i += 1;
        }
    }
    pairs.reverse();
    leftovers.reverse();
    (pairs, leftovers)
}

/// The weighted Dynkin datum v_D.
///
/// Identical pairs (d, d) contribute the full string of length d. For an
/// orthogonal diagram the leftover parts are all odd and even in number;
/// they are paired in descending order, each pair contributing the
/// integer string from (d_hi - 1)/2 down to (1 - d_lo)/2. For a
/// symplectic diagram each leftover part is even and contributes its
/// positive half-string. The raw vector concatenates the descending-pair
/// strings, largest first, then the identical-pair strings, largest
/// first; the canonical form does not depend on this order.
pub fn v_d(d: &YoungDiagram) -> VDResult {
    let (pairs, leftovers) = split_identical_pairs(&d.parts);
    let mut raw = HalfIntVec::empty();
    match d.flavor {
        Flavor::Orthogonal => {
            debug_assert!(leftovers.len() % 2 == 0);
            debug_assert!(leftovers.iter().all(|p| p % 2 == 1));
            for pair in leftovers.chunks(2) {
                raw.extend_from(&odd_pair_string(pair[0], pair[1]));
            }
        }
        Flavor::Symplectic => {
            debug_assert!(leftovers.iter().all(|p| p % 2 == 0));
            for &part in &leftovers {
                raw.extend_from(&even_single_string(part));
            }
        }
    }
    for &pair in &pairs {
        raw.extend_from(&identical_pair_string(pair));
    }
    debug_assert_eq!(raw.len(), d.k() as usize);

    let weyl_type = match d.flavor {
        Flavor::Orthogonal => WeylType::D,
        Flavor::Symplectic => WeylType::B,
    };
    let canonical = weyl_canonical(&raw, weyl_type);
    let very_even = d.flavor == Flavor::Orthogonal && is_very_even(d).unwrap();
    let classes = if very_even {
        debug_assert_ne!(canonical.class, SignClass::Merged);
        let plus = CanonicalWeight {
            magnitudes: canonical.magnitudes.clone(),
            class: SignClass::Plus,
        };
        vec![plus.clone(), plus.sign_twin()]
    } else {
        vec![canonical.clone()]
    };
    VDResult {
        raw,
        canonical,
        very_even,
        classes,
    }
}

/// The multiset of halved H-eigenvalues of the sl2-triple attached to the
/// diagram, on the defining representation: the union over parts d of the
/// spin strings ((d-1)/2, (d-3)/2, ..., (1-d)/2). Sorted nonincreasing.
///
/// This is independent of the pairing bookkeeping in `v_d` and serves as
/// its oracle: the signed entries of the raw datum must reproduce it.
pub fn h_spectrum_oracle(d: &YoungDiagram) -> Vec<HalfInt> {
    let mut spectrum: Vec<HalfInt> = d
        .parts
        .iter()
        .flat_map(|&part| {
            let p = part as i64;
            (0..p).map(move |j| HalfInt::from_doubled(p - 1 - 2 * j))
        })
        .collect();
    spectrum.sort_unstable_by(|a, b| b.cmp(a));
    spectrum
}
