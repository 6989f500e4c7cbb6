//! The certification engine: replays the double induction that produces
//! unitary Langlands-Vogan parameters (base tempered datum, identical-pair
//! deletions, quantum-induction steps) and records every verified
//! inequality in an independently replayable certificate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::growth::{decay_exponent, quantum_induction_bound, satisfies_bound, ExponentBound};
use crate::ktypes::{pad_ktype, Sign, SOpqKType};
use crate::rootdata::Signature;
use crate::weights::HalfIntVec;
use crate::young::{v_d, validate_diagram, Flavor, VDResult, YoungDiagram};

/// The parameter to certify: a tempered datum sigma on the base group
/// SO(p-k, q-k) carrying an extended plus-type minimal K-type, and a
/// flavor-matching Young diagram of size 2k giving the continuous
/// parameter through its weighted Dynkin datum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ArthurInput {
    pub sig: Signature,
    pub k: u32,
    pub diagram: YoungDiagram,
    #[serde(rename = "sigmaMinKType")]
    pub sigma_min_ktype: SOpqKType,
    pub sigma_tempered: bool,
}

impl ArthurInput {
    /// A well-formed input over the trivial sigma.
    pub fn with_trivial_sigma(sig: Signature, diagram: YoungDiagram) -> Result<ArthurInput> {
        let k = diagram.k();
        if k > sig.p() {
            return Err(Error::InvalidInput(format!(
                "diagram consumes rank {k} but the signature only has {}",
                sig.p()
            )));
        }
        let input = ArthurInput {
            sig,
            k,
            diagram,
            sigma_min_ktype: SOpqKType::trivial(sig.p() - k, sig.q() - k),
            sigma_tempered: true,
        };
        input.validate()?;
        Ok(input)
    }

    /// Structural invariants: rank budget, diagram size and parity-matched
    /// flavor, and an extended plus-type minimal K-type on the base group
    /// (all-zero weights when a base factor degenerates to rank 0).
    pub fn validate(&self) -> Result<()> {
        let p = self.sig.p();
        let q = self.sig.q();
        if self.k > p {
            return Err(Error::InvalidInput(format!(
                "k = {} exceeds p = {p}",
                self.k
            )));
        }
        if self.diagram.size() != 2 * self.k {
            return Err(Error::InvalidInput(format!(
                "diagram size {} does not equal 2k = {}",
                self.diagram.size(),
                2 * self.k
            )));
        }
        let expected_flavor = if (p + q) % 2 == 0 {
            Flavor::Orthogonal
        } else {
            Flavor::Symplectic
        };
        if self.diagram.flavor() != expected_flavor {
            return Err(Error::InvalidInput(format!(
                "p + q = {} requires a {expected_flavor:?} diagram",
                p + q
            )));
        }
        let (bp, bq) = (p - self.k, q - self.k);
        match &self.sigma_min_ktype {
            SOpqKType::Fused { .. } => Err(Error::InvalidInput(
                "the minimal K-type must be an extended type with sign +".into(),
            )),
            SOpqKType::Extended { xi, eta, sign } => {
                if *sign != Sign::Plus {
                    return Err(Error::InvalidInput(
                        "the minimal K-type must carry sign +".into(),
                    ));
                }
                if (xi.p(), eta.p()) != (bp, bq) {
                    return Err(Error::InvalidInput(format!(
                        "minimal K-type lives on S(O({})O({})) but the base group is S(O({bp})O({bq}))",
                        xi.p(),
                        eta.p()
                    )));
                }
                if !xi.extends_individually() || !eta.extends_individually() {
                    return Err(Error::InvalidInput(
                        "extended K-type requires both factors to extend individually".into(),
                    ));
                }
                let zero = |w: &crate::ktypes::SOWeight| {
                    w.xi().iter().all(|e| *e == crate::weights::HalfInt::ZERO)
                };
                if (bp == 0 || bq == 0) && !(zero(xi) && zero(eta)) {
                    return Err(Error::InvalidInput(
                        "a rank-degenerate base admits only the trivial sigma".into(),
                    ));
                }
                Ok(())
            }
        }
    }
}

/// One derivation step, replayed bottom-up from the tempered base.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum StepKind {
    /// The tempered base datum itself.
    Base,
    /// Deletion of an identical pair (d, d): unitary parabolic induction
    /// through GL(d) with the trivial character.
    #[serde(rename_all = "camelCase")]
    PairDeletion { d: u32 },
    /// A quantum-induction step consuming the descending pair
    /// (dHigh, dLow), possibly with a virtual dLow = 0. Records the dual
    /// pair rank m = (p' + q' + dLow - 1)/2, the GL step
    /// dStep = (dLow + dHigh)/2, and the parameter blocks s = dLow,
    /// t = dHigh.
    #[serde(rename_all = "camelCase")]
    QuantumInduction {
        d_low: u32,
        d_high: u32,
        m: u32,
        d_step: u32,
        s: u32,
        t: u32,
    },
}

pub const CHECK_STABILITY_LOWER: &str = "stabilityLower";
pub const CHECK_STABILITY_UPPER: &str = "stabilityUpper";
pub const CHECK_GROWTH_SCALAR: &str = "growthScalar";
pub const CHECK_GROWTH_VECTOR: &str = "growthVector";

/// A verified comparison, with both operands retained so the verifier can
/// recompute it. Scalar comparisons store singleton vectors.
/// `stabilityLower`/`stabilityUpper`/`growthScalar` compare lhs <= rhs
/// entrywise on singletons; `growthVector` is strict prefix dominance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub pass: bool,
    pub lhs: HalfIntVec,
    pub rhs: HalfIntVec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CertStep {
    #[serde(flatten)]
    pub kind: StepKind,
    pub sig_before: Signature,
    pub sig_after: Signature,
    /// Decay exponent of the module carried into this step, at sigBefore.
    pub decay_before: HalfIntVec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound_checked: Option<ExponentBound>,
    pub checks: Vec<CheckRecord>,
    #[serde(rename = "minKTypeAfter")]
    pub min_ktype_after: SOpqKType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Verdict {
    CertifiedUnitary,
    #[serde(rename_all = "camelCase")]
    NotCovered { reason: String },
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::CertifiedUnitary)
    }
}

/// An immutable derivation: the input, its weighted Dynkin datum, the
/// replayed steps with every checked inequality, and the verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub input: ArthurInput,
    #[serde(rename = "vD")]
    pub v_d: VDResult,
    pub steps: Vec<CertStep>,
    pub verdict: Verdict,
}

/// Steps planned in replay order (base group outward).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PlannedStep {
    Pair(u32),
    Qi { d_low: u32, d_high: u32 },
}

/// Decomposes the diagram into replay-ordered steps.
///
/// The induction removes the smallest identical pair first when one
/// exists, otherwise the top descending pair of the (then all-distinct)
/// parts, padding a virtual 0 when a single part remains. Replay order is
/// the reverse of removal order, so quantum-induction steps come first,
/// consuming pairs from the smallest up, followed by pair deletions.
fn decompose(parts: &[u32]) -> Vec<PlannedStep> {
    fn rec(mut parts: Vec<u32>, plan: &mut Vec<PlannedStep>) {
        if parts.is_empty() {
            return;
        }
        if let Some(i) = (0..parts.len() - 1).find(|&i| parts[i] == parts[i + 1]) {
            let d = parts[i];
            parts.drain(i..i + 2);
            rec(parts, plan);
            plan.push(PlannedStep::Pair(d));
        } else {
            let d_high = parts.pop().expect("nonempty");
            let d_low = parts.pop().unwrap_or(0);
            rec(parts, plan);
            plan.push(PlannedStep::Qi { d_low, d_high });
        }
    }
    let mut plan = Vec::new();
    rec(parts.to_vec(), &mut plan);
    plan
}

/// Decay exponent carried by the module built from the consumed parts,
/// at the given signature: the canonical weighted Dynkin datum of the
/// consumed sub-diagram, zero-padded, minus rho.
fn consumed_decay(consumed: &[u32], flavor: Flavor, sig: &Signature) -> Result<HalfIntVec> {
    let sub = validate_diagram(consumed.to_vec(), flavor)?;
    let datum = v_d(&sub);
    decay_exponent(&datum.canonical.magnitudes, sig)
}

fn scalar_vec(x: i64) -> HalfIntVec {
    HalfIntVec::from_integers(&[x])
}

/// Runs the induction and emits the certificate.
///
/// The replay starts from the tempered base (decay bounded by -rho) and
/// applies the planned steps. Pair deletions need no hypotheses. Each
/// quantum-induction step verifies the stability window
/// p' + q' <= 2m + 1 <= p' + q' + dStep and the growth hypothesis, the
/// latter both as strict dominance of the carried decay exponent by the
/// induction bound and as the scalar comparison
/// max(consumed part) <= dLow; a disagreement between the two growth
/// routes is reported as NotCovered, never resolved silently. The first
/// failed check stops the replay with verdict NotCovered naming it.
pub fn certify(input: &ArthurInput) -> Result<Certificate> {
    input.validate()?;
    let datum = v_d(&input.diagram);
    if !input.sigma_tempered {
        return Ok(Certificate {
            input: input.clone(),
            v_d: datum,
            steps: Vec::new(),
            verdict: Verdict::NotCovered {
                reason: "sigma is not tempered; only tempered base data is covered".into(),
            },
        });
    }
    let flavor = input.diagram.flavor();
    let mut sig = Signature::new(input.sig.p() - input.k, input.sig.q() - input.k);
    let mut ktype = input.sigma_min_ktype.clone();
    let mut consumed: Vec<u32> = Vec::new();

    let mut steps = vec![CertStep {
        kind: StepKind::Base,
        sig_before: sig,
        sig_after: sig,
        decay_before: consumed_decay(&consumed, flavor, &sig)?,
        bound_checked: None,
        checks: Vec::new(),
        min_ktype_after: ktype.clone(),
    }];
    let mut verdict = Verdict::CertifiedUnitary;

    for planned in decompose(input.diagram.parts()) {
        let decay_before = consumed_decay(&consumed, flavor, &sig)?;
        let sum = (sig.p() + sig.q()) as i64;
        let (kind, d_step, bound, checks, failure) = match planned {
            PlannedStep::Pair(d) => (StepKind::PairDeletion { d }, d, None, Vec::new(), None),
            PlannedStep::Qi { d_low, d_high } => {
                let two_m = sum + d_low as i64 - 1;
                if two_m < 0 || two_m % 2 != 0 {
                    return Err(Error::InvalidInput(format!(
                        "dual pair rank is not integral at p'+q' = {sum}, dLow = {d_low}"
                    )));
                }
                let m = (two_m / 2) as u32;
                let d_step = (d_low + d_high) / 2;
                let bound = quantum_induction_bound(sig.p(), sig.q(), m)?;
                let d_prev = consumed.iter().max().copied().unwrap_or(0);

                let mut checks = Vec::new();
                let mut failure: Option<String> = None;
                let mut record = |name: &str, pass: bool, lhs: HalfIntVec, rhs: HalfIntVec,
                                  failure: &mut Option<String>| {
                    if !pass && failure.is_none() {
                        *failure = Some(name.to_string());
                    }
                    checks.push(CheckRecord {
                        name: name.to_string(),
                        pass,
                        lhs,
                        rhs,
                    });
                };

                record(
                    CHECK_STABILITY_LOWER,
                    sum <= two_m + 1,
                    scalar_vec(sum),
                    scalar_vec(two_m + 1),
                    &mut failure,
                );
                record(
                    CHECK_STABILITY_UPPER,
                    two_m + 1 <= sum + d_step as i64,
                    scalar_vec(two_m + 1),
                    scalar_vec(sum + d_step as i64),
                    &mut failure,
                );
                let scalar_pass = d_prev <= d_low;
                record(
                    CHECK_GROWTH_SCALAR,
                    scalar_pass,
                    scalar_vec(d_prev as i64),
                    scalar_vec(d_low as i64),
                    &mut failure,
                );
                // rank 0 leaves nothing to bound; the dominance route is
                // vacuous there
                let vector_pass = if sig.rank() == 0 {
                    true
                } else {
                    satisfies_bound(&decay_before, &bound)?
                };
                record(
                    CHECK_GROWTH_VECTOR,
                    vector_pass,
                    decay_before.clone(),
                    bound.vector.clone(),
                    &mut failure,
                );
                if sig.rank() > 0 && scalar_pass != vector_pass {
                    failure = Some(format!(
                        "growth routes disagree: scalar {scalar_pass}, vector {vector_pass}"
                    ));
                }

                (
                    StepKind::QuantumInduction {
                        d_low,
                        d_high,
                        m,
                        d_step,
                        s: d_low,
                        t: d_high,
                    },
                    d_step,
                    Some(bound),
                    checks,
                    failure,
                )
            }
        };

        let sig_after = Signature::new(sig.p() + d_step, sig.q() + d_step);
        let ktype_after = pad_ktype(&ktype, d_step);
        steps.push(CertStep {
            kind,
            sig_before: sig,
            sig_after,
            decay_before,
            bound_checked: bound,
            checks,
            min_ktype_after: ktype_after.clone(),
        });

        if let Some(name) = failure {
            verdict = Verdict::NotCovered {
                reason: format!("hypothesis failed: {name}"),
            };
            break;
        }

        match planned {
            PlannedStep::Pair(d) => {
                consumed.push(d);
                consumed.push(d);
            }
            PlannedStep::Qi { d_low, d_high } => {
                if d_low > 0 {
                    consumed.push(d_low);
                }
                consumed.push(d_high);
            }
        }
        consumed.sort_unstable();
        sig = sig_after;
        ktype = ktype_after;
    }

    if verdict.is_certified() {
        debug_assert_eq!(sig, input.sig);
        debug_assert_eq!(ktype, pad_ktype(&input.sigma_min_ktype, input.k));
        let mut expected = input.diagram.parts().to_vec();
        expected.sort_unstable();
        debug_assert_eq!(consumed, expected);
    }

    Ok(Certificate {
        input: input.clone(),
        v_d: datum,
        steps,
        verdict,
    })
}

/// The outcome of an independent replay of a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<String>,
}

impl VerifyReport {
    fn fail(msg: impl Into<String>) -> VerifyReport {
        VerifyReport {
            ok: false,
            mismatch: Some(msg.into()),
        }
    }
}

/// Recomputes the whole derivation from the stored input alone and
/// compares it field by field against the stored certificate; reports the
/// first mismatch. A verifier failure on an engine-produced certificate
/// is a bug.
pub fn verify(cert: &Certificate) -> VerifyReport {
    if let Err(e) = cert.input.validate() {
        return VerifyReport::fail(format!("input invalid: {e}"));
    }
    let recomputed = match certify(&cert.input) {
        Ok(c) => c,
        Err(e) => return VerifyReport::fail(format!("replay failed: {e}")),
    };
    if cert.v_d != recomputed.v_d {
        return VerifyReport::fail("vD differs from replay");
    }
    if cert.steps.len() != recomputed.steps.len() {
        return VerifyReport::fail(format!(
            "step count {} differs from replayed {}",
            cert.steps.len(),
            recomputed.steps.len()
        ));
    }
    for (i, (stored, replayed)) in cert.steps.iter().zip(recomputed.steps.iter()).enumerate() {
        for (field, differs) in [
            ("kind", stored.kind != replayed.kind),
            ("sigBefore", stored.sig_before != replayed.sig_before),
            ("sigAfter", stored.sig_after != replayed.sig_after),
            ("decayBefore", stored.decay_before != replayed.decay_before),
            ("boundChecked", stored.bound_checked != replayed.bound_checked),
            ("checks", stored.checks != replayed.checks),
            ("minKTypeAfter", stored.min_ktype_after != replayed.min_ktype_after),
        ] {
            if differs {
                return VerifyReport::fail(format!("steps[{i}].{field} differs from replay"));
            }
        }
    }
    if cert.verdict != recomputed.verdict {
        return VerifyReport::fail("verdict differs from replay");
    }
    if cert.verdict.is_certified() {
        for (i, step) in cert.steps.iter().enumerate() {
            if let Some(check) = step.checks.iter().find(|c| !c.pass) {
                return VerifyReport::fail(format!(
                    "certified verdict but steps[{i}] records failed check {}",
                    check.name
                ));
            }
        }
    }
    VerifyReport {
        ok: true,
        mismatch: None,
    }
}

/// A human-readable account of the derivation: per step, the licensing
/// rule and the inequalities that were verified.
pub fn explain(cert: &Certificate) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "parameter: base S(O({})O({})) datum, diagram {:?} ({:?}), target SO({},{})",
        cert.input.sig.p() - cert.input.k,
        cert.input.sig.q() - cert.input.k,
        cert.input.diagram.parts(),
        cert.input.diagram.flavor(),
        cert.input.sig.p(),
        cert.input.sig.q()
    );
    let _ = writeln!(
        out,
        "weighted Dynkin datum: raw {:?}, canonical {:?} [{:?}]",
        cert.v_d.raw, cert.v_d.canonical.magnitudes, cert.v_d.canonical.class
    );
    for (i, step) in cert.steps.iter().enumerate() {
        match &step.kind {
            StepKind::Base => {
                let _ = writeln!(
                    out,
                    "step {i}: tempered base on SO{} is unitary; decay bounded by -rho = {:?}",
                    step.sig_before, step.decay_before
                );
            }
            StepKind::PairDeletion { d } => {
                let _ = writeln!(
                    out,
                    "step {i}: delete identical pair ({d},{d}): unitary parabolic induction \
                     through GL({d}) with the trivial character, SO{} -> SO{}",
                    step.sig_before, step.sig_after
                );
            }
            StepKind::QuantumInduction {
                d_low,
                d_high,
                m,
                d_step,
                ..
            } => {
                let _ = writeln!(
                    out,
                    "step {i}: quantum induction on the descending pair ({d_high},{d_low}) \
                     through the rank-{m} dual pair, GL step {d_step}, SO{} -> SO{}",
                    step.sig_before, step.sig_after
                );
                for c in &step.checks {
                    let rel = if c.name == CHECK_GROWTH_VECTOR {
                        "strictly dominated by"
                    } else {
                        "<="
                    };
                    let _ = writeln!(
                        out,
                        "        {}: {:?} {rel} {:?} [{}]",
                        c.name,
                        c.lhs,
                        c.rhs,
                        if c.pass { "ok" } else { "FAILED" }
                    );
                }
            }
        }
    }
    match &cert.verdict {
        Verdict::CertifiedUnitary => {
            let final_ktype = cert
                .steps
                .last()
                .map(|s| format!("{:?}", s.min_ktype_after))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "verdict: certified unitary with minimal K-type {final_ktype}"
            );
        }
        Verdict::NotCovered { reason } => {
            let _ = writeln!(out, "verdict: not covered ({reason})");
        }
    }
    out
}
