//! Acceptance suite: each test is one exit criterion, exhaustive at desk
//! scale, and prints a pass line with the volume it covered.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sopq::certify::{certify, verify, ArthurInput, StepKind, Verdict};
use sopq::dps::{
    constituent_exists, constituent_ids, infinitesimal_char, ktype_in_constituent, DPSPoint,
};
use sopq::growth::quantum_induction_bound;
use sopq::ktypes::{pad_ktype, Sign, SOpqKType, SOWeight};
use sopq::rootdata::Signature;
use sopq::weights::{
    abs_vec, rearrange_desc, strictly_dominated, weakly_dominated, weyl_canonical, HalfInt,
    HalfIntVec, SignClass, WeylType,
};
use sopq::young::{h_spectrum_oracle, v_d, validate_diagram, Flavor, YoungDiagram};

/// Ascending partitions of `total`.
fn partitions(total: u32) -> Vec<Vec<u32>> {
    fn rec(total: u32, min_part: u32) -> Vec<Vec<u32>> {
        if total == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in min_part..=total {
            for rest in rec(total - first, first) {
                let mut parts = vec![first];
                parts.extend(rest);
                out.push(parts);
            }
        }
        out
    }
    rec(total, 1)
}

fn valid_diagrams(size: u32, flavor: Flavor) -> Vec<YoungDiagram> {
    partitions(size)
        .into_iter()
        .filter_map(|parts| validate_diagram(parts, flavor).ok())
        .collect()
}

/// Criterion 1: the signed raw entries of v_D reproduce the sl2
/// H-spectrum for every valid diagram of size <= 16.
#[test]
fn criterion_1_vd_spectrum_oracle() {
    let start = Instant::now();
    let mut checked = 0usize;
    for size in (2..=16u32).step_by(2) {
        for flavor in [Flavor::Orthogonal, Flavor::Symplectic] {
            for diagram in valid_diagrams(size, flavor) {
                let result = v_d(&diagram);
                assert_eq!(result.raw.len() as u32, diagram.k());
                let mut signed: Vec<HalfInt> =
                    result.raw.iter().flat_map(|&e| [e, -e]).collect();
                signed.sort_unstable_by(|a, b| b.cmp(a));
                assert_eq!(
                    signed,
                    h_spectrum_oracle(&diagram),
                    "diagram {:?} {:?}",
                    diagram.parts(),
                    flavor
                );
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(checked >= 300, "only {checked} diagrams enumerated");
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    println!("[PASS] criterion 1: v_D spectrum oracle on {checked} diagrams in {elapsed:?}");
}

/// Criterion 2: full Weyl orbits canonicalize to a single value, with
/// type-D parity classes respected; 10^4 random vectors of rank <= 5.
#[test]
fn criterion_2_weyl_orbit_canonicalization() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x2f2f);
    let mut orbit_elements = 0usize;
    for _ in 0..10_000 {
        let rank = rng.gen_range(0..=5usize);
        let doubled: Vec<i64> = (0..rank).map(|_| rng.gen_range(-3..=3)).collect();
        let v = HalfIntVec::new(doubled.iter().map(|&d| HalfInt::from_doubled(d)).collect());
        let has_zero = doubled.contains(&0);

        let canonical_b = weyl_canonical(&v, WeylType::B);
        let canonical_d = weyl_canonical(&v, WeylType::D);
        let twin_d = canonical_d.sign_twin();
        if has_zero || rank == 0 {
            assert_eq!(canonical_d.class, SignClass::Merged);
        }

        // unique permutations of the entries
        let mut perms: Vec<Vec<i64>> = itertools::Itertools::permutations(
            doubled.iter().copied(),
            rank,
        )
        .collect();
        perms.sort_unstable();
        perms.dedup();

        for perm in &perms {
            for mask in 0u32..(1 << rank) {
                let flipped: HalfIntVec = perm
                    .iter()
                    .enumerate()
                    .map(|(i, &d)| {
                        let s = if mask & (1 << i) != 0 { -d } else { d };
                        HalfInt::from_doubled(s)
                    })
                    .collect();
                orbit_elements += 1;

                // type B: every sign pattern is in the orbit
                assert_eq!(weyl_canonical(&flipped, WeylType::B), canonical_b);

                // type D: even flips stay in the class, odd flips land in
                // the twin; with a zero entry the classes merge entirely
                let got = weyl_canonical(&flipped, WeylType::D);
                if !has_zero && mask.count_ones() % 2 == 1 {
                    assert_eq!(got, twin_d);
                } else {
                    assert_eq!(got, canonical_d);
                }
            }
        }
    }
    let elapsed = start.elapsed();
    println!(
        "[PASS] criterion 2: 10^4 random vectors, {orbit_elements} orbit elements canonicalized in {elapsed:?}"
    );
}

fn enumerate_so_weights(n: u32, bound: i64) -> Vec<SOWeight> {
    fn rec(n: u32, rank: usize, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<SOWeight>) {
        if cur.len() == rank {
            out.push(SOWeight::from_integers(n, cur).unwrap());
            return;
        }
        let max = cur.last().copied().unwrap_or(bound);
        let min = if cur.len() == rank - 1 && n % 2 == 0 {
            -max
        } else {
            0
        };
        for v in (min..=max).rev() {
            cur.push(v);
            rec(n, rank, bound, cur, out);
            cur.pop();
        }
    }
    let rank = (n / 2) as usize;
    let mut out = Vec::new();
    rec(n, rank, bound, &mut Vec::with_capacity(rank), &mut out);
    out
}

/// Criterion 3: at every grid point with |s| <= (n-1)/2 + 2, n <= 8, each
/// diagonal K-type with entries in [-6, 6] lies in exactly one existing
/// constituent.
#[test]
fn criterion_3_dps_partition() {
    let start = Instant::now();
    let mut checked = 0usize;
    for n in 2..=8u32 {
        let weights = enumerate_so_weights(n, 6);
        let ids = constituent_ids(n);
        // grid points s = (n-1)/2 - j with |s| <= (n-1)/2 + 2
        let half = HalfInt::from_doubled(n as i64 - 1);
        let bound = half + HalfInt::from_int(2);
        let mut s = -bound;
        while s <= bound {
            let pt = DPSPoint::new(n, s).unwrap();
            for lambda in &weights {
                let homes = ids
                    .iter()
                    .filter(|&&id| {
                        constituent_exists(&pt, id).unwrap()
                            && ktype_in_constituent(&pt, id, lambda).unwrap()
                    })
                    .count();
                assert_eq!(
                    homes, 1,
                    "n={n} s={s} lambda={:?} sits in {homes} constituents",
                    lambda.xi()
                );
                checked += 1;
            }
            s += HalfInt::from_int(1);
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    println!("[PASS] criterion 3: partition verified for {checked} (n, s, lambda) triples in {elapsed:?}");
}

/// Criterion 4: the sorted absolute infinitesimal character at
/// s = (n-1)/2 - m equals eta(n, m), for all n <= 12.
#[test]
fn criterion_4_eta_consistency() {
    let mut checked = 0usize;
    for n in 2..=12u32 {
        for m in 0..=(n - 1) / 2 {
            let s = HalfInt::from_doubled(n as i64 - 1) - HalfInt::from_int(m as i64);
            let pt = DPSPoint::new(n, s).unwrap();
            assert_eq!(
                rearrange_desc(&abs_vec(&infinitesimal_char(&pt))),
                sopq::dps::eta(n, m).unwrap(),
                "n={n} m={m}"
            );
            checked += 1;
        }
    }
    println!("[PASS] criterion 4: eta consistency for {checked} (n, m) pairs");
}

/// Criterion 5: the induction bound plus the basic spherical decay
/// (-m, -m+1, ..., -m+p-1) telescopes to the integrable staircase
/// (2-p-q, 4-p-q, ...), entrywise exactly.
#[test]
fn criterion_5_integrability_identity() {
    let mut checked = 0usize;
    for p in 1..=6u32 {
        for q in p..=6 {
            for m in 0..=((p + q + 4) / 2) {
                let t = 2 * m + 2;
                if t < p + q || t > p + q + 6 {
                    continue;
                }
                let bound = quantum_induction_bound(p, q, m).unwrap();
                for i in 0..p as i64 {
                    let total = bound.vector[i as usize]
                        + HalfInt::from_int(-(m as i64) + i);
                    let expected = HalfInt::from_int(2 * (i + 1) - (p + q) as i64);
                    assert_eq!(total, expected, "p={p} q={q} m={m} i={i}");
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
    println!("[PASS] criterion 5: integrability identity on {checked} (p, q, m) triples");
}

/// A nonzero extended plus-type weight on SO(p), when one exists below
/// the trivial bound; otherwise the trivial weight.
fn nonzero_extendable_weight(p: u32) -> SOWeight {
    let rank = (p / 2) as usize;
    if rank == 0 || (p % 2 == 0 && rank == 1) {
        return SOWeight::trivial(p);
    }
    let mut entries = vec![0i64; rank];
    entries[0] = 1;
    SOWeight::from_integers(p, &entries).unwrap()
}

fn sigma_choices(bp: u32, bq: u32) -> Vec<SOpqKType> {
    let trivial = SOpqKType::trivial(bp, bq);
    if bp == 0 || bq == 0 {
        return vec![trivial];
    }
    let nonzero = SOpqKType::extended(
        nonzero_extendable_weight(bp),
        nonzero_extendable_weight(bq),
        Sign::Plus,
    );
    if nonzero == trivial {
        vec![trivial]
    } else {
        vec![trivial, nonzero]
    }
}

/// Criterion 6: every flavor-matching diagram certifies for all
/// 1 <= p <= q <= 6, 0 <= k <= p-1, the final minimal K-type is the
/// padded input K-type, and the verifier replays every certificate.
#[test]
fn criterion_6_certification_completeness() {
    let start = Instant::now();
    let mut certified = 0usize;
    for p in 1..=6u32 {
        for q in p..=6 {
            let sig = Signature::new(p, q);
            let flavor = if (p + q) % 2 == 0 {
                Flavor::Orthogonal
            } else {
                Flavor::Symplectic
            };
            for k in 0..p {
                for diagram in valid_diagrams(2 * k, flavor) {
                    for sigma in sigma_choices(p - k, q - k) {
                        let input = ArthurInput {
                            sig,
                            k,
                            diagram: diagram.clone(),
                            sigma_min_ktype: sigma.clone(),
                            sigma_tempered: true,
                        };
                        let cert = certify(&input).unwrap();
                        assert_eq!(
                            cert.verdict,
                            Verdict::CertifiedUnitary,
                            "p={p} q={q} k={k} parts={:?}",
                            diagram.parts()
                        );
                        let last = cert.steps.last().unwrap();
                        assert_eq!(last.min_ktype_after, pad_ktype(&sigma, k));
                        assert_eq!(last.sig_after, sig);

                        // the steps consume the diagram exactly
                        let mut consumed: Vec<u32> = Vec::new();
                        for step in &cert.steps {
                            match step.kind {
                                StepKind::Base => {}
                                StepKind::PairDeletion { d } => consumed.extend([d, d]),
                                StepKind::QuantumInduction { d_low, d_high, .. } => {
                                    if d_low > 0 {
                                        consumed.push(d_low);
                                    }
                                    consumed.push(d_high);
                                }
                            }
                        }
                        consumed.sort_unstable();
                        assert_eq!(consumed, diagram.parts());

                        let report = verify(&cert);
                        assert!(report.ok, "{:?}", report.mismatch);
                        certified += 1;
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}");
    println!(
        "[PASS] criterion 6: {certified} parameters certified and replayed in {elapsed:?}"
    );
}

mod tamper {
    use super::*;
    use serde_json::Value;

    pub enum Seg {
        Key(String),
        Idx(usize),
    }

    pub fn collect_leaves(v: &Value, path: &mut Vec<Seg>, out: &mut Vec<Vec<Seg>>) {
        match v {
            Value::Object(map) => {
                for (k, child) in map {
                    path.push(Seg::Key(k.clone()));
                    collect_leaves(child, path, out);
                    path.pop();
                }
            }
            Value::Array(arr) => {
                for (i, child) in arr.iter().enumerate() {
                    path.push(Seg::Idx(i));
                    collect_leaves(child, path, out);
                    path.pop();
                }
            }
            _ => out.push(
                path.iter()
                    .map(|s| match s {
                        Seg::Key(k) => Seg::Key(k.clone()),
                        Seg::Idx(i) => Seg::Idx(*i),
                    })
                    .collect(),
            ),
        }
    }

    pub fn leaf_mut<'a>(v: &'a mut Value, path: &[Seg]) -> &'a mut Value {
        path.iter().fold(v, |acc, seg| match seg {
            Seg::Key(k) => acc.get_mut(k).unwrap(),
            Seg::Idx(i) => acc.get_mut(i).unwrap(),
        })
    }

    /// Type-preserving single-leaf mutation that always changes the value.
    pub fn mutate(leaf: &mut Value, rng: &mut ChaCha8Rng) {
        match leaf {
            Value::Bool(b) => *leaf = Value::Bool(!*b),
            Value::Number(n) => {
                let x = n.as_i64().expect("integral");
                let delta = if rng.gen_bool(0.5) { 1 } else { -1 };
                *leaf = Value::from(x + delta);
            }
            Value::String(s) => {
                let replacement = match s.as_str() {
                    "+" => "-".to_string(),
                    "-" => "+".to_string(),
                    "plus" => "minus".to_string(),
                    "minus" => "plus".to_string(),
                    "merged" => "plus".to_string(),
                    "orthogonal" => "symplectic".to_string(),
                    "symplectic" => "orthogonal".to_string(),
                    "base" => "pairDeletion".to_string(),
                    "pairDeletion" => "base".to_string(),
                    "quantumInduction" => "base".to_string(),
                    "extended" => "fused".to_string(),
                    "fused" => "extended".to_string(),
                    "certifiedUnitary" => "somethingElse".to_string(),
                    other => match other.parse::<HalfInt>() {
                        Ok(h) => (h + HalfInt::from_doubled(1)).to_string(),
                        Err(_) => format!("{other}x"),
                    },
                };
                *leaf = Value::String(replacement);
            }
            other => panic!("unexpected leaf {other:?}"),
        }
    }
}

/// Criterion 7: 1000 random single-field mutations of valid certificates
/// are all rejected, either failing to deserialize or failing replay.
#[test]
fn criterion_7_tamper_resistance() {
    use tamper::*;

    let sig = Signature::new;
    let diagram = |parts: &[u32], f| validate_diagram(parts.to_vec(), f).unwrap();
    let mut pool: Vec<serde_json::Value> = Vec::new();
    let inputs = vec![
        ArthurInput::with_trivial_sigma(sig(3, 3), diagram(&[1, 3], Flavor::Orthogonal)).unwrap(),
        ArthurInput::with_trivial_sigma(sig(3, 3), diagram(&[2, 2], Flavor::Orthogonal)).unwrap(),
        ArthurInput::with_trivial_sigma(sig(2, 3), diagram(&[2], Flavor::Symplectic)).unwrap(),
        ArthurInput::with_trivial_sigma(sig(4, 5), diagram(&[1, 1, 2, 4], Flavor::Symplectic))
            .unwrap(),
        ArthurInput::with_trivial_sigma(sig(5, 5), diagram(&[1, 1, 3, 5], Flavor::Orthogonal))
            .unwrap(),
        ArthurInput::with_trivial_sigma(sig(6, 6), diagram(&[2, 2, 4, 4], Flavor::Orthogonal))
            .unwrap(),
        ArthurInput {
            sig: sig(4, 4),
            k: 2,
            diagram: diagram(&[1, 3], Flavor::Orthogonal),
            sigma_min_ktype: SOpqKType::extended(
                SOWeight::from_integers(2, &[0]).unwrap(),
                SOWeight::from_integers(2, &[0]).unwrap(),
                Sign::Plus,
            ),
            sigma_tempered: true,
        },
        {
            let mut untempered =
                ArthurInput::with_trivial_sigma(sig(3, 3), diagram(&[1, 3], Flavor::Orthogonal))
                    .unwrap();
            untempered.sigma_tempered = false;
            untempered
        },
    ];
    for input in &inputs {
        let cert = certify(input).unwrap();
        assert!(verify(&cert).ok);
        pool.push(serde_json::to_value(&cert).unwrap());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x7a3b);
    let mut rejected_parse = 0usize;
    let mut rejected_verify = 0usize;
    for trial in 0..1000 {
        let original = &pool[rng.gen_range(0..pool.len())];
        let mut mutated = original.clone();
        let mut leaves = Vec::new();
        collect_leaves(&mutated, &mut Vec::new(), &mut leaves);
        let path = &leaves[rng.gen_range(0..leaves.len())];
        mutate(leaf_mut(&mut mutated, path), &mut rng);
        assert_ne!(&mutated, original, "mutation was a no-op");

        match serde_json::from_value::<sopq::certify::Certificate>(mutated) {
            Err(_) => rejected_parse += 1,
            Ok(cert) => {
                let report = verify(&cert);
                assert!(
                    !report.ok,
                    "trial {trial}: mutation survived verification"
                );
                rejected_verify += 1;
            }
        }
    }
    println!(
        "[PASS] criterion 7: 1000 mutations rejected ({rejected_parse} at parse, {rejected_verify} at replay)"
    );
}

/// Criterion 8: dominance-order axioms on 10^4 random triples built so
/// the premises hold: transitivity of both orders, and strict implies
/// weak.
#[test]
fn criterion_8_dominance_axioms() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x8888);

    // a vector whose prefix sums are all >= 0 (> 0 for strict)
    fn dominating_delta(rng: &mut ChaCha8Rng, len: usize, strict: bool) -> HalfIntVec {
        let mut prefixes: Vec<i64> = (0..len)
            .map(|_| rng.gen_range(if strict { 1 } else { 0 }..=8))
            .collect();
        // prefix sums are free-form nonnegative; recover the entries
        let mut entries = Vec::with_capacity(len);
        let mut prev = 0i64;
        for p in prefixes.drain(..) {
            entries.push(HalfInt::from_doubled(p - prev));
            prev = p;
        }
        HalfIntVec::new(entries)
    }

    for _ in 0..10_000 {
        let len = rng.gen_range(1..=6usize);
        let a: HalfIntVec = (0..len)
            .map(|_| HalfInt::from_doubled(rng.gen_range(-6..=6)))
            .collect();

        // weak transitivity on a constructed ascending chain
        let b = a.add(&dominating_delta(&mut rng, len, false)).unwrap();
        let c = b.add(&dominating_delta(&mut rng, len, false)).unwrap();
        assert!(weakly_dominated(&a, &b).unwrap());
        assert!(weakly_dominated(&b, &c).unwrap());
        assert!(weakly_dominated(&a, &c).unwrap());

        // strict transitivity and strict => weak
        let bs = a.add(&dominating_delta(&mut rng, len, true)).unwrap();
        let cs = bs.add(&dominating_delta(&mut rng, len, true)).unwrap();
        assert!(strictly_dominated(&a, &bs).unwrap());
        assert!(strictly_dominated(&bs, &cs).unwrap());
        assert!(strictly_dominated(&a, &cs).unwrap());
        assert!(weakly_dominated(&a, &bs).unwrap());
        assert!(weakly_dominated(&a, &cs).unwrap());

        // irreflexivity of the strict order, reflexivity of the weak one
        assert!(!strictly_dominated(&a, &a).unwrap());
        assert!(weakly_dominated(&a, &a).unwrap());

        // antisymmetry: mutual weak dominance pins the vectors equal
        if weakly_dominated(&b, &a).unwrap() {
            assert_eq!(a, b);
        }
    }
    println!("[PASS] criterion 8: dominance axioms on 10^4 random triples");
}
