//! Command-line front end: JSON in, JSON out, deterministic bytes.
//!
//! Exit codes: 0 on success (and certified verdicts), 1 on invalid input,
//! 2 when a certificate comes back NotCovered or a verification fails.
//! Errors are machine-readable objects on stderr.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use sopq::certify::{certify, verify, ArthurInput, Certificate};
use sopq::dps::{
    constituent_exists, constituent_ids, constituent_is_unitary, eta, fn_eval,
    infinitesimal_char, ktype_in_constituent, vm_decay_exponent, ConstituentId, DPSPoint,
};
use sopq::ktypes::{Sign, SOWeight};
use sopq::rootdata::{rho, Signature};
use sopq::theta::theta0_forward;
use sopq::weights::{strictly_dominated, weakly_dominated, HalfInt, HalfIntVec};
use sopq::young::{is_very_even, v_d, validate_diagram, Flavor as DiagramFlavor};

#[derive(Parser)]
#[command(name = "sopq", version, about = "Exact SO(p,q) combinatorics and unitarity certificates")]
struct Cli {
    /// Wrap the result in an envelope carrying the tool name and version.
    #[arg(long, global = true)]
    meta: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FlavorArg {
    Orthogonal,
    Symplectic,
}

impl From<FlavorArg> for DiagramFlavor {
    fn from(f: FlavorArg) -> Self {
        match f {
            FlavorArg::Orthogonal => DiagramFlavor::Orthogonal,
            FlavorArg::Symplectic => DiagramFlavor::Symplectic,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Weighted Dynkin datum of a Young diagram.
    Vd {
        /// Comma-separated parts, e.g. "1,3" (empty for the zero diagram).
        #[arg(long, default_value = "")]
        parts: String,
        #[arg(long, value_enum)]
        flavor: FlavorArg,
    },
    /// Validate a Young diagram against its flavor's multiplicity rules.
    ValidateDiagram {
        #[arg(long, default_value = "")]
        parts: String,
        #[arg(long, value_enum)]
        flavor: FlavorArg,
    },
    /// Degenerate-principal-series queries at (n, s).
    Dps {
        #[arg(long)]
        n: u32,
        /// Half-integer parameter, e.g. "1/2" (required except for --eta
        /// and --vm-decay).
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        /// Table of all constituents with existence and unitarity flags.
        #[arg(long)]
        list_constituents: bool,
        /// Query one small constituent by index.
        #[arg(long)]
        small: Option<u32>,
        /// Query one large constituent by sign ("+" or "-").
        #[arg(long, allow_hyphen_values = true)]
        large: Option<String>,
        /// Diagonal K-type membership test against the selected
        /// constituent: comma-separated integer weight entries.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Print the infinitesimal character at (n, s).
        #[arg(long)]
        inf_char: bool,
        /// Infinitesimal character of the small spherical constituent.
        #[arg(long)]
        eta: Option<u32>,
        /// Decay exponent of the small spherical constituent.
        #[arg(long)]
        vm_decay: Option<u32>,
    },
    /// Lowest-degree K-type correspondence to the symplectic side.
    Theta0 {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: u32,
        /// Weight entries on SO(q), comma-separated integers.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        xi2: String,
        /// Weight entries on SO(p), comma-separated integers.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        xi1: String,
    },
    /// Half sum of the positive restricted roots of SO(p,q).
    Rho {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
    },
    /// Prefix-sum dominance between two half-integer vectors. Strict
    /// dominance is also the evaluation semantics of an epsilon-strict
    /// exponent bound.
    Dominate {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Strict dominance instead of weak.
        #[arg(long)]
        strict: bool,
    },
    /// Certify a Langlands-Vogan parameter from a JSON input file.
    Certify {
        /// Path to the input JSON ("-" for stdin).
        #[arg(long)]
        input: String,
    },
    /// Replay a certificate and report the first mismatch, if any.
    Verify {
        /// Path to the certificate JSON ("-" for stdin).
        #[arg(long)]
        cert: String,
    },
    /// Certify every flavor-matching diagram up to a size bound.
    BatchCertify {
        /// Target signature "p,q".
        #[arg(long)]
        sig: String,
        /// Upper bound on the diagram size 2k.
        #[arg(long)]
        max_size: u32,
        /// Directory for one certificate file per input (created if
        /// missing); the JSON-lines stream always goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Diagnostic spherical decay profile (floating point).
    FnEval {
        /// Comma-separated coordinates, e.g. "0.0,1.5".
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        h: String,
    },
}

struct CliError {
    kind: String,
    message: String,
    exit: u8,
}

impl CliError {
    fn input(kind: &str, message: impl Into<String>) -> CliError {
        CliError {
            kind: kind.into(),
            message: message.into(),
            exit: 1,
        }
    }
}

impl From<sopq::Error> for CliError {
    fn from(e: sopq::Error) -> Self {
        use sopq::Error::*;
        let kind = match &e {
            LengthMismatch { .. } => "lengthMismatch",
            InvalidWeight { .. } => "invalidWeight",
            InvalidDiagram(_) => "invalidDiagram",
            OffGrid { .. } => "offGrid",
            NoConstituent(_) => "noConstituent",
            OutOfRange(_) => "outOfRange",
            Hypothesis(_) => "hypothesis",
            InvalidInput(_) => "invalidInput",
        };
        CliError::input(kind, e.to_string())
    }
}

fn emit_error(kind: &str, message: &str) {
    let obj = json!({"error": {"kind": kind, "message": message}});
    eprintln!("{obj}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            emit_error("usage", &e.to_string());
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            emit_error(&e.kind, &e.message);
            ExitCode::from(e.exit)
        }
    }
}

/// Prints the payload, inside the meta envelope when requested. The
/// payload is serialized directly so struct field order is preserved
/// byte-for-byte.
fn emit<T: Serialize>(cli: &Cli, payload: &T) -> Result<(), CliError> {
    let body = serde_json::to_string(payload)
        .map_err(|e| CliError::input("serialize", e.to_string()))?;
    if cli.meta {
        println!(
            "{{\"meta\":{{\"tool\":\"sopq\",\"version\":\"{}\"}},\"result\":{body}}}",
            env!("CARGO_PKG_VERSION")
        );
    } else {
        println!("{body}");
    }
    Ok(())
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|_| CliError::input("parse", format!("not a nonnegative integer: {tok:?}")))
        })
        .collect()
}

fn parse_halfvec(s: &str) -> Result<HalfIntVec, CliError> {
    if s.trim().is_empty() {
        return Ok(HalfIntVec::empty());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<HalfInt>()
                .map_err(|_| CliError::input("parse", format!("not a half-integer: {tok:?}")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(HalfIntVec::new)
}

fn parse_f64_list(s: &str) -> Result<Vec<f64>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map_err(|_| CliError::input("parse", format!("not a number: {tok:?}")))
        })
        .collect()
}

fn parse_sign(s: &str) -> Result<Sign, CliError> {
    match s {
        "+" => Ok(Sign::Plus),
        "-" => Ok(Sign::Minus),
        other => Err(CliError::input(
            "parse",
            format!("expected \"+\" or \"-\", got {other:?}"),
        )),
    }
}

fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::input("io", e.to_string()))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::input("io", format!("{path}: {e}")))
    }
}

fn so_weight_from_csv(p: u32, csv: &str) -> Result<SOWeight, CliError> {
    let entries = parse_halfvec(csv)?;
    Ok(SOWeight::new(p, entries)?)
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.cmd {
        Cmd::Vd { parts, flavor } => {
            let diagram = validate_diagram(parse_u32_list(parts)?, (*flavor).into())?;
            emit(cli, &v_d(&diagram))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::ValidateDiagram { parts, flavor } => {
            let diagram = validate_diagram(parse_u32_list(parts)?, (*flavor).into())?;
            let very_even = match diagram.flavor() {
                DiagramFlavor::Orthogonal => Some(is_very_even(&diagram)?),
                DiagramFlavor::Symplectic => None,
            };
            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct Out<'a> {
                #[serde(flatten)]
                diagram: &'a sopq::young::YoungDiagram,
                size: u32,
                #[serde(skip_serializing_if = "Option::is_none")]
                very_even: Option<bool>,
            }
            emit(
                cli,
                &Out {
                    diagram: &diagram,
                    size: diagram.size(),
                    very_even,
                },
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Dps {
            n,
            s,
            list_constituents,
            small,
            large,
            lambda,
            inf_char,
            eta: eta_m,
            vm_decay,
        } => run_dps(
            cli,
            *n,
            s.as_deref(),
            *list_constituents,
            *small,
            large.as_deref(),
            lambda.as_deref(),
            *inf_char,
            *eta_m,
            *vm_decay,
        ),
        Cmd::Theta0 { q, p, m, xi2, xi1 } => {
            let w2 = so_weight_from_csv(*q, xi2)?;
            let w1 = so_weight_from_csv(*p, xi1)?;
            let t = theta0_forward(*q, *p, *m, &w2, &w1)?;
            emit(cli, &t)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Rho { p, q } => {
            let sig = Signature::new(*p, *q);
            #[derive(Serialize)]
            struct Out {
                p: u32,
                q: u32,
                rho: HalfIntVec,
            }
            emit(
                cli,
                &Out {
                    p: sig.p(),
                    q: sig.q(),
                    rho: rho(&sig),
                },
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Dominate { mu, lambda, strict } => {
            let a = parse_halfvec(mu)?;
            let b = parse_halfvec(lambda)?;
            let result = if *strict {
                strictly_dominated(&a, &b)?
            } else {
                weakly_dominated(&a, &b)?
            };
            emit(cli, &json!({"result": result}))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Certify { input } => {
            let text = read_source(input)?;
            let parsed: ArthurInput = serde_json::from_str(&text)
                .map_err(|e| CliError::input("parse", e.to_string()))?;
            let cert = certify(&parsed)?;
            let certified = cert.verdict.is_certified();
            emit(cli, &cert)?;
            Ok(if certified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Cmd::Verify { cert } => {
            let text = read_source(cert)?;
            let parsed: Certificate = serde_json::from_str(&text)
                .map_err(|e| CliError::input("parse", e.to_string()))?;
            let report = verify(&parsed);
            let ok = report.ok;
            emit(cli, &report)?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Cmd::BatchCertify { sig, max_size, out } => run_batch(cli, sig, *max_size, out.as_ref()),
        Cmd::FnEval { h } => {
            let coords = parse_f64_list(h)?;
            emit(cli, &json!({"value": fn_eval(&coords)}))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_dps(
    cli: &Cli,
    n: u32,
    s: Option<&str>,
    list: bool,
    small: Option<u32>,
    large: Option<&str>,
    lambda: Option<&str>,
    inf_char: bool,
    eta_m: Option<u32>,
    vm_decay: Option<u32>,
) -> Result<ExitCode, CliError> {
    if let Some(m) = eta_m {
        emit(cli, &json!({"n": n, "m": m, "eta": eta(n, m)?}))?;
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(m) = vm_decay {
        emit(cli, &json!({"n": n, "m": m, "decay": vm_decay_exponent(n, m)?}))?;
        return Ok(ExitCode::SUCCESS);
    }
    let s_str = s.ok_or_else(|| CliError::input("usage", "--s is required for this query"))?;
    let s_val: HalfInt = s_str
        .parse()
        .map_err(|_| CliError::input("parse", format!("not a half-integer: {s_str:?}")))?;
    let pt = DPSPoint::new(n, s_val)?;

    if inf_char {
        emit(
            cli,
            &json!({"n": n, "s": s_val, "infinitesimalChar": infinitesimal_char(&pt)}),
        )?;
        return Ok(ExitCode::SUCCESS);
    }
    if list {
        #[derive(Serialize)]
        struct Row {
            id: ConstituentId,
            exists: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            unitary: Option<bool>,
        }
        let mut rows = Vec::new();
        for id in constituent_ids(n) {
            let exists = constituent_exists(&pt, id)?;
            let unitary = if exists {
                Some(constituent_is_unitary(&pt, id)?)
            } else {
                None
            };
            rows.push(Row {
                id,
                exists,
                unitary,
            });
        }
        emit(cli, &json!({"n": n, "s": s_val, "constituents": rows}))?;
        return Ok(ExitCode::SUCCESS);
    }

    let id = match (small, large) {
        (Some(i), None) => ConstituentId::Small(i),
        (None, Some(sign)) => ConstituentId::Large(parse_sign(sign)?),
        _ => {
            return Err(CliError::input(
                "usage",
                "select a query: --list-constituents, --inf-char, --eta, --vm-decay, --small or --large",
            ))
        }
    };
    if let Some(lambda_csv) = lambda {
        let weight = so_weight_from_csv(n, lambda_csv)?;
        let member = ktype_in_constituent(&pt, id, &weight)?;
        emit(
            cli,
            &json!({"n": n, "s": s_val, "constituent": id, "lambda": weight.xi(), "member": member}),
        )?;
    } else {
        let exists = constituent_exists(&pt, id)?;
        if exists {
            let unitary = constituent_is_unitary(&pt, id)?;
            emit(
                cli,
                &json!({"n": n, "s": s_val, "constituent": id, "exists": true, "unitary": unitary}),
            )?;
        } else {
            emit(
                cli,
                &json!({"n": n, "s": s_val, "constituent": id, "exists": false}),
            )?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Ascending partitions of `total`, lexicographic.
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

// The JSON-lines stream is emitted raw, one certificate per line; the
// --meta envelope does not apply to it.
fn run_batch(
    _cli: &Cli,
    sig_csv: &str,
    max_size: u32,
    out_dir: Option<&PathBuf>,
) -> Result<ExitCode, CliError> {
    let nums = parse_u32_list(sig_csv)?;
    let [p, q] = nums[..] else {
        return Err(CliError::input("parse", "--sig expects \"p,q\""));
    };
    let sig = Signature::new(p, q);
    let flavor = if sig.sum() % 2 == 0 {
        DiagramFlavor::Orthogonal
    } else {
        DiagramFlavor::Symplectic
    };
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir).map_err(|e| CliError::input("io", e.to_string()))?;
    }
    let mut all_certified = true;
    for k in 0..=sig.p().min(max_size / 2) {
        for parts in partitions(2 * k) {
            let Ok(diagram) = validate_diagram(parts.clone(), flavor) else {
                continue;
            };
            let input = ArthurInput::with_trivial_sigma(sig, diagram)?;
            let cert = certify(&input)?;
            all_certified &= cert.verdict.is_certified();
            let line = serde_json::to_string(&cert)
                .map_err(|e| CliError::input("serialize", e.to_string()))?;
            println!("{line}");
            if let Some(dir) = out_dir {
                let name = if parts.is_empty() {
                    format!("cert-p{}-q{}-k{}-empty.json", sig.p(), sig.q(), k)
                } else {
                    let tag: Vec<String> = parts.iter().map(|d| d.to_string()).collect();
                    format!(
                        "cert-p{}-q{}-k{}-{}.json",
                        sig.p(),
                        sig.q(),
                        k,
                        tag.join("-")
                    )
                };
                fs::write(dir.join(name), format!("{line}\n"))
                    .map_err(|e| CliError::input("io", e.to_string()))?;
            }
        }
    }
    Ok(if all_certified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}
