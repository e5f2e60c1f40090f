use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use riley_core::exactpoly::refine;
use riley_core::{
    continue_root, isolate_real_roots, normalize, psi_of, riley_polynomial_of, sign_sequences, verify_conjecture,
    Fraction, KnotInvariants, Witness,
};
use riley_cli::{exit, parse_range, parse_rational, run_scan, ScanConfig, ScanRecord};
use serde_json::json;

#[derive(Parser)]
#[command(name = "riley", version, about = "Riley polynomials and real-root bounds for 2-bridge knots")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Knot {
    /// Odd denominator p ≥ 3.
    #[arg(allow_negative_numbers = true)]
    p: i64,
    /// Numerator q, coprime to p; any representative mod 2p.
    #[arg(allow_negative_numbers = true)]
    q: i64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the Riley polynomial λ_K.
    Poly {
        #[command(flatten)]
        knot: Knot,
        #[arg(long)]
        json: bool,
    },
    /// Print signature, determinant and the root-count bound.
    Invariants {
        #[command(flatten)]
        knot: Knot,
        #[arg(long)]
        json: bool,
    },
    /// Print isolating intervals of the real roots of λ_K.
    Roots {
        #[command(flatten)]
        knot: Knot,
        /// Refine every interval to at most this width (e.g. 1/1000 or 1e-6).
        #[arg(long, value_parser = parse_rational)]
        width: Option<BigRational>,
        #[arg(long)]
        json: bool,
    },
    /// Check #real roots of λ_K ≥ |σ|/2 for one knot.
    Verify {
        #[command(flatten)]
        knot: Knot,
    },
    /// Verify every fraction up to pmax and write JSONL records.
    Scan {
        #[arg(long, value_parser = clap::value_parser!(i64).range(3..))]
        pmax: i64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        /// Keep one fraction per knot class {q, q⁻¹ mod p}.
        #[arg(long)]
        dedup: bool,
        #[arg(long)]
        out: PathBuf,
        /// Keep records already in the output file.
        #[arg(long)]
        resume: bool,
        /// Record per-fraction wall time (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
    },
    /// Continue real parabolic roots to the elliptic traces s_n = 2cos(2π/n).
    Witness {
        #[command(flatten)]
        knot: Knot,
        #[arg(long, conflicts_with = "nrange", required_unless_present = "nrange",
              value_parser = clap::value_parser!(u64).range(3..))]
        n: Option<u64>,
        /// Inclusive range a:b.
        #[arg(long, value_parser = parse_range)]
        nrange: Option<(usize, usize)>,
    },
}

fn knot(k: &Knot) -> Result<Fraction, ExitCode> {
    normalize(k.p, k.q).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(exit::USAGE)
    })
}

fn internal(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("internal error: {e}");
    ExitCode::from(exit::INTERNAL)
}

fn coeff_strings(f: &riley_core::IntPoly) -> Vec<String> {
    f.coeffs().iter().map(|c| c.to_string()).collect()
}

fn poly(k: &Knot, as_json: bool) -> Result<ExitCode, ExitCode> {
    let fr = knot(k)?;
    let sd = sign_sequences(&fr).map_err(internal)?;
    let lambda = riley_polynomial_of(&sd).map_err(internal)?;
    if as_json {
        println!("{}", json!({"p": fr.p(), "q": fr.q(), "lambda": coeff_strings(&lambda)}));
    } else {
        println!("{lambda}");
        println!("coeffs [{}]", coeff_strings(&lambda).join(", "));
    }
    Ok(ExitCode::SUCCESS)
}

fn invariants(k: &Knot, as_json: bool) -> Result<ExitCode, ExitCode> {
    let fr = knot(k)?;
    let sd = sign_sequences(&fr).map_err(internal)?;
    let inv = KnotInvariants::of(&sd);
    let bound = inv.signature.unsigned_abs() / 2;
    if as_json {
        let v = json!({
            "p": fr.p(), "q": fr.q(), "n": fr.n(),
            "sigma": inv.signature, "determinant": inv.determinant, "bound": bound,
            "congruence_ok": inv.congruence_holds(),
        });
        println!("{v}");
    } else {
        println!("knot {fr}");
        println!("sigma {}", inv.signature);
        println!("det {}", inv.determinant);
        println!("bound {bound}");
        println!("congruence {}", if inv.congruence_holds() { "ok" } else { "FAILS" });
    }
    Ok(ExitCode::SUCCESS)
}

fn roots(k: &Knot, width: Option<&BigRational>, as_json: bool) -> Result<ExitCode, ExitCode> {
    let fr = knot(k)?;
    if width.is_some_and(|w| *w <= BigRational::from_integer(0.into())) {
        eprintln!("error: --width must be positive");
        return Err(ExitCode::from(exit::USAGE));
    }
    let sd = sign_sequences(&fr).map_err(internal)?;
    let lambda = riley_polynomial_of(&sd).map_err(internal)?;
    let mut ivs = isolate_real_roots(&lambda).map_err(internal)?;
    if let Some(w) = width {
        for iv in &mut ivs {
            *iv = refine(&lambda, iv, w).map_err(internal)?;
        }
    }
    if as_json {
        let list: Vec<[String; 2]> = ivs.iter().map(|iv| [iv.lo().to_string(), iv.hi().to_string()]).collect();
        println!("{}", json!({"p": fr.p(), "q": fr.q(), "roots": list}));
    } else if ivs.is_empty() {
        println!("no real roots");
    } else {
        for iv in &ivs {
            println!("{iv}  ≈ {:.12}", iv.midpoint_f64());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(k: &Knot) -> Result<ExitCode, ExitCode> {
    let fr = knot(k)?;
    let r = verify_conjecture(&fr).map_err(internal)?;
    println!("knot {fr}");
    println!("sigma {}", r.sigma);
    println!("real roots {}", r.real_root_count);
    println!("bound {}", r.bound);
    if !r.satisfied {
        println!("VIOLATED: {} real roots < |σ|/2 = {}", r.real_root_count, r.bound);
        let rec = ScanRecord::from_report(&r, k.q, false);
        println!("{}", serde_json::to_string_pretty(&rec).expect("records serialize"));
        return Ok(ExitCode::from(exit::VIOLATION));
    }
    if !r.squarefree || !r.congruence_ok {
        return Err(internal(format!(
            "{fr}: squarefree {}, congruence {}",
            r.squarefree, r.congruence_ok
        )));
    }
    if r.gap() > 0 {
        println!("satisfied, strict: {} > {}", r.real_root_count, r.bound);
    } else {
        println!("satisfied");
    }
    Ok(ExitCode::SUCCESS)
}

fn monotone(xs: &[f64]) -> Option<&'static str> {
    if xs.windows(2).all(|w| w[0] <= w[1]) {
        Some("increasing")
    } else if xs.windows(2).all(|w| w[0] >= w[1]) {
        Some("decreasing")
    } else {
        None
    }
}

/// Direction of `x_n` over the converged witnesses, and the smallest `n` from
/// which `x_n` is monotone up to the end of the range.
fn trend(ws: &[&Witness]) -> (&'static str, Option<usize>) {
    if ws.is_empty() {
        return ("none", None);
    }
    let xs: Vec<f64> = ws.iter().map(|w| w.x_n).collect();
    let from = (0..xs.len()).find(|&i| monotone(&xs[i..]).is_some()).map(|i| ws[i].n);
    (monotone(&xs).unwrap_or("not monotone"), from)
}

fn witness(k: &Knot, ns: (usize, usize)) -> Result<ExitCode, ExitCode> {
    let fr = knot(k)?;
    let sd = sign_sequences(&fr).map_err(internal)?;
    let psi = psi_of(&sd).map_err(internal)?;
    let roots = isolate_real_roots(&psi.at_two()).map_err(internal)?;
    if roots.is_empty() {
        println!("no real parabolic roots (σ = {}; a knot with σ ≠ 0 always has one)", KnotInvariants::of(&sd).signature);
        return Ok(ExitCode::SUCCESS);
    }
    let mut any = false;
    let mut out = Vec::new();
    for iv in &roots {
        let ws: Vec<Witness> = (ns.0..=ns.1)
            .map(|n| continue_root(&psi, iv, n))
            .collect::<Result<_, _>>()
            .map_err(internal)?;
        let ok: Vec<&Witness> = ws.iter().filter(|w| w.converged).collect();
        any |= !ok.is_empty();
        let (direction, monotone_from) = trend(&ok);
        out.push(json!({
            "root": [iv.lo().to_string(), iv.hi().to_string()],
            "smallest_converged_n": ok.first().map(|w| w.n),
            "converged": ok.len(),
            "trend": direction,
            "monotone_from_n": monotone_from,
            "witnesses": ws,
        }));
    }
    let v = json!({"p": fr.p(), "q": fr.q(), "n_min": ns.0, "n_max": ns.1, "roots": out});
    println!("{}", serde_json::to_string_pretty(&v).expect("json"));
    if any {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("no witness converged for any root and any n in {}..={}", ns.0, ns.1);
        Ok(ExitCode::from(exit::INTERNAL))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.cmd {
        Cmd::Poly { knot, json } => poly(knot, *json),
        Cmd::Invariants { knot, json } => invariants(knot, *json),
        Cmd::Roots { knot, width, json } => roots(knot, width.as_ref(), *json),
        Cmd::Verify { knot } => verify(knot),
        Cmd::Scan {
            pmax,
            jobs,
            dedup,
            out,
            resume,
            timing,
        } => {
            let cfg = ScanConfig {
                pmax: *pmax,
                jobs: *jobs as usize,
                dedup: *dedup,
                out: out.clone(),
                resume: *resume,
                timing: *timing,
            };
            match run_scan(&cfg) {
                Ok(s) => {
                    println!("{s}");
                    Ok(ExitCode::from(s.exit_code()))
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Err(ExitCode::from(e.exit_code()))
                }
            }
        }
        Cmd::Witness { knot, n, nrange } => {
            let ns = match (n, nrange) {
                (Some(n), _) => (*n as usize, *n as usize),
                (None, Some(r)) => *r,
                (None, None) => unreachable!("clap requires one of --n, --nrange"),
            };
            witness(knot, ns)
        }
    };
    res.unwrap_or_else(|code| code)
}
