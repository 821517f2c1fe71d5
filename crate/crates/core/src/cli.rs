//! The `bordism` command line.
//!
//! Exit codes: 0 success, 1 a verification failed (or no witness was found),
//! 2 bad arguments or unreadable input.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::json;

use crate::constructions::{enumerate_fixed_points, f_poly, witness_monomial};
use crate::dims::{compose_dim, dim_zn_zn, fk_generator_degrees, gk_bounds, published_z4_preset};
use crate::error::{Error, Result};
use crate::fpdata::{decompose_by_kernel, decomposition_report, psi_embed, FixedPointData};
use crate::gf2lin::{enumerate_subspaces, gaussian_binomial, span, BitVector, Subspace};
use crate::indecomp::{find_witness, remark_identity_sides};
use crate::repalg::{parse, Poly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn failed(stdout: String) -> Self {
        CommandResult {
            exit_code: 1,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(stderr: String) -> Self {
        CommandResult {
            exit_code: 2,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "bordism",
    version,
    about = "Exact fixed-point-data calculus for (Z_2)^k-manifolds with isolated fixed points"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct KM {
    /// Even rank k >= 4.
    #[arg(long)]
    k: u32,
    #[arg(long)]
    m: u32,
}

#[derive(Args, Debug)]
struct PolyInput {
    #[arg(long)]
    rank: u32,
    /// Polynomial text or JSON; `-` reads stdin.
    #[arg(long)]
    input: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand f_{k,m} = (σ_{k,1}^m + σ_{k,2}^m) ρ_{1,k}.
    FPoly {
        #[command(flatten)]
        km: KM,
        #[command(flatten)]
        out: Output,
    },
    /// List the 2k^m fixed points of S^1 × (RP^{k-1})^m with tangent monomials.
    FixedPoints {
        #[command(flatten)]
        km: KM,
        #[arg(long)]
        count_only: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Print the witness monomial of f_{k,m} and check it is a term.
    Witness {
        #[command(flatten)]
        km: KM,
        #[command(flatten)]
        out: Output,
    },
    /// Search a polynomial for an indecomposability witness.
    Indecomposable {
        #[command(flatten)]
        input: PolyInput,
        #[command(flatten)]
        out: Output,
    },
    /// Split a polynomial by the kernels of its terms.
    Decompose {
        #[command(flatten)]
        input: PolyInput,
        #[command(flatten)]
        out: Output,
    },
    /// Embed rank-`rank` data into rank k along a kernel.
    Embed {
        #[command(flatten)]
        input: PolyInput,
        /// Target rank.
        #[arg(long)]
        k: u32,
        /// Comma-separated kernel spanning vectors of length k; empty for {0}.
        #[arg(long, default_value = "")]
        kernel: String,
        #[command(flatten)]
        out: Output,
    },
    /// Check f_{k,m} = f_{k,m-1}σ_{k,1} + f_{k,m-1}σ_{k,2} + f_{k,m-2}σ_{k,1}σ_{k,2}.
    VerifyIdentity {
        #[command(flatten)]
        km: KM,
        #[command(flatten)]
        out: Output,
    },
    /// Check the closed form of f_{k,m} against the fixed-point enumeration.
    VerifyEnumeration {
        #[command(flatten)]
        km: KM,
        #[command(flatten)]
        out: Output,
    },
    /// dim Z_n((Z_2)^n).
    Dim {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        out: Output,
    },
    /// dim of the rank-k bordism group in degree n from component dimensions.
    ComposeDim {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Component dimensions as "l=dim,l=dim,...".
        #[arg(long, conflicts_with = "preset")]
        components: Option<String>,
        #[arg(long, value_enum)]
        preset: Option<Preset>,
        #[command(flatten)]
        out: Output,
    },
    /// Enumerate or count the dim-dimensional subspaces of (Z_2)^k.
    Subspaces {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        count_only: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Gelfand–Kirillov bounds and the F(k) generator degrees.
    GkBounds {
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Parse a polynomial and print its canonical form.
    ParseCheck {
        #[command(flatten)]
        input: PolyInput,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Preset {
    /// dim Z_4((Z_2)^l) = 1, 32, 511 for l = 2, 3, 4.
    PaperZ4,
}

/// Runs the CLI on `args` (including the program name); `stdin` backs `--input -`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CommandResult::usage(rendered)
            } else {
                CommandResult::ok(rendered)
            };
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(result) => result,
        Err(e) => CommandResult::usage(format!("error: {e}\n")),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

/// JSON number when the value fits in `u64`, decimal string otherwise.
fn big_json(value: impl ToString) -> serde_json::Value {
    let s = value.to_string();
    s.parse::<u64>()
        .map(serde_json::Value::from)
        .unwrap_or(serde_json::Value::String(s))
}

fn read_poly(input: &PolyInput, stdin: &mut dyn Read) -> Result<Poly> {
    let text = if input.input == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| Error::invalid(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(&input.input)
            .map_err(|e| Error::invalid(format!("reading {}: {e}", input.input)))?
    };
    if text.trim_start().starts_with('{') {
        let p: Poly = serde_json::from_str(&text)
            .map_err(|e| Error::invalid(format!("polynomial JSON: {e}")))?;
        if p.rank() != input.rank {
            return Err(Error::RankMismatch {
                expected: input.rank,
                found: p.rank(),
            });
        }
        Ok(p)
    } else {
        parse(&text, input.rank)
    }
}

fn poly_output(p: &Poly, format: Format) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Json => to_json(p),
    }
}

/// Diff-style comparison of two polynomials. `None` when equal.
fn poly_diff(
    lhs_name: &str,
    lhs: &Poly,
    rhs_name: &str,
    rhs: &Poly,
) -> Option<(String, serde_json::Value)> {
    if lhs == rhs {
        return None;
    }
    let only_lhs: Vec<String> = lhs
        .terms()
        .filter(|t| !rhs.contains(t))
        .map(|t| t.to_string())
        .collect();
    let only_rhs: Vec<String> = rhs
        .terms()
        .filter(|t| !lhs.contains(t))
        .map(|t| t.to_string())
        .collect();
    let mut text = format!("--- {lhs_name}\n+++ {rhs_name}\n");
    for t in &only_lhs {
        let _ = writeln!(text, "- {t}");
    }
    for t in &only_rhs {
        let _ = writeln!(text, "+ {t}");
    }
    let value = json!({"ok": false, "only_lhs": only_lhs, "only_rhs": only_rhs});
    Some((text, value))
}

fn verification(diff: Option<(String, serde_json::Value)>, format: Format) -> CommandResult {
    match (diff, format) {
        (None, Format::Text) => CommandResult::ok("OK\n".into()),
        (None, Format::Json) => CommandResult::ok(to_json(&json!({"ok": true}))),
        (Some((text, _)), Format::Text) => CommandResult::failed(format!("FAILED\n{text}")),
        (Some((_, value)), Format::Json) => CommandResult::failed(to_json(&value)),
    }
}

fn parse_components(spec: &str) -> Result<BTreeMap<u32, BigUint>> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|entry| {
            let (l, d) = entry
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("component {entry:?} is not l=dim")))?;
            let l = l
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("bad l in {entry:?}")))?;
            let d = d
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("bad dimension in {entry:?}")))?;
            Ok((l, d))
        })
        .collect()
}

fn parse_kernel(k: u32, spec: &str) -> Result<Subspace> {
    let vectors = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect::<Result<Vec<BitVector>>>()?;
    span(&vectors, k)
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> Result<CommandResult> {
    Ok(match command {
        Command::FPoly { km, out } => {
            CommandResult::ok(poly_output(f_poly(km.k, km.m)?.poly(), out.format))
        }
        Command::FixedPoints {
            km,
            count_only,
            out,
        } => {
            let points = enumerate_fixed_points(km.k, km.m)?;
            CommandResult::ok(match (count_only, out.format) {
                (true, Format::Text) => format!("{}\n", points.len()),
                (true, Format::Json) => to_json(&json!({"count": points.len()})),
                (false, Format::Text) => points
                    .iter()
                    .map(|p| format!("{}\t{}\n", p.label, p.monomial))
                    .collect(),
                (false, Format::Json) => to_json(&points),
            })
        }
        Command::Witness { km, out } => {
            let w = witness_monomial(km.k, km.m)?;
            let present = f_poly(km.k, km.m)?.poly().contains(&w);
            let body = match out.format {
                Format::Text => format!("witness: {w}\npresent: {present}\n"),
                Format::Json => {
                    to_json(&json!({"k": km.k, "m": km.m, "monomial": w, "present": present}))
                }
            };
            if present {
                CommandResult::ok(body)
            } else {
                CommandResult::failed(body)
            }
        }
        Command::Indecomposable { input, out } => {
            let d = FixedPointData::new(read_poly(&input, stdin)?)?;
            let report = find_witness(&d)?;
            let body = match out.format {
                Format::Text => format!(
                    "{}\n{}\n",
                    if report.found {
                        "INDECOMPOSABLE"
                    } else {
                        "INCONCLUSIVE"
                    },
                    report.reason
                ),
                Format::Json => to_json(&report),
            };
            if report.found {
                CommandResult::ok(body)
            } else {
                CommandResult::failed(body)
            }
        }
        Command::Decompose { input, out } => {
            let d = FixedPointData::new(read_poly(&input, stdin)?)?;
            let parts = decompose_by_kernel(&d);
            CommandResult::ok(match out.format {
                Format::Text => parts
                    .iter()
                    .map(|(k, p)| format!("{k} dim={}: {p}\n", k.dim()))
                    .collect(),
                Format::Json => to_json(&decomposition_report(&parts)),
            })
        }
        Command::Embed {
            input,
            k,
            kernel,
            out,
        } => {
            let d = FixedPointData::new(read_poly(&input, stdin)?)?;
            let kernel = parse_kernel(k, &kernel)?;
            CommandResult::ok(poly_output(psi_embed(&d, &kernel)?.poly(), out.format))
        }
        Command::VerifyIdentity { km, out } => {
            let (lhs, rhs) = remark_identity_sides(km.k, km.m)?;
            verification(
                poly_diff("f_{k,m}", &lhs, "f_{k,m-1}(σ1+σ2) + f_{k,m-2}σ1σ2", &rhs),
                out.format,
            )
        }
        Command::VerifyEnumeration { km, out } => {
            let closed = f_poly(km.k, km.m)?.into_poly();
            let points = enumerate_fixed_points(km.k, km.m)?;
            let summed = Poly::from_terms(km.k, points.into_iter().map(|p| p.monomial))?;
            verification(
                poly_diff("closed form", &closed, "fixed-point sum", &summed),
                out.format,
            )
        }
        Command::Dim { n, out } => {
            let value = dim_zn_zn(n)?;
            CommandResult::ok(match out.format {
                Format::Text => format!("{value}\n"),
                Format::Json => to_json(&json!({"n": n, "value": big_json(&value)})),
            })
        }
        Command::ComposeDim {
            n,
            k,
            components,
            preset,
            out,
        } => {
            let dims = match (components, preset) {
                (Some(spec), _) => parse_components(&spec)?,
                (None, Some(Preset::PaperZ4)) => published_z4_preset(),
                (None, None) => {
                    return Err(Error::invalid("compose-dim needs --components or --preset"))
                }
            };
            let report = compose_dim(n, k, &dims)?;
            CommandResult::ok(match out.format {
                Format::Text => {
                    let terms: Vec<String> = report
                        .breakdown
                        .iter()
                        .map(|r| format!("{}·{}", r.count, r.component_dim))
                        .collect();
                    if terms.is_empty() {
                        format!("{}\n", report.value)
                    } else {
                        format!("{} = {}\n", terms.join(" + "), report.value)
                    }
                }
                Format::Json => to_json(&report),
            })
        }
        Command::Subspaces {
            k,
            dim,
            count_only,
            out,
        } => {
            if count_only {
                let count = gaussian_binomial(k, dim)?;
                CommandResult::ok(match out.format {
                    Format::Text => format!("{count}\n"),
                    Format::Json => {
                        to_json(&json!({"k": k, "dim": dim, "count": big_json(&count)}))
                    }
                })
            } else {
                let list = enumerate_subspaces(k, dim)?;
                CommandResult::ok(match out.format {
                    Format::Text => list.iter().map(|s| format!("{s}\n")).collect(),
                    Format::Json => {
                        to_json(&list.iter().map(Subspace::basis_strings).collect::<Vec<_>>())
                    }
                })
            }
        }
        Command::GkBounds { k, out } => {
            if k == 0 || k > 24 {
                return Err(Error::invalid("k must be between 1 and 24"));
            }
            let (lower, upper) = gk_bounds(k);
            let degrees = fk_generator_degrees(k);
            CommandResult::ok(match out.format {
                Format::Text => format!(
                    "{lower} <= GKdim <= {upper}\nF({k}) generator degrees: {}\n",
                    degrees
                        .iter()
                        .map(u64::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                ),
                Format::Json => to_json(&json!({
                    "k": k,
                    "lower": big_json(&lower),
                    "upper": big_json(&upper),
                    "fk_generator_degrees": degrees,
                })),
            })
        }
        Command::ParseCheck { input, out } => {
            CommandResult::ok(poly_output(&read_poly(&input, stdin)?, out.format))
        }
    })
}
