//! The `bca` command line.
//!
//! Exit codes: 0 success, 2 semantic error (invalid relation, bad parameters,
//! mismatched inputs), 3 unreadable or malformed input, 4 input too large for
//! a guarded computation.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::completions::canonical_completion;
use crate::doc::RelationDocument;
use crate::dot::hasse_dot;
use crate::error::{Error, Violation};
use crate::families::{random_preorder, FamilySpec};
use crate::index::index_general;
use crate::limits::Limits;
use crate::metrics::{ksb_distance, top_difference_direct, top_difference_fast};
use crate::order::{GroundSet, Preorder, TotalPreorder};
use crate::solver::{
    bca_auto, bca_bruteforce, bca_canonical, bca_duality, condition_star, covering_radius,
    ApproximationReport, CanonicalOutcome, ConditionStarReport, ConditionWitness,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SEMANTIC: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_GUARD: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "bca",
    version,
    about = "Best complete approximations of finite preorders"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Emit::Text)]
    emit: Emit,
    /// Seed for randomly generated orders.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Raise or lower every ground-size guard to this many elements.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Use ≻ instead of > in rankings.
    #[arg(long, global = true)]
    unicode: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MetricArg {
    TopDiff,
    TopDiffDirect,
    Ksb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Bruteforce,
    Duality,
    Canonical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Containment,
    Refinement,
    WordPrefix,
    Coordinatewise,
    Fence,
    Crown,
    Chain,
    Equality,
    Indifferent,
    Random,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a relation document.
    Check {
        file: PathBuf,
        /// Also require every pair to be comparable.
        #[arg(long)]
        total: bool,
    },
    /// Distance between two relations on the same labels.
    Metric {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value_t = MetricArg::TopDiff)]
        metric: MetricArg,
    },
    /// Best complete approximations.
    Bca {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Largest index over the completions.
    Index { file: PathBuf },
    /// The completion whose blocks are the successive layers of maxima.
    Canonical { file: PathBuf },
    /// Check whether the layer condition certifies the canonical completion.
    ConditionStar { file: PathBuf },
    /// Emit a document for a standard order family.
    Generate {
        #[arg(value_enum)]
        kind: FamilyArg,
        #[arg(long)]
        z: Option<usize>,
        #[arg(long)]
        alphabet: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Also emit the known best approximation.
        #[arg(long)]
        expected_bca: bool,
        /// Flip the generated word order.
        #[arg(long)]
        reverse: bool,
        /// Pair probability for random orders.
        #[arg(long, default_value_t = 0.2)]
        density: f64,
    },
    /// Hasse diagram in Graphviz syntax.
    Dot { file: PathBuf },
    /// Largest best-approximation distance over every preorder on `n` elements.
    CoveringRadius {
        #[arg(long)]
        n: usize,
    },
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Document(_) => EXIT_INPUT,
            Error::TooLarge { .. } => EXIT_GUARD,
            _ => EXIT_SEMANTIC,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

struct Context<'a> {
    emit: Emit,
    seed: u64,
    unicode: bool,
    limits: Limits,
    out: &'a mut dyn Write,
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_SEMANTIC
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let limits = cli
        .max_n
        .map_or_else(Limits::default, |n| Limits::default().with_max_n(n));
    let mut ctx = Context {
        emit: cli.emit,
        seed: cli.seed,
        unicode: cli.unicode,
        limits,
        out,
    };
    match dispatch(&mut ctx, cli.command) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(ctx: &mut Context, command: Command) -> Outcome {
    match command {
        Command::Check { file, total } => cmd_check(ctx, &file, total),
        Command::Metric { a, b, metric } => cmd_metric(ctx, &a, &b, metric),
        Command::Bca { file, method } => cmd_bca(ctx, &file, method),
        Command::Index { file } => cmd_index(ctx, &file),
        Command::Canonical { file } => cmd_canonical(ctx, &file),
        Command::ConditionStar { file } => cmd_condition_star(ctx, &file),
        Command::Generate {
            kind,
            z,
            alphabet,
            k,
            m,
            n,
            expected_bca,
            reverse,
            density,
        } => {
            let params = FamilyParams {
                z,
                alphabet,
                k,
                m,
                n,
                reverse,
            };
            cmd_generate(ctx, kind, params, expected_bca, density)
        }
        Command::Dot { file } => {
            let p = load(&file)?;
            ctx.out.write_all(hasse_dot(&p).as_bytes())?;
            Ok(())
        }
        Command::CoveringRadius { n } => cmd_covering_radius(ctx, n),
    }
}

fn read_document(path: &Path) -> std::result::Result<RelationDocument, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })?;
    RelationDocument::from_json(&text).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })
}

fn load(path: &Path) -> std::result::Result<Preorder, Failure> {
    let doc = read_document(path)?;
    doc.to_preorder().map_err(|e| match e {
        Error::NotPreorder(v) => Failure {
            code: EXIT_SEMANTIC,
            message: describe_violations(doc.labels.as_slice(), v.iter()),
        },
        other => other.into(),
    })
}

fn describe_violations<'a>(labels: &[String], vs: impl Iterator<Item = &'a Violation>) -> String {
    let mut lines = Vec::new();
    for v in vs {
        lines.push(match *v {
            Violation::NotReflexive { element } => {
                format!("not reflexive at {} ({element})", labels[element])
            }
            Violation::NotTransitive { i, j, k } => format!(
                "not transitive: {} >= {} and {} >= {} but not {} >= {} ({i},{j},{k})",
                labels[i], labels[j], labels[j], labels[k], labels[i], labels[k]
            ),
        });
    }
    format!(
        "not a preorder: {} violation(s)\n  {}",
        lines.len(),
        lines.join("\n  ")
    )
}

fn print_json(ctx: &mut Context, v: &Value) -> Outcome {
    writeln!(
        ctx.out,
        "{}",
        serde_json::to_string_pretty(v).expect("json values serialize")
    )?;
    Ok(())
}

fn emit_total(ctx: &mut Context, t: &TotalPreorder) -> Outcome {
    match ctx.emit {
        Emit::Text => writeln!(ctx.out, "{}", t.ranking_text(ctx.unicode))?,
        Emit::Json => writeln!(ctx.out, "{}", RelationDocument::from_total(t).to_json())?,
        Emit::Dot => ctx.out.write_all(hasse_dot(&t.to_preorder()).as_bytes())?,
    }
    Ok(())
}

fn cmd_check(ctx: &mut Context, file: &Path, total: bool) -> Outcome {
    let p = load(file)?;
    if total {
        let t = p.to_total()?;
        match ctx.emit {
            Emit::Json => print_json(
                ctx,
                &json!({"valid": true, "total": true, "ranking": t.ranking_text(ctx.unicode)}),
            ),
            _ => Ok(writeln!(
                ctx.out,
                "valid total preorder: {}",
                t.ranking_text(ctx.unicode)
            )?),
        }
    } else {
        let n = p.len();
        let is_total = p.is_total();
        match ctx.emit {
            Emit::Json => print_json(
                ctx,
                &json!({"valid": true, "total": is_total, "elements": n}),
            ),
            _ => Ok(writeln!(
                ctx.out,
                "valid preorder on {n} elements ({})",
                if is_total { "total" } else { "not total" }
            )?),
        }
    }
}

fn cmd_metric(ctx: &mut Context, a: &Path, b: &Path, metric: MetricArg) -> Outcome {
    let p = load(a)?;
    let q = load(b)?;
    if p.ground() != q.ground() {
        return Err(Failure {
            code: EXIT_SEMANTIC,
            message: "the two documents have different labels".into(),
        });
    }
    let (name, value) = match metric {
        MetricArg::TopDiff => ("top-diff", top_difference_fast(&p, &q)?),
        MetricArg::TopDiffDirect => (
            "top-diff-direct",
            top_difference_direct(&p, &q, &ctx.limits)?,
        ),
        MetricArg::Ksb => ("ksb", ksb_distance(&p, &q)?),
    };
    match ctx.emit {
        Emit::Json => print_json(ctx, &json!({"metric": name, "distance": value})),
        _ => Ok(writeln!(ctx.out, "{value}")?),
    }
}

fn report_json(
    r: &ApproximationReport,
    condition: Option<&ConditionStarReport>,
    unicode: bool,
) -> Value {
    let members: Vec<Value> = r
        .bca_set
        .iter()
        .zip(&r.indices)
        .map(|(t, i)| {
            json!({
                "ranking": t.ranking_text(unicode),
                "index": i,
                "document": RelationDocument::from_total(t),
            })
        })
        .collect();
    json!({
        "method": r.method,
        "distance": r.distance,
        "exhaustive": r.exhaustive,
        "condition_star": condition.map(|c| c.verdict),
        "bca_set": members,
    })
}

fn cmd_bca(ctx: &mut Context, file: &Path, method: MethodArg) -> Outcome {
    let p = load(file)?;
    let (report, condition) = match method {
        MethodArg::Auto => bca_auto(&p, &ctx.limits)?,
        MethodArg::Bruteforce => (bca_bruteforce(&p, &ctx.limits)?, None),
        MethodArg::Duality => (bca_duality(&p, &ctx.limits)?, None),
        MethodArg::Canonical => match bca_canonical(&p, &ctx.limits)? {
            CanonicalOutcome::Applies { report, condition } => (report, Some(condition)),
            CanonicalOutcome::NotApplicable(c) => {
                let w = c
                    .first_witness()
                    .map(|w| describe_witness(&p, w))
                    .unwrap_or_default();
                return Err(Failure {
                    code: EXIT_SEMANTIC,
                    message: format!(
                        "the canonical shortcut does not apply: condition fails at {w}"
                    ),
                });
            }
        },
    };
    match ctx.emit {
        Emit::Json => print_json(ctx, &report_json(&report, condition.as_ref(), ctx.unicode)),
        Emit::Dot => {
            for t in &report.bca_set {
                ctx.out.write_all(hasse_dot(&t.to_preorder()).as_bytes())?;
            }
            Ok(())
        }
        Emit::Text => {
            writeln!(ctx.out, "method: {}", report.method.name())?;
            writeln!(ctx.out, "distance: {}", report.distance)?;
            if let Some(c) = &condition {
                writeln!(ctx.out, "condition-star: {}", c.verdict.name())?;
            }
            let note = if report.exhaustive {
                ""
            } else {
                " (others may exist)"
            };
            writeln!(
                ctx.out,
                "best approximations: {}{note}",
                report.bca_set.len()
            )?;
            for (t, i) in report.bca_set.iter().zip(&report.indices) {
                writeln!(ctx.out, "  {}  index {i}", t.ranking_text(ctx.unicode))?;
            }
            Ok(())
        }
    }
}

fn cmd_index(ctx: &mut Context, file: &Path) -> Outcome {
    let p = load(file)?;
    let v = index_general(&p, &ctx.limits)?;
    match ctx.emit {
        Emit::Json => print_json(ctx, &json!({"index": v})),
        _ => Ok(writeln!(ctx.out, "{v}")?),
    }
}

fn cmd_canonical(ctx: &mut Context, file: &Path) -> Outcome {
    let p = load(file)?;
    emit_total(ctx, &canonical_completion(&p))
}

fn describe_witness(p: &Preorder, w: &ConditionWitness) -> String {
    let g = p.ground();
    let rel = if w.is_violation() { ">" } else { "=" };
    format!(
        "layer {}, S = {}, Y = {}: index {} {rel} bound {}",
        w.layer,
        g.format_subset(w.subset),
        g.format_subset(w.below),
        w.index,
        w.bound
    )
}

fn cmd_condition_star(ctx: &mut Context, file: &Path) -> Outcome {
    let p = load(file)?;
    let c = condition_star(&p, &ctx.limits)?;
    match ctx.emit {
        Emit::Json => {
            let g = p.ground();
            let ws: Vec<Value> = c
                .witnesses
                .iter()
                .map(|w| {
                    json!({
                        "layer": w.layer,
                        "subset": g.format_subset(w.subset),
                        "below": g.format_subset(w.below),
                        "index": w.index,
                        "bound": w.bound,
                    })
                })
                .collect();
            print_json(ctx, &json!({"verdict": c.verdict, "witnesses": ws}))
        }
        _ => {
            writeln!(ctx.out, "verdict: {}", c.verdict.name())?;
            if let Some(w) = c.first_witness() {
                writeln!(ctx.out, "witness: {}", describe_witness(&p, w))?;
            }
            Ok(())
        }
    }
}

struct FamilyParams {
    z: Option<usize>,
    alphabet: Option<usize>,
    k: Option<usize>,
    m: Option<usize>,
    n: Option<usize>,
    reverse: bool,
}

fn required(value: Option<usize>, flag: &str, kind: &str) -> std::result::Result<usize, Failure> {
    value.ok_or_else(|| Failure {
        code: EXIT_SEMANTIC,
        message: format!("`{kind}` needs --{flag}"),
    })
}

fn family_spec(kind: FamilyArg, p: &FamilyParams) -> std::result::Result<FamilySpec, Failure> {
    Ok(match kind {
        FamilyArg::Containment => FamilySpec::Containment {
            z: required(p.z, "z", "containment")?,
        },
        FamilyArg::Refinement => FamilySpec::Refinement {
            z: required(p.z, "z", "refinement")?,
        },
        FamilyArg::WordPrefix => FamilySpec::WordPrefix {
            alphabet: required(p.alphabet, "alphabet", "word-prefix")?,
            k: required(p.k, "k", "word-prefix")?,
            reverse: p.reverse,
        },
        FamilyArg::Coordinatewise => FamilySpec::Coordinatewise {
            m: required(p.m, "m", "coordinatewise")?,
        },
        FamilyArg::Fence => FamilySpec::Fence {
            k: required(p.k, "k", "fence")?,
        },
        FamilyArg::Crown => FamilySpec::Crown {
            k: required(p.k, "k", "crown")?,
        },
        FamilyArg::Chain => FamilySpec::Chain {
            n: required(p.n, "n", "chain")?,
        },
        FamilyArg::Equality => FamilySpec::Equality {
            n: required(p.n, "n", "equality")?,
        },
        FamilyArg::Indifferent => FamilySpec::Indifferent {
            n: required(p.n, "n", "indifferent")?,
        },
        FamilyArg::Random => unreachable!("random orders have no family spec"),
    })
}

fn cmd_generate(
    ctx: &mut Context,
    kind: FamilyArg,
    params: FamilyParams,
    expected_bca: bool,
    density: f64,
) -> Outcome {
    let (order, expected) = if kind == FamilyArg::Random {
        if expected_bca {
            return Err(Failure {
                code: EXIT_SEMANTIC,
                message: "random orders have no closed-form best approximation".into(),
            });
        }
        let n = required(params.n, "n", "random")?;
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
        (random_preorder(n, density, &mut rng)?, None)
    } else {
        let spec = family_spec(kind, &params)?;
        let order = spec.generate()?;
        let expected = if expected_bca {
            Some(spec.expected_bca()?)
        } else {
            None
        };
        (order, expected)
    };
    if ctx.emit == Emit::Dot {
        ctx.out.write_all(hasse_dot(&order).as_bytes())?;
        if let Some(t) = &expected {
            ctx.out.write_all(hasse_dot(&t.to_preorder()).as_bytes())?;
        }
        return Ok(());
    }
    let doc = RelationDocument::compact(&order);
    match expected {
        None => writeln!(ctx.out, "{}", doc.to_json())?,
        Some(t) => print_json(
            ctx,
            &json!({"order": doc, "expected_bca": RelationDocument::from_total(&t)}),
        )?,
    }
    Ok(())
}

fn cmd_covering_radius(ctx: &mut Context, n: usize) -> Outcome {
    let ground = GroundSet::indexed("x", n).map_err(|e| match e {
        Error::EmptyGround => Failure {
            code: EXIT_SEMANTIC,
            message: "n must be at least 1".into(),
        },
        other => other.into(),
    })?;
    let r = covering_radius(ground, &ctx.limits)?;
    match ctx.emit {
        Emit::Json => print_json(
            ctx,
            &json!({"n": n, "radius": r.radius, "witness": RelationDocument::compact(&r.witness)}),
        ),
        Emit::Dot => {
            ctx.out.write_all(hasse_dot(&r.witness).as_bytes())?;
            Ok(())
        }
        Emit::Text => {
            writeln!(ctx.out, "radius: {}", r.radius)?;
            let hasse = r.witness.hasse_edges();
            let covers: Vec<String> = hasse
                .edges
                .iter()
                .map(|&(a, b)| format!("{} > {}", hasse.labels[a], hasse.labels[b]))
                .collect();
            writeln!(ctx.out, "witness classes: {}", hasse.labels.join(" ; "))?;
            writeln!(
                ctx.out,
                "witness covers: {}",
                if covers.is_empty() {
                    "none".into()
                } else {
                    covers.join(", ")
                }
            )?;
            Ok(())
        }
    }
}
