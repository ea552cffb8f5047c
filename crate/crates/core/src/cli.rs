//! Command-line front end.
//!
//! Exit codes: `0` when every check passes, `1` when a check fails, `2` on
//! invalid input. Reports go to standard output, diagnostics to standard
//! error. All computations use `r = 2`, `s = 3` unless `--r`/`--s` are given.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::check::{all_passed, Check};
use crate::error::{Error, Result};
use crate::exactring::{parse_rational, Params};
use crate::fusion::{compare_shapes, Fusion, IdempotentSource, Method};
use crate::hecke::{self, HeckeAlgebra};
use crate::qalgebra::{self, SymmetricLabel};
use crate::schurweyl::{module_of, schur_weyl_audit, AuditReport, ModuleReport};
use crate::tableaux::{partitions, Partition, StandardTableau};

/// Largest arity for which fusion-based commands run without
/// `--max-m-override`.
pub const DEFAULT_MAX_M: usize = 6;

/// Number of random spectral points per Yang–Baxter check.
pub const YBE_POINTS: usize = 5;

#[derive(Debug, Parser)]
#[command(
    name = "uqrs",
    version,
    about = "Exact computations for U_{r,s}(sl_n), its Hecke algebra and the fusion procedure"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Defining relations, braid and quadratic relations, commutation with
    /// the quantum algebra, special points of Ř(x,y) and the Hecke relations.
    Relations,
    /// Print the primitive idempotent for --lambda and --tableau.
    Idempotent,
    /// Image of one idempotent on V^{⊗m}.
    Module,
    /// Schur–Weyl audit over all standard tableaux with m boxes.
    Audit,
    /// Compare fused and Jucys–Murphy idempotents for every tableau with m boxes.
    FusionCheck,
    /// Yang–Baxter equations at seeded random spectral points.
    Ybe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum MethodArg {
    #[default]
    Fusion,
    Jm,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Fusion => Method::Fusion,
            MethodArg::Jm => Method::Jm,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Parameter r, as an integer or p/q.
    #[arg(long, global = true, default_value = "2", allow_hyphen_values = true)]
    pub r: String,
    /// Parameter s, as an integer or p/q.
    #[arg(long, global = true, default_value = "3", allow_hyphen_values = true)]
    pub s: String,
    /// Dimension of V.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Tensor degree / Hecke arity.
    #[arg(long, global = true)]
    pub m: Option<usize>,
    /// Partition, e.g. "2,1".
    #[arg(long, global = true)]
    pub lambda: Option<String>,
    /// Standard tableau, rows separated by ';', e.g. "1,2;3".
    #[arg(long, global = true)]
    pub tableau: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t)]
    pub method: MethodArg,
    #[arg(long, global = true, value_enum, default_value_t)]
    pub format: Format,
    /// Seed for random spectral points.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Raise the arity cap for fusion-based commands.
    #[arg(long, global = true)]
    pub max_m_override: Option<usize>,
}

/// Validated options.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub params: Params,
    pub n: usize,
    pub m: usize,
    pub lambda: Option<Partition>,
    pub tableau: Option<StandardTableau>,
    pub method: Method,
    pub format: Format,
    pub seed: u64,
    pub max_m: usize,
}

impl RunConfig {
    pub fn from_options(o: &Options) -> Result<Self> {
        let params = Params::new(parse_rational(&o.r)?, parse_rational(&o.s)?)?;
        let lambda: Option<Partition> = o.lambda.as_deref().map(str::parse).transpose()?;
        let tableau: Option<StandardTableau> = o.tableau.as_deref().map(str::parse).transpose()?;
        if let (Some(l), Some(t)) = (&lambda, &tableau) {
            t.check_shape(l)?;
        }
        let inferred = lambda
            .as_ref()
            .map(Partition::weight)
            .or(tableau.as_ref().map(StandardTableau::size));
        let m = match (o.m, inferred) {
            (Some(m), Some(k)) if m != k => {
                return Err(Error::ArityMismatch {
                    expected: m,
                    found: k,
                })
            }
            (Some(m), _) => m,
            (None, Some(k)) => k,
            (None, None) => 2,
        };
        if m == 0 {
            return Err(Error::Parse("--m must be at least 1".into()));
        }
        let n = o.n.unwrap_or(2);
        if n < 2 {
            return Err(Error::Parse("--n must be at least 2".into()));
        }
        Ok(RunConfig {
            params,
            n,
            m,
            lambda,
            tableau,
            method: o.method.into(),
            format: o.format,
            seed: o.seed,
            max_m: o.max_m_override.unwrap_or(DEFAULT_MAX_M),
        })
    }

    fn shape_and_tableau(&self) -> Result<(Partition, StandardTableau)> {
        match (&self.lambda, &self.tableau) {
            (Some(l), Some(t)) => Ok((l.clone(), t.clone())),
            _ => Err(Error::Parse("--lambda and --tableau are required".into())),
        }
    }

    fn check_fusion_cap(&self, uses_fusion: bool) -> Result<()> {
        if uses_fusion && self.m > self.max_m {
            return Err(Error::Parse(format!(
                "fusion above m = {} needs --max-m-override",
                self.max_m
            )));
        }
        Ok(())
    }
}

/// What a command prints and how it exits.
struct Outcome {
    text: String,
    json: serde_json::Value,
    passed: bool,
}

fn check_lines(checks: &[Check]) -> String {
    let mut s = String::new();
    for c in checks {
        s.push_str(if c.passed { "PASS " } else { "FAIL " });
        s.push_str(&c.name);
        s.push('\n');
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    s.push_str(&format!("{} checks, {} failed\n", checks.len(), failed));
    s
}

fn cmd_relations(cfg: &RunConfig) -> Outcome {
    let (n, m, p) = (cfg.n, cfg.m, &cfg.params);
    let mut checks = qalgebra::relation_suite(&qalgebra::defining_rep(n, p), p);
    if m >= 2 {
        checks.extend(qalgebra::relation_suite(&qalgebra::coproduct_rep(n, m, p), p));
        checks.extend(qalgebra::braid_suite(n, m, p));
        checks.extend(qalgebra::commutation_suite(n, m, p));
    }
    let special = qalgebra::special_points(n, p);
    checks.extend(special.checks);
    checks.extend(hecke::relation_suite(&HeckeAlgebra::new(m, p.clone())));
    let label = match special.label {
        Some(SymmetricLabel::ImageAtSOverR) => "S2 = image of R(1, s/r), L2 = image of R(1, r/s)",
        Some(SymmetricLabel::ImageAtROverS) => "S2 = image of R(1, r/s), L2 = image of R(1, s/r)",
        None => "special points do not give S2 and L2",
    };
    Outcome {
        text: format!("{label}\n{}", check_lines(&checks)),
        json: json!({ "special_points": label, "checks": checks, "passed": all_passed(&checks) }),
        passed: all_passed(&checks),
    }
}

fn cmd_ybe(cfg: &RunConfig) -> Outcome {
    let checks = qalgebra::ybe_suite(cfg.n, &cfg.params, cfg.seed, YBE_POINTS);
    Outcome {
        text: check_lines(&checks),
        json: json!({ "seed": cfg.seed, "checks": checks, "passed": all_passed(&checks) }),
        passed: all_passed(&checks),
    }
}

fn cmd_idempotent(cfg: &RunConfig) -> Result<Outcome> {
    let (lambda, t) = cfg.shape_and_tableau()?;
    cfg.check_fusion_cap(cfg.method != Method::Jm)?;
    let source = IdempotentSource::new(cfg.m, cfg.params.clone(), cfg.method);
    let (e, agree) = source.idempotent(&lambda, &t)?;
    let mut text = format!("{e}\n");
    let json = match agree {
        Some(eq) => {
            text.push_str(&format!("equal: {eq}\n"));
            json!({ "element": e.to_json(), "equal": eq })
        }
        None => e.to_json(),
    };
    Ok(Outcome {
        text,
        json,
        passed: agree.unwrap_or(true),
    })
}

fn module_text(r: &ModuleReport) -> String {
    let mut s = format!("lambda {} tableau {} n {}\n", r.lambda, r.tableau, r.n);
    s.push_str(&format!("rank {} (predicted {})\n", r.rank, r.predicted_dim));
    match &r.highest_weight {
        Some(w) => s.push_str(&format!("highest weight {w}\n")),
        None => s.push_str("highest weight none\n"),
    }
    for (i, (a, b)) in r.hw_eigenvalues.iter().enumerate() {
        s.push_str(&format!("w{0} = {a}, w'{0} = {b}\n", i + 1));
    }
    for (w, k) in &r.weight_multiplicities {
        s.push_str(&format!("weight {w}: {k}\n"));
    }
    s.push_str(&check_lines(&r.checks));
    s
}

fn cmd_module(cfg: &RunConfig) -> Result<Outcome> {
    let (lambda, t) = cfg.shape_and_tableau()?;
    cfg.check_fusion_cap(cfg.method != Method::Jm)?;
    let report = module_of(&lambda, &t, cfg.n, &cfg.params, cfg.method)?;
    Ok(Outcome {
        text: module_text(&report),
        json: serde_json::to_value(&report).expect("report serializes"),
        passed: report.passed(),
    })
}

fn audit_text(a: &AuditReport) -> String {
    let mut s = format!("n {} m {}\n", a.n, a.m);
    s.push_str(&format!("completeness {}\n", a.dimension_count));
    s.push_str(&format!("commutant dimension {}\n", a.commutant_dim));
    for r in &a.modules {
        let hw = r
            .highest_weight
            .as_ref()
            .map_or_else(|| "none".to_string(), ToString::to_string);
        let status = if r.passed() { "ok" } else { "FAILED" };
        s.push_str(&format!(
            "lambda {} tableau {} rank {}/{} hw {} {}\n",
            r.lambda, r.tableau, r.rank, r.predicted_dim, hw, status
        ));
    }
    s.push_str(&check_lines(&a.checks));
    s
}

fn cmd_audit(cfg: &RunConfig) -> Result<Outcome> {
    cfg.check_fusion_cap(cfg.method != Method::Jm)?;
    let report = schur_weyl_audit(cfg.n, cfg.m, &cfg.params, cfg.method)?;
    Ok(Outcome {
        text: audit_text(&report),
        json: serde_json::to_value(&report).expect("report serializes"),
        passed: report.passed(),
    })
}

fn cmd_fusion_check(cfg: &RunConfig) -> Result<Outcome> {
    cfg.check_fusion_cap(true)?;
    let fusion = Fusion::new(cfg.m, cfg.params.clone());
    let shapes = match &cfg.lambda {
        Some(l) => vec![l.clone()],
        None => partitions(cfg.m),
    };
    let report = compare_shapes(&fusion, &shapes);
    let mut text = String::new();
    for c in &report {
        text.push_str(&format!(
            "lambda {} tableau {} equal {}",
            c.lambda, c.tableau, c.equal
        ));
        if let Some(e) = &c.error {
            text.push_str(&format!(" ({e})"));
        }
        text.push('\n');
    }
    let passed = report.iter().all(|c| c.equal);
    text.push_str(&format!(
        "{} comparisons, {} unequal\n",
        report.len(),
        report.iter().filter(|c| !c.equal).count()
    ));
    Ok(Outcome {
        text,
        json: serde_json::to_value(&report).expect("report serializes"),
        passed,
    })
}

/// Runs a parsed command line and returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let outcome = RunConfig::from_options(&cli.options).and_then(|cfg| {
        let o = match cli.command {
            Command::Relations => cmd_relations(&cfg),
            Command::Ybe => cmd_ybe(&cfg),
            Command::Idempotent => cmd_idempotent(&cfg)?,
            Command::Module => cmd_module(&cfg)?,
            Command::Audit => cmd_audit(&cfg)?,
            Command::FusionCheck => cmd_fusion_check(&cfg)?,
        };
        Ok((cfg.format, o))
    });
    match outcome {
        Ok((format, o)) => {
            let written = match format {
                Format::Text => write!(out, "{}", o.text),
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&o.json).expect("json serializes")
                ),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
            if o.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            code
        }
    }
}
