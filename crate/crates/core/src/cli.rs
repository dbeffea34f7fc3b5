//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 parse error, 3 a law failed.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::applicative::{check_applicative_laws, check_morphism_laws};
use crate::categorical::{check_categorical_axioms, check_roundtrip};
use crate::dtm::{check_kleisli_dtm_laws, Registry};
use crate::error::Error;
use crate::lambda::{parse_ln, AnyTerm, LambdaDtm, LambdaSampler, LnTerm, Mode, StructuralLambda};
use crate::ln::{check_subst_lemmas, fv_term, lc_term, open_term, subst_term};
use crate::report::LawReport;
use crate::sample::SampleConfig;
use crate::value::Atom;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_LAW_FAILED: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Named,
    Ln,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Named => Mode::Named,
            ModeArg::Ln => Mode::LocallyNameless,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputArg {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Kleisli,
    Categorical,
    Roundtrip,
    Subst,
    Applicative,
    All,
}

#[derive(Debug, Parser)]
#[command(
    name = "dtm",
    version,
    about = "Lambda terms with binders: parsing, locally nameless operations and law checks"
)]
pub struct Cli {
    /// Term syntax: named binders or locally nameless indices
    #[arg(long, value_enum, default_value = "ln", global = true)]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub output: OutputArg,
    /// Read the last term argument from standard input
    #[arg(long, global = true)]
    pub stdin: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical form of a term
    Parse { term: Option<String> },
    /// Replace indices bound by the removed outermost binder of T with U
    Open { u: String, t: Option<String> },
    /// Replace free occurrences of atom X in T with U
    Subst { x: String, u: String, t: Option<String> },
    /// Decide local closure
    Lc { t: Option<String> },
    /// List free atoms, sorted
    Fv { t: Option<String> },
    /// Run law suites and print a summary
    Laws {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, env = "DTM_SEED", default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        depth: u64,
    },
}

enum Failure {
    Usage(String),
    Parse(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => Failure::Parse(p.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    stdin: &'a mut dyn Read,
}

impl Ctx<'_> {
    fn term_text(&mut self, arg: &Option<String>) -> Result<String, Failure> {
        match (arg, self.cli.stdin) {
            (Some(_), true) => {
                Err(Failure::Usage("give the term either as an argument or with --stdin, not both".into()))
            }
            (Some(text), false) => Ok(text.clone()),
            (None, true) => {
                let mut text = String::new();
                self.stdin.read_to_string(&mut text).map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
                Ok(text)
            }
            (None, false) => Err(Failure::Usage("missing term argument (or pass --stdin)".into())),
        }
    }

    fn ln_only(&self, what: &str) -> Result<(), Failure> {
        match Mode::from(self.cli.mode) {
            Mode::LocallyNameless => Ok(()),
            Mode::Named => Err(Failure::Usage(format!("{what} works on locally nameless terms; use --mode ln"))),
        }
    }

    fn ln_term(&self, text: &str) -> Result<LnTerm, Failure> {
        parse_ln(text).map_err(|e| Failure::Parse(e.to_string()))
    }

    fn print_term(&self, t: &AnyTerm) -> String {
        match self.cli.output {
            OutputArg::Text => t.to_string(),
            OutputArg::Json => t.to_json().to_string(),
        }
    }
}

fn report_json(reports: &[LawReport]) -> serde_json::Value {
    json!(reports
        .iter()
        .map(|r| json!({
            "suite": r.suite,
            "passed": r.passed(),
            "laws": r.laws.iter().map(|l| json!({
                "name": l.name,
                "samples": l.samples,
                "failures": l.failures,
                "counterexample": l.counterexample.as_ref().map(|c| json!({
                    "inputs": c.inputs, "lhs": c.lhs, "rhs": c.rhs,
                })),
            })).collect::<Vec<_>>(),
        }))
        .collect::<Vec<_>>())
}

/// Runs the suites selected by `suite` over the lambda instance in `mode`.
pub fn run_suites(suite: Suite, mode: Mode, cfg: &SampleConfig) -> Vec<LawReport> {
    let dtm = LambdaDtm::new(mode);
    let sampler = LambdaSampler::new(mode);
    let structural = StructuralLambda::new(mode);
    let registry = Registry::standard();
    let wants = |s: Suite| suite == s || suite == Suite::All;
    let mut out = Vec::new();
    if wants(Suite::Applicative) {
        let mut report = LawReport::new("applicative registry");
        for app in &registry.applicatives {
            report.absorb(check_applicative_laws(app, cfg));
        }
        for phi in &registry.morphisms {
            report.absorb(check_morphism_laws(phi, cfg));
        }
        out.push(report);
    }
    if wants(Suite::Kleisli) {
        out.push(check_kleisli_dtm_laws(&dtm, &sampler, &registry, cfg));
    }
    if wants(Suite::Categorical) {
        out.push(check_categorical_axioms(&structural, &sampler, &registry, cfg));
    }
    if wants(Suite::Roundtrip) {
        out.push(check_roundtrip(&dtm, &structural, &sampler, &registry, cfg));
    }
    if wants(Suite::Subst) && mode == Mode::LocallyNameless {
        out.push(check_subst_lemmas(&dtm, &sampler, cfg));
    }
    out
}

fn execute(ctx: &mut Ctx<'_>, out: &mut dyn Write) -> Result<i32, Failure> {
    let cli = ctx.cli;
    let mode = Mode::from(cli.mode);
    let text = match &cli.command {
        Command::Parse { term } => {
            let text = ctx.term_text(term)?;
            ctx.print_term(&AnyTerm::parse(&text, mode)?)
        }
        Command::Open { u, t } => {
            ctx.ln_only("open")?;
            let t = ctx.term_text(t)?;
            let (u, t) = (ctx.ln_term(u)?, ctx.ln_term(&t)?);
            ctx.print_term(&AnyTerm::Ln(open_term(&u, &t)))
        }
        Command::Subst { x, u, t } => {
            ctx.ln_only("subst")?;
            let t = ctx.term_text(t)?;
            let x = match ctx.ln_term(x)? {
                crate::Term::Var(crate::LnVar::Fvar(a)) => a,
                _ => return Err(Failure::Usage(format!("substitution target must be an atom, got {x:?}"))),
            };
            let (u, t) = (ctx.ln_term(u)?, ctx.ln_term(&t)?);
            ctx.print_term(&AnyTerm::Ln(subst_term(&x, &u, &t)))
        }
        Command::Lc { t } => {
            ctx.ln_only("lc")?;
            let t = ctx.term_text(t)?;
            let verdict = lc_term(&ctx.ln_term(&t)?);
            match cli.output {
                OutputArg::Text => verdict.to_string(),
                OutputArg::Json => json!(verdict).to_string(),
            }
        }
        Command::Fv { t } => {
            ctx.ln_only("fv")?;
            let t = ctx.term_text(t)?;
            let atoms: Vec<String> = fv_term(&ctx.ln_term(&t)?).iter().map(Atom::to_string).collect();
            match cli.output {
                OutputArg::Text => atoms.join(" "),
                OutputArg::Json => json!(atoms).to_string(),
            }
        }
        Command::Laws { suite, seed, samples, depth } => {
            if *suite == Suite::Subst && mode == Mode::Named {
                return Err(Failure::Usage("the subst suite works on locally nameless terms; use --mode ln".into()));
            }
            let cfg = SampleConfig { seed: *seed, samples: *samples as usize, depth: *depth as usize };
            let reports = run_suites(*suite, mode, &cfg);
            let body = match cli.output {
                OutputArg::Text => reports.iter().map(ToString::to_string).collect::<String>(),
                OutputArg::Json => format!("{}\n", report_json(&reports)),
            };
            out.write_all(body.as_bytes()).map_err(|e| Failure::Usage(e.to_string()))?;
            let passed = reports.iter().all(LawReport::passed);
            return Ok(if passed { EXIT_OK } else { EXIT_LAW_FAILED });
        }
    };
    writeln!(out, "{text}").map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(EXIT_OK)
}

/// Runs one command line and returns its exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut ctx = Ctx { cli: &cli, stdin };
    match execute(&mut ctx, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Parse(msg)) => {
            let _ = writeln!(err, "{msg}");
            EXIT_PARSE
        }
    }
}
