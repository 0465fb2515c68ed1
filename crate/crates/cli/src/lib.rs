//! Command-line front end: instance ingestion, command dispatch and deterministic reports.

pub mod instance;
pub mod json;
mod render;
pub mod task;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use relhom_core::diagnostics::suites::Suite;
use relhom_core::diagnostics::Verdict;
use relhom_core::DEFAULT_CUTOFF;
use serde::Serialize;
use serde_json::json;

use instance::{corpus_file, Instance, InstanceFile};
use task::{parse_suite, Property, Section, Task};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "relhom", version, about = "Exact relative homological algebra over finite-dimensional algebras")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Instance file; defaults to the built-in corpus.
    #[arg(long, global = true)]
    instance: Option<PathBuf>,
    /// Degree through which dimensions and certificates are computed.
    #[arg(long, global = true, env = "RELHOM_CUTOFF", default_value_t = DEFAULT_CUTOFF)]
    cutoff: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Omit timings so that identical input gives byte-identical output.
    #[arg(long, global = true)]
    canonical: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate an instance file.
    Validate { file: Option<PathBuf> },
    /// Proper and exact relative dimensions of a module.
    Dim {
        /// A class name, `add:<module>` or `prod:<module>`.
        #[arg(long)]
        class: String,
        #[arg(long)]
        module: String,
    },
    /// Classical Ext dimensions.
    Ext {
        #[arg(long = "m", alias = "M")]
        m: String,
        #[arg(long = "n", alias = "N")]
        n: String,
        #[arg(long, default_value_t = task::Task::default_max())]
        max: usize,
    },
    /// Relative Ext dimensions.
    Relext {
        #[arg(long)]
        class: String,
        #[arg(long = "m", alias = "M")]
        m: String,
        #[arg(long = "n", alias = "N")]
        n: String,
        #[arg(long, default_value_t = task::Task::default_max())]
        max: usize,
    },
    /// Check one property of a witness module.
    Check {
        #[arg(value_enum)]
        property: Property,
        #[arg(long = "c", alias = "C")]
        c: String,
        #[arg(long = "m", alias = "M")]
        m: Option<String>,
        /// Submodule generators for the purity check, as `1,0,0;0,1,0`.
        #[arg(long)]
        generators: Option<String>,
    },
    /// Run a suite over the built-in corpus, or over one witness of the instance.
    Verify {
        #[arg(value_parser = parse_suite_name)]
        suite: String,
        #[arg(long = "c", alias = "C")]
        c: Option<String>,
        #[arg(long = "m", alias = "M", requires = "c")]
        m: Option<String>,
    },
    /// Run the instance's tasks, or every suite over the built-in corpus.
    Report,
}

fn parse_suite_name(s: &str) -> Result<String, String> {
    parse_suite(s).map(|_| s.to_string())
}

fn parse_generators(s: &str) -> Result<Vec<Vec<i64>>> {
    s.split(';')
        .map(|v| {
            v.split(',')
                .map(|x| x.trim().parse::<i64>().with_context(|| format!("bad generator entry {x:?}")))
                .collect()
        })
        .collect()
}

/// A complete command output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Document {
    pub command: String,
    pub cutoff: usize,
    pub sections: Vec<Section>,
    pub overall: Verdict,
}

impl Document {
    pub fn exit_code(&self) -> i32 {
        match self.overall {
            Verdict::Pass => 0,
            Verdict::Finding | Verdict::Fail => 1,
        }
    }
}

fn load(path: Option<&Path>) -> Result<(String, InstanceFile)> {
    let Some(path) = path else {
        return Ok(("built-in corpus".into(), corpus_file()));
    };
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = instance::parse(&text).with_context(|| path.display().to_string())?;
    Ok((path.display().to_string(), file))
}

fn timed(canonical: bool, f: impl FnOnce() -> Result<Section>) -> Result<Section> {
    let start = Instant::now();
    let mut s = f()?;
    if !canonical {
        s.elapsed = Some(format!("{:.3}s", start.elapsed().as_secs_f64()));
    }
    Ok(s)
}

fn validate_section(source: &str, inst: &Instance) -> Section {
    let algebras: Vec<_> = inst
        .algebras
        .iter()
        .map(|(n, a)| {
            json!({
                "name": n,
                "p": a.field().p(),
                "dim": a.dim(),
                "commutative": a.is_commutative(),
                "modules": inst
                    .modules
                    .iter()
                    .filter(|m| &m.algebra == n)
                    .map(|m| format!("{}({})", m.name, m.module.dim()))
                    .collect::<Vec<_>>()
                    .join(" "),
            })
        })
        .collect();
    Section {
        title: format!("validate {source}"),
        verdict: Verdict::Pass,
        elapsed: None,
        result: json!({
            "algebras": algebras,
            "classes": inst.classes.len(),
            "tasks": inst.tasks.len(),
        }),
    }
}

/// Executes a parsed command line.
pub fn execute(cli: &Cli) -> Result<Document> {
    let cutoff = cli.cutoff;
    let canonical = cli.canonical;
    let path = match &cli.command {
        Command::Validate { file: Some(f) } => Some(f.as_path()),
        _ => cli.instance.as_deref(),
    };
    let (source, file) = load(path)?;
    let inst = file.resolve().with_context(|| source.clone())?;
    let single = |t: Task| -> Result<Vec<Section>> { Ok(vec![timed(canonical, || t.execute(&inst, cutoff))?]) };
    let (command, sections) = match &cli.command {
        Command::Validate { .. } => ("validate", vec![validate_section(&source, &inst)]),
        Command::Dim { class, module } => (
            "dim",
            single(Task::Dim {
                class: class.clone(),
                module: module.clone(),
            })?,
        ),
        Command::Ext { m, n, max } => (
            "ext",
            single(Task::Ext {
                m: m.clone(),
                n: n.clone(),
                max: *max,
            })?,
        ),
        Command::Relext { class, m, n, max } => (
            "relext",
            single(Task::Relext {
                class: class.clone(),
                m: m.clone(),
                n: n.clone(),
                max: *max,
            })?,
        ),
        Command::Check { property, c, m, generators } => (
            "check",
            single(Task::Check {
                property: *property,
                c: c.clone(),
                m: m.clone(),
                generators: generators.as_deref().map(parse_generators).transpose()?,
            })?,
        ),
        Command::Verify { suite, c, m } => (
            "verify",
            single(Task::Verify {
                suite: suite.clone(),
                c: c.clone(),
                m: m.clone(),
            })?,
        ),
        Command::Report => {
            let tasks: Vec<Task> = if inst.tasks.is_empty() {
                Suite::ALL
                    .iter()
                    .map(|s| Task::Verify {
                        suite: s.name().to_string(),
                        c: None,
                        m: None,
                    })
                    .collect()
            } else {
                inst.tasks.clone()
            };
            // collect keeps task order whatever the completion order
            let sections = tasks
                .par_iter()
                .map(|t| timed(canonical, || t.execute(&inst, cutoff)))
                .collect::<Result<Vec<_>>>()?;
            ("report", sections)
        }
    };
    let overall = sections.iter().map(|s| s.verdict).max().unwrap_or(Verdict::Pass);
    Ok(Document {
        command: command.to_string(),
        cutoff,
        sections,
        overall,
    })
}

pub fn render(doc: &Document, format: Format) -> String {
    match format {
        Format::Json => json::pretty(doc),
        Format::Text => render::text(doc),
    }
}

/// Runs the command line, writing the document to `out` and errors to `err`; returns the exit
/// code: 0 when everything passes, 1 on findings or failures, 2 on input errors.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(if code == 0 { out as &mut dyn Write } else { err as &mut dyn Write }, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok(doc) => {
            let _ = out.write_all(render(&doc, cli.format).as_bytes());
            doc.exit_code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}
