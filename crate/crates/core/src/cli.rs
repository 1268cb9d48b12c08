//! The `specrep` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::adjacency;
use crate::classical::Classical;
use crate::coxeter::{parse_type, CompositeType, CoxeterLabel};
use crate::duality::dual;
use crate::error::{Error, Result};
use crate::exceptional;
use crate::graph;
use crate::rep::{split_components, split_copy_tag, SpecialRep, TabulatedRep};
use crate::report::Report;
use crate::suites::{self, SuiteOptions};
use crate::symbols::parse_entries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// List the special representations with a-values and duals.
    Enumerate,
    /// Write the adjacency graph.
    Graph,
    /// Describe one special representation.
    Info,
    /// Print the dual of one special representation.
    Dual,
    /// Run verification suites.
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "specrep", version, about = "Special representations of finite Coxeter groups")]
pub struct CliConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Coxeter type, e.g. B5, D4xA2, I2(7)
    #[arg(long = "type", value_name = "T")]
    pub ty: Option<String>,
    /// Restrict verification to one classical family (A, B or D)
    #[arg(long, value_name = "A|B|D")]
    pub family: Option<String>,
    #[arg(long, value_name = "N")]
    pub max_rank: Option<u32>,
    /// Representation, e.g. "(0,1,2)", "(1,1)[II]", "8'_9", "<(1,2), 2_1>"
    #[arg(long, value_name = "R")]
    pub rep: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, value_name = "S")]
    pub suite: Option<String>,
    /// Write output to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Treat documented anomalies as failures
    #[arg(long)]
    pub strict: bool,
    /// Run every suite
    #[arg(long)]
    pub all: bool,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses a representation of the given type.
pub fn parse_rep(ty: &CompositeType, text: &str) -> Result<SpecialRep> {
    let parts = split_components(text)?;
    let factors = ty.factors();
    if parts.len() != factors.len() {
        return Err(Error::Parse(format!(
            "{text:?} has {} components but {ty} has {} factors",
            parts.len(),
            factors.len()
        )));
    }
    let mut reps = parts
        .iter()
        .zip(factors)
        .map(|(p, &l)| parse_factor_rep(l, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(if reps.len() == 1 {
        reps.pop().unwrap()
    } else {
        SpecialRep::Product(reps)
    })
}

fn parse_factor_rep(label: CoxeterLabel, text: &str) -> Result<SpecialRep> {
    match adjacency::classical_family(label) {
        Some((fam, r)) => {
            let (body, copy) = split_copy_tag(text)?;
            let entries = parse_entries(body)?;
            let class = fam.class_of(&entries)?;
            if class.rank() != r {
                return Err(Error::RankMismatch {
                    what: body.to_string(),
                    found: class.rank(),
                    expected: r,
                });
            }
            if copy.is_some() && !class.is_degenerate() {
                return Err(Error::Parse(format!("{body} is not a split class; drop the copy tag")));
            }
            Ok(SpecialRep::Classical { class, copy })
        }
        None => {
            let wanted = TabulatedRep::parse(text)?;
            let rep = exceptional::lookup(label, &wanted)
                .ok_or_else(|| Error::UnknownRep(format!("{wanted} in {label}")))?;
            Ok(SpecialRep::Tabulated { group: label, rep })
        }
    }
}

fn need<'a>(v: &'a Option<String>, flag: &str) -> std::result::Result<&'a str, Failure> {
    v.as_deref()
        .ok_or_else(|| Failure::Usage(format!("--{flag} is required")))
}

fn execute(cfg: &CliConfig, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Usage(format!("write failed: {e}"));
    let text = match cfg.command {
        Command::Enumerate => {
            let ty = parse_type(need(&cfg.ty, "type")?)?;
            let g = graph::build_graph(&ty)?;
            match cfg.format {
                Format::Json => format!("{:#}\n", g.to_json()["nodes"]),
                Format::Text | Format::Dot => {
                    let mut s = String::new();
                    for (n, a) in g.nodes.iter().zip(&g.a_values) {
                        s.push_str(&format!("{n}\ta={a}\tdual={}", dual(n)));
                        if n.is_degenerate() {
                            s.push_str("\tdegenerate");
                        }
                        if n.is_odd() {
                            s.push_str("\todd");
                        }
                        s.push('\n');
                    }
                    s
                }
            }
        }
        Command::Graph => {
            let ty = parse_type(need(&cfg.ty, "type")?)?;
            let g = graph::build_graph(&ty)?;
            match cfg.format {
                Format::Dot => g.to_dot(),
                Format::Json => format!("{:#}\n", g.to_json()),
                Format::Text => g.to_text(),
            }
        }
        Command::Info | Command::Dual => {
            let ty = parse_type(need(&cfg.ty, "type")?)?;
            let rep = parse_rep(&ty, need(&cfg.rep, "rep")?)?;
            let d = dual(&rep);
            if cfg.command == Command::Dual {
                format!("{d}\n")
            } else {
                let mut s = format!("rep: {rep}\ntype: {ty}\na: {}\ndual: {d}\n", rep.a_value());
                s.push_str(&format!("degenerate: {}\n", if rep.is_degenerate() { "yes" } else { "no" }));
                if rep.is_odd() {
                    s.push_str("odd: yes\n");
                }
                if let Some(p) = rep.partition_text() {
                    s.push_str(&format!("partition: {p}\n"));
                }
                s
            }
        }
        Command::Verify => return verify(cfg, out),
    };
    match &cfg.out {
        Some(path) => std::fs::write(path, text).map_err(io)?,
        None => out.write_all(text.as_bytes()).map_err(io)?,
    }
    Ok(())
}

fn verify(cfg: &CliConfig, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let family = cfg.family.as_deref().map(str::parse::<Classical>).transpose()?;
    let opts = SuiteOptions {
        family,
        max_rank: cfg.max_rank,
    };
    let reports: Vec<Report> = match (&cfg.suite, cfg.all) {
        (Some(s), false) => vec![suites::run_suite(s, &opts)?],
        (None, true) => suites::run_all(&opts)?,
        _ => return Err(Failure::Usage("verify needs exactly one of --suite S or --all".into())),
    };
    let mut text = String::new();
    for r in &reports {
        text.push_str(&format!("{r}\n"));
        if r.suite == "thm54" && r.passed() {
            text.push_str("equal at all ranks\n");
        }
    }
    // summaries again, in strict mode if requested, as the final lines
    if cfg.strict {
        for r in &reports {
            text.push_str(&format!("{}\n", r.summary_line(true)));
        }
    }
    match &cfg.out {
        Some(path) => std::fs::write(path, &text),
        None => out.write_all(text.as_bytes()),
    }
    .map_err(|e| Failure::Usage(format!("write failed: {e}")))?;
    let ok = reports
        .iter()
        .all(|r| if cfg.strict { r.passed_strict() } else { r.passed() });
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

/// Runs the command line; returns the process exit code (0 success,
/// 1 verification failure, 2 usage error).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cfg, out) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let mut argv = vec!["specrep"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn info_and_dual() {
        let (code, out, _) = call(&["info", "--type", "B2", "--rep", "(0,1,2)"]);
        assert_eq!(code, 0);
        assert!(out.contains("a: 1"), "{out}");
        let (code, out, _) = call(&["dual", "--type", "E8", "--rep", "1_0"]);
        assert_eq!((code, out.trim()), (0, "1_120"));
        let (code, _, err) = call(&["info", "--type", "A4", "--rep", "(1,3)"]);
        assert_eq!(code, 2);
        assert!(err.contains("rank mismatch"), "{err}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["graph", "--type", "Q7"]).0, 2);
        assert_eq!(call(&["verify", "--suite", "nope"]).0, 2);
        assert_eq!(call(&["verify"]).0, 2);
    }

    #[test]
    fn product_rep() {
        let ty = parse_type("D2xG2").unwrap();
        let r = parse_rep(&ty, "<(1,1)[I], 2_1>").unwrap();
        assert_eq!(r.a_value(), 2);
        assert!(parse_rep(&ty, "(1,1)").is_err());
    }
}
