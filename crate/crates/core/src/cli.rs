//! Command-line front end. Every subcommand writes JSON (default) or a short
//! text report; exit status 0 means success or an empty report, 1 means
//! violations were found and 2 means a usage or input error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::adc::json::{complex_from_str, complex_to_string, morphism_from_str};
use crate::adc::{BasisElement, DirectedComplex};
use crate::nerve::{Nerve, Orientals};
use crate::omega::json::{nu_list_to_string, table_to_string};
use crate::omega::{atom, closure_from_atoms, enumerate_nu, NuElement, DEFAULT_BUDGET, DEFAULT_COEFF_BOUND};
use crate::simplex::{delta, horn_complex, vee_complex, w_complex};
use crate::stratified::{check_complicial_axioms, from_nerve, StratifiedSet};
use crate::wedge::{check_identities, WedgeContext};
use crate::{Error, Result};

/// Environment variable overriding the default element budget.
pub const BUDGET_ENV: &str = "COMPLICIAL_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "complicial", version, about = "Directed complexes, orientals, nerves and complicial sets")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
    /// Element budget for tabulations (default 100000, or $COMPLICIAL_BUDGET).
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit one of the simplex complexes.
    Complex {
        #[arg(value_enum)]
        kind: ComplexKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Validate a complex or morphism given as JSON.
    Check {
        #[arg(value_enum)]
        what: CheckKind,
        #[command(flatten)]
        input: InputArg,
    },
    /// List the atoms of the oriental on the n-simplex.
    Atoms {
        #[arg(long)]
        n: usize,
    },
    /// Tabulate the oriental on the n-simplex.
    Nu {
        #[arg(value_enum)]
        method: NuMethod,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dim_bound: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_COEFF_BOUND)]
        coeff_bound: i64,
        /// Emit the operation tables instead of the element list (closure only).
        #[arg(long)]
        table: bool,
    },
    /// Tabulate the nerve of νK for a complex K given as JSON.
    Nerve {
        /// Complex JSON file, or "-" for stdin.
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        max_dim: usize,
        /// Emit the underlying stratified set instead of atom images.
        #[arg(long)]
        stratified: bool,
    },
    /// Check the complicial-set conditions on a stratified set.
    Complicial {
        #[command(flatten)]
        input: InputArg,
    },
    /// Compute a wedge x ∧_i y of two elements of dimension --dim.
    Wedge {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
        #[arg(long)]
        i: usize,
    },
    /// Check the complicial identities for the wedges of a stratified set.
    Identities {
        #[command(flatten)]
        input: InputArg,
        /// Truncate the set to this dimension first.
        #[arg(long)]
        max_dim: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Input JSON file; stdin when omitted or "-".
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ComplexKind {
    Delta,
    Horn,
    Vee,
    W,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Unital,
    Loopfree,
    Complex,
    Morphism,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NuMethod {
    Enumerate,
    Closure,
}

/// What a subcommand produced: the text to print and whether it found
/// violations.
struct Outcome {
    text: String,
    violations: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, violations: false }
    }
}

/// Parses `args` and runs the subcommand; returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(rendered.as_bytes()) } else { stderr.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok(out) => {
            let _ = writeln!(stdout, "{}", out.text.trim_end());
            i32::from(out.violations)
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn budget(cli: &Cli) -> Result<usize> {
    if let Some(b) = cli.budget {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Input(format!("{BUDGET_ENV}={v} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn read_input(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<String> {
    let mut s = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            s = std::fs::read_to_string(p).map_err(|e| Error::Input(format!("{}: {e}", p.display())))?;
        }
        _ => {
            stdin.read_to_string(&mut s).map_err(|e| Error::Input(format!("stdin: {e}")))?;
        }
    }
    Ok(s)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn need_k(kind: &str, k: Option<usize>) -> Result<usize> {
    k.ok_or_else(|| Error::Input(format!("`complex {kind}` needs --k")))
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome> {
    let text = cli.format == Format::Text;
    match &cli.command {
        Command::Complex { kind, n, k } => {
            let complex = match kind {
                ComplexKind::Delta => delta(*n),
                ComplexKind::Horn => horn_complex(*n, need_k("horn", *k)?)?.complex,
                ComplexKind::Vee => vee_complex(*n, need_k("vee", *k)?)?.complex,
                ComplexKind::W => w_complex(*n, need_k("w", *k)?)?.w,
            };
            Ok(Outcome::ok(if text { complex_text(&complex) } else { complex_to_string(&complex) }))
        }
        Command::Check { what, input } => check(*what, &read_input(input.input.as_ref(), stdin)?, text),
        Command::Atoms { n } => {
            let k = delta(*n);
            let atoms: Vec<NuElement> = k.basis_elements().map(|b| atom(&k, &b)).collect::<Result<_>>()?;
            Ok(Outcome::ok(if text { nu_text(&atoms) } else { nu_list_to_string(&atoms) }))
        }
        Command::Nu { method, n, dim_bound, coeff_bound, table } => {
            let k = delta(*n);
            let dim_bound = dim_bound.unwrap_or(*n);
            let elements = match method {
                NuMethod::Enumerate => {
                    if *table {
                        return Err(Error::Input("--table is only available with `nu closure`".into()));
                    }
                    if *coeff_bound < 1 {
                        return Err(Error::Input("--coeff-bound must be at least 1".into()));
                    }
                    enumerate_nu(&k, dim_bound, *coeff_bound)
                }
                NuMethod::Closure => {
                    let t = closure_from_atoms(&k, dim_bound, budget(cli)?)?;
                    if *table {
                        return Ok(Outcome::ok(table_to_string(&t)));
                    }
                    t.elements().to_vec()
                }
            };
            Ok(Outcome::ok(if text { nu_text(&elements) } else { nu_list_to_string(&elements) }))
        }
        Command::Nerve { target, max_dim, stratified } => {
            let complex = complex_from_str(&read_input(Some(target), stdin)?)?;
            let budget = budget(cli)?;
            let top = complex.top_dim().unwrap_or(0);
            let table = Arc::new(closure_from_atoms(&complex, top, budget)?);
            let nerve = Nerve::enumerate(table, Arc::new(Orientals::new(*max_dim)?), *max_dim, budget)?;
            if *stratified {
                let set = from_nerve(&nerve, *max_dim)?;
                return Ok(Outcome::ok(if text { set_text(&set) } else { set.to_json_string() }));
            }
            if text {
                let lines: Vec<String> = (0..=*max_dim)
                    .map(|n| {
                        let els = nerve.elements(n);
                        let thin = els.iter().filter(|x| n > 0 && nerve.is_thin(x).unwrap_or(false)).count();
                        format!("dimension {n}: {} elements, {thin} thin", els.len())
                    })
                    .collect();
                return Ok(Outcome::ok(lines.join("\n")));
            }
            Ok(Outcome::ok(json(&nerve.to_json())))
        }
        Command::Complicial { input } => {
            let set = StratifiedSet::from_json_str(&read_input(input.input.as_ref(), stdin)?)?;
            let report = check_complicial_axioms(&set)?;
            let out = if text {
                let mut lines = vec![format!(
                    "checked {} complicial horns up to dimension {}, {} indeterminate at the boundary",
                    report.horns_checked, report.max_dim, report.indeterminate
                )];
                lines.extend(report.violations.iter().map(|v| {
                    format!("clause ({}) in dimension {}: {} (elements {:?})", v.clause, v.dim, v.detail, v.elements)
                }));
                lines.join("\n")
            } else {
                json(&report)
            };
            Ok(Outcome { text: out, violations: !report.is_empty() })
        }
        Command::Wedge { input, dim, x, y, i } => {
            let set = StratifiedSet::from_json_str(&read_input(input.input.as_ref(), stdin)?)?;
            let ctx = WedgeContext::new(set)?;
            let w = ctx.wedge(*dim, *x, *y, *i)?;
            let set = ctx.set();
            let faces = set.faces[dim + 1][w].clone();
            Ok(Outcome::ok(if text {
                format!("{x} ∧_{i} {y} = element {w} of dimension {}, faces {faces:?}", dim + 1)
            } else {
                json(&serde_json::json!({ "dim": dim + 1, "element": w, "faces": faces, "thin": set.is_thin(dim + 1, w) }))
            }))
        }
        Command::Identities { input, max_dim } => {
            let mut set = StratifiedSet::from_json_str(&read_input(input.input.as_ref(), stdin)?)?;
            if let Some(d) = max_dim {
                if *d > set.max_dim() {
                    return Err(Error::NotTabulated(format!("the input stops at dimension {}", set.max_dim())));
                }
                set = set.truncate(*d);
            }
            let report = check_identities(&WedgeContext::new(set)?);
            let out = if text {
                report
                    .axioms
                    .iter()
                    .map(|a| {
                        format!(
                            "({}) {} checked, {} skipped at the boundary, {} violations",
                            a.axiom,
                            a.instances_checked,
                            a.skipped_at_boundary,
                            a.violations.len()
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            } else {
                json(&report)
            };
            Ok(Outcome { text: out, violations: !report.is_empty() })
        }
    }
}

fn check(what: CheckKind, input: &str, text: bool) -> Result<Outcome> {
    if what == CheckKind::Morphism {
        let f = morphism_from_str(input)?;
        let report = f.validate();
        let out = if text { issues_text(&report.issues) } else { json(&report) };
        return Ok(Outcome { text: out, violations: !report.is_valid() });
    }
    let k = complex_from_str(input)?;
    match what {
        CheckKind::Unital => {
            let bad: Vec<String> = k.non_unital_elements().iter().map(BasisElement::to_string).collect();
            let out = if text {
                if bad.is_empty() { "unital".to_string() } else { format!("not unital at {}", bad.join(", ")) }
            } else {
                json(&serde_json::json!({ "unital": bad.is_empty(), "witnesses": bad }))
            };
            Ok(Outcome { text: out, violations: !bad.is_empty() })
        }
        CheckKind::Loopfree => {
            let lf = k.loop_freeness()?;
            let cycle: Option<Vec<String>> = lf.witness.as_ref().map(|c| c.iter().map(BasisElement::to_string).collect());
            let out = match (&cycle, text) {
                (None, true) => "loop-free".to_string(),
                (Some(c), true) => format!("not loop-free: {}", c.join(" < ")),
                (_, false) => json(&serde_json::json!({ "loop_free": cycle.is_none(), "cycle": cycle })),
            };
            Ok(Outcome { text: out, violations: cycle.is_some() })
        }
        _ => {
            let report = k.validate();
            let out = if text { issues_text(&report.issues) } else { json(&report) };
            Ok(Outcome { text: out, violations: !report.is_valid() })
        }
    }
}

fn issues_text(issues: &[crate::adc::Issue]) -> String {
    if issues.is_empty() {
        return "valid".into();
    }
    issues.iter().map(|i| format!("{:?} at {}: {}", i.kind, i.subject, i.detail)).collect::<Vec<_>>().join("\n")
}

fn complex_text(k: &DirectedComplex) -> String {
    let mut lines = Vec::new();
    for b in k.basis_elements() {
        if b.dim == 0 {
            lines.push(format!("{} (dim 0, ε = {})", b.cell, k.augmentation_of(&b.cell)));
        } else {
            let d = k.boundary_of(&b.cell).expect("registered");
            lines.push(format!("{} (dim {}, ∂ = {d})", b.cell, b.dim));
        }
    }
    lines.join("\n")
}

fn nu_text(xs: &[NuElement]) -> String {
    let mut lines = vec![format!("{} elements", xs.len())];
    lines.extend(xs.iter().map(ToString::to_string));
    lines.join("\n")
}

fn set_text(set: &StratifiedSet) -> String {
    (0..=set.max_dim())
        .map(|n| {
            let thin = set.thin[n].iter().filter(|&&t| t).count();
            format!("dimension {n}: {} elements, {thin} thin", set.len(n))
        })
        .collect::<Vec<_>>()
        .join("\n")
}
