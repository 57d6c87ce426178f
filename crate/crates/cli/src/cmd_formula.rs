use clap::{Subcommand, ValueEnum};
use serde_json::json;

use schat_core::folio::{
    check_structure, lookup, parse, pretty, pretty_ascii, verify, Binding, CheckOptions, EvalConfig,
    Evaluator, Formula, NatStructure, QzStructure, Structure, StructureReport, TriBool, ZxStructure,
};

use crate::output::{usage, CliError, CmdResult, Ctx, Format, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StructureName {
    Nat,
    Zx,
    Qz,
}

#[derive(Debug, Subcommand)]
pub enum FormulaCmd {
    /// Parse a formula (or a catalog entry via --name) and print it back.
    Parse {
        text: Option<String>,
        #[arg(long, conflicts_with = "text")]
        name: Option<String>,
    },
    /// Evaluate a formula in a structure under bounded quantifier search.
    Eval {
        #[arg(long, value_enum)]
        structure: StructureName,
        text: Option<String>,
        #[arg(long, conflicts_with = "text")]
        name: Option<String>,
        /// Free-variable assignment `var=value`; repeatable.
        #[arg(long = "bind")]
        binds: Vec<String>,
        /// Candidate list `var=v1;v2;…` tried first for a quantified variable; repeatable.
        #[arg(long = "guide")]
        guides: Vec<String>,
    },
    /// Check catalog axioms on sampled instances; exits 1 on any counterexample.
    CheckStructure {
        #[arg(long, value_enum)]
        structure: StructureName,
        /// Comma-separated catalog names; defaults to A1–A21.
        #[arg(long, value_delimiter = ',')]
        axioms: Vec<String>,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        instances: u64,
        /// Candidate list `var=v1;v2;…` for a leading universal variable; repeatable.
        #[arg(long = "guide")]
        guides: Vec<String>,
        /// Quantify over {0, …, N} only (nat).
        #[arg(long)]
        finite: Option<u64>,
    },
}

pub fn run(ctx: &Ctx, cmd: FormulaCmd) -> CmdResult {
    match cmd {
        FormulaCmd::Parse { text, name } => parse_cmd(ctx, &formula_arg(text, name)?),
        FormulaCmd::Eval { structure, text, name, binds, guides } => {
            let f = formula_arg(text, name)?;
            let b = ctx.degree_bound;
            match structure {
                StructureName::Nat => eval(ctx, &NatStructure::new(), &f, &binds, &guides),
                StructureName::Zx => eval(ctx, &ZxStructure::new(b), &f, &binds, &guides),
                StructureName::Qz => eval(ctx, &QzStructure::new(b), &f, &binds, &guides),
            }
        }
        FormulaCmd::CheckStructure { structure, axioms, instances, guides, finite } => {
            let names: Vec<String> = if axioms.is_empty() {
                (1..=21).map(|i| format!("A{i}")).collect()
            } else {
                axioms.iter().map(|a| a.trim().to_string()).collect()
            };
            let b = ctx.degree_bound;
            if finite.is_some() && structure != StructureName::Nat {
                return Err(usage("--finite", "only available for nat"));
            }
            let n = instances as usize;
            match (structure, finite) {
                (StructureName::Nat, Some(k)) => check(ctx, &NatStructure::exhaustive(k), &names, n, &guides, None),
                (StructureName::Nat, None) => check(ctx, &NatStructure::new(), &names, n, &guides, None),
                (StructureName::Zx, _) => check(ctx, &ZxStructure::new(b), &names, n, &guides, Some(b)),
                (StructureName::Qz, _) => check(ctx, &QzStructure::new(b), &names, n, &guides, Some(b)),
            }
        }
    }
}

fn formula_arg(text: Option<String>, name: Option<String>) -> Result<Formula, CliError> {
    match (text, name) {
        (Some(t), _) => parse(&t).map_err(|e| usage("formula", e)),
        (None, Some(n)) => lookup(&n).ok_or_else(|| usage("--name", format!("no catalog entry `{n}`"))),
        (None, None) => Err(CliError::Usage("formula: give a formula or --name".into())),
    }
}

fn parse_cmd(ctx: &Ctx, f: &Formula) -> CmdResult {
    let free: Vec<String> = f.free_vars_ordered();
    let fields = [
        ("unicode", pretty(f)),
        ("ascii", pretty_ascii(f)),
        ("free_vars", free.join(",")),
        ("quantifier_free", f.is_quantifier_free().to_string()),
    ];
    match ctx.format {
        Format::Plain => ctx.lines([pretty(f), pretty_ascii(f)])?,
        Format::Json => ctx.json(
            "formula parse",
            json!({
                "unicode": pretty(f),
                "ascii": pretty_ascii(f),
                "free_vars": free,
                "quantifier_free": f.is_quantifier_free(),
            }),
        )?,
        Format::Csv => {
            let rows: Vec<Vec<String>> = fields.iter().map(|(k, v)| vec![k.to_string(), v.clone()]).collect();
            ctx.csv(&["field", "value"], &rows)?
        }
    }
    Ok(Status::Clean)
}

fn split_assignment<'a>(flag: &str, text: &'a str) -> Result<(&'a str, &'a str), CliError> {
    text.split_once('=')
        .map(|(v, rest)| (v.trim(), rest))
        .filter(|(v, _)| !v.is_empty())
        .ok_or_else(|| usage(flag, format!("`{text}` is not of the form var=value")))
}

fn parse_guides<S: Structure>(s: &S, guides: &[String]) -> Result<Vec<(String, Vec<S::Elem>)>, CliError> {
    guides
        .iter()
        .map(|g| {
            let (var, rest) = split_assignment("--guide", g)?;
            let values = rest
                .split(';')
                .filter(|v| !v.trim().is_empty())
                .map(|v| s.parse_elem(v).map_err(|e| usage("--guide", e)))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((var.to_string(), values))
        })
        .collect()
}

fn eval_config(ctx: &Ctx) -> EvalConfig {
    EvalConfig { budget: ctx.budget, seed: ctx.seed, ..EvalConfig::default() }
}

fn bindings<E: std::fmt::Display>(choices: &[(String, E)]) -> Vec<Binding> {
    choices.iter().map(|(var, v)| Binding { var: var.clone(), value: v.to_string() }).collect()
}

fn show(bs: &[Binding]) -> String {
    bs.iter().map(|b| format!("{}={}", b.var, b.value)).collect::<Vec<_>>().join(" ")
}

fn eval<S: Structure>(ctx: &Ctx, s: &S, f: &Formula, binds: &[String], guides: &[String]) -> CmdResult {
    let env: Vec<(String, S::Elem)> = binds
        .iter()
        .map(|b| {
            let (var, value) = split_assignment("--bind", b)?;
            Ok((var.to_string(), s.parse_elem(value).map_err(|e| usage("--bind", e))?))
        })
        .collect::<Result<_, CliError>>()?;
    let mut ev = Evaluator::new(s, eval_config(ctx));
    for (var, values) in parse_guides(s, guides)? {
        ev = ev.guide(&var, values);
    }
    let o = ev.eval(f, &env).map_err(|e| usage("formula", e))?;
    let choices = o.cert.as_ref().map(|c| bindings(&c.choices())).unwrap_or_default();
    let verified = match &o.cert {
        Some(c) => verify(s, f, &env, o.value == TriBool::True, c),
        None => true,
    };
    let refutations: Vec<Vec<Binding>> = o
        .refuted
        .iter()
        .map(|r| {
            let mut b = vec![Binding { var: r.var.clone(), value: r.value.to_string() }];
            b.extend(bindings(&r.cert.choices()));
            b
        })
        .collect();
    match ctx.format {
        Format::Plain => {
            let mut lines = vec![
                format!("structure={} seed={} budget={}", s.name(), ctx.seed, ctx.budget),
                format!("value={}", o.value),
            ];
            if !choices.is_empty() {
                let kind = if o.value == TriBool::True { "witness" } else { "counterexample" };
                lines.push(format!("{kind} {}", show(&choices)));
            }
            lines.extend(refutations.iter().map(|r| format!("refuted {}", show(r))));
            lines.push(format!("budget_exhausted={} verified={}", o.budget_exhausted, verified));
            ctx.lines(lines)?
        }
        Format::Json => ctx.json(
            "formula eval",
            json!({
                "structure": s.name(),
                "formula": pretty(f),
                "budget": ctx.budget,
                "value": o.value,
                "choices": choices,
                "refutations": refutations,
                "budget_exhausted": o.budget_exhausted,
                "verified": verified,
            }),
        )?,
        Format::Csv => {
            let mut rows = vec![vec!["value".to_string(), String::new(), o.value.to_string()]];
            rows.extend(choices.iter().map(|b| vec!["choice".into(), b.var.clone(), b.value.clone()]));
            for (i, r) in refutations.iter().enumerate() {
                rows.extend(r.iter().map(|b| vec![format!("refutation{i}"), b.var.clone(), b.value.clone()]));
            }
            rows.push(vec!["verified".into(), String::new(), verified.to_string()]);
            ctx.csv(&["kind", "var", "value"], &rows)?
        }
    }
    Ok(Status::from_clean(verified))
}

fn check<S: Structure>(
    ctx: &Ctx,
    s: &S,
    names: &[String],
    instances: usize,
    guides: &[String],
    degree_bound: Option<usize>,
) -> CmdResult {
    let opts = CheckOptions {
        instances,
        eval: eval_config(ctx),
        guided: parse_guides(s, guides)?,
        degree_bound,
        ..CheckOptions::default()
    };
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let report: StructureReport = check_structure(s, &refs, &opts).map_err(|e| usage("--axioms", e))?;
    match ctx.format {
        Format::Plain => {
            let mut lines = vec![format!(
                "structure={} seed={} instances={} budget={}",
                report.structure, report.seed, report.instances, report.budget
            )];
            for a in &report.axioms {
                lines.push(format!(
                    "{} verdict={} checked={} held={} failed={} undecided={} budget_exhausted={} exhaustive={}",
                    a.name, a.verdict, a.checked, a.held, a.failed, a.undecided, a.budget_exhausted, a.exhaustive
                ));
                lines.extend(a.counterexamples.iter().map(|c| format!("counterexample {} {}", a.name, show(c))));
                lines.extend(a.refutations.iter().map(|r| format!("refuted {} {}", a.name, show(r))));
            }
            ctx.lines(lines)?
        }
        Format::Json => ctx.json("formula check-structure", json!(report))?,
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .axioms
                .iter()
                .map(|a| {
                    vec![
                        a.name.clone(),
                        a.verdict.to_string(),
                        a.checked.to_string(),
                        a.held.to_string(),
                        a.failed.to_string(),
                        a.undecided.to_string(),
                        a.budget_exhausted.to_string(),
                        a.exhaustive.to_string(),
                    ]
                })
                .collect();
            ctx.csv(
                &["axiom", "verdict", "checked", "held", "failed", "undecided", "budget_exhausted", "exhaustive"],
                &rows,
            )?
        }
    }
    Ok(Status::from_clean(report.counterexample_count() == 0))
}
