use std::cmp::Ordering;

use clap::Subcommand;
use serde_json::{json, Map, Value};

use schat_core::arith;
use schat_core::poly::{
    a18_bigger_prime, a19_check_int, between_prime_qz, coprime_int, coprime_qz, floor_div_int, halve,
    irreducible_factors, is_irreducible_int, is_irreducible_qz, lemma51, monus, predecessor_prime_int,
    prime_divisor_qz, strong_bound_int, successor_prime_int, IntPoly, Lemma51, PolyError, QZPoly,
    QzIrreducibility,
};

use crate::output::{usage, CliError, CmdResult, Ctx, Format, Status};

#[derive(Debug, Subcommand)]
pub enum ModelCmd {
    /// Operations in the positive cone of ℤ[X].
    #[command(subcommand)]
    Zx(ModelOp),
    /// Operations in the positive cone of ℚ_ℤ[X].
    #[command(subcommand)]
    Qz(ModelOp),
}

#[derive(Debug, Subcommand)]
pub enum ModelOp {
    /// Irreducibility, with a factorisation when composite.
    Irreducible { f: String },
    /// S(f), the least irreducible above f (zx).
    Successor { f: String },
    /// P(f), the greatest irreducible below f (zx).
    Predecessor { f: String },
    /// The greatest k with k·d ≤ m (zx).
    FloorDiv { m: String, d: String },
    /// S(p), S(S(p)), k_p and n = S(p)·k_p (zx).
    StrongBound { p: String },
    /// A prime q > p with q² < n (zx).
    A18 { n: String, p: String },
    /// q² < 2·P(q)·P(P(q)) for an irreducible q (zx).
    A19 { q: String },
    /// The constant-term irreducibility criterion (zx).
    Lemma51 { f: String },
    /// Whether f is even, odd or neither (zx).
    Halve { f: String },
    /// The least prime divisor (qz).
    PrimeDivisor { f: String },
    /// A prime strictly between a = X + 1 and b (qz).
    Between { a: String, b: String },
    /// f ∸ g, defined when g ≤ f.
    Monus { f: String, g: String },
    /// Whether f and g have no common non-unit divisor.
    Coprime { f: String, g: String },
    /// The order relation between f and g.
    Compare { f: String, g: String },
}

/// What an operation produced.
struct Answer {
    verdict: Option<String>,
    values: Vec<(&'static str, String)>,
    plain: Vec<String>,
    status: Status,
}

impl Answer {
    fn value(name: &'static str, v: impl ToString) -> Answer {
        let v = v.to_string();
        Answer { verdict: None, plain: vec![v.clone()], values: vec![(name, v)], status: Status::Clean }
    }

    fn verdict(v: &str, status: Status) -> Answer {
        Answer { verdict: Some(v.to_string()), values: Vec::new(), plain: vec![v.to_string()], status }
    }
}

fn op_name(op: &ModelOp) -> &'static str {
    match op {
        ModelOp::Irreducible { .. } => "irreducible",
        ModelOp::Successor { .. } => "successor",
        ModelOp::Predecessor { .. } => "predecessor",
        ModelOp::FloorDiv { .. } => "floor-div",
        ModelOp::StrongBound { .. } => "strong-bound",
        ModelOp::A18 { .. } => "a18",
        ModelOp::A19 { .. } => "a19",
        ModelOp::Lemma51 { .. } => "lemma51",
        ModelOp::Halve { .. } => "halve",
        ModelOp::PrimeDivisor { .. } => "prime-divisor",
        ModelOp::Between { .. } => "between",
        ModelOp::Monus { .. } => "monus",
        ModelOp::Coprime { .. } => "coprime",
        ModelOp::Compare { .. } => "compare",
    }
}

fn inputs(op: &ModelOp) -> Vec<String> {
    match op {
        ModelOp::Irreducible { f }
        | ModelOp::Successor { f }
        | ModelOp::Predecessor { f }
        | ModelOp::Lemma51 { f }
        | ModelOp::Halve { f }
        | ModelOp::PrimeDivisor { f } => vec![f.clone()],
        ModelOp::StrongBound { p } => vec![p.clone()],
        ModelOp::A19 { q } => vec![q.clone()],
        ModelOp::FloorDiv { m, d } => vec![m.clone(), d.clone()],
        ModelOp::A18 { n, p } => vec![n.clone(), p.clone()],
        ModelOp::Between { a, b } => vec![a.clone(), b.clone()],
        ModelOp::Monus { f, g } | ModelOp::Coprime { f, g } | ModelOp::Compare { f, g } => vec![f.clone(), g.clone()],
    }
}

pub fn run(ctx: &Ctx, cmd: ModelCmd) -> CmdResult {
    let (ring, op) = match &cmd {
        ModelCmd::Zx(op) => ("zx", op),
        ModelCmd::Qz(op) => ("qz", op),
    };
    let answer = match &cmd {
        ModelCmd::Zx(op) => zx(ctx, op)?,
        ModelCmd::Qz(op) => qz(ctx, op)?,
    };
    let name = op_name(op);
    match ctx.format {
        Format::Plain => ctx.lines(answer.plain.iter().cloned())?,
        Format::Json => {
            let values: Map<String, Value> =
                answer.values.iter().map(|(k, v)| (k.to_string(), Value::from(v.as_str()))).collect();
            ctx.json(
                &format!("model {ring} {name}"),
                json!({
                    "ring": ring,
                    "op": name,
                    "inputs": inputs(op),
                    "verdict": answer.verdict,
                    "values": values,
                }),
            )?
        }
        Format::Csv => {
            let mut rows = Vec::new();
            if let Some(v) = &answer.verdict {
                rows.push(vec!["verdict".to_string(), v.clone()]);
            }
            rows.extend(answer.values.iter().map(|(k, v)| vec![k.to_string(), v.clone()]));
            ctx.csv(&["key", "value"], &rows)?
        }
    }
    Ok(answer.status)
}

fn int(arg: &str, text: &str) -> Result<IntPoly, CliError> {
    text.parse::<IntPoly>().map_err(|e| usage(arg, format!("`{text}`: {e}")))
}

fn rat(arg: &str, text: &str) -> Result<QZPoly, CliError> {
    text.parse::<QZPoly>().map_err(|e| usage(arg, format!("`{text}`: {e}")))
}

/// Input errors exit 2; a missing floor is a mathematical finding and exits 1.
fn poly_err(arg: &str, e: PolyError) -> Result<Answer, CliError> {
    match e {
        PolyError::NoFloor { .. } => {
            Ok(Answer { verdict: Some("no-floor".into()), values: Vec::new(), plain: vec![format!("no floor: {e}")], status: Status::Failures })
        }
        other => Err(usage(arg, other)),
    }
}

fn unavailable(ring: &str, op: &ModelOp) -> CliError {
    CliError::Usage(format!("{}: not available over {ring}", op_name(op)))
}

fn ordering(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    }
}

fn int_factorisation(f: &IntPoly) -> Result<Vec<String>, PolyError> {
    if let Some(c) = f.as_constant() {
        let n: u64 = (&c).try_into().map_err(|_| PolyError::Precondition(format!("{c} is too large to factor")))?;
        let mut out = Vec::new();
        for (q, e) in arith::factorize(n) {
            out.extend(std::iter::repeat_n(q.to_string(), e as usize));
        }
        return Ok(out);
    }
    let mut out = Vec::new();
    let content = f.content();
    if content > 1.into() {
        out.extend(int_factorisation(&IntPoly::from_int(content))?);
    }
    let mut factors = irreducible_factors(f)?;
    factors.sort();
    out.extend(factors.iter().map(|g| format!("({g})")));
    Ok(out)
}

fn zx(ctx: &Ctx, op: &ModelOp) -> Result<Answer, CliError> {
    let b = ctx.degree_bound;
    let res = match op {
        ModelOp::Irreducible { f } => {
            let f = int("f", f)?;
            match is_irreducible_int(&f, b) {
                Ok(true) => Ok(Answer::verdict("irreducible", Status::Clean)),
                Ok(false) => int_factorisation(&f).map(|fs| {
                    let w = fs.join(" * ");
                    Answer {
                        verdict: Some("composite".into()),
                        plain: vec![format!("composite: {w}")],
                        values: vec![("factorisation", w)],
                        status: Status::Clean,
                    }
                }),
                Err(e) => Err(e),
            }
        }
        ModelOp::Successor { f } => successor_prime_int(&int("f", f)?, b).map(|s| Answer::value("successor", s)),
        ModelOp::Predecessor { f } => predecessor_prime_int(&int("f", f)?, b).map(|s| Answer::value("predecessor", s)),
        ModelOp::FloorDiv { m, d } => floor_div_int(&int("m", m)?, &int("d", d)?).map(|k| Answer::value("floor", k)),
        ModelOp::StrongBound { p } => strong_bound_int(&int("p", p)?, b).map(|s| {
            let values = vec![
                ("successor", s.successor.to_string()),
                ("second_successor", s.second_successor.to_string()),
                ("k", s.k.to_string()),
                ("n", s.n.to_string()),
            ];
            Answer {
                verdict: None,
                plain: values.iter().map(|(k, v)| format!("{k}={v}")).collect(),
                values,
                status: Status::Clean,
            }
        }),
        ModelOp::A18 { n, p } => {
            a18_bigger_prime(&int("n", n)?, &int("p", p)?, b).map(|q| Answer::value("bigger_prime", q))
        }
        ModelOp::A19 { q } => a19_check_int(&int("q", q)?, b)
            .map(|ok| Answer::verdict(if ok { "holds" } else { "fails" }, Status::from_clean(ok))),
        ModelOp::Lemma51 { f } => Ok(match lemma51(&int("f", f)?) {
            Lemma51::AppliesIrreducible { prime } => Answer {
                verdict: Some("irreducible".into()),
                plain: vec![format!("irreducible: constant term ±{prime} is a prime above the other coefficients")],
                values: vec![("prime", prime.to_string())],
                status: Status::Clean,
            },
            Lemma51::NotApplicable => Answer::verdict("not-applicable", Status::Clean),
        }),
        ModelOp::Halve { f } => {
            let f = int("f", f)?;
            let odd = monus(&f, &IntPoly::from_int(1)).ok().and_then(|g| halve(&g));
            Ok(match (halve(&f), odd) {
                (Some(h), _) => Answer { verdict: Some("even".into()), plain: vec![format!("even: 2 * ({h})")], values: vec![("half", h.to_string())], status: Status::Clean },
                (None, Some(h)) => Answer { verdict: Some("odd".into()), plain: vec![format!("odd: 2 * ({h}) + 1")], values: vec![("half", h.to_string())], status: Status::Clean },
                (None, None) => Answer::verdict("neither", Status::Clean),
            })
        }
        ModelOp::Monus { f, g } => monus(&int("f", f)?, &int("g", g)?).map(|d| Answer::value("difference", d)),
        ModelOp::Coprime { f, g } => {
            let ok = coprime_int(&int("f", f)?, &int("g", g)?);
            Ok(Answer::verdict(if ok { "coprime" } else { "not-coprime" }, Status::Clean))
        }
        ModelOp::Compare { f, g } => Ok(Answer::value("order", ordering(int("f", f)?.cmp(&int("g", g)?)))),
        ModelOp::PrimeDivisor { .. } | ModelOp::Between { .. } => return Err(unavailable("zx", op)),
    };
    res.or_else(|e| poly_err(op_name(op), e))
}

fn qz(ctx: &Ctx, op: &ModelOp) -> Result<Answer, CliError> {
    let b = ctx.degree_bound;
    let res = match op {
        ModelOp::Irreducible { f } => is_irreducible_qz(&rat("f", f)?, b).map(|r| match r {
            QzIrreducibility::Irreducible => Answer::verdict("irreducible", Status::Clean),
            QzIrreducibility::Composite(a, c) => {
                let w = format!("{} * {}", paren(&a), paren(&c));
                Answer {
                    verdict: Some("composite".into()),
                    plain: vec![format!("composite: {w}")],
                    values: vec![("factorisation", w)],
                    status: Status::Clean,
                }
            }
        }),
        ModelOp::PrimeDivisor { f } => prime_divisor_qz(&rat("f", f)?, b).map(|d| Answer::value("prime_divisor", d)),
        ModelOp::Between { a, b: hi } => {
            between_prime_qz(&rat("a", a)?, &rat("b", hi)?, b).map(|u| Answer::value("between", u))
        }
        ModelOp::Monus { f, g } => {
            let (f, g) = (rat("f", f)?, rat("g", g)?);
            if f.poly() < g.poly() {
                Err(PolyError::Underflow { minuend: f.to_string(), subtrahend: g.to_string() })
            } else {
                Ok(Answer::value("difference", &f - &g))
            }
        }
        ModelOp::Coprime { f, g } => {
            let ok = coprime_qz(&rat("f", f)?, &rat("g", g)?);
            Ok(Answer::verdict(if ok { "coprime" } else { "not-coprime" }, Status::Clean))
        }
        ModelOp::Compare { f, g } => {
            Ok(Answer::value("order", ordering(rat("f", f)?.poly().cmp(rat("g", g)?.poly()))))
        }
        _ => return Err(unavailable("qz", op)),
    };
    res.or_else(|e| poly_err(op_name(op), e))
}

/// Parenthesises anything that is not a single term.
fn paren(p: &QZPoly) -> String {
    let s = p.to_string();
    if s.contains(' ') {
        format!("({s})")
    } else {
        s
    }
}
