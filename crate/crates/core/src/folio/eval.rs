//! Bounded three-valued evaluation.
//!
//! Quantifiers are instantiated from a candidate list: caller-supplied
//! values for guided variables, else the whole carrier of a finite
//! structure, else a finite relevant domain read off the formula (`x < t`,
//! `x ≤ t`, `x = t` and `x·x < t` guards with `t` a numeral-valued bound),
//! else structure hints followed by a seeded sample pool. Only a finite
//! carrier and a finite relevant domain are exhaustive. A `∀` is false once
//! a counterexample is found and true only over an exhaustive list; dually
//! for `∃`.
//!
//! Every definite verdict carries a certificate that [`verify`] re-checks
//! against the structure's operations without any search.

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use super::ast::{Formula, Pred, Term};
use super::catalog;
use super::pretty::pretty;
use super::structure::{push_unique, Structure, TriBool};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvalConfig {
    /// Sampled candidates per quantifier, after hints.
    pub samples: usize,
    /// Atomic evaluations allowed per top-level call.
    pub budget: u64,
    /// Largest finite relevant domain enumerated exhaustively.
    pub finite_limit: usize,
    /// Decide defined predicates with the structure's oracles rather than
    /// by expanding their definitions.
    pub use_oracles: bool,
    pub seed: u64,
    /// Refuted `∃` candidates kept as evidence.
    pub max_refutations: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { samples: 32, budget: 200_000, finite_limit: 1_000, use_oracles: true, seed: 1, max_refutations: 64 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable `{0}` is free and unassigned")]
    Unbound(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownAxiom(String),
}

/// Why a definite verdict holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cert<E> {
    /// An equation or inequality computed directly.
    Atom,
    /// A defined predicate decided by the structure's oracle.
    Oracle,
    /// A defined predicate decided through its definition.
    Expanded(Box<Cert<E>>),
    Not(Box<Cert<E>>),
    /// The left operand alone decides the connective.
    Left(Box<Cert<E>>),
    /// The right operand alone decides the connective.
    Right(Box<Cert<E>>),
    Both(Box<Cert<E>>, Box<Cert<E>>),
    /// A counterexample to `∀` or a witness for `∃`.
    Choice { var: String, value: E, inner: Box<Cert<E>> },
    /// Every element of a finite domain, for a true `∀` or a false `∃`.
    Exhaustive { var: String, cases: Vec<(E, Cert<E>)> },
}

impl<E: Clone> Cert<E> {
    /// The `Choice` bindings along the certificate, outermost first.
    pub fn choices(&self) -> Vec<(String, E)> {
        let mut out = Vec::new();
        self.collect_choices(&mut out);
        out
    }

    fn collect_choices(&self, out: &mut Vec<(String, E)>) {
        match self {
            Cert::Atom | Cert::Oracle | Cert::Exhaustive { .. } => {}
            Cert::Expanded(c) | Cert::Not(c) | Cert::Left(c) | Cert::Right(c) => c.collect_choices(out),
            Cert::Both(a, b) => {
                a.collect_choices(out);
                b.collect_choices(out);
            }
            Cert::Choice { var, value, inner } => {
                out.push((var.clone(), value.clone()));
                inner.collect_choices(out);
            }
        }
    }
}

/// A candidate that made an `∃` body false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refutation<E> {
    pub var: String,
    pub value: E,
    pub cert: Cert<E>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome<E> {
    pub value: TriBool,
    /// Present exactly when `value` is definite.
    pub cert: Option<Cert<E>>,
    /// For an `∃` at the root that stayed undecided or false.
    pub refuted: Vec<Refutation<E>>,
    pub budget_exhausted: bool,
}

impl<E> Outcome<E> {
    fn decided(value: bool, cert: Cert<E>) -> Self {
        Outcome { value: TriBool::from_bool(value), cert: Some(cert), refuted: Vec::new(), budget_exhausted: false }
    }

    fn unknown() -> Self {
        Outcome { value: TriBool::Unknown, cert: None, refuted: Vec::new(), budget_exhausted: false }
    }
}

type Env<E> = Vec<(String, E)>;

fn lookup<'e, E>(env: &'e [(String, E)], name: &str) -> Option<&'e E> {
    env.iter().rev().find(|(v, _)| v == name).map(|(_, e)| e)
}

pub fn eval_term<S: Structure>(s: &S, t: &Term, env: &[(String, S::Elem)]) -> Result<S::Elem, EvalError> {
    if let Some(u) = t.as_numeral() {
        return Ok(s.numeral(u));
    }
    Ok(match t {
        Term::Var(v) => lookup(env, v).cloned().ok_or_else(|| EvalError::Unbound(v.clone()))?,
        Term::Zero => s.zero(),
        Term::One => s.one(),
        Term::Add(a, b) => s.add(&eval_term(s, a, env)?, &eval_term(s, b, env)?),
        Term::Mul(a, b) => s.mul(&eval_term(s, a, env)?, &eval_term(s, b, env)?),
    })
}

/// An upper bound on the quantified variable implied by a guard.
struct Bound {
    term: Term,
    strict: bool,
}

fn is_var_or_square(t: &Term, x: &str) -> bool {
    match t {
        Term::Var(v) => v == x,
        Term::Mul(a, b) => matches!((&**a, &**b), (Term::Var(u), Term::Var(w)) if u == x && w == x),
        _ => false,
    }
}

/// Bounds that every instance of `x` making `f` take the value `want` obeys.
fn bounds(f: &Formula, want: bool, x: &str, out: &mut Vec<Bound>) {
    let free = |t: &Term| !t.mentions(x);
    match f {
        Formula::Implies(a, b) if !want => {
            bounds(a, true, x, out);
            bounds(b, false, x, out);
        }
        Formula::And(a, b) if want => {
            bounds(a, true, x, out);
            bounds(b, true, x, out);
        }
        Formula::Or(a, b) if !want => {
            bounds(a, false, x, out);
            bounds(b, false, x, out);
        }
        Formula::Not(a) => bounds(a, !want, x, out),
        Formula::Lt(s, t) if want && is_var_or_square(s, x) && free(t) => {
            out.push(Bound { term: t.clone(), strict: true });
        }
        Formula::Lt(t, s) if !want && is_var_or_square(s, x) && free(t) => {
            out.push(Bound { term: t.clone(), strict: false });
        }
        Formula::Pred(Pred::Le, args) if want && is_var_or_square(&args[0], x) && free(&args[1]) => {
            out.push(Bound { term: args[1].clone(), strict: false });
        }
        Formula::Pred(Pred::Le, args) if !want && is_var_or_square(&args[1], x) && free(&args[0]) => {
            out.push(Bound { term: args[0].clone(), strict: true });
        }
        Formula::Eq(a, b) if want => {
            if matches!(a, Term::Var(v) if v == x) && free(b) {
                out.push(Bound { term: b.clone(), strict: false });
            } else if matches!(b, Term::Var(v) if v == x) && free(a) {
                out.push(Bound { term: a.clone(), strict: false });
            }
        }
        _ => {}
    }
}

struct Budget {
    left: u64,
    exhausted: bool,
}

/// Bounded evaluator over a structure.
pub struct Evaluator<'a, S: Structure> {
    s: &'a S,
    cfg: EvalConfig,
    pool: Vec<S::Elem>,
    guided: HashMap<String, Vec<S::Elem>>,
}

impl<'a, S: Structure> Evaluator<'a, S> {
    pub fn new(s: &'a S, cfg: EvalConfig) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut pool = Vec::with_capacity(cfg.samples);
        for _ in 0..cfg.samples {
            push_unique(&mut pool, s.sample(&mut rng));
        }
        Evaluator { s, cfg, pool, guided: HashMap::new() }
    }

    /// Instantiates every quantifier binding `var` with exactly `values`.
    pub fn guide(mut self, var: &str, values: Vec<S::Elem>) -> Self {
        self.guided.insert(var.to_string(), values);
        self
    }

    pub fn config(&self) -> &EvalConfig {
        &self.cfg
    }

    pub fn structure(&self) -> &S {
        self.s
    }

    pub fn eval(&self, f: &Formula, env: &[(String, S::Elem)]) -> Result<Outcome<S::Elem>, EvalError> {
        if let Some(v) = f.free_vars().into_iter().find(|v| lookup(env, v).is_none()) {
            return Err(EvalError::Unbound(v));
        }
        let mut budget = Budget { left: self.cfg.budget, exhausted: false };
        let mut env = env.to_vec();
        let mut out = self.go(f, &mut env, &mut budget);
        out.budget_exhausted = budget.exhausted;
        Ok(out)
    }

    fn step(&self, budget: &mut Budget) -> bool {
        if budget.left == 0 {
            budget.exhausted = true;
            return false;
        }
        budget.left -= 1;
        true
    }

    fn value(&self, t: &Term, env: &Env<S::Elem>) -> S::Elem {
        eval_term(self.s, t, env).expect("free variables checked on entry")
    }

    fn go(&self, f: &Formula, env: &mut Env<S::Elem>, budget: &mut Budget) -> Outcome<S::Elem> {
        let s = self.s;
        match f {
            Formula::Eq(a, b) | Formula::Lt(a, b) => {
                if !self.step(budget) {
                    return Outcome::unknown();
                }
                let (x, y) = (self.value(a, env), self.value(b, env));
                let v = if matches!(f, Formula::Eq(..)) { s.equal(&x, &y) } else { s.less(&x, &y) };
                Outcome::decided(v, Cert::Atom)
            }
            Formula::Pred(p, args) => {
                if self.cfg.use_oracles {
                    if !self.step(budget) {
                        return Outcome::unknown();
                    }
                    let vals: Vec<S::Elem> = args.iter().map(|a| self.value(a, env)).collect();
                    if let Some(v) = s.oracle(*p, &vals) {
                        return match v {
                            TriBool::Unknown => Outcome::unknown(),
                            _ => Outcome::decided(v == TriBool::True, Cert::Oracle),
                        };
                    }
                }
                let o = self.go(&p.expand(args), env, budget);
                Outcome { cert: o.cert.map(|c| Cert::Expanded(Box::new(c))), refuted: Vec::new(), ..o }
            }
            Formula::Not(a) => {
                let o = self.go(a, env, budget);
                Outcome {
                    value: o.value.negate(),
                    cert: o.cert.map(|c| Cert::Not(Box::new(c))),
                    refuted: Vec::new(),
                    budget_exhausted: false,
                }
            }
            Formula::And(a, b) | Formula::Or(a, b) => {
                // `∧` is decided early by a false operand, `∨` by a true one
                let short = matches!(f, Formula::Or(..));
                let oa = self.go(a, env, budget);
                if oa.value == TriBool::from_bool(short) {
                    return Outcome::decided(short, Cert::Left(Box::new(oa.cert.expect("definite"))));
                }
                let ob = self.go(b, env, budget);
                if ob.value == TriBool::from_bool(short) {
                    return Outcome::decided(short, Cert::Right(Box::new(ob.cert.expect("definite"))));
                }
                match (oa.cert, ob.cert) {
                    (Some(ca), Some(cb)) => Outcome::decided(!short, Cert::Both(Box::new(ca), Box::new(cb))),
                    _ => Outcome::unknown(),
                }
            }
            Formula::Implies(a, b) => {
                let oa = self.go(a, env, budget);
                if oa.value == TriBool::False {
                    return Outcome::decided(true, Cert::Left(Box::new(oa.cert.expect("definite"))));
                }
                let ob = self.go(b, env, budget);
                if ob.value == TriBool::True {
                    return Outcome::decided(true, Cert::Right(Box::new(ob.cert.expect("definite"))));
                }
                match (oa.value, ob.cert) {
                    (TriBool::True, Some(cb)) => {
                        Outcome::decided(false, Cert::Both(Box::new(oa.cert.expect("definite")), Box::new(cb)))
                    }
                    _ => Outcome::unknown(),
                }
            }
            Formula::Forall(x, body) | Formula::Exists(x, body) => {
                let universal = matches!(f, Formula::Forall(..));
                self.quantifier(universal, x, body, env, budget)
            }
        }
    }

    /// Candidate instances for `x` and whether they exhaust its range.
    fn candidates(&self, universal: bool, x: &str, body: &Formula, env: &Env<S::Elem>) -> (Vec<S::Elem>, bool) {
        if let Some(vals) = self.guided.get(x) {
            return (vals.clone(), false);
        }
        if let Some(all) = self.s.enumerate() {
            return (all, true);
        }
        let mut found = Vec::new();
        bounds(body, !universal, x, &mut found);
        let mut best: Option<Vec<S::Elem>> = None;
        for b in found {
            if !closed_under(&b.term, env) {
                continue;
            }
            let mut t = self.value(&b.term, env);
            if !b.strict {
                t = self.s.add(&t, &self.s.one());
            }
            if let Some(dom) = self.s.below(&t, self.cfg.finite_limit) {
                if best.as_ref().is_none_or(|d| dom.len() < d.len()) {
                    best = Some(dom);
                }
            }
        }
        if let Some(dom) = best {
            return (dom, true);
        }
        let scope: Vec<S::Elem> = env.iter().map(|(_, e)| e.clone()).collect();
        let mut out = self.s.hints(&scope);
        for e in &self.pool {
            push_unique(&mut out, e.clone());
        }
        (out, false)
    }

    fn quantifier(
        &self,
        universal: bool,
        x: &str,
        body: &Formula,
        env: &mut Env<S::Elem>,
        budget: &mut Budget,
    ) -> Outcome<S::Elem> {
        let (cands, exhaustive) = self.candidates(universal, x, body, env);
        // the value that decides the quantifier from one instance
        let decisive = TriBool::from_bool(!universal);
        let mut cases = Vec::new();
        let mut refuted = Vec::new();
        let mut undecided = false;
        for c in cands {
            env.push((x.to_string(), c.clone()));
            let o = self.go(body, env, budget);
            env.pop();
            if o.value == decisive {
                let inner = Box::new(o.cert.expect("definite"));
                return Outcome::decided(!universal, Cert::Choice { var: x.to_string(), value: c, inner });
            }
            match o.cert {
                Some(cert) => {
                    if !universal && refuted.len() < self.cfg.max_refutations {
                        refuted.push(Refutation { var: x.to_string(), value: c.clone(), cert: cert.clone() });
                    }
                    if exhaustive {
                        cases.push((c, cert));
                    }
                }
                None => undecided = true,
            }
            if budget.exhausted {
                undecided = true;
                break;
            }
        }
        if exhaustive && !undecided {
            let mut o = Outcome::decided(universal, Cert::Exhaustive { var: x.to_string(), cases });
            o.refuted = refuted;
            return o;
        }
        Outcome { value: TriBool::Unknown, cert: None, refuted, budget_exhausted: false }
    }
}

fn closed_under<E>(t: &Term, env: &[(String, E)]) -> bool {
    let mut vs = std::collections::BTreeSet::new();
    t.collect_vars(&mut vs);
    vs.iter().all(|v| lookup(env, v).is_some())
}

/// Evaluates `f` under `env` with a fresh evaluator.
pub fn eval_bounded<S: Structure>(
    f: &Formula,
    s: &S,
    env: &[(String, S::Elem)],
    cfg: &EvalConfig,
) -> Result<Outcome<S::Elem>, EvalError> {
    Evaluator::new(s, cfg.clone()).eval(f, env)
}

/// Re-checks a certificate for `f` having `value` under `env`, computing
/// atoms and oracle calls afresh and performing no search.
pub fn verify<S: Structure>(
    s: &S,
    f: &Formula,
    env: &[(String, S::Elem)],
    value: bool,
    cert: &Cert<S::Elem>,
) -> bool {
    let mut env = env.to_vec();
    check(s, f, &mut env, value, cert)
}

fn check<S: Structure>(s: &S, f: &Formula, env: &mut Env<S::Elem>, value: bool, cert: &Cert<S::Elem>) -> bool {
    let val = |t: &Term, env: &Env<S::Elem>| eval_term(s, t, env).ok();
    match (f, cert) {
        (Formula::Eq(a, b), Cert::Atom) => match (val(a, env), val(b, env)) {
            (Some(x), Some(y)) => s.equal(&x, &y) == value,
            _ => false,
        },
        (Formula::Lt(a, b), Cert::Atom) => match (val(a, env), val(b, env)) {
            (Some(x), Some(y)) => s.less(&x, &y) == value,
            _ => false,
        },
        (Formula::Pred(p, args), Cert::Oracle) => {
            let Some(vals) = args.iter().map(|a| val(a, env)).collect::<Option<Vec<_>>>() else {
                return false;
            };
            s.oracle(*p, &vals) == Some(TriBool::from_bool(value))
        }
        (Formula::Pred(p, args), Cert::Expanded(c)) => check(s, &p.expand(args), env, value, c),
        (Formula::Not(a), Cert::Not(c)) => check(s, a, env, !value, c),
        (Formula::And(a, _), Cert::Left(c)) if !value => check(s, a, env, false, c),
        (Formula::And(_, b), Cert::Right(c)) if !value => check(s, b, env, false, c),
        (Formula::And(a, b), Cert::Both(ca, cb)) if value => {
            check(s, a, env, true, ca) && check(s, b, env, true, cb)
        }
        (Formula::Or(a, _), Cert::Left(c)) if value => check(s, a, env, true, c),
        (Formula::Or(_, b), Cert::Right(c)) if value => check(s, b, env, true, c),
        (Formula::Or(a, b), Cert::Both(ca, cb)) if !value => {
            check(s, a, env, false, ca) && check(s, b, env, false, cb)
        }
        (Formula::Implies(a, _), Cert::Left(c)) if value => check(s, a, env, false, c),
        (Formula::Implies(_, b), Cert::Right(c)) if value => check(s, b, env, true, c),
        (Formula::Implies(a, b), Cert::Both(ca, cb)) if !value => {
            check(s, a, env, true, ca) && check(s, b, env, false, cb)
        }
        (Formula::Forall(x, body) | Formula::Exists(x, body), Cert::Choice { var, value: e, inner }) => {
            let universal = matches!(f, Formula::Forall(..));
            if var != x || value == universal {
                return false;
            }
            env.push((x.clone(), e.clone()));
            let ok = check(s, body, env, value, inner);
            env.pop();
            ok
        }
        (Formula::Forall(x, body) | Formula::Exists(x, body), Cert::Exhaustive { var, cases }) => {
            let universal = matches!(f, Formula::Forall(..));
            if var != x || value != universal {
                return false;
            }
            cases.iter().all(|(e, c)| {
                env.push((x.clone(), e.clone()));
                let ok = check(s, body, env, value, c);
                env.pop();
                ok
            })
        }
        _ => false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Binding {
    pub var: String,
    pub value: String,
}

fn bindings<E: std::fmt::Display>(pairs: &[(String, E)]) -> Vec<Binding> {
    pairs.iter().map(|(v, e)| Binding { var: v.clone(), value: e.to_string() }).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub name: String,
    pub formula: String,
    pub verdict: TriBool,
    /// Instances of the leading universal block evaluated.
    pub checked: usize,
    pub held: usize,
    pub failed: usize,
    pub undecided: usize,
    pub budget_exhausted: usize,
    pub exhaustive: bool,
    pub counterexamples: Vec<Vec<Binding>>,
    /// Candidates for a leading `∃` after the universal block, each with
    /// the instance that refutes it.
    pub refutations: Vec<Vec<Binding>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub structure: String,
    pub seed: u64,
    pub instances: usize,
    pub budget: u64,
    pub degree_bound: Option<usize>,
    pub axioms: Vec<AxiomReport>,
}

impl StructureReport {
    pub fn counterexample_count(&self) -> usize {
        self.axioms.iter().map(|a| a.failed).sum()
    }
}

#[derive(Debug, Clone)]
pub struct CheckOptions<E> {
    /// Joint instances drawn for each axiom's leading universal block.
    pub instances: usize,
    pub eval: EvalConfig,
    /// Fixed values for quantified variables, by name.
    pub guided: Vec<(String, Vec<E>)>,
    pub max_counterexamples: usize,
    pub degree_bound: Option<usize>,
}

impl<E> Default for CheckOptions<E> {
    fn default() -> Self {
        CheckOptions {
            instances: 1_000,
            eval: EvalConfig::default(),
            guided: Vec::new(),
            max_counterexamples: 10,
            degree_bound: None,
        }
    }
}

fn name_seed(seed: u64, name: &str) -> u64 {
    // FNV-1a, so per-axiom streams do not depend on which axioms are checked
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    for b in name.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// Falsification harness: each named catalog entry's leading universal
/// block is instantiated with sampled (or guided) joint values and the
/// rest is evaluated with [`Evaluator`]. Deterministic under the seed.
pub fn check_structure<S: Structure>(
    s: &S,
    names: &[&str],
    opts: &CheckOptions<S::Elem>,
) -> Result<StructureReport, EvalError> {
    let mut axioms = Vec::new();
    for name in names {
        let f = catalog::lookup(name).ok_or_else(|| EvalError::UnknownAxiom(name.to_string()))?;
        axioms.push(check_one(s, name, &f, opts));
    }
    Ok(StructureReport {
        structure: s.name().to_string(),
        seed: opts.eval.seed,
        instances: opts.instances,
        budget: opts.eval.budget,
        degree_bound: opts.degree_bound,
        axioms,
    })
}

fn instances<S: Structure>(
    s: &S,
    vars: &[&str],
    guided: &HashMap<&str, &Vec<S::Elem>>,
    opts: &CheckOptions<S::Elem>,
    seed: u64,
) -> (Vec<Vec<S::Elem>>, bool) {
    let domains: Option<Vec<Vec<S::Elem>>> = vars
        .iter()
        .map(|v| guided.get(v).map(|g| g.to_vec()).or_else(|| s.enumerate()))
        .collect();
    if let Some(domains) = domains {
        let size = domains.iter().try_fold(1usize, |acc, d| acc.checked_mul(d.len()));
        if size.is_some_and(|n| n <= opts.instances.max(1)) {
            let mut tuples = vec![Vec::new()];
            for d in &domains {
                tuples = tuples
                    .into_iter()
                    .flat_map(|t| d.iter().map(move |e| [t.clone(), vec![e.clone()]].concat()))
                    .collect();
            }
            let exhaustive = vars.iter().all(|v| !guided.contains_key(v));
            return (tuples, exhaustive);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tuples = (0..opts.instances)
        .map(|i| {
            vars.iter()
                .map(|v| match guided.get(v) {
                    Some(g) if !g.is_empty() => g[i % g.len()].clone(),
                    _ => s.sample(&mut rng),
                })
                .collect()
        })
        .collect();
    (tuples, false)
}

fn check_one<S: Structure>(s: &S, name: &str, f: &Formula, opts: &CheckOptions<S::Elem>) -> AxiomReport {
    let seed = name_seed(opts.eval.seed, name);
    let mut evaluator = Evaluator::new(s, EvalConfig { seed, ..opts.eval.clone() });
    for (var, vals) in &opts.guided {
        evaluator = evaluator.guide(var, vals.clone());
    }
    let (vars, body) = f.universal_prefix();
    let guided: HashMap<&str, &Vec<S::Elem>> = opts.guided.iter().map(|(v, e)| (v.as_str(), e)).collect();
    let (tuples, exhaustive) = instances(s, &vars, &guided, opts, seed);

    let outcomes: Vec<(Env<S::Elem>, Outcome<S::Elem>)> = tuples
        .into_par_iter()
        .map(|tuple| {
            let env: Env<S::Elem> = vars.iter().map(|v| v.to_string()).zip(tuple).collect();
            let o = evaluator.eval(body, &env).expect("closed catalog formula");
            (env, o)
        })
        .collect();

    let mut report = AxiomReport {
        name: name.to_string(),
        formula: pretty(f),
        verdict: TriBool::Unknown,
        checked: outcomes.len(),
        held: 0,
        failed: 0,
        undecided: 0,
        budget_exhausted: 0,
        exhaustive,
        counterexamples: Vec::new(),
        refutations: Vec::new(),
    };
    for (env, o) in &outcomes {
        report.budget_exhausted += usize::from(o.budget_exhausted);
        match o.value {
            TriBool::True => report.held += 1,
            TriBool::Unknown => report.undecided += 1,
            TriBool::False => {
                report.failed += 1;
                if report.counterexamples.len() < opts.max_counterexamples {
                    let mut pairs = env.clone();
                    pairs.extend(o.cert.as_ref().expect("definite").choices());
                    report.counterexamples.push(bindings(&pairs));
                }
            }
        }
        for r in &o.refuted {
            if report.refutations.len() >= opts.eval.max_refutations {
                break;
            }
            let mut pairs = env.clone();
            pairs.push((r.var.clone(), r.value.clone()));
            pairs.extend(r.cert.choices());
            report.refutations.push(bindings(&pairs));
        }
    }
    report.verdict = if report.failed > 0 {
        TriBool::False
    } else if exhaustive && report.held == report.checked {
        TriBool::True
    } else {
        TriBool::Unknown
    };
    report
}
