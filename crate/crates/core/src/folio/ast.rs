use std::collections::BTreeSet;
use std::fmt;

/// Largest decimal literal accepted in formula text; numerals expand to
/// left-nested sums of ones.
pub const MAX_NUMERAL: u64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Zero,
    One,
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    /// The numeral `ū = ((1 + 1) + …) + 1`, with `0̄ = 0`.
    pub fn numeral(u: u64) -> Term {
        if u == 0 {
            return Term::Zero;
        }
        let mut t = Term::One;
        for _ in 1..u {
            t = Term::Add(Box::new(t), Box::new(Term::One));
        }
        t
    }

    /// `Some(u)` when the term has exactly the shape of the numeral `ū`.
    pub fn as_numeral(&self) -> Option<u64> {
        let mut t = self;
        let mut count = 0u64;
        loop {
            match t {
                Term::Zero if count == 0 => return Some(0),
                Term::One => return Some(count + 1),
                Term::Add(l, r) if **r == Term::One && !matches!(**l, Term::Zero) => {
                    count += 1;
                    t = l;
                }
                _ => return None,
            }
        }
    }

    pub fn add(self, rhs: Term) -> Term {
        Term::Add(Box::new(self), Box::new(rhs))
    }

    pub fn mul(self, rhs: Term) -> Term {
        Term::Mul(Box::new(self), Box::new(rhs))
    }

    pub fn square(self) -> Term {
        self.clone().mul(self)
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Zero | Term::One => {}
            Term::Add(a, b) | Term::Mul(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn mentions(&self, var: &str) -> bool {
        match self {
            Term::Var(v) => v == var,
            Term::Zero | Term::One => false,
            Term::Add(a, b) | Term::Mul(a, b) => a.mentions(var) || b.mentions(var),
        }
    }
}

/// The defined predicates; each has an expansion into the base language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pred {
    /// π₁(x): irreducible.
    Irreducible,
    /// π₂(x): prime.
    Prime,
    /// ϱ(m, n): relatively prime.
    Coprime,
    /// σ(a, b): consecutive primes, σ_u(a, b) closed universally over u.
    Consecutive,
    /// x | y
    Divides,
    /// x ≤ y
    Le,
}

impl Pred {
    pub const ALL: [Pred; 6] =
        [Pred::Irreducible, Pred::Prime, Pred::Coprime, Pred::Consecutive, Pred::Divides, Pred::Le];

    pub fn arity(self) -> usize {
        match self {
            Pred::Irreducible | Pred::Prime => 1,
            _ => 2,
        }
    }

    /// Name used in ASCII formula text and in the catalog.
    pub fn ascii_name(self) -> &'static str {
        match self {
            Pred::Irreducible => "pi1",
            Pred::Prime => "pi2",
            Pred::Coprime => "coprime",
            Pred::Consecutive => "sigma",
            Pred::Divides => "|",
            Pred::Le => "<=",
        }
    }

    pub fn unicode_name(self) -> &'static str {
        match self {
            Pred::Irreducible => "π₁",
            Pred::Prime => "π₂",
            Pred::Coprime => "ϱ",
            Pred::Consecutive => "σ",
            Pred::Divides => "|",
            Pred::Le => "≤",
        }
    }

    pub fn is_infix(self) -> bool {
        matches!(self, Pred::Divides | Pred::Le)
    }

    /// The defining formula with `args` substituted; bound variables are
    /// renamed away from the variables of `args`.
    pub fn expand(self, args: &[Term]) -> Formula {
        assert_eq!(args.len(), self.arity(), "arity of {self:?}");
        let mut taken = BTreeSet::new();
        for a in args {
            a.collect_vars(&mut taken);
        }
        let mut fresh = |base: &str| {
            let mut name = base.to_string();
            while taken.contains(&name) {
                name.push('\'');
            }
            taken.insert(name.clone());
            name
        };
        let x = || args[0].clone();
        let y = || args[1].clone();
        let one = || Term::One;
        match self {
            Pred::Irreducible => {
                let (a, b) = (fresh("a"), fresh("b"));
                let (ta, tb) = (Term::var(&a), Term::var(&b));
                Formula::forall_all(
                    &[&a, &b],
                    Formula::lt(one(), x()).and(
                        Formula::eq(x(), ta.clone().mul(tb.clone()))
                            .implies(Formula::eq(ta, one()).or(Formula::eq(tb, one()))),
                    ),
                )
            }
            Pred::Prime => {
                let (a, b, c, d) = (fresh("a"), fresh("b"), fresh("c"), fresh("d"));
                let (ta, tb, tc, td) = (Term::var(&a), Term::var(&b), Term::var(&c), Term::var(&d));
                let body = Formula::lt(one(), x()).and(
                    Formula::eq(x().mul(tc), ta.clone().mul(tb.clone())).implies(
                        Formula::eq(x().mul(td.clone()), ta).or(Formula::eq(x().mul(td), tb)),
                    ),
                );
                Formula::forall_all(&[&a, &b, &c], Formula::Exists(d, Box::new(body)))
            }
            Pred::Coprime => {
                let d = fresh("d");
                let td = Term::var(&d);
                Formula::Forall(
                    d,
                    Box::new(
                        Formula::divides(td.clone(), x())
                            .and(Formula::divides(td.clone(), y()))
                            .implies(Formula::eq(td, one())),
                    ),
                )
            }
            Pred::Consecutive => {
                let u = fresh("u");
                let tu = Term::var(&u);
                Formula::Forall(
                    u,
                    Box::new(
                        Formula::prime(x())
                            .and(Formula::prime(y()))
                            .and(Formula::lt(x(), y()))
                            .and(
                                Formula::lt(x(), tu.clone())
                                    .and(Formula::prime(tu.clone()))
                                    .implies(Formula::le(y(), tu)),
                            ),
                    ),
                )
            }
            Pred::Divides => {
                let z = fresh("z");
                let tz = Term::var(&z);
                Formula::Exists(z, Box::new(Formula::eq(x().mul(tz), y())))
            }
            Pred::Le => Formula::lt(x(), y()).or(Formula::eq(x(), y())),
        }
    }
}

impl fmt::Display for Pred {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.unicode_name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Eq(Term, Term),
    Lt(Term, Term),
    Pred(Pred, Vec<Term>),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

impl Formula {
    pub fn eq(a: Term, b: Term) -> Formula {
        Formula::Eq(a, b)
    }

    pub fn lt(a: Term, b: Term) -> Formula {
        Formula::Lt(a, b)
    }

    pub fn le(a: Term, b: Term) -> Formula {
        Formula::Pred(Pred::Le, vec![a, b])
    }

    pub fn divides(a: Term, b: Term) -> Formula {
        Formula::Pred(Pred::Divides, vec![a, b])
    }

    pub fn prime(a: Term) -> Formula {
        Formula::Pred(Pred::Prime, vec![a])
    }

    pub fn coprime(a: Term, b: Term) -> Formula {
        Formula::Pred(Pred::Coprime, vec![a, b])
    }

    pub fn consecutive(a: Term, b: Term) -> Formula {
        Formula::Pred(Pred::Consecutive, vec![a, b])
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Formula {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, rhs: Formula) -> Formula {
        Formula::And(Box::new(self), Box::new(rhs))
    }

    pub fn or(self, rhs: Formula) -> Formula {
        Formula::Or(Box::new(self), Box::new(rhs))
    }

    pub fn implies(self, rhs: Formula) -> Formula {
        Formula::Implies(Box::new(self), Box::new(rhs))
    }

    pub fn forall_all(vars: &[&str], body: Formula) -> Formula {
        vars.iter().rev().fold(body, |acc, v| Formula::Forall(v.to_string(), Box::new(acc)))
    }

    pub fn exists_all(vars: &[&str], body: Formula) -> Formula {
        vars.iter().rev().fold(body, |acc, v| Formula::Exists(v.to_string(), Box::new(acc)))
    }

    /// Free variables, sorted by name.
    pub fn free_vars(&self) -> BTreeSet<String> {
        self.free_vars_ordered().into_iter().collect()
    }

    /// Free variables in order of first occurrence.
    pub fn free_vars_ordered(&self) -> Vec<String> {
        let mut seen = Vec::new();
        self.walk_free(&mut Vec::new(), &mut seen);
        seen
    }

    fn walk_free(&self, bound: &mut Vec<String>, seen: &mut Vec<String>) {
        let mut visit_term = |t: &Term, bound: &Vec<String>| {
            let mut vs = Vec::new();
            term_vars_ordered(t, &mut vs);
            for v in vs {
                if !bound.contains(&v) && !seen.contains(&v) {
                    seen.push(v);
                }
            }
        };
        match self {
            Formula::Eq(a, b) | Formula::Lt(a, b) => {
                visit_term(a, bound);
                visit_term(b, bound);
            }
            Formula::Pred(_, args) => args.iter().for_each(|a| visit_term(a, bound)),
            Formula::Not(a) => a.walk_free(bound, seen),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.walk_free(bound, seen);
                b.walk_free(bound, seen);
            }
            Formula::Forall(v, body) | Formula::Exists(v, body) => {
                bound.push(v.clone());
                body.walk_free(bound, seen);
                bound.pop();
            }
        }
    }

    /// Universal closure over the free variables in order of occurrence.
    pub fn universal_closure(self) -> Formula {
        let vars = self.free_vars_ordered();
        let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
        Formula::forall_all(&refs, self)
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Formula::Eq(..) | Formula::Lt(..) | Formula::Pred(..) => true,
            Formula::Not(a) => a.is_quantifier_free(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.is_quantifier_free() && b.is_quantifier_free()
            }
            Formula::Forall(..) | Formula::Exists(..) => false,
        }
    }

    /// The leading block of universal quantifiers and the remaining body.
    pub fn universal_prefix(&self) -> (Vec<&str>, &Formula) {
        let mut vars = Vec::new();
        let mut f = self;
        while let Formula::Forall(v, body) = f {
            vars.push(v.as_str());
            f = body;
        }
        (vars, f)
    }

    /// Every numeral occurring as a maximal numeral-shaped subterm.
    pub fn numerals(&self) -> Vec<u64> {
        fn in_term(t: &Term, out: &mut Vec<u64>) {
            if let Some(n) = t.as_numeral() {
                out.push(n);
                return;
            }
            if let Term::Add(a, b) | Term::Mul(a, b) = t {
                in_term(a, out);
                in_term(b, out);
            }
        }
        let mut out = Vec::new();
        self.visit_terms(&mut |t| in_term(t, &mut out));
        out
    }

    pub fn visit_terms(&self, f: &mut impl FnMut(&Term)) {
        match self {
            Formula::Eq(a, b) | Formula::Lt(a, b) => {
                f(a);
                f(b);
            }
            Formula::Pred(_, args) => args.iter().for_each(|a| f(a)),
            Formula::Not(a) | Formula::Forall(_, a) | Formula::Exists(_, a) => a.visit_terms(f),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.visit_terms(f);
                b.visit_terms(f);
            }
        }
    }

    /// Replaces every defined predicate by its expansion, recursively.
    pub fn expand_defined(&self) -> Formula {
        match self {
            Formula::Eq(..) | Formula::Lt(..) => self.clone(),
            Formula::Pred(p, args) => p.expand(args).expand_defined(),
            Formula::Not(a) => a.expand_defined().not(),
            Formula::And(a, b) => a.expand_defined().and(b.expand_defined()),
            Formula::Or(a, b) => a.expand_defined().or(b.expand_defined()),
            Formula::Implies(a, b) => a.expand_defined().implies(b.expand_defined()),
            Formula::Forall(v, a) => Formula::Forall(v.clone(), Box::new(a.expand_defined())),
            Formula::Exists(v, a) => Formula::Exists(v.clone(), Box::new(a.expand_defined())),
        }
    }
}

fn term_vars_ordered(t: &Term, out: &mut Vec<String>) {
    match t {
        Term::Var(v) => {
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        Term::Zero | Term::One => {}
        Term::Add(a, b) | Term::Mul(a, b) => {
            term_vars_ordered(a, out);
            term_vars_ordered(b, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numerals_are_left_nested_sums() {
        assert_eq!(Term::numeral(0), Term::Zero);
        assert_eq!(Term::numeral(2), Term::One.add(Term::One));
        assert_eq!(Term::numeral(3), Term::One.add(Term::One).add(Term::One));
        for u in 0..40 {
            assert_eq!(Term::numeral(u).as_numeral(), Some(u));
        }
        assert_eq!(Term::One.add(Term::numeral(2)).as_numeral(), None);
        assert_eq!(Term::Zero.add(Term::One).as_numeral(), None);
        assert_eq!(Term::var("x").as_numeral(), None);
    }

    #[test]
    fn expansion_avoids_capture() {
        let f = Pred::Divides.expand(&[Term::var("z"), Term::var("y")]);
        match f {
            Formula::Exists(v, _) => assert_eq!(v, "z'"),
            other => panic!("unexpected {other:?}"),
        }
        let g = Pred::Prime.expand(&[Term::var("a")]);
        assert_eq!(g.free_vars().into_iter().collect::<Vec<_>>(), vec!["a".to_string()]);
    }

    #[test]
    fn closure_and_prefix() {
        let f = Formula::eq(Term::var("y").add(Term::var("x")), Term::var("x")).universal_closure();
        let (vars, body) = f.universal_prefix();
        assert_eq!(vars, vec!["y", "x"]);
        assert!(body.is_quantifier_free());
        assert!(f.free_vars().is_empty());
    }
}
