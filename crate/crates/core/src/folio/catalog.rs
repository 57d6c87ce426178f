//! The axioms A1–A21, the two forms of the statement that p-good numbers are
//! bounded, the implication π₂ → π₁ (`Eq3`), and the defined predicates.
//!
//! Axioms stated without quantifiers are universally closed over their
//! variables in order of occurrence. σ is the consecutive-primes predicate
//! with its parameter `u` universally quantified inside. A16 and A17 carry
//! their intended reading (least prime above, greatest prime below; the
//! latter for primes above 2), since the literal placement of the
//! minimality clause is satisfied by any `q ≤ p`.

use std::sync::OnceLock;

use super::ast::{Formula, Pred, Term};
use super::parse::parse;

/// `(name, text)` for the 23 catalog entries, in order.
const ENTRIES: [(&str, &str); 23] = [
    ("A1", "(x + y) + z = x + (y + z)"),
    ("A2", "x + y = y + x"),
    ("A3", "(x * y) * z = x * (y * z)"),
    ("A4", "x * y = y * x"),
    ("A5", "x * (y + z) = x * y + x * z"),
    ("A6", "x + 0 = x /\\ x * 0 = 0"),
    ("A7", "x * 1 = x"),
    ("A8", "x < y /\\ y < z -> x < z"),
    ("A9", "~ x < x"),
    ("A10", "x < y \\/ x = y \\/ y < x"),
    ("A11", "x < y -> x + z < y + z"),
    ("A12", "0 < z /\\ x < y -> x * z < y * z"),
    ("A13", "forall x. forall y. exists z. x < y -> x + z = y"),
    ("A14", "0 < 1 /\\ (x > 0 -> x > 1 \\/ x = 1)"),
    ("A15", "x > 0 \\/ x = 0"),
    ("A16", "forall p. exists q. forall u. pi2(p) -> p < q /\\ pi2(q) /\\ (pi2(u) /\\ p < u -> q <= u)"),
    ("A17", "forall p. exists q. forall u. pi2(p) /\\ 2 < p -> q < p /\\ pi2(q) /\\ (pi2(u) /\\ u < p -> u <= q)"),
    ("A18", "forall n. exists p. forall q. 4 < n -> pi2(p) /\\ p * p < n /\\ (p < q /\\ pi2(q) -> n <= q * q)"),
    ("A19", "17 < q /\\ sigma(r, p) /\\ sigma(p, q) -> q * q < 2 * p * r"),
    ("A20", "forall n. exists p. n > 1 -> pi2(p) /\\ p | n"),
    ("A21", "forall p. forall q. exists k. sigma(p, q) -> k * p < q * q /\\ (k + 1) * p > q * q"),
    (
        "GSw",
        "forall p. exists n. forall m. exists q. forall u. pi2(p) /\\ n <= m -> \
         coprime(q, m) /\\ q < m /\\ 1 < q /\\ (u <= p /\\ pi2(u) -> coprime(u, q)) /\\ ~pi2(q)",
    ),
    (
        "GSs",
        "forall p. exists n. forall t. forall v. forall m. exists q. forall u. pi2(p) -> \
         (1 < t /\\ t < n /\\ coprime(t, n) /\\ (v <= p /\\ pi2(v) -> coprime(v, t)) -> pi2(t)) /\\ \
         (n <= m -> coprime(q, m) /\\ q < m /\\ 1 < q /\\ (u <= p /\\ pi2(u) -> coprime(u, q)) /\\ ~pi2(q))",
    ),
];

const EQ3: &str = "forall x. pi2(x) -> pi1(x)";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub name: &'static str,
    pub formula: Formula,
}

fn build() -> Vec<Entry> {
    ENTRIES
        .iter()
        .map(|(name, text)| {
            let f = parse(text).unwrap_or_else(|e| panic!("catalog entry {name}: {e}"));
            Entry { name, formula: f.universal_closure() }
        })
        .collect()
}

/// The 23 entries A1–A21, GSw, GSs, each a closed formula.
pub fn axiom_catalog() -> &'static [Entry] {
    static CATALOG: OnceLock<Vec<Entry>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|(n, _)| *n).collect()
}

/// A catalog entry, `Eq3`, or a defined predicate by name (`pi1`, `pi2`,
/// `coprime`, `sigma`, `divides`, `le`) as its definition over fresh
/// variables. Names are case-insensitive; `GS^w` and `GS^s` are accepted.
pub fn lookup(name: &str) -> Option<Formula> {
    let key = name.replace('^', "").to_ascii_lowercase();
    if let Some(e) = axiom_catalog().iter().find(|e| e.name.to_ascii_lowercase() == key) {
        return Some(e.formula.clone());
    }
    if key == "eq3" {
        return Some(parse(EQ3).expect("valid"));
    }
    let pred = match key.as_str() {
        "pi1" => Pred::Irreducible,
        "pi2" => Pred::Prime,
        "coprime" | "rho" => Pred::Coprime,
        "sigma" => Pred::Consecutive,
        "divides" => Pred::Divides,
        "le" => Pred::Le,
        _ => return None,
    };
    Some(definition(pred))
}

/// `pred(x[, y])` over the variables `x`, `y` and its expansion.
pub fn definition(pred: Pred) -> Formula {
    let args: Vec<Term> = ["x", "y"].iter().take(pred.arity()).map(|v| Term::var(v)).collect();
    pred.expand(&args)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::folio::pretty::{pretty, pretty_ascii};

    #[test]
    fn has_twenty_three_closed_entries() {
        let cat = axiom_catalog();
        assert_eq!(cat.len(), 23);
        for e in cat {
            assert!(e.formula.free_vars().is_empty(), "{} has free variables", e.name);
        }
        assert_eq!(names()[22], "GSs");
    }

    #[test]
    fn printed_shapes() {
        assert_eq!(pretty(&lookup("A9").unwrap()), "∀x. ¬(x < x)");
        assert!(pretty(&lookup("A14").unwrap()).contains("0 < 1"));
        assert!(lookup("A19").unwrap().numerals().contains(&17));
        assert_eq!(pretty_ascii(&lookup("Eq3").unwrap()), "forall x. pi2(x) -> pi1(x)");
        assert_eq!(pretty(&lookup("A5").unwrap()), "∀x. ∀y. ∀z. x · (y + z) = x · y + x · z");
    }

    #[test]
    fn lookup_is_forgiving() {
        assert_eq!(lookup("gs^w"), lookup("GSw"));
        assert!(lookup("sigma").is_some());
        assert!(lookup("A22").is_none());
    }
}
