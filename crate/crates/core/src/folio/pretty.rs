//! Printing formulas in the text grammar accepted by [`super::parse`].
//!
//! Numeral-shaped terms print as decimals, operands are parenthesised only
//! where precedence or associativity requires it, negated atoms are always
//! parenthesised, and quantified operands of connectives are parenthesised.

use std::fmt::{self, Write};

use super::ast::{Formula, Pred, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Style {
    #[default]
    Unicode,
    Ascii,
}

struct Symbols {
    not: &'static str,
    and: &'static str,
    or: &'static str,
    implies: &'static str,
    forall: &'static str,
    exists: &'static str,
    times: &'static str,
}

const UNICODE: Symbols =
    Symbols { not: "¬", and: " ∧ ", or: " ∨ ", implies: " → ", forall: "∀", exists: "∃", times: " · " };
const ASCII: Symbols = Symbols {
    not: "~",
    and: " /\\ ",
    or: " \\/ ",
    implies: " -> ",
    forall: "forall ",
    exists: "exists ",
    times: " * ",
};

impl Style {
    fn symbols(self) -> &'static Symbols {
        match self {
            Style::Unicode => &UNICODE,
            Style::Ascii => &ASCII,
        }
    }

    fn pred_name(self, p: Pred) -> &'static str {
        match self {
            Style::Unicode => p.unicode_name(),
            Style::Ascii => p.ascii_name(),
        }
    }
}

pub fn pretty(f: &Formula) -> String {
    pretty_with(f, Style::Unicode)
}

pub fn pretty_ascii(f: &Formula) -> String {
    pretty_with(f, Style::Ascii)
}

pub fn pretty_with(f: &Formula, style: Style) -> String {
    let mut out = String::new();
    write_formula(&mut out, f, style).expect("writing to a String");
    out
}

pub fn pretty_term(t: &Term, style: Style) -> String {
    let mut out = String::new();
    write_term(&mut out, t, 0, style).expect("writing to a String");
    out
}

fn term_level(t: &Term) -> u8 {
    if t.as_numeral().is_some() {
        return 3;
    }
    match t {
        Term::Add(..) => 1,
        Term::Mul(..) => 2,
        _ => 3,
    }
}

fn write_term(out: &mut String, t: &Term, min: u8, style: Style) -> fmt::Result {
    if term_level(t) < min {
        out.push('(');
        write_term(out, t, 0, style)?;
        out.push(')');
        return Ok(());
    }
    if let Some(n) = t.as_numeral() {
        return write!(out, "{n}");
    }
    match t {
        Term::Var(v) => out.push_str(v),
        Term::Zero => out.push('0'),
        Term::One => out.push('1'),
        Term::Add(a, b) => {
            write_term(out, a, 1, style)?;
            out.push_str(" + ");
            write_term(out, b, 2, style)?;
        }
        Term::Mul(a, b) => {
            write_term(out, a, 2, style)?;
            out.push_str(style.symbols().times);
            write_term(out, b, 3, style)?;
        }
    }
    Ok(())
}

const QUANT: u8 = 0;
const IMPLIES: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const UNARY: u8 = 4;

fn level(f: &Formula) -> u8 {
    match f {
        Formula::Forall(..) | Formula::Exists(..) => QUANT,
        Formula::Implies(..) => IMPLIES,
        Formula::Or(..) => OR,
        Formula::And(..) => AND,
        _ => UNARY,
    }
}

fn write_operand(out: &mut String, f: &Formula, min: u8, style: Style) -> fmt::Result {
    if level(f) < min || level(f) == QUANT {
        out.push('(');
        write_formula(out, f, style)?;
        out.push(')');
        Ok(())
    } else {
        write_formula(out, f, style)
    }
}

fn write_formula(out: &mut String, f: &Formula, style: Style) -> fmt::Result {
    let sym = style.symbols();
    match f {
        Formula::Eq(a, b) => {
            write_term(out, a, 0, style)?;
            out.push_str(" = ");
            write_term(out, b, 0, style)?;
        }
        Formula::Lt(a, b) => {
            write_term(out, a, 0, style)?;
            out.push_str(" < ");
            write_term(out, b, 0, style)?;
        }
        Formula::Pred(p, args) if p.is_infix() => {
            write_term(out, &args[0], 0, style)?;
            write!(out, " {} ", style.pred_name(*p))?;
            write_term(out, &args[1], 0, style)?;
        }
        Formula::Pred(p, args) => {
            out.push_str(style.pred_name(*p));
            out.push('(');
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_term(out, a, 0, style)?;
            }
            out.push(')');
        }
        Formula::Not(a) => {
            out.push_str(sym.not);
            let bare = match **a {
                Formula::Not(_) => true,
                Formula::Pred(p, _) => !p.is_infix(),
                _ => false,
            };
            if bare {
                write_formula(out, a, style)?;
            } else {
                out.push('(');
                write_formula(out, a, style)?;
                out.push(')');
            }
        }
        Formula::And(a, b) => {
            write_operand(out, a, AND, style)?;
            out.push_str(sym.and);
            write_operand(out, b, UNARY, style)?;
        }
        Formula::Or(a, b) => {
            write_operand(out, a, OR, style)?;
            out.push_str(sym.or);
            write_operand(out, b, AND, style)?;
        }
        Formula::Implies(a, b) => {
            write_operand(out, a, OR, style)?;
            out.push_str(sym.implies);
            write_operand(out, b, IMPLIES, style)?;
        }
        Formula::Forall(v, body) | Formula::Exists(v, body) => {
            let q = if matches!(f, Formula::Forall(..)) { sym.forall } else { sym.exists };
            write!(out, "{q}{v}. ")?;
            write_formula(out, body, style)?;
        }
    }
    Ok(())
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&pretty(self))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&pretty_term(self, Style::Unicode))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> Term {
        Term::var(n)
    }

    #[test]
    fn atoms_and_numerals() {
        assert_eq!(pretty(&Formula::eq(v("x"), v("x"))), "x = x");
        assert_eq!(pretty(&Formula::lt(Term::numeral(17), v("q"))), "17 < q");
        assert_eq!(pretty(&Formula::lt(v("x"), v("x")).not()), "¬(x < x)");
        assert_eq!(pretty_ascii(&Formula::lt(v("x"), v("x")).not()), "~(x < x)");
        let t = Term::numeral(2).mul(v("p")).mul(v("r"));
        assert_eq!(pretty_term(&t, Style::Unicode), "2 · p · r");
        let t = v("x").mul(v("y").add(v("z")));
        assert_eq!(pretty_term(&t, Style::Ascii), "x * (y + z)");
        assert_eq!(pretty_term(&Term::One.add(Term::numeral(2)), Style::Ascii), "1 + 2");
    }

    #[test]
    fn connectives_and_quantifiers() {
        let a = Formula::lt(v("x"), v("y"));
        let b = Formula::eq(v("x"), v("y"));
        let c = Formula::lt(v("y"), v("x"));
        assert_eq!(pretty(&a.clone().or(b.clone()).or(c.clone())), "x < y ∨ x = y ∨ y < x");
        assert_eq!(pretty(&a.clone().or(b.clone().or(c.clone()))), "x < y ∨ (x = y ∨ y < x)");
        assert_eq!(pretty(&a.clone().implies(b.clone()).implies(c.clone())), "(x < y → x = y) → y < x");
        let q = Formula::Exists("z".into(), Box::new(Formula::lt(v("x"), v("z"))));
        assert_eq!(pretty(&Formula::Forall("x".into(), Box::new(q.clone()))), "∀x. ∃z. x < z");
        assert_eq!(pretty(&a.and(q)), "x < y ∧ (∃z. x < z)");
        assert_eq!(pretty(&Formula::prime(v("q")).not()), "¬π₂(q)");
        assert_eq!(pretty_ascii(&Formula::le(v("q"), v("u"))), "q <= u");
    }
}
