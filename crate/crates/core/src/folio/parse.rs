//! Formula text grammar, weakest binding first:
//!
//! ```text
//! formula  := quant | implies
//! quant    := ("forall" | "∀" | "exists" | "∃") var ("," var)* "." formula
//! implies  := or (("->" | "→" | "=>") formula)?
//! or       := and (("\/" | "∨" | "or") and)*
//! and      := unary (("/\" | "∧" | "&" | "and") unary)*
//! unary    := ("~" | "¬" | "!" | "not") unary | quant | atom
//! atom     := term rel term | pred "(" term ("," term)* ")" | "(" formula ")"
//! rel      := "=" | "<" | ">" | "<=" | "≤" | ">=" | "≥" | "|"
//! pred     := "pi1" | "π₁" | "pi2" | "π₂" | "coprime" | "ϱ" | "sigma" | "σ"
//! term     := prod ("+" prod)*
//! prod     := power (("*" | "·") power)*
//! power    := primary ("^" digits)?
//! primary  := var | digits | "(" term ")"
//! ```
//!
//! `a > b` reads as `b < a` and `a ≥ b` as `b ≤ a`. Decimal literals become
//! numerals. Positions in errors count characters from 0.

use thiserror::Error;

use super::ast::{Formula, Pred, Term, MAX_NUMERAL};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(u64),
    LParen,
    RParen,
    Comma,
    Dot,
    Plus,
    Times,
    Caret,
    Eq,
    Lt,
    Gt,
    Le,
    Ge,
    Bar,
    Not,
    And,
    Or,
    Implies,
    Forall,
    Exists,
    Pred(Pred),
    Eof,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Num(n) => format!("number {n}"),
        Tok::Eof => "end of input".to_string(),
        other => format!("{other:?}"),
    }
}

fn keyword(word: &str) -> Option<Tok> {
    Some(match word {
        "forall" => Tok::Forall,
        "exists" => Tok::Exists,
        "not" => Tok::Not,
        "and" => Tok::And,
        "or" => Tok::Or,
        "pi1" => Tok::Pred(Pred::Irreducible),
        "pi2" => Tok::Pred(Pred::Prime),
        "coprime" | "rho" => Tok::Pred(Pred::Coprime),
        "sigma" => Tok::Pred(Pred::Consecutive),
        _ => return None,
    })
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |pos: usize, message: String| ParseError { pos, message };
    while i < chars.len() {
        let c = chars[i];
        let next = chars.get(i + 1).copied();
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let (tok, len) = match (c, next) {
            ('(', _) => (Tok::LParen, 1),
            (')', _) => (Tok::RParen, 1),
            (',', _) => (Tok::Comma, 1),
            ('.', _) => (Tok::Dot, 1),
            ('+', _) => (Tok::Plus, 1),
            ('*' | '·', _) => (Tok::Times, 1),
            ('^', _) => (Tok::Caret, 1),
            ('=', Some('>')) => (Tok::Implies, 2),
            ('=', _) => (Tok::Eq, 1),
            ('<', Some('=')) => (Tok::Le, 2),
            ('<', _) => (Tok::Lt, 1),
            ('>', Some('=')) => (Tok::Ge, 2),
            ('>', _) => (Tok::Gt, 1),
            ('≤', _) => (Tok::Le, 1),
            ('≥', _) => (Tok::Ge, 1),
            ('|', _) => (Tok::Bar, 1),
            ('-', Some('>')) => (Tok::Implies, 2),
            ('→', _) => (Tok::Implies, 1),
            ('~' | '¬' | '!', _) => (Tok::Not, 1),
            ('/', Some('\\')) => (Tok::And, 2),
            ('∧' | '&', _) => (Tok::And, 1),
            ('\\', Some('/')) => (Tok::Or, 2),
            ('∨', _) => (Tok::Or, 1),
            ('∀', _) => (Tok::Forall, 1),
            ('∃', _) => (Tok::Exists, 1),
            ('π', Some('₁')) => (Tok::Pred(Pred::Irreducible), 2),
            ('π', Some('₂')) => (Tok::Pred(Pred::Prime), 2),
            ('ϱ' | 'ρ', _) => (Tok::Pred(Pred::Coprime), 1),
            ('σ', _) => (Tok::Pred(Pred::Consecutive), 1),
            (d, _) if d.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let digits: String = chars[i..j].iter().collect();
                let n: u64 = digits
                    .parse()
                    .ok()
                    .filter(|&n| n <= MAX_NUMERAL)
                    .ok_or_else(|| err(i, format!("numeral {digits} exceeds {MAX_NUMERAL}")))?;
                (Tok::Num(n), j - i)
            }
            (a, _) if a.is_ascii_alphabetic() || a == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_' || chars[j] == '\'') {
                    j += 1;
                }
                let word: String = chars[i..j].iter().collect();
                (keyword(&word).unwrap_or(Tok::Ident(word)), j - i)
            }
            (other, _) => return Err(err(i, format!("unexpected character `{other}`"))),
        };
        out.push((start, tok));
        i += len;
    }
    out.push((chars.len(), Tok::Eof));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    furthest: Option<ParseError>,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn fail<T>(&mut self, message: String) -> PResult<T> {
        let e = ParseError { pos: self.pos(), message };
        if self.furthest.as_ref().is_none_or(|f| e.pos >= f.pos) {
            self.furthest = Some(e.clone());
        }
        Err(e)
    }

    fn expect(&mut self, t: Tok) -> PResult<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            let found = describe(self.peek());
            self.fail(format!("expected {}, found {found}", describe(&t)))
        }
    }

    fn formula(&mut self) -> PResult<Formula> {
        match self.peek() {
            Tok::Forall | Tok::Exists => self.quantified(),
            _ => self.implication(),
        }
    }

    fn quantified(&mut self) -> PResult<Formula> {
        let universal = self.bump() == Tok::Forall;
        let mut vars = Vec::new();
        loop {
            match self.bump() {
                Tok::Ident(v) => vars.push(v),
                other => {
                    self.at -= usize::from(other != Tok::Eof);
                    return self.fail(format!("expected a variable, found {}", describe(&other)));
                }
            }
            self.eat(&Tok::Comma);
            if self.eat(&Tok::Dot) {
                break;
            }
        }
        let body = self.formula()?;
        let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
        Ok(if universal { Formula::forall_all(&refs, body) } else { Formula::exists_all(&refs, body) })
    }

    fn implication(&mut self) -> PResult<Formula> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Implies) {
            let rhs = self.formula()?;
            return Ok(lhs.implies(rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> PResult<Formula> {
        let mut f = self.conjunction()?;
        while self.eat(&Tok::Or) {
            f = f.or(self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> PResult<Formula> {
        let mut f = self.unary()?;
        while self.eat(&Tok::And) {
            f = f.and(self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> PResult<Formula> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                Ok(self.unary()?.not())
            }
            Tok::Forall | Tok::Exists => self.quantified(),
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> PResult<Formula> {
        if let Tok::Pred(p) = *self.peek() {
            if !p.is_infix() {
                return self.application(p);
            }
        }
        let start = self.at;
        match self.comparison() {
            Ok(f) => Ok(f),
            Err(first) => {
                if self.toks[start].1 != Tok::LParen {
                    return Err(first);
                }
                self.at = start + 1;
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
        }
    }

    fn application(&mut self, p: Pred) -> PResult<Formula> {
        self.bump();
        self.expect(Tok::LParen)?;
        let mut args = vec![self.term()?];
        while self.eat(&Tok::Comma) {
            args.push(self.term()?);
        }
        self.expect(Tok::RParen)?;
        if args.len() != p.arity() {
            return self.fail(format!("{} takes {} argument(s), got {}", p.ascii_name(), p.arity(), args.len()));
        }
        Ok(Formula::Pred(p, args))
    }

    fn comparison(&mut self) -> PResult<Formula> {
        let a = self.term()?;
        let rel = self.peek().clone();
        if !matches!(rel, Tok::Eq | Tok::Lt | Tok::Gt | Tok::Le | Tok::Ge | Tok::Bar) {
            return self.fail(format!("expected a comparison, found {}", describe(&rel)));
        }
        self.bump();
        let b = self.term()?;
        Ok(match rel {
            Tok::Eq => Formula::eq(a, b),
            Tok::Lt => Formula::lt(a, b),
            Tok::Gt => Formula::lt(b, a),
            Tok::Le => Formula::le(a, b),
            Tok::Ge => Formula::le(b, a),
            Tok::Bar => Formula::divides(a, b),
            _ => unreachable!(),
        })
    }

    fn term(&mut self) -> PResult<Term> {
        let mut t = self.product()?;
        while self.eat(&Tok::Plus) {
            t = t.add(self.product()?);
        }
        Ok(t)
    }

    fn product(&mut self) -> PResult<Term> {
        let mut t = self.power()?;
        while self.eat(&Tok::Times) {
            t = t.mul(self.power()?);
        }
        Ok(t)
    }

    fn power(&mut self) -> PResult<Term> {
        let base = self.primary()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        match self.bump() {
            Tok::Num(k) if (1..=16).contains(&k) => {
                Ok((1..k).fold(base.clone(), |acc, _| acc.mul(base.clone())))
            }
            other => {
                self.at -= usize::from(other != Tok::Eof);
                self.fail("expected an exponent between 1 and 16".to_string())
            }
        }
    }

    fn primary(&mut self) -> PResult<Term> {
        match self.peek().clone() {
            Tok::Ident(v) => {
                self.bump();
                Ok(Term::Var(v))
            }
            Tok::Num(n) => {
                self.bump();
                Ok(Term::numeral(n))
            }
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            other => self.fail(format!("expected a term, found {}", describe(&other))),
        }
    }
}

pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0, furthest: None };
    let result = p.formula().and_then(|f| {
        if p.peek() == &Tok::Eof {
            Ok(f)
        } else {
            let found = describe(p.peek());
            p.fail(format!("unexpected {found}"))
        }
    });
    result.map_err(|e| match p.furthest.take() {
        Some(f) if f.pos > e.pos => f,
        _ => e,
    })
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0, furthest: None };
    let t = p.term()?;
    if p.peek() != &Tok::Eof {
        let found = describe(p.peek());
        return p.fail(format!("unexpected {found}"));
    }
    Ok(t)
}
