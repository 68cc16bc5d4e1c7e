//! Recursive-descent parser for multivector and operator expressions.
//!
//! Multivectors: `1 dt dx1 … dx123 w1 w2 w3 a0 a1 … a123 eps± I12± I23± I31±
//! P1± P2± P3±`, rational prefixes, juxtaposition for the product, `+`/`-`,
//! parentheses, and explicit tensor blades such as `dt dx^{12} ⊗ a0 a_{3}`.
//! Operators: `J1 J2 J3 K1 Lmul(..) Rmul(..) scale(..)`, composition with
//! `∘` or `.`, sums, rational prefixes and parentheses.

use std::collections::BTreeSet;
use std::fmt;

use kahler_core::blade::{Axis, Generator, GeneratorSet, Sign};
use kahler_core::elements::{a, bold, cot, dt, tan, w};
use kahler_core::idempotents::{eps, i_plane, p_axis, Plane};
use kahler_core::multivector::Multivector;
use kahler_core::operators::OperatorExpr;
use kahler_core::rational::Rational;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}; expected one of: {}", expected_list(.expected))]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
    pub expected: BTreeSet<String>,
}

fn expected_list(set: &BTreeSet<String>) -> String {
    set.iter().cloned().collect::<Vec<_>>().join(", ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Slash,
    Plus,
    Minus,
    LParen,
    RParen,
    Tensor,
    Compose,
    /// `dx^{digits}`
    CotDx(String),
    /// `a_{digits}`
    TanA(String),
    /// identifier, with the sign glued to it (`I12+`) if any
    Ident(String, Option<Sign>),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Slash => f.write_str("/"),
            Tok::Plus => f.write_str("+"),
            Tok::Minus => f.write_str("-"),
            Tok::LParen => f.write_str("("),
            Tok::RParen => f.write_str(")"),
            Tok::Tensor => f.write_str("⊗"),
            Tok::Compose => f.write_str("∘"),
            Tok::CotDx(d) => write!(f, "dx^{{{d}}}"),
            Tok::TanA(d) => write!(f, "a_{{{d}}}"),
            Tok::Ident(s, None) => f.write_str(s),
            Tok::Ident(s, Some(sign)) => write!(f, "{s}{sign}"),
        }
    }
}

/// Identifiers that take a glued `+`/`-`.
fn takes_sign(ident: &str) -> bool {
    ident == "eps"
        || ident.strip_prefix('I').is_some_and(|r| Plane::from_label(r.trim_end_matches('\'')).is_some())
        || ident.strip_prefix('P').is_some_and(|r| r.len() == 1 && matches!(r, "1" | "2" | "3"))
}

fn err(offset: usize, message: impl Into<String>, expected: &[&str]) -> ParseError {
    ParseError { offset, message: message.into(), expected: expected.iter().map(|s| s.to_string()).collect() }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let single = match c {
            '/' => Some(Tok::Slash),
            '+' => Some(Tok::Plus),
            '-' | '−' => Some(Tok::Minus),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '⊗' => Some(Tok::Tensor),
            '∘' | '.' => Some(Tok::Compose),
            _ => None,
        };
        if let Some(t) = single {
            chars.next();
            out.push((pos, t));
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(p, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = p + d.len_utf8();
                chars.next();
            }
            out.push((pos, Tok::Int(text[pos..end].parse().expect("digits"))));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut end = pos;
            while let Some(&(p, d)) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '\'') {
                    break;
                }
                end = p + d.len_utf8();
                chars.next();
            }
            let ident = &text[pos..end];
            // dx^{..} and a_{..}
            let braced = match (ident, chars.peek()) {
                ("dx", Some(&(_, '^'))) => Some(true),
                ("a", Some(&(_, '_'))) => Some(false),
                _ => None,
            };
            if let Some(is_cot) = braced {
                chars.next();
                match chars.next() {
                    Some((_, '{')) => {}
                    other => return Err(err(other.map_or(text.len(), |(p, _)| p), "missing brace", &["{"])),
                }
                let start = chars.peek().map_or(text.len(), |&(p, _)| p);
                let mut digits = String::new();
                loop {
                    match chars.next() {
                        Some((_, '}')) => break,
                        Some((_, d @ '1'..='3')) => digits.push(d),
                        Some((p, _)) => return Err(err(p, "bad index", &["1", "2", "3", "}"])),
                        None => return Err(err(text.len(), "unterminated index", &["}"])),
                    }
                }
                if digits.is_empty() {
                    return Err(err(start, "empty index", &["1", "2", "3"]));
                }
                out.push((pos, if is_cot { Tok::CotDx(digits) } else { Tok::TanA(digits) }));
                continue;
            }
            let mut sign = None;
            if takes_sign(ident) {
                sign = match chars.peek() {
                    Some(&(_, '+')) => Some(Sign::Plus),
                    Some(&(_, '-')) | Some(&(_, '−')) => Some(Sign::Minus),
                    _ => return Err(err(end, format!("{ident} needs a sign"), &["+", "-"])),
                };
                chars.next();
            }
            out.push((pos, Tok::Ident(ident.to_string(), sign)));
            continue;
        }
        return Err(err(pos, format!("unexpected character {c:?}"), &["expression"]));
    }
    Ok(out)
}

const MV_START: &[&str] = &["number", "(", "dt", "dx1", "w1", "a1", "eps+", "I12+", "P1+", "dx^{..}", "a_{..}"];
const OP_START: &[&str] = &["J1", "K1", "Lmul(", "Rmul(", "scale(", "(", "number"];

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

fn digits_to_axes(d: &str) -> Option<Vec<Axis>> {
    d.bytes().map(|b| b.checked_sub(b'0').and_then(Axis::from_index)).collect()
}

fn axes_set(axes: &[Axis]) -> Option<GeneratorSet> {
    let set = GeneratorSet::from_axes(axes.iter().copied());
    (set.len() == axes.len()).then_some(set)
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser { toks: lex(text)?, pos: 0, len: text.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn peek_at(&self, n: usize) -> Option<&Tok> {
        self.toks.get(self.pos + n).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |(p, _)| *p)
    }

    fn fail<T>(&self, message: &str, expected: &[&str]) -> Result<T, ParseError> {
        let found = self.peek().map_or("end of input".to_string(), |t| format!("'{t}'"));
        Err(err(self.offset(), format!("{message}, found {found}"), expected))
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok, name: &str) -> Result<(), ParseError> {
        if self.eat(&t) {
            Ok(())
        } else {
            self.fail("unexpected token", &[name])
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.fail("trailing input", &["+", "-", "end of input"]),
        }
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let num = match self.peek() {
            Some(Tok::Int(n)) => n.clone(),
            _ => return self.fail("expected a number", &["number"]),
        };
        self.pos += 1;
        if self.eat(&Tok::Slash) {
            let at = self.offset();
            let den = match self.peek() {
                Some(Tok::Int(d)) => d.clone(),
                _ => return self.fail("expected a denominator", &["number"]),
            };
            self.pos += 1;
            if den == BigInt::from(0) {
                return Err(err(at, "zero denominator", &["nonzero number"]));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn signed_rational(&mut self) -> Result<Rational, ParseError> {
        let negative = self.eat(&Tok::Minus);
        let r = self.rational()?;
        Ok(if negative { -r } else { r })
    }

    // multivectors

    fn mv_expr(&mut self) -> Result<Multivector, ParseError> {
        let mut negative = false;
        if self.eat(&Tok::Minus) {
            negative = true;
        } else {
            self.eat(&Tok::Plus);
        }
        let first = self.mv_term()?;
        let mut acc = if negative { -first } else { first };
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc + self.mv_term()?;
            } else if self.eat(&Tok::Minus) {
                acc = acc - self.mv_term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_) | Tok::LParen | Tok::Ident(..) | Tok::CotDx(_) | Tok::TanA(_))
        )
    }

    fn mv_term(&mut self) -> Result<Multivector, ParseError> {
        if !self.starts_factor() {
            return self.fail("expected a term", MV_START);
        }
        let mut acc = self.mv_factor()?;
        while self.starts_factor() {
            let rhs = self.mv_factor()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn is_cot_tok(t: &Tok) -> bool {
        matches!(t, Tok::CotDx(_) | Tok::Int(_)) || matches!(t, Tok::Ident(s, None) if s == "dt")
    }

    fn is_tan_tok(t: &Tok) -> bool {
        matches!(t, Tok::TanA(_)) || matches!(t, Tok::Ident(s, None) if s == "a0")
    }

    /// A run of cotangent tokens followed by `⊗` starts a tensor blade.
    fn tensor_ahead(&self) -> bool {
        let mut n = 0;
        while let Some(t) = self.peek_at(n) {
            if *t == Tok::Tensor {
                return n > 0;
            }
            if !Self::is_cot_tok(t) || matches!(t, Tok::Int(i) if *i != BigInt::from(1)) {
                return false;
            }
            n += 1;
        }
        false
    }

    fn tensor_blade(&mut self) -> Result<Multivector, ParseError> {
        let mut cot_part = Multivector::one();
        while self.peek() != Some(&Tok::Tensor) {
            let at = self.offset();
            let piece = match self.peek().cloned() {
                Some(Tok::Int(_)) => Multivector::one(),
                Some(Tok::Ident(_, _)) => cot(&[Generator::T]),
                Some(Tok::CotDx(d)) => {
                    let axes = digits_to_axes(&d)
                        .filter(|x| axes_set(x).is_some())
                        .ok_or_else(|| err(at, "repeated index", &["distinct indices"]))?;
                    let gens: Vec<Generator> = axes.iter().map(|x| x.generator()).collect();
                    cot(&gens)
                }
                _ => unreachable!("checked by tensor_ahead"),
            };
            self.pos += 1;
            cot_part = &cot_part * &piece;
        }
        self.pos += 1;
        let mut tan_part = Multivector::one();
        let mut any = false;
        loop {
            let at = self.offset();
            let piece = match self.peek().cloned() {
                Some(Tok::Int(n)) if n == BigInt::from(1) => Multivector::one(),
                Some(t) if Self::is_tan_tok(&t) => match t {
                    Tok::TanA(d) => {
                        let axes = digits_to_axes(&d)
                            .filter(|x| axes_set(x).is_some())
                            .ok_or_else(|| err(at, "repeated index", &["distinct indices"]))?;
                        let gens: Vec<Generator> = axes.iter().map(|x| x.generator()).collect();
                        tan(&gens)
                    }
                    _ => tan(&[Generator::T]),
                },
                _ if any => break,
                _ => return self.fail("expected a tangent factor", &["1", "a0", "a_{..}"]),
            };
            self.pos += 1;
            any = true;
            tan_part = &tan_part * &piece;
        }
        Ok(&cot_part * &tan_part)
    }

    fn mv_factor(&mut self) -> Result<Multivector, ParseError> {
        if self.tensor_ahead() {
            return self.tensor_blade();
        }
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(_)) => Ok(Multivector::scalar(self.rational()?)),
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.mv_expr()?;
                self.expect(Tok::RParen, ")")?;
                Ok(inner)
            }
            Some(Tok::CotDx(_)) | Some(Tok::TanA(_)) => self.fail("incomplete tensor blade", &["⊗"]),
            Some(Tok::Ident(name, sign)) => {
                self.pos += 1;
                atom(&name, sign).ok_or_else(|| err(at, format!("unknown name {name}"), MV_START))
            }
            _ => self.fail("expected a factor", MV_START),
        }
    }

    // operators

    fn op_expr(&mut self) -> Result<OperatorExpr, ParseError> {
        let mut terms = Vec::new();
        let mut negative = self.eat(&Tok::Minus);
        if !negative {
            self.eat(&Tok::Plus);
        }
        loop {
            let t = self.op_term()?;
            terms.push(if negative { scaled(-Rational::from_integer(1.into()), t) } else { t });
            if self.eat(&Tok::Plus) {
                negative = false;
            } else if self.eat(&Tok::Minus) {
                negative = true;
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { OperatorExpr::Sum(terms) })
    }

    fn op_term(&mut self) -> Result<OperatorExpr, ParseError> {
        if matches!(self.peek(), Some(Tok::Int(_))) {
            let c = self.rational()?;
            let inner = self.op_comp()?;
            return Ok(scaled(c, inner));
        }
        self.op_comp()
    }

    fn op_comp(&mut self) -> Result<OperatorExpr, ParseError> {
        let mut parts = vec![self.op_atom()?];
        while self.eat(&Tok::Compose) {
            parts.push(self.op_atom()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { OperatorExpr::Compose(parts) })
    }

    fn op_atom(&mut self) -> Result<OperatorExpr, ParseError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.op_expr()?;
                self.expect(Tok::RParen, ")")?;
                Ok(inner)
            }
            Some(Tok::Ident(name, None)) => {
                self.pos += 1;
                match name.as_str() {
                    "J1" => Ok(OperatorExpr::J(Axis::X1)),
                    "J2" => Ok(OperatorExpr::J(Axis::X2)),
                    "J3" => Ok(OperatorExpr::J(Axis::X3)),
                    "K1" => Ok(OperatorExpr::KPlusOne),
                    "Lmul" | "Rmul" => {
                        self.expect(Tok::LParen, "(")?;
                        let m = self.mv_expr()?;
                        self.expect(Tok::RParen, ")")?;
                        Ok(if name == "Lmul" { OperatorExpr::LeftMul(m) } else { OperatorExpr::RightMul(m) })
                    }
                    "scale" => {
                        self.expect(Tok::LParen, "(")?;
                        let c = self.signed_rational()?;
                        self.expect(Tok::RParen, ")")?;
                        Ok(OperatorExpr::Scale(c))
                    }
                    _ => Err(err(at, format!("unknown operator {name}"), OP_START)),
                }
            }
            _ => self.fail("expected an operator", OP_START),
        }
    }
}

fn scaled(c: Rational, op: OperatorExpr) -> OperatorExpr {
    OperatorExpr::Compose(vec![OperatorExpr::Scale(c), op])
}

fn atom(name: &str, sign: Option<Sign>) -> Option<Multivector> {
    if let Some(s) = sign {
        if name == "eps" {
            return Some(eps(s));
        }
        if let Some(rest) = name.strip_prefix('I') {
            return Plane::from_label(rest.trim_end_matches('\'')).map(|p| i_plane(p, s));
        }
        let axis = Axis::from_index(name.strip_prefix('P')?.parse().ok()?)?;
        return Some(p_axis(axis, s));
    }
    if name == "dt" {
        return Some(dt());
    }
    if name == "a0" {
        return Some(tan(&[Generator::T]));
    }
    if let Some(d) = name.strip_prefix("dx") {
        let axes = digits_to_axes(d).filter(|x| !x.is_empty())?;
        return axes_set(&axes).map(bold);
    }
    if let Some(d) = name.strip_prefix('w') {
        let axes = digits_to_axes(d)?;
        return match axes.as_slice() {
            [x] => Some(w(*x)),
            _ => None,
        };
    }
    if let Some(d) = name.strip_prefix('a') {
        let axes = digits_to_axes(d).filter(|x| !x.is_empty())?;
        axes_set(&axes)?;
        return Some(a(&axes));
    }
    None
}

pub fn parse_multivector(text: &str) -> Result<Multivector, ParseError> {
    let mut p = Parser::new(text)?;
    if p.peek().is_none() {
        return p.fail("empty expression", MV_START);
    }
    let m = p.mv_expr()?;
    p.finish()?;
    Ok(m)
}

pub fn parse_operator(text: &str) -> Result<OperatorExpr, ParseError> {
    let mut p = Parser::new(text)?;
    let op = p.op_expr()?;
    p.finish()?;
    Ok(op)
}

/// `p`, `-p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let mut p = Parser::new(text)?;
    let r = p.signed_rational()?;
    p.finish()?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use kahler_core::elements::{dr, dx};
    use kahler_core::idempotents::IdempotentDescriptor;
    use kahler_core::rational::rat;

    fn mv(text: &str) -> Multivector {
        parse_multivector(text).unwrap_or_else(|e| panic!("{text}: {e}"))
    }

    #[test]
    fn idempotent_products() {
        let expected = IdempotentDescriptor::ip(Plane::P12, Sign::Plus, Axis::X1, Sign::Plus).expand();
        assert_eq!(mv("I12+ P1+"), expected);
        assert_eq!(mv("1/4 (1 + dx1 + dx2 + dx12)"), expected);
        assert_eq!(mv("1/2 (1 - dt)"), eps(Sign::Plus));
        assert_eq!(mv("eps- I31- P2+"), &(&eps(Sign::Minus) * &i_plane(Plane::P31, Sign::Minus)) * &p_axis(Axis::X2, Sign::Plus));
    }

    #[test]
    fn signs_and_prefixes() {
        assert_eq!(mv("-dx1 + 2 dx2"), &dx(Axis::X2).scale(&rat(2, 1)) - &dx(Axis::X1));
        assert_eq!(mv("-1/2"), Multivector::scalar(rat(-1, 2)));
        assert_eq!(mv("dx1 dx1"), Multivector::one());
        assert_eq!(mv("w2 w1"), w(Axis::X3));
    }

    #[test]
    fn tensor_blades() {
        let b = mv("dx^{3} ⊗ a_{1}");
        assert_eq!(b, &cot(&[Generator::X3]) * &a(&[Axis::X1]));
        assert_eq!(mv("1 ⊗ a0 a_{12}"), tan(&[Generator::T, Generator::X1, Generator::X2]));
        assert_eq!(mv("1/2 dt dx^{12} ⊗ 1"), cot(&[Generator::T, Generator::X1, Generator::X2]).scale(&rat(1, 2)));
        assert_eq!(mv("dx^{21} ⊗ 1"), -cot(&[Generator::X1, Generator::X2]));
    }

    #[test]
    fn operators() {
        let op = parse_operator("K1 ∘ Lmul(dx1+dx2+dx3)").unwrap();
        assert_eq!(op, OperatorExpr::total_space());
        assert_eq!(parse_operator("K1 . Lmul(dx1 + dx2 + dx3)").unwrap(), op);
        let shifted = parse_operator("K1 ∘ Lmul(dx1 + dx2 + dx3) + scale(4)").unwrap();
        assert_eq!(shifted, OperatorExpr::total_space().shifted(rat(4, 1)));
        let neg = parse_operator("J1 - 2 J2").unwrap();
        let u = dr();
        let sig = kahler_core::Signature::ALL_PLUS;
        let expected = kahler_core::apply_j(Axis::X1, &u, &sig)
            - kahler_core::apply_j(Axis::X2, &u, &sig).scale(&rat(2, 1));
        assert_eq!(neg.apply(&u, &sig), expected);
    }

    #[test]
    fn errors_carry_offsets() {
        let e = parse_multivector("dx1 + ").unwrap_err();
        assert_eq!(e.offset, 6);
        assert!(e.expected.contains("dt"));
        let e = parse_multivector("I12 P1+").unwrap_err();
        assert_eq!(e.offset, 3);
        assert!(e.expected.contains("+"));
        let e = parse_multivector("dx4").unwrap_err();
        assert_eq!(e.offset, 0);
        let e = parse_multivector("1/0").unwrap_err();
        assert_eq!(e.offset, 2);
        let e = parse_operator("K2").unwrap_err();
        assert_eq!(e.offset, 0);
        assert!(parse_multivector("(dx1").is_err());
        assert!(parse_multivector("dx11").is_err());
        assert!(parse_multivector("").is_err());
        assert!(parse_multivector("dx1'").is_err());
    }
}
