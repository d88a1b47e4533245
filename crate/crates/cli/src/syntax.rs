//! Text syntax for Lie elements, polynomials and permutations.
//!
//! ```text
//! lie     := ["+"|"-"] lterm (("+"|"-") lterm)*
//! lterm   := [rat ["*"]] lfactor (["*"] powterm)* | "0"
//! lfactor := GEN | "[" lie "," lie "]" | "(" lie ")"
//! powterm := GEN ["^" INT]
//! rat     := INT ["/" INT]
//! GEN     := "x" INT
//! ```
//!
//! A `powterm` after a factor is the module action of the commutator ideal, so
//! `[x2,x1]*x1^2` and `[x2,x1]x1 x1` denote the same element. The `*` may be dropped
//! only after a bracket. The printed form of
//! every element parses back to itself.

use std::fmt;

use metalie_core::{CommPoly, Element, ExponentVector, LieElement, MetabelianElement, Permutation, Rational};
use num_traits::{One, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SyntaxError {
    #[error("{pos}: {message}")]
    Parse { pos: Pos, message: String },
    #[error("{pos}: {source}")]
    Eval {
        pos: Pos,
        #[source]
        source: metalie_core::Error,
    },
}

impl SyntaxError {
    fn parse(pos: Pos, message: impl Into<String>) -> Self {
        SyntaxError::Parse { pos, message: message.into() }
    }

    pub fn pos(&self) -> Pos {
        match self {
            SyntaxError::Parse { pos, .. } | SyntaxError::Eval { pos, .. } => *pos,
        }
    }
}

type Result<T> = std::result::Result<T, SyntaxError>;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(String),
    Gen(usize),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(s) => write!(f, "`{s}`"),
            Tok::Gen(i) => write!(f, "`x{i}`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    let digits = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>, col: &mut usize| {
        let mut s = String::new();
        while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
            s.push(d);
            chars.next();
            *col += 1;
        }
        s
    };
    while let Some(&ch) = chars.peek() {
        let pos = Pos { line, col };
        if ch == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if ch.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        let tok = match ch {
            '0'..='9' => Tok::Int(digits(&mut chars, &mut col)),
            'x' => {
                chars.next();
                col += 1;
                let s = digits(&mut chars, &mut col);
                if s.is_empty() {
                    return Err(SyntaxError::parse(pos, "expected a generator index after `x`"));
                }
                let index = s.parse().map_err(|_| SyntaxError::parse(pos, format!("generator index `{s}` is too large")))?;
                Tok::Gen(index)
            }
            _ => {
                chars.next();
                col += 1;
                match ch {
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    other => return Err(SyntaxError::parse(pos, format!("unexpected character `{other}`"))),
                }
            }
        };
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, col }));
    Ok(out)
}

/// Surface syntax tree of a Lie expression.
#[derive(Debug, Clone, PartialEq)]
pub enum LieExpr {
    Zero,
    Gen { index: usize, pos: Pos },
    Bracket(Box<LieExpr>, Box<LieExpr>),
    Scaled(Rational, Box<LieExpr>),
    Sum(Vec<LieExpr>),
    /// Module action `e * x_index^exp`.
    Act { expr: Box<LieExpr>, index: usize, exp: u32, pos: Pos },
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Self { toks: tokenize(text)?, at: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("{tok}")))
        }
    }

    fn unexpected(&self, wanted: &str) -> SyntaxError {
        SyntaxError::parse(self.pos(), format!("expected {wanted}, found {}", self.peek()))
    }

    fn finish(&mut self) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.unexpected("an operator or end of input"))
        }
    }

    fn rational(&mut self) -> Result<Option<Rational>> {
        let Tok::Int(num) = self.peek().clone() else {
            return Ok(None);
        };
        let pos = self.pos();
        self.bump();
        let text = if self.eat(&Tok::Slash) {
            match self.bump() {
                (Tok::Int(den), _) => format!("{num}/{den}"),
                (t, p) => return Err(SyntaxError::parse(p, format!("expected a denominator, found {t}"))),
            }
        } else {
            num
        };
        text.parse::<Rational>().map(Some).map_err(|_| SyntaxError::parse(pos, format!("invalid rational `{text}`")))
    }

    fn powterm(&mut self) -> Result<(usize, u32, Pos)> {
        let pos = self.pos();
        let Tok::Gen(index) = self.peek().clone() else {
            return Err(self.unexpected("a generator"));
        };
        self.bump();
        let exp = if self.eat(&Tok::Caret) {
            match self.bump() {
                (Tok::Int(e), p) => e.parse().map_err(|_| SyntaxError::parse(p, format!("exponent `{e}` is too large")))?,
                (t, p) => return Err(SyntaxError::parse(p, format!("expected an exponent, found {t}"))),
            }
        } else {
            1
        };
        Ok((index, exp, pos))
    }

    fn lie(&mut self) -> Result<LieExpr> {
        let mut terms = Vec::new();
        let mut negative = if self.eat(&Tok::Minus) {
            true
        } else {
            self.eat(&Tok::Plus);
            false
        };
        loop {
            let t = self.lterm()?;
            terms.push(if negative { LieExpr::Scaled(-Rational::one(), Box::new(t)) } else { t });
            negative = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
        }
        Ok(if terms.len() == 1 { terms.pop().expect("one term") } else { LieExpr::Sum(terms) })
    }

    fn lterm(&mut self) -> Result<LieExpr> {
        let coeff_pos = self.pos();
        let coeff = self.rational()?;
        if let Some(c) = &coeff {
            let starred = self.eat(&Tok::Star);
            if !starred && matches!(self.peek(), Tok::Plus | Tok::Minus | Tok::Comma | Tok::RBracket | Tok::RParen | Tok::End) {
                if c.is_zero() {
                    return Ok(LieExpr::Zero);
                }
                return Err(SyntaxError::parse(coeff_pos, "a nonzero scalar needs a Lie factor"));
            }
        }
        let mut factor = self.lfactor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                }
                Tok::Gen(_) if matches!(factor, LieExpr::Bracket(..) | LieExpr::Act { .. }) => {}
                _ => break,
            }
            let (index, exp, pos) = self.powterm()?;
            factor = LieExpr::Act { expr: Box::new(factor), index, exp, pos };
        }
        Ok(match coeff {
            Some(c) => LieExpr::Scaled(c, Box::new(factor)),
            None => factor,
        })
    }

    fn lfactor(&mut self) -> Result<LieExpr> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Gen(index) => {
                self.bump();
                Ok(LieExpr::Gen { index, pos })
            }
            Tok::LBracket => {
                self.bump();
                let a = self.lie()?;
                self.expect(Tok::Comma)?;
                let b = self.lie()?;
                self.expect(Tok::RBracket)?;
                Ok(LieExpr::Bracket(Box::new(a), Box::new(b)))
            }
            Tok::LParen => {
                self.bump();
                let e = self.lie()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            _ => Err(self.unexpected("a generator, `[` or `(`")),
        }
    }
}

/// Parses a Lie expression without evaluating it.
pub fn parse_expr(text: &str) -> Result<LieExpr> {
    let mut p = Parser::new(text)?;
    let e = p.lie()?;
    p.finish()?;
    Ok(e)
}

fn first_pos(e: &LieExpr) -> Pos {
    match e {
        LieExpr::Zero => Pos { line: 1, col: 1 },
        LieExpr::Gen { pos, .. } => *pos,
        LieExpr::Bracket(a, _) | LieExpr::Scaled(_, a) => first_pos(a),
        LieExpr::Sum(ts) => ts.first().map_or(Pos { line: 1, col: 1 }, first_pos),
        LieExpr::Act { expr, .. } => first_pos(expr),
    }
}

fn module_act(e: &Element, index: usize, exp: u32) -> metalie_core::Result<Element> {
    let spec = *e.spec();
    if !e.component(1).is_zero() {
        return Err(metalie_core::Error::NonzeroLinearPart);
    }
    match e {
        Element::Metabelian(m) => {
            let ev = ExponentVector::from_indices(spec.rank(), &vec![index; exp as usize]);
            let p = CommPoly::from_terms(spec.rank(), [(ev, Rational::one())])?;
            Ok(MetabelianElement::module_act(m, &p)?.into())
        }
        Element::Free(_) => {
            let g = Element::generator(&spec, index)?;
            (0..exp).try_fold(e.clone(), |acc, _| acc.bracket(&g))
        }
    }
}

/// Evaluates a parsed expression in the algebra `spec`.
pub fn eval(expr: &LieExpr, spec: &metalie_core::AlgebraSpec) -> Result<Element> {
    let at = |pos: Pos| move |source| SyntaxError::Eval { pos, source };
    match expr {
        LieExpr::Zero => Element::zero(spec).map_err(at(Pos { line: 1, col: 1 })),
        LieExpr::Gen { index, pos } => Element::generator(spec, *index).map_err(at(*pos)),
        LieExpr::Bracket(a, b) => {
            let (ea, eb) = (eval(a, spec)?, eval(b, spec)?);
            ea.bracket(&eb).map_err(at(first_pos(a)))
        }
        LieExpr::Scaled(c, e) => Ok(eval(e, spec)?.scale(c)),
        LieExpr::Sum(terms) => {
            let mut acc = Element::zero(spec).map_err(at(first_pos(expr)))?;
            for t in terms {
                acc = acc.try_add(&eval(t, spec)?).map_err(at(first_pos(t)))?;
            }
            Ok(acc)
        }
        LieExpr::Act { expr: inner, index, exp, pos } => {
            let e = eval(inner, spec)?;
            Element::generator(spec, *index).map_err(at(*pos))?;
            module_act(&e, *index, *exp).map_err(at(first_pos(inner)))
        }
    }
}

/// Parses and evaluates a Lie expression into canonical form.
pub fn parse_lie(text: &str, spec: &metalie_core::AlgebraSpec) -> Result<Element> {
    eval(&parse_expr(text)?, spec)
}

/// The canonical text of an element; [`parse_lie`] inverts it.
pub fn print_canonical(e: &Element) -> String {
    e.to_string()
}

/// Parses a commutative polynomial such as `3/2*x1^2*x2 - x3 + 4`.
pub fn parse_poly(text: &str, rank: usize) -> Result<CommPoly> {
    let mut p = Parser::new(text)?;
    let mut terms: Vec<(ExponentVector, Rational)> = Vec::new();
    let mut negative = if p.eat(&Tok::Minus) {
        true
    } else {
        p.eat(&Tok::Plus);
        false
    };
    loop {
        let coeff = p.rational()?;
        let mut ev = ExponentVector::zero(rank);
        let need_power = match &coeff {
            Some(_) => p.eat(&Tok::Star),
            None => true,
        };
        if need_power {
            loop {
                let (index, exp, pos) = p.powterm()?;
                if index == 0 || index > rank {
                    return Err(SyntaxError::parse(pos, format!("variable x{index} out of range for rank {rank}")));
                }
                for _ in 0..exp {
                    ev = ev.mul(&ExponentVector::variable(rank, index));
                }
                if !p.eat(&Tok::Star) {
                    break;
                }
            }
        }
        let c = coeff.unwrap_or_else(Rational::one);
        terms.push((ev, if negative { -c } else { c }));
        negative = match p.peek() {
            Tok::Plus => false,
            Tok::Minus => true,
            _ => break,
        };
        p.bump();
    }
    p.finish()?;
    let pos = p.pos();
    CommPoly::from_terms(rank, terms).map_err(|source| SyntaxError::Eval { pos, source })
}

/// Parses a permutation of `1..=degree` given either as images (`2,1,3`) or in cycle
/// notation (`(1 2)(3 4)`, `()`).
pub fn parse_permutation(text: &str, degree: usize) -> std::result::Result<Permutation, String> {
    let t = text.trim();
    let number = |s: &str| s.parse::<usize>().map_err(|_| format!("invalid point `{s}` in permutation `{text}`"));
    if t.starts_with('(') {
        let mut perm = Permutation::identity(degree);
        for cycle in t.split(')').map(str::trim).filter(|c| !c.is_empty()) {
            let body = cycle.strip_prefix('(').ok_or_else(|| format!("malformed cycle notation `{text}`"))?;
            let points = body.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).map(number).collect::<std::result::Result<Vec<_>, _>>()?;
            if points.is_empty() {
                continue;
            }
            let c = Permutation::cycle(degree, &points).map_err(|e| e.to_string())?;
            perm = perm.compose(&c).map_err(|e| e.to_string())?;
        }
        Ok(perm)
    } else {
        let images = t.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).map(number).collect::<std::result::Result<Vec<_>, _>>()?;
        if images.len() != degree {
            return Err(format!("permutation `{text}` has {} images, expected {degree}", images.len()));
        }
        Permutation::new(images).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use metalie_core::AlgebraSpec;

    fn f2() -> AlgebraSpec {
        AlgebraSpec::metabelian(2).unwrap()
    }

    #[test]
    fn parses_examples() {
        assert_eq!(parse_lie("x1 + x2", &f2()).unwrap().to_string(), "x1 + x2");
        assert_eq!(parse_lie("x2+x1", &f2()).unwrap().to_string(), "x1 + x2");
        assert_eq!(parse_lie("[x2,x1]*x1 - [x2,x1]*x2", &f2()).unwrap().to_string(), "[x2,x1]x1 - [x2,x1]x2");
        assert!(parse_lie("[[x1,x2],[x1,x2]]", &f2()).unwrap().is_zero());
        assert_eq!(parse_lie("[x1,x2]", &f2()).unwrap().to_string(), "-[x2,x1]");
        assert_eq!(parse_lie("[x1,x2]*x2", &f2()).unwrap().to_string(), "-[x2,x1]x2");
        assert_eq!(parse_lie("0", &f2()).unwrap().to_string(), "0");
    }

    #[test]
    fn accepts_printed_forms() {
        let e = parse_lie("3/2 [x2,x1]x1 x1 x2 - 2 x1", &f2()).unwrap();
        assert_eq!(parse_lie(&e.to_string(), &f2()).unwrap(), e);
        assert_eq!(e, parse_lie("-2*x1 + 3/2*[x2,x1]*x1^2*x2", &f2()).unwrap());
    }

    #[test]
    fn reports_positions() {
        let err = parse_lie("x1 +\n  [x1 x2]", &f2()).unwrap_err();
        assert_eq!(err.pos(), Pos { line: 2, col: 7 });
        let err = parse_lie("x1 + x3", &f2()).unwrap_err();
        assert!(matches!(err, SyntaxError::Eval { pos: Pos { line: 1, col: 6 }, .. }), "{err}");
        assert!(matches!(parse_lie("(x1 + [x2,x1])*x1", &f2()), Err(SyntaxError::Eval { .. })));
        assert!(parse_lie("3", &f2()).is_err());
        assert!(parse_lie("1/0 x1", &f2()).is_err());
    }

    #[test]
    fn free_module_action_is_right_bracketing() {
        let l2 = AlgebraSpec::free(2).unwrap();
        let a = parse_lie("[x1,x2]*x2^2", &l2).unwrap();
        let b = parse_lie("[[[x1,x2],x2],x2]", &l2).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_lie(&a.to_string(), &l2).unwrap(), a);
    }

    #[test]
    fn polynomials() {
        let p = parse_poly("3/2*x1^2*x2 - x3 + 4", 3).unwrap();
        assert_eq!(p.to_string(), "3/2*x1^2*x2 - x3 + 4");
        assert_eq!(parse_poly(&p.to_string(), 3).unwrap(), p);
        assert!(parse_poly("x4", 3).is_err());
        assert!(parse_poly("x1 x2", 3).is_err());
    }

    #[test]
    fn permutations() {
        let p = parse_permutation("2,1,3", 3).unwrap();
        assert_eq!(p, parse_permutation("(1 2)", 3).unwrap());
        assert!(parse_permutation("()", 3).unwrap().is_identity());
        assert!(parse_permutation("1,1,3", 3).is_err());
        assert!(parse_permutation("2,1", 3).is_err());
    }
}
