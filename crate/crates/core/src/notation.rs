//! Text notation for GW elements and trace polynomials.
//!
//! ```text
//! element := ["-"] term (("+" | "-") term)*  |  "0"
//! term    := [uint ["*"]] factor ("*" factor)*
//! factor  := "<" rational ">" | "h" | "b" uint | "tr(" rational ";" rational ["," rational] ")"
//! ```
//!
//! `tr(c; a, b)` is the trace form of `a + b*sqrt(c)`. Canonical output
//! prints hyperbolic planes first (`2h`), then the remaining classes in
//! ascending order, and omits `<1>` in front of trace symbols:
//! `190h + 8*b1 + 2*b1*b2`.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::gw::{trace_form, GwElement, QuadraticElement, Rational, SquareClass};
use crate::poly::{BetaPolynomial, Monomial};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Style {
    Ascii,
    Unicode,
}

fn subscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

/// One signed summand: coefficient, the unsigned body, and whether the body
/// is a bare `<1>` that can be dropped when followed by symbols.
struct Piece {
    coeff: i64,
    hyperbolic: bool,
    class: SquareClass,
}

fn pieces(g: &GwElement) -> Vec<Piece> {
    let (m, rest) = g.split_hyperbolic();
    let mut out = Vec::new();
    if m != 0 {
        out.push(Piece { coeff: m, hyperbolic: true, class: SquareClass::ONE });
    }
    for (class, coeff) in rest.terms() {
        out.push(Piece { coeff, hyperbolic: false, class });
    }
    out
}

fn render_body(p: &Piece, monomial: &Monomial, style: Style) -> String {
    let k = p.coeff.unsigned_abs();
    let (mul, open, close) = match style {
        Style::Ascii => ("*", "<", ">"),
        Style::Unicode => ("·", "⟨", "⟩"),
    };
    let symbols: Vec<String> = monomial
        .indices()
        .iter()
        .map(|i| match style {
            Style::Ascii => format!("b{i}"),
            Style::Unicode => format!("β{}", subscript(*i)),
        })
        .collect();
    let sym_sep = match style {
        Style::Ascii => "*",
        Style::Unicode => "",
    };
    let symbols = symbols.join(sym_sep);

    let mut s = String::new();
    if p.hyperbolic {
        if k != 1 {
            write!(s, "{k}").unwrap();
        }
        s.push('h');
        if !symbols.is_empty() {
            s.push_str(mul);
            s.push_str(&symbols);
        }
        return s;
    }
    let drop_form = p.class == SquareClass::ONE && !symbols.is_empty();
    if k != 1 {
        write!(s, "{k}").unwrap();
        s.push_str(mul);
    }
    if !drop_form {
        write!(s, "{open}{}{close}", p.class.rep()).unwrap();
        if !symbols.is_empty() {
            s.push_str(mul);
        }
    }
    s.push_str(&symbols);
    s
}

fn render(poly: &BetaPolynomial, style: Style) -> String {
    let mut out = String::new();
    for (monomial, g) in poly.monomials() {
        for p in pieces(g) {
            let body = render_body(&p, monomial, style);
            if out.is_empty() {
                if p.coeff < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if p.coeff < 0 { " - " } else { " + " });
            }
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for GwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&BetaPolynomial::constant(self.clone()), Style::Ascii))
    }
}

impl fmt::Display for BetaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, Style::Ascii))
    }
}

impl GwElement {
    /// Display form with angle brackets and a middle dot: `190h + 240·⟨1⟩`.
    pub fn to_unicode(&self) -> String {
        render(&BetaPolynomial::constant(self.clone()), Style::Unicode)
    }
}

impl BetaPolynomial {
    /// Display form with subscripted symbols: `8·β₁ + β₁β₂`.
    pub fn to_unicode(&self) -> String {
        render(self, Style::Unicode)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn uint(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<i64>().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn rational(&mut self) -> Result<Rational> {
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let num = self.uint()?;
        let den = if self.eat(b'/') {
            let at = self.pos;
            let d = self.uint()?;
            if d == 0 {
                self.pos = at;
                return self.err("zero denominator");
            }
            d
        } else {
            1
        };
        let r = Rational::new(num, den);
        Ok(if negative { -r } else { r })
    }

    fn factor(&mut self) -> Result<BetaPolynomial> {
        match self.peek() {
            Some(b'<') => {
                self.pos += 1;
                let at = self.pos;
                let a = self.rational()?;
                if a == Rational::from_integer(0) {
                    self.pos = at;
                    return self.err("zero is not a valid form entry");
                }
                self.expect(b'>')?;
                Ok(GwElement::diag(a)?.into())
            }
            Some(b'h') => {
                self.pos += 1;
                Ok(GwElement::h().into())
            }
            Some(b'b') => {
                self.pos += 1;
                let at = self.pos;
                let i = self.uint()?;
                if i == 0 || i > u32::MAX as i64 {
                    self.pos = at;
                    return self.err("symbol index must be a positive 32-bit integer");
                }
                BetaPolynomial::symbol(i as u32)
            }
            Some(b't') if self.src[self.pos..].starts_with(b"tr(") => {
                self.pos += 3;
                let at = self.pos;
                let c = self.rational()?;
                if !c.is_integer() {
                    self.pos = at;
                    return self.err("extension parameter must be an integer");
                }
                self.expect(b';')?;
                let a = self.rational()?;
                let b = if self.eat(b',') { self.rational()? } else { Rational::from_integer(0) };
                self.expect(b')')?;
                let alpha = QuadraticElement::new(c.to_integer(), a, b)
                    .map_err(|e| Error::Parse { pos: at, msg: e.to_string() })?;
                Ok(trace_form(&alpha).into())
            }
            _ => self.err("expected '<', 'h', 'b<n>' or 'tr('"),
        }
    }

    fn term(&mut self) -> Result<BetaPolynomial> {
        let mut coeff = 1i64;
        let mut acc = None;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = self.uint()?;
            if !self.eat(b'*') && self.peek() != Some(b'h') {
                // a bare integer is only meaningful as the zero element
                if coeff == 0 {
                    return Ok(BetaPolynomial::zero());
                }
                return self.err("expected '*' after coefficient");
            }
        }
        loop {
            let f = self.factor()?;
            acc = Some(match acc {
                None => f,
                Some(prev) => {
                    let at = self.pos;
                    BetaPolynomial::try_mul(&prev, &f).map_err(|e| Error::Parse { pos: at, msg: e.to_string() })?
                }
            });
            if !self.eat(b'*') {
                break;
            }
        }
        Ok(acc.unwrap().scale(&GwElement::one().scale(coeff)))
    }

    fn element(&mut self) -> Result<BetaPolynomial> {
        let mut negate = self.eat(b'-');
        let mut total = BetaPolynomial::zero();
        loop {
            let t = self.term()?;
            total = if negate { &total - &t } else { &total + &t };
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                break;
            }
        }
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(total)
    }
}

/// Parses an expression in the ASCII notation.
pub fn parse_gw_expression(text: &str) -> Result<BetaPolynomial> {
    Parser { src: text.as_bytes(), pos: 0 }.element()
}

/// Parses an expression that must not contain trace symbols.
pub fn parse_gw_element(text: &str) -> Result<GwElement> {
    let p = parse_gw_expression(text)?;
    if !p.is_constant() {
        return Err(Error::Parse { pos: 0, msg: "trace symbols are not allowed here".into() });
    }
    Ok(p.constant_term())
}
