//! Tangle expression grammar.
//!
//! ```text
//! expr    := vsum (('+' | '-') vsum)*          left-assoc, '-' adds the mirror
//! vsum    := prod ('*' prod)*                  left-assoc
//! prod    := unary ('.' unary)*                left-assoc
//! unary   := '-' unary | postfix               '-' directly before digits is a sign
//! postfix := atom ('^-1' | '^w' | '^wb' | '^ω' | '^ω̄')*
//! atom    := integer | '-' integer | 'inf' | '∞' | '(' expr ')'
//! ```

use super::TangleExpr;
use crate::error::{Error, Location, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Inf,
    Plus,
    Minus,
    Star,
    Dot,
    LParen,
    RParen,
    Inverse,
    Omega,
    OmegaBar,
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |i: usize, m: String| Error::Parse { location: location(src, i), message: m };
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(chars[start..i].iter().collect()), start));
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '.' | '·' => Tok::Dot,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '∞' => Tok::Inf,
            'i' if chars[i..].starts_with(&['i', 'n', 'f']) => {
                i += 3;
                out.push((Tok::Inf, start));
                continue;
            }
            '^' => {
                i += 1;
                while i < chars.len() && chars[i].is_whitespace() {
                    i += 1;
                }
                let rest = &chars[i..];
                let (tok, len) = if rest.starts_with(&['-', '1']) {
                    (Tok::Inverse, 2)
                } else if rest.starts_with(&['w', 'b']) || rest.starts_with(&['ω', '\u{304}']) {
                    (Tok::OmegaBar, 2)
                } else if rest.starts_with(&['w']) || rest.starts_with(&['ω']) {
                    (Tok::Omega, 1)
                } else {
                    return Err(err(i, "expected '-1', 'w' or 'wb' after '^'".into()));
                };
                i += len;
                out.push((tok, start));
                continue;
            }
            _ => return Err(err(i, format!("unexpected character '{c}'"))),
        };
        i += 1;
        out.push((tok, start));
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

fn location(src: &str, char_index: usize) -> Location {
    let mut line = 1;
    let mut column = 1;
    for c in src.chars().take(char_index) {
        if c == '\n' {
            line += 1;
            column = 1;
        } else {
            column += 1;
        }
    }
    Location { line, column }
}

struct Parser<'a> {
    src: &'a str,
    lx: Lexer,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.lx.toks[self.pos].0
    }

    fn next(&mut self) -> Tok {
        let t = self.lx.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let at = self.lx.toks[self.pos].1;
        Err(Error::Parse { location: location(self.src, at), message: message.into() })
    }

    fn describe(&self) -> String {
        match self.peek() {
            Tok::End => "end of input".into(),
            Tok::Int(s) => format!("'{s}'"),
            t => format!(
                "'{}'",
                match t {
                    Tok::Inf => "inf",
                    Tok::Plus => "+",
                    Tok::Minus => "-",
                    Tok::Star => "*",
                    Tok::Dot => ".",
                    Tok::LParen => "(",
                    Tok::RParen => ")",
                    Tok::Inverse => "^-1",
                    Tok::Omega => "^w",
                    Tok::OmegaBar => "^wb",
                    _ => unreachable!(),
                }
            ),
        }
    }

    fn expr(&mut self) -> Result<TangleExpr> {
        let mut lhs = self.vsum()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.next();
                    lhs = lhs.sum(self.vsum()?);
                }
                Tok::Minus => {
                    self.next();
                    lhs = lhs.minus(self.vsum()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn vsum(&mut self) -> Result<TangleExpr> {
        let mut lhs = self.prod()?;
        while *self.peek() == Tok::Star {
            self.next();
            lhs = lhs.vsum(self.prod()?);
        }
        Ok(lhs)
    }

    fn prod(&mut self) -> Result<TangleExpr> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Dot {
            self.next();
            lhs = lhs.prod(self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<TangleExpr> {
        if *self.peek() == Tok::Minus && !matches!(self.lx.toks[self.pos + 1].0, Tok::Int(_)) {
            self.next();
            return Ok(self.unary()?.mirror());
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<TangleExpr> {
        let mut e = self.atom()?;
        loop {
            e = match self.peek() {
                Tok::Inverse => e.inv(),
                Tok::Omega => e.omega(),
                Tok::OmegaBar => e.omega_bar(),
                _ => return Ok(e),
            };
            self.next();
        }
    }

    fn integer(&mut self, negative: bool) -> Result<TangleExpr> {
        let Tok::Int(digits) = self.peek().clone() else {
            return self.error("expected an integer");
        };
        let text = if negative { format!("-{digits}") } else { digits };
        match text.parse::<i64>() {
            Ok(n) => {
                self.next();
                Ok(TangleExpr::Int(n))
            }
            Err(_) => self.error(format!("integer {text} does not fit in 64 bits")),
        }
    }

    fn atom(&mut self) -> Result<TangleExpr> {
        match self.peek() {
            Tok::Int(_) => self.integer(false),
            Tok::Minus => {
                self.next();
                self.integer(true)
            }
            Tok::Inf => {
                self.next();
                Ok(TangleExpr::Infinity)
            }
            Tok::LParen => {
                self.next();
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.error(format!("expected ')', found {}", self.describe()));
                }
                self.next();
                Ok(e)
            }
            _ => self.error(format!("expected a tangle, found {}", self.describe())),
        }
    }
}

/// Parses a tangle expression; errors carry the position of the offending
/// token.
pub fn parse_tangle(src: &str) -> Result<TangleExpr> {
    let toks = lex(src)?;
    let mut p = Parser { src, lx: Lexer { toks }, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error(format!("unexpected {}", p.describe()));
    }
    Ok(e)
}

const SUM: u8 = 1;
const VSUM: u8 = 2;
const PROD: u8 = 3;
const UNARY: u8 = 4;
const POSTFIX: u8 = 5;

fn prec(e: &TangleExpr) -> u8 {
    match e {
        TangleExpr::Sum(..) => SUM,
        TangleExpr::VSum(..) => VSUM,
        TangleExpr::Prod(..) => PROD,
        TangleExpr::Mirror(_) => UNARY,
        TangleExpr::Inv(_) | TangleExpr::Omega(_) | TangleExpr::OmegaBar(_) => POSTFIX,
        TangleExpr::Int(_) | TangleExpr::Infinity => POSTFIX + 1,
    }
}

fn wrap(e: &TangleExpr, min: u8) -> String {
    let s = render(e);
    if prec(e) < min {
        format!("({s})")
    } else {
        s
    }
}

/// Minimal-parenthesis rendering that parses back to the same tree.
pub(super) fn render(e: &TangleExpr) -> String {
    use TangleExpr::*;
    match e {
        Int(n) => n.to_string(),
        Infinity => "inf".into(),
        Sum(a, b) => match &**b {
            Mirror(m) => format!("{} - {}", wrap(a, SUM), wrap(m, SUM + 1)),
            _ => format!("{} + {}", wrap(a, SUM), wrap(b, SUM + 1)),
        },
        VSum(a, b) => format!("{} * {}", wrap(a, VSUM), wrap(b, VSUM + 1)),
        Prod(a, b) => format!("{} . {}", wrap(a, PROD), wrap(b, PROD + 1)),
        Mirror(a) => {
            // A '-' directly before digits would read as a sign.
            let inner = wrap(a, UNARY);
            if inner.starts_with(|c: char| c.is_ascii_digit()) || matches!(**a, Int(_)) {
                format!("-({})", render(a))
            } else {
                format!("-{inner}")
            }
        }
        Inv(a) => format!("{}^-1", postfix_operand(a)),
        Omega(a) => format!("{}^w", postfix_operand(a)),
        OmegaBar(a) => format!("{}^wb", postfix_operand(a)),
    }
}

// `-1^w` parses fine but reads like `-(1^w)`.
fn postfix_operand(a: &TangleExpr) -> String {
    match a {
        TangleExpr::Int(n) if *n < 0 => format!("({n})"),
        _ => wrap(a, POSTFIX),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use TangleExpr as T;

    fn p(s: &str) -> TangleExpr {
        parse_tangle(s).unwrap()
    }

    #[test]
    fn omega_of_difference() {
        assert_eq!(p("(inf - 2) ^w"), T::inf().minus(T::int(2)).omega());
        assert_eq!(p("(∞ - 2)^ω"), p("(inf-2)^w"));
        assert_eq!(p("(inf + 2)^wb"), T::inf().sum(T::int(2)).omega_bar());
        assert_eq!(p("(inf + 2)^ω\u{304}"), p("(inf + 2)^wb"));
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(p("5 . 1 . 2"), T::int(5).prod(T::int(1)).prod(T::int(2)));
        assert_eq!(p("1 + 2 * 3 . 4"), T::int(1).sum(T::int(2).vsum(T::int(3).prod(T::int(4)))));
        assert_eq!(p("1 - 2 - 3"), T::int(1).minus(T::int(2)).minus(T::int(3)));
        assert_eq!(p("((inf-2+2)*1)+2"), T::inf().minus(T::int(2)).sum(T::int(2)).vsum(T::int(1)).sum(T::int(2)));
    }

    #[test]
    fn signs_and_mirrors() {
        assert_eq!(p("-1"), T::int(-1));
        assert_eq!(p("-1^w"), T::int(-1).omega());
        assert_eq!(p("-(1)"), T::int(1).mirror());
        assert_eq!(p("-inf"), T::inf().mirror());
        assert_eq!(p("-(2)^w"), T::int(2).omega().mirror());
        assert_eq!(p("3 + -2"), T::int(3).sum(T::int(-2)));
        assert_eq!(p("--2"), T::int(-2).mirror());
        assert_eq!(p("2^-1^w"), T::int(2).inv().omega());
    }

    #[test]
    fn errors() {
        let e = parse_tangle("3 + * 2").unwrap_err();
        assert_eq!(
            e,
            Error::Parse { location: Location { line: 1, column: 5 }, message: "expected a tangle, found '*'".into() }
        );
        assert!(parse_tangle("99999999999999999999").is_err());
        assert!(parse_tangle("(1 + 2").is_err());
        assert!(parse_tangle("1 2").is_err());
        assert!(parse_tangle("1^x").is_err());
        assert!(parse_tangle("").is_err());
        assert!(parse_tangle("-9223372036854775808").is_ok());
    }

    #[test]
    fn render_roundtrips() {
        for s in [
            "(inf - 2)^w",
            "5 . 1 . 2",
            "-(2)",
            "-1^w",
            "-(1 + 2)^-1",
            "1 + (2 + 3)",
            "1 - (2 - 3)",
            "3 + -2",
            "(1 * 2) . (3 + 4)",
            "--2",
            "-(-2)",
            "(-(1))^wb",
            "-(2^w)",
            "-(2 . 3)",
        ] {
            let e = p(s);
            assert_eq!(p(&e.to_string()), e, "{s} -> {e}");
        }
        assert_eq!(p("(inf-2)^w").to_string(), "(inf - 2)^w");
        assert_eq!(p("-1^w").to_string(), "(-1)^w");
    }
}
