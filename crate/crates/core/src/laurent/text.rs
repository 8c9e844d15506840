use std::fmt::Write;

use super::LaurentPoly;
use crate::error::{Error, Location, Result};

pub(super) fn render(p: &LaurentPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        let mag = c.unsigned_abs();
        match (i, c < 0) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if e == 0 {
            write!(out, "{mag}").unwrap();
            continue;
        }
        if mag != 1 {
            write!(out, "{mag}").unwrap();
        }
        out.push_str(var);
        if e != 1 {
            write!(out, "^{e}").unwrap();
        }
    }
    out
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Self { chars: src.char_indices().collect(), pos: 0, src }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn location(&self) -> Location {
        let byte = self.chars.get(self.pos).map_or(self.src.len(), |&(b, _)| b);
        let before = &self.src[..byte];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Location { line, column }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { location: self.location(), message: message.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        let n = s.chars().count();
        let matches = self.chars.len() >= self.pos + n
            && self.chars[self.pos..self.pos + n].iter().map(|&(_, c)| c).eq(s.chars());
        if matches {
            self.pos += n;
        }
        matches
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }
}

pub(super) fn parse(input: &str, var: &str) -> Result<LaurentPoly> {
    let mut cur = Cursor::new(input);
    let mut poly = LaurentPoly::zero();
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            if first {
                return cur.error("empty polynomial");
            }
            break;
        }
        let negative = if cur.eat('-') {
            true
        } else if cur.eat('+') || first {
            false
        } else {
            return cur.error("expected '+' or '-' between terms");
        };
        first = false;
        cur.skip_ws();

        let coeff = match cur.digits() {
            Some(d) => Some(d.parse::<i64>().or_else(|_| cur.error("coefficient out of range"))?),
            None => None,
        };
        cur.skip_ws();
        let mut has_var = false;
        if coeff.is_some() && cur.eat('*') {
            cur.skip_ws();
            if !cur.eat_str(var) {
                return cur.error(format!("expected '{var}' after '*'"));
            }
            has_var = true;
        } else if cur.eat_str(var) {
            has_var = true;
        }
        if coeff.is_none() && !has_var {
            return cur.error(format!("expected a coefficient or '{var}'"));
        }
        let mut exp = 0i32;
        if has_var {
            exp = 1;
            cur.skip_ws();
            if cur.eat('^') {
                cur.skip_ws();
                let neg = cur.eat('-');
                let Some(d) = cur.digits() else {
                    return cur.error("expected an exponent");
                };
                let mag: i64 = d.parse().or_else(|_| cur.error("exponent out of range"))?;
                let e = if neg { -mag } else { mag };
                exp = i32::try_from(e).or_else(|_| cur.error("exponent out of range"))?;
            }
        }
        let c = coeff.unwrap_or(1);
        let c = if negative { -c } else { c };
        poly = poly.checked_add(&LaurentPoly::monomial(c, exp))?;
    }
    Ok(poly)
}
