//! PD text format.
//!
//! ```text
//! # comment
//! loops: 1
//! X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]
//! components: (1 2 3 4 5 6)
//! ```
//!
//! Without a `components:` clause, each component is taken to be a run of
//! consecutive labels `e, e+1, ..., m` whose successive pairs meet at a
//! crossing passage, wrapping from `m` back to `e`.

use std::collections::BTreeSet;
use std::fmt::Write;

use super::{Crossing, Diagram};
use crate::error::{Error, Location, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(u64),
    Word(String),
    Punct(char),
}

fn lex(text: &str) -> Result<Vec<(Tok, Location)>> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let loc = Location { line: li + 1, column: i + 1 };
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let n = s
                    .parse()
                    .map_err(|_| Error::Parse { location: loc, message: format!("number {s} is too large") })?;
                out.push((Tok::Num(n), loc));
            } else if c.is_ascii_alphabetic() {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Word(chars[start..i].iter().collect()), loc));
            } else if "[],():".contains(c) {
                out.push((Tok::Punct(c), loc));
                i += 1;
            } else {
                return Err(Error::Parse { location: loc, message: format!("unexpected character '{c}'") });
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Location)>,
    pos: usize,
    end: Location,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn loc(&self) -> Location {
        self.toks.get(self.pos).map_or(self.end, |&(_, l)| l)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { location: self.loc(), message: message.into() })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(&Tok::Punct(c)) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn label(&mut self) -> Result<u32> {
        match self.peek() {
            Some(&Tok::Num(n)) => {
                if n == 0 || n > u32::MAX as u64 {
                    return self.err(format!("edge label {n} out of range (1..={})", u32::MAX));
                }
                self.pos += 1;
                Ok(n as u32)
            }
            _ => self.err("expected an edge label"),
        }
    }
}

/// Parses PD text into a validated [`Diagram`]. Syntax errors carry a
/// line:column location; structural problems are reported by validation.
pub fn parse_pd(text: &str) -> Result<Diagram> {
    let toks = lex(text)?;
    let end = Location { line: text.lines().count().max(1), column: text.lines().last().map_or(0, |l| l.chars().count()) + 1 };
    let mut p = Parser { toks, pos: 0, end };
    let mut crossings = Vec::new();
    let mut components: Option<Vec<Vec<u32>>> = None;
    let mut loops: Option<usize> = None;

    while let Some(tok) = p.peek().cloned() {
        match tok {
            Tok::Word(w) if w == "X" => {
                p.pos += 1;
                p.expect('[')?;
                let mut q = [0u32; 4];
                for (i, slot) in q.iter_mut().enumerate() {
                    if i > 0 {
                        p.expect(',')?;
                    }
                    *slot = p.label()?;
                }
                p.expect(']')?;
                crossings.push(Crossing(q));
            }
            Tok::Word(w) if w == "loops" => {
                if loops.is_some() {
                    return p.err("duplicate 'loops:' clause");
                }
                p.pos += 1;
                p.expect(':')?;
                match p.peek() {
                    Some(&Tok::Num(n)) => {
                        p.pos += 1;
                        loops = Some(usize::try_from(n).or_else(|_| p.err("loop count too large"))?);
                    }
                    _ => return p.err("expected a loop count"),
                }
            }
            Tok::Word(w) if w == "components" => {
                if components.is_some() {
                    return p.err("duplicate 'components:' clause");
                }
                p.pos += 1;
                p.expect(':')?;
                let mut comps = Vec::new();
                while p.peek() == Some(&Tok::Punct('(')) {
                    p.pos += 1;
                    let mut comp = Vec::new();
                    while p.peek() != Some(&Tok::Punct(')')) {
                        comp.push(p.label()?);
                    }
                    p.pos += 1;
                    comps.push(comp);
                }
                components = Some(comps);
            }
            _ => return p.err("expected 'X[...]', 'loops:' or 'components:'"),
        }
    }

    let components = match components {
        Some(c) => c,
        None => infer_components(&crossings)?,
    };
    Diagram::new(crossings, components, loops.unwrap_or(0))
}

/// Splits the sorted edge labels into runs of consecutive labels that are
/// joined by crossing passages.
fn infer_components(crossings: &[Crossing]) -> Result<Vec<Vec<u32>>> {
    let mut passages = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for x in crossings {
        let [a, b, c, d] = x.0;
        passages.insert((a.min(c), a.max(c)));
        passages.insert((b.min(d), b.max(d)));
        edges.extend(x.0);
    }
    let mut comps: Vec<Vec<u32>> = Vec::new();
    for e in edges {
        match comps.last_mut() {
            Some(run) if *run.last().unwrap() + 1 == e && passages.contains(&(e - 1, e)) => run.push(e),
            _ => comps.push(vec![e]),
        }
    }
    for run in &comps {
        let (first, last) = (run[0], *run.last().unwrap());
        if run.len() > 1 && !passages.contains(&(first, last)) {
            return Err(Error::InvalidDiagram(format!(
                "cannot infer components: edges {first}..{last} do not close up; add a 'components:' clause"
            )));
        }
    }
    Ok(comps)
}

pub(super) fn write_pd(d: &Diagram) -> String {
    let mut out = String::new();
    if d.free_loops() > 0 {
        writeln!(out, "loops: {}", d.free_loops()).unwrap();
    }
    for x in d.crossings() {
        writeln!(out, "{x}").unwrap();
    }
    if !d.components().is_empty() {
        out.push_str("components:");
        for comp in d.components() {
            let labels: Vec<String> = comp.iter().map(u32::to_string).collect();
            write!(out, " ({})", labels.join(" ")).unwrap();
        }
        out.push('\n');
    }
    out
}
