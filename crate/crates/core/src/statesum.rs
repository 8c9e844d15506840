//! Enumeration of smoothing states over a [`Wiring`].
//!
//! State `s` is a bit mask: bit `k` set means crossing `k` takes its
//! A-smoothing (slots 0-1 and 2-3 joined), clear means B (0-3 and 1-2).
//! Each state is resolved with a fresh union-find over edge indices, and the
//! results are tallied in a histogram keyed by port connectivity, number of
//! A-smoothings and number of closed loops.

use std::thread;

use crate::diagram::fragment::Wiring;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Crossing count above which the state sum refuses to run by default.
pub const DEFAULT_CAP: usize = 26;

/// How the four ports of a tangle state pair up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Connectivity {
    Closed = 0,
    /// NW-NE and SW-SE.
    Zero = 1,
    /// NW-SW and NE-SE.
    Infinity = 2,
}

pub(crate) struct Histogram {
    crossings: usize,
    max_loops: usize,
    counts: Vec<u64>,
}

impl Histogram {
    fn new(crossings: usize, edges: usize) -> Self {
        let max_loops = edges + 1;
        Self { crossings, max_loops, counts: vec![0; 3 * (crossings + 1) * (max_loops + 1)] }
    }

    fn slot(&self, conn: Connectivity, a: usize, loops: usize) -> usize {
        ((conn as usize) * (self.crossings + 1) + a) * (self.max_loops + 1) + loops
    }

    fn merge(&mut self, other: &Self) {
        for (x, y) in self.counts.iter_mut().zip(&other.counts) {
            *x += y;
        }
    }

    /// `sum count * A^(a - b) * delta^(loops + loop_shift)` over one
    /// connectivity class. `loop_shift` is `-1` for closed diagrams.
    pub fn polynomial(&self, conn: Connectivity, extra_loops: usize, loop_shift: i64) -> Result<LaurentPoly> {
        let delta = LaurentPoly::delta();
        let mut powers: Vec<LaurentPoly> = Vec::new();
        let mut total = LaurentPoly::zero();
        for a in 0..=self.crossings {
            for loops in 0..=self.max_loops {
                let count = self.counts[self.slot(conn, a, loops)];
                if count == 0 {
                    continue;
                }
                let e = loops as i64 + extra_loops as i64 + loop_shift;
                if e < 0 {
                    return Err(Error::EmptyDiagram);
                }
                let e = e as usize;
                while powers.len() <= e {
                    let next = match powers.last() {
                        Some(p) => p.checked_mul(&delta)?,
                        None => LaurentPoly::one(),
                    };
                    powers.push(next);
                }
                let weight = LaurentPoly::monomial(i64::try_from(count).map_err(|_| Error::Overflow)?, 2 * a as i32 - self.crossings as i32);
                total = total.checked_add(&weight.checked_mul(&powers[e])?)?;
            }
        }
        Ok(total)
    }
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let p = parent[parent[x as usize] as usize];
        parent[x as usize] = p;
        x = p;
    }
    x
}

fn run_range(w: &Wiring, range: std::ops::Range<u64>) -> Result<Histogram> {
    let n = w.slots.len();
    let mut hist = Histogram::new(n, w.edges);
    let mut parent: Vec<u32> = vec![0; w.edges];
    let port_count = w.ports.len();
    for state in range {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i as u32;
        }
        let mut merges = 0usize;
        for (k, s) in w.slots.iter().enumerate() {
            let pairs = if state >> k & 1 == 1 { [(s[0], s[1]), (s[2], s[3])] } else { [(s[0], s[3]), (s[1], s[2])] };
            for (x, y) in pairs {
                let rx = find(&mut parent, x);
                let ry = find(&mut parent, y);
                if rx != ry {
                    parent[rx as usize] = ry;
                    merges += 1;
                }
            }
        }
        let classes = w.edges - merges;
        let a = state.count_ones() as usize;
        let (conn, loops) = if port_count == 0 {
            (Connectivity::Closed, classes)
        } else {
            let r: Vec<u32> = w.ports.iter().map(|&e| find(&mut parent, e)).collect();
            let conn = if r[0] == r[1] && r[2] == r[3] && r[0] != r[2] {
                Connectivity::Zero
            } else if r[0] == r[2] && r[1] == r[3] && r[0] != r[1] {
                Connectivity::Infinity
            } else {
                return Err(Error::Internal(format!("state {state:#b} joins the tangle ends in neither 0 nor inf pattern")));
            };
            (conn, classes - 2)
        };
        let i = hist.slot(conn, a, loops);
        hist.counts[i] += 1;
    }
    Ok(hist)
}

/// Tallies every smoothing state of `w`. Refuses more than `cap` crossings.
pub(crate) fn tally(w: &Wiring, cap: usize) -> Result<Histogram> {
    let n = w.slots.len();
    if n > cap {
        return Err(Error::CapExceeded { crossings: n, cap });
    }
    if n >= 64 {
        return Err(Error::CapExceeded { crossings: n, cap: 63 });
    }
    if !(w.ports.is_empty() || w.ports.len() == 4) {
        return Err(Error::Internal(format!("state sum needs 0 or 4 loose ends, got {}", w.ports.len())));
    }
    let states = 1u64 << n;
    let workers = if n < 14 {
        1
    } else {
        thread::available_parallelism().map_or(1, |p| p.get()).min(16) as u64
    };
    if workers == 1 {
        return run_range(w, 0..states);
    }
    let chunk = states.div_ceil(workers);
    let parts: Vec<Result<Histogram>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|i| {
                let lo = i * chunk;
                let hi = ((i + 1) * chunk).min(states);
                scope.spawn(move || run_range(w, lo..hi))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("state-sum worker panicked")).collect()
    });
    let mut total = Histogram::new(n, w.edges);
    for part in parts {
        total.merge(&part?);
    }
    Ok(total)
}
