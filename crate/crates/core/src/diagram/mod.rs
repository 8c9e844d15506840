//! Oriented link diagrams in planar-diagram (PD) form.
//!
//! A crossing is an edge quadruple `X[a,b,c,d]` listed counterclockwise from
//! the incoming under-strand edge `a`, so `c` is the outgoing under-strand
//! edge and `b`, `d` carry the over-strand. Which of `b`, `d` is incoming is
//! read off the component cycles; the crossing is positive exactly when the
//! over-strand comes in on `d`.
//!
//! A two-edge component that only ever passes over is the one case the
//! cycles cannot orient; there the first edge listed in the component is
//! taken to enter the lowest-numbered crossing it touches.

pub(crate) mod fragment;
mod pd;
mod surgery;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

pub use surgery::Handedness;

/// `X[a,b,c,d]`: edge labels counterclockwise from the incoming under-strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing(pub [u32; 4]);

impl Crossing {
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        Self([a, b, c, d])
    }

    pub fn slots(&self) -> [u32; 4] {
        self.0
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "X[{a},{b},{c},{d}]")
    }
}

/// A validated oriented link diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    components: Vec<Vec<u32>>,
    free_loops: usize,
    /// Slot (1 or 3) where the over-strand enters, per crossing.
    over_in: Vec<u8>,
    component_of: BTreeMap<u32, usize>,
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidDiagram(msg.into()))
}

impl Diagram {
    /// Validates and builds a diagram. `components` lists each component's
    /// edges in orientation order; `free_loops` counts crossing-free circles.
    pub fn new(crossings: Vec<Crossing>, components: Vec<Vec<u32>>, free_loops: usize) -> Result<Self> {
        let mut count: BTreeMap<u32, usize> = BTreeMap::new();
        for (k, x) in crossings.iter().enumerate() {
            for e in x.0 {
                if e == 0 {
                    return invalid(format!("crossing {} uses edge label 0; labels must be positive", k + 1));
                }
                *count.entry(e).or_default() += 1;
            }
        }
        if let Some((e, n)) = count.iter().find(|(_, &n)| n != 2) {
            return invalid(format!("edge {e} appears {n} times in crossings (expected 2)"));
        }

        let mut component_of = BTreeMap::new();
        let mut succ = BTreeMap::new();
        for (i, comp) in components.iter().enumerate() {
            match comp.len() {
                0 => return invalid(format!("component {} is empty", i + 1)),
                1 => {
                    return invalid(format!(
                        "component {} has a single edge {}; a closed strand passes at least two crossings",
                        i + 1,
                        comp[0]
                    ))
                }
                _ => {}
            }
            for (j, &e) in comp.iter().enumerate() {
                if !count.contains_key(&e) {
                    return invalid(format!("component {} lists edge {e}, which no crossing uses", i + 1));
                }
                if component_of.insert(e, i).is_some() {
                    return invalid(format!("edge {e} is listed in more than one component position"));
                }
                succ.insert(e, comp[(j + 1) % comp.len()]);
            }
        }
        if let Some(e) = count.keys().find(|e| !component_of.contains_key(e)) {
            return invalid(format!("edge {e} belongs to no component"));
        }

        for (k, x) in crossings.iter().enumerate() {
            let [a, _, c, _] = x.0;
            if succ[&a] != c {
                return invalid(format!(
                    "under-strand discontinuity at crossing {} ({x}): edge {a} is followed by {}, not {c}",
                    k + 1,
                    succ[&a]
                ));
            }
        }

        let over_in = resolve_over_strands(&crossings, &components, &component_of, &succ)?;

        // Every edge must be entered by exactly one passage and left by exactly one.
        let mut heads: BTreeMap<u32, usize> = BTreeMap::new();
        let mut tails: BTreeMap<u32, usize> = BTreeMap::new();
        for (x, &o) in crossings.iter().zip(&over_in) {
            let s = x.0;
            *heads.entry(s[0]).or_default() += 1;
            *heads.entry(s[o as usize]).or_default() += 1;
            *tails.entry(s[2]).or_default() += 1;
            *tails.entry(s[(o as usize + 2) % 4]).or_default() += 1;
        }
        for e in count.keys() {
            if heads.get(e) != Some(&1) || tails.get(e) != Some(&1) {
                return invalid(format!("edge {e} is not traversed consistently with its component orientation"));
            }
        }

        Ok(Self { crossings, components, free_loops, over_in, component_of })
    }

    /// Builds a diagram whose over-strand directions must come out as
    /// `over_in`. Two-edge components that only pass over are listed in the
    /// order that makes the default reading agree.
    pub(crate) fn with_over_in(
        crossings: Vec<Crossing>,
        mut components: Vec<Vec<u32>>,
        free_loops: usize,
        over_in: &[u8],
    ) -> Result<Self> {
        for comp in components.iter_mut().filter(|c| c.len() == 2) {
            if crossings.iter().any(|x| comp.contains(&x.0[0])) {
                continue;
            }
            // The first edge listed must enter the first crossing it meets.
            if let Some(k) = crossings.iter().position(|x| x.0.contains(&comp[0])) {
                if crossings[k].0[over_in[k] as usize] != comp[0] {
                    comp.swap(0, 1);
                }
            }
        }
        let d = Self::new(crossings, components, free_loops)?;
        if d.over_in != over_in {
            return Err(Error::Internal("orientation could not be expressed by the component cycles".into()));
        }
        Ok(d)
    }

    /// The crossing-free unknot.
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// `n` disjoint crossing-free circles.
    pub fn unlink(n: usize) -> Self {
        Self::new(Vec::new(), Vec::new(), n).expect("unlink is valid")
    }

    /// Parses PD text; see [`parse_pd`].
    pub fn parse(text: &str) -> Result<Self> {
        pd::parse_pd(text)
    }

    /// Renders PD text that [`Diagram::parse`] reads back to an equal diagram.
    pub fn to_pd(&self) -> String {
        pd::write_pd(self)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    /// Component edge cycles in orientation order (crossing-free circles excluded).
    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Total number of link components, crossing-free circles included.
    /// Those circles are numbered after the components with crossings.
    pub fn num_components(&self) -> usize {
        self.components.len() + self.free_loops
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty() && self.free_loops == 0
    }

    pub fn edges(&self) -> impl Iterator<Item = u32> + '_ {
        self.component_of.keys().copied()
    }

    pub fn max_label(&self) -> u32 {
        self.component_of.keys().next_back().copied().unwrap_or(0)
    }

    pub fn component_of_edge(&self, e: u32) -> Result<usize> {
        self.component_of.get(&e).copied().ok_or(Error::UnknownEdge(e))
    }

    /// Slot index (1 = `b`, 3 = `d`) where the over-strand of crossing `k` enters.
    pub fn over_incoming_slot(&self, k: usize) -> usize {
        self.over_in[k] as usize
    }

    /// Components `(under, over)` of the two strands at crossing `k`.
    pub fn strand_components(&self, k: usize) -> (usize, usize) {
        let s = self.crossings[k].0;
        (self.component_of[&s[0]], self.component_of[&s[1]])
    }

    pub fn crossing_signs(&self) -> Vec<i32> {
        self.over_in.iter().map(|&o| if o == 3 { 1 } else { -1 }).collect()
    }

    pub fn writhe(&self) -> i64 {
        self.crossing_signs().iter().map(|&s| s as i64).sum()
    }

    fn check_component(&self, i: usize) -> Result<()> {
        if i >= self.num_components() {
            return Err(Error::ComponentIndex { index: i, count: self.num_components() });
        }
        Ok(())
    }

    /// Linking number of components `i` and `j` (0-based): half the signed
    /// count of crossings between them.
    pub fn linking_number(&self, i: usize, j: usize) -> Result<i64> {
        self.check_component(i)?;
        self.check_component(j)?;
        if i == j {
            return Err(Error::SameComponent(i));
        }
        let signs = self.crossing_signs();
        let sum: i64 = (0..self.crossings.len())
            .filter(|&k| {
                let (u, o) = self.strand_components(k);
                (u, o) == (i, j) || (u, o) == (j, i)
            })
            .map(|k| signs[k] as i64)
            .sum();
        half(sum)
    }

    /// Half the signed count of all crossings between distinct components.
    pub fn total_linking_number(&self) -> Result<i64> {
        if self.num_components() < 2 {
            return Err(Error::TooFewComponents(self.num_components()));
        }
        let signs = self.crossing_signs();
        let sum: i64 = (0..self.crossings.len())
            .filter(|&k| {
                let (u, o) = self.strand_components(k);
                u != o
            })
            .map(|k| signs[k] as i64)
            .sum();
        half(sum)
    }

    /// Crossing `k` with over and under exchanged, re-rooted at the new
    /// incoming under-strand.
    pub(crate) fn switched(&self, k: usize) -> Crossing {
        let [a, b, c, d] = self.crossings[k].0;
        if self.over_in[k] == 1 {
            Crossing::new(b, c, d, a)
        } else {
            Crossing::new(d, a, b, c)
        }
    }

    /// Switches every crossing; components and orientation are unchanged.
    pub fn mirror(&self) -> Self {
        let crossings = (0..self.crossings.len()).map(|k| self.switched(k)).collect();
        let over_in: Vec<u8> = self.over_in.iter().map(|o| 4 - o).collect();
        Self::with_over_in(crossings, self.components.clone(), self.free_loops, &over_in).expect("mirror preserves validity")
    }

    /// Reverses the orientation of component `i` (0-based). Crossing-free
    /// circles are accepted and left alone.
    pub fn reverse_component(&self, i: usize) -> Result<Self> {
        self.check_component(i)?;
        if i >= self.components.len() {
            return Ok(self.clone());
        }
        let mut crossings = self.crossings.clone();
        let mut over_in = self.over_in.clone();
        for (k, x) in crossings.iter_mut().enumerate() {
            let [a, b, c, d] = x.0;
            let (under, over) = self.strand_components(k);
            if under == i {
                *x = Crossing::new(c, d, a, b);
            }
            // Re-rooting and reversing the over-strand each move the entry slot.
            if (under == i) != (over == i) {
                over_in[k] = 4 - over_in[k];
            }
        }
        let mut components = self.components.clone();
        components[i].reverse();
        Self::with_over_in(crossings, components, self.free_loops, &over_in)
    }

    /// Where each edge meets the crossings: `[(crossing, slot); 2]`.
    pub(crate) fn occurrences(&self) -> BTreeMap<u32, Vec<(usize, usize)>> {
        let mut occ: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
        for (k, x) in self.crossings.iter().enumerate() {
            for (s, &e) in x.0.iter().enumerate() {
                occ.entry(e).or_default().push((k, s));
            }
        }
        occ
    }

    /// `(crossing, slot)` at which edge `e` ends.
    pub(crate) fn head_of(&self, e: u32) -> Result<(usize, usize)> {
        for (k, x) in self.crossings.iter().enumerate() {
            if x.0[0] == e {
                return Ok((k, 0));
            }
            let o = self.over_in[k] as usize;
            if x.0[o] == e {
                return Ok((k, o));
            }
        }
        Err(Error::UnknownEdge(e))
    }

    /// Components that meet at least one crossing with another component.
    pub fn linked_pairs(&self) -> BTreeSet<(usize, usize)> {
        (0..self.crossings.len())
            .filter_map(|k| {
                let (u, o) = self.strand_components(k);
                (u != o).then(|| (u.min(o), u.max(o)))
            })
            .collect()
    }
}

fn half(sum: i64) -> Result<i64> {
    if sum % 2 != 0 {
        return Err(Error::Internal(format!("odd linking sum {sum}")));
    }
    Ok(sum / 2)
}

/// Decides, per crossing, whether the over-strand enters at `b` (1) or `d` (3).
fn resolve_over_strands(
    crossings: &[Crossing],
    components: &[Vec<u32>],
    component_of: &BTreeMap<u32, usize>,
    succ: &BTreeMap<u32, u32>,
) -> Result<Vec<u8>> {
    let mut over_in = Vec::with_capacity(crossings.len());
    for (k, x) in crossings.iter().enumerate() {
        let [_, b, _, d] = x.0;
        let b_in = succ[&b] == d;
        let d_in = succ[&d] == b;
        let slot = match (b_in, d_in) {
            (true, false) => 1,
            (false, true) => 3,
            (false, false) => {
                return invalid(format!(
                    "over-strand discontinuity at crossing {} ({x}): edges {b} and {d} are not consecutive in a component",
                    k + 1
                ))
            }
            (true, true) => {
                let comp = &components[component_of[&b]];
                orient_two_edge_passage(crossings, k, comp)?
            }
        };
        over_in.push(slot);
    }
    Ok(over_in)
}

/// Over-passage of a two-edge component `[e1, e2]`, where the cycle alone
/// is symmetric.
fn orient_two_edge_passage(crossings: &[Crossing], k: usize, comp: &[u32]) -> Result<u8> {
    let (e1, e2) = (comp[0], comp[1]);
    let slot_of = |k: usize, e: u32| -> u8 {
        if crossings[k].0[1] == e {
            1
        } else {
            3
        }
    };
    // An under-passage of the component fixes where one of its edges ends.
    if let Some(x) = crossings.iter().map(|x| x.0[0]).find(|&a| a == e1 || a == e2) {
        let y = if x == e1 { e2 } else { e1 };
        // Here the over-slot holding x is x's tail, so y comes in.
        return Ok(slot_of(k, y));
    }
    let first = crossings
        .iter()
        .position(|x| x.0.contains(&e1))
        .ok_or_else(|| Error::Internal(format!("edge {e1} has no crossing")))?;
    Ok(if k == first { slot_of(k, e1) } else { slot_of(k, e2) })
}

pub use pd::parse_pd;
