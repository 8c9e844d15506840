//! Unoriented diagram pieces with loose ends, used to build tangles and to
//! cut and reglue closed diagrams.
//!
//! Crossing slots are numbered counterclockwise with the under-strand on
//! slots 0 and 2, like an unoriented PD quadruple. Loose ends are ports;
//! a tangle has ports `NW`, `NE`, `SW`, `SE`.

use std::collections::BTreeMap;

use super::{Crossing, Diagram};
use crate::error::{Error, Result};

pub(crate) const NW: u8 = 0;
pub(crate) const NE: u8 = 1;
pub(crate) const SW: u8 = 2;
pub(crate) const SE: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) enum Node {
    Slot(u32, u8),
    Port(u8),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Fragment {
    crossings: u32,
    partner: BTreeMap<Node, Node>,
    free_loops: usize,
}

/// Edge structure with dense indices, as consumed by the state sum.
#[derive(Clone, Debug)]
pub(crate) struct Wiring {
    pub edges: usize,
    pub slots: Vec<[u32; 4]>,
    /// Edge index at each port, in port order.
    pub ports: Vec<u32>,
    pub free_loops: usize,
}

impl Fragment {
    pub fn crossings(&self) -> u32 {
        self.crossings
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    fn link(&mut self, x: Node, y: Node) {
        self.partner.insert(x, y);
        self.partner.insert(y, x);
    }

    fn partner(&self, n: Node) -> Result<Node> {
        self.partner.get(&n).copied().ok_or_else(|| Error::Internal(format!("dangling node {n:?}")))
    }

    /// The tangle `0`: arcs NW-NE and SW-SE.
    pub fn zero() -> Self {
        let mut f = Self::default();
        f.link(Node::Port(NW), Node::Port(NE));
        f.link(Node::Port(SW), Node::Port(SE));
        f
    }

    /// The tangle `inf`: arcs NW-SW and NE-SE.
    pub fn infinity() -> Self {
        let mut f = Self::default();
        f.link(Node::Port(NW), Node::Port(SW));
        f.link(Node::Port(NE), Node::Port(SE));
        f
    }

    /// The tangle `1`: one crossing whose A-smoothing gives `0`.
    pub fn one() -> Self {
        let mut f = Self { crossings: 1, ..Self::default() };
        for (s, p) in [SW, SE, NE, NW].into_iter().enumerate() {
            f.link(Node::Slot(0, s as u8), Node::Port(p));
        }
        f
    }

    fn map_nodes(&self, mut m: impl FnMut(Node) -> Node) -> Self {
        Self {
            crossings: self.crossings,
            partner: self.partner.iter().map(|(&x, &y)| (m(x), m(y))).collect(),
            free_loops: self.free_loops,
        }
    }

    /// Switches every crossing.
    pub fn mirror(&self) -> Self {
        self.map_nodes(|n| match n {
            Node::Slot(k, s) => Node::Slot(k, (s + 3) % 4),
            p => p,
        })
    }

    /// Reflection in the NW-SE diagonal.
    pub fn reflect(&self) -> Self {
        self.map_nodes(|n| match n {
            Node::Slot(k, s) if s % 2 == 1 => Node::Slot(k, 4 - s),
            Node::Port(NE) => Node::Port(SW),
            Node::Port(SW) => Node::Port(NE),
            n => n,
        })
    }

    /// Disjoint union; `other`'s crossings are renumbered after ours and its
    /// ports shifted by `port_offset`.
    fn union(&self, other: &Self, port_offset: u8) -> Self {
        let shift = self.crossings;
        let moved = other.map_nodes(|n| match n {
            Node::Slot(k, s) => Node::Slot(k + shift, s),
            Node::Port(p) => Node::Port(p + port_offset),
        });
        let mut out = self.clone();
        out.crossings += other.crossings;
        out.free_loops += other.free_loops;
        out.partner.extend(moved.partner);
        out
    }

    /// Joins the strands ending at `x` and `y`, deleting both nodes.
    pub fn glue(&mut self, x: Node, y: Node) -> Result<()> {
        let px = self.partner(x)?;
        let py = self.partner(y)?;
        self.partner.remove(&x);
        self.partner.remove(&y);
        if px == y {
            self.free_loops += 1;
        } else {
            self.partner.remove(&px);
            self.partner.remove(&py);
            self.link(px, py);
        }
        Ok(())
    }

    fn rename_ports(&self, map: &[(u8, u8)]) -> Self {
        self.map_nodes(|n| match n {
            Node::Port(p) => Node::Port(map.iter().find(|&&(from, _)| from == p).map_or(p, |&(_, to)| to)),
            n => n,
        })
    }

    /// `T + U`: U placed to the right of T.
    pub fn sum(&self, u: &Self) -> Result<Self> {
        let mut f = self.union(u, 4);
        f.glue(Node::Port(NE), Node::Port(4 + NW))?;
        f.glue(Node::Port(SE), Node::Port(4 + SW))?;
        Ok(f.rename_ports(&[(4 + NE, NE), (4 + SE, SE)]))
    }

    /// `T * U`: U placed below T.
    pub fn vsum(&self, u: &Self) -> Result<Self> {
        let mut f = self.union(u, 4);
        f.glue(Node::Port(SW), Node::Port(4 + NW))?;
        f.glue(Node::Port(SE), Node::Port(4 + NE))?;
        Ok(f.rename_ports(&[(4 + SW, SW), (4 + SE, SE)]))
    }

    /// Numerator closure: NW joined to NE, SW to SE.
    pub fn numerator(&self) -> Result<Self> {
        let mut f = self.clone();
        f.glue(Node::Port(NW), Node::Port(NE))?;
        f.glue(Node::Port(SW), Node::Port(SE))?;
        Ok(f)
    }

    /// Denominator closure: NW joined to SW, NE to SE.
    pub fn denominator(&self) -> Result<Self> {
        let mut f = self.clone();
        f.glue(Node::Port(NW), Node::Port(SW))?;
        f.glue(Node::Port(NE), Node::Port(SE))?;
        Ok(f)
    }

    /// Inserts `piece`'s crossings and wires its four ports to the given
    /// nodes of `self` (which must be dangling stubs `Port(_)` of self).
    pub fn splice(&mut self, piece: &Self, attach: [Node; 4]) -> Result<()> {
        let offset = 100;
        let mut f = self.union(piece, offset);
        for (p, n) in attach.into_iter().enumerate() {
            f.glue(Node::Port(offset + p as u8), n)?;
        }
        *self = f;
        Ok(())
    }

    /// Builds a fragment directly from crossing slot pairs; used by fixed
    /// templates.
    pub fn from_links(crossings: u32, links: &[(Node, Node)]) -> Self {
        let mut f = Self { crossings, ..Self::default() };
        for &(x, y) in links {
            f.link(x, y);
        }
        f
    }

    pub fn from_diagram(d: &Diagram) -> Self {
        let mut f = Self { crossings: d.num_crossings() as u32, free_loops: d.free_loops(), ..Self::default() };
        for occ in d.occurrences().values() {
            let [(k1, s1), (k2, s2)] = [occ[0], occ[1]];
            f.link(Node::Slot(k1 as u32, s1 as u8), Node::Slot(k2 as u32, s2 as u8));
        }
        f
    }

    /// Replaces crossing `k` by its A-smoothing (slots 0-1, 2-3 joined) or
    /// B-smoothing (slots 0-3, 1-2 joined).
    pub fn smooth(&self, k: u32, a_smoothing: bool) -> Result<Self> {
        let mut f = self.clone();
        let s = |i| Node::Slot(k, i);
        if a_smoothing {
            f.glue(s(0), s(1))?;
            f.glue(s(2), s(3))?;
        } else {
            f.glue(s(0), s(3))?;
            f.glue(s(1), s(2))?;
        }
        let out = f.map_nodes(|n| match n {
            Node::Slot(j, t) if j > k => Node::Slot(j - 1, t),
            n => n,
        });
        Ok(Self { crossings: self.crossings - 1, ..out })
    }

    /// Dense edge numbering of the fragment.
    pub fn wiring(&self) -> Result<Wiring> {
        let mut index: BTreeMap<Node, u32> = BTreeMap::new();
        let mut edges = 0u32;
        for (&x, &y) in &self.partner {
            if x < y {
                index.insert(x, edges);
                index.insert(y, edges);
                edges += 1;
            }
        }
        let lookup = |n: Node| index.get(&n).copied().ok_or_else(|| Error::Internal(format!("dangling node {n:?}")));
        let slots = (0..self.crossings)
            .map(|k| Ok([lookup(Node::Slot(k, 0))?, lookup(Node::Slot(k, 1))?, lookup(Node::Slot(k, 2))?, lookup(Node::Slot(k, 3))?]))
            .collect::<Result<Vec<_>>>()?;
        let ports = self
            .partner
            .keys()
            .filter_map(|&n| match n {
                Node::Port(_) => Some(lookup(n)),
                _ => None,
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Wiring { edges: edges as usize, slots, ports, free_loops: self.free_loops })
    }

    pub fn has_ports(&self) -> bool {
        self.partner.keys().any(|n| matches!(n, Node::Port(_)))
    }

    /// Orients a closed fragment and labels it in PD form.
    ///
    /// Strands are traced in crossing order, under-strand first; each
    /// component's labels are consecutive and start with the edge entering
    /// the crossing where its trace began.
    pub fn to_diagram(&self) -> Result<Diagram> {
        if self.has_ports() {
            return Err(Error::Internal("cannot orient a fragment with loose ends".into()));
        }
        let n = self.crossings as usize;
        let mut done = vec![[false; 2]; n];
        let mut under_entry = vec![0u8; n];
        let mut over_entry = vec![0u8; n];
        let mut labels: BTreeMap<Node, u32> = BTreeMap::new();
        let mut components = Vec::new();
        let mut next = 1u32;
        for k in 0..self.crossings {
            for strand in 0..2u8 {
                if done[k as usize][strand as usize] {
                    continue;
                }
                let start = Node::Slot(k, strand);
                let mut path = Vec::new();
                let (mut ck, mut s) = (k, strand);
                loop {
                    let pass = &mut done[ck as usize][(s % 2) as usize];
                    if *pass {
                        return Err(Error::Internal(format!("strand revisits crossing {ck}")));
                    }
                    *pass = true;
                    if s % 2 == 0 {
                        under_entry[ck as usize] = s;
                    } else {
                        over_entry[ck as usize] = s;
                    }
                    let exit = Node::Slot(ck, (s + 2) % 4);
                    let to = self.partner(exit)?;
                    path.push((exit, to));
                    if to == start {
                        break;
                    }
                    match to {
                        Node::Slot(nk, ns) => (ck, s) = (nk, ns),
                        Node::Port(_) => return Err(Error::Internal("loose end in closed fragment".into())),
                    }
                }
                path.rotate_right(1);
                let mut comp = Vec::with_capacity(path.len());
                for (x, y) in path {
                    labels.insert(x, next);
                    labels.insert(y, next);
                    comp.push(next);
                    next += 1;
                }
                components.push(comp);
            }
        }
        let crossings: Vec<Crossing> = (0..n)
            .map(|k| {
                let su = under_entry[k];
                let q: [u32; 4] = std::array::from_fn(|i| labels[&Node::Slot(k as u32, (su + i as u8) % 4)]);
                Crossing(q)
            })
            .collect();
        let over_in: Vec<u8> = (0..n).map(|k| (over_entry[k] + 4 - under_entry[k]) % 4).collect();
        Diagram::with_over_in(crossings, components, self.free_loops, &over_in)
    }
}
