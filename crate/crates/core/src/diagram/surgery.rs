//! Local modifications of diagrams: curls, extra circles, disjoint unions,
//! crossing switches and smoothings.

use super::fragment::Fragment;
use super::{Crossing, Diagram};
use crate::error::{Error, Result};

/// Handedness of an added curl: a right curl is a positive crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Handedness {
    Right,
    Left,
}

impl Diagram {
    /// Adds a kink on edge `e`; the new crossing has sign +1 for
    /// [`Handedness::Right`] and -1 for [`Handedness::Left`].
    pub fn add_curl(&self, e: u32, hand: Handedness) -> Result<Self> {
        let comp = self.component_of_edge(e)?;
        let (hk, hs) = self.head_of(e)?;
        let top = self.max_label();
        let (l, e2) = (top + 1, top + 2);
        let mut crossings = self.crossings.clone();
        crossings[hk].0[hs] = e2;
        crossings.push(match hand {
            Handedness::Right => Crossing::new(e, e2, l, l),
            Handedness::Left => Crossing::new(e, l, l, e2),
        });
        let mut over_in = self.over_in.clone();
        over_in.push(if hand == Handedness::Right { 3 } else { 1 });
        let mut components = self.components.clone();
        let c = &mut components[comp];
        let i = c.iter().position(|&x| x == e).unwrap();
        c.insert(i + 1, l);
        c.insert(i + 2, e2);
        Self::with_over_in(crossings, components, self.free_loops, &over_in)
    }

    pub fn add_disjoint_circle(&self) -> Self {
        let mut d = self.clone();
        d.free_loops += 1;
        d
    }

    /// Split union with `other`, whose edge labels are shifted past ours.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.max_label();
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|x| Crossing(x.0.map(|e| e + shift))));
        let mut components = self.components.clone();
        components.extend(other.components.iter().map(|c| c.iter().map(|e| e + shift).collect()));
        let over_in: Vec<u8> = self.over_in.iter().chain(&other.over_in).copied().collect();
        Self::with_over_in(crossings, components, self.free_loops + other.free_loops, &over_in)
            .expect("union of valid diagrams is valid")
    }

    fn check_crossing(&self, k: usize) -> Result<()> {
        if k >= self.crossings.len() {
            return Err(Error::InvalidDiagram(format!(
                "crossing index {k} out of range (diagram has {} crossings)",
                self.crossings.len()
            )));
        }
        Ok(())
    }

    /// Switches crossing `k` (0-based), keeping labels and orientation.
    pub fn switch_crossing(&self, k: usize) -> Result<Self> {
        self.check_crossing(k)?;
        let mut crossings = self.crossings.clone();
        crossings[k] = self.switched(k);
        let mut over_in = self.over_in.clone();
        over_in[k] = 4 - over_in[k];
        Self::with_over_in(crossings, self.components.clone(), self.free_loops, &over_in)
    }

    /// Replaces crossing `k` by its A- or B-smoothing. The result is
    /// relabeled and its components reoriented, since a smoothing need not
    /// respect the old orientation.
    pub fn smooth_crossing(&self, k: usize, a_smoothing: bool) -> Result<Self> {
        self.check_crossing(k)?;
        Fragment::from_diagram(self).smooth(k as u32, a_smoothing)?.to_diagram()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn curls_change_writhe() {
        let t = fixtures::right_trefoil();
        let r = t.add_curl(3, Handedness::Right).unwrap();
        assert_eq!(r.writhe(), 4);
        assert_eq!(r.num_crossings(), 4);
        let l = t.add_curl(1, Handedness::Left).unwrap();
        assert_eq!(l.writhe(), 2);
        assert_eq!(t.add_curl(99, Handedness::Left), Err(Error::UnknownEdge(99)));
    }

    #[test]
    fn curl_on_two_edge_component() {
        let h = fixtures::hopf();
        for e in 1..=4 {
            for hand in [Handedness::Right, Handedness::Left] {
                let d = h.add_curl(e, hand).unwrap();
                assert_eq!(d.linking_number(0, 1).unwrap(), -1);
            }
        }
    }

    #[test]
    fn union_and_circles() {
        let u = Diagram::unknot().disjoint_union(&Diagram::unknot());
        assert_eq!(u.num_components(), 2);
        assert_eq!(u.linking_number(0, 1).unwrap(), 0);
        let t = fixtures::right_trefoil().disjoint_union(&fixtures::hopf());
        assert_eq!(t.num_components(), 3);
        assert_eq!(t.linking_number(1, 2).unwrap(), -1);
        assert_eq!(t.writhe(), 1);
    }

    #[test]
    fn switch_changes_one_sign() {
        let t = fixtures::right_trefoil();
        let s = t.switch_crossing(0).unwrap();
        assert_eq!(s.writhe(), 1);
        assert!(t.switch_crossing(3).is_err());
        let h = fixtures::hopf();
        let s = h.switch_crossing(0).unwrap();
        assert_eq!(s.crossing_signs(), vec![1, -1]);
        assert_eq!(Diagram::parse(&s.to_pd()).unwrap(), s);
    }

    #[test]
    fn smoothing_curl_gives_circles() {
        let d = Diagram::parse("X[1,1,2,2] components: (1 2)").unwrap();
        assert_eq!(d.smooth_crossing(0, true).unwrap().free_loops(), 2);
        assert_eq!(d.smooth_crossing(0, false).unwrap().free_loops(), 1);
    }
}
