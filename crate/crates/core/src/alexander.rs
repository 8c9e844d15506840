//! Alexander polynomial of a knot diagram from its crossing/arc matrix.
//!
//! Arcs are the runs of the knot between consecutive under-passages. At
//! each crossing the over-arc gets `1 - t`; of the two under-arcs, the one
//! on the traveler's left (facing along the over-strand) gets `t` and the
//! one on the right gets `-1`. For a positive crossing the left one is the
//! outgoing under-arc.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Square matrix over `Z[t, t^-1]`; row `i` is crossing `i`, column `j` arc `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcMatrix {
    rows: Vec<Vec<LaurentPoly>>,
}

impl ArcMatrix {
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == rows.len()), "matrix must be square");
        Self { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.rows
    }

    /// The matrix with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|&(r, _)| r != i)
            .map(|(_, row)| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        Self { rows }
    }

    /// Same matrix with rows and columns reordered: row `i` of the result is
    /// row `row_perm[i]` of `self`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        Self { rows: row_perm.iter().map(|&r| col_perm.iter().map(|&c| self.rows[r][c].clone()).collect()).collect() }
    }

    /// Determinant by Laplace expansion along the first row.
    pub fn det_cofactor(&self) -> Result<LaurentPoly> {
        let n = self.size();
        match n {
            0 => return Ok(LaurentPoly::one()),
            1 => return Ok(self.rows[0][0].clone()),
            _ => {}
        }
        let mut total = LaurentPoly::zero();
        for j in 0..n {
            if self.rows[0][j].is_zero() {
                continue;
            }
            let term = self.rows[0][j].checked_mul(&self.minor(0, j).det_cofactor()?)?;
            total = if j % 2 == 0 { total.checked_add(&term)? } else { total.checked_sub(&term)? };
        }
        Ok(total)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det_bareiss(&self) -> Result<LaurentPoly> {
        let n = self.size();
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let mut m = self.rows.clone();
        let mut prev = LaurentPoly::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(LaurentPoly::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].checked_mul(&m[k][k])?.checked_sub(&m[i][k].checked_mul(&m[k][j])?)?;
                    m[i][j] = num.exact_div(&prev)?;
                }
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negate {
            det.checked_neg()
        } else {
            Ok(det)
        }
    }

    /// Cofactor expansion up to 8x8, elimination above.
    pub fn det(&self) -> Result<LaurentPoly> {
        if self.size() <= 8 {
            self.det_cofactor()
        } else {
            self.det_bareiss()
        }
    }
}

impl fmt::Display for ArcMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|x| x.render("t")).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

fn knot_only(d: &Diagram) -> Result<()> {
    if d.num_components() != 1 {
        return Err(Error::KnotsOnly(d.num_components()));
    }
    Ok(())
}

/// Arc index of every edge, arcs numbered along the orientation starting
/// with the arc that begins at the first under-passage exit in the cycle.
fn arcs(d: &Diagram) -> BTreeMap<u32, usize> {
    let comp = &d.components()[0];
    let ends: Vec<u32> = d.crossings().iter().map(|x| x.0[0]).collect();
    let starts: Vec<u32> = d.crossings().iter().map(|x| x.0[2]).collect();
    let first = comp.iter().position(|e| starts.contains(e)).unwrap_or(0);
    let mut arc = 0;
    let mut out = BTreeMap::new();
    for i in 0..comp.len() {
        let e = comp[(first + i) % comp.len()];
        out.insert(e, arc);
        if ends.contains(&e) {
            arc += 1;
        }
    }
    out
}

/// The crossing/arc matrix of a knot diagram with at least one crossing.
pub fn crossing_arc_matrix(d: &Diagram) -> Result<ArcMatrix> {
    knot_only(d)?;
    let n = d.num_crossings();
    if n == 0 {
        return Err(Error::InvalidDiagram("the crossing/arc matrix needs at least one crossing".into()));
    }
    let arc = arcs(d);
    let signs = d.crossing_signs();
    let one_minus_t = LaurentPoly::from_terms([(0, 1), (1, -1)]);
    let t = LaurentPoly::var();
    let minus_one = LaurentPoly::constant(-1);
    let mut rows = vec![vec![LaurentPoly::zero(); n]; n];
    for (k, x) in d.crossings().iter().enumerate() {
        let [a, b, c, _] = x.0;
        let (left, right) = if signs[k] > 0 { (c, a) } else { (a, c) };
        for (e, label) in [(b, &one_minus_t), (left, &t), (right, &minus_one)] {
            let cell = &mut rows[k][arc[&e]];
            *cell = cell.checked_add(label)?;
        }
    }
    Ok(ArcMatrix { rows })
}

/// Multiplies by `±t^k` so the lowest term is a positive constant.
pub fn normalize(p: &LaurentPoly) -> Result<LaurentPoly> {
    let Some(min) = p.min_degree() else {
        return Ok(LaurentPoly::zero());
    };
    let shifted = p.shift(-min)?;
    if shifted.coeff(0) < 0 {
        shifted.checked_neg()
    } else {
        Ok(shifted)
    }
}

/// Normalized determinant after deleting row `row` and column `col`.
pub fn alexander_deleting(d: &Diagram, row: usize, col: usize) -> Result<LaurentPoly> {
    let m = crossing_arc_matrix(d)?;
    if row >= m.size() || col >= m.size() {
        return Err(Error::InvalidDiagram(format!("row/column {row},{col} out of range for a {0}x{0} matrix", m.size())));
    }
    normalize(&m.minor(row, col).det()?)
}

/// Alexander polynomial of a knot diagram, normalized to a positive
/// constant term; the crossing-free unknot gives 1.
pub fn alexander(d: &Diagram) -> Result<LaurentPoly> {
    knot_only(d)?;
    let n = d.num_crossings();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    alexander_deleting(d, n - 1, n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn t(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, "t").unwrap()
    }

    #[test]
    fn trefoils() {
        assert_eq!(alexander(&fixtures::right_trefoil()).unwrap(), t("1 - t + t^2"));
        assert_eq!(alexander(&fixtures::left_trefoil()).unwrap(), t("1 - t + t^2"));
    }

    #[test]
    fn five_two_matrix_and_polynomial() {
        let m = crossing_arc_matrix(&fixtures::five_two()).unwrap();
        let printed = [
            ["1-t", "0", "-1", "t", "0"],
            ["t", "1-t", "0", "0", "-1"],
            ["0", "0", "1-t", "-1", "t"],
            ["-1", "t", "0", "1-t", "0"],
            ["0", "-1", "t", "0", "1-t"],
        ];
        for (i, row) in printed.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                assert_eq!(m.entry(i, j), &t(s), "entry {i},{j}");
            }
        }
        assert_eq!(m.minor(3, 4).det().unwrap(), t("2t^3 - 3t^2 + 2t"));
        assert_eq!(m.minor(4, 4).det().unwrap(), t("-2t^3 + 3t^2 - 2t"));
        assert_eq!(alexander(&fixtures::five_two()).unwrap(), t("2 - 3t + 2t^2"));
    }

    #[test]
    fn curl_unknot() {
        let d = Diagram::parse("X[1,1,2,2] components: (1 2)").unwrap();
        let m = crossing_arc_matrix(&d).unwrap();
        assert_eq!(m.size(), 1);
        assert_eq!(m.entry(0, 0), &LaurentPoly::zero());
        assert_eq!(alexander(&d).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn rejects_links() {
        assert_eq!(alexander(&fixtures::hopf()), Err(Error::KnotsOnly(2)));
        assert_eq!(alexander(&Diagram::unknot()).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn determinant_algorithms_agree() {
        for d in [fixtures::right_trefoil(), fixtures::five_two()] {
            let m = crossing_arc_matrix(&d).unwrap();
            for i in 0..m.size() {
                let minor = m.minor(i, (i + 1) % m.size());
                assert_eq!(minor.det_cofactor().unwrap(), minor.det_bareiss().unwrap());
            }
        }
        let zero_pivot = ArcMatrix::from_rows(vec![
            vec![t("0"), t("1"), t("t")],
            vec![t("1 - t"), t("2"), t("0")],
            vec![t("t"), t("-1"), t("3t^2")],
        ]);
        assert_eq!(zero_pivot.det_cofactor().unwrap(), zero_pivot.det_bareiss().unwrap());
    }
}
