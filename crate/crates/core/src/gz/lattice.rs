//! Lattice points of faces of `P_λ`: explicit enumeration and a
//! prefix-sum counter that never lists the points.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gz::face::FaceDiagram;
use crate::gz::pattern::GzPattern;
use crate::gz::weight::join;

fn check_top(face: &FaceDiagram, top: &[i64]) -> Result<()> {
    if top.len() != face.n() {
        return Err(Error::RankMismatch { expected: face.n(), got: top.len() });
    }
    if top.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::NotStrictlyDominant(join(top)));
    }
    Ok(())
}

/// Bounds for entry `k` (0-based) of the row below `row`, given `row`:
/// the interlacing interval narrowed by the face equations.
fn next_bounds(face: &FaceDiagram, r: usize, x: &[i64], k: usize) -> Option<(i64, i64)> {
    let (mut lo, mut hi) = (x[k], x[k + 1]);
    if face.has_l(r, k + 1) {
        lo = lo.max(x[k]);
        hi = hi.min(x[k]);
    }
    if face.has_r(r, k + 2) {
        lo = lo.max(x[k + 1]);
        hi = hi.min(x[k + 1]);
    }
    (lo <= hi).then_some((lo, hi))
}

/// Every lattice point of the face of `P_top`, in lexicographic order of
/// rows. `top` may be weakly increasing.
pub fn lattice_points(face: &FaceDiagram, top: &[i64]) -> Result<Vec<GzPattern>> {
    check_top(face, top)?;
    let n = face.n();
    let mut out = Vec::new();
    let mut rows = vec![top.to_vec()];
    fn fill_row(
        face: &FaceDiagram,
        n: usize,
        rows: &mut Vec<Vec<i64>>,
        cur: &mut Vec<i64>,
        out: &mut Vec<GzPattern>,
    ) {
        let r = rows.len() - 1;
        let x = rows[r].clone();
        let k = cur.len();
        if k == x.len() - 1 {
            rows.push(cur.clone());
            if rows.len() == n {
                out.push(GzPattern::from_rows_unchecked(rows.clone()));
            } else {
                fill_row(face, n, rows, &mut Vec::new(), out);
            }
            rows.pop();
            return;
        }
        if let Some((lo, hi)) = next_bounds(face, r, &x, k) {
            for v in lo..=hi {
                cur.push(v);
                fill_row(face, n, rows, cur, out);
                cur.pop();
            }
        }
    }
    if n == 1 {
        return Ok(vec![GzPattern::from_rows_unchecked(rows)]);
    }
    fill_row(face, n, &mut rows, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Prefix sums of a function on a box of integer points.
struct PrefixTable {
    lo: Vec<i64>,
    width: Vec<usize>,
    stride: Vec<usize>,
    data: Vec<i128>,
}

impl PrefixTable {
    fn new(lo: Vec<i64>, hi: &[i64]) -> Self {
        let width: Vec<usize> = lo.iter().zip(hi).map(|(&l, &h)| (h - l + 1).max(0) as usize).collect();
        let mut stride = vec![1usize; width.len()];
        for k in (0..width.len().saturating_sub(1)).rev() {
            stride[k] = stride[k + 1] * width[k + 1];
        }
        let size = width.iter().product();
        PrefixTable { lo, width, stride, data: vec![0; size] }
    }

    fn point(&self, mut idx: usize) -> Vec<i64> {
        let mut x = vec![0; self.width.len()];
        for k in 0..x.len() {
            x[k] = self.lo[k] + (idx / self.stride[k]) as i64;
            idx %= self.stride[k];
        }
        x
    }

    /// Turns point values into inclusive prefix sums, one axis at a time.
    fn accumulate(&mut self) {
        for k in 0..self.width.len() {
            let s = self.stride[k];
            for idx in 0..self.data.len() {
                if (idx / s) % self.width[k] > 0 {
                    self.data[idx] += self.data[idx - s];
                }
            }
        }
    }

    /// Sum of the function over `x <= y` componentwise; `y` may lie
    /// outside the table.
    fn prefix(&self, y: &[i64]) -> i128 {
        let mut idx = 0;
        for k in 0..y.len() {
            let off = y[k] - self.lo[k];
            if off < 0 {
                return 0;
            }
            idx += (off as usize).min(self.width[k] - 1) * self.stride[k];
        }
        self.data[idx]
    }

    /// Sum over the box `lo..=hi` by inclusion-exclusion over corners.
    fn box_sum(&self, lo: &[i64], hi: &[i64]) -> i128 {
        let m = lo.len();
        let mut total = 0;
        let mut corner = vec![0i64; m];
        for mask in 0u32..(1 << m) {
            for k in 0..m {
                corner[k] = if mask >> k & 1 == 1 { lo[k] - 1 } else { hi[k] };
            }
            let v = self.prefix(&corner);
            if mask.count_ones() % 2 == 1 {
                total -= v;
            } else {
                total += v;
            }
        }
        total
    }
}

/// The box of admissible next rows, or `None` when it is empty.
fn next_box(face: &FaceDiagram, r: usize, x: &[i64]) -> Option<(Vec<i64>, Vec<i64>)> {
    let m = x.len() - 1;
    let mut lo = Vec::with_capacity(m);
    let mut hi = Vec::with_capacity(m);
    for k in 0..m {
        let (l, h) = next_bounds(face, r, x, k)?;
        lo.push(l);
        hi.push(h);
    }
    Some((lo, hi))
}

/// Number of lattice points of the face of `P_top`, by dynamic programming
/// from the bottom row up.
pub fn count_lattice_points(face: &FaceDiagram, top: &[i64]) -> Result<u128> {
    check_top(face, top)?;
    let n = face.n();
    if n == 1 {
        return Ok(1);
    }
    // f_{n-1} is identically one on the single-entry bottom row.
    let bottom_lo = vec![top[0]];
    let bottom_hi = vec![top[n - 1]];
    let mut table = PrefixTable::new(bottom_lo, &bottom_hi);
    table.data.iter_mut().for_each(|v| *v = 1);
    table.accumulate();
    for r in (1..n - 1).rev() {
        let m = n - r;
        let lo: Vec<i64> = (0..m).map(|j| top[j]).collect();
        let hi: Vec<i64> = (0..m).map(|j| top[j + r]).collect();
        let mut next = PrefixTable::new(lo, &hi);
        for idx in 0..next.data.len() {
            let x = next.point(idx);
            if let Some((blo, bhi)) = next_box(face, r, &x) {
                next.data[idx] = table.box_sum(&blo, &bhi);
            }
        }
        next.accumulate();
        table = next;
    }
    let total = match next_box(face, 0, top) {
        Some((blo, bhi)) => table.box_sum(&blo, &bhi),
        None => 0,
    };
    u128::try_from(total).map_err(|_| Error::Internal("negative lattice count".into()))
}

/// Number of lattice points in a union of faces, by inclusion-exclusion
/// over intersections.
pub fn count_union(faces: &[FaceDiagram], top: &[i64]) -> Result<u128> {
    let distinct: Vec<&FaceDiagram> = faces.iter().collect::<BTreeSet<_>>().into_iter().collect();
    if distinct.is_empty() {
        return Ok(0);
    }
    if distinct.len() > 20 {
        return Ok(union_points(faces, top)?.len() as u128);
    }
    let mut total: i128 = 0;
    for mask in 1u32..(1 << distinct.len()) {
        let mut inter = FaceDiagram::whole(distinct[0].n());
        for (k, f) in distinct.iter().enumerate() {
            if mask >> k & 1 == 1 {
                inter = inter.intersect(f)?;
            }
        }
        let c = count_lattice_points(&inter, top)? as i128;
        if mask.count_ones() % 2 == 1 {
            total += c;
        } else {
            total -= c;
        }
    }
    u128::try_from(total).map_err(|_| Error::Internal("negative union count".into()))
}

/// The distinct lattice points of a union of faces.
pub fn union_points(faces: &[FaceDiagram], top: &[i64]) -> Result<BTreeSet<GzPattern>> {
    let mut out = BTreeSet::new();
    for f in faces {
        out.extend(lattice_points(f, top)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gz::face::{all_edges, EdgeKind};
    use crate::perm::Permutation;
    use crate::gz::face::enumerate_reduced_kogan;

    #[test]
    fn whole_polytope_small() {
        let f = FaceDiagram::whole(3);
        assert_eq!(lattice_points(&f, &[0, 1, 2]).unwrap().len(), 8);
        assert_eq!(count_lattice_points(&f, &[0, 1, 2]).unwrap(), 8);
        assert_eq!(count_lattice_points(&f, &[0, 0, 0]).unwrap(), 1);
        assert_eq!(count_lattice_points(&FaceDiagram::whole(1), &[5]).unwrap(), 1);
        assert!(count_lattice_points(&f, &[2, 1, 0]).is_err());
    }

    #[test]
    fn kogan_vertex_point() {
        let pts = lattice_points(&FaceDiagram::kogan_vertex(3), &[0, 1, 2]).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].coordinates(), vec![0, 1, 0]);
    }

    #[test]
    fn union_of_s2_faces() {
        let s2 = Permutation::simple(3, 2).unwrap();
        let faces = enumerate_reduced_kogan(&s2, false);
        assert_eq!(union_points(&faces, &[0, 1, 2]).unwrap().len(), 5);
        assert_eq!(count_union(&faces, &[0, 1, 2]).unwrap(), 5);
    }

    #[test]
    fn facet_counts() {
        let f = FaceDiagram::kogan(3, &[(0, 1)]).unwrap();
        let counts: Vec<u128> =
            (0..4).map(|k| count_lattice_points(&f, &[0, k, 2 * k]).unwrap()).collect();
        assert_eq!(counts, vec![1, 5, 12, 22]);
    }

    #[test]
    fn points_satisfy_face_and_interlace() {
        let top = [0, 2, 3, 5];
        let faces = [
            FaceDiagram::whole(4),
            FaceDiagram::kogan(4, &[(0, 2), (1, 1)]).unwrap(),
            FaceDiagram::dual(4, &[(0, 3), (2, 2)]).unwrap(),
        ];
        for f in &faces {
            for p in lattice_points(f, &top).unwrap() {
                assert!(f.contains_pattern(&p));
                assert!(GzPattern::new(p.rows().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn dp_matches_enumeration_on_random_subfaces() {
        // Every subset of at most two edges of each kind for n = 4, plus
        // mixed pairs, against explicit enumeration.
        let mut edges = all_edges(4, EdgeKind::L);
        edges.extend(all_edges(4, EdgeKind::R));
        for top in [[0i64, 1, 2, 3], [0, 2, 3, 6], [1, 1, 4, 4]] {
            for a in 0..edges.len() {
                for b in a..edges.len() {
                    let f = FaceDiagram::new(4, [edges[a], edges[b]]).unwrap();
                    let brute = lattice_points(&f, &top).unwrap().len() as u128;
                    assert_eq!(count_lattice_points(&f, &top).unwrap(), brute, "{} {:?}", f, top);
                }
            }
        }
    }

    #[test]
    fn union_count_matches_dedup() {
        for n in 3..=4 {
            let top: Vec<i64> = (0..n as i64).map(|v| 2 * v).collect();
            for w in Permutation::all(n) {
                let faces = enumerate_reduced_kogan(&w, false);
                let brute = union_points(&faces, &top).unwrap().len() as u128;
                assert_eq!(count_union(&faces, &top).unwrap(), brute);
            }
        }
    }
}
