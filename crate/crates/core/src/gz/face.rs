//! Face diagrams of the Gelfand-Zetlin polytope, their permutations and the
//! enumeration of reduced Kogan and dual Kogan faces.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::gz::pattern::GzPattern;
use crate::perm::{Permutation, Word};
use crate::poly::{IntPoly, Poly};

/// `L`: `λ_{i,j} = λ_{i+1,j}`; `R`: `λ_{i,j} = λ_{i+1,j-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    L,
    R,
}

/// One equation of a face, between row `row` and row `row + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub row: usize,
    pub col: usize,
    pub kind: EdgeKind,
}

impl Edge {
    pub const fn l(row: usize, col: usize) -> Self {
        Edge { row, col, kind: EdgeKind::L }
    }

    pub const fn r(row: usize, col: usize) -> Self {
        Edge { row, col, kind: EdgeKind::R }
    }

    /// The two coordinates identified by this edge, as `(row, col)` pairs.
    pub fn endpoints(&self) -> ((usize, usize), (usize, usize)) {
        match self.kind {
            EdgeKind::L => ((self.row, self.col), (self.row + 1, self.col)),
            EdgeKind::R => ((self.row, self.col), (self.row + 1, self.col - 1)),
        }
    }
}

/// A face of `P_λ` given by its set of defining equations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceDiagram {
    n: usize,
    edges: BTreeSet<Edge>,
}

/// Number of coordinates `d = n(n-1)/2`.
pub const fn dimension(n: usize) -> usize {
    n * (n.saturating_sub(1)) / 2
}

fn edge_in_range(n: usize, e: &Edge) -> bool {
    if n < 2 || e.row > n - 2 {
        return false;
    }
    match e.kind {
        EdgeKind::L => e.col >= 1 && e.col < n - e.row,
        EdgeKind::R => e.col >= 2 && e.col <= n - e.row,
    }
}

impl FaceDiagram {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        if let Some(bad) = edges.iter().find(|e| !edge_in_range(n, e)) {
            return Err(Error::InvalidFace(format!("edge {:?} out of range for n = {}", bad, n)));
        }
        Ok(FaceDiagram { n, edges })
    }

    /// The whole polytope.
    pub fn whole(n: usize) -> Self {
        FaceDiagram { n, edges: BTreeSet::new() }
    }

    /// A Kogan face from `(row, col)` pairs of L-edges.
    pub fn kogan(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, edges.iter().map(|&(i, j)| Edge::l(i, j)))
    }

    /// A dual Kogan face from `(row, col)` pairs of R-edges.
    pub fn dual(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, edges.iter().map(|&(i, j)| Edge::r(i, j)))
    }

    /// The Kogan vertex: every L-edge present.
    pub fn kogan_vertex(n: usize) -> Self {
        let edges = all_edges(n, EdgeKind::L);
        FaceDiagram { n, edges: edges.into_iter().collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn has_l(&self, row: usize, col: usize) -> bool {
        self.edges.contains(&Edge::l(row, col))
    }

    pub fn has_r(&self, row: usize, col: usize) -> bool {
        self.edges.contains(&Edge::r(row, col))
    }

    pub fn is_kogan(&self) -> bool {
        self.edges.iter().all(|e| e.kind == EdgeKind::L)
    }

    pub fn is_dual(&self) -> bool {
        self.edges.iter().all(|e| e.kind == EdgeKind::R)
    }

    pub fn with_edge(&self, e: Edge) -> Result<Self> {
        let mut f = self.clone();
        if !edge_in_range(self.n, &e) {
            return Err(Error::InvalidFace(format!("edge {:?} out of range for n = {}", e, self.n)));
        }
        f.edges.insert(e);
        Ok(f)
    }

    pub fn without_edge(&self, e: &Edge) -> Self {
        let mut f = self.clone();
        f.edges.remove(e);
        f
    }

    /// The face cut out by the equations of both faces.
    pub fn intersect(&self, other: &FaceDiagram) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch { expected: self.n, got: other.n });
        }
        let mut f = self.clone();
        f.edges.extend(other.edges.iter().copied());
        Ok(f)
    }

    /// Mirror image in a vertical line: `λ_{i,j} = λ_{i+1,j-1}` becomes
    /// `λ_{i,n-i-j+1} = λ_{i+1,n-i-j+1}` and vice versa.
    pub fn mirror(&self) -> Self {
        let n = self.n;
        let edges = self
            .edges
            .iter()
            .map(|e| match e.kind {
                EdgeKind::R => Edge::l(e.row, n - e.row - e.col + 1),
                EdgeKind::L => Edge::r(e.row, n - e.row - e.col + 1),
            })
            .collect();
        FaceDiagram { n, edges }
    }

    /// The reading word. Kogan faces: bottom row to top, left to right,
    /// `λ_{i,j} = λ_{i+1,j}` giving `s_{i+j}`. Dual faces: bottom row to
    /// top, right to left, `λ_{i,j} = λ_{i+1,j-1}` giving `s_{n-j+1}`.
    pub fn word(&self) -> Result<Word> {
        if self.is_kogan() {
            let mut edges: Vec<&Edge> = self.edges.iter().collect();
            edges.sort_by(|a, b| b.row.cmp(&a.row).then(a.col.cmp(&b.col)));
            Ok(Word(edges.into_iter().map(|e| e.row + e.col).collect()))
        } else if self.is_dual() {
            let mut edges: Vec<&Edge> = self.edges.iter().collect();
            edges.sort_by(|a, b| b.row.cmp(&a.row).then(b.col.cmp(&a.col)));
            Ok(Word(edges.into_iter().map(|e| self.n - e.col + 1).collect()))
        } else {
            Err(Error::MixedFace)
        }
    }

    /// `w(F)`, the product of the reading word.
    pub fn permutation(&self) -> Result<Permutation> {
        Permutation::from_word(self.n, &self.word()?)
    }

    pub fn is_reduced(&self) -> Result<bool> {
        Ok(self.permutation()?.length() == self.edges.len())
    }

    /// The monomial `x(F)`: one factor `x_j` per L-edge in column `j`, in
    /// `x_1..x_{n-1}`.
    pub fn x_monomial(&self) -> IntPoly {
        let nv = self.n.saturating_sub(1);
        let mut e = vec![0u32; nv];
        for edge in &self.edges {
            if edge.kind == EdgeKind::L {
                e[edge.col - 1] += 1;
            }
        }
        Poly::monomial(e, BigInt::one())
    }

    /// Whether a pattern satisfies every equation of the face.
    pub fn contains_pattern(&self, p: &GzPattern) -> bool {
        p.n() == self.n
            && self.edges.iter().all(|e| {
                let ((i1, j1), (i2, j2)) = e.endpoints();
                p.get(i1, j1) == p.get(i2, j2)
            })
    }

    /// Upper bound on the face dimension from the equations alone (exact
    /// for Kogan and dual Kogan faces of `P_λ` with `λ` strict), or `None`
    /// when the equations identify two distinct entries of the top row.
    pub fn dimension_bound(&self) -> Option<usize> {
        let n = self.n;
        let index = |i: usize, j: usize| -> usize { (0..i).map(|r| n - r).sum::<usize>() + j - 1 };
        let total = (n * (n + 1)) / 2;
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != r {
                let next = parent[c];
                parent[c] = r;
                c = next;
            }
            r
        }
        for e in &self.edges {
            let ((i1, j1), (i2, j2)) = e.endpoints();
            let a = find(&mut parent, index(i1, j1));
            let b = find(&mut parent, index(i2, j2));
            if a != b {
                parent[a] = b;
            }
        }
        let mut anchors: BTreeMap<usize, usize> = BTreeMap::new();
        for j in 1..=n {
            let root = find(&mut parent, index(0, j));
            *anchors.entry(root).or_insert(0) += 1;
        }
        if anchors.values().any(|&c| c > 1) {
            return None;
        }
        let mut free = BTreeSet::new();
        for x in n..total {
            let root = find(&mut parent, x);
            if !anchors.contains_key(&root) {
                free.insert(root);
            }
        }
        Some(free.len())
    }
}

/// Every possible edge of one kind, in canonical order.
pub fn all_edges(n: usize, kind: EdgeKind) -> Vec<Edge> {
    let mut out = Vec::new();
    for row in 0..n.saturating_sub(1) {
        let cols: Vec<usize> = match kind {
            EdgeKind::L => (1..n - row).collect(),
            EdgeKind::R => (2..=n - row).collect(),
        };
        for col in cols {
            out.push(Edge { row, col, kind });
        }
    }
    out
}

/// Edges in reading order, each with the letter it contributes.
fn reading_order(n: usize, dual: bool) -> Vec<(Edge, usize)> {
    let mut out = Vec::new();
    for row in (0..n.saturating_sub(1)).rev() {
        if dual {
            for col in (2..=n - row).rev() {
                out.push((Edge::r(row, col), n - col + 1));
            }
        } else {
            for col in 1..n - row {
                out.push((Edge::l(row, col), row + col));
            }
        }
    }
    out
}

/// Depth-first search over edge subsets in reading order, keeping only
/// reduced prefixes of length at most `max_len`.
fn search_reduced(
    n: usize,
    dual: bool,
    max_len: usize,
    mut visit: impl FnMut(&Permutation, &[Edge]),
) {
    let order = reading_order(n, dual);
    let mut chosen = Vec::new();
    let w = Permutation::identity(n);
    fn go(
        order: &[(Edge, usize)],
        pos: usize,
        w: &Permutation,
        chosen: &mut Vec<Edge>,
        max_len: usize,
        visit: &mut dyn FnMut(&Permutation, &[Edge]),
    ) {
        if pos == order.len() {
            visit(w, chosen);
            return;
        }
        go(order, pos + 1, w, chosen, max_len, visit);
        let (edge, a) = order[pos];
        // appending s_a lengthens w iff w(a) < w(a+1)
        if chosen.len() < max_len && w.apply(a) < w.apply(a + 1) {
            let next = w.right_mul_simple(a).expect("letter in range");
            chosen.push(edge);
            go(order, pos + 1, &next, chosen, max_len, visit);
            chosen.pop();
        }
    }
    go(&order, 0, &w, &mut chosen, max_len, &mut visit);
}

/// All reduced Kogan faces (or dual Kogan faces) with `w(F) = w`, sorted.
pub fn enumerate_reduced_kogan(w: &Permutation, dual: bool) -> Vec<FaceDiagram> {
    let n = w.n();
    let target_len = w.length();
    let mut out = Vec::new();
    search_reduced(n, dual, target_len, |p, edges| {
        if edges.len() == target_len && p == w {
            out.push(FaceDiagram { n, edges: edges.iter().copied().collect() });
        }
    });
    out.sort();
    out
}

/// Every reduced Kogan (or dual Kogan) face of rank `n`, grouped by
/// permutation.
pub fn all_reduced_kogan(n: usize, dual: bool) -> BTreeMap<Permutation, Vec<FaceDiagram>> {
    let mut out: BTreeMap<Permutation, Vec<FaceDiagram>> = BTreeMap::new();
    search_reduced(n, dual, usize::MAX, |p, edges| {
        out.entry(p.clone())
            .or_default()
            .push(FaceDiagram { n, edges: edges.iter().copied().collect() });
    });
    for faces in out.values_mut() {
        faces.sort();
    }
    out
}

/// Schubert polynomial as the sum of `x(F)` over reduced Kogan faces.
pub fn schubert_fk(w: &Permutation) -> IntPoly {
    let n = w.n();
    let mut acc = Poly::zero(n.saturating_sub(1));
    for f in enumerate_reduced_kogan(w, false) {
        acc = &acc + &f.x_monomial();
    }
    acc
}

impl fmt::Display for FaceDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.edges.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{},{:?})", e.row, e.col, e.kind)?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::schubert_bgg;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn range_checks() {
        assert!(FaceDiagram::kogan(3, &[(0, 3)]).is_err());
        assert!(FaceDiagram::kogan(3, &[(2, 1)]).is_err());
        assert!(FaceDiagram::dual(3, &[(0, 1)]).is_err());
        assert!(FaceDiagram::dual(3, &[(1, 2)]).is_ok());
        assert_eq!(all_edges(4, EdgeKind::L).len(), dimension(4));
        assert_eq!(all_edges(4, EdgeKind::R).len(), dimension(4));
    }

    #[test]
    fn words_of_small_faces() {
        let f = FaceDiagram::kogan(3, &[(0, 1)]).unwrap();
        assert_eq!(f.word().unwrap().0, vec![1]);
        assert_eq!(f.permutation().unwrap(), Permutation::simple(3, 1).unwrap());
        let f = FaceDiagram::kogan(3, &[(0, 1), (1, 1)]).unwrap();
        assert_eq!(f.word().unwrap().0, vec![2, 1]);
        assert_eq!(f.permutation().unwrap(), Permutation::from_word(3, &[2, 1]).unwrap());
        assert!(FaceDiagram::whole(3).word().unwrap().is_empty());
        let mixed = FaceDiagram::new(3, [Edge::l(0, 1), Edge::r(0, 2)]).unwrap();
        assert_eq!(mixed.word(), Err(Error::MixedFace));
    }

    #[test]
    fn reducedness_of_faces() {
        assert!(FaceDiagram::kogan_vertex(3).is_reduced().unwrap());
        assert_eq!(FaceDiagram::kogan_vertex(3).permutation().unwrap(), Permutation::longest(3));
        let f = FaceDiagram::kogan(4, &[(0, 1), (2, 1)]).unwrap();
        assert_eq!(f.word().unwrap().0, vec![3, 1]);
        assert!(f.is_reduced().unwrap());
        let f = FaceDiagram::kogan(3, &[(0, 2), (1, 1)]).unwrap();
        assert_eq!(f.word().unwrap().0, vec![2, 2]);
        assert!(!f.is_reduced().unwrap());
    }

    #[test]
    fn enumeration_n3() {
        let s2 = Permutation::simple(3, 2).unwrap();
        let faces = enumerate_reduced_kogan(&s2, false);
        assert_eq!(
            faces,
            vec![FaceDiagram::kogan(3, &[(0, 2)]).unwrap(), FaceDiagram::kogan(3, &[(1, 1)]).unwrap()]
        );
        assert_eq!(enumerate_reduced_kogan(&Permutation::identity(3), false), vec![FaceDiagram::whole(3)]);
        let total: usize = Permutation::all(3).iter().map(|w| enumerate_reduced_kogan(w, false).len()).sum();
        assert_eq!(total, 7);
    }

    #[test]
    fn search_matches_brute_force_subsets() {
        // Filter all 2^d subsets directly, without pruning.
        for n in 2..=4 {
            for dual in [false, true] {
                let kind = if dual { EdgeKind::R } else { EdgeKind::L };
                let edges = all_edges(n, kind);
                let mut brute: BTreeMap<Permutation, Vec<FaceDiagram>> = BTreeMap::new();
                for mask in 0u32..(1 << edges.len()) {
                    let f = FaceDiagram::new(
                        n,
                        edges.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, e)| *e),
                    )
                    .unwrap();
                    if f.is_reduced().unwrap() {
                        brute.entry(f.permutation().unwrap()).or_default().push(f);
                    }
                }
                for v in brute.values_mut() {
                    v.sort();
                }
                assert_eq!(all_reduced_kogan(n, dual), brute);
                for w in Permutation::all(n) {
                    assert_eq!(enumerate_reduced_kogan(&w, dual), brute.get(&w).cloned().unwrap_or_default());
                }
            }
        }
    }

    #[test]
    fn fk_small_cases() {
        let x = |e: &[u32]| Poly::monomial(e.to_vec(), BigInt::one());
        assert_eq!(schubert_fk(&p(&[3, 1, 2])), x(&[2, 0]));
        assert_eq!(schubert_fk(&p(&[2, 3, 1])), x(&[1, 1]));
        assert_eq!(schubert_fk(&Permutation::identity(3)), x(&[0, 0]));
    }

    #[test]
    fn fk_equals_bgg_up_to_5() {
        for n in 1..=5 {
            for w in Permutation::all(n) {
                let fk = schubert_fk(&w);
                assert_eq!(fk, schubert_bgg(&w).unwrap(), "w = {}", w);
                assert_eq!(fk.coefficient_sum(), BigInt::from(enumerate_reduced_kogan(&w, false).len()));
            }
        }
    }

    #[test]
    fn mirror_preserves_permutation() {
        for n in 2..=4 {
            for (w, faces) in all_reduced_kogan(n, false) {
                for f in faces {
                    let d = f.mirror();
                    assert!(d.is_dual());
                    assert_eq!(d.permutation().unwrap(), w);
                    assert_eq!(d.mirror(), f);
                }
            }
        }
    }

    #[test]
    fn unique_kogan_vertex() {
        for n in 2..=4 {
            let top = enumerate_reduced_kogan(&Permutation::longest(n), false);
            assert_eq!(top, vec![FaceDiagram::kogan_vertex(n)]);
            assert_eq!(top[0].num_edges(), dimension(n));
        }
    }

    #[test]
    fn dimension_bounds() {
        assert_eq!(FaceDiagram::whole(3).dimension_bound(), Some(3));
        assert_eq!(FaceDiagram::kogan_vertex(3).dimension_bound(), Some(0));
        // x = a and x = b identify λ_1 and λ_2.
        let bad = FaceDiagram::new(3, [Edge::l(0, 1), Edge::r(0, 2)]).unwrap();
        assert_eq!(bad.dimension_bound(), None);
        // z = x and z = y merge x, y, z into one free class.
        let chain = FaceDiagram::new(3, [Edge::l(1, 1), Edge::r(1, 2)]).unwrap();
        assert_eq!(chain.dimension_bound(), Some(1));
    }
}
