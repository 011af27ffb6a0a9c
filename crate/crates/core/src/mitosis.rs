//! Mirror mitosis on Kogan faces, fiber diagrams and ladder moves.
//!
//! Rows follow the mitosis convention: an edge in row `i` at column `j` is
//! the equation `λ_{i-1,j} = λ_{i,j}`, i.e. `Edge::l(i - 1, j)`. Ordinary
//! mitosis is the same operation on transposed diagrams.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gz::{Edge, FaceDiagram, GzPattern};
use crate::parabox::{Cell, Paradiagram, Parallelepiped};
use crate::perm::Permutation;

fn check_row(f: &FaceDiagram, i: usize) -> Result<()> {
    if i == 0 || i >= f.n() {
        return Err(Error::RowOutOfRange { row: i, n: f.n() });
    }
    Ok(())
}

fn require_reduced_kogan(f: &FaceDiagram) -> Result<()> {
    if !f.is_kogan() || !f.is_reduced()? {
        return Err(Error::NotReducedKogan);
    }
    Ok(())
}

/// Whether row `i` has an edge at column `j` (false outside the diagram).
fn has(f: &FaceDiagram, i: usize, j: usize) -> bool {
    i >= 1 && i < f.n() && j >= 1 && f.has_l(i - 1, j)
}

/// `M^-_i(F)`, the offspring of a reduced Kogan face at row `i`.
pub fn mirror_mitosis(f: &FaceDiagram, i: usize) -> Result<BTreeSet<FaceDiagram>> {
    check_row(f, i)?;
    require_reduced_kogan(f)?;
    let n = f.n();
    let mut out = BTreeSet::new();
    let k = (1..=n - i).take_while(|&j| has(f, i, j)).count();
    for j in 1..=k {
        if has(f, i + 1, j) {
            continue;
        }
        let mut child = f.without_edge(&Edge::l(i - 1, j));
        for jj in 1..j {
            // shift south-east when the slot in row i + 1 exists and is free
            if i + 1 < n && jj <= n - i - 1 && !has(f, i + 1, jj) {
                child = child.without_edge(&Edge::l(i - 1, jj)).with_edge(Edge::l(i, jj))?;
            }
        }
        out.insert(child);
    }
    Ok(out)
}

/// Union of `M^-_i(F)` over all reduced Kogan faces of `w`.
pub fn mitosis_of_permutation(w: &Permutation, i: usize) -> Result<BTreeSet<FaceDiagram>> {
    let mut out = BTreeSet::new();
    for f in crate::gz::enumerate_reduced_kogan(w, false) {
        out.extend(mirror_mitosis(&f, i)?);
    }
    Ok(out)
}

/// Type of a diagonal in the fiber diagram at row `i`: whether it carries
/// an edge between rows `i-1, i` and between rows `i, i+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal(pub bool, pub bool);

/// The diagonals `j = 1..n-i` of the fiber diagram at row `i`.
pub fn fiber_diagonals(f: &FaceDiagram, i: usize) -> Result<Vec<Diagonal>> {
    check_row(f, i)?;
    Ok((1..=f.n() - i).map(|j| Diagonal(has(f, i, j), has(f, i + 1, j))).collect())
}

fn cell_of(d: Diagonal) -> Option<Cell> {
    match d {
        Diagonal(false, false) => Some(Cell::Star),
        Diagonal(false, true) => Some(Cell::One),
        Diagonal(true, false) => Some(Cell::Zero),
        Diagonal(true, true) => None,
    }
}

/// The paradiagram of the fiber at row `i` for a generic complement:
/// diagonals `(0,0), (0,1), (1,0)` become `*, 1, 0` and `(1,1)` is dropped.
pub fn fiber_paradiagram(f: &FaceDiagram, i: usize) -> Result<Paradiagram> {
    let p = Paradiagram::new(fiber_diagonals(f, i)?.into_iter().filter_map(cell_of).collect());
    if f.is_kogan() && f.is_reduced()? && !p.is_reduced() {
        return Err(Error::Internal(format!("fiber paradiagram {} of reduced face {} is not reduced", p, f)));
    }
    Ok(p)
}

/// The fiber of `P_λ` through a pattern at row `i`, as a parallelepiped in
/// the coordinates `y_j = λ_{i,j}`.
pub fn fiber_parallelepiped(z: &GzPattern, i: usize) -> Result<Parallelepiped> {
    let n = z.n();
    if i == 0 || i >= n {
        return Err(Error::RowOutOfRange { row: i, n });
    }
    let mut mu = Vec::with_capacity(n - i);
    let mut nu = Vec::with_capacity(n - i);
    for j in 1..=n - i {
        let mut lo = z.get(i - 1, j);
        let mut hi = z.get(i - 1, j + 1);
        if i + 1 < n {
            if j > 1 {
                lo = lo.max(z.get(i + 1, j - 1));
            }
            if j < n - i {
                hi = hi.min(z.get(i + 1, j));
            }
        }
        mu.push(lo);
        nu.push(hi);
    }
    Parallelepiped::new(mu, nu)
}

/// The fiber of a face through one of its lattice points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    /// `Π(μ', ν')` in all `n - i` coordinates of row `i`.
    pub full: Parallelepiped,
    /// Non-degenerate coordinates (0-based), the ones kept in `diagram`.
    pub kept: Vec<usize>,
    /// `Π(μ', ν')` restricted to the kept coordinates.
    pub box_: Parallelepiped,
    /// Paradiagram of the fiber of the face, as a face of `box_`.
    pub diagram: Paradiagram,
}

/// The fiber of `F` at row `i` through the lattice point `z ∈ F`.
pub fn fiber_at(f: &FaceDiagram, i: usize, z: &GzPattern) -> Result<Fiber> {
    check_row(f, i)?;
    if !f.contains_pattern(z) {
        return Err(Error::InvalidFace(format!("pattern does not lie on {}", f)));
    }
    let full = fiber_parallelepiped(z, i)?;
    let mut kept = Vec::new();
    let mut cells = Vec::new();
    for j in 1..=f.n() - i {
        let (lo, hi) = (full.mu()[j - 1], full.nu()[j - 1]);
        if lo == hi {
            continue;
        }
        kept.push(j - 1);
        let up = has(f, i, j);
        let down = has(f, i + 1, j);
        cells.push(match (up, down) {
            (false, false) => Cell::Star,
            (true, false) => Cell::Zero,
            (false, true) => Cell::One,
            // both equations pin y_j between equal bounds, handled above
            (true, true) => return Err(Error::Internal("(1,1) diagonal on a nondegenerate coordinate".into())),
        });
    }
    let box_ = Parallelepiped::new(
        kept.iter().map(|&k| full.mu()[k]).collect(),
        kept.iter().map(|&k| full.nu()[k]).collect(),
    )?;
    Ok(Fiber { full, kept, box_, diagram: Paradiagram::new(cells) })
}

/// One ladder move at row `i` for each ladder-movable box
/// `(0,0) + k(1,1) + (1,0)`, which becomes `(0,1) + k(1,1) + (0,0)`.
pub fn ladder_moves(f: &FaceDiagram, i: usize) -> Result<BTreeSet<FaceDiagram>> {
    require_reduced_kogan(f)?;
    let d = fiber_diagonals(f, i)?;
    let mut out = BTreeSet::new();
    for start in 0..d.len() {
        if d[start] != Diagonal(false, false) {
            continue;
        }
        let mut end = start + 1;
        while end < d.len() && d[end] == Diagonal(true, true) {
            end += 1;
        }
        if end < d.len() && d[end] == Diagonal(true, false) {
            let (j0, j1) = (start + 1, end + 1);
            let g = f.without_edge(&Edge::l(i - 1, j1)).with_edge(Edge::l(i, j0))?;
            out.insert(g);
        }
    }
    Ok(out)
}

/// Inverse ladder moves: `(0,1) + k(1,1) + (0,0)` back to
/// `(0,0) + k(1,1) + (1,0)`.
pub fn inverse_ladder_moves(f: &FaceDiagram, i: usize) -> Result<BTreeSet<FaceDiagram>> {
    require_reduced_kogan(f)?;
    let d = fiber_diagonals(f, i)?;
    let mut out = BTreeSet::new();
    for start in 0..d.len() {
        if d[start] != Diagonal(false, true) {
            continue;
        }
        let mut end = start + 1;
        while end < d.len() && d[end] == Diagonal(true, true) {
            end += 1;
        }
        if end < d.len() && d[end] == Diagonal(false, false) {
            let (j0, j1) = (start + 1, end + 1);
            let g = f.without_edge(&Edge::l(i, j0)).with_edge(Edge::l(i - 1, j1))?;
            out.insert(g);
        }
    }
    Ok(out)
}

/// Edges of a Kogan face in reading order, bottom row first.
fn reading_edges(f: &FaceDiagram) -> Vec<Edge> {
    let mut edges: Vec<Edge> = f.edges().copied().collect();
    edges.sort_by(|a, b| b.row.cmp(&a.row).then(a.col.cmp(&b.col)));
    edges
}

/// For a reduced Kogan face `F` whose fiber paradiagram at row `i` has an
/// empty initial parabox and with `l(s_i w) < l(w)`, `w = w(F)`: a reduced
/// Kogan face `F'` with `w(F') = w`, a nonempty initial parabox and `F`
/// inside the union of `M^-_i(F')`.
///
/// First inverse ladder moves bring a star to the first kept diagonal
/// `q + 1` (they keep `w` and stay in the L-class). Then the edge
/// `λ_{i-1,q+1} = λ_{i,q+1}` is added. Its letter `s_{i+q}` lands in front
/// of the word `u` of the later edges of the same row, so `w_1` becomes
/// `w_1 t` with `t = u^{-1} s_{i+q} u`, and the edge of `w_2` removed is the
/// first one whose deletion turns `w_2` into `t w_2` (strong exchange).
pub fn global_witness(f: &FaceDiagram, i: usize) -> Result<FaceDiagram> {
    check_row(f, i)?;
    require_reduced_kogan(f)?;
    let n = f.n();
    let w = f.permutation()?;
    if !w.has_left_descent(i) {
        return Err(Error::WitnessPrecondition(format!("l(s_{} w) > l(w)", i)));
    }
    if !fiber_paradiagram(f, i)?.decompose()?.initial.is_empty() {
        return Err(Error::WitnessPrecondition("initial parabox is nonempty".into()));
    }
    let mut g = f.clone();
    let q = loop {
        let d = fiber_diagonals(&g, i)?;
        let q = d.iter().take_while(|&&x| x == Diagonal(true, true)).count();
        if d[q] == Diagonal(false, false) {
            break q;
        }
        // d[q] = (0,1): move the star of the first intron one step left
        let star = (q..d.len())
            .find(|&s| d[s] == Diagonal(false, false))
            .ok_or_else(|| Error::Internal("intron without a star".into()))?;
        let one = (q..star)
            .rev()
            .find(|&p| d[p] == Diagonal(false, true))
            .ok_or_else(|| Error::Internal("intron without a one".into()))?;
        g = g.without_edge(&Edge::l(i, one + 1)).with_edge(Edge::l(i - 1, star + 1))?;
    };
    let edges = reading_edges(&g);
    let u: Vec<usize> = edges.iter().filter(|e| e.row + 1 == i && e.col > q + 1).map(|e| e.row + e.col).collect();
    let u = Permutation::from_word(n, &u)?;
    let t = u.inverse().multiply(&Permutation::simple(n, i + q)?)?.multiply(&u)?;
    // w_2: diagram rows i - 1 up to the top, i.e. edges in facet rows < i - 1
    let w2_edges: Vec<Edge> = edges.into_iter().filter(|e| e.row + 1 < i).collect();
    let w2: Vec<usize> = w2_edges.iter().map(|e| e.row + e.col).collect();
    let target = t.multiply(&Permutation::from_word(n, &w2)?)?;
    for r in 0..w2.len() {
        let mut shorter = w2.clone();
        shorter.remove(r);
        if Permutation::from_word(n, &shorter)? == target {
            return g.without_edge(&w2_edges[r]).with_edge(Edge::l(i - 1, q + 1));
        }
    }
    Err(Error::WitnessPrecondition("no exchange position in w_2".into()))
}

/// The construction with `t = s_{i+q}` and no ladder moves, exactly as in
/// the classical argument; it can fail, see `global_witness`.
pub fn global_witness_naive(f: &FaceDiagram, i: usize) -> Result<FaceDiagram> {
    check_row(f, i)?;
    require_reduced_kogan(f)?;
    let n = f.n();
    let d = fiber_diagonals(f, i)?;
    let q = d.iter().take_while(|&&x| x == Diagonal(true, true)).count();
    let w2_edges: Vec<Edge> = reading_edges(f).into_iter().filter(|e| e.row + 1 < i).collect();
    let w2: Vec<usize> = w2_edges.iter().map(|e| e.row + e.col).collect();
    let target = Permutation::from_word(n, &w2)?;
    for r in 0..w2.len() {
        let mut shorter = w2.clone();
        shorter.remove(r);
        if Permutation::from_word(n, &shorter)?.left_mul_simple(i + q)? == target {
            return f.without_edge(&w2_edges[r]).with_edge(Edge::l(i - 1, q + 1));
        }
    }
    Err(Error::WitnessPrecondition(format!("s_{} is not a left descent of w_2", i + q)))
}
