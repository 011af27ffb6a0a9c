//! Exponential sums over coordinate parallelepipeds, paradiagrams, L-moves,
//! L-classes and paramitosis.

mod laurent;

pub use laurent::{star_dual, t_operator, Laurent};

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// `Π(μ, ν) = { y : μ_k <= y_k <= ν_k }`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Parallelepiped {
    mu: Vec<i64>,
    nu: Vec<i64>,
}

impl Parallelepiped {
    pub fn new(mu: Vec<i64>, nu: Vec<i64>) -> Result<Self> {
        if mu.len() != nu.len() {
            return Err(Error::InvalidParallelepiped("mu and nu differ in length".into()));
        }
        if let Some(k) = (0..mu.len()).find(|&k| mu[k] > nu[k]) {
            return Err(Error::InvalidParallelepiped(format!("mu_{} > nu_{}", k + 1, k + 1)));
        }
        Ok(Parallelepiped { mu, nu })
    }

    pub fn m(&self) -> usize {
        self.mu.len()
    }

    pub fn mu(&self) -> &[i64] {
        &self.mu
    }

    pub fn nu(&self) -> &[i64] {
        &self.nu
    }

    /// `C = Σ (μ_k + ν_k)`, the constant of the duality.
    pub fn c(&self) -> i64 {
        self.mu.iter().chain(&self.nu).sum()
    }

    /// Whether `μ_k < ν_k` for every `k`.
    pub fn is_full(&self) -> bool {
        self.mu.iter().zip(&self.nu).all(|(a, b)| a < b)
    }

    /// `S_Π` from the product of geometric series.
    pub fn s_pi(&self) -> Laurent {
        self.mu.iter().zip(&self.nu).fold(Laurent::one(), |acc, (&a, &b)| {
            let num = &Laurent::monomial(a, BigInt::one()) - &Laurent::monomial(b + 1, BigInt::one());
            let factor = num.div_one_minus_t().expect("geometric series");
            &acc * &factor
        })
    }

    /// `S_Π` summed point by point.
    pub fn s_pi_enumerated(&self) -> Laurent {
        let mut out = Laurent::zero();
        for y in box_points(&self.mu, &self.nu) {
            out.add_term(y.iter().sum(), BigInt::one());
        }
        out
    }

    /// The facet `y_1 = μ_1` (all of `Π` when `μ_1 = ν_1`).
    pub fn first_facet(&self) -> Result<Parallelepiped> {
        if self.mu.is_empty() {
            return Err(Error::InvalidParallelepiped("zero-dimensional".into()));
        }
        let mut nu = self.nu.clone();
        nu[0] = self.mu[0];
        Parallelepiped::new(self.mu.clone(), nu)
    }

    fn face_bounds(&self, p: &Paradiagram) -> Result<(Vec<i64>, Vec<i64>)> {
        if p.len() != self.m() {
            return Err(Error::InconsistentDiagram {
                diagram: p.to_string_lossy(),
                reason: format!("length {} but the parallelepiped has dimension {}", p.len(), self.m()),
            });
        }
        let mut lo = Vec::with_capacity(self.m());
        let mut hi = Vec::with_capacity(self.m());
        for (k, c) in p.cells.iter().enumerate() {
            let (a, b) = (self.mu[k], self.nu[k]);
            match c {
                Cell::Zero => {
                    lo.push(a);
                    hi.push(a);
                }
                Cell::One => {
                    lo.push(b);
                    hi.push(b);
                }
                Cell::Star => {
                    if a == b {
                        return Err(Error::InconsistentDiagram {
                            diagram: p.to_string_lossy(),
                            reason: format!("star at degenerate position {}", k + 1),
                        });
                    }
                    lo.push(a);
                    hi.push(b);
                }
            }
        }
        Ok((lo, hi))
    }

    /// Integer points of the closed face with paradiagram `p`.
    pub fn face_points(&self, p: &Paradiagram) -> Result<Vec<Vec<i64>>> {
        let (lo, hi) = self.face_bounds(p)?;
        Ok(box_points(&lo, &hi))
    }
}

fn box_points(lo: &[i64], hi: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for (&a, &b) in lo.iter().zip(hi) {
        let mut next = Vec::new();
        for prefix in &out {
            for v in a..=b {
                let mut y = prefix.clone();
                y.push(v);
                next.push(y);
            }
        }
        out = next;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cell {
    Zero,
    One,
    Star,
}

impl Cell {
    fn symbol(self) -> char {
        match self {
            Cell::Zero => '0',
            Cell::One => '1',
            Cell::Star => '*',
        }
    }
}

/// A word over `0`, `1`, `*`: the paradiagram of a face of `Π`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Paradiagram {
    cells: Vec<Cell>,
}

/// The split of a reduced paradiagram into an initial run of zeros, introns
/// `1^a * 0^b` and a final run of ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Paraboxes {
    pub initial: Paradiagram,
    pub introns: Vec<Paradiagram>,
    pub final_box: Paradiagram,
}

impl Paradiagram {
    pub fn new(cells: Vec<Cell>) -> Self {
        Paradiagram { cells }
    }

    /// The vertex `0^zeros 1^(m - zeros)`.
    pub fn vertex(m: usize, zeros: usize) -> Self {
        let mut cells = vec![Cell::Zero; zeros];
        cells.resize(m, Cell::One);
        Paradiagram { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Dimension of the face.
    pub fn stars(&self) -> usize {
        self.cells.iter().filter(|&&c| c == Cell::Star).count()
    }

    /// No `1` immediately followed by `0`.
    pub fn is_reduced(&self) -> bool {
        !self.cells.windows(2).any(|w| w == [Cell::One, Cell::Zero])
    }

    fn to_string_lossy(&self) -> String {
        self.cells.iter().map(|c| c.symbol()).collect()
    }

    fn require_reduced(&self) -> Result<()> {
        if self.is_reduced() {
            Ok(())
        } else {
            Err(Error::NotReduced(self.to_string_lossy()))
        }
    }

    pub fn decompose(&self) -> Result<Paraboxes> {
        self.require_reduced()?;
        let c = &self.cells;
        let mut pos = c.iter().take_while(|&&x| x == Cell::Zero).count();
        let initial = Paradiagram::new(c[..pos].to_vec());
        let mut introns = Vec::new();
        loop {
            let ones = c[pos..].iter().take_while(|&&x| x == Cell::One).count();
            if pos + ones == c.len() {
                break;
            }
            // reduced, so a run of ones ends in a star here
            let mut end = pos + ones + 1;
            end += c[end..].iter().take_while(|&&x| x == Cell::Zero).count();
            introns.push(Paradiagram::new(c[pos..end].to_vec()));
            pos = end;
        }
        Ok(Paraboxes { initial, introns, final_box: Paradiagram::new(c[pos..].to_vec()) })
    }

    /// Results of one L-move, `*0 -> 1*`.
    pub fn l_moves(&self) -> Vec<Paradiagram> {
        self.replacements([Cell::Star, Cell::Zero], [Cell::One, Cell::Star])
    }

    /// Results of one inverse L-move, `1* -> *0`.
    pub fn inverse_l_moves(&self) -> Vec<Paradiagram> {
        self.replacements([Cell::One, Cell::Star], [Cell::Star, Cell::Zero])
    }

    fn replacements(&self, from: [Cell; 2], to: [Cell; 2]) -> Vec<Paradiagram> {
        (0..self.len().saturating_sub(1))
            .filter(|&k| self.cells[k..k + 2] == from)
            .map(|k| {
                let mut cells = self.cells.clone();
                cells[k..k + 2].copy_from_slice(&to);
                Paradiagram { cells }
            })
            .collect()
    }

    /// Faces obtained by replacing a nonempty initial run of `q` zeros by
    /// an intron `1^a * 0^(q-1-a)`; empty when the initial parabox is.
    pub fn paramitosis(&self) -> Result<BTreeSet<Paradiagram>> {
        self.require_reduced()?;
        let q = self.cells.iter().take_while(|&&x| x == Cell::Zero).count();
        let mut out = BTreeSet::new();
        for a in 0..q {
            let mut cells = vec![Cell::One; a];
            cells.push(Cell::Star);
            cells.resize(q, Cell::Zero);
            cells.extend_from_slice(&self.cells[q..]);
            out.insert(Paradiagram { cells });
        }
        Ok(out)
    }

    /// Position-wise intersection of two closed faces, `None` if disjoint
    /// (for a full-dimensional parallelepiped).
    pub fn meet(&self, other: &Paradiagram) -> Option<Paradiagram> {
        if self.len() != other.len() {
            return None;
        }
        let mut cells = Vec::with_capacity(self.len());
        for (&a, &b) in self.cells.iter().zip(&other.cells) {
            cells.push(match (a, b) {
                (Cell::Star, x) | (x, Cell::Star) => x,
                (x, y) if x == y => x,
                _ => return None,
            });
        }
        Some(Paradiagram { cells })
    }

    /// Vertices of the closed face.
    pub fn vertices(&self) -> Vec<Paradiagram> {
        let mut out = vec![Vec::new()];
        for &c in &self.cells {
            let options: &[Cell] = match c {
                Cell::Star => &[Cell::Zero, Cell::One],
                Cell::Zero => &[Cell::Zero],
                Cell::One => &[Cell::One],
            };
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<Cell>| {
                    options.iter().map(move |&o| {
                        let mut v = prefix.clone();
                        v.push(o);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(Paradiagram::new).collect()
    }
}

impl fmt::Display for Paradiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_lossy())
    }
}

impl fmt::Debug for Paradiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self.to_string_lossy())
    }
}

impl FromStr for Paradiagram {
    type Err = Error;

    /// Parses a string over `0`, `1`, `*`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let cells = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(Cell::Zero),
                '1' => Ok(Cell::One),
                '*' => Ok(Cell::Star),
                _ => Err(Error::InvalidParadiagram(s.into())),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Paradiagram { cells })
    }
}

/// An L-equivalence class of reduced paradiagrams, stored by its members.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LClass {
    members: BTreeSet<Paradiagram>,
}

impl LClass {
    pub fn of(p: &Paradiagram) -> Result<Self> {
        p.require_reduced()?;
        let mut members = BTreeSet::new();
        let mut stack = vec![p.clone()];
        while let Some(d) = stack.pop() {
            if members.contains(&d) {
                continue;
            }
            stack.extend(d.l_moves());
            stack.extend(d.inverse_l_moves());
            members.insert(d);
        }
        Ok(LClass { members })
    }

    pub fn members(&self) -> &BTreeSet<Paradiagram> {
        &self.members
    }

    fn representative(&self) -> &Paradiagram {
        self.members.first().expect("classes are nonempty")
    }

    pub fn m(&self) -> usize {
        self.representative().len()
    }

    pub fn dimension(&self) -> usize {
        self.representative().stars()
    }

    pub fn paraboxes(&self) -> Paraboxes {
        self.representative().decompose().expect("members are reduced")
    }

    pub fn has_initial_parabox(&self) -> bool {
        !self.paraboxes().initial.is_empty()
    }

    /// The reduced vertices `0^a 1^(m-a)` of the class, as the numbers of
    /// zeros `a`: the first `i` introns filled with zeros and the rest with
    /// ones, `i = 0..=k`.
    pub fn simplex_vertices(&self) -> BTreeSet<usize> {
        let boxes = self.paraboxes();
        let mut a = boxes.initial.len();
        let mut out = BTreeSet::from([a]);
        for intron in &boxes.introns {
            a += intron.len();
            out.insert(a);
        }
        out
    }

    /// The class whose simplex face is spanned by `vertices`.
    pub fn from_vertices(m: usize, vertices: &BTreeSet<usize>) -> Result<Self> {
        let (Some(&first), Some(&last)) = (vertices.first(), vertices.last()) else {
            return Err(Error::InvalidParadiagram("empty vertex set".into()));
        };
        if last > m {
            return Err(Error::InvalidParadiagram(format!("vertex {} exceeds {}", last, m)));
        }
        let mut cells = vec![Cell::Zero; first];
        let mut prev = first;
        for &a in vertices.iter().skip(1) {
            cells.push(Cell::Star);
            cells.resize(a, Cell::Zero);
            prev = a;
        }
        cells.resize(m, Cell::One);
        debug_assert_eq!(prev, last);
        LClass::of(&Paradiagram::new(cells))
    }

    /// The constant of the parallelepiped swept by the class under the
    /// parabox sums: `C` plus `ν_k - μ_k` over the final parabox. It equals
    /// `C` exactly when the final parabox is empty.
    pub fn swept_constant(&self, pi: &Parallelepiped) -> i64 {
        let fin = self.paraboxes().final_box.len();
        let m = pi.m();
        pi.c() + (m - fin..m).map(|k| pi.nu[k] - pi.mu[k]).sum::<i64>()
    }

    /// `M(A)`: memberwise paramitosis, checked to form one class.
    pub fn paramitosis(&self) -> Result<Option<LClass>> {
        let mut faces = BTreeSet::new();
        for p in &self.members {
            faces.extend(p.paramitosis()?);
        }
        let Some(first) = faces.first() else {
            return Ok(None);
        };
        let class = LClass::of(first)?;
        if class.members != faces {
            return Err(Error::Internal(format!("paramitosis of {} is not one L-class", self.representative())));
        }
        Ok(Some(class))
    }
}

/// Every reduced paradiagram of length `m`.
pub fn reduced_paradiagrams(m: usize) -> Vec<Paradiagram> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Cell>| {
                [Cell::Zero, Cell::One, Cell::Star].into_iter().filter_map(move |c| {
                    if prefix.last() == Some(&Cell::One) && c == Cell::Zero {
                        return None;
                    }
                    let mut v = prefix.clone();
                    v.push(c);
                    Some(v)
                })
            })
            .collect();
    }
    out.into_iter().map(Paradiagram::new).collect()
}

/// All L-classes of length `m`, sorted.
pub fn all_l_classes(m: usize) -> Vec<LClass> {
    let mut seen: BTreeMap<Paradiagram, ()> = BTreeMap::new();
    let mut out = Vec::new();
    for p in reduced_paradiagrams(m) {
        if seen.contains_key(&p) {
            continue;
        }
        let class = LClass::of(&p).expect("reduced");
        for q in &class.members {
            seen.insert(q.clone(), ());
        }
        out.push(class);
    }
    out.sort();
    out
}

/// `Sc(A) = Σ t^σ(y)` over the integer points of the union of the closed
/// faces, by collecting the distinct points.
pub fn sc_sum(faces: &[Paradiagram], pi: &Parallelepiped) -> Result<Laurent> {
    let mut points = BTreeSet::new();
    for p in faces {
        points.extend(pi.face_points(p)?);
    }
    let mut out = Laurent::zero();
    for y in points {
        out.add_term(y.iter().sum(), BigInt::one());
    }
    Ok(out)
}

/// `Sc(A)` by inclusion-exclusion over intersections of faces.
pub fn sc_sum_inclusion_exclusion(faces: &[Paradiagram], pi: &Parallelepiped) -> Result<Laurent> {
    for p in faces {
        pi.face_bounds(p)?;
    }
    // 0 and 1 name the same value at a degenerate position
    let normalised: BTreeSet<Paradiagram> = faces
        .iter()
        .map(|p| {
            let cells = p
                .cells
                .iter()
                .enumerate()
                .map(|(k, &c)| if pi.mu[k] == pi.nu[k] { Cell::Zero } else { c })
                .collect();
            Paradiagram { cells }
        })
        .collect();
    let faces: Vec<&Paradiagram> = normalised.iter().collect();
    if faces.len() > 20 {
        return Err(Error::Internal("too many faces for inclusion-exclusion".into()));
    }
    let mut out = Laurent::zero();
    for mask in 1u32..(1 << faces.len()) {
        let mut chosen = faces.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, p)| *p);
        let first = chosen.next().expect("nonempty mask").clone();
        let Some(meet) = chosen.try_fold(first, |acc, p| acc.meet(p)) else {
            continue;
        };
        let (lo, hi) = pi.face_bounds(&meet)?;
        let term = Parallelepiped::new(lo, hi)?.s_pi();
        if mask.count_ones() % 2 == 1 {
            out = &out + &term;
        } else {
            out = &out - &term;
        }
    }
    Ok(out)
}

/// `Sc` of a union of L-classes.
pub fn sc_classes(classes: &[LClass], pi: &Parallelepiped) -> Result<Laurent> {
    let faces: Vec<Paradiagram> = classes.iter().flat_map(|c| c.members.iter().cloned()).collect();
    sc_sum(&faces, pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn pd(s: &str) -> Paradiagram {
        s.parse().unwrap()
    }

    fn l(terms: &[(i64, i64)]) -> Laurent {
        Laurent::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn s_pi_examples() {
        let p = Parallelepiped::new(vec![0], vec![1]).unwrap();
        assert_eq!(p.s_pi(), l(&[(0, 1), (1, 1)]));
        let p = Parallelepiped::new(vec![0, 0], vec![1, 1]).unwrap();
        assert_eq!(p.s_pi(), l(&[(0, 1), (1, 2), (2, 1)]));
        assert_eq!(p.s_pi(), p.s_pi_enumerated());
        let p = Parallelepiped::new(vec![2], vec![2]).unwrap();
        assert_eq!(p.s_pi(), l(&[(2, 1)]));
        assert!(Parallelepiped::new(vec![3], vec![2]).is_err());
    }

    #[test]
    fn decomposition_example() {
        let p = pd("000 111*00 *00 11* * 111");
        let b = p.decompose().unwrap();
        assert_eq!(b.initial, pd("000"));
        assert_eq!(b.introns, vec![pd("111*00"), pd("*00"), pd("11*"), pd("*")]);
        assert_eq!(b.final_box, pd("111"));
        let b = pd("00").decompose().unwrap();
        assert_eq!((b.initial, b.introns.len(), b.final_box), (pd("00"), 0, pd("")));
        let b = pd("*").decompose().unwrap();
        assert_eq!((b.initial, b.introns, b.final_box), (pd(""), vec![pd("*")], pd("")));
        assert!(pd("10").decompose().is_err());
        assert!("0a".parse::<Paradiagram>().is_err());
    }

    #[test]
    fn l_class_examples() {
        let c = LClass::of(&pd("*0")).unwrap();
        assert_eq!(c.members(), &BTreeSet::from([pd("*0"), pd("1*")]));
        assert_eq!(LClass::of(&pd("00")).unwrap().members().len(), 1);
        assert_eq!(LClass::of(&pd("*0*0")).unwrap().members().len(), 4);
    }

    #[test]
    fn l_class_is_product_of_star_positions() {
        for m in 0..=6 {
            for class in all_l_classes(m) {
                let boxes = class.paraboxes();
                let product: usize = boxes.introns.iter().map(|i| i.len()).product();
                assert_eq!(class.members().len(), product);
                for p in class.members() {
                    let b = p.decompose().unwrap();
                    assert_eq!(b.initial.len(), boxes.initial.len());
                    let lens: Vec<usize> = b.introns.iter().map(|i| i.len()).collect();
                    let lens0: Vec<usize> = boxes.introns.iter().map(|i| i.len()).collect();
                    assert_eq!(lens, lens0);
                }
            }
        }
    }

    #[test]
    fn paramitosis_examples() {
        assert_eq!(pd("00*0").paramitosis().unwrap(), BTreeSet::from([pd("*0*0"), pd("1**0")]));
        assert!(pd("1*").paramitosis().unwrap().is_empty());
        assert_eq!(pd("0").paramitosis().unwrap(), BTreeSet::from([pd("*")]));
        assert!(pd("10").paramitosis().is_err());
    }

    #[test]
    fn simplex_vertex_examples() {
        assert_eq!(LClass::of(&pd("*")).unwrap().simplex_vertices(), BTreeSet::from([0, 1]));
        assert_eq!(LClass::of(&pd("00")).unwrap().simplex_vertices(), BTreeSet::from([2]));
        let mut per_dim = [0usize; 4];
        for c in all_l_classes(3) {
            per_dim[c.dimension()] += 1;
        }
        assert_eq!(per_dim, [4, 6, 4, 1]);
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn classes_biject_onto_simplex_faces() {
        for m in 0..=6 {
            let classes = all_l_classes(m);
            assert_eq!(classes.len(), (1 << (m + 1)) - 1);
            let mut seen = BTreeSet::new();
            for c in &classes {
                let v = c.simplex_vertices();
                assert_eq!(v.len(), c.dimension() + 1);
                // v(A) is exactly the set of reduced vertices lying in A
                let contained: BTreeSet<usize> = c
                    .members()
                    .iter()
                    .flat_map(|p| p.vertices())
                    .filter(|v| v.is_reduced())
                    .map(|v| v.cells().iter().filter(|&&x| x == Cell::Zero).count())
                    .collect();
                assert_eq!(contained, v);
                assert_eq!(&LClass::from_vertices(m, &v).unwrap(), c);
                assert!(seen.insert(v));
            }
            for k in 0..=m {
                let count = classes.iter().filter(|c| c.dimension() == k).count();
                assert_eq!(count, binomial(m + 1, k + 1));
            }
        }
    }

    #[test]
    fn intersections_of_classes_are_classes() {
        // Compare the point sets of A ∩ B and of the class of v(A) ∩ v(B)
        // inside a cube with side 2.
        for m in 1..=4 {
            let pi = Parallelepiped::new(vec![0; m], vec![2; m]).unwrap();
            let classes = all_l_classes(m);
            let points = |c: &LClass| -> BTreeSet<Vec<i64>> {
                c.members().iter().flat_map(|p| pi.face_points(p).unwrap()).collect()
            };
            for a in &classes {
                for b in &classes {
                    let pa = points(a);
                    let pb = points(b);
                    let inter: BTreeSet<Vec<i64>> = pa.intersection(&pb).cloned().collect();
                    let v: BTreeSet<usize> =
                        a.simplex_vertices().intersection(&b.simplex_vertices()).copied().collect();
                    if v.is_empty() {
                        assert!(inter.is_empty());
                    } else {
                        assert_eq!(inter, points(&LClass::from_vertices(m, &v).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn paramitosis_of_class_is_cone_over_all_ones_vertex() {
        for m in 1..=6 {
            for c in all_l_classes(m) {
                let mitosis = c.paramitosis().unwrap();
                if c.has_initial_parabox() {
                    let mut v = c.simplex_vertices();
                    v.insert(0);
                    assert_eq!(mitosis.unwrap().simplex_vertices(), v);
                } else {
                    assert!(mitosis.is_none());
                }
            }
        }
    }

    #[test]
    fn sc_sum_examples() {
        let pi = Parallelepiped::new(vec![0, 0], vec![1, 1]).unwrap();
        assert_eq!(sc_sum(&[pd("11")], &pi).unwrap(), l(&[(2, 1)]));
        assert_eq!(sc_sum(&[pd("*0")], &pi).unwrap(), l(&[(0, 1), (1, 1)]));
        let both = [pd("*0"), pd("1*")];
        assert_eq!(sc_sum(&both, &pi).unwrap(), l(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(sc_sum_inclusion_exclusion(&both, &pi).unwrap(), l(&[(0, 1), (1, 1), (2, 1)]));
        let flat = Parallelepiped::new(vec![0, 1], vec![1, 1]).unwrap();
        assert!(sc_sum(&[pd("**")], &flat).is_err());
        assert!(sc_sum(&[pd("*")], &pi).is_err());
        assert_eq!(pd("*0").to_string(), "*0");
    }
}
