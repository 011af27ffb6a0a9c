//! Exact multivariate polynomials with dense exponent-vector keys, divided
//! difference operators and Schubert polynomials.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Debug};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Coefficient ring: exact, with a canonical embedding of the integers.
pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + From<BigInt>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + From<BigInt>
{
}

pub type Exponents = Vec<u32>;

/// A polynomial in `nvars` variables. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<C> {
    nvars: usize,
    terms: BTreeMap<Exponents, C>,
}

pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;

/// Graded lexicographic comparison: total degree first, then lexicographic.
pub fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl<C: Coeff> Poly<C> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exps: Exponents, c: C) -> Self {
        let mut p = Poly { nvars: exps.len(), terms: BTreeMap::new() };
        p.add_term(exps, c);
        p
    }

    /// The variable `x_i`, 1-indexed.
    pub fn var(nvars: usize, i: usize) -> Result<Self> {
        if i == 0 || i > nvars {
            return Err(Error::VariableOutOfRange { index: i, nvars });
        }
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Ok(Self::monomial(e, C::one()))
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, C)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::RankMismatch { expected: nvars, got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &C)> {
        self.terms.iter()
    }

    /// Terms in ascending graded lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex(a.0, b.0));
        v
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// The constant term when the polynomial is constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, exps: Exponents, c: C) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(old) => {
                let sum = old.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Re-embeds into `nvars` variables, padding with zero exponents or
    /// dropping trailing variables that do not occur.
    pub fn with_nvars(&self, nvars: usize) -> Result<Self> {
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            if e.iter().skip(nvars).any(|&x| x != 0) {
                return Err(Error::VariableOutOfRange { index: nvars + 1, nvars });
            }
            let mut ne: Exponents = e.iter().take(nvars).copied().collect();
            ne.resize(nvars, 0);
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Interchanges `x_i` and `x_j` (1-indexed).
    pub fn swap_vars(&self, i: usize, j: usize) -> Result<Self> {
        for k in [i, j] {
            if k == 0 || k > self.nvars {
                return Err(Error::VariableOutOfRange { index: k, nvars: self.nvars });
            }
        }
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne.swap(i - 1, j - 1);
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Multiplies by `x_j`.
    fn shift_var(&self, j: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[j - 1] += 1;
            out.add_term(ne, c.clone());
        }
        out
    }

    /// The divided difference `A_i f = (f - s_i f) / (x_i - x_{i+1})`.
    ///
    /// The quotient is computed by synthetic division in `x_i`; a nonzero
    /// remainder is reported as an internal error.
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.nvars {
            return Err(Error::VariableOutOfRange { index: i, nvars: self.nvars });
        }
        let numerator = self - &self.swap_vars(i, i + 1)?;
        if numerator.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        // numerator = sum_k g_k x_i^k with g_k free of x_i.
        let top = numerator.terms.keys().map(|e| e[i - 1]).max().unwrap_or(0) as usize;
        let mut slices = vec![Self::zero(self.nvars); top + 1];
        for (e, c) in &numerator.terms {
            let k = e[i - 1] as usize;
            let mut ne = e.clone();
            ne[i - 1] = 0;
            slices[k].add_term(ne, c.clone());
        }
        // Horner: q_{k-1} = g_k + x_{i+1} q_k, remainder g_0 + x_{i+1} q_0.
        let mut quotient = Self::zero(self.nvars);
        let mut carry = Self::zero(self.nvars);
        for k in (1..=top).rev() {
            carry = &slices[k] + &carry.shift_var(i + 1);
            for (e, c) in &carry.terms {
                let mut ne = e.clone();
                ne[i - 1] = (k - 1) as u32;
                quotient.add_term(ne, c.clone());
            }
        }
        let remainder = &slices[0] + &carry.shift_var(i + 1);
        if !remainder.is_zero() {
            return Err(Error::InexactDivision("divided difference"));
        }
        Ok(quotient)
    }

    /// Evaluates at a point.
    pub fn evaluate(&self, point: &[C]) -> Result<C> {
        if point.len() != self.nvars {
            return Err(Error::RankMismatch { expected: self.nvars, got: point.len() });
        }
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    term = term * x.clone();
                }
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "polynomials over different variable counts");
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        self.check_same(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        self.check_same(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        self.check_same(rhs);
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        self.scale(&-C::one())
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let constant = e.iter().all(|&x| x == 0);
            if constant || !c.is_one() {
                write!(f, "{}", c)?;
            }
            let mut first = constant || !c.is_one();
            for (v, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                if first {
                    f.write_str("*")?;
                }
                first = true;
                write!(f, "x{}", v + 1)?;
                if p > 1 {
                    write!(f, "^{}", p)?;
                }
            }
        }
        Ok(())
    }
}

impl<C: Debug> Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poly").field("nvars", &self.nvars).field("terms", &self.terms).finish()
    }
}

impl IntPoly {
    pub fn to_rational(&self) -> RatPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    /// `true` when every coefficient is positive.
    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Sum of coefficients, i.e. the value at `(1, .., 1)`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().cloned().sum()
    }
}

/// Acts by the differential operator `op(∂_1, .., ∂_n)` on `f(λ_1, .., λ_n)`.
pub fn apply_diff_operator<C: Coeff>(op: &IntPoly, f: &Poly<C>) -> Result<Poly<C>> {
    if op.nvars() != f.nvars() {
        return Err(Error::RankMismatch { expected: f.nvars(), got: op.nvars() });
    }
    let mut out = Poly::zero(f.nvars());
    for (alpha, a) in op.terms() {
        for (beta, b) in f.terms() {
            if alpha.iter().zip(beta).any(|(x, y)| x > y) {
                continue;
            }
            // ∂^α λ^β = Π β!/(β-α)! λ^(β-α)
            let mut factor = BigInt::one();
            for (&x, &y) in alpha.iter().zip(beta) {
                for k in 0..x {
                    factor *= BigInt::from(y - k);
                }
            }
            let e = alpha.iter().zip(beta).map(|(x, y)| y - x).collect();
            out.add_term(e, C::from(factor * a.clone()) * b.clone());
        }
    }
    Ok(out)
}

/// The staircase monomial `x_1^{n-1} x_2^{n-2} .. x_{n-1}` in `n` variables.
pub fn staircase(n: usize) -> IntPoly {
    let e = (0..n).map(|k| (n - 1 - k) as u32).collect();
    Poly::monomial(e, BigInt::one())
}

/// Schubert polynomial by divided differences from the staircase monomial,
/// using the canonical reduced word of `w^{-1} w0`. The result lives in
/// `x_1..x_{n-1}`.
pub fn schubert_bgg(w: &Permutation) -> Result<IntPoly> {
    let n = w.n();
    let v = w.inverse().multiply(&Permutation::longest(n))?;
    schubert_bgg_with_word(w, &v.reduced_word())
}

/// As [`schubert_bgg`] with a caller-chosen reduced word `[i_1..i_k]` of
/// `w^{-1} w0`; computes `A_{i_1} .. A_{i_k}` applied to the staircase.
pub fn schubert_bgg_with_word(w: &Permutation, word: &[usize]) -> Result<IntPoly> {
    let n = w.n();
    let v = w.inverse().multiply(&Permutation::longest(n))?;
    if Permutation::from_word(n, word)? != v || word.len() != v.length() {
        return Err(Error::InvalidPermutation(alloc::format!(
            "{:?} is not a reduced word of w^-1 w0",
            word
        )));
    }
    let mut f = staircase(n);
    for &i in word.iter().rev() {
        f = f.divided_difference(i)?;
    }
    f.with_nvars(n.saturating_sub(1))
}
