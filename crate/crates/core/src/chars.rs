//! Characters of face unions in the coordinates `u_i` (row sums), the
//! Weyl group action and Demazure operators.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gz::{enumerate_reduced_kogan, union_points, FaceDiagram, GzPattern, StrictWeight};
use crate::perm::Permutation;

/// `(u_1, .., u_{n-1})`.
pub type Weight = Vec<i64>;

/// `u_i = Σ_j λ_{i,j}` for `i = 1..n-1`.
pub fn weight_of_pattern(z: &GzPattern) -> Weight {
    (1..z.n()).map(|i| z.row_sum(i)).collect()
}

/// A finite sum `Σ m_u e^u`. `u_0` (the sum of the top row) is carried along
/// since the reflections depend on it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Character {
    n: usize,
    u0: i64,
    terms: BTreeMap<Weight, BigInt>,
}

impl Character {
    pub fn zero(n: usize, u0: i64) -> Self {
        Character { n, u0, terms: BTreeMap::new() }
    }

    pub fn exponential(n: usize, u0: i64, u: Weight) -> Result<Self> {
        let mut c = Character::zero(n, u0);
        c.add(u, BigInt::one())?;
        Ok(c)
    }

    pub fn from_patterns<'a>(n: usize, u0: i64, points: impl IntoIterator<Item = &'a GzPattern>) -> Result<Self> {
        let mut c = Character::zero(n, u0);
        for z in points {
            c.add(weight_of_pattern(z), BigInt::one())?;
        }
        Ok(c)
    }

    pub fn add(&mut self, u: Weight, m: BigInt) -> Result<()> {
        if u.len() + 1 != self.n {
            return Err(Error::RankMismatch { expected: self.n - 1, got: u.len() });
        }
        if m.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry(u.clone()).or_insert_with(BigInt::zero);
        *slot += m;
        if slot.is_zero() {
            self.terms.remove(&u);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn u0(&self) -> i64 {
        self.u0
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter()
    }

    pub fn mult(&self, u: &[i64]) -> BigInt {
        self.terms.get(u).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|m| m.is_positive())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            return Err(Error::LetterOutOfRange { letter: i, n: self.n });
        }
        Ok(())
    }

    /// `u_{i-1} + u_{i+1}` with `u_0` and `u_n = 0`.
    fn neighbours(&self, u: &[i64], i: usize) -> i64 {
        let left = if i == 1 { self.u0 } else { u[i - 2] };
        let right = if i + 1 == self.n { 0 } else { u[i] };
        left + right
    }

    fn same_frame(&self, other: &Character) -> Result<()> {
        if self.n != other.n || self.u0 != other.u0 {
            return Err(Error::RankMismatch { expected: self.n, got: other.n });
        }
        Ok(())
    }

    pub fn sub(&self, other: &Character) -> Result<Character> {
        self.same_frame(other)?;
        let mut out = self.clone();
        for (u, m) in &other.terms {
            out.add(u.clone(), -m)?;
        }
        Ok(out)
    }

    /// Multiplication by `e^{k α_i}`.
    pub fn shift(&self, i: usize, k: i64) -> Result<Character> {
        self.check_index(i)?;
        let mut out = Character::zero(self.n, self.u0);
        for (u, m) in &self.terms {
            let mut v = u.clone();
            v[i - 1] += k;
            out.add(v, m.clone())?;
        }
        Ok(out)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (u, m)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if !m.is_one() {
                write!(f, "{}*", m)?;
            }
            write!(f, "e^{:?}", u)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character(n={}, u0={}: {})", self.n, self.u0, self)
    }
}

/// `χ` of the union of the faces of `P_λ`: each lattice point once.
pub fn character_of_faces(lambda: &StrictWeight, faces: &[FaceDiagram]) -> Result<Character> {
    let points = union_points(faces, lambda.values())?;
    Character::from_patterns(lambda.n(), lambda.total(), &points)
}

/// `s_i` on every exponent: `u_i ↦ u_{i-1} + u_{i+1} - u_i`.
pub fn s_action(i: usize, c: &Character) -> Result<Character> {
    c.check_index(i)?;
    let mut out = Character::zero(c.n, c.u0);
    for (u, m) in &c.terms {
        let mut v = u.clone();
        v[i - 1] = c.neighbours(u, i) - u[i - 1];
        out.add(v, m.clone())?;
    }
    Ok(out)
}

/// The action of `w = s_{a_1} .. s_{a_k}`: `s_{a_k}` acts first.
pub fn w_action(w: &Permutation, c: &Character) -> Result<Character> {
    if w.n() != c.n {
        return Err(Error::RankMismatch { expected: c.n, got: w.n() });
    }
    let mut out = c.clone();
    for &a in w.reduced_word().0.iter().rev() {
        out = s_action(a, &out)?;
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    /// `T_i(f) = (f - e^{-α_i} s_i f) / (1 - e^{-α_i})`
    Plus,
    /// `T^-_i(f) = (f - e^{α_i} s_i f) / (1 - e^{α_i})`
    Minus,
}

/// Demazure operator, summing the string between each exponent and its
/// reflection along `α_i`.
pub fn demazure_t(i: usize, sign: Sign, c: &Character) -> Result<Character> {
    c.check_index(i)?;
    let mut out = Character::zero(c.n, c.u0);
    for (u, m) in &c.terms {
        let a = u[i - 1];
        let b = c.neighbours(u, i) - a;
        // Minus: (x^a - x^{b+1}) / (1 - x); Plus: (x^a - x^{b-1}) / (1 - x^{-1})
        let (lo, hi, neg) = match sign {
            Sign::Minus if a <= b => (a, b, false),
            Sign::Minus => (b + 1, a - 1, true),
            Sign::Plus if a >= b => (b, a, false),
            Sign::Plus => (a + 1, b - 1, true),
        };
        let m = if neg { -m } else { m.clone() };
        for e in lo..=hi {
            let mut v = u.clone();
            v[i - 1] = e;
            out.add(v, m.clone())?;
        }
    }
    Ok(out)
}

/// Checks `(1 - e^{±α_i}) T(f) = f - e^{±α_i} s_i f` termwise.
pub fn check_demazure(i: usize, sign: Sign, f: &Character, tf: &Character) -> Result<bool> {
    let k = if sign == Sign::Minus { 1 } else { -1 };
    let lhs = tf.sub(&tf.shift(i, k)?)?;
    let rhs = f.sub(&s_action(i, f)?.shift(i, k)?)?;
    Ok(lhs == rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Union of reduced Kogan faces with `w(F) = w`: `χ^w(λ)`.
    Faces,
    /// `T^-_{n-i_1} .. T^-_{n-i_l} e^{w0 λ}` for `w = w0 v`, `v = s_{i_1} .. s_{i_l}`: `χ^w(λ)`.
    Operators,
    /// Union of reduced dual Kogan faces with `w(F*) = w w0`: `χ_w(λ)`.
    DualFaces,
}

/// `e^{w0 λ}`, the exponential at the Kogan vertex:
/// `u_i = λ_1 + .. + λ_{n-i}`.
pub fn lowest_exponential(lambda: &StrictWeight) -> Result<Character> {
    let n = lambda.n();
    let v = lambda.values();
    let u = (1..n).map(|i| v[..n - i].iter().sum()).collect();
    Character::exponential(n, lambda.total(), u)
}

pub fn demazure_character(lambda: &StrictWeight, w: &Permutation, method: Method) -> Result<Character> {
    let n = lambda.n();
    if w.n() != n {
        return Err(Error::RankMismatch { expected: n, got: w.n() });
    }
    match method {
        Method::Faces => character_of_faces(lambda, &enumerate_reduced_kogan(w, false)),
        Method::Operators => {
            let v = Permutation::longest(n).multiply(w)?;
            demazure_character_with_word(lambda, w, &v.reduced_word().0)
        }
        Method::DualFaces => {
            let target = w.multiply(&Permutation::longest(n))?;
            character_of_faces(lambda, &enumerate_reduced_kogan(&target, true))
        }
    }
}

/// The operator route with a chosen reduced word of `v = w0 w`.
pub fn demazure_character_with_word(lambda: &StrictWeight, w: &Permutation, word: &[usize]) -> Result<Character> {
    let n = lambda.n();
    let v = Permutation::longest(n).multiply(w)?;
    if Permutation::from_word(n, word)? != v || word.len() != v.length() {
        return Err(Error::InvalidPermutation(format!("{:?} is not a reduced word of w0 w", word)));
    }
    let mut c = lowest_exponential(lambda)?;
    for &a in word.iter().rev() {
        c = demazure_t(n - a, Sign::Minus, &c)?;
    }
    Ok(c)
}

/// Lattice points in the union of `k F_λ` over reduced Kogan faces with
/// `w(F) = w`.
pub fn hilbert_function(lambda: &StrictWeight, w: &Permutation, k: i64) -> Result<u128> {
    if k < 1 {
        return Err(Error::Internal(format!("dilation {} is not positive", k)));
    }
    crate::gz::count_union(&enumerate_reduced_kogan(w, false), &lambda.dilated(k))
}

/// `Π_{i<j} (λ_j - λ_i + j - i) / (j - i)`, the dimension of `V_λ`.
pub fn weyl_dimension(lambda: &StrictWeight) -> BigInt {
    let v = lambda.values();
    let n = v.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= BigInt::from(v[j] - v[i] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    num / den
}
