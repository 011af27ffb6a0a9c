//! The polytope ring of `P_λ` through the action of differential operators
//! on the volume polynomial.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gz::{count_lattice_points, enumerate_reduced_kogan, face_volume, FaceDiagram, StrictWeight};
use crate::perm::Permutation;
use crate::poly::{apply_diff_operator, schubert_bgg, IntPoly, Poly, RatPoly};

/// `n(n-1)/2`, the dimension of the flag variety and of `P_λ`.
pub fn top_degree(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// `Π_{i<j} (λ_j - λ_i) / Π_{k<n} k!` in `λ_1..λ_n`.
pub fn volume_polynomial(n: usize) -> RatPoly {
    let mut p = Poly::<BigInt>::one(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let lj = Poly::var(n, j).expect("index in range");
            let li = Poly::var(n, i).expect("index in range");
            p = &p * &(&lj - &li);
        }
    }
    let norm: BigInt = (1..n).map(factorial).product();
    let inv = BigRational::new(BigInt::one(), norm);
    p.to_rational().scale(&inv)
}

/// `𝔖_w(-∂_1, .., -∂_n)` as a polynomial in the symbols `∂_i`.
pub fn schubert_operator(w: &Permutation) -> Result<IntPoly> {
    let s = schubert_bgg(w)?.with_nvars(w.n())?;
    Ok(if w.length() % 2 == 1 { -&s } else { s })
}

/// `D_1 .. D_k (vol)` for operators whose product is homogeneous of the top
/// degree.
pub fn pairing(n: usize, ops: &[IntPoly]) -> Result<BigRational> {
    let mut prod = Poly::<BigInt>::one(n);
    for op in ops {
        prod = &prod * op;
    }
    let d = top_degree(n);
    if prod.is_zero() {
        return Ok(BigRational::zero());
    }
    if !prod.is_homogeneous() || prod.degree() != Some(d as u32) {
        return Err(Error::DegreeMismatch { expected: d, got: prod.degree().unwrap_or(0) as usize });
    }
    apply_diff_operator(&prod, &volume_polynomial(n))?
        .as_constant()
        .ok_or_else(|| Error::Internal("pairing of top degree is not constant".into()))
}

/// `D_w = 𝔖_w(-∂) vol`, exact polynomial in `λ` of degree `d - l(w)`.
pub fn degree_polynomial(w: &Permutation) -> Result<RatPoly> {
    apply_diff_operator(&schubert_operator(w)?, &volume_polynomial(w.n()))
}

/// `Σ Vol(F_λ)` over reduced Kogan faces with `w(F) = w`, or with `dual`
/// over reduced dual Kogan faces with `w(F*) = w0 w w0`.
pub fn degree_by_volumes(w: &Permutation, lambda: &StrictWeight, dual: bool) -> Result<BigRational> {
    let n = w.n();
    if lambda.n() != n {
        return Err(Error::RankMismatch { expected: n, got: lambda.n() });
    }
    let target = if dual { w.w0_conjugate() } else { w.clone() };
    let dim = top_degree(n) - w.length();
    let mut total = BigRational::zero();
    for f in enumerate_reduced_kogan(&target, dual) {
        let (deg, vol) = face_volume(&f, lambda)?;
        if deg != dim {
            return Err(Error::Internal(format!("face {} has dimension {}, expected {}", f, deg, dim)));
        }
        total += vol;
    }
    Ok(total)
}

/// `deg_λ(X^w) = (d - l(w))! D_w(λ)`.
pub fn degree(w: &Permutation, lambda: &StrictWeight) -> Result<BigRational> {
    let point: Vec<BigRational> = lambda.values().iter().map(|&v| BigRational::from_integer(v.into())).collect();
    let dw = degree_polynomial(w)?.evaluate(&point)?;
    Ok(dw * BigRational::from_integer(factorial(top_degree(w.n()) - w.length())))
}

fn check_lengths(w: &Permutation, u: &Permutation, v: &Permutation) -> Result<()> {
    if w.n() != u.n() || w.n() != v.n() {
        return Err(Error::RankMismatch { expected: w.n(), got: if w.n() != u.n() { u.n() } else { v.n() } });
    }
    if w.length() + u.length() != v.length() {
        return Err(Error::LengthMismatch(format!(
            "l(w) + l(u) = {} but l(v) = {}",
            w.length() + u.length(),
            v.length()
        )));
    }
    Ok(())
}

fn to_integer(c: BigRational) -> Result<BigInt> {
    if !c.is_integer() || c.is_negative() {
        return Err(Error::NonIntegral(format!("{}", c)));
    }
    Ok(c.to_integer())
}

/// `c_{w,u}^v`: the pairing of `𝔖_w 𝔖_u 𝔖_{w0 v}` on the volume polynomial.
pub fn structure_constant(w: &Permutation, u: &Permutation, v: &Permutation) -> Result<BigInt> {
    check_lengths(w, u, v)?;
    let n = w.n();
    let dual = Permutation::longest(n).multiply(v)?;
    let ops = [schubert_operator(w)?, schubert_operator(u)?, schubert_operator(&dual)?];
    to_integer(pairing(n, &ops)?)
}

/// `∂_v (𝔖_w 𝔖_u)` with divided differences, independent of the volume
/// polynomial.
pub fn structure_constant_by_divided_differences(
    w: &Permutation,
    u: &Permutation,
    v: &Permutation,
) -> Result<BigInt> {
    check_lengths(w, u, v)?;
    let n = w.n();
    let mut f = &schubert_bgg(w)?.with_nvars(n)? * &schubert_bgg(u)?.with_nvars(n)?;
    // ∂_v = ∂_{a_1} .. ∂_{a_k} for v = s_{a_1} .. s_{a_k}
    for &a in v.reduced_word().0.iter().rev() {
        f = f.divided_difference(a)?;
    }
    let c = f.as_constant().ok_or_else(|| Error::Internal("∂_v of a degree l(v) product".into()))?;
    to_integer(BigRational::from_integer(c))
}

/// Monk's rule: the coefficient of `𝔖_v` in `𝔖_{s_k} 𝔖_w` is one iff
/// `v = w t_{ab}` with `a <= k < b` and `l(v) = l(w) + 1`.
pub fn monk_coefficient(k: usize, w: &Permutation, v: &Permutation) -> Result<BigInt> {
    let n = w.n();
    Permutation::simple(n, k)?;
    for a in 1..=k {
        for b in k + 1..=n {
            let mut image = w.image().to_vec();
            image.swap(a - 1, b - 1);
            let wt = Permutation::new(image)?;
            if wt.length() == w.length() + 1 && &wt == v {
                return Ok(BigInt::one());
            }
        }
    }
    Ok(BigInt::zero())
}

/// Pairs `(F, F*)` of a reduced Kogan face with `w(F) = w` and a reduced dual
/// Kogan face with `w(F*) = w0 u w0` whose joint equations determine a
/// single point of `P_λ`.
pub fn richardson_vertex_count(w: &Permutation, u: &Permutation, lambda: &StrictWeight) -> Result<u64> {
    let n = w.n();
    if u.n() != n || lambda.n() != n {
        return Err(Error::RankMismatch { expected: n, got: if u.n() != n { u.n() } else { lambda.n() } });
    }
    if w.length() + u.length() != top_degree(n) {
        return Err(Error::LengthMismatch(format!(
            "l(w) + l(u) = {}, expected {}",
            w.length() + u.length(),
            top_degree(n)
        )));
    }
    Ok(richardson_vertices(w, u, lambda)?.len() as u64)
}

/// The vertices counted by [`richardson_vertex_count`], as joint faces.
pub fn richardson_vertices(w: &Permutation, u: &Permutation, lambda: &StrictWeight) -> Result<Vec<FaceDiagram>> {
    let mut out = vec![];
    for f in enumerate_reduced_kogan(w, false) {
        for g in enumerate_reduced_kogan(&u.w0_conjugate(), true) {
            let h = f.intersect(&g)?;
            if h.dimension_bound() == Some(0) && count_lattice_points(&h, lambda.values())? > 0 {
                out.push(h);
            }
        }
    }
    Ok(out)
}
