use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gz::face::FaceDiagram;
use crate::gz::lattice::count_lattice_points;
use crate::gz::weight::StrictWeight;

/// `L(k) = #(k F ∩ Z^d)`, stored by ascending power of `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartPolynomial {
    coeffs: Vec<BigRational>,
}

impl EhrhartPolynomial {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, k: i64) -> BigRational {
        let k = BigRational::from_integer(BigInt::from(k));
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &k + c)
    }

    /// Newton forward-difference interpolation through `(k, values[k])`.
    fn interpolate(values: &[BigInt]) -> Self {
        let mut diffs: Vec<BigInt> = values.to_vec();
        let mut newton = Vec::with_capacity(values.len());
        for _ in 0..values.len() {
            newton.push(diffs[0].clone());
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        // Σ Δ^m L(0) * C(k, m) with C(k, m) = k(k-1)..(k-m+1)/m!
        let mut coeffs = vec![BigRational::zero(); values.len()];
        let mut basis = vec![BigRational::one()];
        for (m, d) in newton.iter().enumerate() {
            if m > 0 {
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                let shift = BigRational::from_integer(BigInt::from(m as i64 - 1));
                let scale = BigRational::from_integer(BigInt::from(m as i64));
                for (p, c) in basis.iter().enumerate() {
                    next[p + 1] += c / &scale;
                    next[p] -= c * &shift / &scale;
                }
                basis = next;
            }
            let d = BigRational::from_integer(d.clone());
            for (p, c) in basis.iter().enumerate() {
                coeffs[p] += c * &d;
            }
        }
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        EhrhartPolynomial { coeffs }
    }
}

/// The Ehrhart polynomial of a face of `P_λ`, using `k F = F_{kλ}`.
pub fn ehrhart(face: &FaceDiagram, lambda: &StrictWeight) -> Result<EhrhartPolynomial> {
    if face.n() != lambda.n() {
        return Err(Error::RankMismatch { expected: face.n(), got: lambda.n() });
    }
    let bound = face.dimension_bound().ok_or(Error::EmptyFace)?;
    if count_lattice_points(face, lambda.values())? == 0 {
        return Err(Error::EmptyFace);
    }
    let count = |k: usize| -> Result<BigInt> {
        Ok(BigInt::from(count_lattice_points(face, &lambda.dilated(k as i64))?))
    };
    let values = (0..=bound + 1).map(count).collect::<Result<Vec<_>>>()?;
    let poly = EhrhartPolynomial::interpolate(&values);
    let check = bound + 2;
    if poly.eval(check as i64) != BigRational::from_integer(count(check)?) {
        return Err(Error::Internal("lattice counts are not polynomial in the dilation".into()));
    }
    Ok(poly)
}

/// Dimension of the face and its volume, normalised to the lattice in its
/// affine span: the degree and leading coefficient of the Ehrhart
/// polynomial.
pub fn face_volume(face: &FaceDiagram, lambda: &StrictWeight) -> Result<(usize, BigRational)> {
    let p = ehrhart(face, lambda)?;
    Ok((p.degree(), p.leading()))
}

impl fmt::Display for EhrhartPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && !(p == 0 && first) {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            let a = c.abs();
            match p {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    f.write_str("k")?;
                    if p > 1 {
                        write!(f, "^{}", p)?;
                    }
                }
            }
        }
        Ok(())
    }
}
