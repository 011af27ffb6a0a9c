use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial in one variable `t` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    terms: BTreeMap<i64, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::monomial(0, BigInt::one())
    }

    /// `c t^e`.
    pub fn monomial(e: i64, c: BigInt) -> Self {
        let mut f = Laurent::zero();
        f.add_term(e, c);
        f
    }

    /// `t^lo + .. + t^hi`, zero when `lo > hi`.
    pub fn range(lo: i64, hi: i64) -> Self {
        let mut f = Laurent::zero();
        for e in lo..=hi {
            f.add_term(e, BigInt::one());
        }
        f
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut f = Laurent::zero();
        for (e, c) in terms {
            f.add_term(e, c);
        }
        f
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Terms by ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact quotient by `1 - t`; fails unless `f(1) = 0`.
    pub fn div_one_minus_t(&self) -> Result<Self> {
        // g = f / (1 - t) satisfies g_e - g_{e-1} = f_e.
        let (Some(&lo), Some(&hi)) = (self.terms.keys().next(), self.terms.keys().next_back()) else {
            return Ok(Laurent::zero());
        };
        let mut g = Laurent::zero();
        let mut acc = BigInt::zero();
        for e in lo..=hi {
            acc += self.coeff(e);
            g.add_term(e, acc.clone());
        }
        if !acc.is_zero() {
            return Err(Error::InexactDivision("division by 1 - t"));
        }
        Ok(g)
    }
}

/// `f*(t) = t^C f(1/t)`.
pub fn star_dual(f: &Laurent, c: i64) -> Laurent {
    Laurent { terms: f.terms.iter().map(|(&e, v)| (c - e, v.clone())).collect() }
}

/// `T(f) = (f - t f*) / (1 - t)`; the quotient is always exact.
pub fn t_operator(f: &Laurent, c: i64) -> Result<Laurent> {
    let num = f - &star_dual(f, c).shift(1);
    num.div_one_minus_t()
        .map_err(|_| Error::Internal("nonzero remainder in the T operator".into()))
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self + &(-rhs)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (&a, c) in &self.terms {
            for (&b, d) in &rhs.terms {
                out.add_term(a + b, c * d);
            }
        }
        out
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if e == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{}", e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn l(terms: &[(i64, i64)]) -> Laurent {
        Laurent::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn arithmetic_and_display() {
        let f = l(&[(0, 1), (1, 1)]);
        assert_eq!((&f * &f), l(&[(0, 1), (1, 2), (2, 1)]));
        assert_eq!((&f - &f), Laurent::zero());
        assert_eq!(l(&[(-1, -2), (0, 1), (3, 1)]).to_string(), "-2*t^-1 + 1 + t^3");
        assert_eq!(Laurent::range(2, 1), Laurent::zero());
    }

    #[test]
    fn division_by_one_minus_t() {
        let f = l(&[(0, 1), (3, -1)]);
        assert_eq!(f.div_one_minus_t().unwrap(), Laurent::range(0, 2));
        assert!(l(&[(0, 1)]).div_one_minus_t().is_err());
    }

    #[test]
    fn dual_examples() {
        let f = l(&[(0, 1), (1, 1)]);
        assert_eq!(star_dual(&f, 1), f);
        assert_eq!(star_dual(&Laurent::one(), 3), l(&[(3, 1)]));
        let sq = l(&[(0, 1), (1, 2), (2, 1)]);
        assert_eq!(star_dual(&sq, 2), sq);
        assert_eq!(star_dual(&star_dual(&l(&[(-2, 5), (7, 1)]), 4), 4), l(&[(-2, 5), (7, 1)]));
    }

    #[test]
    fn t_examples() {
        let f = l(&[(0, 1), (1, 1)]);
        assert_eq!(t_operator(&f, 2).unwrap(), l(&[(0, 1), (1, 2), (2, 1)]));
        assert_eq!(t_operator(&Laurent::one(), 0).unwrap(), Laurent::one());
        let once = t_operator(&f, 2).unwrap();
        assert_eq!(t_operator(&once, 2).unwrap(), once);
    }
}
