//! Power series in an auxiliary variable `x`, truncated at a fixed order.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use super::poly::LaurentPoly;
use super::rational::ExactRational;
use super::univariate::UniPoly;
use super::LaurentError;

/// Coefficient rings a [`TruncatedSeries`] can carry.
pub trait Coefficient: Clone + PartialEq + Zero + One {
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn add_ref(&mut self, rhs: &Self);
    fn sub_ref(&mut self, rhs: &Self);
    fn from_bigint(c: BigInt) -> Self;
}

impl Coefficient for LaurentPoly {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_ref(&mut self, rhs: &Self) {
        *self -= rhs;
    }
    fn from_bigint(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Coefficient for UniPoly {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_ref(&mut self, rhs: &Self) {
        *self -= rhs;
    }
    fn from_bigint(c: BigInt) -> Self {
        UniPoly::from(c)
    }
}

impl Coefficient for ExactRational {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_ref(&mut self, rhs: &Self) {
        *self -= rhs;
    }
    fn from_bigint(c: BigInt) -> Self {
        ExactRational::from_integer(c)
    }
}

/// `Σ_{j=0}^{T} c_j x^j`, with everything of order `> T` discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<C = LaurentPoly> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    /// Series from explicit coefficients; the order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty coefficient vector.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least the x^0 coefficient"
        );
        TruncatedSeries { coeffs }
    }

    /// The constant `c`, truncated at `order`.
    pub fn constant(c: C, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = c;
        TruncatedSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    /// `1/(1 - r·x)`: the x^j coefficient is `r^j`.
    pub fn geometric(ratio: &C, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = C::one();
        for _ in 0..=order {
            coeffs.push(term.clone());
            term = term.mul_ref(ratio);
        }
        TruncatedSeries { coeffs }
    }

    /// `(1 + r·x)^n`: the x^j coefficient is `C(n, j)·r^j`.
    pub fn binomial(ratio: &C, n: u32, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = C::one();
        for j in 0..=order {
            if j as u64 > n as u64 {
                coeffs.push(C::zero());
                continue;
            }
            let c = C::from_bigint(binomial(BigInt::from(n), BigInt::from(j)));
            coeffs.push(c.mul_ref(&power));
            power = power.mul_ref(ratio);
        }
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// The x^j coefficient; `OrderExceeded` past the truncation order.
    pub fn coeff(&self, j: usize) -> Result<&C, LaurentError> {
        self.coeffs.get(j).ok_or(LaurentError::OrderExceeded {
            requested: j,
            order: self.order(),
        })
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &C) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x.mul_ref(c)).collect(),
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }
}

impl<C: Coefficient> Mul<&TruncatedSeries<C>> for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn mul(self, rhs: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl<C: Coefficient> Add<&TruncatedSeries<C>> for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn add(self, rhs: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        let order = self.order().min(rhs.order());
        let mut coeffs = self.coeffs[..=order].to_vec();
        for (c, r) in coeffs.iter_mut().zip(&rhs.coeffs) {
            c.add_ref(r);
        }
        TruncatedSeries { coeffs }
    }
}

impl<C: Coefficient> Sub<&TruncatedSeries<C>> for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn sub(self, rhs: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        let order = self.order().min(rhs.order());
        let mut coeffs = self.coeffs[..=order].to_vec();
        for (c, r) in coeffs.iter_mut().zip(&rhs.coeffs) {
            c.sub_ref(r);
        }
        TruncatedSeries { coeffs }
    }
}

/// `1/(1 - m·x)` for a monomial `m` in `u`, `v`.
pub fn series_geometric(m: &LaurentPoly, order: usize) -> Result<TruncatedSeries, LaurentError> {
    m.as_monomial()?;
    Ok(TruncatedSeries::geometric(m, order))
}

/// `(1 + ell·x)^n` for a monomial `ell` in `u`, `v`.
pub fn series_binomial(
    ell: &LaurentPoly,
    n: u32,
    order: usize,
) -> Result<TruncatedSeries, LaurentError> {
    ell.as_monomial()?;
    Ok(TruncatedSeries::binomial(ell, n, order))
}

pub fn series_coeff<C: Coefficient>(s: &TruncatedSeries<C>, j: usize) -> Result<C, LaurentError> {
    s.coeff(j).cloned()
}
