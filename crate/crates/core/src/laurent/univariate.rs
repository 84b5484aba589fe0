use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::write_signed_terms;
use super::LaurentError;

/// Laurent polynomial in a single variable `t`; the codomain of the
/// Poincaré specialization `u = v = t`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = UniPoly::zero();
        p.add_term(e, c.into());
        p
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut p = UniPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Builds `Σ c_k t^k` from coefficients starting at `t^0`.
    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(k, c)| (k as i64, c.into())),
        )
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
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
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(UniPoly::one(), |acc, _| &acc * self)
    }

    /// Exact quotient by `divisor`, or `NotDivisible`.
    pub fn exact_div(&self, divisor: &UniPoly) -> Result<UniPoly, LaurentError> {
        let (Some(d_lo), Some(d_hi)) = (divisor.low_degree(), divisor.degree()) else {
            return Err(LaurentError::DivisionByZero);
        };
        let (Some(p_lo), Some(p_hi)) = (self.low_degree(), self.degree()) else {
            return Ok(UniPoly::zero());
        };
        let lead = divisor.terms[&d_hi].clone();
        let mut rem = self.clone();
        let mut quot = UniPoly::zero();
        while let Some(top) = rem.degree() {
            let qe = top - d_hi;
            let (qc, r) = rem.terms[&top].div_rem(&lead);
            if !r.is_zero() || qe < p_lo - d_lo || qe > p_hi - d_hi {
                return Err(LaurentError::NotDivisible);
            }
            for (de, dc) in &divisor.terms {
                rem.add_term(qe + de, -(&qc * dc));
            }
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for UniPoly {
    type Output = UniPoly;
    fn add(mut self, rhs: UniPoly) -> UniPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&UniPoly> for UniPoly {
    fn add_assign(&mut self, rhs: &UniPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&UniPoly> for UniPoly {
    fn sub_assign(&mut self, rhs: &UniPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for UniPoly {
    type Output = UniPoly;
    fn sub(mut self, rhs: UniPoly) -> UniPoly {
        self -= &rhs;
        self
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: UniPoly) -> UniPoly {
        &self * &rhs
    }
}

impl Zero for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for UniPoly {
    fn one() -> Self {
        UniPoly::one()
    }
}

impl From<BigInt> for UniPoly {
    fn from(c: BigInt) -> Self {
        UniPoly::monomial(c, 0)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(
            f,
            self.terms.iter().map(|(e, c)| {
                let mono = match *e {
                    0 => String::new(),
                    1 => "t".to_string(),
                    e => format!("t^{e}"),
                };
                (mono, c.clone())
            }),
        )
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}
