//! Sparse bivariate Laurent polynomials in `u`, `v` over the big integers.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::ExactRational;
use super::univariate::UniPoly;
use super::LaurentError;

/// Exponent pair of the monomial `u^u v^v`.
///
/// Ordered by total degree, then by the `u` exponent. The order is
/// compatible with multiplication, so it serves as the term order for
/// long division as well as the canonical serialization order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub u: i64,
    pub v: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { u: 0, v: 0 };

    pub fn new(u: i64, v: i64) -> Self {
        Monomial { u, v }
    }

    pub fn degree(self) -> i64 {
        self.u + self.v
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial::new(self.u + other.u, self.v + other.v)
    }

    fn div(self, other: Monomial) -> Monomial {
        Monomial::new(self.u - other.u, self.v - other.v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.u).cmp(&(other.degree(), other.u))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Laurent polynomial `Σ c_{a,b} u^a v^b` with no stored zero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c · u^a v^b`.
    pub fn monomial(c: impl Into<BigInt>, a: i64, b: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(Monomial::new(a, b), c.into());
        p
    }

    pub fn u() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn v() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `(uv)^k`, with `k` possibly negative.
    pub fn uv_pow(k: i64) -> Self {
        Self::monomial(1, k, k)
    }

    /// Builds a polynomial from `(a, b, c)` triples, summing repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (a, b, c) in terms {
            p.add_term(Monomial::new(a, b), c.into());
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0, 0).is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `u^a v^b` (zero if absent).
    pub fn coeff(&self, a: i64, b: i64) -> BigInt {
        self.terms
            .get(&Monomial::new(a, b))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Terms in canonical order: total degree ascending, then `u` exponent ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &BigInt)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn leading_term(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// The single term of a monomial, or `NotMonomial`.
    pub fn as_monomial(&self) -> Result<(Monomial, &BigInt), LaurentError> {
        if self.terms.len() != 1 {
            return Err(LaurentError::NotMonomial {
                terms: self.terms.len(),
            });
        }
        Ok(self.leading_term().unwrap())
    }

    /// Smallest and largest exponent of `u` and of `v`, as `((u_min, u_max), (v_min, v_max))`.
    pub fn exponent_box(&self) -> Option<((i64, i64), (i64, i64))> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut bx = ((first.u, first.u), (first.v, first.v));
        for m in it {
            bx.0 .0 = bx.0 .0.min(m.u);
            bx.0 .1 = bx.0 .1.max(m.u);
            bx.1 .0 = bx.1 .0.min(m.v);
            bx.1 .1 = bx.1 .1.max(m.v);
        }
        Some(bx)
    }

    /// True when no term has a negative exponent.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.u >= 0 && m.v >= 0)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Multiplies every exponent pair by `(uv)^k`.
    pub fn shift_uv(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.u + k, m.v + k), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// The polynomial with `u` and `v` exchanged.
    pub fn swap_uv(&self) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in &self.terms {
            p.add_term(Monomial::new(m.v, m.u), c.clone());
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Long division against the leading term in canonical order. A quotient
    /// term whose exponents leave the box forced by the exponent ranges of
    /// dividend and divisor proves that no Laurent quotient exists.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        let Some(((du_lo, du_hi), (dv_lo, dv_hi))) = divisor.exponent_box() else {
            return Err(LaurentError::DivisionByZero);
        };
        let Some(((pu_lo, pu_hi), (pv_lo, pv_hi))) = self.exponent_box() else {
            return Ok(LaurentPoly::zero());
        };
        let (u_lo, u_hi) = (pu_lo - du_lo, pu_hi - du_hi);
        let (v_lo, v_hi) = (pv_lo - dv_lo, pv_hi - dv_hi);
        let (lead_m, lead_c) = divisor.leading_term().unwrap();
        let lead_c = lead_c.clone();

        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lead_m);
            let (qc, r) = c.div_rem(&lead_c);
            if !r.is_zero() || qm.u < u_lo || qm.u > u_hi || qm.v < v_lo || qm.v > v_hi {
                return Err(LaurentError::NotDivisible);
            }
            for (dm, dc) in &divisor.terms {
                rem.add_term(qm.mul(*dm), -(&qc * dc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Poincaré specialization `p(t, t)`.
    pub fn diagonal(&self) -> UniPoly {
        UniPoly::from_terms(self.terms.iter().map(|(m, c)| (m.degree(), c.clone())))
    }

    /// Exact value `p(u0, v0)`.
    pub fn eval(
        &self,
        u0: &ExactRational,
        v0: &ExactRational,
    ) -> Result<ExactRational, LaurentError> {
        let mut total = ExactRational::zero();
        for (m, c) in &self.terms {
            let fu = rational_pow(u0, m.u)?;
            let fv = rational_pow(v0, m.v)?;
            total += ExactRational::from_integer(c.clone()) * fu * fv;
        }
        Ok(total)
    }

    /// `(uv)^n · p(1/u, 1/v)`: sends `u^a v^b` to `u^(n-a) v^(n-b)`.
    pub fn palindrome_dual(&self, n: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(n - m.u, n - m.v), c.clone()))
                .collect(),
        }
    }
}

fn rational_pow(x: &ExactRational, e: i64) -> Result<ExactRational, LaurentError> {
    if e < 0 && x.is_zero() {
        return Err(LaurentError::ZeroAtPole);
    }
    let e = i32::try_from(e).map_err(|_| LaurentError::ExponentOverflow)?;
    Ok(x.pow(e))
}

/// Which specialization [`specialize`] performs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialization {
    Diagonal,
    Point(ExactRational, ExactRational),
}

/// Result of [`specialize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialized {
    Univariate(UniPoly),
    Value(ExactRational),
}

pub fn specialize(p: &LaurentPoly, mode: &Specialization) -> Result<Specialized, LaurentError> {
    match mode {
        Specialization::Diagonal => Ok(Specialized::Univariate(p.diagonal())),
        Specialization::Point(u0, v0) => p.eval(u0, v0).map(Specialized::Value),
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(*m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

/// Text form of a single monomial: `uv`, `(uv)^3`, `u^2 v`, `u v^-1`.
pub(crate) fn monomial_text(m: Monomial) -> String {
    if m.u == m.v {
        return match m.u {
            0 => String::new(),
            1 => "uv".to_string(),
            k => format!("(uv)^{k}"),
        };
    }
    let var = |name: &str, e: i64| match e {
        0 => None,
        1 => Some(name.to_string()),
        e => Some(format!("{name}^{e}")),
    };
    [var("u", m.u), var("v", m.v)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join(" ")
}

pub(crate) fn write_signed_terms<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (String, BigInt)>,
{
    let mut first = true;
    for (mono, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        match (mono.is_empty(), mag.is_one()) {
            (true, _) => write!(f, "{mag}")?,
            (false, true) => write!(f, "{mono}")?,
            (false, false) => write!(f, "{mag} {mono}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_terms(
            f,
            self.terms
                .iter()
                .map(|(m, c)| (monomial_text(*m), c.clone())),
        )
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn m2_lambda_g2() -> LaurentPoly {
        p(&[
            (0, 0, 1),
            (1, 1, 1),
            (2, 1, 2),
            (1, 2, 2),
            (2, 2, 1),
            (3, 3, 1),
        ])
    }

    #[test]
    fn binomial_product() {
        let a = LaurentPoly::one() + LaurentPoly::u();
        let b = LaurentPoly::one() + LaurentPoly::v();
        assert_eq!(&a * &b, p(&[(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]));
        assert!((&a * &LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn telescoping() {
        let a = p(&[(0, 0, 1), (1, 1, -1)]);
        let b = p(&[(0, 0, 1), (1, 1, 1), (2, 2, 1)]);
        assert_eq!(&a * &b, p(&[(0, 0, 1), (3, 3, -1)]));
    }

    #[test]
    fn powers() {
        let a = LaurentPoly::one() + LaurentPoly::u();
        assert_eq!(a.pow(2), p(&[(0, 0, 1), (1, 0, 2), (2, 0, 1)]));
        assert_eq!(m2_lambda_g2().pow(0), LaurentPoly::one());
        assert_eq!(
            LaurentPoly::uv_pow(1).pow(3),
            LaurentPoly::monomial(1, 3, 3)
        );
    }

    #[test]
    fn geometric_division() {
        let num = p(&[(0, 0, 1), (6, 6, -1)]);
        let den = p(&[(0, 0, 1), (1, 1, -1)]);
        let q = num.exact_div(&den).unwrap();
        assert_eq!(q, LaurentPoly::from_terms((0..6).map(|k| (k, k, 1))));
    }

    #[test]
    fn non_factor_is_rejected() {
        let num = p(&[(0, 0, 1), (1, 0, -1)]);
        let den = p(&[(0, 0, 1), (1, 1, -1)]);
        assert_eq!(num.exact_div(&den), Err(LaurentError::NotDivisible));
        assert_eq!(
            num.exact_div(&LaurentPoly::zero()),
            Err(LaurentError::DivisionByZero)
        );
    }

    #[test]
    fn fixed_determinant_genus_two_division() {
        let one = LaurentPoly::one();
        let a = &one + &LaurentPoly::monomial(1, 2, 1);
        let b = &one + &LaurentPoly::monomial(1, 1, 2);
        let c = &one + &LaurentPoly::u();
        let d = &one + &LaurentPoly::v();
        let num = &(&a.pow(2) * &b.pow(2)) - &(&LaurentPoly::uv_pow(2) * &(&c.pow(2) * &d.pow(2)));
        let den = &(&one - &LaurentPoly::uv_pow(1)) * &(&one - &LaurentPoly::uv_pow(2));
        assert_eq!(num.exact_div(&den).unwrap(), m2_lambda_g2());
    }

    #[test]
    fn laurent_division_with_negative_exponents() {
        let d = p(&[(-1, 0, 1), (0, 2, 3)]);
        let q = p(&[(0, -2, 2), (1, 1, -1), (3, 0, 5)]);
        assert_eq!((&q * &d).exact_div(&d).unwrap(), q);
    }

    #[test]
    fn specializations() {
        assert_eq!(
            m2_lambda_g2().diagonal(),
            UniPoly::from_terms(
                [(0, 1), (2, 1), (3, 4), (4, 1), (6, 1)].map(|(e, c)| (e, BigInt::from(c)))
            )
        );
        let one = ExactRational::from_integer(1.into());
        let prod =
            &(LaurentPoly::one() + LaurentPoly::u()) * &(LaurentPoly::one() + LaurentPoly::v());
        assert_eq!(
            prod.eval(&one, &one).unwrap(),
            ExactRational::from_integer(4.into())
        );
        let half = ExactRational::new(1.into(), 2.into());
        let third = ExactRational::new(1.into(), 3.into());
        assert_eq!(
            LaurentPoly::uv_pow(-1).eval(&half, &third).unwrap(),
            ExactRational::from_integer(6.into())
        );
        assert_eq!(
            LaurentPoly::uv_pow(-1).eval(&ExactRational::zero(), &third),
            Err(LaurentError::ZeroAtPole)
        );
        assert!(matches!(
            specialize(&LaurentPoly::uv_pow(1), &Specialization::Diagonal),
            Ok(Specialized::Univariate(_))
        ));
    }

    #[test]
    fn palindrome_duals() {
        let p1 = LaurentPoly::one() + LaurentPoly::uv_pow(1);
        assert_eq!(p1.palindrome_dual(1), p1);
        assert_eq!(
            LaurentPoly::one().palindrome_dual(2),
            LaurentPoly::uv_pow(2)
        );
        assert_eq!(m2_lambda_g2().palindrome_dual(3), m2_lambda_g2());
    }

    #[test]
    fn canonical_order_and_text() {
        assert_eq!(
            m2_lambda_g2().to_string(),
            "1 + uv + 2 u v^2 + 2 u^2 v + (uv)^2 + (uv)^3"
        );
        assert_eq!(p(&[(1, 0, -1), (0, 0, 1)]).to_string(), "1 - u");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p(&[(-1, 0, -3)]).to_string(), "-3 u^-1");
    }

    #[test]
    fn non_monomial_rejected() {
        assert_eq!(
            (LaurentPoly::one() + LaurentPoly::u())
                .as_monomial()
                .unwrap_err(),
            LaurentError::NotMonomial { terms: 2 }
        );
    }
}
