//! Exact truncated power series and the counting formulas built on them.
//!
//! Every coefficient is an arbitrary-precision rational. Series that count
//! objects are checked to have nonnegative integer coefficients before they
//! leave this module.

mod formulas;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};

pub use formulas::{
    alternating_explicit, alternating_gf, binomial, boundary_asymptotic_constant,
    boundary_asymptotic_ratio, boundary_gf, boundary_square_explicit, catalan,
    count_guillotine_recursive, count_separable_explicit, guillotine_explicit, guillotine_gf,
    separable_axes, separable_count, wincc_gf, wincc_recurrence, window_avoiding_explicit,
    window_avoiding_gf,
};

/// A power series `c_0 + c_1 x + ... + c_N x^N + O(x^(N+1))` with exact
/// rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedPowerSeries {
    coeffs: Vec<BigRational>,
}

pub(crate) fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl TruncatedPowerSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedPowerSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * x^k`, truncated.
    pub fn monomial(c: BigRational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(BigRational::one(), 1, order)
    }

    /// Order is `coeffs.len() - 1`.
    pub fn from_coefficients(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return domain("a truncated series needs at least one coefficient");
        }
        Ok(TruncatedPowerSeries { coeffs })
    }

    pub fn from_integers(coeffs: &[i64]) -> Result<Self> {
        Self::from_coefficients(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigRational::zero());
        TruncatedPowerSeries { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedPowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut s = Self::zero(self.order());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k > self.order() {
                break;
            }
            s.coeffs[i + k] = c.clone();
        }
        s
    }

    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return domain("reciprocal of a series with zero constant term");
        }
        let inv = a0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv.clone());
        for k in 1..self.coeffs.len() {
            let mut acc = BigRational::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out[k - i];
                }
            }
            out.push(-(acc * &inv));
        }
        Ok(TruncatedPowerSeries { coeffs: out })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Number of leading coefficients on which the two series agree.
    pub fn agreement(&self, other: &Self) -> usize {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .take_while(|(a, b)| a == b)
            .count()
    }

    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::Consistency(format!(
                        "coefficient {k} is not an integer: {c}"
                    )))
                }
            })
            .collect()
    }

    /// Coefficients as counts; fails on a negative or fractional coefficient.
    pub fn to_counts(&self) -> Result<Vec<BigUint>> {
        self.to_integers()?
            .into_iter()
            .enumerate()
            .map(|(k, c)| {
                c.to_biguint()
                    .ok_or_else(|| Error::Consistency(format!("coefficient {k} is negative: {c}")))
            })
            .collect()
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Self {
        TruncatedPowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Debug for TruncatedPowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedPowerSeries[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

// Binary operations truncate to the smaller of the two orders.
impl Add for &TruncatedPowerSeries {
    type Output = TruncatedPowerSeries;

    fn add(self, rhs: Self) -> TruncatedPowerSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedPowerSeries {
    type Output = TruncatedPowerSeries;

    fn sub(self, rhs: Self) -> TruncatedPowerSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &TruncatedPowerSeries {
    type Output = TruncatedPowerSeries;

    fn neg(self) -> TruncatedPowerSeries {
        TruncatedPowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedPowerSeries {
    type Output = TruncatedPowerSeries;

    fn mul(self, rhs: Self) -> TruncatedPowerSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedPowerSeries { coeffs: out }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for TruncatedPowerSeries {
            type Output = TruncatedPowerSeries;
            fn $method(self, rhs: Self) -> TruncatedPowerSeries {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&TruncatedPowerSeries> for TruncatedPowerSeries {
            type Output = TruncatedPowerSeries;
            fn $method(self, rhs: &TruncatedPowerSeries) -> TruncatedPowerSeries {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

/// Solves `f = phi(f)` to order `order` by iterating from the constant
/// `seed`. `phi` must be an x-adic contraction: if two inputs agree on `k`
/// coefficients, their images agree on at least `k + 1`. A round that fails
/// to extend the agreement between successive iterates is reported as an
/// error.
pub fn solve_fixed_point<F>(phi: F, seed: BigRational, order: usize) -> Result<TruncatedPowerSeries>
where
    F: Fn(&TruncatedPowerSeries) -> TruncatedPowerSeries,
{
    let mut f = TruncatedPowerSeries::constant(seed, order);
    let mut previous: Option<usize> = None;
    for _ in 0..=order + 1 {
        let next = phi(&f);
        if next.order() != order {
            return Err(Error::Solver(format!(
                "map changed the order from {order} to {}",
                next.order()
            )));
        }
        let agree = f.agreement(&next);
        if agree > order {
            return Ok(next);
        }
        if previous.is_some_and(|p| agree <= p) {
            return Err(Error::Solver(format!(
                "iteration stalled: agreement stuck at {agree} coefficients"
            )));
        }
        previous = Some(agree);
        f = next;
    }
    Err(Error::Solver(
        "no fixed point within the iteration bound".into(),
    ))
}

/// Checks that every coefficient is a nonnegative integer.
pub(crate) fn counting(series: TruncatedPowerSeries) -> Result<TruncatedPowerSeries> {
    series.to_counts()?;
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedPowerSeries) -> Vec<i64> {
        s.to_integers()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn inverse_pair() {
        let one_minus_x = TruncatedPowerSeries::from_integers(&[1, -1, 0, 0, 0, 0]).unwrap();
        let inv = one_minus_x.reciprocal().unwrap();
        assert_eq!(&one_minus_x * &inv, TruncatedPowerSeries::one(5));
    }

    #[test]
    fn geometric() {
        let s = TruncatedPowerSeries::from_integers(&[1, -2, 0, 0, 0]).unwrap();
        assert_eq!(ints(&s.reciprocal().unwrap()), vec![1, 2, 4, 8, 16]);
    }

    #[test]
    fn binomial_cube() {
        let s = TruncatedPowerSeries::from_integers(&[1, 1, 0, 0, 0]).unwrap();
        assert_eq!(ints(&s.pow(3)), vec![1, 3, 3, 1, 0]);
        assert_eq!(s.pow(0), TruncatedPowerSeries::one(4));
    }

    #[test]
    fn zero_constant_term_has_no_reciprocal() {
        let s = TruncatedPowerSeries::x(3);
        assert!(matches!(s.reciprocal(), Err(Error::Domain(_))));
    }

    #[test]
    fn shift_and_scale() {
        let s = TruncatedPowerSeries::from_integers(&[1, 2, 3]).unwrap();
        assert_eq!(ints(&s.shift(1)), vec![0, 1, 2]);
        assert_eq!(ints(&s.shift(5)), vec![0, 0, 0]);
        assert_eq!(ints(&s.scale(&rat(-2))), vec![-2, -4, -6]);
        assert_eq!(ints(&(&s - &s)), vec![0, 0, 0]);
        assert_eq!(ints(&-&s), vec![-1, -2, -3]);
    }

    #[test]
    fn fixed_point_catalan() {
        // Catalan oracle by convolution.
        let mut c = vec![1i64];
        for n in 1..=5 {
            c.push((0..n).map(|k| c[k] * c[n - 1 - k]).sum());
        }
        let f = solve_fixed_point(
            |f| &TruncatedPowerSeries::one(5) + &(f * f).shift(1),
            rat(1),
            5,
        )
        .unwrap();
        assert_eq!(ints(&f), c);
        assert_eq!(c, vec![1, 1, 2, 5, 14, 42]);
    }

    #[test]
    fn fixed_point_schroder() {
        let f = solve_fixed_point(
            |f| &(&TruncatedPowerSeries::one(4) + &f.shift(1)) + &(f * f).shift(1),
            rat(0),
            4,
        )
        .unwrap();
        assert_eq!(ints(&f), vec![1, 2, 6, 22, 90]);
    }

    #[test]
    fn fixed_point_constant_map() {
        let c = BigRational::new(BigInt::from(7), BigInt::from(3));
        let f =
            solve_fixed_point(|_| TruncatedPowerSeries::constant(c.clone(), 3), rat(0), 3).unwrap();
        assert_eq!(f, TruncatedPowerSeries::constant(c, 3));
    }

    #[test]
    fn non_contraction_is_detected() {
        let err = solve_fixed_point(|f| f + &TruncatedPowerSeries::x(4), rat(1), 4);
        assert!(matches!(err, Err(Error::Solver(_))));
        let err = solve_fixed_point(|f| f.scale(&rat(2)), rat(1), 4);
        assert!(matches!(err, Err(Error::Solver(_))));
    }

    #[test]
    fn counts_reject_fractions_and_negatives() {
        let half = TruncatedPowerSeries::from_coefficients(vec![
            rat(1),
            BigRational::new(1.into(), 2.into()),
        ])
        .unwrap();
        assert!(half.to_counts().is_err());
        let neg = TruncatedPowerSeries::from_integers(&[1, -1]).unwrap();
        assert!(neg.to_counts().is_err());
        assert!(counting(neg).is_err());
    }
}
