//! Truncated formal power series in one variable with exact coefficients.
//!
//! [`Series`] carries rational coefficients and is what the public formulas
//! hand out. [`IntSeries`] is the integer specialisation used by the product
//! kernels, where every intermediate is integral and gcd work is wasted.
//! Multiplication is the plain quadratic Cauchy product; orders up to a few
//! thousand are the intended range.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact coefficient rings the series code runs over.
pub trait Coefficient:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + From<BigInt> + for<'a> AddAssign<&'a Self>
{
    fn mul_ref(&self, other: &Self) -> Self;
}

impl Coefficient for BigInt {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Coefficient for BigRational {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

/// Coefficients c_0 ..= c_N of a power series in u, everything above u^N dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

pub type Series = TruncatedSeries<BigRational>;
pub type IntSeries = TruncatedSeries<BigInt>;

impl<T: Coefficient> TruncatedSeries<T> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = T::one();
        s
    }

    /// `coeffs[k]` is the coefficient of u^k; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "a truncated series needs at least the constant term".into(),
            ));
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Result<&T> {
        self.coeffs.get(n).ok_or(Error::OutOfRange {
            index: n,
            order: self.order(),
        })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    /// Cauchy product, truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![T::zero(); order + 1];
        for (p, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (q, b) in other.coeffs.iter().enumerate().take(order + 1 - p) {
                if !b.is_zero() {
                    out[p + q] += &a.mul_ref(b);
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// `self^e` by repeated squaring; `e = 0` gives the constant 1.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// The factor (1 - u^d)^e for any integer `e`, truncated at `order`.
    pub fn binomial_factor(d: usize, e: &BigInt, order: usize) -> Result<Self> {
        let mut s = Self::one(order);
        s.mul_binomial_factor(d, e)?;
        Ok(s)
    }

    /// Multiplies in place by (1 - u^d)^e, touching only degrees that are
    /// shifted by multiples of d.
    pub fn mul_binomial_factor(&mut self, d: usize, e: &BigInt) -> Result<()> {
        if d == 0 {
            return Err(Error::InvalidArgument(
                "binomial factor needs d >= 1".into(),
            ));
        }
        let order = self.order();
        let factor: Vec<T> = binomial_coefficients(e, order / d)
            .into_iter()
            .map(T::from)
            .collect();
        if factor.len() == 1 {
            return Ok(());
        }
        // Descending n keeps every self[n - d k] read still unmodified.
        for n in (d..=order).rev() {
            let mut acc = self.coeffs[n].clone();
            for (k, b) in factor.iter().enumerate().skip(1).take(n / d) {
                let a = &self.coeffs[n - d * k];
                if !a.is_zero() && !b.is_zero() {
                    acc += &b.mul_ref(a);
                }
            }
            self.coeffs[n] = acc;
        }
        Ok(())
    }
}

/// The coefficients of (1 - x)^e up to x^len, for any integer `e`:
/// (-1)^k C(e, k), which for negative e is C(|e| + k - 1, k).
pub fn binomial_coefficients(e: &BigInt, len: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len + 1);
    let mut c = BigInt::one();
    out.push(c.clone());
    for k in 1..=len {
        // c_k = c_{k-1} (k - 1 - e) / k, exact
        c *= BigInt::from(k - 1) - e;
        let (q, r) = c.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        c = q;
        out.push(c.clone());
    }
    out
}

impl IntSeries {
    pub fn to_rational(&self) -> Series {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }
}

impl Series {
    /// The same series over the integers, if every coefficient is integral.
    pub fn to_integer(&self) -> Option<IntSeries> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(|coeffs| TruncatedSeries { coeffs })
    }

    /// True if no coefficient has a denominator.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl<T: Coefficient> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn add(self, other: Self) -> TruncatedSeries<T> {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| {
                let mut c = self.coeffs[k].clone();
                c += &other.coeffs[k];
                c
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl<T: Coefficient> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn neg(self) -> TruncatedSeries<T> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().cloned().map(Neg::neg).collect(),
        }
    }
}

impl<T: Coefficient> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn sub(self, other: Self) -> TruncatedSeries<T> {
        self + &(-other)
    }
}

impl<T: Coefficient> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn mul(self, other: Self) -> TruncatedSeries<T> {
        TruncatedSeries::mul(self, other)
    }
}
