use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Polynomial, RationalFunction, Scalar, Var};

/// A power series in `q` known exactly through degree `order()`.
///
/// Binary operations truncate to the smaller of the two orders, so a result
/// never claims more precision than its inputs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Scalar>,
}

impl TruncatedSeries {
    /// Coefficients for degrees `0..coeffs.len()`. Panics on an empty vector,
    /// which would have no truncation order.
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least one coefficient"
        );
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Scalar::zero(); order + 1],
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| super::int(c)).collect())
    }

    pub fn from_counts(counts: &[u128]) -> Self {
        Self::new(
            counts
                .iter()
                .map(|&c| Scalar::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn from_poly(p: &Polynomial, order: usize) -> Self {
        Self::new((0..=order).map(|i| p.coeff(i)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self::new(self.coeffs[..=order].to_vec())
    }

    /// The known coefficients as a polynomial in `q`.
    pub fn to_poly(&self) -> Polynomial {
        Polynomial::new(Var::Q, self.coeffs.clone())
    }

    /// Integer coefficients, if all of them are integers that fit an `i64`.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new(
            (0..=n)
                .map(|i| &self.coeffs[i] + &other.coeffs[i])
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new(
            (0..=n)
                .map(|i| &self.coeffs[i] - &other.coeffs[i])
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![Scalar::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        let c0 = &other.coeffs[0];
        if c0.is_zero() {
            return Err(ExactError::ZeroConstantTerm);
        }
        let inv = c0.recip();
        let n = self.order().min(other.order());
        let mut out: Vec<Scalar> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut s = self.coeffs[i].clone();
            for j in 1..=i {
                s -= &other.coeffs[j] * &out[i - j];
            }
            out.push(s * &inv);
        }
        Ok(Self::new(out))
    }

    /// Multiply by `q^k`, keeping the same order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        Self::new(
            (0..=n)
                .map(|i| {
                    if i >= k {
                        self.coeffs[i - k].clone()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// Maclaurin expansion of `rf` through degree `n`.
pub fn series_expand(rf: &RationalFunction, n: usize) -> Result<TruncatedSeries, ExactError> {
    let den = TruncatedSeries::from_poly(rf.denominator(), n);
    if den.coeffs[0].is_zero() {
        return Err(ExactError::PoleAtOrigin);
    }
    TruncatedSeries::from_poly(rf.numerator(), n).div(&den)
}

/// Smallest degree carrying a negative coefficient.
pub fn first_negative_coefficient(s: &TruncatedSeries) -> Option<usize> {
    s.coeffs.iter().position(Signed::is_negative)
}

impl fmt::Display for TruncatedSeries {
    /// Ascending powers with an explicit error term: `1 + q^4 + O(q^9)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{a}*q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{a}*q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}
