use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{int, ExactError, Scalar};

/// Which formal variable a polynomial is written in.
///
/// `Q` is the series variable of the generating functions, `X` the
/// edge-label variable of the Young lattice. Mixing them is a bug, so the
/// arithmetic operators assert that both operands agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Var {
    Q,
    X,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::X => "x",
        }
    }
}

/// Dense univariate polynomial with rational coefficients.
///
/// Invariant: no trailing zero coefficients, so the zero polynomial has an
/// empty coefficient vector and `degree()` returns `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    var: Var,
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(var: Var, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { var, coeffs }
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(var: Var) -> Self {
        Polynomial {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Scalar::one())
    }

    pub fn constant(var: Var, c: Scalar) -> Self {
        Self::new(var, vec![c])
    }

    /// `c * var^deg`
    pub fn monomial(var: Var, c: Scalar, deg: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(var, coeffs)
    }

    /// `1 - q^d`
    pub fn one_minus_q_pow(d: usize) -> Self {
        Self::one(Var::Q) - Self::monomial(Var::Q, Scalar::one(), d)
    }

    /// `x - c`
    pub fn x_minus(c: i64) -> Self {
        Self::from_ints(Var::X, &[-c, 1])
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Scalar::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial {
            var: self.var,
            coeffs,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Scale so that the leading coefficient is 1. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), ExactError> {
        assert_eq!(self.var, divisor.var, "variable mismatch");
        let dd = divisor.degree().ok_or(ExactError::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(self.var), self.clone()));
        }
        let mut quot = vec![Scalar::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(self.var, quot), Self::new(self.var, rem)))
    }

    /// Monic greatest common divisor (Euclid over the rationals).
    /// `gcd(0, 0)` is the zero polynomial.
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut a = a.monic();
        let mut b = b.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Roots among the integers in `lo..=hi`, with multiplicity, together with
    /// the cofactor left after dividing them all out.
    pub fn integer_roots_in(&self, lo: i64, hi: i64) -> (Vec<i64>, Polynomial) {
        let mut rest = self.clone();
        let mut roots = Vec::new();
        if rest.is_zero() {
            return (roots, rest);
        }
        for r in lo..=hi {
            while rest.degree().unwrap_or(0) > 0 && rest.eval(&int(r)).is_zero() {
                let lin = Polynomial::new(rest.var, vec![int(-r), Scalar::one()]);
                rest = rest.div_rem(&lin).expect("nonzero divisor").0;
                roots.push(r);
            }
        }
        (roots, rest)
    }

    /// The unique polynomial of degree below `points.len()` through the given
    /// points (Newton form, expanded). The abscissae must be distinct.
    pub fn interpolate(var: Var, points: &[(Scalar, Scalar)]) -> Polynomial {
        let n = points.len();
        let mut dd: Vec<Scalar> = points.iter().map(|p| p.1.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let den = &points[i].0 - &points[i - level].0;
                assert!(!den.is_zero(), "repeated interpolation node");
                dd[i] = (&dd[i] - &dd[i - 1]) / den;
            }
        }
        let mut acc = Polynomial::zero(var);
        for i in (0..n).rev() {
            let lin = Polynomial::new(var, vec![-points[i].0.clone(), Scalar::one()]);
            acc = &(&acc * &lin) + &Polynomial::constant(var, dd[i].clone());
        }
        acc
    }

    /// Fujiwara bound on the absolute value of any root, rounded up to an integer.
    pub fn root_bound(&self) -> Option<Scalar> {
        let lc = self.leading()?.abs();
        let n = self.coeffs.len() - 1;
        let mut best = BigInt::zero();
        for i in 1..=n {
            let ratio = self.coeffs[n - i].abs() / &lc;
            // smallest integer t with t^i >= ratio
            let (mut lo, mut hi) = (BigInt::zero(), ratio.ceil().to_integer() + 1u32);
            while lo < hi {
                let mid: BigInt = (&lo + &hi) >> 1;
                if Scalar::from_integer(mid.pow(i as u32)) >= ratio {
                    hi = mid;
                } else {
                    lo = mid + 1u32;
                }
            }
            best = best.max(lo);
        }
        Some(Scalar::from_integer(best * 2u32))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.var, rhs.var, "variable mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(self.var, coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.var, rhs.var, "variable mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(self.var, coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.var, rhs.var, "variable mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.var);
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(self.var, coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    /// Descending powers, e.g. `x^2 - 3*x + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let v = self.var.symbol();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
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
            let coef = if a.is_one() && i > 0 {
                String::new()
            } else if i > 0 {
                format!("{a}*")
            } else {
                a.to_string()
            };
            match i {
                0 => write!(f, "{coef}")?,
                1 => write!(f, "{coef}{v}")?,
                _ => write!(f, "{coef}{v}^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(Var::Q, c)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = q(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(q(&[0, 0]).degree(), None);
        assert!(q(&[]).is_zero());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = q(&[3, -1, 0, 5, 2]);
        let b = q(&[1, 1, 1]);
        let (qt, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&qt * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(a.div_rem(&q(&[])), Err(ExactError::DivisionByZero));
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // gcd(1 - q^4, 1 - q^6) = 1 - q^2, made monic: q^2 - 1
        let g = Polynomial::gcd(
            &Polynomial::one_minus_q_pow(4),
            &Polynomial::one_minus_q_pow(6),
        );
        assert_eq!(g, q(&[-1, 0, 1]));
    }

    #[test]
    fn integer_roots_are_peeled() {
        let p = &(&Polynomial::x_minus(2) * &Polynomial::x_minus(2)) * &Polynomial::x_minus(3);
        let p = p.scale(&int(15));
        let (roots, rest) = p.integer_roots_in(-5, 5);
        assert_eq!(roots, vec![2, 2, 3]);
        assert_eq!(rest, Polynomial::constant(Var::X, int(15)));
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let p = Polynomial::from_ints(Var::X, &[7, -1, 0, 2]);
        let pts: Vec<_> = (0..4).map(|i| (int(i), p.eval(&int(i)))).collect();
        assert_eq!(Polynomial::interpolate(Var::X, &pts), p);
    }

    #[test]
    fn display_descending() {
        let p = &Polynomial::x_minus(1) * &Polynomial::x_minus(2);
        assert_eq!(p.to_string(), "x^2 - 3*x + 2");
        assert_eq!(q(&[0, -1]).to_string(), "-q");
    }
}
