use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{ExactError, Polynomial, Scalar, Var};

/// A quotient of two polynomials in the same variable, kept canonical:
/// numerator and denominator are coprime and the denominator is monic.
/// The zero function is `0 / 1`.
///
/// With that normal form, `==` is exact equality of rational functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RfOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, ExactError> {
        assert_eq!(num.var(), den.var(), "variable mismatch");
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Polynomial, den: Polynomial) -> Self {
        let var = num.var();
        if num.is_zero() {
            return RationalFunction {
                num,
                den: Polynomial::one(var),
            };
        }
        let g = Polynomial::gcd(&num, &den);
        let (num, _) = num.div_rem(&g).expect("gcd is nonzero");
        let (den, _) = den.div_rem(&g).expect("gcd is nonzero");
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let var = p.var();
        RationalFunction {
            num: p,
            den: Polynomial::one(var),
        }
    }

    pub fn zero(var: Var) -> Self {
        Self::from_poly(Polynomial::zero(var))
    }

    /// `num / ∏ (1 - q^d)` over the given degrees.
    pub fn over_cyclotomic(num: Polynomial, degrees: &[usize]) -> Self {
        let den = degrees.iter().fold(Polynomial::one(Var::Q), |acc, &d| {
            &acc * &Polynomial::one_minus_q_pow(d)
        });
        Self::new(num, den).expect("product of 1 - q^d is nonzero")
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is a constant.
    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::canonical(num, &self.den * &other.den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) - &(&other.num * &self.den);
        Self::canonical(num, &self.den * &other.den)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::canonical(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        if other.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::canonical(
            &self.num * &other.den,
            &self.den * &other.num,
        ))
    }

    pub fn eval(&self, x: &Scalar) -> Result<Scalar, ExactError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }
}

/// Binary arithmetic on rational functions, dispatched on `op`.
pub fn rf_arith(
    a: &RationalFunction,
    b: &RationalFunction,
    op: RfOp,
) -> Result<RationalFunction, ExactError> {
    Ok(match op {
        RfOp::Add => a.add(b),
        RfOp::Sub => a.sub(b),
        RfOp::Mul => a.mul(b),
        RfOp::Div => a.div(b)?,
    })
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Polynomial {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn q(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(Var::Q, c)
    }

    #[test]
    fn canonical_form_is_reduced_and_monic() {
        // (1 - q^2) / (2 - 2q) = (1 + q) / 2
        let r = RationalFunction::new(q(&[1, 0, -1]), q(&[2, -2])).unwrap();
        assert_eq!(r.denominator(), &q(&[1]));
        assert_eq!(
            r.numerator(),
            &Polynomial::new(
                Var::Q,
                vec![crate::exact::ratio(1, 2), crate::exact::ratio(1, 2)]
            )
        );
        assert!(r.is_polynomial());
    }

    #[test]
    fn self_subtraction_is_zero() {
        let a = RationalFunction::new(q(&[1, 3, 0, -2]), q(&[1, -1, 1])).unwrap();
        let z = rf_arith(&a, &a, RfOp::Sub).unwrap();
        assert!(z.is_zero());
        assert_eq!(z, RationalFunction::zero(Var::Q));
    }

    #[test]
    fn division_by_zero_is_rejected() {
        let a = RationalFunction::from_poly(q(&[1, 1]));
        let z = RationalFunction::zero(Var::Q);
        assert_eq!(rf_arith(&a, &z, RfOp::Div), Err(ExactError::DivisionByZero));
        assert_eq!(
            RationalFunction::new(q(&[1]), q(&[])),
            Err(ExactError::DivisionByZero)
        );
    }

    #[test]
    fn normalizing_twice_changes_nothing() {
        let r = RationalFunction::new(q(&[0, 4, 4]), q(&[6, 0, -6])).unwrap();
        let again = RationalFunction::new(r.numerator().clone(), r.denominator().clone()).unwrap();
        assert_eq!(r, again);
    }

    #[test]
    fn eval_at_point() {
        let r = RationalFunction::new(q(&[1]), q(&[1, -1])).unwrap();
        assert_eq!(r.eval(&crate::exact::ratio(1, 2)).unwrap(), int(2));
        assert!(r.eval(&int(1)).is_err());
    }
}
