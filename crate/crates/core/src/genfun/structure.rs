use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::GenfunError;
use crate::exact::{Polynomial, TruncatedSeries, Var};

/// Shape of a Hilbert series `∏ 1/(1 - q^{d_i})`, optionally times
/// `(1 - q^e)` for a single relation of degree `e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantStructure {
    pub generator_degrees: Vec<usize>,
    pub relation_degree: Option<usize>,
}

impl InvariantStructure {
    pub fn is_polynomial_algebra(&self) -> bool {
        self.relation_degree.is_none()
    }

    /// Expansion of the described Hilbert series through degree `n`.
    pub fn series(&self, n: usize) -> TruncatedSeries {
        let mut s = match self.relation_degree {
            Some(e) => TruncatedSeries::from_poly(&Polynomial::one_minus_q_pow(e), n),
            None => TruncatedSeries::from_poly(&Polynomial::one(Var::Q), n),
        };
        for &d in &self.generator_degrees {
            let den = TruncatedSeries::from_poly(&Polynomial::one_minus_q_pow(d), n);
            s = s.div(&den).expect("1 - q^d has unit constant term");
        }
        s
    }
}

/// Peel generators off `series` greedily: the lowest positive coefficient of
/// the residual names a generator degree, which is then divided out. A
/// residual of the form `1 - q^e` is read as one relation.
pub fn detect_structure(series: &TruncatedSeries) -> Result<InvariantStructure, GenfunError> {
    let n = series.order();
    if !series.coeff(0).is_one() {
        return Err(GenfunError::StructureNotRecognized { degree: 0 });
    }
    let mut residual = series.clone();
    let mut gens = Vec::new();
    let mut relation = None;
    while let Some(d) = (1..=n).find(|&i| !residual.coeff(i).is_zero()) {
        let c = residual.coeff(d);
        if c.is_positive() {
            gens.push(d);
            residual = residual.mul(&TruncatedSeries::from_poly(
                &Polynomial::one_minus_q_pow(d),
                n,
            ));
            continue;
        }
        let expected = TruncatedSeries::from_poly(&Polynomial::one_minus_q_pow(d), n);
        if residual != expected {
            let bad = (0..=n)
                .find(|&i| residual.coeff(i) != expected.coeff(i))
                .unwrap_or(d);
            return Err(GenfunError::StructureNotRecognized { degree: bad });
        }
        relation = Some(d);
        break;
    }
    let found = InvariantStructure {
        generator_degrees: gens,
        relation_degree: relation,
    };
    if found.series(n) != *series {
        return Err(GenfunError::StructureNotRecognized { degree: n });
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{series_expand, RationalFunction};

    #[test]
    fn recovers_polynomial_algebra() {
        let rf = RationalFunction::over_cyclotomic(Polynomial::one(Var::Q), &[2, 3, 3]);
        let s = series_expand(&rf, 30).unwrap();
        let st = detect_structure(&s).unwrap();
        assert_eq!(st.generator_degrees, vec![2, 3, 3]);
        assert!(st.is_polynomial_algebra());
    }

    #[test]
    fn recovers_hypersurface() {
        let rf = RationalFunction::over_cyclotomic(Polynomial::one_minus_q_pow(12), &[4, 6]);
        let s = series_expand(&rf, 30).unwrap();
        let st = detect_structure(&s).unwrap();
        assert_eq!(st.generator_degrees, vec![4, 6]);
        assert_eq!(st.relation_degree, Some(12));
    }

    #[test]
    fn rejects_other_shapes() {
        // 1 - 2 q^3 is neither form
        let s = TruncatedSeries::from_ints(&[1, 0, 0, -2, 0, 0]);
        assert!(matches!(
            detect_structure(&s),
            Err(GenfunError::StructureNotRecognized { .. })
        ));
    }
}
