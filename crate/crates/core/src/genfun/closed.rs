//! Closed forms of `F^(k)_l` as rational functions in `q`.
//!
//! Only the cases with a known closed form are provided: all weights for
//! `k <= 4`, `l <= 3` for `k = 5`, and `l ∈ {0, 2, 4, 6}` for `k = 6`. Anything
//! else is an error rather than an extrapolation.

use super::GenfunError;
use crate::exact::{Polynomial, RationalFunction, Var};

fn q(coeffs: &[i64]) -> Polynomial {
    Polynomial::from_ints(Var::Q, coeffs)
}

fn qpow(d: usize) -> Polynomial {
    Polynomial::monomial(Var::Q, num_traits::One::one(), d)
}

/// Polynomial from sparse `(degree, coefficient)` terms.
fn terms(ts: &[(usize, i64)]) -> Polynomial {
    let deg = ts.iter().map(|t| t.0).max().unwrap_or(0);
    let mut c = vec![0i64; deg + 1];
    for &(d, v) in ts {
        c[d] += v;
    }
    q(&c)
}

fn over(num: Polynomial, den: &[usize]) -> RationalFunction {
    RationalFunction::over_cyclotomic(num, den)
}

pub fn f_closed(k: u32, l: u32) -> Result<RationalFunction, GenfunError> {
    let l = l as usize;
    let zero = || RationalFunction::zero(Var::Q);
    let rf = match k {
        0 if l == 0 => over(q(&[1]), &[1]),
        0 => zero(),
        1 => over(qpow(l), &[2]),
        2 if l.is_multiple_of(2) => over(qpow(l / 2), &[1, 2]),
        2 => zero(),
        3 => {
            let num = match l % 3 {
                0 => terms(&[(0, 1), (2, 1), (4, 1), (2 * l / 3 + 2, -1)]).shift(l / 3),
                1 => terms(&[(0, 1), (2, 2), ((2 * l + 4) / 3, -1)]).shift(l.div_ceil(3)),
                _ => terms(&[(0, 2), (2, 1), ((2 * l).div_ceil(3), -1)]).shift((l + 4) / 3),
            };
            over(num, &[2, 2, 4])
        }
        4 => match l % 4 {
            0 => over(
                terms(&[(0, 1), (2, 1), (l / 4 + 1, -1)]).shift(l / 4),
                &[1, 1, 2, 3],
            ),
            // The subtracted exponent is (l+2)/4; with (l+2)/4 + 1 the series
            // disagrees with enumeration from l = 2 onwards.
            2 => over(
                terms(&[(0, 1), (1, 1), ((l + 2) / 4, -1)]).shift((l + 2) / 4),
                &[1, 1, 2, 3],
            ),
            _ => zero(),
        },
        5 => match l {
            0 => over(
                q(&[1, 0, 1, 0, 6, 0, 9, 0, 12, 0, 9, 0, 6, 0, 1, 0, 1]),
                &[2, 2, 4, 6, 8],
            ),
            1 => over(
                q(&[1, 0, 3, 0, 5, 0, 5, 0, 5, 0, 3, 0, 1]).shift(1),
                &[2, 2, 2, 6, 8],
            ),
            2 => over(q(&[3, 0, 5, 0, 7, 0, 5, 0, 3]).shift(2), &[2, 2, 4, 4, 6]),
            3 => over(
                q(&[1, 0, 3, 0, 4, 0, 7, 0, 4, 0, 3, 0, 1]).shift(1),
                &[2, 2, 2, 6, 8],
            ),
            _ => return Err(GenfunError::NoClosedForm { k, l: l as u32 }),
        },
        6 => match l {
            0 => over(q(&[1, 0, 1, 3, 4, 4, 4, 3, 1, 0, 1]), &[1, 2, 2, 3, 4, 5]),
            2 => over(q(&[1, 2, 2, 1, 2, 2, 1]).shift(1), &[1, 2, 2, 2, 3, 5]),
            4 => over(
                q(&[1, 2, 2, 4, 4, 4, 2, 2, 1]).shift(1),
                &[1, 2, 2, 3, 4, 5],
            ),
            6 => over(q(&[1, 1, 2, 3, 2, 1, 1]).shift(1), &[1, 2, 2, 2, 3, 5]),
            _ => return Err(GenfunError::NoClosedForm { k, l: l as u32 }),
        },
        _ => return Err(GenfunError::NoClosedForm { k, l: l as u32 }),
    };
    Ok(rf)
}

/// True when [`f_closed`] has a formula for `(k, l)`.
pub fn has_closed_form(k: u32, l: u32) -> bool {
    match k {
        0..=4 => true,
        5 => l <= 3,
        6 => matches!(l, 0 | 2 | 4 | 6),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::series_expand;
    use crate::genfun::f_enum;

    #[test]
    fn availability_matches_errors() {
        for k in 0..9 {
            for l in 0..10 {
                assert_eq!(f_closed(k, l).is_ok(), has_closed_form(k, l), "k={k} l={l}");
            }
        }
    }

    #[test]
    fn f3_l2_branch() {
        // q^2 (2 + q^2 - q^2) = 2 q^2
        let rf = f_closed(3, 2).unwrap();
        assert_eq!(rf, over(q(&[0, 0, 2]), &[2, 2, 4]));
    }

    #[test]
    fn f4_odd_vanishes() {
        assert!(f_closed(4, 5).unwrap().is_zero());
    }

    #[test]
    fn closed_forms_expand_to_enumeration() {
        for k in 0..=6 {
            for l in 0..=8 {
                if let Ok(rf) = f_closed(k, l) {
                    assert_eq!(
                        series_expand(&rf, 24).unwrap(),
                        f_enum(k, l, 24),
                        "k={k} l={l}"
                    );
                }
            }
        }
    }
}
