//! Weight generating functions `F^(k)_l(q)` of `Sym L(k)`.
//!
//! The coefficient of `q^n` in `F^(k)_l` is the dimension of the weight-`l`
//! space of `Sym^n L(k)`. Three independent routes are provided (direct
//! enumeration, the recursion in `k`, and closed forms) together with the
//! invariant Hilbert series `F_0 - F_2` and the freeness quotients.

mod closed;
mod enumerate;
mod recursion;
mod structure;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{first_negative_coefficient, series_expand, ExactError, TruncatedSeries};

pub use closed::{f_closed, has_closed_form};
pub use enumerate::{f_enum, weight_counts, DiophantineSolutions};
pub use recursion::f_recur;
pub use structure::{detect_structure, InvariantStructure};

/// Truncation degree used when a caller does not choose one.
pub const DEFAULT_DEGREE: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenfunError {
    #[error("no closed form known for k={k}, l={l}")]
    NoClosedForm { k: u32, l: u32 },
    #[error("the recursion needs k >= 2 (got k={k})")]
    RecursionNeedsK2 { k: u32 },
    #[error("structure not recognized (residual fails at degree {degree})")]
    StructureNotRecognized { degree: usize },
    #[error("methods disagree for k={k}, l={l} at degree {degree}")]
    Mismatch { k: u32, l: u32, degree: usize },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Enum,
    Recur,
    Closed,
}

/// `F^(k)_l` through degree `n` by the chosen method.
pub fn f_series(method: Method, k: u32, l: u32, n: usize) -> Result<TruncatedSeries, GenfunError> {
    match method {
        Method::Enum => Ok(f_enum(k, l, n)),
        Method::Recur => f_recur(k, l, n),
        Method::Closed => Ok(series_expand(&f_closed(k, l)?, n)?),
    }
}

fn first_difference(a: &TruncatedSeries, b: &TruncatedSeries) -> Option<usize> {
    (0..=a.order().min(b.order())).find(|&i| a.coeff(i) != b.coeff(i))
}

/// `F_l - F_{l+2}` by enumeration, cross-checked against the closed forms
/// when both are available.
pub fn peeled(k: u32, l: u32, n: usize) -> Result<TruncatedSeries, GenfunError> {
    let s = f_enum(k, l, n).sub(&f_enum(k, l + 2, n));
    if has_closed_form(k, l) && has_closed_form(k, l + 2) {
        let rf = f_closed(k, l)?.sub(&f_closed(k, l + 2)?);
        let c = series_expand(&rf, n)?;
        if let Some(degree) = first_difference(&s, &c) {
            return Err(GenfunError::Mismatch { k, l, degree });
        }
    }
    Ok(s)
}

/// Hilbert series of the invariants of `Sym L(k)`, i.e. `F_0 - F_2`.
pub fn invariant_series(k: u32, n: usize) -> Result<TruncatedSeries, GenfunError> {
    peeled(k, 0, n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Freeness {
    pub quotient: TruncatedSeries,
    pub first_negative: Option<usize>,
}

/// `(F_l - F_{l+2}) / (F_0 - F_2)` through degree `n`, with the first
/// negative coefficient if any.
pub fn freeness_quotient(k: u32, l: u32, n: usize) -> Result<Freeness, GenfunError> {
    let num = peeled(k, l, n)?;
    let den = invariant_series(k, n)?;
    let quotient = num.div(&den)?;
    let first_negative = first_negative_coefficient(&quotient);
    Ok(Freeness {
        quotient,
        first_negative,
    })
}

pub fn detect_invariant_structure(k: u32, n: usize) -> Result<InvariantStructure, GenfunError> {
    detect_structure(&invariant_series(k, n)?)
}
