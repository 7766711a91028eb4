use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::lattice::{edge_label, level, PathMatrix};
use super::partition::Partition;
use super::YoungError;
use crate::exact::matrix::det_int;
use crate::exact::{int, Polynomial, Scalar, Var};

/// The special image of `(1^{n-1})`: `(2^{n/2})` for even `n`,
/// `(3, 2^{(n-3)/2})` for odd `n`.
pub fn special_image(n: u32) -> Partition {
    if n.is_multiple_of(2) {
        Partition::rectangle(2, n as usize / 2)
    } else {
        let mut parts = vec![3];
        parts.extend(std::iter::repeat_n(2, (n as usize - 3) / 2));
        Partition::new(parts)
    }
}

/// The injection from partitions of `n-1` into partitions of `n`: add a part
/// equal to 1, except on `(1^{n-1})`. Pairs `(μ, ψ(μ))` in ascending
/// lexicographic order of `μ`.
pub fn build_psi(n: u32) -> Result<Vec<(Partition, Partition)>, YoungError> {
    if n < 2 {
        return Err(YoungError::TooSmall { n });
    }
    Ok(level(n - 1)
        .into_iter()
        .map(|mu| {
            let image = if mu.is_column() {
                special_image(n)
            } else {
                mu.with_extra_one()
            };
            (mu, image)
        })
        .collect())
}

/// `N_n`: rows `ψ(μ)`, columns `μ`, both in ascending lexicographic order;
/// the entry is the label of the edge from the column partition to the row
/// partition, or 0.
pub fn build_nn(n: u32) -> Result<PathMatrix, YoungError> {
    let psi = build_psi(n)?;
    let cols: Vec<Partition> = psi.iter().map(|(mu, _)| mu.clone()).collect();
    let mut rows: Vec<Partition> = psi.into_iter().map(|(_, im)| im).collect();
    rows.sort();
    Ok(square(rows, cols))
}

fn square(rows: Vec<Partition>, cols: Vec<Partition>) -> PathMatrix {
    let entries = rows
        .iter()
        .map(|r| {
            cols.iter()
                .map(|c| edge_label(c, r).unwrap_or_else(|| Polynomial::zero(Var::X)))
                .collect()
        })
        .collect();
    PathMatrix {
        rows,
        cols,
        entries,
    }
}

/// The diagonal block of `N_n` on the rows that are dominated by the special
/// image, together with their preimages as columns. For even `n` these are
/// exactly the rows of the form `(2^i, 1^j)`.
pub fn magenta_block(n: u32) -> Result<PathMatrix, YoungError> {
    let special = special_image(n);
    let psi = build_psi(n)?;
    let mut pairs: Vec<(Partition, Partition)> = psi
        .into_iter()
        .filter(|(_, im)| special.dominates(im))
        .collect();
    pairs.sort_by(|a, b| a.1.cmp(&b.1));
    let cols = {
        let mut c: Vec<Partition> = pairs.iter().map(|p| p.0.clone()).collect();
        c.sort();
        c
    };
    let rows = pairs.into_iter().map(|p| p.1).collect();
    Ok(square(rows, cols))
}

/// Determinant of a square matrix of polynomials of degree at most 1 in `x`,
/// by integer evaluation and interpolation.
pub fn det_poly(m: &PathMatrix) -> Polynomial {
    let size = m.rows.len();
    assert_eq!(size, m.cols.len(), "determinant of a non-square matrix");
    let points: Vec<(Scalar, Scalar)> = (0..=size as i64)
        .map(|x| {
            let vals = m.eval(&int(x));
            let im: Vec<Vec<BigInt>> = vals
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|v| {
                            assert!(v.is_integer(), "integer entries expected");
                            v.to_integer()
                        })
                        .collect()
                })
                .collect();
            (int(x), Scalar::from_integer(det_int(&im)))
        })
        .collect();
    Polynomial::interpolate(Var::X, &points)
}

/// Integer content times monic linear factors, as far as the polynomial
/// splits over the integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    #[serde(serialize_with = "crate::report::ser_display")]
    pub det: Polynomial,
    /// What is left after removing the integer roots; an integer when the
    /// determinant splits completely.
    #[serde(serialize_with = "crate::report::ser_display")]
    pub cofactor: Polynomial,
    pub roots: Vec<i64>,
    pub splits: bool,
}

impl Factorization {
    pub fn of(det: Polynomial) -> Self {
        if det.is_zero() {
            return Factorization {
                cofactor: det.clone(),
                det,
                roots: vec![],
                splits: false,
            };
        }
        let bound = det
            .root_bound()
            .expect("nonzero")
            .ceil()
            .to_integer()
            .to_i64()
            .expect("small bound");
        let (roots, cofactor) = det.integer_roots_in(-bound, bound);
        let splits = cofactor.degree() == Some(0);
        Factorization {
            det,
            cofactor,
            roots,
            splits,
        }
    }

    /// Integer content, when the determinant splits completely.
    pub fn content(&self) -> Option<BigInt> {
        if !self.splits {
            return None;
        }
        let c = self.cofactor.coeff(0);
        c.is_integer().then(|| c.to_integer())
    }

    /// The linear factors written as `x - i`.
    pub fn factor_strings(&self) -> Vec<String> {
        self.roots
            .iter()
            .map(|&r| Polynomial::x_minus(r).to_string())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DetReport {
    pub n: u32,
    pub factorization: Factorization,
    pub content_nonzero: bool,
    pub all_roots_below_n: bool,
    pub nonzero_at_n: bool,
}

impl DetReport {
    /// Is the determinant nonzero at every integer `x` in `lo..=hi`?
    pub fn nonzero_on(&self, lo: u32, hi: u32) -> bool {
        (lo..=hi).all(|m| !self.factorization.det.eval(&int(m as i64)).is_zero())
    }

    pub fn pass(&self) -> bool {
        self.content_nonzero && self.all_roots_below_n && self.nonzero_at_n
    }
}

pub fn verify_det_factorization(n: u32) -> Result<DetReport, YoungError> {
    let nn = build_nn(n)?;
    let det = det_poly(&nn);
    if det.is_zero() {
        return Err(YoungError::ZeroDeterminant { n });
    }
    let f = Factorization::of(det);
    let content_nonzero = f.content().is_some_and(|c| !c.is_zero());
    let all_roots_below_n = f.splits && f.roots.iter().all(|&r| r < n as i64);
    let nonzero_at_n = !f.det.eval(&int(n as i64)).is_zero();
    Ok(DetReport {
        n,
        factorization: f,
        content_nonzero,
        all_roots_below_n,
        nonzero_at_n,
    })
}
