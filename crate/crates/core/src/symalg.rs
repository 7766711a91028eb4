//! The symmetric algebra `Sym L(k)` with sl2 acting by derivations.
//!
//! Variables are indexed by `j = 0..=k`, standing for the weight vector of
//! weight `2j - k`, so exponent vectors list `v_{-k}` first. In the
//! `v`-basis `e·v_{k-2i} = (k-i+1) v_{k-2i+2}`, which in `j` reads
//! `e·v_j = (j+1) v_{j+1}`; the lowering operator is forced to be
//! `f·v_j = (k-j+1) v_{j-1}` by `[e, f] = h`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exact::matrix::rank_rational;
use crate::exact::{int, ratio, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Gen {
    E,
    F,
    H,
}

/// Which basis of `L(k)` the variables refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Basis {
    /// Standard weight vectors `v_i`.
    V,
    /// Rescaled `w_j = c_j v_j` on which `e` acts by a chain of unit coefficients.
    W,
}

type Monomial = Vec<u32>;

/// Polynomial in the weight basis of `L(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymElement {
    k: u32,
    basis: Basis,
    terms: BTreeMap<Monomial, Scalar>,
}

/// Action coefficients on the chosen basis: `e·x_j = up[j] x_{j+1}`,
/// `f·x_j = down[j] x_{j-1}`.
#[derive(Debug, Clone)]
struct ActionTable {
    up: Vec<Scalar>,
    down: Vec<Scalar>,
}

fn v_table(k: u32) -> ActionTable {
    let k = k as i64;
    ActionTable {
        up: (0..=k)
            .map(|j| if j < k { int(j + 1) } else { Scalar::zero() })
            .collect(),
        down: (0..=k)
            .map(|j| {
                if j > 0 {
                    int(k - j + 1)
                } else {
                    Scalar::zero()
                }
            })
            .collect(),
    }
}

/// Scalars `c_j` with `w_j = c_j v_j`, chosen so that `e·w_j = w_{j+1}`.
pub fn w_rescaling(k: u32) -> Vec<Scalar> {
    let t = v_table(k);
    let mut c = vec![Scalar::one()];
    for j in 0..k as usize {
        // e·w_j = c_j up_j v_{j+1} = (c_j up_j / c_{j+1}) w_{j+1}
        let next = &c[j] * &t.up[j];
        c.push(next);
    }
    c
}

fn table(k: u32, basis: Basis) -> ActionTable {
    let v = v_table(k);
    match basis {
        Basis::V => v,
        Basis::W => {
            let c = w_rescaling(k);
            let n = k as usize;
            ActionTable {
                up: (0..=n)
                    .map(|j| {
                        if j < n {
                            &c[j] * &v.up[j] / &c[j + 1]
                        } else {
                            Scalar::zero()
                        }
                    })
                    .collect(),
                down: (0..=n)
                    .map(|j| {
                        if j > 0 {
                            &c[j] * &v.down[j] / &c[j - 1]
                        } else {
                            Scalar::zero()
                        }
                    })
                    .collect(),
            }
        }
    }
}

impl SymElement {
    pub fn zero(k: u32, basis: Basis) -> Self {
        SymElement {
            k,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(k: u32, basis: Basis, c: Scalar) -> Self {
        let mut s = Self::zero(k, basis);
        s.add_term(vec![0; k as usize + 1], c);
        s
    }

    pub fn one(k: u32, basis: Basis) -> Self {
        Self::constant(k, basis, Scalar::one())
    }

    /// The variable of weight `weight` (one of `k, k-2, ..., -k`).
    pub fn var(k: u32, basis: Basis, weight: i64) -> Self {
        let j = weight + k as i64;
        assert!(
            j >= 0 && j % 2 == 0 && j / 2 <= k as i64,
            "no weight {weight} in L({k})"
        );
        Self::monomial(k, basis, &[((j / 2) as usize, 1)], Scalar::one())
    }

    /// `c · ∏ x_j^{e}` from `(j, e)` pairs.
    pub fn monomial(k: u32, basis: Basis, factors: &[(usize, u32)], c: Scalar) -> Self {
        let mut m = vec![0; k as usize + 1];
        for &(j, e) in factors {
            m[j] += e;
        }
        let mut s = Self::zero(k, basis);
        s.add_term(m, c);
        s
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn monomial_weight(&self, m: &[u32]) -> i64 {
        m.iter()
            .enumerate()
            .map(|(j, &e)| (2 * j as i64 - self.k as i64) * e as i64)
            .sum()
    }

    /// Degree if every term has the same degree.
    pub fn degree(&self) -> Option<u32> {
        let mut ds = self.terms.keys().map(|m| m.iter().sum::<u32>());
        let d = ds.next()?;
        ds.all(|x| x == d).then_some(d)
    }

    /// h-weight if every term has the same weight.
    pub fn weight(&self) -> Option<i64> {
        let mut ws = self.terms.keys().map(|m| self.monomial_weight(m));
        let w = ws.next()?;
        ws.all(|x| x == w).then_some(w)
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            (self.k, self.basis),
            (other.k, other.basis),
            "elements of different algebras"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.k, self.basis);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut out = Self::zero(self.k, self.basis);
        for (m1, a) in &self.terms {
            for (m2, b) in &other.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(x, y)| x + y).collect();
                out.add_term(m, a * b);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.k, self.basis), |acc, _| acc.mul(self))
    }

    fn variable_name(&self, j: usize) -> String {
        let w = 2 * j as i64 - self.k as i64;
        let s = match self.basis {
            Basis::V => "v",
            Basis::W => "w",
        };
        format!("{s}{w}")
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let a = c.abs();
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| {
                    if e == 1 {
                        self.variable_name(j)
                    } else {
                        format!("{}^{e}", self.variable_name(j))
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{a}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `g` acting on `p` as a derivation.
pub fn adjoint_action(g: Gen, p: &SymElement) -> SymElement {
    let mut out = SymElement::zero(p.k, p.basis);
    if g == Gen::H {
        for (m, c) in &p.terms {
            out.add_term(m.clone(), c * int(p.monomial_weight(m)));
        }
        return out;
    }
    let t = table(p.k, p.basis);
    let n = p.k as usize;
    for (m, c) in &p.terms {
        for j in 0..=n {
            if m[j] == 0 {
                continue;
            }
            let (target, coeff) = match g {
                Gen::E if j < n => (j + 1, &t.up[j]),
                Gen::F if j > 0 => (j - 1, &t.down[j]),
                _ => continue,
            };
            if coeff.is_zero() {
                continue;
            }
            let mut m2 = m.clone();
            m2[j] -= 1;
            m2[target] += 1;
            out.add_term(m2, c * coeff * int(m[j] as i64));
        }
    }
    out
}

pub fn is_invariant(p: &SymElement) -> bool {
    adjoint_action(Gen::E, p).is_zero() && adjoint_action(Gen::F, p).is_zero()
}

/// A homogeneous invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariant {
    pub element: SymElement,
    pub degree: u32,
}

fn l4_term(c: Scalar, weights: &[i64]) -> SymElement {
    weights
        .iter()
        .fold(SymElement::constant(4, Basis::V, c), |acc, &w| {
            acc.mul(&SymElement::var(4, Basis::V, w))
        })
}

/// `v_0^2 - 3 v_{-2} v_2 + 12 v_{-4} v_4`.
pub fn build_c2() -> Invariant {
    let element = l4_term(int(1), &[0, 0])
        .add(&l4_term(int(-3), &[-2, 2]))
        .add(&l4_term(int(12), &[-4, 4]));
    Invariant { element, degree: 2 }
}

/// `v_0^3 - 9/2 v_{-2} v_0 v_2 + 27/2 v_{-2}^2 v_4 + 27/2 v_{-4} v_2^2 - 36 v_{-4} v_0 v_4`.
pub fn build_c3() -> Invariant {
    let element = l4_term(int(1), &[0, 0, 0])
        .add(&l4_term(ratio(-9, 2), &[-2, 0, 2]))
        .add(&l4_term(ratio(27, 2), &[-2, -2, 4]))
        .add(&l4_term(ratio(27, 2), &[-4, 2, 2]))
        .add(&l4_term(int(-36), &[-4, 0, 4]));
    Invariant { element, degree: 3 }
}

/// Rank certificate for the vectors `ad_e^i (w_{-4}^i w_{-2}^{k-i})`,
/// `i = 0..k-1`, in `Sym^k L(4)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceCertificate {
    pub k: u32,
    pub vectors: usize,
    pub monomials: usize,
    pub rank: usize,
    pub independent: bool,
}

/// The `k` elements `ad_e^i (w_{-4}^i w_{-2}^{k-i})` for `i = 0..k-1`, all of
/// weight `-2k`.
pub fn independence_vectors(k: u32) -> Vec<SymElement> {
    let w4 = SymElement::var(4, Basis::W, -4);
    let w2 = SymElement::var(4, Basis::W, -2);
    (0..k)
        .map(|i| {
            let mut p = w4.pow(i).mul(&w2.pow(k - i));
            for _ in 0..i {
                p = adjoint_action(Gen::E, &p);
            }
            p
        })
        .collect()
}

/// Coefficient matrix of `vs` over the union of their monomials (sorted).
pub fn coefficient_matrix(vs: &[SymElement]) -> (Vec<Monomial>, Vec<Vec<Scalar>>) {
    let mut basis: Vec<Monomial> = vs.iter().flat_map(|v| v.terms.keys().cloned()).collect();
    basis.sort();
    basis.dedup();
    let rows = vs
        .iter()
        .map(|v| {
            basis
                .iter()
                .map(|m| v.terms.get(m).cloned().unwrap_or_else(Scalar::zero))
                .collect()
        })
        .collect();
    (basis, rows)
}

pub fn independence_check(k: u32) -> IndependenceCertificate {
    let vs = independence_vectors(k);
    let (basis, rows) = coefficient_matrix(&vs);
    let rank = rank_rational(&rows);
    IndependenceCertificate {
        k,
        vectors: vs.len(),
        monomials: basis.len(),
        rank,
        independent: rank == vs.len(),
    }
}

/// All monomials of degree `d` in `k + 1` variables.
pub fn monomials_of_degree(k: u32, d: u32) -> Vec<Monomial> {
    fn go(slots: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() + 1 == slots {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e);
            go(slots, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k as usize + 1, d, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(w: i64) -> SymElement {
        SymElement::var(4, Basis::V, w)
    }

    #[test]
    fn raising_on_basis_vectors() {
        assert!(adjoint_action(Gen::E, &v(4)).is_zero());
        assert_eq!(adjoint_action(Gen::E, &v(-4)), v(-2));
        assert_eq!(adjoint_action(Gen::E, &v(0)), v(2).scale(&int(3)));
        assert!(adjoint_action(Gen::H, &v(-2).mul(&v(2))).is_zero());
    }

    #[test]
    fn w_basis_is_a_unit_chain() {
        assert_eq!(
            w_rescaling(4),
            vec![int(1), int(1), int(2), int(6), int(24)]
        );
        for w in [-4, -2, 0, 2] {
            let x = SymElement::var(4, Basis::W, w);
            assert_eq!(
                adjoint_action(Gen::E, &x),
                SymElement::var(4, Basis::W, w + 2)
            );
        }
    }

    #[test]
    fn commutators_on_low_degree() {
        for d in 0..=3 {
            for m in monomials_of_degree(4, d) {
                let p = SymElement::monomial(
                    4,
                    Basis::V,
                    &m.iter()
                        .enumerate()
                        .map(|(j, &e)| (j, e))
                        .collect::<Vec<_>>(),
                    int(1),
                );
                let ef = adjoint_action(Gen::E, &adjoint_action(Gen::F, &p));
                let fe = adjoint_action(Gen::F, &adjoint_action(Gen::E, &p));
                assert_eq!(ef.sub(&fe), adjoint_action(Gen::H, &p));
            }
        }
    }

    #[test]
    fn reference_invariants() {
        let c2 = build_c2();
        let c3 = build_c3();
        assert_eq!(c2.element.degree(), Some(2));
        assert_eq!(c2.element.weight(), Some(0));
        assert!(is_invariant(&c2.element));
        assert!(is_invariant(&c3.element));
        assert!(is_invariant(&c2.element.mul(&c3.element)));
        assert!(is_invariant(&SymElement::one(4, Basis::V)));
        assert!(!is_invariant(&v(0)));
    }

    #[test]
    fn independence_small() {
        let vs = independence_vectors(2);
        let w = |x| SymElement::var(4, Basis::W, x);
        assert_eq!(vs[0], w(-2).pow(2));
        assert_eq!(vs[1], w(-2).pow(2).add(&w(-4).mul(&w(0))));
        assert!(independence_check(1).independent);
        assert!(independence_check(2).independent);
    }

    #[test]
    fn display() {
        assert_eq!(
            build_c2().element.to_string(),
            "v0^2 - 3*v-2*v2 + 12*v-4*v4"
        );
    }
}
