//! Finite-dimensional sl2 combinatorics and the tensor calculus of the
//! simple Harish-Chandra modules with a fixed nonzero radical central
//! character.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exact::{Polynomial, TruncatedSeries};
use crate::genfun::{peeled, weight_counts};
use crate::multiset::Multiset;

/// The simple module `L(k)` of highest weight `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleFinDim(pub u32);

impl SimpleFinDim {
    pub fn dim(self) -> u64 {
        self.0 as u64 + 1
    }
}

impl fmt::Display for SimpleFinDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({})", self.0)
    }
}

/// Label of a simple Harish-Chandra module: `V'(0)`, `V'(2)` or `V(n)`, `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SimpleHC {
    VPrime0,
    VPrime2,
    V(u32),
}

impl SimpleHC {
    /// `V(n)`; panics on `n = 0`, which is not a label.
    pub fn v(n: u32) -> Self {
        assert!(n >= 1, "V(n) needs n >= 1");
        SimpleHC::V(n)
    }

    /// The numeric parameter: 0, 2 or `n`.
    pub fn index(self) -> u32 {
        match self {
            SimpleHC::VPrime0 => 0,
            SimpleHC::VPrime2 => 2,
            SimpleHC::V(n) => n,
        }
    }

    /// g-types with highest weight at most `bound`. `V'(0)` has `L(0), L(4), ...`,
    /// `V'(2)` has `L(2), L(6), ...`, `V(n)` has `L(n), L(n+2), ...`, all
    /// multiplicity free.
    pub fn g_types(self, bound: u32) -> Multiset<SimpleFinDim> {
        let (start, step) = match self {
            SimpleHC::VPrime0 => (0, 4),
            SimpleHC::VPrime2 => (2, 4),
            SimpleHC::V(n) => (n, 2),
        };
        (start..=bound).step_by(step).map(SimpleFinDim).collect()
    }
}

impl fmt::Display for SimpleHC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleHC::VPrime0 => write!(f, "V'(0)"),
            SimpleHC::VPrime2 => write!(f, "V'(2)"),
            SimpleHC::V(n) => write!(f, "V({n})"),
        }
    }
}

impl Serialize for SimpleHC {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse simple module label {0:?} (expected V'(0), V'(2) or V(n) with n >= 1)")]
pub struct ParseLabelError(pub String);

/// Parses `V'(0)`, `V′(2)`, `V(7)` and the bracket-free forms `V'0`, `V7`.
/// A leading `P` is accepted as well, for projective labels.
pub(crate) fn parse_label(s: &str) -> Result<SimpleHC, ParseLabelError> {
    let err = || ParseLabelError(s.to_string());
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let t = t
        .strip_prefix('V')
        .or_else(|| t.strip_prefix('P'))
        .ok_or_else(err)?;
    let (prime, rest) = match t.strip_prefix('\'').or_else(|| t.strip_prefix('′')) {
        Some(r) => (true, r),
        None => (false, t),
    };
    let num = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(rest);
    let n: u32 = num.parse().map_err(|_| err())?;
    match (prime, n) {
        (true, 0) => Ok(SimpleHC::VPrime0),
        (true, 2) => Ok(SimpleHC::VPrime2),
        (false, n) if n >= 1 => Ok(SimpleHC::V(n)),
        _ => Err(err()),
    }
}

impl FromStr for SimpleHC {
    type Err = ParseLabelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_label(s)
    }
}

pub type HCMultiset = Multiset<SimpleHC>;

/// Weight multiplicities of an infinite-dimensional module, known exactly
/// for the weights `top, top - 2, ..., top - 2 depth`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightCharacter {
    pub top: i64,
    pub depth: u32,
    pub mults: BTreeMap<i64, u64>,
}

impl WeightCharacter {
    /// Multiplicity of `weight`, or `None` outside the complete window.
    pub fn mult(&self, weight: i64) -> Option<u64> {
        let j = self.top - weight;
        if j < 0 || j % 2 != 0 || j / 2 > self.depth as i64 {
            return None;
        }
        Some(self.mults.get(&weight).copied().unwrap_or(0))
    }
}

pub fn clebsch_gordan(m: u32, n: u32) -> Multiset<SimpleFinDim> {
    (m.abs_diff(n)..=m + n)
        .step_by(2)
        .map(SimpleFinDim)
        .collect()
}

/// Dimension of the weight-`l` space of `Sym^n L(k)`.
pub fn sym_weight_dim(k: u32, n: usize, l: i64) -> u64 {
    weight_counts(k, l, n)[n]
}

/// Decomposition of `Sym^n L(k)` by peeling weight-space dimensions.
pub fn sym_power_decompose(k: u32, n: u32) -> Multiset<SimpleFinDim> {
    let n = n as usize;
    let top = k as i64 * n as i64;
    let dims: Vec<u64> = (0..=top + 2).map(|l| sym_weight_dim(k, n, l)).collect();
    let mut out = Multiset::new();
    for l in 0..=top as usize {
        out.insert(SimpleFinDim(l as u32), dims[l] - dims[l + 2]);
    }
    out
}

fn push_range(out: &mut HCMultiset, from: u32, to: u32, mult: u64) {
    let mut j = from;
    while j <= to {
        if j >= 1 {
            out.insert(SimpleHC::V(j), mult);
        }
        j += 2;
    }
}

/// `L(k) ⊗ s`, following the case split on `k` modulo 4 (for `V'(0)`,
/// `V'(2)`) and on `k` versus `n` (for `V(n)`).
pub fn hc_tensor(k: u32, s: SimpleHC) -> HCMultiset {
    let mut out = HCMultiset::new();
    match s {
        SimpleHC::VPrime0 | SimpleHC::VPrime2 => {
            if k % 2 == 1 {
                push_range(&mut out, 1, k, 1);
            } else {
                let same = k.is_multiple_of(4);
                let prime = match (s, same) {
                    (SimpleHC::VPrime0, true) | (SimpleHC::VPrime2, false) => SimpleHC::VPrime0,
                    _ => SimpleHC::VPrime2,
                };
                out.insert(prime, 1);
                push_range(&mut out, 2, k, 1);
            }
        }
        SimpleHC::V(n) => {
            if k < n {
                push_range(&mut out, n - k, n + k, 1);
            } else if k == n {
                out.insert(SimpleHC::VPrime0, 1);
                out.insert(SimpleHC::VPrime2, 1);
                push_range(&mut out, 2, 2 * n, 1);
            } else {
                let d = k - n;
                if d % 2 == 1 {
                    push_range(&mut out, 1, d, 2);
                } else {
                    out.insert(SimpleHC::VPrime0, 1);
                    out.insert(SimpleHC::VPrime2, 1);
                    push_range(&mut out, 2, d, 2);
                }
                push_range(&mut out, d + 2, k + n, 1);
            }
        }
    }
    out
}

/// g-types (highest weight at most `bound`) of `L(k) ⊗ s`, computed from the
/// g-types of `s` by Clebsch-Gordan.
pub fn tensor_g_types(k: u32, s: SimpleHC, bound: u32) -> Multiset<SimpleFinDim> {
    let mut out = Multiset::new();
    for (m, mult) in s.g_types(bound + k).iter() {
        let cg = clebsch_gordan(k, m.0).filter(|l| l.0 <= bound);
        out.add(&cg.scaled(mult));
    }
    out
}

/// Dimension of the weight `λ - 2k` space of a Verma module for the
/// semidirect product, i.e. the number of PBW monomials in `f`, `v_{-2}`,
/// `v_{-4}` of that weight.
pub fn verma_weight_dim(k: u64) -> u64 {
    if k.is_multiple_of(2) {
        (k * k + 4 * k + 4) / 4
    } else {
        (k * k + 4 * k).div_ceil(4)
    }
}

/// Character of the simple highest-weight module of highest weight `lambda`
/// (nonzero `μ`): the weight `λ - 2j` has multiplicity `j + 1`.
pub fn char_simple_hw(lambda: i64, depth: u32) -> WeightCharacter {
    let mults = (0..=depth as i64)
        .map(|j| (lambda - 2 * j, j as u64 + 1))
        .collect();
    WeightCharacter {
        top: lambda,
        depth,
        mults,
    }
}

/// `[Q(0) : L(l)]`.
pub fn q0_multiplicity(l: u32) -> u32 {
    match l % 4 {
        0 => l / 4 + 1,
        2 => (l - 2) / 4,
        _ => 0,
    }
}

/// The g-module in degree `k` of `Q(0,0)`: the coefficient of `q^k` in
/// `(F_l - F_{l+2}) (1 - q^2)(1 - q^3)` for `L(4)` gives the multiplicity of `L(l)`.
pub fn q00_degree_part(k: u32) -> Multiset<SimpleFinDim> {
    let n = k as usize;
    let factor = TruncatedSeries::from_poly(
        &(&Polynomial::one_minus_q_pow(2) * &Polynomial::one_minus_q_pow(3)),
        n,
    );
    let mut out = Multiset::new();
    for l in (0..=4 * k).step_by(2) {
        let s = peeled(4, l, n).expect("closed forms for L(4) agree with enumeration");
        let c = s.mul(&factor).coeff(n);
        let m = c
            .to_integer()
            .to_u64()
            .expect("multiplicity is a non-negative integer");
        out.insert(SimpleFinDim(l), m);
    }
    out
}

/// Image of the simple highest-weight module `L(λ, μ)` under the
/// completion functor.
pub fn enar_simple(lambda: i64) -> HCMultiset {
    if lambda == -2 {
        [SimpleHC::VPrime0, SimpleHC::VPrime2].into_iter().collect()
    } else {
        [SimpleHC::V((lambda + 2).unsigned_abs() as u32)]
            .into_iter()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hc(items: &[(SimpleHC, u64)]) -> HCMultiset {
        let mut m = HCMultiset::new();
        for &(x, c) in items {
            m.insert(x, c);
        }
        m
    }

    fn fin(ws: &[u32]) -> Multiset<SimpleFinDim> {
        ws.iter().map(|&w| SimpleFinDim(w)).collect()
    }

    use SimpleHC::{VPrime0 as P0, VPrime2 as P2, V};

    #[test]
    fn parse_and_display_labels() {
        for s in ["V'(0)", "V'(2)", "V(1)", "V(12)"] {
            assert_eq!(s.parse::<SimpleHC>().unwrap().to_string(), s);
        }
        assert_eq!("V′(0)".parse::<SimpleHC>().unwrap(), P0);
        assert_eq!("V7".parse::<SimpleHC>().unwrap(), V(7));
        assert_eq!("P(4)".parse::<SimpleHC>().unwrap(), V(4));
        assert!("V(0)".parse::<SimpleHC>().is_err());
        assert!("V'(4)".parse::<SimpleHC>().is_err());
    }

    #[test]
    fn clebsch_gordan_examples() {
        assert_eq!(clebsch_gordan(0, 5), fin(&[5]));
        assert_eq!(clebsch_gordan(1, 1), fin(&[0, 2]));
        assert_eq!(clebsch_gordan(4, 4), fin(&[0, 2, 4, 6, 8]));
    }

    #[test]
    fn sym_powers_of_l4() {
        assert_eq!(sym_power_decompose(4, 1), fin(&[4]));
        assert_eq!(sym_power_decompose(4, 2), fin(&[0, 4, 8]));
        assert_eq!(sym_power_decompose(4, 3), fin(&[0, 4, 6, 8, 12]));
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(hc_tensor(0, V(3)), hc(&[(V(3), 1)]));
        assert_eq!(
            hc_tensor(6, P0),
            hc(&[(P2, 1), (V(2), 1), (V(4), 1), (V(6), 1)])
        );
        assert_eq!(
            hc_tensor(3, V(3)),
            hc(&[(P0, 1), (P2, 1), (V(2), 1), (V(4), 1), (V(6), 1)])
        );
        assert_eq!(
            hc_tensor(5, V(3)),
            hc(&[(P0, 1), (P2, 1), (V(2), 2), (V(4), 1), (V(6), 1), (V(8), 1)])
        );
        assert_eq!(hc_tensor(4, V(1)), hc(&[(V(1), 2), (V(3), 2), (V(5), 1)]));
    }

    #[test]
    fn tensor_matches_g_types() {
        for k in 0..=8 {
            for s in [P0, P2].into_iter().chain((1..=8).map(V)) {
                let bound = 30;
                let mut rhs = Multiset::new();
                for (t, m) in hc_tensor(k, s).iter() {
                    rhs.add(&t.g_types(bound).scaled(m));
                }
                assert_eq!(tensor_g_types(k, s, bound), rhs, "L({k}) ⊗ {s}");
            }
        }
    }

    #[test]
    fn verma_dims() {
        assert_eq!(verma_weight_dim(0), 1);
        assert_eq!(verma_weight_dim(1), 2);
        assert_eq!(verma_weight_dim(2), 4);
    }

    #[test]
    fn simple_hw_character() {
        let ch = char_simple_hw(3, 5);
        assert_eq!(ch.mult(3), Some(1));
        assert_eq!(ch.mult(-1), Some(3));
        assert_eq!(ch.mult(-9), None);
        assert_eq!(ch.mult(2), None);
    }

    #[test]
    fn q0_values() {
        assert_eq!(q0_multiplicity(0), 1);
        assert_eq!(q0_multiplicity(2), 0);
        assert_eq!(q0_multiplicity(8), 3);
        assert_eq!(q0_multiplicity(7), 0);
    }

    #[test]
    fn q00_rows() {
        assert_eq!(q00_degree_part(0), fin(&[0]));
        assert_eq!(q00_degree_part(1), fin(&[4]));
        assert_eq!(q00_degree_part(2), fin(&[4, 8]));
        assert_eq!(q00_degree_part(3), fin(&[6, 8, 12]));
        assert_eq!(q00_degree_part(4), fin(&[8, 10, 12, 16]));
    }

    #[test]
    fn enar_examples() {
        assert_eq!(enar_simple(-2), hc(&[(P0, 1), (P2, 1)]));
        assert_eq!(enar_simple(0), hc(&[(V(2), 1)]));
        assert_eq!(enar_simple(-6), hc(&[(V(4), 1)]));
    }
}
