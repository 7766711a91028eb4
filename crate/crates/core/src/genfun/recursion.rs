//! `F^(k)_l` from `F^(k-2)` by splitting off the extreme exponents.
//!
//! With `a = a_0`, `c = a_k` and `b` the weight carried by the middle
//! variables,
//!
//! ```text
//! F^(k)_l = Σ_{ka + b - kc = l} q^{a+c} F^(k-2)_b  +  Σ_{ka - b - kc = l+1} q^{a+c} F^(k-2)_{b+1}
//! ```
//!
//! grounded at `k - 2 ∈ {0, 1}` by the elementary series for `L(0)` and `L(1)`.

use std::collections::HashMap;
use std::rc::Rc;

use super::GenfunError;
use crate::exact::TruncatedSeries;

type Memo = HashMap<(u32, u64), Rc<Vec<u64>>>;

fn ground(k: u32, b: u64, n: usize) -> Vec<u64> {
    let mut out = vec![0u64; n + 1];
    match k {
        0 => {
            if b == 0 {
                out.iter_mut().for_each(|c| *c = 1);
            }
        }
        1 => {
            let mut d = b as usize;
            while d <= n {
                out[d] = 1;
                d += 2;
            }
        }
        _ => unreachable!("ground called with k = {k}"),
    }
    out
}

fn level(k: u32, b: u64, n: usize, memo: &mut Memo) -> Rc<Vec<u64>> {
    if let Some(s) = memo.get(&(k, b)) {
        return s.clone();
    }
    let out = if k < 2 {
        ground(k, b, n)
    } else {
        let kk = k as i64;
        let inner = (k - 2) as i64;
        let l = b as i64;
        let mut acc = vec![0u64; n + 1];
        // lowest degree of F^(k-2)_m is at least m / (k-2); nothing beyond n survives
        let reachable = |m: i64, room: usize| -> bool {
            if inner == 0 {
                m == 0
            } else {
                (m + inner - 1) / inner <= room as i64
            }
        };
        for a in 0..=n {
            for c in 0..=(n - a) {
                let room = n - a - c;
                let shift = a + c;
                let mut add = |m: i64, memo: &mut Memo| {
                    if m >= 0 && reachable(m, room) {
                        let s = level(k - 2, m as u64, n, memo);
                        for d in 0..=room {
                            acc[d + shift] = acc[d + shift]
                                .checked_add(s[d])
                                .expect("series coefficient overflow");
                        }
                    }
                };
                add(l - kk * a as i64 + kk * c as i64, memo);
                // second sum: b = ka - kc - l - 1, term F_{b+1}
                let b2 = kk * a as i64 - kk * c as i64 - l - 1;
                if b2 >= 0 {
                    add(b2 + 1, memo);
                }
            }
        }
        acc
    };
    let out = Rc::new(out);
    memo.insert((k, b), out.clone());
    out
}

/// `F^(k)_l` through degree `n` by the recursion in `k`. Requires `k >= 2`.
pub fn f_recur(k: u32, l: u32, n: usize) -> Result<TruncatedSeries, GenfunError> {
    if k < 2 {
        return Err(GenfunError::RecursionNeedsK2 { k });
    }
    let mut memo = Memo::new();
    let s = level(k, l as u64, n, &mut memo);
    Ok(TruncatedSeries::from_counts(
        &s.iter().map(|&c| c as u128).collect::<Vec<_>>(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::f_enum;

    #[test]
    fn k2_weight_zero() {
        let s = f_recur(2, 0, 6).unwrap();
        assert_eq!(s.to_i64().unwrap(), vec![1, 1, 2, 2, 3, 3, 4]);
    }

    #[test]
    fn matches_enumeration_small() {
        for k in 2..=5 {
            for l in 0..=7 {
                assert_eq!(f_recur(k, l, 14).unwrap(), f_enum(k, l, 14), "k={k} l={l}");
            }
        }
    }

    #[test]
    fn rejects_small_k() {
        assert!(f_recur(1, 0, 3).is_err());
    }
}
