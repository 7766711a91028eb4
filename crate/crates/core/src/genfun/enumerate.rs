//! Direct enumeration of weight-space dimensions of symmetric powers.
//!
//! A monomial `v_k^{a_0} v_{k-2}^{a_1} ... v_{-k}^{a_k}` in `Sym^n L(k)` has
//! degree `a_0 + ... + a_k` and weight `k a_0 + (k-2) a_1 + ... - k a_k`.
//! Counting the monomials of weight `l` by degree gives `F^(k)_l`.

use crate::exact::TruncatedSeries;

/// Iterator over the exponent tuples `(a_0, ..., a_k)` of total degree at
/// most `max_degree` and weight exactly `l`.
///
/// The middle exponents `a_1..a_{k-1}` are walked by an odometer pruned on
/// partial degree; `a_0` and `a_k` are then solved from the weight equation.
#[derive(Debug, Clone)]
pub struct DiophantineSolutions {
    k: u32,
    l: i64,
    max_degree: usize,
    middle: Vec<usize>,
    middle_degree: usize,
    middle_weight: i64,
    // pending (a_0, a_k) pairs for the current middle
    ak: usize,
    t: i64,
    ak_end: usize,
    started: bool,
    done: bool,
}

impl DiophantineSolutions {
    pub fn new(k: u32, l: i64, max_degree: usize) -> Self {
        let m = (k as usize).saturating_sub(1);
        let mut s = DiophantineSolutions {
            k,
            l,
            max_degree,
            middle: vec![0; m],
            middle_degree: 0,
            middle_weight: 0,
            ak: 0,
            t: 0,
            ak_end: 0,
            started: false,
            done: false,
        };
        s.load_outer();
        s
    }

    fn weight(&self, i: usize) -> i64 {
        self.k as i64 - 2 * i as i64
    }

    /// Set up the `a_k` range for the current middle exponents. Empty when the
    /// weight equation has no solution.
    fn load_outer(&mut self) {
        self.ak = 1;
        self.ak_end = 0;
        let rest = self.l - self.middle_weight;
        if self.k == 0 {
            // single variable of weight 0
            if rest == 0 {
                self.ak = 0;
                self.ak_end = self.max_degree + 1;
            }
            return;
        }
        let k = self.k as i64;
        if rest.rem_euclid(k) != 0 {
            return;
        }
        let t = rest / k;
        let free = self.max_degree - self.middle_degree;
        // a_0 = a_k + t, degree = middle + 2 a_k + t <= max_degree
        let lo = (-t).max(0);
        let budget = free as i64 - t;
        if budget < 2 * lo {
            return;
        }
        self.t = t;
        self.ak = lo as usize;
        self.ak_end = (budget / 2) as usize + 1;
    }

    /// Advance the odometer over the middle exponents. Returns false once
    /// every middle tuple has been visited.
    fn advance_middle(&mut self) -> bool {
        for i in 0..self.middle.len() {
            let w = self.weight(i + 1);
            if self.middle_degree < self.max_degree {
                self.middle[i] += 1;
                self.middle_degree += 1;
                self.middle_weight += w;
                return true;
            }
            self.middle_degree -= self.middle[i];
            self.middle_weight -= w * self.middle[i] as i64;
            self.middle[i] = 0;
        }
        false
    }
}

impl Iterator for DiophantineSolutions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        self.started = true;
        loop {
            if self.ak < self.ak_end {
                let ak = self.ak;
                self.ak += 1;
                if self.k == 0 {
                    return Some(vec![ak]);
                }
                let mut tuple = Vec::with_capacity(self.k as usize + 1);
                tuple.push((ak as i64 + self.t) as usize);
                tuple.extend_from_slice(&self.middle);
                tuple.push(ak);
                return Some(tuple);
            }
            if !self.advance_middle() {
                self.done = true;
                return None;
            }
            self.load_outer();
        }
    }
}

/// Number of weight-`l` monomials of each degree `0..=n` in `Sym L(k)`, as
/// machine integers. The largest count for `k <= 6`, `n <= 60` is far below
/// `u64::MAX`; additions are checked anyway.
pub fn weight_counts(k: u32, l: i64, n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    let mut it = DiophantineSolutions::new(k, l, n);
    let bump = |counts: &mut [u64], d: usize| {
        counts[d] = counts[d].checked_add(1).expect("monomial count overflow");
    };
    if k == 0 {
        for t in it {
            bump(&mut counts, t[0]);
        }
        return counts;
    }
    // Same walk as the iterator, without materialising the tuples.
    loop {
        let base = it.middle_degree as i64 + it.t;
        for ak in it.ak..it.ak_end {
            bump(&mut counts, (base + 2 * ak as i64) as usize);
        }
        if !it.advance_middle() {
            break;
        }
        it.load_outer();
    }
    counts
}

/// `F^(k)_l` through degree `n` by counting solutions of the weight equation.
pub fn f_enum(k: u32, l: u32, n: usize) -> TruncatedSeries {
    let counts = weight_counts(k, l as i64, n);
    TruncatedSeries::from_counts(&counts.iter().map(|&c| c as u128).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weight_of(k: u32, t: &[usize]) -> i64 {
        t.iter()
            .enumerate()
            .map(|(i, &a)| (k as i64 - 2 * i as i64) * a as i64)
            .sum()
    }

    #[test]
    fn tuples_satisfy_the_equation() {
        for k in 0..5u32 {
            for l in -3..6i64 {
                for t in DiophantineSolutions::new(k, l, 7) {
                    assert_eq!(t.len(), k as usize + 1);
                    assert_eq!(weight_of(k, &t), l);
                    assert!(t.iter().sum::<usize>() <= 7);
                }
            }
        }
    }

    #[test]
    fn iterator_and_counter_agree() {
        for k in 0..5u32 {
            for l in 0..7i64 {
                let mut by_iter = vec![0u64; 9];
                for t in DiophantineSolutions::new(k, l, 8) {
                    by_iter[t.iter().sum::<usize>()] += 1;
                }
                assert_eq!(by_iter, weight_counts(k, l, 8), "k={k} l={l}");
            }
        }
    }

    #[test]
    fn brute_force_small() {
        // every tuple with entries <= 4, filtered
        let k = 3u32;
        let mut count = vec![0u64; 5];
        for a in 0..5usize.pow(4) {
            let t: Vec<usize> = (0..4).map(|i| (a / 5usize.pow(i)) % 5).collect();
            let d: usize = t.iter().sum();
            if d <= 4 && weight_of(k, &t) == 1 {
                count[d] += 1;
            }
        }
        assert_eq!(weight_counts(k, 1, 4), count);
    }

    #[test]
    fn weight_one_for_l1() {
        assert_eq!(
            f_enum(1, 3, 7).to_i64().unwrap(),
            vec![0, 0, 0, 1, 0, 1, 0, 1]
        );
        assert!(f_enum(2, 1, 10).is_zero());
    }

    #[test]
    fn f4_weight_zero_start() {
        assert_eq!(
            f_enum(4, 0, 8).to_i64().unwrap(),
            vec![1, 1, 3, 5, 8, 12, 18, 24, 33]
        );
    }
}
