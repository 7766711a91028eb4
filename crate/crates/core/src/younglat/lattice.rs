use std::collections::BTreeMap;

use serde::Serialize;

use super::partition::{partitions, Partition};
use crate::exact::matrix::rank_rational;
use crate::exact::{int, Polynomial, Scalar, Var};

/// Largest part allowed in the sublattice.
pub const MAX_PART: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledEdge {
    pub source: Partition,
    pub target: Partition,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub label: Polynomial,
}

/// Edges leaving `p`: one per addable node that keeps the largest part at
/// most 4. A node in the first column is labelled `x - c`, `c` the number
/// of parts of `p`; a node in column `m > 1` is labelled by the number of
/// parts of `p` equal to `m - 1`.
pub fn edges_from(p: &Partition) -> Vec<LabeledEdge> {
    let mut out = Vec::new();
    let parts = p.parts();
    for r in 0..=parts.len() {
        let Some(target) = p.add_node(r) else {
            continue;
        };
        let column = target.parts()[r];
        if column > MAX_PART {
            continue;
        }
        let label = if column == 1 {
            Polynomial::x_minus(p.len() as i64)
        } else {
            Polynomial::constant(Var::X, int(p.count_parts(column - 1) as i64))
        };
        out.push(LabeledEdge {
            source: p.clone(),
            target,
            label,
        });
    }
    out
}

/// The label of the edge `from -> to`, if there is one.
pub fn edge_label(from: &Partition, to: &Partition) -> Option<Polynomial> {
    if to.size() != from.size() + 1 {
        return None;
    }
    edges_from(from)
        .into_iter()
        .find(|e| &e.target == to)
        .map(|e| e.label)
}

/// Partitions of `n` with parts at most 4, in ascending lexicographic order.
pub fn level(n: u32) -> Vec<Partition> {
    partitions(n, MAX_PART)
}

/// Matrix of polynomials in `x` with partition-labelled rows and columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathMatrix {
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<Polynomial>>,
}

impl PathMatrix {
    pub fn eval(&self, x: &Scalar) -> Vec<Vec<Scalar>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|p| p.eval(x)).collect())
            .collect()
    }

    pub fn entry(&self, row: &Partition, col: &Partition) -> Option<&Polynomial> {
        let i = self.rows.iter().position(|r| r == row)?;
        let j = self.cols.iter().position(|c| c == col)?;
        Some(&self.entries[i][j])
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|p| p.to_string()).collect())
            .collect()
    }
}

/// Sum of path weights from `start` to every partition of size `n`,
/// accumulated level by level.
fn path_sums(start: &Partition, n: u32) -> BTreeMap<Partition, Polynomial> {
    let mut cur: BTreeMap<Partition, Polynomial> = BTreeMap::new();
    cur.insert(start.clone(), Polynomial::one(Var::X));
    for _ in start.size()..n {
        let mut next: BTreeMap<Partition, Polynomial> = BTreeMap::new();
        for (p, w) in &cur {
            for e in edges_from(p) {
                let add = w * &e.label;
                let slot = next
                    .entry(e.target)
                    .or_insert_with(|| Polynomial::zero(Var::X));
                *slot = &*slot + &add;
            }
        }
        cur = next;
    }
    cur
}

/// `M_n`: rows `(1^k)` for `k = 1..n`, columns the partitions of `n` with
/// parts at most 4 in descending lexicographic order, entries the sums of
/// path weights.
pub fn path_matrix(n: u32) -> PathMatrix {
    let mut cols = level(n);
    cols.reverse();
    let rows: Vec<Partition> = (1..=n as usize).map(Partition::column).collect();
    let entries = rows
        .iter()
        .map(|r| {
            let sums = path_sums(r, n);
            cols.iter()
                .map(|c| {
                    sums.get(c)
                        .cloned()
                        .unwrap_or_else(|| Polynomial::zero(Var::X))
                })
                .collect()
        })
        .collect();
    PathMatrix {
        rows,
        cols,
        entries,
    }
}

/// Rank of `M_n` after setting `x = n`.
pub fn rank_at(n: u32) -> usize {
    rank_rational(&path_matrix(n).eval(&int(n as i64)))
}

/// Checks that every column of `M_n` with the `(1^n)` row and column removed
/// lies in the column span of `M_{n-1}`, with `x` set to `x`.
pub fn columns_in_previous_span(n: u32, x: &Scalar) -> bool {
    assert!(n >= 2);
    let prev = path_matrix(n - 1).eval(x);
    let cur = path_matrix(n);
    let last = Partition::column(n as usize);
    let keep: Vec<usize> = (0..cur.cols.len())
        .filter(|&j| cur.cols[j] != last)
        .collect();
    let cur = cur.eval(x);
    let joined: Vec<Vec<Scalar>> = prev
        .iter()
        .zip(&cur)
        .map(|(p, c)| {
            p.iter()
                .cloned()
                .chain(keep.iter().map(|&j| c[j].clone()))
                .collect()
        })
        .collect();
    rank_rational(&joined) == rank_rational(&prev)
}
