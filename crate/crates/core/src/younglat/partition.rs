use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

/// An integer partition, parts weakly decreasing and positive.
///
/// The derived order is lexicographic on the part list, which refines the
/// reverse of dominance: if `a` dominates `b` then `a >= b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1^k)`
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    /// `(m^k)`
    pub fn rectangle(m: u32, k: usize) -> Self {
        Partition { parts: vec![m; k] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts, i.e. the length of the first column.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn count_parts(&self, m: u32) -> usize {
        self.parts.iter().filter(|&&p| p == m).count()
    }

    /// Is this a column `(1^k)`?
    pub fn is_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Partition obtained by adding a node at the end of row `r`
    /// (`r == len()` starts a new row). `None` if the result is not a partition.
    pub fn add_node(&self, r: usize) -> Option<Partition> {
        let mut parts = self.parts.clone();
        if r == parts.len() {
            parts.push(1);
        } else if r < parts.len() && (r == 0 || parts[r - 1] > parts[r]) {
            parts[r] += 1;
        } else {
            return None;
        }
        Some(Partition { parts })
    }

    /// Add one part equal to 1.
    pub fn with_extra_one(&self) -> Partition {
        self.add_node(self.parts.len())
            .expect("a new row can always be started")
    }

    /// Dominance order: every prefix sum of `self` is at least that of `other`.
    /// Only meaningful for partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..n {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }
}

/// All partitions of `n` with parts at most `max_part`, in ascending
/// lexicographic order.
pub fn partitions(n: u32, max_part: u32) -> Vec<Partition> {
    fn go(left: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=cap.min(left)).rev() {
            cur.push(p);
            go(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, &mut Vec::new(), &mut out);
    out.sort();
    out
}

impl fmt::Display for Partition {
    /// Exponential notation: `(3,2^2,1)`, `(1^4)`, and `∅` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let mut groups: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match groups.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => groups.push((p, 1)),
            }
        }
        let body: Vec<String> = groups
            .iter()
            .map(|&(p, c)| {
                if c == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{c}")
                }
            })
            .collect();
        write!(f, "({})", body.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Partition {
    type Err = String;

    /// Accepts the display form, e.g. `(3,2^2,1)`, or plain `3,2,2,1`.
    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim();
        if t == "∅" || t == "()" || t.is_empty() {
            return Ok(Partition::empty());
        }
        let t = t.trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for item in t.split(',') {
            let item = item.trim();
            let (p, c) = match item.split_once('^') {
                Some((p, c)) => (p, c.parse::<usize>().map_err(|e| format!("{s}: {e}"))?),
                None => (item, 1),
            };
            let p: u32 = p.parse().map_err(|e| format!("{s}: {e}"))?;
            parts.extend(std::iter::repeat_n(p, c));
        }
        Ok(Partition::new(parts))
    }
}
