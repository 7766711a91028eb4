use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Finitely supported multiset over an ordered label type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multiset<T: Ord> {
    counts: BTreeMap<T, u64>,
}

impl<T: Ord> Default for Multiset<T> {
    fn default() -> Self {
        Multiset {
            counts: BTreeMap::new(),
        }
    }
}

impl<T: Ord + Clone> Multiset<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, x: T, mult: u64) {
        if mult > 0 {
            *self.counts.entry(x).or_insert(0) += mult;
        }
    }

    pub fn count(&self, x: &T) -> u64 {
        self.counts.get(x).copied().unwrap_or(0)
    }

    /// Number of elements counted with multiplicity.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&T, u64)> {
        self.counts.iter().map(|(k, &v)| (k, v))
    }

    pub fn support(&self) -> impl Iterator<Item = &T> {
        self.counts.keys()
    }

    /// Multiset sum.
    pub fn add(&mut self, other: &Multiset<T>) {
        for (x, m) in other.iter() {
            self.insert(x.clone(), m);
        }
    }

    pub fn scaled(&self, factor: u64) -> Self {
        let mut out = Self::new();
        for (x, m) in self.iter() {
            out.insert(x.clone(), m * factor);
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&T) -> bool) -> Self {
        Multiset {
            counts: self
                .counts
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, &v)| (k.clone(), v))
                .collect(),
        }
    }
}

impl<T: Ord + Clone> FromIterator<T> for Multiset<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut m = Multiset::new();
        for x in iter {
            m.insert(x, 1);
        }
        m
    }
}

impl<T: Ord + fmt::Display> fmt::Display for Multiset<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (x, &m)) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if m == 1 {
                write!(f, "{x}")?;
            } else {
                write!(f, "{x}^{m}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Serialized as a map from the label's display form to its multiplicity.
impl<T: Ord + fmt::Display> Serialize for Multiset<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.counts.len()))?;
        for (k, v) in &self.counts {
            map.serialize_entry(&k.to_string(), v)?;
        }
        map.end()
    }
}
