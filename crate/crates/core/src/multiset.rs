//! Finite multisets over element indices.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// How `Multiset::included` compares multiplicities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InclusionMode {
    /// Every multiplicity on the left is at most the one on the right.
    #[default]
    MultiplicityAware,
    /// Only the supports are compared.
    SupportOnly,
}

/// A finite multiset of element indices.
///
/// Stored as index -> multiplicity with no zero entries, so derived
/// equality is order-independent.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset {
    counts: BTreeMap<usize, usize>,
    total: usize,
}

impl Multiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_list<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        let mut m = Multiset::new();
        for x in elements {
            m.insert(x, 1);
        }
        m
    }

    /// `{x: n}`
    pub fn constant(x: usize, n: usize) -> Self {
        let mut m = Multiset::new();
        m.insert(x, n);
        m
    }

    pub fn insert(&mut self, x: usize, times: usize) {
        if times == 0 {
            return;
        }
        *self.counts.entry(x).or_insert(0) += times;
        self.total += times;
    }

    /// Adds every element of `other` with its multiplicity.
    pub fn absorb(&mut self, other: &Multiset) {
        for (&x, &c) in &other.counts {
            self.insert(x, c);
        }
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn count(&self, x: usize) -> usize {
        self.counts.get(&x).copied().unwrap_or(0)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.count(x) >= 1
    }

    pub fn included(&self, other: &Multiset, mode: InclusionMode) -> bool {
        self.counts.iter().all(|(&x, &c)| match mode {
            InclusionMode::MultiplicityAware => c <= other.count(x),
            InclusionMode::SupportOnly => other.contains(x),
        })
    }

    /// Distinct elements with their multiplicities, ascending.
    pub fn counts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&x, &c)| (x, c))
    }

    /// Elements in ascending order, repeated by multiplicity.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.counts
            .iter()
            .flat_map(|(&x, &c)| std::iter::repeat_n(x, c))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn max_element(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    /// Image under `f`, keeping multiplicities.
    pub fn map(&self, mut f: impl FnMut(usize) -> usize) -> Multiset {
        let mut m = Multiset::new();
        for (x, c) in self.counts() {
            m.insert(f(x), c);
        }
        m
    }
}

impl FromIterator<usize> for Multiset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Multiset::from_list(iter)
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseMultisetError(pub String);

impl fmt::Display for ParseMultisetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseMultisetError {}

impl FromStr for Multiset {
    type Err = ParseMultisetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| ParseMultisetError(format!("expected `[...]`, found `{s}`")))?;
        if inner.trim().is_empty() {
            return Ok(Multiset::new());
        }
        inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| ParseMultisetError(format!("bad element `{}`", t.trim())))
            })
            .collect()
    }
}
