//! Dense structure-constant tensors and sparse elements of tensor powers.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// A dense array of scalars with a fixed shape, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalTensor<S = Rational> {
    shape: Vec<usize>,
    entries: Vec<S>,
}

impl<S: Scalar> RationalTensor<S> {
    pub fn zeros(shape: &[usize]) -> Self {
        let len = shape.iter().product();
        RationalTensor { shape: shape.to_vec(), entries: vec![S::zero(); len] }
    }

    pub fn from_entries(shape: &[usize], entries: Vec<S>) -> Result<Self> {
        let len: usize = shape.iter().product();
        if entries.len() != len {
            return Err(Error::ShapeMismatch(format!(
                "shape {shape:?} needs {len} entries, got {}",
                entries.len()
            )));
        }
        Ok(RationalTensor { shape: shape.to_vec(), entries })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    fn offset(&self, index: &[usize]) -> usize {
        assert_eq!(index.len(), self.shape.len(), "index rank");
        index.iter().zip(&self.shape).fold(0, |acc, (&i, &d)| {
            assert!(i < d, "index {i} out of range {d}");
            acc * d + i
        })
    }

    pub fn get(&self, index: &[usize]) -> &S {
        &self.entries[self.offset(index)]
    }

    pub fn set(&mut self, index: &[usize], value: S) {
        let o = self.offset(index);
        self.entries[o] = value;
    }

    pub fn add_at(&mut self, index: &[usize], value: S) {
        let o = self.offset(index);
        self.entries[o] = self.entries[o].clone() + value;
    }

    /// Nonzero entries with their multi-indices, in row-major order.
    pub fn nonzero(&self) -> Vec<(Vec<usize>, S)> {
        let mut out = Vec::new();
        for (flat, v) in self.entries.iter().enumerate() {
            if !v.is_zero() {
                let mut index = vec![0; self.shape.len()];
                let mut rest = flat;
                for (slot, &d) in self.shape.iter().enumerate().rev() {
                    index[slot] = rest % d;
                    rest /= d;
                }
                out.push((index, v.clone()));
            }
        }
        out
    }
}

/// An element of `A^{(x)k}` in the basis `e_{i1} (x) ... (x) e_{ik}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorElement<S = Rational> {
    rank: usize,
    terms: BTreeMap<Vec<usize>, S>,
}

impl<S: Scalar> TensorElement<S> {
    pub fn zero(rank: usize) -> Self {
        TensorElement { rank, terms: BTreeMap::new() }
    }

    pub fn basis(index: Vec<usize>) -> Self {
        let mut t = TensorElement::zero(index.len());
        t.add(index, S::one());
        t
    }

    /// `v_1 (x) ... (x) v_k` for dense vectors.
    pub fn product_of(vectors: &[Vec<S>]) -> Self {
        let mut out = TensorElement::zero(vectors.len());
        let mut stack: Vec<(Vec<usize>, S)> = vec![(Vec::new(), S::one())];
        for v in vectors {
            let mut next = Vec::new();
            for (idx, c) in &stack {
                for (i, vi) in v.iter().enumerate() {
                    if !vi.is_zero() {
                        let mut j = idx.clone();
                        j.push(i);
                        next.push((j, c.clone() * vi.clone()));
                    }
                }
            }
            stack = next;
        }
        for (idx, c) in stack {
            out.add(idx, c);
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add(&mut self, index: Vec<usize>, c: S) {
        debug_assert_eq!(index.len(), self.rank);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(index);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn coefficient(&self, index: &[usize]) -> S {
        self.terms.get(index).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &S)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// First index (in sorted order) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<Vec<usize>> {
        let mut keys: Vec<&Vec<usize>> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find(|k| self.coefficient(k) != other.coefficient(k)).cloned()
    }

    /// Applies a linear map `A -> A^{(x)r}` to slot `pos`, given on basis
    /// vectors as a list of `(image index, coefficient)`.
    pub fn apply_at<F>(&self, pos: usize, out_rank: usize, image: F) -> Self
    where
        F: Fn(usize) -> Vec<(Vec<usize>, S)>,
    {
        self.apply_slots(pos, 1, out_rank, |idx| image(idx[0]))
    }

    /// Applies a linear map `A^{(x)width} -> A^{(x)out_rank}` to slots
    /// `pos..pos + width`.
    pub fn apply_slots<F>(&self, pos: usize, width: usize, out_rank: usize, image: F) -> Self
    where
        F: Fn(&[usize]) -> Vec<(Vec<usize>, S)>,
    {
        assert!(pos + width <= self.rank, "slots out of range");
        let mut out = TensorElement::zero(self.rank - width + out_rank);
        for (idx, c) in &self.terms {
            for (img, d) in image(&idx[pos..pos + width]) {
                let mut j = idx[..pos].to_vec();
                j.extend(img);
                j.extend_from_slice(&idx[pos + width..]);
                out.add(j, c.clone() * d);
            }
        }
        out
    }

    /// `sigma` on slots `pos, pos + 1`.
    pub fn swap_at(&self, pos: usize) -> Self {
        self.apply_slots(pos, 2, 2, |ab| vec![(vec![ab[1], ab[0]], S::one())])
    }
}

impl<S: Scalar> fmt::Display for TensorElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(idx, c)| {
                let basis: Vec<String> = idx.iter().map(|i| format!("e{i}")).collect();
                format!("{c}*{}", basis.join("(x)"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
