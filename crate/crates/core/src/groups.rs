//! Finite groups as Cayley tables, permutation groups, orbits and double
//! cosets.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::table::CayleyTable;

/// Largest order accepted by [`group_isomorphic`].
pub const ISOMORPHISM_LIMIT: usize = 12;

/// A permutation of `0..degree`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree).collect())
    }

    /// Returns `None` unless `images` is a bijection of `0..images.len()`.
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(Perm(images))
    }

    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut p = Perm::identity(degree);
        p.0.swap(a, b);
        p
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }
}

/// A finite group of permutations, closed under composition and inversion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            elements: vec![Perm::identity(degree)],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in ascending order of their image lists; the identity comes first.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

/// Closure of `gens` under composition; the identity is always included.
pub fn subgroup_generated(degree: usize, gens: &[Perm]) -> PermGroup {
    assert!(
        gens.iter().all(|g| g.degree() == degree),
        "generators must share the degree {degree}"
    );
    let id = Perm::identity(degree);
    let mut seen: BTreeSet<Perm> = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = p.then(g);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    // A finite set closed under composition is closed under inversion.
    PermGroup {
        degree,
        elements: seen.into_iter().collect(),
    }
}

/// A partition of `0..n` into parts, with the projection onto part ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    /// Each part sorted ascending; parts sorted by their minimum.
    pub parts: Vec<Vec<usize>>,
    /// `proj[x]` is the id of the part containing `x`.
    pub proj: Vec<usize>,
}

impl Partition {
    fn from_labels(labels: &[usize]) -> Self {
        // Relabel classes by first occurrence so parts are ordered by minimum.
        let mut remap = vec![usize::MAX; labels.len()];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        let mut proj = vec![0; labels.len()];
        for (x, &l) in labels.iter().enumerate() {
            if remap[l] == usize::MAX {
                remap[l] = parts.len();
                parts.push(Vec::new());
            }
            proj[x] = remap[l];
            parts[remap[l]].push(x);
        }
        Partition { parts, proj }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Minimal element of each part.
    pub fn representative(&self, part: usize) -> usize {
        self.parts[part][0]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }
}

pub fn orbits(a: &PermGroup) -> Partition {
    let n = a.degree();
    let mut label = vec![usize::MAX; n];
    for x in 0..n {
        if label[x] != usize::MAX {
            continue;
        }
        for p in a.elements() {
            label[p.apply(x)] = x;
        }
    }
    Partition::from_labels(&label)
}

/// A validated finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    table: CayleyTable,
    unit: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

pub fn group_from_table(table: CayleyTable) -> Result<FiniteGroup> {
    let n = table.size();
    for x in 0..n {
        for y in 0..n {
            let xy = table.get(x, y);
            for z in 0..n {
                if table.get(xy, z) != table.get(x, table.get(y, z)) {
                    return Err(Error::NotAssociative(x, y, z));
                }
            }
        }
    }
    let unit = (0..n)
        .find(|&e| (0..n).all(|x| table.get(e, x) == x && table.get(x, e) == x))
        .ok_or(Error::NoUnit)?;
    let inverse = (0..n)
        .map(|x| {
            (0..n)
                .find(|&y| table.get(x, y) == unit && table.get(y, x) == unit)
                .ok_or(Error::NoInverse(x))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FiniteGroup {
        table,
        unit,
        inverse,
        labels: (0..n).map(|i| i.to_string()).collect(),
    })
}

impl FiniteGroup {
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.size());
        self.labels = labels;
        self
    }

    pub fn size(&self) -> usize {
        self.table.size()
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table.get(x, y)
    }

    /// `x^k` for any integer `k`.
    pub fn pow(&self, x: usize, k: i64) -> usize {
        let base = if k < 0 { self.inverse(x) } else { x };
        let mut acc = self.unit;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != self.unit {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.size()).map(|x| self.element_order(x)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| (0..n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// First pair `(x, y)` with `p(xy) != p(x)p(y)`.
    pub fn automorphism_witness(&self, p: &Perm) -> Option<(usize, usize)> {
        if p.degree() != self.size() {
            return Some((0, 0));
        }
        let n = self.size();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| p.apply(self.mul(x, y)) != self.mul(p.apply(x), p.apply(y)))
    }

    /// Checks that `h` is a subgroup, returning it sorted and deduplicated.
    pub fn validate_subgroup(&self, h: &[usize]) -> Result<Vec<usize>> {
        let set: BTreeSet<usize> = h.iter().copied().collect();
        if let Some(&x) = set.iter().find(|&&x| x >= self.size()) {
            return Err(Error::NotASubgroup(format!("element {x} out of range")));
        }
        if !set.contains(&self.unit) {
            return Err(Error::NotASubgroup("unit missing".into()));
        }
        for &a in &set {
            for &b in &set {
                let ab = self.mul(a, b);
                if !set.contains(&ab) {
                    return Err(Error::NotASubgroup(format!("{a}*{b} = {ab} not in subset")));
                }
            }
        }
        Ok(set.into_iter().collect())
    }

    /// Every element of `b` as a conjugation permutation.
    pub fn conjugation_group(&self, b: &[usize]) -> Result<PermGroup> {
        let b = self.validate_subgroup(b)?;
        let gens: Vec<Perm> = b.iter().map(|&x| conjugation_action(self, x)).collect();
        Ok(subgroup_generated(self.size(), &gens))
    }
}

/// `x -> by^{-1} x by`
pub fn conjugation_action(g: &FiniteGroup, by: usize) -> Perm {
    let inv = g.inverse(by);
    Perm(
        (0..g.size())
            .map(|x| g.mul(g.mul(inv, x), by))
            .collect(),
    )
}

/// Partition of `g` into double cosets `HxH`.
pub fn double_cosets(g: &FiniteGroup, h: &[usize]) -> Result<Partition> {
    let h = g.validate_subgroup(h)?;
    let n = g.size();
    let mut label = vec![usize::MAX; n];
    for x in 0..n {
        if label[x] != usize::MAX {
            continue;
        }
        for &a in &h {
            for &b in &h {
                label[g.mul(g.mul(a, x), b)] = x;
            }
        }
    }
    Ok(Partition::from_labels(&label))
}

/// A bijection `phi` (indexed by elements of `g1`) with `phi(xy) = phi(x)phi(y)`,
/// if one exists. Among all isomorphisms, the one found assigns each new
/// generator (smallest unassigned element) the smallest admissible image.
pub fn group_isomorphic(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<Option<Vec<usize>>> {
    let n = g1.size();
    for g in [g1, g2] {
        if g.size() > ISOMORPHISM_LIMIT {
            return Err(Error::SizeLimitExceeded {
                size: g.size(),
                limit: ISOMORPHISM_LIMIT,
            });
        }
    }
    if n != g2.size() {
        return Ok(None);
    }
    let mut o1 = g1.element_orders();
    let mut o2 = g2.element_orders();
    let (ord1, ord2) = (o1.clone(), o2.clone());
    o1.sort_unstable();
    o2.sort_unstable();
    if o1 != o2 {
        return Ok(None);
    }
    let mut phi = vec![usize::MAX; n];
    phi[g1.unit()] = g2.unit();
    Ok(extend_isomorphism(g1, g2, &ord1, &ord2, phi))
}

fn extend_isomorphism(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    ord1: &[usize],
    ord2: &[usize],
    phi: Vec<usize>,
) -> Option<Vec<usize>> {
    let Some(x) = phi.iter().position(|&v| v == usize::MAX) else {
        return Some(phi);
    };
    let used: BTreeSet<usize> = phi.iter().copied().filter(|&v| v != usize::MAX).collect();
    for cand in 0..g2.size() {
        if used.contains(&cand) || ord2[cand] != ord1[x] {
            continue;
        }
        let mut next = phi.clone();
        next[x] = cand;
        if propagate(g1, g2, &mut next) {
            if let Some(done) = extend_isomorphism(g1, g2, ord1, ord2, next) {
                return Some(done);
            }
        }
    }
    None
}

/// Closes a partial map under products; false on any inconsistency.
fn propagate(g1: &FiniteGroup, g2: &FiniteGroup, phi: &mut [usize]) -> bool {
    let n = g1.size();
    loop {
        let mut changed = false;
        for a in 0..n {
            if phi[a] == usize::MAX {
                continue;
            }
            for b in 0..n {
                if phi[b] == usize::MAX {
                    continue;
                }
                let c = g1.mul(a, b);
                let img = g2.mul(phi[a], phi[b]);
                if phi[c] == usize::MAX {
                    if phi.contains(&img) {
                        return false;
                    }
                    phi[c] = img;
                    changed = true;
                } else if phi[c] != img {
                    return false;
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

/// Groups available by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGroup {
    /// Elements `e, s1, s2, s1s2, s2s1, s1s2s1`.
    S3,
    /// Elements `E, A1, A2, A3, C1, C2`.
    Sl2F2,
    /// Cyclic group of order k, elements `0..k` under addition.
    Zn(usize),
    /// Elements `0..4` under bitwise xor.
    Klein4,
}

impl FromStr for NamedGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "s3" => Ok(NamedGroup::S3),
            "sl2f2" | "sl2z2" => Ok(NamedGroup::Sl2F2),
            "klein4" | "v4" => Ok(NamedGroup::Klein4),
            _ => lower
                .strip_prefix('z')
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k >= 1)
                .map(NamedGroup::Zn)
                .ok_or_else(|| Error::UnknownName(s.to_string())),
        }
    }
}

impl fmt::Display for NamedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGroup::S3 => f.write_str("S3"),
            NamedGroup::Sl2F2 => f.write_str("SL2F2"),
            NamedGroup::Zn(k) => write!(f, "Z{k}"),
            NamedGroup::Klein4 => f.write_str("Klein4"),
        }
    }
}

pub const S3_LABELS: [&str; 6] = ["e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"];
pub const SL2F2_LABELS: [&str; 6] = ["E", "A1", "A2", "A3", "C1", "C2"];

/// Cycle notation (on points 1, 2, 3) of the S3 elements in their canonical
/// order, with `s1 = (12)`, `s2 = (23)` and products read left to right.
pub const S3_CYCLES: [&str; 6] = ["()", "(12)", "(23)", "(132)", "(123)", "(13)"];

pub fn make_named_group(name: NamedGroup) -> Result<FiniteGroup> {
    match name {
        NamedGroup::S3 => {
            let s1 = Perm::transposition(3, 0, 1);
            let s2 = Perm::transposition(3, 1, 2);
            let e = Perm::identity(3);
            let elems = vec![
                e,
                s1.clone(),
                s2.clone(),
                s1.then(&s2),
                s2.then(&s1),
                s1.then(&s2).then(&s1),
            ];
            table_from_elements(&elems, |a, b| a.then(b), &S3_LABELS)
        }
        NamedGroup::Sl2F2 => {
            type M = [[u8; 2]; 2];
            let elems: Vec<M> = vec![
                [[1, 0], [0, 1]],
                [[0, 1], [1, 0]],
                [[1, 1], [0, 1]],
                [[1, 0], [1, 1]],
                [[1, 1], [1, 0]],
                [[0, 1], [1, 1]],
            ];
            let mul = |a: &M, b: &M| -> M {
                let mut c = [[0u8; 2]; 2];
                for (i, row) in c.iter_mut().enumerate() {
                    for (j, v) in row.iter_mut().enumerate() {
                        *v = (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % 2;
                    }
                }
                c
            };
            table_from_elements(&elems, mul, &SL2F2_LABELS)
        }
        NamedGroup::Zn(k) => {
            if k == 0 {
                return Err(Error::UnknownName("Z0".into()));
            }
            group_from_table(CayleyTable::from_fn(k, |a, b| (a + b) % k))
        }
        NamedGroup::Klein4 => group_from_table(CayleyTable::from_fn(4, |a, b| a ^ b)),
    }
}

fn table_from_elements<T: PartialEq>(
    elems: &[T],
    mul: impl Fn(&T, &T) -> T,
    labels: &[&str],
) -> Result<FiniteGroup> {
    let n = elems.len();
    let idx = |x: &T| elems.iter().position(|e| e == x).expect("closed under product");
    let table = CayleyTable::from_fn(n, |a, b| idx(&mul(&elems[a], &elems[b])));
    Ok(group_from_table(table)?.with_labels(labels.iter().map(|s| s.to_string()).collect()))
}
