//! n-valued groups, racks and quandles.
//!
//! An n-valued product sends a pair of elements to a multiset of exactly
//! `n` elements. Axioms are checked by expanding products of multisets
//! elementwise with multiplicity, so `(x*y)*z` has `n^2` elements and
//! `(x*z)*(y*z)` has `n^3`.

mod coset;
mod linear;
mod multi;
mod pencil;

pub use coset::{coset_nv_group, coset_nv_quandle, double_coset_group, CosetQuandle};
pub use linear::{
    core_z_coset_product, linear_multirack_check, linear_rack_check, zplus_group_check,
    core_z_coset_cell, zplus_group_product, LinearClass, LinearMultiRackReport, LinearRackReport,
    MultiRackFamily, WindowedZOp, DEFAULT_WINDOW,
};
pub use multi::{
    conj_family, multi_check, multi_group_check, multi_rack_check, multi_to_nvalued, power_nvalued, Flavor,
    MultiOpFamily, MultiToNv, EQUAL_UNITS, MIXED_ASSOCIATIVITY, MUTUAL_DISTRIBUTIVITY,
};
pub use pencil::{
    pencil_nv_assoc_check, pencil_product, random_invertible, random_matrix, random_samples,
    PencilReport, NU_INVERSE, NU_UNIT, PENCIL_ASSOCIATIVITY, PLAIN_UNIT,
};

use crate::error::{Error, Result};
use crate::multiset::{InclusionMode, Multiset};
use crate::report::{AxiomReport, Tally, Verdict, Witness};
use crate::table::CayleyTable;

pub const ASSOCIATIVITY: &str = "associativity";
pub const UNIT: &str = "unit";
pub const INVERSE: &str = "inverse";
pub const M1: &str = "M1 invertibility";
pub const M2: &str = "M2 self-distributivity";
pub const M3: &str = "M3 idempotency";
pub const BAR_M2: &str = "bar M2 self-distributivity";

/// A map `(x, y) -> multiset of total n` on the carrier `0..size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NValuedTable {
    size: usize,
    n: usize,
    cells: Vec<Multiset>,
}

impl NValuedTable {
    pub fn new(size: usize, n: usize, cells: Vec<Multiset>) -> Result<Self> {
        if size == 0 || n == 0 {
            return Err(Error::InvalidTable("size and n must be positive".into()));
        }
        if cells.len() != size * size {
            return Err(Error::InvalidTable(format!(
                "expected {} cells, found {}",
                size * size,
                cells.len()
            )));
        }
        for (k, c) in cells.iter().enumerate() {
            if c.total() != n {
                return Err(Error::InvalidTable(format!(
                    "cell ({}, {}) has {} elements, expected {n}",
                    k / size,
                    k % size,
                    c.total()
                )));
            }
            if c.max_element().is_some_and(|m| m >= size) {
                return Err(Error::InvalidTable(format!(
                    "cell ({}, {}) = {c} leaves the carrier",
                    k / size,
                    k % size
                )));
            }
        }
        Ok(NValuedTable { size, n, cells })
    }

    pub fn from_fn(size: usize, n: usize, mut cell: impl FnMut(usize, usize) -> Multiset) -> Result<Self> {
        let cells = (0..size)
            .flat_map(|x| (0..size).map(move |y| (x, y)))
            .map(|(x, y)| cell(x, y))
            .collect();
        NValuedTable::new(size, n, cells)
    }

    /// The single-valued table viewed as 1-valued.
    pub fn from_single(t: &CayleyTable) -> Self {
        NValuedTable::from_fn(t.size(), 1, |x, y| Multiset::constant(t.get(x, y), 1))
            .expect("entries are in range")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> &Multiset {
        &self.cells[x * self.size + y]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Multiset]> {
        self.cells.chunks(self.size)
    }

    /// `[w * y for w in left]`, flattened with multiplicity.
    pub fn expand_left(&self, left: &Multiset, y: usize) -> Multiset {
        let mut out = Multiset::new();
        for (w, c) in left.counts() {
            for _ in 0..c {
                out.absorb(self.get(w, y));
            }
        }
        out
    }

    /// `[x * w for w in right]`, flattened with multiplicity.
    pub fn expand_right(&self, x: usize, right: &Multiset) -> Multiset {
        let mut out = Multiset::new();
        for (w, c) in right.counts() {
            for _ in 0..c {
                out.absorb(self.get(x, w));
            }
        }
        out
    }

    /// `[u * v for u in a, v in b]`
    pub fn expand_both(&self, a: &Multiset, b: &Multiset) -> Multiset {
        let mut out = Multiset::new();
        for u in a.iter() {
            out.absorb(&self.expand_right(u, b));
        }
        out
    }
}

/// Compares `[x*(y*z)_k]` with `[(x*y)_k*z]` as multisets for all triples.
pub fn nv_assoc_check(t: &NValuedTable) -> AxiomReport {
    let mut report = AxiomReport::new();
    report.push(assoc_verdict(t));
    report
}

fn assoc_verdict(t: &NValuedTable) -> Verdict {
    let s = t.size();
    let mut tally = Tally::new(ASSOCIATIVITY);
    for x in 0..s {
        for y in 0..s {
            let xy = t.get(x, y);
            for z in 0..s {
                let left = t.expand_left(xy, z);
                let right = t.expand_right(x, t.get(y, z));
                if left != right {
                    tally.record(|| {
                        Witness::indices(&[x, y, z], format!("(x*y)*z = {left}, x*(y*z) = {right}"))
                    });
                }
            }
        }
    }
    tally.finish()
}

fn unit_verdict(t: &NValuedTable, unit: usize) -> Verdict {
    let mut tally = Tally::new(UNIT);
    if unit >= t.size() {
        tally.record(|| Witness::indices(&[unit], "unit out of range"));
        return tally.finish();
    }
    for x in 0..t.size() {
        let want = Multiset::constant(x, t.n());
        if *t.get(unit, x) != want || *t.get(x, unit) != want {
            tally.record(|| {
                Witness::indices(&[x], format!("e*x = {}, x*e = {}", t.get(unit, x), t.get(x, unit)))
            });
        }
    }
    tally.finish()
}

fn inverse_verdict(t: &NValuedTable, unit: usize, inv: &[usize]) -> Verdict {
    let mut tally = Tally::new(INVERSE);
    if inv.len() != t.size() || inv.iter().any(|&i| i >= t.size()) {
        tally.record(|| Witness::new([], "inverse map has the wrong shape"));
        return tally.finish();
    }
    for (x, &ix) in inv.iter().enumerate() {
        let (a, b) = (t.get(ix, x), t.get(x, ix));
        if !a.contains(unit) || !b.contains(unit) {
            tally.record(|| Witness::indices(&[x], format!("inv(x)*x = {a}, x*inv(x) = {b}")));
        }
    }
    tally.finish()
}

/// Associativity, unit and inverse axioms of an n-valued group.
pub fn nv_group_check(t: &NValuedTable, unit: usize, inv: &[usize]) -> AxiomReport {
    AxiomReport {
        verdicts: vec![assoc_verdict(t), unit_verdict(t, unit), inverse_verdict(t, unit, inv)],
    }
}

/// An n-valued product with unit and inverse map, plus the axiom report
/// computed at construction. Unit and inverse are guaranteed; associativity
/// is recorded in `report`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NValuedGroup {
    product: NValuedTable,
    unit: usize,
    inv: Vec<usize>,
    report: AxiomReport,
}

impl NValuedGroup {
    pub fn new(product: NValuedTable, unit: usize, inv: Vec<usize>) -> Result<Self> {
        let report = nv_group_check(&product, unit, &inv);
        if !report.axiom_passed(UNIT) || !report.axiom_passed(INVERSE) {
            return Err(Error::PreconditionFailed(report));
        }
        Ok(NValuedGroup {
            product,
            unit,
            inv,
            report,
        })
    }

    pub fn product(&self) -> &NValuedTable {
        &self.product
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn inv(&self) -> &[usize] {
        &self.inv
    }

    pub fn report(&self) -> &AxiomReport {
        &self.report
    }

    pub fn is_group(&self) -> bool {
        self.report.passed()
    }
}

/// Finds a unit and inverse map for `t`, if the table has one.
pub fn detect_unit_inverse(t: &NValuedTable) -> Option<(usize, Vec<usize>)> {
    let unit = (0..t.size()).find(|&e| unit_verdict(t, e).passed)?;
    let inv = (0..t.size())
        .map(|x| {
            (0..t.size()).find(|&y| t.get(y, x).contains(unit) && t.get(x, y).contains(unit))
        })
        .collect::<Option<Vec<_>>>()?;
    Some((unit, inv))
}

/// M1, M2 (in the given inclusion mode) and, if requested, M3. Also reports,
/// for information only, whether `bar` itself satisfies M2.
pub fn nv_rack_check(
    product: &NValuedTable,
    bar: &NValuedTable,
    want_quandle: bool,
    mode: InclusionMode,
) -> Result<AxiomReport> {
    if product.size() != bar.size() || product.n() != bar.n() {
        return Err(Error::CarrierMismatch(product.size(), bar.size()));
    }
    let s = product.size();
    let mut m1 = Tally::new(M1);
    for x in 0..s {
        for y in 0..s {
            let a = bar.expand_left(product.get(x, y), y);
            let b = product.expand_left(bar.get(x, y), y);
            if !a.contains(x) || !b.contains(x) {
                m1.record(|| Witness::indices(&[x, y], format!("(x*y)bar y = {a}, (x bar y)*y = {b}")));
            }
        }
    }
    let mut report = AxiomReport::new();
    report.push(m1.finish());
    report.push(m2_verdict(product, mode, M2));
    if want_quandle {
        let mut m3 = Tally::new(M3);
        for x in 0..s {
            if !product.get(x, x).contains(x) {
                m3.record(|| Witness::indices(&[x], format!("x*x = {}", product.get(x, x))));
            }
        }
        report.push(m3.finish());
    }
    report.push(m2_verdict(bar, mode, BAR_M2).informational());
    Ok(report)
}

fn m2_verdict(t: &NValuedTable, mode: InclusionMode, axiom: &str) -> Verdict {
    let s = t.size();
    let mut tally = Tally::new(axiom);
    for x in 0..s {
        for y in 0..s {
            let xy = t.get(x, y);
            for z in 0..s {
                let left = t.expand_left(xy, z);
                let right = t.expand_both(t.get(x, z), t.get(y, z));
                if !left.included(&right, mode) {
                    tally.record(|| {
                        Witness::indices(&[x, y, z], format!("(x*y)*z = {left}, (x*z)*(y*z) = {right}"))
                    });
                }
            }
        }
    }
    tally.finish()
}

/// An n-valued product with its inverse operation, validated at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NValuedRack {
    product: NValuedTable,
    bar: NValuedTable,
    quandle: bool,
    report: AxiomReport,
}

impl NValuedRack {
    /// Fails unless M1, M2 (and M3 when `want_quandle`) hold in `mode`.
    pub fn new(product: NValuedTable, bar: NValuedTable, want_quandle: bool, mode: InclusionMode) -> Result<Self> {
        let report = nv_rack_check(&product, &bar, want_quandle, mode)?;
        if !report.passed() {
            return Err(Error::PreconditionFailed(report));
        }
        Ok(NValuedRack {
            product,
            bar,
            quandle: want_quandle,
            report,
        })
    }

    pub fn product(&self) -> &NValuedTable {
        &self.product
    }

    pub fn bar(&self) -> &NValuedTable {
        &self.bar
    }

    pub fn is_quandle(&self) -> bool {
        self.quandle
    }

    pub fn report(&self) -> &AxiomReport {
        &self.report
    }
}
