//! Multi-operation families (multi-groups, multi-racks) and the n-valued
//! structures assembled from them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::groups::{group_from_table, FiniteGroup};
use crate::multiset::{InclusionMode, Multiset};
use crate::quandles::{is_n_quandle, mixed_distributivity, quandle_check, rack_check, QuandleTable};
use crate::report::{AxiomReport, Tally, Witness};
use crate::table::CayleyTable;

use super::{nv_assoc_check, nv_rack_check, NValuedRack, NValuedTable};

pub const MIXED_ASSOCIATIVITY: &str = "mixed associativity";
pub const EQUAL_UNITS: &str = "equal units give equal operations";
pub const MUTUAL_DISTRIBUTIVITY: &str = "mutual distributivity";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Group,
    Rack,
    Quandle,
}

impl FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "group" => Ok(Flavor::Group),
            "rack" => Ok(Flavor::Rack),
            "quandle" => Ok(Flavor::Quandle),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Group => "group",
            Flavor::Rack => "rack",
            Flavor::Quandle => "quandle",
        })
    }
}

/// Several single-valued operations on one carrier, each satisfying the
/// axioms of its flavor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiOpFamily {
    size: usize,
    ops: Vec<CayleyTable>,
    flavor: Flavor,
}

impl MultiOpFamily {
    pub fn new(ops: Vec<CayleyTable>, flavor: Flavor) -> Result<Self> {
        let size = ops
            .first()
            .map(CayleyTable::size)
            .ok_or_else(|| Error::InvalidTable("a family needs at least one operation".into()))?;
        for op in &ops {
            if op.size() != size {
                return Err(Error::CarrierMismatch(size, op.size()));
            }
            match flavor {
                Flavor::Group => {
                    group_from_table(op.clone())?;
                }
                Flavor::Rack | Flavor::Quandle => {
                    let r = if flavor == Flavor::Rack { rack_check(op) } else { quandle_check(op) };
                    if !r.passed() {
                        return Err(Error::PreconditionFailed(r));
                    }
                }
            }
        }
        Ok(MultiOpFamily { size, ops, flavor })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ops(&self) -> &[CayleyTable] {
        &self.ops
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    fn groups(&self) -> Vec<FiniteGroup> {
        self.ops
            .iter()
            .map(|t| group_from_table(t.clone()).expect("validated at construction"))
            .collect()
    }
}

/// `(a *i b) *j c = a *i (b *j c)` for all `i, j` and all triples; the
/// witness is `(i, j, a, b, c)`. A second verdict audits that operations
/// sharing a unit are equal whenever mixed associativity holds.
pub fn multi_group_check(fam: &MultiOpFamily) -> Result<AxiomReport> {
    if fam.flavor() != Flavor::Group {
        return Err(Error::UnknownName(format!("expected a group family, found {}", fam.flavor())));
    }
    let s = fam.size();
    let ops = fam.ops();
    let mut tally = Tally::new(MIXED_ASSOCIATIVITY);
    for (i, ti) in ops.iter().enumerate() {
        for (j, tj) in ops.iter().enumerate() {
            for a in 0..s {
                for b in 0..s {
                    for c in 0..s {
                        let lhs = tj.get(ti.get(a, b), c);
                        let rhs = ti.get(a, tj.get(b, c));
                        if lhs != rhs {
                            tally.record(|| {
                                Witness::indices(
                                    &[i, j, a, b, c],
                                    format!("(a *{i} b) *{j} c = {lhs}, a *{i} (b *{j} c) = {rhs}"),
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    let mixed = tally.finish();
    let mut audit = Tally::new(EQUAL_UNITS);
    if mixed.passed {
        let groups = fam.groups();
        for i in 0..ops.len() {
            for j in i + 1..ops.len() {
                if groups[i].unit() == groups[j].unit() && ops[i] != ops[j] {
                    audit.record(|| Witness::indices(&[i, j], "shared unit but different tables"));
                }
            }
        }
    }
    Ok(AxiomReport {
        verdicts: vec![mixed, audit.finish()],
    })
}

/// `(x *i y) *j z = (x *j z) *i (y *j z)` for all ordered pairs `(i, j)`;
/// the witness is `(i, j, x, y, z)`.
pub fn multi_rack_check(fam: &MultiOpFamily) -> Result<AxiomReport> {
    if fam.flavor() == Flavor::Group {
        return Err(Error::UnknownName("expected a rack or quandle family".into()));
    }
    let mut tally = Tally::new(MUTUAL_DISTRIBUTIVITY);
    for (i, ti) in fam.ops().iter().enumerate() {
        for (j, tj) in fam.ops().iter().enumerate() {
            let v = mixed_distributivity(ti, tj, MUTUAL_DISTRIBUTIVITY);
            tally.absorb(&v, &[i as i64, j as i64]);
        }
    }
    Ok(AxiomReport {
        verdicts: vec![tally.finish()],
    })
}

/// The n-valued structure `x * y = [x *1 y, ..., x *n y]`.
#[derive(Debug, Clone)]
pub struct MultiToNv {
    pub product: NValuedTable,
    /// Present for rack and quandle families: `[x bar_i y]`.
    pub bar: Option<NValuedTable>,
    /// n-valued associativity (groups) or M1-M3 (racks/quandles).
    pub report: AxiomReport,
}

pub fn multi_to_nvalued(fam: &MultiOpFamily, mode: InclusionMode) -> Result<MultiToNv> {
    let pre = match fam.flavor() {
        Flavor::Group => multi_group_check(fam)?,
        _ => multi_rack_check(fam)?,
    };
    if !pre.passed() {
        return Err(Error::PreconditionFailed(pre));
    }
    let n = fam.ops().len();
    let product = NValuedTable::from_fn(fam.size(), n, |x, y| {
        fam.ops().iter().map(|t| t.get(x, y)).collect()
    })?;
    if fam.flavor() == Flavor::Group {
        let report = nv_assoc_check(&product);
        return Ok(MultiToNv {
            product,
            bar: None,
            report,
        });
    }
    let bars: Vec<CayleyTable> = fam
        .ops()
        .iter()
        .map(|t| QuandleTable::new(t.clone()).map(|q| q.bar_table()))
        .collect::<Result<_>>()?;
    let bar = NValuedTable::from_fn(fam.size(), n, |x, y| bars.iter().map(|t| t.get(x, y)).collect())?;
    let report = nv_rack_check(&product, &bar, fam.flavor() == Flavor::Quandle, mode)?;
    Ok(MultiToNv {
        product,
        bar: Some(bar),
        report,
    })
}

/// `g * h = [h^{-i} g h^i for i in exponents]`, bar `[h^i g h^{-i}]`.
pub fn conj_family(g: &FiniteGroup, exponents: &[i64], mode: InclusionMode) -> Result<NValuedRack> {
    let n = exponents.len();
    let conj = |a: usize, b: usize, m: i64| g.mul(g.mul(g.pow(b, -m), a), g.pow(b, m));
    let product = NValuedTable::from_fn(g.size(), n, |a, b| exponents.iter().map(|&i| conj(a, b, i)).collect())?;
    let bar = NValuedTable::from_fn(g.size(), n, |a, b| exponents.iter().map(|&i| conj(a, b, -i)).collect())?;
    NValuedRack::new(product, bar, true, mode)
}

/// `x * y = [S_y(x), S_y^2(x), ..., S_y^n(x)]` for an n-quandle.
pub fn power_nvalued(q: &QuandleTable, n: usize, mode: InclusionMode) -> Result<NValuedRack> {
    if n == 0 || !is_n_quandle(q, n) {
        return Err(Error::NotAnNQuandle(n));
    }
    let cell = |sign: i64| {
        move |x: usize, y: usize| -> Multiset { (1..=n as i64).map(|k| q.power_op(x, y, sign * k)).collect() }
    };
    let product = NValuedTable::from_fn(q.size(), n, cell(1))?;
    let bar = NValuedTable::from_fn(q.size(), n, cell(-1))?;
    NValuedRack::new(product, bar, q.is_quandle(), mode)
}

/// Runs `multi_rack_check` / `multi_group_check` as appropriate.
pub fn multi_check(fam: &MultiOpFamily) -> Result<AxiomReport> {
    match fam.flavor() {
        Flavor::Group => multi_group_check(fam),
        _ => multi_rack_check(fam),
    }
}
