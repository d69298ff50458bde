//! Coset and double-coset constructions.

use crate::error::{Error, Result};
use crate::groups::{double_cosets, orbits, FiniteGroup, Partition, PermGroup};
use crate::multiset::{InclusionMode, Multiset};
use crate::quandles::{table_automorphism_witness, QuandleTable};
use crate::table::CayleyTable;

use super::{NValuedGroup, NValuedRack, NValuedTable};

/// Pushes `op` to the orbit space of `a`: cell `(x, y)` is
/// `[pi(op(rep x, alpha(rep y))) for alpha in a]` with minimal representatives.
/// Every other choice of representatives is recomputed and must agree.
fn orbit_table(
    part: &Partition,
    a: &PermGroup,
    op: impl Fn(usize, usize) -> usize,
) -> Result<NValuedTable> {
    let cell = |g1: usize, g2: usize| -> Multiset {
        a.elements()
            .iter()
            .map(|alpha| part.proj[op(g1, alpha.apply(g2))])
            .collect()
    };
    let k = part.len();
    let table = NValuedTable::from_fn(k, a.order(), |x, y| {
        cell(part.representative(x), part.representative(y))
    })?;
    for x in 0..k {
        for y in 0..k {
            for &g1 in &part.parts[x] {
                for &g2 in &part.parts[y] {
                    let other = cell(g1, g2);
                    if other != *table.get(x, y) {
                        return Err(Error::RepresentativeDependence(format!(
                            "cell ({x}, {y}) is {} with representatives ({}, {}) but {other} with ({g1}, {g2})",
                            table.get(x, y),
                            part.representative(x),
                            part.representative(y)
                        )));
                    }
                }
            }
        }
    }
    Ok(table)
}

/// The coset n-valued group of `(g, a)` on the orbits of `a`.
pub fn coset_nv_group(g: &FiniteGroup, a: &PermGroup) -> Result<NValuedGroup> {
    if a.degree() != g.size() {
        return Err(Error::CarrierMismatch(a.degree(), g.size()));
    }
    for alpha in a.elements() {
        if let Some((x, y)) = g.automorphism_witness(alpha) {
            return Err(Error::NotAnAutomorphism(format!(
                "{:?} does not preserve {x}*{y}",
                alpha.images()
            )));
        }
    }
    let part = orbits(a);
    let table = orbit_table(&part, a, |x, y| g.mul(x, y))?;
    let unit = part.proj[g.unit()];
    let inv = (0..part.len())
        .map(|x| part.proj[g.inverse(part.representative(x))])
        .collect();
    NValuedGroup::new(table, unit, inv)
}

/// A coset n-valued quandle together with the orbit partition it lives on.
#[derive(Debug, Clone)]
pub struct CosetQuandle {
    pub rack: NValuedRack,
    pub orbits: Partition,
}

/// The coset n-valued quandle of `(q, a)`; the bar operation is the
/// projection of the inverse operation of `q`.
pub fn coset_nv_quandle(q: &QuandleTable, a: &PermGroup, mode: InclusionMode) -> Result<CosetQuandle> {
    if a.degree() != q.size() {
        return Err(Error::CarrierMismatch(a.degree(), q.size()));
    }
    for alpha in a.elements() {
        if let Some((y, z)) = table_automorphism_witness(q.table(), alpha) {
            return Err(Error::NotAnAutomorphism(format!(
                "{:?} does not preserve {y}*{z}",
                alpha.images()
            )));
        }
    }
    let part = orbits(a);
    let bar: CayleyTable = q.bar_table();
    let product = orbit_table(&part, a, |x, y| q.op(x, y))?;
    let bar = orbit_table(&part, a, |x, y| bar.get(x, y))?;
    let rack = NValuedRack::new(product, bar, q.is_quandle(), mode)?;
    Ok(CosetQuandle { rack, orbits: part })
}

/// The double coset structure on `H\G/H`: cell `(x, y)` is
/// `[pi(g1 h g2) for h in H]`. Unit and inverse always hold; associativity
/// is recorded in the report of the returned group.
pub fn double_coset_group(g: &FiniteGroup, h: &[usize]) -> Result<(NValuedGroup, Partition)> {
    let h = g.validate_subgroup(h)?;
    let part = double_cosets(g, &h)?;
    let table = NValuedTable::from_fn(part.len(), h.len(), |x, y| {
        let (g1, g2) = (part.representative(x), part.representative(y));
        h.iter().map(|&k| part.proj[g.mul(g.mul(g1, k), g2)]).collect()
    })?;
    let unit = part.proj[g.unit()];
    let inv = (0..part.len())
        .map(|x| part.proj[g.inverse(part.representative(x))])
        .collect();
    Ok((NValuedGroup::new(table, unit, inv)?, part))
}
