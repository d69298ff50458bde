//! Single-valued racks and quandles.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::groups::{make_named_group, subgroup_generated, FiniteGroup, NamedGroup, Perm, PermGroup};
use crate::report::{AxiomReport, Tally, Verdict, Witness};
use crate::table::CayleyTable;

/// Largest order accepted by the enumerators.
pub const ENUMERATION_LIMIT: usize = 5;

pub const Q1: &str = "Q1 idempotency";
pub const Q2: &str = "Q2 invertibility";
pub const Q3: &str = "Q3 self-distributivity";

pub fn check_q1(t: &CayleyTable) -> Verdict {
    let mut tally = Tally::new(Q1);
    for x in 0..t.size() {
        if t.get(x, x) != x {
            tally.record(|| Witness::indices(&[x], format!("{x}*{x} = {}", t.get(x, x))));
        }
    }
    tally.finish()
}

/// Every column `z -> z*y` must be a bijection. The witness is
/// `(y, x1, x2)` with `x1*y == x2*y`.
pub fn check_q2(t: &CayleyTable) -> Verdict {
    let n = t.size();
    let mut tally = Tally::new(Q2);
    for y in 0..n {
        let mut first = vec![usize::MAX; n];
        for x in 0..n {
            let v = t.get(x, y);
            if first[v] != usize::MAX {
                let x1 = first[v];
                tally.record(|| Witness::indices(&[y, x1, x], format!("{x1}*{y} = {x}*{y} = {v}")));
                break;
            }
            first[v] = x;
        }
    }
    tally.finish()
}

pub fn check_q3(t: &CayleyTable) -> Verdict {
    let n = t.size();
    let mut tally = Tally::new(Q3);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = t.get(t.get(x, y), z);
                let rhs = t.get(t.get(x, z), t.get(y, z));
                if lhs != rhs {
                    tally.record(|| {
                        Witness::indices(&[x, y, z], format!("(x*y)*z = {lhs}, (x*z)*(y*z) = {rhs}"))
                    });
                }
            }
        }
    }
    tally.finish()
}

pub fn rack_check(t: &CayleyTable) -> AxiomReport {
    AxiomReport {
        verdicts: vec![check_q2(t), check_q3(t)],
    }
}

pub fn quandle_check(t: &CayleyTable) -> AxiomReport {
    AxiomReport {
        verdicts: vec![check_q1(t), check_q2(t), check_q3(t)],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuandleKind {
    Rack,
    Quandle,
}

/// A table known to satisfy Q2 and Q3 (and Q1 when `kind` is `Quandle`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuandleTable {
    table: CayleyTable,
    kind: QuandleKind,
}

impl QuandleTable {
    /// Promotes a table passing `rack_check`; the kind is `Quandle` iff Q1 also holds.
    pub fn new(table: CayleyTable) -> Result<Self> {
        let report = rack_check(&table);
        if !report.passed() {
            return Err(Error::PreconditionFailed(report));
        }
        let kind = if check_q1(&table).passed {
            QuandleKind::Quandle
        } else {
            QuandleKind::Rack
        };
        Ok(QuandleTable { table, kind })
    }

    pub fn size(&self) -> usize {
        self.table.size()
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn kind(&self) -> QuandleKind {
        self.kind
    }

    pub fn is_quandle(&self) -> bool {
        self.kind == QuandleKind::Quandle
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table.get(x, y)
    }

    /// The right translation `S_y: x -> x*y`.
    pub fn translation(&self, y: usize) -> Perm {
        Perm::new(self.table.column(y)).expect("Q2 holds")
    }

    /// The inverse operation: the unique `w` with `w*y == x`.
    pub fn bar_table(&self) -> CayleyTable {
        let n = self.size();
        let inv: Vec<Perm> = (0..n).map(|y| self.translation(y).inverse()).collect();
        CayleyTable::from_fn(n, |x, y| inv[y].apply(x))
    }

    /// `x (*^k) y`, i.e. `S_y^k(x)`; negative `k` uses the inverse operation.
    pub fn power_op(&self, x: usize, y: usize, k: i64) -> usize {
        let s = self.translation(y);
        let s = if k < 0 { s.inverse() } else { s };
        (0..k.unsigned_abs()).fold(x, |acc, _| s.apply(acc))
    }
}

/// `a * b = b^{-m} a b^m`
pub fn conj_quandle(g: &FiniteGroup, m: i64) -> QuandleTable {
    let t = CayleyTable::from_fn(g.size(), |a, b| g.mul(g.mul(g.pow(b, -m), a), g.pow(b, m)));
    QuandleTable::new(t).expect("conjugation quandles satisfy Q2 and Q3")
}

/// `a * b = b a^{-1} b`
pub fn core_quandle(g: &FiniteGroup) -> QuandleTable {
    let t = CayleyTable::from_fn(g.size(), |a, b| g.mul(g.mul(b, g.inverse(a)), b));
    QuandleTable::new(t).expect("core quandles satisfy Q2 and Q3")
}

/// `a * b = phi(a b^{-1}) b`
pub fn alexander_quandle(g: &FiniteGroup, phi: &Perm) -> Result<QuandleTable> {
    if let Some((x, y)) = g.automorphism_witness(phi) {
        return Err(Error::NotAnAutomorphism(format!(
            "phi({x}*{y}) != phi({x})*phi({y})"
        )));
    }
    let t = CayleyTable::from_fn(g.size(), |a, b| {
        g.mul(phi.apply(g.mul(a, g.inverse(b))), b)
    });
    QuandleTable::new(t)
}

pub fn trivial_quandle(k: usize) -> QuandleTable {
    QuandleTable::new(CayleyTable::from_fn(k, |x, _| x)).expect("trivial quandle")
}

/// `x * y = 2y - x mod k`
pub fn dihedral_quandle(k: usize) -> QuandleTable {
    QuandleTable::new(CayleyTable::from_fn(k, |x, y| (2 * y + k - x % k) % k)).expect("dihedral quandle")
}

/// Quandles and racks available by colon syntax, e.g. `conj:S3:1`,
/// `core:Z5`, `alex:Z5:2` (automorphism `x -> 2x`), `trivial:3`, `dihedral:5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuandleSpec {
    Conj(NamedGroup, i64),
    Core(NamedGroup),
    /// Alexander quandle of `Z_k` with the automorphism `x -> a x`.
    AlexCyclic(usize, usize),
    Trivial(usize),
    Dihedral(usize),
}

impl FromStr for QuandleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::UnknownName(s.to_string());
        let num = |p: &str| p.parse::<usize>().map_err(|_| bad());
        match parts.as_slice() {
            ["conj", g] => Ok(QuandleSpec::Conj(g.parse()?, 1)),
            ["conj", g, m] => Ok(QuandleSpec::Conj(g.parse()?, m.parse().map_err(|_| bad())?)),
            ["core", g] => Ok(QuandleSpec::Core(g.parse()?)),
            ["alex", g, a] => match g.parse()? {
                NamedGroup::Zn(k) => Ok(QuandleSpec::AlexCyclic(k, num(a)?)),
                _ => Err(bad()),
            },
            ["trivial", k] => Ok(QuandleSpec::Trivial(num(k)?).nonzero(bad)?),
            ["dihedral", k] => Ok(QuandleSpec::Dihedral(num(k)?).nonzero(bad)?),
            _ => Err(bad()),
        }
    }
}

impl QuandleSpec {
    fn nonzero(self, bad: impl Fn() -> Error) -> Result<Self> {
        match self {
            QuandleSpec::Trivial(0) | QuandleSpec::Dihedral(0) => Err(bad()),
            s => Ok(s),
        }
    }
}

impl fmt::Display for QuandleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuandleSpec::Conj(g, m) => write!(f, "conj:{g}:{m}"),
            QuandleSpec::Core(g) => write!(f, "core:{g}"),
            QuandleSpec::AlexCyclic(k, a) => write!(f, "alex:Z{k}:{a}"),
            QuandleSpec::Trivial(k) => write!(f, "trivial:{k}"),
            QuandleSpec::Dihedral(k) => write!(f, "dihedral:{k}"),
        }
    }
}

pub fn make_named_quandle(spec: &QuandleSpec) -> Result<QuandleTable> {
    match *spec {
        QuandleSpec::Conj(g, m) => Ok(conj_quandle(&make_named_group(g)?, m)),
        QuandleSpec::Core(g) => Ok(core_quandle(&make_named_group(g)?)),
        QuandleSpec::AlexCyclic(k, a) => {
            let g = make_named_group(NamedGroup::Zn(k))?;
            let phi = Perm::new((0..k).map(|x| (a * x) % k).collect())
                .ok_or_else(|| Error::NotAnAutomorphism(format!("x -> {a}x is not a bijection of Z{k}")))?;
            alexander_quandle(&g, &phi)
        }
        QuandleSpec::Trivial(k) => Ok(trivial_quandle(k)),
        QuandleSpec::Dihedral(k) => Ok(dihedral_quandle(k)),
    }
}

/// First pair `(y, z)` where `p` fails to preserve the operation.
pub fn table_automorphism_witness(t: &CayleyTable, p: &Perm) -> Option<(usize, usize)> {
    let n = t.size();
    (0..n)
        .cartesian_product(0..n)
        .find(|&(y, z)| p.apply(t.get(y, z)) != t.get(p.apply(y), p.apply(z)))
}

/// The group generated by all right translations.
pub fn inner_group(q: &QuandleTable) -> PermGroup {
    let gens: Vec<Perm> = (0..q.size()).map(|x| q.translation(x)).collect();
    for s in &gens {
        debug_assert_eq!(table_automorphism_witness(q.table(), s), None);
    }
    subgroup_generated(q.size(), &gens)
}

#[derive(Debug, Clone)]
pub struct ProductReport {
    /// `x -> (x *1 y) *2 y`
    pub table: CayleyTable,
    /// Whether `(x *1 y) *2 z = (x *2 z) *1 (y *2 z)` holds.
    pub precondition: Verdict,
    pub product: AxiomReport,
}

pub const DISTRIBUTIVITY: &str = "*2 distributes over *1";

/// Checks `(x *i y) *j z = (x *j z) *i (y *j z)` for all triples.
pub fn mixed_distributivity(ti: &CayleyTable, tj: &CayleyTable, axiom: &str) -> Verdict {
    let n = ti.size();
    let mut tally = Tally::new(axiom);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = tj.get(ti.get(x, y), z);
                let rhs = ti.get(tj.get(x, z), tj.get(y, z));
                if lhs != rhs {
                    tally.record(|| Witness::indices(&[x, y, z], format!("lhs = {lhs}, rhs = {rhs}")));
                }
            }
        }
    }
    tally.finish()
}

pub fn quandle_product(q1: &QuandleTable, q2: &QuandleTable) -> Result<ProductReport> {
    if q1.size() != q2.size() {
        return Err(Error::CarrierMismatch(q1.size(), q2.size()));
    }
    let table = CayleyTable::from_fn(q1.size(), |x, y| q2.op(q1.op(x, y), y));
    Ok(ProductReport {
        precondition: mixed_distributivity(q1.table(), q2.table(), DISTRIBUTIVITY),
        product: quandle_check(&table),
        table,
    })
}

/// True iff every right translation satisfies `S_y^n = id`.
pub fn is_n_quandle(q: &QuandleTable, n: usize) -> bool {
    (0..q.size()).all(|y| {
        let s = q.translation(y);
        (0..q.size()).all(|x| (0..n).fold(x, |acc, _| s.apply(acc)) == x)
    })
}

/// Lexicographically minimal relabelling of `t` (row-major entries).
pub fn canonical_form(t: &CayleyTable) -> CayleyTable {
    (0..t.size())
        .permutations(t.size())
        .map(|p| t.relabel(&p))
        .min()
        .expect("at least one permutation")
}

/// All quandle tables of the given order; one canonical representative per
/// isomorphism class when `up_to_iso`.
pub fn enumerate_quandles(order: usize, up_to_iso: bool) -> Result<Vec<QuandleTable>> {
    enumerate(order, true, up_to_iso)
}

/// Like [`enumerate_quandles`] without the idempotency axiom.
pub fn enumerate_racks(order: usize, up_to_iso: bool) -> Result<Vec<QuandleTable>> {
    enumerate(order, false, up_to_iso)
}

fn enumerate(order: usize, idempotent: bool, up_to_iso: bool) -> Result<Vec<QuandleTable>> {
    if order == 0 || order > ENUMERATION_LIMIT {
        return Err(Error::SizeLimitExceeded {
            size: order,
            limit: ENUMERATION_LIMIT,
        });
    }
    // Candidate columns: all permutations, fixing the column index for quandles.
    let candidates: Vec<Vec<Vec<usize>>> = (0..order)
        .map(|y| {
            (0..order)
                .permutations(order)
                .filter(|p| !idempotent || p[y] == y)
                .collect()
        })
        .collect();
    let mut columns: Vec<Vec<usize>> = Vec::with_capacity(order);
    let mut found = Vec::new();
    search_columns(order, &candidates, &mut columns, &mut found);

    let tables = found.into_iter().map(|cols: Vec<Vec<usize>>| {
        CayleyTable::from_fn(order, |x, y| cols[y][x])
    });
    let tables: Vec<CayleyTable> = if up_to_iso {
        tables.map(|t| canonical_form(&t)).collect::<BTreeSet<_>>().into_iter().collect()
    } else {
        tables.collect()
    };
    tables
        .into_iter()
        .map(|t| {
            let report = if idempotent { quandle_check(&t) } else { rack_check(&t) };
            if report.passed() {
                QuandleTable::new(t)
            } else {
                Err(Error::PreconditionFailed(report))
            }
        })
        .collect()
}

/// Assigns columns left to right, pruning on self-distributivity
/// `S_z S_y = S_{S_z(y)} S_z` once all three columns are fixed.
fn search_columns(
    n: usize,
    candidates: &[Vec<Vec<usize>>],
    columns: &mut Vec<Vec<usize>>,
    found: &mut Vec<Vec<Vec<usize>>>,
) {
    let c = columns.len();
    if c == n {
        found.push(columns.clone());
        return;
    }
    for cand in &candidates[c] {
        columns.push(cand.clone());
        if consistent(columns) {
            search_columns(n, candidates, columns, found);
        }
        columns.pop();
    }
}

fn consistent(columns: &[Vec<usize>]) -> bool {
    let k = columns.len();
    let last = k - 1;
    for y in 0..k {
        for z in 0..k {
            let w = columns[z][y];
            if w >= k || (y != last && z != last && w != last) {
                continue;
            }
            let (sy, sz, sw) = (&columns[y], &columns[z], &columns[w]);
            if (0..sy.len()).any(|x| sz[sy[x]] != sw[sz[x]]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        make_named_group(NamedGroup::S3).unwrap()
    }

    #[test]
    fn dihedral_r3_is_a_quandle() {
        let t = CayleyTable::from_fn(3, |x, y| (2 * y + 3 - x) % 3);
        assert!(rack_check(&t).passed());
        assert!(quandle_check(&t).passed());
    }

    #[test]
    fn constant_table_fails_q2() {
        let t = CayleyTable::from_fn(2, |_, _| 0);
        let r = rack_check(&t);
        let v = r.get(Q2).unwrap();
        assert!(!v.passed);
        assert_eq!(v.witness.as_ref().unwrap().args, vec![0, 0, 1]);
    }

    #[test]
    fn shift_is_rack_not_quandle() {
        let t = CayleyTable::from_fn(3, |x, _| (x + 1) % 3);
        let r = quandle_check(&t);
        assert!(r.axiom_passed(Q2));
        assert!(r.axiom_passed(Q3));
        assert!(!r.axiom_passed(Q1));
        assert_eq!(QuandleTable::new(t).unwrap().kind(), QuandleKind::Rack);
    }

    #[test]
    fn trivial_and_bad_column() {
        assert!(quandle_check(trivial_quandle(3).table()).passed());
        let t = CayleyTable::from_rows(vec![vec![0, 0], vec![0, 1]]).unwrap();
        assert!(!quandle_check(&t).axiom_passed(Q2));
    }

    #[test]
    fn named_constructions() {
        let c = make_named_quandle(&"conj:S3:1".parse().unwrap()).unwrap();
        assert!(c.is_quandle());
        let core5 = make_named_quandle(&"core:Z5".parse().unwrap()).unwrap();
        assert_eq!(core5, dihedral_quandle(5));
        let g = s3();
        let alex = alexander_quandle(&g, &Perm::identity(6)).unwrap();
        assert_eq!(alex, trivial_quandle(6));
        let alex5 = make_named_quandle(&"alex:Z5:2".parse().unwrap()).unwrap();
        assert!(alex5.is_quandle());
        // x -> x+1 on Z3 is not an automorphism
        let shift = Perm::new(vec![1, 2, 0]).unwrap();
        let z3 = make_named_group(NamedGroup::Zn(3)).unwrap();
        assert!(matches!(alexander_quandle(&z3, &shift), Err(Error::NotAnAutomorphism(_))));
        assert!("conj:Q8".parse::<QuandleSpec>().is_err());
        assert!("dihedral:0".parse::<QuandleSpec>().is_err());
        assert_eq!("conj:S3:2".parse::<QuandleSpec>().unwrap().to_string(), "conj:S3:2");
    }

    #[test]
    fn conj_m_quandles_pass_for_several_m() {
        let g = s3();
        for m in -3..=3 {
            assert!(quandle_check(conj_quandle(&g, m).table()).passed(), "m = {m}");
        }
    }

    #[test]
    fn inner_groups() {
        assert_eq!(inner_group(&trivial_quandle(4)).order(), 1);
        assert_eq!(inner_group(&dihedral_quandle(3)).order(), 6);
        let g = s3();
        let inn = inner_group(&conj_quandle(&g, 1));
        assert!(inn.contains(&crate::groups::conjugation_action(&g, 1)));
    }

    #[test]
    fn translations_are_automorphisms() {
        let g = s3();
        let qs = [
            conj_quandle(&g, 1),
            conj_quandle(&g, 2),
            core_quandle(&g),
            dihedral_quandle(5),
            trivial_quandle(3),
            make_named_quandle(&"alex:Z7:3".parse().unwrap()).unwrap(),
        ];
        for q in &qs {
            for x in 0..q.size() {
                assert_eq!(table_automorphism_witness(q.table(), &q.translation(x)), None);
            }
        }
    }

    #[test]
    fn bar_inverts() {
        let q = conj_quandle(&s3(), 1);
        let bar = q.bar_table();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(bar.get(q.op(x, y), y), x);
                assert_eq!(q.op(bar.get(x, y), y), x);
            }
        }
    }

    #[test]
    fn products() {
        let r5 = dihedral_quandle(5);
        let p = quandle_product(&r5, &trivial_quandle(5)).unwrap();
        assert_eq!(&p.table, r5.table());
        assert!(p.precondition.passed);

        let p = quandle_product(&r5, &r5).unwrap();
        assert_eq!(&p.table, trivial_quandle(5).table());
        assert!(p.product.passed());

        let r3 = dihedral_quandle(3);
        assert_eq!(&quandle_product(&r3, &r3).unwrap().table, trivial_quandle(3).table());
        assert!(matches!(
            quandle_product(&r3, &r5),
            Err(Error::CarrierMismatch(3, 5))
        ));
    }

    #[test]
    fn products_with_distributivity_are_quandles() {
        let g = s3();
        let six: Vec<QuandleTable> = (-3..=3).map(|m| conj_quandle(&g, m)).chain([trivial_quandle(6)]).collect();
        let mut checked = 0;
        let mut families = vec![six];
        for k in 3..=7 {
            families.push(vec![trivial_quandle(k), dihedral_quandle(k)]);
        }
        for family in &families {
            for q1 in family {
                for q2 in family {
                    let p = quandle_product(q1, q2).unwrap();
                    if p.precondition.passed {
                        assert!(p.product.passed());
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked >= 20);
    }

    #[test]
    fn one_sided_distributivity_is_not_enough() {
        let g = s3();
        let core = core_quandle(&g);
        // conj distributes over core(S3) but not conversely; the product breaks Q3
        for m in [-1, 1] {
            let conj = conj_quandle(&g, m);
            let p = quandle_product(&core, &conj).unwrap();
            assert!(p.precondition.passed);
            assert!(!p.product.axiom_passed(Q3));
            assert!(!mixed_distributivity(conj.table(), core.table(), DISTRIBUTIVITY).passed);
        }
    }

    #[test]
    fn n_quandles() {
        assert!(is_n_quandle(&dihedral_quandle(7), 2));
        assert!(is_n_quandle(&trivial_quandle(3), 1));
        let c = conj_quandle(&s3(), 1);
        assert!(!is_n_quandle(&c, 2));
        assert!(is_n_quandle(&c, 6));
        assert!(is_n_quandle(&core_quandle(&s3()), 2));
        for k in 1..=8 {
            let g = make_named_group(NamedGroup::Zn(k)).unwrap();
            assert!(is_n_quandle(&core_quandle(&g), 2));
        }
    }

    /// Brute force over every table of the given order.
    fn brute_force_count(order: usize) -> (usize, usize) {
        let cells = order * order;
        let mut labelled = 0;
        let mut classes = BTreeSet::new();
        for code in 0..order.pow(cells as u32) {
            let mut c = code;
            let t = CayleyTable::from_fn(order, |_, _| {
                let v = c % order;
                c /= order;
                v
            });
            if quandle_check(&t).passed() {
                labelled += 1;
                classes.insert(canonical_form(&t));
            }
        }
        (labelled, classes.len())
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for order in 1..=3 {
            let (labelled, classes) = brute_force_count(order);
            assert_eq!(enumerate_quandles(order, false).unwrap().len(), labelled);
            assert_eq!(enumerate_quandles(order, true).unwrap().len(), classes);
        }
        assert_eq!(brute_force_count(2).1, 1);
        assert_eq!(brute_force_count(3).1, 3);
    }

    #[test]
    fn enumeration_orders_four_and_five() {
        assert_eq!(enumerate_quandles(4, true).unwrap().len(), 7);
        assert_eq!(enumerate_quandles(5, true).unwrap().len(), 22);
        assert!(matches!(enumerate_quandles(6, false), Err(Error::SizeLimitExceeded { .. })));
    }

    #[test]
    fn labelled_enumeration_closed_under_relabelling() {
        let all: BTreeSet<CayleyTable> = enumerate_quandles(4, false)
            .unwrap()
            .into_iter()
            .map(|q| q.table().clone())
            .collect();
        for p in (0..4).permutations(4) {
            for t in &all {
                assert!(all.contains(&t.relabel(&p)));
            }
        }
    }

    #[test]
    fn racks_of_order_two() {
        // x*y = x and x*y = 1 - x
        assert_eq!(enumerate_racks(2, false).unwrap().len(), 2);
    }
}
