//! Set-theoretic solutions of the braid equation
//! `(R x id)(id x R)(R x id) = (id x R)(R x id)(id x R)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::groups::Perm;
use crate::multiset::Multiset;
use crate::nvalued::{nv_assoc_check, NValuedTable, WindowedZOp};
use crate::quandles::QuandleTable;
use crate::report::{AxiomReport, Tally, Witness};
use crate::table::CayleyTable;

pub const BRAID: &str = "braid equation";

/// `cx * x + cy * y + c0` on the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LinearForm {
    pub cx: i64,
    pub cy: i64,
    pub c0: i64,
}

impl LinearForm {
    pub const fn new(cx: i64, cy: i64, c0: i64) -> Self {
        LinearForm { cx, cy, c0 }
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.cx * x + self.cy * y + self.c0
    }
}

impl From<WindowedZOp> for LinearForm {
    fn from(op: WindowedZOp) -> Self {
        LinearForm::new(op.epsilon, op.a, op.b)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y + {}", self.cx, self.cy, self.c0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BraidMap {
    /// `images[x * size + y] = R(x, y)`.
    Finite { size: usize, images: Vec<(usize, usize)> },
    /// `R(x, y) = (first(x, y), second(x, y))`, checked on `[-half_width, half_width]`.
    Window { half_width: i64, first: LinearForm, second: LinearForm },
}

impl BraidMap {
    pub fn from_images(size: usize, images: Vec<(usize, usize)>) -> Result<Self> {
        if images.len() != size * size {
            return Err(Error::InvalidTable(format!("expected {} images, got {}", size * size, images.len())));
        }
        if let Some((x, y)) = images.iter().find(|(x, y)| *x >= size || *y >= size) {
            return Err(Error::InvalidTable(format!("image ({x}, {y}) outside carrier of size {size}")));
        }
        Ok(BraidMap::Finite { size, images })
    }

    pub fn from_fn(size: usize, mut r: impl FnMut(usize, usize) -> (usize, usize)) -> Self {
        let images = (0..size).flat_map(|x| (0..size).map(move |y| (x, y))).map(|(x, y)| r(x, y)).collect();
        BraidMap::from_images(size, images).expect("rule leaves the carrier")
    }

    pub fn window(half_width: i64, first: LinearForm, second: LinearForm) -> Self {
        BraidMap::Window { half_width, first, second }
    }

    /// The same linear forms read in `Z_m`.
    pub fn reduce_mod(&self, m: usize) -> Result<Self> {
        match self {
            BraidMap::Window { first, second, .. } if m > 0 => {
                let md = m as i64;
                Ok(BraidMap::from_fn(m, |x, y| {
                    let (x, y) = (x as i64, y as i64);
                    (first.eval(x, y).rem_euclid(md) as usize, second.eval(x, y).rem_euclid(md) as usize)
                }))
            }
            BraidMap::Window { .. } => Err(Error::InvalidTable("modulus must be positive".into())),
            BraidMap::Finite { .. } => Err(Error::InvalidTable("only window maps can be reduced".into())),
        }
    }

    /// `(s x s) R (s^-1 x s^-1)` for a bijection `s` of a finite carrier.
    pub fn conjugate(&self, s: &Perm) -> Result<Self> {
        match self {
            BraidMap::Finite { size, .. } if s.degree() == *size => {
                let inv = s.inverse();
                Ok(BraidMap::from_fn(*size, |x, y| {
                    let (u, v) = self.apply(inv.apply(x), inv.apply(y));
                    (s.apply(u), s.apply(v))
                }))
            }
            BraidMap::Finite { size, .. } => Err(Error::CarrierMismatch(*size, s.degree())),
            BraidMap::Window { .. } => Err(Error::InvalidTable("only finite maps can be conjugated".into())),
        }
    }

    pub fn size(&self) -> Option<usize> {
        match self {
            BraidMap::Finite { size, .. } => Some(*size),
            BraidMap::Window { .. } => None,
        }
    }

    /// Panics on a window map.
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        match self {
            BraidMap::Finite { size, images } => images[x * size + y],
            BraidMap::Window { .. } => panic!("apply on a window map"),
        }
    }
}

fn sides<T: Copy>(r: impl Fn(T, T) -> (T, T), x: T, y: T, z: T) -> ([T; 3], [T; 3]) {
    let r12 = |[a, b, c]: [T; 3]| {
        let (u, v) = r(a, b);
        [u, v, c]
    };
    let r23 = |[a, b, c]: [T; 3]| {
        let (u, v) = r(b, c);
        [a, u, v]
    };
    (r12(r23(r12([x, y, z]))), r23(r12(r23([x, y, z]))))
}

pub fn braid_check(r: &BraidMap) -> AxiomReport {
    let mut tally = Tally::new(BRAID);
    match r {
        BraidMap::Finite { size, .. } => {
            for x in 0..*size {
                for y in 0..*size {
                    for z in 0..*size {
                        let (l, rr) = sides(|a, b| r.apply(a, b), x, y, z);
                        if l != rr {
                            tally.record(|| Witness::indices(&[x, y, z], format!("{l:?} vs {rr:?}")));
                        }
                    }
                }
            }
        }
        BraidMap::Window { half_width, first, second } => {
            let w = *half_width;
            let rule = |a: i64, b: i64| (first.eval(a, b), second.eval(a, b));
            for x in -w..=w {
                for y in -w..=w {
                    for z in -w..=w {
                        let (l, rr) = sides(rule, x, y, z);
                        if l != rr {
                            tally.record(|| Witness::new([x, y, z], format!("{l:?} vs {rr:?}")));
                        }
                    }
                }
            }
        }
    }
    let mut report = AxiomReport::new();
    report.push(tally.finish());
    report
}

/// `R(x, y) = (y, x * y)`, a solution for every rack.
pub fn rack_to_braid(q: &QuandleTable) -> BraidMap {
    BraidMap::from_fn(q.size(), |x, y| (y, q.op(x, y)))
}

/// `R(x, y) = (x * y, x)`. A solution exactly when the operation is also left
/// self-distributive, `x * (y * z) = (x * y) * (x * z)`.
pub fn left_form_braid(t: &CayleyTable) -> BraidMap {
    BraidMap::from_fn(t.size(), |x, y| (t.get(x, y), x))
}

/// `R(x, y) = (x *1 y, x *2 y)` on a window.
pub fn multirack_to_map(op1: &WindowedZOp, op2: &WindowedZOp, half_width: i64) -> BraidMap {
    BraidMap::window(half_width, (*op1).into(), (*op2).into())
}

/// The linear braid solutions on the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidFamily {
    /// `(x, y)`
    Identity,
    /// `(2y - x, x)`
    CoreFirst,
    /// `(y, 2x - y)`
    CoreSecond,
    /// `(x, -x + b)`
    Reflection(i64),
}

impl BraidFamily {
    pub fn all(bs: &[i64]) -> Vec<BraidFamily> {
        let mut out = vec![BraidFamily::Identity, BraidFamily::CoreFirst, BraidFamily::CoreSecond];
        out.extend(bs.iter().map(|&b| BraidFamily::Reflection(b)));
        out
    }

    pub fn forms(self) -> (LinearForm, LinearForm) {
        match self {
            BraidFamily::Identity => (LinearForm::new(1, 0, 0), LinearForm::new(0, 1, 0)),
            BraidFamily::CoreFirst => (LinearForm::new(-1, 2, 0), LinearForm::new(1, 0, 0)),
            BraidFamily::CoreSecond => (LinearForm::new(0, 1, 0), LinearForm::new(2, -1, 0)),
            BraidFamily::Reflection(b) => (LinearForm::new(1, 0, 0), LinearForm::new(-1, 0, b)),
        }
    }

    pub fn map(self, half_width: i64) -> BraidMap {
        let (f, s) = self.forms();
        BraidMap::window(half_width, f, s)
    }
}

impl fmt::Display for BraidFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidFamily::Identity => write!(f, "(x, y)"),
            BraidFamily::CoreFirst => write!(f, "(2y - x, x)"),
            BraidFamily::CoreSecond => write!(f, "(y, 2x - y)"),
            BraidFamily::Reflection(b) if *b < 0 => write!(f, "(x, -x - {})", -b),
            BraidFamily::Reflection(b) => write!(f, "(x, -x + {b})"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DegenerateSolution {
    pub unit: usize,
    /// `R(a, b) = (1, ab)`.
    pub map: BraidMap,
    /// `a * b = [1, ab]`.
    pub table: NValuedTable,
    pub assoc: AxiomReport,
    /// First `(a, b, c)` with `c` not the unit where associativity fails.
    pub witness: Option<(usize, usize, usize)>,
}

pub fn two_sided_unit(s: &CayleyTable) -> Option<usize> {
    (0..s.size()).find(|&e| (0..s.size()).all(|x| s.get(e, x) == x && s.get(x, e) == x))
}

pub fn degenerate_monoid_solution(s: &CayleyTable) -> Result<DegenerateSolution> {
    let unit = two_sided_unit(s).ok_or(Error::NoUnit)?;
    let map = BraidMap::from_fn(s.size(), |a, b| (unit, s.get(a, b)));
    let table = NValuedTable::from_fn(s.size(), 2, |a, b| Multiset::from_list([unit, s.get(a, b)]))?;
    let assoc = nv_assoc_check(&table);
    let n = s.size();
    let witness = (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
        .filter(|&(_, _, c)| c != unit)
        .find(|&(a, b, c)| {
            table.expand_left(table.get(a, b), c) != table.expand_right(a, table.get(b, c))
        });
    Ok(DegenerateSolution { unit, map, table, assoc, witness })
}
