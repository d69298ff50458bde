//! Structures on the integers, checked on finite windows.
//!
//! Operations here are closed formulas evaluated in `i64`, so a window only
//! bounds the arguments; intermediates are never truncated.

use std::fmt;

use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::report::{AxiomReport, Tally, Verdict, Witness};

use super::{ASSOCIATIVITY, INVERSE, UNIT};

pub const DEFAULT_WINDOW: i64 = 20;

pub const LINEAR_Q1: &str = "Q1 idempotency";
pub const LINEAR_Q2: &str = "Q2 invertibility";
pub const LINEAR_Q3: &str = "Q3 self-distributivity";
pub const CLASSIFICATION: &str = "classification agrees with closed form";
pub const MIXDIS_12: &str = "(x *1 y) *2 z = (x *2 z) *1 (y *2 z)";
pub const MIXDIS_21: &str = "(x *2 y) *1 z = (x *1 z) *2 (y *1 z)";

/// `x * y = epsilon x + a y + b` on the integers, `epsilon = +-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WindowedZOp {
    pub epsilon: i64,
    pub a: i64,
    pub b: i64,
}

impl WindowedZOp {
    pub fn new(epsilon: i64, a: i64, b: i64) -> Self {
        assert!(epsilon == 1 || epsilon == -1, "epsilon must be +1 or -1");
        WindowedZOp { epsilon, a, b }
    }

    pub const TRIVIAL: WindowedZOp = WindowedZOp { epsilon: 1, a: 0, b: 0 };
    pub const CORE: WindowedZOp = WindowedZOp { epsilon: -1, a: 2, b: 0 };

    /// `x * y = x + b`
    pub fn shift(b: i64) -> Self {
        WindowedZOp::new(1, 0, b)
    }

    /// `x * y = -x + b`
    pub fn reflection(b: i64) -> Self {
        WindowedZOp::new(-1, 0, b)
    }

    #[inline]
    pub fn apply(&self, x: i64, y: i64) -> i64 {
        self.epsilon * x + self.a * y + self.b
    }
}

impl fmt::Display for WindowedZOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.epsilon, self.a, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearClass {
    TrivialQuandle,
    CoreQuandle,
    RackNotQuandle,
    NotRack,
}

impl LinearClass {
    /// Closed form: a rack iff `a = 0` or the op is the core; a quandle iff
    /// trivial or core.
    pub fn of(op: &WindowedZOp) -> Self {
        if *op == WindowedZOp::TRIVIAL {
            LinearClass::TrivialQuandle
        } else if *op == WindowedZOp::CORE {
            LinearClass::CoreQuandle
        } else if op.a == 0 {
            LinearClass::RackNotQuandle
        } else {
            LinearClass::NotRack
        }
    }

    pub fn is_rack(self) -> bool {
        self != LinearClass::NotRack
    }
}

#[derive(Debug, Clone)]
pub struct LinearRackReport {
    pub report: AxiomReport,
    /// Derived from the window verdicts.
    pub class: LinearClass,
}

fn window(w: i64) -> std::ops::RangeInclusive<i64> {
    -w..=w
}

/// Q2 is structural (`z -> epsilon z + c` is a bijection of the integers);
/// Q1 and Q3 are checked on `[-window, window]`.
pub fn linear_rack_check(op: &WindowedZOp, w: i64) -> LinearRackReport {
    let mut q1 = Tally::new(LINEAR_Q1);
    let mut q3 = Tally::new(LINEAR_Q3);
    for x in window(w) {
        if op.apply(x, x) != x {
            q1.record(|| Witness::new([x], format!("x*x = {}", op.apply(x, x))));
        }
        for y in window(w) {
            for z in window(w) {
                let lhs = op.apply(op.apply(x, y), z);
                let rhs = op.apply(op.apply(x, z), op.apply(y, z));
                if lhs != rhs {
                    q3.record(|| Witness::new([x, y, z], format!("lhs = {lhs}, rhs = {rhs}")));
                }
            }
        }
    }
    let (q1, q3) = (q1.finish(), q3.finish());
    let class = match (q3.passed, q1.passed) {
        (false, _) => LinearClass::NotRack,
        (true, false) => LinearClass::RackNotQuandle,
        (true, true) if (window(w)).all(|x| op.apply(x, 0) == x && op.apply(x, 1) == x) => {
            LinearClass::TrivialQuandle
        }
        (true, true) => LinearClass::CoreQuandle,
    };
    let mut agree = Tally::new(CLASSIFICATION);
    if class != LinearClass::of(op) {
        agree.record(|| Witness::new([op.epsilon, op.a, op.b], format!("window says {class:?}")));
    }
    LinearRackReport {
        report: AxiomReport {
            verdicts: vec![Verdict::pass(LINEAR_Q2), q3, q1.informational(), agree.finish()],
        },
        class,
    }
}

/// The linear 2-multi-rack families on the integers, in the order listed
/// by the classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiRackFamily {
    /// `x, x`
    BothTrivial,
    /// `2y - x, x`
    CoreTrivial,
    /// `x + b1, x + b2`
    Shifts,
    /// `x, -x + b`
    TrivialReflection,
    /// `-x + b, x`
    ReflectionTrivial,
    /// `-x + b, -x + b`
    EqualReflections,
}

impl MultiRackFamily {
    pub const ALL: [MultiRackFamily; 6] = [
        MultiRackFamily::BothTrivial,
        MultiRackFamily::CoreTrivial,
        MultiRackFamily::Shifts,
        MultiRackFamily::TrivialReflection,
        MultiRackFamily::ReflectionTrivial,
        MultiRackFamily::EqualReflections,
    ];

    pub fn classify(op1: &WindowedZOp, op2: &WindowedZOp) -> Option<Self> {
        let t = WindowedZOp::TRIVIAL;
        let shift = |o: &WindowedZOp| o.epsilon == 1 && o.a == 0;
        let refl = |o: &WindowedZOp| o.epsilon == -1 && o.a == 0;
        if *op1 == t && *op2 == t {
            Some(MultiRackFamily::BothTrivial)
        } else if *op1 == WindowedZOp::CORE && *op2 == t {
            Some(MultiRackFamily::CoreTrivial)
        } else if shift(op1) && shift(op2) {
            Some(MultiRackFamily::Shifts)
        } else if *op1 == t && refl(op2) {
            Some(MultiRackFamily::TrivialReflection)
        } else if refl(op1) && *op2 == t {
            Some(MultiRackFamily::ReflectionTrivial)
        } else if refl(op1) && refl(op2) && op1.b == op2.b {
            Some(MultiRackFamily::EqualReflections)
        } else {
            None
        }
    }

    /// A representative pair of the family for the given parameters.
    pub fn instance(self, b: i64, b1: i64, b2: i64) -> (WindowedZOp, WindowedZOp) {
        let t = WindowedZOp::TRIVIAL;
        match self {
            MultiRackFamily::BothTrivial => (t, t),
            MultiRackFamily::CoreTrivial => (WindowedZOp::CORE, t),
            MultiRackFamily::Shifts => (WindowedZOp::shift(b1), WindowedZOp::shift(b2)),
            MultiRackFamily::TrivialReflection => (t, WindowedZOp::reflection(b)),
            MultiRackFamily::ReflectionTrivial => (WindowedZOp::reflection(b), t),
            MultiRackFamily::EqualReflections => (WindowedZOp::reflection(b), WindowedZOp::reflection(b)),
        }
    }
}

#[derive(Debug, Clone)]
pub struct LinearMultiRackReport {
    pub report: AxiomReport,
    pub family: Option<MultiRackFamily>,
}

/// Both mixed distributivity identities on `[-window, window]`.
pub fn linear_multirack_check(op1: &WindowedZOp, op2: &WindowedZOp, w: i64) -> Result<LinearMultiRackReport> {
    for op in [op1, op2] {
        let r = linear_rack_check(op, w);
        if !r.class.is_rack() {
            return Err(Error::PreconditionFailed(r.report));
        }
    }
    let mixdis = |first: &WindowedZOp, second: &WindowedZOp, name: &str| {
        let mut tally = Tally::new(name);
        for x in window(w) {
            for y in window(w) {
                for z in window(w) {
                    let lhs = second.apply(first.apply(x, y), z);
                    let rhs = first.apply(second.apply(x, z), second.apply(y, z));
                    if lhs != rhs {
                        tally.record(|| Witness::new([x, y, z], format!("lhs = {lhs}, rhs = {rhs}")));
                    }
                }
            }
        }
        tally.finish()
    };
    Ok(LinearMultiRackReport {
        report: AxiomReport {
            verdicts: vec![mixdis(op1, op2, MIXDIS_12), mixdis(op2, op1, MIXDIS_21)],
        },
        family: MultiRackFamily::classify(op1, op2),
    })
}

/// `x * y = [x + y, |x - y|]` on the non-negative integers.
pub fn zplus_group_product(x: usize, y: usize) -> Multiset {
    Multiset::from_list([x + y, x.abs_diff(y)])
}

/// Associativity, unit `0` and inverse `inv = id` of the 2-valued group on
/// the non-negative integers, for all arguments in `0..=window`.
pub fn zplus_group_check(window: usize) -> AxiomReport {
    let op = zplus_group_product;
    let expand_left = |m: &Multiset, z: usize| {
        let mut out = Multiset::new();
        for w in m.iter() {
            out.absorb(&op(w, z));
        }
        out
    };
    let expand_right = |x: usize, m: &Multiset| {
        let mut out = Multiset::new();
        for w in m.iter() {
            out.absorb(&op(x, w));
        }
        out
    };
    let mut assoc = Tally::new(ASSOCIATIVITY);
    let mut unit = Tally::new(UNIT);
    let mut inverse = Tally::new(INVERSE);
    for x in 0..=window {
        if op(0, x) != Multiset::constant(x, 2) || op(x, 0) != Multiset::constant(x, 2) {
            unit.record(|| Witness::indices(&[x], ""));
        }
        if !op(x, x).contains(0) {
            inverse.record(|| Witness::indices(&[x], ""));
        }
        for y in 0..=window {
            for z in 0..=window {
                let l = expand_left(&op(x, y), z);
                let r = expand_right(x, &op(y, z));
                if l != r {
                    assoc.record(|| Witness::indices(&[x, y, z], format!("{l} vs {r}")));
                }
            }
        }
    }
    AxiomReport {
        verdicts: vec![assoc.finish(), unit.finish(), inverse.finish()],
    }
}

/// The coset 2-valued quandle of `Core(Z)` under negation, on orbit
/// representatives `a, b >= 0`: `[pi(a * alpha(b)) for alpha in {id, -id}]`
/// with `a * b = 2b - a` and `pi(v) = |v|`.
pub fn core_z_coset_product(a: u64, b: u64) -> Multiset {
    core_z_coset_cell(a as i64, b as i64)
}

/// Same cell computed from arbitrary orbit representatives.
pub fn core_z_coset_cell(a: i64, b: i64) -> Multiset {
    let core = |x: i64, y: i64| 2 * y - x;
    [b, -b]
        .into_iter()
        .map(|bb| core(a, bb).unsigned_abs() as usize)
        .collect()
}
