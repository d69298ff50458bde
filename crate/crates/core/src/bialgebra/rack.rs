//! Rack bialgebras `k[Q]` and the corack conditions on function spaces.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quandles::rack_check;
use crate::report::{AxiomReport, Tally, Verdict, Witness};
use crate::scalar::{Rational, Scalar};
use crate::table::CayleyTable;

use super::derived::frobenius_check;
use super::space::{
    basis_tuples, comult_map, tensor_identity, BuiltSpace, StructureConstantSpace, COASSOCIATIVITY,
};
use super::tensor::{RationalTensor, TensorElement};

pub const COMP_KQ: &str = "comp: D m = (m (x) m)(id (x) s (x) id)(D (x) D)";
pub const SELF_DIST1: &str = "self-dist1: m(m (x) id) = m(m (x) m)(id (x) s (x) id)(id (x) id (x) D)";
pub const COMP: &str = "comp: (m (x) m)(id (x) s (x) id)(D (x) D) = D m";
pub const SELF_DIST: &str = "self-dist: (D (x) id)D = (id (x) id (x) m)(id (x) s (x) id)(D (x) D)D";
pub const N_HOMOMORPHISM: &str = "D is a Frobenius n-homomorphism";
pub const COMP_AGREEMENT: &str = "comp agrees with the 1-homomorphism condition";

/// `m(e_i, e_j) = e_{i*j}`, `D e_i = e_i (x) e_i`, without checking that
/// the table is a rack.
pub fn magma_bialgebra(t: &CayleyTable) -> BuiltSpace {
    let n = t.size();
    let mut mult = RationalTensor::zeros(&[n, n, n]);
    let mut comult = RationalTensor::zeros(&[n, n, n]);
    for i in 0..n {
        comult.set(&[i, i, i], Rational::from_i64(1));
        for j in 0..n {
            mult.set(&[i, j, t.get(i, j)], Rational::from_i64(1));
        }
    }
    let space = StructureConstantSpace::new(n, mult, None, Some(comult)).expect("shapes agree");
    let report = AxiomReport {
        verdicts: vec![space.coassociativity_check(), comp_kq(&space), self_dist1(&space)],
    };
    BuiltSpace { space, report }
}

pub fn rack_bialgebra(t: &CayleyTable) -> Result<BuiltSpace> {
    let pre = rack_check(t);
    if !pre.passed() {
        return Err(Error::PreconditionFailed(pre));
    }
    Ok(magma_bialgebra(t))
}

fn comp_kq<S: Scalar>(a: &StructureConstantSpace<S>) -> Verdict {
    tensor_identity(
        COMP_KQ,
        basis_tuples(a.dim(), 2),
        |t| a.delta_at(&a.m_at(t, 0), 0),
        |t| dd_sigma_mm(a, t),
    )
}

/// `(m (x) m)(id (x) s (x) id)(D (x) D)` on a rank-2 element.
fn dd_sigma_mm<S: Scalar>(a: &StructureConstantSpace<S>, t: &TensorElement<S>) -> TensorElement<S> {
    let dd = a.delta_at(&a.delta_at(t, 1), 0);
    let swapped = dd.swap_at(1);
    a.m_at(&a.m_at(&swapped, 2), 0)
}

fn self_dist1<S: Scalar>(a: &StructureConstantSpace<S>) -> Verdict {
    tensor_identity(
        SELF_DIST1,
        basis_tuples(a.dim(), 3),
        |t| a.m_at(&a.m_at(t, 0), 0),
        |t| {
            let d = a.delta_at(t, 2);
            let s = d.swap_at(1);
            a.m_at(&a.m_at(&a.m_at(&s, 2), 0), 0)
        },
    )
}

fn self_dist_lhs<S: Scalar>(a: &StructureConstantSpace<S>, t: &TensorElement<S>) -> TensorElement<S> {
    a.delta_at(&a.delta_at(t, 0), 0)
}

fn self_dist_rhs<S: Scalar>(a: &StructureConstantSpace<S>, t: &TensorElement<S>) -> TensorElement<S> {
    let d = a.delta_at(t, 0);
    let dd = a.delta_at(&a.delta_at(&d, 1), 0);
    a.m_at(&dd.swap_at(1), 2)
}

#[derive(Debug, Clone)]
pub struct CorackReport<S = Rational> {
    pub report: AxiomReport,
    /// Both sides of (self-dist) evaluated on the unit, at the first
    /// coordinate where they differ.
    pub unit_witness: Option<(Vec<usize>, S, S)>,
}

/// Independent verdicts for (comp), (self-dist) and the n-homomorphism
/// condition on a space with a coproduct, plus coassociativity for
/// information.
pub fn corack_check<S: Scalar>(a: &StructureConstantSpace<S>, n: usize) -> Result<CorackReport<S>> {
    if !a.has_comult() {
        return Err(Error::ShapeMismatch("space has no comultiplication".into()));
    }
    let assoc = a.associativity_check();
    if !assoc.passed {
        return Err(Error::PreconditionFailed(AxiomReport { verdicts: vec![assoc] }));
    }

    let comp = tensor_identity(
        COMP,
        basis_tuples(a.dim(), 2),
        |t| dd_sigma_mm(a, t),
        |t| a.delta_at(&a.m_at(t, 0), 0),
    );

    let basis_sd = tensor_identity(
        SELF_DIST,
        basis_tuples(a.dim(), 1),
        |t| self_dist_lhs(a, t),
        |t| self_dist_rhs(a, t),
    );
    let unit_witness = a.unit().and_then(|u| {
        let t = TensorElement::product_of(&[u.to_vec()]);
        let (l, r) = (self_dist_lhs(a, &t), self_dist_rhs(a, &t));
        l.first_difference(&r).map(|at| {
            let (lv, rv) = (l.coefficient(&at), r.coefficient(&at));
            (at, lv, rv)
        })
    });
    let self_dist = match &unit_witness {
        Some((at, l, r)) => Verdict::fail(
            SELF_DIST,
            basis_sd.violations.max(1),
            Witness::indices(at, format!("unit function: lhs {l}, rhs {r}")),
        ),
        None => basis_sd,
    };

    let frob = frobenius_check(&comult_map(Arc::new(a.clone()))?, n, 0)?;
    let n_hom = match frob.verdicts.iter().find(|v| !v.passed) {
        None => Verdict::pass(N_HOMOMORPHISM),
        Some(v) => Verdict::fail(
            N_HOMOMORPHISM,
            frob.verdicts.iter().map(|v| v.violations).sum(),
            Witness {
                args: v.witness.as_ref().map(|w| w.args.clone()).unwrap_or_default(),
                detail: format!("{}: {}", v.axiom, v.witness.as_ref().map(|w| w.detail.as_str()).unwrap_or("")),
            },
        ),
    };

    let mut verdicts = vec![comp.clone(), self_dist, n_hom.clone()];
    if n == 1 {
        let mut agree = Tally::new(COMP_AGREEMENT);
        if comp.passed != n_hom.passed {
            agree.record(|| Witness::new([], format!("comp {} vs 1-homomorphism {}", comp.passed, n_hom.passed)));
        }
        verdicts.push(agree.finish());
    }
    let mut coassoc = a.coassociativity_check().informational();
    coassoc.axiom = COASSOCIATIVITY.to_string();
    verdicts.push(coassoc);
    Ok(CorackReport { report: AxiomReport { verdicts }, unit_witness })
}
