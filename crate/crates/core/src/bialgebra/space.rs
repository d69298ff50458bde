//! Finite-dimensional algebras and coalgebras given by structure constants.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::nvalued::{nv_assoc_check, NValuedTable, ASSOCIATIVITY};
use crate::report::{AxiomReport, Tally, Verdict, Witness};
use crate::scalar::{ModP, Rational, Scalar};

use super::tensor::{RationalTensor, TensorElement};

pub const TENSOR_ASSOCIATIVITY: &str = "associativity m(m (x) id) = m(id (x) m)";
pub const COASSOCIATIVITY: &str = "coassociativity (D (x) id)D = (id (x) D)D";
pub const ASSOCIATIVITY_AGREEMENT: &str = "tensor associativity agrees with n-valued associativity";
pub const PAIRING: &str = "pairing <x.y, f> = Df(x, y)";

/// Basis `e_0..e_{dim-1}`, product `e_i e_j = sum_k mult[i][j][k] e_k` and
/// optional coproduct `D e_k = sum_{i,j} comult[k][i][j] e_i (x) e_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstantSpace<S = Rational> {
    dim: usize,
    mult: RationalTensor<S>,
    unit: Option<Vec<S>>,
    comult: Option<RationalTensor<S>>,
    labels: Vec<String>,
    mult_sparse: Vec<Vec<(usize, S)>>,
    comult_sparse: Option<Vec<Vec<(usize, usize, S)>>>,
}

fn sparse_rows<S: Scalar>(t: &RationalTensor<S>, rows: usize) -> Vec<Vec<(usize, S)>> {
    let last = t.shape()[2];
    let mut out = vec![Vec::new(); rows];
    for (idx, c) in t.nonzero() {
        out[idx[0] * last + idx[1]].push((idx[2], c));
    }
    out
}

impl<S: Scalar> StructureConstantSpace<S> {
    pub fn new(
        dim: usize,
        mult: RationalTensor<S>,
        unit: Option<Vec<S>>,
        comult: Option<RationalTensor<S>>,
    ) -> Result<Self> {
        let cube = [dim, dim, dim];
        if mult.shape() != cube {
            return Err(Error::ShapeMismatch(format!("mult has shape {:?}, expected {cube:?}", mult.shape())));
        }
        if let Some(c) = &comult {
            if c.shape() != cube {
                return Err(Error::ShapeMismatch(format!("comult has shape {:?}, expected {cube:?}", c.shape())));
            }
        }
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(Error::DimensionMismatch(dim, u.len()));
            }
        }
        let mult_sparse = sparse_rows(&mult, dim * dim);
        let comult_sparse = comult.as_ref().map(|c| {
            let mut out = vec![Vec::new(); dim];
            for (idx, v) in c.nonzero() {
                out[idx[0]].push((idx[1], idx[2], v));
            }
            out
        });
        Ok(StructureConstantSpace {
            dim,
            mult,
            unit,
            comult,
            labels: (0..dim).map(|i| format!("e{i}")).collect(),
            mult_sparse,
            comult_sparse,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    pub fn with_comult(self, comult: Option<RationalTensor<S>>) -> Result<Self> {
        let labels = self.labels.clone();
        Ok(StructureConstantSpace::new(self.dim, self.mult, self.unit, comult)?.with_labels(labels))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &RationalTensor<S> {
        &self.mult
    }

    pub fn unit(&self) -> Option<&[S]> {
        self.unit.as_deref()
    }

    pub fn comult(&self) -> Option<&RationalTensor<S>> {
        self.comult.as_ref()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `e_i e_j` as `(k, coefficient)` pairs.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, S)] {
        &self.mult_sparse[i * self.dim + j]
    }

    /// `D e_k` as `(i, j, coefficient)` triples; empty without a coproduct.
    pub fn comul_basis(&self, k: usize) -> &[(usize, usize, S)] {
        self.comult_sparse.as_ref().map(|c| c[k].as_slice()).unwrap_or(&[])
    }

    pub fn has_comult(&self) -> bool {
        self.comult.is_some()
    }

    pub fn mul(&self, a: &[S], b: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        for (i, ai) in a.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = ai.clone() * bj.clone();
                for (k, m) in self.mul_basis(i, j) {
                    out[*k] = out[*k].clone() + c.clone() * m.clone();
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<S> {
        let mut v = vec![S::zero(); self.dim];
        v[i] = S::one();
        v
    }

    /// `m` on two tensor slots, for use with `TensorElement::apply_slots`.
    pub fn m_image(&self, ij: &[usize]) -> Vec<(Vec<usize>, S)> {
        self.mul_basis(ij[0], ij[1]).iter().map(|(k, c)| (vec![*k], c.clone())).collect()
    }

    pub fn delta_image(&self, k: usize) -> Vec<(Vec<usize>, S)> {
        self.comul_basis(k).iter().map(|(i, j, c)| (vec![*i, *j], c.clone())).collect()
    }

    pub fn m_at(&self, t: &TensorElement<S>, pos: usize) -> TensorElement<S> {
        t.apply_slots(pos, 2, 1, |ij| self.m_image(ij))
    }

    pub fn delta_at(&self, t: &TensorElement<S>, pos: usize) -> TensorElement<S> {
        t.apply_at(pos, 2, |k| self.delta_image(k))
    }

    /// A pair `(i, j)` with `e_i e_j != e_j e_i`, if any.
    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        (0..self.dim)
            .flat_map(|i| (i + 1..self.dim).map(move |j| (i, j)))
            .find(|&(i, j)| (0..self.dim).any(|k| self.mult.get(&[i, j, k]) != self.mult.get(&[j, i, k])))
    }

    pub fn associativity_check(&self) -> Verdict {
        tensor_identity(
            TENSOR_ASSOCIATIVITY,
            basis_tuples(self.dim, 3),
            |t| self.m_at(&self.m_at(t, 0), 0),
            |t| self.m_at(&self.m_at(t, 1), 0),
        )
    }

    pub fn coassociativity_check(&self) -> Verdict {
        tensor_identity(
            COASSOCIATIVITY,
            basis_tuples(self.dim, 1),
            |t| self.delta_at(&self.delta_at(t, 0), 0),
            |t| self.delta_at(&self.delta_at(t, 0), 1),
        )
    }

    /// Re-expresses every structure constant in another scalar type.
    pub fn convert<T: Scalar>(&self, f: impl Fn(&S) -> Option<T>) -> Option<StructureConstantSpace<T>> {
        let conv = |t: &RationalTensor<S>| -> Option<RationalTensor<T>> {
            let entries = t.entries().iter().map(&f).collect::<Option<Vec<T>>>()?;
            RationalTensor::from_entries(t.shape(), entries).ok()
        };
        let mult = conv(&self.mult)?;
        let comult = match &self.comult {
            Some(c) => Some(conv(c)?),
            None => None,
        };
        let unit = match &self.unit {
            Some(u) => Some(u.iter().map(&f).collect::<Option<Vec<T>>>()?),
            None => None,
        };
        StructureConstantSpace::new(self.dim, mult, unit, comult)
            .ok()
            .map(|s| s.with_labels(self.labels.clone()))
    }
}

impl StructureConstantSpace<Rational> {
    /// Reduction mod `P`; `None` if some denominator vanishes mod `P`.
    pub fn to_mod_p<const P: u64>(&self) -> Option<StructureConstantSpace<ModP<P>>> {
        self.convert(|r| {
            let p = num_bigint::BigInt::from(P);
            let reduce = |v: &num_bigint::BigInt| -> i64 {
                let m = ((v % &p) + &p) % &p;
                i64::try_from(m).expect("residue fits")
            };
            let num = ModP::<P>::new(reduce(r.numer()));
            let den = ModP::<P>::new(reduce(r.denom())).inverse()?;
            Some(num * den)
        })
    }
}

/// All basis tuples of length `k` over `0..dim`, lexicographic.
pub fn basis_tuples(dim: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.checked_pow(k as u32).expect("too many tuples");
    (0..total).map(move |mut flat| {
        let mut idx = vec![0; k];
        for slot in (0..k).rev() {
            idx[slot] = flat % dim;
            flat /= dim;
        }
        idx
    })
}

/// Compares two linear maps on basis tensors. The witness lists the input
/// basis indices followed by the first output index where they differ.
pub fn tensor_identity<S: Scalar>(
    axiom: &str,
    inputs: impl Iterator<Item = Vec<usize>>,
    lhs: impl Fn(&TensorElement<S>) -> TensorElement<S>,
    rhs: impl Fn(&TensorElement<S>) -> TensorElement<S>,
) -> Verdict {
    let mut tally = Tally::new(axiom);
    for input in inputs {
        let t = TensorElement::basis(input.clone());
        let (l, r) = (lhs(&t), rhs(&t));
        if let Some(at) = l.first_difference(&r) {
            tally.record(|| {
                let mut args = input.clone();
                args.extend(&at);
                Witness::indices(&args, format!("lhs {} vs rhs {}", l.coefficient(&at), r.coefficient(&at)))
            });
        }
    }
    tally.finish()
}

/// A space together with the verdicts gathered while building it.
#[derive(Debug, Clone)]
pub struct BuiltSpace<S = Rational> {
    pub space: StructureConstantSpace<S>,
    pub report: AxiomReport,
}

fn n_valued_mult(x: &NValuedTable) -> RationalTensor<Rational> {
    let n = x.size();
    let mut mult = RationalTensor::zeros(&[n, n, n]);
    for a in 0..n {
        for b in 0..n {
            for (z, times) in x.get(a, b).counts() {
                mult.set(&[a, b, z], Rational::from_i64(times as i64));
            }
        }
    }
    mult
}

/// `k[X]`: `x . y = z_1 + ... + z_n`. The unit, when `X` has one, is
/// `e / n` since `e . x = n x`.
pub fn group_algebra(x: &NValuedTable) -> BuiltSpace {
    let size = x.size();
    let unit = (0..size)
        .find(|&e| {
            (0..size).all(|y| {
                let c = crate::Multiset::constant(y, x.n());
                *x.get(e, y) == c && *x.get(y, e) == c
            })
        })
        .map(|e| {
            let mut v = vec![Rational::from_i64(0); size];
            v[e] = Rational::from_ratio(1, x.n() as i64).expect("n > 0");
            v
        });
    let space = StructureConstantSpace::new(size, n_valued_mult(x), unit, None).expect("shapes agree");
    let tensor = space.associativity_check();
    let multiset = nv_assoc_check(x).get(ASSOCIATIVITY).cloned().expect("associativity verdict");
    let mut agree = Tally::new(ASSOCIATIVITY_AGREEMENT);
    if tensor.passed != multiset.passed {
        agree.record(|| Witness::new([], format!("tensor {} vs multiset {}", tensor.passed, multiset.passed)));
    }
    BuiltSpace {
        space,
        report: AxiomReport { verdicts: vec![tensor, multiset, agree.finish()] },
    }
}

/// `C(X)`: pointwise product on the delta basis, unit the constant function
/// 1, and `D f(x, y) = sum_i f(z_i)` for `x * y = [z_1, ..., z_n]`.
pub fn functions_space(x: &NValuedTable) -> BuiltSpace {
    let size = x.size();
    let mut mult = RationalTensor::zeros(&[size, size, size]);
    for i in 0..size {
        mult.set(&[i, i, i], Rational::from_i64(1));
    }
    let mut comult = RationalTensor::zeros(&[size, size, size]);
    for a in 0..size {
        for b in 0..size {
            for (z, times) in x.get(a, b).counts() {
                comult.set(&[z, a, b], Rational::from_i64(times as i64));
            }
        }
    }
    let unit = vec![Rational::from_i64(1); size];
    let space = StructureConstantSpace::new(size, mult, Some(unit), Some(comult))
        .expect("shapes agree")
        .with_labels((0..size).map(|i| format!("d{i}")).collect());
    let report = AxiomReport { verdicts: vec![space.coassociativity_check().informational()] };
    BuiltSpace { space, report }
}

/// `A (x) A` with `(a (x) b)(c (x) d) = ac (x) bd`, basis `(i, j) -> i * dim + j`.
/// For a function space this is the algebra of functions on `X x X`.
pub fn tensor_square<S: Scalar>(a: &StructureConstantSpace<S>) -> StructureConstantSpace<S> {
    let d = a.dim();
    let dim = d * d;
    let mut mult = RationalTensor::zeros(&[dim, dim, dim]);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    for (p, c1) in a.mul_basis(i, k) {
                        for (q, c2) in a.mul_basis(j, l) {
                            mult.add_at(&[i * d + j, k * d + l, p * d + q], c1.clone() * c2.clone());
                        }
                    }
                }
            }
        }
    }
    let unit = a.unit().map(|u| {
        (0..dim).map(|ij| u[ij / d].clone() * u[ij % d].clone()).collect()
    });
    let labels = (0..dim)
        .map(|ij| format!("{}(x){}", a.labels()[ij / d], a.labels()[ij % d]))
        .collect();
    StructureConstantSpace::new(dim, mult, unit, None)
        .expect("shapes agree")
        .with_labels(labels)
}

/// A linear map given by its matrix of shape `(codim, dim)`.
#[derive(Debug, Clone)]
pub struct LinearMap<S = Rational> {
    matrix: RationalTensor<S>,
    domain: Arc<StructureConstantSpace<S>>,
    codomain: Arc<StructureConstantSpace<S>>,
}

impl<S: Scalar> LinearMap<S> {
    pub fn new(
        matrix: RationalTensor<S>,
        domain: Arc<StructureConstantSpace<S>>,
        codomain: Arc<StructureConstantSpace<S>>,
    ) -> Result<Self> {
        let want = [codomain.dim(), domain.dim()];
        if matrix.shape() != want {
            return Err(Error::ShapeMismatch(format!("matrix has shape {:?}, expected {want:?}", matrix.shape())));
        }
        Ok(LinearMap { matrix, domain, codomain })
    }

    pub fn matrix(&self) -> &RationalTensor<S> {
        &self.matrix
    }

    pub fn domain(&self) -> &StructureConstantSpace<S> {
        &self.domain
    }

    pub fn codomain(&self) -> &StructureConstantSpace<S> {
        &self.codomain
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.domain.dim(), "vector dimension");
        (0..self.codomain.dim())
            .map(|r| {
                v.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .fold(S::zero(), |acc, (c, x)| acc + self.matrix.get(&[r, c]).clone() * x.clone())
            })
            .collect()
    }
}

/// The coproduct of `a` as a map into `a (x) a`.
pub fn comult_map<S: Scalar>(a: Arc<StructureConstantSpace<S>>) -> Result<LinearMap<S>> {
    let comult = a
        .comult()
        .ok_or_else(|| Error::ShapeMismatch("space has no comultiplication".into()))?;
    let dim = a.dim();
    let mut matrix = RationalTensor::zeros(&[dim * dim, dim]);
    for (idx, c) in comult.nonzero() {
        matrix.set(&[idx[1] * dim + idx[2], idx[0]], c);
    }
    let codomain = Arc::new(tensor_square(&a));
    LinearMap::new(matrix, a, codomain)
}

#[derive(Debug, Clone)]
pub struct PairingReport {
    pub report: AxiomReport,
    pub checks: usize,
}

/// `<x . y, d_z> = D(d_z)(x, y)` for all basis `x, y, z`.
pub fn pairing_check<S: Scalar>(
    ka: &StructureConstantSpace<S>,
    cx: &StructureConstantSpace<S>,
) -> Result<PairingReport> {
    if ka.dim() != cx.dim() {
        return Err(Error::DimensionMismatch(ka.dim(), cx.dim()));
    }
    let comult = cx
        .comult()
        .ok_or_else(|| Error::ShapeMismatch("function space has no comultiplication".into()))?;
    let dim = ka.dim();
    let mut tally = Tally::new(PAIRING);
    let mut checks = 0;
    for x in 0..dim {
        for y in 0..dim {
            for z in 0..dim {
                checks += 1;
                let lhs = ka.mult().get(&[x, y, z]);
                let rhs = comult.get(&[z, x, y]);
                if lhs != rhs {
                    tally.record(|| Witness::indices(&[x, y, z], format!("<x.y, f> = {lhs}, Df(x,y) = {rhs}")));
                }
            }
        }
    }
    Ok(PairingReport { report: AxiomReport { verdicts: vec![tally.finish()] }, checks })
}
