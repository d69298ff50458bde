//! Derived polylinear maps `Phi_k(f)` and Frobenius n-homomorphisms.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::nvalued::NValuedTable;
use crate::report::{AxiomReport, Tally, Verdict, Witness};
use crate::scalar::Scalar;

use super::space::{basis_tuples, LinearMap};

pub const TRACE: &str = "trace f(ab) = f(ba)";
pub const UNIT_VALUE: &str = "f(1) = n";
pub const PHI_BASIS: &str = "Phi_{n+1}(f) = 0 on basis tuples";
pub const PHI_RANDOM: &str = "Phi_{n+1}(f) = 0 on random tuples";

pub const RANDOM_TUPLES: usize = 10;

fn check_codomain<S: Scalar>(f: &LinearMap<S>) -> Result<()> {
    match f.codomain().commutativity_witness() {
        Some((i, j)) => Err(Error::NonCommutativeCodomain(i, j)),
        None => Ok(()),
    }
}

fn sub<S: Scalar>(a: Vec<S>, b: &[S]) -> Vec<S> {
    a.into_iter().zip(b).map(|(x, y)| x - y.clone()).collect()
}

fn phi<S: Scalar>(f: &LinearMap<S>, args: &[Vec<S>]) -> Vec<S> {
    let (a1, rest) = args.split_first().expect("at least one argument");
    if rest.is_empty() {
        return f.apply(a1);
    }
    let fa = f.apply(a1);
    let mut out = f.codomain().mul(&fa, &phi(f, rest));
    for i in 0..rest.len() {
        let mut shifted = rest.to_vec();
        shifted[i] = f.domain().mul(a1, &rest[i]);
        out = sub(out, &phi(f, &shifted));
    }
    out
}

/// `Phi_k(f)(a_1, ..., a_k)` by the recurrence
/// `Phi_{k+1}(a_1, ...) = f(a_1) Phi_k(a_2, ...) - sum_i Phi_k(a_2, ..., a_1 a_i, ...)`.
pub fn derived_map<S: Scalar>(f: &LinearMap<S>, k: usize, args: &[Vec<S>]) -> Result<Vec<S>> {
    check_codomain(f)?;
    if k == 0 || args.len() != k {
        return Err(Error::ShapeMismatch(format!("Phi_{k} needs {k} arguments, got {}", args.len())));
    }
    if let Some(a) = args.iter().find(|a| a.len() != f.domain().dim()) {
        return Err(Error::DimensionMismatch(f.domain().dim(), a.len()));
    }
    Ok(phi(f, args))
}

/// `sum over injective (j_1..j_k) of f_1(z_{j_1}) ... f_k(z_{j_k})` where
/// `x * y = [z_1, ..., z_n]`.
pub fn derk_oracle<S: Scalar>(x: &NValuedTable, fs: &[Vec<S>], pt: (usize, usize)) -> Result<S> {
    let n = x.n();
    let k = fs.len();
    if k > n + 1 {
        return Err(Error::KTooLarge { k, n });
    }
    if let Some(f) = fs.iter().find(|f| f.len() != x.size()) {
        return Err(Error::DimensionMismatch(x.size(), f.len()));
    }
    let z = x.get(pt.0, pt.1).to_vec();
    let mut total = S::zero();
    for js in (0..n).permutations(k) {
        let term = js.iter().zip(fs).fold(S::one(), |acc, (&j, f)| acc * f[z[j]].clone());
        total = total + term;
    }
    Ok(total)
}

fn random_vector<S: Scalar, R: Rng>(rng: &mut R, dim: usize) -> Vec<S> {
    (0..dim)
        .map(|_| loop {
            if let Some(v) = S::from_ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4)) {
                break v;
            }
        })
        .collect()
}

/// Checks that `f` is a trace map with `f(1) = n` and `Phi_{n+1}(f) = 0`.
/// By multilinearity the basis tuples decide the last condition; the
/// seeded random tuples are a guard on that reasoning.
pub fn frobenius_check<S: Scalar>(f: &LinearMap<S>, n: usize, seed: u64) -> Result<AxiomReport> {
    check_codomain(f)?;
    let a = f.domain();
    let b = f.codomain();
    let dim = a.dim();

    let mut trace = Tally::new(TRACE);
    for i in 0..dim {
        for j in i + 1..dim {
            let (ei, ej) = (a.basis_vector(i), a.basis_vector(j));
            let (l, r) = (f.apply(&a.mul(&ei, &ej)), f.apply(&a.mul(&ej, &ei)));
            if l != r {
                trace.record(|| Witness::indices(&[i, j], ""));
            }
        }
    }

    let unit = match (a.unit(), b.unit()) {
        (Some(ua), Some(ub)) => {
            let got = f.apply(ua);
            let n_s = S::from_i64(n as i64);
            let mut tally = Tally::new(UNIT_VALUE);
            if let Some(c) = (0..got.len()).find(|&c| got[c] != n_s.clone() * ub[c].clone()) {
                tally.record(|| Witness::indices(&[c], format!("f(1) = {} at this coordinate, expected {}", got[c], n_s.clone() * ub[c].clone())));
            }
            tally.finish()
        }
        _ => Verdict::fail(UNIT_VALUE, 1, Witness::new([], "domain or codomain has no unit")),
    };

    let mut basis = Tally::new(PHI_BASIS);
    for tuple in basis_tuples(dim, n + 1) {
        let args: Vec<Vec<S>> = tuple.iter().map(|&i| a.basis_vector(i)).collect();
        let value = phi(f, &args);
        if let Some(c) = value.iter().position(|v| !v.is_zero()) {
            basis.record(|| {
                let mut w = tuple.clone();
                w.push(c);
                Witness::indices(&w, format!("value {}", value[c]))
            });
        }
    }

    let mut random = Tally::new(PHI_RANDOM);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..RANDOM_TUPLES {
        let args: Vec<Vec<S>> = (0..=n).map(|_| random_vector(&mut rng, dim)).collect();
        let value = phi(f, &args);
        if let Some(c) = value.iter().position(|v| !v.is_zero()) {
            random.record(|| Witness::indices(&[t, c], format!("value {}", value[c])));
        }
    }

    Ok(AxiomReport { verdicts: vec![trace.finish(), unit, basis.finish(), random.finish()] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::space::{comult_map, functions_space, group_algebra};
    use crate::bialgebra::tensor::RationalTensor;
    use crate::groups::{make_named_group, subgroup_generated, NamedGroup, Perm};
    use crate::multiset::Multiset;
    use crate::nvalued::coset_nv_group;
    use crate::scalar::{rat, ModP, Rational};
    use proptest::prelude::*;
    use std::sync::Arc;

    fn coset_q() -> NValuedTable {
        let rows: [[[usize; 2]; 4]; 4] = [
            [[0, 0], [0, 0], [0, 0], [0, 0]],
            [[1, 1], [1, 1], [2, 2], [2, 2]],
            [[2, 2], [2, 2], [1, 2], [1, 2]],
            [[3, 3], [3, 3], [3, 3], [3, 3]],
        ];
        NValuedTable::from_fn(4, 2, |x, y| Multiset::from_list(rows[x][y])).unwrap()
    }

    fn delta(t: &NValuedTable) -> LinearMap<Rational> {
        comult_map(Arc::new(functions_space(t).space)).unwrap()
    }

    fn delta_fn(size: usize, i: usize) -> Vec<Rational> {
        (0..size).map(|j| rat((i == j) as i64, 1)).collect()
    }

    #[test]
    fn low_orders() {
        let t = coset_q();
        let f = delta(&t);
        let a = vec![rat(1, 1), rat(2, 1), rat(-1, 3), rat(0, 1)];
        let b = vec![rat(0, 1), rat(1, 2), rat(5, 1), rat(1, 1)];
        assert_eq!(derived_map(&f, 1, std::slice::from_ref(&a)).unwrap(), f.apply(&a));
        let ab = f.domain().mul(&a, &b);
        let expected: Vec<Rational> = f
            .codomain()
            .mul(&f.apply(&a), &f.apply(&b))
            .into_iter()
            .zip(f.apply(&ab))
            .map(|(x, y)| x - y)
            .collect();
        assert_eq!(derived_map(&f, 2, &[a, b]).unwrap(), expected);
    }

    #[test]
    fn coset_q_is_frobenius_2() {
        let f = delta(&coset_q());
        let r = frobenius_check(&f, 2, 0).unwrap();
        assert!(r.passed(), "{r}");
        // but not a 1-homomorphism
        assert!(!frobenius_check(&f, 1, 0).unwrap().passed());
    }

    #[test]
    fn z3_is_frobenius_1() {
        let z3 = make_named_group(NamedGroup::Zn(3)).unwrap();
        let f = delta(&NValuedTable::from_single(z3.table()));
        assert!(frobenius_check(&f, 1, 0).unwrap().passed());
    }

    #[test]
    fn z4_coset_is_frobenius_2() {
        let z4 = make_named_group(NamedGroup::Zn(4)).unwrap();
        let a = subgroup_generated(4, &[Perm::new(vec![0, 3, 2, 1]).unwrap()]);
        let t = coset_nv_group(&z4, &a).unwrap().product().clone();
        assert!(frobenius_check(&delta(&t), 2, 7).unwrap().passed());
    }

    #[test]
    fn derk_examples() {
        let t = coset_q();
        let f = delta_fn(4, 1);
        assert_eq!(derk_oracle(&t, std::slice::from_ref(&f), (2, 2)).unwrap(), rat(1, 1));
        let g = delta_fn(4, 2);
        assert_eq!(derk_oracle(&t, &[f.clone(), g.clone()], (2, 2)).unwrap(), rat(1, 1));
        assert_eq!(derk_oracle(&t, &[f.clone(), g.clone(), f.clone()], (2, 2)).unwrap(), rat(0, 1));
        assert_eq!(
            derk_oracle(&t, &[f.clone(), f.clone(), f.clone(), f], (0, 0)).unwrap_err(),
            Error::KTooLarge { k: 4, n: 2 }
        );
    }

    #[test]
    fn noncommutative_codomain_rejected() {
        let s3 = make_named_group(NamedGroup::S3).unwrap();
        let ka = Arc::new(group_algebra(&NValuedTable::from_single(s3.table())).space);
        let mut m = RationalTensor::zeros(&[6, 6]);
        for i in 0..6 {
            m.set(&[i, i], rat(1, 1));
        }
        let id = LinearMap::new(m, ka.clone(), ka).unwrap();
        assert!(matches!(derived_map(&id, 1, &[delta_fn(6, 0)]), Err(Error::NonCommutativeCodomain(_, _))));
    }

    #[test]
    fn mod_p_matches_rational() {
        let cx = functions_space(&coset_q()).space.to_mod_p::<101>().unwrap();
        let fp: LinearMap<ModP<101>> = comult_map(Arc::new(cx)).unwrap();
        assert!(frobenius_check(&fp, 2, 0).unwrap().passed());
        assert!(!frobenius_check(&fp, 1, 0).unwrap().passed());
    }

    fn small_table() -> impl Strategy<Value = NValuedTable> {
        (1usize..=4, 1usize..=3).prop_flat_map(|(size, n)| {
            proptest::collection::vec(proptest::collection::vec(0..size, n), size * size).prop_map(move |cells| {
                NValuedTable::new(size, n, cells.into_iter().map(Multiset::from_list).collect()).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn recurrence_matches_oracle(t in small_table()) {
            let f = delta(&t);
            let size = t.size();
            for k in 1..=t.n() + 1 {
                for tuple in basis_tuples(size, k) {
                    let fs: Vec<Vec<Rational>> = tuple.iter().map(|&i| delta_fn(size, i)).collect();
                    let phi = derived_map(&f, k, &fs).unwrap();
                    for x in 0..size {
                        for y in 0..size {
                            prop_assert_eq!(&phi[x * size + y], &derk_oracle(&t, &fs, (x, y)).unwrap());
                        }
                    }
                }
            }
        }

        #[test]
        fn phi_is_symmetric(t in small_table()) {
            let f = delta(&t);
            let size = t.size();
            for k in 2..=3 {
                for tuple in basis_tuples(size, k) {
                    let fs: Vec<Vec<Rational>> = tuple.iter().map(|&i| delta_fn(size, i)).collect();
                    let base = derived_map(&f, k, &fs).unwrap();
                    for perm in (0..k).permutations(k) {
                        let permuted: Vec<Vec<Rational>> = perm.iter().map(|&p| fs[p].clone()).collect();
                        prop_assert_eq!(&derived_map(&f, k, &permuted).unwrap(), &base);
                    }
                }
            }
        }

        #[test]
        fn every_table_gives_frobenius_n(t in small_table()) {
            let r = frobenius_check(&delta(&t), t.n(), 3).unwrap();
            prop_assert!(r.passed());
        }
    }
}
