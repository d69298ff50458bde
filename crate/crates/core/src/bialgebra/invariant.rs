//! Functions on a group invariant under conjugation by a subgroup `B`.

use crate::error::{Error, Result};
use crate::groups::{orbits, FiniteGroup, Partition};
use crate::report::{AxiomReport, Tally, Witness};
use crate::scalar::{Rational, Scalar};

pub const FIRST_ARGUMENT: &str = "B-invariance in the first argument";
pub const SECOND_ARGUMENT: &str = "B-invariance in the second argument";
pub const IN_TENSOR_SQUARE: &str = "lies in the tensor square of C(G)^B";

/// Indicator functions of the conjugation orbits of `b` on `g`, a basis
/// of `C(G)^B`.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantBasis {
    pub orbits: Partition,
    pub basis: Vec<Vec<Rational>>,
}

impl InvariantBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn invariant_functions(g: &FiniteGroup, b: &[usize]) -> Result<InvariantBasis> {
    let orbits = orbits(&g.conjugation_group(b)?);
    let basis = orbits
        .parts
        .iter()
        .map(|part| {
            let mut v = vec![Rational::from_i64(0); g.size()];
            for &x in part {
                v[x] = Rational::from_i64(1);
            }
            v
        })
        .collect();
    Ok(InvariantBasis { orbits, basis })
}

#[derive(Debug, Clone)]
pub struct InvariantCoproduct {
    /// `values[x * |G| + y] = D f(x, y)`.
    pub values: Vec<Rational>,
    /// Coordinates in the basis `chi_i (x) chi_j`, index `i * r + j`.
    pub coords: Vec<Rational>,
    pub report: AxiomReport,
}

/// `D f(x, y) = sum_{b in B} f(b^-1 x b y)`.
pub fn invariant_coproduct(g: &FiniteGroup, b: &[usize], f: &[Rational]) -> Result<InvariantCoproduct> {
    let n = g.size();
    if f.len() != n {
        return Err(Error::DimensionMismatch(n, f.len()));
    }
    let b = g.validate_subgroup(b)?;
    let conj = |x: usize, by: usize| g.mul(g.mul(g.inverse(by), x), by);
    for x in 0..n {
        for &h in &b {
            if f[conj(x, h)] != f[x] {
                return Err(Error::NotInvariant(format!(
                    "f({}) = {} but f({}) = {}",
                    g.label(x),
                    f[x],
                    g.label(conj(x, h)),
                    f[conj(x, h)]
                )));
            }
        }
    }
    let mut values = vec![Rational::from_i64(0); n * n];
    for x in 0..n {
        for y in 0..n {
            values[x * n + y] = b
                .iter()
                .fold(Rational::from_i64(0), |acc, &h| acc + f[g.mul(conj(x, h), y)].clone());
        }
    }

    let mut first = Tally::new(FIRST_ARGUMENT);
    let mut second = Tally::new(SECOND_ARGUMENT);
    for x in 0..n {
        for y in 0..n {
            for &h in &b {
                if values[conj(x, h) * n + y] != values[x * n + y] {
                    first.record(|| Witness::indices(&[x, y, h], ""));
                }
                if values[x * n + conj(y, h)] != values[x * n + y] {
                    second.record(|| Witness::indices(&[x, y, h], ""));
                }
            }
        }
    }

    let inv = invariant_functions(g, &b)?;
    let r = inv.dim();
    let coords: Vec<Rational> = (0..r * r)
        .map(|ij| {
            let (x, y) = (inv.orbits.representative(ij / r), inv.orbits.representative(ij % r));
            values[x * n + y].clone()
        })
        .collect();
    let mut landed = Tally::new(IN_TENSOR_SQUARE);
    for x in 0..n {
        for y in 0..n {
            let (i, j) = (inv.orbits.proj[x], inv.orbits.proj[y]);
            if coords[i * r + j] != values[x * n + y] {
                landed.record(|| Witness::indices(&[x, y], format!("orbit pair ({i}, {j})")));
            }
        }
    }
    Ok(InvariantCoproduct {
        values,
        coords,
        report: AxiomReport { verdicts: vec![first.finish(), second.finish(), landed.finish()] },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_named_group, NamedGroup};
    use crate::scalar::rat;

    #[test]
    fn dimensions() {
        let sl = make_named_group(NamedGroup::Sl2F2).unwrap();
        let b = vec![sl.unit(), sl.index_of("A2").unwrap()];
        let inv = invariant_functions(&sl, &b).unwrap();
        assert_eq!(inv.dim(), 4);
        let mut sizes = inv.orbits.sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2]);
        let s3 = make_named_group(NamedGroup::S3).unwrap();
        assert_eq!(invariant_functions(&s3, &[0]).unwrap().dim(), 6);
        assert_eq!(invariant_functions(&s3, &(0..6).collect::<Vec<_>>()).unwrap().dim(), 3);
        assert!(matches!(invariant_functions(&s3, &[0, 1, 2]), Err(Error::NotASubgroup(_))));
    }

    #[test]
    fn sl2_coproducts_land() {
        let sl = make_named_group(NamedGroup::Sl2F2).unwrap();
        let b = vec![sl.unit(), sl.index_of("A2").unwrap()];
        let inv = invariant_functions(&sl, &b).unwrap();
        for f in &inv.basis {
            let d = invariant_coproduct(&sl, &b, f).unwrap();
            assert!(d.report.passed(), "{}", d.report);
            assert_eq!(d.coords.len(), 16);
        }
    }

    #[test]
    fn trivial_and_central_b() {
        let s3 = make_named_group(NamedGroup::S3).unwrap();
        let f: Vec<Rational> = (0..6).map(|i| rat(i as i64 * i as i64 - 2, 3)).collect();
        let d = invariant_coproduct(&s3, &[0], &f).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(d.values[x * 6 + y], f[s3.mul(x, y)]);
            }
        }
        let z4 = make_named_group(NamedGroup::Zn(4)).unwrap();
        let f: Vec<Rational> = (0..4).map(|i| rat(i as i64 + 1, 1)).collect();
        let d = invariant_coproduct(&z4, &[0, 2], &f).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(d.values[x * 4 + y], rat(2, 1) * f[z4.mul(x, y)].clone());
            }
        }
    }

    #[test]
    fn non_invariant_rejected() {
        let s3 = make_named_group(NamedGroup::S3).unwrap();
        let f: Vec<Rational> = (0..6).map(|i| rat(i as i64, 1)).collect();
        assert!(matches!(invariant_coproduct(&s3, &[0, 1], &f), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn invariance_on_small_groups() {
        let groups = [
            make_named_group(NamedGroup::S3).unwrap(),
            make_named_group(NamedGroup::Zn(8)).unwrap(),
            make_named_group(NamedGroup::Klein4).unwrap(),
            make_named_group(NamedGroup::Sl2F2).unwrap(),
        ];
        for g in &groups {
            let n = g.size();
            // every subgroup of order at most 4 generated by at most two elements
            let mut subgroups = std::collections::BTreeSet::new();
            for a in 0..n {
                for c in 0..n {
                    let mut h = vec![g.unit()];
                    loop {
                        let mut grown = h.clone();
                        for &x in &h {
                            for y in [a, c] {
                                grown.push(g.mul(x, y));
                            }
                        }
                        grown.sort();
                        grown.dedup();
                        if grown == h {
                            break;
                        }
                        h = grown;
                    }
                    if h.len() <= 4 {
                        subgroups.insert(h);
                    }
                }
            }
            for b in subgroups {
                for f in invariant_functions(g, &b).unwrap().basis {
                    assert!(invariant_coproduct(g, &b, &f).unwrap().report.passed());
                }
            }
        }
    }
}
