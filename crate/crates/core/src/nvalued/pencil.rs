//! The pencil of deformed matrix products `m_t(A, B) = AB + t AMB`.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{AxiomReport, Tally, Witness};
use crate::scalar::{rat, Rational};

pub const PENCIL_ASSOCIATIVITY: &str = "2-valued pencil associativity";
pub const MIXED_ASSOCIATIVITY: &str = "mixed associativity m_t1(m_t2(A,B),C) = m_t1(A,m_t2(B,C))";
pub const PLAIN_UNIT: &str = "unit E of AB";
pub const NU_UNIT: &str = "unit M^-1 of AMB";
pub const NU_INVERSE: &str = "inverse M^-1 A^-1 M^-1 under AMB";

pub fn pencil_product(a: &Matrix, b: &Matrix, m: &Matrix, t: &Rational) -> Result<Matrix> {
    let ab = a.try_mul(b)?;
    let amb = a.try_mul(m)?.try_mul(b)?;
    ab.try_add(&amb.scale(t))
}

#[derive(Debug, Clone)]
pub struct PencilReport {
    pub report: AxiomReport,
    /// Whether plain mixed associativity held, one entry per sample.
    pub mixed: Vec<bool>,
}

/// Sample-based checks of the pencil `{m_t1, m_t2}` for a fixed `m`.
pub fn pencil_nv_assoc_check(
    m: &Matrix,
    t1: &Rational,
    t2: &Rational,
    samples: &[(Matrix, Matrix, Matrix)],
) -> Result<PencilReport> {
    let m_inv = m.inverse()?;
    let ts = [t1, t2];
    let zero = rat(0, 1);
    let nu = |x: &Matrix, y: &Matrix| &(x * m) * y;
    let mut assoc = Tally::new(PENCIL_ASSOCIATIVITY);
    let mut mixed_tally = Tally::new(MIXED_ASSOCIATIVITY);
    let mut plain_unit = Tally::new(PLAIN_UNIT);
    let mut nu_unit = Tally::new(NU_UNIT);
    let mut nu_inverse = Tally::new(NU_INVERSE);
    let mut mixed = Vec::with_capacity(samples.len());
    for (idx, (a, b, c)) in samples.iter().enumerate() {
        let dim = m.dim();
        if [a, b, c].iter().any(|x| x.dim() != dim) {
            return Err(Error::ShapeMismatch(format!("sample {idx} does not match M of dimension {dim}")));
        }
        let mut left = Vec::with_capacity(4);
        let mut right = Vec::with_capacity(4);
        for ti in ts {
            for tj in ts {
                left.push(pencil_product(&pencil_product(a, b, m, tj)?, c, m, ti)?);
                right.push(pencil_product(a, &pencil_product(b, c, m, tj)?, m, ti)?);
            }
        }
        let plain = left[1] == right[1];
        mixed.push(plain);
        if !plain {
            mixed_tally.record(|| Witness::indices(&[idx], "sample"));
        }
        left.sort();
        right.sort();
        if left != right {
            assoc.record(|| Witness::indices(&[idx], "sample"));
        }
        for x in [a, b, c] {
            let e = Matrix::identity(dim);
            if pencil_product(&e, x, m, &zero)? != *x || pencil_product(x, &e, m, &zero)? != *x {
                plain_unit.record(|| Witness::indices(&[idx], x.to_string()));
            }
            if nu(&m_inv, x) != *x || nu(x, &m_inv) != *x {
                nu_unit.record(|| Witness::indices(&[idx], x.to_string()));
            }
            if let Ok(x_inv) = x.inverse() {
                let candidate = &(&m_inv * &x_inv) * &m_inv;
                if nu(x, &candidate) != m_inv || nu(&candidate, x) != m_inv {
                    nu_inverse.record(|| Witness::indices(&[idx], x.to_string()));
                }
            }
        }
    }
    let mut report = AxiomReport::new();
    report.push(assoc.finish());
    report.push(mixed_tally.finish().informational());
    report.push(plain_unit.finish());
    report.push(nu_unit.finish());
    report.push(nu_inverse.finish());
    Ok(PencilReport { report, mixed })
}

fn random_entry<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

pub fn random_matrix<R: Rng>(rng: &mut R, dim: usize) -> Matrix {
    let rows = (0..dim).map(|_| (0..dim).map(|_| random_entry(rng)).collect()).collect();
    Matrix::from_rows(rows).expect("square by construction")
}

/// Draws matrices with entries `p/q`, `p in -5..=5`, `q in 1..=4`, until
/// one is invertible.
pub fn random_invertible<R: Rng>(rng: &mut R, dim: usize) -> Matrix {
    loop {
        let candidate = random_matrix(rng, dim);
        if candidate.is_invertible() {
            return candidate;
        }
    }
}

/// Seeded triples of invertible matrices.
pub fn random_samples(seed: u64, dim: usize, count: usize) -> Vec<(Matrix, Matrix, Matrix)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (
                random_invertible(&mut rng, dim),
                random_invertible(&mut rng, dim),
                random_invertible(&mut rng, dim),
            )
        })
        .collect()
}
