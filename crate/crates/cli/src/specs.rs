//! Colon-syntax specs for named structures and small argument parsers.

use std::str::FromStr;

use multival_core::groups::{
    conjugation_action, make_named_group, subgroup_generated, FiniteGroup, NamedGroup, Perm, PermGroup,
};
use multival_core::quandles::QuandleSpec;
use multival_core::{Error, Result};

/// Most values a swept parameter range may take.
pub const RANGE_LIMIT: usize = 21;

/// Largest window half-width accepted by searches.
pub const WINDOW_LIMIT: i64 = 50;

/// An inclusive integer range written `lo..hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected `lo..hi`, found `{s}`"))?;
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("`{t}` is not an integer"));
        let r = IntRange { lo: parse(lo)?, hi: parse(hi.trim_start_matches('='))? };
        if r.lo > r.hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(r)
    }
}

impl IntRange {
    pub fn values(self) -> Result<Vec<i64>> {
        let len = (self.hi - self.lo + 1) as usize;
        if len > RANGE_LIMIT {
            return Err(Error::SizeLimitExceeded { size: len, limit: RANGE_LIMIT });
        }
        Ok((self.lo..=self.hi).collect())
    }
}

/// Elements named by label or by 0-based index, comma separated.
pub fn parse_elements(g: &FiniteGroup, list: &str) -> Result<Vec<usize>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            g.index_of(s)
                .or_else(|| s.parse::<usize>().ok().filter(|&i| i < g.size()))
                .ok_or_else(|| Error::UnknownName(s.to_string()))
        })
        .collect()
}

/// Generators of an automorphism group: `conj-by:<element>` (x -> b^-1 x b),
/// `inverse` (x -> x^-1) or `perm:<i0>,<i1>,...` (explicit images).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutSpec {
    ConjBy(String),
    Inverse,
    Images(Vec<usize>),
}

impl FromStr for AutSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "inverse" {
            return Ok(AutSpec::Inverse);
        }
        if let Some(b) = s.strip_prefix("conj-by:") {
            return Ok(AutSpec::ConjBy(b.to_string()));
        }
        if let Some(p) = s.strip_prefix("perm:") {
            return p
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not an index")))
                .collect::<std::result::Result<_, _>>()
                .map(AutSpec::Images);
        }
        Err(format!("expected `conj-by:<element>`, `inverse` or `perm:<images>`, found `{s}`"))
    }
}

impl AutSpec {
    /// The permutation of the carrier of `g` (or of `0..size` when there is
    /// no group, which only explicit images allow).
    pub fn resolve(&self, g: Option<&FiniteGroup>, size: usize) -> Result<Perm> {
        let need_group = || Error::UnknownName("this automorphism needs a group carrier".into());
        match self {
            AutSpec::ConjBy(b) => {
                let g = g.ok_or_else(need_group)?;
                let b = parse_elements(g, b)?;
                match b.as_slice() {
                    [b] => Ok(conjugation_action(g, *b)),
                    _ => Err(Error::UnknownName(format!("conj-by needs one element, got {}", b.len()))),
                }
            }
            AutSpec::Inverse => {
                let g = g.ok_or_else(need_group)?;
                Ok(Perm::new((0..g.size()).map(|x| g.inverse(x)).collect()).expect("inversion is a bijection"))
            }
            AutSpec::Images(images) => {
                if images.len() != size {
                    return Err(Error::CarrierMismatch(size, images.len()));
                }
                Perm::new(images.clone())
                    .ok_or_else(|| Error::NotAnAutomorphism(format!("{images:?} is not a permutation")))
            }
        }
    }
}

pub fn aut_group(auts: &[AutSpec], g: Option<&FiniteGroup>, size: usize) -> Result<PermGroup> {
    let gens = auts.iter().map(|a| a.resolve(g, size)).collect::<Result<Vec<_>>>()?;
    Ok(subgroup_generated(size, &gens))
}

/// The group whose elements label the carrier of a named quandle.
pub fn quandle_carrier(spec: &QuandleSpec) -> Result<FiniteGroup> {
    let name = match *spec {
        QuandleSpec::Conj(g, _) | QuandleSpec::Core(g) => g,
        QuandleSpec::AlexCyclic(k, _) | QuandleSpec::Trivial(k) | QuandleSpec::Dihedral(k) => NamedGroup::Zn(k),
    };
    make_named_group(name)
}
