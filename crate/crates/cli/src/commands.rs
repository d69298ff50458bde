//! Subcommand implementations. Each returns a `Report`.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use multival_core::bialgebra::{
    comult_map, corack_check, frobenius_check, functions_space, group_algebra, invariant_coproduct,
    invariant_functions, magma_bialgebra, pairing_check, rack_bialgebra, StructureConstantSpace,
};
use multival_core::braid::{braid_check, multirack_to_map, BraidFamily, LinearForm};
use multival_core::format::{self, Document};
use multival_core::groups::{make_named_group, FiniteGroup, NamedGroup, Partition};
use multival_core::nvalued::{
    coset_nv_group, coset_nv_quandle, conj_family, detect_unit_inverse, double_coset_group, linear_multirack_check,
    multi_check, multi_to_nvalued, nv_assoc_check, nv_group_check, nv_rack_check, power_nvalued, Flavor,
    LinearClass, MultiOpFamily, NValuedTable, WindowedZOp, UNIT,
};
use multival_core::quandles::{
    enumerate_quandles, enumerate_racks, make_named_quandle, quandle_check, rack_check, QuandleSpec,
};
use multival_core::report::Tally;
use multival_core::scalar::Rational;
use multival_core::{AxiomReport, CayleyTable, Error, InclusionMode, Verdict, Witness};
use num_traits::Zero;

use crate::output::Report;
use crate::specs::{aut_group, parse_elements, quandle_carrier, AutSpec, IntRange, WINDOW_LIMIT};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub window: i64,
    pub seed: u64,
    pub inclusion: InclusionMode,
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn with_path<T>(path: &Path, r: multival_core::Result<T>) -> CliResult<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } | Error::KindMismatch { .. } => CliError::Usage(format!("{}: {e}", path.display())),
        e => CliError::Core(e),
    })
}

pub fn write_payload(path: &Path, payload: &str) -> CliResult<()> {
    fs::write(path, payload).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn read_table(path: &Path) -> CliResult<CayleyTable> {
    match with_path(path, format::parse_document(&read(path)?))? {
        Document::Magma(t) | Document::Group(t) => Ok(t),
        d => Err(CliError::Usage(format!(
            "{}: {}",
            path.display(),
            Error::KindMismatch { expected: "magma".into(), found: d.kind().into() }
        ))),
    }
}

/// A product table from an nvalued, group or magma file.
fn read_nv(path: &Path) -> CliResult<format::NvFile> {
    match with_path(path, format::parse_document(&read(path)?))? {
        Document::NValued(f) => Ok(f),
        Document::Magma(t) | Document::Group(t) => Ok(format::NvFile { product: NValuedTable::from_single(&t), bar: None }),
        d => Err(CliError::Usage(format!(
            "{}: {}",
            path.display(),
            Error::KindMismatch { expected: "nvalued".into(), found: d.kind().into() }
        ))),
    }
}

fn named_group(name: &str) -> CliResult<FiniteGroup> {
    Ok(make_named_group(name.parse::<NamedGroup>()?)?)
}

fn indices(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn part_labels(part: &Partition, g: &FiniteGroup) -> Vec<String> {
    part.parts
        .iter()
        .map(|p| format!("{{{}}}", p.iter().map(|&x| g.label(x)).collect::<Vec<_>>().join(",")))
        .collect()
}

fn table_rows(t: &CayleyTable) -> String {
    t.rows()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" / ")
}

// check

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CheckKind {
    Rack,
    Quandle,
    Nvgroup,
    Nvrack,
    Nvquandle,
    Multigroup,
    Multirack,
    Braid,
}

pub fn check(kind: CheckKind, file: &Path, s: Settings) -> CliResult<Report> {
    let name = format!("{kind:?}").to_lowercase();
    let mut r = Report::new(format!("check {name}"));
    r.field("input", file.display());
    match kind {
        CheckKind::Rack | CheckKind::Quandle => {
            let t = read_table(file)?;
            r.field("size", t.size());
            r.verdicts(&if kind == CheckKind::Rack { rack_check(&t) } else { quandle_check(&t) });
        }
        CheckKind::Nvgroup => {
            let f = read_nv(file)?;
            r.field("size", f.product.size()).field("n", f.product.n());
            match detect_unit_inverse(&f.product) {
                Some((unit, inv)) => {
                    r.field("unit", unit).field("inverse", indices(&inv));
                    r.verdicts(&nv_group_check(&f.product, unit, &inv));
                }
                None => {
                    r.verdicts(&nv_assoc_check(&f.product));
                    r.verdict(Verdict::fail(UNIT, 1, Witness::new([], "no element e with e*x = [x,...,x] = x*e and an inverse map")));
                }
            }
        }
        CheckKind::Nvrack | CheckKind::Nvquandle => {
            let f = read_nv(file)?;
            let bar = f.bar.ok_or_else(|| CliError::Usage(format!("{}: {name} needs a `bar` block", file.display())))?;
            r.field("size", f.product.size()).field("n", f.product.n());
            r.verdicts(&nv_rack_check(&f.product, &bar, kind == CheckKind::Nvquandle, s.inclusion)?);
        }
        CheckKind::Multigroup | CheckKind::Multirack => {
            let m = with_path(file, format::parse_multi(&read(file)?))?;
            let ok = match kind {
                CheckKind::Multigroup => m.flavor == Flavor::Group,
                _ => m.flavor != Flavor::Group,
            };
            if !ok {
                return Err(CliError::Usage(format!("{}: {name} does not accept a {} family", file.display(), m.flavor)));
            }
            r.field("size", m.size).field("operations", m.ops.len()).field("flavor", m.flavor);
            let fam = MultiOpFamily::new(m.ops, m.flavor)?;
            r.verdicts(&multi_check(&fam)?);
        }
        CheckKind::Braid => {
            let map = with_path(file, format::parse_braid(&read(file)?))?;
            r.field("size", map.size().unwrap_or(0));
            r.verdicts(&braid_check(&map));
        }
    }
    Ok(r)
}

// build

#[derive(Debug, Clone, clap::Subcommand)]
pub enum BuildWhat {
    /// n-valued group on the orbits of an automorphism group of a named group.
    CosetGroup {
        #[arg(long)]
        group: String,
        /// Generator: `conj-by:<element>`, `inverse` or `perm:<images>`. Repeatable.
        #[arg(long, required = true)]
        aut: Vec<AutSpec>,
    },
    /// n-valued quandle on the orbits of an automorphism group of a named quandle.
    CosetQuandle {
        /// Named quandle such as `conj:S3:1`, `core:Z5`, `dihedral:5`.
        #[arg(long)]
        quandle: QuandleSpec,
        #[arg(long, required = true)]
        aut: Vec<AutSpec>,
    },
    /// n-valued group on the double cosets of a subgroup.
    DoubleCoset {
        #[arg(long)]
        group: String,
        /// Elements by label or index, comma separated.
        #[arg(long)]
        subgroup: String,
    },
    /// The rack `g * h = [h^-i g h^i for i in exponents]`.
    ConjFamily {
        #[arg(long)]
        group: String,
        #[arg(long, required = true, value_delimiter = ',', allow_hyphen_values = true)]
        exponents: Vec<i64>,
    },
    /// `x * y = [S_y(x), ..., S_y^n(x)]` for an n-quandle.
    Powers {
        #[arg(long)]
        quandle: QuandleSpec,
        #[arg(long)]
        n: usize,
    },
    /// n-valued structure `[x *1 y, ..., x *n y]` from a multi file.
    MultiToNv { file: PathBuf },
    /// Structure constants of k[Q].
    RackBialgebra {
        #[arg(long, conflicts_with = "magma")]
        quandle: Option<QuandleSpec>,
        #[arg(long)]
        magma: Option<PathBuf>,
        /// Skip the rack precondition.
        #[arg(long)]
        unchecked: bool,
    },
    /// Structure constants of C(X).
    FunctionsSpace {
        /// Table file (nvalued, group or magma).
        #[arg(long, conflicts_with = "group")]
        nv: Option<PathBuf>,
        #[arg(long)]
        group: Option<String>,
    },
}

fn nv_payload(product: &NValuedTable, bar: Option<&NValuedTable>) -> Option<String> {
    Some(format::print_nvalued(product, bar))
}

fn table_source(nv: Option<&PathBuf>, group: Option<&String>) -> CliResult<(NValuedTable, Option<Vec<String>>)> {
    match (nv, group) {
        (Some(p), None) => Ok((read_nv(p)?.product, None)),
        (None, Some(g)) => {
            let g = named_group(g)?;
            Ok((NValuedTable::from_single(g.table()), Some(g.labels().to_vec())))
        }
        _ => Err(CliError::Usage("give exactly one of --nv, --group".into())),
    }
}

pub fn build(what: &BuildWhat, s: Settings) -> CliResult<Report> {
    let mut r;
    match what {
        BuildWhat::CosetGroup { group, aut } => {
            r = Report::new("build coset-group");
            let g = named_group(group)?;
            let a = aut_group(aut, Some(&g), g.size())?;
            let nv = coset_nv_group(&g, &a)?;
            let part = multival_core::groups::orbits(&a);
            let labels = part_labels(&part, &g);
            r.field("group", group).field("automorphisms", a.order()).field("classes", labels.join(" "));
            r.field("unit", nv.unit()).field("inverse", indices(nv.inv()));
            r.payload = nv_payload(nv.product(), None);
            r.verdicts(nv.report());
            r.labels = Some(labels);
        }
        BuildWhat::CosetQuandle { quandle, aut } => {
            r = Report::new("build coset-quandle");
            let q = make_named_quandle(quandle)?;
            let carrier = quandle_carrier(quandle)?;
            let a = aut_group(aut, Some(&carrier), q.size())?;
            let cq = coset_nv_quandle(&q, &a, s.inclusion)?;
            let labels = part_labels(&cq.orbits, &carrier);
            r.field("quandle", quandle).field("automorphisms", a.order()).field("classes", labels.join(" "));
            r.payload = nv_payload(cq.rack.product(), Some(cq.rack.bar()));
            r.verdicts(cq.rack.report());
            r.labels = Some(labels);
        }
        BuildWhat::DoubleCoset { group, subgroup } => {
            r = Report::new("build double-coset");
            let g = named_group(group)?;
            let h = parse_elements(&g, subgroup)?;
            let (nv, part) = double_coset_group(&g, &h)?;
            let labels = part_labels(&part, &g);
            r.field("group", group).field("subgroup", subgroup).field("class_count", part.len());
            r.field("classes", labels.join(" "));
            r.field("unit", nv.unit()).field("inverse", indices(nv.inv()));
            r.payload = nv_payload(nv.product(), None);
            r.verdicts(nv.report());
            r.labels = Some(labels);
        }
        BuildWhat::ConjFamily { group, exponents } => {
            r = Report::new("build conj-family");
            let g = named_group(group)?;
            let rack = conj_family(&g, exponents, s.inclusion)?;
            let ex: Vec<String> = exponents.iter().map(ToString::to_string).collect();
            r.field("group", group).field("exponents", ex.join(","));
            r.payload = nv_payload(rack.product(), Some(rack.bar()));
            r.verdicts(rack.report());
            r.labels = Some(g.labels().to_vec());
        }
        BuildWhat::Powers { quandle, n } => {
            r = Report::new("build powers");
            let q = make_named_quandle(quandle)?;
            let rack = power_nvalued(&q, *n, s.inclusion)?;
            r.field("quandle", quandle).field("n", n);
            r.payload = nv_payload(rack.product(), Some(rack.bar()));
            r.verdicts(rack.report());
        }
        BuildWhat::MultiToNv { file } => {
            r = Report::new("build multi-to-nv");
            let m = with_path(file, format::parse_multi(&read(file)?))?;
            r.field("input", file.display()).field("flavor", m.flavor);
            let fam = MultiOpFamily::new(m.ops, m.flavor)?;
            let out = multi_to_nvalued(&fam, s.inclusion)?;
            r.payload = nv_payload(&out.product, out.bar.as_ref());
            r.verdicts(&out.report);
        }
        BuildWhat::RackBialgebra { quandle, magma, unchecked } => {
            r = Report::new("build rack-bialgebra");
            let t = match (quandle, magma) {
                (Some(q), None) => {
                    r.field("quandle", q);
                    make_named_quandle(q)?.table().clone()
                }
                (None, Some(p)) => {
                    r.field("input", p.display());
                    read_table(p)?
                }
                _ => return Err(CliError::Usage("give exactly one of --quandle, --magma".into())),
            };
            let b = if *unchecked { magma_bialgebra(&t) } else { rack_bialgebra(&t)? };
            r.field("dim", b.space.dim());
            r.payload = Some(format::print_space(&b.space));
            r.verdicts(&b.report);
        }
        BuildWhat::FunctionsSpace { nv, group } => {
            r = Report::new("build functions-space");
            let (t, _) = table_source(nv.as_ref(), group.as_ref())?;
            let b = functions_space(&t);
            r.field("dim", b.space.dim()).field("n", t.n());
            r.payload = Some(format::print_space(&b.space));
            r.verdicts(&b.report);
        }
    }
    Ok(r)
}

// search

#[derive(Debug, Clone, clap::Subcommand)]
pub enum SearchWhat {
    /// Linear 2-multi-racks on the integers whose map (x *1 y, x *2 y) solves the braid equation.
    BraidMultirack {
        /// Inclusive range `lo..hi` of the constant term.
        #[arg(long, allow_hyphen_values = true)]
        b_range: IntRange,
        /// Range of the coefficient of y; defaults to the b range.
        #[arg(long, allow_hyphen_values = true)]
        a_range: Option<IntRange>,
    },
    /// Quandles (or racks) of a given order.
    EnumerateQuandles {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        up_to_iso: bool,
        /// Enumerate racks instead of quandles.
        #[arg(long)]
        racks: bool,
    },
    /// Sets of pairwise mutually distributive rack tables of a given order.
    EnumerateMultiracks {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 2)]
        ops: usize,
    },
}

fn form_pair(f: (LinearForm, LinearForm)) -> String {
    format!("({}, {})", f.0, f.1)
}

pub fn search(what: &SearchWhat, s: Settings) -> CliResult<Report> {
    let mut r;
    match what {
        SearchWhat::BraidMultirack { b_range, a_range } => {
            r = Report::new("search braid-multirack");
            if s.window < 0 || s.window > WINDOW_LIMIT {
                return Err(Error::SizeLimitExceeded { size: s.window.unsigned_abs() as usize, limit: WINDOW_LIMIT as usize }.into());
            }
            let bs = b_range.values()?;
            let as_ = a_range.unwrap_or(*b_range).values()?;
            let mut racks = Vec::new();
            for eps in [-1, 1] {
                for &a in &as_ {
                    for &b in &bs {
                        let op = WindowedZOp::new(eps, a, b);
                        if LinearClass::of(&op).is_rack() {
                            racks.push(op);
                        }
                    }
                }
            }
            let mut survivors = Vec::new();
            let mut multiracks = 0usize;
            for op1 in &racks {
                for op2 in &racks {
                    let m = linear_multirack_check(op1, op2, s.window)?;
                    if !m.report.passed() {
                        continue;
                    }
                    multiracks += 1;
                    if braid_check(&multirack_to_map(op1, op2, s.window)).passed() {
                        survivors.push((*op1, *op2, m.family));
                    }
                }
            }
            r.field("window", s.window)
                .field("operations", 2 * as_.len() * bs.len())
                .field("linear_racks", racks.len())
                .field("multiracks", multiracks)
                .field("survivors", survivors.len());
            let found: Vec<(LinearForm, LinearForm)> =
                survivors.iter().map(|(a, b, _)| (LinearForm::from(*a), LinearForm::from(*b))).collect();
            for (i, (op1, op2, fam)) in survivors.iter().enumerate() {
                let fam = fam.map_or("unlisted".to_string(), |f| format!("{f:?}"));
                r.field(format!("survivor.{i}"), format!("op1={op1} op2={op2} family={fam} R={}", form_pair(found[i])));
            }
            for fam in BraidFamily::all(&bs) {
                let in_sweep = found.contains(&fam.forms());
                r.field(format!("family {fam}"), if in_sweep { "found by sweep" } else { "not of the form (x *1 y, x *2 y)" });
                let mut v = braid_check(&fam.map(s.window)).verdicts.remove(0);
                v.axiom = format!("braid equation for R = {fam}");
                r.verdict(v);
            }
        }
        SearchWhat::EnumerateQuandles { order, up_to_iso, racks } => {
            let noun = if *racks { "racks" } else { "quandles" };
            r = Report::new(format!("search enumerate-{noun}"));
            let found = if *racks { enumerate_racks(*order, *up_to_iso)? } else { enumerate_quandles(*order, *up_to_iso)? };
            r.field("order", order).field("up_to_iso", up_to_iso).field("count", found.len());
            let axiom = if *racks { "every enumerated table passes rack_check" } else { "every enumerated table passes quandle_check" };
            let mut tally = Tally::new(axiom);
            for (i, q) in found.iter().enumerate() {
                r.field(format!("table.{i}"), table_rows(q.table()));
                let ok = if *racks { rack_check(q.table()) } else { quandle_check(q.table()) };
                if !ok.passed() {
                    tally.record(|| Witness::indices(&[i], table_rows(q.table())));
                }
            }
            r.verdict(tally.finish());
        }
        SearchWhat::EnumerateMultiracks { order, ops } => {
            r = Report::new("search enumerate-multiracks");
            if *ops < 2 {
                return Err(CliError::Usage("--ops must be at least 2".into()));
            }
            let tables: Vec<CayleyTable> = enumerate_racks(*order, false)?.iter().map(|q| q.table().clone()).collect();
            let k = tables.len();
            let mut compatible = vec![vec![false; k]; k];
            for i in 0..k {
                for j in i + 1..k {
                    let fam = MultiOpFamily::new(vec![tables[i].clone(), tables[j].clone()], Flavor::Rack)?;
                    let ok = multi_check(&fam)?.passed();
                    compatible[i][j] = ok;
                    compatible[j][i] = ok;
                }
            }
            let mut families = Vec::new();
            extend_cliques(&compatible, &mut Vec::new(), 0, *ops, &mut families);
            r.field("order", order).field("ops", ops).field("rack_tables", k).field("count", families.len());
            for (i, fam) in families.iter().enumerate() {
                let desc: Vec<String> = fam.iter().map(|&t| format!("[{}]", table_rows(&tables[t]))).collect();
                r.field(format!("family.{i}"), desc.join(" "));
            }
        }
    }
    Ok(r)
}

/// All `size`-element sets of pairwise compatible indices, in lexicographic order.
fn extend_cliques(compat: &[Vec<bool>], current: &mut Vec<usize>, from: usize, size: usize, out: &mut Vec<Vec<usize>>) {
    if current.len() == size {
        out.push(current.clone());
        return;
    }
    for next in from..compat.len() {
        if current.iter().all(|&c| compat[c][next]) {
            current.push(next);
            extend_cliques(compat, current, next + 1, size, out);
            current.pop();
        }
    }
}

// bialgebra

#[derive(Debug, Clone, clap::Args)]
pub struct SpaceSource {
    /// Table file (nvalued, group or magma); uses the function space C(X).
    #[arg(long)]
    pub nv: Option<PathBuf>,
    /// Named group; uses the function space C(G).
    #[arg(long)]
    pub group: Option<String>,
    /// Structure-constant dump.
    #[arg(long)]
    pub space: Option<PathBuf>,
}

#[derive(Debug, Clone, clap::Subcommand)]
pub enum BialgebraWhat {
    /// Frobenius n-homomorphism check of the coproduct of C(X).
    Frobenius {
        #[command(flatten)]
        source: SpaceSource,
        #[arg(long)]
        n: usize,
    },
    /// Corack conditions (comp), (self-dist) and the n-homomorphism condition.
    Corack {
        #[command(flatten)]
        source: SpaceSource,
        #[arg(long)]
        n: usize,
    },
    /// Duality between k[X] and C(X).
    Pairing {
        #[arg(long, conflicts_with = "group")]
        nv: Option<PathBuf>,
        #[arg(long)]
        group: Option<String>,
    },
    /// Coproducts of the functions invariant under conjugation by a subgroup.
    InvariantCoproduct {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: String,
    },
}

/// `C(X)` from a table source, or a space read from a dump.
fn function_space_source(src: &SpaceSource, r: &mut Report) -> CliResult<StructureConstantSpace> {
    let (nv, group, space) = (src.nv.as_ref(), src.group.as_ref(), src.space.as_ref());
    if let Some(p) = space {
        if nv.is_some() || group.is_some() {
            return Err(CliError::Usage("give exactly one of --nv, --group, --space".into()));
        }
        r.field("input", p.display());
        return with_path(p, format::parse_space(&read(p)?));
    }
    let (t, _) = table_source(nv, group)?;
    if let Some(p) = nv {
        r.field("input", p.display());
    }
    if let Some(g) = group {
        r.field("group", g);
    }
    Ok(functions_space(&t).space)
}

/// `c` with `v = c * u`, if any.
fn multiple_of(v: &[Rational], u: &[Rational]) -> Option<Rational> {
    let i = u.iter().position(|x| !x.is_zero())?;
    let c = v[i].clone() / u[i].clone();
    v.iter().zip(u).all(|(a, b)| *a == c.clone() * b.clone()).then_some(c)
}

pub fn bialgebra(what: &BialgebraWhat, s: Settings) -> CliResult<Report> {
    let mut r;
    match what {
        BialgebraWhat::Frobenius { source, n } => {
            r = Report::new("bialgebra frobenius");
            let cx = function_space_source(source, &mut r)?;
            let f = comult_map(Arc::new(cx))?;
            r.field("n", n).field("seed", s.seed);
            if let (Some(u), Some(v)) = (f.domain().unit(), f.codomain().unit()) {
                let image = f.apply(u);
                let desc = multiple_of(&image, v).map_or("not a multiple of 1".to_string(), |c| format!("{c}*1"));
                r.field("f(1)", desc);
            }
            r.verdicts(&frobenius_check(&f, *n, s.seed)?);
        }
        BialgebraWhat::Corack { source, n } => {
            r = Report::new("bialgebra corack");
            let cx = function_space_source(source, &mut r)?;
            r.field("n", n);
            let c = corack_check(&cx, *n)?;
            match &c.unit_witness {
                Some((at, l, rr)) => {
                    r.field("unit_witness.index", indices(at)).field("unit_witness.lhs", l).field("unit_witness.rhs", rr);
                }
                None => {
                    r.field("unit_witness", "none");
                }
            }
            r.verdicts(&c.report);
        }
        BialgebraWhat::Pairing { nv, group } => {
            r = Report::new("bialgebra pairing");
            let (t, labels) = table_source(nv.as_ref(), group.as_ref())?;
            let ka = group_algebra(&t).space;
            let cx = functions_space(&t).space;
            let p = pairing_check(&ka, &cx)?;
            r.field("dim", t.size()).field("n", t.n()).field("checks", p.checks);
            r.verdicts(&p.report);
            r.labels = labels;
        }
        BialgebraWhat::InvariantCoproduct { group, subgroup } => {
            r = Report::new("bialgebra invariant-coproduct");
            let g = named_group(group)?;
            let b = parse_elements(&g, subgroup)?;
            let inv = invariant_functions(&g, &b)?;
            let labels = part_labels(&inv.orbits, &g);
            r.field("group", group).field("subgroup", subgroup).field("orbits", inv.dim());
            r.field("orbit_sizes", indices(&inv.orbits.sizes())).field("classes", labels.join(" "));
            r.field("invariant_dim", inv.dim());
            for (i, f) in inv.basis.iter().enumerate() {
                let d = invariant_coproduct(&g, &b, f)?;
                let coords: Vec<String> = d.coords.iter().map(ToString::to_string).collect();
                r.field(format!("chi_{i}.coords"), coords.join(" "));
                for mut v in d.report.verdicts {
                    v.axiom = format!("chi_{i}: {}", v.axiom);
                    r.verdict(v);
                }
            }
            r.labels = Some(g.labels().to_vec());
        }
    }
    Ok(r)
}

/// The report printed when a construction's precondition fails.
pub fn precondition_report(pre: &AxiomReport) -> Report {
    let mut r = Report::new("precondition");
    r.field("precondition", "failed");
    r.verdicts(pre);
    r
}
