//! Plain-text file formats.
//!
//! Every file starts with a header line naming its kind:
//!
//! ```text
//! group <size>              size rows of size indices, entry (i, j) = i*j
//! magma <size>              same layout
//! nvalued <size> <n>        size rows of size multisets such as [1,2],
//!                           optionally followed by `bar` and a second block
//! multi <size> <n> <flavor> n tables, separated by blank lines
//! braid <size>              size^2 lines `x y -> x' y'`, row-major in (x, y)
//! space <dim>               `mult` block of `i j k num/den`, optional `unit`
//!                           block of `i num/den`, optional `comult` block of
//!                           `k i j num/den`; omitted entries are zero
//! ```
//!
//! Lines starting with `#` are ignored.

use std::str::FromStr;

use crate::bialgebra::{RationalTensor, StructureConstantSpace};
use crate::braid::BraidMap;
use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::nvalued::{Flavor, NValuedTable};
use crate::scalar::Rational;
use crate::table::CayleyTable;

/// An n-valued table with an optional bar table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NvFile {
    pub product: NValuedTable,
    pub bar: Option<NValuedTable>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiFile {
    pub size: usize,
    pub flavor: Flavor,
    pub ops: Vec<CayleyTable>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Group(CayleyTable),
    Magma(CayleyTable),
    NValued(NvFile),
    Multi(MultiFile),
    Braid(BraidMap),
    Space(StructureConstantSpace),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Group(_) => "group",
            Document::Magma(_) => "magma",
            Document::NValued(_) => "nvalued",
            Document::Multi(_) => "multi",
            Document::Braid(_) => "braid",
            Document::Space(_) => "space",
        }
    }
}

fn parse_err(line: usize, column: usize, expected: impl Into<String>) -> Error {
    Error::Parse { line, column, expected: expected.into() }
}

/// Whitespace-separated tokens with 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter().map(|(s, t)| (line[..s].chars().count() + 1, t)).collect()
}

struct Cursor<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        let lines: Vec<(usize, &str)> = src
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.trim_start().starts_with('#'))
            .collect();
        let last_line = src.lines().count().max(1);
        Cursor { lines, pos: 0, last_line }
    }

    fn skip_blank(&mut self) {
        while self.pos < self.lines.len() && self.lines[self.pos].1.trim().is_empty() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<(usize, &'a str)> {
        self.skip_blank();
        self.lines.get(self.pos).copied()
    }

    fn next(&mut self, expected: &str) -> Result<(usize, Vec<(usize, &'a str)>)> {
        match self.peek() {
            Some((n, l)) => {
                self.pos += 1;
                Ok((n, tokens(l)))
            }
            None => Err(parse_err(self.last_line + 1, 1, expected)),
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some((n, l)) => Err(parse_err(n, tokens(l)[0].0, "end of file")),
        }
    }
}

fn number<T: FromStr>(line: usize, (col, tok): (usize, &str), what: &str) -> Result<T> {
    tok.parse().map_err(|_| parse_err(line, col, what))
}

fn index(line: usize, tok: (usize, &str), size: usize) -> Result<usize> {
    let v: usize = number(line, tok, &format!("an index below {size}"))?;
    if v >= size {
        return Err(parse_err(line, tok.0, format!("an index below {size}")));
    }
    Ok(v)
}

fn line_end(toks: &[(usize, &str)]) -> usize {
    toks.last().map(|(c, t)| c + t.chars().count()).unwrap_or(1)
}

fn expect_count(line: usize, toks: &[(usize, &str)], count: usize, what: &str) -> Result<()> {
    if toks.len() < count {
        return Err(parse_err(line, line_end(toks), format!("{count} {what}")));
    }
    if toks.len() > count {
        return Err(parse_err(line, toks[count].0, "end of line"));
    }
    Ok(())
}

type Token<'a> = (usize, &'a str);

/// Reads the header and returns its keyword and parameters.
fn header<'a>(cur: &mut Cursor<'a>) -> Result<(usize, Token<'a>, Vec<Token<'a>>)> {
    let (line, toks) = cur.next("a header line")?;
    Ok((line, toks[0], toks[1..].to_vec()))
}

fn header_of<'a>(cur: &mut Cursor<'a>, kind: &str, params: usize) -> Result<(usize, Vec<(usize, &'a str)>)> {
    let (line, key, rest) = header(cur)?;
    if key.1 != kind {
        return Err(Error::KindMismatch { expected: kind.to_string(), found: key.1.to_string() });
    }
    if rest.len() != params {
        let at = rest.get(params).map(|t| t.0).unwrap_or_else(|| line_end(&rest).max(key.0 + key.1.len()));
        return Err(parse_err(line, at, format!("{params} header parameters after `{kind}`")));
    }
    Ok((line, rest))
}

fn read_table(cur: &mut Cursor<'_>, size: usize) -> Result<CayleyTable> {
    let mut rows = Vec::with_capacity(size);
    for _ in 0..size {
        let (line, toks) = cur.next(&format!("a table row of {size} indices"))?;
        expect_count(line, &toks, size, "indices")?;
        rows.push(toks.iter().map(|&t| index(line, t, size)).collect::<Result<Vec<_>>>()?);
    }
    CayleyTable::from_rows(rows)
}

fn parse_square(src: &str, kind: &str) -> Result<CayleyTable> {
    let mut cur = Cursor::new(src);
    let (line, params) = header_of(&mut cur, kind, 1)?;
    let size: usize = number(line, params[0], "a size")?;
    let t = read_table(&mut cur, size)?;
    cur.expect_end()?;
    Ok(t)
}

pub fn parse_group(src: &str) -> Result<CayleyTable> {
    parse_square(src, "group")
}

pub fn parse_magma(src: &str) -> Result<CayleyTable> {
    parse_square(src, "magma")
}

fn read_nv_block(cur: &mut Cursor<'_>, size: usize, n: usize) -> Result<NValuedTable> {
    let mut cells = Vec::with_capacity(size * size);
    for _ in 0..size {
        let (line, toks) = cur.next(&format!("a row of {size} multisets"))?;
        expect_count(line, &toks, size, "multisets")?;
        for &(col, tok) in &toks {
            let what = format!("a multiset of {n} indices below {size}");
            let m: Multiset = tok.parse().map_err(|_| parse_err(line, col, what.as_str()))?;
            if m.total() != n || m.max_element().is_some_and(|x| x >= size) {
                return Err(parse_err(line, col, what));
            }
            cells.push(m);
        }
    }
    NValuedTable::new(size, n, cells)
}

pub fn parse_nvalued(src: &str) -> Result<NvFile> {
    let mut cur = Cursor::new(src);
    let (line, params) = header_of(&mut cur, "nvalued", 2)?;
    let size: usize = number(line, params[0], "a size")?;
    let n: usize = number(line, params[1], "a positive n")?;
    if n == 0 {
        return Err(parse_err(line, params[1].0, "a positive n"));
    }
    let product = read_nv_block(&mut cur, size, n)?;
    let bar = match cur.peek() {
        None => None,
        Some((line, l)) => {
            let toks = tokens(l);
            if toks.len() != 1 || toks[0].1 != "bar" {
                return Err(parse_err(line, toks[0].0, "`bar` or end of file"));
            }
            cur.pos += 1;
            Some(read_nv_block(&mut cur, size, n)?)
        }
    };
    cur.expect_end()?;
    Ok(NvFile { product, bar })
}

pub fn parse_multi(src: &str) -> Result<MultiFile> {
    let mut cur = Cursor::new(src);
    let (line, params) = header_of(&mut cur, "multi", 3)?;
    let size: usize = number(line, params[0], "a size")?;
    let n: usize = number(line, params[1], "a number of operations")?;
    let flavor: Flavor = number(line, params[2], "one of group, rack, quandle")?;
    let mut ops = Vec::with_capacity(n);
    for _ in 0..n {
        // an optional `magma <size>` line may introduce each table
        if let Some((line, l)) = cur.peek() {
            let toks = tokens(l);
            if toks[0].1 == "magma" {
                expect_count(line, &toks, 2, "tokens `magma <size>`")?;
                if number::<usize>(line, toks[1], "a size")? != size {
                    return Err(parse_err(line, toks[1].0, format!("size {size}")));
                }
                cur.pos += 1;
            }
        }
        ops.push(read_table(&mut cur, size)?);
    }
    cur.expect_end()?;
    Ok(MultiFile { size, flavor, ops })
}

pub fn parse_braid(src: &str) -> Result<BraidMap> {
    let mut cur = Cursor::new(src);
    let (line, params) = header_of(&mut cur, "braid", 1)?;
    let size: usize = number(line, params[0], "a size")?;
    let mut images = Vec::with_capacity(size * size);
    for x in 0..size {
        for y in 0..size {
            let (line, toks) = cur.next(&format!("the line `{x} {y} -> x' y'`"))?;
            expect_count(line, &toks, 5, "tokens `x y -> x' y'`")?;
            if index(line, toks[0], size)? != x {
                return Err(parse_err(line, toks[0].0, format!("{x} (row-major order)")));
            }
            if index(line, toks[1], size)? != y {
                return Err(parse_err(line, toks[1].0, format!("{y} (row-major order)")));
            }
            if toks[2].1 != "->" {
                return Err(parse_err(line, toks[2].0, "`->`"));
            }
            images.push((index(line, toks[3], size)?, index(line, toks[4], size)?));
        }
    }
    cur.expect_end()?;
    BraidMap::from_images(size, images)
}

pub fn parse_space(src: &str) -> Result<StructureConstantSpace> {
    let mut cur = Cursor::new(src);
    let (line, params) = header_of(&mut cur, "space", 1)?;
    let dim: usize = number(line, params[0], "a dimension")?;
    let mut mult: Option<RationalTensor> = None;
    let mut unit: Option<Vec<Rational>> = None;
    let mut comult: Option<RationalTensor> = None;
    while let Some((line, l)) = cur.peek() {
        let toks = tokens(l);
        let key = toks[0];
        let width = match key.1 {
            "mult" if mult.is_none() => 3,
            "unit" if unit.is_none() => 1,
            "comult" if comult.is_none() => 3,
            _ => return Err(parse_err(line, key.0, "a `mult`, `unit` or `comult` block")),
        };
        expect_count(line, &toks, 1, "block name")?;
        cur.pos += 1;
        let mut tensor = RationalTensor::zeros(&vec![dim; width]);
        while let Some((line, l)) = cur.peek() {
            let toks = tokens(l);
            if toks[0].1.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) {
                break;
            }
            cur.pos += 1;
            expect_count(line, &toks, width + 1, "fields")?;
            let idx = toks[..width].iter().map(|&t| index(line, t, dim)).collect::<Result<Vec<_>>>()?;
            let value: Rational = number(line, toks[width], "a rational `num/den`")?;
            tensor.set(&idx, value);
        }
        match key.1 {
            "mult" => mult = Some(tensor),
            "unit" => unit = Some(tensor.entries().to_vec()),
            _ => comult = Some(tensor),
        }
    }
    let mult = mult.ok_or_else(|| parse_err(cur.last_line + 1, 1, "a `mult` block"))?;
    StructureConstantSpace::new(dim, mult, unit, comult)
}

pub fn parse_document(src: &str) -> Result<Document> {
    let mut cur = Cursor::new(src);
    let (line, key, _) = header(&mut cur)?;
    match key.1 {
        "group" => parse_group(src).map(Document::Group),
        "magma" => parse_magma(src).map(Document::Magma),
        "nvalued" => parse_nvalued(src).map(Document::NValued),
        "multi" => parse_multi(src).map(Document::Multi),
        "braid" => parse_braid(src).map(Document::Braid),
        "space" => parse_space(src).map(Document::Space),
        _ => Err(parse_err(line, key.0, "one of group, magma, nvalued, multi, braid, space")),
    }
}

pub fn print_group(t: &CayleyTable) -> String {
    format!("group {}\n{t}", t.size())
}

pub fn print_magma(t: &CayleyTable) -> String {
    format!("magma {}\n{t}", t.size())
}

fn nv_block(t: &NValuedTable) -> String {
    let mut out = String::new();
    for row in t.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn print_nvalued(t: &NValuedTable, bar: Option<&NValuedTable>) -> String {
    let mut out = format!("nvalued {} {}\n{}", t.size(), t.n(), nv_block(t));
    if let Some(b) = bar {
        out.push_str("bar\n");
        out.push_str(&nv_block(b));
    }
    out
}

pub fn print_multi(m: &MultiFile) -> String {
    let tables: Vec<String> = m.ops.iter().map(ToString::to_string).collect();
    format!("multi {} {} {}\n{}", m.size, m.ops.len(), m.flavor, tables.join("\n"))
}

/// Panics on a window map, which has no file form.
pub fn print_braid(r: &BraidMap) -> String {
    let size = r.size().expect("only finite braid maps have a file form");
    let mut out = format!("braid {size}\n");
    for x in 0..size {
        for y in 0..size {
            let (u, v) = r.apply(x, y);
            out.push_str(&format!("{x} {y} -> {u} {v}\n"));
        }
    }
    out
}

fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn print_space(s: &StructureConstantSpace) -> String {
    let mut out = format!("space {}\nmult\n", s.dim());
    for (idx, c) in s.mult().nonzero() {
        out.push_str(&format!("{} {} {} {}\n", idx[0], idx[1], idx[2], fraction(&c)));
    }
    if let Some(u) = s.unit() {
        out.push_str("unit\n");
        for (i, c) in u.iter().enumerate().filter(|(_, c)| !num_traits::Zero::is_zero(*c)) {
            out.push_str(&format!("{i} {}\n", fraction(c)));
        }
    }
    if let Some(c) = s.comult() {
        out.push_str("comult\n");
        for (idx, v) in c.nonzero() {
            out.push_str(&format!("{} {} {} {}\n", idx[0], idx[1], idx[2], fraction(&v)));
        }
    }
    out
}

pub fn print_document(d: &Document) -> String {
    match d {
        Document::Group(t) => print_group(t),
        Document::Magma(t) => print_magma(t),
        Document::NValued(f) => print_nvalued(&f.product, f.bar.as_ref()),
        Document::Multi(m) => print_multi(m),
        Document::Braid(r) => print_braid(r),
        Document::Space(s) => print_space(s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::{functions_space, group_algebra};
    use crate::scalar::rat;
    use proptest::prelude::*;

    const COSET_Q: &str = "nvalued 4 2
[0,0] [0,0] [0,0] [0,0]
[1,1] [1,1] [2,2] [2,2]
[2,2] [2,2] [1,2] [1,2]
[3,3] [3,3] [3,3] [3,3]
";

    #[test]
    fn parses_coset_q() {
        let f = parse_nvalued(COSET_Q).unwrap();
        assert_eq!(f.product.get(2, 3), &Multiset::from_list([1, 2]));
        assert!(f.bar.is_none());
        assert_eq!(print_nvalued(&f.product, None), COSET_Q);
    }

    #[test]
    fn error_positions() {
        let e = parse_group("group 2\n0 1\n1 7\n").unwrap_err();
        assert_eq!(e, Error::Parse { line: 3, column: 3, expected: "an index below 2".into() });
        let e = parse_group("group 2\n0 1\n1\n").unwrap_err();
        assert_eq!(e, Error::Parse { line: 3, column: 2, expected: "2 indices".into() });
        let e = parse_group("group 2\n0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, column: 1, .. }));
        let e = parse_group("magma 2\n0 1\n1 0\n").unwrap_err();
        assert_eq!(e, Error::KindMismatch { expected: "group".into(), found: "magma".into() });
        let e = parse_nvalued("nvalued 2 2\n[0,1] [1]\n[0,0] [1,1]\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 7, .. }));
        let e = parse_braid("braid 1\n0 0 => 0 0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 5, .. }));
        let e = parse_document("ring 3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, column: 1, .. }));
        let e = parse_group("group 1\n0\n0\n").unwrap_err();
        assert_eq!(e, Error::Parse { line: 3, column: 1, expected: "end of file".into() });
    }

    #[test]
    fn multi_with_optional_headers() {
        let src = "multi 2 2 group\nmagma 2\n0 1\n1 0\n\n0 1\n1 0\n";
        let m = parse_multi(src).unwrap();
        assert_eq!(m.ops.len(), 2);
        assert_eq!(m.ops[0], m.ops[1]);
        assert_eq!(parse_multi(&print_multi(&m)).unwrap(), m);
    }

    #[test]
    fn comments_skipped() {
        let t = parse_magma("# R3\nmagma 3\n0 2 1\n# middle\n2 1 0\n1 0 2\n").unwrap();
        assert_eq!(t.get(0, 1), 2);
    }

    #[test]
    fn space_round_trip() {
        let t = parse_nvalued(COSET_Q).unwrap().product;
        for s in [functions_space(&t).space, group_algebra(&t).space] {
            let printed = print_space(&s);
            let back = parse_space(&printed).unwrap();
            assert_eq!(back.mult(), s.mult());
            assert_eq!(back.unit(), s.unit());
            assert_eq!(back.comult(), s.comult());
            assert_eq!(print_space(&back), printed);
        }
        let s = parse_space("space 1\nmult\n0 0 0 3/6\n").unwrap();
        assert_eq!(s.mult().get(&[0, 0, 0]), &rat(1, 2));
    }

    fn table(size: usize) -> impl Strategy<Value = CayleyTable> {
        proptest::collection::vec(0..size, size * size).prop_map(move |d| {
            CayleyTable::from_rows(d.chunks(size).map(<[usize]>::to_vec).collect()).unwrap()
        })
    }

    fn nv_file() -> impl Strategy<Value = NvFile> {
        (1usize..=4, 1usize..=3, any::<bool>()).prop_flat_map(|(size, n, with_bar)| {
            let block = proptest::collection::vec(proptest::collection::vec(0..size, n), size * size)
                .prop_map(move |cells| {
                    NValuedTable::new(size, n, cells.into_iter().map(Multiset::from_list).collect()).unwrap()
                });
            (block.clone(), block).prop_map(move |(p, b)| NvFile { product: p, bar: with_bar.then_some(b) })
        })
    }

    proptest! {
        #[test]
        fn group_and_magma_round_trip(t in (1usize..=6).prop_flat_map(table)) {
            prop_assert_eq!(parse_group(&print_group(&t)).unwrap(), t.clone());
            prop_assert_eq!(parse_magma(&print_magma(&t)).unwrap(), t);
        }

        #[test]
        fn nvalued_round_trip(f in nv_file()) {
            let printed = print_nvalued(&f.product, f.bar.as_ref());
            prop_assert_eq!(parse_nvalued(&printed).unwrap(), f);
        }

        #[test]
        fn braid_round_trip(size in 1usize..=4, seed in any::<u64>()) {
            let r = BraidMap::from_fn(size, |x, y| {
                let h = seed.wrapping_mul(31).wrapping_add((x * 7 + y) as u64).wrapping_mul(0x9e37_79b9);
                ((h % size as u64) as usize, ((h >> 17) % size as u64) as usize)
            });
            prop_assert_eq!(parse_braid(&print_braid(&r)).unwrap(), r);
        }

        #[test]
        fn multi_round_trip(
            (size, ops) in (1usize..=4).prop_flat_map(|s| (Just(s), proptest::collection::vec(table(s), 1..4))),
            flavor in prop_oneof![Just(Flavor::Group), Just(Flavor::Rack), Just(Flavor::Quandle)],
        ) {
            let m = MultiFile { size, flavor, ops };
            prop_assert_eq!(parse_multi(&print_multi(&m)).unwrap(), m);
        }
    }
}
