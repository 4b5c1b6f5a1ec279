//! Precomputed Fast Leja node libraries.
//!
//! Text format: a header line `fastleja v1 lo=<lo> hi=<hi> n=<count>` followed by
//! one node per line, each written with 17 significant digits so that every
//! 64-bit value reads back exactly. A prefix of length `k` is the first `k`
//! node lines.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::nodes::{fast_leja, Family, Interval, NodeSequence};
use crate::report::decimal;

const MAGIC: &str = "fastleja";
const VERSION: &str = "v1";

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LibraryHeader {
    pub interval: Interval,
    pub count: usize,
}

impl LibraryHeader {
    pub fn to_line(&self) -> String {
        format!(
            "{MAGIC} {VERSION} lo={} hi={} n={}",
            self.interval.lo(),
            self.interval.hi(),
            self.count
        )
    }

    pub fn parse(line: &str) -> std::result::Result<Self, String> {
        let mut fields = line.split_whitespace();
        if fields.next() != Some(MAGIC) {
            return Err(format!("expected header starting with `{MAGIC}`"));
        }
        match fields.next() {
            Some(VERSION) => {}
            Some(other) => return Err(format!("unsupported library version `{other}`")),
            None => return Err("missing library version".into()),
        }
        let mut value = |key: &str| -> std::result::Result<&str, String> {
            let field = fields.next().ok_or_else(|| format!("missing `{key}=` field"))?;
            field
                .strip_prefix(key)
                .and_then(|rest| rest.strip_prefix('='))
                .ok_or_else(|| format!("expected `{key}=`, found `{field}`"))
        };
        let lo: f64 = parse_number(value("lo")?)?;
        let hi: f64 = parse_number(value("hi")?)?;
        let count: usize = value("n")?
            .parse()
            .map_err(|e| format!("bad node count: {e}"))?;
        if fields.next().is_some() {
            return Err("unexpected trailing fields in header".into());
        }
        let interval = Interval::new(lo, hi).map_err(|e| e.to_string())?;
        Ok(LibraryHeader { interval, count })
    }
}

fn parse_number(s: &str) -> std::result::Result<f64, String> {
    s.parse().map_err(|_| format!("`{s}` is not a decimal number"))
}

/// Writes `nodes` in library format.
pub fn write_library(path: &Path, nodes: &NodeSequence) -> Result<()> {
    let io_err = |e| Error::io(path, e);
    let mut out = BufWriter::new(File::create(path).map_err(io_err)?);
    let header = LibraryHeader {
        interval: nodes.interval(),
        count: nodes.len(),
    };
    writeln!(out, "{}", header.to_line()).map_err(io_err)?;
    for &x in nodes.values() {
        writeln!(out, "{}", decimal(x)).map_err(io_err)?;
    }
    out.flush().map_err(io_err)
}

/// Computes the first `count` Fast Leja points on `interval` and stores them at `path`.
pub fn precompute_library(interval: Interval, count: usize, path: &Path) -> Result<NodeSequence> {
    let nodes = fast_leja(interval, count)?;
    write_library(path, &nodes)?;
    Ok(nodes)
}

pub fn read_header(path: &Path) -> Result<LibraryHeader> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut lines = BufReader::new(file).lines();
    header_from(path, lines.next())
}

fn header_from(
    path: &Path,
    line: Option<std::io::Result<String>>,
) -> Result<LibraryHeader> {
    let line = line
        .ok_or_else(|| parse_error(path, 1, "empty library file"))?
        .map_err(|e| Error::io(path, e))?;
    LibraryHeader::parse(&line).map_err(|message| parse_error(path, 1, message))
}

fn parse_error(path: &Path, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        path: PathBuf::from(path),
        line,
        message: message.into(),
    }
}

/// Reads the first `n` stored nodes and maps them affinely onto `target`.
///
/// Nodes stored on `target` itself are returned exactly as written.
pub fn load_library(path: &Path, n: usize, target: Interval) -> Result<NodeSequence> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut lines = BufReader::new(file).lines();
    let header = header_from(path, lines.next())?;
    if n > header.count {
        return Err(Error::invalid(format!(
            "requested {n} nodes but {} stores only {}",
            path.display(),
            header.count
        )));
    }

    let mut values = Vec::with_capacity(n);
    for k in 0..n {
        let line_no = k + 2;
        let line = lines
            .next()
            .ok_or_else(|| {
                parse_error(
                    path,
                    line_no,
                    format!("header promises {} nodes, file ends after {k}", header.count),
                )
            })?
            .map_err(|e| Error::io(path, e))?;
        let x = parse_number(line.trim()).map_err(|m| parse_error(path, line_no, m))?;
        values.push(x);
    }
    let stored = NodeSequence::new(header.interval, Family::FastLeja, values)?;
    Ok(stored.map_to(target))
}
