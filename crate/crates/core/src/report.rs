//! CSV output for convergence studies and gnuplot scripts that plot them.

use std::collections::BTreeSet;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::testbed::{ErrorRecord, TestFunction};

pub const CSV_HEADER: &str = "function,family,n,l1,l2,linf,residual,wall_time_s";

/// Decimal literal with 17 significant digits; non-finite values print as
/// `inf`, `-inf` and `nan`.
pub fn decimal(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{x:.16e}")
    }
}

/// Records in emission order: by function name, family name, then node count.
pub fn sorted_records(records: &[ErrorRecord]) -> Vec<ErrorRecord> {
    let mut sorted = records.to_vec();
    sorted.sort_by(|a, b| {
        (a.function.name(), a.family.name(), a.n).cmp(&(b.function.name(), b.family.name(), b.n))
    });
    sorted
}

pub fn write_csv<W: Write>(records: &[ErrorRecord], out: &mut W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in sorted_records(records) {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.function,
            r.family,
            r.n,
            decimal(r.l1),
            decimal(r.l2),
            decimal(r.linf),
            decimal(r.residual),
            decimal(r.wall_time)
        )?;
    }
    Ok(())
}

pub fn emit_csv(records: &[ErrorRecord], path: &Path) -> Result<()> {
    let io_err = |e| Error::io(path, e);
    let mut out = BufWriter::new(File::create(path).map_err(io_err)?);
    write_csv(records, &mut out).map_err(io_err)?;
    out.flush().map_err(io_err)
}

/// Panel order of the 2x2 figures: top left, top right, bottom left, bottom right.
pub const PANEL_ORDER: [TestFunction; 4] = [
    TestFunction::Runge,
    TestFunction::SqrtAbs,
    TestFunction::Heaviside,
    TestFunction::Sawtooth,
];

/// (CSV column, label) for each figure.
const FIGURES: [(usize, &str); 3] = [(6, "linf"), (5, "l2"), (4, "l1")];

/// Writes a gnuplot script rendering one 2x2 figure per norm from `csv`: error
/// against node count on log-log axes, one curve per node family.
///
/// Images are written next to the script as `<stem>-linf.png`, `<stem>-l2.png`
/// and `<stem>-l1.png`.
pub fn emit_plot_script(csv: &Path, out: &Path) -> Result<()> {
    let text = fs::read_to_string(csv).map_err(|e| Error::io(csv, e))?;
    let mut functions = BTreeSet::new();
    let mut families = BTreeSet::new();
    for (i, line) in text.lines().enumerate().skip(1) {
        let mut cols = line.split(',');
        let (Some(function), Some(family)) = (cols.next(), cols.next()) else {
            return Err(Error::Parse {
                path: csv.to_path_buf(),
                line: i + 1,
                message: "expected at least two columns".into(),
            });
        };
        functions.insert(function.to_string());
        families.insert(family.to_string());
    }

    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "convergence".into());
    let dir = out.parent().filter(|p| !p.as_os_str().is_empty());
    let image = |label: &str| {
        let name = format!("{stem}-{label}.png");
        match dir {
            Some(d) => d.join(name).display().to_string(),
            None => name,
        }
    };

    let mut s = String::new();
    s.push_str("# Convergence plots: error vs. number of nodes.\n");
    s.push_str("set datafile separator \",\"\n");
    s.push_str("set terminal pngcairo size 1200,900\n");
    s.push_str("set logscale xy\n");
    s.push_str("set format y \"10^{%L}\"\n");
    s.push_str("set xlabel \"n\"\n");
    s.push_str("set key bottom left\n");
    s.push_str(&format!("csv = {}\n", quote(&csv.display().to_string())));
    for (column, label) in FIGURES {
        s.push_str(&format!("\nset output {}\n", quote(&image(label))));
        s.push_str(&format!(
            "set multiplot layout 2,2 title \"{label} error\"\n"
        ));
        s.push_str(&format!("set ylabel \"{label}\"\n"));
        for function in PANEL_ORDER {
            if !functions.contains(function.name()) {
                s.push_str("set multiplot next\n");
                continue;
            }
            s.push_str(&format!("set title \"{function}\"\n"));
            let curves: Vec<String> = families
                .iter()
                .map(|family| {
                    format!(
                        "csv every ::1 using 3:((strcol(1) eq \"{function}\" && strcol(2) eq \"{family}\") ? ${column} : 1/0) with linespoints title \"{family}\""
                    )
                })
                .collect();
            s.push_str(&format!("plot {}\n", curves.join(", \\\n     ")));
        }
        s.push_str("unset multiplot\n");
    }
    fs::write(out, s).map_err(|e| Error::io(out, e))
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
