//! Table and CSV renderings of engine results.

use percept_core::problem::{PrReport, TupleReport};
use percept_core::tsukamoto::{LinearConstraint, Optimum, TsukamotoSystem};
use percept_core::{Error, FiringLevel, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
}

/// Rows of cells rendered as aligned columns or CSV records.
struct Grid {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Grid {
    fn new(header: &[&str]) -> Self {
        Grid {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn table(&self) -> String {
        let cols = self.rows.iter().chain([&self.header]).map(Vec::len).max().unwrap_or(0);
        let mut widths = vec![0; cols];
        for row in self.rows.iter().chain([&self.header]) {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for row in [&self.header].into_iter().chain(&self.rows) {
            let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    fn csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        for row in [&self.header].into_iter().chain(&self.rows) {
            w.write_record(row).map_err(|e| Error::Io(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }
}

fn num(v: f64, decimals: usize) -> String {
    let s = format!("{v:.decimals$}");
    // no negative zero
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn firing(f: &FiringLevel) -> String {
    if f.is_scalar() {
        num(f.lo(), 2)
    } else {
        format!("[{}, {}]", num(f.lo(), 2), num(f.hi(), 2))
    }
}

fn firing_grid(names: &[&str], firings: &[Vec<String>]) -> Grid {
    let rules = firings.iter().map(Vec::len).max().unwrap_or(0);
    let header: Vec<String> = std::iter::once("alternative".to_string())
        .chain((1..=rules).map(|k| format!("f{k}")))
        .collect();
    let mut g = Grid {
        header,
        rows: Vec::new(),
    };
    for (n, f) in names.iter().zip(firings) {
        g.push(std::iter::once(n.to_string()).chain(f.iter().cloned()).collect());
    }
    g
}

fn sections(format: Format, parts: &[(&str, &Grid)], ranking: Option<&str>) -> Result<String> {
    let mut out = String::new();
    for (title, grid) in parts {
        match format {
            Format::Table => {
                out.push_str(&format!("{title}:\n"));
                out.push_str(&grid.table());
                out.push('\n');
            }
            Format::Csv => {
                if *title == "outputs" || *title == "optima" {
                    out.push_str(&grid.csv()?);
                }
            }
        }
    }
    if let Some(r) = ranking {
        match format {
            Format::Table => out.push_str(&format!("ranking: {r}\n")),
            Format::Csv => out.push_str(&format!("# ranking: {r}\n")),
        }
    }
    Ok(out)
}

pub fn pr_report(report: &PrReport, format: Format) -> Result<String> {
    let names: Vec<&str> = report.alternatives.iter().map(|a| a.name.as_str()).collect();
    let firings: Vec<Vec<String>> = report
        .alternatives
        .iter()
        .map(|a| a.outputs[0].firings.iter().map(firing).collect())
        .collect();
    let mut outputs = Grid::new(&[
        "alternative",
        "objective",
        "umf_a",
        "umf_b",
        "umf_c",
        "umf_d",
        "lmf_a",
        "lmf_b",
        "lmf_c",
        "lmf_d",
        "lmf_h",
        "c_l",
        "c_r",
        "mean",
        "word",
    ]);
    for alt in &report.alternatives {
        for o in &alt.outputs {
            let w = o.fou.to_word(&o.objective);
            let mut row = vec![alt.name.clone(), o.objective.clone()];
            row.extend(w.umf.vertices().iter().map(|&v| num(v, 2)));
            row.extend([w.lmf.a, w.lmf.b, w.lmf.c, w.lmf.d, w.lmf.h].iter().map(|&v| num(v, 2)));
            row.extend(
                [o.centroid.cl, o.centroid.cr, o.centroid.mean]
                    .iter()
                    .map(|&v| num(v, 2)),
            );
            row.push(o.decoded.word.clone());
            outputs.push(row);
        }
    }
    sections(
        format,
        &[("firing levels", &firing_grid(&names, &firings)), ("outputs", &outputs)],
        Some(&report.ranking),
    )
}

pub fn tuple_report(report: &TupleReport, objectives: &[String], format: Format) -> Result<String> {
    let names: Vec<&str> = report.alternatives.iter().map(|a| a.name.as_str()).collect();
    let firings: Vec<Vec<String>> = report
        .alternatives
        .iter()
        .map(|a| a.firings.iter().map(|&f| num(f, 0)).collect())
        .collect();
    let mut outputs = Grid::new(&["alternative", "objective", "beta", "tuple"]);
    for alt in &report.alternatives {
        for (t, name) in alt.tuples.iter().zip(objectives) {
            outputs.push(vec![alt.name.clone(), name.clone(), num(t.beta(), 2), t.to_string()]);
        }
    }
    sections(
        format,
        &[("firing levels", &firing_grid(&names, &firings)), ("outputs", &outputs)],
        Some(&report.ranking),
    )
}

pub fn tsukamoto_report(
    system: &TsukamotoSystem,
    constraint: LinearConstraint,
    resolution: usize,
    optimum: &Optimum,
    format: Format,
) -> Result<String> {
    let n = system.variables();
    let mut setup = Grid::new(&["system", "total", "lo", "hi", "resolution"]);
    setup.push(vec![
        system.name.clone(),
        num(constraint.total, 4),
        num(constraint.lo, 4),
        num(constraint.hi, 4),
        resolution.to_string(),
    ]);
    let header: Vec<String> = (1..=n)
        .map(|i| format!("y{i}"))
        .chain(
            system
                .objectives
                .iter()
                .map(|o| format!("{} ({})", o.name, o.direction)),
        )
        .collect();
    let mut optima = Grid {
        header,
        rows: Vec::new(),
    };
    for (p, v) in optimum.points.iter().zip(&optimum.values) {
        optima.push(p.iter().chain(v).map(|&x| num(x, 4)).collect());
    }
    sections(format, &[("constraint", &setup), ("optima", &optima)], None)
}
