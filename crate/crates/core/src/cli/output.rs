use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::bell::Figure1Row;
use crate::error::{Error, Result};

/// A float with 17 significant digits, enough to round-trip any `f64`.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

pub const FIG1_HEADER: &str = "m,R,lambda,bell_value,abs_bell_value,violated";
pub const FIG2_HEADER: &str = "m,integral";

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Figure2Row {
    pub m: usize,
    pub integral: f64,
}

pub fn figure1_csv(rows: &[Figure1Row]) -> String {
    let mut out = String::from(FIG1_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.m,
            fmt17(r.radius),
            fmt17(r.lambda),
            fmt17(r.bell_value),
            fmt17(r.abs_bell_value),
            r.violated
        ));
    }
    out
}

pub fn figure2_csv(rows: &[Figure2Row]) -> String {
    let mut out = String::from(FIG2_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!("{},{}\n", r.m, fmt17(r.integral)));
    }
    out
}

fn parse_field<T: std::str::FromStr>(field: Option<&str>, line: usize) -> Result<T> {
    field
        .and_then(|f| f.trim().parse().ok())
        .ok_or_else(|| Error::Config(format!("malformed CSV field on line {line}")))
}

fn data_lines<'a>(text: &'a str, header: &str) -> Result<impl Iterator<Item = (usize, &'a str)>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim() == header => {}
        _ => return Err(Error::Config(format!("expected CSV header `{header}`"))),
    }
    Ok(lines.filter(|(_, l)| !l.trim().is_empty()).map(|(i, l)| (i + 1, l)))
}

pub fn parse_figure1_csv(text: &str) -> Result<Vec<Figure1Row>> {
    data_lines(text, FIG1_HEADER)?
        .map(|(line, l)| {
            let mut f = l.split(',');
            Ok(Figure1Row {
                m: parse_field(f.next(), line)?,
                radius: parse_field(f.next(), line)?,
                lambda: parse_field(f.next(), line)?,
                bell_value: parse_field(f.next(), line)?,
                abs_bell_value: parse_field(f.next(), line)?,
                violated: parse_field(f.next(), line)?,
            })
        })
        .collect()
}

pub fn parse_figure2_csv(text: &str) -> Result<Vec<Figure2Row>> {
    data_lines(text, FIG2_HEADER)?
        .map(|(line, l)| {
            let mut f = l.split(',');
            Ok(Figure2Row { m: parse_field(f.next(), line)?, integral: parse_field(f.next(), line)? })
        })
        .collect()
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Error::Config(format!("JSON encoding failed: {e}")))?;
    text.push('\n');
    Ok(text)
}

pub fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(name);
    fs::write(&path, contents)?;
    Ok(path)
}
