use std::fmt::Write as _;

use super::PhasePoint;
use crate::error::{Error, Result};

/// Uniform rectangular grid on `[-extent, extent]^(2 * modes)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseGrid {
    pub extent: f64,
    pub points: usize,
    pub modes: usize,
}

impl PhaseGrid {
    pub fn new(extent: f64, points: usize, modes: usize) -> Result<PhaseGrid> {
        if !(extent > 0.0 && extent.is_finite()) {
            return Err(Error::Config(format!("grid extent must be positive, got {extent}")));
        }
        if points < 8 {
            return Err(Error::Config(format!("grid needs at least 8 points per axis, got {points}")));
        }
        if !(1..=2).contains(&modes) {
            return Err(Error::Config(format!("grids support one or two modes, got {modes}")));
        }
        Ok(PhaseGrid { extent, points, modes })
    }

    pub fn axes(&self) -> usize {
        2 * self.modes
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.extent / (self.points - 1) as f64
    }

    pub fn coordinate(&self, index: usize) -> f64 {
        -self.extent + index as f64 * self.spacing()
    }

    pub fn len(&self) -> usize {
        self.points.pow(self.axes() as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Phase-space point of a flat row-major index (axis order `q1, p1, q2, p2`).
    pub fn point(&self, flat: usize) -> Vec<PhasePoint> {
        let idx = self.unflatten(flat);
        (0..self.modes)
            .map(|m| PhasePoint::new(self.coordinate(idx[2 * m]), self.coordinate(idx[2 * m + 1])))
            .collect()
    }

    fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.axes()];
        for slot in idx.iter_mut().rev() {
            *slot = flat % self.points;
            flat /= self.points;
        }
        idx
    }

    fn flatten(&self, idx: &[usize]) -> usize {
        idx.iter().fold(0, |acc, &i| acc * self.points + i)
    }

    /// Trapezoid weight of a flat index.
    pub fn weight(&self, flat: usize) -> f64 {
        let h = self.spacing();
        self.unflatten(flat)
            .iter()
            .map(|&i| if i == 0 || i + 1 == self.points { 0.5 * h } else { h })
            .product()
    }
}

/// Real samples of a phase-space function on a [`PhaseGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct GridSamples {
    pub grid: PhaseGrid,
    pub values: Vec<f64>,
}

impl GridSamples {
    pub fn sample<F: FnMut(&[PhasePoint]) -> f64>(grid: PhaseGrid, mut f: F) -> GridSamples {
        let values = (0..grid.len()).map(|i| f(&grid.point(i))).collect();
        GridSamples { grid, values }
    }

    pub fn new(grid: PhaseGrid, values: Vec<f64>) -> Result<GridSamples> {
        if values.len() != grid.len() {
            return Err(Error::Config(format!(
                "grid has {} nodes but {} values were supplied",
                grid.len(),
                values.len()
            )));
        }
        Ok(GridSamples { grid, values })
    }

    /// Multilinear interpolation; zero outside the grid box.
    pub fn interpolate(&self, x: &[PhasePoint]) -> f64 {
        let g = &self.grid;
        let axes = g.axes();
        let coords: Vec<f64> = x.iter().take(g.modes).flat_map(|pt| [pt.q, pt.p]).collect();
        let h = g.spacing();
        let mut base = vec![0usize; axes];
        let mut frac = vec![0.0; axes];
        for (a, &c) in coords.iter().enumerate() {
            let t = (c + g.extent) / h;
            if !(0.0..=(g.points - 1) as f64).contains(&t) {
                return 0.0;
            }
            let i = (t.floor() as usize).min(g.points - 2);
            base[a] = i;
            frac[a] = t - i as f64;
        }
        let mut total = 0.0;
        let mut idx = vec![0usize; axes];
        for corner in 0..(1usize << axes) {
            let mut weight = 1.0;
            for a in 0..axes {
                let up = (corner >> a) & 1 == 1;
                idx[a] = base[a] + usize::from(up);
                weight *= if up { frac[a] } else { 1.0 - frac[a] };
            }
            if weight != 0.0 {
                total += weight * self.values[g.flatten(&idx)];
            }
        }
        total
    }

    /// Trapezoid-rule integral over the grid box.
    pub fn integral(&self) -> f64 {
        self.values.iter().enumerate().map(|(i, v)| v * self.grid.weight(i)).sum()
    }

    /// Columnar text dump: one row per node, coordinates then value.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&csv_header(self.grid.modes));
        out.push('\n');
        for (i, v) in self.values.iter().enumerate() {
            for pt in self.grid.point(i) {
                let _ = write!(out, "{:.16e},{:.16e},", pt.q, pt.p);
            }
            let _ = writeln!(out, "{v:.16e}");
        }
        out
    }

    /// Parse the output of [`GridSamples::to_csv`]; the grid is recovered from
    /// the coordinate columns.
    pub fn from_csv(text: &str) -> Result<GridSamples> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Config("empty grid CSV".into()))?;
        let modes = match header.trim() {
            h if h == csv_header(1) => 1,
            h if h == csv_header(2) => 2,
            other => return Err(Error::Config(format!("unrecognised grid CSV header {other:?}"))),
        };
        let mut first = Vec::new();
        let mut values = Vec::new();
        let mut min_q = f64::INFINITY;
        for (n, line) in lines.enumerate() {
            let fields: Vec<f64> = line
                .split(',')
                .map(|f| f.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Config(format!("grid CSV row {}: {e}", n + 2)))?;
            if fields.len() != 2 * modes + 1 {
                return Err(Error::Config(format!("grid CSV row {} has {} fields", n + 2, fields.len())));
            }
            if first.is_empty() {
                first = fields[..2 * modes].to_vec();
            }
            min_q = min_q.min(fields[0]);
            values.push(fields[2 * modes]);
        }
        let axes = 2 * modes;
        let points = (values.len() as f64).powf(1.0 / axes as f64).round() as usize;
        let extent = -min_q;
        let grid = PhaseGrid::new(extent, points, modes)?;
        if first.iter().any(|c| (c + extent).abs() > 1e-9 * extent.max(1.0)) {
            return Err(Error::Config("grid CSV does not start at the lower corner".into()));
        }
        GridSamples::new(grid, values)
    }
}

fn csv_header(modes: usize) -> String {
    match modes {
        1 => "q,p,value".to_string(),
        _ => "q1,p1,q2,p2,value".to_string(),
    }
}
