//! Sweep grids and the tables the command-line tool writes.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Log,
}

/// An ordered set of abscissae.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl Grid {
    pub fn new(min: f64, max: f64, points: usize, spacing: Spacing) -> Result<Self> {
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(Error::InvalidInput(format!("grid needs min < max, got [{min}, {max}]")));
        }
        if points < 2 {
            return Err(Error::InvalidInput(format!("grid needs at least 2 points, got {points}")));
        }
        if spacing == Spacing::Log && min <= 0.0 {
            return Err(Error::InvalidInput(format!("log grid needs min > 0, got {min}")));
        }
        Ok(Self {
            min,
            max,
            points,
            spacing,
        })
    }

    /// The abscissae, with both endpoints reproduced exactly.
    ///
    /// ```
    /// use atomwall::table::{Grid, Spacing};
    /// let g = Grid::new(1e-2, 1e2, 5, Spacing::Log).unwrap();
    /// let v = g.values();
    /// assert_eq!(v[0], 1e-2);
    /// assert_eq!(v[4], 1e2);
    /// assert!((v[2] - 1.0).abs() < 1e-15);
    /// ```
    pub fn values(&self) -> Vec<f64> {
        let n = self.points - 1;
        (0..=n)
            .map(|i| {
                if i == 0 {
                    return self.min;
                }
                if i == n {
                    return self.max;
                }
                let t = i as f64 / n as f64;
                match self.spacing {
                    Spacing::Linear => self.min + t * (self.max - self.min),
                    Spacing::Log => (self.min.ln() + t * (self.max.ln() - self.min.ln())).exp(),
                }
            })
            .collect()
    }
}

/// Rows of numbers under named columns, with free-text comment lines.
///
/// The first column is the sweep variable and is strictly increasing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub command: String,
    pub comments: Vec<String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl SweepTable {
    pub fn new(command: &str, comments: Vec<String>, columns: Vec<String>, rows: Vec<Vec<f64>>) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::InvalidInput("table needs at least one column".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != columns.len() {
                return Err(Error::InvalidInput(format!(
                    "row {i} has {} values for {} columns",
                    row.len(),
                    columns.len()
                )));
            }
        }
        for pair in rows.windows(2) {
            if !(pair[1][0] > pair[0][0]) {
                return Err(Error::InvalidInput(format!(
                    "sweep variable must be strictly increasing, got {} then {}",
                    pair[0][0], pair[1][0]
                )));
            }
        }
        Ok(Self {
            command: command.to_string(),
            comments,
            columns,
            rows,
        })
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let j = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[j]).collect())
    }

    /// `#` comment lines, a header row, then one line per row with every
    /// value in `{:.16e}` form (17 significant digits, round-trip exact).
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            let _ = writeln!(out, "# {c}");
        }
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("tables contain only strings and numbers");
        s.push('\n');
        s
    }
}
