use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use super::{Result, StirlingError};
use crate::comb::factorial_rat;
use crate::fps::{FpsError, Series};
use crate::scalar::{Rat, Ring, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    S1Assoc,
    S2Assoc,
    S1,
    S2,
    S1Lambda,
    S2Lambda,
    Lah,
    T1,
    T2,
    Other(String),
}

impl TriangleKind {
    pub fn as_str(&self) -> &str {
        match self {
            TriangleKind::S1Assoc => "S1assoc",
            TriangleKind::S2Assoc => "S2assoc",
            TriangleKind::S1 => "S1",
            TriangleKind::S2 => "S2",
            TriangleKind::S1Lambda => "S1lambda",
            TriangleKind::S2Lambda => "S2lambda",
            TriangleKind::Lah => "Lah",
            TriangleKind::T1 => "T1",
            TriangleKind::T2 => "T2",
            TriangleKind::Other(s) => s,
        }
    }

    pub fn parse(s: &str) -> TriangleKind {
        match s {
            "S1assoc" => TriangleKind::S1Assoc,
            "S2assoc" => TriangleKind::S2Assoc,
            "S1" => TriangleKind::S1,
            "S2" => TriangleKind::S2,
            "S1lambda" => TriangleKind::S1Lambda,
            "S2lambda" => TriangleKind::S2Lambda,
            "Lah" => TriangleKind::Lah,
            "T1" => TriangleKind::T1,
            "T2" => TriangleKind::T2,
            other => TriangleKind::Other(other.to_string()),
        }
    }
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Lower-triangular table with rows `0..=max_n`; row `n` holds `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    kind: TriangleKind,
    source: String,
    rows: Vec<Vec<Scalar>>,
}

/// Wire form used by the JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleJson {
    pub kind: String,
    pub f: String,
    pub ring: String,
    pub max_n: usize,
    pub rows: Vec<Vec<String>>,
}

impl Triangle {
    /// Builds from rows; row `n` must have exactly `n + 1` entries.
    pub fn from_rows(kind: TriangleKind, source: impl Into<String>, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(StirlingError::Malformed("no rows".into()));
        }
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(StirlingError::Malformed(format!("row {n} has {} entries", row.len())));
            }
        }
        Ok(Triangle { kind, source: source.into(), rows })
    }

    /// Fills entries from `entry(n, k)` for `0 ≤ k ≤ n ≤ max_n`.
    pub fn from_fn(
        kind: TriangleKind,
        source: impl Into<String>,
        max_n: usize,
        mut entry: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let rows = (0..=max_n).map(|n| (0..=n).map(|k| entry(n, k)).collect()).collect();
        Triangle { kind, source: source.into(), rows }
    }

    pub fn kind(&self) -> &TriangleKind {
        &self.kind
    }

    /// Label of the generating series (an expression, preset id or fingerprint).
    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn with_source(mut self, source: impl Into<String>) -> Self {
        self.source = source.into();
        self
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[Scalar] {
        &self.rows[n]
    }

    /// Entry `(n, k)`; zero above the diagonal. Panics when `n > max_n`.
    pub fn get(&self, n: usize, k: usize) -> Scalar {
        if k > n {
            Scalar::zero()
        } else {
            self.rows[n][k].clone()
        }
    }

    /// Overwrites one entry. Used for negative controls.
    pub fn set(&mut self, n: usize, k: usize, value: Scalar) {
        self.rows[n][k] = value;
    }

    pub fn ring(&self) -> Ring {
        self.rows.iter().flatten().map(Scalar::ring).max().unwrap_or(Ring::Q)
    }

    /// The first `max_n + 1` rows.
    pub fn truncate(&self, max_n: usize) -> Triangle {
        Triangle { kind: self.kind.clone(), source: self.source.clone(), rows: self.rows[..=max_n].to_vec() }
    }

    /// Entry-wise substitution `λ = value`.
    pub fn eval_lambda(&self, value: &Rat) -> Result<Triangle> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|c| c.eval_lambda(value).map(Scalar::Q)).collect())
            .collect::<std::result::Result<Vec<Vec<_>>, _>>()?;
        Ok(Triangle { kind: self.kind.clone(), source: self.source.clone(), rows })
    }

    /// First cell where two triangles of equal size differ.
    pub fn first_difference(&self, other: &Triangle) -> Option<(usize, usize)> {
        let n = self.max_n().min(other.max_n());
        (0..=n).flat_map(|n| (0..=n).map(move |k| (n, k))).find(|&(n, k)| self.rows[n][k] != other.rows[n][k])
    }

    pub fn to_wire(&self) -> TriangleJson {
        TriangleJson {
            kind: self.kind.to_string(),
            f: self.source.clone(),
            ring: self.ring().to_string(),
            max_n: self.max_n(),
            rows: self.rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("plain data serializes")
    }

    pub fn from_wire(w: &TriangleJson) -> Result<Triangle> {
        let rows = w
            .rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse::<Scalar>()).collect())
            .collect::<std::result::Result<Vec<Vec<_>>, _>>()?;
        let t = Triangle::from_rows(TriangleKind::parse(&w.kind), w.f.clone(), rows)?;
        if t.max_n() != w.max_n {
            return Err(StirlingError::Malformed(format!("max_n {} but {} rows", w.max_n, t.rows.len())));
        }
        Ok(t)
    }

    pub fn from_json(s: &str) -> Result<Triangle> {
        let w: TriangleJson = serde_json::from_str(s).map_err(|e| StirlingError::Malformed(e.to_string()))?;
        Triangle::from_wire(&w)
    }

    /// CSV with header `n,k,value`; cells containing `/` or `,` are quoted.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,value\n");
        for (n, row) in self.rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                let _ = writeln!(out, "{n},{k},{}", csv_cell(&v.to_string()));
            }
        }
        out
    }

    /// One line per row: `n: v_0, v_1, …, v_n`.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for (n, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{n}: {}", cells.join(", "));
        }
        out
    }
}

pub(crate) fn csv_cell(s: &str) -> String {
    if s.contains(['/', ',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Rows of `n!·[t^n] u^k/k!` for `0 ≤ k ≤ n ≤ max_n`, built one column at a
/// time: column `k` is column `k − 1` times `u`, divided by `k`.
pub fn power_triangle(u: &Series, max_n: usize) -> Result<Vec<Vec<Scalar>>> {
    if u.order() < max_n {
        return Err(StirlingError::InsufficientOrder { needed: max_n, available: u.order() });
    }
    if !u.constant_term().is_zero() {
        return Err(FpsError::BadConstantTerm("power triangle needs constant term 0").into());
    }
    let u = u.truncate(max_n);
    let mut rows: Vec<Vec<Scalar>> = (0..=max_n).map(|n| Vec::with_capacity(n + 1)).collect();
    let mut col = Series::one(max_n);
    for k in 0..=max_n {
        if k > 0 {
            col = col.mul(&u)?.scale_rat(&Rat::new(1, k as i64).unwrap());
        }
        for (n, row) in rows.iter_mut().enumerate().skip(k) {
            row.push(col.coeff(n).mul_rat(&factorial_rat(n)));
        }
    }
    // rows[n] received entries for k = 0..=n in order
    Ok(rows)
}
