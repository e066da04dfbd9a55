//! Columnar sweep results.

use crate::error::{PolaritonError, Result};

/// Named real-valued columns of equal length; the first column is the sweep axis.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    names: Vec<String>,
    columns: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trend {
    Increasing,
    Decreasing,
    Mixed,
}

impl Trend {
    pub fn label(self) -> &'static str {
        match self {
            Trend::Increasing => "increasing",
            Trend::Decreasing => "decreasing",
            Trend::Mixed => "mixed",
        }
    }
}

/// Strict monotonicity of a series; fewer than two points count as `Mixed`.
pub fn monotonic_trend(values: &[f64]) -> Trend {
    if values.len() < 2 {
        return Trend::Mixed;
    }
    let pairs = || values.windows(2);
    if pairs().all(|w| w[1] > w[0]) {
        Trend::Increasing
    } else if pairs().all(|w| w[1] < w[0]) {
        Trend::Decreasing
    } else {
        Trend::Mixed
    }
}

impl SweepTable {
    /// Table with only the sweep axis, which must be finite and strictly increasing.
    pub fn new(axis: &str, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(PolaritonError::InvalidColumn {
                name: axis.into(),
                reason: "empty sweep axis",
            });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(PolaritonError::InvalidColumn {
                name: axis.into(),
                reason: "non-finite value",
            });
        }
        if monotonic_trend(&values) != Trend::Increasing && values.len() > 1 {
            return Err(PolaritonError::InvalidColumn {
                name: axis.into(),
                reason: "sweep axis must be strictly increasing",
            });
        }
        Ok(Self {
            names: vec![axis.to_owned()],
            columns: vec![values],
        })
    }

    pub fn with_column(mut self, name: &str, values: Vec<f64>) -> Result<Self> {
        self.push_column(name, values)?;
        Ok(self)
    }

    pub fn push_column(&mut self, name: &str, values: Vec<f64>) -> Result<()> {
        if self.names.iter().any(|n| n == name) {
            return Err(PolaritonError::InvalidColumn {
                name: name.into(),
                reason: "duplicate column",
            });
        }
        if values.len() != self.len() {
            return Err(PolaritonError::ColumnLength {
                name: name.into(),
                got: values.len(),
                expected: self.len(),
            });
        }
        self.names.push(name.to_owned());
        self.columns.push(values);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.columns[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn axis(&self) -> &[f64] {
        &self.columns[0]
    }

    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| self.columns[i].as_slice())
    }

    pub fn columns(&self) -> impl Iterator<Item = (&str, &[f64])> {
        self.names
            .iter()
            .map(String::as_str)
            .zip(self.columns.iter().map(Vec::as_slice))
    }

    pub fn row(&self, i: usize) -> Vec<f64> {
        self.columns.iter().map(|c| c[i]).collect()
    }

    /// Fails unless every value of every named column is finite and positive.
    pub fn check_positive(&self, names: &[&str]) -> Result<()> {
        for &name in names {
            let col = self
                .column(name)
                .ok_or_else(|| PolaritonError::InvalidColumn {
                    name: name.into(),
                    reason: "no such column",
                })?;
            if col.iter().any(|v| !(v.is_finite() && *v > 0.0)) {
                return Err(PolaritonError::InvalidColumn {
                    name: name.into(),
                    reason: "non-positive rate",
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_and_looks_up() {
        let t = SweepTable::new("x", vec![0.1, 0.2, 0.3])
            .unwrap()
            .with_column("y", vec![3.0, 2.0, 1.0])
            .unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.names(), ["x", "y"]);
        assert_eq!(t.column("y").unwrap(), [3.0, 2.0, 1.0]);
        assert_eq!(t.row(1), vec![0.2, 2.0]);
        assert!(t.column("z").is_none());
    }

    #[test]
    fn rejects_bad_columns() {
        assert!(SweepTable::new("x", vec![0.2, 0.1]).is_err());
        assert!(SweepTable::new("x", vec![0.2, 0.2]).is_err());
        assert!(SweepTable::new("x", vec![]).is_err());
        assert!(SweepTable::new("x", vec![f64::NAN]).is_err());
        let t = SweepTable::new("x", vec![0.1, 0.2]).unwrap();
        assert!(matches!(
            t.clone().with_column("y", vec![1.0]),
            Err(PolaritonError::ColumnLength {
                got: 1,
                expected: 2,
                ..
            })
        ));
        assert!(t.with_column("x", vec![1.0, 2.0]).is_err());
    }

    #[test]
    fn positivity_check() {
        let t = SweepTable::new("x", vec![0.1, 0.2])
            .unwrap()
            .with_column("k", vec![1e-3, 0.0])
            .unwrap();
        assert!(t.check_positive(&["x"]).is_ok());
        assert!(t.check_positive(&["k"]).is_err());
        assert!(t.check_positive(&["missing"]).is_err());
    }

    #[test]
    fn trends() {
        assert_eq!(monotonic_trend(&[1.0, 2.0, 3.0]), Trend::Increasing);
        assert_eq!(monotonic_trend(&[3.0, 2.0, 1.0]), Trend::Decreasing);
        assert_eq!(monotonic_trend(&[1.0, 1.0]), Trend::Mixed);
        assert_eq!(monotonic_trend(&[1.0]), Trend::Mixed);
    }
}
