//! `key = value` configuration with `[section]` headers.
//!
//! Every key has a default; a config file and then `--set section.key=value`
//! overrides are layered on top. Unknown sections or keys are errors.

use std::path::{Path, PathBuf};

use polariton_core::cavity::{self, CavityConfig, ResonanceSearch};
use polariton_core::MediumParams;

use crate::error::{CliError, Result};

const AUTO: &str = "auto";

const SCHEMA: &[(&str, &str, &str)] = &[
    ("medium", "omega_t", "1"),
    ("medium", "beta4pi", "0"),
    ("medium", "gamma", "1e-9"),
    ("cavity", "lambda", "7.822"),
    ("cavity", "length", "tuned"),
    ("sweep", "start", AUTO),
    ("sweep", "stop", AUTO),
    ("sweep", "count", AUTO),
    ("hopfield", "photon_freq", "1"),
    ("resonances", "max_count", "20"),
    ("resonances", "subintervals", "2000"),
    ("resonances", "stop_band_margin", "1e-3"),
    ("resonances", "tolerance", "1e-12"),
    ("figure2", "lambda", "7.822"),
    ("figure2", "kappa0", "0.01"),
    ("fluct", "branch", "lower"),
    ("greens", "zprime_over_length", "0.4"),
    ("greens", "step_over_length", "1e-5"),
    ("greens", "ode_samples", "5"),
    ("tolerances", "coefficients", "1e-12"),
    ("tolerances", "ode", "1e-4"),
    ("tolerances", "reciprocity", "1e-12"),
    ("output", "dir", "."),
    ("output", "svg", "false"),
];

#[derive(Debug, Clone)]
pub struct Config {
    values: Vec<String>,
}

fn slot(section: &str, key: &str) -> Option<usize> {
    SCHEMA
        .iter()
        .position(|(s, k, _)| *s == section && *k == key)
}

impl Default for Config {
    fn default() -> Self {
        Self {
            values: SCHEMA.iter().map(|(_, _, v)| v.to_string()).collect(),
        }
    }
}

impl Config {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let mut cfg = Self::default();
        cfg.merge_text(&text, &path.display().to_string())?;
        Ok(cfg)
    }

    pub fn merge_text(&mut self, text: &str, origin: &str) -> Result<()> {
        let mut section: Option<String> = None;
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split(['#', ';']).next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = || format!("{origin}:{}", no + 1);
            if let Some(name) = line.strip_prefix('[') {
                let name = name
                    .strip_suffix(']')
                    .ok_or_else(|| {
                        CliError::Config(format!("{}: unterminated section header", at()))
                    })?
                    .trim();
                if !SCHEMA.iter().any(|(s, _, _)| *s == name) {
                    return Err(CliError::Config(format!(
                        "{}: unknown section [{name}]",
                        at()
                    )));
                }
                section = Some(name.to_owned());
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("{}: expected key = value", at())))?;
            let section = section
                .as_deref()
                .ok_or_else(|| CliError::Config(format!("{}: key outside any [section]", at())))?;
            self.set(section, key.trim(), value.trim())
                .map_err(|e| CliError::Config(format!("{}: {e}", at())))?;
        }
        Ok(())
    }

    /// Applies a `section.key=value` override.
    pub fn apply_override(&mut self, spec: &str) -> Result<()> {
        let (path, value) = spec.split_once('=').ok_or_else(|| {
            CliError::Config(format!("override `{spec}` is not section.key=value"))
        })?;
        let (section, key) = path.trim().split_once('.').ok_or_else(|| {
            CliError::Config(format!("override `{spec}` is not section.key=value"))
        })?;
        self.set(section, key, value.trim())
    }

    fn set(&mut self, section: &str, key: &str, value: &str) -> Result<()> {
        let i = slot(section, key)
            .ok_or_else(|| CliError::Config(format!("unknown key {section}.{key}")))?;
        if value.is_empty() {
            return Err(CliError::Config(format!(
                "{section}.{key} has an empty value"
            )));
        }
        self.values[i] = value.to_owned();
        Ok(())
    }

    pub fn raw(&self, section: &str, key: &str) -> &str {
        let i = slot(section, key).unwrap_or_else(|| panic!("{section}.{key} missing from schema"));
        &self.values[i]
    }

    pub fn f64(&self, section: &str, key: &str) -> Result<f64> {
        let raw = self.raw(section, key);
        raw.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| {
                CliError::Config(format!("{section}.{key} = `{raw}` is not a finite number"))
            })
    }

    pub fn usize(&self, section: &str, key: &str) -> Result<usize> {
        let raw = self.raw(section, key);
        raw.parse::<usize>().map_err(|_| {
            CliError::Config(format!(
                "{section}.{key} = `{raw}` is not a non-negative integer"
            ))
        })
    }

    pub fn bool(&self, section: &str, key: &str) -> Result<bool> {
        match self.raw(section, key) {
            "true" | "yes" | "1" => Ok(true),
            "false" | "no" | "0" => Ok(false),
            raw => Err(CliError::Config(format!(
                "{section}.{key} = `{raw}` is not a boolean"
            ))),
        }
    }

    /// Fills `auto` sweep entries with the command's defaults.
    pub fn resolve_sweep(&mut self, default: SweepSpec) -> Result<SweepSpec> {
        for (key, value) in [
            ("start", default.start.to_string()),
            ("stop", default.stop.to_string()),
            ("count", default.count.to_string()),
        ] {
            if self.raw("sweep", key) == AUTO {
                self.set("sweep", key, &value)?;
            }
        }
        let spec = SweepSpec {
            start: self.f64("sweep", "start")?,
            stop: self.f64("sweep", "stop")?,
            count: self.usize("sweep", "count")?,
        };
        if spec.count < 2 {
            return Err(CliError::Config(format!(
                "sweep.count = {} must be >= 2",
                spec.count
            )));
        }
        if spec.start >= spec.stop {
            return Err(CliError::Config(format!(
                "sweep.start = {} must be < sweep.stop = {}",
                spec.start, spec.stop
            )));
        }
        Ok(spec)
    }

    pub fn medium(&self) -> Result<MediumParams> {
        Ok(MediumParams::with_gamma(
            self.f64("medium", "omega_t")?,
            self.f64("medium", "beta4pi")?,
            self.f64("medium", "gamma")?,
        )?)
    }

    pub fn cavity(&self) -> Result<CavityConfig> {
        let medium = self.medium()?;
        let lambda = self.f64("cavity", "lambda")?;
        let length = match self.raw("cavity", "length") {
            "tuned" => cavity::tuned_length(lambda, &medium)?,
            _ => self.f64("cavity", "length")?,
        };
        Ok(CavityConfig::new(length, lambda, medium)?)
    }

    pub fn search(&self) -> Result<ResonanceSearch> {
        Ok(ResonanceSearch {
            subintervals: self.usize("resonances", "subintervals")?,
            stop_band_margin: self.f64("resonances", "stop_band_margin")?,
            tolerance: self.f64("resonances", "tolerance")?,
        })
    }

    pub fn out_dir(&self) -> PathBuf {
        PathBuf::from(self.raw("output", "dir"))
    }

    /// The resolved configuration in file syntax, one line per entry.
    pub fn render(&self) -> Vec<String> {
        let mut lines = Vec::new();
        let mut current = "";
        for ((section, key, _), value) in SCHEMA.iter().zip(&self.values) {
            if *section != current {
                lines.push(format!("[{section}]"));
                current = section;
            }
            lines.push(format!("{key} = {value}"));
        }
        lines
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl SweepSpec {
    pub const fn new(start: f64, stop: f64, count: usize) -> Self {
        Self { start, stop, count }
    }

    pub fn points(&self) -> Vec<f64> {
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.stop
                } else {
                    self.start + step * i as f64
                }
            })
            .collect()
    }
}

/// Rewrites `--section.key value` and `--section.key=value` into
/// `--set section.key=value` so every config key doubles as a long flag.
pub fn expand_key_flags(args: impl IntoIterator<Item = String>) -> Vec<String> {
    let mut out = Vec::new();
    let mut it = args.into_iter().peekable();
    while let Some(arg) = it.next() {
        let dotted = arg.strip_prefix("--").filter(|rest| {
            rest.split('=')
                .next()
                .is_some_and(|name| name.contains('.'))
        });
        match dotted {
            Some(rest) if rest.contains('=') => {
                out.push("--set".into());
                out.push(rest.to_owned());
            }
            Some(rest) => {
                out.push("--set".into());
                match it.next() {
                    Some(value) => out.push(format!("{rest}={value}")),
                    None => out.push(rest.to_owned()),
                }
            }
            None => out.push(arg),
        }
    }
    out
}
