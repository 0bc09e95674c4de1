//! Flat key-value configuration files describing a walk.
//!
//! One `key = value` pair per line; blank lines and lines starting with `#`
//! are ignored. The full key list (all required except `label`):
//!
//! ```text
//! label = <free text>
//! boundary_coin.{a,b,c,d}.{re,im} = <float>
//! bulk_coin.{a,b,c,d}.{re,im}     = <float>
//! initial.{alpha,beta}.{re,im}    = <float>
//! ```
//!
//! Floats are written with 17 significant digits so emit → parse round
//! trips reproduce the original bits.

use std::collections::BTreeMap;
use std::fmt;

use halfline_qw::{Coin64, WalkSpec64};
use num_complex::Complex64;

/// A parse or validation failure with its location.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError {
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for ConfigError {}

/// Deserialized walk description: two coins and the initial coin state.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub label: Option<String>,
    pub boundary_coin: [Complex64; 4],
    pub bulk_coin: [Complex64; 4],
    pub alpha: Complex64,
    pub beta: Complex64,
}

const COIN_KEYS: [&str; 4] = ["a", "b", "c", "d"];

fn numeric_keys() -> Vec<String> {
    let mut keys = Vec::new();
    for group in ["boundary_coin", "bulk_coin"] {
        for entry in COIN_KEYS {
            for part in ["re", "im"] {
                keys.push(format!("{group}.{entry}.{part}"));
            }
        }
    }
    for entry in ["alpha", "beta"] {
        for part in ["re", "im"] {
            keys.push(format!("initial.{entry}.{part}"));
        }
    }
    keys
}

impl RunConfig {
    pub fn from_parts(
        label: Option<&str>,
        boundary: &Coin64,
        bulk: &Coin64,
        alpha: Complex64,
        beta: Complex64,
    ) -> Self {
        Self {
            label: label.map(str::to_owned),
            boundary_coin: [boundary.a(), boundary.b(), boundary.c(), boundary.d()],
            bulk_coin: [bulk.a(), bulk.b(), bulk.c(), bulk.d()],
            alpha,
            beta,
        }
    }

    /// Parses the key-value format, reporting the offending line and field
    /// on failure.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut values: BTreeMap<String, f64> = BTreeMap::new();
        let mut label = None;
        let known = numeric_keys();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(ConfigError {
                    line: Some(line_no),
                    message: format!("expected `key = value`, got `{line}`"),
                });
            };
            let key = key.trim();
            let value = value.trim();
            if key == "label" {
                label = Some(value.to_owned());
                continue;
            }
            if !known.iter().any(|k| k == key) {
                return Err(ConfigError {
                    line: Some(line_no),
                    message: format!("unknown field `{key}`"),
                });
            }
            let parsed: f64 = value.parse().map_err(|_| ConfigError {
                line: Some(line_no),
                message: format!("field `{key}`: `{value}` is not a number"),
            })?;
            if values.insert(key.to_owned(), parsed).is_some() {
                return Err(ConfigError {
                    line: Some(line_no),
                    message: format!("duplicate field `{key}`"),
                });
            }
        }
        let fetch = |key: &str| -> Result<f64, ConfigError> {
            values.get(key).copied().ok_or_else(|| ConfigError {
                line: None,
                message: format!("missing field `{key}`"),
            })
        };
        let complex = |prefix: &str| -> Result<Complex64, ConfigError> {
            Ok(Complex64::new(
                fetch(&format!("{prefix}.re"))?,
                fetch(&format!("{prefix}.im"))?,
            ))
        };
        let coin = |group: &str| -> Result<[Complex64; 4], ConfigError> {
            Ok([
                complex(&format!("{group}.a"))?,
                complex(&format!("{group}.b"))?,
                complex(&format!("{group}.c"))?,
                complex(&format!("{group}.d"))?,
            ])
        };
        Ok(Self {
            label,
            boundary_coin: coin("boundary_coin")?,
            bulk_coin: coin("bulk_coin")?,
            alpha: complex("initial.alpha")?,
            beta: complex("initial.beta")?,
        })
    }

    /// Serializes with lossless float formatting.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        if let Some(label) = &self.label {
            out.push_str(&format!("label = {label}\n\n"));
        }
        for (group, entries) in [
            ("boundary_coin", &self.boundary_coin),
            ("bulk_coin", &self.bulk_coin),
        ] {
            for (name, value) in COIN_KEYS.iter().zip(entries.iter()) {
                out.push_str(&format!("{group}.{name}.re = {}\n", format_float(value.re)));
                out.push_str(&format!("{group}.{name}.im = {}\n", format_float(value.im)));
            }
            out.push('\n');
        }
        for (name, value) in [("alpha", self.alpha), ("beta", self.beta)] {
            out.push_str(&format!("initial.{name}.re = {}\n", format_float(value.re)));
            out.push_str(&format!("initial.{name}.im = {}\n", format_float(value.im)));
        }
        out
    }

    /// Validates the entries into a walk spec.
    pub fn to_walk_spec(&self) -> Result<WalkSpec64, ConfigError> {
        let coin = |name: &str, e: &[Complex64; 4]| {
            Coin64::new(e[0], e[1], e[2], e[3]).map_err(|err| ConfigError {
                line: None,
                message: format!("{name}: {err}"),
            })
        };
        let boundary = coin("boundary_coin", &self.boundary_coin)?;
        let bulk = coin("bulk_coin", &self.bulk_coin)?;
        WalkSpec64::new(boundary, bulk, self.alpha, self.beta).map_err(|err| ConfigError {
            line: None,
            message: format!("initial state: {err}"),
        })
    }
}

/// 17 significant digits: enough to reproduce any f64 exactly.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hadamard_config() -> RunConfig {
        let h = Coin64::hadamard();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        RunConfig::from_parts(
            Some("hadamard"),
            &h,
            &h,
            Complex64::new(s, 0.0),
            Complex64::new(0.0, s),
        )
    }

    #[test]
    fn emit_parse_round_trip_is_bit_exact() {
        let config = hadamard_config();
        let text = config.emit();
        let parsed = RunConfig::parse(&text).unwrap();
        assert_eq!(parsed, config);
        assert_eq!(parsed.emit(), text);
        // awkward values survive too
        let mut odd = config;
        odd.bulk_coin[1] = Complex64::new(-1.234_567_890_123_456_7e-8, f64::MIN_POSITIVE);
        let reparsed = RunConfig::parse(&odd.emit()).unwrap();
        assert_eq!(reparsed.bulk_coin[1].re.to_bits(), odd.bulk_coin[1].re.to_bits());
        assert_eq!(reparsed.bulk_coin[1].im.to_bits(), odd.bulk_coin[1].im.to_bits());
    }

    #[test]
    fn missing_field_is_named() {
        let mut text = hadamard_config().emit();
        text = text.replace("initial.beta.im", "# initial.beta.im");
        let err = RunConfig::parse(&text).unwrap_err();
        assert!(err.message.contains("initial.beta.im"), "{err}");
    }

    #[test]
    fn unknown_field_reports_line() {
        let text = "bulk_coin.e.re = 1.0\n";
        let err = RunConfig::parse(text).unwrap_err();
        assert_eq!(err.line, Some(1));
        assert!(err.message.contains("bulk_coin.e.re"));
    }

    #[test]
    fn bad_number_reports_field_and_line() {
        let mut text = String::from("\n# comment\n");
        text.push_str("boundary_coin.a.re = one\n");
        let err = RunConfig::parse(&text).unwrap_err();
        assert_eq!(err.line, Some(3));
        assert!(err.message.contains("boundary_coin.a.re"));
    }

    #[test]
    fn duplicate_field_rejected() {
        let mut text = hadamard_config().emit();
        text.push_str("bulk_coin.a.re = 0.5\n");
        let err = RunConfig::parse(&text).unwrap_err();
        assert!(err.message.contains("duplicate"));
    }

    #[test]
    fn validation_errors_surface() {
        let mut config = hadamard_config();
        config.alpha = Complex64::new(1.0, 0.0);
        config.beta = Complex64::new(1.0, 0.0);
        let err = config.to_walk_spec().unwrap_err();
        assert!(err.message.contains("initial state"), "{err}");
        let mut config = hadamard_config();
        config.bulk_coin[0] = Complex64::new(0.9, 0.0);
        let err = config.to_walk_spec().unwrap_err();
        assert!(err.message.contains("bulk_coin"), "{err}");
    }
}
