use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Everything one experiment run needs. Parameters that an experiment does
/// not use are ignored by it; unknown keys are rejected.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(default, alias = "N", skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub targets: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_phase: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diffusion_phase: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threshold: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub energy: Option<f64>,
    #[serde(default, alias = "L", skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    #[serde(default, alias = "t", skip_serializing_if = "Option::is_none")]
    pub hopping: Option<f64>,
    #[serde(default, alias = "V", skip_serializing_if = "Option::is_none")]
    pub impurity: Option<f64>,
    #[serde(default, alias = "W", skip_serializing_if = "Option::is_none")]
    pub disorder: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(default, alias = "T", skip_serializing_if = "Option::is_none")]
    pub time: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dt: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<String>,
    #[serde(default, alias = "Q", skip_serializing_if = "Option::is_none")]
    pub queries: Option<u32>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[serde(default)]
    pub format: Format,
}

impl ExperimentConfig {
    pub fn new(experiment: impl Into<String>) -> Self {
        Self {
            experiment: experiment.into(),
            ..Self::default()
        }
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::InvalidConfig(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Applies the keys present in `overrides` on top of `self`.
    pub fn merged_with(&self, overrides: &str) -> Result<Self, CliError> {
        let mut base = serde_json::to_value(self).expect("config serializes");
        let patch: serde_json::Value =
            serde_json::from_str(overrides).map_err(|e| CliError::InvalidConfig(e.to_string()))?;
        let serde_json::Value::Object(patch) = patch else {
            return Err(CliError::InvalidConfig("config must be a JSON object".into()));
        };
        let obj = base.as_object_mut().expect("config is an object");
        for (k, v) in patch {
            obj.insert(canonical_key(&k).to_string(), v);
        }
        serde_json::from_value(base).map_err(|e| CliError::InvalidConfig(e.to_string()))
    }
}

fn canonical_key(key: &str) -> &str {
    match key {
        "N" => "n",
        "L" => "length",
        "t" => "hopping",
        "V" => "impurity",
        "W" => "disorder",
        "T" => "time",
        "Q" => "queries",
        other => other,
    }
}

/// Parses an angle given as a number or as a multiple/fraction of `pi`,
/// e.g. `3.14`, `pi`, `-pi`, `pi/4`, `3pi/4`, `0.5pi`.
pub fn parse_angle(text: &str) -> Result<f64, String> {
    let s = text.trim().to_ascii_lowercase().replace(['*', ' '], "");
    if let Ok(v) = s.parse::<f64>() {
        return Ok(v);
    }
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b.parse::<f64>().map_err(|_| format!("bad angle `{text}`"))?),
        None => (s.as_str(), 1.0),
    };
    let Some(coeff) = num.strip_suffix("pi") else {
        return Err(format!("bad angle `{text}`"));
    };
    let c = match coeff {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| format!("bad angle `{text}`"))?,
    };
    Ok(c * std::f64::consts::PI / den)
}
