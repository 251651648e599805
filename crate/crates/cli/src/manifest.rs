use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputMode {
    Text,
    Json,
}

/// Everything that determines a run. Echoed at the top of every report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunManifest {
    pub command: &'static str,
    /// Role (`rule`, `config`, ...) to the file path or built-in name given.
    pub inputs: BTreeMap<&'static str, String>,
    pub params: BTreeMap<&'static str, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub output: OutputMode,
}

impl RunManifest {
    pub fn new(command: &'static str, output: OutputMode) -> Self {
        RunManifest {
            command,
            inputs: BTreeMap::new(),
            params: BTreeMap::new(),
            seed: None,
            output,
        }
    }

    pub fn input(mut self, role: &'static str, value: &str) -> Self {
        self.inputs.insert(role, value.to_string());
        self
    }

    pub fn param(mut self, key: &'static str, value: impl ToString) -> Self {
        self.params.insert(key, value.to_string());
        self
    }
}

impl fmt::Display for RunManifest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "# sandlab {}", self.command)?;
        for (k, v) in self.inputs.iter().chain(&self.params) {
            write!(f, " {k}={v}")?;
        }
        if let Some(seed) = self.seed {
            write!(f, " seed={seed}")?;
        }
        Ok(())
    }
}
