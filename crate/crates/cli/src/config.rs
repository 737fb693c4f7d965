use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    JsonLines,
    Csv,
    Pretty,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub precision_bits: usize,
    pub guard_bits: usize,
    pub max_digits: u32,
    /// Ceiling for automatic precision doubling in `construct`.
    pub max_precision_bits: usize,
    /// 0 picks the number of available cores.
    pub thread_count: usize,
    pub format: Format,
    /// Zero out wall-clock fields so reruns are byte-identical.
    pub reproducible: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            precision_bits: 384,
            guard_bits: 16,
            max_digits: 80,
            max_precision_bits: 16384,
            thread_count: 0,
            format: Format::JsonLines,
            reproducible: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.precision_bits < 128 {
            return Err(format!("precision {} < 128 bits", self.precision_bits));
        }
        if self.guard_bits < 8 {
            return Err(format!("guard {} < 8 bits", self.guard_bits));
        }
        if self.max_precision_bits < self.precision_bits {
            return Err("max precision below starting precision".into());
        }
        Ok(())
    }

    /// Precision handed to the numeric routines.
    pub fn working_precision(&self) -> usize {
        self.precision_bits + self.guard_bits
    }
}
