use std::fmt;
use std::time::Duration;

/// One line of batch output: tab-separated `key=value` pairs in a fixed
/// order, `op` and `input` first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchRecord {
    pub op: String,
    pub input: String,
    pub fields: Vec<(String, String)>,
    /// Only printed when set, so that default output stays byte-identical
    /// between runs.
    pub elapsed: Option<Duration>,
}

impl BatchRecord {
    pub fn new(op: impl Into<String>, input: impl Into<String>) -> Self {
        BatchRecord {
            op: op.into(),
            input: input.into(),
            fields: Vec::new(),
            elapsed: None,
        }
    }

    pub fn field(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.fields.push((key.into(), value.to_string()));
        self
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.fields.push((key.into(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// Human-readable `key: value` lines, without `op` and `input`.
    pub fn human(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            out += &format!("{k}: {v}\n");
        }
        if let Some(d) = self.elapsed {
            out += &format!("elapsed_us: {}\n", d.as_micros());
        }
        out
    }
}

/// Keeps every record on one line and every field splittable on tabs.
pub fn escape(v: &str) -> String {
    v.replace('\\', "\\\\")
        .replace('\t', "\\t")
        .replace('\n', "\\n")
}

impl fmt::Display for BatchRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "op={}\tinput={}", escape(&self.op), escape(&self.input))?;
        for (k, v) in &self.fields {
            write!(f, "\t{}={}", escape(k), escape(v))?;
        }
        if let Some(d) = self.elapsed {
            write!(f, "\telapsed_us={}", d.as_micros())?;
        }
        Ok(())
    }
}
