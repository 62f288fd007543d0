//! Report envelope shared by every subcommand, and its JSON/CSV emitters.
//!
//! A report is a pure function of the run configuration: no timestamps, no
//! host data, rows in input order. Identical configs give identical bytes.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A counterexample, with the command line that reproduces it alone.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub index: Option<usize>,
    pub detail: String,
    pub witness: Value,
    pub rerun: String,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub config: Value,
    pub config_sha256: String,
    pub status: Status,
    pub summary: String,
    pub rows: Vec<Value>,
    pub failures: Vec<Failure>,
}

/// Hex sha256 of the canonical JSON of `(command, config)`.
pub fn config_hash(command: &str, config: &Value) -> String {
    let canon = serde_json::to_vec(&(command, config)).expect("config serializes");
    Sha256::digest(&canon)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl Report {
    pub fn new(
        command: &'static str,
        config: Value,
        rows: Vec<Value>,
        failures: Vec<Failure>,
        summary: String,
    ) -> Self {
        let config_sha256 = config_hash(command, &config);
        let status = if failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        Report {
            tool: "acvar",
            version: env!("CARGO_PKG_VERSION"),
            command,
            config,
            config_sha256,
            status,
            summary,
            rows,
            failures,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
        }
    }

    /// Provenance and failures go in `#` comment lines; rows are flattened with
    /// nested values written as JSON text.
    fn render_csv(&self) -> String {
        let mut out = format!(
            "# {} {} {} config_sha256={} status={}\n# {}\n",
            self.tool,
            self.version,
            self.command,
            self.config_sha256,
            serde_json::to_string(&self.status)
                .expect("status serializes")
                .trim_matches('"'),
            self.summary
        );
        for f in &self.failures {
            out.push_str(&format!(
                "# failure: {}\n",
                serde_json::to_string(f).expect("failure serializes")
            ));
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        if let Some(Value::Object(first)) = self.rows.first() {
            w.write_record(first.keys()).expect("in-memory write");
        }
        for row in &self.rows {
            if let Value::Object(map) = row {
                w.write_record(map.values().map(cell))
                    .expect("in-memory write");
            }
        }
        out.push_str(
            &String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8"),
        );
        out
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn hash_depends_on_config_only() {
        let a = config_hash("classify", &json!({"n": 3, "seed": 1}));
        assert_eq!(a, config_hash("classify", &json!({"n": 3, "seed": 1})));
        assert_ne!(a, config_hash("classify", &json!({"n": 3, "seed": 2})));
        assert_eq!(a.len(), 64);
    }

    #[test]
    fn csv_flattens_nested_cells() {
        let r = Report::new(
            "t",
            json!({}),
            vec![json!({"n": 2, "v": [1, 2], "s": "a,b"})],
            vec![],
            "ok".into(),
        );
        let text = r.render(Format::Csv);
        assert!(text.contains("n,v,s\n2,\"[1,2]\",\"a,b\"\n"), "{text}");
        assert!(text.contains("status=pass"));
    }
}
