use std::path::PathBuf;

use acvar_core::quiver::{
    component_count, expected_dim, AffineQuiver, DimVector, Limits, Quiver, Weight,
};
use acvar_core::{Error, Result};
use clap::{Args, ValueEnum};
use serde::Serialize;
use serde_json::json;

use super::{sweep, Outcome};
use crate::report::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// One vertex with one loop.
    Jordan,
    /// Cyclic quiver with two vertices.
    Cyclic1,
    /// Cyclic quiver with three vertices.
    Cyclic2,
    /// Star with four leaves.
    D4,
}

impl Family {
    fn affine(self) -> AffineQuiver {
        match self {
            Family::Jordan => AffineQuiver::jordan(),
            Family::Cyclic1 => AffineQuiver::cyclic(1),
            Family::Cyclic2 => AffineQuiver::cyclic(2),
            Family::D4 => AffineQuiver::d4(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Family::Jordan => "jordan",
            Family::Cyclic1 => "cyclic1",
            Family::Cyclic2 => "cyclic2",
            Family::D4 => "d4",
        }
    }
}

#[derive(Args, Debug, Serialize)]
pub struct QuiverArgs {
    /// Affine quiver to frame at its extending vertex.
    #[arg(long, value_enum, default_value_t = Family::Jordan)]
    pub family: Family,
    /// Largest multiple n of delta.
    #[arg(long, default_value_t = 6)]
    pub n: u32,
    #[arg(long, default_value_t = 1)]
    pub n_min: u32,
    /// Count components for an arbitrary quiver from a JSON file
    /// `{"vertices": V, "edges": [[t, h], ...]}` instead of a framed family.
    #[arg(long, requires = "alpha")]
    pub quiver: Option<PathBuf>,
    /// Dimension vector for `--quiver`, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub alpha: Vec<u32>,
    /// Cap on candidate roots.
    #[arg(long, default_value_t = Limits::default().max_roots)]
    pub max_roots: usize,
    /// Cap on parts per decomposition.
    #[arg(long, default_value_t = Limits::default().max_parts)]
    pub max_parts: usize,
    /// Cap on search nodes.
    #[arg(long, default_value_t = Limits::default().max_nodes)]
    pub max_nodes: u64,
}

impl QuiverArgs {
    fn limits(&self) -> Limits {
        Limits {
            max_roots: self.max_roots,
            max_parts: self.max_parts,
            max_nodes: self.max_nodes,
        }
    }

    pub fn run(&self) -> Result<Outcome> {
        if let Some(path) = &self.quiver {
            return self.run_file(path);
        }
        let aff = self.family.affine();
        let ns: Vec<u32> = (self.n_min.max(1)..=self.n).collect();
        let (rows, failures) = sweep(ns, None, |_, &n| {
            let f = aff.frame(n);
            let lambda = Weight::zero(f.quiver.vertices);
            let count = component_count(&f.quiver, &lambda, &f.alpha, self.limits())?;
            let dim = expected_dim(&f.quiver, &f.alpha)?;
            let ok = count == n as usize + 1 && dim == f.closed_form_dim();
            let row = json!({
                "n": n,
                "alpha": f.alpha,
                "components": count,
                "expected_dim": dim,
                "closed_form_dim": f.closed_form_dim(),
                "ok": ok,
            });
            let fail = (!ok).then(|| Failure {
                index: None,
                detail: format!(
                    "{count} components (want {}), dimension {dim} (want {})",
                    n + 1,
                    f.closed_form_dim()
                ),
                witness: json!({ "quiver": f.quiver, "alpha": f.alpha }),
                rerun: format!(
                    "acvar quiver-components --family {} --n-min {n} --n {n}",
                    self.family.name()
                ),
            });
            Ok((row, fail))
        })?;
        let counts: Vec<String> = rows.iter().map(|r| r["components"].to_string()).collect();
        let summary = format!(
            "framed {}: component counts {}",
            self.family.name(),
            counts.join(",")
        );
        Ok(Outcome {
            rows,
            failures,
            summary,
        })
    }

    fn run_file(&self, path: &PathBuf) -> Result<Outcome> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        let q: Quiver = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
        q.validate()?;
        let alpha = DimVector(self.alpha.clone());
        let count = component_count(&q, &Weight::zero(q.vertices), &alpha, self.limits())?;
        let dim = expected_dim(&q, &alpha)?;
        let row = json!({ "alpha": alpha, "components": count, "expected_dim": dim });
        Ok(Outcome {
            rows: vec![row],
            failures: vec![],
            summary: format!("{count} components"),
        })
    }
}
