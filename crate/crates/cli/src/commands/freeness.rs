use acvar_core::altpoly::{freeness_certificate, Bidegree, FreenessStatus};
use acvar_core::Result;
use clap::Args;
use serde::Serialize;
use serde_json::json;

use super::Outcome;
use crate::report::Failure;

fn parse_bidegree(s: &str) -> std::result::Result<Bidegree, String> {
    let (a, b) = s.split_once(',').ok_or("expected `a,b`")?;
    let p = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
    Ok((p(a)?, p(b)?))
}

#[derive(Args, Debug, Serialize)]
pub struct FreenessArgs {
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Power of the alternating ideal.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Bidegree bound `a,b` (x-degree, y-degree).
    #[arg(long, default_value = "4,4", value_parser = parse_bidegree)]
    pub bound: Bidegree,
}

impl FreenessArgs {
    pub fn run(&self) -> Result<Outcome> {
        let r = freeness_certificate(self.n, self.k, self.bound)?;
        let rows = r
            .generators
            .iter()
            .map(|g| json!({ "generator": g.index, "x_degree": g.bidegree.0, "y_degree": g.bidegree.1 }))
            .collect();
        let mut failures = Vec::new();
        if let FreenessStatus::Failed {
            bidegree, reason, ..
        } = &r.status
        {
            failures.push(Failure {
                index: None,
                detail: format!("at bidegree {bidegree:?}: {reason}"),
                witness: serde_json::to_value(&r.status).expect("status serializes"),
                rerun: format!(
                    "acvar freeness --n {} --k {} --bound {},{}",
                    self.n, self.k, bidegree.0, bidegree.1
                ),
            });
        }
        let summary = match r.verified_up_to {
            Some(b) if r.is_certified() => {
                format!(
                    "free up to bidegree {b:?} with {} generators",
                    r.generators.len()
                )
            }
            _ if r.is_certified() => "free (no bidegrees in range)".to_string(),
            _ => format!("freeness fails; verified up to {:?}", r.verified_up_to),
        };
        Ok(Outcome {
            rows,
            failures,
            summary,
        })
    }
}
