use acvar_core::cherednik::{pbw_count, pbw_expected, relation_failures};
use acvar_core::poly::var_names;
use acvar_core::random;
use acvar_core::upoly::CPoly;
use acvar_core::Result;
use clap::Args;
use serde::Serialize;
use serde_json::json;

use super::{instance_rng, sweep, Outcome};
use crate::report::Failure;

#[derive(Args, Debug, Serialize)]
pub struct DunklArgs {
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Number of random polynomials.
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// Maximal total degree of the random polynomials.
    #[arg(long, default_value_t = 5)]
    pub degree: u32,
    /// Bound on numerators and denominators of coefficients.
    #[arg(long, default_value_t = 9)]
    pub bound: i64,
    /// Run only the instance with this index.
    #[arg(long)]
    pub only: Option<usize>,
}

impl DunklArgs {
    pub fn run(&self, seed: u64) -> Result<Outcome> {
        let n = self.n;
        let (rows, failures) = sweep((0..self.count).collect(), self.only, |index, _| {
            let mut rng = instance_rng(seed, index);
            let vars = var_names("x", n);
            // A c-dependent part keeps the identities honest in Q[c].
            let f = random::polynomial(&mut rng, vars.clone(), self.degree, 6, self.bound)
                .to_c()
                .add(
                    &random::polynomial(&mut rng, vars, self.degree, 2, self.bound)
                        .to_c()
                        .scale(&CPoly::var()),
                );
            let bad = relation_failures(&f)?;
            let row = json!({ "index": index, "n": n, "terms": f.num_terms(), "failed_relations": bad.len() });
            let fail = (!bad.is_empty()).then(|| Failure {
                index: Some(index),
                detail: format!("{} relation instances fail", bad.len()),
                witness: json!({ "polynomial": f.to_wire(), "failures": bad }),
                rerun: format!(
                    "acvar dunkl-check --seed {seed} --n {n} --count {} --degree {} --bound {} --only {index}",
                    self.count, self.degree, self.bound
                ),
            });
            Ok((row, fail))
        })?;
        let summary = format!(
            "{} polynomials in {n} variables, {} failing",
            rows.len(),
            failures.len()
        );
        Ok(Outcome {
            rows,
            failures,
            summary,
        })
    }
}

#[derive(Args, Debug, Serialize)]
pub struct PbwArgs {
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Largest filtration degree d.
    #[arg(long, default_value_t = 3)]
    pub bound: usize,
}

impl PbwArgs {
    pub fn run(&self) -> Result<Outcome> {
        let n = self.n;
        let (rows, failures) = sweep((0..=self.bound).collect(), None, |_, &d| {
            let got = pbw_count(n, d);
            let want = pbw_expected(n, d);
            let row = json!({ "n": n, "d": d, "count": got, "expected": want, "ok": got == want });
            let fail = (got != want).then(|| Failure {
                index: None,
                detail: format!("rank {got}, expected {want}"),
                witness: json!({ "n": n, "d": d }),
                rerun: format!("acvar pbw-count --n {n} --bound {d}"),
            });
            Ok((row, fail))
        })?;
        let counts: Vec<String> = rows.iter().map(|r| r["count"].to_string()).collect();
        Ok(Outcome {
            rows,
            failures,
            summary: format!("n={n}: ranks {}", counts.join(",")),
        })
    }
}
