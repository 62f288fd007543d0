use std::path::PathBuf;

use acvar_core::acv::{
    all_y_nilpotent, classify_generic, co_cyclic_subspace, conormal_space, cyclic_subspace,
    is_relevant, jordan_block, normal_form, GenericClass, Quadruple,
};
use acvar_core::random;
use acvar_core::{Error, RatMatrix, RatVector, Rational, Result};
use clap::Args;
use serde::Serialize;
use serde_json::{json, Value};

use super::{instance_rng, partitions, sweep, Outcome};
use crate::report::Failure;

#[derive(Args, Debug, Serialize)]
pub struct ClassifyArgs {
    /// Largest matrix size in the sweep.
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    /// Smallest matrix size in the sweep.
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,
    /// Only sweep normal forms with k'' = K.
    #[arg(long)]
    pub k: Option<usize>,
    /// Draws per (n, k', k'').
    #[arg(long, default_value_t = 5)]
    pub count: usize,
    /// Bound on numerators and denominators of random entries.
    #[arg(long, default_value_t = random::DEFAULT_ENTRY_BOUND)]
    pub bound: i64,
    /// Run only the instance with this index.
    #[arg(long)]
    pub only: Option<usize>,
    /// Classify one quadruple read from this JSON file instead of sweeping.
    #[arg(long, conflicts_with = "only")]
    pub input: Option<PathBuf>,
}

fn label(c: &GenericClass) -> String {
    match c {
        GenericClass::Component { k } => format!("component k={k}"),
        GenericClass::Degenerate { cyclic, cocyclic } => {
            format!("degenerate cyclic={cyclic} cocyclic={cocyclic}")
        }
    }
}

impl ClassifyArgs {
    fn rerun(&self, seed: u64, index: usize) -> String {
        let k = self.k.map(|k| format!(" --k {k}")).unwrap_or_default();
        format!(
            "acvar classify --seed {seed} --n-min {} --n {}{k} --count {} --bound {} --only {index}",
            self.n_min, self.n, self.count, self.bound
        )
    }

    pub fn run(&self, seed: u64) -> Result<Outcome> {
        if let Some(path) = &self.input {
            return classify_file(path);
        }
        let mut cases = Vec::new();
        for n in self.n_min.max(1)..=self.n {
            for kpp in (0..=n).filter(|&kpp| self.k.is_none_or(|k| k == kpp)) {
                for kp in 0..=kpp {
                    cases.extend(std::iter::repeat_n((n, kp, kpp), self.count));
                }
            }
        }
        let total = cases.len();
        let (rows, failures) = sweep(cases, self.only, |index, &(n, kp, kpp)| {
            let mut rng = instance_rng(seed, index);
            let p = random::normal_form_params(&mut rng, n, kp, kpp, self.bound)?;
            let (g, gi) = random::invertible(&mut rng, n, 3);
            let q = normal_form(&p)?.conjugate(&g, &gi);
            let expected = if kp == kpp {
                GenericClass::Component { k: kp }
            } else {
                GenericClass::Degenerate {
                    cyclic: n - kpp,
                    cocyclic: kp,
                }
            };
            let got = classify_generic(&q);
            let ok = got.as_ref() == Ok(&expected);
            let got_text = match &got {
                Ok(c) => label(c),
                Err(e) => format!("error: {e}"),
            };
            let row = json!({
                "index": index,
                "n": n,
                "k_prime": kp,
                "k_double_prime": kpp,
                "cyclic_dim": cyclic_subspace(&q.x, &q.y, &q.i).len(),
                "cocyclic_dim": co_cyclic_subspace(&q.j, &q.x, &q.y).len(),
                "expected": label(&expected),
                "got": got_text,
                "ok": ok,
            });
            let fail = (!ok).then(|| Failure {
                index: Some(index),
                detail: format!("expected {}, got {got_text}", label(&expected)),
                witness: json!({ "params": p, "quadruple": q }),
                rerun: self.rerun(seed, index),
            });
            Ok((row, fail))
        })?;
        let summary = format!(
            "{} of {total} normal forms classified, {} mismatches",
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

fn classify_file(path: &PathBuf) -> Result<Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    let q: Quadruple = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let c = classify_generic(&q)?;
    let row = json!({
        "index": Value::Null,
        "n": q.n,
        "cyclic_dim": cyclic_subspace(&q.x, &q.y, &q.i).len(),
        "cocyclic_dim": co_cyclic_subspace(&q.j, &q.x, &q.y).len(),
        "got": label(&c),
    });
    Ok(Outcome {
        rows: vec![row],
        failures: vec![],
        summary: format!("{}: {}", path.display(), label(&c)),
    })
}

#[derive(Args, Debug, Serialize)]
pub struct NormalFormArgs {
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// k' (the co-cyclic dimension).
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// k''; defaults to k, giving a point of the component M'_k.
    #[arg(long)]
    pub k_double_prime: Option<usize>,
    #[arg(long, default_value_t = random::DEFAULT_ENTRY_BOUND)]
    pub bound: i64,
}

impl NormalFormArgs {
    pub fn run(&self, seed: u64) -> Result<Outcome> {
        let kpp = self.k_double_prime.unwrap_or(self.k);
        let mut rng = random::rng(seed);
        let p = random::normal_form_params(&mut rng, self.n, self.k, kpp, self.bound)?;
        let q = normal_form(&p)?;
        let dims = (
            cyclic_subspace(&q.x, &q.y, &q.i).len(),
            co_cyclic_subspace(&q.j, &q.x, &q.y).len(),
        );
        let on_variety = q.moment_map().is_zero();
        let ok = on_variety && dims == (self.n - kpp, self.k);
        let row = json!({
            "n": self.n,
            "k_prime": self.k,
            "k_double_prime": kpp,
            "moment_map_zero": on_variety,
            "cyclic_dim": dims.0,
            "cocyclic_dim": dims.1,
            "params": p,
            "quadruple": q,
        });
        let mut failures = Vec::new();
        if !ok {
            failures.push(Failure {
                index: None,
                detail: format!("moment map zero: {on_variety}, dimensions {dims:?}"),
                witness: json!({ "params": p }),
                rerun: format!(
                    "acvar normal-form --seed {seed} --n {} --k {} --k-double-prime {kpp} --bound {}",
                    self.n, self.k, self.bound
                ),
            });
        }
        let summary = format!(
            "normal form n={} k'={} k''={kpp}: dimensions {dims:?}",
            self.n, self.k
        );
        Ok(Outcome {
            rows: vec![row],
            failures,
            summary,
        })
    }
}

#[derive(Args, Debug, Serialize)]
pub struct StrataScanArgs {
    /// Largest matrix size; every Jordan type and i-height profile is scanned.
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,
    /// Bound on entries of the conjugating matrices.
    #[arg(long, default_value_t = 3)]
    pub bound: i64,
    /// Run only the instance with this index.
    #[arg(long)]
    pub only: Option<usize>,
}

/// Block-diagonal regular matrix of Jordan blocks with distinct eigenvalues.
fn regular_matrix(sizes: &[usize], eigenvalues: &[Rational]) -> RatMatrix {
    let n: usize = sizes.iter().sum();
    let mut x = RatMatrix::zeros(n, n);
    let mut off = 0;
    for (&s, z) in sizes.iter().zip(eigenvalues) {
        let jb = jordan_block(z, s);
        for r in 0..s {
            for c in 0..s {
                x[(off + r, off + c)] = jb[(r, c)].clone();
            }
        }
        off += s;
    }
    x
}

fn heights(sizes: &[usize]) -> Vec<Vec<usize>> {
    sizes.iter().fold(vec![vec![]], |acc, &s| {
        acc.into_iter()
            .flat_map(|p| {
                (0..=s).map(move |h| {
                    let mut q = p.clone();
                    q.push(h);
                    q
                })
            })
            .collect()
    })
}

impl StrataScanArgs {
    pub fn run(&self, seed: u64) -> Result<Outcome> {
        let mut cases = Vec::new();
        for n in self.n_min.max(1)..=self.n {
            for sizes in partitions(n, n) {
                for h in heights(&sizes) {
                    cases.push((sizes.clone(), h.clone(), false));
                    cases.push((sizes.clone(), h, true));
                }
            }
        }
        let (rows, failures) = sweep(cases, self.only, |index, (sizes, hs, conj)| {
            let n: usize = sizes.iter().sum();
            let mut rng = instance_rng(seed, index);
            let eig: Vec<Rational> = random::distinct_rationals(&mut rng, sizes.len(), 9);
            let mut x = regular_matrix(sizes, &eig);
            let mut i = RatVector::zeros(n);
            let mut off = 0;
            for (&s, &h) in sizes.iter().zip(hs) {
                // Height h: the component of i generates exactly h dimensions.
                for r in 0..h {
                    i[off + r] = random::small_int(&mut rng, 3)
                        + Rational::from_integer(if r + 1 == h { 5 } else { 0 }.into());
                }
                off += s;
            }
            if *conj {
                let (g, gi) = random::invertible(&mut rng, n, self.bound);
                x = x.conjugate_by(&g, &gi);
                i = g.mul_vec(&i);
            }
            let stratum = is_relevant(&x, &i)?;
            let nil = all_y_nilpotent(&conormal_space(&x, &i)?);
            let single_ok = sizes.len() > 1 || nil == (hs[0] == 0 || hs[0] == n);
            let ok = stratum.regular && stratum.relevant == nil && single_ok;
            let row = json!({
                "index": index,
                "n": n,
                "sizes": sizes,
                "heights": hs,
                "conjugated": conj,
                "regular": stratum.regular,
                "relevant": stratum.relevant,
                "all_y_nilpotent": nil,
                "ok": ok,
            });
            let fail = (!ok).then(|| Failure {
                index: Some(index),
                detail: format!("relevant={} but all_y_nilpotent={nil}", stratum.relevant),
                witness: json!({ "x": x, "i": i, "stratum": stratum }),
                rerun: format!(
                    "acvar strata-scan --seed {seed} --n-min {} --n {} --bound {} --only {index}",
                    self.n_min, self.n, self.bound
                ),
            });
            Ok((row, fail))
        })?;
        let summary = format!(
            "{} pairs (X, i), {} disagreements",
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
