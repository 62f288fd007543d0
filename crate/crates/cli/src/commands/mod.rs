//! One module per experiment family. Every subcommand turns its arguments into
//! an [`Outcome`]: rows in input order plus re-runnable failures.

pub mod acv;
pub mod cherednik;
pub mod freeness;
pub mod quiver;

use acvar_core::random::{self, SeededRng};
use acvar_core::Result;
use rayon::prelude::*;
use serde_json::Value;

use crate::report::Failure;

pub struct Outcome {
    pub rows: Vec<Value>,
    pub failures: Vec<Failure>,
    pub summary: String,
}

/// Generator for instance `index` of a sweep: the run seed on its own stream,
/// so an instance can be replayed alone with `--only`.
pub fn instance_rng(seed: u64, index: usize) -> SeededRng {
    let mut rng = random::rng(seed);
    rng.set_stream(index as u64);
    rng
}

/// Evaluates `cases` in parallel and aggregates in input order. The first
/// error in input order wins, so failures are deterministic too.
pub fn sweep<C, F>(
    cases: Vec<C>,
    only: Option<usize>,
    eval: F,
) -> Result<(Vec<Value>, Vec<Failure>)>
where
    C: Sync,
    F: Fn(usize, &C) -> Result<(Value, Option<Failure>)> + Sync,
{
    let picked: Vec<(usize, &C)> = cases
        .iter()
        .enumerate()
        .filter(|(i, _)| only.is_none_or(|o| o == *i))
        .collect();
    let results: Vec<_> = picked.par_iter().map(|(i, c)| eval(*i, c)).collect();
    let mut rows = Vec::with_capacity(results.len());
    let mut failures = Vec::new();
    for r in results {
        let (row, fail) = r?;
        rows.push(row);
        failures.extend(fail);
    }
    Ok((rows, failures))
}

/// Integer partitions of `n` with parts at most `max`, largest part first.
pub fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| partitions(n, n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11]);
    }

    #[test]
    fn instance_streams_differ_and_repeat() {
        use rand::Rng;
        let a: u64 = instance_rng(5, 0).gen();
        let b: u64 = instance_rng(5, 1).gen();
        assert_ne!(a, b);
        assert_eq!(a, instance_rng(5, 0).gen::<u64>());
    }

    #[test]
    fn sweep_keeps_input_order_and_filters() {
        let cases: Vec<usize> = (0..50).collect();
        let (rows, _) = sweep(cases.clone(), None, |i, c| {
            Ok((Value::from(i * 100 + c), None))
        })
        .unwrap();
        assert_eq!(
            rows,
            (0..50).map(|i| Value::from(i * 101)).collect::<Vec<_>>()
        );
        let (rows, _) = sweep(cases, Some(7), |i, _| Ok((Value::from(i), None))).unwrap();
        assert_eq!(rows, vec![Value::from(7)]);
    }
}
