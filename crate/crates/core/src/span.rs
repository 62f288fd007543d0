//! Incrementally maintained reduced echelon basis of a subspace of `Q^n`.

use num_traits::Zero;

use crate::matrix::RatVector;

#[derive(Clone, Debug)]
pub struct SpanBuilder {
    dim: usize,
    rows: Vec<RatVector>,
    pivots: Vec<usize>,
    originals: Vec<RatVector>,
}

impl SpanBuilder {
    pub fn new(dim: usize) -> Self {
        SpanBuilder {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
            originals: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &RatVector) -> RatVector {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for j in 0..self.dim {
                    if !row[j].is_zero() {
                        let d = &f * &row[j];
                        v[j] -= d;
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &RatVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns `true` if it enlarged the span.
    pub fn insert(&mut self, v: &RatVector) -> bool {
        assert_eq!(v.len(), self.dim);
        let r = self.reduce(v);
        let Some(p) = (0..self.dim).find(|&j| !r[j].is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        let r = r.scale(&inv);
        for row in &mut self.rows {
            if !row[p].is_zero() {
                let f = row[p].clone();
                *row = row.sub(&r.scale(&f));
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        self.originals.push(v.clone());
        true
    }

    /// The inserted vectors that were independent, in insertion order.
    pub fn basis(&self) -> &[RatVector] {
        &self.originals
    }

    /// Echelon rows (pivot entry 1, zero in every other pivot column).
    pub fn echelon(&self) -> &[RatVector] {
        &self.rows
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.dim
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }
}

/// Smallest subspace containing `seeds` and stable under every operator in
/// `ops`, by breadth-first closure. Operators act as `v -> op(v)`.
pub fn closure(
    dim: usize,
    seeds: &[RatVector],
    ops: &[&dyn Fn(&RatVector) -> RatVector],
) -> SpanBuilder {
    let mut span = SpanBuilder::new(dim);
    let mut frontier: Vec<RatVector> = Vec::new();
    for s in seeds {
        if span.insert(s) {
            frontier.push(s.clone());
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for op in ops {
                let w = op(v);
                if span.insert(&w) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    span
}
