use serde::{Deserialize, Serialize};

use super::polyrep::{act_y, commutator_on, dunkl};
use crate::error::Result;
use crate::poly::PolyC;

/// Defining relation of the algebra checked through the Dunkl representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `[D_i, D_j] = 0`
    DunklCommute,
    /// `[D_i, x_j] = c s_ij` for `i != j`, `1 - c Σ_k s_ik` for `i = j`
    DunklX,
    /// `D_i` agrees with `y_i` acting on the induced module.
    MatchesInduced,
}

/// Relation broken on a given polynomial; indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationFailure {
    pub relation: Relation,
    pub i: usize,
    pub j: usize,
}

/// Every relation instance in which `f` is a counterexample; empty when all hold.
pub fn relation_failures(f: &PolyC) -> Result<Vec<RelationFailure>> {
    let n = f.nvars();
    let vars = f.vars();
    let d: Vec<PolyC> = (0..n).map(|i| dunkl(i, f)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut fail = |relation, i: usize, j: usize| {
        out.push(RelationFailure {
            relation,
            i: i + 1,
            j: j + 1,
        })
    };
    for i in 0..n {
        if d[i] != act_y(i, f) {
            fail(Relation::MatchesInduced, i, i);
        }
        for j in 0..n {
            let xj = PolyC::var(vars.clone(), j);
            if dunkl(i, &xj.mul(f))?.sub(&xj.mul(&d[i])) != commutator_on(i, j, f) {
                fail(Relation::DunklX, i, j);
            }
            if j > i && dunkl(i, &d[j])? != dunkl(j, &d[i])? {
                fail(Relation::DunklCommute, i, j);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::var_names;
    use crate::random;

    #[test]
    fn random_polynomials_satisfy_relations() {
        let mut rng = random::rng(17);
        for n in 1..=3 {
            let f = random::polynomial(&mut rng, var_names("x", n), 4, 5, 9).to_c();
            assert!(relation_failures(&f).unwrap().is_empty());
        }
    }
}
