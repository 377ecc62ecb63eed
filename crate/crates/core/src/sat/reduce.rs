//! Reduction from 3-SAT to 2-out-of-4 SAT.
//!
//! Every output clause demands "exactly two of four", so the output
//! constraint set is invariant under complementing all variables and no
//! variable can be pinned to a constant — only to the complement of
//! another. The construction therefore works with variable *pairs* that
//! are forced to opposite values:
//!
//! * a reference pair (T, F) fixing a truth gauge,
//! * a rail pair (pos_x, neg_x) for every input variable whose negation
//!   is needed as a clause slot,
//! * a pin network (a triangle of pair-vs-pair clauses plus a chain) that
//!   forces every pair to sum to exactly 1.
//!
//! Each input clause (lA | lB | lC), literals sorted by variable, becomes
//! two clauses over three fresh variables u, s, t:
//!
//! ```text
//!   G1: carrier(!lA) + carrier(!lB) + u + s = 2     (u = 0 forced when lA = lB = false)
//!   G2: u + carrier(lC) + F + t = 2                 (u or lC must hold)
//! ```
//!
//! G1 is shared between clauses with the same (lA, lB) prefix. In the
//! T-true gauge the pair of constraints is satisfiable exactly when
//! lA or lB or lC holds, so satisfiability is preserved in both directions.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::sat::cnf::{Cnf3, Lit};
use crate::sat::instance::{Clause4, SatInstance24};

/// Reduces a 3-CNF to a 2-out-of-4 SAT instance with the same satisfiability.
pub fn reduce_3sat(cnf: &Cnf3) -> Result<SatInstance24> {
    if cnf.clauses.is_empty() {
        let n = (cnf.n_vars.max(2) + 1) & !1;
        return SatInstance24::new(n, vec![]);
    }

    let n_in = cnf.n_vars;
    let t_var = 1usize;
    let f_var = 2usize;
    let pos = |x: usize| 2 + x;

    // sort each clause's literals by variable index; slot C is the largest
    let sorted_clauses: Vec<[Lit; 3]> = cnf
        .clauses
        .iter()
        .map(|c| {
            let mut s = *c;
            s.sort_by_key(|l| l.unsigned_abs());
            s
        })
        .collect();

    // rails: negation carriers, allocated in first-use order
    let mut next_var = 2 + n_in + 1;
    let mut rails: BTreeMap<usize, usize> = BTreeMap::new();
    let mut need_rail = |x: usize, next_var: &mut usize| -> usize {
        *rails.entry(x).or_insert_with(|| {
            let id = *next_var;
            *next_var += 1;
            id
        })
    };
    for c in &sorted_clauses {
        for &l in &c[..2] {
            if l > 0 {
                need_rail(l as usize, &mut next_var);
            }
        }
        if c[2] < 0 {
            need_rail((-c[2]) as usize, &mut next_var);
        }
    }
    // the pin network needs at least three pairs
    let mut fill = 1;
    while 1 + rails.len() < 3 {
        need_rail(fill, &mut next_var);
        fill += 1;
    }

    let carrier = |l: Lit| -> usize {
        if l > 0 {
            pos(l as usize)
        } else {
            rails[&((-l) as usize)]
        }
    };

    let mut clauses: Vec<Clause4> = Vec::new();

    // pin clauses: triangle over the first three pairs, then a chain
    let pairs: Vec<(usize, usize)> = std::iter::once((t_var, f_var))
        .chain(rails.iter().map(|(&x, &neg)| (pos(x), neg)))
        .collect();
    let pin = |a: (usize, usize), b: (usize, usize)| [a.0, a.1, b.0, b.1];
    clauses.push(pin(pairs[0], pairs[1]));
    clauses.push(pin(pairs[1], pairs[2]));
    clauses.push(pin(pairs[2], pairs[0]));
    for w in pairs.windows(2).skip(2) {
        clauses.push(pin(w[0], w[1]));
    }

    // clause gadgets, sharing G1 between clauses with equal (lA, lB)
    let mut g1_for_prefix: BTreeMap<(Lit, Lit), usize> = BTreeMap::new();
    for c in &sorted_clauses {
        let (la, lb, lc) = (c[0], c[1], c[2]);
        let u = *g1_for_prefix.entry((la, lb)).or_insert_with(|| {
            let u = next_var;
            let s = next_var + 1;
            next_var += 2;
            clauses.push([carrier(-la), carrier(-lb), u, s]);
            u
        });
        let t_slack = next_var;
        next_var += 1;
        clauses.push([u, carrier(lc), f_var, t_slack]);
    }

    let mut n_out = next_var - 1;
    if n_out % 2 != 0 {
        n_out += 1; // unconstrained pad variable
    }
    SatInstance24::new(n_out, clauses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::cnf::parse_cnf;
    use itertools::Itertools;

    fn check_preserved(cnf: &Cnf3) {
        let reduced = reduce_3sat(cnf).unwrap();
        assert_eq!(
            cnf.satisfiable().unwrap(),
            reduced.satisfiable().unwrap(),
            "satisfiability changed for {cnf:?}"
        );
    }

    #[test]
    fn empty_cnf_reduces_to_empty_instance() {
        let cnf = Cnf3::new(3, vec![]).unwrap();
        let reduced = reduce_3sat(&cnf).unwrap();
        assert!(reduced.clauses.is_empty());
        assert!(reduced.satisfiable().unwrap());
    }

    #[test]
    fn single_clause_stays_satisfiable() {
        let cnf = Cnf3::new(3, vec![[1, 2, 3]]).unwrap();
        check_preserved(&cnf);
        assert!(reduce_3sat(&cnf).unwrap().satisfiable().unwrap());
    }

    #[test]
    fn all_sign_patterns_on_three_variables_stay_unsatisfiable() {
        let clauses: Vec<[Lit; 3]> = [1i32, -1]
            .iter()
            .cartesian_product([2i32, -2])
            .cartesian_product([3i32, -3])
            .map(|((&a, b), c)| [a, b, c])
            .collect();
        let cnf = Cnf3::new(3, clauses).unwrap();
        assert!(!cnf.satisfiable().unwrap());
        let reduced = reduce_3sat(&cnf).unwrap();
        assert!(reduced.n_vars <= 26, "reduced size {}", reduced.n_vars);
        assert!(!reduced.satisfiable().unwrap());
    }

    #[test]
    fn output_invariants() {
        let cnf = parse_cnf("p cnf 4 2\n1 -2 3 0\n-1 2 4 0\n").unwrap();
        let reduced = reduce_3sat(&cnf).unwrap();
        assert_eq!(reduced.n_vars % 2, 0);
        for c in &reduced.clauses {
            let mut s = *c;
            s.sort_unstable();
            assert!(s.windows(2).all(|w| w[0] < w[1]), "repeated var in {c:?}");
        }
        check_preserved(&cnf);
    }

    #[test]
    fn exhaustive_small_cnfs_n3() {
        // all clause subsets of size <= 3 over 3 variables
        let universe: Vec<[Lit; 3]> = [1i32, -1]
            .iter()
            .cartesian_product([2i32, -2])
            .cartesian_product([3i32, -3])
            .map(|((&a, b), c)| [a, b, c])
            .collect();
        for m in 0..=3 {
            for subset in (0..universe.len()).combinations(m) {
                let cnf =
                    Cnf3::new(3, subset.iter().map(|&i| universe[i]).collect()).unwrap();
                check_preserved(&cnf);
            }
        }
    }
}
