//! Instance census: satisfiability statistics over every m-clause instance
//! on n variables.

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::sat::instance::{Clause4, SatInstance24};

/// Upper bound on the number of instances a census will enumerate.
pub const CENSUS_INSTANCE_BOUND: u64 = 20_000_000;

/// Result of [`census`]: totals plus the per-instance solution counts in
/// clause-combination enumeration order.
#[derive(Debug, Clone)]
pub struct CensusReport {
    pub n_vars: usize,
    pub m_clauses: usize,
    pub total_instances: u64,
    pub satisfiable_instances: u64,
    pub solution_counts: Vec<u32>,
}

/// All `C(n,4)` four-variable clauses on `n` variables, in lexicographic order.
pub fn all_clauses(n: usize) -> Result<Vec<Clause4>> {
    if n < 4 {
        return Err(Error::Input(format!("need at least 4 variables, got {n}")));
    }
    Ok((1..=n)
        .combinations(4)
        .map(|c| [c[0], c[1], c[2], c[3]])
        .collect())
}

/// The instance consisting of every clause on `n` variables.
pub fn all_clauses_instance(n: usize) -> Result<SatInstance24> {
    SatInstance24::new(n, all_clauses(n)?)
}

/// The `index`-th m-subset of the clause universe on `n` variables, in
/// combination enumeration order (the order used by [`census`]).
pub fn census_instance(n: usize, m: usize, index: u64) -> Result<SatInstance24> {
    let clauses = all_clauses(n)?;
    let inst = (0..clauses.len())
        .combinations(m)
        .nth(index as usize)
        .ok_or_else(|| Error::Input(format!("census index {index} out of range")))?;
    SatInstance24::new(n, inst.into_iter().map(|j| clauses[j]).collect())
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Counts satisfiable instances among all m-subsets of the clause universe on
/// `n` variables, along with the number of solutions of each instance.
///
/// Satisfaction is precomputed per assignment as a clause bitmask, so each
/// instance costs one subset check per assignment.
pub fn census(n: usize, m: usize) -> Result<CensusReport> {
    if n % 2 != 0 {
        return Err(Error::Input(format!("n must be even, got {n}")));
    }
    if n > 16 {
        return Err(Error::Capacity(format!("census limited to n <= 16, got {n}")));
    }
    let clauses = all_clauses(n)?;
    let total = binomial(clauses.len() as u64, m as u64);
    if total > CENSUS_INSTANCE_BOUND {
        return Err(Error::Capacity(format!(
            "census over {total} instances exceeds bound {CENSUS_INSTANCE_BOUND}"
        )));
    }

    // clause-satisfaction bitmask per assignment
    let sat_masks: Vec<u64> = (0..1u64 << n)
        .map(|packed| {
            let mut mask = 0u64;
            for (j, c) in clauses.iter().enumerate() {
                let trues = c.iter().filter(|&&v| (packed >> (v - 1)) & 1 == 1).count();
                if trues == 2 {
                    mask |= 1 << j;
                }
            }
            mask
        })
        .collect();

    let subsets: Vec<u64> = (0..clauses.len())
        .combinations(m)
        .map(|idxs| idxs.into_iter().fold(0u64, |acc, j| acc | (1 << j)))
        .collect();
    debug_assert_eq!(subsets.len() as u64, total);

    let solution_counts: Vec<u32> = subsets
        .par_iter()
        .map(|&inst_mask| {
            sat_masks
                .iter()
                .filter(|&&sm| sm & inst_mask == inst_mask)
                .count() as u32
        })
        .collect();

    let satisfiable = solution_counts.iter().filter(|&&c| c > 0).count() as u64;
    Ok(CensusReport {
        n_vars: n,
        m_clauses: m,
        total_instances: total,
        satisfiable_instances: satisfiable,
        solution_counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::solutions;

    #[test]
    fn census_6_8_matches_known_totals() {
        let report = census(6, 8).unwrap();
        assert_eq!(report.total_instances, 6435);
        assert_eq!(report.satisfiable_instances, 90);
        for &c in &report.solution_counts {
            assert!(c == 0 || c == 2);
        }
    }

    #[test]
    fn census_6_15_single_unsatisfiable_instance() {
        let report = census(6, 15).unwrap();
        assert_eq!(report.total_instances, 1);
        assert_eq!(report.satisfiable_instances, 0);
    }

    #[test]
    fn satisfiable_census_instances_have_complement_solutions() {
        let report = census(6, 8).unwrap();
        let mut seen = 0;
        for (idx, &count) in report.solution_counts.iter().enumerate() {
            if count == 0 {
                continue;
            }
            seen += 1;
            let inst = census_instance(6, 8, idx as u64).unwrap();
            let sols = solutions(&inst).unwrap();
            assert_eq!(sols.len(), 2);
            assert_eq!(sols[1], sols[0].complement());
        }
        assert_eq!(seen, 90);
    }

    #[test]
    fn census_capacity_guard() {
        assert!(matches!(census(6, 7), Ok(_)));
        assert!(matches!(census(16, 8), Err(Error::Capacity(_))));
    }
}
