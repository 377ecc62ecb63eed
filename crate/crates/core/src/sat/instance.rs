//! 2-out-of-4 SAT instances, assignments and the brute-force oracle.
//!
//! A clause is a set of four distinct variables and is satisfied when
//! exactly two of them are true. Instances are small enough that
//! exhaustive enumeration over all assignments is the reference oracle
//! for everything else in the crate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest variable count accepted by the enumeration oracle.
pub const ENUMERATION_BOUND: usize = 30;

/// A four-variable clause, 1-based variable indices.
pub type Clause4 = [usize; 4];

/// A truth assignment for `n` variables; `bits[i]` is the value of variable `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    bits: Vec<bool>,
}

impl Assignment {
    pub fn new(bits: Vec<bool>) -> Self {
        Assignment { bits }
    }

    /// Assignment from the `n` low bits of `index`, with variable 1 taken
    /// from the most significant of those bits so that enumeration by
    /// increasing index is lexicographic in (x1, x2, ..., xn).
    pub fn from_index_lex(index: u64, n: usize) -> Self {
        let bits = (0..n).map(|i| (index >> (n - 1 - i)) & 1 == 1).collect();
        Assignment { bits }
    }

    /// Assignment from a string of '0'/'1' characters, variable 1 first.
    pub fn parse(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return Err(Error::Input(format!("invalid assignment character '{c}'"))),
            }
        }
        if bits.is_empty() {
            return Err(Error::Input("empty assignment string".into()));
        }
        Ok(Assignment { bits })
    }

    pub fn n_vars(&self) -> usize {
        self.bits.len()
    }

    /// Value of variable `v` (1-based).
    pub fn get(&self, v: usize) -> bool {
        self.bits[v - 1]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Bitwise complement of the assignment.
    pub fn complement(&self) -> Self {
        Assignment {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }
}

impl std::fmt::Display for Assignment {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for b in &self.bits {
            write!(f, "{}", if *b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// A 2-out-of-4 SAT instance: `n_vars` variables and a list of clauses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatInstance24 {
    #[serde(rename = "n")]
    pub n_vars: usize,
    pub clauses: Vec<Clause4>,
}

impl SatInstance24 {
    /// Validates the instance invariants: positive even `n_vars`, all clause
    /// indices distinct within a clause and in `[1, n_vars]`.
    pub fn new(n_vars: usize, clauses: Vec<Clause4>) -> Result<Self> {
        if n_vars == 0 || n_vars % 2 != 0 {
            return Err(Error::Input(format!(
                "n_vars must be positive and even, got {n_vars}"
            )));
        }
        for (ci, c) in clauses.iter().enumerate() {
            validate_clause(c, n_vars)
                .map_err(|e| Error::Input(format!("clause {}: {e}", ci + 1)))?;
        }
        Ok(SatInstance24 { n_vars, clauses })
    }

    /// True when the assignment satisfies every clause.
    pub fn is_satisfied_by(&self, a: &Assignment) -> bool {
        self.clauses.iter().all(|c| eval_clause24(c, a))
    }

    /// True when some assignment satisfies the instance. Same exhaustive
    /// scan as [`solutions`] but stops at the first witness.
    pub fn satisfiable(&self) -> Result<bool> {
        check_enumeration_bound(self.n_vars)?;
        let masks = self.clause_masks();
        Ok((0u64..1 << self.n_vars).any(|i| masks_satisfied(&masks, i, self.n_vars)))
    }

    fn clause_masks(&self) -> Vec<u32> {
        self.clauses
            .iter()
            .map(|c| c.iter().map(|&v| 1u32 << (v - 1)).sum())
            .collect()
    }
}

fn validate_clause(c: &Clause4, n_vars: usize) -> std::result::Result<(), String> {
    for &v in c {
        if v == 0 || v > n_vars {
            return Err(format!("variable index {v} out of range 1..={n_vars}"));
        }
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if c[i] == c[j] {
                return Err(format!("repeated variable {} in clause", c[i]));
            }
        }
    }
    Ok(())
}

fn check_enumeration_bound(n_vars: usize) -> Result<()> {
    if n_vars > ENUMERATION_BOUND {
        return Err(Error::Capacity(format!(
            "brute-force oracle limited to {ENUMERATION_BOUND} variables, got {n_vars}"
        )));
    }
    Ok(())
}

/// Bit `v-1` of `index` is the value of variable `v`; here `index` packs the
/// assignment with variable 1 in the *low* bit, which is what the mask
/// representation uses internally.
fn masks_satisfied(masks: &[u32], lex_index: u64, n: usize) -> bool {
    // convert lexicographic index (x1 = msb) to the low-bit packing
    let mut packed = 0u32;
    for i in 0..n {
        if (lex_index >> (n - 1 - i)) & 1 == 1 {
            packed |= 1 << i;
        }
    }
    masks.iter().all(|&m| (packed & m).count_ones() == 2)
}

/// Evaluates one clause: true iff exactly two of the four variables are true.
pub fn eval_clause24(clause: &Clause4, a: &Assignment) -> Result<bool> {
    for &v in clause {
        if v == 0 || v > a.n_vars() {
            return Err(Error::Input(format!(
                "clause variable {v} out of range for {}-variable assignment",
                a.n_vars()
            )));
        }
    }
    Ok(clause.iter().filter(|&&v| a.get(v)).count() == 2)
}

/// All satisfying assignments of the instance, in lexicographic order of
/// (x1, x2, ..., xn). Brute force; errors above [`ENUMERATION_BOUND`] variables.
pub fn solutions(inst: &SatInstance24) -> Result<Vec<Assignment>> {
    check_enumeration_bound(inst.n_vars)?;
    let masks = inst.clause_masks();
    let n = inst.n_vars;
    Ok((0u64..1 << n)
        .filter(|&i| masks_satisfied(&masks, i, n))
        .map(|i| Assignment::from_index_lex(i, n))
        .collect())
}

/// Parses an instance from its JSON form `{"n": <int>, "clauses": [[i,j,k,l], ...]}`.
pub fn parse_instance(text: &str) -> Result<SatInstance24> {
    let raw: SatInstance24 = serde_json::from_str(text)
        .map_err(|e| Error::parse(e.line(), format!("instance JSON: {e}")))?;
    SatInstance24::new(raw.n_vars, raw.clauses)
}

/// Serializes an instance to the JSON form accepted by [`parse_instance`].
pub fn serialize_instance(inst: &SatInstance24) -> String {
    serde_json::to_string(inst).expect("instance serialization cannot fail")
}
