//! 3-CNF formulas and the DIMACS reader.

use crate::error::{Error, Result};

/// A signed literal: positive value = variable, negative = its negation.
pub type Lit = i32;

/// A 3-CNF formula. Every clause has exactly three literals over distinct
/// variables with indices in `[1, n_vars]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf3 {
    pub n_vars: usize,
    pub clauses: Vec<[Lit; 3]>,
}

impl Cnf3 {
    pub fn new(n_vars: usize, clauses: Vec<[Lit; 3]>) -> Result<Self> {
        if n_vars == 0 {
            return Err(Error::Input("n_vars must be positive".into()));
        }
        for (ci, c) in clauses.iter().enumerate() {
            validate_clause(c, n_vars).map_err(|e| Error::Input(format!("clause {}: {e}", ci + 1)))?;
        }
        Ok(Cnf3 { n_vars, clauses })
    }

    /// True when the bit vector (variable 1 first) satisfies every clause.
    pub fn is_satisfied_by(&self, bits: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|&l| bits[(l.unsigned_abs() as usize) - 1] == (l > 0))
        })
    }

    /// Brute-force satisfiability over all `2^n_vars` assignments.
    pub fn satisfiable(&self) -> Result<bool> {
        if self.n_vars > 24 {
            return Err(Error::Capacity(format!(
                "CNF brute force limited to 24 variables, got {}",
                self.n_vars
            )));
        }
        let n = self.n_vars;
        Ok((0u64..1 << n).any(|i| {
            let bits: Vec<bool> = (0..n).map(|b| (i >> b) & 1 == 1).collect();
            self.is_satisfied_by(&bits)
        }))
    }
}

fn validate_clause(c: &[Lit; 3], n_vars: usize) -> std::result::Result<(), String> {
    for &l in c {
        if l == 0 {
            return Err("literal 0 is not allowed".into());
        }
        let v = l.unsigned_abs() as usize;
        if v > n_vars {
            return Err(format!("variable {v} out of range 1..={n_vars}"));
        }
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if c[i].unsigned_abs() == c[j].unsigned_abs() {
                return Err(format!("variable {} appears twice", c[i].unsigned_abs()));
            }
        }
    }
    Ok(())
}

/// Parses a DIMACS CNF file: `p cnf <vars> <clauses>` header, `c` comment
/// lines, clauses as whitespace-separated literals terminated by `0`.
/// Clauses may span lines; every clause must have exactly three literals.
pub fn parse_cnf(text: &str) -> Result<Cnf3> {
    let mut n_vars: Option<usize> = None;
    let mut declared_clauses = 0usize;
    let mut clauses: Vec<[Lit; 3]> = Vec::new();
    let mut current: Vec<Lit> = Vec::new();
    let mut clause_start_line = 0usize;

    for (li, line) in text.lines().enumerate() {
        let lineno = li + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            if n_vars.is_some() {
                return Err(Error::parse(lineno, "duplicate problem line"));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 || fields[1] != "cnf" {
                return Err(Error::parse(lineno, format!("malformed header '{line}'")));
            }
            let nv: usize = fields[2]
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad variable count '{}'", fields[2])))?;
            declared_clauses = fields[3]
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad clause count '{}'", fields[3])))?;
            if nv == 0 {
                return Err(Error::parse(lineno, "variable count must be positive"));
            }
            n_vars = Some(nv);
            continue;
        }
        let nv = n_vars.ok_or_else(|| Error::parse(lineno, "clause before 'p cnf' header"))?;
        for tok in line.split_whitespace() {
            let lit: Lit = tok
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad literal '{tok}'")))?;
            if lit == 0 {
                let c: [Lit; 3] = current.clone().try_into().map_err(|_| {
                    Error::parse(
                        lineno,
                        format!("clause has {} literals, expected 3", current.len()),
                    )
                })?;
                validate_clause(&c, nv).map_err(|e| Error::parse(lineno, e))?;
                clauses.push(c);
                current.clear();
            } else {
                if current.is_empty() {
                    clause_start_line = lineno;
                }
                current.push(lit);
            }
        }
    }
    let n_vars = n_vars.ok_or_else(|| Error::parse(0, "missing 'p cnf' header"))?;
    if !current.is_empty() {
        return Err(Error::parse(clause_start_line, "unterminated clause"));
    }
    if clauses.len() != declared_clauses {
        return Err(Error::parse(
            0,
            format!(
                "header declares {declared_clauses} clauses, found {}",
                clauses.len()
            ),
        ));
    }
    Cnf3::new(n_vars, clauses)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_file() {
        let cnf = parse_cnf("p cnf 3 1\n1 -2 3 0\n").unwrap();
        assert_eq!(cnf.n_vars, 3);
        assert_eq!(cnf.clauses, vec![[1, -2, 3]]);
    }

    #[test]
    fn skips_comments_and_joins_lines() {
        let cnf = parse_cnf("c example\np cnf 4 2\n1 2 3 0 -1\n-2 4 0\n").unwrap();
        assert_eq!(cnf.clauses.len(), 2);
        assert_eq!(cnf.clauses[1], [-1, -2, 4]);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_cnf("p cnf 3 1\n1 2 9 0\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_cnf("p cnf 3 x\n").is_err());
        assert!(parse_cnf("p cnf 3 1\n1 1 2 0\n").is_err());
        assert!(parse_cnf("p cnf 3 2\n1 2 3 0\n").is_err());
    }

    #[test]
    fn satisfiability_brute_force() {
        let sat = parse_cnf("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n").unwrap();
        assert!(sat.satisfiable().unwrap());
    }
}
