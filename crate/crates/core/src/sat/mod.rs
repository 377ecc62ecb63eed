//! SAT layer: 2-out-of-4 instances, 3-CNF input, brute-force oracle,
//! instance census and the 3-SAT reduction.

mod census;
mod cnf;
mod instance;
mod reduce;

pub use census::{
    all_clauses, all_clauses_instance, census, census_instance, CensusReport,
    CENSUS_INSTANCE_BOUND,
};
pub use cnf::{parse_cnf, Cnf3, Lit};
pub use instance::{
    eval_clause24, parse_instance, serialize_instance, solutions, Assignment, Clause4,
    SatInstance24, ENUMERATION_BOUND,
};
pub use reduce::reduce_3sat;
