//! Graph generators, a brute-force betweenness oracle, pointwise inequality
//! checks and the sweep engine that runs every check over a graph collection.

mod checks;
mod enumerate;
mod oracle;
mod pointwise;
mod random;
mod sweep;

pub use checks::{Check, CheckRegistry, Outcome};
pub use enumerate::{enumerate_connected_graphs, MAX_ENUMERATION_N};
pub use oracle::{naive_betweenness_oracle, naive_betweenness_oracle_up_to, ORACLE_MAX_N};
pub use pointwise::{
    betweenness_pointwise, closeness_pointwise, harmonic_pointwise, pointwise_for, verify_pointwise_inequalities,
    Inequality, PointwiseViolation,
};
pub use random::{random_connected_graph, random_connected_graph_with, seeded_rng, SweepRng, MAX_REJECTIONS, PRNG_SPEC};
pub use sweep::{run_sweep, run_sweep_with, Exemplar, GraphSource, SweepConfig, SweepReport, Tally};
