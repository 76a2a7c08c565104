//! Exact rationals, partitions and the combinatorial number suppliers.

mod numbers;
mod partition;
mod rational;

pub use numbers::{bernoulli, binomial, catalan, factorial, partition_factorial};
pub use partition::{partitions_of, partitions_up_to, Partition};
pub use rational::{format_rat, parse_rat, rat, rat_int, Rat};
