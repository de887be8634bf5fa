//! Shared fixtures for the benchmarks.

use maximin_core::instances::{generate, InstanceSpec, RegionSpec};
use maximin_core::Instance;

/// Generated benchmark instance of size `n`.
pub fn instance(n: usize, region: RegionSpec) -> Instance {
    generate(&InstanceSpec::new(n).with_region(region)).expect("generated instances are valid")
}
