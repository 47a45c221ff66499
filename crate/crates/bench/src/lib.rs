//! Benchmark inputs shared by the criterion targets.

use blockloewy::group::{GroupRef, GroupSpec};

pub fn group(spec: &str) -> GroupRef {
    spec.parse::<GroupSpec>().expect("valid spec").build().expect("group builds")
}
