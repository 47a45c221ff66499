use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{large_frobenius_group, GroupSpec};

use super::checks::{check_frobenius_counts, run_checks};
use super::instance::{InstanceAnalysis, ROOT_BASE};
use super::report::{InstanceReport, RunConfig, SuiteReport};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

fn prime_divisors(n: u64) -> Vec<u32> {
    crate::ffla::prime_divisors(n).into_iter().map(|p| p as u32).collect()
}

/// `(spec, p)` pairs for the verification run: every catalog group of
/// order at most `max_order` at each prime dividing its order, plus the
/// large Frobenius group at its own prime when `large` is set.
pub fn suite_instances(max_order: usize, large: bool) -> Vec<(GroupSpec, u32)> {
    let mut out = Vec::new();
    for spec in crate::group::default_catalog(large) {
        if let GroupSpec::Frobenius(p) = spec {
            out.push((spec, p as u32));
            continue;
        }
        let order = match spec.expected_order() {
            Some(n) => n,
            None => match spec.build_capped(max_order) {
                Ok(g) => g.order() as u64,
                Err(_) => continue,
            },
        };
        if order > max_order as u64 {
            continue;
        }
        for p in prime_divisors(order) {
            out.push((spec.clone(), p));
        }
    }
    out
}

/// Analyzes one instance and runs every check. Errors are recorded in the
/// report rather than returned.
pub fn analyze_instance(spec: &GroupSpec, p: u32, full_algebra_cap: usize) -> InstanceReport {
    let mut rep = InstanceReport {
        group: spec.to_string(),
        name: String::new(),
        order: 0,
        p,
        s: 0,
        root_base: ROOT_BASE.into(),
        blocks: Vec::new(),
        checks: Vec::new(),
        error: None,
    };
    let mut run = || -> Result<()> {
        if !crate::ffla::is_prime(p as u64) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        let group = spec.build()?;
        rep.name = group.name().to_string();
        rep.order = group.order();
        let inst = InstanceAnalysis::new(spec.clone(), group, p, full_algebra_cap)?;
        rep.s = inst.ctx.field().s();
        rep.blocks = inst.summaries();
        rep.checks = run_checks(&inst);
        if let GroupSpec::Frobenius(q) = spec {
            rep.checks.push(check_frobenius_counts(&large_frobenius_group(*q)?));
        }
        Ok(())
    };
    if let Err(e) = run() {
        rep.error = Some(e.to_string());
    }
    rep
}

/// Runs the instances on `jobs` threads; the output order is the input
/// order whatever the thread count.
pub fn run_instances(instances: &[(GroupSpec, u32)], full_algebra_cap: usize, jobs: usize) -> Result<Vec<InstanceReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    Ok(pool.install(|| {
        instances.par_iter().map(|(spec, p)| analyze_instance(spec, *p, full_algebra_cap)).collect()
    }))
}

pub fn run_suite(config: &RunConfig, jobs: usize) -> Result<SuiteReport> {
    let instances = suite_instances(config.max_order, config.large);
    Ok(SuiteReport {
        tool_version: TOOL_VERSION.into(),
        config: config.clone(),
        instances: run_instances(&instances, config.full_algebra_cap, jobs)?,
    })
}
