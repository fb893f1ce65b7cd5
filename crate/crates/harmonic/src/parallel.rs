//! Runs the items of a [`Plan`] on a pool of scoped threads.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;
use std::thread;

use harmonic_core::verify::{Plan, Record, VerificationReport};
use harmonic_core::Result;

/// Runs `plan` with up to `jobs` workers. Records come back in plan order, so
/// the report does not depend on `jobs` or on scheduling.
pub fn run_plan(plan: &Plan, jobs: usize) -> Result<VerificationReport> {
    let jobs = jobs.clamp(1, plan.items.len().max(1));
    if jobs == 1 {
        return plan.run();
    }
    let slots: Vec<OnceLock<Result<Vec<Record>>>> = plan.items.iter().map(|_| OnceLock::new()).collect();
    let next = AtomicUsize::new(0);
    thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(item) = plan.items.get(i) else { break };
                let _ = slots[i].set(plan.run_item(item));
            });
        }
    });
    let mut report = VerificationReport::new();
    for slot in slots {
        report.extend(slot.into_inner().expect("every item ran")?);
    }
    Ok(report)
}

/// Available cores, or 1 when unknown.
pub fn default_jobs() -> usize {
    thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use harmonic_core::verify::CheckKind;
    use harmonic_core::Precision;

    #[test]
    fn parallel_matches_sequential() {
        let plan = Plan::new(40, Precision::DEFAULT, &CheckKind::ALL).unwrap();
        let a = run_plan(&plan, 1).unwrap();
        let b = run_plan(&plan, 4).unwrap();
        assert_eq!(a.records().len(), b.records().len());
        for (x, y) in a.records().iter().zip(b.records()) {
            assert_eq!(x.check, y.check);
            assert_eq!(x.params, y.params);
            assert_eq!(x.verdict, y.verdict);
        }
    }
}
