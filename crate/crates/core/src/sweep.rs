//! Exhaustive sweeps over circuit partitions, run in parallel.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::euler::SignedEulerSystem;
use crate::partition::{CircuitPartition, Labelings, TransitionLabel};
use crate::report::{Report, SweepSummary};

/// Which label vectors a sweep visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// All `3^n` partitions.
    All,
    /// The `2^n` phi/chi partitions.
    Oriented,
}

pub fn labelings(n: usize, scope: Scope, cap: usize) -> Result<Vec<Vec<TransitionLabel>>> {
    if n > cap {
        return Err(Error::VertexCap { vertices: n, cap });
    }
    Ok(match scope {
        Scope::All => Labelings::all(n).collect(),
        Scope::Oriented => Labelings::oriented(n).collect(),
    })
}

pub fn describe(labels: &[TransitionLabel]) -> String {
    labels
        .iter()
        .map(|l| l.as_str())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Runs `check` on every partition in `scope`, relative to `c`. Failing
/// subjects are reported in label order.
pub fn sweep<F>(c: &SignedEulerSystem, scope: Scope, cap: usize, check: F) -> Result<SweepSummary>
where
    F: Fn(&CircuitPartition) -> Result<Report> + Sync,
{
    let all = labelings(c.graph().vertex_count(), scope, cap)?;
    let reports = all
        .par_iter()
        .map(|labels| {
            let p = CircuitPartition::from_labels(c, labels)?;
            let mut r = check(&p)?;
            r.subject = describe(labels);
            Ok(r)
        })
        .collect::<Result<Vec<Report>>>()?;
    let mut summary = SweepSummary::default();
    for r in &reports {
        summary.record(r);
    }
    Ok(summary)
}

/// Like [`sweep`] but keeps every report, for tabular output.
pub fn sweep_reports<F>(
    c: &SignedEulerSystem,
    scope: Scope,
    cap: usize,
    check: F,
) -> Result<Vec<(Vec<TransitionLabel>, CircuitPartition, Report)>>
where
    F: Fn(&CircuitPartition) -> Result<Report> + Sync,
{
    let all = labelings(c.graph().vertex_count(), scope, cap)?;
    all.into_par_iter()
        .map(|labels| {
            let p = CircuitPartition::from_labels(c, &labels)?;
            let mut r = check(&p)?;
            r.subject = describe(&labels);
            Ok((labels, p, r))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::verify_main_theorem;
    use crate::format::parse_graph;

    #[test]
    fn doubled_triangle_main_theorem() {
        let c = parse_graph("dow c: a+ b- c+ a- b+ c-\n")
            .unwrap()
            .euler_system();
        let s = sweep(&c, Scope::All, 10, |p| verify_main_theorem(&c, p)).unwrap();
        assert_eq!(s.total, 27);
        assert!(s.passed(), "{:?}", s.failed);
        let o = sweep(&c, Scope::Oriented, 10, |p| verify_main_theorem(&c, p)).unwrap();
        assert_eq!(o.total, 8);
        assert!(sweep(&c, Scope::All, 2, |p| verify_main_theorem(&c, p)).is_err());
    }
}
