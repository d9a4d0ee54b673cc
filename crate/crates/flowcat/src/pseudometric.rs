//! Sampled verification of the extended-pseudometric axioms for any
//! distance oracle: reflexivity, symmetry, and the triangle inequality.

use serde::Serialize;

/// One reflexivity failure: d(a, a) ≠ 0.
#[derive(Debug, Clone, Serialize)]
pub struct ReflexivityViolation {
    pub index: usize,
    pub value: f64,
}

/// One symmetry failure: d(a, b) ≠ d(b, a).
#[derive(Debug, Clone, Serialize)]
pub struct SymmetryViolation {
    pub a: usize,
    pub b: usize,
    pub d_ab: f64,
    pub d_ba: f64,
}

/// One triangle failure: d(a, c) > d(a, b) + d(b, c).
#[derive(Debug, Clone, Serialize)]
pub struct TriangleViolation {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub lhs: f64,
    pub rhs: f64,
}

/// A value outside [0, ∞] returned by the oracle.
#[derive(Debug, Clone, Serialize)]
pub struct DomainViolation {
    pub a: usize,
    pub b: usize,
    pub value: f64,
}

/// Everything `check_pseudometric` found. Empty violation lists certify
/// the axioms on the sample (and only on the sample).
#[derive(Debug, Clone, Default, Serialize)]
pub struct MetricReport {
    pub pairs_checked: usize,
    pub reflexivity: Vec<ReflexivityViolation>,
    pub symmetry: Vec<SymmetryViolation>,
    pub triangle: Vec<TriangleViolation>,
    pub domain: Vec<DomainViolation>,
}

impl MetricReport {
    pub fn is_clean(&self) -> bool {
        self.reflexivity.is_empty()
            && self.symmetry.is_empty()
            && self.triangle.is_empty()
            && self.domain.is_empty()
    }

    pub fn violation_count(&self) -> usize {
        self.reflexivity.len() + self.symmetry.len() + self.triangle.len() + self.domain.len()
    }
}

/// Checks every pair and ordered triple drawn from `samples` against the
/// pseudometric axioms, within absolute tolerance `tol` (use 0.0 for
/// grid-exact oracles). Violations are data, not errors; a malformed
/// oracle (negative or NaN values) is recorded under `domain` and the
/// remaining axioms are still checked where the values allow.
pub fn check_pseudometric<T>(
    dist: impl Fn(&T, &T) -> f64,
    samples: &[T],
    tol: f64,
) -> MetricReport {
    let n = samples.len();
    let mut report = MetricReport {
        pairs_checked: n * n,
        ..MetricReport::default()
    };

    let mut d = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..n {
            let v = dist(&samples[i], &samples[j]);
            if v.is_nan() || v < 0.0 {
                report.domain.push(DomainViolation { a: i, b: j, value: v });
            }
            d[i * n + j] = v;
        }
    }

    for i in 0..n {
        let v = d[i * n + i];
        if !(v.abs() <= tol) {
            report.reflexivity.push(ReflexivityViolation { index: i, value: v });
        }
    }

    for i in 0..n {
        for j in (i + 1)..n {
            let ab = d[i * n + j];
            let ba = d[j * n + i];
            let equal = (ab.is_infinite() && ba.is_infinite()) || (ab - ba).abs() <= tol;
            if !equal {
                report.symmetry.push(SymmetryViolation {
                    a: i,
                    b: j,
                    d_ab: ab,
                    d_ba: ba,
                });
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = d[i * n + k];
                let rhs = d[i * n + j] + d[j * n + k];
                // NaN comparisons are false, so malformed entries fall
                // through to the domain list instead of double-counting.
                if lhs > rhs + tol {
                    report.triangle.push(TriangleViolation {
                        a: i,
                        b: j,
                        c: k,
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn linf2(a: &(f64, f64), b: &(f64, f64)) -> f64 {
        (a.0 - b.0).abs().max((a.1 - b.1).abs())
    }

    #[test]
    fn linf_on_three_points_is_clean() {
        let pts = [(0.0, 0.0), (1.0, 1.0), (3.0, 0.0)];
        let report = check_pseudometric(linf2, &pts, 1e-9);
        assert_eq!(report.pairs_checked, 9);
        assert!(report.is_clean(), "L-infinity should satisfy all axioms");
    }

    #[test]
    fn discrete_metric_is_clean() {
        let pts = [1u32, 2, 3, 4];
        let report =
            check_pseudometric(|a, b| if a == b { 0.0 } else { 1.0 }, &pts, 0.0);
        assert!(report.is_clean());
    }

    #[test]
    fn malformed_oracle_is_reported_as_domain_violation() {
        let pts = [0u32, 1];
        let report = check_pseudometric(|_, _| -1.0, &pts, 0.0);
        assert!(!report.domain.is_empty());
        // Reflexivity still ran: d(a,a) = -1 is not 0.
        assert!(!report.reflexivity.is_empty());
    }

    #[test]
    fn triangle_violation_is_caught() {
        // d(0,2) = 5 but d(0,1)+d(1,2) = 2.
        let pts = [0usize, 1, 2];
        let d = |a: &usize, b: &usize| -> f64 {
            let (a, b) = (*a.min(b), *a.max(b));
            match (a, b) {
                (0, 2) => 5.0,
                (x, y) if x == y => 0.0,
                _ => 1.0,
            }
        };
        let report = check_pseudometric(d, &pts, 0.0);
        assert!(!report.triangle.is_empty());
        assert!(report.symmetry.is_empty());
    }

    #[test]
    fn infinite_distances_are_consistent() {
        // Two components: distance inf across, 0 within.
        let pts = [0u8, 0, 1, 1];
        let d = |a: &u8, b: &u8| if a == b { 0.0 } else { f64::INFINITY };
        let report = check_pseudometric(d, &pts, 0.0);
        assert!(report.is_clean());
    }
}
