//! The Sombor index `SO(G) = Σ_{uv∈E} √(d_u² + d_v²)` and two general
//! inequalities it satisfies: a strict upper bound on the index after an
//! edge deletion, and strict superadditivity over the monomers of a
//! point-attached graph.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::graph::{Graph, GraphError};
use crate::radical::{cmp_numeric, default_margin, NumericOrdering, RadicalSum};

/// Verdict for one inequality check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The claimed strict inequality holds with margin to spare.
    Holds,
    /// Both sides agree exactly (canonical forms identical).
    ExactEqual,
    /// The claim fails.
    Fails,
    /// The floating-point gap is below the separation margin.
    Inconclusive,
    /// The claim's preconditions are not met, so nothing is asserted.
    NotApplicable,
}

/// One checked inequality: both sides exactly, plus the verdict and the
/// float evaluation of the exact difference `lhs − rhs`.
#[derive(Clone, Debug)]
pub struct BoundCheck {
    pub lhs: RadicalSum,
    pub rhs: RadicalSum,
    pub verdict: Verdict,
    pub gap: f64,
}

impl BoundCheck {
    fn strict(lhs: RadicalSum, rhs: RadicalSum, want: NumericOrdering) -> Self {
        let ordering = cmp_numeric(&lhs, &rhs, default_margin(&lhs, &rhs));
        let verdict = if ordering == want {
            Verdict::Holds
        } else {
            match ordering {
                NumericOrdering::Inconclusive => Verdict::Inconclusive,
                // Exact equality still falsifies a strict claim.
                _ => Verdict::Fails,
            }
        };
        let gap = (&lhs - &rhs).eval_f64();
        Self {
            lhs,
            rhs,
            verdict,
            gap,
        }
    }

    fn not_applicable(lhs: RadicalSum, rhs: RadicalSum) -> Self {
        let gap = (&lhs - &rhs).eval_f64();
        Self {
            lhs,
            rhs,
            verdict: Verdict::NotApplicable,
            gap,
        }
    }
}

/// Exact Sombor index of a graph.
pub fn sombor_index(g: &Graph) -> RadicalSum {
    let mut sum = RadicalSum::zero();
    for (u, v) in g.edges() {
        let du = g.degree(u) as u64;
        let dv = g.degree(v) as u64;
        sum += &RadicalSum::sqrt_of(du * du + dv * dv)
            .expect("edge endpoints have positive degree");
    }
    sum
}

/// `|a − b| / √2` as an exact radical sum, i.e. `(|a − b|/2)·√2`.
pub(crate) fn abs_diff_over_sqrt2(a: usize, b: usize) -> RadicalSum {
    let d = a.abs_diff(b) as i64;
    RadicalSum::multiple_of_sqrt(BigRational::new(BigInt::from(d), BigInt::from(2)), 2)
        .expect("radicand 2 is valid")
}

/// Checks `SO(G − uv) < SO(G) − |d_u − d_v|/√2`, with degrees taken in `G`
/// before the deletion. Strict for every edge of every graph.
pub fn deletion_bound(g: &Graph, u: usize, v: usize) -> Result<BoundCheck, GraphError> {
    let deleted = g.delete_edge(u, v)?;
    let lhs = sombor_index(&deleted);
    let rhs = &sombor_index(g) - &abs_diff_over_sqrt2(g.degree(u), g.degree(v));
    Ok(BoundCheck::strict(lhs, rhs, NumericOrdering::Less))
}

/// Convenience wrapper: true iff [`deletion_bound`] conclusively holds.
pub fn deletion_bound_holds(g: &Graph, u: usize, v: usize) -> Result<bool, GraphError> {
    Ok(deletion_bound(g, u, v)?.verdict == Verdict::Holds)
}

/// Checks strict superadditivity `SO(G) > Σᵢ SO(Gᵢ)` for a graph built by
/// point-attaching the given monomers.
///
/// The attachment itself is the caller's claim; this function only
/// compares the index values. With fewer than two monomers, or with no
/// edge among them, strictness can fail vacuously (a bouquet of isolated
/// vertices attains equality), so those cases report `NotApplicable`.
pub fn monomer_sum_bound(g: &Graph, monomers: &[Graph]) -> BoundCheck {
    let lhs = sombor_index(g);
    let mut rhs = RadicalSum::zero();
    for m in monomers {
        rhs += &sombor_index(m);
    }
    if monomers.len() < 2 || monomers.iter().all(|m| m.edge_count() == 0) {
        return BoundCheck::not_applicable(lhs, rhs);
    }
    BoundCheck::strict(lhs, rhs, NumericOrdering::Greater)
}

/// Convenience wrapper: true iff [`monomer_sum_bound`] conclusively holds.
pub fn monomer_sum_bound_holds(g: &Graph, monomers: &[Graph]) -> bool {
    monomer_sum_bound(g, monomers).verdict == Verdict::Holds
}
