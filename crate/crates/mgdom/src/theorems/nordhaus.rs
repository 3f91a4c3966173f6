//! Nordhaus–Gaddum audit: γ_tc(M(G)) + γ_tc(M(Ḡ)) against the sum bounds.

use crate::domination::{gamma_tc_exact, SolverOptions};
use crate::graph::Graph;
use crate::middle::middle_graph;

use super::TheoremError;

/// Solver-computed Nordhaus–Gaddum data for a graph and its complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NGReport {
    pub n: usize,
    pub m: usize,
    pub value_g: usize,
    pub value_gbar: usize,
    pub sum: usize,
    /// 2|leaf(G)| + 2|leaf(Ḡ)|.
    pub lower: usize,
    /// (n²+3n−4)/2, refined to (n²+3n−8)/2 when G is a tree.
    pub upper: usize,
    pub bounds_hold: bool,
    pub tight_lower: bool,
}

/// Computes γ_tc for both middle graphs and checks the sum bounds.
///
/// Requires `g` and its complement to be connected and n ≥ 4. A bound
/// violation is data (`bounds_hold = false`), not an error.
pub fn nordhaus_gaddum_audit(
    g: &Graph,
    opts: &SolverOptions,
) -> Result<NGReport, TheoremError> {
    let n = g.order();
    if n < 4 {
        return Err(TheoremError::BadParameter(
            "the audit requires order >= 4".into(),
        ));
    }
    if !g.is_connected() {
        return Err(TheoremError::BadParameter(
            "the audit requires a connected graph".into(),
        ));
    }
    let gbar = g.complement();
    if !gbar.is_connected() {
        return Err(TheoremError::ComplementDisconnected);
    }
    let value_g = gamma_tc_exact(middle_graph(g).graph(), opts)?.value;
    let value_gbar = gamma_tc_exact(middle_graph(&gbar).graph(), opts)?.value;
    let sum = value_g + value_gbar;
    let lower = 2 * g.leaves().len() + 2 * gbar.leaves().len();
    let upper = if g.is_tree() {
        (n * n + 3 * n - 8) / 2
    } else {
        (n * n + 3 * n - 4) / 2
    };
    Ok(NGReport {
        n,
        m: g.size(),
        value_g,
        value_gbar,
        sum,
        lower,
        upper,
        bounds_hold: lower <= sum && sum <= upper,
        tight_lower: sum == lower,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    #[test]
    fn path4_is_tight() {
        let p4 = FamilySpec::Path { n: 4 }.generate().unwrap();
        let report = nordhaus_gaddum_audit(&p4, &SolverOptions::default()).unwrap();
        assert_eq!(report.sum, 8);
        assert_eq!(report.lower, 8);
        assert_eq!(report.upper, 10);
        assert!(report.bounds_hold);
        assert!(report.tight_lower);
        assert_eq!(report.value_g, 4);
        assert_eq!(report.value_gbar, 4);
    }

    #[test]
    fn star_complement_is_rejected() {
        let star = FamilySpec::Star { n: 5 }.generate().unwrap();
        assert!(matches!(
            nordhaus_gaddum_audit(&star, &SolverOptions::default()),
            Err(TheoremError::ComplementDisconnected)
        ));
    }

    #[test]
    fn self_complementary_cycle() {
        let c5 = FamilySpec::Cycle { n: 5 }.generate().unwrap();
        let report = nordhaus_gaddum_audit(&c5, &SolverOptions::default()).unwrap();
        assert_eq!(report.sum, 14);
        assert_eq!(report.upper, 18);
        assert!(report.bounds_hold);
        assert!(!report.tight_lower);
    }

    #[test]
    fn small_orders_are_rejected() {
        let p3 = FamilySpec::Path { n: 3 }.generate().unwrap();
        assert!(matches!(
            nordhaus_gaddum_audit(&p3, &SolverOptions::default()),
            Err(TheoremError::BadParameter(_))
        ));
    }
}
