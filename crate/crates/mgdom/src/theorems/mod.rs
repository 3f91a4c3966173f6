//! Closed-form values and bounds for γ_tc of middle graphs, keyed by family,
//! plus the constructive certificates and the Nordhaus–Gaddum audit.
//!
//! Every entry carries the tag of the result it implements (e.g. "Thm 2.3").
//! Entries whose source statements conflict with each other, or whose stated
//! cardinality does not match the construction, are flagged `disputed`; the
//! audit prints formula and solver values side by side for those and never
//! reconciles them silently.

mod certificates;
mod nordhaus;

use std::fmt;

use thiserror::Error;

use crate::domination::{gamma_t_exact, DominationError, SolverOptions};
use crate::families::{FamilyError, FamilySpec};
use crate::graph::Graph;
use crate::middle::middle_graph;

pub use certificates::{certificate_for_corona, certificate_for_family, Certificate};
pub use nordhaus::{nordhaus_gaddum_audit, NGReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("no transcribed construction: {0}")]
    NotTranscribed(String),
    #[error("complement is disconnected")]
    ComplementDisconnected,
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Solver(#[from] DominationError),
}

/// Which corona transform a formula or certificate refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoronaKind {
    K1,
    P2,
}

impl fmt::Display for CoronaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoronaKind::K1 => write!(f, "corona-k1"),
            CoronaKind::P2 => write!(f, "corona-p2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormulaKind {
    Exact(usize),
    Bounds(usize, usize),
    Inapplicable(String),
}

/// A closed-form value or bound interval with its citation tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaResult {
    pub kind: FormulaKind,
    pub theorem: String,
    pub disputed: bool,
    pub note: String,
}

impl FormulaResult {
    fn exact(value: usize, theorem: &str) -> Self {
        FormulaResult {
            kind: FormulaKind::Exact(value),
            theorem: theorem.to_string(),
            disputed: false,
            note: String::new(),
        }
    }

    fn bounds(lo: usize, hi: usize, theorem: &str) -> Self {
        debug_assert!(lo <= hi);
        FormulaResult {
            kind: FormulaKind::Bounds(lo, hi),
            theorem: theorem.to_string(),
            disputed: false,
            note: String::new(),
        }
    }

    fn inapplicable(reason: &str) -> Self {
        FormulaResult {
            kind: FormulaKind::Inapplicable(reason.to_string()),
            theorem: String::new(),
            disputed: false,
            note: String::new(),
        }
    }

    fn noted(mut self, note: &str) -> Self {
        self.note = note.to_string();
        self
    }

    fn disputed(mut self, note: &str) -> Self {
        self.disputed = true;
        self.note = note.to_string();
        self
    }

    pub fn exact_value(&self) -> Option<usize> {
        match self.kind {
            FormulaKind::Exact(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for FormulaResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FormulaKind::Exact(v) => write!(f, "{v}")?,
            FormulaKind::Bounds(lo, hi) => write!(f, "{lo}..{hi}")?,
            FormulaKind::Inapplicable(_) => write!(f, "-")?,
        }
        if self.disputed {
            write!(f, " (disputed)")?;
        }
        Ok(())
    }
}

fn ceil_two_thirds(n: usize) -> usize {
    (2 * n).div_ceil(3)
}

/// Closed-form γ_tc(M(G)) for the covered families.
///
/// Small cases that the prose settles by isomorphism (K₃ = C₃, K_{2,2} = C₄,
/// P₃ = K_{1,2}, …) return the identified value with a note. The K₄ / W₄
/// value and the mid-range complete-bipartite band carry `disputed = true`:
/// the sources give conflicting or non-matching cardinalities there and the
/// exact solver adjudicates.
pub fn formula_gamma_tc_middle(spec: &FamilySpec) -> Result<FormulaResult, TheoremError> {
    spec.validate()?;
    let r = match *spec {
        FamilySpec::Path { n: 1 } => {
            FormulaResult::inapplicable("M(P_1) is a single vertex; gamma_tc undefined")
        }
        FamilySpec::Path { n: 2 } => {
            FormulaResult::exact(2, "Thm 3.5").noted("small case settled in the preceding prose")
        }
        FamilySpec::Path { n: 3 } => {
            FormulaResult::exact(4, "Cor 3.2").noted("P_3 = K_{1,2}")
        }
        FamilySpec::Path { n } => FormulaResult::exact(2 * n - 4, "Thm 3.5"),

        FamilySpec::Cycle { n } => FormulaResult::exact(2 * n - 3, "Thm 2.3"),

        FamilySpec::Complete { n: 1 } => {
            FormulaResult::inapplicable("M(K_1) is a single vertex; gamma_tc undefined")
        }
        FamilySpec::Complete { n: 2 } => FormulaResult::exact(2, "Thm 3.5").noted("K_2 = P_2"),
        FamilySpec::Complete { n: 3 } => FormulaResult::exact(3, "Thm 2.3").noted("K_3 = C_3"),
        FamilySpec::Complete { n: 4 } => FormulaResult::exact(3, "Thm 2.4")
            .disputed("surrounding prose claims 4; brute force confirms ceil(8/3) = 3"),
        FamilySpec::Complete { n } => FormulaResult::exact(ceil_two_thirds(n), "Thm 2.4"),

        FamilySpec::Wheel { n: 4 } => FormulaResult::exact(3, "Thm 2.4")
            .disputed("W_4 = K_4; prose claims 4 while the n>=4 formula gives 3"),
        FamilySpec::Wheel { n } => FormulaResult::exact(ceil_two_thirds(n), "Thm 2.5"),

        FamilySpec::CompleteBipartite { n1, n2 } => {
            // gamma_tc is invariant under swapping the parts.
            let (a, b) = (n1.min(n2), n1.max(n2));
            match (a, b) {
                (1, 1) => FormulaResult::exact(2, "Thm 3.5").noted("K_{1,1} = P_2"),
                (1, b) => FormulaResult::exact(2 * b, "Cor 3.2")
                    .noted("K_{1,n} is the star of order n+1"),
                (2, 2) => FormulaResult::exact(5, "Thm 2.3").noted("K_{2,2} = C_4"),
                (2, b) => FormulaResult::exact(b + 3, "Thm 2.6"),
                (3, 3) => FormulaResult::exact(5, "Thm 2.6"),
                (a, b) if b >= 2 * a => FormulaResult::exact(b, "Thm 2.6"),
                (_, b) => FormulaResult::exact(b, "Thm 2.6").disputed(
                    "constructed set does not reach the stated cardinality; solver adjudicates",
                ),
            }
        }

        FamilySpec::Star { n: 2 } => FormulaResult::exact(2, "Thm 3.5").noted("K_{1,1} = P_2"),
        FamilySpec::Star { n } => FormulaResult::exact(2 * n - 2, "Cor 3.2"),

        FamilySpec::DoubleStar { p, q } => FormulaResult::exact(2 * (p + q), "Prop 3.6"),

        FamilySpec::Diam4Tree { n } => FormulaResult::exact(2 * n - 6, "Prop 3.8"),

        FamilySpec::Spider { n: 1 } => {
            FormulaResult::exact(4, "Cor 3.2").noted("S_{1,1,1} = K_{1,2}")
        }
        FamilySpec::Spider { n: 2 } => {
            FormulaResult::exact(6, "Thm 3.5").noted("S_{1,2,2} = P_5")
        }
        FamilySpec::Spider { n } => FormulaResult::exact(2 * n + 2, "Thm 4.4"),

        FamilySpec::Friendship { n: 1 } => {
            FormulaResult::exact(3, "Thm 2.3").noted("F_1 = C_3")
        }
        FamilySpec::Friendship { n } => FormulaResult::exact(2 * n + 1, "Thm 4.5"),

        FamilySpec::RandomTree { .. } | FamilySpec::RandomConnected { .. } => {
            FormulaResult::inapplicable("no closed form for random instances")
        }
    };
    Ok(r)
}

/// γ_tc(M(G∘K₁)) and γ_tc(M(G∘P₂)) for a connected base graph.
///
/// The K₁ corona has the exact value 2n. The P₂ corona is exact only for a
/// complete base of order ≥ 3; otherwise the result is the interval
/// `[2n + γ_t(M(G)), 4n]`, with γ_t(M(G)) computed by the solver.
pub fn formula_gamma_tc_corona(
    base: &Graph,
    which: CoronaKind,
    opts: &SolverOptions,
) -> Result<FormulaResult, TheoremError> {
    let n = base.order();
    if n < 2 {
        return Err(TheoremError::BadParameter(
            "corona formulas need a base of order >= 2".into(),
        ));
    }
    if !base.is_connected() {
        return Err(TheoremError::BadParameter(
            "corona formulas need a connected base".into(),
        ));
    }
    match which {
        CoronaKind::K1 => Ok(FormulaResult::exact(2 * n, "Thm 4.1")),
        CoronaKind::P2 => {
            let complete = base.size() == n * (n - 1) / 2;
            if complete && n == 3 {
                // The written set fails outer-connectivity for K_3 (the
                // outside loses all second-row edge-vertices) and exhaustive
                // search gives 10, not 8. Reported as stated, flagged.
                return Ok(FormulaResult::exact(2 * 3 + 2, "Prop 4.3")
                    .disputed("construction is not outer-connected at n=3; solver gives 10"));
            }
            if complete && n >= 4 {
                return Ok(FormulaResult::exact(2 * n + ceil_two_thirds(n), "Prop 4.3"));
            }
            let gt = gamma_t_exact(middle_graph(base).graph(), opts)?.value;
            Ok(FormulaResult::bounds(2 * n + gt, 4 * n, "Thm 4.2"))
        }
    }
}

/// Tightest applicable interval (or exact value) for γ_tc(M(G)) from the
/// general and tree bounds, dispatched on computed structure.
pub fn bounds_gamma_tc_middle(g: &Graph) -> Result<FormulaResult, TheoremError> {
    if !g.is_connected() {
        return Err(TheoremError::BadParameter(
            "bounds require a connected graph".into(),
        ));
    }
    let n = g.order();
    let leaf_count = g.leaves().len();
    if g.is_tree() {
        if n < 2 {
            return Err(TheoremError::BadParameter(
                "tree bounds require order >= 2".into(),
            ));
        }
        if n == 2 {
            // The 2|leaf| lower bound fails on P_2 (4 > 2); the prose value
            // is exact.
            return Ok(FormulaResult::exact(2, "Thm 3.5")
                .noted("order-2 tree; interval from Cor 3.1 would be empty"));
        }
        let diam = g.diameter().expect("connected");
        if diam == 2 {
            return Ok(FormulaResult::exact(2 * n - 2, "Cor 3.2").noted("diameter-2 tree (star)"));
        }
        if diam == 3 {
            return Ok(FormulaResult::exact(2 * n - 4, "Prop 3.6").noted("diameter-3 tree"));
        }
        if diam == 4 && n >= 6 {
            // The family with every non-path vertex hanging off the center.
            let center = g
                .vertices()
                .find(|&v| g.eccentricity(v) == Some(2))
                .expect("diameter-4 tree has a radius-2 center");
            if g.degree(center) == n - 3 {
                return Ok(FormulaResult::exact(2 * n - 6, "Prop 3.8")
                    .noted("diameter-4 tree with all extra leaves on the center"));
            }
        }
        return Ok(FormulaResult::bounds(2 * leaf_count, 2 * n - 4, "Cor 3.1 + Thm 3.3"));
    }
    if n < 3 {
        return Err(TheoremError::BadParameter(
            "general bounds require order >= 3".into(),
        ));
    }
    // Any total dominating set has >= 2 vertices, which floors the 2|leaf|
    // bound for leafless graphs.
    let lo = (2 * leaf_count).max(2);
    Ok(FormulaResult::bounds(lo, n + g.size() - 1, "Thm 2.2"))
}
