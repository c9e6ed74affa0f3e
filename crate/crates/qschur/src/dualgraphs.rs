//! Up and down operators on the free module over compositions, the dual
//! graded and dual filtered graph identities, and DOT export.
//!
//! With U, Ut the up operators of Rc, Lc and D, Dt the down operators of Qc,
//! Qct (Dt sums over every nonempty index set), the four identities are
//!
//!   DU  - UD  = Id          D Ut - Ut D  = Id
//!   DtU - UDt = Dt + Id     Dt Ut - Ut Dt = Dt + Id
//!
//! checked vertex by vertex over all compositions up to a size bound.

use crate::compositions::{compositions_of, compositions_up_to, Composition};
use crate::formal::FormalSum;
use crate::posets::{covers_down_q, covers_down_qt, covers_up_l, covers_up_r};
use std::fmt;

fn linear(
    v: &FormalSum<Composition>,
    f: impl Fn(&Composition) -> FormalSum<Composition>,
) -> FormalSum<Composition> {
    let mut out = FormalSum::zero();
    for (c, k) in v.terms() {
        out += f(c).scaled(k);
    }
    out
}

/// U: sum of the Rc up-covers, linearly extended.
pub fn apply_u(v: &FormalSum<Composition>) -> FormalSum<Composition> {
    linear(v, |c| covers_up_r(c))
}

/// D: sum of the Qc down-covers, linearly extended.
pub fn apply_d(v: &FormalSum<Composition>) -> FormalSum<Composition> {
    linear(v, |c| covers_down_q(c))
}

/// Ut: sum of the Lc up-covers, linearly extended.
pub fn apply_ut(v: &FormalSum<Composition>) -> FormalSum<Composition> {
    linear(v, |c| covers_up_l(c))
}

/// Dt: sum of the Qct down-edges (all nonempty index sets), linearly
/// extended.
pub fn apply_dt(v: &FormalSum<Composition>) -> FormalSum<Composition> {
    linear(v, |c| covers_down_qt(c))
}

/// Which commutator identity to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphIdentity {
    /// DU - UD = Id
    RcQc,
    /// DtU - UDt = Dt + Id
    RcQct,
    /// D Ut - Ut D = Id
    LcQc,
    /// Dt Ut - Ut Dt = Dt + Id
    LcQct,
}

impl fmt::Display for GraphIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GraphIdentity::RcQc => "DU - UD = Id on (Rc, Qc)",
            GraphIdentity::RcQct => "DtU - UDt = Dt + Id on (Rc, Qct)",
            GraphIdentity::LcQc => "DUt - UtD = Id on (Lc, Qc)",
            GraphIdentity::LcQct => "DtUt - UtDt = Dt + Id on (Lc, Qct)",
        };
        write!(f, "{s}")
    }
}

/// Result of one identity sweep: failures list the vertex with both sides.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub checked: usize,
    pub max_size: u32,
    pub failures: Vec<(Composition, FormalSum<Composition>, FormalSum<Composition>)>,
}

/// Checks the identity on every composition of size at most `max_size`.
pub fn verify_identity(which: GraphIdentity, max_size: u32) -> IdentityReport {
    let mut report = IdentityReport {
        checked: 0,
        max_size,
        failures: Vec::new(),
    };
    for c in compositions_up_to(max_size) {
        let x = FormalSum::singleton(c.clone());
        let (lhs, rhs) = match which {
            GraphIdentity::RcQc => (apply_d(&apply_u(&x)) - apply_u(&apply_d(&x)), x.clone()),
            GraphIdentity::RcQct => (
                apply_dt(&apply_u(&x)) - apply_u(&apply_dt(&x)),
                apply_dt(&x) + x.clone(),
            ),
            GraphIdentity::LcQc => (apply_d(&apply_ut(&x)) - apply_ut(&apply_d(&x)), x.clone()),
            GraphIdentity::LcQct => (
                apply_dt(&apply_ut(&x)) - apply_ut(&apply_dt(&x)),
                apply_dt(&x) + x.clone(),
            ),
        };
        report.checked += 1;
        if lhs != rhs {
            report.failures.push((c, lhs, rhs));
        }
    }
    report
}

/// Which poset to draw.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PosetKind {
    Rc,
    Lc,
    Qc,
    Qct,
}

impl PosetKind {
    pub fn name(self) -> &'static str {
        match self {
            PosetKind::Rc => "Rc",
            PosetKind::Lc => "Lc",
            PosetKind::Qc => "Qc",
            PosetKind::Qct => "Qct",
        }
    }
}

/// Graphviz DOT text for the poset restricted to sizes 0..=max_size. Nodes
/// are grouped into ranks by size; edges point from the smaller composition
/// to the larger and carry their multiplicity as a label.
pub fn export_dot(which: PosetKind, max_size: u32) -> String {
    use std::fmt::Write;
    let mut dot = String::new();
    writeln!(dot, "digraph {} {{", which.name()).unwrap();
    writeln!(dot, "  rankdir=BT;").unwrap();
    writeln!(dot, "  node [shape=box];").unwrap();
    for n in 0..=max_size {
        let comps = compositions_of(n);
        write!(dot, "  {{ rank=same;").unwrap();
        for c in &comps {
            write!(dot, " \"{c}\";").unwrap();
        }
        writeln!(dot, " }}").unwrap();
    }
    for c in compositions_up_to(max_size) {
        let edges: FormalSum<Composition> = match which {
            // up-edges out of c stay within the size bound only for
            // |c| < max_size
            PosetKind::Rc | PosetKind::Lc => {
                if c.size() == max_size {
                    FormalSum::zero()
                } else if which == PosetKind::Rc {
                    covers_up_r(&c)
                } else {
                    covers_up_l(&c)
                }
            }
            // down-edges out of c land on smaller compositions; draw them
            // upward as smaller -> c
            PosetKind::Qc => covers_down_q(&c),
            PosetKind::Qct => covers_down_qt(&c),
        };
        for (other, mult) in edges.terms() {
            let (lo, hi) = match which {
                PosetKind::Rc | PosetKind::Lc => (&c, other),
                PosetKind::Qc | PosetKind::Qct => (other, &c),
            };
            writeln!(dot, "  \"{lo}\" -> \"{hi}\" [label=\"{mult}\"];").unwrap();
        }
    }
    writeln!(dot, "}}").unwrap();
    dot
}
