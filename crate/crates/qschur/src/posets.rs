//! The four composition posets and standard skew composition tableaux.
//!
//! Covers are one application of an operator, with zero parts flattened away:
//!
//!   * Rc: up-covers by `jdt(i)`
//!   * Lc: up-covers by `add_box(i)`
//!   * Qc: down-covers by `remove_box(i)`
//!   * Qct: down-edges by `remove_set(I)` over nonempty index sets I (these
//!     drop the size by |I|, so they are not graded covers)
//!
//! Cover results come back as formal sums whose coefficients count the
//! producing indices or index sets. The empty composition is the minimum of
//! all four orders.
//!
//! A saturated chain beta = a^0 < a^1 < ... < a^m = alpha in Lc labels the
//! box added at step i with the entry m-i+1, giving the standard skew
//! composition tableau of shape alpha // beta. Its descent set is
//! { j : j+1 sits weakly right of j }, read off by columns alone.

use crate::compositions::{comp_of, flatten, Composition, DescentSet};
use crate::formal::FormalSum;
use crate::operators::{add_box, jdt, remove_box};
use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

/// Up-covers in Rc: flattened `jdt(i)` results for i = 1, ..., max+1.
pub fn covers_up_r(c: &Composition) -> FormalSum<Composition> {
    let mut out = FormalSum::zero();
    for i in 1..=c.max_part() + 1 {
        if let Some(v) = jdt(i, c.parts()) {
            out.add_term(flatten(&v), 1);
        }
    }
    out
}

/// Up-covers in Lc: flattened `add_box(i)` results for i = 1, ..., max+1.
pub fn covers_up_l(c: &Composition) -> FormalSum<Composition> {
    let mut out = FormalSum::zero();
    for i in 1..=c.max_part() + 1 {
        if let Some(v) = add_box(i, c.parts()) {
            out.add_term(flatten(&v), 1);
        }
    }
    out
}

/// Down-covers in Qc: flattened `remove_box(i)` results for i = 1, ..., max.
pub fn covers_down_q(c: &Composition) -> FormalSum<Composition> {
    let mut out = FormalSum::zero();
    for i in 1..=c.max_part() {
        if let Some(v) = remove_box(i, c.parts()) {
            out.add_term(flatten(&v), 1);
        }
    }
    out
}

/// Down-edges in Qct: flattened `remove_set(I)` results over every nonempty
/// index set I for which the composite is defined. Each defined I is counted
/// once; the walk picks the largest index first, exactly the order
/// `remove_set` uses, so definedness is decided as the set is built.
pub fn covers_down_qt(c: &Composition) -> FormalSum<Composition> {
    fn go(cur: &[u32], bound: u32, out: &mut FormalSum<Composition>) {
        let mut values: Vec<u32> = cur.iter().copied().filter(|&p| p > 0 && p < bound).collect();
        values.sort_unstable();
        values.dedup();
        for i in values {
            let next = remove_box(i, cur).expect("present part");
            out.add_term(flatten(&next), 1);
            go(&next, i, out);
        }
    }
    let mut out = FormalSum::zero();
    go(c.parts(), u32::MAX, &mut out);
    out
}

/// The Lc-predecessors of c with the operator index that recovers c:
/// dropping a leading part 1 (index 1), or decrementing a part v whose
/// prefix has no part v-1 (index v).
pub fn predecessors_l(c: &Composition) -> Vec<(u32, Composition)> {
    let parts = c.parts();
    let mut out = Vec::new();
    if parts.first() == Some(&1) {
        out.push((1, Composition::new(parts[1..].to_vec())));
    }
    for p in 0..parts.len() {
        let v = parts[p];
        if v >= 2 && !parts[..p].contains(&(v - 1)) {
            let mut q = parts.to_vec();
            q[p] = v - 1;
            out.push((v, Composition::new(q)));
        }
    }
    out
}

thread_local! {
    static LEQ_CACHE: RefCell<HashMap<(Composition, Composition), bool>> =
        RefCell::new(HashMap::new());
}

/// Whether inner <= outer in Lc. Memoized across calls.
pub fn leq_l(inner: &Composition, outer: &Composition) -> bool {
    if inner == outer {
        return true;
    }
    if inner.size() >= outer.size()
        || inner.len() > outer.len()
        || inner.max_part() > outer.max_part()
    {
        return false;
    }
    let key = (inner.clone(), outer.clone());
    if let Some(hit) = LEQ_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return hit;
    }
    let answer = predecessors_l(outer)
        .into_iter()
        .any(|(_, pred)| leq_l(inner, &pred));
    LEQ_CACHE.with(|c| c.borrow_mut().insert(key, answer));
    answer
}

/// A saturated chain in Lc from `steps[0]` up to `steps.last()`;
/// `indices[i]` is the `add_box` index producing `steps[i+1]` from
/// `steps[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainL {
    pub steps: Vec<Composition>,
    pub indices: Vec<u32>,
}

/// All saturated chains from inner up to outer in Lc; empty when
/// inner is not below outer. A chain of length zero is returned when they
/// are equal.
pub fn chains_l(inner: &Composition, outer: &Composition) -> Vec<ChainL> {
    let mut out = Vec::new();
    if !leq_l(inner, outer) {
        return out;
    }
    // walk down from outer, recording (index, composition) pairs
    let mut trail: Vec<(u32, Composition)> = Vec::new();
    fn go(
        cur: &Composition,
        inner: &Composition,
        trail: &mut Vec<(u32, Composition)>,
        out: &mut Vec<ChainL>,
    ) {
        if cur == inner {
            let mut steps = vec![inner.clone()];
            let mut indices = Vec::new();
            for (idx, comp) in trail.iter().rev() {
                indices.push(*idx);
                steps.push(comp.clone());
            }
            out.push(ChainL { steps, indices });
            return;
        }
        for (idx, pred) in predecessors_l(cur) {
            if leq_l(inner, &pred) {
                trail.push((idx, cur.clone()));
                go(&pred, inner, trail, out);
                trail.pop();
            }
        }
    }
    go(outer, inner, &mut trail, &mut out);
    out
}

/// A skew shape outer // inner. Plain data: validity (inner <= outer in Lc)
/// is a query, because signed skew sums are allowed to carry invalid pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    pub outer: Composition,
    pub inner: Composition,
}

impl SkewShape {
    pub fn new(outer: Composition, inner: Composition) -> Self {
        SkewShape { outer, inner }
    }

    pub fn straight(outer: Composition) -> Self {
        SkewShape {
            outer,
            inner: Composition::empty(),
        }
    }

    pub fn is_valid(&self) -> bool {
        leq_l(&self.inner, &self.outer)
    }

    /// Number of skew boxes, outer size minus inner size.
    pub fn size(&self) -> i64 {
        self.outer.size() as i64 - self.inner.size() as i64
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}//{}", self.outer, self.inner)
        }
    }
}

/// Rows of a standard skew composition tableau, top row first. `None` marks
/// an inner box, `Some(e)` a skew box with entry e.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tableau {
    pub rows: Vec<Vec<Option<u32>>>,
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                match cell {
                    None => write!(f, "•")?,
                    Some(e) => write!(f, "{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// Fills the boxes added along a chain: the step from steps[i-1] to steps[i]
/// writes entry m-i+1, where m is the chain length. An index-1 step inserts
/// a new one-box row at the top; an index-j step appends to the first row of
/// length j-1. Boxes keep their rows as later rows are inserted above.
pub fn tableau_of_chain(chain: &ChainL) -> Tableau {
    let m = chain.indices.len();
    let inner = &chain.steps[0];
    let mut rows: Vec<Vec<Option<u32>>> = inner
        .parts()
        .iter()
        .map(|&p| vec![None; p as usize])
        .collect();
    for (step, pair) in chain.steps.windows(2).enumerate() {
        let (prev, next) = (&pair[0], &pair[1]);
        let entry = (m - step) as u32;
        if next.len() == prev.len() + 1 {
            rows.insert(0, vec![Some(entry)]);
        } else {
            let p = (0..prev.len())
                .find(|&p| next.parts()[p] != prev.parts()[p])
                .expect("consecutive chain steps differ in one part");
            rows[p].push(Some(entry));
        }
    }
    debug_assert_eq!(
        rows.iter().map(|r| r.len() as u32).collect::<Vec<_>>(),
        chain.steps.last().unwrap().parts()
    );
    Tableau { rows }
}

/// { j : j+1 sits weakly right of j }, compared by column positions.
pub fn descent_set(t: &Tableau) -> DescentSet {
    let mut column = HashMap::new();
    for row in &t.rows {
        for (i, cell) in row.iter().enumerate() {
            if let Some(e) = cell {
                column.insert(*e, i as u32 + 1);
            }
        }
    }
    let m = column.len() as u32;
    let elements = (1..m)
        .filter(|j| column[&(j + 1)] >= column[j])
        .collect();
    DescentSet::new(elements, m)
}

pub fn descent_composition(t: &Tableau) -> Composition {
    comp_of(&descent_set(t))
}

/// The standard skew composition tableaux of the shape, one per saturated
/// chain; empty when the shape is invalid.
pub fn standard_tableaux(shape: &SkewShape) -> Vec<Tableau> {
    chains_l(&shape.inner, &shape.outer)
        .iter()
        .map(tableau_of_chain)
        .collect()
}
