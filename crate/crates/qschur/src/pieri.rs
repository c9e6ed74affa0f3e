//! Pieri rules: straight and skew, quasisymmetric and noncommutative, plus
//! the classical rule for skew Schur functions that the noncommutative lift
//! specializes to.
//!
//! Conventions shared by every rule here:
//!
//! * multiplying by the degree-n row shape (n) pairs with horizontal
//!   strips on the growing side, and by the column shape (1^n) with
//!   vertical strips; `StripFlavor` names which of the two is in play,
//! * a skew rule sums over splittings i + j = n, adds an i-strip of the
//!   named flavor to the outer argument, removes (or unadds) a j-strip of
//!   the opposite flavor on the inner side, and weights the term by
//!   (-1)^j,
//! * zero parts produced along the way are flattened away at the end.
//!
//! Every rule is backed by `verify_pieri_theorem`, which recomputes both
//! sides from first principles: quasisymmetric products via quasi-shuffles,
//! noncommutative products via duality structure constants, and the
//! classical rule via semistandard tableau generating polynomials.

use crate::compositions::{compositions_of, flatten, Composition};
use crate::formal::FormalSum;
use crate::operators::{
    append_row, enumerate_additions, enumerate_removals, interval, remove_set, Side, StripFlavor,
};
use crate::posets::{leq_l, SkewShape};
use crate::qsym::{f_product, ncs_product_coefficient, poly_mul, qs_in_f, Basis, QSymVector};
use std::collections::BTreeMap;

/// Signed sum of skew shapes, the output of the skew rules.
pub type SignedSkewSum = FormalSum<SkewShape>;

fn row_or_column(n: u32, flavor: StripFlavor) -> Composition {
    if n == 0 {
        return Composition::empty();
    }
    match flavor {
        StripFlavor::Horizontal => Composition::new(vec![n]),
        StripFlavor::Vertical => Composition::new(vec![1; n as usize]),
    }
}

/// Expansion of qs_alpha times qs_(n) (`Horizontal`) or qs_(1^n)
/// (`Vertical`): the coefficient of beta counts the n-strip removals of the
/// given flavor taking beta to alpha.
pub fn qs_pieri(alpha: &Composition, n: u32, flavor: StripFlavor) -> FormalSum<Composition> {
    let mut out = FormalSum::zero();
    if n == 0 {
        out.add_term(alpha.clone(), 1);
        return out;
    }
    for beta in compositions_of(alpha.size() + n) {
        if beta.max_part() > alpha.max_part() + n || beta.len() > alpha.len() + n as usize {
            continue;
        }
        let ways = enumerate_removals(beta.parts(), n as usize, flavor)
            .iter()
            .filter(|(_, w)| flatten(w) == *alpha)
            .count();
        out.add_term(beta, ways as i64);
    }
    out
}

/// The two equivalent computations of the right-multiplication rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RightPieriForm {
    /// Appends a row of length i after removing boxes below it.
    Simplified,
    /// Applies a sequence of n jdt operators.
    Jdt,
}

fn subsets_of_interval(limit: u32, size: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn go(next: u32, limit: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in next..=limit {
            if limit - i + 1 < left as u32 {
                break;
            }
            cur.push(i);
            go(i + 1, limit, left - 1, cur, out);
            cur.pop();
        }
    }
    go(1, limit, size, &mut cur, &mut out);
    out
}

fn submultisets(sorted: &[u32], size: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn go(rest: &[u32], left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if rest.len() < left {
            return;
        }
        let mut i = 0;
        while i < rest.len() {
            // pick the first copy of each distinct value to avoid duplicates
            if i == 0 || rest[i] != rest[i - 1] {
                cur.push(rest[i]);
                go(&rest[i + 1..], left - 1, cur, out);
                cur.pop();
            }
            i += 1;
        }
    }
    go(sorted, size, &mut cur, &mut out);
    out
}

/// Expansion of s_alpha times s_(n) (`Horizontal`) or s_(1^n) (`Vertical`)
/// in the noncommutative Schur basis.
///
/// The `Jdt` form adds an n-right strip of the given flavor in all possible
/// ways. The `Simplified` form avoids jdt operators: for the row shape it
/// sums a_i after removing an (i-n)-subset of [i-1]; for the column shape it
/// removes a submultiset {m_1 <= ... <= m_k} of the parts (largest interval
/// first) and concatenates the row lengths (m_k+1, ..., m_1+1, 1^(n-k)).
/// Both forms agree term by term.
pub fn ncs_right_pieri(
    alpha: &Composition,
    n: u32,
    flavor: StripFlavor,
    form: RightPieriForm,
) -> FormalSum<Composition> {
    let mut out = FormalSum::zero();
    if n == 0 {
        out.add_term(alpha.clone(), 1);
        return out;
    }
    match form {
        RightPieriForm::Jdt => {
            for (_, w) in enumerate_additions(alpha.parts(), n as usize, Side::Right, flavor) {
                out.add_term(flatten(&w), 1);
            }
        }
        RightPieriForm::Simplified => match flavor {
            StripFlavor::Horizontal => {
                for i in n..=alpha.max_part() + n {
                    for set in subsets_of_interval(i - 1, (i - n) as usize) {
                        if let Some(w) = remove_set(&set, alpha.parts()) {
                            out.add_term(flatten(&append_row(i, &w)), 1);
                        }
                    }
                }
            }
            StripFlavor::Vertical => {
                let mut parts = alpha.parts().to_vec();
                parts.sort_unstable();
                for k in 0..=(n as usize).min(parts.len()) {
                    for multi in submultisets(&parts, k) {
                        let mut w = alpha.parts().to_vec();
                        for &m in multi.iter().rev() {
                            w = remove_set(&interval(m), &w)
                                .expect("submultiset of the parts never annihilates");
                        }
                        for &m in multi.iter().rev() {
                            w.push(m + 1);
                        }
                        w.extend(std::iter::repeat(1).take(n as usize - k));
                        out.add_term(flatten(&w), 1);
                    }
                }
            }
        },
    }
    out
}

/// Expansion of s_(n) times s_alpha (`Horizontal`) or s_(1^n) times s_alpha
/// (`Vertical`): adds an n-left strip of the given flavor in all possible
/// ways.
pub fn ncs_left_pieri(alpha: &Composition, n: u32, flavor: StripFlavor) -> FormalSum<Composition> {
    let mut out = FormalSum::zero();
    if n == 0 {
        out.add_term(alpha.clone(), 1);
        return out;
    }
    for (_, w) in enumerate_additions(alpha.parts(), n as usize, Side::Left, flavor) {
        out.add_term(flatten(&w), 1);
    }
    out
}

fn additions_by_result(
    alpha: &Composition,
    k: u32,
    side: Side,
    flavor: StripFlavor,
) -> FormalSum<Composition> {
    let mut out = FormalSum::zero();
    for (_, w) in enumerate_additions(alpha.parts(), k as usize, side, flavor) {
        out.add_term(flatten(&w), 1);
    }
    out
}

fn removals_by_result(beta: &Composition, k: u32, flavor: StripFlavor) -> FormalSum<Composition> {
    let mut out = FormalSum::zero();
    for (_, w) in enumerate_removals(beta.parts(), k as usize, flavor) {
        out.add_term(flatten(&w), 1);
    }
    out
}

/// Skew Pieri rule for skew quasisymmetric Schur functions:
///
///   qs_{alpha // beta} . qs_(n)   = sum over i + j = n of (-1)^j
///                                   qs_{alpha+ // beta-}
///
/// where alpha+ loses an i-strip of the given flavor back to alpha and
/// beta- arises from beta by removing a j-strip of the opposite flavor.
/// Pairs with beta- not below alpha+ index the zero function and are
/// omitted.
pub fn qs_skew_pieri(shape: &SkewShape, n: u32, flavor: StripFlavor) -> SignedSkewSum {
    let mut out = FormalSum::zero();
    for j in 0..=n {
        let i = n - j;
        if j > shape.inner.size() {
            continue;
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let ups = qs_pieri(&shape.outer, i, flavor);
        let downs = removals_by_result(&shape.inner, j, flavor.opposite());
        for (up, ku) in ups.terms() {
            for (down, kd) in downs.terms() {
                if leq_l(down, up) {
                    out.add_term(SkewShape::new(up.clone(), down.clone()), sign * ku * kd);
                }
            }
        }
    }
    out
}

/// Skew Pieri rule for skew noncommutative Schur functions:
///
///   s_{alpha // beta} . s_(n)   = sum over i + j = n of (-1)^j
///                                 s_{alpha+ // beta-}
///
/// where alpha+ adds an i-right strip of the given flavor to alpha and
/// beta- is any composition that reaches beta by adding a j-right strip of
/// the opposite flavor. All pairs are kept: a pair whose skew function
/// vanishes contributes a zero term, which matters only to the formal sum,
/// not to the function it represents.
pub fn ncs_skew_pieri(shape: &SkewShape, n: u32, flavor: StripFlavor) -> SignedSkewSum {
    let mut out = FormalSum::zero();
    for j in 0..=n {
        let i = n - j;
        if j > shape.inner.size() {
            continue;
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let ups = additions_by_result(&shape.outer, i, Side::Right, flavor);
        let mut downs = FormalSum::zero();
        for delta in compositions_of(shape.inner.size() - j) {
            let ways = enumerate_additions(delta.parts(), j as usize, Side::Right, flavor.opposite())
                .iter()
                .filter(|(_, w)| flatten(w) == shape.inner)
                .count();
            downs.add_term(delta, ways as i64);
        }
        for (up, ku) in ups.terms() {
            for (down, kd) in downs.terms() {
                out.add_term(SkewShape::new(up.clone(), down.clone()), sign * ku * kd);
            }
        }
    }
    out
}

fn part(p: &[u32], r: usize) -> u32 {
    p.get(r).copied().unwrap_or(0)
}

/// Partitions containing `lambda` whose extra k boxes form a classical
/// horizontal strip (no two in one column): interlacing growth.
fn partition_horizontal_additions(lambda: &[u32], k: u32) -> Vec<Vec<u32>> {
    let rows = lambda.len() + 1;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    fn go(lambda: &[u32], row: usize, rows: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if row == rows {
            if left == 0 {
                out.push(cur.iter().copied().filter(|&p| p > 0).collect());
            }
            return;
        }
        let base = part(lambda, row);
        // no two added boxes share a column: the new row cannot pass the old
        // row above, and must still contain the old row below it
        let hi = if row == 0 {
            base + left
        } else {
            (part(lambda, row - 1)).min(base + left)
        };
        for v in base..=hi {
            if row > 0 && v > cur[row - 1] {
                break;
            }
            cur.push(v);
            go(lambda, row + 1, rows, left - (v - base), cur, out);
            cur.pop();
        }
    }
    go(lambda, 0, rows, k, &mut cur, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Partitions containing `lambda` whose extra k boxes form a classical
/// vertical strip (no two in one row): each row grows by at most one.
fn partition_vertical_additions(lambda: &[u32], k: u32) -> Vec<Vec<u32>> {
    let rows = lambda.len() + k as usize;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    fn go(lambda: &[u32], row: usize, rows: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if row == rows {
            if left == 0 {
                out.push(cur.iter().copied().filter(|&p| p > 0).collect());
            }
            return;
        }
        for add in 0..=1u32.min(left) {
            let v = part(lambda, row) + add;
            if row > 0 && v > cur[row - 1] {
                continue;
            }
            cur.push(v);
            go(lambda, row + 1, rows, left - add, cur, out);
            cur.pop();
        }
    }
    go(lambda, 0, rows, k, &mut cur, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Partitions inside `mu` missing k boxes that form a classical horizontal
/// strip of `mu` (no two in one column).
fn partition_horizontal_removals(mu: &[u32], k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(mu.len());
    fn go(mu: &[u32], row: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if row == mu.len() {
            if left == 0 {
                out.push(cur.iter().copied().filter(|&p| p > 0).collect());
            }
            return;
        }
        // removed boxes of one column never repeat: the shrunk row still
        // contains the next original row
        let lo = part(mu, row + 1).max(mu[row].saturating_sub(left));
        for v in lo..=mu[row] {
            if row > 0 && v > cur[row - 1] {
                continue;
            }
            cur.push(v);
            go(mu, row + 1, left - (mu[row] - v), cur, out);
            cur.pop();
        }
    }
    go(mu, 0, k, &mut cur, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Partitions inside `mu` missing k boxes that form a classical vertical
/// strip of `mu` (no two in one row): each row shrinks by at most one.
fn partition_vertical_removals(mu: &[u32], k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(mu.len());
    fn go(mu: &[u32], row: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if row == mu.len() {
            if left == 0 {
                out.push(cur.iter().copied().filter(|&p| p > 0).collect());
            }
            return;
        }
        for sub in 0..=1u32.min(left).min(mu[row]) {
            let v = mu[row] - sub;
            if v < part(mu, row + 1).saturating_sub(1) {
                continue;
            }
            if row > 0 && v > cur[row - 1] {
                continue;
            }
            cur.push(v);
            go(mu, row + 1, left - sub, cur, out);
            cur.pop();
        }
    }
    go(mu, 0, k, &mut cur, &mut out);
    out.retain(|p| p.windows(2).all(|w| w[0] >= w[1]));
    out.sort();
    out.dedup();
    out
}

fn partition_contains(outer: &[u32], inner: &[u32]) -> bool {
    inner.iter().enumerate().all(|(r, &p)| part(outer, r) >= p)
}

/// The composition skew shape whose skew quasisymmetric Schur function
/// equals the skew Schur function of lambda/mu: add one to every part of
/// lambda, and pad mu (each part plus one) with ones up to the length of
/// lambda. Defined for partitions with mu shorter than lambda, or both
/// empty.
pub fn schur_embedding(lambda: &Composition, mu: &Composition) -> SkewShape {
    assert!(lambda.is_partition() && mu.is_partition());
    assert!(
        mu.len() < lambda.len() || (lambda.is_empty() && mu.is_empty()),
        "embedding needs mu shorter than lambda"
    );
    let outer: Vec<u32> = lambda.parts().iter().map(|&p| p + 1).collect();
    let mut inner: Vec<u32> = mu.parts().iter().map(|&p| p + 1).collect();
    inner.resize(lambda.len(), 1);
    SkewShape::new(Composition::new(outer), Composition::new(inner))
}

/// Classical skew Pieri rule: s_{lambda/mu} . s_(n) (`Horizontal`) or
/// s_(1^n) (`Vertical`) as a signed sum of skew partition shapes. Keys are
/// partition pairs under classical containment, not composition shapes.
/// Requires partitions with mu inside lambda.
pub fn skew_schur_pieri(
    lambda: &Composition,
    mu: &Composition,
    n: u32,
    flavor: StripFlavor,
) -> SignedSkewSum {
    assert!(lambda.is_partition() && mu.is_partition());
    assert!(
        partition_contains(lambda.parts(), mu.parts()),
        "mu must fit inside lambda"
    );
    let mut out = FormalSum::zero();
    for j in 0..=n.min(mu.size()) {
        let i = n - j;
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let ups = match flavor {
            StripFlavor::Horizontal => partition_horizontal_additions(lambda.parts(), i),
            StripFlavor::Vertical => partition_vertical_additions(lambda.parts(), i),
        };
        let downs = match flavor.opposite() {
            StripFlavor::Horizontal => partition_horizontal_removals(mu.parts(), j),
            StripFlavor::Vertical => partition_vertical_removals(mu.parts(), j),
        };
        for up in &ups {
            for down in &downs {
                out.add_term(
                    SkewShape::new(Composition::new(up.clone()), Composition::new(down.clone())),
                    sign,
                );
            }
        }
    }
    #[cfg(debug_assertions)]
    if mu.len() < lambda.len() {
        let multiplier = qs_in_f(&SkewShape::straight(row_or_column(n, flavor)));
        let lhs = f_product(&qs_in_f(&schur_embedding(lambda, mu)), &multiplier);
        let mut rhs = QSymVector::zero(Basis::F, lhs.degree());
        for (term, k) in out.terms() {
            rhs.accumulate(qs_in_f(&schur_embedding(&term.outer, &term.inner)).scaled(k));
        }
        debug_assert_eq!(lhs, rhs, "embedded skew rule mismatch at {lambda}/{mu}, n={n}");
    }
    out
}

/// Generating polynomial of semistandard Young tableaux of the skew
/// partition shape lambda/mu in x_1, ..., x_nvars: rows weakly increase,
/// columns strictly increase. Exponent vectors map to coefficients.
pub fn ssyt_skew_polynomial(
    lambda: &Composition,
    mu: &Composition,
    nvars: usize,
) -> BTreeMap<Vec<u32>, i64> {
    assert!(lambda.is_partition() && mu.is_partition());
    assert!(partition_contains(lambda.parts(), mu.parts()));
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|r| {
            (part(mu.parts(), r) as usize..lambda.parts()[r] as usize).map(move |c| (r, c))
        })
        .collect();
    let mut out: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    let mut filling: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    fn go(
        cells: &[(usize, usize)],
        pos: usize,
        nvars: usize,
        filling: &mut BTreeMap<(usize, usize), u32>,
        out: &mut BTreeMap<Vec<u32>, i64>,
    ) {
        if pos == cells.len() {
            let mut exps = vec![0u32; nvars];
            for &v in filling.values() {
                exps[(v - 1) as usize] += 1;
            }
            *out.entry(exps).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[pos];
        let mut lo = 1;
        if c > 0 {
            if let Some(&left) = filling.get(&(r, c - 1)) {
                lo = lo.max(left);
            }
        }
        if r > 0 {
            if let Some(&above) = filling.get(&(r - 1, c)) {
                lo = lo.max(above + 1);
            }
        }
        for v in lo..=nvars as u32 {
            filling.insert((r, c), v);
            go(cells, pos + 1, nvars, filling, out);
        }
        filling.remove(&(r, c));
    }
    go(&cells, 0, nvars, &mut filling, &mut out);
    out
}

/// The twelve statements `verify_pieri_theorem` can sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieriTheorem {
    QsRow,
    QsColumn,
    QsSkewRow,
    QsSkewColumn,
    NcsRightRow,
    NcsRightColumn,
    NcsLeftRow,
    NcsLeftColumn,
    NcsSkewRow,
    NcsSkewColumn,
    SkewSchurRow,
    SkewSchurColumn,
}

impl PieriTheorem {
    pub const ALL: [PieriTheorem; 12] = [
        PieriTheorem::QsRow,
        PieriTheorem::QsColumn,
        PieriTheorem::QsSkewRow,
        PieriTheorem::QsSkewColumn,
        PieriTheorem::NcsRightRow,
        PieriTheorem::NcsRightColumn,
        PieriTheorem::NcsLeftRow,
        PieriTheorem::NcsLeftColumn,
        PieriTheorem::NcsSkewRow,
        PieriTheorem::NcsSkewColumn,
        PieriTheorem::SkewSchurRow,
        PieriTheorem::SkewSchurColumn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PieriTheorem::QsRow => "qs row",
            PieriTheorem::QsColumn => "qs column",
            PieriTheorem::QsSkewRow => "qs skew row",
            PieriTheorem::QsSkewColumn => "qs skew column",
            PieriTheorem::NcsRightRow => "ncs right row",
            PieriTheorem::NcsRightColumn => "ncs right column",
            PieriTheorem::NcsLeftRow => "ncs left row",
            PieriTheorem::NcsLeftColumn => "ncs left column",
            PieriTheorem::NcsSkewRow => "ncs skew row",
            PieriTheorem::NcsSkewColumn => "ncs skew column",
            PieriTheorem::SkewSchurRow => "skew schur row",
            PieriTheorem::SkewSchurColumn => "skew schur column",
        }
    }

    fn flavor(self) -> StripFlavor {
        match self {
            PieriTheorem::QsRow
            | PieriTheorem::QsSkewRow
            | PieriTheorem::NcsRightRow
            | PieriTheorem::NcsLeftRow
            | PieriTheorem::NcsSkewRow
            | PieriTheorem::SkewSchurRow => StripFlavor::Horizontal,
            _ => StripFlavor::Vertical,
        }
    }
}

/// Sweep limits: `max_size` bounds the outer composition (or partition),
/// `max_inner` the inner one for skew statements, `max_n` the multiplier
/// degree.
#[derive(Clone, Copy, Debug)]
pub struct PieriBounds {
    pub max_size: u32,
    pub max_inner: u32,
    pub max_n: u32,
}

#[derive(Clone, Debug)]
pub struct PieriFailure {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug)]
pub struct PieriReport {
    pub theorem: PieriTheorem,
    pub checked: u64,
    pub failures: Vec<PieriFailure>,
}

impl PieriReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn qs_of_sum(sum: &FormalSum<Composition>, degree: u32) -> QSymVector {
    let mut v = QSymVector::zero(Basis::F, degree);
    for (c, k) in sum.terms() {
        v.accumulate(qs_in_f(&SkewShape::straight(c.clone())).scaled(k));
    }
    v
}

fn qs_of_skew_sum(sum: &SignedSkewSum, degree: u32) -> QSymVector {
    let mut v = QSymVector::zero(Basis::F, degree);
    for (shape, k) in sum.terms() {
        v.accumulate(qs_in_f(shape).scaled(k));
    }
    v
}

/// s-basis expansion of s_{outer // inner} . s_(n or 1^n), computed from
/// the duality pairing alone.
fn ncs_skew_times_shape(shape: &SkewShape, multiplier: &Composition) -> FormalSum<Composition> {
    let degree = shape.size().max(0) as u32 + multiplier.size();
    let skew = crate::qsym::ncs_skew_expand(&shape.outer, &shape.inner);
    let mut out = FormalSum::zero();
    for target in compositions_of(degree) {
        let mut total = 0;
        for (gamma, k) in skew.coeffs.terms() {
            total += k * ncs_product_coefficient(gamma, multiplier, &target);
        }
        out.add_term(target, total);
    }
    out
}

fn ncs_of_skew_sum(sum: &SignedSkewSum, degree: u32) -> FormalSum<Composition> {
    let mut out = FormalSum::zero();
    for (shape, k) in sum.terms() {
        let expanded = crate::qsym::ncs_skew_expand(&shape.outer, &shape.inner);
        if expanded.degree == degree {
            out += expanded.coeffs.scaled(k);
        } else {
            assert!(expanded.coeffs.is_zero() || shape.size() < 0);
        }
    }
    out
}

/// Exhaustively rechecks one Pieri statement against an independent
/// computation of the product over all inputs within the bounds, and
/// reports every mismatch.
pub fn verify_pieri_theorem(theorem: PieriTheorem, bounds: &PieriBounds) -> PieriReport {
    let flavor = theorem.flavor();
    let mut report = PieriReport {
        theorem,
        checked: 0,
        failures: Vec::new(),
    };
    let push = |input: String, lhs: String, rhs: String, failures: &mut Vec<PieriFailure>| {
        failures.push(PieriFailure { input, lhs, rhs });
    };
    match theorem {
        PieriTheorem::QsRow | PieriTheorem::QsColumn => {
            for size in 0..=bounds.max_size {
                for alpha in compositions_of(size) {
                    for n in 1..=bounds.max_n {
                        let shape = row_or_column(n, flavor);
                        let claimed = qs_of_sum(&qs_pieri(&alpha, n, flavor), size + n);
                        let product = f_product(
                            &qs_in_f(&SkewShape::straight(alpha.clone())),
                            &qs_in_f(&SkewShape::straight(shape.clone())),
                        );
                        report.checked += 1;
                        if claimed != product {
                            push(
                                format!("{alpha} * {shape}"),
                                format!("{}", qs_pieri(&alpha, n, flavor)),
                                format!("{:?}", product),
                                &mut report.failures,
                            );
                        }
                    }
                }
            }
        }
        PieriTheorem::QsSkewRow | PieriTheorem::QsSkewColumn => {
            for size in 0..=bounds.max_size {
                for alpha in compositions_of(size) {
                    for inner_size in 0..=bounds.max_inner.min(size) {
                        for beta in compositions_of(inner_size) {
                            // invalid shapes index the zero function; the
                            // signed sum must then cancel, so keep them
                            let skew = SkewShape::new(alpha.clone(), beta.clone());
                            for n in 1..=bounds.max_n {
                                let mult = row_or_column(n, flavor);
                                let degree = (size - inner_size) + n;
                                let claimed =
                                    qs_of_skew_sum(&qs_skew_pieri(&skew, n, flavor), degree);
                                let product = f_product(
                                    &qs_in_f(&skew),
                                    &qs_in_f(&SkewShape::straight(mult.clone())),
                                );
                                report.checked += 1;
                                if claimed != product {
                                    push(
                                        format!("{skew} * {mult}"),
                                        format!("{}", qs_skew_pieri(&skew, n, flavor)),
                                        format!("{:?}", product),
                                        &mut report.failures,
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        PieriTheorem::NcsRightRow | PieriTheorem::NcsRightColumn => {
            for size in 0..=bounds.max_size {
                for alpha in compositions_of(size) {
                    for n in 1..=bounds.max_n {
                        let mult = row_or_column(n, flavor);
                        let simplified =
                            ncs_right_pieri(&alpha, n, flavor, RightPieriForm::Simplified);
                        let jdt = ncs_right_pieri(&alpha, n, flavor, RightPieriForm::Jdt);
                        let mut truth = FormalSum::zero();
                        for gamma in compositions_of(size + n) {
                            truth.add_term(
                                gamma.clone(),
                                ncs_product_coefficient(&alpha, &mult, &gamma),
                            );
                        }
                        report.checked += 1;
                        if simplified != jdt || simplified != truth {
                            push(
                                format!("{alpha} * {mult}"),
                                format!("simplified {simplified}; jdt {jdt}"),
                                format!("{truth}"),
                                &mut report.failures,
                            );
                        }
                    }
                }
            }
        }
        PieriTheorem::NcsLeftRow | PieriTheorem::NcsLeftColumn => {
            for size in 0..=bounds.max_size {
                for alpha in compositions_of(size) {
                    for n in 1..=bounds.max_n {
                        let mult = row_or_column(n, flavor);
                        let claimed = ncs_left_pieri(&alpha, n, flavor);
                        let mut truth = FormalSum::zero();
                        for gamma in compositions_of(size + n) {
                            truth.add_term(
                                gamma.clone(),
                                ncs_product_coefficient(&mult, &alpha, &gamma),
                            );
                        }
                        report.checked += 1;
                        if claimed != truth {
                            push(
                                format!("{mult} * {alpha}"),
                                format!("{claimed}"),
                                format!("{truth}"),
                                &mut report.failures,
                            );
                        }
                    }
                }
            }
        }
        PieriTheorem::NcsSkewRow | PieriTheorem::NcsSkewColumn => {
            for size in 0..=bounds.max_size {
                for alpha in compositions_of(size) {
                    for inner_size in 0..=bounds.max_inner.min(size) {
                        for beta in compositions_of(inner_size) {
                            let skew = SkewShape::new(alpha.clone(), beta.clone());
                            for n in 1..=bounds.max_n {
                                let mult = row_or_column(n, flavor);
                                let degree = (size - inner_size) + n;
                                let claimed =
                                    ncs_of_skew_sum(&ncs_skew_pieri(&skew, n, flavor), degree);
                                let truth = ncs_skew_times_shape(&skew, &mult);
                                report.checked += 1;
                                if claimed != truth {
                                    push(
                                        format!("{skew} * {mult}"),
                                        format!("{claimed}"),
                                        format!("{truth}"),
                                        &mut report.failures,
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        PieriTheorem::SkewSchurRow | PieriTheorem::SkewSchurColumn => {
            for size in 0..=bounds.max_size {
                for lambda in crate::compositions::partitions_of(size) {
                    for inner_size in 0..=bounds.max_inner.min(size) {
                        for mu in crate::compositions::partitions_of(inner_size) {
                            if !partition_contains(lambda.parts(), mu.parts())
                                || mu.len() >= lambda.len()
                            {
                                continue;
                            }
                            for n in 1..=bounds.max_n {
                                let nvars = ((size - inner_size) + n) as usize;
                                let mult = row_or_column(n, flavor);
                                let mut claimed: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
                                for (term, k) in skew_schur_pieri(&lambda, &mu, n, flavor).terms()
                                {
                                    for (e, c) in
                                        ssyt_skew_polynomial(&term.outer, &term.inner, nvars)
                                    {
                                        *claimed.entry(e).or_insert(0) += k * c;
                                    }
                                }
                                claimed.retain(|_, &mut c| c != 0);
                                let truth = poly_mul(
                                    &ssyt_skew_polynomial(&lambda, &mu, nvars),
                                    &ssyt_skew_polynomial(&mult, &Composition::empty(), nvars),
                                );
                                report.checked += 1;
                                if claimed != truth {
                                    push(
                                        format!("{lambda}/{mu} * {mult}"),
                                        format!("{claimed:?}"),
                                        format!("{truth:?}"),
                                        &mut report.failures,
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report
}
