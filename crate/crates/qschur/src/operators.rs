//! The four box operators on weak compositions.
//!
//! All act on weak compositions and are partial: a `None` result means the
//! operator found no part to act on, and composites propagate `None`. Writing
//! w = (w_1, ..., w_l):
//!
//!   * `remove_box(i)`: subtract 1 from the rightmost part equal to i
//!   * `append_row(i)`: append a part i (total, never `None`)
//!   * `jdt(i)`: `remove_set({1,...,i-1})` then `append_row(i)`
//!   * `add_box(1)`: prepend a part 1; `add_box(i)`, i >= 2: add 1 to the
//!     leftmost part equal to i-1
//!
//! Zero parts are never targets. Index 0 is the identity map, except that
//! `append_row(0)` appends a literal zero part (the two readings agree after
//! flattening, and the appended zero is what makes `a_i = d_{i+1} a_{i+1}`
//! hold at i = 0 on the nose).
//!
//! Set composites apply one operator per index, ordered so that
//! `remove_set({i_1 < ... < i_k})` starts with the largest index and
//! `jdt_set({i_1 < ... < i_k})` starts with the smallest.

use crate::compositions::{flatten, WeakComposition};

/// `None` encodes annihilation: no part was available to act on.
pub type OperatorResult = Option<WeakComposition>;

/// Subtracts 1 from the rightmost part equal to i.
pub fn remove_box(i: u32, w: &[u32]) -> OperatorResult {
    if i == 0 {
        return Some(w.to_vec());
    }
    let p = w.iter().rposition(|&x| x == i)?;
    let mut out = w.to_vec();
    out[p] -= 1;
    Some(out)
}

/// Appends a part i; i = 0 appends a superfluous zero part.
pub fn append_row(i: u32, w: &[u32]) -> WeakComposition {
    let mut out = w.to_vec();
    out.push(i);
    out
}

/// The interval {1, ..., i} as a sorted index set; empty for i = 0.
pub fn interval(i: u32) -> Vec<u32> {
    (1..=i).collect()
}

/// Applies `remove_box` once per index in `set`, largest first. `set` must be
/// strictly increasing.
pub fn remove_set(set: &[u32], w: &[u32]) -> OperatorResult {
    debug_assert!(set.windows(2).all(|p| p[0] < p[1]), "index set not sorted");
    let mut cur = w.to_vec();
    for &i in set.iter().rev() {
        cur = remove_box(i, &cur)?;
    }
    Some(cur)
}

/// Jeu-de-taquin slide: empty out one box from each of the columns
/// 1, ..., i-1 (rightmost target per column, largest column first), then
/// append a row of length i.
pub fn jdt(i: u32, w: &[u32]) -> OperatorResult {
    if i == 0 {
        return Some(w.to_vec());
    }
    remove_set(&interval(i - 1), w).map(|v| append_row(i, &v))
}

/// Applies `jdt` once per index in `set`, smallest first. `set` must be
/// strictly increasing.
pub fn jdt_set(set: &[u32], w: &[u32]) -> OperatorResult {
    debug_assert!(set.windows(2).all(|p| p[0] < p[1]), "index set not sorted");
    let mut cur = w.to_vec();
    for &i in set {
        cur = jdt(i, &cur)?;
    }
    Some(cur)
}

/// Prepends a part 1 (i = 1), or adds 1 to the leftmost part equal to i-1.
pub fn add_box(i: u32, w: &[u32]) -> OperatorResult {
    match i {
        0 => Some(w.to_vec()),
        1 => {
            let mut out = Vec::with_capacity(w.len() + 1);
            out.push(1);
            out.extend_from_slice(w);
            Some(out)
        }
        _ => {
            let p = w.iter().position(|&x| x == i - 1)?;
            let mut out = w.to_vec();
            out[p] += 1;
            Some(out)
        }
    }
}

/// Shape of a k-box strip: horizontal strips use strictly increasing index
/// sequences, vertical strips weakly decreasing ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripFlavor {
    Horizontal,
    Vertical,
}

impl StripFlavor {
    pub fn opposite(self) -> StripFlavor {
        match self {
            StripFlavor::Horizontal => StripFlavor::Vertical,
            StripFlavor::Vertical => StripFlavor::Horizontal,
        }
    }
}

/// Which addition operator a strip uses: `Right` rows via `jdt`, `Left`
/// boxes via `add_box`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

fn present_values(w: &[u32]) -> Vec<u32> {
    let mut vals: Vec<u32> = w.iter().copied().filter(|&p| p > 0).collect();
    vals.sort_unstable();
    vals.dedup();
    vals
}

/// All k-box strip removals from w: pairs of the index sequence
/// (i_1, ..., i_k) and the resulting weak composition. Horizontal sequences
/// are strictly increasing, vertical ones weakly decreasing; either way the
/// composite applies i_k first. k = 0 yields the single empty strip.
pub fn enumerate_removals(
    w: &[u32],
    k: usize,
    flavor: StripFlavor,
) -> Vec<(Vec<u32>, WeakComposition)> {
    let mut out = Vec::new();
    let mut applied = Vec::new();
    // `applied` holds the indices in application order, i.e. the reverse of
    // the sequence as written.
    fn go(
        cur: &[u32],
        left: usize,
        last: Option<u32>,
        flavor: StripFlavor,
        applied: &mut Vec<u32>,
        out: &mut Vec<(Vec<u32>, WeakComposition)>,
    ) {
        if left == 0 {
            let mut seq = applied.clone();
            seq.reverse();
            out.push((seq, cur.to_vec()));
            return;
        }
        for i in present_values(cur) {
            let ok = match (flavor, last) {
                (_, None) => true,
                (StripFlavor::Horizontal, Some(prev)) => i < prev,
                (StripFlavor::Vertical, Some(prev)) => i >= prev,
            };
            if !ok {
                continue;
            }
            let next = remove_box(i, cur).expect("present part");
            applied.push(i);
            go(&next, left - 1, Some(i), flavor, applied, out);
            applied.pop();
        }
    }
    go(w, k, None, flavor, &mut applied, &mut out);
    out.sort();
    out
}

/// All k-row (Right, via `jdt`) or k-box (Left, via `add_box`) strip
/// additions to w, as (index sequence, result) pairs. Horizontal sequences
/// are strictly increasing and applied smallest first; vertical ones weakly
/// decreasing and applied largest first. Either way i_1 acts first.
pub fn enumerate_additions(
    w: &[u32],
    k: usize,
    side: Side,
    flavor: StripFlavor,
) -> Vec<(Vec<u32>, WeakComposition)> {
    let mut out = Vec::new();
    let mut applied = Vec::new();
    fn go(
        cur: &[u32],
        left: usize,
        last: Option<u32>,
        side: Side,
        flavor: StripFlavor,
        applied: &mut Vec<u32>,
        out: &mut Vec<(Vec<u32>, WeakComposition)>,
    ) {
        if left == 0 {
            out.push((applied.clone(), cur.to_vec()));
            return;
        }
        let cap = cur.iter().copied().max().unwrap_or(0) + 1;
        for i in 1..=cap {
            let ok = match (flavor, last) {
                (_, None) => true,
                (StripFlavor::Horizontal, Some(prev)) => i > prev,
                (StripFlavor::Vertical, Some(prev)) => i <= prev,
            };
            if !ok {
                continue;
            }
            let next = match side {
                Side::Right => jdt(i, cur),
                Side::Left => add_box(i, cur),
            };
            if let Some(next) = next {
                applied.push(i);
                go(&next, left - 1, Some(i), side, flavor, applied, out);
                applied.pop();
            }
        }
    }
    go(w, k, None, side, flavor, &mut applied, &mut out);
    out.sort();
    out
}

/// One identity sweep: how many inputs were checked and which failed first.
#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl LemmaReport {
    fn run<F>(name: &'static str, domain: &[WeakComposition], check: F) -> Self
    where
        F: Fn(&[u32]) -> Option<String>,
    {
        let mut failures = 0;
        let mut first_failure = None;
        for w in domain {
            if let Some(msg) = check(w) {
                failures += 1;
                if first_failure.is_none() {
                    first_failure = Some(msg);
                }
            }
        }
        LemmaReport {
            name,
            checked: domain.len(),
            failures,
            first_failure,
        }
    }
}

fn compose(w: &[u32], ops: &[&dyn Fn(&[u32]) -> OperatorResult]) -> OperatorResult {
    // ops listed left to right as written; the rightmost acts first
    let mut cur = w.to_vec();
    for op in ops.iter().rev() {
        cur = op(&cur)?;
    }
    Some(cur)
}

/// Exhaustively checks the operator relations on every weak composition with
/// at most `max_len` parts, each at most `max_part`. Index ranges follow the
/// statements: single indices run to 5, set identities over subsets of
/// {1,...,6}.
pub fn verify_lemmas(max_len: usize, max_part: u32) -> Vec<LemmaReport> {
    let domain = crate::compositions::weak_compositions_up_to(max_len, max_part);
    let mut reports = Vec::new();
    let fail = |w: &[u32], detail: String| Some(format!("w={w:?}: {detail}"));

    reports.push(LemmaReport::run("a_i = d_{i+1} a_{i+1}", &domain, |w| {
        for i in 0..=5u32 {
            let lhs = append_row(i, w);
            let rhs = remove_box(i + 1, &append_row(i + 1, w));
            if Some(&lhs) != rhs.as_ref() {
                return fail(w, format!("i={i}: {lhs:?} vs {rhs:?}"));
            }
        }
        None
    }));

    reports.push(LemmaReport::run(
        "d_j ... d_i a_i = a_{j-1}",
        &domain,
        |w| {
            for i in 1..=5u32 {
                for j in 1..=i {
                    let mut cur = append_row(i, w);
                    for t in (j..=i).rev() {
                        match remove_box(t, &cur) {
                            Some(next) => cur = next,
                            None => return fail(w, format!("i={i} j={j}: annihilated")),
                        }
                    }
                    let rhs = append_row(j - 1, w);
                    if cur != rhs {
                        return fail(w, format!("i={i} j={j}: {cur:?} vs {rhs:?}"));
                    }
                }
            }
            None
        },
    ));

    reports.push(LemmaReport::run("d_i a_j = a_j d_i (i != j)", &domain, |w| {
        for i in 1..=5u32 {
            for j in 1..=5u32 {
                if i == j {
                    continue;
                }
                let lhs = remove_box(i, &append_row(j, w));
                let rhs = remove_box(i, w).map(|v| append_row(j, &v));
                if lhs != rhs {
                    return fail(w, format!("i={i} j={j}: {lhs:?} vs {rhs:?}"));
                }
            }
        }
        None
    }));

    reports.push(LemmaReport::run(
        "d_i d_j = d_j d_i (|i-j| >= 2)",
        &domain,
        |w| {
            for i in 1..=5u32 {
                for j in 1..=5u32 {
                    if i.abs_diff(j) < 2 {
                        continue;
                    }
                    let lhs = remove_box(i, w).and_then(|v| remove_box(j, &v));
                    let rhs = remove_box(j, w).and_then(|v| remove_box(i, &v));
                    if lhs != rhs {
                        return fail(w, format!("i={i} j={j}: {lhs:?} vs {rhs:?}"));
                    }
                }
            }
            None
        },
    ));

    reports.push(LemmaReport::run(
        "d_i d_i d_{i+1} = d_i d_{i+1} d_i",
        &domain,
        |w| {
            for i in 1..=5u32 {
                let di = |v: &[u32]| remove_box(i, v);
                let dip = |v: &[u32]| remove_box(i + 1, v);
                let lhs = compose(w, &[&di, &di, &dip]);
                let rhs = compose(w, &[&di, &dip, &di]);
                if lhs != rhs {
                    return fail(w, format!("i={i}: {lhs:?} vs {rhs:?}"));
                }
            }
            None
        },
    ));

    reports.push(LemmaReport::run(
        "d_i d_{i+1} d_{i+1} = d_{i+1} d_i d_{i+1}",
        &domain,
        |w| {
            for i in 1..=5u32 {
                let di = |v: &[u32]| remove_box(i, v);
                let dip = |v: &[u32]| remove_box(i + 1, v);
                let lhs = compose(w, &[&di, &dip, &dip]);
                let rhs = compose(w, &[&dip, &di, &dip]);
                if lhs != rhs {
                    return fail(w, format!("i={i}: {lhs:?} vs {rhs:?}"));
                }
            }
            None
        },
    ));

    reports.push(LemmaReport::run("u_i d_j = d_j u_i (i != j)", &domain, |w| {
        for i in 1..=5u32 {
            for j in 1..=5u32 {
                if i == j {
                    continue;
                }
                let lhs = remove_box(j, w).and_then(|v| jdt(i, &v));
                let rhs = jdt(i, w).and_then(|v| remove_box(j, &v));
                if lhs != rhs {
                    return fail(w, format!("i={i} j={j}: {lhs:?} vs {rhs:?}"));
                }
            }
        }
        None
    }));

    reports.push(LemmaReport::run(
        "u_i d_i = d_{i+1} u_{i+1}",
        &domain,
        |w| {
            for i in 1..=5u32 {
                let lhs = remove_box(i, w).and_then(|v| jdt(i, &v));
                let rhs = jdt(i + 1, w).and_then(|v| remove_box(i + 1, &v));
                if lhs != rhs {
                    return fail(w, format!("i={i}: {lhs:?} vs {rhs:?}"));
                }
            }
            None
        },
    ));

    reports.push(LemmaReport::run(
        "u_I = a_{max I} d_{[max I] \\ I} after flattening",
        &domain,
        |w| {
            for mask in 1u32..(1 << 6) {
                let set: Vec<u32> = (1..=6u32).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let top = *set.last().unwrap();
                let complement: Vec<u32> =
                    (1..=top).filter(|i| !set.contains(i)).collect();
                // The two sides differ as weak compositions: each jdt step
                // leaves the zero parts it drained in place, while the right
                // side drops a box per complement index and appends one row.
                // They agree exactly on annihilation and up to zero parts.
                let lhs = jdt_set(&set, w).map(|v| flatten(&v));
                let rhs = remove_set(&complement, w).map(|v| flatten(&append_row(top, &v)));
                if lhs != rhs {
                    return fail(w, format!("I={set:?}: {lhs:?} vs {rhs:?}"));
                }
            }
            None
        },
    ));

    reports.push(LemmaReport::run("t_i d_j = d_j t_i (i != j)", &domain, |w| {
        for i in 1..=5u32 {
            for j in 1..=5u32 {
                if i == j {
                    continue;
                }
                let lhs = remove_box(j, w).and_then(|v| add_box(i, &v));
                let rhs = add_box(i, w).and_then(|v| remove_box(j, &v));
                if lhs != rhs {
                    return fail(w, format!("i={i} j={j}: {lhs:?} vs {rhs:?}"));
                }
            }
        }
        None
    }));

    reports.push(LemmaReport::run(
        "d_i t_i = t_i d_i (parts present)",
        &domain,
        |w| {
            for i in 1..=5u32 {
                let applies = if i == 1 {
                    w.contains(&1)
                } else {
                    w.contains(&i) && w.contains(&(i - 1))
                };
                if !applies {
                    continue;
                }
                let lhs = add_box(i, w).and_then(|v| remove_box(i, &v));
                let rhs = remove_box(i, w).and_then(|v| add_box(i, &v));
                if lhs != rhs {
                    return fail(w, format!("i={i}: {lhs:?} vs {rhs:?}"));
                }
            }
            None
        },
    ));

    reports.push(LemmaReport::run(
        "d_{[i]} d_{[j]} = d_{[j]} d_{[i]}",
        &domain,
        |w| {
            for i in 1..=5u32 {
                for j in 1..=5u32 {
                    let lhs =
                        remove_set(&interval(j), w).and_then(|v| remove_set(&interval(i), &v));
                    let rhs =
                        remove_set(&interval(i), w).and_then(|v| remove_set(&interval(j), &v));
                    if lhs != rhs {
                        return fail(w, format!("i={i} j={j}: {lhs:?} vs {rhs:?}"));
                    }
                }
            }
            None
        },
    ));

    reports.push(LemmaReport::run(
        "flatten(op(w)) = flatten(op(flatten(w)))",
        &domain,
        |w| {
            let flat = flatten(w);
            let ops: Vec<(String, Box<dyn Fn(&[u32]) -> OperatorResult>)> = (0..=6u32)
                .flat_map(|i| {
                    [
                        (format!("d_{i}"), Box::new(move |v: &[u32]| remove_box(i, v))
                            as Box<dyn Fn(&[u32]) -> OperatorResult>),
                        (format!("a_{i}"), Box::new(move |v: &[u32]| Some(append_row(i, v)))),
                        (format!("u_{i}"), Box::new(move |v: &[u32]| jdt(i, v))),
                        (format!("t_{i}"), Box::new(move |v: &[u32]| add_box(i, v))),
                    ]
                })
                .collect();
            for (name, op) in &ops {
                let on_weak = op(w).map(|v| flatten(&v));
                let on_flat = op(flat.parts()).map(|v| flatten(&v));
                if on_weak != on_flat {
                    return fail(w, format!("{name}: {on_weak:?} vs {on_flat:?}"));
                }
            }
            None
        },
    ));

    reports
}
