//! Compositions, weak compositions, and the partial-sum bijection.
//!
//! A composition of n is a sequence of positive integers summing to n; the
//! empty composition is the unique composition of 0. Compositions of n
//! correspond to subsets of {1, ..., n-1} by partial sums:
//!
//!   set((1,2,1)) = {1,3}        comp({1,3}, 4) = (1,2,1)
//!
//! Weak compositions allow zero parts. `flatten` removes the zeros keeping
//! the order of the rest, so every weak composition determines a composition.

use std::fmt;
use std::str::FromStr;

/// Sequence of nonnegative parts, zeros allowed.
pub type WeakComposition = Vec<u32>;

/// A composition: all parts positive. Ordering is lexicographic on the part
/// lists, which is the canonical order used everywhere for determinism.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Panics if any part is zero; use `flatten` for weak input.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.iter().all(|&p| p > 0),
            "composition parts must be positive, got {parts:?}"
        );
        Composition { parts }
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Largest part, 0 for the empty composition.
    pub fn max_part(&self) -> u32 {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// Bare comma-separated form: "2,1,3", empty string for the empty
    /// composition. Inverse of the CLI input syntax.
    pub fn to_plain_string(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            write!(f, "∅")
        } else {
            write!(f, "({})", self.to_plain_string())
        }
    }
}

impl FromStr for Composition {
    type Err = String;

    /// Strict form: comma-separated positive integers, "" for empty.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let w = parse_weak(s)?;
        if let Some(z) = w.iter().position(|&p| p == 0) {
            return Err(format!("part {} is zero; zero parts need --weak", z + 1));
        }
        Ok(Composition { parts: w })
    }
}

/// Parses a comma-separated list of nonnegative integers; "" is empty.
pub fn parse_weak(s: &str) -> Result<WeakComposition, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid part {piece:?}"))
        })
        .collect()
}

/// Drops zero parts, keeping the order of the positive ones.
pub fn flatten(w: &[u32]) -> Composition {
    Composition {
        parts: w.iter().copied().filter(|&p| p > 0).collect(),
    }
}

/// Concatenation of weak compositions, zeros kept.
pub fn concat(a: &[u32], b: &[u32]) -> WeakComposition {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out
}

/// The partition with the same positive parts: flatten, then sort descending.
pub fn underlying_partition(w: &[u32]) -> Composition {
    let mut parts: Vec<u32> = w.iter().copied().filter(|&p| p > 0).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Composition { parts }
}

/// Subset of {1, ..., ambient-1}, the descent-set side of the partial-sum
/// bijection. `ambient` is the size n of the compositions it describes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentSet {
    elements: Vec<u32>,
    ambient: u32,
}

impl DescentSet {
    /// Panics unless the elements are distinct members of {1, ..., ambient-1}.
    pub fn new(mut elements: Vec<u32>, ambient: u32) -> Self {
        elements.sort_unstable();
        assert!(
            elements.windows(2).all(|w| w[0] < w[1]),
            "descent set has repeats: {elements:?}"
        );
        if let (Some(&lo), Some(&hi)) = (elements.first(), elements.last()) {
            assert!(
                lo >= 1 && hi < ambient,
                "descents {elements:?} out of range for ambient {ambient}"
            );
        }
        DescentSet { elements, ambient }
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Partial sums of c except the last: (1,2,1) -> {1,3} in ambient 4.
pub fn set_of(c: &Composition) -> DescentSet {
    let n = c.size();
    let mut sum = 0;
    let mut elements = Vec::new();
    for &p in c.parts() {
        sum += p;
        if sum < n {
            elements.push(sum);
        }
    }
    DescentSet {
        elements,
        ambient: n,
    }
}

/// Inverse of `set_of`: consecutive differences of s's elements and ambient.
pub fn comp_of(s: &DescentSet) -> Composition {
    let mut parts = Vec::with_capacity(s.elements.len() + 1);
    let mut prev = 0;
    for &e in &s.elements {
        parts.push(e - prev);
        prev = e;
    }
    if s.ambient > prev {
        parts.push(s.ambient - prev);
    }
    Composition { parts }
}

/// All compositions of n in lexicographic order; just the empty one for n=0.
pub fn compositions_of(n: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn go(left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if left == 0 {
            out.push(Composition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in 1..=left {
            prefix.push(first);
            go(left - first, prefix, out);
            prefix.pop();
        }
    }
    go(n, &mut prefix, &mut out);
    out
}

/// All compositions of size 0 through n, grouped by size, lex within a size.
pub fn compositions_up_to(n: u32) -> Vec<Composition> {
    (0..=n).flat_map(compositions_of).collect()
}

/// All partitions of n, descending parts, in lex order.
pub fn partitions_of(n: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn go(left: u32, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if left == 0 {
            out.push(Composition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in 1..=left.min(cap) {
            prefix.push(first);
            go(left - first, first, prefix, out);
            prefix.pop();
        }
    }
    go(n, n, &mut prefix, &mut out);
    out
}

/// Every weak composition with at most `max_len` parts, each at most
/// `max_part`, shortest first. Includes the empty sequence.
pub fn weak_compositions_up_to(max_len: usize, max_part: u32) -> Vec<WeakComposition> {
    let mut out = vec![Vec::new()];
    let mut this_len: Vec<WeakComposition> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &this_len {
            for p in 0..=max_part {
                let mut longer = w.clone();
                longer.push(p);
                next.push(longer);
            }
        }
        out.extend(next.iter().cloned());
        this_len = next;
    }
    out
}
