//! Partitions: weakly decreasing tuples of nonnegative integers.
//!
//! Partitions index the K-types, the spherical polynomials and every
//! coefficient table in this crate. The enumeration order (weight ascending,
//! reverse-lexicographic within a weight, so `(1,1)` precedes `(2,0)`) is part
//! of the public contract: truncated sums are always accumulated in this
//! order, which makes every partial sum reproducible bit for bit.

use std::fmt;

/// A partition `m_1 >= m_2 >= ... >= m_k >= 0`, stored with trailing zeros
/// stripped. The empty partition is the zero partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from parts, checking monotonicity.
    pub fn new(parts: &[u32]) -> Option<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        let mut v = parts.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        Some(Partition(v))
    }

    pub fn zero() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `j` (0-based), zero beyond the stored length.
    pub fn part(&self, j: usize) -> u32 {
        self.0.get(j).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|m| = sum of parts`.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parts padded with zeros to length `r`.
    pub fn padded(&self, r: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(r.max(v.len()), 0);
        v
    }

    /// `m + e_j` (0-based `j`), `None` if the result is not a partition.
    pub fn up(&self, j: usize) -> Option<Self> {
        let v = self.part(j) + 1;
        if j > 0 && self.part(j - 1) < v {
            return None;
        }
        let mut p = self.padded(j + 1);
        p[j] = v;
        Partition::new(&p)
    }

    /// `m - e_j` (0-based `j`), `None` if the result is not a partition.
    pub fn down(&self, j: usize) -> Option<Self> {
        let cur = self.part(j);
        if cur == 0 || self.part(j + 1) > cur - 1 {
            return None;
        }
        let mut p = self.padded(j + 1);
        p[j] = cur - 1;
        Partition::new(&p)
    }

    /// Dominance order on partitions of equal weight: `self <= other` iff all
    /// prefix sums of `self` are bounded by those of `other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.weight(), other.weight());
        let k = self.len().max(other.len());
        let mut a = 0i64;
        let mut b = 0i64;
        for j in 0..k {
            a += i64::from(self.part(j));
            b += i64::from(other.part(j));
            if a > b {
                return false;
            }
        }
        true
    }

    /// Containment of Young diagrams: every part of `self` bounded by the
    /// corresponding part of `other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        (0..self.len()).all(|j| self.part(j) <= other.part(j))
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let m = self.part(0) as usize;
        let v: Vec<u32> = (0..m)
            .map(|c| self.0.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition(v)
    }

    /// Canonical order: weight ascending, then ascending lexicographically on
    /// the padded parts (reverse-lexicographic within a weight; `(1,1)` before
    /// `(2,0)`).
    pub fn canonical_cmp(&self, other: &Partition) -> std::cmp::Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| {
                let k = self.len().max(other.len());
                self.padded(k).cmp(&other.padded(k))
            })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// All partitions with at most `r` parts and weight at most `max_weight`, in
/// canonical order.
pub fn enumerate_partitions(r: usize, max_weight: u32) -> Vec<Partition> {
    assert!(r >= 1, "rank must be positive");
    let mut out = Vec::new();
    for k in 0..=max_weight {
        out.extend(partitions_of_weight(r, k));
    }
    out
}

/// All partitions of exact weight `k` with at most `r` parts, in canonical
/// (ascending lexicographic) order.
pub fn partitions_of_weight(r: usize, k: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut buf = Vec::new();
    fill(r, k, u32::MAX, &mut buf, &mut out);
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

fn fill(slots: usize, remaining: u32, cap: u32, buf: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(buf.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    let hi = remaining.min(cap);
    // first part at least ceil(remaining/slots) so the tail can absorb the rest
    let lo = remaining.div_ceil(slots as u32);
    for p in lo..=hi {
        buf.push(p);
        fill(slots - 1, remaining - p, p, buf, out);
        buf.pop();
    }
}
