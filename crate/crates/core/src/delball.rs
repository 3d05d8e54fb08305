//! Deletion balls `D_t(x)`: all distinct subsequences of length `n - t`.
//!
//! Two independent routes are kept side by side. [`deletion_ball`] enumerates
//! every choice of kept positions and deduplicates; it is the reference.
//! [`ball_size`] counts distinct fixed-length subsequences with the
//! last-occurrence recurrence and never materializes the set.

use crate::error::{Error, Result};
use crate::seqcore::{low_mask, BinarySequence};

/// The `t`-deletion ball of a word. Elements are sorted by value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionBall {
    center: BinarySequence,
    radius: i64,
    elements: Vec<BinarySequence>,
}

impl DeletionBall {
    pub fn center(&self) -> BinarySequence {
        self.center
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn elements(&self) -> &[BinarySequence] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<BinarySequence> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, y: &BinarySequence) -> bool {
        self.elements.binary_search(y).is_ok()
    }

    /// Sorted-merge intersection with another ball.
    pub fn intersection(&self, other: &DeletionBall) -> Vec<BinarySequence> {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.elements, &other.elements);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }
}

/// Enumerates `D_t(x)` by trying every set of `n - t` kept positions.
///
/// Empty when `t < 0` or `t > n`.
pub fn deletion_ball(x: &BinarySequence, t: i64) -> DeletionBall {
    let n = x.len();
    let mut elements = Vec::new();
    if (0..=n as i64).contains(&t) {
        let keep = n - t as usize;
        let limit = 1u128 << n;
        let mut mask: u128 = (1u128 << keep) - 1;
        loop {
            elements.push(extract_kept(x, mask as u64));
            if keep == 0 {
                break;
            }
            // Gosper's hack: next mask with the same popcount.
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
            if mask >= limit {
                break;
            }
        }
        elements.sort_unstable();
        elements.dedup();
    }
    DeletionBall {
        center: *x,
        radius: t,
        elements,
    }
}

fn extract_kept(x: &BinarySequence, mask: u64) -> BinarySequence {
    let n = x.len();
    let value = x.value();
    let mut bits = 0u64;
    let mut len = 0;
    for k in (0..n).rev() {
        if mask >> k & 1 == 1 {
            bits = (bits << 1) | (value >> k & 1);
            len += 1;
        }
    }
    BinarySequence::from_value_unchecked(bits, len)
}

/// Greedy left-to-right embedding test.
pub fn is_subsequence(y: &BinarySequence, x: &BinarySequence) -> bool {
    let mut matched = 0;
    for b in x.iter() {
        if matched == y.len() {
            break;
        }
        if y.bit(matched + 1) == b {
            matched += 1;
        }
    }
    matched == y.len()
}

/// `|D_t(x)|` via the distinct-subsequence recurrence
/// `c[i][l] = c[i-1][l] + c[i-1][l-1] - c[p-1][l-1]`, where `p` is the
/// previous occurrence of `x_i`.
pub fn ball_size(x: &BinarySequence, t: i64) -> u64 {
    let n = x.len();
    if !(0..=n as i64).contains(&t) {
        return 0;
    }
    let target = n - t as usize;
    count_distinct_subsequences(x, target)
}

pub(crate) fn count_distinct_subsequences(x: &BinarySequence, target: usize) -> u64 {
    let n = x.len();
    if target > n {
        return 0;
    }
    // rows[i][l] for prefixes of length i, l <= target
    let width = target + 1;
    let mut rows = vec![0u64; (n + 1) * width];
    rows[0] = 1;
    let mut last_seen = [0usize; 2];
    for i in 1..=n {
        let b = x.bit(i) as usize;
        let prev = last_seen[b];
        rows[i * width] = 1;
        for l in 1..width {
            let mut v = rows[(i - 1) * width + l] + rows[(i - 1) * width + l - 1];
            if prev > 0 {
                v -= rows[(prev - 1) * width + l - 1];
            }
            rows[i * width + l] = v;
        }
        last_seen[b] = i;
    }
    rows[n * width + target]
}

/// Visits every distinct subsequence of `x` of length `len` in increasing
/// order, passing its integer value. Walks the subsequence automaton, so each
/// word is produced once.
pub fn for_each_subsequence(x: &BinarySequence, len: usize, mut visit: impl FnMut(u64)) {
    let n = x.len();
    if len > n {
        return;
    }
    // next[c][i]: smallest k >= i with x_{k+1} = c, or n.
    let mut next = [vec![n; n + 1], vec![n; n + 1]];
    for i in (0..n).rev() {
        let b = x.bit(i + 1) as usize;
        next[0][i] = next[0][i + 1];
        next[1][i] = next[1][i + 1];
        next[b][i] = i;
    }
    fn walk(
        next: &[Vec<usize>; 2],
        n: usize,
        pos: usize,
        remaining: usize,
        acc: u64,
        visit: &mut dyn FnMut(u64),
    ) {
        if remaining == 0 {
            visit(acc);
            return;
        }
        for c in 0..2 {
            let k = next[c][pos];
            if k < n && n - k >= remaining {
                walk(next, n, k + 1, remaining - 1, (acc << 1) | c as u64, visit);
            }
        }
    }
    walk(&next, n, 0, len, 0, &mut visit);
}

fn binomial(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// `D(n, t) = sum_{i=0..t} C(n - t, i)`, zero outside `0 <= t <= n`.
pub fn d_formula(n: i64, t: i64) -> u64 {
    if n < 0 || t < 0 || t > n {
        return 0;
    }
    (0..=t).map(|i| binomial(n - t, i)).sum()
}

/// Classical O(|x||y|) longest-common-subsequence table.
pub fn lcs_length(x: &BinarySequence, y: &BinarySequence) -> usize {
    let (n, m) = (x.len(), y.len());
    let mut prev = vec![0usize; m + 1];
    let mut cur = vec![0usize; m + 1];
    for i in 1..=n {
        for j in 1..=m {
            cur[j] = if x.bit(i) == y.bit(j) {
                prev[j - 1] + 1
            } else {
                prev[j].max(cur[j - 1])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[m]
}

/// Match masks of `y` for [`lcs_bitparallel`]: bit `j` of `masks[c]` is set
/// when `y_{j+1} = c`.
#[derive(Debug, Clone, Copy)]
pub struct LcsMasks {
    masks: [u64; 2],
    len: usize,
}

impl LcsMasks {
    pub fn new(y: &BinarySequence) -> Self {
        let m = y.len();
        let ones = y.reverse().value();
        LcsMasks {
            masks: [!ones & low_mask(m), ones],
            len: m,
        }
    }
}

/// Bit-parallel LCS length (one word op pass per symbol of `x`).
#[inline]
pub fn lcs_bitparallel(x: &BinarySequence, y: &LcsMasks) -> usize {
    let mask = low_mask(y.len);
    let mut v = mask;
    let n = x.len();
    let xv = x.value();
    for k in (0..n).rev() {
        let m = y.masks[(xv >> k & 1) as usize];
        let u = v & m;
        v = (v.wrapping_add(u) | (v & !m)) & mask;
    }
    y.len - v.count_ones() as usize
}

/// Deletion-only Levenshtein distance `n - LCS(x, y)` for equal lengths.
pub fn levenshtein_distance(x: &BinarySequence, y: &BinarySequence) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    Ok(x.len() - lcs_length(x, y))
}
