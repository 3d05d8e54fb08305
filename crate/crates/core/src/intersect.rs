//! Intersections of deletion balls, the prefix/suffix and common-affix
//! decompositions, and the Type-A / Type-B confusability classifiers.

use std::collections::BTreeSet;

use crate::delball::{ball_size, deletion_ball, levenshtein_distance};
use crate::error::{Error, Result};
use crate::seqcore::BinarySequence;

/// `|D_s(x) ∩ D_t(y)|` by counting distinct common subsequences of length
/// `|x| - s` through the product of the two subsequence automata.
///
/// Returns 0 when the target lengths differ or a radius is out of range.
pub fn intersection_size(x: &BinarySequence, s: i64, y: &BinarySequence, t: i64) -> u64 {
    let Some(len) = common_target(x, s, y, t) else {
        return 0;
    };
    count_common_subsequences(x, y, len)
}

/// Same quantity as [`intersection_size`], computed by materializing both
/// balls and merging.
pub fn intersection_size_enumerated(x: &BinarySequence, s: i64, y: &BinarySequence, t: i64) -> u64 {
    intersection_elements(x, s, y, t).len() as u64
}

/// The elements of `D_s(x) ∩ D_t(y)` in increasing order.
pub fn intersection_elements(
    x: &BinarySequence,
    s: i64,
    y: &BinarySequence,
    t: i64,
) -> Vec<BinarySequence> {
    if common_target(x, s, y, t).is_none() {
        return Vec::new();
    }
    deletion_ball(x, s).intersection(&deletion_ball(y, t))
}

fn common_target(x: &BinarySequence, s: i64, y: &BinarySequence, t: i64) -> Option<usize> {
    let (n, m) = (x.len() as i64, y.len() as i64);
    if !(0..=n).contains(&s) || !(0..=m).contains(&t) || n - s != m - t {
        return None;
    }
    Some((n - s) as usize)
}

fn next_table(x: &BinarySequence) -> [Vec<usize>; 2] {
    let n = x.len();
    let mut next = [vec![n; n + 1], vec![n; n + 1]];
    for i in (0..n).rev() {
        next[0][i] = next[0][i + 1];
        next[1][i] = next[1][i + 1];
        next[x.bit(i + 1) as usize][i] = i;
    }
    next
}

/// Number of distinct words of length `len` that are subsequences of both.
pub fn count_common_subsequences(x: &BinarySequence, y: &BinarySequence, len: usize) -> u64 {
    let (n, m) = (x.len(), y.len());
    if len > n.min(m) {
        return 0;
    }
    let (nx, ny) = (next_table(x), next_table(y));
    let width = m + 1;
    // count[i][j]: distinct words of the current length embeddable in
    // x[i..] and y[j..] by greedy leftmost matching.
    let mut prev = vec![1u64; (n + 1) * width];
    let mut cur = vec![0u64; (n + 1) * width];
    for _ in 0..len {
        for i in 0..=n {
            for j in 0..=m {
                let mut total = 0;
                for c in 0..2 {
                    let (a, b) = (nx[c][i], ny[c][j]);
                    if a < n && b < m {
                        total += prev[(a + 1) * width + b + 1];
                    }
                }
                cur[i * width + j] = total;
            }
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[0]
}

/// `D_t(center)` restricted to words starting with `prefix` and ending with
/// `suffix`.
///
/// The suffix is taken in natural reading order. Written with the
/// reversed-suffix convention `C^{u}_{v}` (words ending in `v_m ... v_1`),
/// the equivalent argument is `suffix = v_m ... v_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RestrictedBallSpec {
    pub center: BinarySequence,
    pub radius: i64,
    pub prefix: BinarySequence,
    pub suffix: BinarySequence,
}

impl RestrictedBallSpec {
    fn check(&self) -> Result<()> {
        let available = self.center.len() as i64 - self.radius;
        if (self.prefix.len() + self.suffix.len()) as i64 > available {
            return Err(Error::RestrictionTooLong {
                prefix: self.prefix.len(),
                suffix: self.suffix.len(),
                available: available.max(0) as usize,
            });
        }
        Ok(())
    }
}

pub fn restricted_ball(spec: &RestrictedBallSpec) -> Result<Vec<BinarySequence>> {
    spec.check()?;
    let (p, q) = (spec.prefix.len(), spec.suffix.len());
    Ok(deletion_ball(&spec.center, spec.radius)
        .into_elements()
        .into_iter()
        .filter(|z| z.prefix(p) == spec.prefix && z.suffix(q) == spec.suffix)
        .collect())
}

/// Checks that the restricted balls over all `2^m1 * 2^m2` prefix/suffix
/// choices add up to `|D_t(x)|`.
pub fn prop1_identity_check(x: &BinarySequence, t: i64, m1: usize, m2: usize) -> Result<bool> {
    if (m1 + m2) as i64 > x.len() as i64 - t {
        return Err(Error::RestrictionTooLong {
            prefix: m1,
            suffix: m2,
            available: (x.len() as i64 - t).max(0) as usize,
        });
    }
    let mut total = 0u64;
    for prefix in crate::seqcore::all_words(m1) {
        for suffix in crate::seqcore::all_words(m2) {
            let spec = RestrictedBallSpec {
                center: *x,
                radius: t,
                prefix,
                suffix,
            };
            total += restricted_ball(&spec)?.len() as u64;
        }
    }
    Ok(total == ball_size(x, t))
}

/// Result of stripping a required prefix and suffix off a deletion ball.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prop2Outcome {
    /// The restricted ball is `prefix ∘ D_{t*}(inner) ∘ suffix`.
    Reduced {
        k1: usize,
        k2: usize,
        inner: BinarySequence,
        t_star: i64,
    },
    /// The prefix or suffix does not embed, or the two embeddings overlap.
    Degenerate,
}

/// `k1` is the end of the leftmost embedding of `prefix`, `k2` the start of
/// the rightmost embedding of `suffix` (1-based; `k1 = 0` and `k2 = n + 1`
/// for empty restrictions).
pub fn prop2_reduce(
    center: &BinarySequence,
    t: i64,
    prefix: &BinarySequence,
    suffix: &BinarySequence,
) -> Result<Prop2Outcome> {
    RestrictedBallSpec {
        center: *center,
        radius: t,
        prefix: *prefix,
        suffix: *suffix,
    }
    .check()?;
    let n = center.len();
    let Some(k1) = leftmost_end(center, prefix) else {
        return Ok(Prop2Outcome::Degenerate);
    };
    let Some(k2) = rightmost_start(center, suffix) else {
        return Ok(Prop2Outcome::Degenerate);
    };
    if k1 >= k2 {
        return Ok(Prop2Outcome::Degenerate);
    }
    let inner = center.project(k1 + 1, k2 - 1)?;
    let t_star = t - (k1 - prefix.len()) as i64 - (n + 1 - k2 - suffix.len()) as i64;
    Ok(Prop2Outcome::Reduced {
        k1,
        k2,
        inner,
        t_star,
    })
}

fn leftmost_end(x: &BinarySequence, u: &BinarySequence) -> Option<usize> {
    let mut matched = 0;
    if u.is_empty() {
        return Some(0);
    }
    for i in 1..=x.len() {
        if x.bit(i) == u.bit(matched + 1) {
            matched += 1;
            if matched == u.len() {
                return Some(i);
            }
        }
    }
    None
}

fn rightmost_start(x: &BinarySequence, v: &BinarySequence) -> Option<usize> {
    let n = x.len();
    leftmost_end(&x.reverse(), &v.reverse()).map(|k| n + 1 - k)
}

/// `x = u v w`, `y = u ṽ w` with `u` the longest common prefix and `w` the
/// longest common suffix of what remains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffixDecomposition {
    pub prefix: BinarySequence,
    pub mid_x: BinarySequence,
    pub mid_y: BinarySequence,
    pub suffix: BinarySequence,
}

pub fn affix_decompose(x: &BinarySequence, y: &BinarySequence) -> Result<AffixDecomposition> {
    if x == y {
        return Err(Error::IdenticalSequences);
    }
    let (n, m) = (x.len(), y.len());
    let mut s = 0;
    while s < n.min(m) && x.bit(s + 1) == y.bit(s + 1) {
        s += 1;
    }
    let mut w = 0;
    while w < (n - s).min(m - s) && x.bit(n - w) == y.bit(m - w) {
        w += 1;
    }
    Ok(AffixDecomposition {
        prefix: x.project(1, s)?,
        mid_x: x.project(s + 1, n - w)?,
        mid_y: y.project(s + 1, m - w)?,
        suffix: x.project(n - w + 1, n)?,
    })
}

fn compose(left: &[BinarySequence], mid: &[BinarySequence], right: &[BinarySequence], out: &mut BTreeSet<BinarySequence>) {
    for a in left {
        for b in mid {
            let ab = a.concat(b).expect("composed word within length limit");
            for c in right {
                out.insert(ab.concat(c).expect("composed word within length limit"));
            }
        }
    }
}

/// Set comparison of `D_t(uvw) ∩ D_s(uṽw)` against the union over
/// `p + q <= min(t, s)` of `D_p(u) ∘ (D_{t-p-q}(v) ∩ D_{s-p-q}(ṽ)) ∘ D_q(w)`.
pub fn lemma4_identity_check(
    u: &BinarySequence,
    v: &BinarySequence,
    v_tilde: &BinarySequence,
    w: &BinarySequence,
    t: i64,
    s: i64,
) -> Result<bool> {
    let x = u.concat(v)?.concat(w)?;
    let y = u.concat(v_tilde)?.concat(w)?;
    let direct: BTreeSet<_> = intersection_elements(&x, t, &y, s).into_iter().collect();
    let mut union = BTreeSet::new();
    let bound = t.min(s);
    for p in 0..=bound {
        for q in 0..=bound - p {
            let mid = intersection_elements(v, t - p - q, v_tilde, s - p - q);
            let left = deletion_ball(u, p).into_elements();
            let right = deletion_ball(w, q).into_elements();
            compose(&left, &mid, &right, &mut union);
        }
    }
    Ok(direct == union)
}

/// For `|v| = |ṽ|` and `d_L(v, ṽ) >= t`, checks
/// `D_t(uvw) ∩ D_t(uṽw) = u ∘ (D_t(v) ∩ D_t(ṽ)) ∘ w`.
pub fn lemma5_identity_check(
    u: &BinarySequence,
    v: &BinarySequence,
    v_tilde: &BinarySequence,
    w: &BinarySequence,
    t: i64,
) -> Result<bool> {
    let distance = levenshtein_distance(v, v_tilde)?;
    if (distance as i64) < t {
        return Err(Error::Precondition(format!(
            "d_L(v, ṽ) = {distance} is below t = {t}"
        )));
    }
    let x = u.concat(v)?.concat(w)?;
    let y = u.concat(v_tilde)?.concat(w)?;
    let direct: BTreeSet<_> = intersection_elements(&x, t, &y, t).into_iter().collect();
    let mut rhs = BTreeSet::new();
    compose(&[*u], &intersection_elements(v, t, v_tilde, t), &[*w], &mut rhs);
    Ok(direct == rhs)
}

/// Witness `x = u v w`, `y = u v̄ w` of Type-A confusability.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeAWitness {
    pub u: BinarySequence,
    pub v: BinarySequence,
    pub w: BinarySequence,
}

/// Type-A test: `y` is `x` with one alternating block of length at least 2
/// complemented. The complemented block is exactly the set of differing
/// positions, so the witness is unique.
pub fn type_a_confusable(x: &BinarySequence, y: &BinarySequence) -> Result<Option<TypeAWitness>> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    if x == y {
        return Ok(None);
    }
    let d = affix_decompose(x, y)?;
    let ok = d.mid_x.len() >= 2 && d.mid_x.is_alternating() && d.mid_y == d.mid_x.complement();
    Ok(ok.then_some(TypeAWitness {
        u: d.prefix,
        v: d.mid_x,
        w: d.suffix,
    }))
}

/// Type-B test: `x = u a ā v b w`, `y = u ā v b b̄ w`, or the same with the
/// roles of `x` and `y` exchanged.
pub fn type_b_confusable(x: &BinarySequence, y: &BinarySequence) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    Ok(type_b_oriented(x, y) || type_b_oriented(y, x))
}

fn type_b_oriented(x: &BinarySequence, y: &BinarySequence) -> bool {
    if x == y {
        return false;
    }
    let Ok(d) = affix_decompose(x, y) else {
        return false;
    };
    // u is the common prefix and x, y differ at the first position after it
    // (a vs ā) and at the last position before w (b vs b̄). Between those,
    // x_{i+2..p} must equal y_{i+1..p-1}.
    let i = d.prefix.len();
    let p = x.len() - d.suffix.len();
    if p < i + 3 {
        return false;
    }
    x.project(i + 2, p).ok() == y.project(i + 1, p - 1).ok()
}

/// Case of the radius-2 intersection size for a pair at distance 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lemma16Case {
    TwoNMinus4,
    TwoNMinus5,
    TwoNMinus6,
    /// `|D_1(x) ∩ D_1(y)| <= 1`; the radius-2 intersection is at most `n`.
    AtMostN,
    /// Type-A with a non-alternating outer part; none of the exact cases apply.
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lemma16Class {
    pub case: Lemma16Case,
    pub n: usize,
    /// `(s, l, t)` lengths of the Type-A split, when there is one.
    pub split: Option<(usize, usize, usize)>,
}

impl Lemma16Class {
    /// Whether a computed `|D_2(x) ∩ D_2(y)|` agrees with the case.
    pub fn admits(&self, size: u64) -> bool {
        let n = self.n as u64;
        match self.case {
            Lemma16Case::TwoNMinus4 => size == 2 * n - 4,
            Lemma16Case::TwoNMinus5 => size == 2 * n - 5,
            Lemma16Case::TwoNMinus6 => size == 2 * n - 6,
            Lemma16Case::AtMostN => size <= n,
            Lemma16Case::Other => {
                // A length-2 block at one end of the word reaches 2n - 6 even
                // when the remaining part is not alternating.
                let edge_pair = matches!(self.split, Some((s, 2, t)) if s.min(t) == 0);
                size <= if edge_pair { 2 * n - 6 } else { 2 * n - 7 }
            }
        }
    }
}

/// Classifies a distance-1 pair of length `n >= 7` by the shape of its
/// Type-A split `x = u a v`, `y = u ā v` with `|u| = s`, `|a| = l`, `|v| = t`.
pub fn lemma16_classify(x: &BinarySequence, y: &BinarySequence) -> Result<Lemma16Class> {
    let n = x.len();
    if levenshtein_distance(x, y)? != 1 {
        return Err(Error::Precondition("lemma16_classify needs d_L(x, y) = 1".into()));
    }
    if n < 7 {
        return Err(Error::Precondition(format!("lemma16_classify needs n >= 7, got {n}")));
    }
    let Some(wit) = type_a_confusable(x, y)? else {
        return Ok(Lemma16Class {
            case: Lemma16Case::AtMostN,
            n,
            split: None,
        });
    };
    let (s, l, t) = (wit.u.len(), wit.v.len(), wit.w.len());
    let split = Some((s, l, t));
    if !(wit.u.is_alternating() && wit.w.is_alternating()) {
        return Ok(Lemma16Class {
            case: Lemma16Case::Other,
            n,
            split,
        });
    }
    let case = if l == n || (l == 2 && s.min(t) == 0) {
        Lemma16Case::TwoNMinus4
    } else if l == n - 1
        || (l == n - 2 && s.max(t) == 2 && s.min(t) == 0)
        || (l == 2 && s >= 1 && t >= 1)
        || ((3..=n - 2).contains(&l) && s.min(t) == 0 && s.max(t) >= 1)
    {
        Lemma16Case::TwoNMinus5
    } else {
        // 3 <= l <= n - 2 with s, t >= 1
        Lemma16Case::TwoNMinus6
    };
    Ok(Lemma16Class { case, n, split })
}

/// `{ (x, y) }` image under joint reversal and complement; used by tests and
/// the search engine to check intersection symmetries.
pub fn symmetric_images(x: &BinarySequence, y: &BinarySequence) -> [(BinarySequence, BinarySequence); 4] {
    [
        (*x, *y),
        (x.complement(), y.complement()),
        (x.reverse(), y.reverse()),
        (x.complement().reverse(), y.complement().reverse()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delball::ball_size;
    use crate::seqcore::{all_words, alt, seq};

    #[test]
    fn intersection_examples() {
        let (x, y) = (seq("011001010"), seq("101011001"));
        assert_eq!(intersection_size(&x, 4, &y, 4), 26);
        assert_eq!(intersection_size_enumerated(&x, 4, &y, 4), 26);
        let z = seq("0110100111");
        assert_eq!(intersection_size(&z, 3, &z, 3), ball_size(&z, 3));
        let (a, b) = (seq("1010101010110"), seq("0110011010101"));
        assert_eq!(intersection_size(&a, 4, &b, 4), 94);
        assert_eq!(intersection_size_enumerated(&a, 4, &b, 4), 94);
        assert_eq!(intersection_size(&a, 4, &b, 3), 0);
        assert_eq!(intersection_size(&a, 14, &b, 14), 0);
    }

    #[test]
    fn restricted_ball_examples() {
        let spec = RestrictedBallSpec {
            center: seq("1010"),
            radius: 1,
            prefix: seq("1"),
            suffix: seq(""),
        };
        assert_eq!(restricted_ball(&spec).unwrap(), vec![seq("100"), seq("101"), seq("110")]);
        let pinned = RestrictedBallSpec {
            prefix: seq("101"),
            ..spec
        };
        assert!(restricted_ball(&pinned).unwrap().len() <= 1);
        let absent = RestrictedBallSpec {
            prefix: seq("00"),
            ..spec
        };
        assert!(restricted_ball(&absent).unwrap().is_empty());
        let too_long = RestrictedBallSpec {
            prefix: seq("10"),
            suffix: seq("10"),
            ..spec
        };
        assert!(restricted_ball(&too_long).is_err());
    }

    #[test]
    fn restricted_suffix_is_natural_order() {
        let spec = RestrictedBallSpec {
            center: seq("110100"),
            radius: 2,
            prefix: seq(""),
            suffix: seq("10"),
        };
        let got = restricted_ball(&spec).unwrap();
        assert!(!got.is_empty());
        assert!(got.iter().all(|z| z.suffix(2) == seq("10")));
    }

    #[test]
    fn restriction_sum_examples() {
        assert!(prop1_identity_check(&seq("1010101"), 2, 1, 1).unwrap());
        assert!(prop1_identity_check(&seq("0110"), 1, 0, 0).unwrap());
        assert!(prop1_identity_check(&seq("011010"), 2, 2, 2).unwrap());
        assert!(prop1_identity_check(&seq("0110"), 2, 2, 1).is_err());
    }

    #[test]
    fn restriction_reduction_examples() {
        let center = seq("11010");
        match prop2_reduce(&center, 1, &seq("1"), &seq("0")).unwrap() {
            Prop2Outcome::Reduced { k1, k2, inner, t_star } => {
                assert_eq!((k1, k2, inner, t_star), (1, 5, seq("101"), 1));
                let filtered = restricted_ball(&RestrictedBallSpec {
                    center,
                    radius: 1,
                    prefix: seq("1"),
                    suffix: seq("0"),
                })
                .unwrap();
                assert_eq!(filtered.len() as u64, ball_size(&inner, t_star));
                assert_eq!(filtered.len(), 3);
            }
            other => panic!("unexpected {other:?}"),
        }
        let x = seq("0110");
        assert_eq!(
            prop2_reduce(&x, 2, &seq(""), &seq("")).unwrap(),
            Prop2Outcome::Reduced {
                k1: 0,
                k2: 5,
                inner: x,
                t_star: 2
            }
        );
        match prop2_reduce(&seq("1100"), 1, &seq("0"), &seq("")).unwrap() {
            Prop2Outcome::Reduced { k1, inner, t_star, .. } => {
                assert_eq!((k1, inner, t_star), (3, seq("0"), -1));
                assert_eq!(ball_size(&inner, t_star), 0);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            prop2_reduce(&seq("1111"), 1, &seq("0"), &seq("")).unwrap(),
            Prop2Outcome::Degenerate
        );
    }

    #[test]
    fn affix_examples() {
        let d = affix_decompose(&seq("01011"), &seq("00101")).unwrap();
        assert_eq!(
            (d.prefix, d.mid_x, d.mid_y, d.suffix),
            (seq("0"), seq("101"), seq("010"), seq("1"))
        );
        let d = affix_decompose(&seq("1001"), &seq("0110")).unwrap();
        assert_eq!((d.prefix, d.suffix), (seq(""), seq("")));
        let d = affix_decompose(&seq("111"), &seq("110")).unwrap();
        assert_eq!(
            (d.prefix, d.mid_x, d.mid_y, d.suffix),
            (seq("11"), seq("1"), seq("0"), seq(""))
        );
        assert_eq!(affix_decompose(&seq("10"), &seq("10")), Err(Error::IdenticalSequences));
        // unequal lengths with overlapping affixes: prefix is taken first
        let d = affix_decompose(&seq("0110"), &seq("011010")).unwrap();
        assert_eq!((d.prefix, d.mid_x, d.mid_y, d.suffix), (seq("0110"), seq(""), seq("10"), seq("")));
    }

    #[test]
    fn affix_identity_examples() {
        let (u, w) = (seq("01"), seq("110"));
        assert!(lemma4_identity_check(&u, &seq("1010"), &seq("0101"), &w, 2, 2).unwrap());
        assert!(lemma4_identity_check(&u, &seq("1001"), &seq("1001"), &w, 2, 2).unwrap());
        assert!(lemma4_identity_check(&u, &seq("10"), &seq("01"), &w, 0, 0).unwrap());
        assert!(lemma4_identity_check(&u, &seq("100"), &seq("01"), &w, 2, 1).unwrap());
        assert!(lemma5_identity_check(&u, &seq("1010"), &seq("0101"), &w, 1).unwrap());
        assert!(lemma5_identity_check(&seq(""), &seq("1100"), &seq("0011"), &seq(""), 2).unwrap());
        assert!(lemma5_identity_check(&u, &seq("1010"), &seq("0101"), &w, 2).is_err());
    }

    #[test]
    fn type_a_examples() {
        let wit = type_a_confusable(&seq("0101"), &seq("0011")).unwrap().unwrap();
        assert_eq!((wit.u, wit.v, wit.w), (seq("0"), seq("10"), seq("1")));
        assert_eq!(type_a_confusable(&seq("0101"), &seq("0101")).unwrap(), None);
        let wit = type_a_confusable(&seq("1010101"), &seq("0101010")).unwrap().unwrap();
        assert_eq!((wit.u, wit.v, wit.w), (seq(""), seq("1010101"), seq("")));
        assert_eq!(type_a_confusable(&seq("0110"), &seq("0000")).unwrap(), None);
        assert!(type_a_confusable(&seq("01"), &seq("011")).is_err());
    }

    #[test]
    fn type_b_examples() {
        // u=1, a=1, v=0, b=1, w=1: x = 1 10 0 1 1, y = 1 0 0 10 1
        let (x, y) = (seq("110011"), seq("100101"));
        assert!(type_b_confusable(&x, &y).unwrap());
        assert!(type_b_confusable(&y, &x).unwrap());
        assert!(!type_b_confusable(&x, &x).unwrap());
        assert_eq!(intersection_size(&x, 1, &y, 1), 1);
    }

    #[test]
    fn distance_one_classification_examples() {
        let x = alt(8);
        let c = lemma16_classify(&x, &x.complement()).unwrap();
        assert_eq!(c.case, Lemma16Case::TwoNMinus4);
        assert_eq!(intersection_size(&x, 2, &x.complement(), 2), 12);
        // s = 3, l = 2, t = 3 at n = 8
        let (x, y) = (seq("10110101"), seq("10101101"));
        let c = lemma16_classify(&x, &y).unwrap();
        assert_eq!((c.case, c.split), (Lemma16Case::TwoNMinus5, Some((3, 2, 3))));
        assert_eq!(intersection_size(&x, 2, &y, 2), 11);
        // s = 2, l = 4, t = 3 at n = 9
        let (x, y) = (seq("101010101"), seq("100101101"));
        let c = lemma16_classify(&x, &y).unwrap();
        assert_eq!(c.case, Lemma16Case::TwoNMinus6);
        assert_eq!(intersection_size(&x, 2, &y, 2), 12);
        assert!(lemma16_classify(&seq("0000000"), &seq("1111111")).is_err());
        assert!(lemma16_classify(&seq("010101"), &seq("101010")).is_err());
    }

    #[test]
    fn dp_matches_enumeration_exhaustively_small() {
        for n in 0..=6 {
            let words: Vec<_> = all_words(n).collect();
            for x in &words {
                for y in &words {
                    for s in 0..=n as i64 {
                        let a = intersection_size(x, s, y, s);
                        assert_eq!(a, intersection_size_enumerated(x, s, y, s), "{x} {y} {s}");
                    }
                }
            }
        }
    }

    #[test]
    fn dp_matches_enumeration_unequal_lengths() {
        for n in 2..=6 {
            for x in all_words(n) {
                for y in all_words(n + 2) {
                    for s in 0..=2 {
                        assert_eq!(
                            intersection_size(&x, s, &y, s + 2),
                            intersection_size_enumerated(&x, s, &y, s + 2)
                        );
                    }
                }
            }
        }
    }
}
