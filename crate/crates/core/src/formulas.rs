//! Closed forms for `N(n, d, t)` and explicit pairs attaining them.

use serde::Serialize;

use crate::delball::{d_formula as d, levenshtein_distance};
use crate::error::{Error, Result};
use crate::intersect::intersection_size;
use crate::seqcore::{alt, seq, BinarySequence};

fn range(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfRange(what()))
    }
}

/// `N(n, 1, t) = 2 D(n-2, t-1)` for `1 <= t < n`.
pub fn n1(n: i64, t: i64) -> Result<u64> {
    range(1 <= t && t < n, || format!("N(n,1,t) needs 1 <= t < n, got n={n}, t={t}"))?;
    Ok(2 * d(n - 2, t - 1))
}

/// `N(n, 2, t)` for `2 <= t < n`, `n >= 8`.
pub fn n2(n: i64, t: i64) -> Result<u64> {
    range(2 <= t && t < n && n >= 8, || {
        format!("N(n,2,t) needs 2 <= t < n and n >= 8, got n={n}, t={t}")
    })?;
    Ok(2 * d(n - 4, t - 2) + 2 * d(n - 5, t - 2) + 2 * d(n - 7, t - 2) + d(n - 6, t - 3) + d(n - 7, t - 3))
}

/// `N(n, 2, 3) = 6n - 30` for `n >= 8`.
pub fn n23(n: i64) -> Result<u64> {
    range(n >= 8, || format!("N(n,2,3) closed form needs n >= 8, got {n}"))?;
    Ok((6 * n - 30) as u64)
}

/// The six-term lower bound on `N(n, 3, t)`; exact at `t = 4`, `n >= 13`.
/// Terms with negative arguments vanish.
pub fn m(n: i64, t: i64) -> u64 {
    6 * d(n - 6, t - 3)
        + 4 * d(n - 8, t - 3)
        + 6 * d(n - 9, t - 3)
        + 4 * d(n - 11, t - 3)
        + 2 * d(n - 13, t - 5)
        + d(n - 13, t - 6)
}

/// Known extremal pairs for `(d, t) = (3, 4)` at `5 <= n <= 12`:
/// `(n, x, y, N(n, 3, 4))`.
pub const N34_SMALL: [(usize, &str, &str, u64); 8] = [
    (5, "00010", "11101", 2),
    (6, "010110", "110001", 4),
    (7, "0101110", "1100101", 8),
    (8, "01101001", "10010110", 16),
    (9, "011001010", "101011001", 26),
    (10, "0110011001", "1010101010", 40),
    (11, "01100110101", "10101010110", 57),
    (12, "011001010101", "101010100110", 75),
];

/// `N(n, 3, 4)` for `n >= 5`: tabulated below 13, `20n - 166` from there on.
pub fn n34_exact(n: i64) -> Result<u64> {
    range(n >= 5, || format!("N(n,3,4) is tabulated from n = 5, got {n}"))?;
    if n >= 13 {
        return Ok((20 * n - 166) as u64);
    }
    Ok(N34_SMALL[(n - 5) as usize].3)
}

/// Small values established by computer search: `N(n, 3, 4)` for
/// `5 <= n <= 12`, `N(n, 2, 2)` for `2 <= n <= 5` and `N(n, 2, 3)` for
/// `2 <= n <= 7`.
pub fn tabulated(n: usize, d: usize, t: i64) -> Option<u64> {
    match (d, t) {
        (3, 4) if (5..=12).contains(&n) => Some(N34_SMALL[n - 5].3),
        (2, 2) if (2..=5).contains(&n) => Some([1, 2, 4, 4][n - 2]),
        (2, 3) if (2..=7).contains(&n) => Some([0, 1, 2, 4, 8, 13][n - 2]),
        _ => None,
    }
}

/// The closed form that applies to `(n, d, t)`, if any, with its name.
pub fn closed_form(n: usize, d: usize, t: i64) -> Option<(u64, &'static str)> {
    let (n, d) = (n as i64, d as i64);
    match d {
        1 => n1(n, t).ok().map(|v| (v, "2D(n-2,t-1)")),
        2 if t == 3 && n >= 8 => n23(n).ok().map(|v| (v, "6n-30")),
        2 if n >= 8 => n2(n, t).ok().map(|v| (v, "2D(n-4,t-2)+2D(n-5,t-2)+2D(n-7,t-2)+D(n-6,t-3)+D(n-7,t-3)")),
        3 if t == 4 && n >= 13 => Some((m(n, 4), "M(n,4)=20n-166")),
        _ if d == t && d >= 1 && n >= ndd_valid_from(d) => ndd(d).ok().map(|v| (v, "C(2d,d)")),
        _ => None,
    }
}

/// Upper bound `N(n, 3, 4) <= 20n - 150`, stated for `n >= 9`.
pub fn n34_upper(n: i64) -> Result<u64> {
    range(n >= 9, || format!("the 20n - 150 bound is stated for n >= 9, got {n}"))?;
    Ok((20 * n - 150) as u64)
}

/// `N(n, d, d) = C(2d, d)`, valid once `n >= 4d - 2`.
pub fn ndd(d: i64) -> Result<u64> {
    range((1..=30).contains(&d), || format!("N(n,d,d) needs 1 <= d <= 30, got {d}"))?;
    let d = d as u64;
    Ok((1..=d).fold(1u64, |acc, i| acc * (d + i) / i))
}

/// Smallest `n` from which [`ndd`] applies.
pub fn ndd_valid_from(d: i64) -> i64 {
    4 * d - 2
}

/// `N(n, 3, 3) = 20` for `n >= 10`.
pub fn n33(n: i64) -> Result<u64> {
    range(n >= 10, || format!("N(n,3,3) = 20 needs n >= 10, got {n}"))?;
    Ok(20)
}

/// Ball sizes of `1 a_{n-1}` and `0 1 a_{n-2}` (`a_m` alternating from 1).
///
/// Valid for `0 <= t <= n - 2`; past that the vanishing-`D` convention
/// undercounts balls that consist of single bits or the empty word.
pub fn alt_ball_formulas(n: i64, t: i64) -> Result<(u64, u64)> {
    range(n >= 4 && (0..=n - 2).contains(&t), || {
        format!("needs n >= 4 and 0 <= t <= n - 2, got n={n}, t={t}")
    })?;
    Ok((
        d(n - 1, t) + d(n - 3, t - 2),
        d(n - 2, t) + d(n - 2, t - 1) + d(n - 4, t - 2),
    ))
}

/// `1 a_{n-1}` and `0 1 a_{n-2}`, the words measured by [`alt_ball_formulas`].
pub fn alt_ball_words(n: usize) -> (BinarySequence, BinarySequence) {
    let a = seq("1").concat(&alt(n - 1)).expect("n <= 64");
    let b = seq("01").concat(&alt(n - 2)).expect("n <= 64");
    (a, b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessOrigin {
    /// `x = a_n`, `y = 0 a_{n-1}`.
    AlternatingShift,
    /// One of [`N34_SMALL`].
    Tabulated,
    /// `101010 a_{n-8} 10` / `011001 a_{n-8} 01`.
    OddLength,
    /// `101010 a_{n-8} 01` / `011001 a_{n-8} 10`.
    EvenLength,
    /// Found by exhaustive search.
    Search,
}

/// A pair at distance at least `d` with its radius-`t` intersection size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub x: BinarySequence,
    pub y: BinarySequence,
    pub n: usize,
    pub d: usize,
    pub t: i64,
    pub distance: usize,
    pub intersection: u64,
    pub origin: WitnessOrigin,
}

impl PairWitness {
    pub fn new(x: BinarySequence, y: BinarySequence, d: usize, t: i64, origin: WitnessOrigin) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::LengthMismatch(x.len(), y.len()));
        }
        let distance = levenshtein_distance(&x, &y)?;
        if distance < d {
            return Err(Error::Precondition(format!("d_L({x}, {y}) = {distance} < {d}")));
        }
        Ok(PairWitness {
            x,
            y,
            n: x.len(),
            d,
            t,
            distance,
            intersection: intersection_size(&x, t, &y, t),
            origin,
        })
    }
}

/// The extremal pair for `(n, d)`, measured at radius `t`.
///
/// Supported: `d = 1` with `n >= 2`, and `d = 3` with `n >= 5` (tabulated
/// pairs up to 12, the parity construction from 13).
pub fn construct_extremal(n: usize, d: usize, t: i64) -> Result<PairWitness> {
    range(n <= 64, || format!("n = {n} exceeds 64"))?;
    match d {
        1 if n >= 2 => {
            let x = alt(n);
            let y = seq("0").concat(&alt(n - 1))?;
            PairWitness::new(x, y, d, t, WitnessOrigin::AlternatingShift)
        }
        3 if (5..=12).contains(&n) => {
            let (_, x, y, _) = N34_SMALL[n - 5];
            PairWitness::new(seq(x), seq(y), d, t, WitnessOrigin::Tabulated)
        }
        3 if n >= 13 => {
            let mid = alt(n - 8);
            let (tail_x, tail_y, kind) = if n % 2 == 1 {
                ("10", "01", WitnessOrigin::OddLength)
            } else {
                ("01", "10", WitnessOrigin::EvenLength)
            };
            let x = seq("101010").concat(&mid)?.concat(&seq(tail_x))?;
            let y = seq("011001").concat(&mid)?.concat(&seq(tail_y))?;
            PairWitness::new(x, y, d, t, kind)
        }
        _ => Err(Error::OutOfRange(format!(
            "no extremal construction for n = {n}, d = {d} (supported: d = 1, n >= 2; d = 3, n >= 5)"
        ))),
    }
}
