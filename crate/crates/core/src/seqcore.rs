//! Binary words of length at most 64, stored in one machine word.
//!
//! Positions are 1-based in the public API (`x_1 ... x_n`). Internally the
//! word is kept as an `n`-bit integer whose most significant bit is `x_1`, so
//! that for equal lengths integer order and lexicographic order coincide.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_LEN: usize = 64;

#[inline]
pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// A binary word `x_1 x_2 ... x_n` with `n <= 64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinarySequence {
    // Field order matters for the derived `Ord`: shorter words first, then
    // lexicographic order among words of the same length.
    len: u8,
    bits: u64,
}

impl BinarySequence {
    pub const EMPTY: BinarySequence = BinarySequence { len: 0, bits: 0 };

    /// Builds a word from its integer value, `x_1` being the most significant
    /// of the `len` low bits. Higher bits of `value` are discarded.
    pub fn from_value(value: u64, len: usize) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::TooLong(len));
        }
        Ok(Self::from_value_unchecked(value, len))
    }

    #[inline]
    pub(crate) fn from_value_unchecked(value: u64, len: usize) -> Self {
        debug_assert!(len <= MAX_LEN);
        BinarySequence {
            len: len as u8,
            bits: value & low_mask(len),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut bits = 0u64;
        let mut len = 0usize;
        for (position, ch) in text.chars().enumerate() {
            let bit = match ch {
                '0' => 0,
                '1' => 1,
                found => return Err(Error::InvalidCharacter { position, found }),
            };
            len += 1;
            if len > MAX_LEN {
                return Err(Error::TooLong(text.chars().count()));
            }
            bits = (bits << 1) | bit;
        }
        Ok(BinarySequence {
            len: len as u8,
            bits,
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Integer value of the word (`x_1` most significant).
    #[inline]
    pub fn value(&self) -> u64 {
        self.bits
    }

    /// Bit `x_i`, 1-based. Panics if `i` is outside `1..=len`.
    #[inline]
    pub fn bit(&self, i: usize) -> u8 {
        assert!(
            i >= 1 && i <= self.len(),
            "bit index {i} out of range 1..={}",
            self.len
        );
        ((self.bits >> (self.len() - i)) & 1) as u8
    }

    pub fn first(&self) -> Option<u8> {
        (!self.is_empty()).then(|| self.bit(1))
    }

    pub fn last(&self) -> Option<u8> {
        (!self.is_empty()).then(|| self.bit(self.len()))
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (1..=self.len()).map(move |i| self.bit(i))
    }

    pub fn complement(&self) -> Self {
        BinarySequence {
            len: self.len,
            bits: !self.bits & low_mask(self.len()),
        }
    }

    pub fn reverse(&self) -> Self {
        if self.is_empty() {
            return *self;
        }
        BinarySequence {
            len: self.len,
            bits: self.bits.reverse_bits() >> (64 - self.len()),
        }
    }

    pub fn concat(&self, other: &BinarySequence) -> Result<Self> {
        let len = self.len() + other.len();
        if len > MAX_LEN {
            return Err(Error::TooLong(len));
        }
        let high = self.bits.checked_shl(other.len() as u32).unwrap_or(0);
        Ok(BinarySequence {
            len: len as u8,
            bits: high | other.bits,
        })
    }

    /// Appends a single bit.
    pub fn push(&self, bit: u8) -> Result<Self> {
        self.concat(&BinarySequence {
            len: 1,
            bits: u64::from(bit & 1),
        })
    }

    /// The projection `x_i ... x_j` (1-based, inclusive). `i = j + 1` gives
    /// the empty word.
    pub fn project(&self, i: usize, j: usize) -> Result<Self> {
        if i < 1 || j > self.len() || i > j + 1 {
            return Err(Error::IndexOutOfRange {
                i,
                j,
                len: self.len(),
            });
        }
        let len = j + 1 - i;
        let shifted = self.bits >> (self.len() - j);
        Ok(Self::from_value_unchecked(shifted, len))
    }

    /// First `k` bits.
    pub fn prefix(&self, k: usize) -> Self {
        self.project(1, k.min(self.len())).expect("prefix within range")
    }

    /// Last `k` bits.
    pub fn suffix(&self, k: usize) -> Self {
        let k = k.min(self.len());
        self.project(self.len() - k + 1, self.len())
            .expect("suffix within range")
    }

    /// Removes the bits at the given 0-based positions.
    pub fn delete_positions(&self, positions: &[usize]) -> Self {
        let mut bits = 0u64;
        let mut len = 0usize;
        for i in 1..=self.len() {
            if !positions.contains(&(i - 1)) {
                bits = (bits << 1) | u64::from(self.bit(i));
                len += 1;
            }
        }
        Self::from_value_unchecked(bits, len)
    }

    pub fn hamming_distance(&self, other: &BinarySequence) -> Result<usize> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok((self.bits ^ other.bits).count_ones() as usize)
    }

    /// True iff `x_k = x_{k+2}` for every valid `k`.
    pub fn is_two_periodic(&self) -> bool {
        if self.len() <= 2 {
            return true;
        }
        let n = self.len();
        let shifted = self.bits >> 2;
        (shifted ^ self.bits) & low_mask(n - 2) == 0
    }

    /// Two-periodic with `x_1 != x_2`; words of length at most one count as
    /// alternating.
    pub fn is_alternating(&self) -> bool {
        self.len() <= 1 || (self.is_two_periodic() && self.bit(1) != self.bit(2))
    }

    pub fn runs(&self) -> Vec<Run> {
        let mut runs = Vec::new();
        let mut start = 1;
        for i in 2..=self.len() + 1 {
            if i > self.len() || self.bit(i) != self.bit(start) {
                runs.push(Run {
                    start,
                    end: i - 1,
                    symbol: self.bit(start),
                });
                start = i;
            }
        }
        runs
    }

    pub fn run_count(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        let changes = (self.bits ^ (self.bits >> 1)) & low_mask(self.len() - 1);
        1 + changes.count_ones() as usize
    }
}

/// `alternating(n, first)`: `first, !first, first, ...` of length `n`.
pub fn alternating(n: usize, first: u8) -> Result<BinarySequence> {
    if n > MAX_LEN {
        return Err(Error::TooLong(n));
    }
    // 0b...0101 has x_n = 1; choose the pattern whose x_1 equals `first`.
    let ones_at_odd_from_right = 0x5555_5555_5555_5555u64;
    let pattern = if (n % 2 == 1) == (first & 1 == 1) {
        ones_at_odd_from_right
    } else {
        !ones_at_odd_from_right
    };
    Ok(BinarySequence::from_value_unchecked(pattern, n))
}

/// The alternating word of length `n` starting with 1.
pub fn alt(n: usize) -> BinarySequence {
    alternating(n, 1).expect("alternating word length within limit")
}

/// A maximal block of equal symbols, 1-based inclusive bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub start: usize,
    pub end: usize,
    pub symbol: u8,
}

impl Run {
    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for BinarySequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BinarySequence::parse(s)
    }
}

impl Serialize for BinarySequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinarySequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        BinarySequence::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for parsing a literal in tests and constant tables.
pub fn seq(text: &str) -> BinarySequence {
    BinarySequence::parse(text).unwrap_or_else(|e| panic!("bad literal {text:?}: {e}"))
}

/// All words of length `n` in increasing order.
pub fn all_words(n: usize) -> impl Iterator<Item = BinarySequence> {
    assert!(n < 64, "cannot enumerate all words of length {n}");
    (0..1u64 << n).map(move |v| BinarySequence::from_value_unchecked(v, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(seq("").len(), 0);
        let x = seq("1010");
        assert_eq!(x.iter().collect::<Vec<_>>(), vec![1, 0, 1, 0]);
        assert_eq!(seq("011001010").to_string(), "011001010");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(
            BinarySequence::parse("10a1"),
            Err(Error::InvalidCharacter {
                position: 2,
                found: 'a'
            })
        );
        let long = "1".repeat(65);
        assert_eq!(BinarySequence::parse(&long), Err(Error::TooLong(65)));
        assert_eq!(BinarySequence::parse(&"0".repeat(64)).unwrap().len(), 64);
    }

    #[test]
    fn complement_and_reverse() {
        assert_eq!(seq("1010").complement(), seq("0101"));
        assert_eq!(seq("0110010").complement().complement(), seq("0110010"));
        assert_eq!(seq("").complement(), seq(""));
        assert_eq!(seq("100").reverse(), seq("001"));
        assert_eq!(seq("011001010").reverse().reverse(), seq("011001010"));
        assert_eq!(seq("010").reverse(), seq("010"));
        assert_eq!(seq("").reverse(), seq(""));
        let full = BinarySequence::from_value(1, 64).unwrap();
        assert_eq!(full.reverse().bit(1), 1);
    }

    #[test]
    fn concat_cases() {
        assert_eq!(seq("10").concat(&seq("01")).unwrap(), seq("1001"));
        assert_eq!(seq("0110").concat(&seq("")).unwrap(), seq("0110"));
        let inner = seq("10101").concat(&seq("10")).unwrap();
        assert_eq!(seq("101010").concat(&inner).unwrap(), seq("1010101010110"));
        let a = seq(&"1".repeat(40));
        assert_eq!(a.concat(&a), Err(Error::TooLong(80)));
        let b = seq(&"1".repeat(32));
        assert_eq!(b.concat(&b).unwrap().value(), u64::MAX);
    }

    #[test]
    fn project_cases() {
        let x = seq("1010");
        assert_eq!(x.project(2, 3).unwrap(), seq("01"));
        assert_eq!(x.project(1, 4).unwrap(), seq("1010"));
        assert_eq!(x.project(3, 2).unwrap(), seq(""));
        assert!(x.project(0, 2).is_err());
        assert!(x.project(2, 5).is_err());
        assert!(x.project(4, 2).is_err());
    }

    #[test]
    fn alternating_words() {
        assert_eq!(alternating(5, 1).unwrap(), seq("10101"));
        assert_eq!(alternating(1, 0).unwrap(), seq("0"));
        assert_eq!(alternating(0, 1).unwrap(), seq(""));
        assert_eq!(alternating(6, 0).unwrap(), seq("010101"));
        assert!(seq("10101").is_alternating());
        assert!(!seq("1100").is_two_periodic());
        assert!(!seq("1100").is_alternating());
        assert!(seq("0").is_alternating());
        assert!(seq("1111").is_two_periodic());
        assert!(!seq("1111").is_alternating());
        assert!(!seq("0110").complement().is_two_periodic());
    }

    #[test]
    fn runs_cases() {
        let r = |s, e, b| Run {
            start: s,
            end: e,
            symbol: b,
        };
        assert_eq!(seq("11011").runs(), vec![r(1, 2, 1), r(3, 3, 0), r(4, 5, 1)]);
        assert_eq!(seq("0000").runs(), vec![r(1, 4, 0)]);
        assert!(seq("").runs().is_empty());
    }

    #[test]
    fn serde_uses_bit_strings() {
        let json = serde_json::to_string(&seq("0110")).unwrap();
        assert_eq!(json, "\"0110\"");
        let back: BinarySequence = serde_json::from_str(&json).unwrap();
        assert_eq!(back, seq("0110"));
        assert!(serde_json::from_str::<BinarySequence>("\"012\"").is_err());
    }

    fn word() -> impl Strategy<Value = BinarySequence> {
        (0usize..=64, any::<u64>()).prop_map(|(n, v)| BinarySequence::from_value(v, n).unwrap())
    }

    fn short_word() -> impl Strategy<Value = BinarySequence> {
        (0usize..=32, any::<u64>()).prop_map(|(n, v)| BinarySequence::from_value(v, n).unwrap())
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(x in word()) {
            prop_assert_eq!(BinarySequence::parse(&x.to_string()).unwrap(), x);
        }

        #[test]
        fn involutions(x in word()) {
            prop_assert_eq!(x.complement().complement(), x);
            prop_assert_eq!(x.reverse().reverse(), x);
        }

        #[test]
        fn reverse_of_concat(u in short_word(), v in short_word()) {
            let lhs = u.concat(&v).unwrap().reverse();
            let rhs = v.reverse().concat(&u.reverse()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn projections_split(x in word(), k in 0usize..=64) {
            let k = k.min(x.len());
            let left = x.project(1, k).unwrap();
            let right = x.project(k + 1, x.len()).unwrap();
            prop_assert_eq!(left.concat(&right).unwrap(), x);
        }

        #[test]
        fn run_count_matches_changes(x in word()) {
            let changes = (1..x.len()).filter(|&i| x.bit(i) != x.bit(i + 1)).count();
            let expected = if x.is_empty() { 0 } else { 1 + changes };
            prop_assert_eq!(x.runs().len(), expected);
            prop_assert_eq!(x.run_count(), expected);
        }

        #[test]
        fn alternating_has_n_runs(n in 0usize..=64) {
            prop_assert_eq!(alternating(n, 1).unwrap().runs().len(), n);
        }
    }
}
