//! Basis monomials of the Clifford algebra.
//!
//! A monomial is a strictly increasing list of positive basis indices; the
//! empty list denotes the unit. Products of monomials are computed with exact
//! integer sign arithmetic: over an orthonormal basis every generator squares
//! to the unit, so `e_S * e_T = sign * e_{S xor T}` where the sign counts the
//! transpositions needed to interleave the two index lists.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonomialError {
    #[error("basis indices must be positive (got 0)")]
    ZeroIndex,
    #[error("basis indices must be strictly increasing: {0} followed by {1}")]
    NotIncreasing(u32, u32),
}

/// A basis monomial `e_S`: a finite, strictly increasing set of positive
/// basis indices. The empty set is the algebra unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    indices: Vec<u32>,
}

impl Monomial {
    /// The unit monomial (empty index set).
    pub fn unit() -> Self {
        Monomial { indices: Vec::new() }
    }

    /// The generator `e_i`. Panics if `i == 0`.
    pub fn basis(i: u32) -> Self {
        assert!(i > 0, "basis indices start at 1");
        Monomial { indices: vec![i] }
    }

    /// Builds a monomial from an index list, validating strict increase.
    pub fn new(indices: Vec<u32>) -> Result<Self, MonomialError> {
        for pair in indices.windows(2) {
            if pair[1] <= pair[0] {
                return Err(MonomialError::NotIncreasing(pair[0], pair[1]));
            }
        }
        if indices.first() == Some(&0) {
            return Err(MonomialError::ZeroIndex);
        }
        Ok(Monomial { indices })
    }

    /// Builds from any iterator of indices, sorting and deduplicating.
    pub fn from_set(indices: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = indices.into_iter().filter(|&i| i > 0).collect();
        v.sort_unstable();
        v.dedup();
        Monomial { indices: v }
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn degree(&self) -> usize {
        self.indices.len()
    }

    pub fn is_unit(&self) -> bool {
        self.indices.is_empty()
    }

    /// Parity of the monomial: 0 for even, 1 for odd.
    pub fn parity(&self) -> u8 {
        (self.indices.len() % 2) as u8
    }

    pub fn contains(&self, i: u32) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn max_index(&self) -> Option<u32> {
        self.indices.last().copied()
    }

    /// True when every index lies in `set`.
    pub fn supported_on(&self, set: &[u32]) -> bool {
        self.indices.iter().all(|i| set.binary_search(i).is_ok())
    }

    /// Sign of the reversal `(e_S)^* = (-1)^{k(k-1)/2} e_S` with `k = |S|`.
    pub fn reversal_sign(&self) -> i32 {
        let k = self.indices.len();
        if (k * k.saturating_sub(1) / 2) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Sign of the grading automorphism: `(-1)^{|S|}`.
    pub fn grading_sign(&self) -> i32 {
        if self.indices.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn as_mask(&self) -> Option<u64> {
        match self.indices.last() {
            None => Some(0),
            Some(&m) if m <= 64 => {
                let mut mask = 0u64;
                for &i in &self.indices {
                    mask |= 1u64 << (i - 1);
                }
                Some(mask)
            }
            _ => None,
        }
    }

    fn from_mask(mut mask: u64) -> Self {
        let mut indices = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            let b = mask.trailing_zeros();
            indices.push(b + 1);
            mask &= mask - 1;
        }
        Monomial { indices }
    }
}

/// Product of two basis monomials: `(sign, e_{S xor T})` with the sign
/// `(-1)^{#{(s,t) in S x T : s > t}}` produced by anticommuting the factors
/// into sorted order (squares contribute `+1` on an orthonormal basis).
pub fn mono_mul(s: &Monomial, t: &Monomial) -> (i32, Monomial) {
    if let (Some(ms), Some(mt)) = (s.as_mask(), t.as_mask()) {
        // Bitmask fast path: count, for every index in s, the t-indices below it.
        let mut inversions = 0u32;
        let mut rest = ms;
        while rest != 0 {
            let b = rest.trailing_zeros();
            let below = if b == 0 { 0 } else { mt & ((1u64 << b) - 1) };
            inversions += below.count_ones();
            rest &= rest - 1;
        }
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        return (sign, Monomial::from_mask(ms ^ mt));
    }
    mono_mul_slow(s, t)
}

fn mono_mul_slow(s: &Monomial, t: &Monomial) -> (i32, Monomial) {
    // Merge the two sorted lists; every s-index strictly above a t-index is
    // one transposition. Shared indices cancel out of the result.
    let (a, b) = (s.indices(), t.indices());
    let mut inversions: u64 = 0;
    for &tj in b {
        let above = a.len() - a.partition_point(|&si| si <= tj);
        inversions += above as u64;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    (sign, Monomial { indices: out })
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.indices.as_slice() {
            [] => write!(f, "e{{}}"),
            [i] => write!(f, "e{i}"),
            more => {
                write!(f, "e{{")?;
                for (k, i) in more.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{i}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ix: &[u32]) -> Monomial {
        Monomial::new(ix.to_vec()).unwrap()
    }

    /// Brute-force sign oracle: concatenate the generator strings and bubble
    /// them into sorted order, counting swaps; equal neighbours annihilate.
    fn naive_sign(s: &Monomial, t: &Monomial) -> (i32, Monomial) {
        let mut word: Vec<u32> = s.indices().to_vec();
        word.extend_from_slice(t.indices());
        let mut sign = 1i32;
        // bubble sort with anticommutation
        loop {
            let mut swapped = false;
            let mut k = 0;
            while k + 1 < word.len() {
                if word[k] > word[k + 1] {
                    word.swap(k, k + 1);
                    sign = -sign;
                    swapped = true;
                }
                k += 1;
            }
            if !swapped {
                break;
            }
        }
        // cancel equal adjacent generators (e_i^2 = 1)
        let mut reduced: Vec<u32> = Vec::new();
        for &i in &word {
            if reduced.last() == Some(&i) {
                reduced.pop();
            } else {
                reduced.push(i);
            }
        }
        (sign, Monomial { indices: reduced })
    }

    #[test]
    fn unit_and_singletons() {
        assert_eq!(mono_mul(&m(&[1]), &m(&[2])), (1, m(&[1, 2])));
        assert_eq!(mono_mul(&m(&[2]), &m(&[1])), (-1, m(&[1, 2])));
        assert_eq!(mono_mul(&m(&[1]), &m(&[1])), (1, Monomial::unit()));
    }

    #[test]
    fn matches_naive_oracle_small() {
        let sets: Vec<Monomial> = vec![
            m(&[]),
            m(&[1]),
            m(&[2]),
            m(&[3]),
            m(&[1, 2]),
            m(&[1, 3]),
            m(&[2, 3]),
            m(&[1, 2, 3]),
            m(&[1, 4, 6]),
            m(&[2, 5]),
        ];
        for s in &sets {
            for t in &sets {
                assert_eq!(mono_mul(s, t), naive_sign(s, t), "{s} * {t}");
            }
        }
    }

    #[test]
    fn slow_path_agrees_with_fast_path() {
        let cases = [
            (m(&[1, 3, 64]), m(&[2, 64])),
            (m(&[5, 9]), m(&[1, 5, 12])),
            (m(&[1, 2, 3, 4]), m(&[2, 4, 6, 8])),
        ];
        for (s, t) in &cases {
            assert_eq!(mono_mul(s, t), mono_mul_slow(s, t));
        }
    }

    #[test]
    fn large_indices_take_slow_path() {
        let s = m(&[1, 100]);
        let t = m(&[70]);
        // 100 > 70: one inversion
        assert_eq!(mono_mul(&s, &t), (-1, m(&[1, 70, 100])));
        assert_eq!(mono_mul(&s, &t), naive_sign(&s, &t));
    }

    #[test]
    fn invalid_monomials_rejected() {
        assert!(Monomial::new(vec![1, 1]).is_err());
        assert!(Monomial::new(vec![3, 1]).is_err());
        assert!(Monomial::new(vec![0, 1]).is_err());
    }

    #[test]
    fn reversal_sign_period() {
        assert_eq!(m(&[]).reversal_sign(), 1);
        assert_eq!(m(&[1]).reversal_sign(), 1);
        assert_eq!(m(&[1, 2]).reversal_sign(), -1);
        assert_eq!(m(&[1, 2, 3]).reversal_sign(), -1);
        assert_eq!(m(&[1, 2, 3, 4]).reversal_sign(), 1);
    }
}
