//! Word-array bitset helpers shared by the graph container and the solver.

pub(crate) const WORD_BITS: usize = 64;

#[inline(always)]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

#[inline(always)]
pub(crate) fn set(words: &mut [u64], i: usize) {
    words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
}

#[inline(always)]
pub(crate) fn clear(words: &mut [u64], i: usize) {
    words[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
}

#[inline(always)]
pub(crate) fn test(words: &[u64], i: usize) -> bool {
    (words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 != 0
}

#[inline]
pub(crate) fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn is_empty(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}

/// dst = a & b. All slices must have the same length.
#[inline]
pub(crate) fn intersect_into(dst: &mut [u64], a: &[u64], b: &[u64]) {
    for ((d, &x), &y) in dst.iter_mut().zip(a).zip(b) {
        *d = x & y;
    }
}

/// words &= !mask
#[inline]
pub(crate) fn subtract(words: &mut [u64], mask: &[u64]) {
    for (w, &m) in words.iter_mut().zip(mask) {
        *w &= !m;
    }
}

/// Iterates indices of set bits in ascending order.
pub(crate) fn iter(words: &[u64]) -> BitIter<'_> {
    BitIter {
        words,
        word_idx: 0,
        current: words.first().copied().unwrap_or(0),
    }
}

pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_test_clear_roundtrip() {
        let mut w = vec![0u64; 3];
        for &i in &[0, 63, 64, 100, 191] {
            set(&mut w, i);
            assert!(test(&w, i));
        }
        assert_eq!(count(&w), 5);
        assert_eq!(iter(&w).collect::<Vec<_>>(), vec![0, 63, 64, 100, 191]);
        clear(&mut w, 64);
        assert!(!test(&w, 64));
        assert_eq!(count(&w), 4);
    }

    #[test]
    fn empty_iter() {
        let w: Vec<u64> = vec![];
        assert_eq!(iter(&w).next(), None);
        let z = vec![0u64; 2];
        assert!(is_empty(&z));
        assert_eq!(iter(&z).next(), None);
    }
}
