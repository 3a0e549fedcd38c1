//! Word-level helpers over little-endian `u64` bitmaps.

pub(crate) const WORD: usize = u64::BITS as usize;

pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

#[inline]
pub(crate) fn get(words: &[u64], bit: usize) -> bool {
    words[bit / WORD] >> (bit % WORD) & 1 == 1
}

#[inline]
pub(crate) fn set(words: &mut [u64], bit: usize) {
    words[bit / WORD] |= 1 << (bit % WORD);
}

/// `dst |= src << shift`, discarding bits that fall past the end of `dst`.
pub(crate) fn or_shifted_left(dst: &mut [u64], src: &[u64], shift: usize) {
    let (ws, bs) = (shift / WORD, shift % WORD);
    if ws >= dst.len() {
        return;
    }
    let span = src.len().min(dst.len() - ws);
    if bs == 0 {
        for (d, s) in dst[ws..ws + span].iter_mut().zip(&src[..span]) {
            *d |= *s;
        }
        return;
    }
    for i in 0..span {
        let w = src[i];
        dst[i + ws] |= w << bs;
        if let Some(next) = dst.get_mut(i + ws + 1) {
            *next |= w >> (WORD - bs);
        }
    }
}

/// `dst |= src >> shift`, reading zeros past the end of `src`.
pub(crate) fn or_shifted_right(dst: &mut [u64], src: &[u64], shift: usize) {
    let (ws, bs) = (shift / WORD, shift % WORD);
    for (i, d) in dst.iter_mut().enumerate() {
        let lo = src.get(i + ws).copied().unwrap_or(0);
        if bs == 0 {
            *d |= lo;
        } else {
            let hi = src.get(i + ws + 1).copied().unwrap_or(0);
            *d |= (lo >> bs) | (hi << (WORD - bs));
        }
    }
}

/// Clear every bit at position `>= bits`.
pub(crate) fn mask_tail(words: &mut [u64], bits: usize) {
    let full = bits / WORD;
    let rem = bits % WORD;
    if full < words.len() {
        if rem == 0 {
            words[full] = 0;
        } else {
            words[full] &= (1u64 << rem) - 1;
        }
        for w in &mut words[full + 1..] {
            *w = 0;
        }
    }
}

pub(crate) fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

pub(crate) fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let tz = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i * WORD + tz)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_bits(n: usize, bits: &[usize]) -> Vec<u64> {
        let mut w = vec![0; words_for(n)];
        for &b in bits {
            set(&mut w, b);
        }
        w
    }

    #[test]
    fn shifts_cross_word_boundaries() {
        let src = from_bits(130, &[0, 63, 64, 129]);
        let mut dst = vec![0; words_for(200)];
        or_shifted_left(&mut dst, &src, 70);
        assert_eq!(ones(&dst).collect::<Vec<_>>(), vec![70, 133, 134, 199]);

        let mut back = vec![0; words_for(130)];
        or_shifted_right(&mut back, &dst, 70);
        assert_eq!(ones(&back).collect::<Vec<_>>(), vec![0, 63, 64, 129]);
    }

    #[test]
    fn left_shift_truncates() {
        let src = from_bits(64, &[1, 60]);
        let mut dst = vec![0; 1];
        or_shifted_left(&mut dst, &src, 5);
        assert_eq!(ones(&dst).collect::<Vec<_>>(), vec![6]);
    }

    #[test]
    fn tail_mask() {
        let mut w = vec![u64::MAX; 3];
        mask_tail(&mut w, 70);
        assert_eq!(popcount(&w), 70);
        mask_tail(&mut w, 64);
        assert_eq!(popcount(&w), 64);
    }
}
