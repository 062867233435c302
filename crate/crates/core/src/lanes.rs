//! Fixed-width lane bitvector used for coincidence detectors and firing masks.
//!
//! Lanes are 0-based inside the library; every text format renders them
//! 1-based.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaneSet {
    width: usize,
    words: Vec<u64>,
}

impl LaneSet {
    pub fn empty(width: usize) -> Self {
        LaneSet {
            width,
            words: vec![0; width.div_ceil(WORD)],
        }
    }

    pub fn full(width: usize) -> Self {
        let mut s = LaneSet::empty(width);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn from_lanes(width: usize, lanes: impl IntoIterator<Item = usize>) -> Self {
        let mut s = LaneSet::empty(width);
        for lane in lanes {
            s.insert(lane);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.width % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn insert(&mut self, lane: usize) {
        assert!(lane < self.width, "lane {lane} out of range {}", self.width);
        self.words[lane / WORD] |= 1 << (lane % WORD);
    }

    pub fn contains(&self, lane: usize) -> bool {
        lane < self.width && self.words[lane / WORD] & (1 << (lane % WORD)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and(&self, other: &LaneSet) -> LaneSet {
        debug_assert_eq!(self.width, other.width);
        LaneSet {
            width: self.width,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union_with(&mut self, other: &LaneSet) {
        debug_assert_eq!(self.width, other.width);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &LaneSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Ascending 0-based lane indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    /// Lane 1 first, e.g. `010`.
    pub fn bitstring(&self) -> String {
        (0..self.width)
            .map(|i| if self.contains(i) { '1' } else { '0' })
            .collect()
    }

    /// 1-based list, e.g. `[1,3]`.
    pub fn list_1based(&self) -> String {
        let items: Vec<String> = self.iter().map(|i| (i + 1).to_string()).collect();
        format!("[{}]", items.join(","))
    }
}

impl fmt::Debug for LaneSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaneSet({})", self.bitstring())
    }
}
