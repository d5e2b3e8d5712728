//! Label sets over `{1..d}` packed into a single `u128`.

use std::fmt;

/// Largest supported label universe.
pub const MAX_LABELS: usize = 128;

/// A subset of `{1..=MAX_LABELS}`; label `i` lives in bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LabelSet(u128);

impl LabelSet {
    pub const EMPTY: LabelSet = LabelSet(0);

    pub fn from_bits(bits: u128) -> Self {
        LabelSet(bits)
    }

    pub fn bits(&self) -> u128 {
        self.0
    }

    /// Panics unless `1 <= label <= MAX_LABELS`.
    pub fn singleton(label: usize) -> Self {
        assert!((1..=MAX_LABELS).contains(&label), "label {label} out of range");
        LabelSet(1u128 << (label - 1))
    }

    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        labels.into_iter().fold(LabelSet::EMPTY, |acc, l| acc.union(LabelSet::singleton(l)))
    }

    pub fn insert(&mut self, label: usize) {
        *self = self.union(LabelSet::singleton(label));
    }

    pub fn contains(&self, label: usize) -> bool {
        (1..=MAX_LABELS).contains(&label) && self.0 >> (label - 1) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 | other.0)
    }

    pub fn intersects(self, other: LabelSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Largest label present, 0 for the empty set.
    pub fn max_label(&self) -> usize {
        128 - self.0.leading_zeros() as usize
    }

    /// Ascending iterator over labels.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let t = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(t + 1)
        })
    }

    /// Applies a label renaming; `perm[i - 1]` is the new name of label `i`.
    pub fn rename(&self, perm: &[usize]) -> LabelSet {
        LabelSet::from_labels(self.iter().map(|l| perm[l - 1]))
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for LabelSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        LabelSet::from_labels(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = LabelSet::from_labels([1, 3]);
        let b = LabelSet::from_labels([2, 3]);
        assert!(a.intersects(b));
        assert!(!a.intersects(LabelSet::singleton(2)));
        assert_eq!(a.union(b).iter().collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(a.max_label(), 3);
        assert_eq!(LabelSet::EMPTY.max_label(), 0);
        assert!(LabelSet::singleton(128).contains(128));
        assert!(!a.contains(0));
    }

    #[test]
    fn rename_swaps() {
        let a = LabelSet::from_labels([1]);
        assert_eq!(a.rename(&[2, 1]), LabelSet::singleton(2));
    }
}
