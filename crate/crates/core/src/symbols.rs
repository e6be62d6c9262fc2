use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

/// A set of symbols drawn from `0..64`, packed into one word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SymbolSet(u64);

impl SymbolSet {
    pub const EMPTY: SymbolSet = SymbolSet(0);

    /// All symbols `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            SymbolSet(u64::MAX)
        } else {
            SymbolSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(sym: usize) -> Self {
        SymbolSet(1u64 << sym)
    }

    pub fn from_bits(bits: u64) -> Self {
        SymbolSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, sym: usize) -> bool {
        sym < 64 && self.0 & (1u64 << sym) != 0
    }

    pub fn insert(&mut self, sym: usize) {
        self.0 |= 1u64 << sym;
    }

    pub fn remove(&mut self, sym: usize) {
        self.0 &= !(1u64 << sym);
    }

    /// The only member, if the set has exactly one.
    pub fn single(self) -> Option<usize> {
        (self.0 != 0 && self.0 & (self.0 - 1) == 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

impl FromIterator<usize> for SymbolSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = SymbolSet::EMPTY;
        for sym in iter {
            set.insert(sym);
        }
        set
    }
}

impl IntoIterator for SymbolSet {
    type Item = usize;
    type IntoIter = Bits;

    fn into_iter(self) -> Bits {
        self.iter()
    }
}

impl BitOr for SymbolSet {
    type Output = SymbolSet;
    fn bitor(self, rhs: SymbolSet) -> SymbolSet {
        SymbolSet(self.0 | rhs.0)
    }
}

impl BitAnd for SymbolSet {
    type Output = SymbolSet;
    fn bitand(self, rhs: SymbolSet) -> SymbolSet {
        SymbolSet(self.0 & rhs.0)
    }
}

impl Sub for SymbolSet {
    type Output = SymbolSet;
    fn sub(self, rhs: SymbolSet) -> SymbolSet {
        SymbolSet(self.0 & !rhs.0)
    }
}

impl Not for SymbolSet {
    type Output = SymbolSet;
    fn not(self) -> SymbolSet {
        SymbolSet(!self.0)
    }
}

impl fmt::Debug for SymbolSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone)]
pub struct Bits(u64);

impl Bits {
    pub fn new(word: u64) -> Self {
        Bits(word)
    }
}

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let bit = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(bit)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}
