//! Finite subsets of a ground set `[n] = {1, ..., n}`, the vertex type of the
//! Kneser and Johnson families.
//!
//! Subsets are packed into a `u64` (element `e` lives at bit `e - 1`), which
//! caps the ground set at 64 elements. Generated families never get close.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{BitAnd, BitOr, Sub};

use crate::error::{invalid, Result};

/// Largest supported ground set.
pub const MAX_GROUND: usize = 64;

/// A set of ground elements, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn ground(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND);
        if n == 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: u8) -> Self {
        debug_assert!((1..=64).contains(&e));
        ElementSet(1u64 << (e - 1))
    }

    pub fn from_elements<I: IntoIterator<Item = u8>>(elems: I) -> Self {
        elems.into_iter().fold(Self::EMPTY, |s, e| s | Self::singleton(e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: u8) -> bool {
        (1..=64).contains(&e) && self.0 & (1u64 << (e - 1)) != 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest element, if any.
    pub fn max(self) -> Option<u8> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as u8)
    }

    /// Elements in ascending order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }
}

impl BitOr for ElementSet {
    type Output = Self;
    fn bitor(self, rhs: Self) -> Self {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitAnd for ElementSet {
    type Output = Self;
    fn bitand(self, rhs: Self) -> Self {
        ElementSet(self.0 & rhs.0)
    }
}

impl Sub for ElementSet {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        ElementSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    /// Comma-separated ascending elements, e.g. `1,2,3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = u8;
    fn next(&mut self) -> Option<u8> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as u8 + 1;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl IntoIterator for ElementSet {
    type Item = u8;
    type IntoIter = Elements;
    fn into_iter(self) -> Elements {
        self.iter()
    }
}

/// A vertex of a set-labelled family: an `r`-subset of `[ground]`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetVertex {
    set: ElementSet,
    ground: u8,
}

impl SubsetVertex {
    pub fn new(set: ElementSet, ground: usize) -> Result<Self> {
        if ground > MAX_GROUND {
            return Err(invalid!("ground set [{ground}] exceeds the supported maximum of {MAX_GROUND}"));
        }
        if !set.is_subset(ElementSet::ground(ground)) {
            return Err(invalid!("subset {{{set}}} is not contained in [{ground}]"));
        }
        Ok(SubsetVertex { set, ground: ground as u8 })
    }

    /// Builds a vertex from explicit elements; duplicates are rejected.
    pub fn from_elements(elems: &[u8], ground: usize) -> Result<Self> {
        let set = ElementSet::from_elements(elems.iter().copied().filter(|&e| (1..=64).contains(&e)));
        if set.len() != elems.len() {
            return Err(invalid!("elements {elems:?} contain duplicates or values outside 1..=64"));
        }
        Self::new(set, ground)
    }

    pub fn set(self) -> ElementSet {
        self.set
    }

    pub fn ground(self) -> usize {
        self.ground as usize
    }

    pub fn len(self) -> usize {
        self.set.len()
    }

    pub fn is_empty(self) -> bool {
        self.set.is_empty()
    }

    pub fn elements(self) -> Elements {
        self.set.iter()
    }

    /// Position of this subset among all `|self|`-subsets of the ground set in
    /// colexicographic order (the combinatorial number system).
    pub fn colex_rank(self) -> usize {
        colex_rank(self.set)
    }
}

impl fmt::Debug for SubsetVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.set)
    }
}

impl fmt::Display for SubsetVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.set)
    }
}

/// Binomial coefficient; saturates instead of overflowing.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

pub(crate) fn colex_rank(set: ElementSet) -> usize {
    set.iter().enumerate().map(|(i, e)| binomial(e as usize - 1, i + 1)).sum()
}

/// All `r`-subsets of `[n]` in colexicographic order.
///
/// Numeric order of the bitmasks coincides with colex order, so this walks
/// masks of popcount `r` upward (Gosper's hack).
pub fn colex_subsets(n: usize, r: usize) -> impl Iterator<Item = ElementSet> {
    let limit = 1u128 << n.min(64);
    let first: u128 = if r == 0 { 0 } else { (1u128 << r) - 1 };
    let mut next = if r > n { None } else { Some(first) };
    core::iter::from_fn(move || {
        let cur = next?;
        if r == 0 {
            next = None;
        } else {
            let c = cur & cur.wrapping_neg();
            let ripple = cur + c;
            let succ = (((ripple ^ cur) >> 2) / c) | ripple;
            next = (succ < limit).then_some(succ);
        }
        Some(ElementSet(cur as u64))
    })
}

/// A block of ground elements with a fixed linear order `b_1, ..., b_m`,
/// supporting the prefix `B_{<=k} = {b_1..b_k}` and suffix
/// `B_{>=k} = {b_{m-k+1}..b_m}` selectors of the ladder constructions.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct OrderedBlock {
    elems: Vec<u8>,
}

impl OrderedBlock {
    /// The elements of `set`, ascending.
    pub fn ascending(set: ElementSet) -> Self {
        OrderedBlock { elems: set.iter().collect() }
    }

    /// Concatenation of the given (disjoint) sets, each listed ascending.
    pub fn chain(parts: &[ElementSet]) -> Self {
        debug_assert!(parts.iter().enumerate().all(|(i, a)| parts[i + 1..].iter().all(|b| a.is_disjoint(*b))));
        OrderedBlock { elems: parts.iter().flat_map(|p| p.iter()).collect() }
    }

    /// The same order with `e` removed.
    pub fn without(&self, e: u8) -> Self {
        OrderedBlock { elems: self.elems.iter().copied().filter(|&x| x != e).collect() }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// The `i`-th element, 1-based as in `b_1, ..., b_m`.
    pub fn nth(&self, i: usize) -> Option<u8> {
        i.checked_sub(1).and_then(|i| self.elems.get(i).copied())
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.elems
    }

    pub fn set(&self) -> ElementSet {
        ElementSet::from_elements(self.elems.iter().copied())
    }

    /// `B_{<=k}`: the first `k` elements.
    pub fn prefix(&self, k: usize) -> ElementSet {
        debug_assert!(k <= self.len());
        ElementSet::from_elements(self.elems[..k].iter().copied())
    }

    /// `B_{>=k}`: the last `k` elements.
    pub fn suffix(&self, k: usize) -> ElementSet {
        debug_assert!(k <= self.len());
        ElementSet::from_elements(self.elems[self.len() - k..].iter().copied())
    }
}

impl fmt::Debug for OrderedBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.elems).finish()
    }
}
