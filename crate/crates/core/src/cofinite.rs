use std::cmp::Ordering;

/// A subset of ℤ that is bounded below and contains every integer from
/// `conductor` on.
///
/// `elements` lists the members strictly below the conductor; `mask` answers
/// membership for `start <= x < conductor` in O(1), where `start` is the
/// smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct CofiniteSet {
    elements: Vec<i64>,
    conductor: i64,
    start: i64,
    mask: Vec<bool>,
}

impl CofiniteSet {
    /// Builds the canonical form of the set `{x : pred(x)}` assuming every
    /// `x < lo` is outside and every `x >= hi` is inside.
    pub(crate) fn from_predicate(lo: i64, hi: i64, mut pred: impl FnMut(i64) -> bool) -> Self {
        debug_assert!(lo <= hi, "window [{lo}, {hi}) is inverted");
        let hi = hi.max(lo);
        let window: Vec<bool> = (lo..hi).map(&mut pred).collect();
        let mut conductor = hi;
        while conductor > lo && window[(conductor - 1 - lo) as usize] {
            conductor -= 1;
        }
        let elements: Vec<i64> = (lo..conductor)
            .filter(|&x| window[(x - lo) as usize])
            .collect();
        Self::from_parts(elements, conductor)
    }

    /// `elements` must be strictly ascending, below `conductor`, and must not
    /// contain `conductor - 1`.
    pub(crate) fn from_parts(elements: Vec<i64>, conductor: i64) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements.last().is_none_or(|&x| x < conductor - 1));
        let start = elements.first().copied().unwrap_or(conductor);
        let mut mask = vec![false; (conductor - start) as usize];
        for &x in &elements {
            mask[(x - start) as usize] = true;
        }
        Self {
            elements,
            conductor,
            start,
            mask,
        }
    }

    #[inline]
    pub(crate) fn contains(&self, x: i64) -> bool {
        if x >= self.conductor {
            true
        } else if x < self.start {
            false
        } else {
            self.mask[(x - self.start) as usize]
        }
    }

    pub(crate) fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub(crate) fn conductor(&self) -> i64 {
        self.conductor
    }

    /// Smallest member.
    pub(crate) fn least(&self) -> i64 {
        self.start
    }

    pub(crate) fn shift(&self, by: i64) -> Self {
        Self {
            elements: self.elements.iter().map(|x| x + by).collect(),
            conductor: self.conductor + by,
            start: self.start + by,
            mask: self.mask.clone(),
        }
    }

    pub(crate) fn is_subset(&self, other: &CofiniteSet) -> bool {
        if self.start < other.start {
            return false;
        }
        (self.start..other.conductor.max(self.start)).all(|x| !self.contains(x) || other.contains(x))
    }
}

/// Canonical order: by conductor, then lexicographically by listed elements.
impl Ord for CofiniteSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor
            .cmp(&other.conductor)
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl PartialOrd for CofiniteSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
