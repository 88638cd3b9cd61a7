/// Inclusive intervals `[i, j]`; intervals with `j < i` are empty and are
/// never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntervalSet {
    intervals: Vec<(isize, isize)>,
    sorted: bool,
}

impl IntervalSet {
    pub fn new() -> Self {
        Self { intervals: Vec::new(), sorted: true }
    }

    pub fn push(&mut self, i: isize, j: isize) {
        if j < i {
            return;
        }
        if let Some(&(last, _)) = self.intervals.last() {
            if i < last {
                self.sorted = false;
            }
        }
        self.intervals.push((i, j));
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (isize, isize)> + '_ {
        self.intervals.iter().copied()
    }

    /// Left endpoints (the `StartOcc` set), ascending and deduplicated.
    pub fn starts(&self) -> Vec<isize> {
        let mut s: Vec<isize> = self.intervals.iter().map(|&(i, _)| i).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Size of the union. Linear when intervals were pushed in
    /// left-endpoint order, otherwise sorts a copy first.
    pub fn union_size(&self) -> usize {
        if self.sorted {
            union_size_sorted(self.intervals.iter().copied())
        } else {
            let mut v = self.intervals.clone();
            v.sort_unstable();
            union_size_sorted(v.into_iter())
        }
    }
}

impl FromIterator<(isize, isize)> for IntervalSet {
    fn from_iter<I: IntoIterator<Item = (isize, isize)>>(iter: I) -> Self {
        let mut s = Self::new();
        for (i, j) in iter {
            s.push(i, j);
        }
        s
    }
}

/// Union size of intervals given in nondecreasing left-endpoint order.
/// Empty intervals (`j < i`) contribute nothing.
pub fn union_size_sorted(intervals: impl Iterator<Item = (isize, isize)>) -> usize {
    let mut total = 0usize;
    // first position not yet counted
    let mut frontier = isize::MIN;
    for (i, j) in intervals {
        if j < i {
            continue;
        }
        let from = i.max(frontier);
        if j >= from {
            total += (j - from + 1) as usize;
            frontier = j + 1;
        }
    }
    total
}
