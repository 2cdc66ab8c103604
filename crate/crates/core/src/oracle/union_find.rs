/// Disjoint sets over `0..len` with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        Self {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            let grand = self.parent[self.parent[i]];
            self.parent[i] = grand;
            i = grand;
        }
        i
    }

    /// Returns `false` if `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    /// For every element, the least element of its set.
    ///
    /// Roots are arbitrary after balancing, so the minimum is recovered in
    /// one ascending scan: the first element seen from each root is its min.
    pub fn min_labels(&mut self) -> Vec<u64> {
        let n = self.parent.len();
        let mut min_of_root = vec![u64::MAX; n];
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let r = self.find(i);
            if min_of_root[r] == u64::MAX {
                min_of_root[r] = i as u64;
            }
            out.push(min_of_root[r]);
        }
        out
    }
}
