use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// Union–find over `0..n` with path halving and union by size.
#[derive(Clone, Debug)]
pub(crate) struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
            size: alloc::vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Blocks in order of their smallest element, members ascending.
    pub(crate) fn groups(&mut self) -> Vec<Vec<usize>> {
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut order: Vec<usize> = Vec::new();
        for x in 0..self.parent.len() {
            let r = self.find(x);
            let entry = by_root.entry(r).or_default();
            if entry.is_empty() {
                order.push(r);
            }
            entry.push(x);
        }
        order
            .into_iter()
            .map(|r| by_root.remove(&r).unwrap_or_default())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unions_and_groups() {
        let mut s = DisjointSet::new(6);
        assert!(s.union(0, 3));
        assert!(s.union(4, 3));
        assert!(!s.union(0, 4));
        assert!(s.union(1, 5));
        assert_eq!(
            s.groups(),
            alloc::vec![alloc::vec![0, 3, 4], alloc::vec![1, 5], alloc::vec![2]]
        );
    }
}
