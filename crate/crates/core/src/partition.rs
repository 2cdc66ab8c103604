use crate::word::LabeledWord;

/// A partition of the positions `0..k`, stored as "position -> least member
/// of its class".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalencePartition {
    rep: Vec<u64>,
}

impl EquivalencePartition {
    /// `rep[i]` must be the minimum of the class of `i`.
    pub(crate) fn from_reps(rep: Vec<u64>) -> Self {
        debug_assert!(rep
            .iter()
            .enumerate()
            .all(|(i, &r)| r <= i as u64 && rep[r as usize] == r));
        Self { rep }
    }

    /// Number of positions, `k`.
    pub fn len(&self) -> usize {
        self.rep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rep.is_empty()
    }

    pub fn reps(&self) -> &[u64] {
        &self.rep
    }

    pub fn rep(&self, i: usize) -> u64 {
        self.rep[i]
    }

    pub fn same_class(&self, i: usize, j: usize) -> bool {
        self.rep[i] == self.rep[j]
    }

    /// Representatives are exactly the fixed points of `rep`.
    pub fn class_count(&self) -> usize {
        self.rep
            .iter()
            .enumerate()
            .filter(|&(i, &r)| r == i as u64)
            .count()
    }

    /// The classes in order of their least element.
    pub fn classes(&self) -> Vec<Vec<u64>> {
        let mut slot = vec![usize::MAX; self.rep.len()];
        let mut out: Vec<Vec<u64>> = Vec::new();
        for (i, &r) in self.rep.iter().enumerate() {
            let r = r as usize;
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(i as u64);
        }
        out
    }

    pub fn to_word(&self) -> LabeledWord {
        LabeledWord::new(self.rep.clone())
    }

    pub fn into_word(self) -> LabeledWord {
        LabeledWord::new(self.rep)
    }
}
