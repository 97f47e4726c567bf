//! The arc space of a graph: both orientations of every edge, in a fixed
//! lexicographic order so matrices indexed by arcs are reproducible.

use crate::graph::Graph;
use crate::walk::WalkError;

/// All `2m` arcs `(tail, head)` of a graph, sorted lexicographically,
/// with an exact inverse index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcSpace {
    arcs: Vec<(u32, u32)>,
}

impl ArcSpace {
    pub fn from_graph(g: &Graph) -> Result<Self, WalkError> {
        if g.edge_count() == 0 {
            return Err(WalkError::Edgeless);
        }
        let mut arcs = Vec::with_capacity(2 * g.edge_count());
        for u in 0..g.n() {
            for v in g.neighbors(u) {
                arcs.push((u as u32, v as u32));
            }
        }
        // neighbors() ascends and the outer loop ascends, so this is already
        // lexicographic; keep the sort as a guard against representation changes.
        debug_assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        arcs.sort_unstable();
        Ok(ArcSpace { arcs })
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn arc(&self, index: usize) -> (usize, usize) {
        let (t, h) = self.arcs[index];
        (t as usize, h as usize)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().map(|&(t, h)| (t as usize, h as usize))
    }

    pub fn index_of(&self, tail: usize, head: usize) -> Option<usize> {
        self.arcs.binary_search(&(tail as u32, head as u32)).ok()
    }

    /// Index of the reversed arc, which always exists.
    pub fn reversal(&self, index: usize) -> usize {
        let (t, h) = self.arc(index);
        self.index_of(h, t).expect("reverse arc present")
    }
}
