/// Size caps shared by every enumeration in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Limits {
    /// Largest ring (number of elements) any constructor may produce.
    pub ring_size: usize,
    /// Largest ideal lattice an enumeration may produce.
    pub ideal_count: usize,
    /// Largest graph on which exact clique and domination numbers are computed.
    pub graph_order: usize,
    /// Largest graph on which planarity is decided exactly.
    pub planarity_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            ring_size: 1024,
            ideal_count: 4096,
            graph_order: 64,
            planarity_order: 12,
        }
    }
}
