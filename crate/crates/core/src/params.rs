/// Search limits shared by every bounded computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    /// Ball radius for chamber searches and orbit tests.
    pub radius: usize,
    /// Cutoff for product-order iteration.
    pub cutoff: u32,
    /// Node cap for enumerations.
    pub cap: usize,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            radius: 10,
            cutoff: 100,
            cap: 100_000,
        }
    }
}
