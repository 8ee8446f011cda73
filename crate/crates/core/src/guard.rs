/// Limits that keep the exhaustive routines from exploding combinatorially.
///
/// The defaults are deliberately small; callers that know what they are doing
/// (the verification sweeps, the CLI override flags) raise them explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Largest degree for which all of S_n may be listed.
    pub max_enumeration_degree: usize,
    /// Largest degree for commuting-tuple enumeration in S_n.
    pub max_tuple_degree: usize,
    /// Largest tuple length for any brute-force tuple count.
    pub max_tuple_len: usize,
    /// Largest wreath-product order for brute-force tuple counting.
    pub max_group_order: u128,
    /// Largest wreath-product order that may be listed element by element.
    pub max_enumeration_order: u128,
    /// Class-data nodes the centralizer recursion may expand.
    pub node_budget: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_enumeration_degree: 8,
            max_tuple_degree: 6,
            max_tuple_len: 4,
            max_group_order: 200,
            max_enumeration_order: 40_320,
            node_budget: 10_000_000,
        }
    }
}
