//! Bit-parallel GF(2) linear algebra on column vectors of up to 32 coordinates.

/// Incremental reduced basis over GF(2). Each stored row has a distinct
/// leading (highest) set bit and is fully reduced against the others.
#[derive(Clone, Default)]
pub struct Gf2Basis {
    rows: Vec<u32>,
}

impl Gf2Basis {
    pub fn new() -> Self {
        Gf2Basis { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; returns 0 iff `v` is in the span.
    pub fn reduce(&self, mut v: u32) -> u32 {
        for &r in &self.rows {
            let lead = 1u32 << (31 - r.leading_zeros());
            if v & lead != 0 {
                v ^= r;
            }
        }
        v
    }

    /// Inserts `v`; returns true if it enlarged the span.
    pub fn insert(&mut self, v: u32) -> bool {
        let red = self.reduce(v);
        if red == 0 {
            return false;
        }
        let lead = 1u32 << (31 - red.leading_zeros());
        for r in &mut self.rows {
            if *r & lead != 0 {
                *r ^= red;
            }
        }
        self.rows.push(red);
        true
    }

    pub fn contains(&self, v: u32) -> bool {
        self.reduce(v) == 0
    }
}

/// Rank of a set of GF(2) column vectors.
pub fn rank_of(columns: impl IntoIterator<Item = u32>) -> usize {
    let mut basis = Gf2Basis::new();
    for c in columns {
        basis.insert(c);
    }
    basis.rank()
}
