//! Matroid interface over two concrete backends: GF(2) column
//! representations and explicit basis families.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{rank_of, Gf2Basis};
use crate::ground::GroundSubset;

/// Rank-`coords` GF(2) representation: an ordered list of column vectors.
///
/// Loops (zero columns) and parallel pairs (equal columns) are representable;
/// `validate` flags them so that matroids declared simple can be checked.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryMatroid {
    coords: usize,
    columns: Vec<u32>,
}

impl BinaryMatroid {
    pub fn new(coords: usize, columns: Vec<u32>) -> Result<Self> {
        if coords > 31 {
            return Err(Error::Capacity(format!("{coords} GF(2) coordinates (max 31)")));
        }
        if columns.len() > crate::ground::MAX_GROUND {
            return Err(Error::Capacity(format!(
                "{} elements (max {})",
                columns.len(),
                crate::ground::MAX_GROUND
            )));
        }
        let limit = 1u64 << coords;
        if let Some(c) = columns.iter().find(|&&c| (c as u64) >= limit) {
            return Err(Error::Input(format!("column {c:#b} does not fit in {coords} coordinates")));
        }
        Ok(BinaryMatroid { coords, columns })
    }

    pub fn coords(&self) -> usize {
        self.coords
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    fn rank_subset(&self, s: &GroundSubset) -> usize {
        rank_of(s.iter().map(|i| self.columns[i]))
    }
}

/// A matroid given by its explicit family of bases, each a bit mask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisMatroid {
    n: usize,
    r: usize,
    bases: Vec<u64>,
}

impl BasisMatroid {
    /// Builds and validates a basis family: nonempty, equicardinal of size
    /// `r`, and exchange-closed.
    pub fn new(n: usize, r: usize, mut bases: Vec<u64>) -> Result<Self> {
        bases.sort_unstable();
        bases.dedup();
        let m = BasisMatroid { n, r, bases };
        let report = m.validate();
        if let Some(v) = report.violations.first() {
            return Err(Error::Input(format!("invalid basis family: {v}")));
        }
        Ok(m)
    }

    /// Builds without checking the exchange axiom. For enumeration
    /// internals that guarantee it by construction.
    pub(crate) fn new_unchecked(n: usize, r: usize, mut bases: Vec<u64>) -> Self {
        bases.sort_unstable();
        bases.dedup();
        BasisMatroid { n, r, bases }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn bases(&self) -> &[u64] {
        &self.bases
    }

    fn rank_subset(&self, s: &GroundSubset) -> usize {
        let mask = s.bits();
        self.bases.iter().map(|b| (b & mask).count_ones() as usize).max().unwrap_or(0)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if self.n > crate::ground::MAX_GROUND {
            violations.push(format!("ground set of size {} exceeds capacity", self.n));
        }
        if self.bases.is_empty() {
            violations.push("basis family is empty".to_string());
        }
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        for &b in &self.bases {
            if b & !full != 0 {
                violations.push(format!("basis {b:#x} uses elements outside 0..{}", self.n));
            }
            if b.count_ones() as usize != self.r {
                violations.push(format!(
                    "basis {:?} has cardinality {} != rank {}",
                    mask_indices(b),
                    b.count_ones(),
                    self.r
                ));
            }
        }
        if violations.is_empty() {
            'outer: for &a in &self.bases {
                for &b in &self.bases {
                    let mut out = a & !b;
                    while out != 0 {
                        let x = out & out.wrapping_neg();
                        out &= out - 1;
                        let stem = a & !x;
                        let mut cand = b & !a;
                        let mut found = false;
                        while cand != 0 {
                            let y = cand & cand.wrapping_neg();
                            cand &= cand - 1;
                            if self.bases.binary_search(&(stem | y)).is_ok() {
                                found = true;
                                break;
                            }
                        }
                        if !found {
                            violations.push(format!(
                                "exchange fails for bases {:?}, {:?} at element {}",
                                mask_indices(a),
                                mask_indices(b),
                                x.trailing_zeros()
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }
}

fn mask_indices(mut m: u64) -> Vec<usize> {
    let mut out = Vec::new();
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Outcome of `Matroid::validate`; violations are data, not errors.
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A matroid value over either backend. All operations give identical
/// answers on both backends for equal abstract matroids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Matroid {
    Binary(BinaryMatroid),
    Bases(BasisMatroid),
}

impl From<BinaryMatroid> for Matroid {
    fn from(m: BinaryMatroid) -> Self {
        Matroid::Binary(m)
    }
}

impl From<BasisMatroid> for Matroid {
    fn from(m: BasisMatroid) -> Self {
        Matroid::Bases(m)
    }
}

impl Matroid {
    /// The empty matroid; identity of `direct_sum`.
    pub fn empty() -> Self {
        Matroid::Binary(BinaryMatroid { coords: 0, columns: Vec::new() })
    }

    pub fn n(&self) -> usize {
        match self {
            Matroid::Binary(m) => m.n(),
            Matroid::Bases(m) => m.n,
        }
    }

    pub fn full_rank(&self) -> usize {
        match self {
            Matroid::Binary(m) => rank_of(m.columns.iter().copied()),
            Matroid::Bases(m) => m.r,
        }
    }

    fn check_subset(&self, s: &GroundSubset) -> Result<()> {
        if s.ground_size() != self.n() {
            return Err(Error::Input(format!(
                "subset over ground set of size {} used with matroid on {} elements",
                s.ground_size(),
                self.n()
            )));
        }
        Ok(())
    }

    /// Rank of a subset of the ground set.
    pub fn rank(&self, s: &GroundSubset) -> Result<usize> {
        self.check_subset(s)?;
        Ok(match self {
            Matroid::Binary(m) => m.rank_subset(s),
            Matroid::Bases(m) => m.rank_subset(s),
        })
    }

    /// Closure: all elements whose addition does not raise the rank.
    pub fn closure(&self, s: &GroundSubset) -> Result<GroundSubset> {
        self.check_subset(s)?;
        let n = self.n();
        match self {
            Matroid::Binary(m) => {
                let mut basis = Gf2Basis::new();
                for i in s.iter() {
                    basis.insert(m.columns[i]);
                }
                let mut out = *s;
                for (i, &c) in m.columns.iter().enumerate() {
                    if basis.contains(c) {
                        out = out.insert(i);
                    }
                }
                Ok(out)
            }
            Matroid::Bases(m) => {
                let rk = m.rank_subset(s);
                let mut out = *s;
                for i in 0..n {
                    if !s.contains(i) && m.rank_subset(&s.insert(i)) == rk {
                        out = out.insert(i);
                    }
                }
                Ok(out)
            }
        }
    }

    pub fn is_independent(&self, s: &GroundSubset) -> Result<bool> {
        Ok(self.rank(s)? == s.card())
    }

    pub fn is_flat(&self, s: &GroundSubset) -> Result<bool> {
        Ok(self.closure(s)? == *s)
    }

    /// True iff `r(X ∪ Y) = r(X) + r(Y)`.
    pub fn are_skew(&self, x: &GroundSubset, y: &GroundSubset) -> Result<bool> {
        Ok(self.rank(&x.union(y))? == self.rank(x)? + self.rank(y)?)
    }

    /// Mask of loops (rank-zero elements).
    pub fn loops(&self) -> GroundSubset {
        let n = self.n();
        let mut out = GroundSubset::empty(n);
        match self {
            Matroid::Binary(m) => {
                for (i, &c) in m.columns.iter().enumerate() {
                    if c == 0 {
                        out = out.insert(i);
                    }
                }
            }
            Matroid::Bases(m) => {
                let mut covered = 0u64;
                for &b in &m.bases {
                    covered |= b;
                }
                for i in 0..n {
                    if covered >> i & 1 == 0 {
                        out = out.insert(i);
                    }
                }
            }
        }
        out
    }

    /// True iff loopless with no two elements parallel.
    pub fn is_simple(&self) -> bool {
        let n = self.n();
        if !self.loops().is_empty() {
            return false;
        }
        match self {
            Matroid::Binary(m) => {
                let mut seen = std::collections::HashSet::new();
                m.columns.iter().all(|&c| seen.insert(c))
            }
            Matroid::Bases(_) => {
                for i in 0..n {
                    for j in i + 1..n {
                        let pair = GroundSubset::from_indices(&[i, j], n).unwrap();
                        if self.rank(&pair).unwrap() == 1 {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    /// Deletes all loops and all but the minimum-index element of each
    /// parallel class. Returns the simple matroid and the element map
    /// (old index -> new index; loops map to `None`).
    pub fn simplify(&self) -> (Matroid, Vec<Option<usize>>) {
        let n = self.n();
        let loops = self.loops();
        // rep[i] = minimum-index element parallel to i
        let mut rep: Vec<usize> = (0..n).collect();
        match self {
            Matroid::Binary(m) => {
                let mut first: std::collections::HashMap<u32, usize> = std::collections::HashMap::new();
                for (i, &c) in m.columns.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    rep[i] = *first.entry(c).or_insert(i);
                }
            }
            Matroid::Bases(_) => {
                for i in 0..n {
                    if loops.contains(i) || rep[i] != i {
                        continue;
                    }
                    for j in i + 1..n {
                        if loops.contains(j) || rep[j] != j {
                            continue;
                        }
                        let pair = GroundSubset::from_indices(&[i, j], n).unwrap();
                        if self.rank(&pair).unwrap() == 1 {
                            rep[j] = i;
                        }
                    }
                }
            }
        }
        let kept: Vec<usize> =
            (0..n).filter(|&i| !loops.contains(i) && rep[i] == i).collect();
        let mut new_index = vec![None; n];
        for (k, &i) in kept.iter().enumerate() {
            new_index[i] = Some(k);
        }
        let map: Vec<Option<usize>> =
            (0..n).map(|i| if loops.contains(i) { None } else { new_index[rep[i]] }).collect();
        let simple = match self {
            Matroid::Binary(m) => Matroid::Binary(BinaryMatroid {
                coords: m.coords,
                columns: kept.iter().map(|&i| m.columns[i]).collect(),
            }),
            Matroid::Bases(_) => {
                let dropped: Vec<usize> =
                    (0..n).filter(|&i| !kept.contains(&i)).collect();
                let c = GroundSubset::empty(n);
                let d = GroundSubset::from_indices(&dropped, n).unwrap();
                self.minor(&c, &d).expect("deletion cannot fail")
            }
        };
        (simple, map)
    }

    /// Number of points of the matroid: the size of its simplification.
    pub fn epsilon(&self) -> usize {
        self.simplify().0.n()
    }

    /// The minor M/C\D on the ground set E - C - D, order-preserving.
    pub fn minor(&self, c: &GroundSubset, d: &GroundSubset) -> Result<Matroid> {
        self.check_subset(c)?;
        self.check_subset(d)?;
        if !c.is_disjoint(d) {
            return Err(Error::Input("contraction and deletion sets overlap".into()));
        }
        match self {
            Matroid::Binary(m) => Ok(Matroid::Binary(binary_minor(m, c, d))),
            Matroid::Bases(_) => Ok(Matroid::Bases(oracle_minor(self, c, d)?)),
        }
    }

    /// Direct sum; ground sets concatenated with `self` first.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n() + other.n();
        if n > crate::ground::MAX_GROUND {
            return Err(Error::Capacity(format!("direct sum has {n} elements")));
        }
        if self.n() == 0 {
            return Ok(other.clone());
        }
        if other.n() == 0 {
            return Ok(self.clone());
        }
        match (self, other) {
            (Matroid::Binary(a), Matroid::Binary(b)) => {
                let coords = a.coords + b.coords;
                if coords > 31 {
                    return Err(Error::Capacity(format!("direct sum needs {coords} coordinates")));
                }
                let mut columns: Vec<u32> =
                    a.columns.iter().map(|&c| c << b.coords).collect();
                columns.extend_from_slice(&b.columns);
                Ok(Matroid::Binary(BinaryMatroid { coords, columns }))
            }
            _ => {
                let a = self.to_basis_matroid()?;
                let b = other.to_basis_matroid()?;
                let mut bases = Vec::with_capacity(a.bases.len() * b.bases.len());
                for &ba in &a.bases {
                    for &bb in &b.bases {
                        bases.push(ba | bb << a.n);
                    }
                }
                Ok(Matroid::Bases(BasisMatroid::new_unchecked(n, a.r + b.r, bases)))
            }
        }
    }

    /// Converts to the bases backend by exhausting full-rank subsets.
    pub fn to_basis_matroid(&self) -> Result<BasisMatroid> {
        match self {
            Matroid::Bases(m) => Ok(m.clone()),
            Matroid::Binary(m) => {
                let n = m.n();
                if n > 20 {
                    return Err(Error::Capacity(format!(
                        "basis conversion of a {n}-element binary matroid"
                    )));
                }
                let r = self.full_rank();
                let mut bases = Vec::new();
                let mut pick = Vec::new();
                collect_full_rank_subsets(&m.columns, r, 0, &mut pick, &mut bases);
                Ok(BasisMatroid::new_unchecked(n, r, bases))
            }
        }
    }

    /// Structural well-formedness check; violations are reported, not raised.
    pub fn validate(&self) -> ValidationReport {
        match self {
            Matroid::Binary(m) => {
                let mut violations = Vec::new();
                for (i, &c) in m.columns.iter().enumerate() {
                    if c == 0 {
                        violations.push(format!("loop present: zero column at index {i}"));
                    }
                }
                for i in 0..m.n() {
                    for j in i + 1..m.n() {
                        if m.columns[i] != 0 && m.columns[i] == m.columns[j] {
                            violations.push(format!("parallel columns at indices {i}, {j}"));
                        }
                    }
                }
                let rk = rank_of(m.columns.iter().copied());
                if rk != m.coords {
                    violations.push(format!(
                        "columns span rank {rk}, not the declared {} coordinates",
                        m.coords
                    ));
                }
                ValidationReport { violations }
            }
            Matroid::Bases(m) => m.validate(),
        }
    }

    /// True iff no minor is isomorphic to U_{2,4}. Exhaustive search over
    /// independent contraction sets; deletions are absorbed by looking for a
    /// rank-2 flat with at least four points of the simplification.
    pub fn is_binary_small(&self) -> Result<bool> {
        let n = self.n();
        if n > 12 {
            return Err(Error::Capacity(format!("U_{{2,4}}-minor search on {n} elements")));
        }
        let r = self.full_rank();
        for c in GroundSubset::all_subsets(n) {
            if c.card() + 2 > r || self.rank(&c)? != c.card() {
                continue;
            }
            let contracted = self.minor(&c, &GroundSubset::empty(n))?;
            let (si, _) = contracted.simplify();
            let m = si.n();
            for i in 0..m {
                for j in i + 1..m {
                    let pair = GroundSubset::from_indices(&[i, j], m).unwrap();
                    if si.rank(&pair)? == 2 && si.closure(&pair)?.card() >= 4 {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Connected components as ground subsets, in order of smallest element.
    /// Two elements are connected iff some circuit contains both.
    pub fn components(&self) -> Result<Vec<GroundSubset>> {
        let n = self.n();
        if n > 16 {
            return Err(Error::Capacity(format!("component split on {n} elements")));
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for s in GroundSubset::all_subsets(n) {
            if s.card() < 2 || self.rank(&s)? + 1 != s.card() {
                continue;
            }
            // minimal dependent set: every proper subset independent
            let deps_minimal =
                s.iter().all(|i| self.rank(&s.remove(i)).unwrap() == s.card() - 1);
            if !deps_minimal {
                continue;
            }
            let first = s.iter().next().unwrap();
            let fa = find(&mut parent, first);
            for i in s.iter().skip(1) {
                let fi = find(&mut parent, i);
                parent[fi] = fa;
            }
        }
        let mut comps: Vec<GroundSubset> = Vec::new();
        let mut root_slot: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
        for i in 0..n {
            let root = find(&mut parent, i);
            match root_slot.get(&root) {
                Some(&k) => comps[k] = comps[k].insert(i),
                None => {
                    root_slot.insert(root, comps.len());
                    comps.push(GroundSubset::singleton(i, n).unwrap());
                }
            }
        }
        Ok(comps)
    }

    /// Serializes to the line-oriented text format of the backend.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        match self {
            Matroid::Binary(m) => {
                writeln!(out, "BMATROID {} {}", m.coords, m.n()).unwrap();
                for &c in &m.columns {
                    writeln!(out, "{:0width$b}", c, width = m.coords.max(1)).unwrap();
                }
            }
            Matroid::Bases(m) => {
                writeln!(out, "BASES {} {}", m.n, m.r).unwrap();
                for &b in &m.bases {
                    let idx: Vec<String> =
                        mask_indices(b).iter().map(|i| i.to_string()).collect();
                    writeln!(out, "{}", idx.join(" ")).unwrap();
                }
            }
        }
        out
    }

    /// Parses either matroid text format.
    pub fn parse(text: &str) -> Result<Matroid> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::Parse { line: 1, msg: "empty input".into() })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let bad = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
        match fields.first().copied() {
            Some("BMATROID") => {
                if fields.len() != 3 {
                    return Err(bad(1, "expected `BMATROID r n`"));
                }
                let coords: usize =
                    fields[1].parse().map_err(|_| bad(1, "bad rank field"))?;
                let n: usize = fields[2].parse().map_err(|_| bad(1, "bad size field"))?;
                let mut columns = Vec::with_capacity(n);
                for k in 0..n {
                    let (ln, row) = lines
                        .next()
                        .ok_or_else(|| bad(k + 2, "missing column line"))?;
                    let row = row.trim();
                    if row.len() != coords.max(1) {
                        return Err(bad(ln + 1, "column has wrong number of bits"));
                    }
                    let mut v: u32 = 0;
                    for ch in row.chars() {
                        v = v << 1
                            | match ch {
                                '0' => 0,
                                '1' => 1,
                                _ => return Err(bad(ln + 1, "column bits must be 0/1")),
                            };
                    }
                    columns.push(v);
                }
                Ok(Matroid::Binary(BinaryMatroid::new(coords, columns)?))
            }
            Some("BASES") => {
                if fields.len() != 3 {
                    return Err(bad(1, "expected `BASES n r`"));
                }
                let n: usize = fields[1].parse().map_err(|_| bad(1, "bad size field"))?;
                let r: usize = fields[2].parse().map_err(|_| bad(1, "bad rank field"))?;
                let mut bases = Vec::new();
                for (ln, row) in lines {
                    let mut mask = 0u64;
                    for tok in row.split_whitespace() {
                        let i: usize =
                            tok.parse().map_err(|_| bad(ln + 1, "bad element index"))?;
                        if i >= n {
                            return Err(bad(ln + 1, "element index out of range"));
                        }
                        mask |= 1 << i;
                    }
                    bases.push(mask);
                }
                Ok(Matroid::Bases(BasisMatroid::new(n, r, bases)?))
            }
            _ => Err(bad(1, "unknown header")),
        }
    }
}

/// Contraction by GF(2) elimination with lowest-set-bit pivots, then
/// deletion and coordinate compaction.
fn binary_minor(m: &BinaryMatroid, c: &GroundSubset, d: &GroundSubset) -> BinaryMatroid {
    let mut cols = m.columns.clone();
    let mut pivot_mask: u32 = 0;
    for i in c.iter() {
        let v = cols[i];
        if v == 0 {
            continue;
        }
        let pivot = v & v.wrapping_neg();
        for w in cols.iter_mut() {
            if *w & pivot != 0 {
                *w ^= v;
            }
        }
        pivot_mask |= pivot;
    }
    let keep_coords: Vec<usize> =
        (0..m.coords).filter(|&k| pivot_mask >> k & 1 == 0).collect();
    let compact = |v: u32| -> u32 {
        let mut out = 0;
        for (new, &old) in keep_coords.iter().enumerate() {
            out |= (v >> old & 1) << new;
        }
        out
    };
    let removed = c.union(d);
    let columns: Vec<u32> = (0..m.n())
        .filter(|&i| !removed.contains(i))
        .map(|i| compact(cols[i]))
        .collect();
    BinaryMatroid { coords: m.coords - pivot_mask.count_ones() as usize, columns }
}

/// Minor via the rank oracle: rank_minor(S) = rank(S ∪ C) - rank(C).
fn oracle_minor(m: &Matroid, c: &GroundSubset, d: &GroundSubset) -> Result<BasisMatroid> {
    let n = m.n();
    let keep: Vec<usize> =
        (0..n).filter(|&i| !c.contains(i) && !d.contains(i)).collect();
    if keep.len() > 24 {
        return Err(Error::Capacity(format!("basis minor on {} elements", keep.len())));
    }
    let rc = m.rank(c)?;
    let keep_set = GroundSubset::from_indices(&keep, n)?;
    let r2 = m.rank(&keep_set.union(c))? - rc;
    let mut bases = Vec::new();
    for sub in 0u64..1 << keep.len() {
        if sub.count_ones() as usize != r2 {
            continue;
        }
        let mut s = *c;
        for (pos, &i) in keep.iter().enumerate() {
            if sub >> pos & 1 == 1 {
                s = s.insert(i);
            }
        }
        if m.rank(&s)? == r2 + rc {
            bases.push(sub);
        }
    }
    Ok(BasisMatroid::new_unchecked(keep.len(), r2, bases))
}

fn collect_full_rank_subsets(
    columns: &[u32],
    r: usize,
    start: usize,
    pick: &mut Vec<usize>,
    out: &mut Vec<u64>,
) {
    if pick.len() == r {
        out.push(pick.iter().fold(0u64, |m, &i| m | 1 << i));
        return;
    }
    for i in start..columns.len() {
        if columns.len() - i < r - pick.len() {
            break;
        }
        if rank_of(pick.iter().map(|&j| columns[j]).chain([columns[i]])) == pick.len() + 1 {
            pick.push(i);
            collect_full_rank_subsets(columns, r, i + 1, pick, out);
            pick.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn fano() -> Matroid {
        Matroid::Binary(BinaryMatroid::new(3, (1..=7).collect()).unwrap())
    }

    pub fn u34() -> Matroid {
        // every 3-subset of 4 elements is a basis
        let bases = vec![0b0111, 0b1011, 0b1101, 0b1110];
        Matroid::Bases(BasisMatroid::new(4, 3, bases).unwrap())
    }

    fn u24() -> Matroid {
        let bases = vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100];
        Matroid::Bases(BasisMatroid::new(4, 2, bases).unwrap())
    }

    fn sub(m: &Matroid, idx: &[usize]) -> GroundSubset {
        GroundSubset::from_indices(idx, m.n()).unwrap()
    }

    #[test]
    fn rank_examples() {
        let pg = fano();
        assert_eq!(pg.rank(&GroundSubset::full(7)).unwrap(), 3);
        assert_eq!(pg.rank(&GroundSubset::empty(7)).unwrap(), 0);
        let u = u34();
        assert_eq!(u.rank(&sub(&u, &[1, 3])).unwrap(), 2);
        assert_eq!(u.rank(&GroundSubset::full(4)).unwrap(), 3);
    }

    #[test]
    fn closure_examples() {
        let pg = fano();
        // columns are 1..=7 at indices 0..=6; {1,2} spans {1,2,3} i.e. indices {0,1,2}
        let cl = pg.closure(&sub(&pg, &[0, 1])).unwrap();
        assert_eq!(cl, sub(&pg, &[0, 1, 2]));
        assert_eq!(pg.closure(&GroundSubset::empty(7)).unwrap(), GroundSubset::empty(7));
        let u = u34();
        let two = sub(&u, &[0, 2]);
        assert_eq!(u.closure(&two).unwrap(), two);
    }

    #[test]
    fn simplify_parallel_pair_plus_coloop() {
        // {a,b} parallel, c a coloop: bases {a,c}, {b,c}
        let m = Matroid::Bases(BasisMatroid::new(3, 2, vec![0b101, 0b110]).unwrap());
        let (si, map) = m.simplify();
        assert_eq!(si.n(), 2);
        assert_eq!(si.full_rank(), 2);
        assert_eq!(map, vec![Some(0), Some(0), Some(1)]);
        let pg = fano();
        let (si, map) = pg.simplify();
        assert_eq!(si.n(), 7);
        assert_eq!(map, (0..7).map(Some).collect::<Vec<_>>());
    }

    #[test]
    fn minor_examples() {
        let pg = fano();
        let id = pg.minor(&GroundSubset::empty(7), &GroundSubset::empty(7)).unwrap();
        assert_eq!(id, pg);
        // contracting a point of PG(2,2): rank 2, three parallel classes of size 2
        let m = pg.minor(&sub(&pg, &[0]), &GroundSubset::empty(7)).unwrap();
        assert_eq!(m.n(), 6);
        assert_eq!(m.full_rank(), 2);
        assert_eq!(m.epsilon(), 3);
        let u = u34();
        let m = u.minor(&sub(&u, &[0]), &GroundSubset::empty(4)).unwrap();
        assert_eq!((m.n(), m.full_rank()), (3, 2));
        // U_{2,3}: every pair independent, whole set dependent
        assert_eq!(m.rank(&GroundSubset::full(3)).unwrap(), 2);
    }

    #[test]
    fn minor_rejects_overlap() {
        let pg = fano();
        let s = sub(&pg, &[0, 1]);
        assert!(pg.minor(&s, &sub(&pg, &[1, 2])).is_err());
    }

    #[test]
    fn direct_sum_examples() {
        let pg1 = Matroid::Binary(BinaryMatroid::new(2, vec![1, 2, 3]).unwrap());
        let m42 = pg1.direct_sum(&pg1).unwrap();
        assert_eq!(m42.n(), 6);
        assert_eq!(m42.full_rank(), 4);
        assert_eq!(m42.epsilon(), 6);
        // summands mutually skew
        let a = GroundSubset::from_indices(&[0, 1, 2], 6).unwrap();
        let b = GroundSubset::from_indices(&[3, 4, 5], 6).unwrap();
        assert!(m42.are_skew(&a, &b).unwrap());
        // identity
        let back = m42.direct_sum(&Matroid::empty()).unwrap();
        assert_eq!(back.n(), 6);
    }

    #[test]
    fn skew_examples() {
        let pg = fano();
        // two points of a line vs the third point of that line
        let x = sub(&pg, &[0, 1]);
        let y = sub(&pg, &[2]);
        assert!(!pg.are_skew(&x, &y).unwrap());
        assert!(pg.are_skew(&x, &GroundSubset::empty(7)).unwrap());
    }

    #[test]
    fn validate_examples() {
        assert!(fano().validate().is_valid());
        assert!(BasisMatroid::new(4, 2, vec![0b0011, 0b1100]).is_err());
        let with_loop = Matroid::Binary(BinaryMatroid::new(2, vec![1, 0, 2]).unwrap());
        assert!(!with_loop.validate().is_valid());
    }

    #[test]
    fn u24_minor_screen() {
        assert!(fano().is_binary_small().unwrap());
        assert!(!u24().is_binary_small().unwrap());
        assert!(u34().is_binary_small().unwrap());
    }

    #[test]
    fn backend_agreement_on_fano() {
        let pg = fano();
        let bases = Matroid::Bases(pg.to_basis_matroid().unwrap());
        for s in GroundSubset::all_subsets(7) {
            assert_eq!(pg.rank(&s).unwrap(), bases.rank(&s).unwrap());
            assert_eq!(pg.closure(&s).unwrap(), bases.closure(&s).unwrap());
        }
    }

    #[test]
    fn rank_axioms_exhaustive_fano() {
        let m = fano();
        let subs: Vec<_> = GroundSubset::all_subsets(7).collect();
        for a in &subs {
            let ra = m.rank(a).unwrap();
            assert!(ra <= a.card());
            for b in &subs {
                let rb = m.rank(b).unwrap();
                let ru = m.rank(&a.union(b)).unwrap();
                let ri = m.rank(&a.intersection(b)).unwrap();
                assert!(ru + ri <= ra + rb, "submodularity failed");
                if a.is_subset_of(b) {
                    assert!(ra <= rb, "monotonicity failed");
                }
            }
        }
    }

    #[test]
    fn closure_is_closure_operator() {
        for m in [fano(), u34()] {
            let n = m.n();
            for s in GroundSubset::all_subsets(n) {
                let cl = m.closure(&s).unwrap();
                assert!(s.is_subset_of(&cl));
                assert_eq!(m.closure(&cl).unwrap(), cl);
                assert_eq!(m.rank(&cl).unwrap(), m.rank(&s).unwrap());
            }
        }
    }

    #[test]
    fn format_round_trip() {
        for m in [fano(), u34(), Matroid::empty()] {
            let text = m.serialize();
            let back = Matroid::parse(&text).unwrap();
            assert_eq!(back, m);
            assert_eq!(back.serialize(), text);
        }
    }

    #[test]
    fn components_split() {
        let pg1 = Matroid::Binary(BinaryMatroid::new(2, vec![1, 2, 3]).unwrap());
        let m42 = pg1.direct_sum(&pg1).unwrap();
        let comps = m42.components().unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].indices(), vec![0, 1, 2]);
        assert_eq!(comps[1].indices(), vec![3, 4, 5]);
    }
}
