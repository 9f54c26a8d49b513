//! Claws (independent flats), pseudoclaws, and line profiles.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::constructions::f_value;
use crate::error::{Error, Result};
use crate::ground::GroundSubset;
use crate::matroid::Matroid;

/// Cap on stored maximum-claw witnesses; counts stay exact past it.
pub const WITNESS_CAP: usize = 10_000;

/// Exact claw census of a matroid.
#[derive(Clone, Debug, Serialize)]
pub struct ClawReport {
    pub max_claw_size: usize,
    pub counts_by_size: BTreeMap<usize, u64>,
    /// All claws of maximum size, lexicographic, truncated at `WITNESS_CAP`.
    pub witnesses: Vec<GroundSubset>,
    pub truncated: bool,
}

/// Rank-2 flat census of a simple matroid.
#[derive(Clone, Debug, Serialize)]
pub struct LineProfile {
    /// line size -> number of lines of that size
    pub counts: BTreeMap<usize, u64>,
    /// per element: number of 3-element lines through it
    pub triangles_through: Vec<u64>,
}

impl LineProfile {
    /// No line carries three collinear points.
    pub fn is_triangle_free(&self) -> bool {
        self.counts.keys().all(|&k| k < 3)
    }
}

/// True iff `S` is both independent and a flat. Only loopless matroids have
/// claws at all (a flat contains every loop, an independent set none).
pub fn is_claw(m: &Matroid, s: &GroundSubset) -> Result<bool> {
    Ok(m.is_independent(s)? && m.is_flat(s)?)
}

/// Per-claw verdict of the DFS callback.
enum Visit {
    /// keep extending this claw
    Descend,
    /// record nothing below this claw, continue with siblings
    Prune,
    /// abort the whole search
    Stop,
}

/// Every subset of a claw is a claw: dropping an element keeps independence,
/// and for e outside a claw S, the flat cl(S - e) cannot contain e (else
/// S would be dependent). So the claws form a downward-closed family and
/// lexicographic DFS over flats visits each exactly once: a node S extends
/// by e > max(S), and S ∪ {e} is automatically independent (e is outside the
/// flat S), so only flatness is re-checked.
fn claw_dfs<F: FnMut(&GroundSubset) -> Visit>(m: &Matroid, visit: &mut F) -> Result<()> {
    let n = m.n();
    let empty = GroundSubset::empty(n);
    if !m.is_flat(&empty)? {
        return Ok(()); // loops present: no claws
    }
    fn rec<F: FnMut(&GroundSubset) -> Visit>(
        m: &Matroid,
        s: &GroundSubset,
        next: usize,
        visit: &mut F,
    ) -> Result<bool> {
        match visit(s) {
            Visit::Stop => return Ok(false),
            Visit::Prune => return Ok(true),
            Visit::Descend => {}
        }
        for i in next..m.n() {
            let t = s.insert(i);
            if m.is_flat(&t)? && !rec(m, &t, i + 1, visit)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
    rec(m, &empty, 0, visit)?;
    Ok(())
}

/// Exact maximum claw size with witness census.
pub fn max_claw(m: &Matroid) -> Result<ClawReport> {
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    let mut max = 0usize;
    let mut witnesses: Vec<GroundSubset> = Vec::new();
    let mut truncated = false;
    claw_dfs(m, &mut |s| {
        let k = s.card();
        *counts.entry(k).or_insert(0) += 1;
        if k > max {
            max = k;
            witnesses.clear();
            truncated = false;
        }
        if k == max {
            if witnesses.len() < WITNESS_CAP {
                witnesses.push(*s);
            } else {
                truncated = true;
            }
        }
        Visit::Descend
    })?;
    Ok(ClawReport { max_claw_size: max, counts_by_size: counts, witnesses, truncated })
}

/// First k-claw in lexicographic order, if any. Early exit makes this the
/// cheap claw-freeness test: no (t+1)-claw iff `find_k_claw(m, t+1)` is None.
pub fn find_k_claw(m: &Matroid, k: usize) -> Result<Option<GroundSubset>> {
    let mut found = None;
    claw_dfs(m, &mut |s| {
        if s.card() == k {
            found = Some(*s);
            Visit::Stop
        } else {
            Visit::Descend
        }
    })?;
    Ok(found)
}

/// All k-claws, lexicographic.
pub fn k_claws(m: &Matroid, k: usize) -> Result<Vec<GroundSubset>> {
    let mut out = Vec::new();
    claw_dfs(m, &mut |s| {
        if s.card() == k {
            out.push(*s);
            Visit::Prune // supersets of a k-claw are larger
        } else {
            Visit::Descend
        }
    })?;
    out.sort();
    Ok(out)
}

/// The k-claws of si(M/X), lifted back to representative elements of M
/// (the minimum-index member of each parallel class of the contraction).
pub fn pseudoclaws(m: &Matroid, x: &GroundSubset, k: usize) -> Result<Vec<GroundSubset>> {
    if !m.is_simple() {
        return Err(Error::Input("pseudoclaws need a simple matroid".into()));
    }
    let n = m.n();
    let contracted = m.minor(x, &GroundSubset::empty(n))?;
    let keep: Vec<usize> = (0..n).filter(|&i| !x.contains(i)).collect();
    let (si, map) = contracted.simplify();
    // si index -> its representative's index in M; the representative is the
    // first minor element mapped there, which is the minimum by construction
    let mut rep = vec![usize::MAX; si.n()];
    for (minor_i, target) in map.iter().enumerate() {
        if let Some(&t) = target.as_ref() {
            if rep[t] == usize::MAX {
                rep[t] = keep[minor_i];
            }
        }
    }
    let mut out = Vec::new();
    for claw in k_claws(&si, k)? {
        let lifted: Vec<usize> = claw.iter().map(|i| rep[i]).collect();
        out.push(GroundSubset::from_indices(&lifted, n)?);
    }
    out.sort();
    Ok(out)
}

/// All rank-2 flats of a simple matroid, as closures of point pairs.
fn lines(m: &Matroid) -> Result<Vec<GroundSubset>> {
    let n = m.n();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let pair = GroundSubset::from_indices(&[i, j], n)?;
            let line = m.closure(&pair)?;
            if seen.insert(line) {
                out.push(line);
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn line_profile(m: &Matroid) -> Result<LineProfile> {
    if !m.is_simple() {
        return Err(Error::Input("line profile needs a simple matroid".into()));
    }
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    let mut triangles_through = vec![0u64; m.n()];
    for line in lines(m)? {
        *counts.entry(line.card()).or_insert(0) += 1;
        if line.card() == 3 {
            for e in line.iter() {
                triangles_through[e] += 1;
            }
        }
    }
    Ok(LineProfile { counts, triangles_through })
}

/// A t-claw S is generic when no four-point line of M meets S and exactly
/// f(r-t, t) triangles of M meet S, where r is the rank of M.
pub fn is_generic_claw(m: &Matroid, s: &GroundSubset, t: usize) -> Result<bool> {
    if s.card() != t || !is_claw(m, s)? {
        return Err(Error::Input(format!("{s:?} is not a {t}-claw")));
    }
    let r = m.full_rank();
    let mut triangles_met = 0u64;
    for line in lines(m)? {
        if line.is_disjoint(s) {
            continue;
        }
        if line.card() >= 4 {
            return Ok(false);
        }
        if line.card() == 3 {
            triangles_met += 1;
        }
    }
    Ok(triangles_met == f_value(r - t, t))
}
