//! Isomorph-free generation of small matroids and their canonical forms.
//!
//! Three enumerated classes: simple binary matroids anchored on a standard
//! basis inside PG(r-1,2), simple rank-3 matroids as linear spaces, and tiny
//! basis-system matroids by include/exclude DFS with exchange propagation.
//! Canonical forms: a GL-orbit form for spanning simple binary matroids
//! (abstract isomorphism agrees with GL-equivalence there, since binary
//! matroids are uniquely GF(2)-representable), and a minimal-relabeling form
//! for arbitrary set families used on basis lists and line families. The two
//! encodings are not comparable across backends; each campaign dedups within
//! one backend only.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{count_distinct, mix};
use crate::matroid::{BasisMatroid, BinaryMatroid, Matroid};

/// Parameters of one enumerated class, echoed into campaign reports.
#[derive(Clone, Debug, Serialize)]
pub struct EnumSpec {
    pub class: EnumClass,
    pub rank: usize,
    pub n_max: usize,
    pub size_bound: Option<usize>,
    pub require_simple: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumClass {
    Binary,
    Rank3,
    Bases,
}

/// Canonical byte string: equal strings iff abstractly isomorphic matroids,
/// within one backend encoding. Simple spanning binary matroids of rank at
/// most 6 get the GL-orbit form; everything else goes through the basis
/// family (capacity 10 elements).
pub fn canon_matroid(m: &Matroid) -> Result<Vec<u8>> {
    if let Matroid::Binary(b) = m {
        if b.coords() <= 6 && m.full_rank() == b.coords() && m.is_simple() {
            let mut out = vec![b'B', b.coords() as u8, b.n() as u8];
            out.extend_from_slice(&gl_canon(b.coords(), b.columns()).to_be_bytes());
            return Ok(out);
        }
    }
    let n = m.n();
    if n > 10 {
        return Err(Error::Capacity(format!("canonical form on {n} elements")));
    }
    let bm = m.to_basis_matroid()?;
    let mut out = vec![b'S', bm.r() as u8];
    out.extend(canon_sets(n, bm.bases()));
    Ok(out)
}

/// GL(r,2)-orbit key of a spanning simple column set, usable directly as a
/// dedup key for binary enumeration.
pub fn binary_canon_key(m: &BinaryMatroid) -> Result<u64> {
    let wrapped = Matroid::Binary(m.clone());
    if m.coords() > 6 {
        return Err(Error::Capacity(format!("{} coordinates (max 6)", m.coords())));
    }
    if wrapped.full_rank() != m.coords() || !wrapped.is_simple() {
        return Err(Error::Input("GL canonical form needs simple spanning columns".into()));
    }
    Ok(gl_canon(m.coords(), m.columns()))
}

/// Chunk order at one level of the GL search: at the lowest relabeled value
/// where two branches differ, the branch containing it wins.
fn cmp_chunk(a: u64, b: u64) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let low = (a ^ b) & (a ^ b).wrapping_neg();
    if a & low != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

struct GlSearch<'a> {
    columns: &'a [u32],
    coords: usize,
    /// membership mask of the column set over GF(2)^r values
    member: u64,
    /// combos[m] = XOR of the chosen basis prefix selected by mask m
    combos: Vec<u32>,
    /// membership mask of the span of the chosen prefix
    span: u64,
    chunks: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl GlSearch<'_> {
    /// Same backtracking invariant as the graph canonical search: when `best`
    /// is Some, the current path equals the best prefix; a strictly better
    /// chunk clears `best` and the subtree rebuilds it.
    fn dfs(&mut self) {
        let j = self.chunks.len();
        if j == self.coords {
            if self.best.is_none() {
                self.best = Some(self.chunks.clone());
            }
            return;
        }
        let w = 1usize << j;
        for &c in self.columns {
            if self.span >> c & 1 == 1 {
                continue; // dependent on the chosen prefix
            }
            let mut chunk = 0u64;
            for i in 0..w {
                let v = self.combos[i] ^ c;
                chunk |= (self.member >> v & 1) << i;
            }
            if let Some(b) = &self.best {
                match cmp_chunk(chunk, b[j]) {
                    Ordering::Greater => continue,
                    Ordering::Less => self.best = None,
                    Ordering::Equal => {}
                }
            }
            for i in 0..w {
                let v = self.combos[i] ^ c;
                self.combos.push(v);
                self.span |= 1u64 << v;
            }
            self.chunks.push(chunk);
            self.dfs();
            self.chunks.pop();
            for _ in 0..w {
                let v = self.combos.pop().unwrap();
                self.span &= !(1u64 << v);
            }
        }
    }
}

/// Minimal relabeled membership mask of a spanning simple column set under
/// GL(r,2): chooses an ordered basis from the columns, relabels everything
/// into its coordinates, and minimizes the resulting subset of GF(2)^r
/// level by level (level j fixes the relabeled values in [2^j, 2^{j+1})).
pub(crate) fn gl_canon(coords: usize, columns: &[u32]) -> u64 {
    assert!(coords <= 6, "GL canonical form capped at 6 coordinates");
    if coords == 0 {
        return 0;
    }
    let member = columns.iter().fold(0u64, |m, &c| m | 1 << c);
    let mut search = GlSearch {
        columns,
        coords,
        member,
        combos: vec![0],
        span: 1,
        chunks: Vec::new(),
        best: None,
    };
    search.dfs();
    let chunks = search.best.expect("columns span the space");
    let mut presence = 0u64;
    for (j, &ch) in chunks.iter().enumerate() {
        presence |= ch << (1usize << j);
    }
    presence
}

/// Decodable encoding of a set family: n, count, then sorted 8-byte masks.
pub fn encode_sets(n: usize, masks: &[u64]) -> Vec<u8> {
    let mut out = Vec::with_capacity(5 + 8 * masks.len());
    out.push(n as u8);
    out.extend_from_slice(&(masks.len() as u32).to_be_bytes());
    for &m in masks {
        out.extend_from_slice(&m.to_be_bytes());
    }
    out
}

pub fn sets_from_canon(bytes: &[u8]) -> Result<(usize, Vec<u64>)> {
    let bad = || Error::Input("malformed set-family encoding".into());
    if bytes.len() < 5 {
        return Err(bad());
    }
    let n = bytes[0] as usize;
    let count = u32::from_be_bytes(bytes[1..5].try_into().unwrap()) as usize;
    if bytes.len() != 5 + 8 * count {
        return Err(bad());
    }
    let masks = (0..count)
        .map(|i| u64::from_be_bytes(bytes[5 + 8 * i..13 + 8 * i].try_into().unwrap()))
        .collect();
    Ok((n, masks))
}

/// Iterated invariant colors for elements of a set family.
fn refine_set_colors(n: usize, masks: &[u64]) -> Vec<u64> {
    let mut colors: Vec<u64> = (0..n)
        .map(|e| {
            let mut sizes: Vec<u64> = masks
                .iter()
                .filter(|m| **m >> e & 1 == 1)
                .map(|m| m.count_ones() as u64)
                .collect();
            sizes.sort_unstable();
            let mut h = mix(sizes.len() as u64);
            for s in sizes {
                h = mix(h ^ mix(s));
            }
            h
        })
        .collect();
    let mut classes = count_distinct(&colors);
    for _ in 0..n {
        let set_hash: Vec<u64> = masks
            .iter()
            .map(|&m| {
                let mut cs: Vec<u64> = (0..n).filter(|&e| m >> e & 1 == 1).map(|e| colors[e]).collect();
                cs.sort_unstable();
                cs.into_iter().fold(mix(m.count_ones() as u64), |h, c| mix(h ^ mix(c)))
            })
            .collect();
        let next: Vec<u64> = (0..n)
            .map(|e| {
                let mut hs: Vec<u64> = masks
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| **m >> e & 1 == 1)
                    .map(|(i, _)| set_hash[i])
                    .collect();
                hs.sort_unstable();
                hs.into_iter().fold(mix(colors[e]), |h, s| mix(h ^ mix(s)))
            })
            .collect();
        let next_classes = count_distinct(&next);
        colors = next;
        if next_classes == classes {
            break;
        }
        classes = next_classes;
    }
    colors
}

/// Level signature order: denser prefixes first, then lexicographic masks.
fn cmp_sig(a: &[u64], b: &[u64]) -> Ordering {
    b.len().cmp(&a.len()).then_with(|| a.cmp(b))
}

struct SetSearch<'a> {
    n: usize,
    masks: &'a [u64],
    groups: Vec<Vec<usize>>,
    pos_group: Vec<usize>,
    perm: Vec<usize>,
    assigned: u64,
    sigs: Vec<Vec<u64>>,
    best: Option<Vec<Vec<u64>>>,
}

impl SetSearch<'_> {
    fn remap(&self, m: u64) -> u64 {
        let mut out = 0u64;
        for (new, &old) in self.perm.iter().enumerate() {
            out |= (m >> old & 1) << new;
        }
        out
    }

    fn dfs(&mut self) {
        let p = self.perm.len();
        if p == self.n {
            if self.best.is_none() {
                self.best = Some(self.sigs.clone());
            }
            return;
        }
        let group = self.groups[self.pos_group[p]].clone();
        for v in group {
            if self.assigned >> v & 1 == 1 {
                continue;
            }
            self.perm.push(v);
            self.assigned |= 1 << v;
            let contained = self.assigned;
            let mut sig: Vec<u64> = self
                .masks
                .iter()
                .filter(|m| **m & !contained == 0)
                .map(|&m| self.remap(m))
                .collect();
            sig.sort_unstable();
            let verdict = match &self.best {
                Some(b) => cmp_sig(&sig, &b[p]),
                None => Ordering::Less,
            };
            if verdict != Ordering::Greater {
                if verdict == Ordering::Less {
                    self.best = None;
                }
                self.sigs.push(sig);
                self.dfs();
                self.sigs.pop();
            }
            self.assigned &= !(1 << v);
            self.perm.pop();
        }
    }
}

/// Canonical form of a family of subsets of [n] under relabeling of the n
/// elements: refinement by iterated invariants, then backtracking over the
/// class-respecting orderings minimizing the per-level contained-set
/// signatures. The final level holds the whole relabeled family.
pub fn canon_sets(n: usize, masks: &[u64]) -> Vec<u8> {
    if n == 0 || masks.is_empty() {
        return encode_sets(n, masks);
    }
    let colors = refine_set_colors(n, masks);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colors[v], v));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match groups.last() {
            Some(g) if colors[g[0]] == colors[v] => groups.last_mut().unwrap().push(v),
            _ => groups.push(vec![v]),
        }
    }
    let mut pos_group = Vec::with_capacity(n);
    for (gi, g) in groups.iter().enumerate() {
        pos_group.extend(std::iter::repeat(gi).take(g.len()));
    }
    let mut search = SetSearch {
        n,
        masks,
        groups,
        pos_group,
        perm: Vec::with_capacity(n),
        assigned: 0,
        sigs: Vec::with_capacity(n),
        best: None,
    };
    search.dfs();
    let mut sigs = search.best.expect("at least one ordering exists");
    encode_sets(n, &sigs.pop().unwrap())
}

/// All spanning simple column sets of rank r containing the standard basis,
/// with at most `size_bound` columns. Every isomorphism class of simple
/// rank-r binary matroids within the size bound appears at least once (some
/// GL image of any spanning set contains the standard basis); duplicates are
/// the caller's problem, which keeps the scan cheap for bound campaigns.
pub fn spanning_candidates(r: usize, size_bound: usize) -> Result<Vec<BinaryMatroid>> {
    if r == 0 || r > 6 {
        return Err(Error::Capacity(format!("anchored binary scan at rank {r} (1..=6)")));
    }
    if size_bound < r {
        return Ok(Vec::new());
    }
    let extras: Vec<u32> = (1u32..1 << r).filter(|v| !v.is_power_of_two()).collect();
    let mut cur: Vec<u32> = (0..r).map(|i| 1u32 << i).collect();
    let mut out = Vec::new();
    fn rec(
        extras: &[u32],
        start: usize,
        left: usize,
        r: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<BinaryMatroid>,
    ) {
        out.push(BinaryMatroid::new(r, cur.clone()).expect("columns fit"));
        if left == 0 {
            return;
        }
        for i in start..extras.len() {
            cur.push(extras[i]);
            rec(extras, i + 1, left - 1, r, cur, out);
            cur.pop();
        }
    }
    rec(&extras, 0, size_bound - r, r, &mut cur, &mut out);
    Ok(out)
}

/// The triangle-free members of `spanning_candidates`, generated directly:
/// the DFS tracks the pairwise-XOR mask of the current set and never adds a
/// column that would close a 3-term dependency.
pub fn triangle_free_spanning_candidates(r: usize, size_bound: usize) -> Result<Vec<BinaryMatroid>> {
    if r == 0 || r > 6 {
        return Err(Error::Capacity(format!("anchored binary scan at rank {r} (1..=6)")));
    }
    if size_bound < r {
        return Ok(Vec::new());
    }
    let extras: Vec<u32> = (1u32..1 << r).filter(|v| !v.is_power_of_two()).collect();
    let mut cur: Vec<u32> = (0..r).map(|i| 1u32 << i).collect();
    let pairs = {
        let mut p = 0u64;
        for i in 0..r {
            for j in i + 1..r {
                p |= 1u64 << ((1u32 << i) ^ (1 << j));
            }
        }
        p
    };
    let mut out = Vec::new();
    fn rec(
        extras: &[u32],
        start: usize,
        left: usize,
        r: usize,
        pairs: u64,
        cur: &mut Vec<u32>,
        out: &mut Vec<BinaryMatroid>,
    ) {
        out.push(BinaryMatroid::new(r, cur.clone()).expect("columns fit"));
        if left == 0 {
            return;
        }
        for i in start..extras.len() {
            let v = extras[i];
            if pairs >> v & 1 == 1 {
                continue;
            }
            let mut np = pairs;
            for &u in cur.iter() {
                np |= 1u64 << (v ^ u);
            }
            cur.push(v);
            rec(extras, i + 1, left - 1, r, np, cur, out);
            cur.pop();
        }
    }
    rec(&extras, 0, size_bound - r, r, pairs, &mut cur, &mut out);
    Ok(out)
}

/// One representative per abstract isomorphism class of simple rank-r binary
/// matroids with at most `size_bound` elements, sorted by canonical key;
/// each output is the canonically relabeled column set in ascending order.
pub fn enumerate_binary_matroids(r: usize, size_bound: usize) -> Result<Vec<BinaryMatroid>> {
    if r == 0 || r > 5 {
        return Err(Error::Capacity(format!("binary enumeration at rank {r} (1..=5)")));
    }
    let size_bound = size_bound.min((1 << r) - 1);
    let cands = spanning_candidates(r, size_bound)?;
    let keys: BTreeSet<u64> = cands
        .par_iter()
        .map(|m| gl_canon(r, m.columns()))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    keys.into_iter()
        .map(|presence| {
            let columns: Vec<u32> = (1u32..1 << r).filter(|&v| presence >> v & 1 == 1).collect();
            BinaryMatroid::new(r, columns)
        })
        .collect()
}

/// Extension step of the linear-space generation: all ways to attach point
/// p = k to a line family on k points. p may join a pairwise-disjoint set of
/// existing lines and open new lines {p} ∪ A with |A| ≥ 2 and A pairwise
/// non-collinear; all point sets used by p must be disjoint (two lines share
/// at most one point).
struct Rank3Ext<'a> {
    k: usize,
    lines: &'a [u64],
    coll: Vec<u64>,
    out: Vec<Vec<u64>>,
}

impl Rank3Ext<'_> {
    fn run(mut self) -> Vec<Vec<u64>> {
        let mut ext = Vec::new();
        self.choose_lines(0, 0, &mut ext);
        self.out
    }

    fn choose_lines(&mut self, idx: usize, used: u64, ext: &mut Vec<usize>) {
        if idx == self.lines.len() {
            let mut fam = Vec::new();
            self.new_lines(0, used, ext, &mut fam);
            return;
        }
        self.choose_lines(idx + 1, used, ext);
        if self.lines[idx] & used == 0 {
            ext.push(idx);
            self.choose_lines(idx + 1, used | self.lines[idx], ext);
            ext.pop();
        }
    }

    fn new_lines(&mut self, anchor_from: usize, used: u64, ext: &mut Vec<usize>, fam: &mut Vec<u64>) {
        self.emit(ext, fam);
        for a in anchor_from..self.k {
            if used >> a & 1 == 1 {
                continue;
            }
            self.grow_line(a, a + 1, 1 << a, self.coll[a], used, ext, fam);
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn grow_line(
        &mut self,
        a: usize,
        from: usize,
        members: u64,
        collmask: u64,
        used: u64,
        ext: &mut Vec<usize>,
        fam: &mut Vec<u64>,
    ) {
        for b in from..self.k {
            if used >> b & 1 == 1 || collmask >> b & 1 == 1 {
                continue;
            }
            let m2 = members | 1 << b;
            fam.push(m2 | 1 << self.k);
            self.new_lines(a + 1, used | m2, ext, fam);
            fam.pop();
            self.grow_line(a, b + 1, m2, collmask | self.coll[b], used, ext, fam);
        }
    }

    fn emit(&mut self, ext: &[usize], fam: &[u64]) {
        let mut fl: Vec<u64> = self.lines.to_vec();
        for &i in ext {
            fl[i] |= 1 << self.k;
        }
        fl.extend_from_slice(fam);
        fl.sort_unstable();
        self.out.push(fl);
    }
}

fn collinearity(k: usize, lines: &[u64]) -> Vec<u64> {
    let mut coll = vec![0u64; k];
    for &l in lines {
        for i in 0..k {
            if l >> i & 1 == 1 {
                coll[i] |= l & !(1 << i);
            }
        }
    }
    coll
}

/// One representative per isomorphism class of simple rank-3 matroids on
/// exactly n elements, generated as linear spaces (families of long lines in
/// which every point pair lies on at most one long line) by point
/// augmentation with canonical rejection at every level. Output order is the
/// sorted line-family canonical encoding.
pub fn enumerate_rank3_matroids(n: usize) -> Result<Vec<BasisMatroid>> {
    if n > 9 {
        return Err(Error::Capacity(format!("rank-3 enumeration on {n} elements (max 9)")));
    }
    if n < 3 {
        return Ok(Vec::new());
    }
    let mut level: Vec<Vec<u64>> = vec![Vec::new()]; // one point, no long lines
    for k in 1..n {
        let parts: Vec<Vec<Vec<u8>>> = level
            .par_iter()
            .map(|lines| {
                let ext = Rank3Ext { k, lines, coll: collinearity(k, lines), out: Vec::new() };
                ext.run().iter().map(|fam| canon_sets(k + 1, fam)).collect()
            })
            .collect();
        let keys: HashSet<Vec<u8>> = parts.into_iter().flatten().collect();
        let mut sorted: Vec<Vec<u8>> = keys.into_iter().collect();
        sorted.sort();
        level = sorted
            .iter()
            .map(|b| sets_from_canon(b).map(|(_, m)| m))
            .collect::<Result<_>>()?;
    }
    let full = (1u64 << n) - 1;
    let mut out = Vec::new();
    for lines in &level {
        if lines.len() == 1 && lines[0] == full {
            continue; // all points collinear: rank 2
        }
        let mut bases = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    let t = 1u64 << i | 1 << j | 1 << l;
                    if !lines.iter().any(|&line| t & !line == 0) {
                        bases.push(t);
                    }
                }
            }
        }
        out.push(BasisMatroid::new_unchecked(n, 3, bases));
    }
    Ok(out)
}

struct Req {
    satisfied: bool,
    alive: u32,
}

struct IncludeTrail {
    sat_marked: Vec<usize>,
    reqs_base: usize,
    watch_pushed: Vec<usize>,
}

/// Include/exclude DFS over the C(n,r) candidate bases in mask order,
/// anchored on {0..r-1} included. Each included pair (A, B) spawns exchange
/// requirements (one per element of the symmetric difference, per
/// direction); a requirement watches its undecided witnesses and prunes the
/// branch when the last witness is excluded without any included.
struct BasesSearch {
    n: usize,
    cands: Vec<u64>,
    pos_of: HashMap<u64, usize>,
    included: Vec<bool>,
    included_list: Vec<usize>,
    reqs: Vec<Req>,
    watchers: Vec<Vec<usize>>,
    loopless_only: bool,
    found: HashSet<Vec<u8>>,
}

impl BasesSearch {
    fn include(&mut self, j: usize) -> (IncludeTrail, bool) {
        let mut trail = IncludeTrail {
            sat_marked: Vec::new(),
            reqs_base: self.reqs.len(),
            watch_pushed: Vec::new(),
        };
        self.included[j] = true;
        self.included_list.push(j);
        for rid in self.watchers[j].clone() {
            if !self.reqs[rid].satisfied {
                self.reqs[rid].satisfied = true;
                trail.sat_marked.push(rid);
            }
        }
        let b = self.cands[j];
        let mut ok = true;
        'pairs: for li in 0..self.included_list.len() - 1 {
            let a = self.cands[self.included_list[li]];
            for (owner, other) in [(a, b), (b, a)] {
                let mut outbits = owner & !other;
                while outbits != 0 {
                    let x = outbits & outbits.wrapping_neg();
                    outbits &= outbits - 1;
                    let stem = owner & !x;
                    let mut satisfied = false;
                    let mut alive: Vec<usize> = Vec::new();
                    let mut inbits = other & !owner;
                    while inbits != 0 {
                        let y = inbits & inbits.wrapping_neg();
                        inbits &= inbits - 1;
                        let wi = self.pos_of[&(stem | y)];
                        if self.included[wi] {
                            satisfied = true;
                            break;
                        }
                        if wi > j {
                            alive.push(wi);
                        }
                    }
                    if satisfied {
                        continue;
                    }
                    if alive.is_empty() {
                        ok = false;
                        break 'pairs;
                    }
                    let rid = self.reqs.len();
                    self.reqs.push(Req { satisfied: false, alive: alive.len() as u32 });
                    for wi in alive {
                        self.watchers[wi].push(rid);
                        trail.watch_pushed.push(wi);
                    }
                }
            }
        }
        (trail, ok)
    }

    fn undo_include(&mut self, j: usize, trail: IncludeTrail) {
        for &wi in trail.watch_pushed.iter().rev() {
            self.watchers[wi].pop();
        }
        self.reqs.truncate(trail.reqs_base);
        for rid in trail.sat_marked {
            self.reqs[rid].satisfied = false;
        }
        self.included[j] = false;
        self.included_list.pop();
    }

    fn exclude(&mut self, j: usize) -> (Vec<usize>, bool) {
        let mut dec = Vec::new();
        let mut ok = true;
        for rid in self.watchers[j].clone() {
            if self.reqs[rid].satisfied {
                continue;
            }
            self.reqs[rid].alive -= 1;
            dec.push(rid);
            if self.reqs[rid].alive == 0 {
                ok = false;
                break;
            }
        }
        (dec, ok)
    }

    fn undo_exclude(&mut self, dec: Vec<usize>) {
        for rid in dec {
            self.reqs[rid].alive += 1;
        }
    }

    fn search(&mut self, j: usize) {
        if j == self.cands.len() {
            self.emit();
            return;
        }
        let (trail, ok) = self.include(j);
        if ok {
            self.search(j + 1);
        }
        self.undo_include(j, trail);
        let (dec, ok) = self.exclude(j);
        if ok {
            self.search(j + 1);
        }
        self.undo_exclude(dec);
    }

    fn emit(&mut self) {
        let mut masks: Vec<u64> = self.included_list.iter().map(|&i| self.cands[i]).collect();
        if self.loopless_only {
            let cover = masks.iter().fold(0u64, |m, &b| m | b);
            if cover != (1u64 << self.n) - 1 {
                return;
            }
        }
        masks.sort_unstable();
        self.found.insert(canon_sets(self.n, &masks));
    }
}

/// One representative per isomorphism class of rank-r matroids on exactly n
/// elements given by explicit basis families, exchange-valid by
/// construction. `loopless_only` keeps only matroids in which every element
/// lies in some basis. Sorted by the basis-family canonical encoding.
pub fn enumerate_basis_matroids(n: usize, r: usize, loopless_only: bool) -> Result<Vec<BasisMatroid>> {
    if n > 8 {
        return Err(Error::Capacity(format!("basis-system enumeration on {n} elements (max 8)")));
    }
    if r > n {
        return Ok(Vec::new());
    }
    if r == 0 {
        // all-loop matroid; loopless only when the ground set is empty
        return Ok(if loopless_only && n > 0 {
            Vec::new()
        } else {
            vec![BasisMatroid::new_unchecked(n, 0, vec![0])]
        });
    }
    let cands: Vec<u64> = {
        let mut v = Vec::new();
        for mask in 0u64..1 << n {
            if mask.count_ones() as usize == r {
                v.push(mask);
            }
        }
        v.sort_unstable();
        v
    };
    let pos_of: HashMap<u64, usize> = cands.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let count = cands.len();
    let mut search = BasesSearch {
        n,
        cands,
        pos_of,
        included: vec![false; count],
        included_list: Vec::new(),
        reqs: Vec::new(),
        watchers: vec![Vec::new(); count],
        loopless_only,
        found: HashSet::new(),
    };
    // cands[0] = {0..r-1}; every class has a labeling in which it is a basis
    let (trail, ok) = search.include(0);
    debug_assert!(ok);
    search.search(1);
    search.undo_include(0, trail);
    let mut keys: Vec<Vec<u8>> = search.found.into_iter().collect();
    keys.sort();
    keys.iter()
        .map(|b| sets_from_canon(b).map(|(_, masks)| BasisMatroid::new_unchecked(n, r, masks)))
        .collect()
}

/// Spools matroid records plus a manifest into a directory: `records.txt`
/// holds the serialized matroids separated by blank lines, `manifest.json`
/// the class name, parameters, and count.
pub fn spool_matroids(
    dir: &Path,
    class: &str,
    parameters: serde_json::Value,
    matroids: &[Matroid],
) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let records: Vec<String> = matroids.iter().map(|m| m.serialize()).collect();
    std::fs::write(dir.join("records.txt"), records.join("\n"))?;
    let manifest = serde_json::json!({
        "class": class,
        "parameters": parameters,
        "count": matroids.len(),
        "generator_version": env!("CARGO_PKG_VERSION"),
    });
    std::fs::write(dir.join("manifest.json"), format!("{:#}\n", manifest))?;
    Ok(())
}
