//! The named extremal families and their size functions.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::matroid::{BasisMatroid, BinaryMatroid, Matroid};

/// Size of the extremal matroid family: recurrence f(r,t) = 2 f(r-t,t) + t
/// with f(r,t) = r for 0 <= r <= t. This is the value returned everywhere;
/// `f_closed` is the independent closed-form route.
pub fn f_value(r: usize, t: usize) -> u64 {
    assert!(t >= 1, "t must be positive");
    if r <= t {
        r as u64
    } else {
        2 * f_value(r - t, t) + t as u64
    }
}

/// Closed form (t-a) 2^floor(r/t) + a 2^ceil(r/t) - t with a = r mod t.
pub fn f_closed(r: usize, t: usize) -> u64 {
    assert!(t >= 1, "t must be positive");
    let a = (r % t) as u64;
    let lo = (r / t) as u32;
    let hi = r.div_ceil(t) as u32;
    (t as u64 - a) * (1u64 << lo) + a * (1u64 << hi) - t as u64
}

/// Graph-side size function: 0 below 2t, 3(n-2t) up to 4t, then
/// g(n,t) = g(n-1,t) + ceil(n/t) - 1.
pub fn g_value(n: usize, t: usize) -> u64 {
    assert!(t >= 1, "t must be positive");
    if n < 2 * t {
        0
    } else if n <= 4 * t {
        3 * (n - 2 * t) as u64
    } else {
        g_value(n - 1, t) + n.div_ceil(t) as u64 - 1
    }
}

/// Which geometry to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeometryKind {
    /// PG(r-1,2): all nonzero vectors of GF(2)^r.
    Projective,
    /// AG(r-1,2): the vectors with first (most significant) coordinate 1.
    Affine,
}

pub fn geometry(kind: GeometryKind, r: usize) -> Result<BinaryMatroid> {
    if r < 1 {
        return Err(Error::Input("geometry needs rank at least 1".into()));
    }
    let size = match kind {
        GeometryKind::Projective => (1u64 << r) - 1,
        GeometryKind::Affine => 1u64 << (r - 1),
    };
    if size > crate::ground::MAX_GROUND as u64 {
        return Err(Error::Capacity(format!("geometry of rank {r} has {size} points")));
    }
    let columns: Vec<u32> = match kind {
        GeometryKind::Projective => (1..1u32 << r).collect(),
        GeometryKind::Affine => (1u32 << (r - 1)..1 << r).collect(),
    };
    BinaryMatroid::new(r, columns)
}

/// The direct sum of t binary projective geometries whose ranks sum to r
/// and pairwise differ by at most one: (t-a) summands of rank floor(r/t)
/// and a of rank ceil(r/t), a = r mod t. Empty summands are dropped.
pub fn m_rt(r: usize, t: usize) -> Result<BinaryMatroid> {
    if t < 1 {
        return Err(Error::Input("t must be positive".into()));
    }
    let a = r % t;
    let lo = r / t;
    let mut sum = Matroid::empty();
    for _ in 0..t - a {
        if lo > 0 {
            sum = sum.direct_sum(&Matroid::Binary(geometry(GeometryKind::Projective, lo)?))?;
        }
    }
    for _ in 0..a {
        sum = sum.direct_sum(&Matroid::Binary(geometry(GeometryKind::Projective, lo + 1)?))?;
    }
    match sum {
        Matroid::Binary(m) => Ok(m),
        Matroid::Bases(_) => unreachable!("binary summands stay binary"),
    }
}

/// Direct sum of uniform circuits U_{k-1,k} (one per entry of `sizes`) and
/// the given number of coloops, on the bases backend.
pub fn circuits_coloops(sizes: &[usize], coloops: usize) -> Result<BasisMatroid> {
    if let Some(&k) = sizes.iter().find(|&&k| k < 2) {
        return Err(Error::Input(format!("circuit size {k} below 2")));
    }
    let n: usize = sizes.iter().sum::<usize>() + coloops;
    if n > crate::ground::MAX_GROUND {
        return Err(Error::Capacity(format!("{n} elements")));
    }
    let mut sum = Matroid::empty();
    for &k in sizes {
        // U_{k-1,k}: drop any one element
        let full = (1u64 << k) - 1;
        let bases: Vec<u64> = (0..k).map(|i| full & !(1 << i)).collect();
        sum = sum.direct_sum(&Matroid::Bases(BasisMatroid::new(k, k - 1, bases)?))?;
    }
    if coloops > 0 {
        let free = BasisMatroid::new(coloops, coloops, vec![(1u64 << coloops) - 1])?;
        sum = sum.direct_sum(&Matroid::Bases(free))?;
    }
    sum.to_basis_matroid()
}

/// Disjoint union of t complete graphs with sizes pairwise differing by at
/// most one; larger cliques first.
pub fn turan_union_graph(n: usize, t: usize) -> Result<SimpleGraph> {
    if t < 1 {
        return Err(Error::Input("t must be positive".into()));
    }
    let a = n % t;
    let lo = n / t;
    let mut sizes = vec![lo + 1; a];
    sizes.extend(std::iter::repeat(lo).take(t - a));
    let mut g = SimpleGraph::empty(n)?;
    let mut base = 0;
    for &s in &sizes {
        for i in 0..s {
            for j in i + 1..s {
                g.add_edge(base + i, base + j)?;
            }
        }
        base += s;
    }
    Ok(g)
}

/// Parsed CLI family descriptor, e.g. `pg:4`, `mrt:5,2`, `cc:3,3+1`,
/// `gnt:9,2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Pg { r: usize },
    Ag { r: usize },
    Mrt { r: usize, t: usize },
    Free { r: usize },
    Circuit { size: usize },
    CircuitsColoops { sizes: Vec<usize>, coloops: usize },
    TuranUnion { n: usize, t: usize },
}

/// What a family builds into.
pub enum BuiltFamily {
    Matroid(Matroid),
    Graph(SimpleGraph),
}

impl FamilySpec {
    pub fn parse(s: &str) -> Result<FamilySpec> {
        let bad = || Error::Input(format!("unrecognized family spec `{s}`"));
        let (kind, params) = s.split_once(':').ok_or_else(bad)?;
        let ints = |text: &str| -> Result<Vec<usize>> {
            text.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        match kind {
            "pg" | "ag" | "free" | "circuit" => {
                let v = ints(params)?;
                if v.len() != 1 {
                    return Err(bad());
                }
                Ok(match kind {
                    "pg" => FamilySpec::Pg { r: v[0] },
                    "ag" => FamilySpec::Ag { r: v[0] },
                    "free" => FamilySpec::Free { r: v[0] },
                    _ => FamilySpec::Circuit { size: v[0] },
                })
            }
            "mrt" | "gnt" => {
                let v = ints(params)?;
                if v.len() != 2 {
                    return Err(bad());
                }
                Ok(if kind == "mrt" {
                    FamilySpec::Mrt { r: v[0], t: v[1] }
                } else {
                    FamilySpec::TuranUnion { n: v[0], t: v[1] }
                })
            }
            "cc" => {
                let (sizes_s, coloops_s) = match params.split_once('+') {
                    Some((a, b)) => (a, b.trim().parse::<usize>().map_err(|_| bad())?),
                    None => (params, 0),
                };
                Ok(FamilySpec::CircuitsColoops { sizes: ints(sizes_s)?, coloops: coloops_s })
            }
            _ => Err(bad()),
        }
    }

    pub fn build(&self) -> Result<BuiltFamily> {
        Ok(match self {
            FamilySpec::Pg { r } => {
                BuiltFamily::Matroid(Matroid::Binary(geometry(GeometryKind::Projective, *r)?))
            }
            FamilySpec::Ag { r } => {
                BuiltFamily::Matroid(Matroid::Binary(geometry(GeometryKind::Affine, *r)?))
            }
            FamilySpec::Mrt { r, t } => BuiltFamily::Matroid(Matroid::Binary(m_rt(*r, *t)?)),
            FamilySpec::Free { r } => {
                let columns: Vec<u32> = (0..*r).map(|i| 1 << i).collect();
                BuiltFamily::Matroid(Matroid::Binary(BinaryMatroid::new(*r, columns)?))
            }
            FamilySpec::Circuit { size } => {
                BuiltFamily::Matroid(Matroid::Bases(circuits_coloops(&[*size], 0)?))
            }
            FamilySpec::CircuitsColoops { sizes, coloops } => {
                BuiltFamily::Matroid(Matroid::Bases(circuits_coloops(sizes, *coloops)?))
            }
            FamilySpec::TuranUnion { n, t } => BuiltFamily::Graph(turan_union_graph(*n, *t)?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_examples() {
        for r in 0..=10 {
            assert_eq!(f_value(r, 1), (1u64 << r) - 1);
        }
        assert_eq!(f_value(3, 2), 4);
        assert_eq!(f_value(4, 2), 6);
        assert_eq!(f_value(5, 2), 10);
        for t in 1..=6 {
            for r in 0..=t {
                assert_eq!(f_value(r, t), r as u64);
            }
        }
    }

    #[test]
    fn f_closed_matches_recurrence() {
        for t in 1..=16 {
            for r in 0..=60 {
                assert_eq!(f_closed(r, t), f_value(r, t), "r={r} t={t}");
            }
        }
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_value(3, 2), 0);
        assert_eq!(g_value(5, 2), 3);
        assert_eq!(g_value(8, 2), 12);
        assert_eq!(g_value(9, 2), 16);
    }

    #[test]
    fn geometry_examples() {
        let pg3 = geometry(GeometryKind::Projective, 3).unwrap();
        assert_eq!(pg3.n(), 7);
        assert_eq!(Matroid::Binary(pg3).full_rank(), 3);
        let ag3 = geometry(GeometryKind::Affine, 3).unwrap();
        assert_eq!(ag3.n(), 4);
        assert_eq!(Matroid::Binary(ag3).full_rank(), 3);
        let pg1 = geometry(GeometryKind::Projective, 1).unwrap();
        assert_eq!(pg1.n(), 1);
    }

    #[test]
    fn m_rt_examples() {
        let m = m_rt(4, 2).unwrap();
        assert_eq!((m.n(), m.coords()), (6, 4));
        let m = m_rt(2, 3).unwrap();
        assert_eq!((m.n(), m.coords()), (2, 2)); // free on 2 elements
        let m = m_rt(5, 2).unwrap();
        assert_eq!((m.n(), m.coords()), (10, 5));
        for t in 1..=6usize {
            for r in 0..=12usize {
                if f_value(r, t) <= 64 {
                    assert_eq!(m_rt(r, t).unwrap().n() as u64, f_value(r, t), "r={r} t={t}");
                }
            }
        }
    }

    #[test]
    fn circuits_coloops_examples() {
        let u34 = circuits_coloops(&[4], 0).unwrap();
        assert_eq!((u34.n(), u34.r()), (4, 3));
        let m32 = circuits_coloops(&[3], 1).unwrap();
        assert_eq!((m32.n(), m32.r()), (4, 3));
        let pairs = circuits_coloops(&[2, 2], 2).unwrap();
        assert_eq!((pairs.n(), pairs.r()), (6, 4));
        assert!(Matroid::Bases(pairs).loops().is_empty());
    }

    #[test]
    fn turan_union_examples() {
        let g = turan_union_graph(9, 2).unwrap();
        assert_eq!(g.edge_count(), 16);
        let g = turan_union_graph(7, 2).unwrap();
        assert_eq!(g.edge_count() as u64, g_value(7, 2));
        // below 3t the union and g can differ
        let g = turan_union_graph(7, 3).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g_value(7, 3), 3);
    }

    #[test]
    fn turan_union_matches_g_at_or_above_3t() {
        for t in 1..=8 {
            for n in 3 * t..=40 {
                if n <= 32 {
                    assert_eq!(
                        turan_union_graph(n, t).unwrap().edge_count() as u64,
                        g_value(n, t),
                        "n={n} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn family_spec_parsing() {
        assert_eq!(FamilySpec::parse("pg:4").unwrap(), FamilySpec::Pg { r: 4 });
        assert_eq!(FamilySpec::parse("mrt:5,2").unwrap(), FamilySpec::Mrt { r: 5, t: 2 });
        assert_eq!(
            FamilySpec::parse("cc:3,3+1").unwrap(),
            FamilySpec::CircuitsColoops { sizes: vec![3, 3], coloops: 1 }
        );
        assert_eq!(FamilySpec::parse("gnt:9,2").unwrap(), FamilySpec::TuranUnion { n: 9, t: 2 });
        assert!(FamilySpec::parse("zzz:1").is_err());
        assert!(FamilySpec::parse("pg").is_err());
    }
}
