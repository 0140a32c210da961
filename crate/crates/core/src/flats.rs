//! Lattices of flats of graphic matroids and the Kazhdan-Lusztig polynomial
//! computed directly from its defining recursion over the lattice.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactpoly::IntPoly;
use crate::par;
use crate::thagkl::solve_reflected;

/// Largest matroid rank [`FlatLattice::build`] accepts.
pub const RANK_GUARD: usize = 8;

/// A set of edge indices, bit `i` standing for edge `i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(pub u128);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        EdgeSet(indices.into_iter().fold(0, |acc, i| acc | 1 << i))
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    pub fn insert(self, e: usize) -> Self {
        EdgeSet(self.0 | 1 << e)
    }

    pub fn is_subset(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Sorted edge indices.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..128).filter(move |&i| self.contains(i))
    }
}

/// An undirected multigraph without loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if edges.len() > 128 {
            return Err(Error::TooManyEdges(edges.len()));
        }
        for &(a, b) in &edges {
            if a == b || a >= vertices || b >= vertices {
                return Err(Error::InvalidEdge(a, b));
            }
        }
        Ok(Graph { vertices, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::from_indices(0..self.edges.len())
    }

    fn components(&self, s: EdgeSet) -> (Vec<usize>, usize) {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut rank = 0;
        for e in s.indices() {
            let (a, b) = self.edges[e];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                rank += 1;
            }
        }
        let roots = (0..self.vertices).map(|v| find(&mut parent, v)).collect();
        (roots, rank)
    }

    /// Rank of `s` in the cycle matroid: size of a spanning forest.
    pub fn rank(&self, s: EdgeSet) -> usize {
        self.components(s).1
    }

    /// All edges with both endpoints in one connected component of `s`.
    pub fn closure(&self, s: EdgeSet) -> EdgeSet {
        let (roots, _) = self.components(s);
        EdgeSet::from_indices(
            self.edges
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| roots[a] == roots[b])
                .map(|(i, _)| i),
        )
    }
}

/// Vertex `A`.
pub const HUB_A: usize = 0;
/// Vertex `B`.
pub const HUB_B: usize = 1;

/// Edge index of `AB`.
pub const EDGE_AB: usize = 0;

/// Edge index of `Aj`, spikes numbered from 1.
pub fn edge_a(j: usize) -> usize {
    2 * j - 1
}

/// Edge index of `Bj`.
pub fn edge_b(j: usize) -> usize {
    2 * j
}

/// `K_{2,n}` on hubs `A`, `B` and spike vertices `1..=n`, plus the edge `AB`.
/// Spike vertex `j` is vertex `j + 1`.
pub fn thagomizer_graph(n: usize) -> Graph {
    let mut edges = vec![(HUB_A, HUB_B)];
    for j in 1..=n {
        edges.push((HUB_A, j + 1));
        edges.push((HUB_B, j + 1));
    }
    Graph::new(n + 2, edges).expect("thagomizer graph is loopless")
}

/// The two kinds of flat of a thagomizer matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThagomizerFlat {
    /// At most one edge from each of `rank` distinct spikes.
    SpikeEdges { a_side: Vec<usize>, b_side: Vec<usize> },
    /// `AB` together with the full spikes listed; rank is `spikes.len() + 1`.
    SpikeUnion { spikes: Vec<usize> },
}

/// Sorts a flat of `M_n` into one of the two kinds, or `None` if the edge set
/// is neither (so not a flat).
pub fn classify_thagomizer_flat(n: usize, flat: EdgeSet) -> Option<ThagomizerFlat> {
    let (mut a_side, mut b_side, mut full) = (Vec::new(), Vec::new(), Vec::new());
    for j in 1..=n {
        match (flat.contains(edge_a(j)), flat.contains(edge_b(j))) {
            (true, true) => full.push(j),
            (true, false) => a_side.push(j),
            (false, true) => b_side.push(j),
            (false, false) => {}
        }
    }
    if flat.contains(EDGE_AB) {
        (a_side.is_empty() && b_side.is_empty()).then_some(ThagomizerFlat::SpikeUnion { spikes: full })
    } else {
        full.is_empty().then_some(ThagomizerFlat::SpikeEdges { a_side, b_side })
    }
}

/// The flats of a graphic matroid, sorted by rank and then by edge mask.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    flats: Vec<EdgeSet>,
    ranks: Vec<usize>,
    index: HashMap<EdgeSet, usize>,
}

impl FlatLattice {
    /// Breadth-first closure: every flat of rank `r + 1` is the closure of
    /// some rank-`r` flat plus one edge.
    pub fn build(g: &Graph) -> Result<Self> {
        let rank = g.rank(g.all_edges());
        if rank > RANK_GUARD {
            return Err(Error::RankGuard { rank, max: RANK_GUARD });
        }
        let mut levels = vec![vec![g.closure(EdgeSet::EMPTY)]];
        for _ in 0..rank {
            let mut next = HashSet::new();
            for &f in levels.last().unwrap() {
                for e in 0..g.edges().len() {
                    if !f.contains(e) {
                        next.insert(g.closure(f.insert(e)));
                    }
                }
            }
            let mut next: Vec<EdgeSet> = next.into_iter().collect();
            next.sort();
            levels.push(next);
        }
        let mut flats = Vec::new();
        let mut ranks = Vec::new();
        for (r, level) in levels.into_iter().enumerate() {
            ranks.extend(std::iter::repeat_n(r, level.len()));
            flats.extend(level);
        }
        let index = flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        Ok(FlatLattice { flats, ranks, index })
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[EdgeSet] {
        &self.flats
    }

    pub fn rank_of(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn rank(&self) -> usize {
        *self.ranks.last().unwrap()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn position(&self, f: EdgeSet) -> Result<usize> {
        self.index.get(&f).copied().ok_or(Error::NotAFlat)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.flats[i].is_subset(self.flats[j])
    }

    /// Number of flats of each rank.
    pub fn rank_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.rank() + 1];
        for &r in &self.ranks {
            counts[r] += 1;
        }
        counts
    }

    /// `mu(lower, g)` for every flat `g`, zero where `g` is not above `lower`.
    pub fn mobius_from(&self, lower: usize) -> Vec<i64> {
        let mut mu = vec![0i64; self.len()];
        mu[lower] = 1;
        let above: Vec<usize> = (lower..self.len()).filter(|&g| self.leq(lower, g)).collect();
        for (pos, &g) in above.iter().enumerate().skip(1) {
            let mut acc = 0i64;
            for &h in &above[..pos] {
                if self.ranks[h] < self.ranks[g] && self.leq(h, g) {
                    acc = acc.checked_add(mu[h]).expect("Mobius value overflow");
                }
            }
            mu[g] = -acc;
        }
        mu
    }

    /// Characteristic polynomial of the interval `[lower, upper]` given the
    /// Mobius row of `lower`.
    fn interval_char_poly(&self, mu_row: &[i64], lower: usize, upper: usize) -> IntPoly {
        let top_rank = self.ranks[upper];
        let mut coeffs = vec![BigInt::from(0); top_rank - self.ranks[lower] + 1];
        for h in lower..=upper {
            if mu_row[h] != 0 && self.leq(h, upper) {
                coeffs[top_rank - self.ranks[h]] += mu_row[h];
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

/// `chi` of the localization at `flat`: `sum_{G <= F} mu(0, G) t^{rk F - rk G}`.
pub fn char_poly_lattice(lattice: &FlatLattice, flat: EdgeSet) -> Result<IntPoly> {
    let f = lattice.position(flat)?;
    let mu = lattice.mobius_from(lattice.bottom());
    Ok(lattice.interval_char_poly(&mu, lattice.bottom(), f))
}

/// Kazhdan-Lusztig polynomial of every upper interval `[F, top]`, i.e. of
/// every contraction `M^F`, indexed like [`FlatLattice::flats`].
///
/// Each level solves `t^r P_F(1/t) - P_F(t) = sum_{G > F} chi_[F,G](t) P_G(t)`
/// with `r = rk(top) - rk F`.
pub fn kl_contractions(lattice: &FlatLattice) -> Result<Vec<IntPoly>> {
    let n = lattice.len();
    let mobius: Vec<Vec<i64>> = par::map_range(n, |f| lattice.mobius_from(f));
    let full_rank = lattice.rank();
    let mut polys: Vec<Option<IntPoly>> = vec![None; n];
    for r in (0..=full_rank).rev() {
        let level: Vec<usize> = (0..n).filter(|&f| lattice.ranks[f] == r).collect();
        let solved = par::map(level.clone(), |f| {
            let mut rhs = IntPoly::zero();
            for g in f + 1..n {
                if lattice.ranks[g] > r && lattice.leq(f, g) {
                    let chi = lattice.interval_char_poly(&mobius[f], f, g);
                    rhs += &(&chi * polys[g].as_ref().expect("upper levels solved first"));
                }
            }
            solve_reflected(full_rank - r, &rhs)
        });
        for (f, p) in level.into_iter().zip(solved) {
            polys[f] = Some(p?);
        }
    }
    Ok(polys.into_iter().map(Option::unwrap).collect())
}

/// Kazhdan-Lusztig polynomial of the matroid whose flats form `lattice`.
pub fn kl_generic(lattice: &FlatLattice) -> Result<IntPoly> {
    Ok(kl_contractions(lattice)?.swap_remove(lattice.bottom()))
}
