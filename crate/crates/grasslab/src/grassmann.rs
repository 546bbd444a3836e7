//! Grassmann spaces: the indexed family of all k-dimensional subspaces of a
//! space, with adjacency (intersection of dimension k-1), graph distance,
//! stars and tops, maximal cliques, and the complement characterization of
//! adjacency.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::bitset::BitSet;
use crate::linspace::{LinearSpace, SpaceError};
use crate::projspace::{PgSpace, SubRref};

#[derive(Debug, Error)]
pub enum GrassmannError {
    #[error("level k={k} out of range for an {n}-dimensional space")]
    KOutOfRange { k: i64, n: usize },
    #[error("center has dimension {got}, expected {expected}")]
    WrongCenterDim { expected: i64, got: i64 },
    #[error("element count {0} exceeds the configured cap {1}")]
    TooLarge(usize, usize),
    #[error("operation requires a projective ambient space")]
    NotProjective,
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// The underlying space of a Grassmannian: either a coordinate-built
/// projective space or a bare incidence structure.
pub enum Ambient {
    Abstract(Arc<LinearSpace>),
    Pg(Arc<PgSpace>),
}

impl Ambient {
    pub fn space(&self) -> &Arc<LinearSpace> {
        match self {
            Ambient::Abstract(s) => s,
            Ambient::Pg(p) => &p.space,
        }
    }

    pub fn pg(&self) -> Option<&Arc<PgSpace>> {
        match self {
            Ambient::Pg(p) => Some(p),
            Ambient::Abstract(_) => None,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Ambient::Abstract(s) => s.dimension(),
            Ambient::Pg(p) => p.n,
        }
    }
}

/// One k-dimensional subspace: its point set, plus the canonical coordinate
/// form when the ambient is a built PG.
#[derive(Clone)]
pub struct GrassElement {
    pub points: BitSet,
    pub rref: Option<SubRref>,
}

pub struct GrassmannSpace {
    pub ambient: Arc<Ambient>,
    pub k: i64,
    pub elements: Vec<GrassElement>,
    index: HashMap<BitSet, usize>,
    /// Adjacency rows as bitsets over element indices.
    pub adj: Vec<BitSet>,
}

/// Cap on abstract subspace-lattice enumeration.
const SUBSPACE_CAP: usize = 1_000_000;

impl GrassmannSpace {
    /// Complete duplicate-free enumeration of all k-dimensional subspaces,
    /// with the adjacency matrix.
    pub fn enumerate(ambient: Arc<Ambient>, k: i64) -> Result<GrassmannSpace, GrassmannError> {
        let n = ambient.dim();
        if k < 0 || k >= n as i64 {
            return Err(GrassmannError::KOutOfRange { k, n });
        }
        let elements: Vec<GrassElement> = match &*ambient {
            Ambient::Pg(pg) => pg
                .subspaces_of_dim(k)
                .into_iter()
                .map(|s| GrassElement {
                    points: pg.point_set(&s),
                    rref: Some(s),
                })
                .collect(),
            Ambient::Abstract(space) => {
                let mut sets = space.subspaces_of_dim(k, SUBSPACE_CAP)?;
                sets.sort();
                sets.into_iter()
                    .map(|points| GrassElement { points, rref: None })
                    .collect()
            }
        };
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.points.clone(), i))
            .collect();
        let mut g = GrassmannSpace {
            ambient,
            k,
            elements,
            index,
            adj: Vec::new(),
        };
        g.adj = g.compute_adjacency();
        Ok(g)
    }

    fn compute_adjacency(&self) -> Vec<BitSet> {
        let m = self.elements.len();
        let mut adj = vec![BitSet::new(m); m];
        for i in 0..m {
            for j in i + 1..m {
                if self.meet_dim(i, j) == self.k - 1 {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        adj
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element_id(&self, points: &BitSet) -> Option<usize> {
        self.index.get(points).copied()
    }

    /// Dimension of the intersection of two elements.
    pub fn meet_dim(&self, i: usize, j: usize) -> i64 {
        let inter = self.elements[i].points.and(&self.elements[j].points);
        self.set_dim(&inter)
    }

    /// Dimension of the span of two elements.
    pub fn span_dim(&self, i: usize, j: usize) -> i64 {
        match (&*self.ambient, &self.elements[i].rref, &self.elements[j].rref) {
            (Ambient::Pg(pg), Some(a), Some(b)) => pg.span(a, b).dim(),
            _ => {
                let un = self.elements[i].points.or(&self.elements[j].points);
                let space = self.ambient.space();
                space.subspace_dim(&space.closure(&un))
            }
        }
    }

    /// Dimension of a closed point set in the ambient space.
    pub fn set_dim(&self, s: &BitSet) -> i64 {
        match &*self.ambient {
            Ambient::Pg(pg) => pg.span_of_points(s).dim(),
            Ambient::Abstract(space) => space.subspace_dim(s),
        }
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(j)
    }

    /// BFS distances from one element; unreachable entries are -1.
    pub fn distances_from(&self, start: usize) -> Vec<i64> {
        let mut dist = vec![-1i64; self.len()];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in self.adj[u].iter() {
                if dist[v] < 0 {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn distance(&self, i: usize, j: usize) -> i64 {
        self.distances_from(i)[j]
    }

    /// A path of length exactly k - dim(meet) built by one-point base
    /// swaps, as in the connectedness proof. Projective ambients only.
    pub fn connecting_path(&self, i: usize, j: usize) -> Result<Vec<usize>, GrassmannError> {
        if self.ambient.pg().is_none() {
            return Err(GrassmannError::NotProjective);
        }
        let mut path = vec![i];
        let mut cur = i;
        while cur != j {
            let s = &self.elements[cur].points;
            let u = &self.elements[j].points;
            let space = self.ambient.space();
            let meet = s.and(u);
            let b_meet = self.base_inside(&meet);
            let b_s = self.extend_base_inside(&b_meet, s);
            let b_u = self.extend_base_inside(&b_meet, u);
            let p = *b_s.iter().find(|p| !b_meet.contains(p)).expect("proper step");
            let q = *b_u.iter().find(|q| !b_meet.contains(q)).expect("proper step");
            let mut gen: Vec<usize> = b_s.iter().copied().filter(|&x| x != p).collect();
            gen.push(q);
            let next_points = space.closure_of(&gen);
            let next = self.element_id(&next_points).expect("swap stays in the level");
            path.push(next);
            cur = next;
        }
        Ok(path)
    }

    /// Greedy base of a closed set.
    fn base_inside(&self, s: &BitSet) -> Vec<usize> {
        self.extend_base_inside(&[], s)
    }

    fn extend_base_inside(&self, seed: &[usize], s: &BitSet) -> Vec<usize> {
        let space = self.ambient.space();
        let mut base: Vec<usize> = seed.to_vec();
        let mut span = if base.is_empty() {
            BitSet::new(space.n_points)
        } else {
            space.closure_of(&base)
        };
        for p in s.iter() {
            if !span.contains(p) {
                base.push(p);
                span = space.closure_of(&base);
                if &span == s {
                    break;
                }
            }
        }
        base
    }

    /// All k-subspaces containing the (k-1)-dimensional `center`.
    pub fn star(&self, center: &BitSet) -> Result<AdjacentSet, GrassmannError> {
        let d = self.set_dim(center);
        if d != self.k - 1 {
            return Err(GrassmannError::WrongCenterDim {
                expected: self.k - 1,
                got: d,
            });
        }
        let mut members = BitSet::new(self.len());
        for (i, e) in self.elements.iter().enumerate() {
            if center.is_subset(&e.points) {
                members.insert(i);
            }
        }
        Ok(AdjacentSet {
            kind: AdjKind::Star,
            center: center.clone(),
            members,
        })
    }

    /// All k-subspaces contained in the (k+1)-dimensional `center`.
    pub fn top(&self, center: &BitSet) -> Result<AdjacentSet, GrassmannError> {
        let d = self.set_dim(center);
        if d != self.k + 1 {
            return Err(GrassmannError::WrongCenterDim {
                expected: self.k + 1,
                got: d,
            });
        }
        let mut members = BitSet::new(self.len());
        for (i, e) in self.elements.iter().enumerate() {
            if e.points.is_subset(center) {
                members.insert(i);
            }
        }
        Ok(AdjacentSet {
            kind: AdjKind::Top,
            center: center.clone(),
            members,
        })
    }

    /// Exhaustive maximal-clique enumeration (pivoting Bron-Kerbosch).
    pub fn maximal_cliques(&self, cap: usize) -> Result<Vec<BitSet>, GrassmannError> {
        if self.len() > cap {
            return Err(GrassmannError::TooLarge(self.len(), cap));
        }
        let mut out = Vec::new();
        let r = BitSet::new(self.len());
        let p = BitSet::full(self.len());
        let x = BitSet::new(self.len());
        self.bron_kerbosch(r, p, x, &mut out);
        out.sort();
        Ok(out)
    }

    fn bron_kerbosch(&self, r: BitSet, p: BitSet, x: BitSet, out: &mut Vec<BitSet>) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        // pivot: vertex of p union x with most neighbours in p
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| self.adj[u].and(&p).count())
            .unwrap();
        let candidates = p.minus(&self.adj[pivot]);
        let mut p = p;
        let mut x = x;
        for v in candidates.iter() {
            let mut r2 = r.clone();
            r2.insert(v);
            let p2 = p.and(&self.adj[v]);
            let x2 = x.and(&self.adj[v]);
            self.bron_kerbosch(r2, p2, x2, out);
            p.remove(v);
            x.insert(v);
        }
    }

    /// For a projective ambient with 0 < k < n-1, matches every maximal
    /// clique against stars and tops. Non-matching cliques come back raw.
    pub fn classify_cliques(
        &self,
        cliques: &[BitSet],
    ) -> (Vec<AdjacentSet>, Vec<BitSet>) {
        let mut classified = Vec::new();
        let mut raw = Vec::new();
        for clique in cliques {
            match self.match_star_or_top(clique) {
                Some(a) => classified.push(a),
                None => raw.push(clique.clone()),
            }
        }
        (classified, raw)
    }

    fn match_star_or_top(&self, clique: &BitSet) -> Option<AdjacentSet> {
        let members: Vec<usize> = clique.to_vec();
        if members.len() < 2 {
            return None;
        }
        // star candidate: common intersection of all members
        let mut inter = self.elements[members[0]].points.clone();
        for &m in &members[1..] {
            inter.and_assign(&self.elements[m].points);
        }
        if self.set_dim(&inter) == self.k - 1 {
            if let Ok(star) = self.star(&inter) {
                if &star.members == clique {
                    return Some(star);
                }
            }
        }
        // top candidate: closure of the union
        let mut un = self.elements[members[0]].points.clone();
        for &m in &members[1..] {
            un.or_assign(&self.elements[m].points);
        }
        let span = self.ambient.space().closure(&un);
        if self.set_dim(&span) == self.k + 1 {
            if let Ok(top) = self.top(&span) {
                if &top.members == clique {
                    return Some(top);
                }
            }
        }
        None
    }

    /// For each element, the set of complementary elements at level
    /// n-k-1: disjoint meet and full span. The table is the expensive part
    /// of the complement-based adjacency test.
    pub fn complement_table(
        &self,
        cocomplements: &GrassmannSpace,
    ) -> Result<Vec<BitSet>, GrassmannError> {
        if self.ambient.pg().is_none() {
            return Err(GrassmannError::NotProjective);
        }
        let space = self.ambient.space();
        let n_points = space.n_points;
        let mut table = Vec::with_capacity(self.len());
        for e in &self.elements {
            let mut mask = BitSet::new(cocomplements.len());
            for (t, co) in cocomplements.elements.iter().enumerate() {
                if !e.points.intersects(&co.points)
                    && space.closure(&e.points.or(&co.points)).count() == n_points
                {
                    mask.insert(t);
                }
            }
            table.push(mask);
        }
        Ok(table)
    }

    /// The complement-based adjacency test: S_i and S_j are adjacent iff
    /// some other element S exists such that every complement of S is a
    /// complement of S_i or of S_j. Projective ambients only.
    pub fn complement_adjacency(
        &self,
        cocomplements: &GrassmannSpace,
        i: usize,
        j: usize,
    ) -> Result<bool, GrassmannError> {
        let table = self.complement_table(cocomplements)?;
        Ok(self.complement_adjacency_with(&table, i, j))
    }

    /// Same test against a precomputed complement table.
    pub fn complement_adjacency_with(&self, table: &[BitSet], i: usize, j: usize) -> bool {
        if i == j {
            return false;
        }
        let either = table[i].or(&table[j]);
        for cand in 0..self.len() {
            if cand == i || cand == j {
                continue;
            }
            if table[cand].is_subset(&either) {
                return true;
            }
        }
        false
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdjKind {
    Star,
    Top,
}

/// A star or top: the set of k-subspaces incident to a fixed center of
/// dimension k-1 or k+1.
#[derive(Clone)]
pub struct AdjacentSet {
    pub kind: AdjKind,
    pub center: BitSet,
    pub members: BitSet,
}

impl AdjacentSet {
    pub fn pairwise_adjacent(&self, g: &GrassmannSpace) -> bool {
        let v = self.members.to_vec();
        v.iter()
            .enumerate()
            .all(|(a, &i)| v[a + 1..].iter().all(|&j| g.adjacent(i, j)))
    }
}
