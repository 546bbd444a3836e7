//! Concrete projective spaces PG(n,q): points as normalized coordinate
//! vectors, subspaces as canonical RREF matrices, semilinear maps and their
//! induced point maps, the dual space with its incidence dictionary, and the
//! graph-automorphism collineation search.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::bitset::BitSet;
use crate::gf::{FieldError, FieldSpec};
use crate::linalg::{self, Mat};
use crate::linspace::{LinearSpace, PointMap};

#[derive(Debug, Error)]
pub enum PgError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("projective dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("subspaces belong to different ambient spaces")]
    AmbientMismatch,
    #[error("wrong subspace dimension: expected {expected}, got {got}")]
    WrongDimension { expected: i64, got: i64 },
}

/// A subspace of PG(n,q) as its canonical reduced row-echelon basis.
/// `rows.len()` is projective dimension + 1; the empty matrix is the empty
/// subspace of dimension -1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubRref {
    pub rows: Mat,
}

impl SubRref {
    pub fn empty() -> SubRref {
        SubRref { rows: Vec::new() }
    }

    pub fn from_rows(f: &FieldSpec, rows: &Mat) -> SubRref {
        SubRref {
            rows: linalg::rref(f, rows),
        }
    }

    /// Projective dimension: rank - 1.
    pub fn dim(&self) -> i64 {
        self.rows.len() as i64 - 1
    }

    pub fn contains_vector(&self, f: &FieldSpec, v: &[u8]) -> bool {
        linalg::in_row_space(f, &self.rows, v)
    }
}

impl std::fmt::Debug for SubRref {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubRref(dim {}, {:?})", self.dim(), self.rows)
    }
}

/// PG(n,q) with its incidence structure and point/coordinate index.
pub struct PgSpace {
    pub field: Arc<FieldSpec>,
    pub n: usize,
    /// Normalized homogeneous coordinates, sorted; index = point id.
    pub points: Vec<Vec<u8>>,
    point_index: HashMap<Vec<u8>, usize>,
    pub space: Arc<LinearSpace>,
    /// Canonical form of each line, aligned with `space.lines`.
    pub line_rrefs: Vec<SubRref>,
}

impl PgSpace {
    /// Scale so the first nonzero coordinate is 1; unique per ray.
    pub fn normalize(f: &FieldSpec, v: &[u8]) -> Vec<u8> {
        let lead = v.iter().find(|&&x| x != 0).copied();
        match lead {
            None => v.to_vec(),
            Some(c) => {
                let inv = f.inv_v(c).unwrap();
                v.iter().map(|&x| f.mul_v(inv, x)).collect()
            }
        }
    }

    pub fn point_id(&self, v: &[u8]) -> Option<usize> {
        self.point_index
            .get(&Self::normalize(&self.field, v))
            .copied()
    }

    pub fn coords(&self, p: usize) -> &[u8] {
        &self.points[p]
    }

    /// All nonzero vectors of GF(q)^(n+1), one per generated iteration.
    fn all_vectors(f: &FieldSpec, len: usize) -> impl Iterator<Item = Vec<u8>> + '_ {
        let q = f.q() as u64;
        let total = q.pow(len as u32);
        (1..total).map(move |code| {
            let mut c = code;
            (0..len)
                .map(|_| {
                    let d = (c % q) as u8;
                    c /= q;
                    d
                })
                .collect()
        })
    }

    /// Point set of a subspace, by membership test against the canonical
    /// basis.
    pub fn point_set(&self, s: &SubRref) -> BitSet {
        let mut out = BitSet::new(self.points.len());
        if s.rows.is_empty() {
            return out;
        }
        for (i, pt) in self.points.iter().enumerate() {
            if s.contains_vector(&self.field, pt) {
                out.insert(i);
            }
        }
        out
    }

    /// Canonical form of the subspace spanned by a set of points.
    pub fn span_of_points(&self, pts: &BitSet) -> SubRref {
        let rows: Mat = pts.iter().map(|p| self.points[p].clone()).collect();
        SubRref::from_rows(&self.field, &rows)
    }

    pub fn span(&self, a: &SubRref, b: &SubRref) -> SubRref {
        SubRref {
            rows: linalg::span(&self.field, &a.rows, &b.rows),
        }
    }

    pub fn meet(&self, a: &SubRref, b: &SubRref) -> SubRref {
        SubRref {
            rows: linalg::meet(&self.field, &a.rows, &b.rows),
        }
    }

    /// All subspaces of the given projective dimension, in sorted canonical
    /// order, found by extending spans point by point.
    pub fn subspaces_of_dim(&self, k: i64) -> Vec<SubRref> {
        if k < -1 || k > self.n as i64 {
            return Vec::new();
        }
        if k == -1 {
            return vec![SubRref::empty()];
        }
        let mut cur: Vec<SubRref> = self
            .points
            .iter()
            .map(|p| SubRref::from_rows(&self.field, &vec![p.clone()]))
            .collect();
        cur.sort();
        let mut d = 0i64;
        while d < k {
            let mut seen = std::collections::HashSet::new();
            for s in &cur {
                for pt in &self.points {
                    if !s.contains_vector(&self.field, pt) {
                        let mut rows = s.rows.clone();
                        rows.push(pt.clone());
                        seen.insert(SubRref::from_rows(&self.field, &rows));
                    }
                }
            }
            cur = seen.into_iter().collect();
            cur.sort();
            d += 1;
        }
        cur
    }

    /// Direct enumeration of all rank-r RREF matrices: the independent
    /// counting oracle for subspace numbers.
    pub fn rref_enumeration_count(&self, r: usize) -> usize {
        count_rref_matrices(&self.field, self.n + 1, r)
    }
}

/// Number of r x cols RREF matrices over the field, by direct generation
/// over pivot-column patterns. Equals the Gaussian binomial coefficient.
pub fn count_rref_matrices(f: &FieldSpec, cols: usize, r: usize) -> usize {
    if r > cols {
        return 0;
    }
    let q = f.q() as usize;
    let mut total = 0usize;
    for pivots in crate::bitset::k_subsets(cols, r) {
        // free entries: row i, column c with c > pivots[i], c not a pivot
        let mut free = 0u32;
        for &p in &pivots {
            for c in p + 1..cols {
                if !pivots.contains(&c) {
                    free += 1;
                }
            }
        }
        total += q.pow(free);
    }
    total
}

/// Gaussian binomial [n choose k]_q evaluated directly.
pub fn gaussian_binomial(n: usize, k: usize, q: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= (q as u128).pow((n - i) as u32) - 1;
        den *= (q as u128).pow((i + 1) as u32) - 1;
    }
    (num / den) as usize
}

/// Build PG(n,q): points are rays of GF(q)^(n+1), lines are 2-dimensional
/// vector subspaces.
pub fn build_pg(n: usize, field: Arc<FieldSpec>) -> Result<Arc<PgSpace>, PgError> {
    if n < 2 {
        return Err(PgError::DimensionTooSmall(n));
    }
    let mut points: Vec<Vec<u8>> = PgSpace::all_vectors(&field, n + 1)
        .map(|v| PgSpace::normalize(&field, &v))
        .collect::<std::collections::HashSet<_>>()
        .into_iter()
        .collect();
    points.sort();
    let point_index: HashMap<Vec<u8>, usize> = points
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();

    // lines: spans of point pairs, deduplicated by canonical form
    let mut line_set = std::collections::HashSet::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let rows = vec![points[i].clone(), points[j].clone()];
            line_set.insert(SubRref::from_rows(&field, &rows));
        }
    }
    let mut line_rrefs: Vec<SubRref> = line_set.into_iter().collect();
    line_rrefs.sort();

    let mut lines = Vec::with_capacity(line_rrefs.len());
    for lr in &line_rrefs {
        let mut pts = BitSet::new(points.len());
        // enumerate the q+1 rays inside the rank-2 row space
        let f = &field;
        for a in 0..f.q() as u8 {
            for b in 0..f.q() as u8 {
                if a == 0 && b == 0 {
                    continue;
                }
                let v: Vec<u8> = (0..n + 1)
                    .map(|c| f.add_v(f.mul_v(a, lr.rows[0][c]), f.mul_v(b, lr.rows[1][c])))
                    .collect();
                let norm = PgSpace::normalize(f, &v);
                pts.insert(point_index[&norm]);
            }
        }
        lines.push(pts);
    }

    let space = Arc::new(LinearSpace::new(
        format!("pg({n},{})", field.q()),
        points.len(),
        lines,
    ));
    Ok(Arc::new(PgSpace {
        field,
        n,
        points,
        point_index,
        space,
        line_rrefs,
    }))
}

// ---------------------------------------------------------------------------
// semilinear maps
// ---------------------------------------------------------------------------

/// An invertible sigma-linear transformation of GF(q)^(n+1):
/// x maps to sigma(x) . matrix, sigma the `sigma`-th Frobenius power.
/// With `dual` set the induced point map lands in the dual space.
#[derive(Clone, Debug)]
pub struct SemilinearMap {
    pub matrix: Mat,
    pub sigma: u32,
    pub dual: bool,
}

impl SemilinearMap {
    pub fn new(field: &FieldSpec, matrix: Mat, sigma: u32) -> Result<SemilinearMap, PgError> {
        if linalg::inverse(field, &matrix).is_none() {
            return Err(PgError::SingularMatrix);
        }
        Ok(SemilinearMap {
            matrix,
            sigma,
            dual: false,
        })
    }

    pub fn dual_composed(field: &FieldSpec, matrix: Mat, sigma: u32) -> Result<SemilinearMap, PgError> {
        let mut l = Self::new(field, matrix, sigma)?;
        l.dual = true;
        Ok(l)
    }

    pub fn apply(&self, f: &FieldSpec, v: &[u8]) -> Vec<u8> {
        let twisted: Vec<u8> = v.iter().map(|&x| f.frob_v(x, self.sigma)).collect();
        linalg::vecmat(f, &twisted, &self.matrix)
    }

    /// Composition: first self, then other (sigma indices add mod m).
    pub fn compose(&self, f: &FieldSpec, other: &SemilinearMap) -> SemilinearMap {
        // (x sigma1 M1) sigma2 M2 = x sigma1+sigma2 (sigma2(M1) M2)
        let m1_twisted: Mat = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|&x| f.frob_v(x, other.sigma)).collect())
            .collect();
        SemilinearMap {
            matrix: linalg::matmul(f, &m1_twisted, &other.matrix),
            sigma: (self.sigma + other.sigma) % f.m,
            dual: self.dual != other.dual,
        }
    }
}

/// The point map P(l) of a plain semilinear isomorphism, as a collineation
/// of the space to itself.
pub fn induced_point_map(pg: &Arc<PgSpace>, l: &SemilinearMap) -> Result<PointMap, PgError> {
    if linalg::inverse(&pg.field, &l.matrix).is_none() {
        return Err(PgError::SingularMatrix);
    }
    let map = pg
        .points
        .iter()
        .map(|v| pg.point_id(&l.apply(&pg.field, v)).expect("image is a point"))
        .collect();
    Ok(PointMap::new(pg.space.clone(), pg.space.clone(), map))
}

// ---------------------------------------------------------------------------
// duality
// ---------------------------------------------------------------------------

/// The dual space: points are the hyperplanes of the primal space, lines are
/// the pencils through an (n-2)-dimensional subspace. Carries the incidence
/// dictionary between dual subspaces and primal subspaces.
pub struct DualSpace {
    pub primal: Arc<PgSpace>,
    /// Canonical forms of hyperplanes, sorted; index = dual point id.
    pub hyperplanes: Vec<SubRref>,
    /// Primal point set of each hyperplane.
    pub hyper_sets: Vec<BitSet>,
    pub space: Arc<LinearSpace>,
}

pub fn dual_space(pg: &Arc<PgSpace>) -> DualSpace {
    let hyperplanes = pg.subspaces_of_dim(pg.n as i64 - 1);
    let hyper_sets: Vec<BitSet> = hyperplanes.iter().map(|h| pg.point_set(h)).collect();
    let axes = pg.subspaces_of_dim(pg.n as i64 - 2);
    let mut lines = Vec::new();
    for w in &axes {
        let wset = pg.point_set(w);
        let mut pencil = BitSet::new(hyperplanes.len());
        for (hi, hs) in hyper_sets.iter().enumerate() {
            if wset.is_subset(hs) {
                pencil.insert(hi);
            }
        }
        lines.push(pencil);
    }
    let space = Arc::new(LinearSpace::new(
        format!("{}^*", pg.space.label),
        hyperplanes.len(),
        lines,
    ));
    DualSpace {
        primal: pg.clone(),
        hyperplanes,
        hyper_sets,
        space,
    }
}

impl DualSpace {
    /// The primal (n-k-1)-subspace corresponding to a k-subspace of the
    /// dual, given as the set of dual points (hyperplanes) it contains:
    /// their common intersection.
    pub fn primal_points_of_dual_subspace(&self, dual_pts: &BitSet) -> BitSet {
        let mut acc = self.primal.space.all_points();
        for h in dual_pts.iter() {
            acc.and_assign(&self.hyper_sets[h]);
        }
        acc
    }

    /// The dual k-subspace corresponding to a primal (n-k-1)-subspace: all
    /// hyperplanes containing it.
    pub fn dual_subspace_of_primal_points(&self, primal_pts: &BitSet) -> BitSet {
        let mut out = BitSet::new(self.hyperplanes.len());
        for (hi, hs) in self.hyper_sets.iter().enumerate() {
            if primal_pts.is_subset(hs) {
                out.insert(hi);
            }
        }
        out
    }

    pub fn hyperplane_id(&self, h: &SubRref) -> Option<usize> {
        self.hyperplanes.binary_search(h).ok()
    }
}

/// The collineation sending each hyperplane of the primal space to its
/// annihilator point in the dual coordinate space (standard dot pairing):
/// a point map from the dual space onto a freshly built PG(n,q).
pub fn annihilator_collineation(
    pg: &Arc<PgSpace>,
    dual: &DualSpace,
) -> Result<(PointMap, Arc<PgSpace>), PgError> {
    let coord_dual = build_pg(pg.n, pg.field.clone())?;
    let map = dual
        .hyperplanes
        .iter()
        .map(|h| {
            let ann = linalg::annihilator(&pg.field, &h.rows, pg.n + 1);
            debug_assert_eq!(ann.len(), 1);
            coord_dual.point_id(&ann[0]).expect("annihilator is a point")
        })
        .collect();
    Ok((
        PointMap::new(dual.space.clone(), coord_dual.space.clone(), map),
        coord_dual,
    ))
}

/// The dual-composed point map of a semilinear map: each point x goes to the
/// hyperplane annihilating sigma(x) . matrix, as a point of the dual space.
pub fn induced_dual_point_map(
    pg: &Arc<PgSpace>,
    dual: &DualSpace,
    l: &SemilinearMap,
) -> Result<PointMap, PgError> {
    let map = pg
        .points
        .iter()
        .map(|v| {
            let img = l.apply(&pg.field, v);
            let h = SubRref {
                rows: linalg::annihilator(&pg.field, &vec![img], pg.n + 1),
            };
            dual.hyperplane_id(&h).expect("annihilator hyperplane exists")
        })
        .collect();
    Ok(PointMap::new(pg.space.clone(), dual.space.clone(), map))
}

// ---------------------------------------------------------------------------
// projective axioms
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, serde::Serialize)]
pub struct ProjectivityReport {
    pub p2_ok: bool,
    pub p2_witness_line: Option<Vec<usize>>,
    pub p1_ok: bool,
    /// Two coplanar line index sets with empty intersection, if P1 fails.
    pub p1_witness: Option<(Vec<usize>, Vec<usize>)>,
}

impl ProjectivityReport {
    pub fn is_projective(&self) -> bool {
        self.p1_ok && self.p2_ok
    }
}

/// P2 on every line; P1 inside every plane (planes are closures of
/// non-collinear triples).
pub fn verify_projective_axioms(space: &LinearSpace) -> ProjectivityReport {
    let mut report = ProjectivityReport {
        p2_ok: true,
        p2_witness_line: None,
        p1_ok: true,
        p1_witness: None,
    };
    for line in &space.lines {
        if line.count() < 3 {
            report.p2_ok = false;
            report.p2_witness_line = Some(line.to_vec());
            break;
        }
    }
    // collect planes
    let mut planes = std::collections::HashSet::new();
    let n = space.n_points;
    for p in 0..n {
        for q in p + 1..n {
            for r in q + 1..n {
                if !space.collinear(p, q, r) {
                    planes.insert(space.closure_of(&[p, q, r]));
                }
            }
        }
    }
    'outer: for plane in &planes {
        let lines_in: Vec<&BitSet> = space
            .lines
            .iter()
            .filter(|l| l.is_subset(plane))
            .collect();
        for (a, la) in lines_in.iter().enumerate() {
            for lb in &lines_in[a + 1..] {
                if !la.intersects(lb) {
                    report.p1_ok = false;
                    report.p1_witness = Some((la.to_vec(), lb.to_vec()));
                    break 'outer;
                }
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// exhaustive collineation search
// ---------------------------------------------------------------------------

/// Every collineation between two linear spaces, by backtracking over point
/// images with collinearity/non-collinearity pruning on all assigned
/// triples. This is a pure incidence-graph search that knows nothing about
/// coordinates; it serves as the independent oracle for the matrix-induced
/// collineation group.
pub fn collineations_by_graph_search(src: &LinearSpace, tgt: &LinearSpace) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if src.n_points != tgt.n_points || src.lines.len() != tgt.lines.len() {
        return out;
    }
    let n = src.n_points;
    let mut assign: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(src, tgt, &mut assign, &mut used, &mut out);
    return out;

    fn search(
        src: &LinearSpace,
        tgt: &LinearSpace,
        assign: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let r = assign.len();
        if r == src.n_points {
            out.push(assign.clone());
            return;
        }
        'candidates: for img in 0..tgt.n_points {
            if used[img] {
                continue;
            }
            for p in 0..r {
                for q in p + 1..r {
                    if src.collinear(p, q, r) != tgt.collinear(assign[p], assign[q], img) {
                        continue 'candidates;
                    }
                }
            }
            assign.push(img);
            used[img] = true;
            search(src, tgt, assign, used, out);
            used[img] = false;
            assign.pop();
        }
    }
}

/// Finds a semilinear map inducing the given point permutation of PG(n,q),
/// trying every Frobenius power and solving the row scales from the all-ones
/// point. Returns None when the map is not matrix-induced.
pub fn matrix_inducing(pg: &Arc<PgSpace>, point_map: &[usize]) -> Option<SemilinearMap> {
    let f = &pg.field;
    let n1 = pg.n + 1;
    // images of the coordinate axis points
    let mut axis_imgs: Vec<Vec<u8>> = Vec::with_capacity(n1);
    for i in 0..n1 {
        let mut e = vec![0u8; n1];
        e[i] = 1;
        let id = pg.point_id(&e)?;
        axis_imgs.push(pg.points[point_map[id]].clone());
    }
    let ones = vec![1u8; n1];
    let ones_id = pg.point_id(&ones)?;
    let ones_img = pg.points[point_map[ones_id]].clone();
    // axis images must be independent for any inducing matrix to exist
    let inv = linalg::inverse(f, &axis_imgs)?;
    for sigma in 0..f.m {
        // solve ones_img ~ sum_i lambda_i axis_imgs[i] for nonzero lambda_i
        // coefficients of ones_img in the axis-image basis
        let lambda = linalg::vecmat(f, &ones_img, &inv);
        if lambda.contains(&0) {
            continue;
        }
        let scaled: Mat = axis_imgs
            .iter()
            .zip(&lambda)
            .map(|(row, &s)| row.iter().map(|&x| f.mul_v(s, x)).collect())
            .collect();
        let Ok(l) = SemilinearMap::new(f, scaled, sigma) else {
            continue;
        };
        let Ok(pm) = induced_point_map(pg, &l) else {
            continue;
        };
        if pm.map == point_map {
            return Some(l);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linspace::{classify_map, MorphismKind};

    fn pg(n: usize, q: u32) -> Arc<PgSpace> {
        build_pg(n, FieldSpec::for_q(q).unwrap()).unwrap()
    }

    #[test]
    fn pg22_counts() {
        let p = pg(2, 2);
        assert_eq!(p.points.len(), 7);
        assert_eq!(p.space.lines.len(), 7);
        assert!(p.space.lines.iter().all(|l| l.count() == 3));
        assert!(p.space.validate().is_ok());
    }

    #[test]
    fn pg32_counts_and_axioms() {
        let p = pg(3, 2);
        assert_eq!(p.points.len(), 15);
        assert_eq!(p.space.lines.len(), 35);
        assert_eq!(p.subspaces_of_dim(2).len(), 15);
        let rep = verify_projective_axioms(&p.space);
        assert!(rep.is_projective());
    }

    #[test]
    fn pg23_counts() {
        let p = pg(2, 3);
        assert_eq!(p.points.len(), 13);
        assert_eq!(p.space.lines.len(), 13);
        assert!(p.space.lines.iter().all(|l| l.count() == 4));
    }

    #[test]
    fn counts_match_rref_oracle_and_formula() {
        for (n, q) in [(2usize, 2u32), (3, 2), (2, 3), (4, 2)] {
            let p = pg(n, q);
            for r in 1..=n {
                let engine = p.subspaces_of_dim(r as i64 - 1).len();
                let oracle = p.rref_enumeration_count(r);
                let formula = gaussian_binomial(n + 1, r, q as usize);
                assert_eq!(engine, oracle, "PG({n},{q}) rank {r}");
                assert_eq!(engine, formula, "PG({n},{q}) rank {r}");
            }
        }
    }

    #[test]
    fn span_meet_examples() {
        let p = pg(3, 2);
        // two adjacent lines span a plane, meet in a point
        let s = p.span_of_points(&BitSet::from_iter(15, [
            p.point_id(&[1, 0, 0, 0]).unwrap(),
            p.point_id(&[0, 1, 0, 0]).unwrap(),
        ]));
        let u = p.span_of_points(&BitSet::from_iter(15, [
            p.point_id(&[1, 0, 0, 0]).unwrap(),
            p.point_id(&[0, 0, 1, 0]).unwrap(),
        ]));
        assert_eq!(p.span(&s, &u).dim(), 2);
        assert_eq!(p.meet(&s, &u).dim(), 0);
        // disjoint lines span the space
        let w = p.span_of_points(&BitSet::from_iter(15, [
            p.point_id(&[0, 0, 1, 0]).unwrap(),
            p.point_id(&[0, 0, 0, 1]).unwrap(),
        ]));
        assert_eq!(p.span(&s, &w).dim(), 3);
        assert_eq!(p.meet(&s, &w).dim(), -1);
        // span with the empty subspace is the identity
        assert_eq!(p.span(&s, &SubRref::empty()), s);
        assert_eq!(p.meet(&s, &s), s);
    }

    #[test]
    fn modular_dimension_law_pg32() {
        let p = pg(3, 2);
        let lines = p.subspaces_of_dim(1);
        for a in &lines {
            for b in &lines {
                let sp = p.span(a, b).dim();
                let mt = p.meet(a, b).dim();
                assert_eq!(sp + mt, a.dim() + b.dim());
            }
        }
    }

    #[test]
    fn identity_and_permutation_matrices_induce_collineations() {
        let p = pg(3, 2);
        let id = SemilinearMap::new(&p.field, linalg::identity(4), 0).unwrap();
        let pm = induced_point_map(&p, &id).unwrap();
        assert!((0..15).all(|i| pm.map[i] == i));
        // a permutation matrix
        let mut perm = vec![vec![0u8; 4]; 4];
        perm[0][1] = 1;
        perm[1][0] = 1;
        perm[2][3] = 1;
        perm[3][2] = 1;
        let l = SemilinearMap::new(&p.field, perm, 0).unwrap();
        let pm = induced_point_map(&p, &l).unwrap();
        assert_eq!(classify_map(&pm).kind, MorphismKind::Collineation);
        // singular matrices are rejected
        let sing = vec![vec![1, 1, 0, 0], vec![1, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]];
        assert!(SemilinearMap::new(&p.field, sing, 0).is_err());
    }

    #[test]
    fn frobenius_collineation_on_pg24() {
        let p = pg(2, 4);
        let l = SemilinearMap::new(&p.field, linalg::identity(3), 1).unwrap();
        let pm = induced_point_map(&p, &l).unwrap();
        assert_eq!(classify_map(&pm).kind, MorphismKind::Collineation);
        // fixes rational points, moves some point with a non-subfield coordinate
        let fixed = p.point_id(&[1, 1, 0]).unwrap();
        assert_eq!(pm.map[fixed], fixed);
        let moved = p.point_id(&[1, 2, 0]).unwrap(); // (1, w, 0)
        assert_ne!(pm.map[moved], moved);
    }

    #[test]
    fn induced_map_functoriality() {
        let p = pg(2, 4);
        let f = &p.field;
        let a = SemilinearMap::new(f, vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]], 1).unwrap();
        let b = SemilinearMap::new(f, vec![vec![2, 0, 0], vec![0, 1, 1], vec![1, 0, 1]], 1).unwrap();
        let ab = a.compose(f, &b);
        assert_eq!(ab.sigma, 0);
        let pa = induced_point_map(&p, &a).unwrap();
        let pb = induced_point_map(&p, &b).unwrap();
        let pab = induced_point_map(&p, &ab).unwrap();
        assert_eq!(pa.compose(&pb).map, pab.map);
    }

    #[test]
    fn dual_of_pg32_is_projective_with_15_points() {
        let p = pg(3, 2);
        let d = dual_space(&p);
        assert_eq!(d.hyperplanes.len(), 15);
        assert_eq!(d.space.lines.len(), 35);
        assert!(d.space.validate().is_ok());
        assert!(verify_projective_axioms(&d.space).is_projective());
    }

    #[test]
    fn dual_dictionary_roundtrip() {
        let p = pg(3, 2);
        let d = dual_space(&p);
        // every line of the primal corresponds to a dual line and back
        for lr in &p.line_rrefs {
            let pts = p.point_set(lr);
            let dual_pts = d.dual_subspace_of_primal_points(&pts);
            assert_eq!(dual_pts.count(), 3); // pencil of planes through a line
            let back = d.primal_points_of_dual_subspace(&dual_pts);
            assert_eq!(back, pts);
        }
    }

    #[test]
    fn annihilator_collineation_examples() {
        let p = pg(3, 2);
        let d = dual_space(&p);
        let (pm, coord_dual) = annihilator_collineation(&p, &d).unwrap();
        assert_eq!(classify_map(&pm).kind, MorphismKind::Collineation);
        // x0 = 0 hyperplane maps to the point (1,0,0,0)
        let h = SubRref::from_rows(
            &p.field,
            &vec![vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]],
        );
        let hid = d.hyperplane_id(&h).unwrap();
        assert_eq!(
            pm.map[hid],
            coord_dual.point_id(&[1, 0, 0, 0]).unwrap()
        );
        // x0+x1+x2+x3 = 0 maps to (1,1,1,1)
        let rows = linalg::annihilator(&p.field, &vec![vec![1, 1, 1, 1]], 4);
        let h2 = SubRref::from_rows(&p.field, &rows);
        let hid2 = d.hyperplane_id(&h2).unwrap();
        assert_eq!(pm.map[hid2], coord_dual.point_id(&[1, 1, 1, 1]).unwrap());
    }

    #[test]
    fn punctured_space_fails_p1() {
        let p = pg(3, 2);
        let mut x = p.space.all_points();
        x.remove(0);
        let (restricted, _) = p.space.restrict(&x).unwrap();
        let rep = verify_projective_axioms(&restricted);
        assert!(rep.p2_ok || !rep.p2_ok); // p2 may fail too (2-point lines)
        assert!(!rep.p1_ok);
        assert!(rep.p1_witness.is_some());
    }

    #[test]
    fn graph_search_finds_fano_collineations() {
        let p = pg(2, 2);
        let autos = collineations_by_graph_search(&p.space, &p.space);
        assert_eq!(autos.len(), 168);
        // every found automorphism is matrix-induced
        for a in autos.iter().take(20) {
            assert!(matrix_inducing(&p, a).is_some());
        }
    }
}
