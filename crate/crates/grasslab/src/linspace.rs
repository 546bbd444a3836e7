//! Abstract finite linear spaces: the axioms L1/L2, the iterated closure
//! operator, independence and bases, the exchange axiom, and classification
//! of point maps (semicollineations, collineations, embeddings).
//!
//! Points are dense indices `0..n_points`; lines and subspaces are bitsets
//! over that range. Everything is immutable after construction and all
//! operations are pure.

use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::bitset::BitSet;

const NO_LINE: u32 = u32::MAX;
const MULTI_LINE: u32 = u32::MAX - 1;

#[derive(Debug, Error)]
pub enum SpaceError {
    #[error("point index {0} out of range")]
    PointOutOfRange(usize),
    #[error("input point set is not independent")]
    DependentInput,
    #[error("restriction needs at least three non-collinear points")]
    DegenerateRestriction,
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("space does not satisfy the linear-space axioms: {0:?}")]
    InvalidSpace(AxiomViolation),
}

/// A structured report of the first axioms the space breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// L1: a line with fewer than two points.
    UndersizedLine { line: usize },
    /// A line must be a proper subset of the point set.
    LineNotProper { line: usize },
    /// L2: a pair of distinct points on no line.
    PairOnNoLine { p: usize, q: usize },
    /// L2: a pair of distinct points on more than one line.
    PairOnManyLines { p: usize, q: usize },
}

/// A finite point/line incidence structure.
pub struct LinearSpace {
    pub label: String,
    pub n_points: usize,
    pub lines: Vec<BitSet>,
    line_through: Vec<u32>,
    dim_cache: OnceLock<usize>,
}

impl LinearSpace {
    pub fn new(label: impl Into<String>, n_points: usize, lines: Vec<BitSet>) -> LinearSpace {
        let mut line_through = vec![NO_LINE; n_points * n_points];
        for (li, line) in lines.iter().enumerate() {
            let pts = line.to_vec();
            for (a, &p) in pts.iter().enumerate() {
                for &q in &pts[a + 1..] {
                    for idx in [p * n_points + q, q * n_points + p] {
                        line_through[idx] = if line_through[idx] == NO_LINE {
                            li as u32
                        } else {
                            MULTI_LINE
                        };
                    }
                }
            }
        }
        LinearSpace {
            label: label.into(),
            n_points,
            lines,
            line_through,
            dim_cache: OnceLock::new(),
        }
    }

    pub fn from_point_lists(
        label: impl Into<String>,
        n_points: usize,
        lines: &[Vec<usize>],
    ) -> LinearSpace {
        let lines = lines
            .iter()
            .map(|l| BitSet::from_iter(n_points, l.iter().copied()))
            .collect();
        Self::new(label, n_points, lines)
    }

    /// The space of Example 1.1: every 2-subset of the point set is a line.
    pub fn complete_graph(n: usize) -> LinearSpace {
        let mut lines = Vec::new();
        for p in 0..n {
            for q in p + 1..n {
                lines.push(BitSet::from_iter(n, [p, q]));
            }
        }
        Self::new(format!("complete-{n}"), n, lines)
    }

    /// Confirms L1 and L2 or reports every offending line and pair.
    pub fn validate(&self) -> Result<(), Vec<AxiomViolation>> {
        let mut bad = Vec::new();
        for (li, line) in self.lines.iter().enumerate() {
            let c = line.count();
            if c < 2 {
                bad.push(AxiomViolation::UndersizedLine { line: li });
            }
            if c >= self.n_points {
                bad.push(AxiomViolation::LineNotProper { line: li });
            }
        }
        for p in 0..self.n_points {
            for q in p + 1..self.n_points {
                match self.line_through[p * self.n_points + q] {
                    NO_LINE => bad.push(AxiomViolation::PairOnNoLine { p, q }),
                    MULTI_LINE => bad.push(AxiomViolation::PairOnManyLines { p, q }),
                    _ => {}
                }
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(bad)
        }
    }

    /// Index of the unique line through two distinct points.
    pub fn line_index(&self, p: usize, q: usize) -> Option<usize> {
        match self.line_through[p * self.n_points + q] {
            NO_LINE | MULTI_LINE => None,
            li => Some(li as usize),
        }
    }

    pub fn collinear(&self, p: usize, q: usize, r: usize) -> bool {
        if p == q || p == r || q == r {
            return true;
        }
        match self.line_index(p, q) {
            Some(li) => self.lines[li].contains(r),
            None => false,
        }
    }

    pub fn all_points(&self) -> BitSet {
        BitSet::full(self.n_points)
    }

    /// Minimal subspace containing `x`, by iterating the one-step hull to a
    /// fixed point. Terminates in at most `n_points` rounds.
    pub fn closure(&self, x: &BitSet) -> BitSet {
        self.closure_with_depth(x).0
    }

    /// Closure together with the number of one-step hull rounds taken.
    pub fn closure_with_depth(&self, x: &BitSet) -> (BitSet, usize) {
        let mut cur = x.clone();
        if cur.count() <= 1 {
            return (cur, 0);
        }
        let mut members = cur.to_vec();
        let mut frontier = members.clone();
        let mut rounds = 0;
        while !frontier.is_empty() {
            let mut added = Vec::new();
            for &p in &frontier {
                for qi in 0..members.len() {
                    let q = members[qi];
                    if p == q {
                        continue;
                    }
                    if let Some(li) = self.line_index(p, q) {
                        for r in self.lines[li].iter() {
                            if !cur.contains(r) {
                                cur.insert(r);
                                added.push(r);
                            }
                        }
                    }
                }
            }
            members.extend(added.iter().copied());
            if added.is_empty() {
                break;
            }
            rounds += 1;
            frontier = added;
        }
        (cur, rounds)
    }

    pub fn closure_of(&self, pts: &[usize]) -> BitSet {
        self.closure(&BitSet::from_iter(self.n_points, pts.iter().copied()))
    }

    /// True iff the line through every pair of `s` stays inside `s`.
    pub fn is_subspace(&self, s: &BitSet) -> bool {
        let pts = s.to_vec();
        for (a, &p) in pts.iter().enumerate() {
            for &q in &pts[a + 1..] {
                match self.line_index(p, q) {
                    Some(li) => {
                        if !self.lines[li].is_subset(s) {
                            return false;
                        }
                    }
                    None => return false,
                }
            }
        }
        true
    }

    /// True iff no proper subset of `x` spans it; only the maximal proper
    /// subsets need testing since independence is hereditary.
    pub fn is_independent(&self, x: &BitSet) -> bool {
        for p in x.iter() {
            let mut rest = x.clone();
            rest.remove(p);
            if self.closure(&rest).contains(p) {
                return false;
            }
        }
        true
    }

    /// Greedy independent spanning set (lowest index first). In an
    /// exchange-axiom space this is a base of minimal size.
    pub fn greedy_spanning(&self) -> Vec<usize> {
        let mut base = Vec::new();
        let mut span = BitSet::new(self.n_points);
        for p in 0..self.n_points {
            if !span.contains(p) {
                base.push(p);
                span = self.closure_of(&base);
                if span.count() == self.n_points {
                    break;
                }
            }
        }
        base
    }

    /// Exact dimension: the smallest number of spanning points minus one.
    ///
    /// A greedy pass gives an upper bound; smaller spanning sets are then
    /// searched exhaustively, which only matters when the exchange axiom
    /// fails.
    pub fn dimension(&self) -> usize {
        *self.dim_cache.get_or_init(|| {
            let g = self.greedy_spanning().len();
            for s in 1..g {
                if self.spanning_set_of_size(s).is_some() {
                    return s - 1;
                }
            }
            g - 1
        })
    }

    fn spanning_set_of_size(&self, s: usize) -> Option<Vec<usize>> {
        // DFS over irredundant prefixes: each new point outside the closure
        // of the ones before it. Minimal spanning sets are irredundant, so
        // none are missed.
        fn rec(
            space: &LinearSpace,
            cur: &mut Vec<usize>,
            span: &BitSet,
            s: usize,
        ) -> Option<Vec<usize>> {
            if cur.len() == s {
                return (span.count() == space.n_points).then(|| cur.clone());
            }
            let start = cur.last().map_or(0, |&l| l + 1);
            for p in start..space.n_points {
                if span.contains(p) {
                    continue;
                }
                cur.push(p);
                let next = space.closure_of(cur);
                if let Some(found) = rec(space, cur, &next, s) {
                    return Some(found);
                }
                cur.pop();
            }
            None
        }
        rec(self, &mut Vec::new(), &BitSet::new(self.n_points), s)
    }

    /// Dimension of a subspace given as its point set, by a greedy base
    /// inside it (exact when the exchange axiom holds). Empty set is -1.
    pub fn subspace_dim(&self, s: &BitSet) -> i64 {
        let c = s.count();
        if c == 0 {
            return -1;
        }
        if c == 1 {
            return 0;
        }
        let mut base: Vec<usize> = Vec::new();
        let mut span = BitSet::new(self.n_points);
        for p in s.iter() {
            if !span.contains(p) {
                base.push(p);
                span = self.closure_of(&base);
            }
        }
        base.len() as i64 - 1
    }

    /// Exhaustive exchange-axiom check over the subspace lattice (the
    /// condition only depends on the closure of `X`). Returns the first
    /// counterexample `(closed set, p1, p2)` if the axiom fails.
    pub fn check_exchange(&self, cap: usize) -> Result<Option<(BitSet, usize, usize)>, SpaceError> {
        let subspaces = self.all_subspaces(cap)?;
        for c in &subspaces {
            for p1 in 0..self.n_points {
                if c.contains(p1) {
                    continue;
                }
                let mut with_p1 = c.clone();
                with_p1.insert(p1);
                let span1 = self.closure(&with_p1);
                for p2 in span1.iter() {
                    if p2 == p1 || c.contains(p2) {
                        continue;
                    }
                    let mut with_p2 = c.clone();
                    with_p2.insert(p2);
                    if !self.closure(&with_p2).contains(p1) {
                        return Ok(Some((c.clone(), p1, p2)));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Every subspace of the space, found by closing extensions of already
    /// known subspaces. Errors if more than `cap` subspaces exist.
    pub fn all_subspaces(&self, cap: usize) -> Result<Vec<BitSet>, SpaceError> {
        let mut seen = std::collections::HashSet::new();
        let empty = BitSet::new(self.n_points);
        let mut work = vec![empty.clone()];
        seen.insert(empty);
        for p in 0..self.n_points {
            let s = BitSet::singleton(self.n_points, p);
            if seen.insert(s.clone()) {
                work.push(s);
            }
        }
        let mut i = 0;
        while i < work.len() {
            let s = work[i].clone();
            i += 1;
            for p in 0..self.n_points {
                if s.contains(p) {
                    continue;
                }
                let mut ext = s.clone();
                ext.insert(p);
                let c = self.closure(&ext);
                if seen.insert(c.clone()) {
                    if seen.len() > cap {
                        return Err(SpaceError::BoundExceeded(format!(
                            "more than {cap} subspaces"
                        )));
                    }
                    work.push(c);
                }
            }
        }
        work.sort();
        Ok(work)
    }

    pub fn subspaces_of_dim(&self, d: i64, cap: usize) -> Result<Vec<BitSet>, SpaceError> {
        Ok(self
            .all_subspaces(cap)?
            .into_iter()
            .filter(|s| self.subspace_dim(s) == d)
            .collect())
    }

    /// Extends an independent set to a base by the reference-base swapping
    /// argument: each point of `x` replaces a reference point whose removal
    /// keeps it outside the closure. Requires the exchange axiom.
    pub fn extend_to_base(&self, x: &BitSet) -> Result<BitSet, SpaceError> {
        if !self.is_independent(x) {
            return Err(SpaceError::DependentInput);
        }
        let mut base: Vec<usize> = self.greedy_spanning();
        let xs = x.to_vec();
        for (idx, &q) in xs.iter().enumerate() {
            if let Some(pos) = base.iter().position(|&b| b == q) {
                base.swap(idx, pos);
                continue;
            }
            let mut placed = false;
            for l in idx..base.len() {
                let mut without = base.clone();
                without.remove(l);
                if !self.closure_of(&without).contains(q) {
                    base[l] = q;
                    base.swap(idx, l);
                    placed = true;
                    break;
                }
            }
            if !placed {
                return Err(SpaceError::DependentInput);
            }
        }
        let out = BitSet::from_iter(self.n_points, base.iter().copied());
        debug_assert!(self.is_independent(&out));
        debug_assert_eq!(self.closure(&out).count(), self.n_points);
        Ok(out)
    }

    /// Every base (independent spanning set) of the space. Errors above the
    /// configured point-count cap.
    pub fn all_bases(&self, point_cap: usize) -> Result<Vec<BitSet>, SpaceError> {
        if self.n_points > point_cap {
            return Err(SpaceError::BoundExceeded(format!(
                "{} points exceeds base-enumeration cap {point_cap}",
                self.n_points
            )));
        }
        let mut out = Vec::new();
        let mut cur: Vec<usize> = Vec::new();
        self.bases_rec(&mut cur, &mut out);
        Ok(out)
    }

    fn bases_rec(&self, cur: &mut Vec<usize>, out: &mut Vec<BitSet>) {
        let set = BitSet::from_iter(self.n_points, cur.iter().copied());
        if !cur.is_empty() && self.closure(&set).count() == self.n_points {
            out.push(set);
            return; // supersets of a spanning set are dependent
        }
        let start = cur.last().map_or(0, |&l| l + 1);
        for p in start..self.n_points {
            cur.push(p);
            let s = BitSet::from_iter(self.n_points, cur.iter().copied());
            if self.is_independent(&s) {
                self.bases_rec(cur, out);
            }
            cur.pop();
        }
    }

    /// The induced space on `x` (Example 1.2 construction): lines are the
    /// traces of ambient lines with at least two points. Returns the space
    /// and the original index of each new point.
    pub fn restrict(&self, x: &BitSet) -> Result<(LinearSpace, Vec<usize>), SpaceError> {
        let kept = x.to_vec();
        if kept.len() < 3 || !self.has_noncollinear_triple(x) {
            return Err(SpaceError::DegenerateRestriction);
        }
        let back: std::collections::HashMap<usize, usize> =
            kept.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut lines = Vec::new();
        for line in &self.lines {
            let trace = line.and(x);
            if trace.count() >= 2 {
                lines.push(BitSet::from_iter(
                    kept.len(),
                    trace.iter().map(|p| back[&p]),
                ));
            }
        }
        let space = LinearSpace::new(format!("{}|restricted", self.label), kept.len(), lines);
        Ok((space, kept))
    }

    fn has_noncollinear_triple(&self, x: &BitSet) -> bool {
        let pts = x.to_vec();
        if pts.len() < 3 {
            return false;
        }
        let (p, q) = (pts[0], pts[1]);
        match self.line_index(p, q) {
            Some(li) => pts.iter().any(|&r| !self.lines[li].contains(r)),
            None => true,
        }
    }
}

impl std::fmt::Debug for LinearSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "LinearSpace({:?}, {} points, {} lines)",
            self.label,
            self.n_points,
            self.lines.len()
        )
    }
}

// ---------------------------------------------------------------------------
// point maps and their classification
// ---------------------------------------------------------------------------

/// A total map between the point sets of two linear spaces.
#[derive(Clone)]
pub struct PointMap {
    pub source: Arc<LinearSpace>,
    pub target: Arc<LinearSpace>,
    pub map: Vec<usize>,
}

impl PointMap {
    pub fn new(source: Arc<LinearSpace>, target: Arc<LinearSpace>, map: Vec<usize>) -> PointMap {
        assert_eq!(map.len(), source.n_points, "map must be total");
        assert!(
            map.iter().all(|&v| v < target.n_points),
            "map image out of range"
        );
        PointMap { source, target, map }
    }

    pub fn identity(space: Arc<LinearSpace>) -> PointMap {
        let map = (0..space.n_points).collect();
        PointMap {
            source: space.clone(),
            target: space,
            map,
        }
    }

    pub fn apply(&self, p: usize) -> usize {
        self.map[p]
    }

    pub fn image_of_set(&self, s: &BitSet) -> BitSet {
        BitSet::from_iter(self.target.n_points, s.iter().map(|p| self.map[p]))
    }

    pub fn compose(&self, then: &PointMap) -> PointMap {
        PointMap::new(
            self.source.clone(),
            then.target.clone(),
            self.map.iter().map(|&p| then.map[p]).collect(),
        )
    }
}

impl std::fmt::Debug for PointMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PointMap({} -> {}, {:?})",
            self.source.label, self.target.label, self.map
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct MapFlags {
    pub injective: bool,
    pub surjective: bool,
    pub collinearity_preserving: bool,
    pub non_collinearity_preserving: bool,
    pub independence_preserving: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MorphismKind {
    NotCollinearityPreserving,
    /// Collinearity preserving but not injective or bijective enough to be
    /// any of the named classes.
    CollinearityPreservingOnly,
    Semicollineation,
    Embedding,
    StrongEmbedding,
    Collineation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct MorphismClass {
    pub kind: MorphismKind,
    pub flags: MapFlags,
}

impl MorphismClass {
    pub fn is_collineation(&self) -> bool {
        self.kind == MorphismKind::Collineation
    }
    /// Collineations are in particular semicollineations.
    pub fn is_semicollineation(&self) -> bool {
        matches!(
            self.kind,
            MorphismKind::Semicollineation | MorphismKind::Collineation
        )
    }
    /// Strong embeddings and collineations are in particular embeddings.
    pub fn is_embedding(&self) -> bool {
        matches!(
            self.kind,
            MorphismKind::Embedding | MorphismKind::StrongEmbedding | MorphismKind::Collineation
        )
    }
    pub fn is_strong_embedding(&self) -> bool {
        matches!(
            self.kind,
            MorphismKind::StrongEmbedding | MorphismKind::Collineation
        ) && self.flags.independence_preserving
    }
}

/// Computes all morphism flags exhaustively and names the class.
///
/// Collinearity is checked line by line (the distinct images of a line must
/// lie on a common line), non-collinearity over all non-collinear triples,
/// and independence preservation over all independent subsets of size up to
/// dim+1.
pub fn classify_map(f: &PointMap) -> MorphismClass {
    let src = &f.source;
    let tgt = &f.target;
    let mut hit = vec![false; tgt.n_points];
    let mut injective = true;
    for &fp in &f.map {
        if hit[fp] {
            injective = false;
        }
        hit[fp] = true;
    }
    let surjective = hit.iter().all(|&h| h);

    let collinearity_preserving = src.lines.iter().all(|line| {
        let img = f.image_of_set(line);
        points_collinear(tgt, &img)
    });

    let mut non_collinearity_preserving = true;
    'outer: for p in 0..src.n_points {
        for q in p + 1..src.n_points {
            for r in q + 1..src.n_points {
                if !src.collinear(p, q, r) {
                    let (a, b, c) = (f.map[p], f.map[q], f.map[r]);
                    if a == b || a == c || b == c || tgt.collinear(a, b, c) {
                        non_collinearity_preserving = false;
                        break 'outer;
                    }
                }
            }
        }
    }

    let independence_preserving = independence_preserved(f);

    let flags = MapFlags {
        injective,
        surjective,
        collinearity_preserving,
        non_collinearity_preserving,
        independence_preserving,
    };
    let kind = if !collinearity_preserving {
        MorphismKind::NotCollinearityPreserving
    } else if injective && non_collinearity_preserving {
        if surjective {
            MorphismKind::Collineation
        } else if independence_preserving {
            MorphismKind::StrongEmbedding
        } else {
            MorphismKind::Embedding
        }
    } else if injective && surjective {
        MorphismKind::Semicollineation
    } else {
        MorphismKind::CollinearityPreservingOnly
    };
    MorphismClass { kind, flags }
}

fn points_collinear(space: &LinearSpace, pts: &BitSet) -> bool {
    let v = pts.to_vec();
    if v.len() <= 2 {
        return true;
    }
    match space.line_index(v[0], v[1]) {
        Some(li) => pts.is_subset(&space.lines[li]),
        None => false,
    }
}

fn independence_preserved(f: &PointMap) -> bool {
    let max_size = f.source.dimension() + 1;
    let mut cur: Vec<usize> = Vec::new();
    independence_rec(f, &mut cur, max_size)
}

fn independence_rec(f: &PointMap, cur: &mut Vec<usize>, max_size: usize) -> bool {
    if !cur.is_empty() {
        let img = BitSet::from_iter(f.target.n_points, cur.iter().map(|&p| f.map[p]));
        if !f.target.is_independent(&img) {
            return false;
        }
    }
    if cur.len() == max_size {
        return true;
    }
    let start = cur.last().map_or(0, |&l| l + 1);
    for p in start..f.source.n_points {
        cur.push(p);
        let s = BitSet::from_iter(f.source.n_points, cur.iter().copied());
        if f.source.is_independent(&s) && !independence_rec(f, cur, max_size) {
            cur.pop();
            return false;
        }
        cur.pop();
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> LinearSpace {
        // PG(2,2) written down directly: points 1..=7 as nonzero GF(2)^3
        // vectors (index = binary code - 1), lines = {a, b, a xor b}.
        let mut lines = Vec::new();
        for a in 1u8..8 {
            for b in (a + 1)..8 {
                let c = a ^ b;
                if c > b {
                    lines.push(vec![a as usize - 1, b as usize - 1, c as usize - 1]);
                }
            }
        }
        LinearSpace::from_point_lists("fano", 7, &lines)
    }

    #[test]
    fn fano_validates() {
        let f = fano();
        assert_eq!(f.lines.len(), 7);
        assert!(f.validate().is_ok());
    }

    #[test]
    fn complete_graph_validates_and_has_trivial_closure() {
        let k4 = LinearSpace::complete_graph(4);
        assert!(k4.validate().is_ok());
        let x = BitSet::from_iter(4, [0, 2]);
        assert_eq!(k4.closure(&x), x);
        assert_eq!(k4.dimension(), 3);
    }

    #[test]
    fn l2_violation_is_reported() {
        let s = LinearSpace::from_point_lists("bad", 3, &[vec![0, 1], vec![0, 1, 2]]);
        let viols = s.validate().unwrap_err();
        assert!(viols
            .iter()
            .any(|v| matches!(v, AxiomViolation::PairOnManyLines { p: 0, q: 1 })));
        // the 3-point line covers all points, so it is not proper
        assert!(viols
            .iter()
            .any(|v| matches!(v, AxiomViolation::LineNotProper { .. })));
    }

    #[test]
    fn undersized_and_missing_pairs() {
        let s = LinearSpace::from_point_lists("bad2", 4, &[vec![0], vec![1, 2]]);
        let viols = s.validate().unwrap_err();
        assert!(viols
            .iter()
            .any(|v| matches!(v, AxiomViolation::UndersizedLine { line: 0 })));
        assert!(viols
            .iter()
            .any(|v| matches!(v, AxiomViolation::PairOnNoLine { p: 0, q: 3 })));
    }

    #[test]
    fn closure_trivial_cases() {
        let f = fano();
        let empty = BitSet::new(7);
        assert_eq!(f.closure(&empty), empty);
        let single = BitSet::singleton(7, 3);
        assert_eq!(f.closure(&single), single);
        // two points close to the full 3-point line
        let pair = BitSet::from_iter(7, [0, 1]);
        let c = f.closure(&pair);
        assert_eq!(c.count(), 3);
        assert!(f.is_subspace(&c));
    }

    #[test]
    fn subspace_predicate() {
        let f = fano();
        assert!(f.is_subspace(&BitSet::new(7)));
        assert!(f.is_subspace(&BitSet::singleton(7, 2)));
        for line in &f.lines {
            assert!(f.is_subspace(line));
        }
        // a 2-point subset of a 3-point line is not a subspace
        let line0 = f.lines[0].to_vec();
        let partial = BitSet::from_iter(7, [line0[0], line0[1]]);
        assert!(!f.is_subspace(&partial));
    }

    #[test]
    fn independence_in_fano() {
        let f = fano();
        assert!(f.is_independent(&BitSet::singleton(7, 0)));
        // three collinear points are dependent
        let line = f.lines[0].clone();
        assert!(!f.is_independent(&line));
        // three non-collinear points are independent
        let mut found = None;
        'search: for p in 0..7 {
            for q in p + 1..7 {
                for r in q + 1..7 {
                    if !f.collinear(p, q, r) {
                        found = Some([p, q, r]);
                        break 'search;
                    }
                }
            }
        }
        let tri = found.unwrap();
        assert!(f.is_independent(&BitSet::from_iter(7, tri)));
    }

    #[test]
    fn fano_dimension_and_bases() {
        let f = fano();
        assert_eq!(f.dimension(), 2);
        let bases = f.all_bases(16).unwrap();
        // 7*6*4 ordered frames / 3! = 28
        assert_eq!(bases.len(), 28);
        assert!(bases.iter().all(|b| b.count() == 3));
    }

    #[test]
    fn complete_graph_single_base() {
        let k5 = LinearSpace::complete_graph(5);
        let bases = k5.all_bases(16).unwrap();
        assert_eq!(bases.len(), 1);
        assert_eq!(bases[0].count(), 5);
        // and the exchange axiom holds trivially
        assert!(k5.check_exchange(100_000).unwrap().is_none());
    }

    #[test]
    fn fano_exchange_holds() {
        let f = fano();
        assert!(f.check_exchange(100_000).unwrap().is_none());
    }

    #[test]
    fn extend_to_base_from_pair() {
        let f = fano();
        // pick two distinct points; the extension must be a 3-point base
        let x = BitSet::from_iter(7, [0, 1]);
        let b = f.extend_to_base(&x).unwrap();
        assert_eq!(b.count(), 3);
        assert!(x.is_subset(&b));
        assert!(f.is_independent(&b));
        assert_eq!(f.closure(&b).count(), 7);
        // a base extends to itself
        let b2 = f.extend_to_base(&b).unwrap();
        assert_eq!(b2, b);
        // dependent input is rejected
        let line = f.lines[0].clone();
        assert!(matches!(
            f.extend_to_base(&line),
            Err(SpaceError::DependentInput)
        ));
    }

    #[test]
    fn closure_operator_laws_fano() {
        let f = fano();
        // extensive, monotone, idempotent over all subsets of a base and more
        for code in 0u32..128 {
            let x = BitSet::from_iter(7, (0..7).filter(|&i| code & (1 << i) != 0));
            let c = f.closure(&x);
            assert!(x.is_subset(&c));
            assert_eq!(f.closure(&c), c);
            let mut y = x.clone();
            y.insert(0);
            assert!(c.is_subset(&f.closure(&y)));
        }
    }

    #[test]
    fn restriction_of_fano_to_line_complement() {
        let f = Arc::new(fano());
        let mut x = BitSet::full(7);
        for p in f.lines[0].iter() {
            x.remove(p);
        }
        let (r, kept) = f.restrict(&x).unwrap();
        assert_eq!(r.n_points, 4);
        assert_eq!(kept.len(), 4);
        assert!(r.validate().is_ok());
        // too-small restriction is rejected
        let two = BitSet::from_iter(7, [0, 1]);
        assert!(matches!(
            f.restrict(&two),
            Err(SpaceError::DegenerateRestriction)
        ));
    }

    #[test]
    fn restriction_to_full_point_set_is_identity() {
        let f = fano();
        let x = f.all_points();
        let (r, kept) = f.restrict(&x).unwrap();
        assert_eq!(r.n_points, f.n_points);
        assert_eq!(r.lines.len(), f.lines.len());
        assert_eq!(kept, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn identity_is_collineation() {
        let f = Arc::new(fano());
        let id = PointMap::identity(f);
        let class = classify_map(&id);
        assert_eq!(class.kind, MorphismKind::Collineation);
        assert!(class.flags.independence_preserving);
    }

    #[test]
    fn complete_graph_any_bijection_is_collineation() {
        // Example 1.3: with only 2-point lines, every bijection works.
        let k = Arc::new(LinearSpace::complete_graph(4));
        let f = PointMap::new(k.clone(), k.clone(), vec![2, 0, 3, 1]);
        assert_eq!(classify_map(&f).kind, MorphismKind::Collineation);
    }

    #[test]
    fn collapsing_map_is_not_an_embedding() {
        let k = Arc::new(LinearSpace::complete_graph(4));
        let f = PointMap::new(k.clone(), k.clone(), vec![0, 0, 1, 2]);
        let class = classify_map(&f);
        assert!(!class.flags.injective);
        assert_ne!(class.kind, MorphismKind::Collineation);
    }
}
