//! Maps between Grassmann spaces: lifting point maps, adjacency and
//! base-subset preservation checks, the star/top action of a map, the
//! induced map one level down, and full recognition — reconstructing the
//! collineation, duality, or embedding that induces a given map and
//! re-verifying the reconstruction against the input exactly.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::baseset;
use crate::bitset::{binomial, k_subsets, BitSet};
use crate::grassmann::{Ambient, GrassmannError, GrassmannSpace};
use crate::linspace::{classify_map, LinearSpace, MorphismClass, PointMap, SpaceError};
use crate::projspace::{build_pg, dual_space, DualSpace, PgError, PgSpace};

#[derive(Debug, Error)]
pub enum ChowError {
    #[error("map levels or ambient spaces do not match")]
    LevelMismatch,
    #[error("recognition at k = 0 or k = n-1 is refused in base-subset mode")]
    DegenerateLevel,
    #[error("operation requires a projective (coordinate-built) ambient")]
    NotProjective,
    #[error("map is not injective")]
    NotInjective,
    #[error("star images are neither consistently stars nor tops: {0}")]
    InconsistentCliqueAction(String),
    #[error("type-B action is impossible unless n = 2k+1 (n = {n}, k = {k})")]
    TypeBImpossible { n: usize, k: i64 },
    #[error("point map does not lift at level {level}: image of element {element} has wrong dimension")]
    LiftFailed { level: i64, element: usize },
    #[error(transparent)]
    Grassmann(#[from] GrassmannError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Pg(#[from] PgError),
    #[error(transparent)]
    BaseSubset(#[from] baseset::BaseSubsetError),
}

/// A total map between two indexed Grassmann spaces.
#[derive(Clone)]
pub struct GrassmannMap {
    pub source: Arc<GrassmannSpace>,
    pub target: Arc<GrassmannSpace>,
    pub map: Vec<usize>,
}

impl GrassmannMap {
    pub fn new(
        source: Arc<GrassmannSpace>,
        target: Arc<GrassmannSpace>,
        map: Vec<usize>,
    ) -> Result<GrassmannMap, ChowError> {
        if map.len() != source.len() || map.iter().any(|&v| v >= target.len()) {
            return Err(ChowError::LevelMismatch);
        }
        Ok(GrassmannMap { source, target, map })
    }

    pub fn injective(&self) -> bool {
        let mut hit = vec![false; self.target.len()];
        for &v in &self.map {
            if hit[v] {
                return false;
            }
            hit[v] = true;
        }
        true
    }

    pub fn surjective(&self) -> bool {
        let mut hit = vec![false; self.target.len()];
        for &v in &self.map {
            hit[v] = true;
        }
        hit.iter().all(|&h| h)
    }

    pub fn apply(&self, e: usize) -> usize {
        self.map[e]
    }
}

/// G_k(g): the lift of a point map to level k, sending each element to the
/// closure of its image point set. Verifies element by element that the
/// closure lands on level k of the target; embeddings that are not strong
/// may fail here at some levels.
pub fn lift_embedding(
    g: &PointMap,
    source: Arc<GrassmannSpace>,
    target: Arc<GrassmannSpace>,
) -> Result<GrassmannMap, ChowError> {
    if !Arc::ptr_eq(&g.source, source.ambient.space())
        || !Arc::ptr_eq(&g.target, target.ambient.space())
        || source.k != target.k
    {
        return Err(ChowError::LevelMismatch);
    }
    let mut map = Vec::with_capacity(source.len());
    for (idx, e) in source.elements.iter().enumerate() {
        let img = g.image_of_set(&e.points);
        let closed = g.target.closure(&img);
        match target.element_id(&closed) {
            Some(id) => map.push(id),
            None => {
                return Err(ChowError::LiftFailed {
                    level: source.k,
                    element: idx,
                })
            }
        }
    }
    GrassmannMap::new(source, target, map)
}

/// The contragredient: the hyperplane-level map of a strong embedding
/// between projective spaces, as a point map between the dual spaces.
pub fn contragredient(
    g: &PointMap,
    src_dual: &DualSpace,
    tgt_dual: &DualSpace,
) -> Result<PointMap, ChowError> {
    if !Arc::ptr_eq(&g.source, &src_dual.primal.space)
        || !Arc::ptr_eq(&g.target, &tgt_dual.primal.space)
    {
        return Err(ChowError::LevelMismatch);
    }
    let mut map = Vec::with_capacity(src_dual.hyperplanes.len());
    for hs in &src_dual.hyper_sets {
        let img = g.image_of_set(hs);
        let closed = g.target.closure(&img);
        let hid = (0..tgt_dual.hyper_sets.len()).find(|&h| tgt_dual.hyper_sets[h] == closed);
        match hid {
            Some(h) => map.push(h),
            None => {
                return Err(ChowError::LiftFailed {
                    level: src_dual.primal.n as i64 - 1,
                    element: map.len(),
                })
            }
        }
    }
    Ok(PointMap::new(
        src_dual.space.clone(),
        tgt_dual.space.clone(),
        map,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct AdjacencyPreservation {
    pub forward: bool,
    pub backward: bool,
}

/// Forward: adjacent pairs map to adjacent pairs. Backward: preimages of
/// adjacent image pairs are adjacent (meaningful for injective maps).
pub fn check_adjacency_preserving(f: &GrassmannMap) -> AdjacencyPreservation {
    let mut forward = true;
    let mut backward = true;
    let n = f.source.len();
    for i in 0..n {
        for j in i + 1..n {
            let src_adj = f.source.adjacent(i, j);
            let (fi, fj) = (f.map[i], f.map[j]);
            let img_adj = fi != fj && f.target.adjacent(fi, fj);
            if src_adj && !img_adj {
                forward = false;
            }
            if !src_adj && img_adj {
                backward = false;
            }
        }
    }
    AdjacencyPreservation { forward, backward }
}

/// Frame-sampling policy for the base-subset preservation check.
#[derive(Debug, Clone, Copy)]
pub enum FramePolicy {
    All,
    /// N random frames plus every one-point swap of the greedy frame.
    Sample(usize),
}

#[derive(Debug, Clone)]
pub struct BasePreservationReport {
    pub ok: bool,
    pub frames_tested: usize,
    pub witness_frame: Option<Vec<usize>>,
    pub sampled: bool,
}

/// Collects the frames to test under a policy, deterministically for a
/// fixed seed.
pub fn frames_for_policy(
    space: &LinearSpace,
    policy: FramePolicy,
    seed: u64,
) -> Result<Vec<Vec<usize>>, ChowError> {
    match policy {
        FramePolicy::All => Ok(space
            .all_bases(64)?
            .into_iter()
            .map(|b| b.to_vec())
            .collect()),
        FramePolicy::Sample(count) => {
            let mut frames: Vec<Vec<usize>> = Vec::new();
            let reference = space.greedy_spanning();
            frames.push(reference.clone());
            // all one-point swaps of the reference frame
            for pos in 0..reference.len() {
                for p in 0..space.n_points {
                    if reference.contains(&p) {
                        continue;
                    }
                    let mut cand = reference.clone();
                    cand[pos] = p;
                    if is_frame(space, &cand) {
                        frames.push(cand);
                    }
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut points: Vec<usize> = (0..space.n_points).collect();
            let mut guard = 0;
            while frames.len() < count && guard < count * 50 {
                guard += 1;
                points.shuffle(&mut rng);
                let mut cand = Vec::new();
                let mut span = BitSet::new(space.n_points);
                for &p in &points {
                    if !span.contains(p) {
                        cand.push(p);
                        span = space.closure_of(&cand);
                        if span.count() == space.n_points {
                            break;
                        }
                    }
                }
                if is_frame(space, &cand) && !frames.contains(&cand) {
                    frames.push(cand);
                }
            }
            frames.truncate(count.max(1));
            Ok(frames)
        }
    }
}

fn is_frame(space: &LinearSpace, frame: &[usize]) -> bool {
    let fs = BitSet::from_iter(space.n_points, frame.iter().copied());
    fs.count() == frame.len()
        && frame.len() == space.dimension() + 1
        && space.is_independent(&fs)
        && space.closure(&fs).count() == space.n_points
}

/// Does the image of every tested base subset form a base subset of the
/// target? The candidate target frame is reconstructed from the image set:
/// its points are exactly those incident to at least two members.
pub fn check_base_preserving(
    f: &GrassmannMap,
    policy: FramePolicy,
    seed: u64,
) -> Result<BasePreservationReport, ChowError> {
    let src_space = f.source.ambient.space();
    let frames = frames_for_policy(src_space, policy, seed)?;
    let sampled = matches!(policy, FramePolicy::Sample(_));
    let mut tested = 0;
    for frame in &frames {
        tested += 1;
        let b = baseset::base_subset(&f.source, frame)?;
        let image: BitSet =
            BitSet::from_iter(f.target.len(), b.member_set.iter().map(|e| f.map[e]));
        if !image_is_base_subset(&f.target, &image) {
            return Ok(BasePreservationReport {
                ok: false,
                frames_tested: tested,
                witness_frame: Some(frame.clone()),
                sampled,
            });
        }
    }
    Ok(BasePreservationReport {
        ok: true,
        frames_tested: tested,
        witness_frame: None,
        sampled,
    })
}

/// Decides whether a set of target elements is exactly the base subset of
/// some target frame. Frame points of a base subset lie on at least two
/// members while all other points lie on at most one, so the candidate
/// frame is read off the incidence counts and then verified.
pub fn image_is_base_subset(g: &GrassmannSpace, image: &BitSet) -> bool {
    let n = g.ambient.dim();
    let k1 = (g.k + 1) as usize;
    if image.count() != binomial(n + 1, k1) {
        return false;
    }
    let space = g.ambient.space();
    let mut incidence = vec![0usize; space.n_points];
    for e in image.iter() {
        for p in g.elements[e].points.iter() {
            incidence[p] += 1;
        }
    }
    let candidates: Vec<usize> = (0..space.n_points)
        .filter(|&p| incidence[p] >= 2)
        .collect();
    if candidates.len() != n + 1 {
        return false;
    }
    match baseset::base_subset(g, &candidates) {
        Ok(b) => &b.member_set == image,
        Err(_) => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CliqueAction {
    TypeA,
    TypeB,
}

/// Determines whether star images land in stars (type A) or in tops
/// (type B), verifying global consistency over every star of the source
/// rather than assuming connectivity.
pub fn classify_clique_action(f: &GrassmannMap) -> Result<CliqueAction, ChowError> {
    let k = f.source.k;
    let n = f.source.ambient.dim();
    if !(0 < k && (k as usize) < n - 1) {
        return Err(ChowError::DegenerateLevel);
    }
    let lower = GrassmannSpace::enumerate(f.source.ambient.clone(), k - 1)?;
    let mut votes_a = 0usize;
    let mut votes_b = 0usize;
    for s in &lower.elements {
        match star_image_kind(f, &s.points)? {
            StarImage::Star(_) => votes_a += 1,
            StarImage::Top(_) => votes_b += 1,
        }
    }
    if votes_b == 0 {
        Ok(CliqueAction::TypeA)
    } else if votes_a == 0 {
        if n != (2 * k + 1) as usize {
            return Err(ChowError::TypeBImpossible { n, k });
        }
        Ok(CliqueAction::TypeB)
    } else {
        Err(ChowError::InconsistentCliqueAction(format!(
            "{votes_a} stars map into stars, {votes_b} into tops"
        )))
    }
}

enum StarImage {
    /// common (k-1)-dimensional part of all images
    Star(BitSet),
    /// (k+1)-dimensional span of all images
    Top(BitSet),
}

/// Image analysis of one star: all k-subspaces through `center` are mapped;
/// either their images share a (k-1)-subspace or they span a common
/// (k+1)-subspace.
fn star_image_kind(f: &GrassmannMap, center: &BitSet) -> Result<StarImage, ChowError> {
    let members: Vec<usize> = (0..f.source.len())
        .filter(|&e| center.is_subset(&f.source.elements[e].points))
        .collect();
    if members.len() < 2 {
        return Err(ChowError::InconsistentCliqueAction(
            "star with fewer than two members".into(),
        ));
    }
    let tgt = &f.target;
    let mut inter = tgt.elements[f.map[members[0]]].points.clone();
    let mut union = inter.clone();
    for &e in &members[1..] {
        let pts = &tgt.elements[f.map[e]].points;
        inter.and_assign(pts);
        union.or_assign(pts);
    }
    if tgt.set_dim(&inter) == tgt.k - 1 {
        return Ok(StarImage::Star(inter));
    }
    let span = tgt.ambient.space().closure(&union);
    if tgt.set_dim(&span) == tgt.k + 1 {
        return Ok(StarImage::Top(span));
    }
    Err(ChowError::InconsistentCliqueAction(
        "star image fits neither a star nor a top".into(),
    ))
}

/// The induced map one level down (or up, into the dual direction): for
/// each (k-1)-subspace S the unique S' with f(G_k(S)) inside G_k(S'). The
/// dimension dichotomy is evaluated on every star and must be global.
pub enum InducedLower {
    /// map at level k-1 on both sides
    Lower(GrassmannMap),
    /// star images land in tops: map from level k-1 to level k+1
    UpperDual(GrassmannMap),
}

pub fn induce_lower(f: &GrassmannMap) -> Result<InducedLower, ChowError> {
    if !f.injective() {
        return Err(ChowError::NotInjective);
    }
    let k = f.source.k;
    let lower_src = Arc::new(GrassmannSpace::enumerate(f.source.ambient.clone(), k - 1)?);
    let mut star_kinds = Vec::with_capacity(lower_src.len());
    for s in &lower_src.elements {
        star_kinds.push(star_image_kind(f, &s.points)?);
    }
    let all_star = star_kinds.iter().all(|k| matches!(k, StarImage::Star(_)));
    let all_top = star_kinds.iter().all(|k| matches!(k, StarImage::Top(_)));
    if all_star {
        let lower_tgt = Arc::new(GrassmannSpace::enumerate(f.target.ambient.clone(), k - 1)?);
        let mut map = Vec::with_capacity(lower_src.len());
        for kind in &star_kinds {
            let StarImage::Star(pts) = kind else { unreachable!() };
            map.push(lower_tgt.element_id(pts).ok_or(ChowError::LiftFailed {
                level: k - 1,
                element: map.len(),
            })?);
        }
        Ok(InducedLower::Lower(GrassmannMap::new(
            lower_src, lower_tgt, map,
        )?))
    } else if all_top {
        let n = f.source.ambient.dim();
        if n != (2 * k + 1) as usize {
            return Err(ChowError::TypeBImpossible { n, k });
        }
        let upper_tgt = Arc::new(GrassmannSpace::enumerate(f.target.ambient.clone(), k + 1)?);
        let mut map = Vec::with_capacity(lower_src.len());
        for kind in &star_kinds {
            let StarImage::Top(pts) = kind else { unreachable!() };
            map.push(upper_tgt.element_id(pts).ok_or(ChowError::LiftFailed {
                level: k + 1,
                element: map.len(),
            })?);
        }
        Ok(InducedLower::UpperDual(GrassmannMap::new(
            lower_src, upper_tgt, map,
        )?))
    } else {
        Err(ChowError::InconsistentCliqueAction(
            "mixed star/top images across stars".into(),
        ))
    }
}

// ---------------------------------------------------------------------------
// recognition
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecognizeMode {
    Chow,
    BaseSubset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CollineationInduced,
    DualityInduced,
    StrongEmbeddingInduced,
    DualStrongEmbeddingInduced,
    Unrecognized,
}

#[derive(Debug, Clone, Default, serde::Serialize)]
pub struct RecognitionChecks {
    pub injective: bool,
    pub surjective: bool,
    pub adjacency_forward: Option<bool>,
    pub adjacency_backward: Option<bool>,
    pub base_subsets_preserved: Option<bool>,
    pub inverse_base_subsets_preserved: Option<bool>,
    pub clique_action: Option<CliqueAction>,
    pub reconstruction_exact: bool,
    pub witness_class: Option<String>,
    pub diagnostics: Vec<String>,
}

pub struct RecognitionResult {
    pub verdict: Verdict,
    /// The inducing point map: into the target space, or into its dual when
    /// `witness_into_dual` is set.
    pub witness: Option<PointMap>,
    pub witness_into_dual: bool,
    pub witness_class: Option<MorphismClass>,
    pub checks: RecognitionChecks,
}

#[derive(Debug, Clone, Copy)]
pub struct RecognizeConfig {
    pub frame_policy: FramePolicy,
    pub seed: u64,
}

impl Default for RecognizeConfig {
    fn default() -> Self {
        RecognizeConfig {
            frame_policy: FramePolicy::Sample(200),
            seed: 0,
        }
    }
}

/// Full recognition. The mode selects which textbook hypotheses are
/// checked and reported: `Chow` records bijectivity and two-sided adjacency
/// preservation, `BaseSubset` records base-subset preservation, injectivity
/// and the derived one-sided adjacency preservation. Failed hypotheses are
/// reported, not fatal: the inducing point map is reconstructed by
/// descending through the star structure regardless, and a verdict other
/// than `Unrecognized` is returned only when lifting the witness reproduces
/// the input map exactly.
pub fn recognize(
    f: &GrassmannMap,
    mode: RecognizeMode,
    cfg: RecognizeConfig,
) -> Result<RecognitionResult, ChowError> {
    let mut checks = RecognitionChecks {
        injective: f.injective(),
        surjective: f.surjective(),
        ..Default::default()
    };
    let n = f.source.ambient.dim();
    let k = f.source.k;

    if mode == RecognizeMode::BaseSubset && (k == 0 || k == n as i64 - 1) {
        return Err(ChowError::DegenerateLevel);
    }

    match mode {
        RecognizeMode::Chow => {
            if !checks.injective || !checks.surjective {
                checks
                    .diagnostics
                    .push("not a bijection; attempting the descent anyway".into());
            }
            let adj = check_adjacency_preserving(f);
            checks.adjacency_forward = Some(adj.forward);
            checks.adjacency_backward = Some(adj.backward);
            if !adj.forward || !adj.backward {
                checks
                    .diagnostics
                    .push("adjacency is not preserved in both directions".into());
            }
        }
        RecognizeMode::BaseSubset => {
            let report = check_base_preserving(f, cfg.frame_policy, cfg.seed)?;
            checks.base_subsets_preserved = Some(report.ok);
            if !report.ok {
                checks.diagnostics.push(format!(
                    "base subset of frame {:?} does not map to a base subset",
                    report.witness_frame.unwrap_or_default()
                ));
            }
            if !checks.injective {
                checks.diagnostics.push("map is not injective".into());
            }
            // the bridge property: base-subset preserving implies adjacency
            // preserving; checked rather than assumed
            let adj = check_adjacency_preserving(f);
            checks.adjacency_forward = Some(adj.forward);
            if report.ok && !adj.forward {
                checks
                    .diagnostics
                    .push("base-subset preserving map failed the adjacency check".into());
            }
        }
    }

    let mut result = recognize_core(f, &mut checks)?;

    // an extra consequence to confirm: a bijection preserving base subsets
    // in both directions with n > 2k+1 must come from a collineation
    if mode == RecognizeMode::BaseSubset
        && result.checks.surjective
        && n as i64 > 2 * k + 1
        && result.verdict != Verdict::Unrecognized
    {
        let inverse_ok = inverse_base_preserving(f, cfg)?;
        result.checks.inverse_base_subsets_preserved = Some(inverse_ok);
        if inverse_ok
            && !result
                .witness_class
                .map(|c| c.is_collineation())
                .unwrap_or(false)
        {
            result.checks.diagnostics.push(
                "bijective base-subset-preserving map did not yield a collineation".into(),
            );
            result.verdict = Verdict::Unrecognized;
        }
    }
    Ok(result)
}

fn inverse_base_preserving(f: &GrassmannMap, cfg: RecognizeConfig) -> Result<bool, ChowError> {
    let mut inv = vec![0usize; f.target.len()];
    for (i, &v) in f.map.iter().enumerate() {
        inv[v] = i;
    }
    let g = GrassmannMap::new(f.target.clone(), f.source.clone(), inv)?;
    Ok(check_base_preserving(&g, cfg.frame_policy, cfg.seed)?.ok)
}

fn unrecognized(checks: RecognitionChecks) -> RecognitionResult {
    RecognitionResult {
        verdict: Verdict::Unrecognized,
        witness: None,
        witness_into_dual: false,
        witness_class: None,
        checks,
    }
}

/// The common recognition core: handles the small-level and dual-reduction
/// cases, classifies the clique action, descends to a point map, classifies
/// it and verifies the reconstruction.
fn recognize_core(
    f: &GrassmannMap,
    checks: &mut RecognitionChecks,
) -> Result<RecognitionResult, ChowError> {
    let n = f.source.ambient.dim();
    let k = f.source.k;

    // level 0: the map is already a point map
    if k == 0 {
        let witness = point_map_from_level0(f);
        return finish(f, witness, false, None, std::mem::take(checks));
    }

    // n < 2k+1: transport both sides through their duals to level n-k-1
    if (n as i64) < 2 * k + 1 {
        return recognize_via_duals(f, checks);
    }

    // the star/top dichotomy, evaluated globally
    let action = match induce_lower(f) {
        Ok(step) => step,
        Err(e) => {
            checks.diagnostics.push(format!("descent failed: {e}"));
            return Ok(unrecognized(std::mem::take(checks)));
        }
    };

    match action {
        InducedLower::Lower(first) => {
            checks.clique_action = Some(CliqueAction::TypeA);
            match descend_to_points(first, checks)? {
                Some(witness) => finish(f, witness, false, None, std::mem::take(checks)),
                None => Ok(unrecognized(std::mem::take(checks))),
            }
        }
        InducedLower::UpperDual(_) => {
            checks.clique_action = Some(CliqueAction::TypeB);
            // rewrite f as a map into the dual of the target and rerun the
            // type-A pipeline there
            let Some(tgt_pg) = f.target.ambient.pg().cloned() else {
                return Err(ChowError::NotProjective);
            };
            let dual = Arc::new(dual_space(&tgt_pg));
            let dual_amb = Arc::new(Ambient::Abstract(dual.space.clone()));
            let dual_grass = Arc::new(GrassmannSpace::enumerate(dual_amb, k)?);
            let mut map = Vec::with_capacity(f.source.len());
            for &img in &f.map {
                let w = &f.target.elements[img].points;
                let dual_pts = dual.dual_subspace_of_primal_points(w);
                map.push(
                    dual_grass
                        .element_id(&dual_pts)
                        .ok_or(ChowError::LiftFailed {
                            level: k,
                            element: map.len(),
                        })?,
                );
            }
            let fstar = GrassmannMap::new(f.source.clone(), dual_grass, map)?;
            let first = match induce_lower(&fstar)? {
                InducedLower::Lower(next) => next,
                InducedLower::UpperDual(_) => {
                    checks
                        .diagnostics
                        .push("dual rewrite still acts on tops".into());
                    return Ok(unrecognized(std::mem::take(checks)));
                }
            };
            match descend_to_points(first, checks)? {
                Some(witness) => finish(f, witness, true, Some(dual), std::mem::take(checks)),
                None => Ok(unrecognized(std::mem::take(checks))),
            }
        }
    }
}

/// Iterates the induced-map construction down to level 0.
fn descend_to_points(
    mut cur: GrassmannMap,
    checks: &mut RecognitionChecks,
) -> Result<Option<PointMap>, ChowError> {
    while cur.source.k > 0 {
        cur = match induce_lower(&cur) {
            Ok(InducedLower::Lower(next)) => next,
            Ok(InducedLower::UpperDual(_)) => {
                checks
                    .diagnostics
                    .push("unexpected top action below the first level".into());
                return Ok(None);
            }
            Err(e) => {
                checks.diagnostics.push(format!("descent failed: {e}"));
                return Ok(None);
            }
        };
    }
    Ok(Some(point_map_from_level0(&cur)))
}

/// Recognition for n < 2k+1: view the map at level n-k-1 of the dual
/// spaces, recurse, and transport the witness back through the dualities.
fn recognize_via_duals(
    f: &GrassmannMap,
    checks: &mut RecognitionChecks,
) -> Result<RecognitionResult, ChowError> {
    let n = f.source.ambient.dim();
    let k = f.source.k;
    let (Some(src_pg), Some(tgt_pg)) = (
        f.source.ambient.pg().cloned(),
        f.target.ambient.pg().cloned(),
    ) else {
        return Err(ChowError::NotProjective);
    };
    let src_dual = Arc::new(dual_space(&src_pg));
    let tgt_dual = Arc::new(dual_space(&tgt_pg));
    let kd = n as i64 - k - 1;
    let src_dual_g = Arc::new(GrassmannSpace::enumerate(
        Arc::new(Ambient::Abstract(src_dual.space.clone())),
        kd,
    )?);
    let tgt_dual_g = Arc::new(GrassmannSpace::enumerate(
        Arc::new(Ambient::Abstract(tgt_dual.space.clone())),
        kd,
    )?);
    // transport: a k-subspace corresponds to the dual (n-k-1)-subspace of
    // all hyperplanes containing it
    let mut map = vec![0usize; src_dual_g.len()];
    for (e, el) in f.source.elements.iter().enumerate() {
        let src_dual_pts = src_dual.dual_subspace_of_primal_points(&el.points);
        let src_id = src_dual_g
            .element_id(&src_dual_pts)
            .ok_or(ChowError::LiftFailed { level: kd, element: e })?;
        let img = &f.target.elements[f.map[e]].points;
        let tgt_dual_pts = tgt_dual.dual_subspace_of_primal_points(img);
        let tgt_id = tgt_dual_g
            .element_id(&tgt_dual_pts)
            .ok_or(ChowError::LiftFailed { level: kd, element: e })?;
        map[src_id] = tgt_id;
    }
    let fdual = GrassmannMap::new(src_dual_g, tgt_dual_g, map)?;
    let mut sub_checks = RecognitionChecks::default();
    let sub = recognize_core(&fdual, &mut sub_checks)?;
    checks.clique_action = sub.checks.clique_action;
    checks
        .diagnostics
        .extend(sub.checks.diagnostics.iter().cloned());
    let Some(wit_dual) = sub.witness else {
        return Ok(unrecognized(std::mem::take(checks)));
    };
    // transport the witness g*: P(src^*) -> P(tgt^*) back to the primal:
    // a point p corresponds to the (n-1)-subspace of the dual consisting of
    // all hyperplanes through p; its image closure corresponds to a point
    // (plain case) or to a hyperplane of the target (dual case).
    if !sub.witness_into_dual {
        let mut wmap = Vec::with_capacity(src_pg.space.n_points);
        for p in 0..src_pg.space.n_points {
            let hp = src_dual
                .dual_subspace_of_primal_points(&BitSet::singleton(src_pg.space.n_points, p));
            let img = wit_dual.image_of_set(&hp);
            let closed = tgt_dual.space.closure(&img);
            let back = tgt_dual.primal_points_of_dual_subspace(&closed);
            if back.count() != 1 {
                checks
                    .diagnostics
                    .push("dual witness does not transport to a point map".into());
                return Ok(unrecognized(std::mem::take(checks)));
            }
            wmap.push(back.first().unwrap());
        }
        let witness = PointMap::new(src_pg.space.clone(), tgt_pg.space.clone(), wmap);
        finish(f, witness, false, None, std::mem::take(checks))
    } else {
        // witness g*: P(src^*) -> P(tgt^**) = P(tgt); the original map is
        // induced by a map into the dual of the target
        let mut wmap = Vec::with_capacity(src_pg.space.n_points);
        for p in 0..src_pg.space.n_points {
            let hp = src_dual
                .dual_subspace_of_primal_points(&BitSet::singleton(src_pg.space.n_points, p));
            let img = wit_dual.image_of_set(&hp);
            let closed = wit_dual.target.closure(&img);
            let hid = (0..tgt_dual.hyper_sets.len()).find(|&h| tgt_dual.hyper_sets[h] == closed);
            match hid {
                Some(h) => wmap.push(h),
                None => {
                    checks
                        .diagnostics
                        .push("dual witness does not transport to a hyperplane map".into());
                    return Ok(unrecognized(std::mem::take(checks)));
                }
            }
        }
        let witness = PointMap::new(src_pg.space.clone(), tgt_dual.space.clone(), wmap);
        finish(f, witness, true, Some(tgt_dual), std::mem::take(checks))
    }
}

fn point_map_from_level0(f: &GrassmannMap) -> PointMap {
    let src_space = f.source.ambient.space().clone();
    let tgt_space = f.target.ambient.space().clone();
    let mut map = vec![0usize; src_space.n_points];
    for (e, el) in f.source.elements.iter().enumerate() {
        let p = el.points.first().expect("level-0 elements are points");
        let q = f.target.elements[f.map[e]].points.first().unwrap();
        map[p] = q;
    }
    PointMap::new(src_space, tgt_space, map)
}

/// Final verification and verdict assignment: lift the witness back to
/// level k, demand exact agreement with the input, classify the witness.
fn finish(
    f: &GrassmannMap,
    witness: PointMap,
    into_dual: bool,
    dual: Option<Arc<DualSpace>>,
    mut checks: RecognitionChecks,
) -> Result<RecognitionResult, ChowError> {
    let reproduced = rederive(f, &witness, into_dual, dual.as_deref())?;
    checks.reconstruction_exact = reproduced;
    if !reproduced {
        checks
            .diagnostics
            .push("witness lift does not reproduce the input map".into());
        return Ok(unrecognized(checks));
    }
    let class = classify_map(&witness);
    checks.witness_class = Some(format!("{:?}", class.kind));
    let verdict = match (class.is_collineation(), class.is_embedding(), into_dual) {
        (true, _, false) => Verdict::CollineationInduced,
        (true, _, true) => Verdict::DualityInduced,
        (false, true, false) => Verdict::StrongEmbeddingInduced,
        (false, true, true) => Verdict::DualStrongEmbeddingInduced,
        _ => {
            checks
                .diagnostics
                .push("witness is not a collineation or embedding".into());
            Verdict::Unrecognized
        }
    };
    Ok(RecognitionResult {
        verdict,
        witness: Some(witness),
        witness_into_dual: into_dual,
        witness_class: Some(class),
        checks,
    })
}

/// Re-derives the full Grassmann map from a witness point map and compares
/// it elementwise with the input.
pub fn rederive(
    f: &GrassmannMap,
    witness: &PointMap,
    into_dual: bool,
    dual: Option<&DualSpace>,
) -> Result<bool, ChowError> {
    for (e, el) in f.source.elements.iter().enumerate() {
        let img = witness.image_of_set(&el.points);
        let closed = witness.target.closure(&img);
        let expect = if into_dual {
            let dual = dual.ok_or(ChowError::NotProjective)?;
            let primal = dual.primal_points_of_dual_subspace(&closed);
            f.target.element_id(&primal)
        } else {
            f.target.element_id(&closed)
        };
        if expect != Some(f.map[e]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Confirms that a strong embedding with a bijective lift at some level is
/// a collineation, by descending bijectivity level by level. Rejects
/// non-projective sources at the precondition.
pub fn bijective_implies_collineation(
    g: &PointMap,
    source: Arc<GrassmannSpace>,
    target: Arc<GrassmannSpace>,
) -> Result<MorphismClass, ChowError> {
    let rep = crate::projspace::verify_projective_axioms(g.source.as_ref());
    if !rep.is_projective() {
        return Err(ChowError::NotProjective);
    }
    let lift = lift_embedding(g, source.clone(), target.clone())?;
    if !lift.injective() || !lift.surjective() {
        return Err(ChowError::NotInjective);
    }
    // descend: the lift at every lower level must be bijective as well
    let mut k = source.k - 1;
    while k >= 0 {
        let s = Arc::new(GrassmannSpace::enumerate(source.ambient.clone(), k)?);
        let t = Arc::new(GrassmannSpace::enumerate(target.ambient.clone(), k)?);
        let lk = lift_embedding(g, s, t)?;
        if !lk.injective() || !lk.surjective() {
            return Err(ChowError::NotInjective);
        }
        k -= 1;
    }
    Ok(classify_map(g))
}

// ---------------------------------------------------------------------------
// the Grassmann (wedge-coordinate) injection
// ---------------------------------------------------------------------------

pub struct PluckerMap {
    pub target: Arc<PgSpace>,
    /// target point id for each source element
    pub map: Vec<usize>,
}

/// Sends each k-subspace with RREF basis rows to the point of wedge
/// coordinates: all (k+1)x(k+1) minors in lexicographic column-subset
/// order.
pub fn plucker(g: &GrassmannSpace) -> Result<PluckerMap, ChowError> {
    let Some(pg) = g.ambient.pg() else {
        return Err(ChowError::NotProjective);
    };
    let f = &pg.field;
    let k1 = (g.k + 1) as usize;
    let wedge_dim = binomial(pg.n + 1, k1);
    let target = build_pg(wedge_dim - 1, f.clone())?;
    let cols = k_subsets(pg.n + 1, k1);
    let mut map = Vec::with_capacity(g.len());
    for e in &g.elements {
        let rows = &e
            .rref
            .as_ref()
            .expect("projective elements carry rrefs")
            .rows;
        let coords: Vec<u8> = cols
            .iter()
            .map(|subset| {
                let minor: Vec<Vec<u8>> = rows
                    .iter()
                    .map(|r| subset.iter().map(|&c| r[c]).collect())
                    .collect();
                crate::linalg::det(f, &minor)
            })
            .collect();
        let id = target
            .point_id(&coords)
            .expect("wedge coordinates of a subspace are nonzero");
        map.push(id);
    }
    Ok(PluckerMap { target, map })
}
