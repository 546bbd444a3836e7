//! Executable counterexamples: concrete geometries and maps, each packaged
//! with machine-checked claims. Every claim runs through the generic
//! classifiers (classify_map, adjacency/base-subset checks); an item ships
//! only if all of its claims pass, and its JSON output is byte-identical
//! across runs.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::baseset;
use crate::bitset::BitSet;
use crate::chow::{self, check_adjacency_preserving, check_base_preserving, FramePolicy, GrassmannMap};
use crate::formats::{geometry_of_pg, geometry_of_space};
use crate::gf::{FieldError, FieldSpec};
use crate::grassmann::{Ambient, GrassmannError, GrassmannSpace};
use crate::linspace::{classify_map, LinearSpace, MorphismKind, PointMap, SpaceError};
use crate::projspace::{build_pg, verify_projective_axioms, PgError, PgSpace};

#[derive(Debug, Error)]
pub enum GalleryError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Pg(#[from] PgError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Grassmann(#[from] GrassmannError),
    #[error(transparent)]
    Chow(#[from] chow::ChowError),
    #[error(transparent)]
    BaseSubset(#[from] baseset::BaseSubsetError),
    #[error("unknown gallery item: {0}")]
    UnknownItem(String),
    #[error("gallery construction failed: {0}")]
    Construction(String),
}

#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

impl Claim {
    fn new(label: &str, pass: bool, detail: impl Into<String>) -> Claim {
        Claim {
            label: label.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Serialize)]
pub struct GalleryItem {
    pub id: String,
    pub construction: serde_json::Value,
    pub claims: Vec<Claim>,
}

impl GalleryItem {
    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }
}

pub const ITEM_IDS: [&str; 6] = [
    "kreuzer-plane",
    "punctured",
    "clique-not-top",
    "one-sided-bijection",
    "brezuleanu-radulescu",
    "base-into-base-not-embedding",
];

pub fn run_item(id: &str, q: u32) -> Result<GalleryItem, GalleryError> {
    match id {
        "kreuzer-plane" => kreuzer_plane(q),
        "punctured" => punctured(q, 0),
        "clique-not-top" => clique_not_top(q),
        "one-sided-bijection" => one_sided_bijection(q),
        "brezuleanu-radulescu" => brezuleanu_radulescu(),
        "base-into-base-not-embedding" => base_into_base_not_embedding(q),
        other => Err(GalleryError::UnknownItem(other.into())),
    }
}

pub fn all_items(q: u32) -> Result<Vec<GalleryItem>, GalleryError> {
    ITEM_IDS.iter().map(|id| run_item(id, q)).collect()
}

fn pg3(q: u32) -> Result<Arc<PgSpace>, GalleryError> {
    Ok(build_pg(3, FieldSpec::for_q(q)?)?)
}

/// PG(3,q) with its first plane promoted to a single line; returns the
/// ambient space and the promoted plane's point set alongside.
pub fn build_kreuzer_space(q: u32) -> Result<(Arc<PgSpace>, LinearSpace, BitSet), GalleryError> {
    let pg = pg3(q)?;
    let plane = &pg.subspaces_of_dim(2)[0];
    let plane_pts = pg.point_set(plane);
    let mut lines: Vec<BitSet> = pg
        .space
        .lines
        .iter()
        .filter(|l| !l.is_subset(&plane_pts))
        .cloned()
        .collect();
    lines.push(plane_pts.clone());
    let space = LinearSpace::new(format!("kreuzer-plane({q})"), pg.space.n_points, lines);
    Ok((pg, space, plane_pts))
}

/// A 3-dimensional projective space with one plane promoted to a single
/// line: a plane satisfying the exchange axiom on which the identity is a
/// semicollineation but not a collineation.
pub fn kreuzer_plane(q: u32) -> Result<GalleryItem, GalleryError> {
    let (pg, kreuzer, plane_pts) = build_kreuzer_space(q)?;
    let n_points = pg.space.n_points;
    let kreuzer = Arc::new(kreuzer);

    let mut claims = Vec::new();
    claims.push(Claim::new(
        "axioms",
        kreuzer.validate().is_ok(),
        "L1/L2 hold",
    ));
    let lines_in_plane = pg
        .space
        .lines
        .iter()
        .filter(|l| l.is_subset(&plane_pts))
        .count();
    let expected_lines = pg.space.lines.len() - lines_in_plane + 1;
    claims.push(Claim::new(
        "line-count",
        kreuzer.lines.len() == expected_lines,
        format!("{} lines = {} - {} + 1", kreuzer.lines.len(), pg.space.lines.len(), lines_in_plane),
    ));
    claims.push(Claim::new(
        "dimension-2",
        kreuzer.dimension() == 2,
        format!("dimension {}", kreuzer.dimension()),
    ));
    let exchange = kreuzer.check_exchange(100_000)?;
    claims.push(Claim::new(
        "exchange-axiom",
        exchange.is_none(),
        "no counterexample over the subspace lattice",
    ));
    let identity = PointMap::new(
        pg.space.clone(),
        kreuzer.clone(),
        (0..n_points).collect(),
    );
    let class = classify_map(&identity);
    claims.push(Claim::new(
        "identity-semicollineation-not-collineation",
        class.kind == MorphismKind::Semicollineation,
        format!("identity classifies as {:?}", class.kind),
    ));

    Ok(GalleryItem {
        id: "kreuzer-plane".into(),
        construction: serde_json::json!({
            "base_geometry": geometry_of_pg(&pg),
            "geometry": geometry_of_space(&kreuzer),
            "promoted_plane": plane_pts.to_vec(),
        }),
        claims,
    })
}

/// The restriction of a 3-dimensional projective space to the complement
/// of one point: the exchange axiom survives, two lines through the deleted
/// point become disjoint coplanar lines, and subspaces are exactly the
/// traces of ambient subspaces.
pub fn punctured(q: u32, deleted: usize) -> Result<GalleryItem, GalleryError> {
    let pg = pg3(q)?;
    let mut x = pg.space.all_points();
    x.remove(deleted);
    let (punct, kept) = pg.space.restrict(&x)?;
    let punct = Arc::new(punct);

    let mut claims = Vec::new();
    claims.push(Claim::new("axioms", punct.validate().is_ok(), "L1/L2 hold"));
    let exchange = punct.check_exchange(100_000)?;
    claims.push(Claim::new(
        "exchange-axiom",
        exchange.is_none(),
        "no counterexample over the subspace lattice",
    ));
    // two lines through the deleted point become disjoint but coplanar
    let through: Vec<usize> = (0..pg.space.lines.len())
        .filter(|&li| pg.space.lines[li].contains(deleted))
        .collect();
    let back: std::collections::HashMap<usize, usize> =
        kept.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let trace = |li: usize| -> BitSet {
        BitSet::from_iter(
            kept.len(),
            pg.space.lines[li]
                .iter()
                .filter(|p| *p != deleted)
                .map(|p| back[&p]),
        )
    };
    let (t1, t2) = (trace(through[0]), trace(through[1]));
    let disjoint = !t1.intersects(&t2);
    let span = punct.closure(&t1.or(&t2));
    let coplanar = punct.subspace_dim(&span) == 2;
    claims.push(Claim::new(
        "disjoint-coplanar-lines",
        disjoint && coplanar,
        format!(
            "traces of two lines through the deleted point: disjoint={disjoint}, span dim {}",
            punct.subspace_dim(&span)
        ),
    ));
    let rep = verify_projective_axioms(&punct);
    claims.push(Claim::new(
        "p1-fails",
        !rep.p1_ok && rep.p1_witness.is_some(),
        "a plane contains two non-intersecting lines",
    ));
    // subspaces of the restriction are exactly the traces S or S - {deleted}
    let ambient_subs = pg.space.all_subspaces(10_000)?;
    let punct_subs: std::collections::HashSet<BitSet> =
        punct.all_subspaces(10_000)?.into_iter().collect();
    let mut traces_are_subspaces = true;
    let mut trace_set = std::collections::HashSet::new();
    for s in &ambient_subs {
        let tr = BitSet::from_iter(
            kept.len(),
            s.iter().filter(|p| *p != deleted).map(|p| back[&p]),
        );
        if !punct_subs.contains(&tr) {
            traces_are_subspaces = false;
        }
        trace_set.insert(tr);
    }
    let all_subspaces_are_traces = punct_subs.iter().all(|s| trace_set.contains(s));
    claims.push(Claim::new(
        "subspaces-are-traces",
        traces_are_subspaces && all_subspaces_are_traces,
        format!(
            "{} ambient subspaces trace onto {} restricted subspaces",
            ambient_subs.len(),
            punct_subs.len()
        ),
    ));

    Ok(GalleryItem {
        id: "punctured".into(),
        construction: serde_json::json!({
            "base_geometry": geometry_of_pg(&pg),
            "deleted_point": deleted,
            "geometry": geometry_of_space(&punct),
            "kept": kept,
        }),
        claims,
    })
}

/// In the line Grassmannian of the punctured space, a maximal set of
/// mutually adjacent lines that is a proper subset of the lines of a plane.
pub fn clique_not_top(q: u32) -> Result<GalleryItem, GalleryError> {
    let pg = pg3(q)?;
    let deleted = 0usize;
    let mut x = pg.space.all_points();
    x.remove(deleted);
    let (punct, kept) = pg.space.restrict(&x)?;
    let punct = Arc::new(punct);
    let back: std::collections::HashMap<usize, usize> =
        kept.iter().enumerate().map(|(i, &p)| (p, i)).collect();

    // a plane through the deleted point, and two lines through it inside
    let plane = pg
        .subspaces_of_dim(2)
        .into_iter()
        .find(|s| {
            let pts = pg.point_set(s);
            pts.contains(deleted)
        })
        .ok_or_else(|| GalleryError::Construction("no plane through the point".into()))?;
    let plane_pts = pg.point_set(&plane);
    let s_trace = BitSet::from_iter(
        kept.len(),
        plane_pts
            .iter()
            .filter(|p| *p != deleted)
            .map(|p| back[&p]),
    );
    let inner_lines: Vec<usize> = (0..pg.space.lines.len())
        .filter(|&li| {
            pg.space.lines[li].contains(deleted) && pg.space.lines[li].is_subset(&plane_pts)
        })
        .collect();
    let trace = |li: usize| -> BitSet {
        BitSet::from_iter(
            kept.len(),
            pg.space.lines[li]
                .iter()
                .filter(|p| *p != deleted)
                .map(|p| back[&p]),
        )
    };
    let l_trace = trace(inner_lines[0]);
    let l2_trace = trace(inner_lines[1]);

    let g = GrassmannSpace::enumerate(Arc::new(Ambient::Abstract(punct.clone())), 1)?;
    let l_id = g
        .element_id(&l_trace)
        .ok_or_else(|| GalleryError::Construction("trace is not a line".into()))?;
    let l2_id = g.element_id(&l2_trace).unwrap();
    let lpts = l_trace.to_vec();
    let (p1, p2) = (lpts[0], lpts[1]);
    let qpt = s_trace
        .iter()
        .find(|p| !l_trace.contains(*p))
        .ok_or_else(|| GalleryError::Construction("plane equals the line".into()))?;
    let line_p1q = punct.lines[punct.line_index(p1, qpt).unwrap()].clone();
    let line_p2q = punct.lines[punct.line_index(p2, qpt).unwrap()].clone();
    let t1 = g.element_id(&line_p1q).unwrap();
    let t2 = g.element_id(&line_p2q).unwrap();

    let mut claims = Vec::new();
    let triple = [l_id, t1, t2];
    let pairwise = triple
        .iter()
        .enumerate()
        .all(|(a, &i)| triple[a + 1..].iter().all(|&j| g.adjacent(i, j)));
    claims.push(Claim::new(
        "starting-triple-adjacent",
        pairwise,
        format!("elements {triple:?} are mutually adjacent"),
    ));

    // greedy extension to a maximal clique
    let mut clique: Vec<usize> = triple.to_vec();
    loop {
        let next = (0..g.len())
            .find(|&e| !clique.contains(&e) && clique.iter().all(|&c| g.adjacent(e, c)));
        match next {
            Some(e) => clique.push(e),
            None => break,
        }
    }
    let top_members: Vec<usize> = (0..g.len())
        .filter(|&e| g.elements[e].points.is_subset(&s_trace))
        .collect();
    let inside_top = clique.iter().all(|e| top_members.contains(e));
    let proper = clique.len() < top_members.len();
    let maximal = (0..g.len())
        .all(|e| clique.contains(&e) || clique.iter().any(|&c| !g.adjacent(e, c)));
    claims.push(Claim::new(
        "maximal-clique-proper-in-top",
        inside_top && proper && maximal,
        format!(
            "clique of {} lines inside the {}-line plane family",
            clique.len(),
            top_members.len()
        ),
    ));
    claims.push(Claim::new(
        "excluded-partner-non-adjacent",
        top_members.contains(&l2_id) && !g.adjacent(l_id, l2_id),
        "the second punctured line lies in the plane family but is not adjacent",
    ));

    Ok(GalleryItem {
        id: "clique-not-top".into(),
        construction: serde_json::json!({
            "geometry": geometry_of_space(&punct),
            "plane_trace": s_trace.to_vec(),
            "clique": clique,
            "top_members": top_members,
        }),
        claims,
    })
}

/// The trace bijection between the lines of the punctured space and the
/// lines of the ambient space: adjacency preserving forward but not
/// backward, base-subset preserving forward but not backward.
pub fn one_sided_bijection(q: u32) -> Result<GalleryItem, GalleryError> {
    let pg = pg3(q)?;
    let deleted = 0usize;
    let mut x = pg.space.all_points();
    x.remove(deleted);
    let (punct, kept) = pg.space.restrict(&x)?;
    let punct = Arc::new(punct);

    let src = Arc::new(GrassmannSpace::enumerate(
        Arc::new(Ambient::Abstract(punct.clone())),
        1,
    )?);
    let tgt = Arc::new(GrassmannSpace::enumerate(
        Arc::new(Ambient::Pg(pg.clone())),
        1,
    )?);
    // each punctured line is the trace of a unique ambient line: recover it
    // as the closure of the original points
    let map: Vec<usize> = src
        .elements
        .iter()
        .map(|e| {
            let orig = BitSet::from_iter(
                pg.space.n_points,
                e.points.iter().map(|p| kept[p]),
            );
            let full = pg.space.closure(&orig);
            tgt.element_id(&full).expect("trace lifts to a line")
        })
        .collect();
    let f = GrassmannMap::new(src.clone(), tgt.clone(), map)?;

    let mut claims = Vec::new();
    claims.push(Claim::new(
        "bijective",
        f.injective() && f.surjective(),
        format!("{} lines onto {} lines", src.len(), tgt.len()),
    ));
    let adj = check_adjacency_preserving(&f);
    claims.push(Claim::new(
        "adjacency-forward-only",
        adj.forward && !adj.backward,
        format!("forward {} backward {}", adj.forward, adj.backward),
    ));
    // a concrete witness pair: adjacent images, non-adjacent sources
    let mut witness = None;
    'outer: for i in 0..src.len() {
        for j in i + 1..src.len() {
            if !src.adjacent(i, j) && tgt.adjacent(f.map[i], f.map[j]) {
                witness = Some((i, j));
                break 'outer;
            }
        }
    }
    claims.push(Claim::new(
        "backward-witness",
        witness.is_some(),
        format!("source pair {witness:?} is non-adjacent with adjacent images"),
    ));
    let fwd = check_base_preserving(&f, FramePolicy::All, 0)?;
    claims.push(Claim::new(
        "base-subsets-preserved",
        fwd.ok,
        format!("all {} frames of the punctured space", fwd.frames_tested),
    ));
    let mut inv = vec![0usize; tgt.len()];
    for (i, &v) in f.map.iter().enumerate() {
        inv[v] = i;
    }
    let finv = GrassmannMap::new(tgt.clone(), src.clone(), inv)?;
    let bwd = check_base_preserving(&finv, FramePolicy::All, 0)?;
    claims.push(Claim::new(
        "inverse-base-subsets-fail",
        !bwd.ok && bwd.witness_frame.is_some(),
        format!("witness frame {:?}", bwd.witness_frame.clone().unwrap_or_default()),
    ));

    Ok(GalleryItem {
        id: "one-sided-bijection".into(),
        construction: serde_json::json!({
            "source_geometry": geometry_of_space(&punct),
            "target_geometry": geometry_of_pg(&pg),
            "k": 1,
            "map": f.map,
        }),
        claims,
    })
}

/// The subfield embedding of a 3-dimensional space over GF(2) into a plane
/// over GF(16): injective, collinearity and non-collinearity preserving,
/// but not strong — a base of the source maps to a dependent set.
pub fn brezuleanu_radulescu() -> Result<GalleryItem, GalleryError> {
    let f2 = FieldSpec::for_q(2)?;
    let f16 = FieldSpec::for_q(16)?;
    // b1, b2, b3 = w, w^2, w^3 with w the class of x mod x^4+x+1
    let b = [2u8, 4u8, 8u8];
    // 1, b1, b2, b3 must be independent over the prime subfield: all 16
    // GF(2)-combinations are distinct
    let mut seen = std::collections::HashSet::new();
    let basis = [1u8, b[0], b[1], b[2]];
    for mask in 0u8..16 {
        let mut acc = 0u8;
        for (bit, &el) in basis.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                acc = f16.add_v(acc, el);
            }
        }
        seen.insert(acc);
    }
    let independent = seen.len() == 16;

    let src = build_pg(3, f2)?;
    let tgt = build_pg(2, f16.clone())?;
    let map: Vec<usize> = src
        .points
        .iter()
        .map(|a| {
            let img = vec![
                f16.add_v(a[0], f16.mul_v(a[3], b[0])),
                f16.add_v(a[1], f16.mul_v(a[3], b[1])),
                f16.add_v(a[2], f16.mul_v(a[3], b[2])),
            ];
            tgt.point_id(&img).expect("image of a nonzero vector is nonzero")
        })
        .collect();
    let pm = PointMap::new(src.space.clone(), tgt.space.clone(), map);
    let class = classify_map(&pm);

    let mut claims = Vec::new();
    claims.push(Claim::new(
        "subfield-elements-independent",
        independent,
        "1, w, w^2, w^3 span 16 distinct GF(2)-combinations",
    ));
    claims.push(Claim::new(
        "injective",
        class.flags.injective,
        "15 distinct image points",
    ));
    claims.push(Claim::new(
        "embedding",
        class.kind == MorphismKind::Embedding
            && class.flags.collinearity_preserving
            && class.flags.non_collinearity_preserving,
        format!("classifies as {:?}", class.kind),
    ));
    claims.push(Claim::new(
        "not-strong",
        !class.flags.independence_preserving,
        "some independent set maps to a dependent set",
    ));
    // exhibit it on the standard frame
    let frame: Vec<usize> = (0..4)
        .map(|i| {
            let mut e = vec![0u8; 4];
            e[i] = 1;
            src.point_id(&e).unwrap()
        })
        .collect();
    let frame_set = BitSet::from_iter(src.space.n_points, frame.iter().copied());
    let image = pm.image_of_set(&frame_set);
    claims.push(Claim::new(
        "base-image-dependent",
        src.space.is_independent(&frame_set) && !tgt.space.is_independent(&image),
        format!("frame {:?} maps into a plane", frame),
    ));

    Ok(GalleryItem {
        id: "brezuleanu-radulescu".into(),
        construction: serde_json::json!({
            "source_geometry": geometry_of_pg(&src),
            "target_label": tgt.space.label,
            "target_points": tgt.space.n_points,
            "b": b,
            "point_map": pm.map,
        }),
        claims,
    })
}

/// An injection of the lines of a plane inside a 4-dimensional space into
/// the lines of the whole space that sends base subsets into (subsets of)
/// base subsets yet is induced by no embedding: one line of the plane is
/// rerouted to a complementary line.
pub fn base_into_base_not_embedding(q: u32) -> Result<GalleryItem, GalleryError> {
    let pg = build_pg(4, FieldSpec::for_q(q)?)?;
    // S = span(e1,e2,e3): coordinates with the last two entries zero
    let s_rows = vec![
        vec![1, 0, 0, 0, 0],
        vec![0, 1, 0, 0, 0],
        vec![0, 0, 1, 0, 0],
    ];
    let s = crate::projspace::SubRref::from_rows(&pg.field, &s_rows);
    let s_pts = pg.point_set(&s);
    // L = span(e4,e5): a complement of S
    let l_rows = vec![vec![0, 0, 0, 1, 0], vec![0, 0, 0, 0, 1]];
    let l = crate::projspace::SubRref::from_rows(&pg.field, &l_rows);
    let l_pts = pg.point_set(&l);

    let (plane, kept) = pg.space.restrict(&s_pts)?;
    let plane = Arc::new(plane);
    let src = Arc::new(GrassmannSpace::enumerate(
        Arc::new(Ambient::Abstract(plane.clone())),
        1,
    )?);
    let tgt = Arc::new(GrassmannSpace::enumerate(
        Arc::new(Ambient::Pg(pg.clone())),
        1,
    )?);
    let l_id = tgt.element_id(&l_pts).unwrap();
    // L' = the first line of the plane
    let lprime_src = 0usize;
    let map: Vec<usize> = (0..src.len())
        .map(|e| {
            if e == lprime_src {
                l_id
            } else {
                let orig = BitSet::from_iter(
                    pg.space.n_points,
                    src.elements[e].points.iter().map(|p| kept[p]),
                );
                tgt.element_id(&pg.space.closure(&orig)).unwrap()
            }
        })
        .collect();
    let f = GrassmannMap::new(src.clone(), tgt.clone(), map)?;

    let mut claims = Vec::new();
    claims.push(Claim::new("injective", f.injective(), "no two lines collide"));

    // every base subset of the plane maps into a base subset of the big
    // space: extend the plane frame by two points of L
    let l_two: Vec<usize> = l_pts.iter().take(2).collect();
    let plane_frames = plane.all_bases(16)?;
    let mut into_base_subsets = true;
    let mut frames_checked = 0usize;
    for frame in &plane_frames {
        frames_checked += 1;
        let mut big_frame: Vec<usize> = frame.iter().map(|p| kept[p]).collect();
        big_frame.extend(l_two.iter().copied());
        let Ok(bs) = baseset::base_subset(&tgt, &big_frame) else {
            into_base_subsets = false;
            break;
        };
        let b = baseset::base_subset(&src, &frame.to_vec())?;
        let image = BitSet::from_iter(tgt.len(), b.member_set.iter().map(|e| f.map[e]));
        if !image.is_subset(&bs.member_set) || !bs.member_set.contains(l_id) {
            into_base_subsets = false;
            break;
        }
    }
    claims.push(Claim::new(
        "base-subsets-into-base-subsets",
        into_base_subsets,
        format!("{frames_checked} plane frames, each extended by two points of the complement line"),
    ));

    // no point map induces f: candidates for g(x) are cut down by the
    // images of the lines through x, then searched exhaustively
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(plane.n_points);
    for x in 0..plane.n_points {
        let mut acc = pg.space.all_points();
        for (li, line) in plane.lines.iter().enumerate() {
            if line.contains(x) {
                let e = src.element_id(&plane.lines[li]).unwrap();
                acc.and_assign(&tgt.elements[f.map[e]].points);
            }
        }
        candidates.push(acc.to_vec());
    }
    let not_inducible = !exists_inducing_map(&plane, &src, &tgt, &f, &candidates);
    claims.push(Claim::new(
        "not-induced-by-embedding",
        not_inducible,
        "exhaustive search over candidate point maps finds none",
    ));

    Ok(GalleryItem {
        id: "base-into-base-not-embedding".into(),
        construction: serde_json::json!({
            "target_geometry": geometry_of_pg(&pg),
            "plane_points": s_pts.to_vec(),
            "complement_line": l_pts.to_vec(),
            "rerouted_line": lprime_src,
            "k": 1,
            "map": f.map,
        }),
        claims,
    })
}

/// DFS over candidate point images; a map g induces f when the closure of
/// g(line) equals f(line) for every line.
fn exists_inducing_map(
    plane: &Arc<LinearSpace>,
    src: &Arc<GrassmannSpace>,
    tgt: &Arc<GrassmannSpace>,
    f: &GrassmannMap,
    candidates: &[Vec<usize>],
) -> bool {
    fn rec(
        plane: &LinearSpace,
        src: &GrassmannSpace,
        tgt: &GrassmannSpace,
        f: &GrassmannMap,
        candidates: &[Vec<usize>],
        assign: &mut Vec<usize>,
    ) -> bool {
        let x = assign.len();
        if x == plane.n_points {
            // full assignment: verify every line lifts onto its image
            return (0..src.len()).all(|e| {
                let img = BitSet::from_iter(
                    tgt.ambient.space().n_points,
                    src.elements[e].points.iter().map(|p| assign[p]),
                );
                let closed = tgt.ambient.space().closure(&img);
                tgt.element_id(&closed) == Some(f.map[e])
            });
        }
        for &cand in &candidates[x] {
            if assign.contains(&cand) {
                continue;
            }
            assign.push(cand);
            if rec(plane, src, tgt, f, candidates, assign) {
                return true;
            }
            assign.pop();
        }
        false
    }
    let mut assign = Vec::new();
    rec(plane, src, tgt, f, candidates, &mut assign)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kreuzer_item_passes() {
        let item = kreuzer_plane(2).unwrap();
        assert!(item.all_pass(), "{:?}", item.claims);
        // q=2 instance: 35 - 7 + 1 = 29 lines
        assert!(item.claims.iter().any(|c| c.detail.contains("29 lines")));
    }

    #[test]
    fn punctured_item_passes() {
        let item = punctured(2, 0).unwrap();
        assert!(item.all_pass(), "{:?}", item.claims);
    }

    #[test]
    fn clique_not_top_item_passes() {
        let item = clique_not_top(2).unwrap();
        assert!(item.all_pass(), "{:?}", item.claims);
    }

    #[test]
    fn one_sided_bijection_item_passes() {
        let item = one_sided_bijection(2).unwrap();
        assert!(item.all_pass(), "{:?}", item.claims);
    }

    #[test]
    fn brezuleanu_radulescu_item_passes() {
        let item = brezuleanu_radulescu().unwrap();
        assert!(item.all_pass(), "{:?}", item.claims);
    }

    #[test]
    fn base_into_base_item_passes() {
        let item = base_into_base_not_embedding(2).unwrap();
        assert!(item.all_pass(), "{:?}", item.claims);
    }

    #[test]
    fn items_are_deterministic() {
        for id in ["kreuzer-plane", "punctured"] {
            let a = serde_json::to_string(&run_item(id, 2).unwrap()).unwrap();
            let b = serde_json::to_string(&run_item(id, 2).unwrap()).unwrap();
            assert_eq!(a, b);
        }
    }
}
