//! Checkerboard graphs of special diagrams.
//!
//! In a special diagram every Seifert circle bounds a disk free of other
//! circles, and that disk is a single face. Coloring those faces black and
//! the rest white gives a proper checkerboard coloring. The black graph (one
//! vertex per disk, one edge per crossing) coincides with the band graph of
//! the Seifert surface; the white graph valences decide fiberedness, and the
//! reduced black graph of a fibered special diagram is a tree whose
//! multi-edges are the torus summands.

use crate::diagram::{Diagram, FaceId, Sign, UnionFind};
use crate::error::{Error, Result};
use crate::seifert::{channel_corners, hug_corners, SeifertData};

#[derive(Debug, Clone)]
pub struct Checkerboard {
    /// The black disk face of each Seifert circle.
    pub black_of_circle: Vec<FaceId>,
    pub is_black: Vec<bool>,
}

pub fn checkerboard(d: &Diagram, s: &SeifertData) -> Result<Checkerboard> {
    let nested = s.nested_circles();
    if !nested.is_empty() {
        return Err(Error::NotSpecial { nested });
    }
    let mut is_black = vec![false; d.face_count()];
    if d.crossing_count() == 0 {
        is_black[1] = true;
        return Ok(Checkerboard { black_of_circle: vec![1], is_black });
    }

    let mut faces_of_region: Vec<Vec<FaceId>> = vec![Vec::new(); s.region_count()];
    for f in 0..d.face_count() {
        faces_of_region[s.region_of_face(f)].push(f);
    }

    let mut disk_region = vec![usize::MAX; s.circle_count()];
    let mut black_of_circle = Vec::with_capacity(s.circle_count());
    for c in 0..s.circle_count() {
        let census = s.side_census(c);
        let (l, r) = s.circle_sides(c);
        let region = if census.left_circles.is_empty() {
            assert!(census.left_crossings.is_empty(), "a circle-free side carries no bands");
            l
        } else {
            assert!(census.right_circles.is_empty(), "diagram is special");
            assert!(census.right_crossings.is_empty());
            r
        };
        let faces = &faces_of_region[region];
        assert_eq!(faces.len(), 1, "a band-free region is a single face");
        disk_region[c] = region;
        black_of_circle.push(faces[0]);
        is_black[faces[0]] = true;
    }

    // Proper coloring: each arc separates black from white.
    for arc in 0..d.arc_count() {
        let (lf, rf) = d.arc_sides(arc);
        if is_black[lf] == is_black[rf] {
            return Err(Error::ImproperColoring { a: lf, b: rf });
        }
    }

    // The black faces at a crossing are the disks hugged by its two strands,
    // so the black graph built from corners is the band graph.
    for (x, cr) in d.crossings().iter().enumerate() {
        let (h1, h2) = hug_corners(cr.sign);
        for h in [h1, h2] {
            let circle = s.circle_of_arc(cr.arcs[h as usize]);
            debug_assert_eq!(
                s.region_of_face(d.corner_face(x, h)),
                disk_region[circle],
                "hug corner opens into the hugging circle's disk"
            );
        }
    }

    Ok(Checkerboard { black_of_circle, is_black })
}

/// Valences of the white graph, one entry per white face, ascending. Each
/// crossing contributes its two channel corners.
pub fn white_valences(d: &Diagram, cb: &Checkerboard) -> Vec<usize> {
    let mut valence: std::collections::BTreeMap<FaceId, usize> = Default::default();
    for f in 0..d.face_count() {
        if !cb.is_black[f] {
            valence.insert(f, 0);
        }
    }
    for (x, cr) in d.crossings().iter().enumerate() {
        let (k1, k2) = channel_corners(cr.sign);
        for k in [k1, k2] {
            let f = d.corner_face(x, k);
            *valence.get_mut(&f).expect("channel corners open into white faces") += 1;
        }
    }
    let mut out: Vec<usize> = valence.into_values().collect();
    out.sort_unstable();
    out
}

#[derive(Debug, Clone)]
pub struct ReducedEdge {
    pub circles: (usize, usize),
    pub multiplicity: usize,
    pub signs: Vec<Sign>,
}

/// Edges of the reduced black graph: one per parallel band group, with the
/// group's multiplicity and crossing signs.
pub fn reduced_black_graph(d: &Diagram, s: &SeifertData) -> Vec<ReducedEdge> {
    s.parallel_groups()
        .into_iter()
        .map(|g| ReducedEdge {
            circles: g.circles,
            multiplicity: g.crossings.len(),
            signs: g.crossings.iter().map(|&x| d.crossings()[x].sign).collect(),
        })
        .collect()
}

/// Whether the reduced black graph is a tree on the Seifert circles.
pub fn reduced_black_is_tree(s: &SeifertData) -> bool {
    let mut uf = UnionFind::new(s.circle_count());
    for g in s.parallel_groups() {
        if !uf.union(g.circles.0, g.circles.1) {
            return false;
        }
    }
    uf.count() == 1
}

#[derive(Debug, Clone)]
pub struct SpecialGraphReport {
    pub black: usize,
    pub white_valences: Vec<usize>,
    pub fibered: bool,
    pub edges: Vec<ReducedEdge>,
    pub tree: bool,
}

/// Checkerboard analysis of a special diagram. Errors on nested circles or a
/// coloring failure.
pub fn special_graph_report(d: &Diagram) -> Result<SpecialGraphReport> {
    let s = SeifertData::new(d)?;
    let cb = checkerboard(d, &s)?;
    let white = white_valences(d, &cb);
    let off = white.iter().filter(|&&v| v != 2).count();
    Ok(SpecialGraphReport {
        black: s.circle_count(),
        white_valences: white,
        fibered: off <= 1,
        edges: reduced_black_graph(d, &s),
        tree: reduced_black_is_tree(&s),
    })
}

/// A special diagram is a fiber surface diagram exactly when all but at most
/// one white vertex have valence two.
pub fn is_fibered_special(d: &Diagram) -> Result<bool> {
    Ok(special_graph_report(d)?.fibered)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusSummand {
    pub k: usize,
    pub sign: Sign,
}

/// Decomposes a fibered special diagram as a connected sum of (k, 2) torus
/// links, one summand per reduced black edge. The empty product is the
/// unknot.
pub fn torus_sum_decomposition(d: &Diagram) -> Result<Vec<TorusSummand>> {
    let s = SeifertData::new(d)?;
    let cb = checkerboard(d, &s)?;
    let white = white_valences(d, &cb);
    let off = white.iter().filter(|&&v| v != 2).count();
    if off > 1 {
        return Err(Error::PreconditionFailed {
            details: format!("not a fibered special diagram: white valences {white:?}"),
        });
    }
    if !reduced_black_is_tree(&s) {
        return Err(Error::PreconditionFailed {
            details: "reduced black graph is not a tree".into(),
        });
    }
    let mut out = Vec::new();
    for g in s.parallel_groups() {
        let signs: std::collections::BTreeSet<i64> =
            g.crossings.iter().map(|&x| d.crossings()[x].sign.value()).collect();
        if signs.len() > 1 {
            return Err(Error::MixedSignGroup { u: g.circles.0, v: g.circles.1 });
        }
        out.push(TorusSummand { k: g.crossings.len(), sign: d.crossings()[g.crossings[0]].sign });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::MapBuilder;
    use crate::catalog::{bundled, connect_sum, rational_cf, torus_two_strand};
    use crate::seifert::murasugi_decompose;

    const TREFOIL: &str = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";
    const FIGURE_EIGHT: &str = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]";

    #[test]
    fn trefoil_checkerboard_and_summand() {
        let d = Diagram::parse(TREFOIL).unwrap();
        let report = special_graph_report(&d).unwrap();
        assert_eq!(report.black, 2);
        assert_eq!(report.white_valences, vec![2, 2, 2]);
        assert!(report.fibered);
        assert!(report.tree);
        assert_eq!(report.edges.len(), 1);
        assert_eq!(report.edges[0].multiplicity, 3);
        let summands = torus_sum_decomposition(&d).unwrap();
        assert_eq!(summands, vec![TorusSummand { k: 3, sign: Sign::Negative }]);
    }

    #[test]
    fn unknot_is_fibered_with_empty_sum() {
        let d = Diagram::unknot();
        let report = special_graph_report(&d).unwrap();
        assert_eq!(report.black, 1);
        assert_eq!(report.white_valences, vec![0]);
        assert!(report.fibered);
        assert_eq!(torus_sum_decomposition(&d).unwrap(), Vec::new());
    }

    #[test]
    fn nested_diagram_is_rejected() {
        let d = Diagram::parse(FIGURE_EIGHT).unwrap();
        let e = special_graph_report(&d).unwrap_err();
        assert!(matches!(e, Error::NotSpecial { .. }));
    }

    #[test]
    fn figure_eight_pieces_are_fibered_hopf_bands() {
        let d = Diagram::parse(FIGURE_EIGHT).unwrap();
        let pieces = murasugi_decompose(&d).unwrap();
        assert_eq!(pieces.len(), 2);
        let mut summands = Vec::new();
        for p in &pieces {
            assert!(is_fibered_special(p).unwrap());
            summands.extend(torus_sum_decomposition(p).unwrap());
        }
        summands.sort_by_key(|t| t.sign.value());
        assert_eq!(
            summands,
            vec![
                TorusSummand { k: 2, sign: Sign::Negative },
                TorusSummand { k: 2, sign: Sign::Positive }
            ]
        );
    }

    #[test]
    fn twist_knot_five_two_is_not_fibered() {
        let d = rational_cf(&[3, 2]).unwrap();
        let report = special_graph_report(&d).unwrap();
        assert!(!report.fibered);
        assert_eq!(report.white_valences.iter().sum::<usize>(), 2 * d.crossing_count());
        let e = torus_sum_decomposition(&d).unwrap_err();
        assert!(matches!(e, Error::PreconditionFailed { .. }));
    }

    #[test]
    fn granny_and_square_sums() {
        let t = rational_cf(&[3]).unwrap();
        let granny = connect_sum(&t, &t).unwrap();
        let summands = torus_sum_decomposition(&granny).unwrap();
        let ks: Vec<usize> = summands.iter().map(|s| s.k).collect();
        assert_eq!(ks, vec![3, 3]);
        assert_eq!(summands[0].sign, summands[1].sign);

        // The mirrored splice lands on the other circle, so the square knot
        // diagram is a genuine Murasugi sum; decompose first.
        let square = connect_sum(&t, &t.mirror()).unwrap();
        let mut summands = Vec::new();
        for p in murasugi_decompose(&square).unwrap() {
            summands.extend(torus_sum_decomposition(&p).unwrap());
        }
        let mut shapes: Vec<(usize, i64)> = summands.iter().map(|s| (s.k, s.sign.value())).collect();
        shapes.sort_unstable();
        assert_eq!(shapes, vec![(3, -1), (3, 1)]);
    }

    #[test]
    fn torus_link_decomposes_to_itself() {
        let d = torus_two_strand(4, Sign::Negative);
        assert_eq!(
            torus_sum_decomposition(&d).unwrap(),
            vec![TorusSummand { k: 4, sign: Sign::Negative }]
        );
    }

    #[test]
    fn mixed_sign_clasp_is_rejected() {
        // A Reidemeister-II pair: one strand pokes under the other and back,
        // so the two crossings have opposite signs and form one band group.
        let mut mb = MapBuilder::new();
        let (x0, x1) = (mb.add_crossing(), mb.add_crossing());
        mb.connect((x0, 2), (x1, 0));
        mb.connect((x1, 2), (x0, 0));
        mb.connect((x1, 1), (x0, 1));
        mb.connect((x0, 3), (x1, 3));
        let pd = mb.emit(&[(x0, 0), (x0, 1)]).unwrap();
        let d = Diagram::from_pd(&pd).unwrap();
        assert_eq!(d.mu(), 2);
        let signs = d.signs();
        assert_ne!(signs[0], signs[1]);
        let e = torus_sum_decomposition(&d).unwrap_err();
        assert!(matches!(e, Error::MixedSignGroup { .. }));
    }

    #[test]
    fn pretzel_star_is_not_a_fibered_special_diagram() {
        let knots = bundled();
        let p333 = knots.iter().find(|b| b.name == "p3_3_3").unwrap();
        let s = SeifertData::new(&p333.diagram).unwrap();
        assert!(s.is_special());
        let e = torus_sum_decomposition(&p333.diagram).unwrap_err();
        assert!(matches!(e, Error::PreconditionFailed { .. }));
    }

    #[test]
    fn every_special_bundled_diagram_colors_properly() {
        for b in bundled() {
            let s = SeifertData::new(&b.diagram).unwrap();
            if !s.is_special() {
                continue;
            }
            let cb = checkerboard(&b.diagram, &s).expect(&b.name);
            let blacks = cb.is_black.iter().filter(|&&x| x).count();
            assert_eq!(blacks, s.circle_count(), "{}", b.name);
            let white = white_valences(&b.diagram, &cb);
            assert_eq!(white.len(), b.diagram.face_count() - blacks, "{}", b.name);
        }
    }

    #[test]
    fn decomposition_pieces_stay_special_over_corpus() {
        for b in bundled() {
            let pieces = murasugi_decompose(&b.diagram).expect(&b.name);
            for p in &pieces {
                let sp = SeifertData::new(p).expect(&b.name);
                assert!(sp.is_special(), "{}", b.name);
                checkerboard(p, &sp).expect(&b.name);
            }
        }
    }
}
