//! Seifert's algorithm on a diagram: circles, bands, the complementary
//! region tree, nestedness, parallel band groups, and Murasugi desumming.
//!
//! Smoothing every crossing coherently with the strand orientations turns the
//! diagram into a disjoint union of embedded circles; each crossing leaves a
//! half-twisted band joining two of them. The circles cut the sphere into
//! `s + 1` regions whose adjacency structure is a tree with one edge per
//! circle. Everything in this module is bookkeeping on that tree.

use crate::builder::smooth_crossings;
use crate::diagram::{CrossingId, Diagram, FaceId, Sign, UnionFind};
use crate::error::{Error, Result};
use std::collections::BTreeSet;

pub type CircleId = usize;
pub type RegionId = usize;

#[derive(Debug, Clone)]
pub struct Band {
    pub crossing: CrossingId,
    /// The two circles the band joins (always distinct).
    pub circles: (CircleId, CircleId),
    /// Region the band's channel lies in.
    pub region: RegionId,
}

#[derive(Debug, Clone)]
pub struct SeifertData {
    circle_of_arc: Vec<CircleId>,
    circles: Vec<Vec<usize>>,
    bands: Vec<Band>,
    region_of_face: Vec<RegionId>,
    region_count: usize,
    /// Circle -> (region on its left, region on its right).
    circle_sides: Vec<(RegionId, RegionId)>,
}

/// Corners of the crossing hugged by the two smoothed strands: the strand
/// through slots (0,1) or (0,3), then the strand through slots (2,3) or (1,2).
pub fn hug_corners(sign: Sign) -> (u8, u8) {
    match sign {
        Sign::Positive => (0, 2),
        Sign::Negative => (3, 1),
    }
}

/// Corners connected by the channel between the two smoothed strands.
pub fn channel_corners(sign: Sign) -> (u8, u8) {
    match sign {
        Sign::Positive => (1, 3),
        Sign::Negative => (0, 2),
    }
}

impl SeifertData {
    pub fn new(d: &Diagram) -> Result<SeifertData> {
        if d.crossing_count() == 0 {
            // Zero-crossing unknot: one circle, two regions.
            return Ok(SeifertData {
                circle_of_arc: Vec::new(),
                circles: vec![Vec::new()],
                bands: Vec::new(),
                region_of_face: vec![0, 1],
                region_count: 2,
                circle_sides: vec![(0, 1)],
            });
        }
        let arcs = d.arc_count();

        // Circles: arcs merged along the coherent smoothing.
        let mut uf = UnionFind::new(arcs);
        for c in d.crossings() {
            let a = c.arcs;
            match c.sign {
                Sign::Positive => {
                    uf.union(a[0], a[1]);
                    uf.union(a[2], a[3]);
                }
                Sign::Negative => {
                    uf.union(a[0], a[3]);
                    uf.union(a[1], a[2]);
                }
            }
        }
        let mut circle_of_arc = vec![usize::MAX; arcs];
        let mut circles: Vec<Vec<usize>> = Vec::new();
        for arc in 0..arcs {
            let root = uf.find(arc);
            if circle_of_arc[root] == usize::MAX {
                circle_of_arc[root] = circles.len();
                circles.push(Vec::new());
            }
            circle_of_arc[arc] = circle_of_arc[root];
            circles[circle_of_arc[arc]].push(arc);
        }

        // Regions: faces merged through the channel at every crossing.
        let mut rf = UnionFind::new(d.face_count());
        for (x, c) in d.crossings().iter().enumerate() {
            let (k1, k2) = channel_corners(c.sign);
            rf.union(d.corner_face(x, k1), d.corner_face(x, k2));
        }
        let mut region_of_face = vec![usize::MAX; d.face_count()];
        let mut region_count = 0;
        for f in 0..d.face_count() {
            let root = rf.find(f);
            if region_of_face[root] == usize::MAX {
                region_of_face[root] = region_count;
                region_count += 1;
            }
            region_of_face[f] = region_of_face[root];
        }
        assert_eq!(
            region_count,
            circles.len() + 1,
            "s disjoint circles cut the sphere into s + 1 regions"
        );

        // Bands, with the self-loop guard.
        let mut bands = Vec::with_capacity(d.crossing_count());
        for (x, c) in d.crossings().iter().enumerate() {
            let a = c.arcs;
            let (c1, c2) = match c.sign {
                Sign::Positive => (circle_of_arc[a[0]], circle_of_arc[a[2]]),
                Sign::Negative => (circle_of_arc[a[0]], circle_of_arc[a[1]]),
            };
            if c1 == c2 {
                return Err(Error::BandSelfLoop { crossing: x, circle: c1 });
            }
            let (k1, _) = channel_corners(c.sign);
            bands.push(Band {
                crossing: x,
                circles: (c1, c2),
                region: region_of_face[d.corner_face(x, k1)],
            });
        }

        // Sides of each circle, checked for coherence over all of its arcs.
        let mut circle_sides = vec![(usize::MAX, usize::MAX); circles.len()];
        for (cid, arcs_of) in circles.iter().enumerate() {
            for &arc in arcs_of {
                let (lf, rf_) = d.arc_sides(arc);
                let side = (region_of_face[lf], region_of_face[rf_]);
                if circle_sides[cid].0 == usize::MAX {
                    circle_sides[cid] = side;
                } else {
                    assert_eq!(
                        circle_sides[cid], side,
                        "every arc of a circle sees the same pair of regions"
                    );
                }
            }
            let (l, r) = circle_sides[cid];
            assert_ne!(l, r, "a circle separates two distinct regions");
        }

        // The region/circle incidence graph is a tree (s + 1 vertices,
        // s edges, connected).
        let mut tf = UnionFind::new(region_count);
        for &(l, r) in &circle_sides {
            assert!(tf.union(l, r), "region graph is acyclic");
        }
        assert_eq!(tf.count(), 1, "region graph is connected");

        Ok(SeifertData { circle_of_arc, circles, bands, region_of_face, region_count, circle_sides })
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn region_count(&self) -> usize {
        self.region_count
    }

    pub fn bands(&self) -> &[Band] {
        &self.bands
    }

    pub fn circle_of_arc(&self, arc: usize) -> CircleId {
        self.circle_of_arc[arc]
    }

    pub fn circle_arcs(&self, c: CircleId) -> &[usize] {
        &self.circles[c]
    }

    pub fn region_of_face(&self, f: FaceId) -> RegionId {
        self.region_of_face[f]
    }

    pub fn circle_sides(&self, c: CircleId) -> (RegionId, RegionId) {
        self.circle_sides[c]
    }

    /// Euler characteristic of the Seifert surface: disks minus bands.
    pub fn euler_characteristic(&self) -> i64 {
        self.circles.len() as i64 - self.bands.len() as i64
    }

    /// Genus of the Seifert surface built from this diagram.
    pub fn genus(&self, d: &Diagram) -> Result<i64> {
        let chi = self.euler_characteristic();
        let mu = d.mu() as i64;
        let num = 2 - mu - chi;
        if num % 2 != 0 || num < 0 {
            return Err(Error::NonIntegerGenus { chi, mu: d.mu() });
        }
        Ok(num / 2)
    }

    /// Splits the region tree at circle `c`: returns the set of regions on
    /// the left side (containing the circle's left region). The remaining
    /// regions form the right side.
    fn left_side_regions(&self, c: CircleId) -> Vec<bool> {
        let (left, _) = self.circle_sides[c];
        let mut adj: Vec<Vec<(CircleId, RegionId)>> = vec![Vec::new(); self.region_count];
        for (cid, &(l, r)) in self.circle_sides.iter().enumerate() {
            adj[l].push((cid, r));
            adj[r].push((cid, l));
        }
        let mut in_left = vec![false; self.region_count];
        let mut stack = vec![left];
        in_left[left] = true;
        while let Some(r) = stack.pop() {
            for &(cid, peer) in &adj[r] {
                if cid != c && !in_left[peer] {
                    in_left[peer] = true;
                    stack.push(peer);
                }
            }
        }
        in_left
    }

    /// Census of one circle's two sides: which circles and which crossings
    /// (bands) lie left and right of it.
    pub fn side_census(&self, c: CircleId) -> SideCensus {
        let in_left = self.left_side_regions(c);
        let mut census = SideCensus::default();
        census.circle = c;
        for (cid, &(l, _)) in self.circle_sides.iter().enumerate() {
            if cid == c {
                continue;
            }
            if in_left[l] {
                census.left_circles.push(cid);
            } else {
                census.right_circles.push(cid);
            }
        }
        for b in &self.bands {
            if in_left[b.region] {
                census.left_crossings.push(b.crossing);
            } else {
                census.right_crossings.push(b.crossing);
            }
        }
        census
    }

    pub fn is_nested(&self, c: CircleId) -> bool {
        let census = self.side_census(c);
        !census.left_circles.is_empty() && !census.right_circles.is_empty()
    }

    pub fn nested_circles(&self) -> Vec<CircleId> {
        (0..self.circles.len()).filter(|&c| self.is_nested(c)).collect()
    }

    /// A special diagram has no nested circle.
    pub fn is_special(&self) -> bool {
        self.nested_circles().is_empty()
    }

    /// A nested circle is extremal when at least one of its sides contains no
    /// other nested circle.
    pub fn extremal_nested_circles(&self) -> Vec<CircleId> {
        let nested: BTreeSet<CircleId> = self.nested_circles().into_iter().collect();
        nested
            .iter()
            .copied()
            .filter(|&c| {
                let census = self.side_census(c);
                let left_n = census.left_circles.iter().any(|x| nested.contains(x));
                let right_n = census.right_circles.iter().any(|x| nested.contains(x));
                !left_n || !right_n
            })
            .collect()
    }

    /// Groups of mutually parallel bands: two bands are parallel when they
    /// connect the same pair of Seifert circles. Groups are ordered by their
    /// lowest crossing.
    pub fn parallel_groups(&self) -> Vec<ParallelGroup> {
        let mut groups: Vec<ParallelGroup> = Vec::new();
        let mut group_of_pair: std::collections::BTreeMap<(usize, usize), usize> =
            Default::default();
        for (x, band) in self.bands.iter().enumerate() {
            let (a, b) = band.circles;
            let pair = (a.min(b), a.max(b));
            let gid = *group_of_pair.entry(pair).or_insert_with(|| {
                groups.push(ParallelGroup { circles: pair, crossings: Vec::new(), region: band.region });
                groups.len() - 1
            });
            groups[gid].crossings.push(x);
            // All bands joining a fixed pair of circles lie in the one region
            // adjacent to both circles.
            assert_eq!(groups[gid].region, band.region, "parallel bands share a region");
        }
        groups.sort_by_key(|g| g.crossings[0]);
        groups
    }

    /// For a nested circle: the parallel groups of size >= 2 on each side.
    pub fn parallel_sides(&self, c: CircleId) -> Result<(Vec<ParallelGroup>, Vec<ParallelGroup>)> {
        if !self.is_nested(c) {
            return Err(Error::NotNested { circle: c });
        }
        let in_left = self.left_side_regions(c);
        let mut left = Vec::new();
        let mut right = Vec::new();
        for g in self.parallel_groups() {
            if g.crossings.len() < 2 {
                continue;
            }
            if in_left[g.region] {
                left.push(g);
            } else {
                right.push(g);
            }
        }
        Ok((left, right))
    }
}

#[derive(Debug, Clone, Default)]
pub struct SideCensus {
    pub circle: CircleId,
    pub left_circles: Vec<CircleId>,
    pub right_circles: Vec<CircleId>,
    pub left_crossings: Vec<CrossingId>,
    pub right_crossings: Vec<CrossingId>,
}

#[derive(Debug, Clone)]
pub struct ParallelGroup {
    pub circles: (CircleId, CircleId),
    pub crossings: Vec<CrossingId>,
    pub region: RegionId,
}

/// Murasugi desum along a nested circle: the left piece keeps the left-side
/// crossings and the right piece the right-side ones; the circle itself
/// survives in both. Returns (left piece, right piece).
pub fn murasugi_desum(d: &Diagram, circle: CircleId) -> Result<(Diagram, Diagram)> {
    let s = SeifertData::new(d)?;
    if circle >= s.circle_count() {
        return Err(Error::NotNested { circle });
    }
    if !s.is_nested(circle) {
        return Err(Error::NotNested { circle });
    }
    let census = s.side_census(circle);
    let (left, dropped_left) =
        smooth_crossings(d, &census.right_crossings.iter().copied().collect())?;
    assert_eq!(dropped_left, census.right_circles.len(), "smoothed side circles become loops");
    let (right, dropped_right) =
        smooth_crossings(d, &census.left_crossings.iter().copied().collect())?;
    assert_eq!(dropped_right, census.left_circles.len());

    // Circle conservation: the desummed circle is counted in both pieces.
    let sl = SeifertData::new(&left)?;
    let sr = SeifertData::new(&right)?;
    assert_eq!(sl.circle_count() + sr.circle_count(), s.circle_count() + 1);
    Ok((left, right))
}

/// Full Murasugi decomposition into special pieces: repeatedly desum along
/// the lowest extremal nested circle, emitting the side without nested
/// circles, until no nested circles remain.
pub fn murasugi_decompose(d: &Diagram) -> Result<Vec<Diagram>> {
    let mut pieces = Vec::new();
    let mut work = vec![d.clone()];
    while let Some(cur) = work.pop() {
        let s = SeifertData::new(&cur)?;
        let extremal = s.extremal_nested_circles();
        match extremal.first() {
            None => pieces.push(cur),
            Some(&c) => {
                let census = s.side_census(c);
                let nested: BTreeSet<CircleId> = s.nested_circles().into_iter().collect();
                let left_clean = !census.left_circles.iter().any(|x| nested.contains(x));
                let (left, right) = murasugi_desum(&cur, c)?;
                // Emit the side that cannot be desummed further; keep working
                // on the other. When both are clean the loop drains them.
                if left_clean {
                    pieces.push(left);
                    work.push(right);
                } else {
                    pieces.push(right);
                    work.push(left);
                }
            }
        }
    }
    // Every emitted piece is special.
    for p in &pieces {
        debug_assert!(SeifertData::new(p)?.is_special());
    }
    pieces.reverse();
    Ok(pieces)
}

/// Removes one band from a parallel group of size >= 2 by smoothing its
/// crossing: the plumbing inverse for a Hopf band stack.
pub fn deplumb_band(d: &Diagram, crossing: CrossingId) -> Result<Diagram> {
    let s = SeifertData::new(d)?;
    let groups = s.parallel_groups();
    let group = groups
        .iter()
        .find(|g| g.crossings.contains(&crossing))
        .expect("every crossing belongs to a group");
    if group.crossings.len() < 2 {
        return Err(Error::NotParallel { crossing });
    }
    let (out, dropped) = smooth_crossings(d, &BTreeSet::from([crossing]))?;
    assert_eq!(dropped, 0, "deplumbing never frees a circle");
    Ok(out)
}
