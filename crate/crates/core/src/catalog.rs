//! Constructors for families of diagrams and the bundled knot corpus.
//!
//! Everything here is generated, not transcribed: two-bridge knots come from
//! canonical continued fractions, torus diagrams from uniform twist rings,
//! pretzels and medial diagrams from explicit plane maps, and composites from
//! a label-level connected-sum splice. Generation asserts structural
//! invariants; arithmetic oracles (determinants, polynomial pins) live in the
//! integration tests.

use crate::builder::MapBuilder;
use crate::diagram::{slot_of, Diagram, Sign};
use crate::error::{Error, Result};
use crate::pd::{CrossingTuple, PdCode};
use std::collections::BTreeMap;

/// The standard diagram of the 2-strand torus link T(k, 2) with the requested
/// uniform crossing sign: a ring of k twist crossings.
pub fn torus_two_strand(k: usize, sign: Sign) -> Diagram {
    assert!(k >= 1);
    let mut mb = MapBuilder::new();
    for _ in 0..k {
        mb.add_crossing();
    }
    for i in 0..k {
        let j = (i + 1) % k;
        mb.connect((i, 2), (j, 1));
        mb.connect((i, 3), (j, 0));
    }
    let d = Diagram::from_pd(&mb.emit(&[]).expect("twist ring emits"))
        .expect("twist ring is planar");
    let got = d.signs()[0];
    debug_assert!(d.signs().iter().all(|&s| s == got), "twist ring has uniform sign");
    if got == sign {
        d
    } else {
        d.mirror()
    }
}

/// Alexander polynomial coefficients of T(2g+1, 2): a_i = (-1)^(g-|i|),
/// returned as the slice (a_0, ..., a_g).
pub fn torus_alexander_half(g: usize) -> Vec<i64> {
    (0..=g).map(|i| if (g - i) % 2 == 0 { 1 } else { -1 }).collect()
}

/// Builds the numerator closure of the rational tangle with positive
/// continued-fraction digits: groups of twists applied right, bottom, right,
/// ... starting from the 0-tangle. The result is always alternating.
pub fn rational_cf(digits: &[u32]) -> Result<Diagram> {
    if digits.is_empty() || digits.iter().any(|&a| a == 0) {
        return Err(Error::PreconditionFailed {
            details: "continued fraction digits must be positive".into(),
        });
    }
    #[derive(Clone, Copy)]
    enum End {
        /// Still wired straight to another corner (0-tangle wire).
        WireTo(usize),
        Port(usize, u8),
    }
    const NW: usize = 0;
    const NE: usize = 1;
    const SW: usize = 2;
    const SE: usize = 3;
    let mut corner = [End::WireTo(NE), End::WireTo(NW), End::WireTo(SE), End::WireTo(SW)];
    let mut mb = MapBuilder::new();
    let attach = |mb: &mut MapBuilder, corner: &mut [End; 4], port: (usize, u8), at: usize| {
        match corner[at] {
            End::Port(c, p) => mb.connect((c, p), port),
            End::WireTo(peer) => corner[peer] = End::Port(port.0, port.1),
        }
    };
    for (group, &count) in digits.iter().enumerate() {
        for _ in 0..count {
            let x = mb.add_crossing();
            if group % 2 == 0 {
                // Twist the right side: NW/SW ports of the new crossing take
                // the old NE/SE ends.
                attach(&mut mb, &mut corner, (x, 3), NE);
                attach(&mut mb, &mut corner, (x, 0), SE);
                corner[NE] = End::Port(x, 2);
                corner[SE] = End::Port(x, 1);
            } else {
                // Twist the bottom: NW/NE ports take the old SW/SE ends.
                attach(&mut mb, &mut corner, (x, 3), SW);
                attach(&mut mb, &mut corner, (x, 2), SE);
                corner[SW] = End::Port(x, 0);
                corner[SE] = End::Port(x, 1);
            }
        }
    }
    // Close the tangle so the numerator of the continued fraction value
    // continuant(digits) becomes the determinant: after a right group the
    // tangle fraction is p/q and the numerator closure (NW-NE, SW-SE)
    // applies; after a bottom group the fraction is q/p and the denominator
    // closure (NW-SW, NE-SE) selects the same curve.
    let joins = if digits.len() % 2 == 1 { [(NW, NE), (SW, SE)] } else { [(NW, SW), (NE, SE)] };
    for (a, b) in joins {
        match (corner[a], corner[b]) {
            (End::Port(c1, p1), End::Port(c2, p2)) => mb.connect((c1, p1), (c2, p2)),
            _ => unreachable!("first twist group consumes the relevant wires"),
        }
    }
    Diagram::from_pd(&mb.emit(&[])?)
}

/// Pretzel diagram P(p_1, ..., p_k): vertical twist stacks joined along a top
/// and a bottom hub. All stacks twist the same way, so odd entries give
/// alternating diagrams.
pub fn pretzel(strands: &[usize]) -> Result<Diagram> {
    if strands.len() < 2 || strands.iter().any(|&p| p == 0) {
        return Err(Error::PreconditionFailed {
            details: "pretzel needs at least two nonempty strands".into(),
        });
    }
    let mut mb = MapBuilder::new();
    let mut stacks: Vec<(usize, usize)> = Vec::new(); // (bottom crossing, top crossing)
    for &p in strands {
        let base = mb.crossing_count();
        for _ in 0..p {
            mb.add_crossing();
        }
        for j in 0..p - 1 {
            mb.connect((base + j, 2), (base + j + 1, 1));
            mb.connect((base + j, 3), (base + j + 1, 0));
        }
        stacks.push((base, base + p - 1));
    }
    let k = stacks.len();
    for i in 0..k {
        let j = (i + 1) % k;
        // Top hub: NE of stack i to NW of stack i+1.
        mb.connect((stacks[i].1, 2), (stacks[j].1, 3));
        // Bottom hub: SE of stack i to SW of stack i+1.
        mb.connect((stacks[i].0, 1), (stacks[j].0, 0));
    }
    Diagram::from_pd(&mb.emit(&[])?)
}

/// A plane multigraph given by its rotation system. Half-edges are numbered;
/// `rotations[v]` lists the half-edges at vertex `v` counterclockwise and
/// `mate` pairs the two half-edges of each edge.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    pub rotations: Vec<Vec<usize>>,
    pub mate: Vec<usize>,
}

impl PlaneGraph {
    /// Cycle graph C_n with `extra` additional parallel edges between
    /// vertices 0 and 1.
    pub fn cycle_with_multiedge(n: usize, extra: usize) -> PlaneGraph {
        assert!(n >= 2);
        // Half-edges 2e and 2e+1 belong to edge e; edges 0..n are the cycle
        // (edge i joins i and i+1 mod n), edges n.. are the extras.
        let m = n + extra;
        let mate: Vec<usize> = (0..2 * m).map(|h| h ^ 1).collect();
        // Vertices counterclockwise around the cycle; extra edges run outside
        // the cycle, parallel to edge 0 and stacked outward.
        let mut rotations = vec![Vec::new(); n];
        for v in 0..n {
            let incoming = 2 * ((v + n - 1) % n) + 1;
            let outgoing = 2 * v;
            if v == 0 {
                for e in (n..m).rev() {
                    rotations[v].push(2 * e);
                }
            }
            rotations[v].push(outgoing);
            rotations[v].push(incoming);
            if v == 1 {
                for e in n..m {
                    rotations[v].push(2 * e + 1);
                }
            }
        }
        PlaneGraph { rotations, mate }
    }
}

/// Medial diagram of a plane multigraph: one crossing per edge, strands along
/// the face corners. The vertex faces become one checkerboard color class, so
/// the result is a special alternating diagram of uniform sign.
pub fn medial(g: &PlaneGraph) -> Result<Diagram> {
    let h_count = g.mate.len();
    assert_eq!(h_count % 2, 0);
    let mut vertex_of = vec![usize::MAX; h_count];
    let mut seen = vec![false; h_count];
    for (v, rot) in g.rotations.iter().enumerate() {
        for &h in rot {
            assert!(!seen[h], "half-edge {h} listed twice");
            seen[h] = true;
            vertex_of[h] = v;
        }
    }
    assert!(seen.iter().all(|&b| b), "every half-edge must appear in a rotation");
    for h in 0..h_count {
        assert_eq!(g.mate[g.mate[h]], h, "mate must be an involution");
        assert_ne!(g.mate[h], h);
    }

    // Crossing per edge; the edge of half-edge h is min(h, mate[h]).
    let mut edge_id = BTreeMap::new();
    for h in 0..h_count {
        let key = h.min(g.mate[h]);
        let next = edge_id.len();
        edge_id.entry(key).or_insert(next);
    }
    let mut mb = MapBuilder::new();
    for _ in 0..edge_id.len() {
        mb.add_crossing();
    }
    // Ports at the crossing of edge e, near the endpoint of half-edge h:
    // (left, right) as seen from that endpoint looking along the edge.
    let near_ports = |h: usize| -> (u8, u8) {
        if h < g.mate[h] {
            (0, 1)
        } else {
            (2, 3)
        }
    };
    let crossing_of = |h: usize| -> usize { edge_id[&h.min(g.mate[h])] };
    for rot in &g.rotations {
        let k = rot.len();
        for i in 0..k {
            let h = rot[i];
            let h2 = rot[(i + 1) % k];
            let (left, _) = near_ports(h);
            let (_, right) = near_ports(h2);
            mb.connect((crossing_of(h), left), (crossing_of(h2), right));
        }
    }
    Diagram::from_pd(&mb.emit(&[])?)
}

/// Connected sum of two knot diagrams by cutting one arc in each and joining
/// the loose ends. The cut arcs are chosen so alternation is preserved when
/// both factors alternate. Unknot factors are absorbed.
pub fn connect_sum(k1: &Diagram, k2: &Diagram) -> Result<Diagram> {
    if !k1.is_knot() || !k2.is_knot() {
        return Err(Error::NotKnot {
            mu: if k1.is_knot() { k2.mu() } else { k1.mu() },
        });
    }
    if k1.crossing_count() == 0 {
        return Ok(k2.clone());
    }
    if k2.crossing_count() == 0 {
        return Ok(k1.clone());
    }

    // Canonical labels 1..2c by rank (rank preserves the succession order).
    let canonical = |d: &Diagram| -> Vec<CrossingTuple> {
        let mut labels: Vec<u32> = d.arcs().iter().map(|a| a.label).collect();
        labels.sort_unstable();
        let rank: BTreeMap<u32, u32> =
            labels.iter().enumerate().map(|(i, &l)| (l, i as u32 + 1)).collect();
        d.crossings().iter().map(|c| c.tuple.map(|l| rank[&l])).collect()
    };
    let c1 = k1.crossing_count() as u32;
    let c2 = k2.crossing_count() as u32;
    let t1 = canonical(k1);
    let t2 = canonical(k2);

    // Passage parity of an arc end: true = under.
    let end_parity = |d: &Diagram, label_rank: u32, head: bool| -> bool {
        let mut labels: Vec<u32> = d.arcs().iter().map(|a| a.label).collect();
        labels.sort_unstable();
        let original = labels[(label_rank - 1) as usize];
        let arc = d.arc_by_label(original).unwrap();
        let dart = if head { d.arcs()[arc].head } else { d.arcs()[arc].tail };
        slot_of(dart) % 2 == 0
    };

    // Cut arc in k1: the last label. Its tail parity decides which arc of k2
    // to cut: we need the k2 head parity to be the opposite.
    let tail_under = end_parity(k1, 2 * c1, false);
    let mut cut2 = 2 * c2;
    for m in 1..=2 * c2 {
        if end_parity(k2, m, true) != tail_under {
            cut2 = m;
            break;
        }
    }

    // Rotate k2's labels so the cut arc is 2*c2, then shift by 2*c1.
    let rot = |l: u32| ((l + 2 * c2 - cut2 + 2 * c2 - 1) % (2 * c2)) + 1;
    let t2: Vec<CrossingTuple> = t2.iter().map(|t| t.map(|l| rot(l) + 2 * c1)).collect();

    // Head occurrences swap between the two joint arcs.
    let head1 = {
        let d = Diagram::from_pd(&PdCode::new(t1.clone())?)?;
        let arc = d.arc_by_label(2 * c1).unwrap();
        d.arcs()[arc].head
    };
    let head2 = {
        let shifted = Diagram::from_pd(&PdCode::new(t2.clone())?)?;
        let arc = shifted.arc_by_label(2 * c1 + 2 * c2).unwrap();
        shifted.arcs()[arc].head
    };
    let mut tuples = t1;
    tuples[head1 / 4][head1 % 4] = 2 * c1 + 2 * c2;
    let mut t2 = t2;
    t2[head2 / 4][head2 % 4] = 2 * c1;
    tuples.extend(t2);
    Diagram::from_pd(&PdCode::new(tuples)?)
}

fn continuant(digits: &[u32]) -> u64 {
    let (mut prev, mut cur) = (1u64, 1u64);
    for (i, &a) in digits.iter().enumerate() {
        let next = if i == 0 { a as u64 } else { a as u64 * cur + prev };
        prev = cur;
        cur = next;
    }
    cur
}

/// Canonical representative of the two-bridge class of q mod p:
/// min over {q, q^{-1}, p − q, (p − q)^{-1}}.
fn canonical_q(p: u64, q: u64) -> u64 {
    let inv = |x: u64| -> u64 {
        (1..p).find(|&y| (x * y) % p == 1).expect("q is a unit mod p")
    };
    let q = q % p;
    [q, inv(q), p - q, inv(p - q)].into_iter().min().unwrap()
}

#[derive(Debug, Clone)]
pub struct TwoBridge {
    pub crossings: usize,
    pub p: u64,
    pub q: u64,
    pub cf: Vec<u32>,
}

/// All two-bridge knots with `3..=max` crossings, one canonical continued
/// fraction per knot class: digits positive, both end digits at least 2,
/// deduplicated under reversal, determinant odd (even continuants are links).
pub fn two_bridge_knots(max: usize) -> Vec<TwoBridge> {
    let mut out = Vec::new();
    for c in 3..=max {
        let mut comps: Vec<Vec<u32>> = Vec::new();
        // Compositions of c with first and last entry >= 2.
        fn rec(remaining: u32, acc: &mut Vec<u32>, comps: &mut Vec<Vec<u32>>) {
            if remaining == 0 {
                if acc.last().copied().unwrap_or(0) >= 2 {
                    comps.push(acc.clone());
                }
                return;
            }
            let min = if acc.is_empty() { 2 } else { 1 };
            for a in min..=remaining {
                acc.push(a);
                rec(remaining - a, acc, comps);
                acc.pop();
            }
        }
        rec(c as u32, &mut Vec::new(), &mut comps);
        let mut seen = std::collections::BTreeSet::new();
        for cf in comps {
            let mut rev = cf.clone();
            rev.reverse();
            let canon = cf.clone().min(rev);
            if !seen.insert(canon.clone()) {
                continue;
            }
            let p = continuant(&canon);
            if p % 2 == 0 {
                continue;
            }
            let q_raw = continuant(&canon[1..]);
            out.push(TwoBridge { crossings: c, p, q: canonical_q(p, q_raw), cf: canon });
        }
    }
    out.sort_by_key(|t| (t.crossings, t.p, t.q));
    out
}

/// Table-confident names keyed by (crossing number, determinant); everything
/// else gets a systematic two-bridge name.
fn two_bridge_name(t: &TwoBridge) -> String {
    let named: &[((usize, u64), &str)] = &[
        ((3, 3), "3_1"),
        ((4, 5), "4_1"),
        ((5, 5), "5_1"),
        ((5, 7), "5_2"),
        ((6, 9), "6_1"),
        ((6, 11), "6_2"),
        ((6, 13), "6_3"),
        ((7, 7), "7_1"),
        ((7, 11), "7_2"),
        ((7, 13), "7_3"),
        ((7, 15), "7_4"),
        ((7, 17), "7_5"),
        ((7, 19), "7_6"),
        ((7, 21), "7_7"),
        ((8, 13), "8_1"),
        ((9, 9), "9_1"),
    ];
    for &((c, p), name) in named {
        if t.crossings == c && t.p == p {
            return name.to_string();
        }
    }
    format!("b{}_{}", t.p, t.q)
}

#[derive(Debug, Clone)]
pub struct BundledKnot {
    pub name: String,
    pub diagram: Diagram,
}

/// The bundled corpus: every two-bridge knot through 9 crossings, two odd
/// pretzels, and all alternating composites through 9 crossings over the
/// two-bridge factors up to 6 crossings. Torus-family records are emitted
/// with positive crossings; other records keep the constructor's chirality.
pub fn bundled() -> Vec<BundledKnot> {
    let mut out: Vec<BundledKnot> = Vec::new();
    let mut by_name: BTreeMap<String, Diagram> = BTreeMap::new();

    for t in two_bridge_knots(9) {
        let name = two_bridge_name(&t);
        let mut d = rational_cf(&t.cf).expect("bundled continued fractions build");
        let torus = t.q == 1;
        if torus && d.writhe() < 0 {
            d = d.mirror();
        }
        assert!(d.is_knot() && d.is_alternating() && d.is_reduced() && d.is_connected());
        assert_eq!(d.crossing_count(), t.crossings);
        by_name.insert(name.clone(), d.clone());
        out.push(BundledKnot { name, diagram: d });
    }

    for (name, strands) in [("p2_3_3", vec![2usize, 3, 3]), ("p3_3_3", vec![3, 3, 3])] {
        let d = pretzel(&strands).expect("bundled pretzels build");
        assert!(d.is_knot() && d.is_alternating() && d.is_reduced());
        out.push(BundledKnot { name: name.to_string(), diagram: d });
    }

    // Composites: factor lists name the bundled chirality; "m" prefixes the
    // mirror. Amphichiral factors (4_1, 6_3) appear unprefixed only.
    let composites: &[&[&str]] = &[
        &["3_1", "3_1"],
        &["3_1", "m3_1"],
        &["m3_1", "m3_1"],
        &["3_1", "4_1"],
        &["m3_1", "4_1"],
        &["3_1", "5_1"],
        &["3_1", "m5_1"],
        &["m3_1", "5_1"],
        &["m3_1", "m5_1"],
        &["3_1", "5_2"],
        &["3_1", "m5_2"],
        &["m3_1", "5_2"],
        &["m3_1", "m5_2"],
        &["3_1", "6_1"],
        &["3_1", "m6_1"],
        &["m3_1", "6_1"],
        &["m3_1", "m6_1"],
        &["3_1", "6_2"],
        &["3_1", "m6_2"],
        &["m3_1", "6_2"],
        &["m3_1", "m6_2"],
        &["3_1", "6_3"],
        &["m3_1", "6_3"],
        &["4_1", "4_1"],
        &["4_1", "5_1"],
        &["4_1", "m5_1"],
        &["4_1", "5_2"],
        &["4_1", "m5_2"],
        &["3_1", "3_1", "3_1"],
        &["3_1", "3_1", "m3_1"],
        &["3_1", "m3_1", "m3_1"],
        &["m3_1", "m3_1", "m3_1"],
    ];
    let factor = |name: &str| -> Diagram {
        match name.strip_prefix('m') {
            Some(base) => by_name[base].mirror(),
            None => by_name[name].clone(),
        }
    };
    for parts in composites {
        let mut d = factor(parts[0]);
        for part in &parts[1..] {
            d = connect_sum(&d, &factor(part)).expect("bundled composites splice");
        }
        assert!(d.is_knot() && d.is_alternating() && d.is_reduced() && d.is_connected());
        out.push(BundledKnot { name: parts.join("#"), diagram: d });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// PD equality up to a cyclic relabeling of the arcs.
    fn same_up_to_label_rotation(a: &Diagram, b: &Diagram) -> bool {
        if a.crossing_count() != b.crossing_count() {
            return false;
        }
        let n2 = 2 * a.crossing_count() as u32;
        let mut sb = b.pd_code().crossings;
        sb.sort_unstable();
        let ta = a.pd_code().crossings;
        (0..n2).any(|k| {
            let mut rot: Vec<_> =
                ta.iter().map(|t| t.map(|l| ((l - 1 + k) % n2) + 1)).collect();
            rot.sort_unstable();
            rot == sb
        })
    }

    #[test]
    fn two_bridge_census_counts() {
        let knots = two_bridge_knots(9);
        let count = |c: usize| knots.iter().filter(|t| t.crossings == c).count();
        assert_eq!(count(3), 1);
        assert_eq!(count(4), 1);
        assert_eq!(count(5), 2);
        assert_eq!(count(6), 3);
        assert_eq!(count(7), 7);
        assert_eq!(count(8), 12);
        assert_eq!(count(9), 24);
        assert_eq!(knots.len(), 50);
        // Classes are distinct.
        let mut keys: Vec<(u64, u64)> = knots.iter().map(|t| (t.p, t.q)).collect();
        keys.sort_unstable();
        keys.dedup();
        assert_eq!(keys.len(), 50);
    }

    #[test]
    fn torus_family_continued_fractions() {
        for (c, name) in [(3, "3_1"), (5, "5_1"), (7, "7_1"), (9, "9_1")] {
            let t = two_bridge_knots(9)
                .into_iter()
                .find(|t| t.crossings == c && t.q == 1)
                .unwrap();
            assert_eq!(t.cf, vec![c as u32]);
            assert_eq!(t.p, c as u64);
            assert_eq!(two_bridge_name(&t), name);
        }
    }

    #[test]
    fn rational_single_group_is_twist_ring() {
        let a = rational_cf(&[3]).unwrap();
        let b = torus_two_strand(3, a.signs()[0]);
        assert!(same_up_to_label_rotation(&a, &b));
    }

    #[test]
    fn rational_builds_are_alternating_knots() {
        for t in two_bridge_knots(9) {
            let d = rational_cf(&t.cf).unwrap();
            assert!(d.is_alternating(), "CF {:?}", t.cf);
            assert!(d.is_reduced(), "CF {:?}", t.cf);
            assert!(d.is_knot(), "CF {:?} gives a link", t.cf);
            assert_eq!(d.crossing_count(), t.crossings);
        }
    }

    #[test]
    fn even_continuant_is_a_link() {
        let d = rational_cf(&[4]).unwrap();
        assert_eq!(d.mu(), 2);
        let d = rational_cf(&[2, 1, 2]).unwrap(); // 8/3
        assert_eq!(d.mu(), 2);
    }

    #[test]
    fn pretzel_one_one_one_is_the_twist_ring() {
        let p = pretzel(&[1, 1, 1]).unwrap();
        let t = torus_two_strand(3, p.signs()[0]);
        assert!(same_up_to_label_rotation(&p, &t));
    }

    #[test]
    fn bundled_pretzels_are_knots() {
        for strands in [vec![2usize, 3, 3], vec![3, 3, 3]] {
            let d = pretzel(&strands).unwrap();
            assert!(d.is_knot());
            assert!(d.is_alternating());
            assert!(d.is_reduced());
            assert_eq!(d.crossing_count(), strands.iter().sum::<usize>());
        }
    }

    #[test]
    fn medial_of_cycle_is_twist_ring() {
        let g = PlaneGraph::cycle_with_multiedge(4, 0);
        let d = medial(&g).unwrap();
        assert_eq!(d.crossing_count(), 4);
        assert!(d.is_alternating());
        let signs = d.signs();
        assert!(signs.iter().all(|&s| s == signs[0]), "medial is uniform-sign");
    }

    #[test]
    fn medial_with_doubled_edge_is_five_crossing_knot() {
        let g = PlaneGraph::cycle_with_multiedge(4, 1);
        let d = medial(&g).unwrap();
        assert_eq!(d.crossing_count(), 5);
        assert!(d.is_knot());
        assert!(d.is_alternating());
        assert!(d.is_reduced());
    }

    #[test]
    fn connected_sums_preserve_alternation() {
        let t = rational_cf(&[3]).unwrap();
        let f = rational_cf(&[2, 2]).unwrap();
        let s = connect_sum(&t, &f).unwrap();
        assert_eq!(s.crossing_count(), 7);
        assert!(s.is_knot());
        assert!(s.is_alternating());
        assert!(s.is_reduced());
        let square = connect_sum(&t, &t.mirror()).unwrap();
        assert_eq!(square.writhe(), 0);
        assert!(square.is_alternating());
    }

    #[test]
    fn bundled_has_84_distinct_records() {
        let all = bundled();
        assert_eq!(all.len(), 84);
        let mut names: Vec<&str> = all.iter().map(|b| b.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), 84);
        for b in &all {
            assert!(b.diagram.crossing_count() <= 9, "{}", b.name);
        }
        // Torus records are positive.
        for name in ["3_1", "5_1", "7_1", "9_1"] {
            let d = &all.iter().find(|b| b.name == name).unwrap().diagram;
            assert!(d.signs().iter().all(|&s| s == Sign::Positive), "{name}");
        }
    }
}
