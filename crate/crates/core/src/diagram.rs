//! Knot and link diagrams built from PD codes.
//!
//! A diagram is a 4-valent graph with a rotation system: each crossing lists
//! its four arc ends counterclockwise starting at the incoming under-strand.
//! Faces are traced from the rotation system and validated against the Euler
//! count for a diagram drawn on the 2-sphere. Strand orientations are inferred
//! from the rule that arc labels increase by one along each strand, cyclically
//! within the label set of the component.

use crate::error::{Error, Result};
use crate::pd::{CrossingTuple, PdCode};
use serde_json::json;
use std::collections::{BTreeMap, VecDeque};

pub type ArcId = usize;
pub type CrossingId = usize;
pub type FaceId = usize;

/// A dart is one end of an arc at a crossing: `4 * crossing + slot`.
pub type Dart = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Crossing {
    /// Arc labels counterclockwise from the incoming under-strand.
    pub tuple: CrossingTuple,
    /// Same slots as `tuple` but as arc indices.
    pub arcs: [ArcId; 4],
    /// Slot (1 or 3) where the over-strand enters.
    pub over_in_slot: u8,
    pub sign: Sign,
}

#[derive(Debug, Clone)]
pub struct Arc {
    pub label: u32,
    /// Dart where the arc leaves a crossing.
    pub tail: Dart,
    /// Dart where the arc enters a crossing.
    pub head: Dart,
    pub component: usize,
}

#[derive(Debug, Clone)]
pub struct Face {
    /// Darts in face-tracing order; one dart per arc-side on the boundary.
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn valence(&self) -> usize {
        self.darts.len()
    }
}

#[derive(Debug, Clone)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    arcs: Vec<Arc>,
    faces: Vec<Face>,
    face_of_dart: Vec<FaceId>,
    /// Arc indices in strand order, one list per link component.
    components: Vec<Vec<ArcId>>,
    /// Crossing-free circle components (only the unknot constructor has one).
    closed_loops: usize,
    graph_components: usize,
}

pub fn crossing_of(d: Dart) -> CrossingId {
    d / 4
}

pub fn slot_of(d: Dart) -> u8 {
    (d % 4) as u8
}

pub fn dart(c: CrossingId, slot: u8) -> Dart {
    4 * c + slot as usize
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Role {
    Head,
    Tail,
}

impl Role {
    fn opposite(self) -> Role {
        match self {
            Role::Head => Role::Tail,
            Role::Tail => Role::Head,
        }
    }
}

impl Diagram {
    /// The zero-crossing unknot. Permitted everywhere; by convention it has
    /// one component, no arcs and two faces.
    pub fn unknot() -> Diagram {
        Diagram {
            crossings: Vec::new(),
            arcs: Vec::new(),
            faces: vec![Face { darts: Vec::new() }, Face { darts: Vec::new() }],
            face_of_dart: Vec::new(),
            components: Vec::new(),
            closed_loops: 1,
            graph_components: 1,
        }
    }

    pub fn from_pd(pd: &PdCode) -> Result<Diagram> {
        build_diagram(pd)
    }

    pub fn parse(input: &str) -> Result<Diagram> {
        build_diagram(&PdCode::parse(input)?)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Number of link components.
    pub fn mu(&self) -> usize {
        self.components.len() + self.closed_loops
    }

    pub fn is_knot(&self) -> bool {
        self.mu() == 1
    }

    pub fn components(&self) -> &[Vec<ArcId>] {
        &self.components
    }

    /// Other end of the same arc.
    pub fn alpha(&self, d: Dart) -> Dart {
        let arc = self.arc_at(d);
        let a = &self.arcs[arc];
        if a.tail == d {
            a.head
        } else {
            a.tail
        }
    }

    pub fn arc_at(&self, d: Dart) -> ArcId {
        self.crossings[crossing_of(d)].arcs[slot_of(d) as usize]
    }

    pub fn face_of_dart(&self, d: Dart) -> FaceId {
        self.face_of_dart[d]
    }

    /// Face containing the corner between slots `k` and `k+1` of crossing `x`.
    pub fn corner_face(&self, x: CrossingId, k: u8) -> FaceId {
        self.face_of_dart[dart(x, (k + 1) % 4)]
    }

    /// Faces on the two sides of an arc, in `(left, right)` order relative to
    /// the arc's orientation.
    pub fn arc_sides(&self, arc: ArcId) -> (FaceId, FaceId) {
        let a = &self.arcs[arc];
        (self.face_of_dart[a.head], self.face_of_dart[a.tail])
    }

    /// Strand successor of an arc.
    pub fn next_arc(&self, arc: ArcId) -> ArcId {
        let head = self.arcs[arc].head;
        let x = crossing_of(head);
        let s = slot_of(head);
        let out_slot = if s == 0 {
            2
        } else {
            debug_assert_eq!(s, self.crossings[x].over_in_slot);
            4 - s
        };
        self.crossings[x].arcs[out_slot as usize]
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.crossings.iter().map(|c| c.sign).collect()
    }

    /// True when over- and under-passages alternate along every strand:
    /// equivalently, every arc has one under-passage end and one over-passage
    /// end. Vacuously true for the zero-crossing unknot.
    pub fn is_alternating(&self) -> bool {
        self.arcs.iter().all(|a| {
            let under_ends = [a.tail, a.head]
                .iter()
                .filter(|&&d| slot_of(d) % 2 == 0)
                .count();
            under_ends == 1
        })
    }

    /// Crossings with two diagonally opposite corners on the same face.
    pub fn nugatory_crossings(&self) -> Vec<CrossingId> {
        (0..self.crossings.len())
            .filter(|&x| {
                let f = |k| self.corner_face(x, k);
                f(0) == f(2) || f(1) == f(3)
            })
            .collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.nugatory_crossings().is_empty()
    }

    pub fn is_connected(&self) -> bool {
        self.graph_components <= 1
    }

    /// The same projection with every crossing switched; signs negate and the
    /// face structure is unchanged.
    pub fn mirror(&self) -> Diagram {
        if self.crossings.is_empty() {
            return Diagram::unknot();
        }
        let tuples: Vec<CrossingTuple> = self
            .crossings
            .iter()
            .map(|c| {
                let t = c.tuple;
                match c.sign {
                    // New under-strand is the old over-strand; start the tuple
                    // at the old over-entry slot.
                    Sign::Positive => [t[3], t[0], t[1], t[2]],
                    Sign::Negative => [t[1], t[2], t[3], t[0]],
                }
            })
            .collect();
        let pd = PdCode::new(tuples).expect("mirror preserves label multiplicities");
        build_diagram(&pd).expect("mirror of a valid diagram is valid")
    }

    pub fn pd_code(&self) -> PdCode {
        PdCode {
            crossings: self.crossings.iter().map(|c| c.tuple).collect(),
        }
    }

    pub fn arc_by_label(&self, label: u32) -> Option<ArcId> {
        self.arcs.iter().position(|a| a.label == label)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "crossings": self.crossings.iter().map(|c| json!({
                "code": c.tuple,
                "sign": c.sign.value(),
            })).collect::<Vec<_>>(),
            "faces": self.faces.iter().map(|f| {
                f.darts.iter().map(|&d| self.arcs[self.arc_at(d)].label).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
            "components": self.components.iter().map(|comp| {
                comp.iter().map(|&a| self.arcs[a].label).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
            "alternating": self.is_alternating(),
            "reduced": self.is_reduced(),
            "connected": self.is_connected(),
        })
    }
}

/// Builds and validates a diagram from a PD code.
///
/// Validation order: label multiplicities (done by `PdCode`), strand
/// orientation, then the sphere (Euler) check.
pub fn build_diagram(pd: &PdCode) -> Result<Diagram> {
    if pd.is_empty() {
        return Err(Error::EmptyCode);
    }
    let n = pd.len();
    let labels = pd.labels();
    let arc_index: BTreeMap<u32, ArcId> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();

    // Both (crossing, slot) occurrences of each arc.
    let mut ends: Vec<Vec<Dart>> = vec![Vec::new(); labels.len()];
    for (x, t) in pd.crossings.iter().enumerate() {
        for (s, &l) in t.iter().enumerate() {
            ends[arc_index[&l]].push(dart(x, s as u8));
        }
    }
    let alpha = |d: Dart| -> Dart {
        let x = crossing_of(d);
        let s = slot_of(d) as usize;
        let l = pd.crossings[x][s];
        let es = &ends[arc_index[&l]];
        if es[0] == d {
            es[1]
        } else {
            es[0]
        }
    };

    // Infer over-strand directions: propagate forced roles, then resolve the
    // remaining crossings by the label-succession rule, one at a time.
    let mut role: Vec<Option<Role>> = vec![None; 4 * n];
    let mut over_in: Vec<Option<u8>> = vec![None; n];
    let mut queue: VecDeque<(Dart, Role)> = VecDeque::new();
    for x in 0..n {
        queue.push_back((dart(x, 0), Role::Head));
        queue.push_back((dart(x, 2), Role::Tail));
    }
    let propagate = |queue: &mut VecDeque<(Dart, Role)>,
                         role: &mut Vec<Option<Role>>,
                         over_in: &mut Vec<Option<u8>>|
     -> Result<()> {
        while let Some((d, r)) = queue.pop_front() {
            match role[d] {
                Some(existing) if existing == r => continue,
                Some(_) => {
                    return Err(Error::InconsistentOrientation {
                        details: format!(
                            "arc {} cannot be both incoming and outgoing at crossing {}",
                            pd.crossings[crossing_of(d)][slot_of(d) as usize],
                            crossing_of(d)
                        ),
                    })
                }
                None => role[d] = Some(r),
            }
            queue.push_back((alpha(d), r.opposite()));
            let s = slot_of(d);
            if s % 2 == 1 {
                let x = crossing_of(d);
                let oi = if r == Role::Head { s } else { 4 - s };
                match over_in[x] {
                    None => {
                        over_in[x] = Some(oi);
                        queue.push_back((dart(x, 4 - s), r.opposite()));
                    }
                    Some(existing) if existing == oi => {}
                    Some(_) => {
                        return Err(Error::InconsistentOrientation {
                            details: format!("conflicting over-strand direction at crossing {x}"),
                        })
                    }
                }
            }
        }
        Ok(())
    };
    propagate(&mut queue, &mut role, &mut over_in)?;
    for x in 0..n {
        if over_in[x].is_some() {
            continue;
        }
        let b = pd.crossings[x][1];
        let d_ = pd.crossings[x][3];
        // Label-succession rule: adjacent labels run low to high, a wrapping
        // pair runs high (component maximum) to low (component minimum).
        let oi = if d_ == b + 1 {
            1
        } else if b == d_ + 1 {
            3
        } else if b > d_ {
            1
        } else {
            3
        };
        over_in[x] = Some(oi);
        queue.push_back((dart(x, oi), Role::Head));
        queue.push_back((dart(x, 4 - oi), Role::Tail));
        propagate(&mut queue, &mut role, &mut over_in)?;
    }

    // Strand succession and component cycles.
    let mut succ: Vec<Option<ArcId>> = vec![None; labels.len()];
    for x in 0..n {
        let oi = over_in[x].unwrap() as usize;
        let pairs = [(0usize, 2usize), (oi, 4 - oi)];
        for (si, so) in pairs {
            let from = arc_index[&pd.crossings[x][si]];
            let to = arc_index[&pd.crossings[x][so]];
            if succ[from].is_some() {
                return Err(Error::InconsistentOrientation {
                    details: format!("arc {} has two strand successors", labels[from]),
                });
            }
            succ[from] = Some(to);
        }
    }
    let succ: Vec<ArcId> = succ
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::InconsistentOrientation {
            details: "an arc has no strand successor".into(),
        })?;

    let mut component_of: Vec<Option<usize>> = vec![None; labels.len()];
    let mut components: Vec<Vec<ArcId>> = Vec::new();
    for start in 0..labels.len() {
        if component_of[start].is_some() {
            continue;
        }
        let id = components.len();
        let mut cycle = Vec::new();
        let mut a = start;
        loop {
            if component_of[a].is_some() {
                return Err(Error::InconsistentOrientation {
                    details: "strand succession is not a disjoint union of cycles".into(),
                });
            }
            component_of[a] = Some(id);
            cycle.push(a);
            a = succ[a];
            if a == start {
                break;
            }
        }
        components.push(cycle);
    }
    // The succession must agree with ascending labels, cyclically within each
    // component's label set.
    for cycle in &components {
        let mut sorted: Vec<u32> = cycle.iter().map(|&a| labels[a]).collect();
        sorted.sort_unstable();
        for &a in cycle {
            let l = labels[a];
            let pos = sorted.binary_search(&l).unwrap();
            let expected = sorted[(pos + 1) % sorted.len()];
            if labels[succ[a]] != expected {
                return Err(Error::InconsistentOrientation {
                    details: format!(
                        "arc {} is followed by {}, expected {} from the label order",
                        l, labels[succ[a]], expected
                    ),
                });
            }
        }
    }

    // Heads and tails per arc.
    let mut arcs: Vec<Arc> = Vec::with_capacity(labels.len());
    for (i, &l) in labels.iter().enumerate() {
        let es = &ends[i];
        let role_of = |d: Dart| -> Role {
            let s = slot_of(d);
            let x = crossing_of(d);
            match s {
                0 => Role::Head,
                2 => Role::Tail,
                s if over_in[x] == Some(s) => Role::Head,
                _ => Role::Tail,
            }
        };
        let (r0, r1) = (role_of(es[0]), role_of(es[1]));
        if r0 == r1 {
            return Err(Error::InconsistentOrientation {
                details: format!("arc {l} has two {:?} ends", r0),
            });
        }
        let (tail, head) = if r0 == Role::Tail { (es[0], es[1]) } else { (es[1], es[0]) };
        arcs.push(Arc { label: l, tail, head, component: component_of[i].unwrap() });
    }

    let crossings: Vec<Crossing> = pd
        .crossings
        .iter()
        .enumerate()
        .map(|(x, &tuple)| {
            let oi = over_in[x].unwrap();
            Crossing {
                tuple,
                arcs: [
                    arc_index[&tuple[0]],
                    arc_index[&tuple[1]],
                    arc_index[&tuple[2]],
                    arc_index[&tuple[3]],
                ],
                over_in_slot: oi,
                sign: if oi == 3 { Sign::Positive } else { Sign::Negative },
            }
        })
        .collect();

    // Faces: orbits of sigma . alpha over darts.
    let mut face_of_dart: Vec<Option<FaceId>> = vec![None; 4 * n];
    let mut faces: Vec<Face> = Vec::new();
    for start in 0..4 * n {
        if face_of_dart[start].is_some() {
            continue;
        }
        let id = faces.len();
        let mut darts = Vec::new();
        let mut d = start;
        loop {
            face_of_dart[d] = Some(id);
            darts.push(d);
            let a = alpha(d);
            d = dart(crossing_of(a), (slot_of(a) + 1) % 4);
            if d == start {
                break;
            }
        }
        faces.push(Face { darts });
    }
    let face_of_dart: Vec<FaceId> = face_of_dart.into_iter().map(Option::unwrap).collect();

    // Connectivity of the underlying 4-valent graph.
    let mut uf = UnionFind::new(n);
    for a in &arcs {
        uf.union(crossing_of(a.tail), crossing_of(a.head));
    }
    let graph_components = uf.count();

    // Euler check: each connected piece drawn on the sphere contributes
    // V_i - E_i + F_i = 2, so with E = 2V in total, F = V + 2k.
    let expected_faces = n + 2 * graph_components;
    if faces.len() != expected_faces {
        return Err(Error::NonPlanar {
            details: format!(
                "V={}, E={}, F={} with {} connected component(s); expected F={}",
                n,
                2 * n,
                faces.len(),
                graph_components,
                expected_faces
            ),
        });
    }

    Ok(Diagram {
        crossings,
        arcs,
        faces,
        face_of_dart,
        components,
        closed_loops: 0,
        graph_components,
    })
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }

    pub fn count(&mut self) -> usize {
        let n = self.parent.len();
        (0..n).filter(|&i| self.find(i) == i).count()
    }
}
