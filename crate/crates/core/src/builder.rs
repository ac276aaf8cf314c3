//! Abstract crossing maps and canonical PD emission.
//!
//! A map is a set of crossings, each with four ports numbered counterclockwise,
//! and an involution pairing ports into arcs. The under-strand always runs
//! through ports 0 and 2, the over-strand through 1 and 3; which even or odd
//! port a strand *enters* is decided later by a direction assignment. Emission
//! walks every strand, labels arcs ascending, and produces a PD code whose
//! orientation data reproduces the map exactly.
//!
//! This is the shared back end for the diagram constructors (twist regions,
//! pretzels, medial diagrams) and for crossing-smoothing surgery.

use crate::diagram::{dart, slot_of, Dart, Diagram, Sign};
use crate::error::{Error, Result};
use crate::pd::{CrossingTuple, PdCode};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Default)]
pub struct MapBuilder {
    /// `partner[4c + p]` is the port wired to port `p` of crossing `c`.
    partner: Vec<Option<Dart>>,
}

impl MapBuilder {
    pub fn new() -> Self {
        MapBuilder::default()
    }

    pub fn crossing_count(&self) -> usize {
        self.partner.len() / 4
    }

    pub fn add_crossing(&mut self) -> usize {
        let id = self.crossing_count();
        self.partner.extend([None, None, None, None]);
        id
    }

    pub fn connect(&mut self, a: (usize, u8), b: (usize, u8)) {
        let da = dart(a.0, a.1);
        let db = dart(b.0, b.1);
        assert!(self.partner[da].is_none(), "port {a:?} already wired");
        assert!(self.partner[db].is_none(), "port {b:?} already wired");
        assert_ne!(da, db, "cannot wire a port to itself");
        self.partner[da] = Some(db);
        self.partner[db] = Some(da);
    }

    /// Emits a PD code: arcs labeled ascending along each strand, components
    /// ordered and directed deterministically. `entry_hints` lists ports the
    /// strand must *enter*; at most one hint is needed per component and
    /// conflicting hints panic (they indicate a caller bug).
    pub fn emit(&self, entry_hints: &[(usize, u8)]) -> Result<PdCode> {
        let n = self.crossing_count();
        if n == 0 {
            return Err(Error::EmptyCode);
        }
        let partner: Vec<Dart> = self
            .partner
            .iter()
            .enumerate()
            .map(|(d, p)| p.unwrap_or_else(|| panic!("port {}.{} left dangling", d / 4, d % 4)))
            .collect();

        let rot2 = |d: Dart| 4 * (d / 4) + (d % 4 + 2) % 4;

        // Partition darts into strand components and 2-color each into the two
        // possible direction classes: crossing traversal flips in/out, and
        // following an arc from its out-end reaches an in-end.
        let mut comp = vec![usize::MAX; 4 * n];
        let mut is_in = vec![false; 4 * n];
        let mut comps = 0usize;
        for start in 0..4 * n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = comps;
            comps += 1;
            let mut stack = vec![(start, true)];
            while let Some((d, flag)) = stack.pop() {
                if comp[d] != usize::MAX {
                    debug_assert_eq!(is_in[d], flag, "direction classes are consistent");
                    continue;
                }
                comp[d] = id;
                is_in[d] = flag;
                stack.push((rot2(d), !flag));
                stack.push((partner[d], !flag));
            }
        }

        // Flip components so every hint port is an entry.
        let mut flip = vec![false; comps];
        let mut hinted = vec![false; comps];
        for &(c, p) in entry_hints {
            let d = dart(c, p);
            let want_flip = !is_in[d];
            if hinted[comp[d]] {
                assert_eq!(flip[comp[d]], want_flip, "conflicting direction hints");
            } else {
                hinted[comp[d]] = true;
                flip[comp[d]] = want_flip;
            }
        }
        let is_in: Vec<bool> = is_in
            .iter()
            .enumerate()
            .map(|(d, &b)| b != flip[comp[d]])
            .collect();

        // Walk each component from its lowest entry dart, labeling arcs.
        let mut label_of_dart = vec![0u32; 4 * n];
        let mut next_label = 1u32;
        let mut seen = vec![false; comps];
        for start in 0..4 * n {
            if !is_in[start] || seen[comp[start]] {
                continue;
            }
            seen[comp[start]] = true;
            let mut d = start;
            loop {
                let out = rot2(d);
                label_of_dart[out] = next_label;
                label_of_dart[partner[out]] = next_label;
                next_label += 1;
                d = partner[out];
                if d == start {
                    break;
                }
            }
        }

        let tuples: Vec<CrossingTuple> = (0..n)
            .map(|c| {
                let under_in = if is_in[dart(c, 0)] { 0 } else { 2 };
                debug_assert!(!is_in[dart(c, (under_in + 2) % 4)]);
                [0, 1, 2, 3].map(|k| label_of_dart[dart(c, (under_in + k) % 4)])
            })
            .collect();
        PdCode::new(tuples)
    }
}

/// Applies the orientation-coherent smoothing to a set of crossings and drops
/// any resulting crossing-free loops. Returns the surgered diagram and the
/// number of dropped loops.
pub fn smooth_crossings(d: &Diagram, smoothed: &BTreeSet<usize>) -> Result<(Diagram, usize)> {
    let n = d.crossing_count();
    for &x in smoothed {
        assert!(x < n, "crossing {x} out of range");
    }
    let kept: Vec<usize> = (0..n).filter(|x| !smoothed.contains(x)).collect();
    let new_id: Vec<Option<usize>> = {
        let mut v = vec![None; n];
        for (i, &x) in kept.iter().enumerate() {
            v[x] = Some(i);
        }
        v
    };

    // At a smoothed crossing the strand is rerouted along the Seifert
    // smoothing: the two strands that crossed become two parallel arcs.
    let smooth_exit = |x: usize, s: u8| -> u8 {
        match (d.crossings()[x].sign, s) {
            (Sign::Positive, 0) => 1,
            (Sign::Positive, 1) => 0,
            (Sign::Positive, 2) => 3,
            (Sign::Positive, 3) => 2,
            (Sign::Negative, 0) => 3,
            (Sign::Negative, 3) => 0,
            (Sign::Negative, 1) => 2,
            (Sign::Negative, 2) => 1,
            _ => unreachable!(),
        }
    };

    // Follow an arc away from `from`, rerouting through smoothed crossings,
    // until a kept crossing's port is reached; marks traversed smoothed darts.
    let mut visited = vec![false; 4 * n];
    let mut follow = |from: Dart| -> Option<Dart> {
        let mut e = d.alpha(from);
        loop {
            let x = e / 4;
            if new_id[x].is_some() {
                return Some(e);
            }
            if visited[e] {
                return None; // closed loop through smoothed crossings only
            }
            visited[e] = true;
            let exit = dart(x, smooth_exit(x, slot_of(e)));
            visited[exit] = true;
            e = d.alpha(exit);
        }
    };

    let mut mb = MapBuilder::new();
    for _ in 0..kept.len() {
        mb.add_crossing();
    }
    let mut wired = vec![false; 4 * n];
    for &x in &kept {
        for s in 0..4u8 {
            let from = dart(x, s);
            if wired[from] {
                continue;
            }
            let to = follow(from).expect("a walk from a kept crossing ends at a kept crossing");
            wired[from] = true;
            wired[to] = true;
            mb.connect(
                (new_id[x].unwrap(), s),
                (new_id[to / 4].unwrap(), slot_of(to)),
            );
        }
    }

    // Count dropped loops: unvisited smoothed-crossing darts trace free circles.
    let mut loops = 0usize;
    for &x in smoothed {
        for s in 0..4u8 {
            let start = dart(x, s);
            if visited[start] || wired[start] {
                continue;
            }
            loops += 1;
            let mut e = start;
            loop {
                visited[e] = true;
                let exit = dart(e / 4, smooth_exit(e / 4, slot_of(e)));
                visited[exit] = true;
                e = d.alpha(exit);
                if e == start {
                    break;
                }
            }
        }
    }

    if kept.is_empty() {
        if loops == 1 {
            return Ok((Diagram::unknot(), 0));
        }
        return Err(Error::PreconditionFailed {
            details: format!("smoothing left {loops} disjoint loops and no crossings"),
        });
    }

    // Entering ports keep their roles, so every kept crossing provides hints.
    let hints: Vec<(usize, u8)> = kept
        .iter()
        .flat_map(|&x| {
            let oi = d.crossings()[x].over_in_slot;
            let nx = new_id[x].unwrap();
            [(nx, 0u8), (nx, oi)]
        })
        .collect();
    let pd = mb.emit(&hints)?;
    Ok((Diagram::from_pd(&pd)?, loops))
}
