//! Signature via the Goeritz matrix with the Gordon-Litherland correction,
//! and the tau invariant of alternating knots.
//!
//! Checkerboard-color the faces, build the Goeritz form of the white faces,
//! and correct its signature by the writhe-like count of type II crossings.
//! For an alternating knot tau is determined by the signature.

use crate::diagram::{Diagram, FaceId};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Proper two-coloring of the faces; `true` marks the class of face 0
/// (white). Faces in arc-disjoint components default to black.
pub fn face_coloring(d: &Diagram) -> Result<Vec<bool>> {
    let n = d.face_count();
    let mut adj: Vec<Vec<FaceId>> = vec![Vec::new(); n];
    for arc in 0..d.arc_count() {
        let (l, r) = d.arc_sides(arc);
        adj[l].push(r);
        adj[r].push(l);
    }
    let mut color: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(start == 0);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            let c = color[f].unwrap();
            for &g in &adj[f] {
                match color[g] {
                    None => {
                        color[g] = Some(!c);
                        queue.push_back(g);
                    }
                    Some(cg) if cg == c => return Err(Error::ImproperColoring { a: f, b: g }),
                    _ => {}
                }
            }
        }
    }
    Ok(color.into_iter().map(|c| c.unwrap()).collect())
}

/// The Goeritz form of one color class, the incidence type of each crossing,
/// and the Gordon-Litherland correction term.
#[derive(Debug, Clone)]
pub struct GoeritzData {
    pub faces: Vec<FaceId>,
    /// Deleted form: the full matrix minus the last face's row and column.
    pub matrix: Vec<Vec<i64>>,
    pub correction: i64,
}

fn goeritz_for(d: &Diagram, is_white: &[bool]) -> GoeritzData {
    let faces: Vec<FaceId> = (0..d.face_count()).filter(|&f| is_white[f]).collect();
    let index: std::collections::BTreeMap<FaceId, usize> =
        faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let w = faces.len();
    let mut full = vec![vec![0i64; w]; w];
    let mut correction = 0i64;
    for (x, cr) in d.crossings().iter().enumerate() {
        let corner_colors: Vec<bool> = (0..4).map(|k| is_white[d.corner_face(x, k)]).collect();
        debug_assert_eq!(corner_colors[0], corner_colors[2]);
        debug_assert_eq!(corner_colors[1], corner_colors[3]);
        debug_assert_ne!(corner_colors[0], corner_colors[1]);
        let (eta, c1, c2) = if corner_colors[0] {
            (1i64, d.corner_face(x, 0), d.corner_face(x, 2))
        } else {
            (-1i64, d.corner_face(x, 1), d.corner_face(x, 3))
        };
        if eta * cr.sign.value() > 0 {
            correction += eta;
        }
        let (i, j) = (index[&c1], index[&c2]);
        if i != j {
            full[i][j] -= eta;
            full[j][i] -= eta;
        }
    }
    for i in 0..w {
        full[i][i] = -(0..w).filter(|&j| j != i).map(|j| full[i][j]).sum::<i64>();
    }
    let matrix: Vec<Vec<i64>> =
        full[..w - 1].iter().map(|row| row[..w - 1].to_vec()).collect();
    GoeritzData { faces, matrix, correction }
}

/// Signature of a symmetric integer matrix by congruence diagonalization
/// over the rationals.
pub fn symmetric_signature(matrix: &[Vec<i64>]) -> i64 {
    let n = matrix.len();
    let mut m: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
        .collect();
    let mut sig = 0i64;
    for k in 0..n {
        if m[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !m[j][j].is_zero()) {
                m.swap(k, j);
                for row in m.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some((i, j)) = (k..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !m[i][j].is_zero())
            {
                // Zero diagonal but m[i][j] != 0: fold row/col j into i.
                for t in 0..n {
                    let v = m[j][t].clone();
                    m[i][t] += v;
                }
                for t in 0..n {
                    let v = m[t][j].clone();
                    m[t][i] += v;
                }
                m.swap(k, i);
                for row in m.iter_mut() {
                    row.swap(k, i);
                }
            } else {
                break;
            }
        }
        let pivot = m[k][k].clone();
        sig += if pivot.is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &pivot;
            for t in k..n {
                let v = &m[k][t] * &f;
                m[i][t] -= v;
            }
            for t in k..n {
                let v = &m[t][k] * &f;
                m[t][i] -= v;
            }
        }
    }
    sig
}

fn integer_determinant(matrix: &[Vec<i64>]) -> i64 {
    use crate::poly::{bareiss_determinant, LaurentPoly};
    let rows: Vec<Vec<LaurentPoly>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| LaurentPoly::monomial(0, v)).collect())
        .collect();
    bareiss_determinant(&rows).coeff(0).to_i64().expect("determinant fits in i64")
}

/// Knot signature from either checkerboard surface; both sides are computed
/// and must agree.
pub fn signature(d: &Diagram) -> Result<i64> {
    let white = face_coloring(d)?;
    if d.crossing_count() == 0 {
        return Ok(0);
    }
    let wdata = goeritz_for(d, &white);
    let sigma_w = symmetric_signature(&wdata.matrix) - wdata.correction;
    let black: Vec<bool> = white.iter().map(|&b| !b).collect();
    let bdata = goeritz_for(d, &black);
    let sigma_b = symmetric_signature(&bdata.matrix) - bdata.correction;
    assert_eq!(sigma_w, sigma_b, "both checkerboard surfaces give the signature");
    Ok(sigma_w)
}

/// |det K| from the Goeritz form.
pub fn goeritz_determinant(d: &Diagram) -> Result<i64> {
    if d.crossing_count() == 0 {
        return Ok(1);
    }
    let white = face_coloring(d)?;
    Ok(integer_determinant(&goeritz_for(d, &white).matrix).abs())
}

/// For an alternating knot, tau = -sigma/2.
pub fn tau(d: &Diagram) -> Result<i64> {
    let sigma = signature(d)?;
    assert_eq!(sigma % 2, 0, "knot signatures are even");
    Ok(-sigma / 2)
}

/// Classical invariant panel of an alternating knot. The tau field is named
/// for its scope: -sigma/2 computes tau for alternating knots only.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct InvariantReport {
    pub genus: i64,
    pub fibered: bool,
    pub signature: i64,
    pub tau_alternating: i64,
    pub sqp_fibered: bool,
    pub determinant: i64,
}

pub fn invariant_report(d: &Diagram) -> Result<InvariantReport> {
    let a = crate::alexander::alexander_polynomial(d)?;
    let sigma = signature(d)?;
    let t = -sigma / 2;
    let genus = a.genus();
    assert!(t.abs() <= genus, "tau is bounded by the genus");
    Ok(InvariantReport {
        genus,
        fibered: a.is_fibered(),
        signature: sigma,
        tau_alternating: t,
        sqp_fibered: a.is_fibered() && t == genus,
        determinant: a.determinant(),
    })
}

/// Fibered and strongly quasipositive, detected as monic Delta plus tau = +g.
pub fn is_sqp_fibered(d: &Diagram) -> Result<bool> {
    Ok(invariant_report(d)?.sqp_fibered)
}
