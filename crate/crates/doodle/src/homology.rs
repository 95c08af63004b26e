//! Primitive smoothing loops and homology intersection pairings.
//!
//! Smoothing the diagram at a crossing splits it into two closed loops, one
//! per cyclic interval between the crossing's occurrences. The left-turn
//! loop `D_a` is the first-to-second interval when the sign is `+1` and the
//! complementary interval otherwise; `D̃_a` is the other loop, and in
//! homology `D = D_a + D̃_a`.
//!
//! Pairings are computed two ways. `pairing_interval` is the fast formula
//! for `<phi_a, phi_D>`: over crossings with exactly one occurrence inside
//! `D_a`'s interval, add the crossing sign, negated when the inside
//! occurrence is the second visit. `pairing_pushoff` is the general oracle:
//! push the first loop off to its left everywhere; along shared edges the
//! copies stay parallel, so signed crossings arise only inside vertex disks,
//! where both strands become chords on an eight-position circle (half-edge
//! ends at even positions, corners at odd ones) and cross iff their
//! endpoints interleave.

use crate::gauss::{CodeError, Sign, SignedGaussCode};
use crate::surface::{head_end, tail_end, RotationSystem};
use thiserror::Error;

/// Which construction produced a loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoopOrigin {
    /// The full diagram walk.
    Full,
    /// Left-turn smoothing `D_a` at the given label id.
    Left(u32),
    /// Right-turn smoothing `D̃_a`.
    Right(u32),
}

/// A closed edge walk in the rotation system; edges are always traversed in
/// the diagram's direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopWalk {
    edges: Vec<usize>,
    origin: LoopOrigin,
}

impl LoopWalk {
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn origin(&self) -> &LoopOrigin {
        &self.origin
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairingError {
    #[error("walk edge {edge} is not part of the rotation system")]
    EdgeOutOfRange { edge: usize },
    #[error("walk is not connected at step {step}")]
    Disconnected { step: usize },
}

/// The full diagram as a closed walk: every edge once, in word order.
pub fn d_walk(code: &SignedGaussCode) -> LoopWalk {
    LoopWalk {
        edges: (0..code.word_len()).collect(),
        origin: LoopOrigin::Full,
    }
}

fn interval_edges(from: usize, to: usize, l: usize) -> Vec<usize> {
    // edges from occurrence `from` up to (but excluding) occurrence `to`
    let mut edges = Vec::new();
    let mut e = from;
    loop {
        edges.push(e);
        e = (e + 1) % l;
        if e == to {
            break;
        }
    }
    edges
}

/// The two smoothed loops at `label`: `(D_a, D̃_a)`. Swapping the crossing
/// sign swaps the two loops.
pub fn primitive_loops(
    code: &SignedGaussCode,
    label: &str,
) -> Result<(LoopWalk, LoopWalk), CodeError> {
    let id = code
        .label_id(label)
        .ok_or_else(|| CodeError::UnknownLabel {
            label: label.to_string(),
        })?;
    let [p, q] = code.occurrences(id);
    let l = code.word_len();
    let first = interval_edges(p, q, l);
    let second = interval_edges(q, p, l);
    let (left, right) = match code.sign(id) {
        Sign::Plus => (first, second),
        Sign::Minus => (second, first),
    };
    Ok((
        LoopWalk {
            edges: left,
            origin: LoopOrigin::Left(id),
        },
        LoopWalk {
            edges: right,
            origin: LoopOrigin::Right(id),
        },
    ))
}

/// Word positions strictly inside `D_a`'s interval.
fn interval_interior(code: &SignedGaussCode, id: u32) -> Vec<usize> {
    let [p, q] = code.occurrences(id);
    let l = code.word_len();
    let (from, to) = match code.sign(id) {
        Sign::Plus => (p, q),
        Sign::Minus => (q, p),
    };
    let mut out = Vec::new();
    let mut pos = (from + 1) % l;
    while pos != to {
        out.push(pos);
        pos = (pos + 1) % l;
    }
    out
}

/// Fast formula for `<phi_a, phi_D>`.
pub fn pairing_interval(code: &SignedGaussCode, label: &str) -> Result<i64, CodeError> {
    let id = code
        .label_id(label)
        .ok_or_else(|| CodeError::UnknownLabel {
            label: label.to_string(),
        })?;
    let mut inside = vec![0u8; code.crossing_count()];
    let mut first_inside = vec![false; code.crossing_count()];
    for pos in interval_interior(code, id) {
        let b = code.at(pos);
        inside[b as usize] += 1;
        if pos == code.occurrences(b)[0] {
            first_inside[b as usize] = true;
        }
    }
    let mut sum = 0i64;
    for b in 0..code.crossing_count() {
        if b as u32 == id || inside[b] != 1 {
            continue;
        }
        let eta = if first_inside[b] { 1 } else { -1 };
        sum += eta * code.sign(b as u32).value();
    }
    Ok(sum)
}

struct Transit {
    vertex: u32,
    in_end: usize,
    out_end: usize,
}

fn transits(
    code: &SignedGaussCode,
    rs: &RotationSystem,
    walk: &LoopWalk,
) -> Result<Vec<Transit>, PairingError> {
    let l = code.word_len();
    let edges = walk.edges();
    let mut out = Vec::with_capacity(edges.len());
    for (step, &e) in edges.iter().enumerate() {
        if e >= rs.edge_count() {
            return Err(PairingError::EdgeOutOfRange { edge: e });
        }
        let next = edges[(step + 1) % edges.len()];
        let head_vertex = code.at((e + 1) % l);
        let tail_vertex = code.at(next);
        if head_vertex != tail_vertex {
            return Err(PairingError::Disconnected { step });
        }
        out.push(Transit {
            vertex: head_vertex,
            in_end: head_end(e),
            out_end: tail_end(next),
        });
    }
    Ok(out)
}

/// Signed crossing contribution of one pushed-off transit of `u` against one
/// transit of `v` inside a vertex disk.
///
/// Half-edge ends sit at even circle positions `2*idx`, the corner between
/// rotation indices `i` and `i+1` at `2*i+1`. The left push-off of a transit
/// enters at the clockwise corner of its in-end and exits at the
/// counterclockwise corner of its out-end; a left turn collapses to a corner
/// and crosses nothing. Chords cross iff their endpoints interleave, with
/// the sign read from which arc of the pushed chord the other strand enters.
fn chord_contribution(rs: &RotationSystem, u: &Transit, v: &Transit) -> i64 {
    let (_, in_u) = rs.end_position(u.in_end);
    let (_, out_u) = rs.end_position(u.out_end);
    let p1 = 2 * ((in_u as usize + 3) % 4) + 1;
    let q1 = 2 * out_u as usize + 1;
    if p1 == q1 {
        return 0;
    }
    let (_, in_v) = rs.end_position(v.in_end);
    let (_, out_v) = rs.end_position(v.out_end);
    let p2 = 2 * in_v as usize;
    let q2 = 2 * out_v as usize;
    let arc = (q1 + 8 - p1) % 8;
    let inside = |x: usize| -> bool {
        let d = (x + 8 - p1) % 8;
        0 < d && d < arc
    };
    match (inside(p2), inside(q2)) {
        (true, false) => -1,
        (false, true) => 1,
        _ => 0,
    }
}

/// General pairing oracle `<phi_u, phi_v>`: `u` pushed off to its left.
pub fn pairing_pushoff(
    code: &SignedGaussCode,
    rs: &RotationSystem,
    u: &LoopWalk,
    v: &LoopWalk,
) -> Result<i64, PairingError> {
    if u.is_empty() || v.is_empty() {
        return Ok(0);
    }
    let ut = transits(code, rs, u)?;
    let vt = transits(code, rs, v)?;
    let mut by_vertex: Vec<Vec<&Transit>> = vec![Vec::new(); rs.crossings()];
    for t in &vt {
        by_vertex[t.vertex as usize].push(t);
    }
    let mut sum = 0;
    for tu in &ut {
        for tv in &by_vertex[tu.vertex as usize] {
            sum += chord_contribution(rs, tu, tv);
        }
    }
    Ok(sum)
}

/// Integer table of all pairings over the index set `{a_1..a_n, D}`; index
/// `n` is the full diagram class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingTable {
    n: usize,
    entries: Vec<i64>,
}

impl PairingTable {
    pub fn crossings(&self) -> usize {
        self.n
    }

    /// `<phi_x, phi_y>` with `x, y` in `0..=n`; index `n` stands for `D`.
    pub fn get(&self, x: usize, y: usize) -> i64 {
        self.entries[x * (self.n + 1) + y]
    }

    /// `<phi_{a_i}, phi_D>`.
    pub fn with_d(&self, i: usize) -> i64 {
        self.get(i, self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }
}

/// Complete pairing table of a code, via the push-off oracle.
pub fn pairing_table(code: &SignedGaussCode) -> PairingTable {
    let n = code.crossing_count();
    let rs = RotationSystem::build(code);
    let mut loops = Vec::with_capacity(n + 1);
    for id in 0..n {
        let name = code.label_name(id as u32).to_string();
        let (left, _) = primitive_loops(code, &name).expect("label exists");
        loops.push(left);
    }
    loops.push(d_walk(code));
    let mut entries = vec![0i64; (n + 1) * (n + 1)];
    for x in 0..=n {
        for y in (x + 1)..=n {
            let val = pairing_pushoff(code, &rs, &loops[x], &loops[y])
                .expect("loops are walks of the same system");
            entries[x * (n + 1) + y] = val;
            entries[y * (n + 1) + x] = -val;
        }
    }
    for x in 0..=n {
        let diag = pairing_pushoff(code, &rs, &loops[x], &loops[x])
            .expect("loops are walks of the same system");
        assert_eq!(diag, 0, "self-pairing must vanish: internal bug");
    }
    PairingTable { n, entries }
}

/// The `n x n` table of pairings between the right-turn loops `D̃_a`.
pub fn tilde_pairings(code: &SignedGaussCode) -> Vec<Vec<i64>> {
    let n = code.crossing_count();
    let rs = RotationSystem::build(code);
    let mut loops = Vec::with_capacity(n);
    for id in 0..n {
        let name = code.label_name(id as u32).to_string();
        let (_, right) = primitive_loops(code, &name).expect("label exists");
        loops.push(right);
    }
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let val = pairing_pushoff(code, &rs, &loops[i], &loops[j])
                .expect("loops are walks of the same system");
            out[i][j] = val;
            out[j][i] = -val;
        }
    }
    out
}

/// `<phi_x, phĩ_{a_j}>` for every `x` in `{a_1..a_n, D}` and every `j`;
/// used by the additivity and smoothing-identity checks.
pub fn mixed_tilde_pairings(code: &SignedGaussCode) -> Vec<Vec<i64>> {
    let n = code.crossing_count();
    let rs = RotationSystem::build(code);
    let mut left_loops = Vec::with_capacity(n + 1);
    let mut right_loops = Vec::with_capacity(n);
    for id in 0..n {
        let name = code.label_name(id as u32).to_string();
        let (left, right) = primitive_loops(code, &name).expect("label exists");
        left_loops.push(left);
        right_loops.push(right);
    }
    left_loops.push(d_walk(code));
    let mut out = vec![vec![0i64; n]; n + 1];
    for (x, lx) in left_loops.iter().enumerate() {
        for (j, rj) in right_loops.iter().enumerate() {
            out[x][j] = pairing_pushoff(code, &rs, lx, rj)
                .expect("loops are walks of the same system");
        }
    }
    out
}
