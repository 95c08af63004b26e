//! Matrix-level predictions for crossing virtualization.
//!
//! Rerouting one crossing `a_n` through a handle flips its sign in the
//! code. At the invariant level the new matrix is determined by how often
//! each smoothing loop `D_{a_i}` runs through the reworked crossing: not at
//! all, twice (once along each strand), or once with a definite crossing
//! sign. The predictions below are checked cell-for-cell against direct
//! recomputation of the sign-flipped code; that cross-check is what
//! licenses modeling virtualization as a sign flip in the first place.

use crate::gauss::{CodeError, SignedGaussCode};
use crate::skewmat::{code_matrix, s_equivalent, AugSkewMatrix};
use serde::Serialize;
use thiserror::Error;

/// How `D_{a_i}` meets the virtualized crossing: the occurrence multiset of
/// `a_n` in the crossing list of `D_{a_i}` against the diagram.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum CrossingProfile {
    /// The loop avoids the crossing.
    Empty,
    /// The loop runs through it along both strands; the two passes carry
    /// opposite signs.
    Both,
    /// The loop runs through it once, crossing the other strand with this
    /// sign.
    Single { sign: i64 },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VirtualizeError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("profile set does not match the matrix dimension")]
    ProfileMismatch,
    #[error("code is not planar; the block-form check applies to planar codes only")]
    NotPlanar,
}

/// Classify every crossing `a_i != a_n` by how `D_{a_i}` meets `a_n`.
/// Returned in label-id order, with `None` at the virtualized index.
pub fn profiles(
    code: &SignedGaussCode,
    label: &str,
) -> Result<Vec<Option<CrossingProfile>>, CodeError> {
    let k = code
        .label_id(label)
        .ok_or_else(|| CodeError::UnknownLabel {
            label: label.to_string(),
        })?;
    let [first_n, _] = code.occurrences(k);
    let eps_n = code.sign(k).value();
    let n = code.crossing_count();
    let mut out = vec![None; n];
    for i in 0..n as u32 {
        if i == k {
            continue;
        }
        let (contains_first, contains_second) = interval_contains(code, i, k, first_n);
        let profile = match (contains_first, contains_second) {
            (false, false) => CrossingProfile::Empty,
            (true, true) => CrossingProfile::Both,
            (first, _) => {
                let eta = if first { 1 } else { -1 };
                CrossingProfile::Single { sign: eta * eps_n }
            }
        };
        out[i as usize] = Some(profile);
    }
    Ok(out)
}

/// Whether the interior of `D_{a_i}`'s interval contains the first resp.
/// second occurrence of crossing `k`.
fn interval_contains(
    code: &SignedGaussCode,
    i: u32,
    k: u32,
    first_k: usize,
) -> (bool, bool) {
    let [p, q] = code.occurrences(i);
    let l = code.word_len();
    let (from, to) = match code.sign(i) {
        crate::gauss::Sign::Plus => (p, q),
        crate::gauss::Sign::Minus => (q, p),
    };
    let mut contains_first = false;
    let mut contains_second = false;
    let mut pos = (from + 1) % l;
    while pos != to {
        if code.at(pos) == k {
            if pos == first_k {
                contains_first = true;
            } else {
                contains_second = true;
            }
        }
        pos = (pos + 1) % l;
    }
    (contains_first, contains_second)
}

/// Predicted augmentation column after virtualizing index `k`:
/// unchanged for empty/both profiles, shifted by `-2 sign` for single
/// profiles, negated at `k` itself.
pub fn predict_alpha(
    m: &AugSkewMatrix,
    profiles: &[Option<CrossingProfile>],
    k: usize,
) -> Result<Vec<i64>, VirtualizeError> {
    let n = m.dim();
    if profiles.len() != n || k >= n || profiles[k].is_some() {
        return Err(VirtualizeError::ProfileMismatch);
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let v = if i == k {
            -m.aug(i)
        } else {
            match profiles[i].unwrap() {
                CrossingProfile::Single { sign } => m.aug(i) - 2 * sign,
                _ => m.aug(i),
            }
        };
        out.push(v);
    }
    Ok(out)
}

/// Strand-membership bits of a profile: whether the loop uses the first
/// resp. second visit strand of the virtualized crossing.
fn strand_bits(profile: CrossingProfile, eps_n: i64) -> (i64, i64) {
    match profile {
        CrossingProfile::Empty => (0, 0),
        CrossingProfile::Both => (1, 1),
        CrossingProfile::Single { sign } => {
            if sign == eps_n {
                (1, 0)
            } else {
                (0, 1)
            }
        }
    }
}

/// Predicted pairing block after virtualizing index `k`. Off the `k` row
/// and column the entry moves by `-2 eps_n (c1_i c2_j - c2_i c1_j)` where
/// `(c1, c2)` are the strand bits; this is the condensed form of the
/// per-case table (empty rows unchanged, both-against-single shifts by
/// twice the single's sign, opposite singles shift by twice the row's
/// sign). The `k` column is the pairing against the swapped smoothing loop:
/// `A[i] - B[i][k]`, with an extra `-sign` for single profiles.
pub fn predict_beta(
    m: &AugSkewMatrix,
    profiles: &[Option<CrossingProfile>],
    k: usize,
    eps_n: i64,
) -> Result<Vec<i64>, VirtualizeError> {
    let n = m.dim();
    if profiles.len() != n || k >= n || profiles[k].is_some() {
        return Err(VirtualizeError::ProfileMismatch);
    }
    let mut b = vec![0i64; n * n];
    for i in 0..n {
        if i == k {
            continue;
        }
        let (c1_i, c2_i) = strand_bits(profiles[i].unwrap(), eps_n);
        for j in 0..n {
            if j == k || j == i {
                continue;
            }
            let (c1_j, c2_j) = strand_bits(profiles[j].unwrap(), eps_n);
            let delta = -2 * eps_n * (c1_i * c2_j - c2_i * c1_j);
            b[i * n + j] = m.get(i, j) + delta;
        }
        let correction = match profiles[i].unwrap() {
            CrossingProfile::Single { sign } => sign,
            _ => 0,
        };
        let col = m.aug(i) - m.get(i, k) - correction;
        b[i * n + k] = col;
        b[k * n + i] = -col;
    }
    Ok(b)
}

/// The full predicted matrix of `virtualize(code, label)`.
pub fn predict_matrix(
    code: &SignedGaussCode,
    label: &str,
) -> Result<AugSkewMatrix, VirtualizeError> {
    let k = code
        .label_id(label)
        .ok_or_else(|| CodeError::UnknownLabel {
            label: label.to_string(),
        })? as usize;
    let m = code_matrix(code);
    let profiles = profiles(code, label)?;
    let eps_n = code.sign(k as u32).value();
    let a = predict_alpha(&m, &profiles, k)?;
    let b = predict_beta(&m, &profiles, k, eps_n)?;
    AugSkewMatrix::new(m.dim(), b, a).map_err(|_| VirtualizeError::ProfileMismatch)
}

/// Block-form report for one virtualized crossing of a planar code.
#[derive(Clone, Debug, Serialize)]
pub struct CrossingShapeReport {
    pub crossing: String,
    /// Count of single profiles with positive sign.
    pub k_positive: usize,
    /// Count of single profiles with negative sign.
    pub m_negative: usize,
    pub template_matches: bool,
    /// `Some(true)` when `k == m` and the virtualized matrix is
    /// S-equivalent to the empty matrix; `None` when `k != m`.
    pub balanced_trivial: Option<bool>,
}

/// Block-form report for every crossing of a planar code.
#[derive(Clone, Debug, Serialize)]
pub struct CorollaryReport {
    pub crossings: Vec<CrossingShapeReport>,
}

impl CorollaryReport {
    pub fn all_hold(&self) -> bool {
        self.crossings
            .iter()
            .all(|c| c.template_matches && c.balanced_trivial != Some(false))
    }
}

/// Check the block template of the virtualized matrix of a planar code, for
/// every crossing: singles with positive sign pair to `-2` against singles
/// with negative sign, the `a_n` column carries `-sign`, the augmentation
/// `-2 sign`; crossings the loop avoids give zero rows and both-strand
/// crossings give columns equal to the augmentation (both are then
/// reducible), and a balanced split (`k = m`) collapses the whole matrix to
/// the empty class.
pub fn corollary_shape_check(code: &SignedGaussCode) -> Result<CorollaryReport, VirtualizeError> {
    if !crate::surface::is_planar(code) {
        return Err(VirtualizeError::NotPlanar);
    }
    let n = code.crossing_count();
    let mut crossings = Vec::with_capacity(n);
    for k in 0..n {
        let label = code.label_name(k as u32).to_string();
        let profs = profiles(code, &label)?;
        let virt = code.virtualize(&label)?;
        let m = code_matrix(&virt);
        let mut k_pos = 0usize;
        let mut m_neg = 0usize;
        for p in profs.iter().flatten() {
            if let CrossingProfile::Single { sign } = p {
                if *sign > 0 {
                    k_pos += 1;
                } else {
                    m_neg += 1;
                }
            }
        }
        let template_matches = template_holds(&m, &profs, k);
        let balanced_trivial = if k_pos == m_neg {
            Some(s_equivalent(&m, &AugSkewMatrix::empty()))
        } else {
            None
        };
        crossings.push(CrossingShapeReport {
            crossing: label,
            k_positive: k_pos,
            m_negative: m_neg,
            template_matches,
            balanced_trivial,
        });
    }
    Ok(CorollaryReport { crossings })
}

fn template_holds(m: &AugSkewMatrix, profiles: &[Option<CrossingProfile>], k: usize) -> bool {
    let n = m.dim();
    let single_sign = |i: usize| -> Option<i64> {
        match profiles[i] {
            Some(CrossingProfile::Single { sign }) => Some(sign),
            _ => None,
        }
    };
    // a_n row/column and augmentation
    if m.aug(k) != 0 {
        return false;
    }
    for i in 0..n {
        if i == k {
            continue;
        }
        match profiles[i].unwrap() {
            CrossingProfile::Single { sign } => {
                if m.aug(i) != -2 * sign || m.get(i, k) != -sign {
                    return false;
                }
            }
            CrossingProfile::Empty => {
                // fully zero row
                if m.aug(i) != 0 || (0..n).any(|j| m.get(i, j) != 0) {
                    return false;
                }
            }
            CrossingProfile::Both => {
                // column equals the augmentation: a removable shape
                if m.aug(i) != 0 || (0..n).any(|r| m.get(r, i) != m.aug(r)) {
                    return false;
                }
            }
        }
    }
    // the displayed block on the single-profile crossings
    for i in 0..n {
        let si = match single_sign(i) {
            Some(s) => s,
            None => continue,
        };
        for j in 0..n {
            let sj = match single_sign(j) {
                Some(s) => s,
                None => continue,
            };
            let expected = if i == j {
                0
            } else if si == sj {
                0
            } else if si > 0 {
                -2
            } else {
                2
            };
            if m.get(i, j) != expected {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::SignedGaussCode;
    use crate::skewmat::code_matrix;
    use rand::{Rng, SeedableRng};

    fn code(text: &str) -> SignedGaussCode {
        SignedGaussCode::parse(text).unwrap()
    }

    #[test]
    fn profile_cases() {
        // interleaved: single
        let c = code("a b a b | a=+1, b=+1");
        let p = profiles(&c, "b").unwrap();
        assert_eq!(p[0], Some(CrossingProfile::Single { sign: 1 }));
        assert_eq!(p[1], None);

        // nested inside the selected interval: both
        let c = code("a b b a | a=+1, b=+1");
        let p = profiles(&c, "b").unwrap();
        assert_eq!(p[0], Some(CrossingProfile::Both));

        // nested outside: empty
        let c = code("a b b a | a=-1, b=+1");
        let p = profiles(&c, "b").unwrap();
        assert_eq!(p[0], Some(CrossingProfile::Empty));
    }

    #[test]
    fn alpha_prediction_example() {
        let c = code("a b a b | a=+1, b=+1");
        let m = code_matrix(&c);
        let p = profiles(&c, "b").unwrap();
        let a2 = predict_alpha(&m, &p, 1).unwrap();
        // single with sign +1 at a: alpha drops by 2; negated at b
        assert_eq!(a2, vec![m.aug(0) - 2, -m.aug(1)]);
    }

    #[test]
    fn prediction_matches_recomputation_small() {
        let c = code("a b a b | a=+1, b=+1");
        for label in ["a", "b"] {
            let predicted = predict_matrix(&c, label).unwrap();
            let recomputed = code_matrix(&c.virtualize(label).unwrap());
            assert_eq!(predicted, recomputed);
        }
    }

    #[test]
    fn prediction_matches_recomputation_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..60 {
            let n = rng.gen_range(1..=6);
            let c = crate::corpus::random_code(&mut rng, n);
            for id in 0..n {
                let label = c.label_name(id as u32).to_string();
                let predicted = predict_matrix(&c, &label).unwrap();
                let recomputed = code_matrix(&c.virtualize(&label).unwrap());
                assert_eq!(predicted, recomputed, "code {c} at {label}");
            }
        }
    }

    #[test]
    fn prediction_is_involutive() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(43);
        for _ in 0..20 {
            let n = rng.gen_range(1..=5);
            let c = crate::corpus::random_code(&mut rng, n);
            for id in 0..n {
                let label = c.label_name(id as u32).to_string();
                let once = c.virtualize(&label).unwrap();
                let twice_predicted = predict_matrix(&once, &label).unwrap();
                assert_eq!(twice_predicted, code_matrix(&c), "code {c} at {label}");
            }
        }
    }

    #[test]
    fn monogon_corollary() {
        let report = corollary_shape_check(&code("a a | a=+1")).unwrap();
        assert!(report.all_hold());
        assert_eq!(report.crossings[0].k_positive, 0);
        assert_eq!(report.crossings[0].m_negative, 0);
        assert_eq!(report.crossings[0].balanced_trivial, Some(true));
    }

    #[test]
    fn planar_trefoil_corollary() {
        let report = corollary_shape_check(&code("a b c a b c | a=+1, b=-1, c=+1")).unwrap();
        assert!(report.all_hold(), "{report:?}");
    }

    #[test]
    fn corollary_rejects_nonplanar() {
        assert_eq!(
            corollary_shape_check(&code("a b a b | a=+1, b=+1")).unwrap_err(),
            VirtualizeError::NotPlanar
        );
    }
}
