//! Skew-symmetric augmented matrices and the invariant algebra: permutation
//! canonical forms, type-1/2 reductions, irreducible representatives, and
//! the classical-obstruction verdict.
//!
//! A matrix `(B | A)` pairs an `n x n` integer skew-symmetric block `B` with
//! an `n`-vector `A`. Two reductions shrink it:
//!
//! * type 1 removes index `j` when `A[j] = 0` and column `j` of `B` is zero
//!   or equals `A`;
//! * type 2 removes a pair `r, t` when `A[r] = -A[t]` and the columns `r`
//!   and `t` of `B` sum to `A`.
//!
//! Together with simultaneous permutations these generate S-equivalence;
//! every class has an irreducible representative, unique up to permutation,
//! so reducing greedily and canonicalizing decides the class.

use crate::gauss::SignedGaussCode;
use crate::homology::{pairing_table, PairingTable};
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("block is not skew-symmetric at ({i},{j})")]
    NotSkewSymmetric { i: usize, j: usize },
    #[error("dimension mismatch: matrix has n={n}, got {got}")]
    SizeMismatch { n: usize, got: usize },
    #[error("invalid permutation of length {len} for n={n}")]
    BadPermutation { len: usize, n: usize },
    #[error("bad matrix text: {0}")]
    Text(String),
}

/// An integer skew-symmetric matrix with an augmentation column, `(B | A)`.
/// `n = 0` is the empty augmented matrix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AugSkewMatrix {
    n: usize,
    b: Vec<i64>,
    a: Vec<i64>,
}

/// One replayable step of a reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum ReductionStep {
    /// Simultaneous permutation: new index `i` takes old index `perm[i]`.
    Permute { perm: Vec<usize> },
    /// Type-1 reduction at a column of the current matrix.
    Type1 { col: usize },
    /// Type-2 reduction at a column pair of the current matrix.
    Type2 { cols: (usize, usize) },
}

/// Ordered record of the steps that carried a matrix to its reduced form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    /// Re-apply the recorded steps; reproduces the reduction's output.
    pub fn replay(&self, source: &AugSkewMatrix) -> Result<AugSkewMatrix, MatrixError> {
        let mut m = source.clone();
        for step in &self.steps {
            m = match step {
                ReductionStep::Permute { perm } => m.permute(perm)?,
                ReductionStep::Type1 { col } => m.reduce_type1(*col),
                ReductionStep::Type2 { cols } => m.reduce_type2(cols.0, cols.1),
            };
        }
        Ok(m)
    }
}

/// Outcome of the obstruction test.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The invariant class is trivial; says nothing either way.
    TrivialClass,
    /// Nonempty irreducible representative: the doodle is not classical.
    NonClassicalObstruction,
}

impl AugSkewMatrix {
    pub fn empty() -> Self {
        AugSkewMatrix {
            n: 0,
            b: Vec::new(),
            a: Vec::new(),
        }
    }

    pub fn new(n: usize, b: Vec<i64>, a: Vec<i64>) -> Result<Self, MatrixError> {
        if b.len() != n * n {
            return Err(MatrixError::SizeMismatch { n, got: b.len() });
        }
        if a.len() != n {
            return Err(MatrixError::SizeMismatch { n, got: a.len() });
        }
        for i in 0..n {
            for j in 0..=i {
                if b[i * n + j] != -b[j * n + i] {
                    return Err(MatrixError::NotSkewSymmetric { i, j });
                }
            }
        }
        Ok(AugSkewMatrix { n, b, a })
    }

    /// `(beta | alpha)` of a pairing table: `B[i][j] = <phi_i, phi_j>`,
    /// `A[i] = <phi_i, phi_D>`.
    pub fn from_pairing_table(t: &PairingTable) -> Result<Self, MatrixError> {
        let n = t.crossings();
        let mut b = vec![0i64; n * n];
        let mut a = vec![0i64; n];
        for i in 0..n {
            a[i] = t.with_d(i);
            for j in 0..n {
                b[i * n + j] = t.get(i, j);
            }
        }
        Self::new(n, b, a)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.b[i * self.n + j]
    }

    pub fn aug(&self, i: usize) -> i64 {
        self.a[i]
    }

    pub fn is_zero(&self) -> bool {
        self.b.iter().all(|&x| x == 0) && self.a.iter().all(|&x| x == 0)
    }

    /// Simultaneous row/column permutation: new index `i` takes old index
    /// `perm[i]` (`B' = P B P^T`, `A' = P A`).
    pub fn permute(&self, perm: &[usize]) -> Result<Self, MatrixError> {
        let n = self.n;
        if perm.len() != n {
            return Err(MatrixError::BadPermutation { len: perm.len(), n });
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(MatrixError::BadPermutation { len: perm.len(), n });
            }
            seen[p] = true;
        }
        let mut b = vec![0i64; n * n];
        let mut a = vec![0i64; n];
        for i in 0..n {
            a[i] = self.a[perm[i]];
            for j in 0..n {
                b[i * n + j] = self.b[perm[i] * n + perm[j]];
            }
        }
        Ok(AugSkewMatrix { n, b, a })
    }

    fn key(&self) -> (&[i64], &[i64]) {
        (&self.b, &self.a)
    }

    /// Lexicographically least matrix over all simultaneous permutations
    /// (row-major on `B`, then `A`), with a witness permutation. Exhaustive
    /// for `n <= 8`, branch-and-bound above.
    pub fn canonical_form(&self) -> (Self, Vec<usize>) {
        let n = self.n;
        if n <= 1 {
            return (self.clone(), (0..n).collect());
        }
        if n <= 8 {
            let mut best: Option<(AugSkewMatrix, Vec<usize>)> = None;
            let mut perm: Vec<usize> = (0..n).collect();
            loop {
                let cand = self.permute(&perm).unwrap();
                match &best {
                    Some((b, _)) if cand.key() >= b.key() => {}
                    _ => best = Some((cand, perm.clone())),
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
            best.unwrap()
        } else {
            self.canonical_branch_and_bound()
        }
    }

    fn canonical_branch_and_bound(&self) -> (Self, Vec<usize>) {
        let n = self.n;
        // seed with the identity so there is always a bound to prune against
        let mut best = self.clone();
        let mut best_perm: Vec<usize> = (0..n).collect();
        let mut prefix: Vec<usize> = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.bnb(&mut prefix, &mut used, &mut best, &mut best_perm);
        (best, best_perm)
    }

    fn bnb(
        &self,
        prefix: &mut Vec<usize>,
        used: &mut Vec<bool>,
        best: &mut AugSkewMatrix,
        best_perm: &mut Vec<usize>,
    ) {
        let n = self.n;
        let k = prefix.len();
        if k == n {
            let cand = self.permute(prefix).unwrap();
            if cand.key() < best.key() {
                *best = cand;
                *best_perm = prefix.clone();
            }
            return;
        }
        // Sound prune: with k indices placed, row 0 of the candidate is
        // known on columns 0..k, which is a contiguous prefix of the
        // row-major key.
        if k > 1 {
            for j in 0..k {
                let cand = self.b[prefix[0] * n + prefix[j]];
                let bound = best.b[j];
                if cand < bound {
                    break;
                }
                if cand > bound {
                    return;
                }
            }
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            used[cand] = true;
            prefix.push(cand);
            self.bnb(prefix, used, best, best_perm);
            prefix.pop();
            used[cand] = false;
        }
    }

    fn column_is_zero(&self, j: usize) -> bool {
        (0..self.n).all(|i| self.get(i, j) == 0)
    }

    fn column_equals_aug(&self, j: usize) -> bool {
        (0..self.n).all(|i| self.get(i, j) == self.a[i])
    }

    /// Columns eligible for a type-1 reduction: `A[j] = 0` and column `j`
    /// zero or equal to `A`.
    pub fn find_type1(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&j| self.a[j] == 0 && (self.column_is_zero(j) || self.column_equals_aug(j)))
            .collect()
    }

    /// Unordered pairs eligible for a type-2 reduction: `A[r] = -A[t]` and
    /// the two columns of `B` sum to `A`.
    pub fn find_type2(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..self.n {
            for t in (r + 1)..self.n {
                if self.a[r] != -self.a[t] {
                    continue;
                }
                if (0..self.n).all(|i| self.get(i, r) + self.get(i, t) == self.a[i]) {
                    out.push((r, t));
                }
            }
        }
        out
    }

    pub fn is_irreducible(&self) -> bool {
        self.find_type1().is_empty() && self.find_type2().is_empty()
    }

    /// Remove row/column `j`.
    pub fn reduce_type1(&self, j: usize) -> Self {
        self.drop_indices(&[j])
    }

    /// Remove rows/columns `r` and `t`.
    pub fn reduce_type2(&self, r: usize, t: usize) -> Self {
        self.drop_indices(&[r, t])
    }

    fn drop_indices(&self, drop: &[usize]) -> Self {
        let keep: Vec<usize> = (0..self.n).filter(|i| !drop.contains(i)).collect();
        let m = keep.len();
        let mut b = vec![0i64; m * m];
        let mut a = vec![0i64; m];
        for (ni, &oi) in keep.iter().enumerate() {
            a[ni] = self.a[oi];
            for (nj, &oj) in keep.iter().enumerate() {
                b[ni * m + nj] = self.get(oi, oj);
            }
        }
        AugSkewMatrix { n: m, b, a }
    }

    /// Greedily apply reductions (type 1 before type 2, lowest index first)
    /// until irreducible. The canonical form of the result does not depend
    /// on the order.
    pub fn reduce(&self) -> (Self, ReductionTrace) {
        let mut m = self.clone();
        let mut trace = ReductionTrace::default();
        loop {
            if let Some(&j) = m.find_type1().first() {
                trace.steps.push(ReductionStep::Type1 { col: j });
                m = m.reduce_type1(j);
            } else if let Some(&(r, t)) = m.find_type2().first() {
                trace.steps.push(ReductionStep::Type2 { cols: (r, t) });
                m = m.reduce_type2(r, t);
            } else {
                return (m, trace);
            }
        }
    }

    /// Inverse of a type-1 reduction: append an index with zero
    /// augmentation whose column is zero (`a_column = false`) or equals the
    /// extended augmentation (`a_column = true`).
    pub fn extend_type1(&self, a_column: bool) -> Self {
        let n = self.n;
        let m = n + 1;
        let mut b = vec![0i64; m * m];
        let mut a = vec![0i64; m];
        for i in 0..n {
            a[i] = self.a[i];
            for j in 0..n {
                b[i * m + j] = self.get(i, j);
            }
        }
        if a_column {
            for i in 0..n {
                b[i * m + n] = self.a[i];
                b[n * m + i] = -self.a[i];
            }
        }
        AugSkewMatrix { n: m, b, a }
    }

    /// Inverse of a type-2 reduction: append indices `r = n`, `t = n+1`
    /// with augmentations `v, -v`; column `r` restricted to the old rows is
    /// `u` and column `t` is `A - u`.
    pub fn extend_type2(&self, v: i64, u: &[i64]) -> Result<Self, MatrixError> {
        let n = self.n;
        if u.len() != n {
            return Err(MatrixError::SizeMismatch { n, got: u.len() });
        }
        let m = n + 2;
        let mut b = vec![0i64; m * m];
        let mut a = vec![0i64; m];
        for i in 0..n {
            a[i] = self.a[i];
            for j in 0..n {
                b[i * m + j] = self.get(i, j);
            }
            b[i * m + n] = u[i];
            b[n * m + i] = -u[i];
            b[i * m + n + 1] = self.a[i] - u[i];
            b[(n + 1) * m + i] = u[i] - self.a[i];
        }
        a[n] = v;
        a[n + 1] = -v;
        b[n * m + n + 1] = v;
        b[(n + 1) * m + n] = -v;
        Ok(AugSkewMatrix { n: m, b, a })
    }

    /// Text form: first line `n`, then the `n` rows of `B`, then `A`.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        let a: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        out.push_str(&a.join(" "));
        out.push('\n');
        out
    }

    pub fn from_text(text: &str) -> Result<Self, MatrixError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| MatrixError::Text("empty document".into()))?
            .trim()
            .parse()
            .map_err(|e| MatrixError::Text(format!("bad dimension: {e}")))?;
        let mut parse_row = |what: &str| -> Result<Vec<i64>, MatrixError> {
            if n == 0 {
                return Ok(Vec::new());
            }
            let line = lines
                .next()
                .ok_or_else(|| MatrixError::Text(format!("missing {what}")))?;
            let row: Result<Vec<i64>, _> = line.split_whitespace().map(|t| t.parse()).collect();
            let row = row.map_err(|e| MatrixError::Text(format!("bad {what}: {e}")))?;
            if row.len() != n {
                return Err(MatrixError::Text(format!(
                    "{what} has {} entries, expected {n}",
                    row.len()
                )));
            }
            Ok(row)
        };
        let mut b = Vec::with_capacity(n * n);
        for i in 0..n {
            b.extend(parse_row(&format!("row {i}"))?);
        }
        let a = parse_row("augmentation row")?;
        Self::new(n, b, a)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let rows: Vec<Vec<i64>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect();
        serde_json::json!({ "n": self.n, "b": rows, "a": self.a })
    }
}

impl fmt::Display for AugSkewMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Matrix of a code: `(beta | alpha)` of its pairing table.
pub fn code_matrix(code: &SignedGaussCode) -> AugSkewMatrix {
    AugSkewMatrix::from_pairing_table(&pairing_table(code))
        .expect("pairing tables are skew-symmetric")
}

/// True iff the two matrices are S-equivalent: their reduced forms agree up
/// to permutation.
pub fn s_equivalent(m1: &AugSkewMatrix, m2: &AugSkewMatrix) -> bool {
    m1.reduce().0.canonical_form().0 == m2.reduce().0.canonical_form().0
}

/// Obstruction verdict for a code. A trivial class never certifies that the
/// doodle is classical; a nonempty irreducible representative certifies it
/// is not.
pub fn classify(code: &SignedGaussCode) -> Verdict {
    if code_matrix(code).reduce().0.is_empty() {
        Verdict::TrivialClass
    } else {
        Verdict::NonClassicalObstruction
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::SignedGaussCode;
    use rand::{Rng, SeedableRng};

    fn mat(n: usize, b: &[i64], a: &[i64]) -> AugSkewMatrix {
        AugSkewMatrix::new(n, b.to_vec(), a.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_skew() {
        assert!(AugSkewMatrix::new(2, vec![0, 1, 1, 0], vec![0, 0]).is_err());
        assert!(AugSkewMatrix::new(1, vec![3], vec![0]).is_err());
    }

    #[test]
    fn permute_is_group_action() {
        let m = mat(3, &[0, 1, -2, -1, 0, 3, 2, -3, 0], &[5, -1, 2]);
        let id: Vec<usize> = (0..3).collect();
        assert_eq!(m.permute(&id).unwrap(), m);
        let swap = vec![1, 0, 2];
        assert_eq!(m.permute(&swap).unwrap().permute(&swap).unwrap(), m);
        let s1 = vec![1, 2, 0];
        let s2 = vec![2, 0, 1];
        let composed: Vec<usize> = (0..3).map(|i| s1[s2[i]]).collect();
        assert_eq!(
            m.permute(&s1).unwrap().permute(&s2).unwrap(),
            m.permute(&composed).unwrap()
        );
    }

    #[test]
    fn canonical_constant_on_orbits() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let n = rng.gen_range(1..=5);
            let mut b = vec![0i64; n * n];
            for i in 0..n {
                for j in (i + 1)..n {
                    let v = rng.gen_range(-2..=2);
                    b[i * n + j] = v;
                    b[j * n + i] = -v;
                }
            }
            let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            let m = AugSkewMatrix::new(n, b, a).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            let permuted = m.permute(&perm).unwrap();
            let (c1, w1) = m.canonical_form();
            let (c2, _) = permuted.canonical_form();
            assert_eq!(c1, c2);
            assert_eq!(m.permute(&w1).unwrap(), c1);
        }
    }

    #[test]
    fn canonical_equality_decides_permutation_orbit() {
        // exhaustive cross-check at small size: equal canonical forms iff
        // some permutation maps one matrix to the other
        let m1 = mat(3, &[0, 1, 0, -1, 0, 2, 0, -2, 0], &[1, 0, -1]);
        let m2 = m1.permute(&[2, 0, 1]).unwrap();
        let m3 = mat(3, &[0, 1, 0, -1, 0, 2, 0, -2, 0], &[1, 0, 1]);
        assert_eq!(m1.canonical_form().0, m2.canonical_form().0);
        assert_ne!(m1.canonical_form().0, m3.canonical_form().0);
        let mut any = false;
        let mut perm = vec![0usize, 1, 2];
        loop {
            any |= m1.permute(&perm).unwrap() == m3;
            if !next_permutation(&mut perm) {
                break;
            }
        }
        assert!(!any);
    }

    #[test]
    fn branch_and_bound_matches_brute_force() {
        // same matrix canonicalized through both paths
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..10 {
            let n = 6;
            let mut b = vec![0i64; n * n];
            for i in 0..n {
                for j in (i + 1)..n {
                    let v = rng.gen_range(-1..=1);
                    b[i * n + j] = v;
                    b[j * n + i] = -v;
                }
            }
            let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-1..=1)).collect();
            let m = AugSkewMatrix::new(n, b, a).unwrap();
            let brute = m.canonical_form().0;
            let bnb = m.canonical_branch_and_bound().0;
            assert_eq!(brute, bnb);
        }
    }

    #[test]
    fn type1_sites() {
        let m = mat(1, &[0], &[0]);
        assert_eq!(m.find_type1(), vec![0]);
        assert!(m.reduce().0.is_empty());

        // column equal to the augmentation also qualifies
        let m = mat(2, &[0, 1, -1, 0], &[1, 0]);
        assert_eq!(m.find_type1(), vec![1]);

        // nonzero augmentation blocks type 1
        let m = mat(1, &[0], &[2]);
        assert!(m.find_type1().is_empty());
    }

    #[test]
    fn type2_sites() {
        // shape produced by removing a bigon: opposite augmentations and
        // columns summing to A
        let m = mat(
            2,
            &[0, 1, -1, 0],
            &[1, -1],
        );
        assert_eq!(m.find_type2(), vec![(0, 1)]);
        assert!(m.reduce().0.is_empty());

        // zero block: columns sum to zero, not to A
        let m = mat(2, &[0, 0, 0, 0], &[1, -1]);
        assert!(m.find_type2().is_empty());
    }

    #[test]
    fn reduce_zero_matrix() {
        let m = mat(3, &[0; 9], &[0; 3]);
        let (r, trace) = m.reduce();
        assert!(r.is_empty());
        assert_eq!(trace.steps.len(), 3);
        assert_eq!(trace.replay(&m).unwrap(), r);
    }

    #[test]
    fn reduce_dimension_steps() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..30 {
            let base_n = rng.gen_range(0..=3);
            let mut m = mat(0, &[], &[]);
            for _ in 0..base_n {
                let v = rng.gen_range(-2..=2i64);
                let u: Vec<i64> = (0..m.dim()).map(|_| rng.gen_range(-2..=2)).collect();
                m = m.extend_type2(v, &u).unwrap();
            }
            let (reduced, trace) = m.reduce();
            assert!(reduced.is_irreducible());
            assert_eq!(trace.replay(&m).unwrap(), reduced);
            let mut dim = m.dim();
            for step in &trace.steps {
                match step {
                    ReductionStep::Type1 { .. } => dim -= 1,
                    ReductionStep::Type2 { .. } => dim -= 2,
                    ReductionStep::Permute { .. } => {}
                }
            }
            assert_eq!(dim, reduced.dim());
        }
    }

    #[test]
    fn extensions_stay_s_equivalent() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for _ in 0..30 {
            let n = rng.gen_range(0..=3);
            let mut b = vec![0i64; n * n];
            for i in 0..n {
                for j in (i + 1)..n {
                    let v = rng.gen_range(-2..=2);
                    b[i * n + j] = v;
                    b[j * n + i] = -v;
                }
            }
            let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            let m = AugSkewMatrix::new(n, b, a).unwrap();
            let e1 = m.extend_type1(rng.gen_bool(0.5));
            let u: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            let e2 = m.extend_type2(rng.gen_range(-2..=2), &u).unwrap();
            assert!(s_equivalent(&m, &e1));
            assert!(s_equivalent(&m, &e2));
            assert!(s_equivalent(&e1, &e2));
        }
    }

    #[test]
    fn s_equivalence_examples() {
        let m = mat(3, &[0, 2, 0, -2, 0, 1, 0, -1, 0], &[1, 1, -2]);
        let p = m.permute(&[2, 1, 0]).unwrap();
        assert!(s_equivalent(&m, &p));
        let monogon = mat(1, &[0], &[0]);
        assert!(s_equivalent(&monogon, &AugSkewMatrix::empty()));
    }

    #[test]
    fn classify_examples() {
        let planar = SignedGaussCode::parse("a a | a=+1").unwrap();
        assert_eq!(classify(&planar), Verdict::TrivialClass);
        let torus = SignedGaussCode::parse("a b a b | a=+1, b=-1").unwrap();
        // a bigon pair: matrix reduces to empty even though the diagram
        // lives on the torus
        assert_eq!(classify(&torus), Verdict::TrivialClass);
    }

    #[test]
    fn text_roundtrip() {
        let m = mat(2, &[0, -3, 3, 0], &[7, 0]);
        let t = m.to_text();
        assert_eq!(AugSkewMatrix::from_text(&t).unwrap(), m);
        let e = AugSkewMatrix::empty();
        assert_eq!(AugSkewMatrix::from_text(&e.to_text()).unwrap(), e);
    }
}
