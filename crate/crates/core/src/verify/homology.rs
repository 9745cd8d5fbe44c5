use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{FaceId, SimplicialComplex};

/// Default face-count limit for integer homology.
pub const DEFAULT_SIZE_LIMIT: usize = 100_000;
/// Prime used by the rank-only mode.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("complex has {faces} faces, above the limit {limit}; use the prime-field rank mode")]
    SizeLimit { faces: usize, limit: usize },
    #[error("integer entries outgrew 128 bits during elimination")]
    Overflow,
    #[error("modulus {0} is not a prime below 2^32")]
    BadModulus(u64),
}

/// Betti numbers `b_0..b_d` with the torsion coefficients of each `H_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    pub ranks: Vec<u64>,
    /// Torsion coefficients (all > 1) of `H_i`, in divisibility order.
    pub torsion: Vec<Vec<u64>>,
}

impl BettiVector {
    pub fn alternating_sum(&self) -> i64 {
        self.ranks.iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }
}

/// Sparse integer matrix stored by columns; entry `(row, value)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn from_dense(m: &[Vec<i64>]) -> Self {
        let rows = m.len();
        let ncols = m.first().map_or(0, Vec::len);
        let cols = (0..ncols)
            .map(|c| (0..rows).filter(|&r| m[r][c] != 0).map(|r| (r as u32, m[r][c])).collect())
            .collect();
        SparseMatrix { rows, cols }
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols.len()]; self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                d[r as usize][c] = v;
            }
        }
        d
    }
}

/// Boundary map from `dim`-faces to `(dim-1)`-faces with signs `(-1)^j`
/// for the face omitting the `j`-th vertex of the sorted tuple.
pub fn boundary_matrix(k: &SimplicialComplex, dim: usize) -> SparseMatrix {
    if dim == 0 || k.is_empty() || dim > k.dim() {
        let rows = if dim >= 1 && !k.is_empty() && dim <= k.dim() + 1 { k.num_faces(dim - 1) } else { 0 };
        return SparseMatrix { rows, cols: vec![] };
    }
    let cols = (0..k.num_faces(dim))
        .map(|i| {
            let mut c: Vec<(u32, i64)> = k
                .boundary(FaceId::new(dim, i))
                .iter()
                .enumerate()
                .map(|(j, &b)| (b, if j % 2 == 0 { 1 } else { -1 }))
                .collect();
            c.sort_unstable();
            c
        })
        .collect();
    SparseMatrix { rows: k.num_faces(dim - 1), cols }
}

/// Coefficient arithmetic for sparse elimination.
trait Coeff {
    type V: Copy + PartialEq;
    fn from_i64(&self, x: i64) -> Self::V;
    fn is_zero(&self, v: Self::V) -> bool;
    fn is_pivot(&self, v: Self::V) -> bool;
    /// `e / p` for a pivot `p`.
    fn factor(&self, e: Self::V, p: Self::V) -> Self::V;
    /// `a - f * b`
    fn sub_mul(&self, a: Self::V, f: Self::V, b: Self::V) -> Result<Self::V, HomologyError>;
}

struct Integers;

impl Coeff for Integers {
    type V = i128;
    fn from_i64(&self, x: i64) -> i128 {
        x as i128
    }
    fn is_zero(&self, v: i128) -> bool {
        v == 0
    }
    fn is_pivot(&self, v: i128) -> bool {
        v == 1 || v == -1
    }
    fn factor(&self, e: i128, p: i128) -> i128 {
        // p is a unit, so e / p = e * p
        e * p
    }
    fn sub_mul(&self, a: i128, f: i128, b: i128) -> Result<i128, HomologyError> {
        f.checked_mul(b).and_then(|x| a.checked_sub(x)).ok_or(HomologyError::Overflow)
    }
}

struct PrimeField(u64);

impl Coeff for PrimeField {
    type V = u64;
    fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }
    fn is_zero(&self, v: u64) -> bool {
        v == 0
    }
    fn is_pivot(&self, v: u64) -> bool {
        v != 0
    }
    fn factor(&self, e: u64, p: u64) -> u64 {
        let (mut base, mut n, mut inv) = (p, self.0 - 2, 1u64);
        while n > 0 {
            if n & 1 == 1 {
                inv = inv * base % self.0;
            }
            base = base * base % self.0;
            n >>= 1;
        }
        e * inv % self.0
    }
    fn sub_mul(&self, a: u64, f: u64, b: u64) -> Result<u64, HomologyError> {
        Ok((a + self.0 - f * b % self.0) % self.0)
    }
}

/// Eliminates pivots chosen row by row (fewest entries first, then the
/// eligible column with fewest entries). Returns the number of pivots and
/// the rows left over, which contain no eligible pivot.
fn sparse_eliminate<C: Coeff>(c: &C, m: &SparseMatrix) -> Result<(usize, Vec<Vec<(u32, C::V)>>), HomologyError> {
    let ncols = m.cols.len();
    let mut rows: Vec<Vec<(u32, C::V)>> = vec![Vec::new(); m.rows];
    for (j, col) in m.cols.iter().enumerate() {
        for &(r, v) in col {
            let v = c.from_i64(v);
            if !c.is_zero(v) {
                rows[r as usize].push((j as u32, v));
            }
        }
    }
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); ncols];
    let mut col_count = vec![0u32; ncols];
    for (r, row) in rows.iter().enumerate() {
        for &(j, _) in row {
            col_rows[j as usize].push(r as u32);
            col_count[j as usize] += 1;
        }
    }
    let mut done = vec![false; m.rows];
    let mut heap: BinaryHeap<Reverse<(u32, u32)>> =
        rows.iter().enumerate().filter(|(_, r)| !r.is_empty()).map(|(i, r)| Reverse((r.len() as u32, i as u32))).collect();
    let mut rank = 0;
    let mut merged: Vec<(u32, C::V)> = Vec::new();
    while let Some(Reverse((len, pr))) = heap.pop() {
        let pr = pr as usize;
        if done[pr] || rows[pr].len() as u32 != len || len == 0 {
            continue;
        }
        let Some(&(pc, pv)) = rows[pr].iter().filter(|&&(_, v)| c.is_pivot(v)).min_by_key(|&&(j, _)| col_count[j as usize])
        else {
            continue;
        };
        done[pr] = true;
        rank += 1;
        let pivot_row = std::mem::take(&mut rows[pr]);
        for &(j, _) in &pivot_row {
            col_count[j as usize] -= 1;
        }
        let targets = std::mem::take(&mut col_rows[pc as usize]);
        for r in targets {
            let r = r as usize;
            if done[r] {
                continue;
            }
            let Ok(pos) = rows[r].binary_search_by_key(&pc, |&(j, _)| j) else { continue };
            let f = c.factor(rows[r][pos].1, pv);
            merged.clear();
            let (a, b) = (&rows[r], &pivot_row);
            let (mut i, mut k) = (0, 0);
            while i < a.len() || k < b.len() {
                let ja = a.get(i).map_or(u32::MAX, |x| x.0);
                let jb = b.get(k).map_or(u32::MAX, |x| x.0);
                if ja < jb {
                    merged.push(a[i]);
                    i += 1;
                } else if jb < ja {
                    let v = c.sub_mul(c.from_i64(0), f, b[k].1)?;
                    if !c.is_zero(v) {
                        merged.push((jb, v));
                        col_count[jb as usize] += 1;
                        col_rows[jb as usize].push(r as u32);
                    }
                    k += 1;
                } else {
                    let v = c.sub_mul(a[i].1, f, b[k].1)?;
                    if c.is_zero(v) {
                        col_count[ja as usize] -= 1;
                    } else {
                        merged.push((ja, v));
                    }
                    i += 1;
                    k += 1;
                }
            }
            std::mem::swap(&mut rows[r], &mut merged);
            heap.push(Reverse((rows[r].len() as u32, r as u32)));
        }
    }
    let rest = rows.into_iter().enumerate().filter(|(i, r)| !done[*i] && !r.is_empty()).map(|(_, r)| r).collect();
    Ok((rank, rest))
}

/// Nonzero diagonal of a Smith normal form of a dense integer matrix, in
/// divisibility order.
pub fn dense_smith(mut a: Vec<Vec<i128>>) -> Result<Vec<u128>, HomologyError> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].unsigned_abs() < a[bi][bj].unsigned_abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let q = a[i][t] / p;
                    for j in t..cols {
                        a[i][j] = a[i][j].checked_sub(q.checked_mul(a[t][j]).ok_or(HomologyError::Overflow)?).ok_or(HomologyError::Overflow)?;
                    }
                    if a[i][t] != 0 {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let q = a[t][j] / p;
                    for i in t..rows {
                        a[i][j] = a[i][j].checked_sub(q.checked_mul(a[i][t]).ok_or(HomologyError::Overflow)?).ok_or(HomologyError::Overflow)?;
                    }
                    if a[t][j] != 0 {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
            // move the smallest nonzero entry of row t / column t to the corner
            let mut bi = t;
            let mut bj = t;
            for i in t..rows {
                if a[i][t] != 0 && a[i][t].unsigned_abs() < a[bi][bj].unsigned_abs() {
                    (bi, bj) = (i, t);
                }
            }
            for j in t..cols {
                if a[t][j] != 0 && a[t][j].unsigned_abs() < a[bi][bj].unsigned_abs() {
                    (bi, bj) = (t, j);
                }
            }
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
        }
        diag.push(a[t][t].unsigned_abs());
        t += 1;
    }
    // the diagonal determines the cokernel; normalize to a divisibility chain
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = gcd(diag[i], diag[j]);
            let l = (diag[i] / g).checked_mul(diag[j]).ok_or(HomologyError::Overflow)?;
            diag[i] = g;
            diag[j] = l;
        }
    }
    Ok(diag)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Nonzero invariant factors of an integer matrix, ascending.
pub fn smith_normal_form(m: &SparseMatrix) -> Result<Vec<u128>, HomologyError> {
    let (units, rest) = sparse_eliminate(&Integers, m)?;
    let mut used: Vec<u32> = rest.iter().flatten().map(|&(j, _)| j).collect();
    used.sort_unstable();
    used.dedup();
    let dense: Vec<Vec<i128>> = rest
        .iter()
        .map(|row| {
            let mut d = vec![0i128; used.len()];
            for &(j, v) in row {
                d[used.binary_search(&j).expect("column present")] = v;
            }
            d
        })
        .collect();
    let mut out = vec![1u128; units];
    out.extend(dense_smith(dense)?);
    out.sort_unstable();
    Ok(out)
}

/// Rank over the field with `p` elements.
pub fn rank_mod_p(m: &SparseMatrix, p: u64) -> Result<usize, HomologyError> {
    if !(2..1 << 32).contains(&p) || (2..).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return Err(HomologyError::BadModulus(p));
    }
    let (rank, rest) = sparse_eliminate(&PrimeField(p), m)?;
    debug_assert!(rest.is_empty());
    Ok(rank)
}

/// Integer homology of `k` from Smith normal forms of its boundary maps.
pub fn betti_numbers(k: &SimplicialComplex, size_limit: usize) -> Result<BettiVector, HomologyError> {
    if k.total_faces() > size_limit {
        return Err(HomologyError::SizeLimit { faces: k.total_faces(), limit: size_limit });
    }
    if k.is_empty() {
        return Ok(BettiVector { ranks: vec![], torsion: vec![] });
    }
    let d = k.dim();
    // factors[j] = invariant factors of the boundary map from j-faces
    let mut factors = vec![Vec::new(); d + 2];
    for (j, slot) in factors.iter_mut().enumerate().take(d + 1).skip(1) {
        *slot = smith_normal_form(&boundary_matrix(k, j))?;
    }
    let ranks = (0..=d).map(|j| (k.num_faces(j) - factors[j].len() - factors[j + 1].len()) as u64).collect();
    let torsion = (0..=d)
        .map(|j| factors[j + 1].iter().filter(|&&x| x > 1).map(|&x| x as u64).collect())
        .collect();
    Ok(BettiVector { ranks, torsion })
}

/// Betti numbers over the field with `p` elements; they equal the rational
/// Betti numbers unless `p` divides a torsion coefficient.
pub fn betti_numbers_mod_p(k: &SimplicialComplex, p: u64) -> Result<Vec<u64>, HomologyError> {
    if k.is_empty() {
        return Ok(vec![]);
    }
    let d = k.dim();
    let mut rank = vec![0usize; d + 2];
    for (j, slot) in rank.iter_mut().enumerate().take(d + 1).skip(1) {
        *slot = rank_mod_p(&boundary_matrix(k, j), p)?;
    }
    Ok((0..=d).map(|j| (k.num_faces(j) - rank[j] - rank[j + 1]) as u64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{dunce_hat, poincare, simplex, simplex_boundary};

    fn rp2() -> SimplicialComplex {
        SimplicialComplex::from_facets([
            [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
            [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6],
        ])
        .unwrap()
    }

    #[test]
    fn smith_of_small_matrices() {
        assert_eq!(dense_smith(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).unwrap(), vec![2, 6, 12]);
        assert_eq!(dense_smith(vec![vec![2, 0], vec![0, 3]]).unwrap(), vec![1, 6]);
        assert_eq!(dense_smith(vec![vec![0, 0], vec![0, 0]]).unwrap(), Vec::<u128>::new());
        let m = SparseMatrix::from_dense(&[vec![1, 1, 0], vec![0, 2, 2], vec![1, 0, 3]]);
        assert_eq!(m.to_dense(), vec![vec![1, 1, 0], vec![0, 2, 2], vec![1, 0, 3]]);
        assert_eq!(smith_normal_form(&m).unwrap(), vec![1, 1, 8]);
        assert_eq!(rank_mod_p(&m, 2).unwrap(), 2);
        assert_eq!(rank_mod_p(&m, 7).unwrap(), 3);
        assert!(matches!(rank_mod_p(&m, 6), Err(HomologyError::BadModulus(6))));
    }

    #[test]
    fn boundary_squares_to_zero() {
        let k = poincare();
        for d in 2..=3 {
            let a = boundary_matrix(&k, d - 1).to_dense();
            let b = boundary_matrix(&k, d).to_dense();
            for i in 0..a.len() {
                for j in 0..b[0].len() {
                    assert_eq!((0..b.len()).map(|t| a[i][t] * b[t][j]).sum::<i64>(), 0);
                }
            }
        }
    }

    #[test]
    fn betti_of_standard_spaces() {
        assert_eq!(betti_numbers(&simplex(3), DEFAULT_SIZE_LIMIT).unwrap().ranks, vec![1, 0, 0, 0]);
        assert_eq!(betti_numbers(&simplex_boundary(3).unwrap(), DEFAULT_SIZE_LIMIT).unwrap().ranks, vec![1, 0, 1]);
        assert_eq!(betti_numbers(&dunce_hat(), DEFAULT_SIZE_LIMIT).unwrap().ranks, vec![1, 0, 0]);
        let p = betti_numbers(&poincare(), DEFAULT_SIZE_LIMIT).unwrap();
        assert_eq!(p.ranks, vec![1, 0, 0, 1]);
        assert!(p.is_torsion_free());
        assert_eq!(p.alternating_sum(), 0);
    }

    #[test]
    fn projective_plane_torsion() {
        let b = betti_numbers(&rp2(), DEFAULT_SIZE_LIMIT).unwrap();
        assert_eq!(b.ranks, vec![1, 0, 0]);
        assert_eq!(b.torsion[1], vec![2]);
        assert_eq!(betti_numbers_mod_p(&rp2(), 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(betti_numbers_mod_p(&rp2(), DEFAULT_PRIME).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn size_limit() {
        let e = betti_numbers(&poincare(), 10).unwrap_err();
        assert!(matches!(e, HomologyError::SizeLimit { faces: 392, limit: 10 }));
    }
}
