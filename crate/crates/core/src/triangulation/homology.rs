//! Smith normal form over the integers, for first homology of small complexes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `Z^rank ⊕ Z/t1 ⊕ ... ⊕ Z/tk` with every `ti > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_integers(&self) -> bool {
        self.rank == 1 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 {
                "Z".into()
            } else {
                format!("Z^{}", self.rank)
            });
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Result of reducing `a` (rows x cols): `left * a * right = diag(d)`.
pub struct SmithForm {
    pub diagonal: Vec<i64>,
    /// Unimodular row transform, rows x rows.
    pub left: Vec<Vec<i64>>,
}

fn overflow() -> Error {
    Error::InvalidTriangulation("integer overflow in Smith normal form".into())
}

fn add_multiple(row_to: &mut [i64], row_from: &[i64], k: i64) -> Result<()> {
    for (x, &y) in row_to.iter_mut().zip(row_from) {
        *x = x
            .checked_add(k.checked_mul(y).ok_or_else(overflow)?)
            .ok_or_else(overflow)?;
    }
    Ok(())
}

pub fn smith_normal_form(a: &[Vec<i64>], cols: usize) -> Result<SmithForm> {
    let rows = a.len();
    let mut m: Vec<Vec<i64>> = a.to_vec();
    let mut left: Vec<Vec<i64>> = (0..rows)
        .map(|i| (0..rows).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut diagonal = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            // Pivot: smallest nonzero absolute value in the remaining block.
            let mut pivot = None;
            for i in r..rows {
                for j in c..cols {
                    if m[i][j] != 0
                        && pivot
                            .is_none_or(|(pi, pj): (usize, usize)| m[i][j].abs() < m[pi][pj].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return Ok(SmithForm { diagonal, left });
            };
            m.swap(r, pi);
            left.swap(r, pi);
            for row in m.iter_mut() {
                row.swap(c, pj);
            }
            let p = m[r][c];
            let mut clean = true;
            for i in r + 1..rows {
                let q = m[i][c] / p;
                if q != 0 {
                    let (src, dst) = (m[r].clone(), &mut m[i]);
                    add_multiple(dst, &src, -q)?;
                    let lsrc = left[r].clone();
                    add_multiple(&mut left[i], &lsrc, -q)?;
                }
                if m[i][c] != 0 {
                    clean = false;
                }
            }
            for j in c + 1..cols {
                let q = m[r][j] / p;
                if q != 0 {
                    for row in m.iter_mut() {
                        row[j] = row[j]
                            .checked_sub(q.checked_mul(row[c]).ok_or_else(overflow)?)
                            .ok_or_else(overflow)?;
                    }
                }
                if m[r][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Divisibility: fold any entry not divisible by the pivot into the pivot row.
            let bad = (r + 1..rows).find(|&i| (c + 1..cols).any(|j| m[i][j] % p != 0));
            if let Some(i) = bad {
                let src = m[i].clone();
                add_multiple(&mut m[r], &src, 1)?;
                let lsrc = left[i].clone();
                add_multiple(&mut left[r], &lsrc, 1)?;
                continue;
            }
            if p < 0 {
                for x in m[r].iter_mut() {
                    *x = -*x;
                }
                for x in left[r].iter_mut() {
                    *x = -*x;
                }
            }
            diagonal.push(m[r][c]);
            r += 1;
            break;
        }
    }
    Ok(SmithForm { diagonal, left })
}

pub fn rank(a: &[Vec<i64>], cols: usize) -> Result<usize> {
    Ok(smith_normal_form(a, cols)?.diagonal.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonalizes_small_matrix() {
        // Presentation of Z/2 + Z: relation 2x = 0 on generators x, y.
        let a = vec![vec![2], vec![0]];
        let s = smith_normal_form(&a, 1).unwrap();
        assert_eq!(s.diagonal, vec![2]);
        let b = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        assert_eq!(smith_normal_form(&b, 3).unwrap().diagonal, vec![2, 6, 12]);
    }

    #[test]
    fn left_transform_is_consistent() {
        let a = vec![vec![1, 1], vec![1, -1], vec![0, 2]];
        let s = smith_normal_form(&a, 2).unwrap();
        assert_eq!(s.diagonal, vec![1, 2]);
        // left * a has the same row space structure: its first rows carry the pivots.
        let la: Vec<Vec<i64>> = s
            .left
            .iter()
            .map(|row| {
                (0..2)
                    .map(|j| (0..3).map(|k| row[k] * a[k][j]).sum())
                    .collect()
            })
            .collect();
        assert!(la[2].iter().all(|&x| x == 0));
    }
}
