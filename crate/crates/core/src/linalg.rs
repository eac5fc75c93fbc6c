//! Exact linear systems over ℚ(i) and coefficient extraction from elements.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalars::GaussianRational;
use crate::terms::FlatTerm;

/// Affine solution set `particular + span(nullspace)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vec<GaussianRational>,
    pub nullspace: Vec<Vec<GaussianRational>>,
}

/// Solves `A u = b` by Gauss–Jordan elimination; `rows[i]` is row `i` of `A`.
pub fn solve(rows: &[Vec<GaussianRational>], rhs: &[GaussianRational], unknowns: usize) -> Result<Solution> {
    assert_eq!(rows.len(), rhs.len(), "row count mismatch");
    let mut m: Vec<Vec<GaussianRational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            assert_eq!(r.len(), unknowns, "row length mismatch");
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..unknowns {
        let Some(pr) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, pr);
        let inv = m[row][col].recip()?;
        for v in m[row].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=unknowns {
                    let delta = &f * &m[row][c];
                    m[r][c] -= &delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    for r in &m[row..] {
        if !r[unknowns].is_zero() {
            return Err(Error::InconsistentSystem(format!("equation 0 = {} cannot hold", r[unknowns])));
        }
    }
    let mut particular = vec![GaussianRational::zero(); unknowns];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = m[r][unknowns].clone();
    }
    let free: Vec<usize> = (0..unknowns).filter(|c| !pivots.contains(c)).collect();
    let nullspace = free
        .iter()
        .map(|&f| {
            let mut v = vec![GaussianRational::zero(); unknowns];
            v[f] = GaussianRational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -&m[r][f];
            }
            v
        })
        .collect();
    Ok(Solution { particular, nullspace })
}

/// Key of one flat coefficient: a-monomial and legs.
type CoeffKey = (crate::scalars::MultiIndex, Vec<(crate::scalars::MultiIndex, crate::scalars::MultiIndex)>);

/// Turns `Σ_j u_j·basis_j = target` into linear equations, one per flat
/// coefficient appearing anywhere.
pub fn equations_from_terms(
    basis: &[Vec<FlatTerm>],
    target: &[FlatTerm],
) -> (Vec<Vec<GaussianRational>>, Vec<GaussianRational>) {
    let mut index: BTreeMap<CoeffKey, usize> = BTreeMap::new();
    let key_of = |t: &FlatTerm, index: &mut BTreeMap<CoeffKey, usize>| {
        let k = (t.a, t.legs.clone());
        let n = index.len();
        *index.entry(k).or_insert(n)
    };
    let mut cols: Vec<Vec<(usize, GaussianRational)>> = Vec::new();
    for b in basis {
        cols.push(b.iter().map(|t| (key_of(t, &mut index), t.coeff.clone())).collect());
    }
    let tgt: Vec<(usize, GaussianRational)> = target.iter().map(|t| (key_of(t, &mut index), t.coeff.clone())).collect();
    let neq = index.len();
    let mut rows = vec![vec![GaussianRational::zero(); basis.len()]; neq];
    for (j, col) in cols.iter().enumerate() {
        for (r, c) in col {
            rows[*r][j] += c;
        }
    }
    let mut rhs = vec![GaussianRational::zero(); neq];
    for (r, c) in tgt {
        rhs[r] += &c;
    }
    (rows, rhs)
}
