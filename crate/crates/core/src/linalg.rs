//! Exact linear algebra over a [`Field`]: row echelon, rank, nullspace, and
//! an incremental echelon basis for span-membership tests.

use crate::field::Field;

/// Row-reduces in place to reduced row echelon form; returns pivot columns.
pub fn rref<F: Field>(f: &F, rows: &mut Vec<Vec<F::E>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else { continue };
        rows.swap(r, p);
        let inv = f.inv(&rows[r][c]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[c]) {
                continue;
            }
            let k = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = f.sub(x, &f.mul(&k, y));
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(f: &F, rows: &[Vec<F::E>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m, ncols).len()
}

/// Basis of `{v : M v = 0}`.
pub fn nullspace<F: Field>(f: &F, rows: &[Vec<F::E>], ncols: usize) -> Vec<Vec<F::E>> {
    let mut m = rows.to_vec();
    let pivots = rref(f, &mut m, ncols);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![f.zero(); ncols];
        v[free] = f.one();
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = f.neg(&row[free]);
        }
        out.push(v);
    }
    out
}

/// Echelon basis grown one vector at a time.
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    ncols: usize,
    rows: Vec<(usize, Vec<E>)>,
}

impl<E: Clone> Echelon<E> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    /// Residual of `v` against the current basis.
    pub fn reduce<F: Field<E = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if f.is_zero(&v[*p]) {
                continue;
            }
            let k = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                *x = f.sub(x, &f.mul(&k, y));
            }
        }
        v
    }

    pub fn contains<F: Field<E = E>>(&self, f: &F, v: &[E]) -> bool {
        self.reduce(f, v).iter().all(|x| f.is_zero(x))
    }

    /// Adds `v`; `false` if it was already in the span.
    pub fn insert<F: Field<E = E>>(&mut self, f: &F, v: &[E]) -> bool {
        let mut r = self.reduce(f, v);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else { return false };
        let inv = f.inv(&r[p]).expect("nonzero pivot");
        for x in r.iter_mut() {
            *x = f.mul(x, &inv);
        }
        // keep earlier rows reduced at the new pivot so `reduce` is one pass
        for (_, row) in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let k = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                *x = f.sub(x, &f.mul(&k, y));
            }
        }
        self.rows.push((p, r));
        true
    }
}

/// Echelon basis that remembers how each row combines the vectors inserted
/// so far, so a dependent vector comes back as an explicit combination.
#[derive(Clone, Debug)]
pub struct TrackedEchelon<E> {
    ncols: usize,
    inserted: usize,
    /// pivot, row, row as a combination of the inserted vectors
    rows: Vec<(usize, Vec<E>, Vec<E>)>,
}

impl<E: Clone> TrackedEchelon<E> {
    pub fn new(ncols: usize) -> Self {
        TrackedEchelon { ncols, inserted: 0, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.inserted
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _, _)| *p).collect()
    }

    /// Inserts `v` and returns its index among the independent vectors, or
    /// `Err(c)` with `v = Σ c[i]·(i-th inserted vector)`.
    pub fn insert<F: Field<E = E>>(&mut self, f: &F, v: &[E]) -> Result<usize, Vec<E>> {
        assert_eq!(v.len(), self.ncols);
        let mut r = v.to_vec();
        let mut acc = vec![f.zero(); self.inserted];
        for (p, row, combo) in &self.rows {
            if f.is_zero(&r[*p]) {
                continue;
            }
            let k = r[*p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                *x = f.sub(x, &f.mul(&k, y));
            }
            for (a, c) in acc.iter_mut().zip(combo) {
                *a = f.add(a, &f.mul(&k, c));
            }
        }
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else { return Err(acc) };
        let inv = f.inv(&r[p]).expect("nonzero pivot");
        for x in r.iter_mut() {
            *x = f.mul(x, &inv);
        }
        // r = v − Σ acc·old, so the new row is inv·(new − Σ acc·old)
        let mut combo: Vec<E> = acc.iter().map(|a| f.neg(&f.mul(a, &inv))).collect();
        combo.push(inv);
        let id = self.inserted;
        self.inserted += 1;
        for (_, row, c) in self.rows.iter_mut() {
            c.push(f.zero());
            if f.is_zero(&row[p]) {
                continue;
            }
            let k = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                *x = f.sub(x, &f.mul(&k, y));
            }
            for (x, y) in c.iter_mut().zip(&combo) {
                *x = f.sub(x, &f.mul(&k, y));
            }
        }
        self.rows.push((p, r, combo));
        Ok(id)
    }
}
