//! Smith normal form over the integers with arbitrary precision.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for c in 0..self.cols {
            let s = &self.data[src * self.cols + c];
            if !s.is_zero() {
                let v = s * q;
                self.data[dst * self.cols + c] += v;
            }
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for r in 0..self.rows {
            let s = &self.data[r * self.cols + src];
            if !s.is_zero() {
                let v = s * q;
                self.data[r * self.cols + dst] += v;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            self.data[idx] = -std::mem::take(&mut self.data[idx]);
        }
    }

    pub fn smith_normal_form(&self) -> SmithForm {
        smith(self, false)
    }

    /// Smith normal form together with unimodular `u`, `v` such that `u * self * v = d`.
    pub fn smith_normal_form_with_transforms(&self) -> SmithForm {
        smith(self, true)
    }
}

#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`, all positive.
    pub invariant_factors: Vec<BigInt>,
    pub d: IntegerMatrix,
    pub u: Option<IntegerMatrix>,
    pub v: Option<IntegerMatrix>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

struct Work {
    a: IntegerMatrix,
    u: Option<IntegerMatrix>,
    v: Option<IntegerMatrix>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
    }
    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.add_row(dst, src, q);
        if let Some(u) = &mut self.u {
            u.add_row(dst, src, q);
        }
    }
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.add_col(dst, src, q);
        if let Some(v) = &mut self.v {
            v.add_col(dst, src, q);
        }
    }
    fn negate_row(&mut self, r: usize) {
        self.a.negate_row(r);
        if let Some(u) = &mut self.u {
            u.negate_row(r);
        }
    }
}

fn smith(m: &IntegerMatrix, track: bool) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut w = Work {
        a: m.clone(),
        u: track.then(|| IntegerMatrix::identity(rows)),
        v: track.then(|| IntegerMatrix::identity(cols)),
    };
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        'scan: for i in t..rows {
            for j in t..cols {
                let x = w.a.get(i, j);
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.magnitude() < w.a.get(bi, bj).magnitude()) {
                    best = Some((i, j));
                    if x.magnitude().is_one() {
                        break 'scan;
                    }
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if w.a.get(i, t).is_zero() {
                    continue;
                }
                let q = -(w.a.get(i, t).div_floor(w.a.get(t, t)));
                w.add_row(i, t, &q);
                if !w.a.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if w.a.get(t, j).is_zero() {
                    continue;
                }
                let q = -(w.a.get(t, j).div_floor(w.a.get(t, t)));
                w.add_col(j, t, &q);
                if !w.a.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // move the smallest remainder in row/column t into the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    let x = w.a.get(i, t);
                    if !x.is_zero() && x.magnitude() < w.a.get(best.0, best.1).magnitude() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    let x = w.a.get(t, j);
                    if !x.is_zero() && x.magnitude() < w.a.get(best.0, best.1).magnitude() {
                        best = (t, j);
                    }
                }
                w.swap_rows(t, best.0);
                w.swap_cols(t, best.1);
                continue;
            }
            let pivot = w.a.get(t, t).clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a.get(i, j).is_multiple_of(&pivot)));
            match bad {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a.get(t, t).is_negative() {
            w.negate_row(t);
        }
        t += 1;
    }
    let invariant_factors = (0..rows.min(cols)).map(|i| w.a.get(i, i).clone()).take_while(|x| !x.is_zero()).collect();
    SmithForm { invariant_factors, d: w.a, u: w.u, v: w.v }
}
