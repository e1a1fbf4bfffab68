//! Exact arbitrary-precision integer and rational linear algebra.
//!
//! Provides dense integer matrices, Smith normal form with unimodular
//! transformation matrices, fraction-free (Bareiss) determinants and exact
//! rational inversion. Everything is computed over `BigInt`/`BigRational`;
//! no floating point is involved anywhere in this module.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserialize, Deserializer};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::BadShape(format!(
                "expected {} entries for a {}x{} matrix, got {}",
                rows * cols,
                rows,
                cols,
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Square diagonal matrix from the given entries.
    pub fn from_diag(diag: &[i64]) -> Self {
        let n = diag.len();
        let mut m = Self::zero(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, BigInt::from(d));
        }
        m
    }

    /// Convenience constructor from machine-integer rows; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows: r, cols: c, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..i {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn neg(&self) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Block-diagonal concatenation.
    pub fn block_diag(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        let mut out = Self::zero(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                out.set(i, j, a.get(i, j).clone());
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                out.set(a.rows + i, a.cols + j, b.get(i, j).clone());
            }
        }
        out
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_i += k * row_j
    fn row_addmul(&mut self, i: usize, j: usize, k: &BigInt) {
        for col in 0..self.cols {
            let v = self.get(i, col) + k * self.get(j, col);
            self.set(i, col, v);
        }
    }

    /// col_i += k * col_j
    fn col_addmul(&mut self, i: usize, j: usize, k: &BigInt) {
        for row in 0..self.rows {
            let v = self.get(row, i) + k * self.get(row, j);
            self.set(row, i, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

// JSON schema: {"rows": r, "cols": c, "entries": [[...], ...]} with integer entries.
impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<serde_json::Number>> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        self.get(i, j)
                            .to_string()
                            .parse()
                            .expect("integer string is a valid JSON number")
                    })
                    .collect()
            })
            .collect();
        let mut st = s.serialize_struct("IntMatrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &rows)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            rows: usize,
            cols: usize,
            entries: Vec<Vec<serde_json::Number>>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.entries.len() != raw.rows {
            return Err(de::Error::custom(format!(
                "expected {} rows, got {}",
                raw.rows,
                raw.entries.len()
            )));
        }
        let mut entries = Vec::with_capacity(raw.rows * raw.cols);
        for row in &raw.entries {
            if row.len() != raw.cols {
                return Err(de::Error::custom(format!(
                    "expected {} columns, got {}",
                    raw.cols,
                    row.len()
                )));
            }
            for n in row {
                let s = n.to_string();
                let v: BigInt = s
                    .parse()
                    .map_err(|_| de::Error::custom(format!("non-integer matrix entry: {s}")))?;
                entries.push(v);
            }
        }
        Ok(IntMatrix {
            rows: raw.rows,
            cols: raw.cols,
            entries,
        })
    }
}

/// Dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        RationalMatrix {
            rows: m.rows,
            cols: m.cols,
            entries: m
                .entries
                .iter()
                .map(|e| BigRational::from_integer(e.clone()))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want_one = i == j;
                if self.get(i, j).is_one() != want_one || (!want_one && !self.get(i, j).is_zero()) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Smith normal form `u * m * v = d` with `u`, `v` unimodular and `d`
/// diagonal with positive invariant factors satisfying the divisibility
/// chain, zeros trailing.
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfDecomposition {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.d.diagonal().iter().filter(|e| !e.is_zero()).count()
    }

    /// Invariant factors > 1, in divisibility order.
    pub fn torsion_factors(&self) -> Vec<BigInt> {
        self.d
            .diagonal()
            .into_iter()
            .filter(|e| !e.is_zero() && !e.is_one())
            .collect()
    }
}

/// Smith normal form by row/column reduction with minimal-absolute-value
/// pivoting (limits entry growth; exactness is unaffected).
pub fn snf(m: &IntMatrix) -> SnfDecomposition {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);

    let mut t = 0;
    while t < r.min(c) {
        // Minimal |entry| != 0 in the trailing submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                let e = a.get(i, j);
                if e.is_zero() {
                    continue;
                }
                match pivot {
                    Some((pi, pj)) if a.get(pi, pj).abs() <= e.abs() => {}
                    _ => pivot = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            // Clear column t below the pivot. A nonzero remainder becomes the
            // new (strictly smaller) pivot, so this terminates.
            let mut dirty = false;
            for i in t + 1..r {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t) / a.get(t, t);
                if !q.is_zero() {
                    let k = -q;
                    a.row_addmul(i, t, &k);
                    u.row_addmul(i, t, &k);
                }
                if !a.get(i, t).is_zero() {
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            for j in t + 1..c {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j) / a.get(t, t);
                if !q.is_zero() {
                    let k = -q;
                    a.col_addmul(j, t, &k);
                    v.col_addmul(j, t, &k);
                }
                if !a.get(t, j).is_zero() {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Pivot must divide every entry of the trailing submatrix for the
            // divisibility chain; fold an offending row into the pivot row.
            let mut done = true;
            'div: for i in t + 1..r {
                for j in t + 1..c {
                    if !(a.get(i, j) % a.get(t, t)).is_zero() {
                        let one = BigInt::one();
                        a.row_addmul(t, i, &one);
                        u.row_addmul(t, i, &one);
                        done = false;
                        break 'div;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    SnfDecomposition { u, d: a, v }
}

/// Rank over the rationals, via SNF.
pub fn rank(m: &IntMatrix) -> usize {
    snf(m).rank()
}

/// Exact determinant by fraction-free Bareiss elimination.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a.get(k, k) * a.get(i, j) - a.get(i, k) * a.get(k, j);
                a.set(i, j, num / &prev); // exact division, Bareiss invariant
            }
        }
        prev = a.get(k, k).clone();
    }
    let d = a.get(n - 1, n - 1).clone();
    Ok(if sign < 0 { -d } else { d })
}

/// Exact inverse over the rationals (Gauss-Jordan).
pub fn rational_inverse(m: &IntMatrix) -> Result<RationalMatrix> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let mut a = RationalMatrix::from_int(m);
    let mut inv = RationalMatrix::identity(n);
    for k in 0..n {
        let p = (k..n)
            .find(|&i| !a.get(i, k).is_zero())
            .ok_or(Error::SingularMatrix)?;
        for j in 0..n {
            let (ik, pk) = (k * n + j, p * n + j);
            a.entries.swap(ik, pk);
            inv.entries.swap(ik, pk);
        }
        let piv = a.get(k, k).clone();
        for j in 0..n {
            a.set(k, j, a.get(k, j) / &piv);
            inv.set(k, j, inv.get(k, j) / &piv);
        }
        for i in 0..n {
            if i == k || a.get(i, k).is_zero() {
                continue;
            }
            let f = a.get(i, k).clone();
            for j in 0..n {
                a.set(i, j, a.get(i, j) - &f * a.get(k, j));
                inv.set(i, j, inv.get(i, j) - &f * inv.get(k, j));
            }
        }
    }
    Ok(inv)
}

/// Integer inverse of a unimodular matrix.
pub fn unimodular_inverse(m: &IntMatrix) -> Result<IntMatrix> {
    let inv = rational_inverse(m)?;
    let mut out = IntMatrix::zero(inv.rows, inv.cols);
    for i in 0..inv.rows {
        for j in 0..inv.cols {
            let e = inv.get(i, j);
            if !e.denom().is_one() {
                return Err(Error::BadShape("matrix is not unimodular".into()));
            }
            out.set(i, j, e.numer().clone());
        }
    }
    Ok(out)
}

/// The E8 plumbing matrix: diagonal 2s, +1 for each edge of the E8 tree
/// (branch vertex with arms of 1, 2 and 4 edges). |det| = 1.
pub fn e8_matrix() -> IntMatrix {
    let mut m = IntMatrix::from_diag(&[2; 8]);
    // vertex 0 is the branch; arms 0-1, 0-2-3, 0-4-5-6-7
    for &(i, j) in &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7)] {
        m.set(i, j, BigInt::one());
        m.set(j, i, BigInt::one());
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent determinant oracle: cofactor expansion.
    fn det_cofactor(m: &IntMatrix) -> BigInt {
        let n = m.rows();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            if m.get(0, j).is_zero() {
                continue;
            }
            let mut sub = IntMatrix::zero(n - 1, n - 1);
            for i in 1..n {
                let mut cc = 0;
                for jj in 0..n {
                    if jj == j {
                        continue;
                    }
                    sub.set(i - 1, cc, m.get(i, jj).clone());
                    cc += 1;
                }
            }
            let term = m.get(0, j) * det_cofactor(&sub);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn check_snf(m: &IntMatrix) -> SnfDecomposition {
        let s = snf(m);
        let umv = s.u.mul(m).unwrap().mul(&s.v).unwrap();
        assert_eq!(umv, s.d, "u*m*v != d for {:?}", m);
        assert!(det(&s.u).unwrap().abs().is_one());
        assert!(det(&s.v).unwrap().abs().is_one());
        let diag = s.d.diagonal();
        for i in 0..diag.len() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero(), "off-diagonal nonzero");
                }
            }
        }
        let mut seen_zero = false;
        for w in diag.windows(2) {
            if w[0].is_zero() {
                seen_zero = true;
            }
            if seen_zero {
                assert!(w[1].is_zero(), "zeros must trail");
            } else if !w[1].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken");
            }
        }
        for e in &diag {
            assert!(!e.is_negative());
        }
        s
    }

    #[test]
    fn snf_diag_2_3() {
        let s = check_snf(&IntMatrix::from_diag(&[2, 3]));
        assert_eq!(s.d, IntMatrix::from_diag(&[1, 6]));
    }

    #[test]
    fn snf_zero_matrix() {
        let s = check_snf(&IntMatrix::zero(2, 2));
        assert!(s.d.is_zero());
    }

    #[test]
    fn snf_one_by_one() {
        for p in 1..8 {
            let s = check_snf(&IntMatrix::from_diag(&[p]));
            assert_eq!(s.d, IntMatrix::from_diag(&[p]));
        }
    }

    #[test]
    fn snf_empty() {
        let s = check_snf(&IntMatrix::zero(0, 0));
        assert_eq!(s.d.rows(), 0);
        assert_eq!(s.u.rows(), 0);
        assert_eq!(s.v.rows(), 0);
    }

    #[test]
    fn snf_rectangular() {
        check_snf(&IntMatrix::from_i64(&[&[2, 4, 4]]));
        check_snf(&IntMatrix::from_i64(&[&[2], &[4], &[4]]));
    }

    #[test]
    fn snf_e8_is_identity() {
        let e8 = e8_matrix();
        assert!(det(&e8).unwrap().abs().is_one());
        assert_eq!(det(&e8).unwrap(), det_cofactor(&e8));
        let s = check_snf(&e8);
        assert_eq!(s.d, IntMatrix::identity(8));
    }

    #[test]
    fn snf_idempotent_on_d() {
        let s = snf(&IntMatrix::from_i64(&[&[2, 1], &[1, 1]]));
        let s2 = snf(&s.d);
        assert_eq!(s2.d, s.d);
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&IntMatrix::from_diag(&[2, 3])).unwrap(), BigInt::from(6));
        assert_eq!(det(&IntMatrix::from_diag(&[0])).unwrap(), BigInt::zero());
        assert_eq!(det(&IntMatrix::zero(0, 0)).unwrap(), BigInt::one());
        let m = IntMatrix::from_i64(&[&[3, 1, -2], &[0, 4, 5], &[-1, 2, 2]]);
        assert_eq!(det(&m).unwrap(), det_cofactor(&m));
        assert!(matches!(
            det(&IntMatrix::zero(2, 3)),
            Err(Error::NonSquare { .. })
        ));
    }

    #[test]
    fn det_matches_snf_product() {
        let m = IntMatrix::from_i64(&[&[4, 2, 0], &[2, 6, 2], &[0, 2, 8]]);
        let d = det(&m).unwrap();
        let prod: BigInt = snf(&m).d.diagonal().iter().product();
        assert_eq!(d.abs(), prod);
    }

    #[test]
    fn rational_inverse_examples() {
        let inv = rational_inverse(&IntMatrix::from_diag(&[2])).unwrap();
        assert_eq!(
            *inv.get(0, 0),
            BigRational::new(BigInt::one(), BigInt::from(2))
        );

        let id3 = IntMatrix::identity(3);
        assert!(rational_inverse(&id3).unwrap().is_identity());

        // [[2,1],[1,1]]^-1 = [[1,-1],[-1,2]]
        let m = IntMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = rational_inverse(&m).unwrap();
        let expect = RationalMatrix::from_int(&IntMatrix::from_i64(&[&[1, -1], &[-1, 2]]));
        assert_eq!(inv, expect);
        assert!(RationalMatrix::from_int(&m).mul(&inv).unwrap().is_identity());

        assert!(matches!(
            rational_inverse(&IntMatrix::from_diag(&[0])),
            Err(Error::SingularMatrix)
        ));
    }

    #[test]
    fn json_round_trip() {
        let m = IntMatrix::from_i64(&[&[2, -1], &[-1, 2]]);
        let js = serde_json::to_string(&m).unwrap();
        assert_eq!(js, r#"{"rows":2,"cols":2,"entries":[[2,-1],[-1,2]]}"#);
        let back: IntMatrix = serde_json::from_str(&js).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn json_rejects_non_integer() {
        let r: std::result::Result<IntMatrix, _> =
            serde_json::from_str(r#"{"rows":1,"cols":1,"entries":[[1.5]]}"#);
        assert!(r.is_err());
    }

    #[test]
    fn json_big_entries() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let m = IntMatrix::new(1, 1, vec![big.clone()]).unwrap();
        let js = serde_json::to_string(&m).unwrap();
        let back: IntMatrix = serde_json::from_str(&js).unwrap();
        assert_eq!(back.get(0, 0), &big);
    }
}
