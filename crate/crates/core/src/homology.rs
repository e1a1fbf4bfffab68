//! First homology of closed oriented 3-manifolds as a finitely generated
//! abelian group, from a surgery linking matrix (cokernel) or from a chain
//! complex, in free-rank + invariant-factor form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intlinalg::{self, IntMatrix};

/// Default cap on torsion enumeration.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// Finitely generated abelian group `Z^b + Z/p1 + ... + Z/pn` with the
/// invariant factors in divisibility order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion_orders: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn new(free_rank: usize, torsion_orders: Vec<BigInt>) -> Result<Self> {
        for w in torsion_orders.windows(2) {
            if !(&w[1] % &w[0]).is_zero() {
                return Err(Error::BadShape(format!(
                    "torsion orders must form a divisibility chain: {} does not divide {}",
                    w[0], w[1]
                )));
            }
        }
        for p in &torsion_orders {
            if *p < BigInt::from(2) {
                return Err(Error::BadShape(format!("torsion order {p} < 2")));
            }
        }
        Ok(AbelianGroup {
            free_rank,
            torsion_orders,
        })
    }

    pub fn trivial() -> Self {
        AbelianGroup {
            free_rank: 0,
            torsion_orders: vec![],
        }
    }

    pub fn from_i64(free_rank: usize, torsion: &[i64]) -> Result<Self> {
        Self::new(free_rank, torsion.iter().map(|&p| BigInt::from(p)).collect())
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion_orders(&self) -> &[BigInt] {
        &self.torsion_orders
    }

    /// The torsion subgroup, forgetting the free part.
    pub fn torsion_part(&self) -> AbelianGroup {
        AbelianGroup {
            free_rank: 0,
            torsion_orders: self.torsion_orders.clone(),
        }
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion_orders.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion_orders.is_empty()
    }

    /// Direct sum, renormalized to canonical invariant factors.
    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let orders: Vec<&BigInt> = self
            .torsion_orders
            .iter()
            .chain(other.torsion_orders.iter())
            .collect();
        let n = orders.len();
        let mut diag = IntMatrix::zero(n, n);
        for (i, p) in orders.into_iter().enumerate() {
            diag.set(i, i, p.clone());
        }
        AbelianGroup {
            free_rank: self.free_rank + other.free_rank,
            torsion_orders: intlinalg::snf(&diag).torsion_factors(),
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        for p in &self.torsion_orders {
            parts.push(format!("Z/{p}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Cokernel `Z^rows / im(m)` as an abelian group.
pub(crate) fn cokernel(m: &IntMatrix) -> AbelianGroup {
    let s = intlinalg::snf(m);
    AbelianGroup {
        free_rank: m.rows() - s.rank(),
        torsion_orders: s.torsion_factors(),
    }
}

/// H1 of the closed 3-manifold presented by the surgery linking matrix `l`,
/// i.e. the cokernel of `l`. Symmetry is required because the presentation
/// also feeds the linking form downstream.
pub fn group_from_presentation(l: &IntMatrix) -> Result<AbelianGroup> {
    if !l.is_square() {
        return Err(Error::NonSquare {
            rows: l.rows(),
            cols: l.cols(),
        });
    }
    if !l.is_symmetric() {
        return Err(Error::NonSymmetric);
    }
    Ok(cokernel(l))
}

/// Chain complex `C3 -> C2 -> C1 -> C0` with vanishing composites.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct ChainComplex {
    pub d3: IntMatrix,
    pub d2: IntMatrix,
    pub d1: IntMatrix,
}

impl ChainComplex {
    pub fn new(d3: IntMatrix, d2: IntMatrix, d1: IntMatrix) -> Result<Self> {
        let c = ChainComplex { d3, d2, d1 };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.d1.cols() != self.d2.rows() {
            return Err(Error::ComplexInvalid(format!(
                "d1 has {} columns but d2 has {} rows",
                self.d1.cols(),
                self.d2.rows()
            )));
        }
        if self.d2.cols() != self.d3.rows() {
            return Err(Error::ComplexInvalid(format!(
                "d2 has {} columns but d3 has {} rows",
                self.d2.cols(),
                self.d3.rows()
            )));
        }
        if !self.d1.mul(&self.d2)?.is_zero() {
            return Err(Error::ComplexInvalid("d1 * d2 != 0".into()));
        }
        if !self.d2.mul(&self.d3)?.is_zero() {
            return Err(Error::ComplexInvalid("d2 * d3 != 0".into()));
        }
        Ok(())
    }
}

/// H1 = ker d1 / im d2, computed through SNF of d1 and the induced
/// presentation of the image inside the kernel.
pub fn homology_of_complex(c: &ChainComplex) -> Result<AbelianGroup> {
    c.validate()?;
    let n1 = c.d1.cols();
    let s1 = intlinalg::snf(&c.d1);
    let r = s1.rank();
    // In the basis given by the columns of v1, the kernel of d1 is spanned by
    // the last n1 - r basis vectors. Coordinates of im d2 in that basis:
    let v1_inv = intlinalg::unimodular_inverse(&s1.v)?;
    let y = v1_inv.mul(&c.d2)?;
    // The first r coordinate rows vanish because d1 * d2 = 0.
    let k = n1 - r;
    let mut x = IntMatrix::zero(k, c.d2.cols());
    for i in 0..k {
        for j in 0..c.d2.cols() {
            x.set(i, j, y.get(r + i, j).clone());
        }
    }
    Ok(cokernel(&x))
}

/// Element of the torsion subgroup: one residue per invariant factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorsionElement {
    coefficients: Vec<BigInt>,
}

impl TorsionElement {
    /// Reduces each coefficient mod the corresponding torsion order.
    pub fn new(group: &AbelianGroup, coefficients: Vec<BigInt>) -> Result<Self> {
        if coefficients.len() != group.torsion_orders.len() {
            return Err(Error::DimensionMismatch(format!(
                "element has {} coefficients, group has {} torsion factors",
                coefficients.len(),
                group.torsion_orders.len()
            )));
        }
        let coefficients = coefficients
            .into_iter()
            .zip(&group.torsion_orders)
            .map(|(c, p)| c.mod_floor(p))
            .collect();
        Ok(TorsionElement { coefficients })
    }

    pub fn zero(group: &AbelianGroup) -> Self {
        TorsionElement {
            coefficients: vec![BigInt::zero(); group.torsion_orders.len()],
        }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &TorsionElement, group: &AbelianGroup) -> Result<TorsionElement> {
        if self.coefficients.len() != other.coefficients.len() {
            return Err(Error::DimensionMismatch("torsion element lengths".into()));
        }
        TorsionElement::new(
            group,
            self.coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// Lexicographic enumeration of all torsion elements, trivial element first.
pub struct TorsionElements {
    orders: Vec<u64>,
    next: Option<Vec<u64>>,
}

impl Iterator for TorsionElements {
    type Item = TorsionElement;

    fn next(&mut self) -> Option<TorsionElement> {
        let cur = self.next.clone()?;
        // odometer: last coordinate fastest
        let mut nxt = cur.clone();
        let mut pos = self.orders.len();
        loop {
            if pos == 0 {
                self.next = None;
                break;
            }
            pos -= 1;
            nxt[pos] += 1;
            if nxt[pos] < self.orders[pos] {
                self.next = Some(nxt);
                break;
            }
            nxt[pos] = 0;
        }
        if self.orders.is_empty() {
            self.next = None;
        }
        Some(TorsionElement {
            coefficients: cur.into_iter().map(BigInt::from).collect(),
        })
    }
}

pub fn torsion_elements(group: &AbelianGroup) -> Result<TorsionElements> {
    torsion_elements_capped(group, DEFAULT_ENUMERATION_CAP)
}

pub fn torsion_elements_capped(group: &AbelianGroup, cap: u64) -> Result<TorsionElements> {
    let total = group.torsion_order();
    if total > BigInt::from(cap) {
        return Err(Error::BudgetExceeded {
            needed: total.to_string(),
            cap,
        });
    }
    let orders: Vec<u64> = group
        .torsion_orders
        .iter()
        .map(|p| p.to_u64().expect("order bounded by cap"))
        .collect();
    let next = Some(vec![0u64; orders.len()]);
    Ok(TorsionElements { orders, next })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use crate::intlinalg::e8_matrix;

    #[test]
    fn presentation_examples() {
        // S1 x S2
        let g = group_from_presentation(&IntMatrix::from_diag(&[0])).unwrap();
        assert_eq!(g, AbelianGroup::from_i64(1, &[]).unwrap());
        // lens spaces L(p,1)
        for p in 2..7 {
            let g = group_from_presentation(&IntMatrix::from_diag(&[p])).unwrap();
            assert_eq!(g, AbelianGroup::from_i64(0, &[p]).unwrap());
        }
        // Poincare sphere
        let g = group_from_presentation(&e8_matrix()).unwrap();
        assert!(g.is_trivial());
        // mixed free + torsion
        let g = group_from_presentation(&IntMatrix::from_diag(&[2, 0])).unwrap();
        assert_eq!(g, AbelianGroup::from_i64(1, &[2]).unwrap());
    }

    #[test]
    fn presentation_errors() {
        assert!(matches!(
            group_from_presentation(&IntMatrix::zero(1, 2)),
            Err(Error::NonSquare { .. })
        ));
        assert!(matches!(
            group_from_presentation(&IntMatrix::from_i64(&[&[0, 1], &[2, 0]])),
            Err(Error::NonSymmetric)
        ));
    }

    #[test]
    fn torsion_equals_det_when_nonsingular() {
        for m in [
            IntMatrix::from_diag(&[2, 3]),
            IntMatrix::from_i64(&[&[4, 2], &[2, 6]]),
            e8_matrix(),
        ] {
            let g = group_from_presentation(&m).unwrap();
            assert_eq!(g.free_rank(), 0);
            assert_eq!(g.torsion_order(), intlinalg::det(&m).unwrap().abs());
        }
    }

    #[test]
    fn block_diagonal_is_direct_sum() {
        let a = IntMatrix::from_diag(&[2, 0]);
        let b = IntMatrix::from_diag(&[3]);
        let g = group_from_presentation(&IntMatrix::block_diag(&a, &b)).unwrap();
        let ga = group_from_presentation(&a).unwrap();
        let gb = group_from_presentation(&b).unwrap();
        assert_eq!(g, ga.direct_sum(&gb));
        assert_eq!(g, AbelianGroup::from_i64(1, &[6]).unwrap());
    }

    #[test]
    fn invalid_chain() {
        // unit maps compose to a nonzero matrix
        let one = IntMatrix::from_diag(&[1]);
        assert!(matches!(
            ChainComplex::new(one.clone(), one.clone(), one.clone()),
            Err(Error::ComplexInvalid(_))
        ));
    }

    #[test]
    fn homology_of_zero_maps_is_free() {
        for k in 0..4 {
            let c = ChainComplex::new(
                IntMatrix::zero(k, 0),
                IntMatrix::zero(k, k),
                IntMatrix::zero(1, k),
            )
            .unwrap();
            let g = homology_of_complex(&c).unwrap();
            assert_eq!(g, AbelianGroup::from_i64(k, &[]).unwrap());
        }
    }

    #[test]
    fn homology_minimal_s1_x_s2() {
        // one 1-cell, one 2-cell, zero boundary maps
        let c = ChainComplex::new(
            IntMatrix::zero(1, 0),
            IntMatrix::zero(1, 1),
            IntMatrix::zero(1, 1),
        )
        .unwrap();
        assert_eq!(
            homology_of_complex(&c).unwrap(),
            AbelianGroup::from_i64(1, &[]).unwrap()
        );
    }

    #[test]
    fn homology_with_torsion() {
        // d2 = [[p]] inside ker d1 = everything (d1 = 0): H1 = Z/p
        for p in 2..6 {
            let c = ChainComplex::new(
                IntMatrix::zero(1, 0),
                IntMatrix::from_diag(&[p]),
                IntMatrix::zero(1, 1),
            )
            .unwrap();
            assert_eq!(
                homology_of_complex(&c).unwrap(),
                AbelianGroup::from_i64(0, &[p]).unwrap()
            );
        }
    }

    #[test]
    fn homology_nontrivial_kernel() {
        // C1 = Z^2, d1 = [1, 0]: kernel rank 1; d2 maps a generator to p * kernel vector.
        // Build d2 with image p*(0,1), which lies in ker d1.
        let d1 = IntMatrix::from_i64(&[&[1, 0]]);
        let d2 = IntMatrix::from_i64(&[&[0], &[3]]);
        let d3 = IntMatrix::zero(1, 0);
        let c = ChainComplex::new(d3, d2, d1).unwrap();
        assert_eq!(
            homology_of_complex(&c).unwrap(),
            AbelianGroup::from_i64(0, &[3]).unwrap()
        );
    }

    #[test]
    fn torsion_enumeration() {
        let g = AbelianGroup::trivial();
        let all: Vec<_> = torsion_elements(&g).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert!(all[0].is_zero());

        let g = AbelianGroup::from_i64(0, &[2]).unwrap();
        let all: Vec<_> = torsion_elements(&g).unwrap().collect();
        assert_eq!(all.len(), 2);
        assert!(all[0].is_zero());

        let g = AbelianGroup::from_i64(0, &[2, 4]).unwrap();
        let all: Vec<_> = torsion_elements(&g).unwrap().collect();
        assert_eq!(all.len(), 8);
        // lexicographic, last coordinate fastest
        assert_eq!(all[0].coefficients(), &[BigInt::from(0), BigInt::from(0)]);
        assert_eq!(all[1].coefficients(), &[BigInt::from(0), BigInt::from(1)]);
        assert_eq!(all[4].coefficients(), &[BigInt::from(1), BigInt::from(0)]);
        // no duplicates
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), 8);
    }

    #[test]
    fn enumeration_budget() {
        let g = AbelianGroup::from_i64(0, &[100]).unwrap();
        assert!(matches!(
            torsion_elements_capped(&g, 99),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(torsion_elements_capped(&g, 100).unwrap().count(), 100);
    }

    #[test]
    fn invalid_group_shapes() {
        assert!(AbelianGroup::from_i64(0, &[3, 2]).is_err());
        assert!(AbelianGroup::from_i64(0, &[1]).is_err());
        assert!(AbelianGroup::from_i64(0, &[2, 6]).is_ok());
    }

    #[test]
    fn presentation_invariance_under_congruence() {
        let l = IntMatrix::from_diag(&[4, 6]);
        // unimodular u
        let u = IntMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let ul = u.mul(&l).unwrap().mul(&u.transpose()).unwrap();
        assert_eq!(
            group_from_presentation(&l).unwrap(),
            group_from_presentation(&ul).unwrap()
        );
    }
}
