//! The torsion linking form of a surgery presentation and the pairing
//! formulas between torsion origins, free origins and zero modes.
//!
//! With `u * l * v = d` in Smith normal form, the torsion generator for an
//! invariant factor `d_i > 1` is `g_i = u^-1 e_i` in the cokernel of `l`,
//! and `l * (v e_i) = d_i g_i`. The linking form on those generators is
//! `Q(g_i, g_j) = -(v^T u^-1)_{ij} / d_i mod 1`, which for nonsingular `l`
//! coincides with `-g_i^T l^-1 g_j mod 1`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::homology::{AbelianGroup, TorsionElement};
use crate::intlinalg::{self, IntMatrix};

/// Exact rational in `[0, 1)`, the canonical representative of a class in Q/Z.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModOne {
    value: BigRational,
}

impl ModOne {
    pub fn new(r: BigRational) -> Self {
        let f = r.floor();
        ModOne { value: r - f }
    }

    pub fn zero() -> Self {
        ModOne {
            value: BigRational::zero(),
        }
    }

    pub fn from_fraction(num: i64, den: i64) -> Self {
        ModOne::new(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn numer(&self) -> &BigInt {
        self.value.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.value.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn add(&self, other: &ModOne) -> ModOne {
        ModOne::new(&self.value + &other.value)
    }

    pub fn neg(&self) -> ModOne {
        ModOne::new(-&self.value)
    }

    /// `k * self mod 1`.
    pub fn scale_int(&self, k: &BigInt) -> ModOne {
        ModOne::new(&self.value * BigRational::from_integer(k.clone()))
    }

    /// Reduced `"num/den"` string, denominator always present.
    pub fn as_fraction_string(&self) -> String {
        format!("{}/{}", self.value.numer(), self.value.denom())
    }
}

impl fmt::Debug for ModOne {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_fraction_string())
    }
}

impl fmt::Display for ModOne {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_fraction_string())
    }
}

/// Symmetric bilinear form with values in Q/Z on the torsion subgroup,
/// expressed on the SNF-derived generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingForm {
    group: AbelianGroup,
    q: Vec<Vec<ModOne>>,
}

impl LinkingForm {
    pub fn new(group: AbelianGroup, q: Vec<Vec<ModOne>>) -> Result<Self> {
        if group.free_rank() != 0 {
            return Err(Error::BadShape(
                "linking form is defined on the torsion part only".into(),
            ));
        }
        let n = group.torsion_orders().len();
        if q.len() != n || q.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "form matrix must be {n}x{n}"
            )));
        }
        for i in 0..n {
            for j in 0..n {
                if q[i][j] != q[j][i] {
                    return Err(Error::NonSymmetric);
                }
                // p_i * q_ij and p_j * q_ij must vanish mod 1
                for p in [&group.torsion_orders()[i], &group.torsion_orders()[j]] {
                    if !q[i][j].scale_int(p).is_zero() {
                        return Err(Error::BadShape(format!(
                            "form entry {} is not annihilated by torsion order {p}",
                            q[i][j]
                        )));
                    }
                }
            }
        }
        Ok(LinkingForm { group, q })
    }

    pub fn trivial() -> Self {
        LinkingForm {
            group: AbelianGroup::trivial(),
            q: vec![],
        }
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn entries(&self) -> &[Vec<ModOne>] {
        &self.q
    }
}

// JSON: {"torsion": [p1, ...], "q": [["num/den", ...], ...]}
impl Serialize for LinkingForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let torsion: Vec<serde_json::Number> = self
            .group
            .torsion_orders()
            .iter()
            .map(|p| p.to_string().parse().expect("integer"))
            .collect();
        let q: Vec<Vec<String>> = self
            .q
            .iter()
            .map(|row| row.iter().map(ModOne::as_fraction_string).collect())
            .collect();
        let mut st = s.serialize_struct("LinkingForm", 2)?;
        st.serialize_field("torsion", &torsion)?;
        st.serialize_field("q", &q)?;
        st.end()
    }
}

/// Linking form of a nonsingular symmetric presentation. Degenerate inputs
/// are rejected; split off the free part first (see [`torsion_linking_form`]).
pub fn linking_form_from_matrix(l: &IntMatrix) -> Result<LinkingForm> {
    if !l.is_square() {
        return Err(Error::NonSquare {
            rows: l.rows(),
            cols: l.cols(),
        });
    }
    if !l.is_symmetric() {
        return Err(Error::NonSymmetric);
    }
    if intlinalg::det(l)?.is_zero() {
        return Err(Error::SingularMatrix);
    }
    torsion_linking_form(l)
}

/// Linking form on the torsion part of `coker(l)` for any symmetric `l`,
/// including presentations with free rank (zero invariant factors).
pub fn torsion_linking_form(l: &IntMatrix) -> Result<LinkingForm> {
    if !l.is_square() {
        return Err(Error::NonSquare {
            rows: l.rows(),
            cols: l.cols(),
        });
    }
    if !l.is_symmetric() {
        return Err(Error::NonSymmetric);
    }
    let s = intlinalg::snf(l);
    let u_inv = intlinalg::unimodular_inverse(&s.u)?;
    let w = s.v.transpose().mul(&u_inv)?;
    let diag = s.d.diagonal();
    let torsion_idx: Vec<usize> = (0..diag.len())
        .filter(|&i| !diag[i].is_zero() && !diag[i].is_one())
        .collect();
    let orders: Vec<BigInt> = torsion_idx.iter().map(|&i| diag[i].clone()).collect();
    let group = AbelianGroup::new(0, orders)?;
    let q: Vec<Vec<ModOne>> = torsion_idx
        .iter()
        .map(|&i| {
            torsion_idx
                .iter()
                .map(|&j| {
                    ModOne::new(BigRational::new(-w.get(i, j).clone(), diag[i].clone()))
                })
                .collect()
        })
        .collect();
    // constructor re-checks symmetry and well-definedness of the transported form
    LinkingForm::new(group, q)
}

/// `Q(a, b) mod 1`, bilinear in the torsion coefficients.
pub fn eval_q(form: &LinkingForm, a: &TorsionElement, b: &TorsionElement) -> Result<ModOne> {
    let n = form.q.len();
    if a.coefficients().len() != n || b.coefficients().len() != n {
        return Err(Error::DimensionMismatch(format!(
            "expected {n} coefficients"
        )));
    }
    let mut acc = BigRational::zero();
    for i in 0..n {
        let ai = &a.coefficients()[i];
        if ai.is_zero() {
            continue;
        }
        for j in 0..n {
            let bj = &b.coefficients()[j];
            if bj.is_zero() {
                continue;
            }
            acc += form.q[i][j].value() * BigRational::from_integer(ai * bj);
        }
    }
    Ok(ModOne::new(acc))
}

/// Flat translation coefficients, one per free generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroModeVector {
    pub theta: Vec<ModOne>,
}

/// Integer origin coefficients over the free generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeOriginVector {
    pub m: Vec<BigInt>,
}

impl FreeOriginVector {
    pub fn from_i64(m: &[i64]) -> Self {
        FreeOriginVector {
            m: m.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }
}

/// Pairing of a free origin with a zero mode: `m . theta mod 1`.
pub fn pairing_free_zero_mode(m: &FreeOriginVector, theta: &ZeroModeVector) -> Result<ModOne> {
    if m.m.len() != theta.theta.len() {
        return Err(Error::DimensionMismatch(format!(
            "origin has {} entries, zero mode has {}",
            m.m.len(),
            theta.theta.len()
        )));
    }
    let mut acc = ModOne::zero();
    for (mi, ti) in m.m.iter().zip(&theta.theta) {
        acc = acc.add(&ti.scale_int(mi));
    }
    Ok(acc)
}

/// Pairing of two free origins: identically zero in Q/Z, the diagonal case
/// by the zero-regularisation convention.
pub fn pairing_free_free(m: &FreeOriginVector, n: &FreeOriginVector) -> Result<ModOne> {
    if m.m.len() != n.m.len() {
        return Err(Error::DimensionMismatch(format!(
            "origin lengths {} vs {}",
            m.m.len(),
            n.m.len()
        )));
    }
    Ok(ModOne::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use crate::homology::torsion_elements;
    use crate::intlinalg::e8_matrix;

    fn q11(form: &LinkingForm) -> &ModOne {
        &form.entries()[0][0]
    }

    #[test]
    fn mod_one_reduction() {
        assert_eq!(ModOne::from_fraction(-1, 2), ModOne::from_fraction(1, 2));
        assert_eq!(ModOne::from_fraction(7, 3), ModOne::from_fraction(1, 3));
        assert_eq!(ModOne::from_fraction(-1, 3), ModOne::from_fraction(2, 3));
        assert!(ModOne::from_fraction(6, 3).is_zero());
        assert_eq!(ModOne::from_fraction(1, 2).as_fraction_string(), "1/2");
        assert_eq!(ModOne::zero().as_fraction_string(), "0/1");
    }

    #[test]
    fn form_of_2() {
        let form = linking_form_from_matrix(&IntMatrix::from_diag(&[2])).unwrap();
        assert_eq!(form.group().torsion_orders(), &[BigInt::from(2)]);
        assert_eq!(*q11(&form), ModOne::from_fraction(1, 2));
    }

    #[test]
    fn form_of_3_pins_sign() {
        // -1/3 mod 1 = 2/3 under the chosen sign convention
        let form = linking_form_from_matrix(&IntMatrix::from_diag(&[3])).unwrap();
        assert_eq!(*q11(&form), ModOne::from_fraction(2, 3));
    }

    #[test]
    fn form_of_e8_is_empty() {
        let form = linking_form_from_matrix(&e8_matrix()).unwrap();
        assert!(form.group().is_trivial());
        assert!(form.entries().is_empty());
    }

    #[test]
    fn form_rejects_bad_inputs() {
        assert!(matches!(
            linking_form_from_matrix(&IntMatrix::from_diag(&[0])),
            Err(Error::SingularMatrix)
        ));
        assert!(matches!(
            linking_form_from_matrix(&IntMatrix::from_i64(&[&[0, 1], &[2, 0]])),
            Err(Error::NonSymmetric)
        ));
        assert!(matches!(
            linking_form_from_matrix(&IntMatrix::zero(1, 2)),
            Err(Error::NonSquare { .. })
        ));
    }

    /// Brute-force oracle: on coker(l) with explicit coset representatives,
    /// the form is -x^T l^-1 y mod 1. Compares diagonal value multisets.
    fn diagonal_multiset_bruteforce(l: &IntMatrix) -> Vec<ModOne> {
        let inv = intlinalg::rational_inverse(l).unwrap();
        let n = l.rows();
        let diag_bound: Vec<i64> = (0..n)
            .map(|_| intlinalg::det(l).unwrap().abs().try_into().unwrap())
            .collect();
        // enumerate representatives x in a box; collect distinct cosets via
        // reduction of u*x mod d
        let s = intlinalg::snf(l);
        let mut seen = std::collections::HashSet::new();
        let mut values = Vec::new();
        let mut x = vec![0i64; n];
        loop {
            // coset key: u*x mod diag(d)
            let mut key = Vec::new();
            for i in 0..n {
                let mut acc = BigInt::zero();
                for j in 0..n {
                    acc += s.u.get(i, j) * BigInt::from(x[j]);
                }
                let d = s.d.get(i, i);
                if !d.is_zero() {
                    acc = num_integer::Integer::mod_floor(&acc, d);
                }
                key.push(acc);
            }
            if seen.insert(key) {
                // -x^T l^-1 x mod 1
                let mut acc = BigRational::zero();
                for i in 0..n {
                    for j in 0..n {
                        acc += inv.get(i, j) * BigRational::from_integer(BigInt::from(x[i] * x[j]));
                    }
                }
                values.push(ModOne::new(-acc));
            }
            // advance
            let mut pos = n;
            loop {
                if pos == 0 {
                    let mut sorted = values;
                    sorted.sort();
                    return sorted;
                }
                pos -= 1;
                x[pos] += 1;
                if x[pos] < diag_bound[pos] {
                    break;
                }
                x[pos] = 0;
            }
        }
    }

    #[test]
    fn form_of_diag_2_3_matches_bruteforce() {
        let l = IntMatrix::from_diag(&[2, 3]);
        let expected = diagonal_multiset_bruteforce(&l);
        let form = linking_form_from_matrix(&l).unwrap();
        let mut got: Vec<ModOne> = torsion_elements(form.group())
            .unwrap()
            .map(|t| eval_q(&form, &t, &t).unwrap())
            .collect();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn form_of_lens_5_2_chain_matches_bruteforce() {
        let l = IntMatrix::from_i64(&[&[3, 1], &[1, 2]]);
        let expected = diagonal_multiset_bruteforce(&l);
        let form = linking_form_from_matrix(&l).unwrap();
        let mut got: Vec<ModOne> = torsion_elements(form.group())
            .unwrap()
            .map(|t| eval_q(&form, &t, &t).unwrap())
            .collect();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn torsion_form_with_free_part() {
        // diag(2, 0): torsion Z/2 with Q = 1/2, free part ignored by the form
        let form = torsion_linking_form(&IntMatrix::from_diag(&[2, 0])).unwrap();
        assert_eq!(form.group().torsion_orders(), &[BigInt::from(2)]);
        assert_eq!(*q11(&form), ModOne::from_fraction(1, 2));
        // pure free part: empty form
        let form = torsion_linking_form(&IntMatrix::from_diag(&[0])).unwrap();
        assert!(form.group().is_trivial());
    }

    #[test]
    fn eval_q_examples() {
        let form = linking_form_from_matrix(&IntMatrix::from_diag(&[3])).unwrap();
        let g = form.group().clone();
        let z = TorsionElement::zero(&g);
        let two = TorsionElement::new(&g, vec![BigInt::from(2)]).unwrap();
        assert!(eval_q(&form, &z, &two).unwrap().is_zero());
        // q = 2/3 on the generator: Q((2),(2)) = 4 * 2/3 mod 1 = 2/3
        assert_eq!(
            eval_q(&form, &two, &two).unwrap(),
            ModOne::from_fraction(2, 3)
        );

        let form2 = linking_form_from_matrix(&IntMatrix::from_diag(&[2])).unwrap();
        let g2 = form2.group().clone();
        let one = TorsionElement::new(&g2, vec![BigInt::one()]).unwrap();
        assert_eq!(
            eval_q(&form2, &one, &one).unwrap(),
            ModOne::from_fraction(1, 2)
        );
        let bad = TorsionElement::zero(&AbelianGroup::trivial());
        assert!(matches!(
            eval_q(&form2, &bad, &bad),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn eval_q_bilinear_and_residue_independent() {
        for l in [
            IntMatrix::from_diag(&[4]),
            IntMatrix::from_diag(&[2, 6]),
            IntMatrix::from_i64(&[&[4, 2], &[2, 6]]),
        ] {
            let form = linking_form_from_matrix(&l).unwrap();
            let g = form.group().clone();
            let elems: Vec<_> = torsion_elements(&g).unwrap().collect();
            for a in &elems {
                for b in &elems {
                    // symmetry
                    assert_eq!(
                        eval_q(&form, a, b).unwrap(),
                        eval_q(&form, b, a).unwrap()
                    );
                    for c in &elems {
                        // bilinearity in the first slot
                        let lhs = eval_q(&form, &a.add(b, &g).unwrap(), c).unwrap();
                        let rhs = eval_q(&form, a, c)
                            .unwrap()
                            .add(&eval_q(&form, b, c).unwrap());
                        assert_eq!(lhs, rhs);
                    }
                }
            }
            // residue independence: add p_i to a coefficient
            if let Some(first) = elems.get(1) {
                let mut coeffs = first.coefficients().to_vec();
                coeffs[0] += g.torsion_orders()[0].clone();
                let shifted = TorsionElement::new(&g, coeffs).unwrap();
                assert_eq!(
                    eval_q(&form, first, first).unwrap(),
                    eval_q(&form, &shifted, &shifted).unwrap()
                );
            }
        }
    }

    #[test]
    fn nondegenerate_forms_are_nondegenerate() {
        for l in [
            IntMatrix::from_diag(&[5]),
            IntMatrix::from_diag(&[2, 6]),
            IntMatrix::from_i64(&[&[4, 2], &[2, 6]]),
        ] {
            let form = linking_form_from_matrix(&l).unwrap();
            let elems: Vec<_> = torsion_elements(form.group()).unwrap().collect();
            for a in elems.iter().filter(|e| !e.is_zero()) {
                assert!(
                    elems
                        .iter()
                        .any(|b| !eval_q(&form, a, b).unwrap().is_zero()),
                    "degenerate at {a:?} for {l:?}"
                );
            }
        }
    }

    #[test]
    fn free_pairings() {
        let m = FreeOriginVector::from_i64(&[1]);
        let theta = ZeroModeVector {
            theta: vec![ModOne::from_fraction(1, 4)],
        };
        assert_eq!(
            pairing_free_zero_mode(&m, &theta).unwrap(),
            ModOne::from_fraction(1, 4)
        );

        let m = FreeOriginVector::from_i64(&[2, 3]);
        let theta = ZeroModeVector {
            theta: vec![ModOne::from_fraction(1, 2), ModOne::from_fraction(1, 3)],
        };
        assert!(pairing_free_zero_mode(&m, &theta).unwrap().is_zero());

        let zero = FreeOriginVector::from_i64(&[0, 0]);
        assert!(pairing_free_zero_mode(&zero, &theta).unwrap().is_zero());

        // free-free always vanishes, diagonal included
        let n = FreeOriginVector::from_i64(&[7, -5]);
        assert!(pairing_free_free(&m, &n).unwrap().is_zero());
        assert!(pairing_free_free(&m, &m).unwrap().is_zero());
        let empty = FreeOriginVector::from_i64(&[]);
        assert!(pairing_free_free(&empty, &empty).unwrap().is_zero());
        assert!(pairing_free_free(&m, &empty).is_err());
        assert!(matches!(
            pairing_free_zero_mode(&FreeOriginVector::from_i64(&[1]), &theta),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn json_shape() {
        let form = linking_form_from_matrix(&IntMatrix::from_diag(&[3])).unwrap();
        let js = serde_json::to_string(&form).unwrap();
        assert_eq!(js, r#"{"torsion":[3],"q":[["2/3"]]}"#);
    }
}
