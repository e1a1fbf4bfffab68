//! Catalog of closed oriented 3-manifolds given by integer symmetric surgery
//! linking matrices: spheres, lens spaces, connected sums and the E8
//! plumbing.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::homology::{group_from_presentation, AbelianGroup};
use crate::intlinalg::{self, IntMatrix};
use crate::linking::{torsion_linking_form, LinkingForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Positive,
    Negative,
}

/// A closed oriented 3-manifold presented by a symmetric surgery linking
/// matrix; the 0x0 matrix presents S^3. Orientation reversal negates the
/// matrix at presentation-export time.
#[derive(Clone, Debug)]
pub struct Manifold {
    name: String,
    presentation: IntMatrix,
    orientation: Orientation,
}

impl Manifold {
    pub fn from_matrix(name: impl Into<String>, presentation: IntMatrix) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::InvalidArgument("manifold name must be nonempty".into()));
        }
        if !presentation.is_square() {
            return Err(Error::NonSquare {
                rows: presentation.rows(),
                cols: presentation.cols(),
            });
        }
        if !presentation.is_symmetric() {
            return Err(Error::NonSymmetric);
        }
        Ok(Manifold {
            name,
            presentation,
            orientation: Orientation::Positive,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// The surgery linking matrix with the orientation applied.
    pub fn presentation(&self) -> IntMatrix {
        match self.orientation {
            Orientation::Positive => self.presentation.clone(),
            Orientation::Negative => self.presentation.neg(),
        }
    }

    pub fn reversed(&self) -> Manifold {
        Manifold {
            name: format!("-{}", self.name),
            presentation: self.presentation.clone(),
            orientation: match self.orientation {
                Orientation::Positive => Orientation::Negative,
                Orientation::Negative => Orientation::Positive,
            },
        }
    }

    pub fn homology(&self) -> Result<AbelianGroup> {
        group_from_presentation(&self.presentation())
    }

    /// Linking form on the torsion part of H1.
    pub fn linking_form(&self) -> Result<LinkingForm> {
        torsion_linking_form(&self.presentation())
    }
}

/// S^3: empty surgery.
pub fn sphere3() -> Manifold {
    Manifold::from_matrix("S3", IntMatrix::zero(0, 0)).expect("valid")
}

/// S^1 x S^2: 0-framed unknot.
pub fn s1_x_s2() -> Manifold {
    Manifold::from_matrix("S1xS2", IntMatrix::from_diag(&[0])).expect("valid")
}

/// Lens space L(p, q) by surgery on a chain link from the minus-sign
/// continued fraction p/q = a1 - 1/(a2 - 1/(...)), all a_i >= 2, with +1
/// off-diagonals. L(1, q) is S^3 presented by [[1]].
pub fn lens_space(p: i64, q: i64) -> Result<Manifold> {
    if p < 1 {
        return Err(Error::InvalidArgument(format!("lens space needs p >= 1, got {p}")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let q_canon = q.rem_euclid(p.max(1));
    let name = format!("L({p},{q_canon})");
    if p == 1 {
        return Manifold::from_matrix(name, IntMatrix::from_diag(&[1]));
    }
    // continued fraction with ceiling quotients: p/q = a - 1/(q/(a q - p))
    let (mut num, mut den) = (p, q_canon);
    let mut terms = Vec::new();
    while den > 0 {
        let a = Integer::div_ceil(&num, &den);
        terms.push(a);
        let next = a * den - num;
        num = den;
        den = next;
    }
    let n = terms.len();
    let mut m = IntMatrix::zero(n, n);
    for (i, &a) in terms.iter().enumerate() {
        m.set(i, i, BigInt::from(a));
        if i + 1 < n {
            m.set(i, i + 1, BigInt::from(1));
            m.set(i + 1, i, BigInt::from(1));
        }
    }
    Manifold::from_matrix(name, m)
}

/// Connected sum: block-diagonal surgery presentation.
pub fn connected_sum(a: &Manifold, b: &Manifold) -> Manifold {
    Manifold {
        name: format!("sum({},{})", a.name(), b.name()),
        presentation: IntMatrix::block_diag(&a.presentation(), &b.presentation()),
        orientation: Orientation::Positive,
    }
}

/// The Poincare homology sphere: E8 plumbing, |det| = 1, trivial H1.
pub fn poincare_sphere() -> Manifold {
    Manifold::from_matrix("Poincare", intlinalg::e8_matrix()).expect("valid")
}
