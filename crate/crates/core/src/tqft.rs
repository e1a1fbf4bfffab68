//! Exact partition functions of the abelian Chern-Simons and BF theories
//! from a torsion linking form: the single and double exponential sums over
//! the torsion subgroup, the gcd closed form for BF, and the exact
//! |Z_CS|^2 vs Z_BF comparison.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::cyclotomic::{CyclotomicNumber, GaussianApprox};
use crate::error::{Error, Result};
use crate::homology::{torsion_elements_capped, AbelianGroup};
use crate::linking::LinkingForm;

/// Default cap on (pairs of) torsion elements enumerated by the sums.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Default digit count for the numeric view of exact results.
pub const DEFAULT_PRECISION: u32 = 12;

/// Integer coupling; quantization is enforced by the type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Level(pub i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theory {
    ChernSimons,
    Bf,
}

impl Theory {
    pub fn as_str(&self) -> &'static str {
        match self {
            Theory::ChernSimons => "CS",
            Theory::Bf => "BF",
        }
    }
}

/// Exact partition function value with its numeric view and provenance.
#[derive(Clone, Debug)]
pub struct PartitionResult {
    pub theory: Theory,
    pub level: i64,
    pub torsion: Vec<BigInt>,
    pub exact: CyclotomicNumber,
    pub numeric: GaussianApprox,
    /// True when the BF value came from the gcd product instead of the
    /// double sum (budget delegation).
    pub via_closed_form: bool,
}

// JSON: {"theory":"CS"|"BF","level":N,"torsion":[...],"exact":{...},"numeric":{...}}
impl Serialize for PartitionResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let torsion: Vec<serde_json::Number> = self
            .torsion
            .iter()
            .map(|p| p.to_string().parse().expect("integer"))
            .collect();
        let mut st = s.serialize_struct("PartitionResult", 6)?;
        st.serialize_field("theory", self.theory.as_str())?;
        st.serialize_field("level", &self.level)?;
        st.serialize_field("torsion", &torsion)?;
        st.serialize_field("exact", &self.exact)?;
        st.serialize_field("numeric", &self.numeric)?;
        st.serialize_field("closed_form", &self.via_closed_form)?;
        st.end()
    }
}

/// Common phase lattice of a linking form: the least common denominator `l`
/// of all form entries and the integer matrix `l * q`.
struct PhaseLattice {
    modulus: u64,
    q_num: Vec<Vec<i128>>,
}

fn phase_lattice(form: &LinkingForm) -> Result<PhaseLattice> {
    let n = form.group().torsion_orders().len();
    let mut modulus = BigInt::from(1);
    for row in form.entries() {
        for e in row {
            modulus = modulus.lcm(e.denom());
        }
    }
    let modulus_u64 = modulus.to_u64().ok_or_else(|| Error::OrderOverflow {
        needed: modulus.to_string(),
        cap: u64::MAX,
    })?;
    let mut q_num = vec![vec![0i128; n]; n];
    for (i, row) in form.entries().iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            let scaled = e.numer() * (&modulus / e.denom());
            q_num[i][j] = scaled.to_i128().ok_or_else(|| Error::OrderOverflow {
                needed: scaled.to_string(),
                cap: u64::MAX,
            })?;
        }
    }
    Ok(PhaseLattice {
        modulus: modulus_u64,
        q_num,
    })
}

/// All torsion elements as small integer coordinate vectors.
fn element_coords(group: &AbelianGroup, cap: u64) -> Result<Vec<Vec<i128>>> {
    Ok(torsion_elements_capped(group, cap)?
        .map(|t| {
            t.coefficients()
                .iter()
                .map(|c| c.to_i128().expect("residue bounded by order"))
                .collect()
        })
        .collect())
}

/// `q(a, b) * modulus mod modulus` on the phase lattice.
fn phase_of(lat: &PhaseLattice, a: &[i128], b: &[i128]) -> u64 {
    let m = lat.modulus as i128;
    let mut acc: i128 = 0;
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        let mut row: i128 = 0;
        for (j, &bj) in b.iter().enumerate() {
            row += lat.q_num[i][j].rem_euclid(m) * bj;
        }
        acc = (acc + (ai % m) * (row % m)).rem_euclid(m);
    }
    acc.rem_euclid(m) as u64
}

fn sum_from_phase_counts(
    modulus: u64,
    counts: &BTreeMap<u64, BigInt>,
) -> Result<CyclotomicNumber> {
    let mut acc = CyclotomicNumber::zero();
    for (&r, c) in counts {
        let term = CyclotomicNumber::root(modulus, r).scalar_mul(c);
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

fn finish(
    theory: Theory,
    level: Level,
    group: &AbelianGroup,
    exact: CyclotomicNumber,
    via_closed_form: bool,
) -> PartitionResult {
    let numeric = exact.numeric(DEFAULT_PRECISION);
    PartitionResult {
        theory,
        level: level.0,
        torsion: group.torsion_orders().to_vec(),
        exact,
        numeric,
        via_closed_form,
    }
}

/// `Z_CS = sum over torsion tau of e^(-2 pi i N Q(tau, tau))`, exact.
pub fn z_cs(form: &LinkingForm, level: Level) -> Result<PartitionResult> {
    z_cs_with_budget(form, level, DEFAULT_BUDGET)
}

pub fn z_cs_with_budget(form: &LinkingForm, level: Level, budget: u64) -> Result<PartitionResult> {
    let lat = phase_lattice(form)?;
    let elems = element_coords(form.group(), budget)?;
    let m = lat.modulus as i128;
    let n_level = level.0 as i128;
    let mut counts: BTreeMap<u64, BigInt> = BTreeMap::new();
    for tau in &elems {
        let q = phase_of(&lat, tau, tau) as i128;
        // phase of e^(-2 pi i N Q) is (-N * q / m) mod 1
        let r = (-n_level * q).rem_euclid(m) as u64;
        *counts.entry(r).or_insert_with(BigInt::zero) += 1;
    }
    let exact = sum_from_phase_counts(lat.modulus, &counts)?;
    Ok(finish(Theory::ChernSimons, level, form.group(), exact, false))
}

/// `Z_BF` as the literal double sum when the pair count fits the budget,
/// otherwise delegated to the gcd closed form.
pub fn z_bf(form: &LinkingForm, level: Level) -> Result<PartitionResult> {
    z_bf_with_budget(form, level, DEFAULT_BUDGET)
}

pub fn z_bf_with_budget(form: &LinkingForm, level: Level, budget: u64) -> Result<PartitionResult> {
    let t = form.group().torsion_order();
    if &t * &t > BigInt::from(budget) {
        let closed = z_bf_closed_form(form.group(), level);
        return Ok(finish(
            Theory::Bf,
            level,
            form.group(),
            CyclotomicNumber::from_int(closed),
            true,
        ));
    }
    let exact = z_bf_double_sum(form, level, budget)?;
    Ok(finish(Theory::Bf, level, form.group(), exact, false))
}

/// The literal double sum `sum_{tau_a} sum_{tau_b} e^(-2 pi i N Q(tau_a, tau_b))`.
/// Errors with BudgetExceeded when the pair count is over budget.
pub fn z_bf_double_sum(
    form: &LinkingForm,
    level: Level,
    budget: u64,
) -> Result<CyclotomicNumber> {
    let t = form.group().torsion_order();
    if &t * &t > BigInt::from(budget) {
        return Err(Error::BudgetExceeded {
            needed: (&t * &t).to_string(),
            cap: budget,
        });
    }
    let lat = phase_lattice(form)?;
    let elems = element_coords(form.group(), budget)?;
    let m = lat.modulus as i128;
    let n_level = level.0 as i128;
    let mut counts: BTreeMap<u64, BigInt> = BTreeMap::new();
    for a in &elems {
        for b in &elems {
            let q = phase_of(&lat, a, b) as i128;
            let r = (-n_level * q).rem_euclid(m) as u64;
            *counts.entry(r).or_insert_with(BigInt::zero) += 1;
        }
    }
    sum_from_phase_counts(lat.modulus, &counts)
}

/// The closed form `prod_i gcd(p_i, N) * p_i`, with `gcd(p, 0) = p`.
pub fn z_bf_closed_form(group: &AbelianGroup, level: Level) -> BigInt {
    let n = BigInt::from(level.0).abs();
    group
        .torsion_orders()
        .iter()
        .map(|p| p.gcd(&n) * p)
        .product()
}

/// Exact comparison of `|Z_CS|^2` with `Z_BF`.
#[derive(Clone, Debug)]
pub struct CsBfComparison {
    pub abs_sq_cs: CyclotomicNumber,
    pub bf: CyclotomicNumber,
    pub equal: bool,
}

impl Serialize for CsBfComparison {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CsBfComparison", 3)?;
        st.serialize_field("abs_sq_cs", &self.abs_sq_cs)?;
        st.serialize_field("bf", &self.bf)?;
        st.serialize_field("equal", &self.equal)?;
        st.end()
    }
}

pub fn compare_cs_bf(form: &LinkingForm, level: Level) -> Result<CsBfComparison> {
    compare_cs_bf_with_budget(form, level, DEFAULT_BUDGET)
}

pub fn compare_cs_bf_with_budget(
    form: &LinkingForm,
    level: Level,
    budget: u64,
) -> Result<CsBfComparison> {
    let cs = z_cs_with_budget(form, level, budget)?;
    let bf = z_bf_with_budget(form, level, budget)?;
    let abs_sq_cs = cs.exact.abs_sq()?;
    let equal = abs_sq_cs.equals(&bf.exact)?;
    Ok(CsBfComparison {
        abs_sq_cs,
        bf: bf.exact,
        equal,
    })
}
