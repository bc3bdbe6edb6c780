//! Shifted lattice vertex operator algebras `V_{L,h}`.
//!
//! The conformal vector of the lattice theory `V_L` is replaced by
//! `ω_h = ω_L + h(−2)1`, which changes the grading operator to
//! `L_h(0) = L(0) − h(0)` and the central charge to `l − 12(h, h)`. The
//! state `u ⊗ e^α` with `u` of Heisenberg degree `n` then has weight
//! `n + (α, α)/2 − (h, α)`.
//!
//! Shifts are `h = a + ib` with `a, b` given in lattice-basis coordinates.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fock;
use crate::lattice::{Lattice, RationalVector};
use crate::qseries::{colored_partitions, eta_power, theta_coset, Series};
use crate::scalar::{format_rational, int, lcm_of_denominators, Rational};
use crate::QSeries;

/// A complex rational `re + i·im`; used for `L_h(0)` eigenvalues and for
/// central charges of complex shifts. Ordered by `(re, im)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradeValue {
    pub re: Rational,
    pub im: Rational,
}

impl GradeValue {
    pub fn new(re: Rational, im: Rational) -> Self {
        GradeValue { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GradeValue { re, im: Rational::zero() }
    }

    pub fn zero() -> Self {
        Self::real(Rational::zero())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        GradeValue { re: &self.re + &other.re, im: &self.im + &other.im }
    }

    pub fn to_json(&self) -> Value {
        json!({ "re": format_rational(&self.re), "im": format_rational(&self.im) })
    }
}

impl fmt::Display for GradeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) if self.im.is_negative() => write!(f, "{}-{}i", self.re, -&self.im),
            (false, false) => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}

/// The six labels that can occur for a simple vertex operator algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TypeLabel {
    IAMinus,
    IAPlus,
    IBPlus,
    IIAMinus,
    IIAPlus,
    IIBPlus,
}

impl TypeLabel {
    /// Assembles the label from the three attributes. `None` for the two
    /// combinations with a nondegenerate vacuum and negative weights.
    pub fn from_attributes(self_dual: bool, degenerate_vacuum: bool, negative: bool) -> Option<Self> {
        use TypeLabel::*;
        Some(match (self_dual, degenerate_vacuum, negative) {
            (false, true, true) => IAMinus,
            (false, true, false) => IAPlus,
            (false, false, false) => IBPlus,
            (true, true, true) => IIAMinus,
            (true, true, false) => IIAPlus,
            (true, false, false) => IIBPlus,
            (_, false, true) => return None,
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TypeLabel::IAMinus => "IA-",
            TypeLabel::IAPlus => "IA+",
            TypeLabel::IBPlus => "IB+",
            TypeLabel::IIAMinus => "IIA-",
            TypeLabel::IIAPlus => "IIA+",
            TypeLabel::IIBPlus => "IIB+",
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TypeRecord {
    pub self_dual: bool,
    pub dim_v0: BigUint,
    pub dim_vm1: BigUint,
    /// `dim V_0 / L(1)V_1`.
    pub codim_l1v1: usize,
    /// Whether `codim_l1v1` was computed from the explicit `L_h(1)` matrix
    /// rather than read off from self-duality.
    pub codim_computed: bool,
    pub label: TypeLabel,
}

impl TypeRecord {
    pub fn to_json(&self) -> Value {
        json!({
            "self_dual": self.self_dual,
            "dim_V0": self.dim_v0.to_string(),
            "dim_Vm1": self.dim_vm1.to_string(),
            "codim_L1V1": self.codim_l1v1,
            "codim_computed": self.codim_computed,
            "label": self.label.as_str(),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ShiftedVoa {
    lattice: Lattice,
    shift_real: RationalVector,
    shift_imag: RationalVector,
    central_charge: GradeValue,
    grading_denominator: BigInt,
}

impl ShiftedVoa {
    /// `V_{L,h}` with `h = a + ib`.
    pub fn new(lattice: Lattice, a: RationalVector, b: RationalVector) -> Result<Self> {
        let l = lattice.rank();
        for v in [&a, &b] {
            if v.len() != l {
                return Err(Error::DimensionMismatch { expected: l, found: v.len() });
            }
        }
        let aa = lattice.inner_unchecked(&a, &a);
        let bb = lattice.inner_unchecked(&b, &b);
        let ab = lattice.inner_unchecked(&a, &b);
        let twelve = int(12);
        let central_charge = GradeValue::new(
            int(l as i64) - &twelve * (aa - bb),
            -(twelve * int(2) * ab),
        );
        let ga = lattice.gram_times(&a);
        let gb = lattice.gram_times(&b);
        let grading_denominator = lcm_of_denominators(ga.iter().chain(gb.iter()));
        Ok(ShiftedVoa { lattice, shift_real: a, shift_imag: b, central_charge, grading_denominator })
    }

    /// Real shift `h = a`.
    pub fn real(lattice: Lattice, a: RationalVector) -> Result<Self> {
        let b = RationalVector::zeros(lattice.rank());
        Self::new(lattice, a, b)
    }

    /// The lattice theory itself, `h = 0`.
    pub fn unshifted(lattice: Lattice) -> Self {
        let z = RationalVector::zeros(lattice.rank());
        Self::new(lattice, z.clone(), z).expect("dimensions agree")
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn shift_real(&self) -> &RationalVector {
        &self.shift_real
    }

    pub fn shift_imag(&self) -> &RationalVector {
        &self.shift_imag
    }

    /// `c_h = l − 12(h, h)`.
    pub fn central_charge(&self) -> &GradeValue {
        &self.central_charge
    }

    /// Real central charge; errors for complex shifts.
    pub fn real_central_charge(&self) -> Result<&Rational> {
        self.require_real()?;
        Ok(&self.central_charge.re)
    }

    /// Least common denominator of all pairings `(h, α)`, `α ∈ L`: every
    /// weight lies in `(1/D)·Z` (componentwise for complex shifts).
    pub fn grading_denominator(&self) -> &BigInt {
        &self.grading_denominator
    }

    pub fn is_real(&self) -> bool {
        self.shift_imag.is_zero()
    }

    /// Real shift in `L°`: the grading is integral.
    pub fn is_z_graded(&self) -> bool {
        self.is_real() && self.lattice.in_dual(&self.shift_real).expect("dimension checked")
    }

    /// `(h, h)` as a complex rational.
    pub fn shift_norm(&self) -> GradeValue {
        let l = &self.lattice;
        let (a, b) = (&self.shift_real, &self.shift_imag);
        GradeValue::new(
            l.inner_unchecked(a, a) - l.inner_unchecked(b, b),
            int(2) * l.inner_unchecked(a, b),
        )
    }

    fn require_real(&self) -> Result<()> {
        if self.is_real() {
            Ok(())
        } else {
            Err(Error::ComplexShiftUnsupported)
        }
    }

    fn require_voa(&self) -> Result<()> {
        if self.is_z_graded() {
            Ok(())
        } else {
            Err(Error::NotVoaCase)
        }
    }

    /// Weight of `u ⊗ e^α` with `u` of Heisenberg degree `n`:
    /// `n + (α, α)/2 − (a, α) − i(b, α)`.
    pub fn weight(&self, n: u64, alpha: &[i64]) -> Result<GradeValue> {
        if alpha.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: alpha.len() });
        }
        Ok(self.lattice_weight(&self.lattice, &self.shift_real, &self.shift_imag, alpha)
            .add(&GradeValue::real(int(n as i64))))
    }

    fn lattice_weight(
        &self,
        lattice: &Lattice,
        a: &RationalVector,
        b: &RationalVector,
        alpha: &[i64],
    ) -> GradeValue {
        let half_norm = Rational::new(BigInt::from(lattice.point_norm(alpha)), BigInt::from(2));
        GradeValue::new(half_norm - lattice.pair_point(a, alpha), -lattice.pair_point(b, alpha))
    }

    /// Number of lattice points `α` per weight `(α,α)/2 − (h,α)`, for all
    /// weights with real part at most `max_re`.
    ///
    /// Orthogonal summands are enumerated separately and convolved. Within
    /// a summand with real shift part `a_s`, the real part of the weight is
    /// `(α − a_s, α − a_s)/2 − (a_s, a_s)/2 ≥ −(a_s, a_s)/2`, which bounds the
    /// ellipsoid to scan.
    pub(crate) fn lattice_weight_counts(&self, max_re: &Rational) -> BTreeMap<GradeValue, BigUint> {
        struct Block {
            lattice: Lattice,
            a: RationalVector,
            b: RationalVector,
            floor: Rational,
        }
        let blocks: Vec<Block> = self
            .lattice
            .components()
            .iter()
            .map(|comp| {
                let lattice = self.lattice.sublattice(comp);
                let a = self.shift_real.select(comp);
                let b = self.shift_imag.select(comp);
                let floor = -lattice.inner_unchecked(&a, &a) / int(2);
                Block { lattice, a, b, floor }
            })
            .collect();
        let floor_total: Rational = blocks.iter().map(|b| b.floor.clone()).sum();

        let mut tables: Vec<BTreeMap<GradeValue, BigUint>> = Vec::with_capacity(blocks.len());
        let mut seen: Vec<usize> = Vec::new();
        for (i, blk) in blocks.iter().enumerate() {
            if let Some(&j) = seen.iter().find(|&&j| {
                blocks[j].lattice == blk.lattice && blocks[j].a == blk.a && blocks[j].b == blk.b
            }) {
                tables.push(tables[j].clone());
                continue;
            }
            seen.push(i);
            let window = max_re - (&floor_total - &blk.floor);
            let mut table: BTreeMap<GradeValue, BigUint> = BTreeMap::new();
            let radius = int(2) * (&window - &blk.floor);
            if !radius.is_negative() {
                let pts = blk
                    .lattice
                    .enumerate_in_ellipsoid(&blk.a, &radius)
                    .expect("dimensions agree and radius is nonnegative");
                for p in &pts {
                    let w = self.lattice_weight(&blk.lattice, &blk.a, &blk.b, p);
                    if w.re <= window {
                        *table.entry(w).or_insert_with(BigUint::zero) += 1u32;
                    }
                }
            }
            tables.push(table);
        }

        let mut acc: BTreeMap<GradeValue, BigUint> = BTreeMap::new();
        acc.insert(GradeValue::zero(), BigUint::one());
        let mut rest_floor = floor_total;
        for (blk, table) in blocks.iter().zip(&tables) {
            rest_floor -= &blk.floor;
            let mut next: BTreeMap<GradeValue, BigUint> = BTreeMap::new();
            for (g1, c1) in &acc {
                for (g2, c2) in table {
                    let g = g1.add(g2);
                    if &g.re + &rest_floor > *max_re {
                        continue;
                    }
                    *next.entry(g).or_insert_with(BigUint::zero) += c1 * c2;
                }
            }
            acc = next;
        }
        acc
    }

    /// Smallest real part of a weight: `min_α (α − a, α − a)/2 − (a, a)/2`,
    /// attained at the lattice point closest to `a`.
    pub fn lowest_weight(&self) -> Rational {
        let a = &self.shift_real;
        let mut radius = Rational::one();
        loop {
            let pts = self.lattice.enumerate_in_ellipsoid(a, &radius).expect("dimension checked");
            if let Some(w) = pts.iter().map(|p| self.lattice_weight(&self.lattice, a, &self.shift_imag, p).re).min() {
                return w;
            }
            radius *= int(2);
        }
    }

    /// Exponent of the first term of the partition function, `lowest_weight − c_h/24`.
    pub fn leading_exponent(&self) -> Result<Rational> {
        Ok(self.lowest_weight() - self.real_central_charge()? / int(24))
    }

    /// All grades with real part at most `max_re`, with their dimensions,
    /// sorted by `(re, im)`.
    pub fn spectrum(&self, max_re: &Rational) -> Vec<(GradeValue, BigUint)> {
        let counts = self.lattice_weight_counts(max_re);
        let Some(min_re) = counts.keys().map(|g| g.re.clone()).min() else {
            return Vec::new();
        };
        let nmax = (max_re - &min_re).floor().to_integer().to_usize().unwrap_or(0);
        let p = colored_partitions(self.rank(), nmax);
        let mut out: BTreeMap<GradeValue, BigUint> = BTreeMap::new();
        for (w, c) in &counts {
            let top = (max_re - &w.re).floor().to_integer().to_usize().unwrap_or(0);
            for (n, pn) in p.iter().enumerate().take(top + 1) {
                let g = w.add(&GradeValue::real(int(n as i64)));
                *out.entry(g).or_insert_with(BigUint::zero) += c * pn;
            }
        }
        out.into_iter().collect()
    }

    /// `dim (V_{L,h})_r`.
    pub fn weight_space_dim(&self, r: &GradeValue) -> BigUint {
        self.spectrum(&r.re)
            .into_iter()
            .find(|(g, _)| g == r)
            .map_or_else(BigUint::zero, |(_, d)| d)
    }

    /// `4·max((a+b, a+b), (a−b, a−b))`: lattice points of at least this norm
    /// cannot carry grades with `Re(r) < |Im(r)|`.
    pub fn schwarz_radius(&self) -> Rational {
        let l = &self.lattice;
        let p = self.shift_real.add(&self.shift_imag);
        let m = self.shift_real.sub(&self.shift_imag);
        int(4) * l.inner_unchecked(&p, &p).max(l.inner_unchecked(&m, &m))
    }

    /// Grades violating `Re(r) ≥ |Im(r)|`, with dimensions.
    pub fn truncation_violations(&self) -> Vec<(GradeValue, BigUint)> {
        self.truncation_violations_within(&self.schwarz_radius())
    }

    /// Violations contributed by lattice points with `(α, α) < radius`.
    pub fn truncation_violations_within(&self, radius: &Rational) -> Vec<(GradeValue, BigUint)> {
        if !radius.is_positive() {
            return Vec::new();
        }
        let zero = RationalVector::zeros(self.rank());
        let pts = self
            .lattice
            .enumerate_in_ellipsoid(&zero, radius)
            .expect("dimensions agree and radius is positive");
        let mut found: Vec<(GradeValue, usize)> = Vec::new();
        let mut nmax = 0usize;
        for p in &pts {
            if int(self.lattice.point_norm(p)) >= *radius {
                continue;
            }
            let w = self.lattice_weight(&self.lattice, &self.shift_real, &self.shift_imag, p);
            let gap = w.im.abs() - &w.re;
            if !gap.is_positive() {
                continue;
            }
            // n ranges over 0 <= n < gap
            let top = (gap.ceil().to_integer() - BigInt::one()).to_usize().unwrap_or(0);
            nmax = nmax.max(top);
            for n in 0..=top {
                found.push((w.add(&GradeValue::real(int(n as i64))), n));
            }
        }
        let parts = colored_partitions(self.rank(), nmax);
        let mut out: BTreeMap<GradeValue, BigUint> = BTreeMap::new();
        for (g, n) in found {
            *out.entry(g).or_insert_with(BigUint::zero) += &parts[n];
        }
        out.into_iter().collect()
    }

    /// `Tr q^{L_h(0) − c_h/24}` by counting states grade by grade, below `order`.
    pub fn partition_function_direct(&self, order: &Rational) -> Result<QSeries> {
        let c = self.real_central_charge()?.clone();
        let offset = &c / int(24);
        let spec = self.spectrum(&(order + &offset));
        Ok(Series::from_terms(
            spec.into_iter()
                .map(|(g, d)| (g.re - &offset, Rational::from_integer(BigInt::from(d)))),
            order.clone(),
        ))
    }

    /// `θ_{L−h}(q) / η(q)^l`, below `order`.
    pub fn partition_function_theta(&self, order: &Rational) -> Result<QSeries> {
        self.require_real()?;
        Ok(self.coset_over_eta(&self.shift_real, order))
    }

    /// Partition function of the simple module `V_{L−λ}` regarded as a
    /// `V_{L,h}`-module: `θ_{L−λ−h} / η^l`.
    pub fn module_partition_function(&self, lambda: &RationalVector, order: &Rational) -> Result<QSeries> {
        self.require_real()?;
        if !self.lattice.in_dual(lambda)? {
            return Err(Error::NotInDualLattice);
        }
        Ok(self.coset_over_eta(&lambda.add(&self.shift_real), order))
    }

    fn coset_over_eta(&self, center: &RationalVector, order: &Rational) -> QSeries {
        let l = self.rank() as i64;
        let theta_order = order + Rational::new(BigInt::from(l), BigInt::from(24));
        let theta: QSeries = theta_coset(&self.lattice, center, &theta_order).expect("dimension checked");
        let eta_order = order - theta.valuation_bound();
        let eta: QSeries = eta_power(-l, &eta_order);
        theta.mul(&eta).truncate(order)
    }

    /// Self-duality of a `Z`-graded `V_{L,h}`: holds exactly when `2h ∈ L`.
    pub fn is_self_dual(&self) -> Result<bool> {
        self.require_voa()?;
        self.lattice.in_lattice(&self.shift_real.scale(&int(2)))
    }

    /// Type classification from `dim V_0`, `dim V_{−1}` and self-duality.
    ///
    /// Without `with_codim` the codimension of `L(1)V_1` in `V_0` is taken
    /// to be 1 for self-dual and 0 otherwise. With `with_codim` it is
    /// computed from the matrix of `L_h(1): V_1 → V_0`, and a disagreement
    /// is reported as an error.
    pub fn classify(&self, with_codim: bool) -> Result<TypeRecord> {
        self.require_voa()?;
        let self_dual = self.is_self_dual()?;
        let spec = self.spectrum(&Rational::zero());
        let dim_at = |x: i64| {
            spec.iter()
                .find(|(g, _)| g.re == int(x))
                .map_or_else(BigUint::zero, |(_, d)| d.clone())
        };
        let dim_v0 = dim_at(0);
        let dim_vm1 = dim_at(-1);
        let derived = usize::from(self_dual);
        let codim_l1v1 = if with_codim {
            let computed = fock::l1_codimension(self)?;
            if computed != derived {
                return Err(Error::InconsistentClassification(format!(
                    "codim L(1)V1 = {computed} but self-duality gives {derived}"
                )));
            }
            computed
        } else {
            derived
        };
        let label = TypeLabel::from_attributes(self_dual, dim_v0 > BigUint::one(), !dim_vm1.is_zero())
            .ok_or_else(|| {
                Error::InconsistentClassification(format!(
                    "dim V0 = {dim_v0} with dim V-1 = {dim_vm1}"
                ))
            })?;
        Ok(TypeRecord { self_dual, dim_v0, dim_vm1, codim_l1v1, codim_computed: with_codim, label })
    }
}

/// The class of `L + λ` (the dual of `V_{L−λ}`), as the canonical
/// representative of `−λ` modulo `L`.
pub fn dual_module_coset(lattice: &Lattice, lambda: &RationalVector) -> Result<RationalVector> {
    if !lattice.in_dual(lambda)? {
        return Err(Error::NotInDualLattice);
    }
    Ok(lambda.neg().fract())
}

/// `count` shifts `h = λ + mβ`, `m = 0, 1, 2, …`, keeping only those where
/// `(h, h)` strictly increases. All members share one partition function
/// and have pairwise distinct central charges. `direction` defaults to the
/// first basis vector.
pub fn same_z_family(
    lattice: &Lattice,
    lambda: &RationalVector,
    count: usize,
    direction: Option<&RationalVector>,
) -> Result<Vec<ShiftedVoa>> {
    if !lattice.in_dual(lambda)? {
        return Err(Error::NotInDualLattice);
    }
    if count == 0 {
        return Err(Error::BadParameter("family size must be at least 1".into()));
    }
    let beta = match direction {
        Some(d) => {
            if !lattice.in_lattice(d)? || d.is_zero() {
                return Err(Error::BadParameter("direction must be a nonzero lattice vector".into()));
            }
            d.clone()
        }
        None => RationalVector::unit(lattice.rank(), 0),
    };
    let mut out = Vec::with_capacity(count);
    let mut last: Option<Rational> = None;
    let mut m = 0i64;
    while out.len() < count {
        let h = lambda.add(&beta.scale(&int(m)));
        let hh = lattice.inner_unchecked(&h, &h);
        if last.as_ref().is_none_or(|prev| hh > *prev) {
            last = Some(hh);
            out.push(ShiftedVoa::real(lattice.clone(), h)?);
        }
        m += 1;
    }
    Ok(out)
}

/// Holomorphic `V_{L,h}` of central charge `c` with `L = E8^{⊕(3r + c/8)}` and
/// `h ∈ L`, `(h, h) = 2r`; its partition function starts `q^{−r−c/24}(1 + ⋯)`.
///
/// `h` is a sum of simple roots in distinct summands when there are enough
/// summands; otherwise it lives in the first summand, as `m·α_1` when
/// `r = m²` and as the lexicographically first vector of norm `2r` else.
pub fn holomorphic_family(c: i64, r: i64) -> Result<ShiftedVoa> {
    if c % 8 != 0 {
        return Err(Error::NotMultipleOf8(c));
    }
    if 24 * r + c <= 0 {
        return Err(Error::CentralChargeTooNegative { c, r });
    }
    if r < 0 {
        return Err(Error::BadParameter(format!("(h, h) = 2r needs r >= 0, got {r}")));
    }
    let copies = 3 * r + c / 8;
    if copies < 1 {
        return Err(Error::CentralChargeTooNegative { c, r });
    }
    let copies = copies as usize;
    let e8 = Lattice::e8();
    let lattice = Lattice::direct_sum(&vec![e8.clone(); copies])?
        .with_name(format!("E8^{copies}"));
    let mut h = vec![0i64; 8 * copies];
    let r_us = r as usize;
    if r_us <= copies {
        for k in 0..r_us {
            h[8 * k] = 1;
        }
    } else {
        let m = (r as f64).sqrt().round() as i64;
        if m * m == r {
            h[0] = m;
        } else {
            let pts = e8.enumerate_in_ellipsoid(&RationalVector::zeros(8), &int(2 * r))?;
            let v = pts
                .into_iter()
                .find(|p| e8.point_norm(p) == 2 * r)
                .ok_or_else(|| Error::BadParameter(format!("no E8 vector of norm {}", 2 * r)))?;
            h[..8].copy_from_slice(&v);
        }
    }
    ShiftedVoa::real(lattice, RationalVector::from_integers(&h))
}
