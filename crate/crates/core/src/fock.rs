//! The Fock space `M(1) ⊗ C[L]` with explicit mode actions.
//!
//! A basis state `b_{i₁}(−n₁)⋯b_{iₖ}(−nₖ) ⊗ e^α` is a [`FockState`]; here
//! `b_i` is the Heisenberg field attached to the lattice basis vector `α_i`,
//! so `[b_i(m), b_j(n)] = m δ_{m,−n} G_ij`. Every operator below acts on
//! finite linear combinations exactly: annihilation modes lower the
//! Heisenberg degree, so each application is a finite computation and no
//! truncation of the Fock space is ever involved.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Lattice, RationalVector};
use crate::linalg;
use crate::qseries::Series;
use crate::scalar::{format_rational, int, rat, Rational, Scalar};
use crate::voa::ShiftedVoa;
use crate::QSeries;

/// A creation mode `b_color(−mode)`, `mode ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Part {
    pub mode: u32,
    pub color: usize,
}

/// `b_{i₁}(−n₁)⋯b_{iₖ}(−nₖ) ⊗ e^α` with parts sorted by mode descending,
/// then colour ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FockState {
    label: Vec<i64>,
    parts: Vec<Part>,
}

fn canonical_key(p: &Part) -> (std::cmp::Reverse<u32>, usize) {
    (std::cmp::Reverse(p.mode), p.color)
}

impl FockState {
    pub fn new(mut parts: Vec<Part>, label: Vec<i64>) -> Self {
        parts.sort_by_key(canonical_key);
        FockState { label, parts }
    }

    /// `1 ⊗ e^0`.
    pub fn vacuum(rank: usize) -> Self {
        FockState { label: vec![0; rank], parts: Vec::new() }
    }

    /// `1 ⊗ e^α`.
    pub fn exponential(alpha: Vec<i64>) -> Self {
        FockState { label: alpha, parts: Vec::new() }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn label(&self) -> &[i64] {
        &self.label
    }

    /// Heisenberg degree `Σ nⱼ`.
    pub fn degree(&self) -> u64 {
        self.parts.iter().map(|p| p.mode as u64).sum()
    }

    fn with_part(&self, part: Part) -> Self {
        let mut parts = self.parts.clone();
        let at = parts
            .binary_search_by_key(&canonical_key(&part), canonical_key)
            .unwrap_or_else(|e| e);
        parts.insert(at, part);
        FockState { label: self.label.clone(), parts }
    }

    fn without_index(&self, i: usize) -> Self {
        let mut parts = self.parts.clone();
        parts.remove(i);
        FockState { label: self.label.clone(), parts }
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            write!(f, "1")?;
        }
        for p in &self.parts {
            write!(f, "b{}(-{})", p.color + 1, p.mode)?;
        }
        let lab: Vec<String> = self.label.iter().map(i64::to_string).collect();
        write!(f, "⊗e^({})", lab.join(","))
    }
}

/// Finite linear combination of [`FockState`]s; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct FockVec<C> {
    terms: BTreeMap<FockState, C>,
}

impl<C: Scalar> Default for FockVec<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> FockVec<C> {
    pub fn zero() -> Self {
        FockVec { terms: BTreeMap::new() }
    }

    pub fn basis(state: FockState) -> Self {
        Self::term(state, C::one())
    }

    pub fn term(state: FockState, coeff: C) -> Self {
        let mut v = Self::zero();
        v.add_term(state, coeff);
        v
    }

    pub fn add_term(&mut self, state: FockState, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&state) {
            Some(c) => {
                *c = c.clone() + coeff;
                if c.is_zero() {
                    self.terms.remove(&state);
                }
            }
            None => {
                self.terms.insert(state, coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &C) {
        for (st, c) in &other.terms {
            self.add_term(st.clone(), c.clone() * s.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &C::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-C::one());
        out
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, s);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, s: &FockState) -> C {
        self.terms.get(s).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FockState, &C)> {
        self.terms.iter()
    }

    /// Largest Heisenberg degree present (0 for the zero vector).
    pub fn max_degree(&self) -> u64 {
        self.terms.keys().map(FockState::degree).max().unwrap_or(0)
    }
}

/// Result of applying a Laurent series of operators: `z`-exponent ↦ vector.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentOperatorResult<C> {
    terms: BTreeMap<Rational, FockVec<C>>,
}

impl<C: Scalar> LaurentOperatorResult<C> {
    fn add_at(&mut self, exponent: Rational, v: &FockVec<C>, s: &C) {
        let slot = self.terms.entry(exponent.clone()).or_default();
        slot.add_scaled(v, s);
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn get(&self, exponent: &Rational) -> Option<&FockVec<C>> {
        self.terms.get(exponent)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Rational, &FockVec<C>)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The same data keyed by integer exponents.
    pub fn into_integral(self) -> Result<BTreeMap<i64, FockVec<C>>> {
        self.terms
            .into_iter()
            .map(|(e, v)| match e.is_integer().then(|| e.to_integer().to_i64()).flatten() {
                Some(k) => Ok((k, v)),
                None => Err(Error::NonIntegralExponent(e)),
            })
            .collect()
    }

    /// Coefficient of `z^power` in `Σ_j Y(u_j, z) z^j`, where `u_j` is the
    /// vector at exponent `j`: the operator `Σ_j u_j(j − power − 1)`.
    pub fn field_coefficient(&self, power: i64) -> Result<ModeOperator<C>> {
        let mut op = ModeOperator::default();
        for (e, u) in &self.terms {
            if !e.is_integer() {
                return Err(Error::NonIntegralExponent(e.clone()));
            }
            let j = e.to_integer().to_i64().expect("small exponent");
            op.extend(field_mode(u, j - power - 1)?);
        }
        Ok(op)
    }
}

/// One term of a [`ModeOperator`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeTerm {
    Identity,
    /// `b_color(n)`.
    Heisenberg { color: usize, n: i64 },
    /// `Σ_m :b_i(m) b_j(n − m):`.
    Quadratic { i: usize, j: usize, n: i64 },
}

/// A finite linear combination of Heisenberg monomials and normally ordered
/// quadratic sums, the modes of states in `M(1)` of degree at most two.
#[derive(Clone, Debug, PartialEq)]
pub struct ModeOperator<C> {
    terms: Vec<(C, ModeTerm)>,
}

impl<C> Default for ModeOperator<C> {
    fn default() -> Self {
        ModeOperator { terms: Vec::new() }
    }
}

impl<C: Scalar> ModeOperator<C> {
    pub fn terms(&self) -> &[(C, ModeTerm)] {
        &self.terms
    }

    fn extend(&mut self, other: ModeOperator<C>) {
        self.terms.extend(other.terms);
    }

    pub fn apply(&self, lattice: &Lattice, x: &FockVec<C>) -> FockVec<C> {
        let mut out = FockVec::zero();
        for (c, t) in &self.terms {
            let y = match *t {
                ModeTerm::Identity => x.clone(),
                ModeTerm::Heisenberg { color, n } => basis_mode(lattice, color, n, x),
                ModeTerm::Quadratic { i, j, n } => quadratic_mode(lattice, i, j, n, x),
            };
            out.add_scaled(&y, c);
        }
        out
    }
}

/// `u(n)` for `u ∈ M(1) ⊗ e^0` of degree at most two built from `b_i(−1)`
/// factors, with `Y(u, z) = Σ u(n) z^{−n−1}`.
pub fn field_mode<C: Scalar>(u: &FockVec<C>, n: i64) -> Result<ModeOperator<C>> {
    let mut op = ModeOperator::default();
    for (s, c) in u.iter() {
        if s.label.iter().any(|&x| x != 0) || s.parts.iter().any(|p| p.mode != 1) {
            return Err(Error::UnsupportedState(s.to_string()));
        }
        let term = match s.parts.as_slice() {
            [] if n == -1 => ModeTerm::Identity,
            [] => continue,
            [p] => ModeTerm::Heisenberg { color: p.color, n },
            [p, q] => ModeTerm::Quadratic { i: p.color, j: q.color, n: n - 1 },
            _ => return Err(Error::UnsupportedState(s.to_string())),
        };
        op.terms.push((c.clone(), term));
    }
    Ok(op)
}

/// `b_color(n)` on a single state, accumulated into `out` with weight `coeff`.
fn basis_mode_state<C: Scalar>(
    lattice: &Lattice,
    color: usize,
    n: i64,
    s: &FockState,
    coeff: &C,
    out: &mut FockVec<C>,
) {
    let g = lattice.gram();
    match n.signum() {
        -1 => out.add_term(s.with_part(Part { mode: (-n) as u32, color }), coeff.clone()),
        0 => {
            let pairing: i64 = g[color].iter().zip(&s.label).map(|(a, b)| a * b).sum();
            if pairing != 0 {
                out.add_term(s.clone(), coeff.clone() * C::from_rational(&int(pairing)));
            }
        }
        _ => {
            // one term per distinct part b_j(−n), weighted by its multiplicity
            let mut i = 0;
            while i < s.parts.len() {
                let p = s.parts[i];
                let mut mult = 1;
                while i + mult < s.parts.len() && s.parts[i + mult] == p {
                    mult += 1;
                }
                if p.mode as i64 == n && g[color][p.color] != 0 {
                    let k = n * g[color][p.color] * mult as i64;
                    out.add_term(s.without_index(i), coeff.clone() * C::from_rational(&int(k)));
                }
                i += mult;
            }
        }
    }
}

fn basis_mode<C: Scalar>(lattice: &Lattice, color: usize, n: i64, x: &FockVec<C>) -> FockVec<C> {
    let mut out = FockVec::zero();
    for (s, c) in x.iter() {
        basis_mode_state(lattice, color, n, s, c, &mut out);
    }
    out
}

/// `Σ_m :b_i(m) b_j(n − m):`, annihilators applied first.
fn quadratic_mode<C: Scalar>(lattice: &Lattice, i: usize, j: usize, n: i64, x: &FockVec<C>) -> FockVec<C> {
    let mut out = FockVec::zero();
    for (s, c) in x.iter() {
        let d = s.degree() as i64;
        // a term survives only if its larger mode is at most d
        for m in (n - d)..=d {
            let (p, q) = (m, n - m);
            let (first, second) = if p <= q { ((j, q), (i, p)) } else { ((i, p), (j, q)) };
            let mut tmp = FockVec::zero();
            basis_mode_state(lattice, first.0, first.1, s, c, &mut tmp);
            for (t, tc) in tmp.iter() {
                basis_mode_state(lattice, second.0, second.1, t, tc, &mut out);
            }
        }
    }
    out
}

fn check_vector(lattice: &Lattice, v: &RationalVector) -> Result<()> {
    if v.len() != lattice.rank() {
        return Err(Error::DimensionMismatch { expected: lattice.rank(), found: v.len() });
    }
    Ok(())
}

/// The Heisenberg mode `v(n)` for `v ∈ Q ⊗ L`.
pub fn heisenberg<C: Scalar>(lattice: &Lattice, v: &RationalVector, n: i64, x: &FockVec<C>) -> Result<FockVec<C>> {
    check_vector(lattice, v)?;
    let mut out = FockVec::zero();
    for (i, vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        out.add_scaled(&basis_mode(lattice, i, n, x), &C::from_rational(vi));
    }
    Ok(out)
}

/// `L(n) = ½ Σ_{i,j} (G⁻¹)_{ij} Σ_m :b_i(m) b_j(n − m):`.
pub fn virasoro<C: Scalar>(lattice: &Lattice, n: i64, x: &FockVec<C>) -> FockVec<C> {
    let ginv = lattice.dual_basis();
    let half = rat(1, 2);
    let mut out = FockVec::zero();
    for (i, row) in ginv.iter().enumerate() {
        for (j, gij) in row.iter().enumerate() {
            if gij.is_zero() {
                continue;
            }
            out.add_scaled(&quadratic_mode(lattice, i, j, n, x), &C::from_rational(&(gij * &half)));
        }
    }
    out
}

/// `L_h(n) = L(n) − (n + 1) h(n)` for a real shift `h`.
pub fn shifted_virasoro<C: Scalar>(voa: &ShiftedVoa, n: i64, x: &FockVec<C>) -> Result<FockVec<C>> {
    if !voa.is_real() {
        return Err(Error::ComplexShiftUnsupported);
    }
    let l = voa.lattice();
    let base = virasoro(l, n, x);
    if n == -1 {
        return Ok(base);
    }
    let h = heisenberg(l, voa.shift_real(), n, x)?;
    Ok(base.sub(&h.scale(&C::from_rational(&int(n + 1)))))
}

/// The conformal vector `ω = ½ Σ (G⁻¹)_{ij} b_i(−1) b_j(−1) 1`.
pub fn omega<C: Scalar>(lattice: &Lattice) -> FockVec<C> {
    let l = lattice.rank();
    let mut out = FockVec::zero();
    for (i, row) in lattice.dual_basis().iter().enumerate() {
        for (j, gij) in row.iter().enumerate() {
            let s = FockState::new(
                vec![Part { mode: 1, color: i }, Part { mode: 1, color: j }],
                vec![0; l],
            );
            out.add_term(s, C::from_rational(&(gij * rat(1, 2))));
        }
    }
    out
}

/// The weight-one state `v(−1)1`.
pub fn weight_one_state<C: Scalar>(lattice: &Lattice, v: &RationalVector) -> Result<FockVec<C>> {
    heisenberg(lattice, v, -1, &FockVec::basis(FockState::vacuum(lattice.rank())))
}

/// `L_h(0)`-eigenvalue of a basis state.
pub fn state_weight(voa: &ShiftedVoa, s: &FockState) -> Rational {
    let l = voa.lattice();
    int(s.degree() as i64) + Rational::new(l.point_norm(&s.label).into(), 2.into())
        - l.pair_point(voa.shift_real(), &s.label)
}

/// Colored partitions of `n` as canonical part lists, in lexicographic order.
fn partitions_of(n: u32, colors: usize) -> Vec<Vec<Part>> {
    fn go(rem: u32, bound: Part, colors: usize, cur: &mut Vec<Part>, out: &mut Vec<Vec<Part>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for mode in (1..=rem.min(bound.mode)).rev() {
            let start = if mode == bound.mode { bound.color } else { 0 };
            for color in start..colors {
                let p = Part { mode, color };
                cur.push(p);
                go(rem - mode, p, colors, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, Part { mode: n.max(1), color: 0 }, colors, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All basis states of `L_h(0)`-weight at most `max_weight`, ordered by
/// weight, then label, then partition.
pub fn basis(voa: &ShiftedVoa, max_weight: &Rational) -> Result<Vec<FockState>> {
    basis_window(voa, None, max_weight)
}

/// Basis states with weight in `[min_weight, max_weight]`, in [`basis`] order.
pub fn basis_window(voa: &ShiftedVoa, min_weight: Option<&Rational>, max_weight: &Rational) -> Result<Vec<FockState>> {
    if !voa.is_real() {
        return Err(Error::ComplexShiftUnsupported);
    }
    let l = voa.lattice();
    let a = voa.shift_real();
    let aa = l.inner_unchecked(a, a);
    let radius = int(2) * max_weight + &aa;
    if radius.is_negative() {
        return Ok(Vec::new());
    }
    let mut out: Vec<(Rational, FockState)> = Vec::new();
    for alpha in l.enumerate_in_ellipsoid(a, &radius)? {
        let base = state_weight(voa, &FockState::exponential(alpha.clone()));
        let room = max_weight - &base;
        if room.is_negative() {
            continue;
        }
        let top = room.floor().to_integer().to_u32().expect("weight window fits u32");
        let bottom = match min_weight {
            Some(lo) if *lo > base => (lo - &base).ceil().to_integer().to_u32().expect("weight window fits u32"),
            _ => 0,
        };
        for n in bottom..=top {
            for parts in partitions_of(n, l.rank()) {
                out.push((&base + int(n as i64), FockState { label: alpha.clone(), parts }));
            }
        }
    }
    out.sort();
    Ok(out.into_iter().map(|(_, s)| s).collect())
}

/// A basis state on which `[L_h(m), L_h(n)]` differs from
/// `(m − n) L_h(m + n) + δ_{m,−n} (m³ − m)/12 · c_h`, if any, among states of
/// weight at most `max_weight`.
pub fn bracket_witness(voa: &ShiftedVoa, m: i64, n: i64, max_weight: &Rational) -> Result<Option<FockState>> {
    let states = basis(voa, max_weight)?;
    if states.is_empty() {
        return Err(Error::TruncationTooSmall(format!(
            "no states of weight <= {max_weight}; the smallest sufficient bound is {}",
            format_rational(&voa.lowest_weight())
        )));
    }
    let c = voa.real_central_charge()?.clone();
    let central = if m + n == 0 { rat(m * m * m - m, 12) * c } else { Rational::zero() };
    for s in states {
        let x = FockVec::<Rational>::basis(s.clone());
        let mn = shifted_virasoro(voa, m, &shifted_virasoro(voa, n, &x)?)?;
        let nm = shifted_virasoro(voa, n, &shifted_virasoro(voa, m, &x)?)?;
        let rhs = shifted_virasoro(voa, m + n, &x)?.scale(&int(m - n));
        let mut diff = mn.sub(&nm).sub(&rhs);
        diff.add_term(s.clone(), -central.clone());
        if !diff.is_zero() {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Virasoro relation with central charge `c_h` on every basis state of
/// weight at most `max_weight`.
pub fn bracket_check(voa: &ShiftedVoa, m: i64, n: i64, max_weight: &Rational) -> Result<bool> {
    Ok(bracket_witness(voa, m, n, max_weight)?.is_none())
}

/// `dim V_0 − rank(L_h(1): V_1 → V_0)`.
pub fn l1_codimension(voa: &ShiftedVoa) -> Result<usize> {
    if !voa.is_z_graded() {
        return Err(Error::NotVoaCase);
    }
    let states = basis_window(voa, Some(&Rational::zero()), &int(1))?;
    let (v0, v1): (Vec<FockState>, Vec<FockState>) =
        states.into_iter().partition(|s| state_weight(voa, s).is_zero());
    let index: BTreeMap<&FockState, usize> = v0.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(v1.len());
    for s in &v1 {
        let img = shifted_virasoro(voa, 1, &FockVec::<Rational>::basis(s.clone()))?;
        let mut row = vec![Rational::zero(); v0.len()];
        for (t, c) in img.iter() {
            let k = index.get(t).ok_or_else(|| {
                Error::InconsistentClassification(format!("L_h(1) maps {s} outside V_0"))
            })?;
            row[*k] = c.clone();
        }
        rows.push(row);
    }
    Ok(v0.len() - linalg::rank(&rows))
}

/// `Δ(v, z) x = z^{v(0)} exp(−Σ_{k≥1} v(k)/k · (−z)^{−k}) x`.
///
/// `depth` is the largest `k` kept in the exponent; it must be at least the
/// Heisenberg degree of `x`, beyond which every term vanishes.
pub fn delta_apply<C: Scalar>(
    lattice: &Lattice,
    v: &RationalVector,
    x: &FockVec<C>,
    depth: u64,
) -> Result<LaurentOperatorResult<C>> {
    check_vector(lattice, v)?;
    let need = x.max_degree();
    if depth < need {
        return Err(Error::TruncationTooSmall(format!(
            "exponential depth {depth} is below the Heisenberg degree {need}"
        )));
    }
    // term_j = A^j x / j!, each keyed by integer z-exponent
    let mut total: BTreeMap<i64, FockVec<C>> = BTreeMap::new();
    let mut term: BTreeMap<i64, FockVec<C>> = BTreeMap::from([(0, x.clone())]);
    let mut j = 0i64;
    while !term.is_empty() {
        for (e, vec) in &term {
            total.entry(*e).or_default().add_scaled(vec, &C::one());
        }
        j += 1;
        let mut next: BTreeMap<i64, FockVec<C>> = BTreeMap::new();
        for (e, vec) in &term {
            for k in 1..=depth as i64 {
                let y = heisenberg(lattice, v, k, vec)?;
                if y.is_zero() {
                    continue;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                let coeff = C::from_rational(&rat(sign, k * j));
                next.entry(e - k).or_default().add_scaled(&y, &coeff);
            }
        }
        next.retain(|_, vec| !vec.is_zero());
        term = next;
    }
    let mut out = LaurentOperatorResult { terms: BTreeMap::new() };
    for (e, vec) in total {
        for (s, c) in vec.iter() {
            let shift = lattice.pair_point(v, &s.label);
            out.add_at(int(e) + shift, &FockVec::basis(s.clone()), c);
        }
    }
    Ok(out)
}

/// Outcome of one of the four conditions on a weight-one state.
#[derive(Clone, Debug, PartialEq)]
pub struct ConditionCheck {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HConditionReport {
    pub checks: Vec<ConditionCheck>,
    /// The scalar `h(1)h`, equal to `(h, h)`.
    pub h1h: Rational,
}

impl HConditionReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Checks on `h = v(−1)1 ∈ V_L`: (i) `L(n)h = 0` for `n ≥ 1`;
/// (ii) `h(0)` semisimple with real eigenvalues; (iii) `h(n)h = 0` for
/// `0 ≤ n ≠ 1` and `h(1)h ∈ C1`; (iv) `[h(m), h(n)] = m δ_{m,−n} h(1)h`.
/// Operator identities are tested on the weight-≤`max_weight` basis of `V_L`.
pub fn check_h_conditions(lattice: &Lattice, v: &RationalVector, max_weight: &Rational) -> Result<HConditionReport> {
    check_vector(lattice, v)?;
    let voa = ShiftedVoa::unshifted(lattice.clone());
    let states = basis(&voa, max_weight)?;
    let h: FockVec<Rational> = weight_one_state(lattice, v)?;
    let vac = FockState::vacuum(lattice.rank());
    let mut checks = Vec::new();

    let mut witness = None;
    for n in 1..=3 {
        if !virasoro(lattice, n, &h).is_zero() {
            witness = Some(format!("L({n})h != 0"));
            break;
        }
    }
    checks.push(ConditionCheck { name: "(i) primary", passed: witness.is_none(), witness });

    let mut witness = None;
    for s in &states {
        let x = FockVec::basis(s.clone());
        let y = heisenberg(lattice, v, 0, &x)?;
        let eig = lattice.pair_point(v, &s.label);
        if y != x.scale(&eig) {
            witness = Some(format!("h(0) not diagonal on {s}"));
            break;
        }
    }
    checks.push(ConditionCheck { name: "(ii) h(0) semisimple, real spectrum", passed: witness.is_none(), witness });

    let h1h_vec = heisenberg(lattice, v, 1, &h)?;
    let h1h = h1h_vec.coefficient(&vac);
    let mut witness = None;
    if h1h_vec != FockVec::term(vac.clone(), h1h.clone()) {
        witness = Some("h(1)h is not a multiple of the vacuum".to_string());
    }
    for n in [0, 2, 3] {
        if witness.is_none() && !heisenberg(lattice, v, n, &h)?.is_zero() {
            witness = Some(format!("h({n})h != 0"));
        }
    }
    checks.push(ConditionCheck { name: "(iii) h(n)h", passed: witness.is_none(), witness });

    let mut witness = None;
    'outer: for m in -3i64..=3 {
        for n in -3i64..=3 {
            for s in &states {
                let x = FockVec::basis(s.clone());
                let mn = heisenberg(lattice, v, m, &heisenberg(lattice, v, n, &x)?)?;
                let nm = heisenberg(lattice, v, n, &heisenberg(lattice, v, m, &x)?)?;
                let expect = if m + n == 0 { x.scale(&(int(m) * &h1h)) } else { FockVec::zero() };
                if mn.sub(&nm) != expect {
                    witness = Some(format!("[h({m}), h({n})] on {s}"));
                    break 'outer;
                }
            }
        }
    }
    checks.push(ConditionCheck { name: "(iv) Heisenberg relation", passed: witness.is_none(), witness });

    Ok(HConditionReport { checks, h1h })
}

/// The two sides of the trace identity, both known below `order`:
/// `Tr q^{L_{Δ,−h}(0) − c/24}` with the zero mode read off from `Δ(−h, z)ω`,
/// and `Tr q^{L_h(0) − c_h/24}` from [`shifted_virasoro`].
///
/// With `L_h(0) = L(0) − h(0)` the identity holds with the same `h` on both
/// sides. Both traces run over the basis of `L_h(0)`-weight below
/// `order + c_h/24`; a state on which the extracted zero mode is not
/// diagonal is an error.
pub fn trace_identity(voa: &ShiftedVoa, order: &Rational) -> Result<(QSeries, QSeries)> {
    let c_h = voa.real_central_charge()?.clone();
    let lattice = voa.lattice();
    let c = int(lattice.rank() as i64);
    let omega_vec: FockVec<Rational> = omega(lattice);
    let conj = delta_apply(lattice, &voa.shift_real().neg(), &omega_vec, 2)?;
    let zero_mode = conj.field_coefficient(-2)?;

    let top = order + &c_h / int(24);
    let states = basis(voa, &top)?;
    let mut lhs = Vec::with_capacity(states.len());
    let mut rhs = Vec::with_capacity(states.len());
    for s in states {
        let x = FockVec::basis(s.clone());
        let y = zero_mode.apply(lattice, &x);
        let eig = y.coefficient(&s);
        if y != x.scale(&eig) {
            return Err(Error::InconsistentClassification(format!(
                "extracted zero mode is not diagonal on {s}"
            )));
        }
        lhs.push((eig - &c / int(24), Rational::one()));

        let z = shifted_virasoro(voa, 0, &x)?;
        let w = z.coefficient(&s);
        if z != x.scale(&w) {
            return Err(Error::InconsistentClassification(format!("L_h(0) is not diagonal on {s}")));
        }
        rhs.push((w - &c_h / int(24), Rational::one()));
    }
    Ok((Series::from_terms(lhs, order.clone()), Series::from_terms(rhs, order.clone())))
}

pub fn trace_identity_check(voa: &ShiftedVoa, order: &Rational) -> Result<bool> {
    let (lhs, rhs) = trace_identity(voa, order)?;
    lhs.eq_to_order(&rhs, order)
}

/// Graded dimension read off an explicit basis: `(weight, count)` pairs.
pub fn basis_weight_counts(voa: &ShiftedVoa, max_weight: &Rational) -> Result<Vec<(Rational, usize)>> {
    let mut out: BTreeMap<Rational, usize> = BTreeMap::new();
    for s in basis(voa, max_weight)? {
        *out.entry(state_weight(voa, &s)).or_default() += 1;
    }
    Ok(out.into_iter().collect())
}
