//! Positive-definite even integral lattices.
//!
//! A [`Lattice`] is described by its Gram matrix in a fixed basis
//! `α_1, …, α_l`. Vectors of the ambient rational space are
//! [`RationalVector`]s holding coordinates in that basis; lattice points are
//! plain integer coordinate vectors.
//!
//! All arithmetic is exact. The LDLᵀ factorisation, Gram inverse and
//! orthogonal block structure are computed once at validation time.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Ldlt, Matrix};
use crate::scalar::{floor_sqrt, format_rational, int, Rational};

/// Integer coordinates of a lattice point.
pub type LatticeVector = Vec<i64>;

/// A vector of `Q ⊗ L`, in lattice-basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector(pub Vec<Rational>);

impl RationalVector {
    pub fn zeros(len: usize) -> Self {
        RationalVector(vec![Rational::zero(); len])
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        RationalVector(coords.iter().map(|&c| int(c)).collect())
    }

    /// The `i`-th basis vector `α_i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = Rational::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Rational::is_integer)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        RationalVector(self.0.iter().map(|a| a * s).collect())
    }

    pub fn neg(&self) -> Self {
        RationalVector(self.0.iter().map(|a| -a).collect())
    }

    /// Coordinates reduced into `[0, 1)`; the canonical representative of
    /// the class of `self` modulo `L`.
    pub fn fract(&self) -> Self {
        RationalVector(self.0.iter().map(|a| a - a.floor()).collect())
    }

    /// Restriction to a subset of coordinates.
    pub fn select(&self, indices: &[usize]) -> Self {
        RationalVector(indices.iter().map(|&i| self.0[i].clone()).collect())
    }
}

impl Index<usize> for RationalVector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Debug)]
pub struct Lattice {
    name: Option<String>,
    gram: Matrix<i64>,
    gram_q: Matrix<Rational>,
    ldl: Ldlt,
    gram_inv: Matrix<Rational>,
    components: Vec<Vec<usize>>,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.gram == other.gram
    }
}

impl Eq for Lattice {}

/// `L°/L` with a canonical set of coset representatives.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscriminantGroup {
    /// `|L°/L| = det G`.
    pub order: BigInt,
    /// Invariant factors of `G` greater than one.
    pub elementary_divisors: Vec<BigInt>,
    /// One vector per class, coordinates reduced into `[0, 1)`, sorted.
    pub representatives: Vec<RationalVector>,
}

/// The built-in lattice families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedLattice {
    /// `Zα` with `(α, α) = norm`; `norm` must be even and positive.
    Rank1 { norm: i64 },
    /// Root lattice `A_l`.
    A(usize),
    E8,
}

const E8_EDGES: [(usize, usize); 7] = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];

impl Lattice {
    /// Checks symmetry, evenness and positive-definiteness.
    pub fn validate(gram: Matrix<i64>) -> Result<Self> {
        let l = gram.len();
        if l == 0 {
            return Err(Error::EmptyGram);
        }
        for (row, r) in gram.iter().enumerate() {
            if r.len() != l {
                return Err(Error::NotSquare { row, len: r.len(), rank: l });
            }
        }
        for i in 0..l {
            for j in i + 1..l {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        if let Some(index) = (0..l).find(|&i| gram[i][i] % 2 != 0) {
            return Err(Error::NotEven { index });
        }
        let gram_q: Matrix<Rational> =
            gram.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let ldl = linalg::ldlt_positive(&gram_q)
            .map_err(|i| Error::NotPositiveDefinite { minor: i + 1 })?;
        let gram_inv = linalg::inverse(&gram_q).expect("positive-definite matrix is invertible");
        let components = orthogonal_components(&gram);
        Ok(Lattice { name: None, gram, gram_q, ldl, gram_inv, components })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Looks up a named family: `"rank1"` (param `2N`), `"A"` (param `l`) or `"E8"`.
    pub fn named(name: &str, param: Option<i64>) -> Result<Self> {
        let need = || Error::BadParameter(format!("{name} requires a parameter"));
        let which = match name {
            "rank1" => NamedLattice::Rank1 { norm: param.ok_or_else(need)? },
            "A" => {
                let l = param.ok_or_else(need)?;
                if l < 1 {
                    return Err(Error::BadParameter(format!("A_l needs l >= 1, got {l}")));
                }
                NamedLattice::A(l as usize)
            }
            "E8" => NamedLattice::E8,
            other => return Err(Error::UnknownName(other.to_string())),
        };
        Self::from_named(which)
    }

    pub fn from_named(which: NamedLattice) -> Result<Self> {
        match which {
            NamedLattice::Rank1 { norm } => {
                if norm < 2 || norm % 2 != 0 {
                    return Err(Error::BadParameter(format!(
                        "rank1 needs (α, α) = 2N with N >= 1, got {norm}"
                    )));
                }
                Ok(Self::validate(vec![vec![norm]])?.with_name(format!("rank1({norm})")))
            }
            NamedLattice::A(l) => {
                if l == 0 {
                    return Err(Error::BadParameter("A_0 is empty".into()));
                }
                let mut g = vec![vec![0i64; l]; l];
                for i in 0..l {
                    g[i][i] = 2;
                    if i + 1 < l {
                        g[i][i + 1] = -1;
                        g[i + 1][i] = -1;
                    }
                }
                Ok(Self::validate(g)?.with_name(format!("A{l}")))
            }
            NamedLattice::E8 => {
                let mut g = vec![vec![0i64; 8]; 8];
                for (i, row) in g.iter_mut().enumerate() {
                    row[i] = 2;
                }
                for &(i, j) in &E8_EDGES {
                    g[i][j] = -1;
                    g[j][i] = -1;
                }
                Ok(Self::validate(g)?.with_name("E8"))
            }
        }
    }

    pub fn rank1(norm: i64) -> Result<Self> {
        Self::from_named(NamedLattice::Rank1 { norm })
    }

    pub fn a(l: usize) -> Result<Self> {
        Self::from_named(NamedLattice::A(l))
    }

    pub fn e8() -> Self {
        Self::from_named(NamedLattice::E8).expect("E8 Cartan matrix is valid")
    }

    /// Orthogonal direct sum; block-diagonal Gram matrix.
    pub fn direct_sum(parts: &[Lattice]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyInput);
        }
        if parts.len() == 1 {
            return Ok(parts[0].clone());
        }
        let l: usize = parts.iter().map(Lattice::rank).sum();
        let mut g = vec![vec![0i64; l]; l];
        let mut off = 0;
        for p in parts {
            for (i, row) in p.gram.iter().enumerate() {
                g[off + i][off..off + row.len()].copy_from_slice(row);
            }
            off += p.rank();
        }
        let names: Option<Vec<&str>> = parts.iter().map(Lattice::name).collect();
        let lat = Self::validate(g)?;
        Ok(match names {
            Some(n) => lat.with_name(n.join("+")),
            None => lat,
        })
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &Matrix<i64> {
        &self.gram
    }

    pub fn gram_rational(&self) -> &Matrix<Rational> {
        &self.gram_q
    }

    pub fn ldlt(&self) -> &Ldlt {
        &self.ldl
    }

    /// `det G`, as the product of the LDLᵀ pivots.
    pub fn determinant(&self) -> BigInt {
        let d: Rational = self.ldl.pivots.iter().product();
        debug_assert!(d.is_integer());
        d.to_integer()
    }

    fn check_dim(&self, v: &RationalVector) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: v.len() });
        }
        Ok(())
    }

    /// `uᵀ G v`.
    pub fn inner(&self, u: &RationalVector, v: &RationalVector) -> Result<Rational> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        Ok(self.inner_unchecked(u, v))
    }

    pub(crate) fn inner_unchecked(&self, u: &RationalVector, v: &RationalVector) -> Rational {
        let mut s = Rational::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if self.gram[i][j] != 0 && !vj.is_zero() {
                    s += ui * vj * int(self.gram[i][j]);
                }
            }
        }
        s
    }

    pub fn norm(&self, v: &RationalVector) -> Result<Rational> {
        self.inner(v, v)
    }

    /// `(u, β)` for a lattice point `β`.
    pub fn pair_point(&self, u: &RationalVector, beta: &[i64]) -> Rational {
        let mut s = Rational::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            let gb: i64 = self.gram[i].iter().zip(beta).map(|(g, b)| g * b).sum();
            if gb != 0 {
                s += ui * int(gb);
            }
        }
        s
    }

    /// `(β, β)` for a lattice point.
    pub fn point_norm(&self, beta: &[i64]) -> i64 {
        let l = self.rank();
        let mut s = 0i64;
        for i in 0..l {
            if beta[i] == 0 {
                continue;
            }
            for j in 0..l {
                s += beta[i] * self.gram[i][j] * beta[j];
            }
        }
        s
    }

    /// `G v`: the pairings `(v, α_i)`.
    pub fn gram_times(&self, v: &RationalVector) -> RationalVector {
        RationalVector(
            self.gram_q
                .iter()
                .map(|row| row.iter().zip(v.iter()).map(|(g, x)| g * x).sum())
                .collect(),
        )
    }

    /// `G⁻¹`; row `i` holds the lattice-basis coordinates of the dual basis vector `α^i`.
    pub fn dual_basis(&self) -> &Matrix<Rational> {
        &self.gram_inv
    }

    /// Converts dual-basis coordinates into lattice-basis coordinates.
    pub fn from_dual_coordinates(&self, v: &RationalVector) -> Result<RationalVector> {
        self.check_dim(v)?;
        let l = self.rank();
        Ok(RationalVector(
            (0..l)
                .map(|j| (0..l).map(|i| &v[i] * &self.gram_inv[i][j]).sum())
                .collect(),
        ))
    }

    pub fn in_lattice(&self, v: &RationalVector) -> Result<bool> {
        self.check_dim(v)?;
        Ok(v.is_integral())
    }

    pub fn in_dual(&self, v: &RationalVector) -> Result<bool> {
        self.check_dim(v)?;
        Ok(self.gram_times(v).is_integral())
    }

    /// Elementary divisors via the Smith form of `G`, and one representative
    /// per class of `L°/L`.
    ///
    /// With `U G V = D`, the map `z ↦ U z` identifies `Zˡ/GZˡ` with `Zˡ/DZˡ`;
    /// the box `0 ≤ y_i < d_i` is pulled back through `U⁻¹` and `G⁻¹`, then
    /// each representative is reduced to coordinates in `[0, 1)`.
    pub fn discriminant(&self) -> DiscriminantGroup {
        let l = self.rank();
        let g: Matrix<BigInt> =
            self.gram.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let snf = linalg::smith_normal_form(&g);
        let u_q: Matrix<Rational> = snf
            .left
            .iter()
            .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect();
        let u_inv = linalg::inverse(&u_q).expect("unimodular transform is invertible");
        let divisors: Vec<BigInt> = snf.diagonal.clone();
        let order: BigInt = divisors.iter().product();

        let mut reps = BTreeSet::new();
        let mut y = vec![BigInt::zero(); l];
        loop {
            let z: Vec<Rational> = (0..l)
                .map(|i| (0..l).map(|k| &u_inv[i][k] * Rational::from_integer(y[k].clone())).sum())
                .collect();
            let lam: Vec<Rational> = (0..l)
                .map(|j| (0..l).map(|i| &z[i] * &self.gram_inv[i][j]).sum())
                .collect();
            reps.insert(RationalVector(lam).fract());
            // odometer over the box
            let mut k = 0;
            while k < l {
                y[k] += 1;
                if y[k] < divisors[k] {
                    break;
                }
                y[k] = BigInt::zero();
                k += 1;
            }
            if k == l {
                break;
            }
        }
        DiscriminantGroup {
            order,
            elementary_divisors: divisors.into_iter().filter(|d| !d.is_one()).collect(),
            representatives: reps.into_iter().collect(),
        }
    }

    /// Index sets of the orthogonal summands (connected components of the
    /// graph with an edge wherever `G_ij ≠ 0`), each sorted, ordered by first index.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// The lattice spanned by a subset of the basis.
    pub fn sublattice(&self, indices: &[usize]) -> Lattice {
        let g: Matrix<i64> = indices
            .iter()
            .map(|&i| indices.iter().map(|&j| self.gram[i][j]).collect())
            .collect();
        Lattice::validate(g).expect("principal submatrix of a positive-definite even Gram matrix")
    }

    /// All lattice points `β` with `(β − center, β − center) ≤ bound`, in
    /// lexicographic order of coordinates.
    ///
    /// Fincke–Pohst style: with `G = L D Lᵀ`, the quadratic form splits as
    /// `Σ d_i y_i²`, `y = Lᵀ(β − center)`, and each coordinate range is
    /// solved exactly from last to first.
    pub fn enumerate_in_ellipsoid(
        &self,
        center: &RationalVector,
        bound: &Rational,
    ) -> Result<Vec<LatticeVector>> {
        self.check_dim(center)?;
        if bound.is_negative() {
            return Err(Error::NegativeBound);
        }
        let l = self.rank();
        let mut out = Vec::new();
        let mut x = vec![0i64; l];
        self.enumerate_level(l - 1, center, bound.clone(), &mut x, &mut out);
        out.sort();
        Ok(out)
    }

    fn enumerate_level(
        &self,
        i: usize,
        center: &RationalVector,
        remaining: Rational,
        x: &mut Vec<i64>,
        out: &mut Vec<LatticeVector>,
    ) {
        let l = self.rank();
        let mut t = center[i].clone();
        for j in i + 1..l {
            let lji = &self.ldl.lower[j][i];
            if !lji.is_zero() {
                t -= lji * (int(x[j]) - &center[j]);
            }
        }
        let d = &self.ldl.pivots[i];
        let s = &remaining / d;
        let radius = floor_sqrt(&s);
        let lo = (t.floor().to_integer() - &radius - BigInt::one()).to_i64().expect("coordinate fits i64");
        let hi = (t.ceil().to_integer() + &radius + BigInt::one()).to_i64().expect("coordinate fits i64");
        for xi in lo..=hi {
            let y = int(xi) - &t;
            let used = d * &y * &y;
            if used > remaining {
                continue;
            }
            x[i] = xi;
            if i == 0 {
                out.push(x.clone());
            } else {
                self.enumerate_level(i - 1, center, &remaining - used, x, out);
            }
        }
        x[i] = 0;
    }
}

fn orthogonal_components(gram: &Matrix<i64>) -> Vec<Vec<usize>> {
    let l = gram.len();
    let mut label: Vec<usize> = (0..l).collect();
    fn find(label: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while label[r] != r {
            r = label[r];
        }
        label[i] = r;
        r
    }
    for i in 0..l {
        for j in i + 1..l {
            if gram[i][j] != 0 {
                let (a, b) = (find(&mut label, i), find(&mut label, j));
                let (lo, hi) = (a.min(b), a.max(b));
                label[hi] = lo;
            }
        }
    }
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut root_slot = vec![usize::MAX; l];
    for i in 0..l {
        let r = find(&mut label, i);
        if root_slot[r] == usize::MAX {
            root_slot[r] = comps.len();
            comps.push(Vec::new());
        }
        comps[root_slot[r]].push(i);
    }
    comps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn rv(c: &[(i64, i64)]) -> RationalVector {
        RationalVector(c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn validate_examples() {
        let l = Lattice::validate(vec![vec![2]]).unwrap();
        assert_eq!(l.rank(), 1);
        let a2 = Lattice::validate(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(a2.determinant(), BigInt::from(3));
        assert_eq!(Lattice::validate(vec![vec![1]]), Err(Error::NotEven { index: 0 }));
    }

    #[test]
    fn validate_errors_name_the_failure() {
        assert_eq!(
            Lattice::validate(vec![vec![2, 1], vec![0, 2]]).unwrap_err(),
            Error::NotSymmetric { i: 0, j: 1 }
        );
        assert_eq!(
            Lattice::validate(vec![vec![2, 3], vec![3, 2]]).unwrap_err(),
            Error::NotPositiveDefinite { minor: 2 }
        );
        assert_eq!(
            Lattice::validate(vec![vec![-2]]).unwrap_err(),
            Error::NotPositiveDefinite { minor: 1 }
        );
        assert_eq!(Lattice::validate(vec![]).unwrap_err(), Error::EmptyGram);
        assert!(matches!(
            Lattice::validate(vec![vec![2, 0], vec![0]]),
            Err(Error::NotSquare { row: 1, .. })
        ));
    }

    #[test]
    fn named_lattices() {
        assert_eq!(Lattice::named("rank1", Some(4)).unwrap().gram(), &vec![vec![4]]);
        assert_eq!(
            Lattice::named("A", Some(2)).unwrap().gram(),
            &vec![vec![2, -1], vec![-1, 2]]
        );
        let e8 = Lattice::named("E8", None).unwrap();
        assert_eq!(e8.determinant(), BigInt::one());
        assert!(matches!(Lattice::named("D4", None), Err(Error::UnknownName(_))));
        assert!(matches!(Lattice::named("rank1", Some(0)), Err(Error::BadParameter(_))));
        assert!(matches!(Lattice::named("rank1", Some(3)), Err(Error::BadParameter(_))));
        assert!(matches!(Lattice::named("A", None), Err(Error::BadParameter(_))));
    }

    #[test]
    fn direct_sums() {
        let r2 = Lattice::rank1(2).unwrap();
        assert_eq!(Lattice::direct_sum(std::slice::from_ref(&r2)).unwrap(), r2);
        let e8 = Lattice::e8();
        let e16 = Lattice::direct_sum(&[e8.clone(), e8]).unwrap();
        assert_eq!(e16.rank(), 16);
        assert_eq!(e16.determinant(), BigInt::one());
        let s = Lattice::direct_sum(&[Lattice::a(2).unwrap(), Lattice::rank1(4).unwrap()]).unwrap();
        assert_eq!(s.rank(), 3);
        assert_eq!(s.determinant(), BigInt::from(12));
        assert_eq!(s.components(), &[vec![0, 1], vec![2]]);
        assert_eq!(Lattice::direct_sum(&[]).unwrap_err(), Error::EmptyInput);
    }

    #[test]
    fn inner_products() {
        let r4 = Lattice::rank1(4).unwrap();
        let q = rv(&[(1, 4)]);
        assert_eq!(r4.inner(&q, &q).unwrap(), rat(1, 4));
        let a2 = Lattice::a(2).unwrap();
        assert_eq!(
            a2.inner(&RationalVector::unit(2, 0), &RationalVector::unit(2, 1)).unwrap(),
            int(-1)
        );
        assert_eq!(a2.inner(&RationalVector::zeros(2), &rv(&[(3, 7), (1, 1)])).unwrap(), int(0));
        assert_eq!(
            a2.inner(&RationalVector::zeros(1), &RationalVector::zeros(2)).unwrap_err(),
            Error::DimensionMismatch { expected: 2, found: 1 }
        );
    }

    #[test]
    fn dual_bases() {
        assert_eq!(Lattice::rank1(2).unwrap().dual_basis(), &vec![vec![rat(1, 2)]]);
        assert_eq!(
            Lattice::a(2).unwrap().dual_basis(),
            &vec![vec![rat(2, 3), rat(1, 3)], vec![rat(1, 3), rat(2, 3)]]
        );
        assert!(Lattice::e8().dual_basis().iter().flatten().all(Rational::is_integer));
    }

    #[test]
    fn membership() {
        let r4 = Lattice::rank1(4).unwrap();
        let half = rv(&[(1, 2)]);
        assert!(!r4.in_lattice(&half).unwrap());
        assert!(r4.in_dual(&half).unwrap());
        assert!(r4.in_lattice(&RationalVector::from_integers(&[3])).unwrap());
        let a2 = Lattice::a(2).unwrap();
        assert!(a2.in_dual(&rv(&[(1, 3), (2, 3)])).unwrap());
        assert!(!a2.in_dual(&rv(&[(1, 3), (1, 3)])).unwrap());
    }

    #[test]
    fn discriminant_groups() {
        let e8 = Lattice::e8().discriminant();
        assert_eq!(e8.order, BigInt::one());
        assert!(e8.elementary_divisors.is_empty());
        assert_eq!(e8.representatives, vec![RationalVector::zeros(8)]);

        let a2 = Lattice::a(2).unwrap().discriminant();
        assert_eq!(a2.order, BigInt::from(3));
        assert_eq!(a2.elementary_divisors, vec![BigInt::from(3)]);

        let r4 = Lattice::rank1(4).unwrap().discriminant();
        assert_eq!(r4.order, BigInt::from(4));
        assert_eq!(
            r4.representatives,
            vec![rv(&[(0, 1)]), rv(&[(1, 4)]), rv(&[(1, 2)]), rv(&[(3, 4)])]
        );
    }

    #[test]
    fn ellipsoid_examples() {
        let r2 = Lattice::rank1(2).unwrap();
        assert_eq!(
            r2.enumerate_in_ellipsoid(&RationalVector::zeros(1), &int(2)).unwrap(),
            vec![vec![-1], vec![0], vec![1]]
        );
        let a3 = Lattice::a(3).unwrap();
        assert_eq!(
            a3.enumerate_in_ellipsoid(&RationalVector::zeros(3), &int(0)).unwrap(),
            vec![vec![0, 0, 0]]
        );
        assert_eq!(
            r2.enumerate_in_ellipsoid(&RationalVector::zeros(1), &int(-1)).unwrap_err(),
            Error::NegativeBound
        );
        // off-centre: |m - 1/2|^2 * 2 <= 1/2  ->  m in {0, 1}
        assert_eq!(
            r2.enumerate_in_ellipsoid(&rv(&[(1, 2)]), &rat(1, 2)).unwrap(),
            vec![vec![0], vec![1]]
        );
    }

    #[test]
    fn components_of_single_block() {
        assert_eq!(Lattice::e8().components(), &[(0..8).collect::<Vec<_>>()]);
    }
}
