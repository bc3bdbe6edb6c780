//! Independent oracles shared by the integration targets.
#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use shifted_voa::scalar::{int, rat};
use shifted_voa::{Lattice, Rational, RationalVector, ShiftedVoa};

/// Every integer point of `[−half_width, half_width]^l` with `(x − c, x − c) ≤ bound`.
pub fn box_scan(lattice: &Lattice, center: &RationalVector, bound: &Rational, half_width: i64) -> Vec<Vec<i64>> {
    let l = lattice.rank();
    let g = lattice.gram();
    let mut out = Vec::new();
    let mut x = vec![-half_width; l];
    loop {
        let d: Vec<Rational> = x.iter().zip(center.iter()).map(|(xi, ci)| int(*xi) - ci).collect();
        let mut q = Rational::zero();
        for i in 0..l {
            for j in 0..l {
                q += &d[i] * &d[j] * int(g[i][j]);
            }
        }
        if q <= *bound {
            out.push(x.clone());
        }
        let mut k = 0;
        loop {
            if k == l {
                out.sort();
                return out;
            }
            if x[k] < half_width {
                x[k] += 1;
                break;
            }
            x[k] = -half_width;
            k += 1;
        }
    }
}

/// `p(n)` for `n ≤ nmax` from the two-index recursion over the largest part.
pub fn partition_numbers(nmax: usize) -> Vec<BigInt> {
    fn p(n: usize, k: usize, memo: &mut HashMap<(usize, usize), BigInt>) -> BigInt {
        if n == 0 {
            return BigInt::from(1);
        }
        if k == 0 {
            return BigInt::zero();
        }
        if let Some(v) = memo.get(&(n, k)) {
            return v.clone();
        }
        let mut v = p(n, k - 1, memo);
        if k <= n {
            v += p(n - k, k, memo);
        }
        memo.insert((n, k), v.clone());
        v
    }
    let mut memo = HashMap::new();
    (0..=nmax).map(|n| p(n, n, &mut memo)).collect()
}

/// Norm counts of E8 in the even coordinate model `D8 ∪ (D8 + (½)^8)`,
/// scanned over a box: entry `m` is the number of vectors of norm `2m`.
/// Coordinates in `[−2, 2]` reach every vector of norm at most 6.
pub fn e8_norm_counts_box(max_half_norm: usize) -> Vec<u64> {
    assert!(max_half_norm <= 3, "box only complete up to norm 6");
    let mut counts = vec![0u64; max_half_norm + 1];
    let limit = 2 * max_half_norm as i64;
    // doubled coordinates: all even (integral part) or all odd (half-integral part)
    for odd in [false, true] {
        let values: Vec<i64> = (-4..=4).filter(|v: &i64| (v.rem_euclid(2) == 1) == odd).collect();
        let mut idx = vec![0usize; 8];
        loop {
            let y: Vec<i64> = idx.iter().map(|&i| values[i]).collect();
            let sum: i64 = y.iter().sum();
            let norm4: i64 = y.iter().map(|v| v * v).sum();
            // even coordinate sum; the norm is norm4/4
            if sum.rem_euclid(4) == 0 && norm4 / 4 <= limit {
                counts[(norm4 / 8) as usize] += 1;
            }
            let mut k = 0;
            loop {
                if k == 8 {
                    break;
                }
                idx[k] += 1;
                if idx[k] < values.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == 8 {
                break;
            }
        }
    }
    counts
}

/// Smallest `(α, α)/2 − (h, α)` over `α ∈ L`, by widening the search ellipsoid.
pub fn min_lattice_weight(v: &ShiftedVoa) -> Rational {
    let l = v.lattice();
    let h = v.shift_real();
    let mut radius = int(1);
    loop {
        let pts = l.enumerate_in_ellipsoid(h, &radius).unwrap();
        if let Some(w) = pts
            .iter()
            .map(|p| rat(l.point_norm(p), 2) - l.pair_point(h, p))
            .min()
        {
            return w;
        }
        radius *= int(2);
    }
}

/// Leading exponent of the partition function of a real shift.
pub fn leading_exponent(v: &ShiftedVoa) -> Rational {
    min_lattice_weight(v) - v.real_central_charge().unwrap() / int(24)
}

/// `h = G⁻¹ m` with `m` uniform in `[−spread, spread]^l`: a dual-lattice
/// vector whose denominators divide `det G`.
pub fn random_dual_shift(lattice: &Lattice, rng: &mut ChaCha8Rng, spread: i64) -> RationalVector {
    let m: Vec<i64> = (0..lattice.rank()).map(|_| rng.gen_range(-spread..=spread)).collect();
    let ginv = lattice.dual_basis();
    RationalVector(
        (0..lattice.rank())
            .map(|j| (0..lattice.rank()).map(|i| int(m[i]) * &ginv[i][j]).sum())
            .collect(),
    )
}

/// Random even positive-definite lattice of rank 1 or 2.
pub fn random_small_lattice(rng: &mut ChaCha8Rng) -> Lattice {
    if rng.gen_bool(0.3) {
        return Lattice::rank1(2 * rng.gen_range(1..=4)).unwrap();
    }
    loop {
        let a = rng.gen_range(1..=3i64);
        let c = rng.gen_range(1..=3i64);
        let b = rng.gen_range(-3..=3i64);
        if 4 * a * c - b * b > 0 {
            return Lattice::validate(vec![vec![2 * a, b], vec![b, 2 * c]]).unwrap();
        }
    }
}

/// `V_{L,h}` on `(α, α) = 2N` with `h = kα/2N`, `k = 0..2N`, for each `N`.
pub fn rank1_battery(ns: &[i64]) -> Vec<(i64, i64, ShiftedVoa)> {
    let mut out = Vec::new();
    for &n in ns {
        for k in 0..=2 * n {
            let l = Lattice::rank1(2 * n).unwrap();
            let v = ShiftedVoa::real(l, RationalVector(vec![rat(k, 2 * n)])).unwrap();
            out.push((n, k, v));
        }
    }
    out
}
