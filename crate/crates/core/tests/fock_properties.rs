mod common;

use proptest::prelude::*;
use shifted_voa::fock::{self, FockState, FockVec};
use shifted_voa::scalar::{int, rat};
use shifted_voa::{FockVector, Lattice, RationalVector, ShiftedVoa};

const W: i64 = 3;

fn battery() -> Vec<ShiftedVoa> {
    let mut out: Vec<ShiftedVoa> = common::rank1_battery(&[1, 2, 3]).into_iter().map(|t| t.2).collect();
    let a2 = Lattice::a(2).unwrap();
    out.push(ShiftedVoa::real(a2.clone(), RationalVector(a2.dual_basis()[0].clone())).unwrap());
    out
}

#[test]
fn zero_mode_is_diagonal_with_the_grading() {
    for v in battery() {
        for s in fock::basis(&v, &int(W)).unwrap() {
            let x = FockVector::basis(s.clone());
            let w = v.weight(s.degree(), s.label()).unwrap();
            assert!(w.is_real());
            assert_eq!(fock::shifted_virasoro(&v, 0, &x).unwrap(), x.scale(&w.re), "{s}");
        }
    }
}

#[test]
fn shifted_l_minus_one_is_unshifted() {
    for v in battery() {
        for s in fock::basis(&v, &int(W)).unwrap() {
            let x = FockVector::basis(s);
            assert_eq!(
                fock::shifted_virasoro(&v, -1, &x).unwrap(),
                fock::virasoro(v.lattice(), -1, &x)
            );
        }
    }
}

#[test]
fn virasoro_relations_across_the_battery() {
    for v in battery() {
        for m in -2..=2 {
            for n in -2..=2 {
                let w = fock::bracket_witness(&v, m, n, &int(W)).unwrap();
                assert!(w.is_none(), "h = {}, m = {m}, n = {n}", v.shift_real());
            }
        }
    }
}

#[test]
fn heisenberg_commutators_on_basis() {
    for lat in [Lattice::rank1(4).unwrap(), Lattice::a(2).unwrap()] {
        let v = ShiftedVoa::unshifted(lat.clone());
        let states = fock::basis(&v, &int(W)).unwrap();
        let l = lat.rank();
        for i in 0..l {
            for j in 0..l {
                let (bi, bj) = (RationalVector::unit(l, i), RationalVector::unit(l, j));
                for m in -3i64..=3 {
                    for s in &states {
                        let x = FockVector::basis(s.clone());
                        let ab = fock::heisenberg(&lat, &bi, m, &fock::heisenberg(&lat, &bj, -m, &x).unwrap()).unwrap();
                        let ba = fock::heisenberg(&lat, &bj, -m, &fock::heisenberg(&lat, &bi, m, &x).unwrap()).unwrap();
                        let want = x.scale(&int(m * lat.gram()[i][j]));
                        assert_eq!(ab.sub(&ba), want);
                    }
                }
            }
        }
    }
}

#[test]
fn basis_counts_agree_with_spectrum() {
    for v in battery() {
        let mut counts = std::collections::BTreeMap::new();
        for s in fock::basis(&v, &int(W)).unwrap() {
            *counts.entry(fock::state_weight(&v, &s)).or_insert(0u64) += 1;
        }
        for (g, d) in v.spectrum(&int(W)) {
            assert_eq!(counts.get(&g.re).copied().unwrap_or(0), u64::try_from(d).unwrap());
        }
    }
}

#[test]
fn codimension_is_zero_or_one() {
    for v in battery() {
        let c = fock::l1_codimension(&v).unwrap();
        assert!(c <= 1);
        assert_eq!(c == 1, v.is_self_dual().unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn delta_on_omega_has_three_terms(
        which in 0usize..3,
        m in proptest::collection::vec(-3i64..=3, 3),
        d in 1i64..=6,
    ) {
        let lat = [Lattice::rank1(2).unwrap(), Lattice::a(2).unwrap(), Lattice::a(3).unwrap()][which].clone();
        let h = RationalVector(m[..lat.rank()].iter().map(|&x| rat(x, d)).collect());
        prop_assume!(!h.is_zero());
        let omega: FockVector = fock::omega(&lat);
        let res = fock::delta_apply(&lat, &h.neg(), &omega, 2).unwrap();
        let vac = FockVec::basis(FockState::vacuum(lat.rank()));
        let h1: FockVector = fock::weight_one_state(&lat, &h).unwrap();
        let exps: Vec<_> = res.iter().map(|(e, _)| e.clone()).collect();
        prop_assert_eq!(exps, vec![int(-2), int(-1), int(0)]);
        prop_assert_eq!(res.get(&int(-1)).unwrap(), &h1.scale(&int(-1)));
        prop_assert_eq!(res.get(&int(-2)).unwrap(), &vac.scale(&(lat.norm(&h).unwrap() / int(2))));
        let report = fock::check_h_conditions(&lat, &h, &int(2)).unwrap();
        prop_assert!(report.all_passed());
        prop_assert_eq!(report.h1h, lat.norm(&h).unwrap());
    }

    #[test]
    fn trace_identity_for_dual_shifts(which in 0usize..3, m in proptest::collection::vec(-2i64..=2, 3)) {
        let lat = [Lattice::rank1(4).unwrap(), Lattice::a(2).unwrap(), Lattice::rank1(6).unwrap()][which].clone();
        let l = lat.rank();
        let ginv = lat.dual_basis();
        let h = RationalVector((0..l).map(|j| (0..l).map(|i| int(m[i]) * &ginv[i][j]).sum()).collect());
        let v = ShiftedVoa::real(lat, h).unwrap();
        let order = common::leading_exponent(&v) + int(3);
        prop_assert!(fock::trace_identity_check(&v, &order).unwrap());
    }
}
