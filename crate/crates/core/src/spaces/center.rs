//! Orders of centers of isometry groups, as configuration data, plus a
//! brute-force torus-kernel count for simply connected matrix groups.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{FamilyTag, SpaceFamily};
use crate::linalg::ComplexMatrix;

/// The order of `Z(G₀)` when it has been configured for a space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CenterOrder {
    Configured { order: u64, provenance: &'static str },
    Unconfigured,
}

impl CenterOrder {
    pub fn order(self) -> Option<u64> {
        match self {
            CenterOrder::Configured { order, .. } => Some(order),
            CenterOrder::Unconfigured => None,
        }
    }

    pub fn provenance(self) -> Option<&'static str> {
        match self {
            CenterOrder::Configured { provenance, .. } => Some(provenance),
            CenterOrder::Unconfigured => None,
        }
    }
}

/// Looks up the configured center order. Quotient isometry groups are only
/// configured where the order is known; everything else is unconfigured.
pub fn center_order(family: SpaceFamily) -> CenterOrder {
    let configured = |order, provenance| CenterOrder::Configured { order, provenance };
    match family.tag() {
        FamilyTag::AI => {
            let (p, q) = family.pq();
            if p + q == 6 {
                configured(3, "SU(6)/SO(6): Z(SU(6)/Z_2) is Z_3")
            } else {
                CenterOrder::Unconfigured
            }
        }
        FamilyTag::GrpA => {
            let (p, q) = family.pq();
            configured((p + q) as u64, "Z(SU(n)) is Z_n")
        }
        FamilyTag::GrpC => configured(2, "Z(Sp(n)) is Z_2"),
        FamilyTag::GrpBd => {
            let (p, q) = family.pq();
            spin_center(p + q)
        }
        FamilyTag::GrpD => spin_center(2 * family.n()),
        _ => CenterOrder::Unconfigured,
    }
}

fn spin_center(n: usize) -> CenterOrder {
    match n {
        0..=2 => CenterOrder::Unconfigured,
        n if n % 2 == 1 => CenterOrder::Configured { order: 2, provenance: "Z(Spin(n)) is Z_2 for odd n" },
        n if n % 4 == 0 => CenterOrder::Configured { order: 4, provenance: "Z(Spin(n)) is Z_2 x Z_2 for n = 0 mod 4" },
        _ => CenterOrder::Configured { order: 4, provenance: "Z(Spin(n)) is Z_4 for n = 2 mod 4" },
    }
}

/// Counts the elements of a maximal torus acting trivially on `algebra`
/// by conjugation, which is the center of a connected group.
///
/// The torus is `t ↦ diag(exp(2πi Σ t_k h_k))` for integer weight vectors
/// `h_k`, sampled on the lattice `t ∈ (1/lattice)ℤ`. The count is exact
/// (integer arithmetic only) provided the lattice contains the center.
pub fn torus_center_order(algebra: &[ComplexMatrix], generators: &[Vec<i64>], lattice: i64) -> usize {
    let Some(n) = algebra.first().map(ComplexMatrix::dim) else {
        return 0;
    };
    let mut pairs = BTreeSet::new();
    for x in algebra {
        for flat in x.support() {
            let (j, k) = (flat / n, flat % n);
            if j != k {
                pairs.insert((j, k));
            }
        }
    }
    let mut kernel = BTreeSet::new();
    let mut m = alloc::vec![0i64; generators.len()];
    loop {
        // phase of entry j is phases[j] / lattice turns
        let phases: Vec<i64> = (0..n)
            .map(|j| generators.iter().zip(&m).map(|(h, mk)| h[j] * mk).sum::<i64>().rem_euclid(lattice))
            .collect();
        if pairs.iter().all(|&(j, k)| phases[j] == phases[k]) {
            kernel.insert(phases);
        }
        // odometer over the lattice
        let mut idx = 0;
        while idx < m.len() {
            m[idx] += 1;
            if m[idx] < lattice {
                break;
            }
            m[idx] = 0;
            idx += 1;
        }
        if idx == m.len() {
            break;
        }
    }
    kernel.len()
}

/// `e_k - e_{k+1}`, the coroots spanning the diagonal torus of `SU(n)`.
pub fn su_torus(n: usize) -> Vec<Vec<i64>> {
    (0..n.saturating_sub(1))
        .map(|k| {
            (0..n)
                .map(|j| {
                    if j == k {
                        1
                    } else if j == k + 1 {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// `e_k - e_{m+k}`, the diagonal torus of `Sp(m)` inside `U(2m)`.
pub fn sp_torus(m: usize) -> Vec<Vec<i64>> {
    (0..m)
        .map(|k| {
            (0..2 * m)
                .map(|j| {
                    if j == k {
                        1
                    } else if j == m + k {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::algebra::{sp_span, su_span};
    use super::*;

    #[test]
    fn extremal_example_is_configured() {
        let fam = SpaceFamily::pair(FamilyTag::AI, 1, 5).unwrap();
        assert_eq!(center_order(fam).order(), Some(3));
        let other = SpaceFamily::pair(FamilyTag::AI, 1, 4).unwrap();
        assert_eq!(center_order(other), CenterOrder::Unconfigured);
    }

    #[test]
    fn torus_kernel_of_su() {
        for n in 2..=5 {
            let count = torus_center_order(&su_span(n), &su_torus(n), n as i64);
            assert_eq!(count, n);
            // a finer lattice finds nothing new
            assert_eq!(torus_center_order(&su_span(n), &su_torus(n), 2 * n as i64), n);
            let fam = SpaceFamily::pair(FamilyTag::GrpA, 1, n - 1).unwrap();
            assert_eq!(center_order(fam).order(), Some(n as u64));
        }
    }

    #[test]
    fn torus_kernel_of_sp() {
        for m in 1..=3 {
            assert_eq!(torus_center_order(&sp_span(m), &sp_torus(m), 4), 2);
            let fam = SpaceFamily::single(FamilyTag::GrpC, m).unwrap();
            assert_eq!(center_order(fam).order(), Some(2));
        }
    }

    #[test]
    fn spin_centers() {
        let bd = |p, q| center_order(SpaceFamily::pair(FamilyTag::GrpBd, p, q).unwrap()).order();
        assert_eq!(bd(1, 1), None);
        assert_eq!(bd(1, 2), Some(2));
        assert_eq!(bd(2, 2), Some(4));
        assert_eq!(bd(3, 3), Some(4));
        let d = |n| center_order(SpaceFamily::single(FamilyTag::GrpD, n).unwrap()).order();
        assert_eq!(d(1), None);
        assert_eq!(d(2), Some(4));
    }
}
