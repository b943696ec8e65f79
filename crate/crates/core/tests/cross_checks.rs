//! Agreement between independently implemented pieces.

use birkhoff_ehrhart::birkhoff::{
    build_restricted_birkhoff, build_transportation, count_transportation_direct, BirkhoffSpec,
    Margins,
};
use birkhoff_ehrhart::cli::{Caps, Selector};
use birkhoff_ehrhart::ehrhart::{ehrhart_polynomial, quasi_polynomial};
use birkhoff_ehrhart::exactgeom::{
    count_lattice_points, denominator_lcm, lattice_points, vertices, Rat, RatMatrix,
};
use birkhoff_ehrhart::gtpatterns::{
    build_gt, build_m_transportation, count_m_diagonal_dp, embed_m_to_gt, embedded_content, kostka,
    MMatrix, PartitionVec,
};
use birkhoff_ehrhart::rsk::rho;
use num_traits::{Signed, ToPrimitive};

#[test]
fn three_counters_agree() {
    for n in 2..=4 {
        for k in 1..=n as u64 {
            let spec = BirkhoffSpec::new(n, k).unwrap();
            let p = build_restricted_birkhoff(spec);
            for t in 0..=2 {
                let generic = if t == 0 {
                    1
                } else {
                    count_lattice_points(&p.dilate(t)).unwrap()
                };
                let direct = count_transportation_direct(&Margins::ones(n), k, t, None).unwrap();
                let dp = count_m_diagonal_dp(&Margins::ones(n), k, t, None).unwrap();
                assert_eq!((generic, direct), (dp, dp), "n={n} k={k} t={t}");
            }
        }
    }
}

#[test]
fn transportation_margins_through_rsk() {
    let margins = Margins::new(vec![2, 1, 1], vec![1, 1, 2]).unwrap();
    for k in 1..=4 {
        let b = build_transportation(&margins, k);
        let m = build_m_transportation(&margins, k);
        let pts = lattice_points(&b).unwrap();
        let mut images: Vec<Vec<Rat>> = pts
            .iter()
            .map(|x| {
                rho(&RatMatrix::from_vector(x).unwrap())
                    .unwrap()
                    .entries()
                    .to_vec()
            })
            .collect();
        images.sort();
        let mut targets: Vec<Vec<Rat>> = lattice_points(&m)
            .unwrap()
            .into_iter()
            .map(|v| v.0)
            .collect();
        targets.sort();
        assert_eq!(images, targets, "k={k}");
        assert_eq!(
            count_m_diagonal_dp(&margins, k, 1, None).unwrap(),
            count_transportation_direct(&margins, k, 1, None).unwrap()
        );
    }
}

#[test]
fn monotone_points_embed_into_gt() {
    let margins = Margins::ones(3);
    let k = 2;
    let content = embedded_content(&margins, k).unwrap();
    let lambda = PartitionVec::rectangle(k, 3);
    let gt = build_gt(&lambda, &content).unwrap();
    let m_pts = lattice_points(&build_m_transportation(&margins, k)).unwrap();
    let mut embedded: Vec<Vec<Rat>> = m_pts
        .iter()
        .map(|y| {
            let mm = MMatrix::new(RatMatrix::from_vector(y).unwrap()).unwrap();
            embed_m_to_gt(&mm, k).unwrap().flat().to_vec()
        })
        .collect();
    embedded.sort();
    let mut gt_pts: Vec<Vec<Rat>> = lattice_points(&gt)
        .unwrap()
        .into_iter()
        .map(|v| v.0)
        .collect();
    gt_pts.sort();
    assert_eq!(embedded, gt_pts);
    assert_eq!(kostka(&lambda, &content).unwrap(), 5);
}

#[test]
fn ehrhart_degrees_and_leading_terms() {
    for n in 2..=4 {
        for k in 2..=n as u64 {
            let sel = Selector::birkhoff(n, k).unwrap();
            let fit =
                ehrhart_polynomial(&sel.count_function(Caps::default(), 20).unwrap(), 2).unwrap();
            let dim = (n - 1) * (n - 1);
            assert_eq!(fit.polynomial.degree(), dim);
            assert!(fit.polynomial.leading().is_positive());
            assert!(fit.constant_term_is_one);
        }
    }
}

#[test]
fn small_polytopes_collapse() {
    for (n, k) in [(3, 2), (3, 3), (4, 2)] {
        for sel in [
            Selector::birkhoff(n, k).unwrap(),
            Selector::monotone(n, k).unwrap(),
        ] {
            let lcm = denominator_lcm(&vertices(&sel.polytope().unwrap()).unwrap())
                .to_u64()
                .unwrap();
            let q =
                quasi_polynomial(&sel.count_function(Caps::default(), 20).unwrap(), lcm).unwrap();
            assert_eq!(q.period, 1, "{}", sel.label());
        }
    }
}
