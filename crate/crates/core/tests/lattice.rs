use meandric::meander::{doubling, doubling_inverse};
use meandric::nc_lattice::{
    catalan, enumerate_nc, enumerate_nce, enumerate_ncp, kernel, orbits, trace_permutation,
    IntervalSignature, SetPartition,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn nc(n: usize) -> Vec<SetPartition> {
    enumerate_nc(n).unwrap().collect()
}

/// All partitions of `{1..n}` as restricted growth strings.
fn all_partitions(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    fn rec(i: usize, max: usize, labels: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        if i == labels.len() {
            out.push(SetPartition::from_labels(labels).unwrap());
            return;
        }
        for l in 0..=max + 1 {
            labels[i] = l;
            rec(i + 1, max.max(l), labels, out);
        }
    }
    labels[0] = 0;
    rec(1, 0, &mut labels, &mut out);
    out
}

#[test]
fn enumerators_have_catalan_sizes() {
    for n in 1..=9 {
        let list = nc(n);
        assert_eq!(BigUint::from(list.len()), catalan(n));
        assert!(list.iter().all(SetPartition::is_noncrossing));
        let mut dedup = list.clone();
        dedup.sort_by_key(|p| p.labels().to_vec());
        dedup.dedup();
        assert_eq!(dedup.len(), list.len(), "duplicates in NC({n})");
    }
    for m in 1..=5 {
        assert_eq!(
            BigUint::from(enumerate_ncp(2 * m).unwrap().count()),
            catalan(m)
        );
        assert!(enumerate_ncp(2 * m).unwrap().all(|p| p.is_pairing()));
        assert!(enumerate_nce(2 * m).unwrap().all(|p| p.has_even_blocks()));
    }
}

#[test]
fn nc_filter_of_all_partitions() {
    // Bell(6) = 203 partitions, C_6 = 132 of them non-crossing
    let all = all_partitions(6);
    assert_eq!(all.len(), 203);
    let mut from_filter: Vec<Vec<usize>> = all
        .iter()
        .filter(|p| p.is_noncrossing())
        .map(|p| p.labels().to_vec())
        .collect();
    let mut from_enum: Vec<Vec<usize>> = nc(6).iter().map(|p| p.labels().to_vec()).collect();
    from_filter.sort();
    from_enum.sort();
    assert_eq!(from_filter, from_enum);
}

#[test]
fn lattice_axioms_exhaustive() {
    for n in 1..=5 {
        let list = nc(n);
        let bottom = SetPartition::singletons(n).unwrap();
        let top = SetPartition::full(n).unwrap();
        for a in &list {
            assert!(bottom.leq(a).unwrap() && a.leq(&top).unwrap());
            assert_eq!(&a.meet(a).unwrap(), a);
            assert_eq!(&a.join_nc(a).unwrap(), a);
            for b in &list {
                let m = a.meet(b).unwrap();
                let j = a.join_nc(b).unwrap();
                let jf = a.join_full(b).unwrap();
                assert_eq!(m, b.meet(a).unwrap());
                assert_eq!(j, b.join_nc(a).unwrap());
                assert!(m.is_noncrossing() && j.is_noncrossing());
                assert!(m.leq(a).unwrap() && m.leq(b).unwrap());
                assert!(a.leq(&j).unwrap() && b.leq(&j).unwrap());
                assert!(jf.leq(&j).unwrap());
                // absorption
                assert_eq!(&a.meet(&j).unwrap(), a);
                assert_eq!(&a.join_nc(&m).unwrap(), a);
                assert_eq!(a.leq(b).unwrap(), &m == a);
                for c in &list {
                    if c.leq(a).unwrap() && c.leq(b).unwrap() {
                        assert!(c.leq(&m).unwrap());
                    }
                    if a.leq(c).unwrap() && b.leq(c).unwrap() {
                        assert!(j.leq(c).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn full_join_is_least_upper_bound_in_all_partitions() {
    let all = all_partitions(5);
    for a in &all {
        for b in &all {
            let j = a.join_full(b).unwrap();
            assert!(a.leq(&j).unwrap() && b.leq(&j).unwrap());
            for c in &all {
                if a.leq(c).unwrap() && b.leq(c).unwrap() {
                    assert!(j.leq(c).unwrap());
                }
            }
        }
    }
}

#[test]
fn doubling_round_trip() {
    for n in 1..=7 {
        let pairings: Vec<SetPartition> = enumerate_ncp(2 * n).unwrap().collect();
        let mut images = Vec::new();
        for p in nc(n) {
            let a = doubling(&p).unwrap();
            assert!(a.is_pairing() && a.is_noncrossing());
            assert_eq!(doubling_inverse(&a).unwrap(), p);
            images.push(a.labels().to_vec());
        }
        images.sort();
        let mut expected: Vec<Vec<usize>> = pairings.iter().map(|p| p.labels().to_vec()).collect();
        expected.sort();
        assert_eq!(images, expected, "doubling is onto NCP({})", 2 * n);
    }
}

#[test]
fn doubling_of_extremes() {
    // 0_n goes to adjacent pairs, 1_n to the pairing that nests everything
    let n = 5;
    let zero = doubling(&SetPartition::singletons(n).unwrap()).unwrap();
    let one = doubling(&SetPartition::full(n).unwrap()).unwrap();
    assert!(zero.blocks().iter().all(|b| b[1] == b[0] + 1));
    assert!(one.same_block(1, 2 * n));
}

#[test]
fn trace_and_orbits_are_inverse() {
    for n in 1..=7 {
        for p in nc(n) {
            let t = trace_permutation(&p);
            assert_eq!(orbits(&t), p);
            assert_eq!(t.orbit_count(), p.block_count());
        }
    }
}

#[test]
fn interval_criterion_matches_join() {
    for n in 1..=6 {
        let list = nc(n);
        let sigs: Vec<IntervalSignature> = list.iter().map(IntervalSignature::new).collect();
        for (a, sa) in list.iter().zip(&sigs) {
            for (b, sb) in list.iter().zip(&sigs) {
                assert_eq!(!sa.shares_interval(sb), a.join_nc(b).unwrap().is_full());
            }
        }
    }
}

#[test]
fn kernel_is_coarsest_monochromatic() {
    let tuple = [3, 1, 3, 2, 1];
    let k = kernel(&tuple).unwrap();
    assert_eq!(k.to_string(), "{1,3|2,5|4}");
    for p in all_partitions(5) {
        let mono = p
            .blocks()
            .iter()
            .all(|b| b.iter().all(|&e| tuple[e - 1] == tuple[b[0] - 1]));
        assert_eq!(mono, p.leq(&k).unwrap());
    }
}

fn arb_partition(max_n: usize) -> impl Strategy<Value = SetPartition> {
    (1..=max_n)
        .prop_flat_map(|n| prop::collection::vec(0..n, n))
        .prop_map(|labels| SetPartition::from_labels(&labels).unwrap())
}

fn arb_pair(max_n: usize) -> impl Strategy<Value = (SetPartition, SetPartition)> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                prop::collection::vec(0..n, n),
                prop::collection::vec(0..n, n),
            )
        })
        .prop_map(|(a, b)| {
            (
                SetPartition::from_labels(&a).unwrap(),
                SetPartition::from_labels(&b).unwrap(),
            )
        })
}

proptest! {
    #[test]
    fn text_round_trip(p in arb_partition(20)) {
        let text = p.to_string();
        let back: SetPartition = text.parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn meet_and_full_join_bound((a, b) in arb_pair(24)) {
        let m = a.meet(&b).unwrap();
        let j = a.join_full(&b).unwrap();
        prop_assert!(m.leq(&a).unwrap() && m.leq(&b).unwrap());
        prop_assert!(a.leq(&j).unwrap() && b.leq(&j).unwrap());
        prop_assert_eq!(m.block_count() >= a.block_count().max(b.block_count()), true);
        prop_assert_eq!(a.meet(&j).unwrap(), a.clone());
    }

    #[test]
    fn nc_join_dominates_full_join((a, b) in arb_pair(16)) {
        let (a, b) = (closure(&a), closure(&b));
        let j = a.join_nc(&b).unwrap();
        prop_assert!(j.is_noncrossing());
        prop_assert_eq!(&j, &closure(&a.join_full(&b).unwrap()));
        prop_assert!(a.join_full(&b).unwrap().leq(&j).unwrap());
        prop_assert_eq!(
            !IntervalSignature::new(&a).shares_interval(&IntervalSignature::new(&b)),
            j.is_full()
        );
    }

    #[test]
    fn nc_join_of_closure_with_bottom(p in arb_partition(16)) {
        let c = closure(&p);
        prop_assert!(c.is_noncrossing());
        prop_assert!(p.leq(&c).unwrap());
        prop_assert_eq!(c.join_nc(&SetPartition::singletons(p.n()).unwrap()).unwrap(), c.clone());
        prop_assert_eq!(closure(&c), c);
    }
}

/// Smallest non-crossing partition above `p`, by merging any two blocks
/// that cross at some `a < b < c < d` until none do.
fn closure(p: &SetPartition) -> SetPartition {
    let n = p.n();
    let mut labels = p.labels().to_vec();
    'outer: loop {
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let (x, y) = (labels[a], labels[b]);
                        if x != y && labels[c] == x && labels[d] == y {
                            for l in labels.iter_mut() {
                                if *l == y {
                                    *l = x;
                                }
                            }
                            continue 'outer;
                        }
                    }
                }
            }
        }
        return SetPartition::from_labels(&labels).unwrap();
    }
}
