//! Exhaustive sweeps over the subgroup lattice of every finite field of
//! order at most 27: Krasner's construction must always produce a
//! hyperring (a hyperfield, since A is a field), and the subfield
//! criterion must agree with direct additive-closure testing.

use hyperlab_algebra::FiniteFieldSpec;
use hyperlab_hyper::{
    additively_closed_with_zero, all_subgroups, build_factor_hyperfield, check_canonical_hypergroup,
    check_hyperring, subfield_criterion, MultiOpTable,
};
use proptest::prelude::*;

const FIELD_ORDERS: [u64; 15] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27];

#[test]
fn every_factor_table_up_to_27_is_a_hyperfield() {
    for q in FIELD_ORDERS {
        let field = FiniteFieldSpec::gf(q).unwrap();
        for t in all_subgroups(&field) {
            let ft = build_factor_hyperfield(&field, &t).unwrap();
            let add = check_canonical_hypergroup(&ft.table);
            assert!(add.all_pass(), "additive axioms failed for q={q}, |T|={}", t.len());
            let ring = check_hyperring(&ft.table).unwrap();
            assert!(ring.passes_hyperring(), "HR1-HR3 failed for q={q}, |T|={}", t.len());
            assert!(ring.is_hyperfield(), "units not a group for q={q}, |T|={}", t.len());
        }
    }
}

#[test]
fn subfield_criterion_matches_additive_closure_over_odd_lattices() {
    // zero disagreements over every subgroup of F_9^x, F_25^x, F_27^x
    for q in [9u64, 25, 27] {
        let field = FiniteFieldSpec::gf(q).unwrap();
        for t in all_subgroups(&field) {
            let by_hypersum = subfield_criterion(&field, &t).unwrap();
            let by_closure = additively_closed_with_zero(&field, &t).unwrap();
            assert_eq!(by_hypersum, by_closure, "disagreement for q={q}, |T|={}", t.len());
        }
    }
}

#[test]
fn x_plus_x_is_zero_x_over_subfield_unit_groups() {
    // (q, subfield order) pairs with the subfield proper and nontrivial
    for (q, sub) in [(9u64, 3u64), (25, 5), (27, 3), (16, 4)] {
        let field = FiniteFieldSpec::gf(q).unwrap();
        let units: Vec<_> = field
            .elements()
            .into_iter()
            .filter(|e| !e.is_zero() && e.pow(sub as u128) == *e)
            .collect();
        assert_eq!(units.len() as u64, sub - 1);
        let ft = build_factor_hyperfield(&field, &units).unwrap();
        for x in 0..ft.table.size() {
            let expected = if x == 0 { vec![0] } else { vec![0, x] };
            assert_eq!(ft.table.sum(x, x), expected.as_slice(), "q={q}, x={x}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Serialization round trip over random small tables.
    #[test]
    fn table_serialization_round_trips(
        size in 1usize..6,
        seed in any::<u64>(),
        with_mul in any::<bool>(),
    ) {
        let mut state = seed | 1;
        let mut rng = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state as usize
        };
        let mut sums = Vec::with_capacity(size * size);
        for _ in 0..size * size {
            let mask = rng() % (1 << size);
            let set: Vec<usize> = (0..size).filter(|k| mask & (1 << k) != 0).collect();
            sums.push(set);
        }
        let mul = with_mul.then(|| (0..size * size).map(|_| rng() % size).collect());
        let table = MultiOpTable::from_parts(size, rng() % size, sums, mul).unwrap();
        let text = table.serialize();
        prop_assert_eq!(MultiOpTable::parse(&text).unwrap(), table);
    }
}
