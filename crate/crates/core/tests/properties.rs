mod common;

use common::{cell_walk_weight, partitions, self_conjugate, transpose};
use nu_partitions::classes::{
    enumerate_d, enumerate_do, enumerate_o, enumerate_s, is_in_d, is_in_do,
};
use nu_partitions::{
    d_to_do, d_to_o, distinct_odd_to_sc, do_to_d, o_to_d, phi, phi_inverse, sc_to_distinct_odd,
    HookList, OddFerrersGraph, Partition, TruncatedSeries,
};
use proptest::prelude::*;

/// Random partition of weight at most `max`: random parts, then sorted.
fn arb_partition(max: u64) -> impl Strategy<Value = Partition> {
    (0..=max)
        .prop_flat_map(|w| proptest::collection::vec(1..=w.max(1), 0..=(w as usize)))
        .prop_map(move |raw| {
            let mut acc = 0;
            let parts: Vec<u64> = raw
                .into_iter()
                .take_while(|&x| {
                    acc += x;
                    acc <= max
                })
                .collect();
            Partition::from_unsorted(parts).unwrap()
        })
}

fn arb_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec(-1000i64..1000, order + 1)
        .prop_map(move |c| TruncatedSeries::from_coeffs(&c, order))
}

fn arb_unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    // Small coefficients keep the inverse within i64: |b_k| <= 2^k.
    (
        prop_oneof![Just(1i64), Just(-1i64)],
        proptest::collection::vec(-1i64..=1, order),
    )
        .prop_map(move |(c0, rest)| {
            let mut c = vec![c0];
            c.extend(rest);
            TruncatedSeries::from_coeffs(&c, order)
        })
}

proptest! {
    #[test]
    fn conjugate_is_an_involution(p in arb_partition(200)) {
        let c = p.conjugate();
        prop_assert_eq!(c.weight(), p.weight());
        prop_assert_eq!(c.parts().to_vec(), transpose(p.parts()));
        prop_assert_eq!(c.conjugate(), p);
    }

    #[test]
    fn text_form_roundtrips(p in arb_partition(60)) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn ring_axioms(a in arb_series(24), b in arb_series(24), c in arb_series(24)) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn addition_is_coefficientwise(a in arb_series(40), b in arb_series(40)) {
        let sum = a.add(&b).unwrap();
        for k in 0..=40 {
            prop_assert_eq!(sum.coeff(k), a.coeff(k) + b.coeff(k));
        }
    }

    #[test]
    fn inverse_is_two_sided(a in arb_unit_series(40)) {
        let inv = a.invert().unwrap();
        let one = TruncatedSeries::one(40);
        prop_assert_eq!(a.mul(&inv).unwrap(), one.clone());
        prop_assert_eq!(inv.mul(&a).unwrap(), one);
    }
}

#[test]
fn inverse_overflow_is_an_error() {
    let a = TruncatedSeries::from_coeffs(&[1, -5, -5, -5], 64);
    assert_eq!(a.invert(), Err(nu_partitions::Error::Overflow));
}

#[test]
fn hooks_roundtrip_and_conserve_cells() {
    for w in 0..=120 {
        for rows in self_conjugate(w) {
            let p = Partition::new(rows).unwrap();
            let hooks = p.hook_decompose().unwrap();
            let cells: Vec<u64> = hooks.cell_counts().collect();
            assert_eq!(cells.iter().sum::<u64>(), w);
            assert!(cells.iter().all(|c| c % 2 == 1));
            assert!(cells.windows(2).all(|x| x[0] >= x[1] + 2), "{p}");
            assert_eq!(hooks.compose().unwrap(), p);
        }
    }
}

#[test]
fn non_self_conjugate_partitions_are_rejected() {
    for w in 1..=14 {
        for parts in partitions(w) {
            let p = Partition::new(parts.clone()).unwrap();
            assert_eq!(p.hook_decompose().is_ok(), transpose(&parts) == parts);
        }
    }
}

#[test]
fn arbitrary_hook_lists_compose_to_self_conjugates() {
    // Every strictly decreasing arm list drawn from 1..=9.
    for mask in 1u32..(1 << 9) {
        let arms: Vec<u64> = (1..=9u64)
            .rev()
            .filter(|a| mask & (1 << (a - 1)) != 0)
            .collect();
        let hooks = HookList::from_arms(arms.clone()).unwrap();
        let p = hooks.compose().unwrap();
        assert!(p.is_self_conjugate());
        assert_eq!(p.weight(), arms.iter().map(|a| 2 * a - 1).sum::<u64>());
        assert_eq!(p.hook_decompose().unwrap(), hooks);
    }
}

#[test]
fn graph_weights_match_cell_walk() {
    for w in 1..=16 {
        for parts in partitions(w) {
            let border = parts[0] + parts.len() as u64 - 1;
            let g = OddFerrersGraph::new(Partition::new(parts.clone()).unwrap()).unwrap();
            assert_eq!(g.weight(), cell_walk_weight(&parts));
            assert_eq!(g.row_sums().iter().sum::<u64>(), g.weight());
            assert_eq!(g.weight() % 2, border % 2);
        }
    }
}

#[test]
fn self_conjugate_graph_weights_are_odd() {
    for cells in 1..=60 {
        for rows in self_conjugate(cells) {
            let g = OddFerrersGraph::new(Partition::new(rows).unwrap()).unwrap();
            let sums = g.weighted_hook_sums().unwrap();
            assert_eq!(g.weight() % 2, 1);
            assert_eq!(sums.iter().sum::<u64>(), g.weight());
            assert_eq!(sums[0], 2 * g.shape().parts()[0] - 1);
            assert!(sums[1..].iter().all(|s| s % 4 == 2));
            assert_eq!(g.interior_sum().unwrap(), g.weight() - sums[0]);
            assert_eq!(g.interior_sum().unwrap() % 2, 0);
        }
    }
}

#[test]
fn render_rows_match_row_sums() {
    for parts in partitions(12) {
        let g = OddFerrersGraph::new(Partition::new(parts).unwrap()).unwrap();
        let from_text: Vec<u64> = g
            .render_ascii()
            .lines()
            .map(|l| l.bytes().map(|b| u64::from(b - b'0')).sum())
            .collect();
        assert_eq!(from_text, g.row_sums());
    }
}

#[test]
fn bijections_roundtrip_exhaustively() {
    for n in 0..=25 {
        for g in enumerate_o(n) {
            let s = phi(&g).unwrap();
            assert_eq!(phi_inverse(&s).unwrap(), g);
            assert_eq!(s.weight(), 2 * g.weight() - 1);
            let d = o_to_d(&g).unwrap();
            assert_eq!(d_to_o(&d).unwrap(), g);
            // Commuting square: the compositional definition pins d_to_do.
            assert_eq!(sc_to_distinct_odd(&s).unwrap(), d_to_do(&d).unwrap());
        }
        for p in enumerate_s(n) {
            assert_eq!(phi(&phi_inverse(&p).unwrap()).unwrap(), p);
            assert_eq!(
                distinct_odd_to_sc(&sc_to_distinct_odd(&p).unwrap()).unwrap(),
                p
            );
        }
        for p in enumerate_d(n) {
            let q = d_to_do(&p).unwrap();
            assert!(is_in_do(&q, n));
            assert_eq!(do_to_d(&q).unwrap(), p);
        }
        for p in enumerate_do(n) {
            let q = do_to_d(&p).unwrap();
            assert!(is_in_d(&q, n));
            assert_eq!(d_to_do(&q).unwrap(), p);
        }
    }
}

#[test]
fn phi_hooks_alternate_residues() {
    for n in 0..=25 {
        for g in enumerate_o(n) {
            let s = phi(&g).unwrap();
            let cells: Vec<u64> = s.hook_decompose().unwrap().cell_counts().collect();
            let arms: Vec<u64> = s.hook_decompose().unwrap().arms().collect();
            assert_eq!(cells.len() % 2, 1);
            assert_eq!(arms[0] % 2, 1);
            for (i, c) in cells.iter().enumerate() {
                assert_eq!(c % 4, if i % 2 == 0 { 1 } else { 3 }, "{g} -> {s}");
            }
            for pair in arms[1..].chunks(2) {
                assert_eq!(pair[0], pair[1] + 1, "{g} -> {s}");
                assert_eq!(pair[0] % 2, 0);
            }
        }
    }
}
