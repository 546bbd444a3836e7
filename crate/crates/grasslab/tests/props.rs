//! Property tests over randomly generated inputs: field axioms across the
//! whole catalog, canonical-form stability of the linear algebra, closure
//! operator laws, and recognition of randomly generated collineations.

use std::sync::Arc;

use proptest::prelude::*;

use grasslab::bitset::BitSet;
use grasslab::chow::{lift_embedding, recognize, RecognizeConfig, RecognizeMode, Verdict};
use grasslab::gf::FieldSpec;
use grasslab::grassmann::{Ambient, GrassmannSpace};
use grasslab::linalg;
use grasslab::projspace::{build_pg, induced_point_map, PgSpace, SemilinearMap};

fn any_field() -> impl Strategy<Value = Arc<FieldSpec>> {
    prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9, 11, 13, 16])
        .prop_map(|q| FieldSpec::for_q(q).unwrap())
}

proptest! {
    #[test]
    fn field_ops_satisfy_ring_axioms(f in any_field(), seed in 0u64..1_000_000) {
        let q = f.q() as u64;
        let a = (seed % q) as u8;
        let b = ((seed / q) % q) as u8;
        let c = ((seed / q / q) % q) as u8;
        prop_assert_eq!(f.add_v(a, b), f.add_v(b, a));
        prop_assert_eq!(f.mul_v(a, b), f.mul_v(b, a));
        prop_assert_eq!(f.add_v(f.add_v(a, b), c), f.add_v(a, f.add_v(b, c)));
        prop_assert_eq!(f.mul_v(f.mul_v(a, b), c), f.mul_v(a, f.mul_v(b, c)));
        prop_assert_eq!(
            f.mul_v(a, f.add_v(b, c)),
            f.add_v(f.mul_v(a, b), f.mul_v(a, c))
        );
        if a != 0 {
            prop_assert_eq!(f.mul_v(a, f.inv_v(a).unwrap()), 1);
        }
        // frobenius is additive and multiplicative
        prop_assert_eq!(f.frob_v(f.add_v(a, b), 1), f.add_v(f.frob_v(a, 1), f.frob_v(b, 1)));
        prop_assert_eq!(f.frob_v(f.mul_v(a, b), 1), f.mul_v(f.frob_v(a, 1), f.frob_v(b, 1)));
    }

    #[test]
    fn rref_is_canonical_under_row_shuffles(
        f in any_field(),
        rows in prop::collection::vec(prop::collection::vec(0u8..16, 4), 1..5),
        shuffle_seed in 0usize..24,
    ) {
        let rows: Vec<Vec<u8>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| x % f.q() as u8).collect())
            .collect();
        let r = linalg::rref(&f, &rows);
        prop_assert_eq!(linalg::rref(&f, &r.clone()), r.clone());
        let mut shuffled = rows.clone();
        if shuffled.len() > 1 {
            let i = shuffle_seed % shuffled.len();
            let j = (shuffle_seed / shuffled.len()) % shuffled.len();
            shuffled.swap(i, j);
        }
        prop_assert_eq!(linalg::rref(&f, &shuffled), r);
    }

    #[test]
    fn modular_law_on_random_row_spaces(
        f in any_field(),
        a in prop::collection::vec(prop::collection::vec(0u8..16, 4), 1..3),
        b in prop::collection::vec(prop::collection::vec(0u8..16, 4), 1..3),
    ) {
        let fix = |m: Vec<Vec<u8>>| -> Vec<Vec<u8>> {
            m.into_iter()
                .map(|r| r.into_iter().map(|x| x % f.q() as u8).collect())
                .collect()
        };
        let a = linalg::rref(&f, &fix(a));
        let b = linalg::rref(&f, &fix(b));
        let s = linalg::span(&f, &a, &b);
        let m = linalg::meet(&f, &a, &b);
        prop_assert_eq!(s.len() + m.len(), a.len() + b.len());
        // the meet embeds in both row spaces
        for row in &m {
            prop_assert!(linalg::in_row_space(&f, &a, row));
            prop_assert!(linalg::in_row_space(&f, &b, row));
        }
    }
}

fn pg32() -> Arc<PgSpace> {
    build_pg(3, FieldSpec::for_q(2).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closure_laws_on_random_subsets(mask in 0u32..(1 << 15)) {
        let p = pg32();
        let x = BitSet::from_iter(15, (0..15).filter(|&i| mask & (1 << i) != 0));
        let c = p.space.closure(&x);
        prop_assert!(x.is_subset(&c));
        prop_assert_eq!(p.space.closure(&c.clone()), c.clone());
        prop_assert!(p.space.is_subspace(&c));
        // closure agrees with the coordinate span
        let by_coords = p.point_set(&p.span_of_points(&x));
        prop_assert_eq!(c, by_coords);
    }

    #[test]
    fn random_collineations_recognize_exactly(rows in prop::collection::vec(0u16..16, 4)) {
        let p = pg32();
        let m: Vec<Vec<u8>> = rows
            .iter()
            .map(|&r| (0..4).map(|c| ((r >> c) & 1) as u8).collect())
            .collect();
        prop_assume!(linalg::inverse(&p.field, &m).is_some());
        let l = SemilinearMap::new(&p.field, m, 0).unwrap();
        let pm = induced_point_map(&p, &l).unwrap();
        let g = Arc::new(
            GrassmannSpace::enumerate(Arc::new(Ambient::Pg(p.clone())), 1).unwrap(),
        );
        let lift = lift_embedding(&pm, g.clone(), g).unwrap();
        let res = recognize(&lift, RecognizeMode::Chow, RecognizeConfig::default()).unwrap();
        prop_assert_eq!(res.verdict, Verdict::CollineationInduced);
        prop_assert_eq!(res.witness.unwrap().map, pm.map);
    }
}
