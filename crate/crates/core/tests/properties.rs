use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use matchpoly::bijections::{partition_to_path, partition_to_tree, path_to_partition, tree_to_partition, Step, StepWord};
use matchpoly::family::generate;
use matchpoly::involutions::{involution_report, Mode};
use matchpoly::moments::{closed_form_moment, gram, lukasiewicz_moment, WeightSchema};
use matchpoly::{Family, FamilyKind};

fn family() -> impl Strategy<Value = Family> {
    (0usize..4, 1u32..=5).prop_filter_map("Laguerre needs odd t", |(k, t)| {
        Family::new(FamilyKind::ALL[k], t).ok()
    })
}

/// A valid step word: at each position go up, or down by `t` if the height allows.
fn step_word() -> impl Strategy<Value = (u32, StepWord)> {
    (1u32..=4, proptest::collection::vec(any::<bool>(), 0..40)).prop_map(|(t32, coins)| {
        let t = t32 as usize;
        let mut steps = Vec::new();
        let mut h = 0usize;
        for down in coins {
            if down && h >= t {
                steps.push(Step::Down(t));
                h -= t;
            } else {
                steps.push(Step::Up);
                h += 1;
            }
        }
        while h > 0 {
            if h >= t {
                steps.push(Step::Down(t));
                h -= t;
            } else {
                steps.push(Step::Up);
                h += 1;
            }
        }
        (t32, StepWord::new(steps))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomials_are_monic_of_degree_n(f in family(), n in 0usize..25) {
        let p = &generate(f, n)[n];
        prop_assert_eq!(p.degree(), Some(n));
        prop_assert!(p.is_monic());
    }

    #[test]
    fn weighted_paths_give_the_closed_form(f in family(), n in 0usize..20) {
        let schema = WeightSchema::for_family(f);
        prop_assert_eq!(lukasiewicz_moment(&schema, n, 0), closed_form_moment(f, n));
    }

    #[test]
    fn moments_vanish_off_the_lattice(f in family(), n in 0usize..30) {
        if n % f.lattice_step() != 0 {
            prop_assert!(closed_form_moment(f, n).is_zero());
        } else {
            prop_assert!(closed_form_moment(f, n) > BigInt::zero());
        }
    }

    #[test]
    fn band_below_the_diagonal_vanishes(f in family(), n in 0usize..3) {
        let t = f.order() as usize;
        let m_max = t * n + 3;
        let g = gram(f, m_max, n);
        for m in t * n + 1..=m_max {
            prop_assert!(g[m][n].is_zero(), "{} m={} n={}", f, m, n);
        }
        prop_assert!(!g[t * n][n].is_zero());
    }

    #[test]
    fn step_words_roundtrip((t, w) in step_word()) {
        let p = path_to_partition(&w, t).unwrap();
        prop_assert!(p.is_noncrossing());
        prop_assert_eq!(partition_to_path(&p, t).unwrap(), w);
        let tree = partition_to_tree(&p, t).unwrap();
        prop_assert_eq!(tree_to_partition(&tree, t).unwrap(), p);
    }

    #[test]
    fn involutions_cancel_to_the_functional(
        f in family().prop_filter("small orders", |f| f.order() <= 3),
        sizes in proptest::collection::vec(0usize..4, 1..4).prop_filter("within every bound", |s| s.iter().sum::<usize>() <= 6),
    ) {
        let r = involution_report(f, &sizes, Mode::Multiplicity).unwrap();
        prop_assert!(r.passed(), "{:?}", r);
    }
}
