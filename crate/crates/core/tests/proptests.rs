//! Randomized round-trip and symmetry properties.

use proptest::prelude::*;

use smoothperm::admissible::AdmissibleSet;
use smoothperm::dyck::{decorations_of, DecoratedPath};
use smoothperm::essential::{coessential_core, grid_from_path, path_from_grid, GridSet};
use smoothperm::perm::Permutation;
use smoothperm::tables::{is_smooth, table_23, Table23};

fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|entries| Permutation::from_one_line(&entries).unwrap())
}

fn arb_path(max_n: usize) -> impl Strategy<Value = DecoratedPath> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                proptest::collection::vec(1..=n, n),
                proptest::num::u64::ANY,
            )
        })
        .prop_map(|(raw, pick)| {
            // repair raw into a weakly increasing dominating function
            let n = raw.len();
            let mut f = vec![0usize; n];
            f[n - 1] = n;
            for i in (0..n - 1).rev() {
                f[i] = f[i + 1].min(raw[i].max(i + 1));
            }
            let decorations = decorations_of(&f);
            let g = decorations[(pick % decorations.len() as u64) as usize].clone();
            DecoratedPath::new(f, g).unwrap()
        })
}

proptest! {
    #[test]
    fn perm_parse_display_roundtrip(sigma in arb_perm(9)) {
        let parsed: Permutation = sigma.to_string().parse().unwrap();
        prop_assert_eq!(parsed, sigma);
    }

    #[test]
    fn compose_with_inverse_is_identity(sigma in arb_perm(8)) {
        let n = sigma.n();
        prop_assert_eq!(
            sigma.compose(&sigma.inverse()).unwrap(),
            Permutation::identity(n)
        );
        prop_assert_eq!(sigma.inverse().inverse(), sigma);
    }

    #[test]
    fn length_is_invariant_under_inverse_and_upend(sigma in arb_perm(8)) {
        prop_assert_eq!(sigma.length(), sigma.inverse().length());
        prop_assert_eq!(sigma.length(), sigma.upend().length());
    }

    #[test]
    fn bruhat_respects_inverse_and_upend(
        (tau, sigma) in (2..=6usize).prop_flat_map(|n| {
            let one = Just((1..=n).collect::<Vec<usize>>()).prop_shuffle();
            let two = Just((1..=n).collect::<Vec<usize>>()).prop_shuffle();
            (one, two)
        }).prop_map(|(a, b)| {
            (
                Permutation::from_one_line(&a).unwrap(),
                Permutation::from_one_line(&b).unwrap(),
            )
        })
    ) {
        let plain = tau.bruhat_leq(&sigma).unwrap();
        prop_assert_eq!(plain, tau.inverse().bruhat_leq(&sigma.inverse()).unwrap());
        prop_assert_eq!(plain, tau.upend().bruhat_leq(&sigma.upend()).unwrap());
    }

    #[test]
    fn table_serialization_is_bit_exact(sigma in arb_perm(7)) {
        let t = table_23(&sigma);
        let text = t.to_text();
        prop_assert_eq!(Table23::from_text(&text).unwrap().to_text(), text);
        let json = t.to_json();
        prop_assert_eq!(Table23::from_json(&json).unwrap().to_json(), json);
    }

    #[test]
    fn path_roundtrips_and_word_length(path in arb_path(8)) {
        let a = path.to_admissible();
        prop_assert_eq!(DecoratedPath::from_admissible(&a), path.clone());
        let (sigma, word) = path.sigma();
        prop_assert_eq!(word.len(), path.path_length());
        prop_assert_eq!(sigma.length(), path.path_length());
        prop_assert!(is_smooth(&sigma));
        // parse/display
        let reparsed: DecoratedPath = path.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, path);
    }

    #[test]
    fn grid_roundtrips(path in arb_path(8)) {
        let grid = grid_from_path(&path);
        prop_assert!(grid.in_grid_class());
        prop_assert_eq!(path_from_grid(&grid).unwrap(), path.clone());
        let text = grid.to_text();
        prop_assert_eq!(GridSet::from_text(&text).unwrap().to_text(), text);
        let json = grid.to_json();
        prop_assert_eq!(GridSet::from_json(&json).unwrap().to_json(), json);
    }

    #[test]
    fn smooth_permutations_roundtrip(sigma in arb_perm(7)) {
        if is_smooth(&sigma) {
            let a = AdmissibleSet::of_permutation(&sigma).unwrap();
            prop_assert_eq!(a.pi(), sigma.clone());
            prop_assert_eq!(coessential_core(&sigma).len() + sigma.n(), {
                // the coessential core of smooth σ has one point per
                // f-ascent; together with the n fixed slots of f this
                // recovers a path of the right size
                let path = DecoratedPath::from_admissible(&a);
                grid_from_path(&path).len() + path.n()
            });
        }
    }

    #[test]
    fn decoration_inverse_is_involutive(path in arb_path(8)) {
        let twice = path.inverse_decoration().inverse_decoration();
        prop_assert_eq!(twice, path.clone());
        let (sigma, _) = path.sigma();
        let (inv, _) = path.inverse_decoration().sigma();
        prop_assert_eq!(inv, sigma.inverse());
    }
}
