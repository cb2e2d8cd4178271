//! Randomized structural laws on top of the unit suites: the exchange must
//! commute with every crystal operator, evolutions must commute with each
//! other, the mirrored step must be the star conjugate of the plain one, and
//! text forms must round-trip.

use dnca::automaton::{evolve, star_evolve, t_infinity};
use dnca::energies::r_swap;
use dnca::kashiwara::{path_e, path_eps_phi, path_f};
use dnca::textio::{format_path, parse_path};
use dnca::{BoxState, Path};
use proptest::prelude::*;

fn arb_box(n: usize) -> impl Strategy<Value = BoxState> {
    prop::collection::vec(0..=2i64, 2 * n).prop_map(move |mut z| {
        if z[n - 1] > 0 && z[n] > 0 {
            z[n] = 0;
        }
        if z.iter().sum::<i64>() == 0 {
            z[0] = 1;
        }
        BoxState::new(n, z).unwrap()
    })
}

fn arb_path(n: usize) -> impl Strategy<Value = Path> {
    prop::collection::vec(arb_box(n), 1..=5)
        .prop_map(move |boxes| Path::new(n, boxes).unwrap())
}

fn arb_rank() -> impl Strategy<Value = usize> {
    3usize..=5
}

proptest! {
    #[test]
    fn exchange_commutes_with_crystal_operators(
        (n, p) in arb_rank().prop_flat_map(|n| (Just(n), arb_path(n))),
        pos in 0usize..4,
        i in 0usize..=5,
    ) {
        prop_assume!(p.len() >= 2);
        let pos = pos % (p.len() - 1);
        let i = i % (n + 1);
        let pair = Path::new(n, p.boxes()[pos..pos + 2].to_vec()).unwrap();
        let swapped = r_swap(&pair, 0);
        prop_assert_eq!(path_eps_phi(&pair, i), path_eps_phi(&swapped, i));
        match (path_f(&pair, i), path_f(&swapped, i)) {
            (Some(a), Some(b)) => prop_assert_eq!(r_swap(&a, 0), b),
            (None, None) => {}
            (a, b) => prop_assert!(false, "f_{} defined on one side only: {:?} {:?}", i, a, b),
        }
        match (path_e(&pair, i), path_e(&swapped, i)) {
            (Some(a), Some(b)) => prop_assert_eq!(r_swap(&a, 0), b),
            (None, None) => {}
            (a, b) => prop_assert!(false, "e_{} defined on one side only: {:?} {:?}", i, a, b),
        }
    }

    #[test]
    fn exchange_preserves_weight_and_shape(
        p in arb_rank().prop_flat_map(arb_path),
        pos in 0usize..4,
    ) {
        prop_assume!(p.len() >= 2);
        let pos = pos % (p.len() - 1);
        let q = r_swap(&p, pos);
        prop_assert_eq!(p.weight(), q.weight());
        let mut shape = p.shape();
        let mut swapped = q.shape();
        shape.sort_unstable();
        swapped.sort_unstable();
        prop_assert_eq!(shape, swapped);
    }

    #[test]
    fn evolutions_commute(
        p in arb_rank().prop_flat_map(arb_path),
        l in 1i64..=5,
        m in 1i64..=5,
    ) {
        let lm = evolve(&evolve(&p, l).0, m).0;
        let ml = evolve(&evolve(&p, m).0, l).0;
        prop_assert_eq!(lm, ml);
    }

    #[test]
    fn oversized_carriers_reach_the_stable_step(
        p in arb_rank().prop_flat_map(arb_path),
    ) {
        let load: i64 = p.boxes().iter().map(|b| b.capacity()).sum();
        prop_assert_eq!(evolve(&p, load + 1).0, t_infinity(&p).unwrap());
    }

    #[test]
    fn mirrored_step_is_the_star_conjugate(
        p in arb_rank().prop_flat_map(arb_path),
        l in 1i64..=6,
    ) {
        let direct = star_evolve(&p, l).0;
        let conjugated = evolve(&p.star(), l).0.star();
        prop_assert_eq!(direct, conjugated);
    }

    #[test]
    fn step_conserves_the_occupancy(
        p in arb_rank().prop_flat_map(arb_path),
        l in 1i64..=6,
    ) {
        let (row, carrier) = evolve(&p, l);
        let count = |p: &Path| p.boxes().iter().map(BoxState::a_count).sum::<i64>();
        prop_assert_eq!(count(&p), count(&row) + carrier.a_count());
    }

    #[test]
    fn text_form_roundtrips(
        (n, p) in arb_rank().prop_flat_map(|n| (Just(n), arb_path(n))),
    ) {
        let text = format_path(&p);
        prop_assert_eq!(parse_path(n, &text).unwrap(), p);
    }
}

#[test]
fn fuzz_corpus_seeds_stay_parseable() {
    use dnca::rigged::parse_rc;
    use dnca::textio::{parse_box, parse_pair, parse_path, parse_trace};
    let corpus = format!("{}/../../fuzz/corpus", env!("CARGO_MANIFEST_DIR"));
    let mut seen = 0;
    for dir in std::fs::read_dir(&corpus).unwrap() {
        let dir = dir.unwrap();
        let kind = dir.file_name().into_string().unwrap();
        for seed in std::fs::read_dir(dir.path()).unwrap() {
            let raw = std::fs::read(seed.unwrap().path()).unwrap();
            // the rank-prefixed targets carry a selector byte up front
            let (n, text) = match raw.split_first() {
                Some((&sel, rest)) if kind != "parse_trace" && kind != "parse_pair" => {
                    (3 + sel as usize % 6, std::str::from_utf8(rest).unwrap())
                }
                _ => (0, std::str::from_utf8(&raw).unwrap()),
            };
            let ok = match kind.as_str() {
                "parse_box" => parse_box(n, text).is_ok(),
                "parse_path" => parse_path(n, text).is_ok(),
                "parse_rc" => parse_rc(n, text).is_ok(),
                "parse_trace" => parse_trace(text).is_ok(),
                "parse_pair" => parse_pair(text).is_ok(),
                other => panic!("unknown corpus dir {other:?}"),
            };
            assert!(ok, "stale seed under {kind}");
            seen += 1;
        }
    }
    assert!(seen >= 10, "expected the checked-in seeds, saw {seen}");
}

#[test]
fn inconsistent_increments_are_rejected() {
    use dnca::automaton::reconstruct;
    use dnca::EnergyKind;
    // counting functions can never increase faster for v1 than for v0
    let delta = |g| match g {
        EnergyKind::V(0) => Some(0),
        EnergyKind::V(_) => Some(5),
        EnergyKind::VStar(_) => Some(5),
        EnergyKind::WMinusV(_) => Some(0),
        _ => None,
    };
    assert!(reconstruct(4, 4, delta).is_err());
}
