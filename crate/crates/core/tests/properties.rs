use proptest::prelude::*;

use leaper::certify::{certify, check_reason, file_type_verdict, validate_certificate, Certificate, Verdict};
use leaper::connectivity::{oracle_connected, predict_connected};
use leaper::construction::{construct_thm4, construct_thm6};
use leaper::search::{search_hamiltonian, SearchOptions, SearchOutcome};
use leaper::tour::{verify_tour, Tour};
use leaper::tourio::{decode_grid, encode_grid, parse_grid};
use leaper::{build_graph, color_class, Board, LeaperSpec};

fn leaper(max: usize) -> impl Strategy<Value = (usize, usize)> {
    (1..=max).prop_flat_map(|s| (1..=s, Just(s)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adjacency_is_symmetric_and_bipartite((r, s) in leaper(6), m in 1usize..14, n in 1usize..14) {
        let spec = LeaperSpec::new(r, s).unwrap();
        let g = build_graph(spec, Board::new(m, n).unwrap());
        for v in 0..g.vertex_count() {
            for &w in g.neighbors(v) {
                prop_assert!(g.has_edge(w, v));
                if (r + s) % 2 == 1 {
                    prop_assert_ne!(color_class(g.cell(v)), color_class(g.cell(w)));
                }
            }
        }
    }

    #[test]
    fn prediction_matches_bfs((r, s) in leaper(8), m in 1usize..40, n in 1usize..40) {
        let spec = LeaperSpec::new(r, s).unwrap();
        let g = build_graph(spec, Board::new(m, n).unwrap());
        prop_assert_eq!(predict_connected(spec, m, n).connected, oracle_connected(&g));
    }

    #[test]
    fn certificates_validate_and_round_trip((r, s) in leaper(5), m in 1usize..16, n in 1usize..16) {
        let spec = LeaperSpec::new(r, s).unwrap();
        if let Some(cert) = certify(spec, m, n).unwrap() {
            let g = build_graph(spec, Board::new(m, n).unwrap());
            prop_assert!(validate_certificate(&g, &cert), "{}", cert.summary());
            prop_assert_eq!(Certificate::parse(&cert.to_text()).unwrap(), cert);
        }
    }

    #[test]
    fn file_type_reasons_rederive(r in 4usize..14, extra in 0usize..200) {
        let n = 2 * (r + 1) + extra;
        if let Verdict::Infeasible(reason) = file_type_verdict(r, n).unwrap() {
            prop_assert!(check_reason(r, n, &reason));
        }
    }
}

fn relabelled(tour: &Tour, shift: usize, reverse: bool) -> Tour {
    let mut order = tour.order().to_vec();
    let len = order.len();
    order.rotate_left(shift % len);
    if reverse {
        order.reverse();
    }
    Tour::new(tour.spec(), tour.board(), order, tour.closed())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn grid_round_trip(which in 0usize..6, shift in 0usize..10_000, reverse: bool, radix in prop::sample::select(vec![9u32, 10])) {
        let base = if which < 4 { construct_thm4(which + 2) } else { construct_thm6(which - 2) }.unwrap();
        let tour = relabelled(&base, shift, reverse);
        let text = encode_grid(&tour, radix).unwrap();
        prop_assert_eq!(&parse_grid(&text).unwrap(), &tour);
        prop_assert_eq!(decode_grid(&text).unwrap(), tour.canonical());
    }

    #[test]
    fn search_results_verify_and_ignore_workers(m in 3usize..7, n in 3usize..9, workers in 1usize..5) {
        let g = build_graph(LeaperSpec::knight(), Board::new(m, n).unwrap());
        let one = search_hamiltonian(&g, &SearchOptions::circuit()).unwrap();
        let many = search_hamiltonian(&g, &SearchOptions::circuit().with_workers(workers)).unwrap();
        prop_assert_eq!(&one, &many);
        if let SearchOutcome::Found(t) = &one.outcome {
            prop_assert_eq!(verify_tour(&g, t), Ok(()));
        }
    }
}
