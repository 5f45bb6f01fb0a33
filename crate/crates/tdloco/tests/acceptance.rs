//! Acceptance suite: every release-gating check, one test per criterion,
//! each printing a PASS line when it holds. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use num_bigint::BigInt;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tdloco::capacity::{
    build_constraint_adjacency, capacities, log2_bigint, q4_transition_matrix,
    q8_transition_matrix, DEFAULT_TOL,
};
use tdloco::codec::{codeword_of, decode_codeword, encode_message, index_of};
use tdloco::enumeration::{
    cardinalities, cardinality, inner_sum, k_eff, message_length, rates_4dp,
};
use tdloco::grid::{
    map_symbols_to_columns, read_group, scan_sis, write_grid, Frame, Grid,
};
use tdloco::oracle;
use tdloco::stream::{assemble, longest_run};
use tdloco::symbols::{parse_symbols, Column, Q4_PATTERN, Q8_PATTERNS};
use tdloco::{CodeParams, Codeword, Gf4Symbol};

fn params(m: usize) -> CodeParams {
    CodeParams::new(m).unwrap()
}

fn random_bits(rng: &mut StdRng, len: usize) -> Vec<bool> {
    (0..len).map(|_| rng.random()).collect()
}

/// A single-group grid built from codewords and per-symbol selections,
/// entering the write path below the message encoder so that *every*
/// codeword pair is reachable, not only the message-indexed ones.
fn grid_from_codewords(words: &[Codeword], selections: &[bool]) -> Grid {
    let stream = assemble(words).unwrap();
    assert!(!tdloco::symbols::contains_forbidden(stream.symbols()));
    let columns = map_symbols_to_columns(stream.symbols(), selections).unwrap();
    Grid::new(vec![
        columns.iter().map(|c| c.top).collect(),
        columns.iter().map(|c| c.middle).collect(),
        columns.iter().map(|c| c.bottom).collect(),
    ])
    .unwrap()
}

#[test]
fn criterion_1_cardinalities() {
    let expected = [16u32, 63, 248, 977, 3849];
    for (m, want) in (2..=6).zip(expected) {
        assert_eq!(cardinality(m), BigInt::from(want), "N({m})");
    }
    for m in 1..=10 {
        let count = oracle::enumerate(m).unwrap().len();
        assert_eq!(
            BigInt::from(count),
            cardinality(m),
            "brute-force count at m = {m}"
        );
    }
    println!("criterion 1 (exact cardinalities, brute-force counts to m = 10): PASS");
}

#[test]
fn criterion_2_index_rule() {
    let p6 = params(6);
    let word: Codeword = "1 a2 1 a2 a 0".parse().unwrap();
    assert_eq!(index_of(&word, &p6).unwrap(), BigInt::from(1824));

    // The sorted brute-force position is the rank; the closed form must
    // agree on every codeword.
    for m in 2..=8 {
        let p = params(m);
        for (position, word) in oracle::enumerate(m).unwrap().iter().enumerate() {
            assert_eq!(
                index_of(word, &p).unwrap(),
                BigInt::from(position),
                "m = {m}, word {word}"
            );
        }
    }
    // Exercise the rank entry point itself on the pinned words.
    assert_eq!(oracle::rank(&word).unwrap(), 1824);
    assert_eq!(oracle::rank(&"a2 0 1".parse().unwrap()).unwrap(), 49);
    println!("criterion 2 (index rule vs exhaustive rank, m <= 8): PASS");
}

#[test]
fn criterion_3_codec_bijection() {
    for m in 2..=8 {
        let p = params(m);
        let all = oracle::enumerate(m).unwrap();
        let clocked = &all[1..all.len() - 1];
        let mut g = BigInt::one();
        for expected in clocked {
            let word = codeword_of(&g, &p).unwrap();
            assert_eq!(&word, expected, "m = {m}, g = {g}");
            assert_eq!(index_of(&word, &p).unwrap(), g, "m = {m}");
            g += 1;
        }
        assert_eq!(g, p.clocked_cardinality() + 1, "range covered at m = {m}");
    }

    let mut rng = StdRng::seed_from_u64(0x7d1);
    for m in [24, 33, 39, 66, 88, 265] {
        let p = params(m);
        for _ in 0..10_000 {
            let message = random_bits(&mut rng, p.message_len() as usize);
            let word = encode_message(&message, &p).unwrap();
            assert!(word.is_clocked());
            assert_eq!(decode_codeword(&word, &p).unwrap(), message, "m = {m}");
        }
        // Range boundaries, beyond what binary messages reach.
        for g in [BigInt::one(), p.clocked_cardinality()] {
            let word = codeword_of(&g, &p).unwrap();
            assert_eq!(index_of(&word, &p).unwrap(), g, "m = {m}");
        }
    }
    println!(
        "criterion 3 (bijection exhaustive to m = 8; 10^4 roundtrips at \
         m in {{24, 33, 39, 66, 88, 265}}): PASS"
    );
}

#[test]
fn criterion_4_message_lengths_and_rates() {
    let table = [
        (24, 47, "2.8800", "0.9600"),
        (33, 65, "2.9118", "0.9706"),
        (39, 77, "2.9250", "0.9750"),
        (66, 130, "2.9403", "0.9801"),
        (88, 174, "2.9550", "0.9850"),
        (265, 524, "2.9700", "0.9900"),
    ];
    for (m, s_c, rate, normalized) in table {
        assert_eq!(message_length(m).unwrap(), s_c, "s_c at m = {m}");
        let (r, n) = rates_4dp(m).unwrap();
        assert_eq!(r, rate, "rate at m = {m}");
        assert_eq!(n, normalized, "normalized rate at m = {m}");
    }
    println!("criterion 4 (message lengths and 4-decimal rate table): PASS");
}

#[test]
fn criterion_5_capacities() {
    let (q8, q4) = capacities().unwrap();
    assert!((q8.capacity_bits - 2.9944).abs() < 1e-3, "{}", q8.capacity_bits);
    assert!((q8.normalized - 0.9981).abs() < 1e-3, "{}", q8.normalized);
    assert!((q4.capacity_bits - 1.9780).abs() < 1e-3, "{}", q4.capacity_bits);
    assert!((q4.normalized - 0.9927).abs() < 1e-3, "{}", q4.normalized);

    let q8_levels: Vec<[u8; 3]> = Q8_PATTERNS
        .iter()
        .map(|p| [p[0].level(), p[1].level(), p[2].level()])
        .collect();
    let q4_levels = [[
        Q4_PATTERN[0].level(),
        Q4_PATTERN[1].level(),
        Q4_PATTERN[2].level(),
    ]];

    let db16 = build_constraint_adjacency(4, &q4_levels).unwrap();
    assert_eq!(db16.order(), 16);
    let root16 = db16.dominant_eigenvalue(DEFAULT_TOL).unwrap();
    let lumped4 = q4_transition_matrix()
        .dominant_eigenvalue(DEFAULT_TOL)
        .unwrap();
    assert!(((root16 - lumped4) / lumped4).abs() < 1e-6);

    let db64 = build_constraint_adjacency(8, &q8_levels).unwrap();
    assert_eq!(db64.order(), 64);
    let root64 = db64.dominant_eigenvalue(DEFAULT_TOL).unwrap();
    let lumped8 = q8_transition_matrix()
        .dominant_eigenvalue(DEFAULT_TOL)
        .unwrap();
    assert!(((root64 - lumped8) / lumped8).abs() < 1e-6);

    println!("criterion 5 (capacities and state-graph cross-check): PASS");
}

#[test]
fn criterion_6_capacity_achieving() {
    let n_1000 = cardinality(1000);
    let per_symbol = log2_bigint(&n_1000) / 1000.0;
    assert!(
        (per_symbol - 1.9780).abs() < 0.01,
        "log2 N(1000)/1000 = {per_symbol}"
    );
    println!("criterion 6 (asymptotic rate at m = 1000): PASS");
}

#[test]
fn criterion_7_bridge_identity() {
    let card = cardinalities(100);
    for i in 2..=100 {
        assert_eq!(&card[i] + inner_sum(i), 3 * &card[i - 1], "i = {i}");
    }
    println!("criterion 7 (N(i) + inner_sum(i) = 3 N(i-1), i <= 100): PASS");
}

#[test]
fn criterion_8_system_soundness() {
    // Exhaustive codeword pairs at m <= 4. Selection patterns cycle through
    // every combined value as the pairs enumerate; additionally every single
    // codeword is written under every one of the 2^(m+1) selection patterns.
    for m in 2..=4 {
        let clocked: Vec<Codeword> = oracle::enumerate(m)
            .unwrap()
            .into_iter()
            .filter(Codeword::is_clocked)
            .collect();
        let frame = m + 1;
        let mut combined = 0usize;
        for a in &clocked {
            for b in &clocked {
                let selections: Vec<bool> =
                    (0..2 * frame).map(|k| combined >> k & 1 == 1).collect();
                combined = (combined + 1) % (1 << (2 * frame));
                let grid = grid_from_codewords(&[a.clone(), b.clone()], &selections);
                assert!(
                    scan_sis(&grid).is_empty(),
                    "m = {m}, pair {a} | {b}, selections {selections:?}"
                );
            }
        }
        for word in &clocked {
            for pattern in 0..1usize << frame {
                let selections: Vec<bool> =
                    (0..frame).map(|k| pattern >> k & 1 == 1).collect();
                let grid = grid_from_codewords(std::slice::from_ref(word), &selections);
                assert!(scan_sis(&grid).is_empty(), "m = {m}, word {word}");
            }
        }
    }

    // Randomized frames through the full write path.
    let mut rng = StdRng::seed_from_u64(0x51f);
    for m in [5, 6, 7, 8, 24] {
        let p = params(m);
        let frames_per_grid = 10;
        for _ in 0..10_000 / frames_per_grid {
            let frames: Vec<Frame> = (0..frames_per_grid)
                .map(|_| Frame {
                    message: random_bits(&mut rng, p.message_len() as usize),
                    selections: random_bits(&mut rng, p.frame_len()),
                })
                .collect();
            let grid = write_grid(&[frames], 3, &p).unwrap();
            assert!(scan_sis(&grid).is_empty(), "m = {m}");
            let columns: Vec<Column> = (0..grid.width())
                .map(|j| Column::new(grid.bit(0, j), grid.bit(1, j), grid.bit(2, j)))
                .collect();
            assert!(longest_run(&columns) <= k_eff(m), "m = {m}");
        }
    }

    // The identical-column run bound is tight: a codeword ending in 0^(m-1),
    // a 0 bridge, and a codeword starting with 0^(m-1), all selections 0.
    for m in 2..=6 {
        let mut a = vec![Gf4Symbol::One];
        a.extend(vec![Gf4Symbol::Zero; m - 1]);
        let mut b = vec![Gf4Symbol::Zero; m - 1];
        b.push(Gf4Symbol::One);
        let words = [Codeword::new(a).unwrap(), Codeword::new(b).unwrap()];
        let selections = vec![false; 2 * (m + 1)];
        let grid = grid_from_codewords(&words, &selections);
        let columns: Vec<Column> = (0..grid.width())
            .map(|j| Column::new(grid.bit(0, j), grid.bit(1, j), grid.bit(2, j)))
            .collect();
        assert_eq!(longest_run(&columns), k_eff(m), "witness at m = {m}");
        assert!(scan_sis(&grid).is_empty());
    }

    println!(
        "criterion 8 (no SIS violations: exhaustive pairs/selections m <= 4, \
         10^4 random frames m in {{5..8, 24}}; column-run bound tight): PASS"
    );
}

#[test]
fn criterion_9_grid_fixture() {
    let p = params(5);
    let symbols = parse_symbols("1 a2 a a2 0").unwrap();
    let selections = [true, false, true, true, false];
    let columns = map_symbols_to_columns(&symbols, &selections).unwrap();
    let expected = [
        Column::new(true, true, false),
        Column::new(false, false, false),
        Column::new(true, false, false),
        Column::new(true, true, true),
        Column::new(false, true, false),
    ];
    assert_eq!(columns, expected);

    // With its trailing 0 bridge (selection 0) the codeword is one whole
    // frame; reading recovers the message that re-encodes to it.
    let word = Codeword::new(symbols).unwrap();
    let stream = assemble(std::slice::from_ref(&word)).unwrap();
    let mut frame_selections = selections.to_vec();
    frame_selections.push(false);
    let frame_columns =
        map_symbols_to_columns(stream.symbols(), &frame_selections).unwrap();
    assert_eq!(&frame_columns[..5], expected);

    let frames = read_group(&frame_columns, &p).unwrap();
    assert_eq!(frames.len(), 1);
    assert_eq!(frames[0].selections, frame_selections);
    assert_eq!(encode_message(&frames[0].message, &p).unwrap(), word);
    println!("criterion 9 (grid fixture bit-exact, inverted by read_group): PASS");
}
