use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wetpaper::codes::{rs_parity_check, GolayVariant};
use wetpaper::wpc::{min_r, solve_randomized};
use wetpaper::zzw::{column_syndrome, pack_symbols, parity, ColumnBlock, ZzwParams, ZzwScheme};
use wetpaper::{Code, CoverObject, Error, Field};

fn random_columns(rng: &mut ChaCha8Rng, params: &ZzwParams, max_wet: usize) -> Vec<ColumnBlock> {
    (0..params.n)
        .map(|_| {
            let bits = (0..params.column_len).map(|_| rng.gen_range(0..2u8)).collect();
            let count = rng.gen_range(0..=max_wet);
            ColumnBlock::new(bits, sample(rng, params.column_len, count).into_vec()).unwrap()
        })
        .collect()
}

// All wet sets for ℓ ≤ 2 and ℓ ≥ 13, 200 sampled sets otherwise; one cover
// per syndrome class with random wet values; every message.
#[test]
fn hamming_2_4_never_fails() {
    let code = Code::hamming(Field::gf2(), 4).unwrap();
    let n = code.n();
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for wet_count in 0..=n {
        let r = min_r(&code, wet_count).unwrap();
        let msg_len = 4 - r;
        let sets: Vec<Vec<usize>> = if wet_count <= 2 || wet_count >= n - 2 {
            (0u32..1 << n)
                .filter(|m| m.count_ones() as usize == wet_count)
                .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
                .collect()
        } else {
            (0..200).map(|_| sample(&mut rng, n, wet_count).into_vec()).collect()
        };
        for wet in &sets {
            for class in 0u32..16 {
                // weight-≤1 cover in each class, with random wet values
                let mut x = vec![0u32; n];
                if class != 0 {
                    x[class as usize - 1] = 1;
                }
                for &i in wet {
                    x[i] = rng.gen_range(0..2);
                }
                let cover = CoverObject::new(x.clone(), wet.clone()).unwrap();
                for m_bits in 0u32..1 << msg_len {
                    let m: Vec<u32> = (0..msg_len).map(|i| m_bits >> i & 1).collect();
                    let sol = solve_randomized(&code, &cover, &m, r).unwrap();
                    assert_eq!(&code.syndrome(&sol.y).unwrap().symbols()[..msg_len], &m[..]);
                    assert!(wet.iter().all(|&i| sol.y[i] == x[i]));
                    assert!(sol.changes <= 1);
                }
            }
        }
    }
}

#[test]
fn golay_sampled_sweeps() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for variant in [GolayVariant::Binary, GolayVariant::Ternary] {
        let code = Code::golay(variant);
        let (n, q) = (code.n(), code.field().q());
        let rho = code.spec().rho.unwrap();
        for _ in 0..400 {
            let wet_count = rng.gen_range(0..=n);
            let r = min_r(&code, wet_count).unwrap();
            let x: Vec<u32> = (0..n).map(|_| rng.gen_range(0..q)).collect();
            let wet = sample(&mut rng, n, wet_count).into_vec();
            let m: Vec<u32> = (0..code.redundancy() - r).map(|_| rng.gen_range(0..q)).collect();
            let cover = CoverObject::new(x.clone(), wet.clone()).unwrap();
            let sol = solve_randomized(&code, &cover, &m, r).unwrap();
            let s = code.syndrome(&sol.y).unwrap().into_symbols();
            assert_eq!(&s[..m.len()], &m[..]);
            assert_eq!(&s[m.len()..], &sol.random_tail[..]);
            assert!(wet.iter().all(|&i| sol.y[i] == x[i]));
            assert!(sol.changes <= rho);
        }
    }
}

// Flipping two bits of one column keeps every parity, so (r, f) survive,
// and moves that column's symbol; exactly the payload symbols whose
// Vandermonde row is nonzero at that column change.
#[test]
fn zzw_two_bit_tamper_hits_expected_symbols() {
    let params = ZzwParams::new(2, 2).unwrap();
    let scheme = ZzwScheme::new(params).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..60 {
        let columns = random_columns(&mut rng, &params, 3);
        let plan = scheme.plan(&columns).unwrap();
        let cap = plan.capacity_bits(&params);
        let payload: Vec<u8> = (0..cap).map(|_| rng.gen_range(0..2u8)).collect();
        let stego = scheme.embed(&columns, &payload, &plan).unwrap();

        let col = rng.gen_range(0..params.n);
        let (a, b) = loop {
            let a = rng.gen_range(1..=params.column_len);
            let b = rng.gen_range(1..=params.column_len);
            if a != b && (a ^ b) >> plan.r != 0 {
                break (a, b);
            }
        };
        let mut tampered = stego.clone();
        tampered[col][a - 1] ^= 1;
        tampered[col][b - 1] ^= 1;
        let ex = scheme.extract(&tampered).unwrap();
        assert_eq!((ex.r, ex.f), (plan.r, plan.f));

        let width = params.p - plan.r;
        let before = pack_symbols(&payload, width);
        let after = pack_symbols(&ex.payload, width);
        let field = Field::gf2m(width as u32);
        let hq = rs_parity_check(&field, params.n, params.n - plan.f);
        for i in 0..before.len() {
            assert_eq!(before[i] != after[i], hq.get(i, col) != 0, "symbol {i}, column {col}");
        }
    }
}

#[test]
fn zzw_layers_are_independent() {
    let params = ZzwParams::new(3, 2).unwrap();
    let scheme = ZzwScheme::new(params).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let columns = random_columns(&mut rng, &params, 6);
        let plan = scheme.plan(&columns).unwrap();
        let cap = plan.capacity_bits(&params);
        let payload: Vec<u8> = (0..cap).map(|_| rng.gen_range(0..2u8)).collect();
        let stego = scheme.embed(&columns, &payload, &plan).unwrap();
        let ex = scheme.extract(&stego).unwrap();
        assert_eq!(ex.payload, payload);
        assert_eq!(scheme.extract_payload(&stego, plan.r, plan.f).unwrap(), payload);
        // parity flips on failed columns leave their Hq symbol alone
        for &i in &plan.failed {
            assert_eq!(
                column_syndrome(&stego[i]) >> plan.r,
                column_syndrome(columns[i].bits()) >> plan.r
            );
        }
        for (c, s) in columns.iter().zip(&stego) {
            assert!(c.wet().iter().all(|&j| c.bits()[j] == s[j]));
        }
    }
}

// A fully wet column is always failed and counts toward f, but its parity
// cannot move, so it is a wet position of the parity layer.
#[test]
fn fully_wet_failed_columns() {
    let params = ZzwParams::new(2, 2).unwrap();
    let scheme = ZzwScheme::new(params).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut successes = 0;
    for _ in 0..40 {
        let mut columns = random_columns(&mut rng, &params, 3);
        let full = rng.gen_range(0..params.n);
        columns[full] = ColumnBlock::new(columns[full].bits().to_vec(), (0..params.column_len).collect()).unwrap();
        let plan = scheme.plan(&columns).unwrap();
        assert!(plan.failed.contains(&full));
        assert_eq!(plan.f, plan.failed.len());
        let usable: Vec<usize> = plan.failed.iter().copied().filter(|&i| i != full).collect();
        // parity-layer columns are the 1-based indices in binary
        let spans = usable.len() > 3 || (usable.len() == 3 && usable.iter().fold(0, |acc, &i| acc ^ (i + 1)) != 0);
        let payload: Vec<u8> = (0..plan.capacity_bits(&params)).map(|_| rng.gen_range(0..2u8)).collect();
        match scheme.embed(&columns, &payload, &plan) {
            Ok(stego) => {
                assert_eq!(stego[full], columns[full].bits());
                assert_eq!(parity(&stego[full]), parity(columns[full].bits()));
                let ex = scheme.extract(&stego).unwrap();
                assert_eq!((ex.r, ex.f, ex.payload), (plan.r, plan.f, payload));
                successes += 1;
            }
            Err(Error::RankDeficient { .. }) => assert!(!spans),
            Err(e) => panic!("{e}"),
        }
    }
    assert!(successes > 0);
}
