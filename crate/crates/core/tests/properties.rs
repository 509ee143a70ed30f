mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::{random_code, random_codeword, random_poly};
use qtspec_core::bounds::{
    bch_bound, ht_bound, roos_bound, shift_bound, BoundWitness, DefiningSet, HtOptions, RoosCaps, ShiftCaps,
    StridePolicy,
};
use qtspec_core::codefile::{format_code, parse_code};
use qtspec_core::oracle::{constacyclic_code, qt_min_distance, OracleConfig};
use qtspec_core::polymat::reduce_generating_set;
use qtspec_core::qt::{phi, phi_inv};
use qtspec_core::{Distance, Field, Poly, RootSystem};

fn closed_set(roots: &RootSystem, picks: u64) -> DefiningSet {
    let mut mask = vec![false; roots.m()];
    for (i, orbit) in roots.frobenius().orbits().into_iter().enumerate() {
        if picks >> (i % 64) & 1 == 1 {
            for k in orbit {
                mask[k] = true;
            }
        }
    }
    DefiningSet::from_mask(mask)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(p in prop::sample::select(vec![(2u64, 4usize), (3, 3), (5, 2), (7, 1)]), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = Field::new(p.0, p.1).unwrap();
        let q = f.order();
        let (a, b, c) = (f.from_index(a % q), f.from_index(b % q), f.from_index(c % q));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a)), f.one());
            prop_assert_eq!(f.pow(a, q - 1), f.one());
        }
        prop_assert_eq!(f.parse(&f.format(a)).unwrap(), a);
    }

    #[test]
    fn polynomial_division(seed in any::<u64>(), la in 0usize..12, lb in 1usize..8) {
        let f = Field::new(3, 1).unwrap();
        let mut rng = StdRng::seed_from_u64(seed);
        let a = random_poly(&f, &mut rng, la);
        let b = random_poly(&f, &mut rng, lb);
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a.clone());
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        let g = a.gcd(&b);
        prop_assert!(g.divides(&a).unwrap() && g.divides(&b).unwrap());
    }

    #[test]
    fn phi_round_trip(seed in any::<u64>(), m in 1usize..20) {
        let f = Field::new(2, 3).unwrap();
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_poly(&f, &mut rng, m);
        let v = phi_inv(&p, m).unwrap();
        prop_assert_eq!(v.len(), m);
        prop_assert_eq!(phi(&f, &v), p);
    }

    #[test]
    fn reduced_form_is_canonical(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let code = random_code(&mut rng);
        let f = code.field().clone();
        let (m, ell) = (code.m(), code.ell());
        let rows: Vec<Vec<Poly>> = (0..ell).map(|r| code.gmatrix().row(r).to_vec()).collect();
        let mut mixed = rows.clone();
        mixed.reverse();
        let t = random_poly(&f, &mut rng, m);
        let combo: Vec<Poly> = (0..ell).map(|j| rows.iter().fold(Poly::zero(&f), |acc, r| &acc + &(&t * &r[j]))).collect();
        mixed.push(combo);
        let again = reduce_generating_set(&f, &mixed, ell, m, code.lambda()).unwrap();
        prop_assert_eq!(&again, code.gmatrix());
    }

    #[test]
    fn codewords_are_closed_under_constashift(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let code = random_code(&mut rng);
        let word = random_codeword(&code, &mut rng);
        prop_assert!(code.contains(&word).unwrap());
        let shifted = word.constashift(code.field(), code.lambda());
        prop_assert!(code.contains(&shifted).unwrap());
    }

    #[test]
    fn code_files_round_trip(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let code = random_code(&mut rng);
        let again = parse_code(&format_code(&code)).unwrap();
        prop_assert_eq!(again.gmatrix(), code.gmatrix());
        prop_assert_eq!(again.dimension(), code.dimension());
    }

    #[test]
    fn closure_is_idempotent(m in prop::sample::select(vec![7usize, 9, 15, 17, 21]), bits in any::<u64>()) {
        let f = Field::new(2, 1).unwrap();
        let roots = RootSystem::new(&f, m, f.one()).unwrap();
        let frob = roots.frobenius();
        let l = DefiningSet::from_bits(m, bits & ((1u64 << m) - 1));
        let c = l.closure(frob);
        prop_assert!(l.is_subset(&c));
        prop_assert!(c.is_closed(frob));
        prop_assert_eq!(c.closure(frob), c.clone());
        let covered: usize = frob.orbits().iter().map(|o| o.len()).sum();
        prop_assert_eq!(covered, m);
    }

    #[test]
    fn defining_set_bounds_are_ordered_and_sound(
        (q, m) in prop::sample::select(vec![(2u64, 7usize), (2, 9), (2, 15), (2, 17), (2, 21), (3, 8), (3, 10), (3, 13), (3, 16)]),
        picks in any::<u64>(),
    ) {
        let f = Field::new(q, 1).unwrap();
        let roots = RootSystem::new(&f, m, f.one()).unwrap();
        let l = closed_set(&roots, picks);
        prop_assume!(!l.is_empty() && !l.is_full());
        let bch = bch_bound(&l, StridePolicy::Unit).unwrap();
        let bch_c = bch_bound(&l, StridePolicy::Coprime).unwrap();
        let ht = ht_bound(&l, HtOptions::default()).unwrap();
        let roos = roos_bound(&l, RoosCaps::default()).unwrap();
        let shift = shift_bound(&l, roots.frobenius(), ShiftCaps::default()).unwrap();
        prop_assert!(bch.value <= bch_c.value);
        prop_assert!(bch.value <= ht.value);
        prop_assert!(bch_c.value <= roos.value);
        prop_assert!(bch.value <= shift.value);
        let d = Distance::Finite(qt_min_distance(&constacyclic_code(&roots, &l).unwrap(), &OracleConfig::default()).unwrap());
        for w in [&bch, &bch_c, &ht, &roos, &shift] {
            prop_assert!(w.value <= d, "{:?} exceeds {}", w, d);
            let json = serde_json::to_string(w).unwrap();
            let back: BoundWitness = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(back.replay(&l, Some(roots.frobenius())).unwrap(), w.value);
        }
    }

    #[test]
    fn distance_order(a in 0usize..1000, b in 0usize..1000) {
        let (x, y) = (Distance::Finite(a), Distance::Finite(b));
        prop_assert!(x < Distance::Infinite);
        prop_assert_eq!(x.min(y), Distance::Finite(a.min(b)));
        prop_assert_eq!(x.min(Distance::Infinite), x);
        let back: Distance = serde_json::from_str(&serde_json::to_string(&x).unwrap()).unwrap();
        prop_assert_eq!(back, x);
    }
}
