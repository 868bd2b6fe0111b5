use proptest::prelude::*;

use coxhecke::{CoxeterSystem, Element, EngineHint, EngineKind, Gen, Laurent, Side};

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-6i64..=6, -20i64..=20), 0..6).prop_map(|t| t.into_iter().fold(Laurent::zero(), |acc, (e, c)| acc + Laurent::monomial(c, e)))
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &Laurent::one(), a);
    }

    #[test]
    fn bar_is_a_ring_involution(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn text_and_json_round_trip(a in laurent()) {
        prop_assert_eq!(a.to_text().parse::<Laurent>().unwrap(), a.clone());
        prop_assert_eq!(Laurent::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn evaluation_at_one_is_a_homomorphism(a in laurent(), b in laurent()) {
        prop_assert_eq!((&a * &b).eval_unit(1), a.eval_unit(1) * b.eval_unit(1));
    }
}

fn tits_copy(sys: &CoxeterSystem) -> CoxeterSystem {
    CoxeterSystem::new(sys.matrix().clone(), sys.weights().to_vec(), EngineHint::Force(EngineKind::Tits)).unwrap()
}

const PRESETS: &[&str] = &["a3", "b2:1,2", "g2:2,1", "i2m:5,1,1", "i2inf:1,2", "affA:2", "affA:3", "affC:2", "bn:3"];

fn words() -> impl Strategy<Value = (usize, Vec<u8>, Vec<u8>)> {
    (0..PRESETS.len(), prop::collection::vec(0u8..8, 0..14), prop::collection::vec(0u8..8, 0..14))
}

fn restrict(w: &[u8], rank: usize) -> Vec<Gen> {
    w.iter().map(|&g| g % rank as u8).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn engines_agree_with_the_generic_backend((i, u, v) in words()) {
        let sys = CoxeterSystem::preset(PRESETS[i]).unwrap();
        let gen = tits_copy(&sys);
        let (u, v) = (restrict(&u, sys.rank()), restrict(&v, sys.rank()));
        let x = sys.element_from_word(&u).unwrap();
        let y = sys.element_from_word(&v).unwrap();
        prop_assert_eq!(&gen.element_from_word(&u).unwrap(), &x);
        prop_assert_eq!(sys.mul(&x, &y), gen.mul(&x, &y));
        for side in [Side::Left, Side::Right] {
            prop_assert_eq!(sys.descents(&x, side), gen.descents(&x, side));
        }
        prop_assert_eq!(sys.weight(&x), gen.weight(&x));
    }

    #[test]
    fn group_laws((i, u, v) in words()) {
        let sys = CoxeterSystem::preset(PRESETS[i]).unwrap();
        let (u, v) = (restrict(&u, sys.rank()), restrict(&v, sys.rank()));
        let x = sys.element_from_word(&u).unwrap();
        let y = sys.element_from_word(&v).unwrap();
        prop_assert!(x.length() <= u.len());
        prop_assert_eq!(x.length() % 2, u.len() % 2);
        prop_assert!(sys.mul(&x, &sys.inverse(&x)).is_identity());
        prop_assert_eq!(sys.length(&sys.inverse(&x)), x.length());
        let xy = sys.mul(&x, &y);
        prop_assert_eq!(sys.inverse(&xy), sys.mul(&sys.inverse(&y), &sys.inverse(&x)));
        for s in sys.generators() {
            prop_assert_eq!(sys.is_descent(&x, s, Side::Right), sys.rmul(&x, s).length() < x.length());
            prop_assert_eq!(sys.is_descent(&x, s, Side::Left), sys.lmul(s, &x).length() < x.length());
        }
    }

    #[test]
    fn bruhat_order_and_subwords((i, u, mask) in (0..PRESETS.len(), prop::collection::vec(0u8..8, 0..10), any::<u16>())) {
        let sys = CoxeterSystem::preset(PRESETS[i]).unwrap();
        let u = restrict(&u, sys.rank());
        let w = sys.element_from_word(&u).unwrap();
        let sub: Vec<Gen> = w.word().iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &g)| g).collect();
        let y = sys.element_from_word(&sub).unwrap();
        prop_assert!(sys.bruhat_leq(&y, &w));
        prop_assert!(sys.bruhat_leq(&Element::identity(), &w));
        if y != w {
            prop_assert!(!sys.bruhat_leq(&w, &y));
        }
    }
}

#[test]
fn finite_group_orders() {
    for (p, n) in [("a3", 24), ("b2:1,2", 8), ("g2:2,1", 12), ("i2m:7,1,1", 14), ("bn:3", 48), ("an:4", 120)] {
        let sys = CoxeterSystem::preset(p).unwrap();
        let all = sys.all_elements().unwrap();
        assert_eq!(all.len(), n, "{p}");
        let gens: Vec<Gen> = sys.generators().collect();
        let w0 = sys.longest_element(&gens).unwrap();
        assert_eq!(all.iter().map(|w| w.length()).max(), Some(w0.length()));
    }
}

#[test]
fn affine_growth_series() {
    // Bott's formula: Π (1 + t + … + t^e) / (1 - t^e) over the exponents e
    fn series(exps: &[usize], n: usize) -> Vec<i64> {
        let mut c = vec![0i64; n + 1];
        c[0] = 1;
        for &e in exps {
            for k in (0..=n).rev() {
                c[k] = (0..=e.min(k)).map(|j| c[k - j]).sum();
            }
            for k in e..=n {
                c[k] += c[k - e];
            }
        }
        c
    }
    for (p, exps) in [("affA:2", vec![1, 2]), ("affA:3", vec![1, 2, 3]), ("affC:2", vec![1, 3])] {
        let sys = CoxeterSystem::preset(p).unwrap();
        let mut counts = vec![0i64; 8];
        for w in sys.enumerate(7) {
            counts[w.length()] += 1;
        }
        assert_eq!(counts, series(&exps, 7), "{p}");
    }
}
