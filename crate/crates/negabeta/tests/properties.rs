use std::cmp::Ordering;

use negabeta::counting::enumerate_language;
use negabeta::lyndon::{admissible, classify_lyndon, entropy_sign, is_lyndon, lyn_bounds, LyndonClass};
use negabeta::numeric::{
    base_equation_residual, beta_equation, compute_beta, cylinder_image, expand, f_beta_exact, BetaCertificate,
    BetaNumber, PeriodStatus,
};
use negabeta::order::{alt_compare, alt_compare_vs_phi_limit};
use negabeta::word::{parse_word, Letter, Word};
use proptest::prelude::*;

fn w(s: &str) -> Word {
    parse_word(s).unwrap()
}

fn positive_lyndon() -> impl Strategy<Value = Word> {
    (prop::collection::vec(0u16..3, 0..3), prop::collection::vec(0u16..3, 1..4))
        .prop_map(|(pre, per)| Word::eventually_periodic(pre, per).unwrap())
        .prop_filter("positive-entropy Lyndon word", |d| {
            d.first() > 0 && is_lyndon(d) && entropy_sign(d).map(|s| s.is_positive()).unwrap_or(false)
        })
}

fn same_base(a: &BetaCertificate, b: &BetaCertificate) -> bool {
    a.beta().intersects(b.beta())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn certificates_are_sound(d in positive_lyndon()) {
        let c = compute_beta(&d).unwrap();
        let g = beta_equation(&d);
        let (a, b) = (g.sign_at(c.beta().lo()), g.sign_at(c.beta().hi()));
        prop_assert!(a == Ordering::Equal || b == Ordering::Equal || a != b);
        prop_assert!(c.beta().width() <= num_rational::BigRational::new(1.into(), num_bigint::BigInt::from(1u8) << 64));
        let d1 = i64::from(d.first());
        prop_assert!(c.beta().lo() >= &num_rational::BigRational::from_integer(d1.into())
            || d1 == 1);
        prop_assert!(c.beta().hi() <= &num_rational::BigRational::from_integer((d1 + 1).into()));
        prop_assert!(base_equation_residual(&d, &c).unwrap().contains_zero());
    }

    #[test]
    fn expansions_of_l_beta_are_admissible(d in positive_lyndon()) {
        let c = compute_beta(&d).unwrap();
        let e = expand(&BetaNumber::l_beta(), &c, 48).unwrap();
        if let PeriodStatus::Certified { word } = &e.period {
            let report = admissible(word).unwrap();
            prop_assert!(report.cond_a.holds, "{} fails the shift condition", word);
            prop_assert!(report.admissible(), "{} from {} not admissible", word, d);
            prop_assert_eq!(c.sign_of(&(&f_beta_exact(word) - &BetaNumber::l_beta())).unwrap(), Ordering::Equal);
            if report.admissible() && admissible(&d).unwrap().admissible() {
                prop_assert_eq!(word, &d);
            }
        }
    }
}

#[test]
fn loop_closes_at_test_bases() {
    for word in ["(2)", "(10)", "1(0)", "100(11)"] {
        let c = compute_beta(&w(word)).unwrap();
        let e = expand(&BetaNumber::l_beta(), &c, 40).unwrap();
        let d = e.period.word().expect("periodic expansion").clone();
        let report = admissible(&d).unwrap();
        assert!(report.admissible(), "{d}");
        let back = expand(&BetaNumber::l_beta(), report.beta.as_ref().unwrap(), 40).unwrap();
        assert_eq!(back.period.word(), Some(&d));
        assert!(same_base(&c, report.beta.as_ref().unwrap()));
    }
}

/// Purely periodic weak Lyndon words with period at most 4 over {0, 1, 2}.
fn weak_words() -> Vec<Word> {
    let mut out = Vec::new();
    for k in 1..=4u32 {
        for code in 0..3usize.pow(k) {
            let per: Vec<Letter> = (0..k).map(|i| (code / 3usize.pow(i) % 3) as Letter).collect();
            if *per.last().unwrap() == 0 || per[0] == 0 {
                continue;
            }
            let a = Word::periodic(per).unwrap();
            if a.period().len() == k as usize && matches!(classify_lyndon(&a), LyndonClass::Weak { .. }) {
                out.push(a);
            }
        }
    }
    out
}

#[test]
fn companion_intervals_share_the_base() {
    let mut checked = 0;
    for a in weak_words() {
        let (min, max) = lyn_bounds(&a).unwrap();
        if !alt_compare_vs_phi_limit(&max).unwrap().is_less() {
            continue;
        }
        assert!(alt_compare(&min, &max).is_less(), "{a}: {min} vs {max}");
        assert!(is_lyndon(&min) && is_lyndon(&max), "{a}: {min} {max}");
        let base = compute_beta(&a).unwrap();
        let k = a.period().len();
        let mut samples = vec![min.clone(), max.clone()];
        for pre_len in k..k + 3 {
            let head = a.prefix(pre_len);
            for tail in ["(0)", "(1)", "(2)", "(10)", "(21)", "1(0)", "(201)"] {
                samples.push(w(tail).prepend(&head));
            }
        }
        for s in samples {
            let inside = alt_compare(&min, &s).relation != Ordering::Greater
                && alt_compare(&s, &max).relation != Ordering::Greater;
            if !inside || s == a || !is_lyndon(&s) {
                continue;
            }
            let c = compute_beta(&s).unwrap();
            assert!(same_base(&c, &base), "{s} in Lyn({a}) has base {} vs {}", c.beta(), base.beta());
            checked += 1;
        }
    }
    assert!(checked > 10, "only {checked} samples");
}

fn check_tiling(d: &Word, n: usize, finite_monotone: bool) {
    let cert = compute_beta(d).unwrap();
    let list = enumerate_language(d, n, 10_000_000).unwrap();
    let images: Vec<_> = list.iter().map(|x| cylinder_image(x.preperiod(), d, &cert).unwrap()).collect();
    let eq = |a: &BetaNumber, b: &BetaNumber| cert.sign_of(&(a - b)).unwrap() == Ordering::Equal;
    assert!(eq(&images[0].lower, &BetaNumber::l_beta()), "{d} n={n}: left end");
    assert!(eq(&images.last().unwrap().upper, &BetaNumber::r_beta()), "{d} n={n}: right end");
    for (i, pair) in images.windows(2).enumerate() {
        let gap = cert.sign_of(&(&pair[1].lower - &pair[0].upper)).unwrap();
        assert_ne!(gap, Ordering::Less, "{d}: {} and {} overlap", list[i], list[i + 1]);
        if finite_monotone {
            let step = &f_beta_exact(&list[i + 1]) - &f_beta_exact(&list[i]);
            assert_ne!(cert.sign_of(&step).unwrap(), Ordering::Less, "{d} n={n}: {} then {}", list[i], list[i + 1]);
        }
        let (x, y) = (list[i].preperiod(), list[i + 1].preperiod());
        if gap == Ordering::Equal && x[..n - 1] == y[..n - 1] {
            let expected = if n % 2 == 0 { x[n - 1] + 1 } else { x[n - 1] - 1 };
            assert_eq!(y[n - 1], expected, "{d}: {} then {}", list[i], list[i + 1]);
            let (dx, dy) = if n % 2 == 1 { (d.clone(), d.prepend(&[0])) } else { (d.prepend(&[0]), d.clone()) };
            assert!(eq(&f_beta_exact(&dx.prepend(x)), &pair[0].upper));
            assert!(eq(&f_beta_exact(&dy.prepend(y)), &pair[0].upper));
        }
    }
}

#[test]
fn cylinder_images_tile_the_interval() {
    for word in ["(2)", "(10)", "1(0)", "100(11)", "(21)", "10(1)", "(201)"] {
        let finite_monotone = ["(2)", "(10)", "1(0)"].contains(&word);
        for n in 1..=7 {
            check_tiling(&w(word), n, finite_monotone);
        }
    }
}

/// `110 ≺ 001` in the plastic system, yet the zero-padded value of `110`
/// lies to the right: `110·0^∞` is not in the system, so `f(110)` sits
/// outside the image of its own cylinder.
#[test]
fn finite_word_values_need_not_be_monotone() {
    let d = w("100(11)");
    let cert = compute_beta(&d).unwrap();
    let (x, y) = (w("110"), w("001"));
    let list = enumerate_language(&d, 3, 1000).unwrap();
    assert!(list.contains(&x) && list.contains(&y));
    assert!(alt_compare(&x, &y).is_less());
    let step = &f_beta_exact(&y) - &f_beta_exact(&x);
    assert_eq!(cert.sign_of(&step).unwrap(), Ordering::Less);
    let ix = cylinder_image(x.preperiod(), &d, &cert).unwrap();
    let iy = cylinder_image(y.preperiod(), &d, &cert).unwrap();
    assert_ne!(cert.sign_of(&(&iy.lower - &ix.upper)).unwrap(), Ordering::Less);
}
