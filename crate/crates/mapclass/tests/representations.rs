//! Cross-checks between the representations and the free-group oracles.

use once_cell::sync::Lazy;
use num_traits::ToPrimitive;

use mapclass::artin::artin_apply;
use mapclass::genus2::Genus2Rep;
use mapclass::laurent::LaurentPoly;
use mapclass::lk::{abelianization, full_twist_word, LkRep};
use mapclass::matrix::RingMatrix;
use mapclass::sphere::SphereRep;
use mapclass::word::{Context, Letter, Word};

static LK3: Lazy<LkRep> = Lazy::new(|| LkRep::new(3).expect("rep builds"));
static K6: Lazy<SphereRep> = Lazy::new(|| SphereRep::new(6).expect("rep builds"));
static G2: Lazy<Genus2Rep> = Lazy::new(|| Genus2Rep::new().expect("rep builds"));

fn all_words_up_to(ctx: Context, gens: usize, max_len: usize) -> Vec<Word> {
    let alphabet: Vec<Letter> = (1..=gens)
        .flat_map(|i| [Letter::gen(i), Letter::inv(i)])
        .collect();
    let mut words = vec![Vec::new()];
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &alphabet {
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    words
        .into_iter()
        .map(|letters| Word::new(ctx, letters).expect("valid"))
        .collect()
}

/// Equality modulo the center of `B_3`, decided by the Artin oracle: the
/// abelianizations must agree mod `ab(Delta^2) = 6`, and after stripping the
/// corresponding central power the automorphisms must coincide.
fn artin_equal_mod_center(lhs: &Word, rhs: &Word) -> bool {
    let d2 = full_twist_word(3);
    let diff = abelianization(lhs).unwrap() - abelianization(rhs).unwrap();
    if diff.rem_euclid(6) != 0 {
        return false;
    }
    let k = diff.div_euclid(6);
    let mut adjusted = rhs.clone();
    let power = if k >= 0 { d2.repeat(k as usize) } else { d2.inverse().repeat((-k) as usize) };
    adjusted = adjusted.concat(&power).unwrap();
    artin_apply(lhs).unwrap() == artin_apply(&adjusted).unwrap()
}

#[test]
fn rescaled_lk_equality_is_equality_mod_center() {
    // brute force over all braid(3) words of length <= 4
    let words = all_words_up_to(Context::Braid(3), 2, 4);
    assert_eq!(words.len(), 341);
    let matrices: Vec<RingMatrix> =
        words.iter().map(|w| LK3.eval(w, true).expect("eval")).collect();
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            let rescaled_eq = matrices[i] == matrices[j];
            let oracle_eq = artin_equal_mod_center(&words[i], &words[j]);
            assert_eq!(
                rescaled_eq, oracle_eq,
                "L'_3 vs oracle-mod-center disagree on {:?} vs {:?}",
                words[i].to_string(),
                words[j].to_string()
            );
        }
    }
}

#[test]
fn rescaled_image_ignores_central_insertions() {
    let rep = LkRep::new(4).expect("rep builds");
    let d2 = full_twist_word(4);
    let w = Word::parse("s1 s3^-1 s2 s1", Context::Braid(4)).unwrap();
    let base = rep.eval(&w, true).unwrap();
    for cut in [0usize, 2, w.len()] {
        let letters = w.letters();
        let mut spliced = Vec::new();
        spliced.extend_from_slice(&letters[..cut]);
        spliced.extend_from_slice(d2.letters());
        spliced.extend_from_slice(&letters[cut..]);
        let spliced = Word::new(Context::Braid(4), spliced).unwrap();
        assert_eq!(rep.eval(&spliced, true).unwrap(), base, "insertion at {cut}");
    }
}

#[test]
fn center_scalar_holds_through_n6() {
    let rep = LkRep::new(6).expect("rep builds");
    let d2 = full_twist_word(6);
    let scalar = rep.eval(&d2, false).unwrap().is_scalar().expect("central image");
    let q12t2 = LaurentPoly::from(mapclass::Monomial::new(
        1,
        mapclass::Exponent::from_int(12),
        mapclass::Exponent::from_int(2),
    ));
    assert_eq!(scalar, q12t2);
    assert!(rep.eval(&d2, true).unwrap().is_identity());
}

#[test]
fn k6_distinguishes_generators() {
    for i in 1..=5usize {
        assert!(!K6.generator_blocks(i).unwrap().is_identity());
        for j in i + 1..=5 {
            assert_ne!(
                K6.generator_blocks(i).unwrap(),
                K6.generator_blocks(j).unwrap(),
                "K6(s{i}) == K6(s{j})"
            );
        }
    }
}

#[test]
fn sphere_relations_hold_for_n5() {
    let rep = SphereRep::new(5).expect("rep builds");
    let boundary = Word::parse("s1 s2 s3 s4 s4 s3 s2 s1", Context::Sphere(5)).unwrap();
    assert!(rep.eval_blocks(&boundary).unwrap().is_identity());
    let up = Word::parse("s1 s2 s3 s4", Context::Sphere(5)).unwrap();
    assert!(rep.eval_blocks(&up.repeat(5)).unwrap().is_identity());
}

#[test]
fn genus2_images_are_block_diagonal() {
    // direct-sum structure: a 60-block and a 4-block, nothing off-diagonal
    let words = [
        Word::parse("t1 t2^-1 t5 t3", Context::Genus2).unwrap(),
        Word::parse("t4 t4 t1^-1", Context::Genus2).unwrap(),
        Genus2Rep::involution_word(),
    ];
    for w in &words {
        let m = G2.eval(w).unwrap();
        assert_eq!(m.dim(), 64);
        for i in 0..64 {
            for j in 0..64 {
                if (i < 60) != (j < 60) {
                    assert!(m.get(i, j).is_zero(), "nonzero at ({i},{j}) for {w}");
                }
            }
        }
    }
}

/// Integer determinant by fraction-free elimination; entries must be constants.
fn int_determinant(m: &RingMatrix) -> i64 {
    let n = m.dim();
    let mut a: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let p = m.get(i, j);
                    if p.is_zero() {
                        0
                    } else {
                        let term = p.terms().next().expect("constant entry");
                        assert!(term.qexp.is_zero() && term.texp.is_zero());
                        term.coeff.to_i64().expect("small integer")
                    }
                })
                .collect()
        })
        .collect();
    let mut sign = 1i64;
    let mut prev = 1i64;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| a[r][k] != 0) else { return 0 };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

#[test]
fn symplectic_generators_have_determinant_one() {
    for g in [2usize, 3] {
        for i in 1..=2 * g + 1 {
            let m = mapclass::genus2::symplectic_generator(g, i).unwrap();
            assert_eq!(int_determinant(&m), 1, "det H(t{i}) at genus {g}");
        }
    }
}

#[test]
fn genus2_relation_suite_via_representation() {
    for relator in mapclass::word::relation_suite(Context::Genus2) {
        assert!(
            G2.eval(&relator.word).unwrap().is_identity(),
            "relator {} not killed",
            relator.name
        );
    }
    assert!(!G2.eval(&Genus2Rep::involution_word()).unwrap().is_identity());
}

#[test]
fn hyperelliptic_relation_suite_g2() {
    let rep = G2.inner();
    for relator in mapclass::word::relation_suite(Context::Hyperelliptic(2)) {
        assert!(
            rep.eval(&relator.word).unwrap().is_identity(),
            "relator {} not killed",
            relator.name
        );
    }
}

#[test]
fn equal_words_for_braid_and_sphere() {
    let a = Word::parse("s1 s2 s1", Context::Braid(4)).unwrap();
    let b = Word::parse("s2 s1 s2", Context::Braid(4)).unwrap();
    assert!(mapclass::equal_words(&a, &b).unwrap());
    // Delta^2 is nontrivial in braid(4) but the sphere quotient kills the
    // boundary word
    let d2 = full_twist_word(4);
    assert!(!mapclass::equal_words(&d2, &Word::empty(Context::Braid(4))).unwrap());
    let boundary = Word::parse("s1 s2 s3 s4 s4 s3 s2 s1", Context::Sphere(5)).unwrap();
    assert!(mapclass::equal_words(&boundary, &Word::empty(Context::Sphere(5))).unwrap());
    let s1 = Word::parse("s1", Context::Sphere(5)).unwrap();
    assert!(!mapclass::equal_words(&s1, &Word::empty(Context::Sphere(5))).unwrap());
}
