//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run with `cargo test -p mapclass --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use std::collections::BTreeMap;
use std::process::Command;

use once_cell::sync::Lazy;

use mapclass::artin::artin_apply;
use mapclass::genus2::{hyperelliptic_dim, Genus2Rep, HyperellipticRep};
use mapclass::laurent::{Exponent, LaurentPoly, Monomial};
use mapclass::lk::{abelianization, full_twist_word, LkRep};
use mapclass::matrix::RingMatrix;
use mapclass::sphere::SphereRep;
use mapclass::word::{relation_suite, Context, Letter, Word};

static K5: Lazy<SphereRep> = Lazy::new(|| SphereRep::new(5).expect("K5 builds"));
static K6: Lazy<SphereRep> = Lazy::new(|| SphereRep::new(6).expect("K6 builds"));
static G2: Lazy<Genus2Rep> = Lazy::new(|| Genus2Rep::new().expect("genus-2 rep builds"));

fn report(criterion: &str, ok: bool, detail: &str) {
    println!("criterion {criterion}: {} ({detail})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {criterion} failed: {detail}");
}

fn lambda(n: usize) -> LaurentPoly {
    LaurentPoly::from(Monomial::new(1, Exponent::from_int(2 * n as i64), Exponent::from_int(2)))
}

#[test]
fn criterion_01_center_scalar() {
    // L_n((s1..s_{n-1})^n) = q^{2n} t^2 I exactly, n in {2,3,4,5}
    let mut ok = true;
    for n in 2..=5usize {
        let rep = LkRep::new(n).expect("rep");
        let m = rep.eval(&full_twist_word(n), false).expect("eval");
        ok &= m.is_scalar() == Some(lambda(n));
    }
    report("1 center-scalar", ok, "L_n(full twist) = q^(2n) t^2 I for n = 2..5");
}

#[test]
fn criterion_02_rescaling_kills_center() {
    let mut ok = true;
    for n in 2..=5usize {
        let rep = LkRep::new(n).expect("rep");
        let d2 = full_twist_word(n);
        ok &= rep.eval(&d2, true).expect("eval").is_identity();
        ok &= abelianization(&d2).expect("braid word") == (n * (n - 1)) as i64;
    }
    report("2 rescaled-center", ok, "L'_n(full twist) = I and ab(full twist) = n(n-1), n = 2..5");
}

#[test]
fn criterion_03_braid_relation_suite() {
    let mut ok = true;
    for n in 2..=6usize {
        let rep = LkRep::new(n).expect("rep");
        for relator in relation_suite(Context::Braid(n)) {
            ok &= rep.eval(&relator.word, false).expect("eval").is_identity();
            ok &= rep.eval(&relator.word, true).expect("eval").is_identity();
        }
    }
    for rep in [&*K5, &*K6] {
        let n = rep.n();
        // braid-type relators only; the sphere-specific ones are criterion 4
        for relator in relation_suite(Context::Braid(n)) {
            let w = relator.word.with_context(Context::Sphere(n)).expect("same alphabet");
            ok &= rep.eval_blocks(&w).expect("eval").is_identity();
        }
    }
    report("3 braid-relations", ok, "relators -> I under L_n, L'_n (n <= 6) and K_5, K_6");
}

#[test]
fn criterion_04_sphere_relations() {
    let rep = &*K6;
    let mut ok = rep.dim() == 60;
    let boundary = Word::parse("s1 s2 s3 s4 s5 s5 s4 s3 s2 s1", Context::Sphere(6)).expect("parse");
    let m = rep.eval(&boundary).expect("eval");
    ok &= m.is_identity() && m.dim() == 60;
    let up = Word::parse("s1 s2 s3 s4 s5", Context::Sphere(6)).expect("parse");
    let m = rep.eval(&up.repeat(6)).expect("eval");
    ok &= m.is_identity() && m.dim() == 60;
    report("4 sphere-relations", ok, "K_6(boundary) = K_6((s1..s5)^6) = I_60, dim 60");
}

#[test]
fn criterion_05_genus2_involution() {
    let rep = &*G2;
    let iota = Genus2Rep::involution_word();
    let m = rep.eval(&iota).expect("eval");
    let expected = RingMatrix::identity(60)
        .direct_sum(&RingMatrix::scalar(4, LaurentPoly::constant(-1)));
    let mut ok = m == expected;
    ok &= !m.is_identity();
    ok &= m.try_mul(&m).expect("mul").is_identity();
    for i in 1..=5usize {
        let ti = rep.generator_matrix(i).expect("generator");
        ok &= m.try_mul(&ti).expect("mul") == ti.try_mul(&m).expect("mul");
    }
    report(
        "5 genus2-involution",
        ok,
        "rho(iota) = diag(I_60, -I_4), rho(iota)^2 = I_64, central among rho(t_i)",
    );
}

#[test]
fn criterion_06_genus2_relator() {
    let chain = Word::parse("t1 t2 t3 t4 t5", Context::Genus2).expect("parse");
    let m = G2.eval(&chain.repeat(6)).expect("eval");
    let ok = m.is_identity() && m.dim() == 64;
    report("6 genus2-relator", ok, "rho((t1..t5)^6) = I_64");
}

#[test]
fn criterion_07_dimension_bookkeeping() {
    let mut ok = G2.dim() == 64;
    ok &= 6 * (5 * 4 / 2) + 4 == 64;
    ok &= hyperelliptic_dim(2) == 64;
    ok &= hyperelliptic_dim(3) == 174;
    report("7 dimensions", ok, "64 = 6 C(5,2) + 4; hyperelliptic dims 64 (g=2), 174 (g=3)");
}

#[test]
fn criterion_08_oracle_equivalence() {
    // all braid(3) words of length <= 4 over {s1, s2, s1^-1, s2^-1}
    let ctx = Context::Braid(3);
    let alphabet = [Letter::gen(1), Letter::inv(1), Letter::gen(2), Letter::inv(2)];
    let mut words: Vec<Vec<Letter>> = vec![vec![]];
    let mut layer: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 0..4 {
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
    assert_eq!(words.len(), 1 + 4 + 16 + 64 + 256);

    let rep = LkRep::new(3).expect("rep");
    let mut matrices = Vec::with_capacity(words.len());
    let mut endos = Vec::with_capacity(words.len());
    for letters in &words {
        let w = Word::new(ctx, letters.clone()).expect("valid");
        matrices.push(rep.eval(&w, false).expect("eval"));
        endos.push(artin_apply(&w).expect("braid word"));
    }
    let mut ok = true;
    let mut pairs = 0usize;
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            let matrix_eq = matrices[i] == matrices[j];
            let oracle_eq = endos[i] == endos[j];
            if matrix_eq != oracle_eq {
                ok = false;
            }
            pairs += 1;
        }
    }
    report(
        "8 oracle-equivalence",
        ok,
        &format!("L_3 equality == Artin equality over {pairs} word pairs"),
    );
}

#[test]
fn criterion_09_inverse_correctness() {
    let mut ok = true;
    // cached generator inverses in every context
    for n in 2..=6usize {
        let rep = LkRep::new(n).expect("rep");
        for i in 1..n {
            let prod = rep
                .generator(i)
                .expect("gen")
                .try_mul(rep.generator_inverse(i).expect("inv"))
                .expect("mul");
            ok &= prod.is_identity();
        }
    }
    for rep in [&*K5, &*K6] {
        for i in 1..rep.n() {
            let prod = rep
                .generator_blocks(i)
                .expect("gen")
                .try_mul(rep.generator_inverse_blocks(i).expect("inv"))
                .expect("mul");
            ok &= prod.is_identity();
        }
    }
    let hyper3 = HyperellipticRep::new(3).expect("g=3 rep");
    for (g, rep) in [(2usize, G2.inner()), (3, &hyper3)] {
        for i in 1..=2 * g + 1 {
            let prod = rep
                .generator_matrix(i)
                .expect("gen")
                .try_mul(&rep.generator_inverse_matrix(i).expect("inv"))
                .expect("mul");
            ok &= prod.is_identity();
        }
    }
    // blockwise inversion agrees with elimination inversion on all K_5 generators
    for i in 1..=4usize {
        let dense = K5.generator_matrix(i).expect("gen");
        let elim = dense.inverse().expect("elimination inverse");
        let blockwise = K5.generator_inverse_matrix(i).expect("blockwise inverse");
        ok &= elim == blockwise;
    }
    report(
        "9 inverse-correctness",
        ok,
        "gen * cached inverse = I everywhere; blockwise == elimination on K_5",
    );
}

#[test]
fn criterion_10_determinism() {
    let bin = env!("CARGO_BIN_EXE_mapclass");
    let tmp = tempfile::tempdir().expect("tempdir");
    let mut ok = true;

    let mut export_bytes: Vec<BTreeMap<String, Vec<u8>>> = Vec::new();
    for run in 0..2 {
        let dir = tmp.path().join(format!("export{run}"));
        let status = Command::new(bin)
            .args(["--group", "braid", "--n", "3", "export", "--out"])
            .arg(&dir)
            .status()
            .expect("run export");
        ok &= status.success();
        let mut files = BTreeMap::new();
        for entry in std::fs::read_dir(&dir).expect("read dir") {
            let entry = entry.expect("entry");
            files.insert(
                entry.file_name().to_string_lossy().into_owned(),
                std::fs::read(entry.path()).expect("read file"),
            );
        }
        export_bytes.push(files);
    }
    ok &= export_bytes[0] == export_bytes[1];
    ok &= !export_bytes[0].is_empty();

    let mut reports: Vec<Vec<u8>> = Vec::new();
    for run in 0..2 {
        let path = tmp.path().join(format!("bench{run}.json"));
        let status = Command::new(bin)
            .args([
                "--group", "sphere", "--n", "6", "bench", "--length", "10", "--trials", "2",
                "--seed", "7", "--out",
            ])
            .arg(&path)
            .status()
            .expect("run bench");
        ok &= status.success();
        reports.push(std::fs::read(&path).expect("read report"));
    }
    ok &= reports[0] == reports[1];

    report("10 determinism", ok, "export and seeded bench byte-identical across two runs");
}
