use super::*;
use crate::fps::Series;
use crate::scalar::Rat;
use crate::stirling::{classical, Associated, Triangle, XPoly};

fn q(n: i64, d: i64) -> Scalar {
    Scalar::rat(n, d)
}

fn lam_pow(c: Rat, e: usize) -> Scalar {
    Scalar::lambda().pow(e as i64).unwrap().mul_rat(&c)
}

fn same_entries(a: &Triangle, b: &Triangle) -> bool {
    a.max_n() == b.max_n() && a.rows() == b.rows()
}

#[test]
fn identity_and_central_series() {
    let p = make_preset("identity", 8, LambdaMode::Absent).unwrap();
    assert_eq!(p.f().series(), &Series::t(8));
    let c = make_preset("central", 6, LambdaMode::Absent).unwrap();
    let want = Series::new(vec![q(0, 1), q(1, 1), q(0, 1), q(1, 24), q(0, 1), q(1, 1920), q(0, 1)], 6);
    assert_eq!(c.f().series(), &want);
}

#[test]
fn deg_falling_inverse() {
    let p = make_preset("deg_falling", 6, LambdaMode::Symbolic).unwrap();
    let fbar = p.f().invert_newton();
    for n in 1..=6 {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        assert_eq!(fbar.series().coeff(n), &lam_pow(Rat::new(sign, n as i64).unwrap(), n - 1));
    }
}

#[test]
fn oracle_examples() {
    let abs = || LambdaMode::Absent;
    assert_eq!(oracle_s2("rising", 4, 2, abs()).unwrap(), Scalar::int(36));
    assert_eq!(oracle_s2("mittag_leffler", 3, 2, abs()).unwrap(), Scalar::int(24));
    assert_eq!(oracle_s2("bell", 3, 1, abs()).unwrap(), Scalar::int(5));
    assert_eq!(oracle_s1("rising", 4, 2, abs()).unwrap(), Scalar::int(36));
    assert_eq!(oracle_s1("identity", 4, 2, abs()).unwrap(), Scalar::int(11));
    assert_eq!(oracle_s1("laguerre_m1", 2, 1, abs()).unwrap(), Scalar::int(-1));
}

#[test]
fn oracle_log_examples() {
    let central = oracle_log("central", 6, LambdaMode::Absent).unwrap();
    assert_eq!(&central.coeffs()[..4], &[q(0, 1), q(1, 1), q(-1, 2), q(3, 8)]);
    assert_eq!(oracle_log("identity", 5, LambdaMode::Absent).unwrap(), Series::log1p(5));
    let ml = oracle_log("mittag_leffler", 6, LambdaMode::Absent).unwrap();
    // t/(2 + t) = Σ (−1)^{n−1} tⁿ/2ⁿ
    for n in 1..=6 {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        assert_eq!(ml.coeff(n), &q(sign, 1 << n));
    }
}

/// Every preset in the sweep, with the mode used for it.
fn corpus(order: usize) -> Vec<Preset> {
    corpus_ids()
        .iter()
        .map(|id| {
            let fam: Family = id.parse().unwrap();
            make_family(&fam, order, default_mode(&fam)).unwrap()
        })
        .collect()
}

#[test]
fn oracles_match_core() {
    let n = 7;
    for p in corpus(n) {
        let ctx = Associated::new(p.f(), n).unwrap();
        let (s2, s1) = ctx.triangles();
        assert!(same_entries(&p.oracle_s2(n).unwrap(), s2), "S2 of {}", p.id());
        assert!(same_entries(&p.oracle_s1(n).unwrap(), s1), "S1 of {}", p.id());
        assert_eq!(&p.oracle_log(n).unwrap(), ctx.log(), "log of {}", p.id());
    }
}

#[test]
fn lambda_zero_gives_classical_partner() {
    for fam in FIXED_FAMILIES.iter().filter(|f| f.is_degenerate()) {
        let partner = fam.classical_partner().unwrap();
        let deg = make_family(fam, 6, LambdaMode::Symbolic).unwrap();
        let cls = make_family(&partner, 6, LambdaMode::Absent).unwrap();
        assert_eq!(deg.f().eval_lambda(&Rat::zero()).unwrap(), *cls.f(), "{fam}");
        let at_zero = make_family(fam, 6, LambdaMode::Value(Rat::zero())).unwrap();
        assert_eq!(at_zero.f(), cls.f(), "{fam}");
    }
}

#[test]
fn deg_rising_at_one_is_rising() {
    let one = make_preset("deg_rising", 6, LambdaMode::Value(Rat::one())).unwrap();
    let rising = make_preset("rising", 6, LambdaMode::Absent).unwrap();
    assert_eq!(one.f(), rising.f());
}

#[test]
fn deterministic_moments_reproduce_deg_falling() {
    let n = 7;
    let ones = make_preset("probabilistic:const:1", n, LambdaMode::Symbolic).unwrap();
    let deg = make_preset("deg_falling", n, LambdaMode::Symbolic).unwrap();
    assert_eq!(ones.f(), deg.f());
    let a = Associated::new(ones.f(), n).unwrap();
    assert!(same_entries(a.s2(), &classical::s2_lambda(&Scalar::lambda(), n)));
    let classical = make_preset("probabilistic:const:1", n, LambdaMode::Absent).unwrap();
    assert_eq!(classical.f().series(), &Series::t(n));
}

#[test]
fn uniform_moment_values() {
    let sym = uniform_moments(&LambdaMode::Symbolic);
    assert_eq!(sym.moment(1), q(1, 2));
    assert_eq!(sym.moment(2), &q(1, 3) - &Scalar::lambda().mul_rat(&Rat::new(1, 2).unwrap()));
    let plain = uniform_moments(&LambdaMode::Absent);
    for n in 0..6 {
        assert_eq!(plain.moment(n), q(1, n as i64 + 1));
    }
}

#[test]
fn a2_numbers() {
    let a = a2_series(4).egf().to_vec();
    assert_eq!(&a[..3], &[q(1, 1), q(-1, 3), q(1, 18)]);
}

#[test]
fn uniform_multinomial_formula() {
    let n = 5;
    let p = make_preset("probabilistic:uniform", n, LambdaMode::Symbolic).unwrap();
    let ctx = Associated::new(p.f(), n).unwrap();
    for m in 1..=n {
        assert_eq!(uniform_log_coeff(m, &Scalar::lambda()), ctx.s1().get(m, 1), "n={m}");
    }
    let two = &lam_pow(Rat::from(4), 1) - &q(8, 3);
    assert_eq!(uniform_log_coeff(2, &Scalar::lambda()), two);
}

#[test]
fn errors() {
    assert_eq!(
        make_preset("deg_rising", 4, LambdaMode::Absent).unwrap_err(),
        PresetError::LambdaModeRequired("deg_rising".into())
    );
    assert!(matches!(make_preset("nope", 4, LambdaMode::Absent), Err(PresetError::UnknownPreset(_))));
    assert_eq!(make_preset("probabilistic:const:0", 4, LambdaMode::Absent).unwrap_err(), PresetError::ZeroFirstMoment);
    assert!(matches!(
        make_preset("probabilistic:bernoulli:3/2", 4, LambdaMode::Absent),
        Err(PresetError::BadDistribution(_))
    ));
    assert!(matches!(
        make_preset("probabilistic:discrete:1@1/2;2@1/3", 4, LambdaMode::Absent),
        Err(PresetError::BadDistribution(_))
    ));
    assert_eq!(make_preset("identity", 0, LambdaMode::Absent).unwrap_err(), PresetError::BadOrder);
}

#[test]
fn other_distributions_match_their_log_oracles() {
    for id in ["probabilistic:bernoulli:1/3", "probabilistic:const:-2"] {
        let p = make_preset(id, 6, LambdaMode::Symbolic).unwrap();
        let ctx = Associated::new(p.f(), 6).unwrap();
        assert_eq!(&p.oracle_log(6).unwrap(), ctx.log(), "{id}");
        assert!(same_entries(&p.oracle_s2(6).unwrap(), ctx.s2()), "{id}");
    }
    // two atoms: moments average those of the atoms
    let p = make_preset("probabilistic:discrete:1@1/2;3@1/2", 6, LambdaMode::Absent).unwrap();
    let ctx = Associated::new(p.f(), 6).unwrap();
    assert!(same_entries(&p.oracle_s2(6).unwrap(), ctx.s2()));
    assert_eq!(p.moments().unwrap().moment(2), Scalar::int(5));
}

#[test]
fn deg_rising_first_kind_two_ways() {
    let p = make_preset("deg_rising", 7, LambdaMode::Symbolic).unwrap();
    let via_lah = p.oracle_s1(7).unwrap();
    let via_neg = classical::s1_lambda(&-Scalar::lambda(), 7);
    assert!(same_entries(&via_lah, &via_neg));
}

/// `x^{[n]} = x·(x + n/2 − 1)_{n−1}` in monomials.
fn central_factorial(n: usize) -> XPoly {
    if n == 0 {
        return XPoly::one();
    }
    let x = XPoly::monomial(Scalar::one(), 1);
    (0..n - 1).fold(x, |acc, i| {
        let c = Scalar::Q(Rat::new(n as i64 - 2 - 2 * i as i64, 2).unwrap());
        acc.mul(&XPoly::new(vec![c, Scalar::one()], crate::stirling::Basis::Monomial))
    })
}

#[test]
fn central_factorial_expansions() {
    let n = 8;
    let (t1, t2) = (central_t1(n).unwrap(), central_t2(n).unwrap());
    for m in 0..=n {
        // x^{[m]} = Σ T₁(m,k) x^k
        let direct = XPoly::new(t1.row(m).to_vec(), crate::stirling::Basis::Monomial);
        assert_eq!(direct, central_factorial(m), "T1 row {m}");
        // x^m = Σ T₂(m,k) x^{[k]}
        let back = (0..=m).fold(XPoly::zero(crate::stirling::Basis::Monomial), |acc, k| {
            acc.add(&central_factorial(k).scale(&t2.get(m, k)))
        });
        assert_eq!(back, XPoly::monomial(Scalar::one(), m), "T2 row {m}");
    }
}

#[test]
fn laguerre_is_self_inverse() {
    let p = make_preset("laguerre_m1", 10, LambdaMode::Absent).unwrap();
    assert_eq!(p.f().compose_delta(p.f()).unwrap().series(), &Series::t(10));
}

#[test]
fn registry_lists_every_family() {
    let reg = registry();
    assert_eq!(reg.len(), 16);
    let letters: String = reg.iter().map(|e| e.letter).collect();
    assert_eq!(letters, "bcdefghijklmnoaa");
    let json: serde_json::Value = serde_json::from_str(&registry_json()).unwrap();
    assert_eq!(json[0]["id"], "identity");
    assert_eq!(json[1]["classical_partner"], "identity");
}
