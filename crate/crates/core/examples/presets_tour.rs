//! The built-in families: registry, closed-form oracles and the λ → 0
//! limit of the degenerate ones.

use deltastirling::presets::{default_mode, make_family, registry, Family, LambdaMode};
use deltastirling::scalar::Rat;
use deltastirling::stirling::Associated;

fn main() {
    let n = 5;
    for entry in registry() {
        let fam: Family = entry.id.parse().unwrap();
        let p = make_family(&fam, n, default_mode(&fam)).unwrap();
        let ctx = Associated::new(p.f(), n).unwrap();
        let oracle_ok = p.oracle_s2(n).map(|o| o.first_difference(ctx.s2()).is_none());
        println!(
            "({}) {:<22} S2(5,2) = {:<28} oracle agrees: {}",
            entry.letter,
            entry.id,
            ctx.s2().get(5, 2).to_string(),
            oracle_ok.map_or_else(|e| e.to_string(), |b| b.to_string())
        );
    }

    let deg = make_family(&Family::DegLahBell, n, LambdaMode::Symbolic).unwrap();
    let cls = make_family(&Family::LahBell, n, LambdaMode::Absent).unwrap();
    let at_zero = Associated::new(deg.f(), n).unwrap().s2().eval_lambda(&Rat::zero()).unwrap();
    let same = at_zero.first_difference(Associated::new(cls.f(), n).unwrap().s2()).is_none();
    println!("deg_lah_bell at λ = 0 equals lah_bell: {same}");
}
