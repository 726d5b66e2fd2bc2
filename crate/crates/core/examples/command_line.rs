//! Driving the command-line front end in process.

use deltastirling::cli;

fn show(args: &[&str]) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("deltastirling").chain(args.iter().copied()), &mut out, &mut err);
    println!("$ deltastirling {}  (exit {code})", args.join(" "));
    print!("{}{}", String::from_utf8_lossy(&out), String::from_utf8_lossy(&err));
}

fn main() {
    show(&["table", "--kind", "s2", "--preset", "rising", "--n", "4"]);
    show(&["log", "--preset", "mittag_leffler", "--order", "4", "--format", "csv"]);
    show(&["verify", "orthogonality", "--preset", "deg_falling", "--n", "5"]);
    show(&["table", "--f", "t^2", "--n", "3"]);
}
