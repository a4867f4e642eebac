//! Driving the command-line interface in-process.

use dualmock::shell::cli::dispatch;

pub fn main() {
    for args in [&["h2", "D5_01"][..], &["invariants", "D8_36", "--format", "json"], &["catalog", "show", "D8_14"]] {
        let (code, out) = dispatch(args);
        println!("$ dualmock {}  (exit {code})\n{out}", args.join(" "));
    }
}
