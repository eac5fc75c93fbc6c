fn main() {
    let out = kappa_algebroid::cli::run(std::env::args_os());
    // reports go to stdout even when a check fails; usage and parse errors to stderr
    if out.stderr {
        eprintln!("{}", out.text);
    } else {
        println!("{}", out.text);
    }
    std::process::exit(out.code);
}
