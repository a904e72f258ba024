//! Drive the command-line front end in-process to produce a CSV table.
use pqml::cli::dispatch_with_env;

fn main() {
    let args = [
        "pqml", "table", "--alpha", "0.8", "--beta", "1", "--gamma", "1.2", "--c", "2.5", "--p", "0.3", "--q", "0.6",
        "--z-from", "-1", "--z-to", "1", "--steps", "11",
    ];
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = dispatch_with_env(args, None, &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
    eprint!("{}", String::from_utf8_lossy(&err));
    std::process::exit(code);
}
