use std::io;

fn main() {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = farapart::cli::run(std::env::args_os(), &mut out, &mut io::stderr());
    std::process::exit(code);
}
