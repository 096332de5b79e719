use std::io;

fn main() {
    if let Err(msg) = hydroxi::cli::configure_threads() {
        eprintln!("error: {msg}");
        std::process::exit(hydroxi::cli::EXIT_ARGS);
    }
    let code = hydroxi::cli::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
