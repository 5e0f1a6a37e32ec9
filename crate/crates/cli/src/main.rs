use std::io::{stderr, stdout};

fn main() {
    let code = stiefel_cli::execute(std::env::args_os(), &mut stdout(), &mut stderr());
    std::process::exit(code);
}
