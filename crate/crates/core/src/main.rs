use std::io;

fn main() {
    let code = uqrs::cli::run_args(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
