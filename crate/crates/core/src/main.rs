use std::io::Write;

fn main() {
    let inv = planesquare::cli::run(std::env::args_os());
    print!("{}", inv.stdout);
    eprint!("{}", inv.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(inv.exit_code);
}
