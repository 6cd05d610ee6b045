use std::io::Write;

fn main() {
    let result = spin7_torsion::cli::dispatch(std::env::args_os());
    print!("{}", result.payload);
    eprint!("{}", result.diagnostics);
    let _ = std::io::stdout().flush();
    std::process::exit(result.exit_code);
}
