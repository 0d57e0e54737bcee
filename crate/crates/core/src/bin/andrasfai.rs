use std::io::IsTerminal;

fn main() {
    let stdout = std::io::stdout();
    let interactive = stdout.is_terminal();
    let code = andrasfai::cli::run(std::env::args_os(), &mut stdout.lock(), &mut std::io::stderr(), interactive);
    std::process::exit(code);
}
