use std::io::{self, Read};
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let mut stdin = String::new();
    let needs_stdin = args.iter().skip(2).any(|a| a == "-");
    if needs_stdin && io::stdin().read_to_string(&mut stdin).is_err() {
        eprintln!("failed to read standard input");
        return ExitCode::from(1);
    }
    let code = sdke::cli::run(&args, &stdin, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
