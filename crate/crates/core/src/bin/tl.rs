use std::io::{stderr, stdout, BufWriter, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut out = BufWriter::new(stdout().lock());
    let code = temperley_lieb::cli::run(std::env::args_os(), &mut out, &mut stderr());
    let _ = out.flush();
    ExitCode::from(code as u8)
}
