use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, output) = semistab::cli::run(std::env::args_os());
    if code == 2 {
        eprint!("{output}");
    } else {
        let mut out = std::io::stdout().lock();
        let _ = out.write_all(output.as_bytes());
    }
    ExitCode::from(code as u8)
}
