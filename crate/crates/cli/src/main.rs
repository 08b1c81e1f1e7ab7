use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = mlab_cli::run(std::env::args_os());
    // buffered: each stream is written once, after the command finished
    let _ = std::io::stdout().lock().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().lock().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
