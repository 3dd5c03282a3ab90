use std::io;
use std::process::ExitCode;

use relcalc_cli::{run, Hooks};

fn main() -> ExitCode {
    let code = run(
        std::env::args_os(),
        &Hooks::default(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
