use std::io::{self, IsTerminal};
use std::process::ExitCode;

use graph_toughness::cli::{run, Io};

fn main() -> ExitCode {
    let color = std::env::var_os("NO_COLOR").is_none() && io::stdout().is_terminal();
    let mut io = Io {
        stdin: &mut io::stdin(),
        stdout: &mut io::stdout(),
        stderr: &mut io::stderr(),
        color,
    };
    let code = run(std::env::args_os(), &mut io);
    ExitCode::from(code as u8)
}
