use clap::Parser;
use jones_core::cli::{run, Cli, Command};

fn main() {
    let cmd: Command = Cli::parse().into();
    let out = run(&cmd);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.status.code());
}
