use clap::Parser;

use abelian_tqft::cli;

fn main() {
    let args = cli::Cli::parse();
    match cli::run(&args) {
        Ok(report) => print!("{report}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(cli::exit_code(&e));
        }
    }
}
