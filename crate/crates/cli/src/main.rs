use clap::Parser;
use sdtest_cli::{execute, Args};

fn main() {
    let args = Args::parse();
    if let Err(e) = execute(&args) {
        eprintln!("sdtest: {e}");
        std::process::exit(e.exit_code());
    }
}
