use clap::Parser;

fn main() {
    let cli = wmta::cli::Cli::parse();
    std::process::exit(wmta::cli::run(cli) as i32);
}
