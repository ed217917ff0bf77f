use clap::Parser;

fn main() {
    std::process::exit(ugsurf::cli::run(ugsurf::cli::Cli::parse()));
}
