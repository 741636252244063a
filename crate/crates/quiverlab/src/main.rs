fn main() { std::process::exit(quiverlab::cli::run()); }
