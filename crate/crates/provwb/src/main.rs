fn main() { std::process::exit(provwb::cli::run_main()); }
