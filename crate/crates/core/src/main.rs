fn main() {
    std::process::exit(hedge_iep::cli::main_with_args(std::env::args()));
}
