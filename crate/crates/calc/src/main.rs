fn main() {
    std::process::exit(ternion_calc::cli::run_cli(std::env::args_os()));
}
