fn main() {
    std::process::exit(gzschubert::cli::main_with_args(std::env::args_os()));
}
