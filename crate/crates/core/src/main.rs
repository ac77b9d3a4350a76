fn main() {
    std::process::exit(oscu::cli::main_with_args(std::env::args_os()));
}
