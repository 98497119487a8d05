fn main() {
    std::process::exit(legendrian_t3::cli::main_with_args(std::env::args_os()));
}
