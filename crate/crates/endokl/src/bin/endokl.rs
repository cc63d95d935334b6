fn main() {
    std::process::exit(endokl::cli::main_with_args(std::env::args_os()));
}
