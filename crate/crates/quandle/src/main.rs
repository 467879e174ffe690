fn main() {
    std::process::exit(quandle::cli::main_with_args(std::env::args_os()));
}
