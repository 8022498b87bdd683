fn main() {
    std::process::exit(pathdeg::cli::main_with_args(std::env::args_os()));
}
