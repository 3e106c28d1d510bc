fn main() {
    std::process::exit(mixlang::cli::run_command(std::env::args_os()));
}
