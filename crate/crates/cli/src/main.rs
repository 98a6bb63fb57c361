fn main() {
    std::process::exit(kselect_cli::run(std::env::args_os()));
}
