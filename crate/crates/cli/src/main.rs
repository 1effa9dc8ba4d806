fn main() {
    std::process::exit(sgt_cli::run(std::env::args_os()));
}
