fn main() {
    std::process::exit(hyponorm::cli::run(std::env::args_os()));
}
