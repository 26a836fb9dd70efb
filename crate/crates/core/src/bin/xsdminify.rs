fn main() {
    std::process::exit(xsdminify::cli::run(std::env::args_os()));
}
