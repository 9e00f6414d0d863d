fn main() {
    std::process::exit(hodgekit::cli::run(std::env::args_os()));
}
