fn main() {
    std::process::exit(roegen::cli::run());
}
