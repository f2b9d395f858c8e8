fn main() {
    std::process::exit(circumlab::cli::run());
}
