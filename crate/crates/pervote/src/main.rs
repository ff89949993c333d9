fn main() {
    std::process::exit(pervote::cli::main());
}
