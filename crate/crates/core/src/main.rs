fn main() {
    std::process::exit(homhopf::cli::main());
}
