fn main() {
    std::process::exit(lincirc_tools::cli::main());
}
