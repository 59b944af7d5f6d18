fn main() {
    std::process::exit(starfree::cli::main_entry());
}
