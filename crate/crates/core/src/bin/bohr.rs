fn main() {
    std::process::exit(bohr::cli::main());
}
