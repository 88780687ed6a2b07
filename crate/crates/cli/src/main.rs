fn main() {
    std::process::exit(isoptic_lab::run(std::env::args()));
}
