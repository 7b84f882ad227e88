fn main() {
    let (mut out, mut err) = (std::io::stdout().lock(), std::io::stderr().lock());
    std::process::exit(skein::cli::run(std::env::args_os(), &mut out, &mut err));
}
