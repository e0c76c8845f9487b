use clap::Parser;

fn main() {
    // die quietly when the consumer closes the pipe, like other unix tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let config = sdbialg::cli::RunConfig::parse();
    std::process::exit(sdbialg::cli::run(config));
}
