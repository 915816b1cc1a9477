#include <cstdlib>
#include <iostream>

#include <unistd.h>

#include "nfrs/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    nfrs::cli::Environment env;
    env.color = ::isatty(STDOUT_FILENO) && std::getenv("NFRSCTL_NO_COLOR") == nullptr;
    return static_cast<int>(nfrs::cli::run(args, std::cout, std::cerr, env));
}
