#include "cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char **argv)
{
    rainbow::cli::Environment env;
    if (const char *seed = std::getenv("RAINBOW_SEED"))
        env.seed = seed;
    return rainbow::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr, env);
}
