#include <iostream>

#include "bdi/cli.hpp"

int main(int argc, char** argv)
{
    int code = 0;
    auto config = bdi::parse_args(argc, argv, code);
    if (!config) return code;
    return bdi::run(*config, std::cout, std::cerr);
}
