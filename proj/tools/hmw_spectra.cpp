#include "hmw/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return hmw::run_cli(argc, argv, std::cout, std::cerr);
}
