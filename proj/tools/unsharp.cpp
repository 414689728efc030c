#include <iostream>

#include "unsharp/cli.hpp"

int main(int argc, char** argv) {
    return unsharp::run_cli(argc, argv, std::cout, std::cerr);
}
