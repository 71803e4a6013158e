#include <iostream>

#include <cattab/cli/app.hpp>

int main(int argc, char** argv)
{
    return cattab::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
