#include <iostream>

#include "fracschrod_app/app.hpp"

int main(int argc, char** argv) {
    return fracschrod::app::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
