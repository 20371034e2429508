#include "lchain/acceptance.hpp"

#include <iostream>

int main() { return lchain::run_acceptance(std::cout) == 0 ? 0 : 1; }
