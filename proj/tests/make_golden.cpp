// Prints the golden regression case. Run once; the output is frozen under
// tests/golden/.
#include <iostream>

#include "golden_case.hpp"

int main() { std::cout << golden::random_chain_case().dump(1) << "\n"; }
