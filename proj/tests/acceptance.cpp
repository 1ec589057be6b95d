#include <iostream>

#include "frobex/acceptance.hpp"

int main()
{
    const frobex::AcceptanceRun run = frobex::run_acceptance(&std::cout);
    std::cout << (run.passed() ? "acceptance: all criteria pass" : "acceptance: some criteria fail") << std::endl;
    return run.passed() ? 0 : 1;
}
