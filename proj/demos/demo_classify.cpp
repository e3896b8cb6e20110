// Walks one instance end to end: solve, check, classify, print invariants.

#include <iostream>

#include "tybraid/tybraid.hpp"

using namespace tybraid;

int main() {
    TYData d = make_real_complex(/*conjugating=*/true, /*n=*/1, /*tau_sign=*/+1);
    std::cout << "instance: " << case_name(d.cse) << ", |A| = " << d.order()
              << ", tau = " << d.tau().str() << "\n";

    auto braidings = solve_braidings(d);
    std::cout << braidings.size() << " braidings; hexagon check: ";
    bool clean = true;
    for (const auto& b : braidings) clean = clean && check_hexagons(b).empty();
    std::cout << (clean ? "clean" : "violated") << "\n";

    auto cls = classify(d);
    for (std::size_t i = 0; i < cls.classes.size(); ++i) {
        const auto& c = cls.classes[i];
        const auto& rep = cls.braidings[c.representative];
        std::cout << "class " << i << ": size " << c.members.size()
                  << ", sgn(sigma) = " << (c.invariants.sign_sigma ? *c.invariants.sign_sigma : 0)
                  << ", sigma3(1) = " << rep.sigma3(0).str()
                  << ", pi0 = " << pi0_aut_br(rep).order << "\n";
        auto inv = double_braiding_invariants(rep);
        std::cout << "  symmetric: " << (inv.symmetric ? "yes" : "no")
                  << ", nondegenerate: " << (inv.nondegenerate ? "yes" : "no") << "\n";
    }
    return 0;
}
