// One boundary case end to end: build the operator symbols, invert them
// asymptotically, project, differentiate, trace and integrate exactly.

#include "wres/pipelines.hpp"

#include <iostream>
#include <random>

using namespace wres;

int main() {
    int n = 4;
    BoundaryContext ctx(n);
    PairingForm pf(n);
    std::mt19937_64 rng(7);
    SubbundleInstance inst = SubbundleInstance::random(rng, n, 1);
    std::cout << "instance digest: " << inst.digest()
              << "   sum |S|^2 = " << inst.snorm2().str() << "\n\n";

    BoundaryResult br = compute_boundary(TheoremId::Phi, ctx, inst, pf);
    for (const CaseResult& c : br.cases)
        std::cout << c.key << ": " << c.computed.str()
                  << (c.match ? "   (matches the published value)" : "   (MISMATCH)")
                  << "\n";
    std::cout << br.total.key << ": " << br.total.computed.str() << "\n";
    return 0;
}
