// Small tour of the Clifford layer: building elements, normal ordering and
// exact Wick traces, with the matrix oracle as a cross-check.

#include "wres/exterior_rep.hpp"
#include "wres/integrate.hpp"

#include <iostream>

using namespace wres;

int main() {
    int n = 4;
    PairingForm pf(n);

    CliffordElement c1 = cliff_gen(gen_c(1));
    CliffordElement ch1 = cliff_gen(gen_chat(1));
    std::cout << "c(1)*c(1)            = " << c1.multiply(c1, pf).str() << "\n";
    std::cout << "c(1)ch(1) + ch(1)c(1) = "
              << (c1.multiply(ch1, pf) + ch1.multiply(c1, pf)).str() << "\n";

    CliffordElement cn = cliff_gen(gen_c(n));
    std::cout << "tr[c(dx_n)^2]        = " << cn.multiply(cn, pf).trace(pf).str() << "\n";
    std::cout << "matrix oracle        = " << oracle_trace({gen_c(n), gen_c(n)}, n).str()
              << "\n";

    // the covariable-bearing words keep their xi-polynomials through the
    // trace; the sphere functional turns them into Omega multiples
    CliffordElement cxi = c_xi_prime(n);
    XiPoly tr = cxi.multiply(cxi, pf).trace(pf);
    std::cout << "tr[c(xi')^2]         = " << tr.str() << "\n";
    std::cout << "integrated over S^2  = " << sphere_integral(tr, n - 1).str() << "\n";
    return 0;
}
