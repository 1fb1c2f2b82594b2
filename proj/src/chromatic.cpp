#include "hdisc/chromatic.hpp"

#include <algorithm>
#include <numeric>

#include "hdisc/errors.hpp"

namespace hdisc {

ChromaticProfile chromatic_profile(const Graph& h) {
    if (h.edge_count() == 0)
        throw ContractViolation("chromatic_profile: graph without edges");
    ChromaticProfile p;
    p.r = chromatic_number(h);
    const int r = p.r;

    long sig = -1;
    for_each_coloring(h, r, [&](const LabeledColoring& f) {
        std::vector<long> size(r, 0);
        for (int c : f.assignment) ++size[c];
        std::sort(size.begin(), size.end());
        if (sig < 0 || size[0] < sig) sig = size[0];
        for (int i = 0; i + 1 < r; ++i) p.d_set.insert(size[i + 1] - size[i]);
        return true;
    });
    p.sigma = sig;
    p.chi_cr = Rational(r - 1) * Rational(h.n()) / Rational(h.n() - sig);

    long g = 0;
    for (long d : p.d_set) g = std::gcd(g, d);
    p.hcf_chi = g;
    p.hcf_c = graph_basics(h).hcf_c;

    // r >= 3: hcf = 1 iff hcf_chi = 1. r = 2: hcf = 1 iff hcf_chi <= 2 and
    // hcf_c = 1. The gcd of an all-zero gap set is 0, so balanced-only
    // graphs never get hcf = 1 at r >= 3 and fall to chi* = r.
    if (r >= 3) p.hcf_is_one = (p.hcf_chi == 1);
    else p.hcf_is_one = (p.hcf_chi <= 2 && p.hcf_c == 1);

    p.chi_star = p.hcf_is_one ? p.chi_cr : Rational(r);
    return p;
}

} // namespace hdisc
