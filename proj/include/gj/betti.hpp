#ifndef GJ_BETTI_HPP
#define GJ_BETTI_HPP

#include <vector>

#include "gj/errors.hpp"

namespace gj {

/// Graded dimensions of a homology computation with audit data.
/// Degrees run 0..pmax; boundary_ranks has one extra slot for the rank of
/// the incoming boundary d_{pmax+1}. d_0 = 0 by convention and
/// betti[p] = chain_dims[p] - boundary_ranks[p] - boundary_ranks[p+1].
struct BettiReport {
    long long pmax = 0;
    std::vector<long long> chain_dims;     // size pmax+1
    std::vector<long long> boundary_ranks; // size pmax+2
    std::vector<long long> betti;          // size pmax+1

    void validate() const {
        if (chain_dims.size() != static_cast<std::size_t>(pmax + 1) ||
            betti.size() != static_cast<std::size_t>(pmax + 1) ||
            boundary_ranks.size() != static_cast<std::size_t>(pmax + 2))
            throw internal_error("inconsistent Betti report shape");
        if (boundary_ranks[0] != 0) throw internal_error("d_0 must have rank 0");
        for (long long p = 0; p <= pmax; ++p) {
            long long b = chain_dims[p] - boundary_ranks[p] - boundary_ranks[p + 1];
            if (b != betti[p] || b < 0) throw internal_error("Betti numbers out of balance");
        }
    }
};

} // namespace gj

#endif
