#ifndef GJ_ASSOC_HPP
#define GJ_ASSOC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gj/betti.hpp"
#include "gj/rank.hpp"
#include "gj/scalar.hpp"

namespace gj {

constexpr long long kDefaultChainCeiling = 1'000'000;

/// Finite-dimensional unital associative algebra by multiplication table,
/// with an optional anti-involution. Validated on construction:
/// associativity, two-sided unit, and (when present) the involution being
/// a linear order-2 anti-automorphism fixing the unit.
class FinAssocAlg {
public:
    using SparseVec = std::vector<std::pair<long long, Rat>>; // sorted by index

    static FinAssocAlg make(long long dim, std::vector<Rat> unit,
                            std::vector<std::vector<SparseVec>> mult,
                            std::optional<std::vector<std::vector<Rat>>> involution,
                            std::vector<std::string> labels = {});

    static FinAssocAlg field();
    static FinAssocAlg matrix_algebra(long long n); // with transpose involution
    static FinAssocAlg dual_numbers();
    static FinAssocAlg product_field(long long n);
    static FinAssocAlg group_algebra(const std::vector<std::vector<int>>& cayley);

    long long dim() const { return dim_; }
    const std::vector<Rat>& unit() const { return unit_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const SparseVec& mult(long long i, long long j) const {
        return mult_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    const std::vector<std::vector<SparseVec>>& mult_table() const { return mult_; }
    bool has_involution() const { return involution_.has_value(); }
    /// iota(e_j) = sum_i m[i][j] e_i
    const std::vector<std::vector<Rat>>& involution_matrix() const;

    SparseVec mul_vec(const SparseVec& a, const SparseVec& b) const;
    SparseVec involution_of_basis(long long j) const;

private:
    long long dim_ = 0;
    std::vector<Rat> unit_;
    std::vector<std::vector<SparseVec>> mult_;
    std::optional<std::vector<std::vector<Rat>>> involution_;
    std::vector<std::string> labels_;
    void validate() const;
};

/// Finite group of algebra automorphisms: Cayley table plus one matrix per
/// element. Validated against the algebra it acts on.
struct GroupAction {
    std::vector<std::vector<int>> cayley;                 // cayley[g][h] = g*h
    std::vector<std::vector<std::vector<Rat>>> matrices;  // column action: g(e_j) = sum_i m[i][j] e_i
    int identity = 0;

    long long order() const { return static_cast<long long>(cayley.size()); }
    static GroupAction make(std::vector<std::vector<int>> cayley,
                            std::vector<std::vector<std::vector<Rat>>> matrices,
                            const FinAssocAlg& algebra);
    /// Z/n acting on product_field(n) by cyclic coordinate shift.
    static GroupAction cyclic_shift(long long n);
};

/// Twisted group algebra A{G}: basis e_a (x) [g], product
/// (a (x) [g]) (b (x) [h]) = a g(b) (x) [gh]. Basis index = a*|G| + g.
FinAssocAlg twisted_group_algebra(const FinAssocAlg& a, const GroupAction& g);

/// The cyclic-twist isomorphism onto the matrix algebra:
/// (e_k (x) [i]) -> e_{k, k+i mod n}; returns the image basis index in
/// matrix_algebra(n) for each twisted basis index.
std::vector<long long> twisted_cyclic_iso(long long n);

// ------------------------------------------------------------ chain level

/// Flat index of the basis tensor (r_0,...,r_p), r_0 least significant.
long long tensor_index(const std::vector<long long>& tuple, long long dim);
std::vector<long long> tensor_tuple(long long index, long long dim, long long p);

/// Feasibility guard: dim^(p+1) <= ceiling, else resource_error.
long long chain_dim_checked(long long dim, long long p, long long ceiling);

using SparseChainVec = std::map<long long, Rat>;

/// Signed cyclic rotation x on R^(x)(p+1).
SparseChainVec apply_cyclic(const FinAssocAlg& r, long long p, const SparseChainVec& v);
/// Involution-twisted reversal y (requires the involution).
SparseChainVec apply_reversal(const FinAssocAlg& r, long long p, const SparseChainVec& v);
/// Hochschild boundary b applied to a chain vector (degree p -> p-1).
SparseChainVec apply_boundary(const FinAssocAlg& r, long long p, const SparseChainVec& v);

/// b as a sparse matrix in the tensor bases.
SparseRatMatrix hochschild_boundary(const FinAssocAlg& r, long long p,
                                    long long ceiling = kDefaultChainCeiling);

// -------------------------------------------------------------- homology

enum class CoinvariantRealization { averaging, quotient };

BettiReport hochschild_homology(const FinAssocAlg& r, long long pmax,
                                long long ceiling = kDefaultChainCeiling);
BettiReport cyclic_homology(const FinAssocAlg& r, long long pmax,
                            long long ceiling = kDefaultChainCeiling,
                            CoinvariantRealization real = CoinvariantRealization::averaging);
/// sign = +1: dihedral homology; sign = -1: skew-dihedral (y acts by -y).
BettiReport dihedral_homology(const FinAssocAlg& r, int sign, long long pmax,
                              long long ceiling = kDefaultChainCeiling,
                              CoinvariantRealization real = CoinvariantRealization::averaging);

struct PeriodicityWindow {
    long long n = 0;
    bool applicable = false; // dim HH_n = dim HH_{n-1} = 0
    bool holds = true;       // dim HC_n = dim HC_{n-2} (vacuously true when not applicable)
    long long hh_n = 0, hh_nm1 = 0, hc_n = 0, hc_nm2 = 0;
};

struct PeriodicityReport {
    BettiReport hh, hc;
    std::vector<PeriodicityWindow> windows; // n = 1..pmax-1
    bool all_hold = true;
};

/// Degreewise consequence of the Connes exact sequence: wherever two
/// consecutive Hochschild groups vanish, HC_n = HC_{n-2}.
PeriodicityReport periodicity_check(const FinAssocAlg& r, long long pmax,
                                    long long ceiling = kDefaultChainCeiling);

} // namespace gj

#endif
