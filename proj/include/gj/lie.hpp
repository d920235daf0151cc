#ifndef GJ_LIE_HPP
#define GJ_LIE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gj/assoc.hpp"
#include "gj/betti.hpp"
#include "gj/rank.hpp"

namespace gj {

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [x_i, x_j] = sum_k c_{ij}^k x_k for i < j; antisymmetry is implicit and
/// the Jacobi identity is validated on construction.
class FinLieAlg {
public:
    using SparseVec = std::vector<std::pair<long long, Rat>>; // sorted by index

    static FinLieAlg from_structure(long long dim, std::vector<std::string> labels,
                                    std::map<std::pair<long long, long long>, SparseVec> structure);
    /// Structure constants read off a list of matrices closed under
    /// commutator (dense square blocks, all the same size).
    static FinLieAlg from_matrix_basis(const std::vector<std::vector<std::vector<Rat>>>& basis,
                                       std::vector<std::string> labels);

    static FinLieAlg abelian(long long n);
    static FinLieAlg gl(long long n);
    static FinLieAlg sl(long long n);
    /// Anti-fixed points of (i,j) -> (-j,-i) on the block -l..l.
    static FinLieAlg o_odd(long long l);
    /// Anti-fixed points of (i,j) -> (-1)^(i+j) (-j-1,-i-1) on -l..l-1.
    static FinLieAlg sp(long long l);
    /// Anti-fixed points of (i,j) -> (-j-1,-i-1) on -l..l-1.
    static FinLieAlg o_even(long long l);
    /// gl_n over a finite-dimensional associative algebra.
    static FinLieAlg gl_over(long long n, const FinAssocAlg& a);

    long long dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::map<std::pair<long long, long long>, SparseVec>& structure() const { return structure_; }

    /// [x_i, x_j] for arbitrary i, j.
    SparseVec bracket_basis(long long i, long long j) const;
    SparseVec bracket(const SparseVec& a, const SparseVec& b) const;

private:
    long long dim_ = 0;
    std::vector<std::string> labels_;
    std::map<std::pair<long long, long long>, SparseVec> structure_; // keys i < j
    void validate_jacobi() const;
};

/// Boundary of the exterior-algebra complex in lexicographic subset bases,
/// degree p -> p-1 (1 <= p <= dim).
SparseRatMatrix ce_boundary(const FinLieAlg& g, long long p,
                            long long ceiling = kDefaultChainCeiling);

/// Lie algebra homology with trivial coefficients up to degree pmax.
BettiReport lie_homology(const FinLieAlg& g, long long pmax,
                         long long ceiling = kDefaultChainCeiling);

/// Graded dimensions of the free graded-commutative algebra on generators
/// of the given degrees: even parity contributes 1/(1-q^d), odd (1+q^d).
std::vector<long long> predicted_stable_dims(
    const std::vector<std::pair<long long, bool>>& generators /* (degree, is_odd) */,
    long long pmax);

} // namespace gj

#endif
