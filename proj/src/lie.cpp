#include "gj/lie.hpp"

#include <algorithm>

namespace gj {

namespace {

void normalize_sparse(FinLieAlg::SparseVec& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    FinLieAlg::SparseVec out;
    for (const auto& [k, c] : v) {
        if (!out.empty() && out.back().first == k)
            out.back().second += c;
        else
            out.emplace_back(k, c);
    }
    std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
    v = std::move(out);
}

FinLieAlg::SparseVec negated(FinLieAlg::SparseVec v) {
    for (auto& [k, c] : v) c = -c;
    return v;
}

} // namespace

FinLieAlg FinLieAlg::from_structure(long long dim, std::vector<std::string> labels,
                                    std::map<std::pair<long long, long long>, SparseVec> structure) {
    if (dim < 1) throw schema_error("Lie algebra dimension must be positive");
    FinLieAlg g;
    g.dim_ = dim;
    g.labels_ = std::move(labels);
    if (g.labels_.empty())
        for (long long i = 0; i < dim; ++i) g.labels_.push_back("x" + std::to_string(i));
    for (auto& [key, v] : structure) {
        if (key.first >= key.second) throw schema_error("structure constants must be keyed by i < j");
        if (key.first < 0 || key.second >= dim) throw schema_error("structure index out of range");
        normalize_sparse(v);
        for (const auto& [k, c] : v)
            if (k < 0 || k >= dim) throw schema_error("structure target index out of range");
        if (!v.empty()) g.structure_.emplace(key, std::move(v));
    }
    g.validate_jacobi();
    return g;
}

FinLieAlg::SparseVec FinLieAlg::bracket_basis(long long i, long long j) const {
    if (i == j) return {};
    if (i < j) {
        auto it = structure_.find({i, j});
        return it == structure_.end() ? SparseVec{} : it->second;
    }
    auto it = structure_.find({j, i});
    return it == structure_.end() ? SparseVec{} : negated(it->second);
}

FinLieAlg::SparseVec FinLieAlg::bracket(const SparseVec& a, const SparseVec& b) const {
    SparseVec out;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) {
            const Rat c = ci * cj;
            for (const auto& [k, ck] : bracket_basis(i, j)) out.emplace_back(k, c * ck);
        }
    normalize_sparse(out);
    return out;
}

void FinLieAlg::validate_jacobi() const {
    for (long long i = 0; i < dim_; ++i)
        for (long long j = i + 1; j < dim_; ++j)
            for (long long k = j + 1; k < dim_; ++k) {
                SparseVec sum = bracket(bracket_basis(i, j), {{k, Rat(1)}});
                SparseVec t2 = bracket(bracket_basis(j, k), {{i, Rat(1)}});
                SparseVec t3 = bracket(bracket_basis(k, i), {{j, Rat(1)}});
                sum.insert(sum.end(), t2.begin(), t2.end());
                sum.insert(sum.end(), t3.begin(), t3.end());
                normalize_sparse(sum);
                if (!sum.empty()) throw internal_error("structure constants violate the Jacobi identity");
            }
}

// ------------------------------------------------------------ constructions

FinLieAlg FinLieAlg::abelian(long long n) {
    if (n < 1) throw domain_error("abelian algebra needs n >= 1");
    return from_structure(n, {}, {});
}

FinLieAlg FinLieAlg::from_matrix_basis(const std::vector<std::vector<std::vector<Rat>>>& basis,
                                       std::vector<std::string> labels) {
    if (basis.empty()) throw internal_error("empty matrix basis");
    const std::size_t s = basis[0].size();
    auto flatten = [s](const std::vector<std::vector<Rat>>& m) {
        std::vector<Rat> f;
        f.reserve(s * s);
        for (const auto& row : m) {
            if (row.size() != s) throw internal_error("ragged matrix in basis");
            for (const auto& v : row) f.push_back(v);
        }
        return f;
    };
    std::vector<std::vector<Rat>> cols;
    cols.reserve(basis.size());
    for (const auto& m : basis) cols.push_back(flatten(m));
    ColumnSpanSolver solver(cols);
    if (solver.rank() != static_cast<long long>(basis.size()))
        throw internal_error("matrix basis is linearly dependent");

    const long long dim = static_cast<long long>(basis.size());
    std::map<std::pair<long long, long long>, SparseVec> structure;
    for (long long i = 0; i < dim; ++i)
        for (long long j = i + 1; j < dim; ++j) {
            const auto& a = basis[static_cast<std::size_t>(i)];
            const auto& b = basis[static_cast<std::size_t>(j)];
            std::vector<Rat> comm(s * s, Rat(0));
            for (std::size_t r = 0; r < s; ++r)
                for (std::size_t c = 0; c < s; ++c) {
                    Rat acc(0);
                    for (std::size_t t = 0; t < s; ++t)
                        acc += a[r][t] * b[t][c] - b[r][t] * a[t][c];
                    comm[r * s + c] = acc;
                }
            std::vector<Rat> coords = solver.solve(comm); // throws if not closed
            SparseVec v;
            for (std::size_t k = 0; k < coords.size(); ++k)
                if (!coords[k].is_zero()) v.emplace_back(static_cast<long long>(k), coords[k]);
            if (!v.empty()) structure.emplace(std::make_pair(i, j), std::move(v));
        }
    return from_structure(dim, std::move(labels), std::move(structure));
}

namespace {

using Dense = std::vector<std::vector<Rat>>;

Dense zero_block(std::size_t s) { return Dense(s, std::vector<Rat>(s, Rat(0))); }

} // namespace

FinLieAlg FinLieAlg::gl(long long n) {
    if (n < 1) throw domain_error("gl needs n >= 1");
    std::vector<Dense> basis;
    std::vector<std::string> labels;
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b) {
            Dense m = zero_block(static_cast<std::size_t>(n));
            m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = Rat(1);
            basis.push_back(std::move(m));
            labels.push_back("E" + std::to_string(a) + "," + std::to_string(b));
        }
    FinLieAlg g = from_matrix_basis(basis, std::move(labels));
    if (g.dim() != n * n) throw internal_error("gl dimension mismatch");
    return g;
}

FinLieAlg FinLieAlg::sl(long long n) {
    if (n < 2) throw domain_error("sl needs n >= 2");
    std::vector<Dense> basis;
    std::vector<std::string> labels;
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b) {
            if (a == b) continue;
            Dense m = zero_block(static_cast<std::size_t>(n));
            m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = Rat(1);
            basis.push_back(std::move(m));
            labels.push_back("E" + std::to_string(a) + "," + std::to_string(b));
        }
    for (long long a = 0; a + 1 < n; ++a) {
        Dense m = zero_block(static_cast<std::size_t>(n));
        m[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = Rat(1);
        m[static_cast<std::size_t>(a + 1)][static_cast<std::size_t>(a + 1)] = Rat(-1);
        basis.push_back(std::move(m));
        labels.push_back("H" + std::to_string(a));
    }
    FinLieAlg g = from_matrix_basis(basis, std::move(labels));
    if (g.dim() != n * n - 1) throw internal_error("sl dimension mismatch");
    return g;
}

namespace {

/// Anti-fixed basis of a reflection (a,b) -> (ra(b), rb(a)) with sign
/// s(a,b) on a finite index block [lo, hi]. The reflection models the
/// restriction of an antidiagonal involution: T(E_ab) = s(a,b) E_{ra(b), rb(a)}.
FinLieAlg anti_fixed_family(long long lo, long long hi, bool signed_kind, long long shift,
                            const std::string& prefix, long long expected_dim) {
    // reflection (a,b) -> (-b - shift, -a - shift); sign (-1)^(a+b) when signed
    const long long n = hi - lo + 1;
    auto inb = [&](long long v) { return v >= lo && v <= hi; };
    std::vector<Dense> basis;
    std::vector<std::string> labels;
    auto off = [&](long long v) { return static_cast<std::size_t>(v - lo); };
    for (long long a = lo; a <= hi; ++a)
        for (long long b = lo; b <= hi; ++b) {
            const long long ra = -b - shift;
            const long long rb = -a - shift;
            if (!inb(ra) || !inb(rb)) throw internal_error("reflection leaves the block");
            const Rat s = signed_kind && detail::floor_mod(a + b, 2) == 1 ? Rat(-1) : Rat(1);
            if (ra == a && rb == b) {
                // fixed pair: survives only when the sign forces no constraint
                if (s == Rat(-1)) {
                    Dense m = zero_block(static_cast<std::size_t>(n));
                    m[off(a)][off(b)] = Rat(1);
                    basis.push_back(std::move(m));
                    labels.push_back(prefix + "(" + std::to_string(a) + "," + std::to_string(b) + ")");
                }
                continue;
            }
            if (std::make_pair(a, b) > std::make_pair(ra, rb)) continue; // one element per orbit
            Dense m = zero_block(static_cast<std::size_t>(n));
            m[off(a)][off(b)] = Rat(1);
            m[off(ra)][off(rb)] = -s;
            basis.push_back(std::move(m));
            labels.push_back(prefix + "(" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    FinLieAlg g = FinLieAlg::from_matrix_basis(basis, std::move(labels));
    if (g.dim() != expected_dim) throw internal_error("anti-fixed family dimension mismatch");
    return g;
}

} // namespace

FinLieAlg FinLieAlg::o_odd(long long l) {
    if (l < 1) throw domain_error("o_odd needs l >= 1");
    return anti_fixed_family(-l, l, false, 0, "B", l * (2 * l + 1));
}

FinLieAlg FinLieAlg::sp(long long l) {
    if (l < 1) throw domain_error("sp needs l >= 1");
    return anti_fixed_family(-l, l - 1, true, 1, "C", l * (2 * l + 1));
}

FinLieAlg FinLieAlg::o_even(long long l) {
    if (l < 1) throw domain_error("o_even needs l >= 1");
    return anti_fixed_family(-l, l - 1, false, 1, "D", l * (2 * l - 1));
}

FinLieAlg FinLieAlg::gl_over(long long n, const FinAssocAlg& a) {
    if (n < 1) throw domain_error("gl_over needs n >= 1");
    const long long da = a.dim();
    const long long dim = n * n * da;
    auto idx = [&](long long r, long long c, long long u) { return (r * n + c) * da + u; };
    std::map<std::pair<long long, long long>, SparseVec> structure;
    for (long long i = 0; i < dim; ++i) {
        const long long ui = i % da, ci = (i / da) % n, ri = i / (da * n);
        for (long long j = i + 1; j < dim; ++j) {
            const long long uj = j % da, cj = (j / da) % n, rj = j / (da * n);
            SparseVec v;
            // e_{ri,ci} u_i . e_{rj,cj} u_j = delta_{ci,rj} e_{ri,cj} (u_i u_j)
            if (ci == rj)
                for (const auto& [k, c] : a.mult(ui, uj)) v.emplace_back(idx(ri, cj, k), c);
            if (cj == ri)
                for (const auto& [k, c] : a.mult(uj, ui)) v.emplace_back(idx(rj, ci, k), -c);
            normalize_sparse(v);
            if (!v.empty()) structure.emplace(std::make_pair(i, j), std::move(v));
        }
    }
    std::vector<std::string> labels;
    for (long long r = 0; r < n; ++r)
        for (long long c = 0; c < n; ++c)
            for (long long u = 0; u < da; ++u)
                labels.push_back("E" + std::to_string(r) + "," + std::to_string(c) + "." +
                                 a.labels()[static_cast<std::size_t>(u)]);
    return from_structure(dim, std::move(labels), std::move(structure));
}

// ------------------------------------------------------------ CE complex

namespace {

/// Binomials C(n, k) clipped at the ceiling to avoid overflow.
long long binom_capped(long long n, long long k, long long cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long t = 1; t <= k; ++t) {
        // r * (n - k + t) / t stays integral at every step
        if (r > cap) return cap + 1;
        r = r * (n - k + t) / t;
    }
    return std::min(r, cap + 1);
}

/// Lexicographic rank of an increasing subset of {0..n-1}.
long long lex_rank(const std::vector<long long>& s, long long n) {
    long long rank = 0, prev = -1;
    const long long p = static_cast<long long>(s.size());
    for (long long t = 0; t < p; ++t) {
        for (long long v = prev + 1; v < s[static_cast<std::size_t>(t)]; ++v)
            rank += binom_capped(n - 1 - v, p - 1 - t, 1LL << 60);
        prev = s[static_cast<std::size_t>(t)];
    }
    return rank;
}

bool next_combination(std::vector<long long>& s, long long n) {
    const long long p = static_cast<long long>(s.size());
    for (long long t = p - 1; t >= 0; --t) {
        if (s[static_cast<std::size_t>(t)] < n - (p - t)) {
            ++s[static_cast<std::size_t>(t)];
            for (long long u = t + 1; u < p; ++u)
                s[static_cast<std::size_t>(u)] = s[static_cast<std::size_t>(u - 1)] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

SparseRatMatrix ce_boundary(const FinLieAlg& g, long long p, long long ceiling) {
    const long long n = g.dim();
    if (p < 1 || p > n) throw domain_error("boundary degree out of range");
    const long long rows = binom_capped(n, p - 1, ceiling);
    const long long cols = binom_capped(n, p, ceiling);
    if (rows > ceiling || cols > ceiling)
        throw resource_error("chain dimension exceeds the configured ceiling");
    SparseRatMatrix m(rows, cols);

    std::vector<long long> subset(static_cast<std::size_t>(p));
    for (long long t = 0; t < p; ++t) subset[static_cast<std::size_t>(t)] = t;
    long long col = 0;
    do {
        for (long long i = 0; i < p; ++i)
            for (long long j = i + 1; j < p; ++j) {
                const auto br = g.bracket_basis(subset[static_cast<std::size_t>(i)],
                                                subset[static_cast<std::size_t>(j)]);
                if (br.empty()) continue;
                // the displayed sign is (-1)^(i+j+1) with 1-based positions
                const int pos_sign = detail::floor_mod((i + 1) + (j + 1) + 1, 2) == 0 ? 1 : -1;
                std::vector<long long> rest;
                rest.reserve(static_cast<std::size_t>(p - 2));
                for (long long t = 0; t < p; ++t)
                    if (t != i && t != j) rest.push_back(subset[static_cast<std::size_t>(t)]);
                for (const auto& [k, c] : br) {
                    bool duplicate = false;
                    long long before = 0;
                    for (long long v : rest) {
                        if (v == k) duplicate = true;
                        if (v < k) ++before;
                    }
                    if (duplicate) continue;
                    std::vector<long long> target = rest;
                    target.insert(target.begin() + static_cast<std::ptrdiff_t>(before), k);
                    const int ins_sign = detail::floor_mod(before, 2) == 0 ? 1 : -1;
                    m.add(lex_rank(target, n), col, c * Rat(pos_sign * ins_sign));
                }
            }
        ++col;
    } while (next_combination(subset, n));
    if (col != cols) throw internal_error("combination enumeration out of sync");
    return m;
}

BettiReport lie_homology(const FinLieAlg& g, long long pmax, long long ceiling) {
    const long long n = g.dim();
    if (pmax < 0 || pmax > n) throw domain_error("pmax must lie in 0..dim");
    BettiReport rep;
    rep.pmax = pmax;
    rep.boundary_ranks.assign(static_cast<std::size_t>(pmax + 2), 0);
    for (long long p = 1; p <= pmax + 1; ++p) {
        if (p > n) break; // exterior algebra stops at the dimension
        rep.boundary_ranks[static_cast<std::size_t>(p)] = sparse_rank(ce_boundary(g, p, ceiling));
    }
    for (long long p = 0; p <= pmax; ++p) {
        const long long dim_p = binom_capped(n, p, ceiling);
        if (dim_p > ceiling) throw resource_error("chain dimension exceeds the configured ceiling");
        rep.chain_dims.push_back(dim_p);
        rep.betti.push_back(dim_p - rep.boundary_ranks[static_cast<std::size_t>(p)] -
                            rep.boundary_ranks[static_cast<std::size_t>(p + 1)]);
    }
    rep.validate();
    return rep;
}

std::vector<long long> predicted_stable_dims(
    const std::vector<std::pair<long long, bool>>& generators, long long pmax) {
    if (pmax < 0) throw domain_error("pmax must be nonnegative");
    std::vector<long long> dims(static_cast<std::size_t>(pmax + 1), 0);
    dims[0] = 1;
    for (const auto& [deg, odd] : generators) {
        if (deg <= 0) throw domain_error("generator degrees must be positive");
        std::vector<long long> next(dims.size(), 0);
        if (odd) {
            for (long long q = 0; q <= pmax; ++q) {
                next[static_cast<std::size_t>(q)] += dims[static_cast<std::size_t>(q)];
                if (q + deg <= pmax) next[static_cast<std::size_t>(q + deg)] += dims[static_cast<std::size_t>(q)];
            }
        } else {
            // multiply by 1/(1-q^deg): running sum along the degree lattice
            next = dims;
            for (long long q = deg; q <= pmax; ++q)
                next[static_cast<std::size_t>(q)] += next[static_cast<std::size_t>(q - deg)];
        }
        dims = std::move(next);
    }
    return dims;
}

} // namespace gj
