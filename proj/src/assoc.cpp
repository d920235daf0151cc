#include "gj/assoc.hpp"

#include <algorithm>

namespace gj {

namespace {

void normalize_sparse(FinAssocAlg::SparseVec& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    FinAssocAlg::SparseVec out;
    for (const auto& [k, c] : v) {
        if (!out.empty() && out.back().first == k)
            out.back().second += c;
        else
            out.emplace_back(k, c);
    }
    std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
    v = std::move(out);
}

FinAssocAlg::SparseVec to_sparse(const std::vector<Rat>& dense) {
    FinAssocAlg::SparseVec v;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (!dense[i].is_zero()) v.emplace_back(static_cast<long long>(i), dense[i]);
    return v;
}

} // namespace

// ------------------------------------------------------------ FinAssocAlg

FinAssocAlg FinAssocAlg::make(long long dim, std::vector<Rat> unit,
                              std::vector<std::vector<SparseVec>> mult,
                              std::optional<std::vector<std::vector<Rat>>> involution,
                              std::vector<std::string> labels) {
    FinAssocAlg a;
    a.dim_ = dim;
    a.unit_ = std::move(unit);
    a.mult_ = std::move(mult);
    a.involution_ = std::move(involution);
    a.labels_ = std::move(labels);
    if (a.labels_.empty())
        for (long long i = 0; i < dim; ++i) a.labels_.push_back("a" + std::to_string(i));
    for (auto& row : a.mult_)
        for (auto& v : row) normalize_sparse(v);
    a.validate();
    return a;
}

const std::vector<std::vector<Rat>>& FinAssocAlg::involution_matrix() const {
    if (!involution_) throw domain_error("algebra carries no anti-involution");
    return *involution_;
}

FinAssocAlg::SparseVec FinAssocAlg::mul_vec(const SparseVec& a, const SparseVec& b) const {
    SparseVec out;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) {
            const Rat c = ci * cj;
            for (const auto& [k, ck] : mult(i, j)) out.emplace_back(k, c * ck);
        }
    normalize_sparse(out);
    return out;
}

FinAssocAlg::SparseVec FinAssocAlg::involution_of_basis(long long j) const {
    const auto& m = involution_matrix();
    SparseVec out;
    for (long long i = 0; i < dim_; ++i) {
        const Rat& c = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (!c.is_zero()) out.emplace_back(i, c);
    }
    return out;
}

void FinAssocAlg::validate() const {
    if (dim_ < 1) throw schema_error("algebra dimension must be positive");
    if (static_cast<long long>(unit_.size()) != dim_) throw schema_error("unit vector has wrong length");
    if (static_cast<long long>(mult_.size()) != dim_) throw schema_error("multiplication table has wrong shape");
    for (const auto& row : mult_) {
        if (static_cast<long long>(row.size()) != dim_)
            throw schema_error("multiplication table has wrong shape");
        for (const auto& v : row)
            for (const auto& [k, c] : v)
                if (k < 0 || k >= dim_) throw schema_error("multiplication table index out of range");
    }

    // associativity on basis triples
    for (long long i = 0; i < dim_; ++i)
        for (long long j = 0; j < dim_; ++j) {
            const SparseVec eij = mult(i, j);
            for (long long k = 0; k < dim_; ++k) {
                SparseVec left = mul_vec(eij, {{k, Rat(1)}});
                SparseVec right = mul_vec({{i, Rat(1)}}, mult(j, k));
                if (left != right) throw schema_error("multiplication table is not associative");
            }
        }

    // two-sided unit
    const SparseVec u = to_sparse(unit_);
    for (long long i = 0; i < dim_; ++i) {
        SparseVec e = {{i, Rat(1)}};
        if (mul_vec(u, e) != e || mul_vec(e, u) != e)
            throw schema_error("unit vector is not a two-sided unit");
    }

    if (involution_) {
        const auto& m = *involution_;
        if (static_cast<long long>(m.size()) != dim_) throw schema_error("involution matrix has wrong shape");
        for (const auto& row : m)
            if (static_cast<long long>(row.size()) != dim_)
                throw schema_error("involution matrix has wrong shape");
        auto apply = [&](const SparseVec& v) {
            SparseVec out;
            for (const auto& [j, c] : v)
                for (long long i = 0; i < dim_; ++i) {
                    const Rat& w = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    if (!w.is_zero()) out.emplace_back(i, c * w);
                }
            normalize_sparse(out);
            return out;
        };
        for (long long j = 0; j < dim_; ++j) {
            SparseVec e = {{j, Rat(1)}};
            if (apply(apply(e)) != e) throw schema_error("involution is not of order 2");
        }
        SparseVec un = to_sparse(unit_);
        if (apply(un) != un) throw schema_error("involution does not fix the unit");
        for (long long i = 0; i < dim_; ++i)
            for (long long j = 0; j < dim_; ++j) {
                SparseVec lhs = apply(mult(i, j));
                SparseVec rhs = mul_vec(apply({{j, Rat(1)}}), apply({{i, Rat(1)}}));
                if (lhs != rhs) throw schema_error("involution is not an anti-automorphism");
            }
    }
}

// ----------------------------------------------------------- constructions

FinAssocAlg FinAssocAlg::field() {
    std::vector<std::vector<SparseVec>> mult(1, std::vector<SparseVec>(1, SparseVec{{0, Rat(1)}}));
    std::vector<std::vector<Rat>> iota(1, std::vector<Rat>(1, Rat(1)));
    return make(1, {Rat(1)}, std::move(mult), iota, {"1"});
}

FinAssocAlg FinAssocAlg::matrix_algebra(long long n) {
    if (n < 1) throw domain_error("matrix algebra needs n >= 1");
    const long long d = n * n;
    auto idx = [n](long long a, long long b) { return a * n + b; };
    std::vector<std::vector<SparseVec>> mult(static_cast<std::size_t>(d),
                                             std::vector<SparseVec>(static_cast<std::size_t>(d)));
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            for (long long c = 0; c < n; ++c)
                for (long long e = 0; e < n; ++e)
                    if (b == c)
                        mult[static_cast<std::size_t>(idx(a, b))][static_cast<std::size_t>(idx(c, e))] = {
                            {idx(a, e), Rat(1)}};
    std::vector<Rat> unit(static_cast<std::size_t>(d), Rat(0));
    for (long long a = 0; a < n; ++a) unit[static_cast<std::size_t>(idx(a, a))] = Rat(1);
    std::vector<std::vector<Rat>> iota(static_cast<std::size_t>(d),
                                       std::vector<Rat>(static_cast<std::size_t>(d), Rat(0)));
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            iota[static_cast<std::size_t>(idx(b, a))][static_cast<std::size_t>(idx(a, b))] = Rat(1);
    std::vector<std::string> labels;
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            labels.push_back("E" + std::to_string(a) + std::to_string(b));
    return make(d, std::move(unit), std::move(mult), std::move(iota), std::move(labels));
}

FinAssocAlg FinAssocAlg::dual_numbers() {
    // basis {1, eps}, eps^2 = 0
    std::vector<std::vector<SparseVec>> mult(2, std::vector<SparseVec>(2));
    mult[0][0] = {{0, Rat(1)}};
    mult[0][1] = {{1, Rat(1)}};
    mult[1][0] = {{1, Rat(1)}};
    mult[1][1] = {};
    std::vector<std::vector<Rat>> iota = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    return make(2, {Rat(1), Rat(0)}, std::move(mult), iota, {"1", "eps"});
}

FinAssocAlg FinAssocAlg::product_field(long long n) {
    if (n < 1) throw domain_error("product of fields needs n >= 1");
    std::vector<std::vector<SparseVec>> mult(static_cast<std::size_t>(n),
                                             std::vector<SparseVec>(static_cast<std::size_t>(n)));
    for (long long i = 0; i < n; ++i) mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = {{i, Rat(1)}};
    std::vector<Rat> unit(static_cast<std::size_t>(n), Rat(1));
    std::vector<std::vector<Rat>> iota(static_cast<std::size_t>(n),
                                       std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
    for (long long i = 0; i < n; ++i) iota[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Rat(1);
    std::vector<std::string> labels;
    for (long long i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    return make(n, std::move(unit), std::move(mult), std::move(iota), std::move(labels));
}

namespace {

int find_group_identity(const std::vector<std::vector<int>>& cayley) {
    const long long m = static_cast<long long>(cayley.size());
    for (long long e = 0; e < m; ++e) {
        bool ok = true;
        for (long long h = 0; h < m && ok; ++h)
            if (cayley[static_cast<std::size_t>(e)][static_cast<std::size_t>(h)] != h ||
                cayley[static_cast<std::size_t>(h)][static_cast<std::size_t>(e)] != h)
                ok = false;
        if (ok) return static_cast<int>(e);
    }
    throw domain_error("Cayley table has no identity");
}

void validate_cayley(const std::vector<std::vector<int>>& cayley) {
    const long long m = static_cast<long long>(cayley.size());
    if (m < 1) throw domain_error("empty Cayley table");
    for (const auto& row : cayley) {
        if (static_cast<long long>(row.size()) != m) throw domain_error("Cayley table is not square");
        for (int v : row)
            if (v < 0 || v >= m) throw domain_error("Cayley table entry out of range");
    }
    for (long long g = 0; g < m; ++g)
        for (long long h = 0; h < m; ++h)
            for (long long k = 0; k < m; ++k) {
                int gh = cayley[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
                int hk = cayley[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)];
                if (cayley[static_cast<std::size_t>(gh)][static_cast<std::size_t>(k)] !=
                    cayley[static_cast<std::size_t>(g)][static_cast<std::size_t>(hk)])
                    throw domain_error("Cayley table is not associative");
            }
    find_group_identity(cayley);
    // Latin square (with associativity and identity this yields inverses)
    for (long long g = 0; g < m; ++g) {
        std::vector<bool> seen_row(static_cast<std::size_t>(m)), seen_col(static_cast<std::size_t>(m));
        for (long long h = 0; h < m; ++h) {
            seen_row[static_cast<std::size_t>(cayley[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)])] = true;
            seen_col[static_cast<std::size_t>(cayley[static_cast<std::size_t>(h)][static_cast<std::size_t>(g)])] = true;
        }
        for (long long h = 0; h < m; ++h)
            if (!seen_row[static_cast<std::size_t>(h)] || !seen_col[static_cast<std::size_t>(h)])
                throw domain_error("Cayley table is not a Latin square");
    }
}

} // namespace

FinAssocAlg FinAssocAlg::group_algebra(const std::vector<std::vector<int>>& cayley) {
    validate_cayley(cayley);
    const long long m = static_cast<long long>(cayley.size());
    const int e = find_group_identity(cayley);
    std::vector<std::vector<SparseVec>> mult(static_cast<std::size_t>(m),
                                             std::vector<SparseVec>(static_cast<std::size_t>(m)));
    for (long long g = 0; g < m; ++g)
        for (long long h = 0; h < m; ++h)
            mult[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] = {
                {cayley[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)], Rat(1)}};
    std::vector<Rat> unit(static_cast<std::size_t>(m), Rat(0));
    unit[static_cast<std::size_t>(e)] = Rat(1);
    // anti-involution g -> g^{-1}
    std::vector<std::vector<Rat>> iota(static_cast<std::size_t>(m),
                                       std::vector<Rat>(static_cast<std::size_t>(m), Rat(0)));
    for (long long g = 0; g < m; ++g) {
        long long inv = -1;
        for (long long h = 0; h < m; ++h)
            if (cayley[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] == e) inv = h;
        iota[static_cast<std::size_t>(inv)][static_cast<std::size_t>(g)] = Rat(1);
    }
    std::vector<std::string> labels;
    for (long long g = 0; g < m; ++g) labels.push_back("g" + std::to_string(g));
    return make(m, std::move(unit), std::move(mult), std::move(iota), std::move(labels));
}

// ------------------------------------------------------------ GroupAction

GroupAction GroupAction::make(std::vector<std::vector<int>> cayley,
                              std::vector<std::vector<std::vector<Rat>>> matrices,
                              const FinAssocAlg& algebra) {
    validate_cayley(cayley);
    GroupAction g;
    g.cayley = std::move(cayley);
    g.matrices = std::move(matrices);
    g.identity = find_group_identity(g.cayley);
    const long long m = g.order();
    const long long d = algebra.dim();
    if (static_cast<long long>(g.matrices.size()) != m)
        throw schema_error("one action matrix per group element required");
    for (const auto& mat : g.matrices) {
        if (static_cast<long long>(mat.size()) != d) throw schema_error("action matrix has wrong shape");
        for (const auto& row : mat)
            if (static_cast<long long>(row.size()) != d) throw schema_error("action matrix has wrong shape");
    }

    auto apply = [&](long long el, const FinAssocAlg::SparseVec& v) {
        FinAssocAlg::SparseVec out;
        const auto& mat = g.matrices[static_cast<std::size_t>(el)];
        for (const auto& [j, c] : v)
            for (long long i = 0; i < d; ++i) {
                const Rat& w = mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (!w.is_zero()) out.emplace_back(i, c * w);
            }
        normalize_sparse(out);
        return out;
    };

    // identity acts trivially; composition follows the Cayley table
    for (long long j = 0; j < d; ++j) {
        FinAssocAlg::SparseVec e = {{j, Rat(1)}};
        if (apply(g.identity, e) != e) throw schema_error("identity element must act trivially");
    }
    for (long long a = 0; a < m; ++a)
        for (long long b = 0; b < m; ++b)
            for (long long j = 0; j < d; ++j) {
                FinAssocAlg::SparseVec e = {{j, Rat(1)}};
                auto lhs = apply(a, apply(b, e));
                auto rhs = apply(g.cayley[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)], e);
                if (lhs != rhs) throw schema_error("action matrices do not compose per the Cayley table");
            }
    // each element acts by an algebra automorphism
    const FinAssocAlg::SparseVec u = to_sparse(algebra.unit());
    for (long long a = 0; a < m; ++a) {
        if (apply(a, u) != u) throw schema_error("group action must fix the unit");
        for (long long i = 0; i < d; ++i)
            for (long long j = 0; j < d; ++j) {
                auto lhs = apply(a, algebra.mult(i, j));
                auto rhs = algebra.mul_vec(apply(a, {{i, Rat(1)}}), apply(a, {{j, Rat(1)}}));
                if (lhs != rhs) throw schema_error("group does not act by algebra automorphisms");
            }
    }
    return g;
}

GroupAction GroupAction::cyclic_shift(long long n) {
    if (n < 1) throw domain_error("cyclic action needs n >= 1");
    std::vector<std::vector<int>> cayley(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            cayley[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                static_cast<int>(detail::floor_mod(a + b, n));
    std::vector<std::vector<std::vector<Rat>>> mats(
        static_cast<std::size_t>(n),
        std::vector<std::vector<Rat>>(static_cast<std::size_t>(n),
                                      std::vector<Rat>(static_cast<std::size_t>(n), Rat(0))));
    // element a sends the idempotent e_k to e_{k-a mod n}
    for (long long a = 0; a < n; ++a)
        for (long long k = 0; k < n; ++k)
            mats[static_cast<std::size_t>(a)][static_cast<std::size_t>(detail::floor_mod(k - a, n))]
                [static_cast<std::size_t>(k)] = Rat(1);
    return make(std::move(cayley), std::move(mats), FinAssocAlg::product_field(n));
}

FinAssocAlg twisted_group_algebra(const FinAssocAlg& a, const GroupAction& g) {
    const long long da = a.dim();
    const long long m = g.order();
    const long long d = da * m;
    auto idx = [m](long long ai, long long gi) { return ai * m + gi; };
    std::vector<std::vector<FinAssocAlg::SparseVec>> mult(
        static_cast<std::size_t>(d), std::vector<FinAssocAlg::SparseVec>(static_cast<std::size_t>(d)));
    for (long long ai = 0; ai < da; ++ai)
        for (long long gi = 0; gi < m; ++gi)
            for (long long bi = 0; bi < da; ++bi)
                for (long long hi = 0; hi < m; ++hi) {
                    // (e_ai (x) [gi]) (e_bi (x) [hi]) = e_ai * gi(e_bi) (x) [gi hi]
                    FinAssocAlg::SparseVec out;
                    const long long gh = g.cayley[static_cast<std::size_t>(gi)][static_cast<std::size_t>(hi)];
                    const auto& mat = g.matrices[static_cast<std::size_t>(gi)];
                    for (long long c = 0; c < da; ++c) {
                        const Rat& w = mat[static_cast<std::size_t>(c)][static_cast<std::size_t>(bi)];
                        if (w.is_zero()) continue;
                        for (const auto& [k, ck] : a.mult(ai, c)) out.emplace_back(idx(k, gh), w * ck);
                    }
                    normalize_sparse(out);
                    mult[static_cast<std::size_t>(idx(ai, gi))][static_cast<std::size_t>(idx(bi, hi))] =
                        std::move(out);
                }
    std::vector<Rat> unit(static_cast<std::size_t>(d), Rat(0));
    for (long long ai = 0; ai < da; ++ai)
        unit[static_cast<std::size_t>(idx(ai, g.identity))] = a.unit()[static_cast<std::size_t>(ai)];
    std::vector<std::string> labels;
    for (long long ai = 0; ai < da; ++ai)
        for (long long gi = 0; gi < m; ++gi)
            labels.push_back(a.labels()[static_cast<std::size_t>(ai)] + "[" + std::to_string(gi) + "]");
    return FinAssocAlg::make(d, std::move(unit), std::move(mult), std::nullopt, std::move(labels));
}

std::vector<long long> twisted_cyclic_iso(long long n) {
    if (n < 2) throw domain_error("cyclic twist isomorphism needs n > 1");
    std::vector<long long> image(static_cast<std::size_t>(n * n));
    for (long long k = 0; k < n; ++k)
        for (long long i = 0; i < n; ++i)
            image[static_cast<std::size_t>(k * n + i)] = k * n + detail::floor_mod(k + i, n);
    return image;
}

// ------------------------------------------------------------ chain level

long long tensor_index(const std::vector<long long>& tuple, long long dim) {
    long long idx = 0, w = 1;
    for (long long r : tuple) {
        idx += r * w;
        w *= dim;
    }
    return idx;
}

std::vector<long long> tensor_tuple(long long index, long long dim, long long p) {
    std::vector<long long> t(static_cast<std::size_t>(p + 1));
    for (auto& v : t) {
        v = index % dim;
        index /= dim;
    }
    return t;
}

long long chain_dim_checked(long long dim, long long p, long long ceiling) {
    long long d = 1;
    for (long long s = 0; s <= p; ++s) {
        if (d > ceiling / dim + 1) throw resource_error("chain dimension exceeds the configured ceiling");
        d *= dim;
        if (d > ceiling) throw resource_error("chain dimension exceeds the configured ceiling");
    }
    return d;
}

namespace {

int pow_sign(long long e) { return detail::floor_mod(e, 2) == 0 ? 1 : -1; }

} // namespace

SparseChainVec apply_cyclic(const FinAssocAlg& r, long long p, const SparseChainVec& v) {
    SparseChainVec out;
    const long long d = r.dim();
    const Rat sgn(pow_sign(p));
    for (const auto& [idx, c] : v) {
        auto t = tensor_tuple(idx, d, p);
        std::rotate(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(p), t.end());
        out[tensor_index(t, d)] += c * sgn;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

SparseChainVec apply_reversal(const FinAssocAlg& r, long long p, const SparseChainVec& v) {
    SparseChainVec out;
    const long long d = r.dim();
    const Rat sgn(pow_sign(p * (p + 1) / 2));
    for (const auto& [idx, c] : v) {
        const auto t = tensor_tuple(idx, d, p);
        // slot 0 keeps r_0, slots 1..p are reversed; every factor runs
        // through the involution
        std::vector<long long> order(static_cast<std::size_t>(p + 1));
        order[0] = t[0];
        for (long long s = 1; s <= p; ++s)
            order[static_cast<std::size_t>(s)] = t[static_cast<std::size_t>(p + 1 - s)];
        // expand the tensor product of involution images
        std::vector<std::pair<std::vector<long long>, Rat>> partial = {{{}, c * sgn}};
        for (long long s = 0; s <= p; ++s) {
            std::vector<std::pair<std::vector<long long>, Rat>> next;
            for (const auto& [pref, pc] : partial)
                for (const auto& [i, w] : r.involution_of_basis(order[static_cast<std::size_t>(s)])) {
                    auto np = pref;
                    np.push_back(i);
                    next.emplace_back(std::move(np), pc * w);
                }
            partial = std::move(next);
        }
        for (const auto& [tuple, pc] : partial) out[tensor_index(tuple, d)] += pc;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

SparseChainVec apply_boundary(const FinAssocAlg& r, long long p, const SparseChainVec& v) {
    SparseChainVec out;
    if (p == 0) return out;
    const long long d = r.dim();
    for (const auto& [idx, c] : v) {
        const auto t = tensor_tuple(idx, d, p);
        for (long long i = 0; i < p; ++i) {
            const Rat sgn = Rat(pow_sign(i)) * c;
            for (const auto& [k, ck] : r.mult(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i + 1)])) {
                std::vector<long long> nt;
                nt.reserve(static_cast<std::size_t>(p));
                for (long long s = 0; s < i; ++s) nt.push_back(t[static_cast<std::size_t>(s)]);
                nt.push_back(k);
                for (long long s = i + 2; s <= p; ++s) nt.push_back(t[static_cast<std::size_t>(s)]);
                out[tensor_index(nt, d)] += sgn * ck;
            }
        }
        const Rat sgn = Rat(pow_sign(p)) * c;
        for (const auto& [k, ck] : r.mult(t[static_cast<std::size_t>(p)], t[0])) {
            std::vector<long long> nt;
            nt.reserve(static_cast<std::size_t>(p));
            nt.push_back(k);
            for (long long s = 1; s < p; ++s) nt.push_back(t[static_cast<std::size_t>(s)]);
            out[tensor_index(nt, d)] += sgn * ck;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

SparseRatMatrix hochschild_boundary(const FinAssocAlg& r, long long p, long long ceiling) {
    const long long cols = chain_dim_checked(r.dim(), p, ceiling);
    const long long rows = p == 0 ? 0 : chain_dim_checked(r.dim(), p - 1, ceiling);
    SparseRatMatrix m(rows, cols);
    if (p == 0) return m;
    for (long long t = 0; t < cols; ++t) {
        SparseChainVec img = apply_boundary(r, p, {{t, Rat(1)}});
        for (const auto& [row, val] : img) m.add(row, t, val);
    }
    return m;
}

// ---------------------------------------------------------------- homology

namespace {

struct RealizedComplex {
    std::vector<long long> dims;             // 0..pmax+1
    std::vector<SparseRatMatrix> boundaries; // [p]: degree p -> p-1, p >= 1
};

BettiReport betti_from(const RealizedComplex& c, long long pmax) {
    BettiReport rep;
    rep.pmax = pmax;
    rep.boundary_ranks.assign(static_cast<std::size_t>(pmax + 2), 0);
    for (long long p = 1; p <= pmax + 1; ++p)
        rep.boundary_ranks[static_cast<std::size_t>(p)] =
            sparse_rank(c.boundaries[static_cast<std::size_t>(p)]);
    for (long long p = 0; p <= pmax; ++p) {
        rep.chain_dims.push_back(c.dims[static_cast<std::size_t>(p)]);
        rep.betti.push_back(c.dims[static_cast<std::size_t>(p)] -
                            rep.boundary_ranks[static_cast<std::size_t>(p)] -
                            rep.boundary_ranks[static_cast<std::size_t>(p + 1)]);
    }
    rep.validate();
    return rep;
}

enum class GroupKind { cyclic, dihedral };

SparseChainVec average_orbit(const FinAssocAlg& r, long long p, const SparseChainVec& v,
                             GroupKind kind, int y_sign) {
    SparseChainVec acc;
    auto add_to = [&acc](const SparseChainVec& w, const Rat& s) {
        for (const auto& [k, c] : w) {
            acc[k] += c * s;
        }
    };
    SparseChainVec cur = v;
    add_to(cur, Rat(1));
    for (long long a = 1; a <= p; ++a) {
        cur = apply_cyclic(r, p, cur);
        add_to(cur, Rat(1));
    }
    long long order = p + 1;
    if (kind == GroupKind::dihedral) {
        SparseChainVec rev = apply_reversal(r, p, v);
        add_to(rev, Rat(y_sign));
        for (long long a = 1; a <= p; ++a) {
            rev = apply_cyclic(r, p, rev);
            add_to(rev, Rat(y_sign));
        }
        order *= 2;
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
    SparseChainVec out;
    const Rat inv(1, order);
    for (const auto& [k, c] : acc) out[k] = c * inv;
    return out;
}

RealizedComplex coinvariant_complex_averaging(const FinAssocAlg& r, long long pmax,
                                              long long ceiling, GroupKind kind, int y_sign) {
    RealizedComplex c;
    std::vector<SparseSpanSolver> solvers(static_cast<std::size_t>(pmax + 2));
    std::vector<std::vector<SparseChainVec>> kept(static_cast<std::size_t>(pmax + 2));
    for (long long p = 0; p <= pmax + 1; ++p) {
        const long long full = chain_dim_checked(r.dim(), p, ceiling);
        for (long long t = 0; t < full; ++t) {
            SparseChainVec col = average_orbit(r, p, {{t, Rat(1)}}, kind, y_sign);
            if (col.empty()) continue;
            if (solvers[static_cast<std::size_t>(p)].add_column(col))
                kept[static_cast<std::size_t>(p)].push_back(std::move(col));
        }
        c.dims.push_back(solvers[static_cast<std::size_t>(p)].rank());
    }
    c.boundaries.emplace_back(0, 0); // placeholder for p = 0
    for (long long p = 1; p <= pmax + 1; ++p) {
        SparseRatMatrix m(c.dims[static_cast<std::size_t>(p - 1)], c.dims[static_cast<std::size_t>(p)]);
        const auto& basis = kept[static_cast<std::size_t>(p)];
        for (std::size_t k = 0; k < basis.size(); ++k) {
            SparseChainVec w = apply_boundary(r, p, basis[k]);
            w = average_orbit(r, p - 1, w, kind, y_sign);
            std::vector<Rat> coords = solvers[static_cast<std::size_t>(p - 1)].solve(w);
            for (std::size_t i = 0; i < coords.size(); ++i)
                if (!coords[i].is_zero())
                    m.add(static_cast<long long>(i), static_cast<long long>(k), coords[i]);
        }
        c.boundaries.push_back(std::move(m));
    }
    return c;
}

RealizedComplex coinvariant_complex_quotient(const FinAssocAlg& r, long long pmax,
                                             long long ceiling, GroupKind kind, int y_sign) {
    RealizedComplex c;
    std::vector<SparseSpanSolver> rel(static_cast<std::size_t>(pmax + 2));
    std::vector<std::vector<long long>> free_rows(static_cast<std::size_t>(pmax + 2));
    for (long long p = 0; p <= pmax + 1; ++p) {
        const long long full = chain_dim_checked(r.dim(), p, ceiling);
        auto& solver = rel[static_cast<std::size_t>(p)];
        for (long long t = 0; t < full; ++t) {
            SparseChainVec unit = {{t, Rat(1)}};
            SparseChainVec rx = apply_cyclic(r, p, unit);
            rx[t] -= Rat(1);
            std::erase_if(rx, [](const auto& kv) { return kv.second.is_zero(); });
            if (!rx.empty()) solver.add_column(rx);
            if (kind == GroupKind::dihedral) {
                SparseChainVec ry = apply_reversal(r, p, unit);
                if (y_sign < 0)
                    for (auto& [k, v] : ry) v = -v;
                ry[t] -= Rat(1);
                std::erase_if(ry, [](const auto& kv) { return kv.second.is_zero(); });
                if (!ry.empty()) solver.add_column(ry);
            }
        }
        std::vector<bool> is_lead(static_cast<std::size_t>(full), false);
        for (long long l : solver.leads()) is_lead[static_cast<std::size_t>(l)] = true;
        for (long long t = 0; t < full; ++t)
            if (!is_lead[static_cast<std::size_t>(t)]) free_rows[static_cast<std::size_t>(p)].push_back(t);
        c.dims.push_back(static_cast<long long>(free_rows[static_cast<std::size_t>(p)].size()));
    }
    c.boundaries.emplace_back(0, 0);
    for (long long p = 1; p <= pmax + 1; ++p) {
        const auto& rows_prev = free_rows[static_cast<std::size_t>(p - 1)];
        std::map<long long, long long> row_index;
        for (std::size_t i = 0; i < rows_prev.size(); ++i) row_index[rows_prev[i]] = static_cast<long long>(i);
        SparseRatMatrix m(c.dims[static_cast<std::size_t>(p - 1)], c.dims[static_cast<std::size_t>(p)]);
        const auto& rows_here = free_rows[static_cast<std::size_t>(p)];
        for (std::size_t k = 0; k < rows_here.size(); ++k) {
            SparseChainVec w = apply_boundary(r, p, {{rows_here[k], Rat(1)}});
            w = rel[static_cast<std::size_t>(p - 1)].reduce_mod(w);
            for (const auto& [row, val] : w) {
                auto it = row_index.find(row);
                if (it == row_index.end())
                    throw internal_error("quotient representative hit a relation lead");
                m.add(it->second, static_cast<long long>(k), val);
            }
        }
        c.boundaries.push_back(std::move(m));
    }
    return c;
}

RealizedComplex coinvariant_complex(const FinAssocAlg& r, long long pmax, long long ceiling,
                                    GroupKind kind, int y_sign, CoinvariantRealization real) {
    return real == CoinvariantRealization::averaging
               ? coinvariant_complex_averaging(r, pmax, ceiling, kind, y_sign)
               : coinvariant_complex_quotient(r, pmax, ceiling, kind, y_sign);
}

} // namespace

BettiReport hochschild_homology(const FinAssocAlg& r, long long pmax, long long ceiling) {
    if (pmax < 0) throw domain_error("pmax must be nonnegative");
    BettiReport rep;
    rep.pmax = pmax;
    rep.boundary_ranks.assign(static_cast<std::size_t>(pmax + 2), 0);
    // rank each boundary as it is assembled; the big degrees never coexist
    for (long long p = 1; p <= pmax + 1; ++p)
        rep.boundary_ranks[static_cast<std::size_t>(p)] =
            sparse_rank(hochschild_boundary(r, p, ceiling));
    for (long long p = 0; p <= pmax; ++p) {
        const long long dim_p = chain_dim_checked(r.dim(), p, ceiling);
        rep.chain_dims.push_back(dim_p);
        rep.betti.push_back(dim_p - rep.boundary_ranks[static_cast<std::size_t>(p)] -
                            rep.boundary_ranks[static_cast<std::size_t>(p + 1)]);
    }
    rep.validate();
    return rep;
}

BettiReport cyclic_homology(const FinAssocAlg& r, long long pmax, long long ceiling,
                            CoinvariantRealization real) {
    if (pmax < 0) throw domain_error("pmax must be nonnegative");
    return betti_from(coinvariant_complex(r, pmax, ceiling, GroupKind::cyclic, +1, real), pmax);
}

BettiReport dihedral_homology(const FinAssocAlg& r, int sign, long long pmax, long long ceiling,
                              CoinvariantRealization real) {
    if (pmax < 0) throw domain_error("pmax must be nonnegative");
    if (sign != 1 && sign != -1) throw domain_error("sign must be +1 or -1");
    if (!r.has_involution()) throw domain_error("dihedral homology needs an anti-involution");
    return betti_from(coinvariant_complex(r, pmax, ceiling, GroupKind::dihedral, sign, real), pmax);
}

PeriodicityReport periodicity_check(const FinAssocAlg& r, long long pmax, long long ceiling) {
    PeriodicityReport rep;
    rep.hh = hochschild_homology(r, pmax, ceiling);
    rep.hc = cyclic_homology(r, pmax, ceiling);
    auto hc_at = [&](long long n) { return n < 0 ? 0 : rep.hc.betti[static_cast<std::size_t>(n)]; };
    for (long long n = 1; n <= pmax - 1; ++n) {
        PeriodicityWindow w;
        w.n = n;
        w.hh_n = rep.hh.betti[static_cast<std::size_t>(n)];
        w.hh_nm1 = rep.hh.betti[static_cast<std::size_t>(n - 1)];
        w.hc_n = hc_at(n);
        w.hc_nm2 = hc_at(n - 2);
        w.applicable = (w.hh_n == 0 && w.hh_nm1 == 0);
        w.holds = !w.applicable || (w.hc_n == w.hc_nm2);
        if (!w.holds) rep.all_hold = false;
        rep.windows.push_back(w);
    }
    return rep;
}

} // namespace gj
