#include "gj/band.hpp"

#include <algorithm>
#include <tuple>

namespace gj {

std::string InvolutionSpec::name() const {
    switch (kind) {
        case Kind::transpose: return "transpose";
        case Kind::signed_antidiag: return "tau(" + std::to_string(l) + ")";
        case Kind::plain_antidiag: return "tau_s(" + std::to_string(l) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------- dense

DenseMat operator*(const DenseMat& a, const DenseMat& b) {
    if (a.half_ != b.half_) throw internal_error("dense size mismatch");
    DenseMat c(a.half_);
    for (long long i = -a.half_; i <= a.half_; ++i)
        for (long long k = -a.half_; k <= a.half_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (long long j = -a.half_; j <= a.half_; ++j) {
                const Rat& bkj = b.at(k, j);
                if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

DenseMat operator-(const DenseMat& a, const DenseMat& b) {
    if (a.half_ != b.half_) throw internal_error("dense size mismatch");
    DenseMat c(a.half_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] - b.a_[k];
    return c;
}

DenseMat DenseMat::transposed() const {
    DenseMat c(half_);
    for (long long i = -half_; i <= half_; ++i)
        for (long long j = -half_; j <= half_; ++j) c.at(j, i) = at(i, j);
    return c;
}

bool DenseMat::agree_on_window(const DenseMat& a, const DenseMat& b, long long m) {
    if (m > a.half_ || m > b.half_) throw internal_error("window larger than matrices");
    for (long long i = -m; i <= m; ++i)
        for (long long j = -m; j <= m; ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

// ----------------------------------------------------------- band matrix

void BandMatrix::set_diagonal(long long offset, QuasiPolySeq seq) {
    if (seq.is_zero())
        diags_.erase(offset);
    else
        diags_[offset] = std::move(seq);
}

BandMatrix BandMatrix::from_diagonal(long long offset, QuasiPolySeq seq) {
    BandMatrix m;
    m.set_diagonal(offset, std::move(seq));
    return m;
}

BandMatrix BandMatrix::identity() {
    return from_diagonal(0, QuasiPolySeq::constant(Rat(1)));
}

BandMatrix BandMatrix::matrix_unit(long long i, long long j, const Rat& c) {
    return from_diagonal(j - i, QuasiPolySeq::window_only(i, {c}));
}

BandMatrix BandMatrix::t_multiplication() {
    return from_diagonal(-1, QuasiPolySeq::constant(Rat(1)));
}

BandMatrix BandMatrix::t_derivative() {
    // entry at (i-1, i) is i, i.e. diagonal +1 carries the value i+1 at row i
    return from_diagonal(1, QuasiPolySeq::polynomial(Poly::from_coeffs({Rat(1), Rat(1)})));
}

BandMatrix BandMatrix::nonneg_projection() {
    return from_diagonal(
        0, QuasiPolySeq::make(QuasiPolyTail::zero(), QuasiPolyTail::constant(Rat(1)), 0, {}));
}

BandMatrix BandMatrix::builtin(const std::string& name, const std::vector<long long>& params,
                               const std::optional<Rat>& value) {
    if (name == "E") {
        if (params.size() != 2) throw domain_error("builtin E needs params {i, j}");
        return matrix_unit(params[0], params[1], value.value_or(Rat(1)));
    }
    if (!params.empty() || value)
        throw domain_error("builtin '" + name + "' takes no parameters");
    if (name == "P") return t_derivative();
    if (name == "Q") return t_multiplication();
    if (name == "I") return identity();
    if (name == "J") return nonneg_projection();
    throw domain_error("unknown builtin matrix '" + name + "'");
}

const QuasiPolySeq* BandMatrix::diagonal(long long offset) const {
    auto it = diags_.find(offset);
    return it == diags_.end() ? nullptr : &it->second;
}

Rat BandMatrix::entry(long long i, long long j) const {
    const QuasiPolySeq* d = diagonal(j - i);
    return d ? d->at(i) : Rat(0);
}

long long BandMatrix::bandwidth() const {
    long long n = 0;
    for (const auto& [d, seq] : diags_) n = std::max(n, d < 0 ? -d : d);
    return n;
}

BandMatrix BandMatrix::scaled(const Rat& c) const {
    BandMatrix r;
    if (c.is_zero()) return r;
    for (const auto& [d, seq] : diags_) r.set_diagonal(d, seq.scaled(c));
    return r;
}

BandMatrix operator+(const BandMatrix& a, const BandMatrix& b) {
    BandMatrix r = a;
    for (const auto& [d, seq] : b.diags_) {
        auto it = r.diags_.find(d);
        if (it == r.diags_.end())
            r.set_diagonal(d, seq);
        else
            r.set_diagonal(d, it->second + seq);
    }
    return r;
}

BandMatrix operator-(const BandMatrix& a, const BandMatrix& b) {
    return a + b.scaled(Rat(-1));
}

BandMatrix operator*(const BandMatrix& a, const BandMatrix& b) {
    // (XY)[i, i+d] = sum over e of X[i, i+e] * Y[i+e, i+d]
    BandMatrix r;
    for (const auto& [e, xs] : a.diags_)
        for (const auto& [f, ys] : b.diags_) {
            QuasiPolySeq term = xs * ys.shifted(e);
            long long d = e + f;
            auto it = r.diags_.find(d);
            if (it == r.diags_.end())
                r.set_diagonal(d, std::move(term));
            else
                r.set_diagonal(d, it->second + term);
        }
    return r;
}

BandMatrix linear_combine(const std::vector<std::pair<Rat, BandMatrix>>& terms) {
    BandMatrix r;
    for (const auto& [c, m] : terms) r = r + m.scaled(c);
    return r;
}

BandMatrix BandMatrix::involution(const InvolutionSpec& spec) const {
    BandMatrix r;
    switch (spec.kind) {
        case InvolutionSpec::Kind::transpose:
            // out[d](i) = X[-d](i + d)
            for (const auto& [d, seq] : diags_) r.set_diagonal(-d, seq.shifted(-d));
            break;
        case InvolutionSpec::Kind::signed_antidiag:
            // out[d](i) = (-1)^d X[d](l - d - i)
            for (const auto& [d, seq] : diags_) {
                QuasiPolySeq s = seq.reflected(spec.l - d);
                if (detail::floor_mod(d, 2) == 1) s = s.scaled(Rat(-1));
                r.set_diagonal(d, std::move(s));
            }
            break;
        case InvolutionSpec::Kind::plain_antidiag:
            for (const auto& [d, seq] : diags_) r.set_diagonal(d, seq.reflected(spec.l - d));
            break;
    }
    return r;
}

bool BandMatrix::is_anti_fixed(const InvolutionSpec& spec) const {
    return involution(spec) == scaled(Rat(-1));
}

BandClassification BandMatrix::classify() const {
    BandClassification c;
    c.finitely_supported = true;
    bool periodic = true;
    long long n = 1;
    for (const auto& [d, seq] : diags_) {
        if (!seq.finitely_supported()) c.finitely_supported = false;
        if (seq.purely_periodic())
            n = detail::lcm_ll(n, seq.left().period());
        else
            periodic = false;
    }
    if (periodic) c.period = n;
    return c;
}

DenseMat BandMatrix::truncate(long long n) const {
    DenseMat m(n);
    for (const auto& [i, j, v] : truncate_sparse(n)) m.at(i, j) = v;
    return m;
}

std::vector<std::tuple<long long, long long, Rat>> BandMatrix::truncate_sparse(long long n) const {
    std::vector<std::tuple<long long, long long, Rat>> out;
    for (const auto& [d, seq] : diags_) {
        if (d > 2 * n || d < -2 * n) continue;
        long long i_lo = std::max(-n, -n - d);
        long long i_hi = std::min(n, n - d);
        for (long long i = i_lo; i <= i_hi; ++i) {
            Rat v = seq.at(i);
            if (!v.is_zero()) out.emplace_back(i, i + d, v);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(std::get<0>(a), std::get<1>(a)) <
                         std::tie(std::get<0>(b), std::get<1>(b));
              });
    return out;
}

} // namespace gj
