#include "gj/rank.hpp"

#include <algorithm>
#include <limits>

namespace gj {

// ------------------------------------------------------ sparse assembly

void SparseRatMatrix::add(long long row, long long col, const Rat& v) {
    if (row < 0 || row >= nrows_ || col < 0 || col >= ncols_)
        throw internal_error("sparse entry out of range");
    if (v.is_zero()) return;
    auto& r = rows_[static_cast<std::size_t>(row)];
    if (!r.empty() && r.back().first == col) {
        r.back().second += v;
        if (r.back().second.is_zero()) r.pop_back();
        return;
    }
    if (!r.empty() && r.back().first > col) dirty_ = true;
    r.emplace_back(col, v);
}

void SparseRatMatrix::normalize() const {
    if (!dirty_) return;
    for (auto& r : rows_) {
        std::sort(r.begin(), r.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Row merged;
        merged.reserve(r.size());
        for (auto& [c, v] : r) {
            if (!merged.empty() && merged.back().first == c)
                merged.back().second += v;
            else
                merged.emplace_back(c, std::move(v));
        }
        std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
        merged.shrink_to_fit();
        r = std::move(merged);
    }
    dirty_ = false;
}

const std::vector<SparseRatMatrix::Row>& SparseRatMatrix::rows() const {
    normalize();
    return rows_;
}

long long SparseRatMatrix::nnz() const {
    normalize();
    long long n = 0;
    for (const auto& r : rows_) n += static_cast<long long>(r.size());
    return n;
}

std::map<long long, Rat> SparseRatMatrix::apply(const std::map<long long, Rat>& x) const {
    normalize();
    std::map<long long, Rat> y;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rat acc(0);
        for (const auto& [c, v] : rows_[i]) {
            auto it = x.find(c);
            if (it != x.end()) acc += v * it->second;
        }
        if (!acc.is_zero()) y.emplace(static_cast<long long>(i), acc);
    }
    return y;
}

// --------------------------------------------------- elimination kernel

std::vector<SparseRatMatrix::Row> SparseRatMatrix::release_rows() {
    normalize();
    std::vector<Row> out = std::move(rows_);
    rows_.assign(static_cast<std::size_t>(nrows_), {});
    return out;
}

long long sparse_rank(SparseRatMatrix m) {
    using Row = SparseRatMatrix::Row;
    const long long src_rows = m.nrows();
    const long long src_cols = m.ncols();
    std::vector<Row> rows = m.release_rows();

    // eliminate on the orientation with fewer rows: every surplus row
    // beyond the rank has to be ground down to zero
    long long ncols = src_cols;
    if (src_rows > src_cols) {
        std::vector<Row> t(static_cast<std::size_t>(src_cols));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (auto& [c, v] : rows[i])
                t[static_cast<std::size_t>(c)].emplace_back(static_cast<long long>(i), std::move(v));
            Row().swap(rows[i]);
        }
        rows = std::move(t);
        ncols = src_rows;
    }
    std::erase_if(rows, [](const Row& r) { return r.empty(); });

    std::vector<long long> col_count(static_cast<std::size_t>(ncols), 0);
    std::vector<std::vector<std::size_t>> col_rows(static_cast<std::size_t>(ncols));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [c, v] : rows[i]) {
            ++col_count[static_cast<std::size_t>(c)];
            col_rows[static_cast<std::size_t>(c)].push_back(i);
        }

    auto find_col = [](const Row& r, long long c) {
        auto it = std::lower_bound(r.begin(), r.end(), c,
                                   [](const auto& e, long long col) { return e.first < col; });
        return (it != r.end() && it->first == c) ? it : r.end();
    };

    std::vector<bool> row_done(rows.size(), false);
    long long active = static_cast<long long>(rows.size());
    long long rank = 0;

    while (active > 0) {
        // Markowitz-style pivot: among the first few shortest active rows
        // minimise (nnz_row - 1)(nnz_col - 1); ties resolved by (row, col)
        std::size_t cap = 0;
        bool have = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (row_done[i]) continue;
            if (!have || rows[i].size() < cap) {
                cap = rows[i].size();
                have = true;
            }
        }
        if (!have) break;
        long long best_row = -1, best_col = 0;
        unsigned long long best_score = std::numeric_limits<unsigned long long>::max();
        int candidates = 0;
        for (std::size_t i = 0; i < rows.size() && candidates < 16; ++i) {
            if (row_done[i] || rows[i].size() > cap) continue;
            ++candidates;
            const unsigned long long rsz = rows[i].size() - 1;
            for (const auto& [c, v] : rows[i]) {
                const unsigned long long score =
                    rsz * static_cast<unsigned long long>(col_count[static_cast<std::size_t>(c)] - 1);
                if (score < best_score) {
                    best_score = score;
                    best_row = static_cast<long long>(i);
                    best_col = c;
                }
            }
        }

        const std::size_t pr = static_cast<std::size_t>(best_row);
        ++rank;
        row_done[pr] = true;
        --active;
        const Rat pivot = find_col(rows[pr], best_col)->second;
        for (auto& [c, v] : rows[pr]) {
            --col_count[static_cast<std::size_t>(c)];
            v /= pivot;
        }
        const Row& prow = rows[pr];

        for (std::size_t i : col_rows[static_cast<std::size_t>(best_col)]) {
            if (row_done[i]) continue;
            auto hit = find_col(rows[i], best_col);
            if (hit == rows[i].end()) continue; // stale index entry
            const Rat mult = hit->second;
            Row updated;
            updated.reserve(rows[i].size() + prow.size());
            auto it_a = rows[i].begin();
            auto it_p = prow.begin();
            while (it_a != rows[i].end() || it_p != prow.end()) {
                long long col;
                Rat val;
                if (it_p == prow.end() || (it_a != rows[i].end() && it_a->first < it_p->first)) {
                    col = it_a->first;
                    val = std::move(it_a->second);
                    ++it_a;
                } else if (it_a == rows[i].end() || it_p->first < it_a->first) {
                    col = it_p->first;
                    val = -mult * it_p->second;
                    ++it_p;
                    if (!val.is_zero()) col_rows[static_cast<std::size_t>(col)].push_back(i); // fill
                } else {
                    col = it_a->first;
                    val = std::move(it_a->second);
                    val -= mult * it_p->second;
                    ++it_a;
                    ++it_p;
                }
                if (col != best_col && !val.is_zero()) updated.emplace_back(col, std::move(val));
            }
            for (const auto& [c, v] : rows[i])
                if (c != best_col) --col_count[static_cast<std::size_t>(c)];
            --col_count[static_cast<std::size_t>(best_col)];
            for (const auto& [c, v] : updated) ++col_count[static_cast<std::size_t>(c)];
            rows[i] = std::move(updated);
            if (rows[i].empty()) {
                row_done[i] = true;
                --active;
            }
        }
        std::vector<std::size_t>().swap(col_rows[static_cast<std::size_t>(best_col)]);
    }
    return rank;
}

// ------------------------------------------------- polynomial matrices

long long poly_matrix_rank(std::vector<std::vector<Poly>> m) {
    if (m.empty()) return 0;
    const std::size_t nr = m.size();
    const std::size_t nc = m[0].size();
    for (const auto& row : m)
        if (row.size() != nc) throw internal_error("ragged polynomial matrix");

    std::vector<bool> row_used(nr, false), col_used(nc, false);
    Poly prev_pivot(Rat(1));
    long long rank = 0;
    for (;;) {
        std::size_t pr = nr, pc = nc;
        for (std::size_t i = 0; i < nr && pr == nr; ++i) {
            if (row_used[i]) continue;
            for (std::size_t j = 0; j < nc; ++j) {
                if (col_used[j] || m[i][j].is_zero()) continue;
                pr = i;
                pc = j;
                break;
            }
        }
        if (pr == nr) break;
        ++rank;
        row_used[pr] = true;
        col_used[pc] = true;
        const Poly pivot = m[pr][pc];
        for (std::size_t i = 0; i < nr; ++i) {
            if (row_used[i]) continue;
            const Poly mult = m[i][pc];
            for (std::size_t j = 0; j < nc; ++j) {
                if (col_used[j]) continue;
                m[i][j] = (pivot * m[i][j] - mult * m[pr][j]).divexact(prev_pivot);
            }
            m[i][pc] = Poly();
        }
        prev_pivot = pivot;
    }
    return rank;
}

// ----------------------------------------------------- sparse span solver

void SparseSpanSolver::reduce(Vec& r, Vec* lam) const {
    auto it = r.begin();
    while (it != r.end()) {
        auto hit = by_lead_.find(it->first);
        if (hit == by_lead_.end()) {
            ++it;
            continue;
        }
        const Ech& e = ech_[hit->second];
        const Rat c = it->second;
        const long long lead = it->first;
        for (const auto& [row, v] : e.vec) {
            auto jt = r.find(row);
            if (jt == r.end()) {
                r.emplace(row, -c * v);
            } else {
                jt->second -= c * v;
                if (jt->second.is_zero()) r.erase(jt);
            }
        }
        if (lam)
            for (const auto& [j, mu] : e.coords) {
                auto jt = lam->find(j);
                if (jt == lam->end()) {
                    lam->emplace(j, c * mu);
                } else {
                    jt->second += c * mu;
                    if (jt->second.is_zero()) lam->erase(jt);
                }
            }
        // the lead entry cancelled exactly; everything else e touches sits
        // strictly above it
        it = r.upper_bound(lead);
    }
}

bool SparseSpanSolver::add_column(const Vec& col) {
    Vec r = col;
    Vec lam;
    reduce(r, &lam);
    if (r.empty()) return false;
    const long long lead = r.begin()->first;
    const Rat lc = r.begin()->second;
    for (auto& [row, v] : r) v /= lc;
    // residual = col - sum lam_j col_j, so over the kept columns
    Vec coords;
    coords[kept_] = Rat(1) / lc;
    for (const auto& [j, mu] : lam) {
        Rat c = -mu / lc;
        if (!c.is_zero()) coords[j] = std::move(c);
    }
    by_lead_.emplace(lead, ech_.size());
    ech_.push_back({lead, std::move(r), std::move(coords)});
    lead_list_.push_back(lead);
    ++kept_;
    return true;
}

bool SparseSpanSolver::contains(const Vec& v) const {
    Vec r = v;
    reduce(r, nullptr);
    return r.empty();
}

std::vector<Rat> SparseSpanSolver::solve(const Vec& v) const {
    Vec r = v;
    Vec lam;
    reduce(r, &lam);
    if (!r.empty()) throw internal_error("vector outside the tracked span");
    std::vector<Rat> out(static_cast<std::size_t>(kept_), Rat(0));
    for (const auto& [j, c] : lam) out[static_cast<std::size_t>(j)] = c;
    return out;
}

SparseSpanSolver::Vec SparseSpanSolver::reduce_mod(const Vec& v) const {
    Vec r = v;
    reduce(r, nullptr);
    return r;
}

// ------------------------------------------------------ dense span solver

ColumnSpanSolver::ColumnSpanSolver(const std::vector<std::vector<Rat>>& columns) {
    ncols_ = columns.size();
    dim_ = columns.empty() ? 0 : columns[0].size();
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != dim_) throw internal_error("ragged column set");
        std::vector<Rat> r = columns[j];
        std::vector<Rat> x(ncols_, Rat(0));
        x[j] = Rat(1);
        if (reduce(r, x)) continue;
        std::size_t pivot = 0;
        while (r[pivot].is_zero()) ++pivot;
        const Rat lead = r[pivot];
        for (auto& v : r) v /= lead;
        for (auto& v : x) v /= lead;
        ech_.push_back({pivot, std::move(r), std::move(x)});
    }
}

bool ColumnSpanSolver::reduce(std::vector<Rat>& r, std::vector<Rat>& x) const {
    for (const auto& e : ech_) {
        const Rat c = r[e.pivot];
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < dim_; ++k) r[k] -= c * e.vec[k];
        for (std::size_t k = 0; k < ncols_; ++k) x[k] -= c * e.coords[k];
    }
    return std::all_of(r.begin(), r.end(), [](const Rat& v) { return v.is_zero(); });
}

bool ColumnSpanSolver::contains(const std::vector<Rat>& v) const {
    if (v.size() != dim_) throw internal_error("dimension mismatch");
    std::vector<Rat> r = v;
    std::vector<Rat> x(ncols_, Rat(0));
    return reduce(r, x);
}

std::vector<Rat> ColumnSpanSolver::solve(const std::vector<Rat>& v) const {
    if (v.size() != dim_) throw internal_error("dimension mismatch");
    std::vector<Rat> r = v;
    std::vector<Rat> x(ncols_, Rat(0));
    if (!reduce(r, x)) throw domain_error("vector outside the column span");
    for (auto& c : x) c = -c;
    return x;
}

} // namespace gj
