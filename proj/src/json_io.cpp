#include "gj/json_io.hpp"

#include <sstream>

namespace gj::io {

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw schema_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

long long require_int(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_number_integer()) throw schema_error(std::string("field '") + key + "' must be an integer");
    return v.get<long long>();
}

json scalar_to_json(const Rat& r) { return r.str(); }

Rat scalar_from_json(const json& j) {
    if (!j.is_string()) throw schema_error("scalars must be \"p/q\" strings");
    return Rat::parse(j.get<std::string>());
}

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(scalar_to_json(c));
    return arr;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw schema_error("polynomial must be a coefficient array");
    std::vector<Rat> cs;
    for (const auto& c : j) cs.push_back(scalar_from_json(c));
    return Poly::from_coeffs(std::move(cs));
}

namespace {

json tail_to_json(const QuasiPolyTail& t) {
    json polys = json::array();
    for (const auto& p : t.polys()) polys.push_back(poly_to_json(p));
    return json{{"period", t.period()}, {"polys", std::move(polys)}};
}

QuasiPolyTail tail_from_json(const json& j) {
    const long long period = require_int(j, "period");
    const json& polys = require(j, "polys");
    if (!polys.is_array() || period < 1 || static_cast<long long>(polys.size()) != period)
        throw schema_error("tail period must match the number of polynomials");
    std::vector<Poly> ps;
    for (const auto& p : polys) ps.push_back(poly_from_json(p));
    return QuasiPolyTail::make(std::move(ps));
}

} // namespace

json band_to_json(const BandMatrix& m) {
    json diags = json::array();
    for (const auto& [d, seq] : m.diagonals()) {
        json entry;
        entry["offset"] = d;
        if (!seq.left().is_zero()) {
            json t = tail_to_json(seq.left());
            t["until"] = seq.lo() - 1;
            entry["left"] = std::move(t);
        }
        json win;
        win["start"] = seq.lo();
        json vals = json::array();
        for (const auto& v : seq.window()) vals.push_back(scalar_to_json(v));
        win["values"] = std::move(vals);
        entry["window"] = std::move(win);
        if (!seq.right().is_zero()) {
            json t = tail_to_json(seq.right());
            t["from"] = seq.hi() + 1;
            entry["right"] = std::move(t);
        }
        diags.push_back(std::move(entry));
    }
    return json{{"diagonals", std::move(diags)}};
}

BandMatrix band_from_json(const json& j) {
    const json& diags = require(j, "diagonals");
    if (!diags.is_array()) throw schema_error("'diagonals' must be an array");
    BandMatrix m;
    for (const auto& entry : diags) {
        const long long offset = require_int(entry, "offset");
        const json& win = require(entry, "window");
        const long long lo = require_int(win, "start");
        const json& vals = require(win, "values");
        if (!vals.is_array()) throw schema_error("window 'values' must be an array");
        std::vector<Rat> w;
        for (const auto& v : vals) w.push_back(scalar_from_json(v));
        QuasiPolyTail left = QuasiPolyTail::zero();
        QuasiPolyTail right = QuasiPolyTail::zero();
        if (entry.contains("left")) {
            left = tail_from_json(entry.at("left"));
            if (require_int(entry.at("left"), "until") != lo - 1)
                throw schema_error("left tail 'until' must equal start - 1");
        }
        if (entry.contains("right")) {
            right = tail_from_json(entry.at("right"));
            if (require_int(entry.at("right"), "from") != lo + static_cast<long long>(w.size()))
                throw schema_error("right tail 'from' must equal the end of the window + 1");
        }
        QuasiPolySeq seq = QuasiPolySeq::make(std::move(left), std::move(right), lo, std::move(w));
        if (m.diagonal(offset)) throw schema_error("duplicate diagonal offset");
        m.set_diagonal(offset, std::move(seq));
    }
    return m;
}

json ext_to_json(const ExtElement& e) {
    return json{{"x", band_to_json(e.x)}, {"c", scalar_to_json(e.c)}};
}

ExtElement ext_from_json(const json& j) {
    return {band_from_json(require(j, "x")), scalar_from_json(require(j, "c"))};
}

json blocks_to_json(long long n, const std::vector<std::vector<BandMatrix>>& blocks) {
    json rows = json::array();
    for (const auto& row : blocks) {
        json r = json::array();
        for (const auto& b : row) r.push_back(band_to_json(b));
        rows.push_back(std::move(r));
    }
    return json{{"n", n}, {"blocks", std::move(rows)}};
}

std::pair<long long, std::vector<std::vector<BandMatrix>>> blocks_from_json(const json& j) {
    const long long n = require_int(j, "n");
    const json& rows = require(j, "blocks");
    if (!rows.is_array() || static_cast<long long>(rows.size()) != n)
        throw schema_error("'blocks' must be an n x n array");
    std::vector<std::vector<BandMatrix>> blocks;
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<long long>(row.size()) != n)
            throw schema_error("'blocks' must be an n x n array");
        std::vector<BandMatrix> r;
        for (const auto& b : row) r.push_back(band_from_json(b));
        blocks.push_back(std::move(r));
    }
    return {n, std::move(blocks)};
}

json lie_to_json(const FinLieAlg& g) {
    json brackets = json::array();
    for (const auto& [key, terms] : g.structure()) {
        json ts = json::array();
        for (const auto& [k, c] : terms) ts.push_back(json{{"k", k}, {"c", scalar_to_json(c)}});
        brackets.push_back(json{{"i", key.first}, {"j", key.second}, {"terms", std::move(ts)}});
    }
    return json{{"dim", g.dim()}, {"labels", g.labels()}, {"bracket", std::move(brackets)}};
}

FinLieAlg lie_from_json(const json& j) {
    const long long dim = require_int(j, "dim");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const json& ls = j.at("labels");
        if (!ls.is_array()) throw schema_error("'labels' must be an array");
        for (const auto& l : ls) {
            if (!l.is_string()) throw schema_error("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
        if (!labels.empty() && static_cast<long long>(labels.size()) != dim)
            throw schema_error("label count must match dim");
    }
    std::map<std::pair<long long, long long>, FinLieAlg::SparseVec> structure;
    const json& brackets = require(j, "bracket");
    if (!brackets.is_array()) throw schema_error("'bracket' must be an array");
    for (const auto& b : brackets) {
        const long long i = require_int(b, "i");
        const long long jj = require_int(b, "j");
        const json& ts = require(b, "terms");
        if (!ts.is_array()) throw schema_error("'terms' must be an array");
        FinLieAlg::SparseVec v;
        for (const auto& t : ts) v.emplace_back(require_int(t, "k"), scalar_from_json(require(t, "c")));
        auto key = std::make_pair(i, jj);
        if (structure.count(key)) throw schema_error("duplicate bracket entry");
        structure.emplace(key, std::move(v));
    }
    return FinLieAlg::from_structure(dim, std::move(labels), std::move(structure));
}

json assoc_to_json(const FinAssocAlg& a) {
    json mult = json::array();
    for (long long i = 0; i < a.dim(); ++i)
        for (long long jj = 0; jj < a.dim(); ++jj) {
            const auto& terms = a.mult(i, jj);
            if (terms.empty()) continue;
            json ts = json::array();
            for (const auto& [k, c] : terms) ts.push_back(json{{"k", k}, {"c", scalar_to_json(c)}});
            mult.push_back(json{{"i", i}, {"j", jj}, {"terms", std::move(ts)}});
        }
    json unit = json::array();
    for (const auto& c : a.unit()) unit.push_back(scalar_to_json(c));
    json out{{"dim", a.dim()}, {"unit", std::move(unit)}, {"mult", std::move(mult)},
             {"labels", a.labels()}};
    if (a.has_involution()) {
        json rows = json::array();
        for (const auto& row : a.involution_matrix()) {
            json r = json::array();
            for (const auto& c : row) r.push_back(scalar_to_json(c));
            rows.push_back(std::move(r));
        }
        out["involution"] = std::move(rows);
    }
    return out;
}

FinAssocAlg assoc_from_json(const json& j) {
    const long long dim = require_int(j, "dim");
    if (dim < 1) throw schema_error("'dim' must be positive");
    const json& unit_j = require(j, "unit");
    if (!unit_j.is_array() || static_cast<long long>(unit_j.size()) != dim)
        throw schema_error("'unit' must be an array of length dim");
    std::vector<Rat> unit;
    for (const auto& c : unit_j) unit.push_back(scalar_from_json(c));
    std::vector<std::vector<FinAssocAlg::SparseVec>> mult(
        static_cast<std::size_t>(dim), std::vector<FinAssocAlg::SparseVec>(static_cast<std::size_t>(dim)));
    const json& mult_j = require(j, "mult");
    if (!mult_j.is_array()) throw schema_error("'mult' must be an array");
    for (const auto& entry : mult_j) {
        const long long i = require_int(entry, "i");
        const long long jj = require_int(entry, "j");
        if (i < 0 || i >= dim || jj < 0 || jj >= dim) throw schema_error("mult index out of range");
        const json& ts = require(entry, "terms");
        FinAssocAlg::SparseVec v;
        for (const auto& t : ts) v.emplace_back(require_int(t, "k"), scalar_from_json(require(t, "c")));
        mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)] = std::move(v);
    }
    std::optional<std::vector<std::vector<Rat>>> inv;
    if (j.contains("involution")) {
        const json& rows = j.at("involution");
        if (!rows.is_array()) throw schema_error("'involution' must be a matrix");
        std::vector<std::vector<Rat>> m;
        for (const auto& row : rows) {
            if (!row.is_array()) throw schema_error("'involution' must be a matrix");
            std::vector<Rat> r;
            for (const auto& c : row) r.push_back(scalar_from_json(c));
            m.push_back(std::move(r));
        }
        inv = std::move(m);
    }
    std::vector<std::string> labels;
    if (j.contains("labels"))
        for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    return FinAssocAlg::make(dim, std::move(unit), std::move(mult), std::move(inv), std::move(labels));
}

json action_to_json(const GroupAction& g) {
    json mats = json::array();
    for (const auto& mat : g.matrices) {
        json rows = json::array();
        for (const auto& row : mat) {
            json r = json::array();
            for (const auto& c : row) r.push_back(scalar_to_json(c));
            rows.push_back(std::move(r));
        }
        mats.push_back(std::move(rows));
    }
    return json{{"order", g.order()}, {"cayley", g.cayley}, {"matrices", std::move(mats)}};
}

GroupAction action_from_json(const json& j, const FinAssocAlg& algebra) {
    const long long order = require_int(j, "order");
    const json& cayley_j = require(j, "cayley");
    if (!cayley_j.is_array() || static_cast<long long>(cayley_j.size()) != order)
        throw schema_error("'cayley' must be an order x order table");
    std::vector<std::vector<int>> cayley;
    for (const auto& row : cayley_j) {
        if (!row.is_array() || static_cast<long long>(row.size()) != order)
            throw schema_error("'cayley' must be an order x order table");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw schema_error("Cayley entries must be integers");
            r.push_back(v.get<int>());
        }
        cayley.push_back(std::move(r));
    }
    const json& mats_j = require(j, "matrices");
    if (!mats_j.is_array() || static_cast<long long>(mats_j.size()) != order)
        throw schema_error("'matrices' must hold one matrix per group element");
    std::vector<std::vector<std::vector<Rat>>> mats;
    for (const auto& mat : mats_j) {
        std::vector<std::vector<Rat>> m;
        for (const auto& row : mat) {
            std::vector<Rat> r;
            for (const auto& c : row) r.push_back(scalar_from_json(c));
            m.push_back(std::move(r));
        }
        mats.push_back(std::move(m));
    }
    return GroupAction::make(std::move(cayley), std::move(mats), algebra);
}

json betti_to_json(const BettiReport& r) {
    json degrees = json::array();
    for (long long p = 0; p <= r.pmax; ++p)
        degrees.push_back(json{{"p", p},
                               {"chain_dim", r.chain_dims[static_cast<std::size_t>(p)]},
                               {"boundary_rank", r.boundary_ranks[static_cast<std::size_t>(p)]},
                               {"betti", r.betti[static_cast<std::size_t>(p)]}});
    return json{{"degrees", std::move(degrees)},
                {"next_boundary_rank", r.boundary_ranks[static_cast<std::size_t>(r.pmax + 1)]},
                {"betti", r.betti}};
}

std::string betti_to_csv(const BettiReport& r) {
    std::ostringstream os;
    os << "p,chain_dim,boundary_rank,betti\n";
    for (long long p = 0; p <= r.pmax; ++p)
        os << p << "," << r.chain_dims[static_cast<std::size_t>(p)] << ","
           << r.boundary_ranks[static_cast<std::size_t>(p)] << ","
           << r.betti[static_cast<std::size_t>(p)] << "\n";
    return os.str();
}

json rank_report_to_json(const RankReport& r) {
    if (r.exact)
        return json{{"mode", "exact"},
                    {"period", r.period},
                    {"symbol_rank", r.symbol_rank},
                    {"density", scalar_to_json(r.density)}};
    json approx = json::array();
    for (const auto& a : r.approximants)
        approx.push_back(json{{"n", a.n}, {"rank", a.rank}, {"density", scalar_to_json(a.density)}});
    return json{{"mode", "truncated"},
                {"approximants", std::move(approx)},
                {"stable_from", r.stable_from},
                {"density", scalar_to_json(r.density)}};
}

json periodicity_to_json(const PeriodicityReport& r) {
    json windows = json::array();
    for (const auto& w : r.windows)
        windows.push_back(json{{"n", w.n},
                               {"applicable", w.applicable},
                               {"holds", w.holds},
                               {"hh_n", w.hh_n},
                               {"hh_nm1", w.hh_nm1},
                               {"hc_n", w.hc_n},
                               {"hc_nm2", w.hc_nm2}});
    return json{{"windows", std::move(windows)},
                {"all_hold", r.all_hold},
                {"hh", betti_to_json(r.hh)},
                {"hc", betti_to_json(r.hc)}};
}

json quadratic_to_json(const QuadraticReal& x) {
    return json{{"a", scalar_to_json(x.a())}, {"b", scalar_to_json(x.b())}, {"d", x.d()}};
}

QuadraticReal quadratic_from_json(const json& j) {
    return QuadraticReal(scalar_from_json(require(j, "a")), scalar_from_json(require(j, "b")),
                         require_int(j, "d"));
}

json construction_to_json(const DiagonalConstruction& c) {
    return json{{"steps", c.steps},
                {"r", c.r},
                {"diagonal", json{{"start", -c.steps}, {"values", c.values}}}};
}

} // namespace gj::io
