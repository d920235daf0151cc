#include "gj/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>

#include "gj/json_io.hpp"

namespace gj::cli {

namespace {

using io::json;

std::string fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return "fnv1a64:" + os.str();
}

struct Loader {
    std::map<std::string, std::string> digests;

    json load(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw schema_error("cannot read input file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        const std::string bytes = buf.str();
        digests[path] = fnv1a64(bytes);
        json j;
        try {
            j = json::parse(bytes);
        } catch (const json::exception& e) {
            throw schema_error("invalid JSON in '" + path + "': " + e.what());
        }
        // accept a previously emitted report and unwrap its payload
        if (j.is_object() && j.contains("command") && j.contains("result")) return j.at("result");
        return j;
    }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

long long parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw schema_error("expected an integer for " + what + ", got '" + s + "'");
    }
}

std::vector<std::pair<long long, bool>> parse_generators(const std::string& s) {
    std::vector<std::pair<long long, bool>> gens;
    if (s.empty()) return gens;
    for (const auto& item : split(s, ',')) {
        auto kv = split(item, ':');
        if (kv.size() != 2) throw schema_error("generators must be 'degree:parity' pairs");
        long long deg = parse_int(kv[0], "generator degree");
        bool odd;
        if (kv[1] == "odd")
            odd = true;
        else if (kv[1] == "even")
            odd = false;
        else
            throw schema_error("generator parity must be 'even' or 'odd'");
        gens.emplace_back(deg, odd);
    }
    return gens;
}

Poly parse_poly(const std::string& s) {
    std::vector<Rat> cs;
    for (const auto& item : split(s, ',')) cs.push_back(Rat::parse(item));
    return Poly::from_coeffs(std::move(cs));
}

QuadraticReal parse_target(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 3) throw schema_error("target must be 'a,b,d'");
    return QuadraticReal(Rat::parse(parts[0]), Rat::parse(parts[1]), parse_int(parts[2], "radicand"));
}

FinLieAlg build_lie_family(const std::string& family, long long r) {
    if (family == "gl") return FinLieAlg::gl(r);
    if (family == "sl") return FinLieAlg::sl(r);
    if (family == "sp") return FinLieAlg::sp(r);
    if (family == "o-odd") return FinLieAlg::o_odd(r);
    if (family == "o-even") return FinLieAlg::o_even(r);
    if (family == "abelian") return FinLieAlg::abelian(r);
    throw domain_error("unknown Lie family '" + family + "'");
}

} // namespace

RunResult run(const std::vector<std::string>& argv) {
    RunResult result;
    CLI::App app{"gjw - exact workbench for generalized Jacobi band algebras"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format: json (default) or csv (Betti tables)")
        ->check(CLI::IsMember({"json", "csv"}));
    long long ceiling = kDefaultChainCeiling;
    app.add_option("--max-chain-dim", ceiling, "feasibility ceiling for chain dimensions");

    // ---- cocycle / extbracket
    std::string x_file, y_file, u_file, v_file;
    auto* cocycle = app.add_subcommand("cocycle", "Japanese cocycle of two band matrices");
    cocycle->add_option("--x", x_file)->required();
    cocycle->add_option("--y", y_file)->required();
    auto* extbr = app.add_subcommand("extbracket", "bracket in the central extension");
    extbr->add_option("--u", u_file)->required();
    extbr->add_option("--v", v_file)->required();

    // ---- embed
    auto* embed = app.add_subcommand("embed", "classical embeddings into the band algebra");
    embed->require_subcommand(1);
    long long aff_n = 0, aff_i = 0, aff_j = 0, aff_a = 0;
    auto* affine = embed->add_subcommand("affine", "loop-algebra matrix unit");
    affine->add_option("--n", aff_n)->required();
    affine->add_option("--i", aff_i)->required();
    affine->add_option("--j", aff_j)->required();
    affine->add_option("--a", aff_a)->required();
    long long w_a = 0;
    std::string w_poly;
    auto* wsub = embed->add_subcommand("w", "differential-operator symbol t^a f(D)");
    wsub->add_option("--a", w_a)->required();
    wsub->add_option("--poly", w_poly, "coefficients of f, constant first")->required();

    // ---- blockiso
    std::string bi_file;
    long long bi_n = 0;
    bool bi_inverse = false;
    auto* blockiso = app.add_subcommand("blockiso", "block decomposition along residues mod n");
    blockiso->add_option("--n", bi_n)->required();
    blockiso->add_option("--matrix", bi_file)->required();
    blockiso->add_flag("--inverse", bi_inverse);

    // ---- homology
    auto* homology = app.add_subcommand("homology", "exact homology engines");
    homology->require_subcommand(1);
    std::string lie_family, lie_algebra;
    long long lie_rank = 0, lie_pmax = -1;
    auto* hlie = homology->add_subcommand("lie", "Lie algebra homology, trivial coefficients");
    hlie->add_option("--family", lie_family, "gl|sl|sp|o-odd|o-even|abelian");
    hlie->add_option("--rank", lie_rank);
    hlie->add_option("--algebra", lie_algebra, "FinLieAlg JSON file");
    hlie->add_option("--max-degree", lie_pmax)->required();
    std::string hh_alg;
    long long hh_pmax = -1;
    auto* hhoch = homology->add_subcommand("hochschild", "Hochschild homology HH(R,R)");
    hhoch->add_option("--algebra", hh_alg)->required();
    hhoch->add_option("--max-degree", hh_pmax)->required();
    std::string hc_alg;
    long long hc_pmax = -1;
    auto* hcyc = homology->add_subcommand("cyclic", "cyclic homology (Connes complex)");
    hcyc->add_option("--algebra", hc_alg)->required();
    hcyc->add_option("--max-degree", hc_pmax)->required();
    std::string hd_alg, hd_sign = "+1";
    long long hd_pmax = -1;
    auto* hdih = homology->add_subcommand("dihedral", "(skew-)dihedral homology");
    hdih->add_option("--algebra", hd_alg)->required();
    hdih->add_option("--sign", hd_sign)->check(CLI::IsMember({"+1", "-1"}));
    hdih->add_option("--max-degree", hd_pmax)->required();

    // ---- periodicity
    std::string per_alg;
    long long per_pmax = -1;
    auto* per = app.add_subcommand("periodicity", "Connes periodicity consistency windows");
    per->add_option("--algebra", per_alg)->required();
    per->add_option("--max-degree", per_pmax)->required();

    // ---- predict
    std::string gens;
    long long predict_pmax = -1;
    auto* predict = app.add_subcommand("predict", "free graded-commutative dimension table");
    predict->add_option("--generators", gens)->required();
    predict->add_option("--max-degree", predict_pmax)->required();

    // ---- rank / trace
    auto* rank = app.add_subcommand("rank", "rank density functional");
    std::string rank_file;
    long long rank_trunc = -1;
    bool rank_exact = false;
    rank->add_option("--matrix", rank_file);
    rank->add_option("--trunc", rank_trunc);
    rank->add_flag("--exact", rank_exact);
    std::string ct_target;
    long long ct_steps = -1;
    auto* construct = rank->add_subcommand("construct", "0/1 diagonal bracketing an irrational");
    construct->add_option("--target", ct_target, "a,b,d for a + b sqrt(d)")->required();
    construct->add_option("--steps", ct_steps)->required();

    auto* trace = app.add_subcommand("trace", "trace density functional");
    std::string trace_file;
    long long trace_trunc = -1;
    bool trace_exact = false;
    trace->add_option("--matrix", trace_file)->required();
    trace->add_option("--trunc", trace_trunc);
    trace->add_flag("--exact", trace_exact);

    // ---- twisted
    std::string tw_alg, tw_action;
    auto* twisted = app.add_subcommand("twisted", "twisted group algebra A{G}");
    twisted->add_option("--algebra", tw_alg)->required();
    twisted->add_option("--action", tw_action)->required();

    // parent options such as --format may appear after the subcommand
    for (CLI::App* sc : {cocycle, extbr, embed, affine, wsub, blockiso, homology, hlie, hhoch,
                         hcyc, hdih, per, predict, rank, construct, trace, twisted})
        sc->fallthrough();

    std::vector<const char*> cargs;
    cargs.push_back("gjw");
    for (const auto& a : argv) cargs.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        result.code = 0;
        return result;
    } catch (const CLI::ParseError& e) {
        result.err = std::string("usage error: ") + e.what() + "\n";
        result.code = 2;
        return result;
    }

    Loader loader;
    json payload;
    bool is_betti = false;
    BettiReport betti;

    try {
        if (*cocycle) {
            BandMatrix x = io::band_from_json(loader.load(x_file));
            BandMatrix y = io::band_from_json(loader.load(y_file));
            payload = json{{"value", io::scalar_to_json(japanese_cocycle(x, y))}};
        } else if (*extbr) {
            ExtElement u = io::ext_from_json(loader.load(u_file));
            ExtElement v = io::ext_from_json(loader.load(v_file));
            payload = io::ext_to_json(ext_bracket(u, v));
        } else if (*affine) {
            payload = io::band_to_json(embed_affine(aff_n, aff_i, aff_j, aff_a));
        } else if (*wsub) {
            payload = io::band_to_json(embed_w1inf({w_a, parse_poly(w_poly)}));
        } else if (*blockiso) {
            if (bi_inverse) {
                auto [n, blocks] = io::blocks_from_json(loader.load(bi_file));
                if (n != bi_n) throw schema_error("--n disagrees with the block file");
                payload = io::band_to_json(block_iso_inverse(bi_n, blocks));
            } else {
                BandMatrix x = io::band_from_json(loader.load(bi_file));
                payload = io::blocks_to_json(bi_n, block_iso_forward(bi_n, x));
            }
        } else if (*hlie) {
            FinLieAlg g = [&] {
                if (!lie_algebra.empty()) return io::lie_from_json(loader.load(lie_algebra));
                if (lie_family.empty())
                    throw schema_error("homology lie needs --family with --rank, or --algebra");
                return build_lie_family(lie_family, lie_rank);
            }();
            betti = lie_homology(g, lie_pmax, ceiling);
            payload = io::betti_to_json(betti);
            is_betti = true;
        } else if (*hhoch) {
            betti = hochschild_homology(io::assoc_from_json(loader.load(hh_alg)), hh_pmax, ceiling);
            payload = io::betti_to_json(betti);
            is_betti = true;
        } else if (*hcyc) {
            betti = cyclic_homology(io::assoc_from_json(loader.load(hc_alg)), hc_pmax, ceiling);
            payload = io::betti_to_json(betti);
            is_betti = true;
        } else if (*hdih) {
            betti = dihedral_homology(io::assoc_from_json(loader.load(hd_alg)),
                                      hd_sign == "+1" ? 1 : -1, hd_pmax, ceiling);
            payload = io::betti_to_json(betti);
            is_betti = true;
        } else if (*per) {
            payload = io::periodicity_to_json(
                periodicity_check(io::assoc_from_json(loader.load(per_alg)), per_pmax, ceiling));
        } else if (*predict) {
            payload = json{{"dims", predicted_stable_dims(parse_generators(gens), predict_pmax)}};
        } else if (*construct) {
            payload = io::construction_to_json(construct_diagonal(parse_target(ct_target), ct_steps));
        } else if (*rank) {
            if (rank_file.empty()) throw schema_error("rank needs --matrix (or the construct subcommand)");
            BandMatrix x = io::band_from_json(loader.load(rank_file));
            if (rank_exact == (rank_trunc >= 0))
                throw schema_error("rank needs exactly one of --trunc N or --exact");
            payload = io::rank_report_to_json(rank_exact ? rank_density_exact(x)
                                                         : rank_density_truncated(x, rank_trunc));
        } else if (*trace) {
            BandMatrix x = io::band_from_json(loader.load(trace_file));
            if (trace_exact == (trace_trunc >= 0))
                throw schema_error("trace needs exactly one of --trunc N or --exact");
            payload = json{{"value", io::scalar_to_json(trace_exact
                                                            ? trace_density_exact(x)
                                                            : trace_density_truncated(x, trace_trunc))}};
        } else if (*twisted) {
            FinAssocAlg a = io::assoc_from_json(loader.load(tw_alg));
            GroupAction g = io::action_from_json(loader.load(tw_action), a);
            payload = io::assoc_to_json(twisted_group_algebra(a, g));
        } else {
            throw schema_error("no subcommand selected");
        }
    } catch (const schema_error& e) {
        result.err = std::string("input error: ") + e.what() + "\n";
        result.code = 2;
        return result;
    } catch (const domain_error& e) {
        result.err = std::string("domain error: ") + e.what() + "\n";
        result.code = 3;
        return result;
    } catch (const resource_error& e) {
        result.err = std::string("resource error: ") + e.what() + "\n";
        result.code = 4;
        return result;
    }

    if (format == "csv") {
        if (!is_betti) {
            result.err = "csv output is only defined for Betti tables\n";
            result.code = 2;
            return result;
        }
        result.out = io::betti_to_csv(betti);
        return result;
    }

    json report;
    report["command"] = argv;
    report["inputs"] = loader.digests;
    report["result"] = std::move(payload);
    report["status"] = 0;
    result.out = report.dump() + "\n";
    return result;
}

} // namespace gj::cli
