#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "gj/cli.hpp"
#include "gj/json_io.hpp"
#include "helpers.hpp"

using namespace gj;
using io::json;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& contents)
        : path("gjw_test_" + name) {
        std::ofstream out(path, std::ios::binary);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("band matrix JSON round trips bit-exactly") {
    gjtest::Rng rng(80);
    for (int t = 0; t < 40; ++t) {
        BandMatrix x = gjtest::rand_band(rng);
        json j = io::band_to_json(x);
        BandMatrix back = io::band_from_json(j);
        CHECK(back == x);
        CHECK(io::band_to_json(back).dump() == j.dump());
    }
    // builtins, including tails on both sides
    for (const auto& m : {BandMatrix::identity(), BandMatrix::t_derivative(),
                          BandMatrix::nonneg_projection(), BandMatrix::zero()}) {
        json j = io::band_to_json(m);
        CHECK(io::band_from_json(j) == m);
    }
}

TEST_CASE("band matrix JSON schema violations") {
    CHECK_THROWS_AS(io::band_from_json(json::parse(R"({})")), schema_error);
    // period must match the polynomial list
    CHECK_THROWS_AS(io::band_from_json(json::parse(
                        R"({"diagonals":[{"offset":0,"window":{"start":0,"values":[]},
                             "right":{"period":2,"polys":[["1"]],"from":0}}]})")),
                    schema_error);
    // redundant boundaries must be consistent
    CHECK_THROWS_AS(io::band_from_json(json::parse(
                        R"({"diagonals":[{"offset":0,"window":{"start":0,"values":["1"]},
                             "right":{"period":1,"polys":[["1"]],"from":5}}]})")),
                    schema_error);
    CHECK_THROWS_AS(io::scalar_from_json(json::parse("1.25")), schema_error);
    CHECK_THROWS_AS(io::scalar_from_json(json::parse(R"("2/0")")), schema_error);
}

TEST_CASE("algebra JSON round trips") {
    for (const auto& a : {FinAssocAlg::matrix_algebra(2), FinAssocAlg::dual_numbers(),
                          FinAssocAlg::group_algebra({{0, 1}, {1, 0}})}) {
        json j = io::assoc_to_json(a);
        FinAssocAlg back = io::assoc_from_json(j);
        CHECK(io::assoc_to_json(back).dump() == j.dump());
        CHECK(back.dim() == a.dim());
    }
    FinLieAlg g = FinLieAlg::sl(2);
    json j = io::lie_to_json(g);
    FinLieAlg back = io::lie_from_json(j);
    CHECK(back.structure() == g.structure());
    CHECK(io::lie_to_json(back).dump() == j.dump());

    GroupAction act = GroupAction::cyclic_shift(3);
    json ja = io::action_to_json(act);
    GroupAction back_act = io::action_from_json(ja, FinAssocAlg::product_field(3));
    CHECK(io::action_to_json(back_act).dump() == ja.dump());
}

TEST_CASE("ext element and quadratic JSON") {
    ExtElement e{BandMatrix::t_multiplication(), Rat(-3, 7)};
    json j = io::ext_to_json(e);
    CHECK(io::ext_from_json(j) == e);

    QuadraticReal q(Rat(1, 2), Rat(-2, 3), 5);
    json jq = io::quadratic_to_json(q);
    QuadraticReal back = io::quadratic_from_json(jq);
    CHECK(back.a() == q.a());
    CHECK(back.b() == q.b());
    CHECK(back.d() == q.d());
}

TEST_CASE("cli: predict and determinism") {
    auto r1 = cli::run({"predict", "--generators", "2:even,4:even,6:even", "--max-degree", "6"});
    REQUIRE(r1.code == 0);
    json rep = json::parse(r1.out);
    CHECK(rep.at("result").at("dims") == json::parse("[1,0,1,0,2,0,3]"));
    CHECK(rep.at("status") == 0);
    auto r2 = cli::run({"predict", "--generators", "2:even,4:even,6:even", "--max-degree", "6"});
    CHECK(r1.out == r2.out); // byte identical
}

TEST_CASE("cli: homology subcommands with families and files") {
    auto r = cli::run({"homology", "lie", "--family", "sl", "--rank", "2", "--max-degree", "3"});
    REQUIRE(r.code == 0);
    json rep = json::parse(r.out);
    CHECK(rep.at("result").at("betti") == json::parse("[1,0,0,1]"));

    auto csv = cli::run({"--format", "csv", "homology", "lie", "--family", "sl", "--rank", "2",
                         "--max-degree", "3"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out == "p,chain_dim,boundary_rank,betti\n0,1,0,1\n1,3,0,0\n2,3,3,0\n3,1,0,1\n");

    TempFile alg("field.json", io::assoc_to_json(FinAssocAlg::field()).dump());
    auto hh = cli::run({"homology", "hochschild", "--algebra", alg.path, "--max-degree", "3"});
    REQUIRE(hh.code == 0);
    CHECK(json::parse(hh.out).at("result").at("betti") == json::parse("[1,0,0,0]"));
    auto hc = cli::run({"homology", "cyclic", "--algebra", alg.path, "--max-degree", "4"});
    REQUIRE(hc.code == 0);
    CHECK(json::parse(hc.out).at("result").at("betti") == json::parse("[1,0,1,0,1]"));
    auto hd = cli::run({"homology", "dihedral", "--algebra", alg.path, "--sign", "-1",
                        "--max-degree", "4"});
    REQUIRE(hd.code == 0);
    CHECK(json::parse(hd.out).at("result").at("betti") == json::parse("[0,0,1,0,0]"));
}

TEST_CASE("cli: rank, trace, construct, cocycle, embed, blockiso, twisted") {
    TempFile ident("identity.json", io::band_to_json(BandMatrix::identity()).dump());
    auto rank = cli::run({"rank", "--matrix", ident.path, "--exact"});
    REQUIRE(rank.code == 0);
    CHECK(json::parse(rank.out).at("result").at("density") == "1");

    auto trace = cli::run({"trace", "--matrix", ident.path, "--exact"});
    REQUIRE(trace.code == 0);
    CHECK(json::parse(trace.out).at("result").at("value") == "1");

    auto cons = cli::run({"rank", "construct", "--target", "-1,1,2", "--steps", "5"});
    REQUIRE(cons.code == 0);
    json cj = json::parse(cons.out).at("result");
    CHECK(cj.at("r")[0] == 1);
    CHECK(cj.at("r")[1] == 2);

    // cocycle of Q against its transpose through files produced by embed
    auto embq = cli::run({"embed", "w", "--a", "1", "--poly", "1"});
    REQUIRE(embq.code == 0);
    TempFile qf("q.json", embq.out); // report envelope: the loader unwraps it
    auto embtq = cli::run({"embed", "w", "--a", "-1", "--poly", "1"});
    TempFile tqf("tq.json", embtq.out);
    auto coc = cli::run({"cocycle", "--x", qf.path, "--y", tqf.path});
    REQUIRE(coc.code == 0);
    CHECK(json::parse(coc.out).at("result").at("value") == "-1");

    auto aff = cli::run({"embed", "affine", "--n", "2", "--i", "1", "--j", "1", "--a", "1"});
    REQUIRE(aff.code == 0);
    BandMatrix affm = io::band_from_json(json::parse(aff.out).at("result"));
    CHECK(affm == embed_affine(2, 1, 1, 1));

    auto fwd = cli::run({"blockiso", "--n", "2", "--matrix", qf.path});
    REQUIRE(fwd.code == 0);
    TempFile blocks("blocks.json", fwd.out);
    auto inv = cli::run({"blockiso", "--n", "2", "--matrix", blocks.path, "--inverse"});
    REQUIRE(inv.code == 0);
    CHECK(io::band_from_json(json::parse(inv.out).at("result")) == BandMatrix::t_multiplication());

    TempFile pf2("pf2.json", io::assoc_to_json(FinAssocAlg::product_field(2)).dump());
    TempFile act("act.json", io::action_to_json(GroupAction::cyclic_shift(2)).dump());
    auto tw = cli::run({"twisted", "--algebra", pf2.path, "--action", act.path});
    REQUIRE(tw.code == 0);
    CHECK(json::parse(tw.out).at("result").at("dim") == 4);

    TempFile field("f.json", io::assoc_to_json(FinAssocAlg::field()).dump());
    auto per = cli::run({"periodicity", "--algebra", field.path, "--max-degree", "4"});
    REQUIRE(per.code == 0);
    CHECK(json::parse(per.out).at("result").at("all_hold") == true);

    TempFile ue("u.json", io::ext_to_json({BandMatrix::t_multiplication(), Rat(0)}).dump());
    TempFile ve("v.json",
                io::ext_to_json({BandMatrix::t_multiplication().involution(InvolutionSpec::transpose()),
                                 Rat(5)})
                    .dump());
    auto eb = cli::run({"extbracket", "--u", ue.path, "--v", ve.path});
    REQUIRE(eb.code == 0);
    ExtElement res = io::ext_from_json(json::parse(eb.out).at("result"));
    CHECK(res.x.is_zero());
    CHECK(res.c == Rat(-1));
}

TEST_CASE("cli: exit codes") {
    CHECK(cli::run({"definitely-not-a-command"}).code == 2);
    CHECK(cli::run({"rank"}).code == 2); // no matrix, no construct
    TempFile bad("bad.json", "{ not json");
    CHECK(cli::run({"rank", "--matrix", bad.path, "--exact"}).code == 2);
    CHECK(cli::run({"rank", "--matrix", "no_such_file.json", "--exact"}).code == 2);

    TempFile pm("p.json", io::band_to_json(BandMatrix::t_derivative()).dump());
    CHECK(cli::run({"rank", "--matrix", pm.path, "--exact"}).code == 3); // not periodic
    CHECK(cli::run({"rank", "construct", "--target", "1/3,0,2", "--steps", "4"}).code == 3);

    TempFile m3("m3.json", io::assoc_to_json(FinAssocAlg::matrix_algebra(3)).dump());
    CHECK(cli::run({"--max-chain-dim", "100", "homology", "hochschild", "--algebra", m3.path,
                    "--max-degree", "3"})
              .code == 4);

    // csv is only defined for Betti tables
    CHECK(cli::run({"--format", "csv", "predict", "--generators", "2:even", "--max-degree", "2"})
              .code == 2);
}
