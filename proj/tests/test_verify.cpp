#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include <domino/domino.hpp>

using namespace domino;

TEST_CASE("identity registry catalogue") {
    const std::set<std::string> expected{
        "eq1",    "eq2",     "stat",     "wsi",   "double", "ss",    "ss_domino", "weightedsum", "gf",
        "ss1",    "xi",      "sign",     "prod",  "ev",     "iandf", "skew_eq2",  "decrease",    "fi",
        "fw",     "main",    "f2n",      "fnk",   "fnk_odd", "lem2", "lem3",      "invm",        "signm",
        "reif",   "emp",     "sjsign",   "sjss",  "gdi",    "sgdi",  "gdih",      "colortospin", "wt"};
    std::vector<std::string> names = identity_names();
    CHECK(std::set<std::string>(names.begin(), names.end()) == expected);
    CHECK(names.size() == expected.size());

    for (const IdentityEntry& e : identity_registry()) {
        INFO(e.name);
        CHECK_FALSE(e.statement.empty());
        CHECK_FALSE(e.points(1).empty());
        for (const auto& [k, b] : e.int_bounds) CHECK(b.lo <= b.hi);
    }

    CHECK(find_identity("eq1") != nullptr);
    CHECK(find_identity("eq1")->name == "eq1");
    CHECK(find_identity("no_such_identity") == nullptr);
}

TEST_CASE("verifying a single identity") {
    IdentityReport r = verify_identity("eq2", Params{}.set("n", 6));
    CHECK(r.identity == "eq2");
    CHECK(r.equal);
    CHECK(r.params.geti("n") == 6);
    CHECK(r.lhs.str() == r.rhs.str());
    CHECK(r.millis >= 0);

    // Defaults fill whatever the caller leaves out.
    IdentityReport d = verify_identity("eq2");
    CHECK(d.equal);

    // Running twice gives identical results.
    IdentityReport r2 = verify_identity("eq2", Params{}.set("n", 6));
    CHECK(r2.lhs.str() == r.lhs.str());
    CHECK(r2.rhs.str() == r.rhs.str());
}

TEST_CASE("verification rejects bad requests") {
    CHECK_THROWS_AS(verify_identity("no_such_identity"), std::invalid_argument);
    CHECK_THROWS_AS(verify_identity("eq1", Params{}.set("k", 3)), std::invalid_argument);
    CHECK_THROWS_AS(verify_identity("eq2", Params{}.set("n", 1)), std::invalid_argument);   // below lo
    CHECK_THROWS_AS(verify_identity("eq2", Params{}.set("n", 99)), std::invalid_argument);  // above hi
    CHECK_THROWS_AS(verify_identity("eq2", Params{}.set("n", 6), 0), std::invalid_argument);
    // Unknown shape name, then a shape over its cell budget.
    CHECK_THROWS_AS(verify_identity("sign", Params{}.set("alpha", Partition{1})), std::invalid_argument);
    CHECK_THROWS_AS(verify_identity("double", Params{}.set("alpha", Partition{9, 9, 9, 9})), std::invalid_argument);
}

TEST_CASE("bound scaling stretches the sweep") {
    // n=12 sits outside the default eq2 range but inside the doubled one.
    CHECK_THROWS_AS(verify_identity("eq2", Params{}.set("n", 12)), std::invalid_argument);
    IdentityReport r = verify_identity("eq2", Params{}.set("n", 12), 2);
    CHECK(r.equal);
}

TEST_CASE("sweeps cover the declared grid") {
    for (const IdentityReport& r : verify_sweep("eq1")) {
        INFO(r.params.str());
        CHECK(r.equal);
    }
    for (const IdentityReport& r : verify_sweep("fi")) {
        INFO(r.params.str());
        CHECK(r.equal);
    }
}

TEST_CASE("json round trips") {
    using nlohmann::json;

    Partition p{4, 2, 1};
    CHECK(json(p).get<Partition>() == p);
    CHECK(json(Partition{}).get<Partition>() == Partition{});

    CHECK(json(SkewShape::parse("4,3,1/2")) == "4,3,1/2");

    GaussInt g{BigInt("123456789012345678901234567890"), BigInt(-7)};
    CHECK(json(g).get<GaussInt>() == g);

    LaurentPoly poly = (LaurentPoly::x() + LaurentPoly::y(-2)) * LaurentPoly::q(1, 2) * LaurentPoly(3);
    json pj = poly;
    CHECK(pj.at("text") == poly.str());
    CHECK(pj.at("terms").is_array());
    CHECK(pj.get<LaurentPoly>().str() == poly.str());

    ChainTableau t = ChainTableau::parse(TableauKind::sdt, "0:2:2,2");
    json tj = t;
    CHECK(tj.at("kind") == "sdt");
    CHECK(tj.at("chain") == "0:2:2,2");
    ChainTableau round = ChainTableau::empty(TableauKind::syt, Partition{});
    tj.get_to(round);
    CHECK(round == t);

    IntMatrix m = IntMatrix::parse("0 1; -1 0");
    CHECK(json(m).get<IntMatrix>() == m);
    IntMatrix wide(0, 3);
    CHECK(json(wide).get<IntMatrix>() == wide);

    ColoredPermutation cp = ColoredPermutation::parse("2 1~");
    CHECK(json(cp).get<ColoredPermutation>() == cp);

    Params params = Params{}.set("n", 3).set("alpha", Partition{2, 1});
    json prj = params;
    CHECK(prj.at("n") == 3);
    CHECK(prj.at("alpha") == "2,1");
    Params back = prj.get<Params>();
    CHECK(back.geti("n") == 3);
    CHECK(back.shape("alpha") == Partition{2, 1});
}

TEST_CASE("report serialization") {
    IdentityReport r = verify_identity("eq1", Params{}.set("n", 4));
    nlohmann::json j = r;
    CHECK(j.at("identity") == "eq1");
    CHECK(j.at("equal") == true);
    CHECK(j.at("params").at("n") == 4);
    CHECK(j.at("lhs").at("text") == r.lhs.str());
    CHECK(j.at("rhs").at("text") == r.rhs.str());
    CHECK(j.at("millis").is_number());

    GrowthDiagram g = GrowthDiagram::from_boundary(
        Ruleset::rs, std::vector<Partition>(2), std::vector<Partition>(2), IntMatrix::parse("1"));
    nlohmann::json gj = g;
    CHECK(gj.at("rules") == "rs");
    CHECK(gj.at("vertices").size() == 2);
    CHECK(gj.at("vertices")[1][1] == "1");
    CHECK(gj.at("matrix").at("text") == "1");
}
