#include "doctest.h"

#include "oracles.hpp"

#include "greenpoly/springer.hpp"

#include "json.hpp"

#include <cstdlib>
#include <fstream>

using namespace greenpoly;

namespace {

std::string read_file(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string c3_text() { return read_file(data_dir() + "/springer/C3.json"); }

std::string error_location(const std::string& text) {
    try {
        parse_table(text, "test");
    } catch (const TableError& e) {
        return e.where();
    }
    return "";
}

}  // namespace

TEST_CASE("built-in tables validate") {
    for (int r = 1; r <= 7; ++r) {
        auto g = WeylGroupData::build({Family::A, r});
        auto t = table_typeA(r + 1);
        t.validate(*g);
        CHECK(t.num_pairs() == g->num_irreps());
    }
    for (int r = 1; r <= 3; ++r) {
        auto g = WeylGroupData::build({Family::C, r});
        auto t = table_typeC(r);
        t.validate(*g);
        CHECK(t.num_pairs() == g->num_irreps());
    }
}

TEST_CASE("type A dimensions of Springer fibres") {
    for (int n = 2; n <= 7; ++n) {
        auto t = table_typeA(n);
        for (const auto& o : t.orbits) {
            int nl = 0;
            for (size_t i = 0; i < o.partition.size(); ++i) nl += int(i) * o.partition[i];
            CHECK(o.d_e == nl);
        }
    }
}

TEST_CASE("type C dimensions and component groups") {
    auto t = table_typeC(3);
    CHECK(t.orbits.front().d_e == 0);
    CHECK(t.orbits.back().d_e == 9);  // number of positive roots of C3
    CHECK(component_group_typeC({4, 2}).k == 2);
    CHECK(component_group_typeC({2, 2}).k == 1);
    CHECK(component_group_typeC({3, 3}).k == 0);
    CHECK(component_group_typeC({2, 2, 1, 1}).k == 1);
    CHECK(component_group_typeC({6}).order() == 2);
    // (4,2): two generators, z = product of both (odd multiplicities); Springer type is trivial on z
    auto a = component_group_typeC({4, 2});
    CHECK(a.springer_type.size() == 2);
}

TEST_CASE("N^sol and quasidistinguished predicates") {
    CHECK(nsol_predicate({{3, 2}, {Family::A, 4}}));
    CHECK_FALSE(nsol_predicate({{2, 2, 1}, {Family::A, 4}}));
    CHECK(nsol_predicate({{2, 2}, {Family::C, 2}}));
    CHECK(nsol_predicate({{4, 2}, {Family::C, 3}}));
    CHECK_FALSE(nsol_predicate({{2, 1, 1}, {Family::C, 2}}));
    CHECK_FALSE(nsol_predicate({{2, 2, 2}, {Family::C, 3}}));
    auto t = table_typeA(4);
    // only the regular orbit of GL(n) is quasidistinguished
    for (const auto& o : t.orbits) CHECK(quasidistinguished_predicate(o) == (o.partition.size() == 1));
}

TEST_CASE("(q,M)-pairing on Sp(4), orbit (22)") {
    auto t = table_typeC(2);
    int o = t.find_orbit({2, 2});
    REQUIRE(o >= 0);
    const auto& orb = t.orbits[o];
    CHECK(q_M_pairing(orb, 0, 0) == IntPoly(1));
    CHECK(q_M_pairing(orb, 1, 1) == IntPoly(1));
    CHECK(q_M_pairing(orb, 0, 1) == -IntPoly::q());
}

TEST_CASE("type A (q,M)-pairing at -1 is 2^{l-1} for distinct parts") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& o : table_typeA(n).orbits) {
            mpz_class v = q_M_pairing(o, 0, 0).eval(-1);
            if (oracle::distinct_parts(o.partition))
                CHECK(v == mpz_class(1) << (o.partition.size() - 1));
            else
                CHECK(v == 0);
        }
}

TEST_CASE("export and parse round-trip") {
    for (auto t : {table_typeA(4), table_typeC(2), table_typeC(3)}) {
        auto back = parse_table(export_table(t), "roundtrip");
        CHECK(export_table(back) == export_table(t));
        CHECK(back.num_pairs() == t.num_pairs());
    }
}

TEST_CASE("malformed tables report a location") {
    using nlohmann::json;
    CHECK(error_location("{not json") == "test");
    auto j = json::parse(c3_text());

    auto dup = j;
    dup["orbits"][1]["pairs"][0]["irrep"] = dup["orbits"][0]["pairs"][0]["irrep"];
    CHECK(error_location(dup.dump()).find("orbits[1]") == 0);

    auto bad_de = j;
    bad_de["orbits"][2]["d_e"] = 7;
    CHECK(error_location(bad_de.dump()) == "orbits[2].d_e");

    auto missing = j;
    missing["orbits"][0].erase("pairs");
    CHECK(error_location(missing.dump()) == "orbits[0].pairs");

    auto wrong_irrep = j;
    wrong_irrep["orbits"][0]["pairs"][0]["irrep"] = "5x5";
    CHECK(error_location(wrong_irrep.dump()).find("orbits[0]") == 0);

    auto cyclic = j;
    cyclic["closure"].push_back({7, 0});
    CHECK_FALSE(error_location(cyclic.dump()).empty());

    CHECK_THROWS_AS(load_table("/nonexistent/table.json"), TableError);
}

TEST_CASE("data directory resolution") {
    CHECK(data_dir("/explicit") == "/explicit");
    setenv("GREENPOLY_DATA_DIR", "/from/env", 1);
    CHECK(data_dir() == "/from/env");
    CHECK(data_dir("/explicit") == "/explicit");
    unsetenv("GREENPOLY_DATA_DIR");
    CHECK(data_dir() == GREENPOLY_DEFAULT_DATA_DIR);
    CHECK_THROWS(table_typeC(3, "/nonexistent"));
}

TEST_CASE("reference exceptions are present") {
    const auto& ex = exception_table();
    CHECK(ex.size() == 4);
    bool e6 = false;
    for (const auto& e : ex)
        if (e.group == "E6") {
            e6 = true;
            CHECK(e.comp_group == "S3");
            CHECK(e.minus_one_pairings.size() == 3);
        }
    CHECK(e6);
}
