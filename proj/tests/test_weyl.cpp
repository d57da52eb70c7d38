#include "doctest.h"

#include "oracles.hpp"

#include "greenpoly/weyl.hpp"

#include <map>

using namespace greenpoly;

namespace {

GroupPtr G(Family f, int r) { return WeylGroupData::build({f, r}); }

long bipartitions(int n) {
    long s = 0;
    for (int k = 0; k <= n; ++k)
        s += long(oracle::partitions(k).size() * oracle::partitions(n - k).size());
    return s;
}

mpq_class frac(long a, long b) {
    mpq_class q(a, b);
    q.canonicalize();
    return q;
}

void check_orthogonality(const WeylGroupData& g) {
    int n = g.num_irreps();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long s = 0;
            for (int c = 0; c < g.num_classes(); ++c) s += g.conj_class(c).size * g.char_value(i, c) * g.char_value(j, c);
            CHECK(s == (i == j ? g.order() : 0));
        }
    long sq = 0;
    for (int i = 0; i < n; ++i) sq += g.dim(i) * g.dim(i);
    CHECK(sq == g.order());
}

// Structure constants: #{(x, y) in C_i x C_j : xy = z} for fixed z in C_k,
// counted by brute force and compared with the character-table formula.
void check_class_constants(const WeylGroupData& g) {
    int nc = g.num_classes();
    const auto& el = g.elements();
    std::vector<std::vector<std::vector<long>>> count(nc, std::vector<std::vector<long>>(nc, std::vector<long>(nc, 0)));
    for (int k = 0; k < nc; ++k) {
        const GroupElement& z = g.conj_class(k).rep;
        for (size_t x = 0; x < el.size(); ++x) {
            int i = g.element_class(x);
            int j = g.class_of(el[x].inverse() * z);
            ++count[i][j][k];
        }
    }
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j)
            for (int k = 0; k < nc; ++k) {
                // |C_i||C_j|/|W| sum_chi chi(i) chi(j) chi(k) / chi(1), all characters real
                mpq_class s = 0;
                for (int x = 0; x < g.num_irreps(); ++x)
                    s += frac(g.char_value(x, i) * g.char_value(x, j) * g.char_value(x, k), g.dim(x));
                s *= frac(g.conj_class(i).size * g.conj_class(j).size, g.order());
                CHECK_MESSAGE(s == count[i][j][k], g.type().name(), " ", i, " ", j, " ", k);
            }
}

}  // namespace

TEST_CASE("orders and class counts") {
    for (int r = 1; r <= 6; ++r) {
        auto g = G(Family::A, r);
        CHECK(g->order() == oracle::factorial(r + 1));
        CHECK(g->num_classes() == long(oracle::partitions(r + 1).size()));
    }
    for (int r = 2; r <= 5; ++r) {
        auto g = G(Family::B, r);
        CHECK(g->order() == (1L << r) * oracle::factorial(r));
        CHECK(g->num_classes() == bipartitions(r));
    }
    std::map<int, int> d_classes = {{4, 13}, {5, 18}, {6, 37}};
    for (auto [r, nc] : d_classes) {
        auto g = G(Family::D, r);
        CHECK(g->order() == (1L << (r - 1)) * oracle::factorial(r));
        CHECK(g->num_classes() == nc);
    }
    auto g2 = G(Family::G2, 2);
    CHECK(g2->order() == 12);
    CHECK(g2->num_classes() == 6);
}

TEST_CASE("character tables are orthogonal") {
    for (auto t : std::vector<WeylType>{{Family::A, 4}, {Family::B, 3}, {Family::C, 4}, {Family::D, 4},
                                        {Family::D, 5}, {Family::G2, 2}})
        check_orthogonality(*WeylGroupData::build(t));
}

TEST_CASE("reflection character matches traces of signed permutations") {
    for (auto t : std::vector<WeylType>{{Family::A, 3}, {Family::A, 5}, {Family::B, 4}, {Family::D, 4},
                                        {Family::D, 5}, {Family::G2, 2}}) {
        auto g = WeylGroupData::build(t);
        int r = g->refl_index();
        REQUIRE(r >= 0);
        for (int c = 0; c < g->num_classes(); ++c)
            CHECK(g->char_value(r, c) == oracle::reflection_trace(*g, g->conj_class(c).rep));
    }
}

TEST_CASE("symmetric group degrees match hook lengths") {
    auto g = G(Family::A, 5);
    for (int i = 0; i < g->num_irreps(); ++i)
        CHECK(g->dim(i) == oracle::hook_dim(parse_partition(g->irrep_labels()[i])));
}

TEST_CASE("class multiplication constants (D split characters)") {
    check_class_constants(*G(Family::D, 4));
    check_class_constants(*G(Family::B, 3));
    check_class_constants(*G(Family::G2, 2));
}

TEST_CASE("class multiplication constants D6") {
    // the split characters of D6 are the subtle part; 23040 elements
    auto g = G(Family::D, 6);
    int nc = g->num_classes();
    const auto& el = g->elements();
    // one target class at a time keeps memory small; check against the table
    for (int k = 0; k < nc; ++k) {
        std::vector<std::vector<long>> count(nc, std::vector<long>(nc, 0));
        const GroupElement& z = g->conj_class(k).rep;
        for (size_t x = 0; x < el.size(); ++x) ++count[g->element_class(x)][g->class_of(el[x].inverse() * z)];
        for (int i = 0; i < nc; ++i)
            for (int j = 0; j < nc; ++j) {
                mpq_class s = 0;
                for (int x = 0; x < g->num_irreps(); ++x)
                    s += frac(g->char_value(x, i) * g->char_value(x, j) * g->char_value(x, k), g->dim(x));
                s *= frac(g->conj_class(i).size * g->conj_class(j).size, g->order());
                if (s != count[i][j]) {
                    FAIL_CHECK("D6 constant mismatch at ", i, " ", j, " ", k);
                    return;
                }
            }
    }
}

TEST_CASE("basic invariants") {
    for (auto t : std::vector<WeylType>{{Family::A, 4}, {Family::B, 4}, {Family::D, 4}, {Family::D, 5}, {Family::G2, 2}}) {
        auto g = WeylGroupData::build(t);
        long total = 0, prod = 1;
        for (const auto& c : g->classes()) total += c.size;
        for (int d : g->degrees()) prod *= d;
        CHECK(total == g->order());
        CHECK(prod == g->order());
        long npos = 0;
        for (int d : g->degrees()) npos += d - 1;
        CHECK(long(g->reduced_word(g->w0()).size()) == npos);
        CHECK(g->sign_of(g->w0()) == (npos % 2 ? -1 : 1));
        for (const auto& c : g->classes()) {
            GroupElement w = GroupElement::identity(g->ambient_dim());
            for (int i : c.word) w = w * g->generators()[i];
            CHECK(w == c.rep);
        }
        CHECK(g->char_value(g->triv_index(), g->identity_class()) == 1);
        for (int c = 0; c < g->num_classes(); ++c)
            CHECK(g->char_value(g->sgn_index(), c) == g->sign_of_class(c));
    }
}

TEST_CASE("delta-elliptic twisted classes") {
    auto odd_parts = [](int n) {
        long k = 0;
        for (const auto& p : oracle::partitions(n)) {
            bool ok = true;
            for (int x : p) ok &= x % 2 == 1;
            k += ok;
        }
        return k;
    };
    for (int r = 1; r <= 6; ++r) CHECK(G(Family::A, r)->delta_elliptic_count() == odd_parts(r + 1));
    for (int r = 2; r <= 5; ++r) CHECK(G(Family::B, r)->delta_elliptic_count() == long(oracle::partitions(r).size()));
    CHECK(G(Family::D, 4)->delta_elliptic_count() == 3);
    CHECK(G(Family::G2, 2)->delta_elliptic_count() == 3);
}

TEST_CASE("partition helpers") {
    CHECK(parse_partition("3,2") == Partition{3, 2});
    CHECK(parse_partition("32") == Partition{3, 2});
    CHECK(partition_label({}) == "0");
    CHECK(partition_label({2, 1, 1}) == "211");
    CHECK(partition_label({10, 1}) == "10,1");
    CHECK(transpose({3, 1}) == Partition{2, 1, 1});
    CHECK(dominates({3, 1}, {2, 2}));
    CHECK_FALSE(dominates({2, 2}, {3, 1}));
    CHECK(partitions_of(4).front() == Partition{4});
    CHECK(integer_det({{2, 1}, {1, 2}}) == 3);
    CHECK_THROWS(make_type("E", 6));
    CHECK_THROWS(check_supported({Family::D, 2}));
}
