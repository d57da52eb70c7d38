#include "doctest.h"

#include "greenpoly/charring.hpp"

#include <random>

using namespace greenpoly;

namespace {

GradedCharacter random_graded(GroupPtr g, std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-2, 2), d(0, 3);
    GradedCharacter x{g, {}};
    for (int i = 0; i < g->num_irreps(); ++i) x.coords.push_back(IntPoly::monomial(c(rng), d(rng)));
    return x;
}

}  // namespace

TEST_CASE("q-elliptic pairing: classwise sum equals element sum") {
    std::mt19937 rng(3);
    for (auto t : std::vector<WeylType>{{Family::A, 3}, {Family::B, 3}, {Family::D, 4}, {Family::G2, 2}}) {
        auto g = WeylGroupData::build(t);
        for (int it = 0; it < 4; ++it) {
            auto a = random_graded(g, rng), b = random_graded(g, rng);
            CHECK(q_elliptic_pairing(a, b) == q_elliptic_pairing_bruteforce(a, b));
        }
    }
}

TEST_CASE("standard pairing of irreducibles is the identity") {
    auto g = WeylGroupData::build({Family::B, 3});
    for (int i = 0; i < g->num_irreps(); ++i)
        for (int j = 0; j < g->num_irreps(); ++j)
            CHECK(std_pairing(VirtualCharacter::irrep(g, i), VirtualCharacter::irrep(g, j)) == (i == j));
}

TEST_CASE("fake degrees") {
    for (auto t : std::vector<WeylType>{{Family::A, 4}, {Family::B, 3}, {Family::D, 4}, {Family::G2, 2}}) {
        auto g = WeylGroupData::build(t);
        int npos = 0;
        for (int d : g->degrees()) npos += d - 1;
        CHECK(fake_degree(*g, g->triv_index()) == IntPoly(1));
        CHECK(fake_degree(*g, g->sgn_index()) == IntPoly::monomial(1, npos));
        // sum_chi chi(1) f_chi(q) is the Hilbert series of the coinvariants
        IntPoly hs;
        for (int i = 0; i < g->num_irreps(); ++i) {
            IntPoly f = fake_degree(*g, i);
            CHECK(f.eval(1) == g->dim(i));
            CHECK(f.has_nonneg_coeffs());
            hs.add_scaled(f, mpz_class(g->dim(i)));
        }
        IntPoly prod(1);
        for (int d : g->degrees()) prod *= IntPoly(std::vector<mpz_class>(d, 1));
        CHECK(hs == prod);
        CHECK(hs == poincare_polynomial(*g));
        CHECK(chevalley_check(*g));
    }
}

TEST_CASE("Omega of A1") {
    auto g = WeylGroupData::build({Family::A, 1});
    auto om = omega(*g);
    // both irreps are 1-dimensional: Omega = [[1, q], [q, 1]] in some order
    CHECK(om[0][0] == IntPoly(1));
    CHECK(om[1][1] == IntPoly(1));
    CHECK(om[0][1] == IntPoly::q());
    auto inv = omega_matrix(*g).inverse();
    CHECK((inv * omega_matrix(*g)).is_identity());
}

TEST_CASE("serial and parallel kernels agree") {
    for (auto t : std::vector<WeylType>{{Family::A, 5}, {Family::B, 4}, {Family::D, 5}}) {
        auto g = WeylGroupData::build(t);
        CHECK(gram_qelliptic(*g, Exec::Serial) == gram_qelliptic(*g, Exec::Parallel));
        CHECK(omega(*g, Exec::Serial) == omega(*g, Exec::Parallel));
        std::mt19937 rng(5);
        auto x = random_graded(g, rng);
        CHECK(class_values(*g, x.coords, Exec::Serial) == class_values(*g, x.coords, Exec::Parallel));
    }
}

TEST_CASE("(-1)-Gram rank counts the (-1)-elliptic classes") {
    for (auto t : std::vector<WeylType>{{Family::A, 3}, {Family::A, 5}, {Family::B, 4}, {Family::D, 4}, {Family::G2, 2}}) {
        auto g = WeylGroupData::build(t);
        CHECK(minus_one_gram_rank(*g) == int(g->minus_one_elliptic_classes().size()));
    }
}

TEST_CASE("delta pairing equals the twisted class sum and has the elliptic rank") {
    for (auto t : std::vector<WeylType>{{Family::A, 2}, {Family::A, 4}, {Family::B, 3}, {Family::D, 4}, {Family::D, 5}, {Family::G2, 2}}) {
        auto g = WeylGroupData::build(t);
        auto gd = gram_delta(*g);
        auto a = VirtualCharacter::irrep(g, 0), b = VirtualCharacter::irrep(g, g->num_irreps() - 1);
        CHECK(gd[0][g->num_irreps() - 1] == delta_twist_pairing(a, b));
        std::vector<std::vector<mpq_class>> q;
        for (const auto& r : gd) q.emplace_back(r.begin(), r.end());
        CHECK(rational_rank(q) == g->delta_elliptic_count());
    }
}
