#pragma once

#include "greenpoly/kernels.hpp"
#include "greenpoly/weyl.hpp"

#include <vector>

namespace greenpoly {

struct VirtualCharacter {
    GroupPtr group;
    std::vector<mpz_class> coords;  // over irreps

    static VirtualCharacter irrep(GroupPtr g, int i);
};

struct GradedCharacter {
    GroupPtr group;
    std::vector<IntPoly> coords;

    static GradedCharacter irrep(GroupPtr g, int i);
    GradedCharacter at(long q0) const;        // coefficients evaluated, as constants
    GradedCharacter negate_q() const;
    VirtualCharacter eval(long q0) const;
    std::vector<IntPoly> class_values(Exec exec = Exec::Parallel) const;
};

mpz_class std_pairing(const VirtualCharacter& a, const VirtualCharacter& b);
IntPoly q_elliptic_pairing(const GradedCharacter& a, const GradedCharacter& b);
// (1/|W|) sum a(w) b(w) det_V(1+w)
mpz_class minus_one_pairing(const VirtualCharacter& a, const VirtualCharacter& b);
// <tr^delta_a, tr^delta_b>^dell, summed over delta-twisted classes with
// tr^delta(w) = chi(w w0) and weight det_V(1 - w delta)
mpz_class delta_twist_pairing(const VirtualCharacter& a, const VirtualCharacter& b);

// Element-by-element sums; reference oracle for small groups only.
IntPoly q_elliptic_pairing_bruteforce(const GradedCharacter& a, const GradedCharacter& b);

IntPolyMatrix gram_qelliptic(const WeylGroupData& g, Exec exec = Exec::Parallel);
std::vector<std::vector<mpz_class>> gram_minus_one(const WeylGroupData& g);
std::vector<std::vector<mpz_class>> gram_delta(const WeylGroupData& g);

// graded character of the coinvariants at each class: p(q) / det_V(1 - qw)
std::vector<IntPoly> coinvariant_class_values(const WeylGroupData& g);
IntPoly fake_degree(const WeylGroupData& g, int irrep);
IntPolyMatrix omega(const WeylGroupData& g, Exec exec = Exec::Parallel);
PolyMatrix omega_matrix(const WeylGroupData& g);
bool chevalley_check(const WeylGroupData& g);
int minus_one_gram_rank(const WeylGroupData& g);

IntPoly poincare_polynomial(const WeylGroupData& g);  // prod (1 + q + ... + q^{m_i - 1})

PolyMatrix to_poly_matrix(const IntPolyMatrix& m);
int rational_rank(std::vector<std::vector<mpq_class>> m);

}  // namespace greenpoly
