#include "greenpoly/charring.hpp"

#include <stdexcept>

namespace greenpoly {

namespace {

void same_group(const GroupPtr& a, const GroupPtr& b) {
    if (!a || !b || !(a->type() == b->type()))
        throw std::invalid_argument("characters belong to different groups");
}

mpz_class divide_order(const mpz_class& s, const WeylGroupData& g) {
    mpz_class o(g.order());
    if (!mpz_divisible_p(s.get_mpz_t(), o.get_mpz_t()))
        throw std::domain_error("pairing not integral: character table corrupted?");
    return s / o;
}

mpz_class class_value(const VirtualCharacter& a, int c) {
    mpz_class v = 0;
    for (size_t i = 0; i < a.coords.size(); ++i)
        if (a.coords[i] != 0) v += a.coords[i] * a.group->char_value(int(i), c);
    return v;
}

}  // namespace

VirtualCharacter VirtualCharacter::irrep(GroupPtr g, int i) {
    VirtualCharacter v{g, std::vector<mpz_class>(g->num_irreps(), 0)};
    v.coords.at(i) = 1;
    return v;
}

GradedCharacter GradedCharacter::irrep(GroupPtr g, int i) {
    GradedCharacter v{g, std::vector<IntPoly>(g->num_irreps())};
    v.coords.at(i) = IntPoly(1);
    return v;
}

GradedCharacter GradedCharacter::at(long q0) const {
    GradedCharacter r{group, {}};
    for (const auto& p : coords) r.coords.emplace_back(std::vector<mpz_class>{p.eval(q0)});
    return r;
}

GradedCharacter GradedCharacter::negate_q() const {
    GradedCharacter r{group, {}};
    for (const auto& p : coords) r.coords.push_back(p.negate_q());
    return r;
}

VirtualCharacter GradedCharacter::eval(long q0) const {
    VirtualCharacter r{group, {}};
    for (const auto& p : coords) r.coords.push_back(p.eval(q0));
    return r;
}

std::vector<IntPoly> GradedCharacter::class_values(Exec exec) const {
    return greenpoly::class_values(*group, coords, exec);
}

mpz_class std_pairing(const VirtualCharacter& a, const VirtualCharacter& b) {
    same_group(a.group, b.group);
    const auto& g = *a.group;
    mpz_class s = 0;
    for (int c = 0; c < g.num_classes(); ++c)
        s += class_value(a, c) * class_value(b, c) * g.conj_class(c).size;
    return divide_order(s, g);
}

mpz_class minus_one_pairing(const VirtualCharacter& a, const VirtualCharacter& b) {
    same_group(a.group, b.group);
    const auto& g = *a.group;
    mpz_class s = 0;
    for (int c = 0; c < g.num_classes(); ++c) {
        mpz_class d = g.refl_charpoly(c).eval(-1);
        if (d != 0) s += class_value(a, c) * class_value(b, c) * d * g.conj_class(c).size;
    }
    return divide_order(s, g);
}

mpz_class delta_twist_pairing(const VirtualCharacter& a, const VirtualCharacter& b) {
    same_group(a.group, b.group);
    const auto& g = *a.group;
    mpz_class s = 0;
    for (const auto& t : g.delta_twisted_classes()) {
        if (!t.elliptic) continue;
        s += class_value(a, t.untwisted_class) * class_value(b, t.untwisted_class) * t.det_twist *
             t.size;
    }
    return divide_order(s, g);
}

IntPoly q_elliptic_pairing(const GradedCharacter& a, const GradedCharacter& b) {
    same_group(a.group, b.group);
    const auto& g = *a.group;
    auto va = a.class_values(Exec::Serial), vb = b.class_values(Exec::Serial);
    IntPoly s;
    for (int c = 0; c < g.num_classes(); ++c) {
        if (va[c].is_zero() || vb[c].is_zero()) continue;
        s.add_scaled(va[c] * vb[c] * g.refl_charpoly(c), mpz_class(g.conj_class(c).size));
    }
    return s.divexact(mpz_class(g.order()));
}

IntPoly q_elliptic_pairing_bruteforce(const GradedCharacter& a, const GradedCharacter& b) {
    same_group(a.group, b.group);
    const auto& g = *a.group;
    if (g.order() > 100000) throw std::invalid_argument("brute-force pairing: group too large");
    auto va = a.class_values(Exec::Serial), vb = b.class_values(Exec::Serial);
    IntPoly s;
    const auto& el = g.elements();
    for (size_t i = 0; i < el.size(); ++i) {
        int c = g.element_class(i);
        s += va[c] * vb[c] * g.charpoly(el[i]);
    }
    return s.divexact(mpz_class(g.order()));
}

IntPolyMatrix gram_qelliptic(const WeylGroupData& g, Exec exec) {
    std::vector<IntPoly> w;
    for (int c = 0; c < g.num_classes(); ++c) w.push_back(g.refl_charpoly(c));
    return class_weighted_gram(g, w, exec);
}

namespace {

std::vector<std::vector<mpz_class>> constant_matrix(const IntPolyMatrix& m) {
    std::vector<std::vector<mpz_class>> r(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (const auto& p : m[i]) {
            if (p.degree() > 0) throw std::logic_error("expected constant pairing");
            r[i].push_back(p.coeff(0));
        }
    return r;
}

}  // namespace

std::vector<std::vector<mpz_class>> gram_minus_one(const WeylGroupData& g) {
    std::vector<IntPoly> w;
    for (int c = 0; c < g.num_classes(); ++c) w.emplace_back(std::vector<mpz_class>{g.refl_charpoly(c).eval(-1)});
    return constant_matrix(class_weighted_gram(g, w));
}

std::vector<std::vector<mpz_class>> gram_delta(const WeylGroupData& g) {
    int n = g.num_irreps();
    std::vector<std::vector<mpz_class>> r(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            mpz_class s = 0;
            for (const auto& t : g.delta_twisted_classes()) {
                if (!t.elliptic) continue;
                s += mpz_class(g.char_value(i, t.untwisted_class)) *
                     g.char_value(j, t.untwisted_class) * t.det_twist * t.size;
            }
            r[i][j] = r[j][i] = divide_order(s, g);
        }
    return r;
}

std::vector<IntPoly> coinvariant_class_values(const WeylGroupData& g) {
    IntPoly p = g.p_poly();
    std::vector<IntPoly> f;
    for (int c = 0; c < g.num_classes(); ++c) f.push_back(p.divexact(g.refl_charpoly(c)));
    return f;
}

IntPoly fake_degree(const WeylGroupData& g, int irrep) {
    auto f = coinvariant_class_values(g);
    IntPoly s;
    for (int c = 0; c < g.num_classes(); ++c)
        s.add_scaled(f[c], mpz_class(g.char_value(irrep, c)) * g.conj_class(c).size);
    return s.divexact(mpz_class(g.order()));
}

IntPolyMatrix omega(const WeylGroupData& g, Exec exec) {
    return class_weighted_gram(g, coinvariant_class_values(g), exec);
}

PolyMatrix to_poly_matrix(const IntPolyMatrix& m) {
    int r = static_cast<int>(m.size()), c = r ? static_cast<int>(m[0].size()) : 0;
    PolyMatrix out(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) out(i, j) = RatFun(m[i][j]);
    return out;
}

PolyMatrix omega_matrix(const WeylGroupData& g) { return to_poly_matrix(omega(g)); }

bool chevalley_check(const WeylGroupData& g) {
    // rebuild the coinvariant character from the fake degrees, then multiply
    // by det(1 - qw) classwise; the result must be p(q) on every class
    std::vector<IntPoly> fd;
    for (int i = 0; i < g.num_irreps(); ++i) fd.push_back(fake_degree(g, i));
    auto vals = class_values(g, fd, Exec::Serial);
    IntPoly p = g.p_poly();
    for (int c = 0; c < g.num_classes(); ++c)
        if (!(vals[c] * g.refl_charpoly(c) == p)) return false;
    return true;
}

int rational_rank(std::vector<std::vector<mpq_class>> m) {
    int rows = static_cast<int>(m.size());
    if (!rows) return 0;
    int cols = static_cast<int>(m[0].size()), rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (int i = rank + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            mpq_class f = m[i][c] / m[rank][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

int minus_one_gram_rank(const WeylGroupData& g) {
    auto G = gram_minus_one(g);
    std::vector<std::vector<mpq_class>> q(G.size());
    for (size_t i = 0; i < G.size(); ++i)
        for (const auto& x : G[i]) q[i].emplace_back(x);
    return rational_rank(std::move(q));
}

IntPoly poincare_polynomial(const WeylGroupData& g) {
    IntPoly r(1);
    for (int d : g.degrees()) r *= IntPoly(std::vector<mpz_class>(d, 1));
    return r;
}

}  // namespace greenpoly
