#include "greenpoly/lusztig_shoji.hpp"

#include <algorithm>

namespace greenpoly {

IntPolyMatrix int_matmul(const IntPolyMatrix& a, const IntPolyMatrix& b) {
    size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    IntPolyMatrix r(n, std::vector<IntPoly>(m));
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j)
                if (!b[l][j].is_zero()) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

IntPolyMatrix int_transpose(const IntPolyMatrix& a) {
    size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    IntPolyMatrix r(m, std::vector<IntPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
    return r;
}

IntPolyMatrix unitriangular_inverse(const IntPolyMatrix& k) {
    int n = static_cast<int>(k.size());
    IntPolyMatrix inv(n, std::vector<IntPoly>(n));
    for (int i = 0; i < n; ++i) {
        if (!(k[i][i] == IntPoly(1))) throw SolverError("K has a non-unit diagonal entry");
        for (int j = 0; j < i; ++j)
            if (!k[i][j].is_zero()) throw SolverError("K is not upper triangular");
    }
    // column by column back substitution: K Z = I
    for (int c = 0; c < n; ++c) {
        for (int r = c; r >= 0; --r) {
            IntPoly s = r == c ? IntPoly(1) : IntPoly();
            for (int l = r + 1; l <= c; ++l)
                if (!k[r][l].is_zero() && !inv[l][c].is_zero()) s -= k[r][l] * inv[l][c];
            inv[r][c] = s;
        }
    }
    return inv;
}

IntPolyMatrix GreenTableau::M_block(int orbit) const {
    auto idx = table.pairs_of(orbit);
    IntPolyMatrix b(idx.size(), std::vector<IntPoly>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) b[i][j] = M[idx[i]][idx[j]];
    return b;
}

namespace {

IntPoly dot(const std::vector<IntPoly>& a, const std::vector<IntPoly>& b) {
    IntPoly s;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

// y = x^t G
std::vector<IntPoly> row_times(const std::vector<IntPoly>& x, const IntPolyMatrix& G) {
    std::vector<IntPoly> y(G.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < G.size(); ++j)
            if (!G[i][j].is_zero()) y[j] += x[i] * G[i][j];
    }
    return y;
}

std::string pair_name(const GreenTableau& tab, int pair) {
    const auto& p = tab.table.pairs[pair];
    return "(" + partition_label(tab.table.orbits[p.orbit].partition) + "," +
           tab.table.local_system_label(pair) + ")";
}

}  // namespace

GreenTableau solve(const SpringerTable& t, GroupPtr g) {
    GreenTableau tab;
    tab.group = g;
    tab.table = t;
    tab.table.validate(*g);
    const auto& tb = tab.table;
    int N = g->num_irreps(), P = tb.num_pairs();
    tab.p = g->p_poly();
    tab.gram = gram_qelliptic(*g);

    std::vector<std::vector<IntPoly>> X(P), Y(P);
    std::vector<std::vector<int>> block_pairs(tb.orbits.size());
    std::vector<PolyMatrix> block_inv(tb.orbits.size());

    for (int o = 0; o < static_cast<int>(tb.orbits.size()); ++o) {
        auto mine = tb.pairs_of(o);
        for (int pi : mine) {
            std::vector<RatFun> v(N);
            int sigma = tb.pairs[pi].irrep_index;
            v[sigma] = RatFun(1);
            for (int b = 0; b < o; ++b) {
                const auto& bp = block_pairs[b];
                int m = static_cast<int>(bp.size());
                // coefficients c = Minv_b h, h_k = <X_k, sigma>^q
                std::vector<RatFun> h(m);
                for (int k = 0; k < m; ++k) h[k] = RatFun(Y[bp[k]][sigma]);
                std::vector<RatFun> c(m);
                bool nonzero = false;
                for (int r = 0; r < m; ++r) {
                    for (int k = 0; k < m; ++k)
                        if (!h[k].is_zero()) c[r] += block_inv[b](r, k) * h[k];
                    nonzero = nonzero || !c[r].is_zero();
                }
                if (!nonzero) continue;
                if (!tb.geq[b][o])
                    throw SolverError("nonzero projection between incomparable orbits " +
                                      partition_label(tb.orbits[b].partition) + " and " +
                                      partition_label(tb.orbits[o].partition));
                for (int r = 0; r < m; ++r) {
                    if (c[r].is_zero()) continue;
                    const auto& xr = X[bp[r]];
                    for (int i = 0; i < N; ++i)
                        if (!xr[i].is_zero()) v[i] -= c[r] * RatFun(xr[i]);
                }
            }
            X[pi].resize(N);
            for (int i = 0; i < N; ++i) {
                if (!v[i].is_int_poly())
                    throw SolverError("X_q" + pair_name(tab, pi) + " has a non-polynomial coefficient " +
                                      v[i].to_string() + " at irrep " + g->irrep_labels()[i]);
                X[pi][i] = v[i].to_int_poly();
            }
            Y[pi] = row_times(X[pi], tab.gram);
        }
        block_pairs[o] = mine;
        int m = static_cast<int>(mine.size());
        PolyMatrix Mb(m, m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) Mb(a, b) = RatFun(dot(Y[mine[a]], X[mine[b]]));
        try {
            block_inv[o] = Mb.inverse();
        } catch (const SingularMatrix&) {
            throw SolverError("singular Gram block at orbit " + partition_label(tb.orbits[o].partition));
        }
    }

    tab.K.assign(P, std::vector<IntPoly>(P));
    tab.M.assign(P, std::vector<IntPoly>(P));
    tab.Lambda.assign(P, std::vector<IntPoly>(P));
    tab.Omega.assign(P, std::vector<IntPoly>(P));
    for (int c = 0; c < P; ++c)
        for (int r = 0; r < P; ++r) tab.K[r][c] = X[c][tb.pairs[r].irrep_index];
    for (int a = 0; a < P; ++a)
        for (int b = 0; b < P; ++b) tab.M[a][b] = dot(Y[a], X[b]);
    RatFun p(tab.p);
    for (size_t o = 0; o < tb.orbits.size(); ++o) {
        const auto& bp = block_pairs[o];
        for (size_t a = 0; a < bp.size(); ++a)
            for (size_t b = 0; b < bp.size(); ++b) {
                RatFun l = p * block_inv[o](int(a), int(b));
                if (!l.is_int_poly())
                    throw SolverError("Lambda entry not in Z[q] at orbit " +
                                      partition_label(tb.orbits[o].partition));
                tab.Lambda[bp[a]][bp[b]] = l.to_int_poly();
            }
    }
    IntPolyMatrix om = omega(*g);
    for (int a = 0; a < P; ++a)
        for (int b = 0; b < P; ++b) tab.Omega[a][b] = om[tb.pairs[a].irrep_index][tb.pairs[b].irrep_index];
    for (int pi = 0; pi < P; ++pi) tab.X.push_back(GradedCharacter{g, X[pi]});
    return tab;
}

GradedCharacter green(const GreenTableau& tab, int pair) { return tab.X.at(pair); }

GradedCharacter green(const GreenTableau& tab, const Partition& orbit, const std::string& ls) {
    int i = tab.table.find_pair(orbit, ls);
    if (i < 0)
        throw std::invalid_argument("unknown pair (" + partition_label(orbit) + "," + ls + ")");
    return tab.X[i];
}

namespace {

CheckResult first_mismatch(const char* id, const IntPolyMatrix& a, const IntPolyMatrix& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            if (!(a[i][j] == b[i][j]))
                return {id, false, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")"};
    return {id, true, ""};
}

IntPolyMatrix scalar_identity(size_t n, const IntPoly& s) {
    IntPolyMatrix m(n, std::vector<IntPoly>(n));
    for (size_t i = 0; i < n; ++i) m[i][i] = s;
    return m;
}

}  // namespace

std::vector<CheckResult> verify_identities(const GreenTableau& tab) {
    std::vector<CheckResult> out;
    int P = tab.num_pairs();
    auto KL = int_matmul(tab.K, tab.Lambda);
    out.push_back(first_mismatch(identity::LS, int_matmul(KL, int_transpose(tab.K)), tab.Omega));
    out.push_back(first_mismatch(identity::LAMBDA_M, int_matmul(tab.Lambda, tab.M),
                                 scalar_identity(P, tab.p)));

    CheckResult ortho{identity::ORTHO, true, ""};
    CheckResult tri{identity::TRIANGULAR, true, ""};
    CheckResult pos{identity::POSITIVITY, true, ""};
    for (int a = 0; a < P && ortho.ok; ++a)
        for (int b = 0; b < P; ++b)
            if (tab.orbit_of(a) != tab.orbit_of(b) && !tab.M[a][b].is_zero()) {
                ortho = {identity::ORTHO, false, pair_name(tab, a) + " vs " + pair_name(tab, b)};
                break;
            }
    for (int r = 0; r < P && tri.ok; ++r)
        for (int c = 0; c < P; ++c) {
            const IntPoly& k = tab.K[r][c];
            bool ok = r == c ? k == IntPoly(1)
                             : k.is_zero() || (tab.orbit_of(r) != tab.orbit_of(c) &&
                                               tab.table.geq[tab.orbit_of(r)][tab.orbit_of(c)] &&
                                               k.coeff(0) == 0);
            if (!ok) {
                tri = {identity::TRIANGULAR, false, "K" + pair_name(tab, r) + pair_name(tab, c)};
                break;
            }
        }
    for (int r = 0; r < P && pos.ok; ++r)
        for (int c = 0; c < P; ++c)
            if (!tab.K[r][c].has_nonneg_coeffs()) {
                pos = {identity::POSITIVITY, false, "K" + pair_name(tab, r) + pair_name(tab, c)};
                break;
            }
    out.push_back(ortho);
    out.push_back(tri);
    out.push_back(pos);

    // second route to Lambda from Omega alone: K^{-1} Omega K^{-t}
    CheckResult two{identity::M_TWO_WAYS, true, ""};
    try {
        m_matrix(tab);
    } catch (const SolverError& e) {
        two = {identity::M_TWO_WAYS, false, e.what()};
    }
    out.push_back(two);

    out.push_back(first_mismatch(identity::GRAM_OMEGA, int_matmul(tab.gram, omega(*tab.group)),
                                 scalar_identity(tab.gram.size(), tab.p)));
    return out;
}

PolyMatrix m_matrix(const GreenTableau& tab) {
    int P = tab.num_pairs();
    auto Kinv = unitriangular_inverse(tab.K);
    auto lam = int_matmul(int_matmul(Kinv, tab.Omega), int_transpose(Kinv));
    for (int a = 0; a < P; ++a)
        for (int b = 0; b < P; ++b) {
            bool same = tab.orbit_of(a) == tab.orbit_of(b);
            if (!same && !lam[a][b].is_zero())
                throw SolverError("K^-1 Omega K^-t is not block diagonal at " + pair_name(tab, a) +
                                  "," + pair_name(tab, b));
            if (!(lam[a][b] == tab.Lambda[a][b]))
                throw SolverError("Lambda from Omega differs from p M^-1 at " + pair_name(tab, a) +
                                  "," + pair_name(tab, b));
        }
    // M = p Lambda^{-1}, blockwise, compared with the direct pairings
    for (size_t o = 0; o < tab.table.orbits.size(); ++o) {
        auto idx = tab.table.pairs_of(static_cast<int>(o));
        int m = static_cast<int>(idx.size());
        PolyMatrix L(m, m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) L(a, b) = RatFun(lam[idx[a]][idx[b]]);
        PolyMatrix Mb = L.inverse().scaled(RatFun(tab.p));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (!(Mb(a, b) == RatFun(tab.M[idx[a]][idx[b]])))
                    throw SolverError("direct M differs from p Lambda^-1 at " + pair_name(tab, idx[a]) +
                                      "," + pair_name(tab, idx[b]));
    }
    return tab.M_matrix();
}

CheckResult isometry_check(const GreenTableau& tab, int orbit) {
    const auto& o = tab.table.orbits.at(orbit);
    if (!o.has_m) return {identity::ISOMETRY, false, "no M-representation for orbit " + partition_label(o.partition)};
    auto idx = tab.table.pairs_of(orbit);
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = 0; b < idx.size(); ++b) {
            IntPoly lhs = tab.M[idx[a]][idx[b]];
            IntPoly rhs = q_M_pairing(o, tab.table.pairs[idx[a]].local_system,
                                      tab.table.pairs[idx[b]].local_system);
            if (!(lhs == rhs))
                return {identity::ISOMETRY, false,
                        "orbit " + partition_label(o.partition) + " entry " + pair_name(tab, idx[a]) + "," +
                            pair_name(tab, idx[b]) + ": " + lhs.to_string() + " vs " + rhs.to_string()};
        }
    return {identity::ISOMETRY, true, ""};
}

namespace {

// +1 / -1 if X_q(w) = eps (-1)^{d_e} sgn(w0) X_{-q}(w0 w) on every class, 0 otherwise
int twist_sign(const GreenTableau& tab, int pi, int sw0) {
    const auto& g = *tab.group;
    auto vq = tab.X[pi].class_values(Exec::Serial);
    int d = tab.table.orbits[tab.orbit_of(pi)].d_e;
    mpz_class s = ((d % 2) ? -1 : 1) * sw0;
    int eps = 0;
    for (int c = 0; c < g.num_classes(); ++c) {
        IntPoly rhs = vq[g.w0_times_class(c)].negate_q() * s;
        int here = vq[c] == rhs ? 1 : (vq[c] == rhs * mpz_class(-1) ? -1 : 0);
        if (rhs.is_zero()) continue;
        if (here == 0 || (eps != 0 && here != eps)) return 0;
        eps = here;
    }
    return eps == 0 ? 1 : eps;
}

}  // namespace

CheckResult caction_check(const GreenTableau& tab) {
    const auto& g = *tab.group;
    if (!g.type().delta_trivial())
        return {identity::CACTION, false, "w0 is not central in " + g.type().name()};
    int sw0 = g.sign_of_class(g.w0_class());
    for (int pi = 0; pi < tab.num_pairs(); ++pi)
        if (twist_sign(tab, pi, sw0) != 1) {
            auto vq = tab.X[pi].class_values(Exec::Serial);
            int d = tab.table.orbits[tab.orbit_of(pi)].d_e;
            mpz_class s = ((d % 2) ? -1 : 1) * sw0;
            for (int c = 0; c < g.num_classes(); ++c)
                if (!(vq[c] == vq[g.w0_times_class(c)].negate_q() * s))
                    return {identity::CACTION, false,
                            "pair " + pair_name(tab, pi) + " class " + g.conj_class(c).label};
        }
    return {identity::CACTION, true, ""};
}

std::vector<int> caction_signs(const GreenTableau& tab) {
    const auto& g = *tab.group;
    if (!g.type().delta_trivial()) throw std::invalid_argument("w0 is not central");
    int sw0 = g.sign_of_class(g.w0_class());
    std::vector<int> r;
    for (int pi = 0; pi < tab.num_pairs(); ++pi) r.push_back(twist_sign(tab, pi, sw0));
    return r;
}

}  // namespace greenpoly
