#include "greenpoly/spin.hpp"

#include <cmath>

namespace greenpoly {

namespace {

using namespace std::complex_literals;

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

// Hermitian, pairwise anticommuting, squaring to 1: Jordan-Wigner strings
// of Pauli matrices, 2k of them on (C^2)^{(x)k}.
std::vector<CMatrix> euclidean_gammas(int k) {
    CMatrix sx(2, 2), sy(2, 2), sz(2, 2), id = CMatrix::Identity(2, 2);
    sx << 0, 1, 1, 0;
    sy << 0, -1i, 1i, 0;
    sz << 1, 0, 0, -1;
    std::vector<CMatrix> out;
    for (int j = 0; j < k; ++j)
        for (const CMatrix* s : {&sx, &sy}) {
            CMatrix m = CMatrix::Identity(1, 1);
            for (int t = 0; t < k; ++t) m = kron(m, t < j ? sz : (t == j ? *s : id));
            out.push_back(m);
        }
    return out;
}

std::vector<std::vector<double>> orthonormal_frame(const WeylGroupData& g) {
    int m = g.ambient_dim();
    std::vector<std::vector<double>> f;
    if (g.type().family == Family::A || g.type().family == Family::G2) {
        // Helmert basis of the sum-zero hyperplane
        for (int k = 1; k < m; ++k) {
            std::vector<double> v(m, 0.0);
            double s = 1.0 / std::sqrt(double(k) * (k + 1));
            for (int i = 0; i < k; ++i) v[i] = s;
            v[k] = -k * s;
            f.push_back(v);
        }
    } else {
        for (int k = 0; k < m; ++k) {
            std::vector<double> v(m, 0.0);
            v[k] = 1.0;
            f.push_back(v);
        }
    }
    return f;
}

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

std::vector<double> frame_vector(const PinRep& p, int k) {
    std::vector<double> v(p.n, 0.0);
    v[k] = 1.0;
    return v;
}

// w acting on frame vector k, in frame coordinates
std::vector<double> act(const PinRep& p, const GroupElement& w, int k) {
    return p.to_frame(w.apply(p.frame[k]));
}

std::vector<mpz_class> values_at(const GreenTableau& tab, int pair, long q0) {
    auto v = tab.X.at(pair).class_values(Exec::Serial);
    std::vector<mpz_class> r;
    for (const auto& x : v) r.push_back(x.eval(q0));
    return r;
}

}  // namespace

CMatrix PinRep::gamma(const std::vector<double>& v) const {
    CMatrix r = CMatrix::Zero(spin_dim(), spin_dim());
    for (int k = 0; k < n; ++k)
        if (v[k] != 0.0) r += v[k] * gammas[k];
    return r;
}

CMatrix PinRep::lift(const std::vector<int>& word) const {
    CMatrix r = CMatrix::Identity(spin_dim(), spin_dim());
    for (int i : word) r = r * simple_lifts.at(i);
    return r;
}

std::vector<double> PinRep::to_frame(const std::vector<double>& ambient) const {
    std::vector<double> r;
    for (const auto& f : frame) {
        double s = 0;
        for (size_t i = 0; i < f.size(); ++i) s += f[i] * ambient[i];
        r.push_back(s);
    }
    return r;
}

PinRep build_pin(GroupPtr g, double tol) {
    PinRep p;
    p.group = g;
    p.n = g->rank();
    auto herm = euclidean_gammas((p.n + 1) / 2);
    herm.resize(p.n);  // odd n: drop the last one
    for (auto& h : herm) p.gammas.push_back(1i * h);

    long d = 1L << ((p.n + 1) / 2);
    p.z = CMatrix::Identity(d, d);
    for (const auto& gm : p.gammas) p.z = p.z * gm;
    long e = long(p.n) * (p.n + 1) / 2;
    p.c = (e % 2) ? cplx(0, 1) : cplx(1, 0);
    if (p.n % 2 == 0) {
        CMatrix id = CMatrix::Identity(d, d);
        p.proj_plus = 0.5 * (id + p.z / p.c);
        p.proj_minus = 0.5 * (id - p.z / p.c);
    }

    p.frame = orthonormal_frame(*g);
    for (const auto& r : g->simple_roots()) {
        std::vector<double> a(r.begin(), r.end());
        auto v = p.to_frame(a);
        double len = 0;
        for (double x : v) len += x * x;
        len = std::sqrt(len);
        for (double& x : v) x /= len;
        p.simple_lifts.push_back(p.gamma(v));
    }
    for (const auto& c : g->classes()) p.class_lifts.push_back(p.lift(c.word));

    double worst = std::max({clifford_residual(p), braid_residual(p), lift_residual(p)});
    if (!(worst <= tol))
        throw SpinError("pin representation for " + g->type().name() + " off by " +
                        std::to_string(worst));
    return p;
}

double clifford_residual(const PinRep& p) {
    double worst = 0;
    long d = p.spin_dim();
    CMatrix id = CMatrix::Identity(d, d);
    for (int i = 0; i < p.n; ++i)
        for (int j = i; j < p.n; ++j) {
            CMatrix ac = p.gammas[i] * p.gammas[j] + p.gammas[j] * p.gammas[i];
            if (i == j) ac += 2.0 * id;
            worst = std::max(worst, max_abs(ac));
        }
    double sgn = ((long(p.n) * (p.n + 1) / 2) % 2) ? -1.0 : 1.0;
    worst = std::max(worst, max_abs(p.z * p.z - sgn * id));
    return worst;
}

double braid_residual(const PinRep& p) {
    double worst = 0;
    long d = p.spin_dim();
    CMatrix id = CMatrix::Identity(d, d);
    int r = static_cast<int>(p.simple_lifts.size());
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            CMatrix st = p.simple_lifts[i] * p.simple_lifts[j], x = id;
            for (int k = 0; k < p.group->coxeter_m(i, j); ++k) x = x * st;
            worst = std::max(worst, max_abs(x + id));
        }
    return worst;
}

double lift_residual(const PinRep& p) {
    // eps(g) gamma(xi) g^{-1} must equal gamma(w xi)
    double worst = 0;
    const auto& g = *p.group;
    auto check = [&](const GroupElement& w, const CMatrix& l, size_t len) {
        CMatrix inv = l.inverse();
        double eps = (len % 2) ? -1.0 : 1.0;
        for (int k = 0; k < p.n; ++k) {
            CMatrix lhs = eps * l * p.gamma(frame_vector(p, k)) * inv;
            worst = std::max(worst, max_abs(lhs - p.gamma(act(p, w, k))));
        }
    };
    for (size_t i = 0; i < g.generators().size(); ++i) check(g.generators()[i], p.simple_lifts[i], 1);
    for (int c = 0; c < g.num_classes(); ++c)
        check(g.conj_class(c).rep, p.class_lifts[c], g.conj_class(c).word.size());
    return worst;
}

cplx trace_spin(const PinRep& p, const std::vector<int>& word) { return p.lift(word).trace(); }

cplx trace_chiral(const PinRep& p, const std::vector<int>& word) {
    return (p.lift(word) * p.z).trace() / p.c;
}

double spin_squared_residual(const PinRep& p) {
    const auto& g = *p.group;
    double worst = 0;
    for (int c = 0; c < g.num_classes(); ++c) {
        cplx t = p.class_lifts[c].trace();
        double target = p.a_V() * g.refl_charpoly(c).eval(-1).get_d();
        worst = std::max(worst, std::abs(t * t - target));
    }
    return worst;
}

double SpinClassFunction::numeric_norm() const {
    double s = 0;
    for (int c = 0; c < group->num_classes(); ++c)
        s += group->conj_class(c).size * std::norm(values[c]);
    return s / double(group->order());
}

bool SpinClassFunction::is_zero(double tol) const {
    for (const auto& v : values)
        if (std::abs(v) > tol) return false;
    return true;
}

SpinClassFunction sigma_tilde(const GreenTableau& tab, const PinRep& pin, int pair) {
    const auto& g = *tab.group;
    SpinClassFunction f{tab.group, {}, 0};
    auto x = values_at(tab, pair, -1);
    for (int c = 0; c < g.num_classes(); ++c)
        f.values.push_back(x[c].get_d() * pin.class_lifts[c].trace());
    auto v = tab.X[pair].eval(-1);
    f.exact_norm = pin.a_V() * minus_one_pairing(v, v);
    return f;
}

mpz_class g_lambda(const Partition& lambda) {
    int n = 0;
    for (int x : lambda) n += x;
    mpz_class num, den;
    mpz_fac_ui(num.get_mpz_t(), n);
    mpq_class r(num);
    for (int x : lambda) {
        mpz_fac_ui(den.get_mpz_t(), x);
        r /= den;
    }
    for (size_t i = 0; i < lambda.size(); ++i)
        for (size_t j = i + 1; j < lambda.size(); ++j)
            r *= mpq_class(lambda[i] - lambda[j], lambda[i] + lambda[j]);
    r.canonicalize();
    if (r.get_den() != 1) throw SpinError("g_lambda not integral for " + partition_label(lambda));
    return r.get_num();
}

TypeAReport classify_constituents(const GreenTableau& tab, const PinRep& pin, int pair) {
    const auto& g = *tab.group;
    if (g.type().family != Family::A) throw SpinError("classification is implemented for type A only");
    TypeAReport r;
    r.lambda = tab.table.orbits[tab.orbit_of(pair)].partition;
    r.n = g.rank() + 1;
    r.norm = sigma_tilde(tab, pin, pair).exact_norm;
    int l = static_cast<int>(r.lambda.size());
    r.distinct = true;
    for (int i = 0; i + 1 < l; ++i)
        if (r.lambda[i] == r.lambda[i + 1]) r.distinct = false;
    r.even = (l % 2) == (r.n % 2);
    if (!r.distinct) {
        if (r.norm != 0) throw SpinError("nonzero norm for non-distinct " + partition_label(r.lambda));
        return r;
    }
    int exp = (r.even && r.n % 2 == 0) ? l / 2 : (l - 1) / 2;
    r.a_lambda = mpz_class(1) << exp;
    r.b_lambda = r.even ? 1 : 2;
    mpz_class a2 = r.a_lambda * r.a_lambda;
    if (r.norm == a2)
        r.single = true;
    else if (r.norm == 2 * a2)
        r.single = false;
    else
        throw SpinError("norm " + r.norm.get_str() + " fits neither pattern for " +
                        partition_label(r.lambda));
    if (r.single != r.even)
        throw SpinError("norm pattern disagrees with the parity of " + partition_label(r.lambda));
    r.g_lambda = g_lambda(r.lambda);
    r.constituent_dim = (mpz_class(1) << ((r.n - l) / 2)) * r.g_lambda;
    return r;
}

CharFormulaResult char_formula_check(const GreenTableau& tab, const PinRep& pin, int pair,
                                     double tol) {
    const auto& g = *tab.group;
    CharFormulaResult res;
    auto x = values_at(tab, pair, -1);
    auto f = sigma_tilde(tab, pin, pair);
    for (int c = 0; c < g.num_classes(); ++c) {
        cplx t = pin.class_lifts[c].trace();
        bool elliptic = g.refl_charpoly(c).eval(-1) != 0;
        if (!elliptic) {
            if (std::abs(t) > tol) {
                res.ok = false;
                res.location = "trace nonzero off the elliptic set at class " + g.conj_class(c).label;
            }
            continue;
        }
        res.checked.push_back(c);
        if (std::abs(t) <= tol) {
            res.ok = false;
            res.location = "zero denominator at elliptic class " + g.conj_class(c).label;
            continue;
        }
        double err = std::abs(f.values[c] / t - x[c].get_d());
        res.worst = std::max(res.worst, err);
        if (err > tol) {
            res.ok = false;
            res.location = "class " + g.conj_class(c).label;
        }
    }
    return res;
}

mpz_class tensor_spin_multiplicity(const GreenTableau& tab, int sigma_pair, int target_pair) {
    // sigma = sum_p Kinv[p][sigma] X(p); only p in the target's orbit meet M
    auto kinv = unitriangular_inverse(tab.K);
    int a_V = tab.group->rank() % 2 ? 2 : 1;
    mpz_class s = 0;
    for (int p : tab.table.pairs_of(tab.orbit_of(target_pair)))
        s += kinv[p][sigma_pair].eval(-1) * tab.M[p][target_pair].eval(-1);
    return a_V * s;
}

DiracIndex dirac_index_char(const GreenTableau& tab, const PinRep& pin, int pair) {
    const auto& g = *tab.group;
    DiracIndex d;
    auto x1 = values_at(tab, pair, 1), xm = values_at(tab, pair, -1);
    for (int c = 0; c < g.num_classes(); ++c) {
        const CMatrix& l = pin.class_lifts[c];
        d.even_part.push_back(x1[c].get_d() * ((l * pin.z).trace() / pin.c));
        d.coset_part.push_back(xm[c].get_d() * l.trace());
    }
    return d;
}

}  // namespace greenpoly
