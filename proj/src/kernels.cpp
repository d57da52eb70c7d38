#include "greenpoly/kernels.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace greenpoly {

namespace {

using i128 = __int128;

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

// Per-class weights |C| * weight[c] as fixed-width coefficients. For the
// desk-scale groups |C| chi_i chi_j <= |W|^2 < 2^38 and the weight coefficients
// are bounded by |W|, so every partial sum fits comfortably in 128 bits.
struct Weights {
    int deg = -1;
    std::vector<std::vector<i128>> w;  // [class][coeff]
};

Weights prepare(const WeylGroupData& g, const std::vector<IntPoly>& weight) {
    if (static_cast<int>(weight.size()) != g.num_classes())
        throw std::invalid_argument("class_weighted_gram: one weight per class expected");
    Weights W;
    for (const auto& p : weight) W.deg = std::max(W.deg, p.degree());
    W.w.assign(weight.size(), std::vector<i128>(W.deg + 1, 0));
    for (size_t c = 0; c < weight.size(); ++c) {
        long size = g.conj_class(static_cast<int>(c)).size;
        for (int k = 0; k <= weight[c].degree(); ++k) {
            const mpz_class& x = weight[c].coeffs()[k];
            if (!x.fits_slong_p()) throw std::overflow_error("class weight coefficient too large");
            W.w[c][k] = static_cast<i128>(x.get_si()) * size;
        }
    }
    return W;
}

IntPoly gram_entry(const WeylGroupData& g, const Weights& W, int i, int j) {
    const auto& ti = g.char_table()[i];
    const auto& tj = g.char_table()[j];
    std::vector<i128> acc(W.deg + 1, 0);
    for (int c = 0; c < g.num_classes(); ++c) {
        i128 f = static_cast<i128>(ti[c]) * tj[c];
        if (f == 0) continue;
        const auto& wc = W.w[c];
        for (int k = 0; k <= W.deg; ++k) acc[k] += f * wc[k];
    }
    std::vector<mpz_class> coeffs(acc.size());
    i128 order = g.order();
    for (size_t k = 0; k < acc.size(); ++k) {
        if (acc[k] % order != 0)
            throw std::domain_error("pairing not integral: character table corrupted?");
        coeffs[k] = to_mpz(acc[k] / order);
    }
    return IntPoly(std::move(coeffs));
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

IntPolyMatrix class_weighted_gram(const WeylGroupData& g, const std::vector<IntPoly>& weight,
                                  Exec exec) {
    Weights W = prepare(g, weight);
    int n = g.num_irreps();
    IntPolyMatrix G(n, std::vector<IntPoly>(n));
    if (exec == Exec::Serial) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) G[i][j] = G[j][i] = gram_entry(g, W, i, j);
        return G;
    }
    // exceptions cannot cross the parallel region; collect and rethrow
    bool failed = false;
    std::string msg;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            try {
                IntPoly e = gram_entry(g, W, i, j);
                G[i][j] = e;
                G[j][i] = std::move(e);
            } catch (const std::exception& ex) {
#pragma omp critical
                {
                    failed = true;
                    msg = ex.what();
                }
            }
        }
    }
    if (failed) throw std::domain_error(msg);
    return G;
}

std::vector<IntPoly> class_values(const WeylGroupData& g, const std::vector<IntPoly>& coords,
                                  Exec exec) {
    if (static_cast<int>(coords.size()) != g.num_irreps())
        throw std::invalid_argument("class_values: one coordinate per irrep expected");
    int nc = g.num_classes();
    std::vector<IntPoly> out(nc);
    auto one = [&](int c) {
        IntPoly v;
        for (int i = 0; i < g.num_irreps(); ++i) {
            long x = g.char_value(i, c);
            if (x != 0 && !coords[i].is_zero()) v.add_scaled(coords[i], mpz_class(x));
        }
        out[c] = std::move(v);
    };
    if (exec == Exec::Serial) {
        for (int c = 0; c < nc; ++c) one(c);
    } else {
#pragma omp parallel for schedule(static)
        for (int c = 0; c < nc; ++c) one(c);
    }
    return out;
}

}  // namespace greenpoly
