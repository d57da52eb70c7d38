#pragma once

#include "greenpoly/lusztig_shoji.hpp"

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace greenpoly {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

class SpinError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Complex Clifford module for V with gamma_i^2 = -1. The matrices have size
// 2^ceil(n/2); for odd n this is S+ + S-, for even n it is S and z cuts it
// into S+ (z = +c) and S- (z = -c), c = 1 or i with c^2 = (-1)^{n(n+1)/2}.
struct PinRep {
    GroupPtr group;
    int n = 0;
    std::vector<CMatrix> gammas;
    CMatrix z;
    cplx c = 1.0;
    CMatrix proj_plus, proj_minus;  // even n only
    // orthonormal frame of V: rows are basis vectors in ambient coordinates
    std::vector<std::vector<double>> frame;
    std::vector<CMatrix> simple_lifts;  // gamma of the unit simple roots
    std::vector<CMatrix> class_lifts;   // lift of each class rep via its reduced word

    int a_V() const { return n % 2 ? 2 : 1; }
    long spin_dim() const { return gammas.empty() ? 0 : gammas[0].rows(); }
    CMatrix gamma(const std::vector<double>& v) const;  // v in frame coordinates
    CMatrix lift(const std::vector<int>& word) const;
    std::vector<double> to_frame(const std::vector<double>& ambient) const;
};

PinRep build_pin(GroupPtr g, double tol = 1e-10);

// Residual reports; each returns the worst deviation seen.
double clifford_residual(const PinRep& p);  // anticommutation and z^2
double braid_residual(const PinRep& p);     // (s_i s_j)^m + Id
double lift_residual(const PinRep& p);      // twisted conjugation of lifts vs w on V

cplx trace_spin(const PinRep& p, const std::vector<int>& word);
cplx trace_chiral(const PinRep& p, const std::vector<int>& word);  // tr S+ - tr S-
// max over classes of |tr^2 - a_V det(1 + w)|
double spin_squared_residual(const PinRep& p);

struct SpinClassFunction {
    GroupPtr group;
    std::vector<cplx> values;  // on the lift of each class representative
    mpz_class exact_norm = 0;

    double numeric_norm() const;  // (1/|W|) sum |C| |value|^2
    bool is_zero(double tol) const;
};

SpinClassFunction sigma_tilde(const GreenTableau& tab, const PinRep& pin, int pair);

struct TypeAReport {
    Partition lambda;
    int n = 0;
    bool distinct = false;
    bool even = false;  // l(lambda) = n mod 2
    mpz_class a_lambda = 0, norm = 0, g_lambda = 0, constituent_dim = 0;
    int b_lambda = 0;
    bool single = false;  // one self-dual irreducible vs a dual pair
};

mpz_class g_lambda(const Partition& lambda);
// Type A only; throws SpinError when the norm matches neither pattern.
TypeAReport classify_constituents(const GreenTableau& tab, const PinRep& pin, int pair);

struct CharFormulaResult {
    bool ok = true;
    double worst = 0;
    std::vector<int> checked;  // (-1)-elliptic classes
    std::string location;
};

CharFormulaResult char_formula_check(const GreenTableau& tab, const PinRep& pin, int pair,
                                     double tol = 1e-8);

// <sigma(pair) (x) S, X_{-1}(target) (x) S> over the pin cover, exact.
mpz_class tensor_spin_multiplicity(const GreenTableau& tab, int sigma_pair, int target_pair);

struct DiracIndex {
    std::vector<cplx> even_part;  // X_1 (w) (tr S+ - tr S-)(w~)
    std::vector<cplx> coset_part; // X_{-1}(w) tr(w~, S), up to a scalar
};

DiracIndex dirac_index_char(const GreenTableau& tab, const PinRep& pin, int pair);

}  // namespace greenpoly
