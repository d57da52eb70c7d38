#pragma once

#include "greenpoly/charring.hpp"
#include "greenpoly/springer.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace greenpoly {

// Rows and columns of K, M, Lambda, Omega are indexed by Springer pairs in
// table order (largest orbit first). Column c of K holds X_q of pair c in the
// irrep basis, with rows relabelled by the pairs' irreps, so K is upper
// unitriangular.
struct GreenTableau {
    GroupPtr group;
    SpringerTable table;
    IntPoly p;
    IntPolyMatrix K, M, Lambda, Omega;
    IntPolyMatrix gram;               // q-elliptic Gram on irreps
    std::vector<GradedCharacter> X;   // per pair

    int num_pairs() const { return table.num_pairs(); }
    int orbit_of(int pair) const { return table.pairs.at(pair).orbit; }
    PolyMatrix K_matrix() const { return to_poly_matrix(K); }
    PolyMatrix M_matrix() const { return to_poly_matrix(M); }
    PolyMatrix Lambda_matrix() const { return to_poly_matrix(Lambda); }
    PolyMatrix Omega_matrix() const { return to_poly_matrix(Omega); }
    IntPolyMatrix M_block(int orbit) const;
};

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

GreenTableau solve(const SpringerTable& t, GroupPtr g);
GradedCharacter green(const GreenTableau& tab, int pair);
GradedCharacter green(const GreenTableau& tab, const Partition& orbit, const std::string& local_system);

// Identity names used in verification reports.
namespace identity {
inline constexpr const char* LS = "lusztig-shoji-equation";          // K Lambda K^t = Omega
inline constexpr const char* LAMBDA_M = "lambda-times-m";            // Lambda M = p Id
inline constexpr const char* ORTHO = "cross-orbit-orthogonality";    // off-block M = 0
inline constexpr const char* TRIANGULAR = "k-unitriangular-support";
inline constexpr const char* M_TWO_WAYS = "m-two-ways";              // direct vs p Lambda^{-1}
inline constexpr const char* POSITIVITY = "green-positivity";
inline constexpr const char* GRAM_OMEGA = "gram-equals-p-omega-inverse";
inline constexpr const char* ISOMETRY = "component-group-isometry";  // M block = (q,M)-pairing
inline constexpr const char* CACTION = "delta-one-twist-identity";
inline constexpr const char* CHEVALLEY = "coinvariant-product";
}  // namespace identity

struct CheckResult {
    std::string identity;
    bool ok = true;
    std::string location;  // offending indices, empty on success
};

std::vector<CheckResult> verify_identities(const GreenTableau& tab);
PolyMatrix m_matrix(const GreenTableau& tab);  // cross-checked; throws SolverError on mismatch
CheckResult isometry_check(const GreenTableau& tab, int orbit);
CheckResult caction_check(const GreenTableau& tab);
// Per pair: the scalar eps by which the two sides differ (+1, -1), or 0 if
// they are not proportional. For delta = 1 the twist acts on the phi-part of
// the cohomology through a centralizer element, so eps = phi(g) may be -1.
std::vector<int> caction_signs(const GreenTableau& tab);

// helpers shared with the spin module and tests
IntPolyMatrix int_matmul(const IntPolyMatrix& a, const IntPolyMatrix& b);
IntPolyMatrix int_transpose(const IntPolyMatrix& a);
IntPolyMatrix unitriangular_inverse(const IntPolyMatrix& k);  // upper, unit diagonal

}  // namespace greenpoly
