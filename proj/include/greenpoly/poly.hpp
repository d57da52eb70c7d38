#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace greenpoly {

// Dense polynomial in Z[q], ascending degree, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(long c);  // NOLINT: constants convert implicitly

    static IntPoly monomial(const mpz_class& c, int deg);
    static IntPoly q() { return monomial(1, 1); }
    // 1 - c q^d
    static IntPoly one_minus(int d, long c = 1);

    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    mpz_class coeff(int i) const;
    bool has_nonneg_coeffs() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const mpz_class& s);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const mpz_class& s) { return a *= s; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    // a += s * b * q^shift without temporaries; hot in the pairing kernels
    void add_scaled(const IntPoly& b, const mpz_class& s, int shift = 0);

    // Divides every coefficient by d; throws if not exact.
    IntPoly divexact(const mpz_class& d) const;
    // Exact polynomial division; throws if the remainder is nonzero.
    IntPoly divexact(const IntPoly& d) const;

    IntPoly negate_q() const;        // f(-q)
    IntPoly reverse(int n) const;    // q^n f(1/q); requires n >= deg f
    mpz_class eval(const mpz_class& q0) const;
    IntPoly pow(unsigned e) const;

    std::string to_string(const std::string& var = "q") const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

// Polynomial over Q, used inside RatFun and for exact linear algebra.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> coeffs);
    explicit QPoly(const IntPoly& p);
    QPoly(long c);  // NOLINT

    const std::vector<mpq_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpq_class& lead() const { return c_.back(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const mpq_class& s);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    // Euclidean division: *this = quo * d + rem
    void divmod(const QPoly& d, QPoly& quo, QPoly& rem) const;
    QPoly monic() const;
    static QPoly gcd(QPoly a, QPoly b);  // monic, gcd(0,0)=0

    mpq_class eval(const mpq_class& q0) const;
    QPoly negate_q() const;
    bool is_integral() const;
    IntPoly to_int() const;  // throws unless integral
    std::string to_string(const std::string& var = "q") const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

// Reduced element of Q(q): gcd(num, den) = 1 and den monic.
class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(long c) : num_(c), den_(1) {}  // NOLINT
    RatFun(const IntPoly& p) : num_(p), den_(1) {}  // NOLINT
    RatFun(QPoly num, QPoly den);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_int_poly() const { return is_polynomial() && num_.is_integral(); }
    IntPoly to_int_poly() const;  // throws unless is_int_poly()

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    mpq_class eval(const mpq_class& q0) const;  // throws on a pole
    RatFun negate_q() const;
    std::string to_string(const std::string& var = "q") const;

private:
    void normalize();
    QPoly num_, den_;
};

class SingularMatrix : public std::runtime_error {
public:
    SingularMatrix(const std::string& what, RatFun det)
        : std::runtime_error(what), det_(std::move(det)) {}
    const RatFun& determinant() const { return det_; }

private:
    RatFun det_;
};

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols) : r_(rows), c_(cols), e_(size_t(rows) * cols) {}
    static PolyMatrix identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    RatFun& operator()(int i, int j) { return e_[size_t(i) * c_ + j]; }
    const RatFun& operator()(int i, int j) const { return e_[size_t(i) * c_ + j]; }

    PolyMatrix transpose() const;
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    PolyMatrix scaled(const RatFun& s) const;
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
    }
    bool is_zero() const;
    bool is_identity() const;

    // Bareiss elimination on the polynomial-cleared matrix; returns the exact
    // inverse (checked by multiplication) or throws SingularMatrix.
    PolyMatrix inverse() const;
    RatFun determinant() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<RatFun> e_;
};

}  // namespace greenpoly
