#include "greenpoly/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace greenpoly {

namespace {

template <class T>
std::string format_poly(const std::vector<T>& c, const std::string& var) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        T a = c[i];
        bool neg = a < 0;
        if (neg) a = -a;
        if (neg)
            os << "-";
        else if (!first)
            os << "+";
        first = false;
        std::string mag = a.get_str();
        bool frac = mag.find('/') != std::string::npos;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (a != 1) os << (frac ? "(" + mag + ")" : mag);
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}

IntPoly IntPoly::monomial(const mpz_class& c, int deg) {
    IntPoly p;
    if (c == 0) return p;
    p.c_.assign(deg + 1, 0);
    p.c_[deg] = c;
    return p;
}

IntPoly IntPoly::one_minus(int d, long c) {
    IntPoly p(1);
    p -= monomial(c, d);
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPoly::coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : mpz_class(0);
}

bool IntPoly::has_nonneg_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpz_class& x) { return x >= 0; });
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const mpz_class& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

void IntPoly::add_scaled(const IntPoly& b, const mpz_class& s, int shift) {
    if (s == 0 || b.is_zero()) return;
    size_t need = b.c_.size() + shift;
    if (need > c_.size()) c_.resize(need, 0);
    for (size_t j = 0; j < b.c_.size(); ++j) c_[j + shift] += s * b.c_[j];
    trim();
}

IntPoly IntPoly::divexact(const mpz_class& d) const {
    if (d == 0) throw std::domain_error("IntPoly: division by zero");
    IntPoly r = *this;
    for (auto& x : r.c_) {
        if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
            throw std::domain_error("IntPoly: inexact division by " + d.get_str());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    }
    return r;
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
    if (d.is_zero()) throw std::domain_error("IntPoly: division by zero polynomial");
    if (is_zero()) return {};
    if (degree() < d.degree())
        throw std::domain_error("IntPoly: inexact division by " + d.to_string());
    std::vector<mpz_class> rem = c_;
    const mpz_class& lead = d.c_.back();
    int dd = d.degree();
    std::vector<mpz_class> quo(degree() - dd + 1, 0);
    for (int k = degree() - dd; k >= 0; --k) {
        mpz_class& top = rem[k + dd];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("IntPoly: inexact division by " + d.to_string());
        mpz_class t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        quo[k] = t;
        for (int j = 0; j <= dd; ++j) rem[k + j] -= t * d.c_[j];
    }
    for (int j = 0; j < dd; ++j)
        if (rem[j] != 0)
            throw std::domain_error("IntPoly: inexact division by " + d.to_string());
    return IntPoly(std::move(quo));
}

IntPoly IntPoly::negate_q() const {
    IntPoly r = *this;
    for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

IntPoly IntPoly::reverse(int n) const {
    if (n < degree())
        throw std::domain_error("IntPoly::reverse: N=" + std::to_string(n) +
                                " below degree " + std::to_string(degree()));
    if (is_zero()) return {};
    std::vector<mpz_class> r(n + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) r[n - i] = c_[i];
    return IntPoly(std::move(r));
}

mpz_class IntPoly::eval(const mpz_class& q0) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q0 + *it;
    return acc;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

std::string IntPoly::to_string(const std::string& var) const { return format_poly(c_, var); }

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c_.emplace_back(x);
}

QPoly::QPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const mpq_class& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(r));
}

void QPoly::divmod(const QPoly& d, QPoly& quo, QPoly& rem) const {
    if (d.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
    std::vector<mpq_class> r = c_;
    int dd = d.degree();
    if (degree() < dd) {
        quo = QPoly();
        rem = *this;
        return;
    }
    std::vector<mpq_class> q(degree() - dd + 1, 0);
    mpq_class inv = 1 / d.lead();
    for (int k = degree() - dd; k >= 0; --k) {
        if (r[k + dd] == 0) continue;
        mpq_class t = r[k + dd] * inv;
        q[k] = t;
        for (int j = 0; j <= dd; ++j) r[k + j] -= t * d.c_[j];
    }
    r.resize(dd);
    quo = QPoly(std::move(q));
    rem = QPoly(std::move(r));
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    QPoly r = *this;
    r *= 1 / lead();
    return r;
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly quo, rem;
        a.divmod(b, quo, rem);
        a = std::move(b);
        b = rem.monic();  // keeps coefficient growth in check
    }
    return a.monic();
}

mpq_class QPoly::eval(const mpq_class& q0) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q0 + *it;
    return acc;
}

QPoly QPoly::negate_q() const {
    QPoly r = *this;
    for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

bool QPoly::is_integral() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const mpq_class& x) { return x.get_den() == 1; });
}

IntPoly QPoly::to_int() const {
    if (!is_integral()) throw std::domain_error("QPoly not integral: " + to_string());
    std::vector<mpz_class> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(x.get_num());
    return IntPoly(std::move(r));
}

std::string QPoly::to_string(const std::string& var) const { return format_poly(c_, var); }

// ---------------------------------------------------------------- RatFun

RatFun::RatFun(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    if (den_.degree() > 0) {
        QPoly g = QPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            QPoly r;
            num_.divmod(g, num_, r);
            den_.divmod(g, den_, r);
        }
    }
    mpq_class l = den_.lead();
    if (l != 1) {
        num_ *= 1 / l;
        den_ *= 1 / l;
    }
}

IntPoly RatFun::to_int_poly() const {
    if (!is_polynomial()) throw std::domain_error("RatFun not a polynomial: " + to_string());
    return num_.to_int();
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_one()) normalize();
        else if (num_.is_zero()) den_ = QPoly(1);
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    num_ = num_ * o.num_;
    if (den_.is_one() && o.den_.is_one()) return *this;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
    if (o.is_zero()) throw std::domain_error("RatFun: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

mpq_class RatFun::eval(const mpq_class& q0) const {
    mpq_class d = den_.eval(q0);
    if (d == 0) throw std::domain_error("RatFun: pole at " + q0.get_str());
    return num_.eval(q0) / d;
}

RatFun RatFun::negate_q() const { return RatFun(num_.negate_q(), den_.negate_q()); }

std::string RatFun::to_string(const std::string& var) const {
    if (den_.is_one()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

// ---------------------------------------------------------------- PolyMatrix

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = RatFun(1);
    return m;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("PolyMatrix: shape mismatch in product");
    PolyMatrix r(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k) {
            const RatFun& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.c_; ++j) {
                const RatFun& y = b(k, j);
                if (!y.is_zero()) r(i, j) += x * y;
            }
        }
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_)
        throw std::invalid_argument("PolyMatrix: shape mismatch in difference");
    PolyMatrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
}

PolyMatrix PolyMatrix::scaled(const RatFun& s) const {
    PolyMatrix r = *this;
    for (auto& x : r.e_) x *= s;
    return r;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const RatFun& x) { return x.is_zero(); });
}

bool PolyMatrix::is_identity() const { return r_ == c_ && *this == identity(r_); }

namespace {

// Row i of a is scaled by a polynomial so that it lands in Z[q]. Returns the
// integer matrix and the per-row scale factors (as elements of Q(q)).
std::vector<std::vector<IntPoly>> clear_denominators(const PolyMatrix& a,
                                                     std::vector<RatFun>& scale) {
    int n = a.rows(), m = a.cols();
    std::vector<std::vector<IntPoly>> b(n, std::vector<IntPoly>(m));
    scale.assign(n, RatFun(1));
    for (int i = 0; i < n; ++i) {
        // lcm of denominators
        QPoly l(1);
        for (int j = 0; j < m; ++j) {
            const QPoly& d = a(i, j).den();
            if (d.is_one()) continue;
            QPoly g = QPoly::gcd(l, d), quo, rem;
            (l * d).divmod(g, quo, rem);
            l = quo;
        }
        RatFun s(l, QPoly(1));
        // lcm of coefficient denominators after multiplying through
        std::vector<QPoly> row(m);
        mpz_class cl = 1;
        for (int j = 0; j < m; ++j) {
            row[j] = (a(i, j) * s).num();
            for (const auto& c : row[j].coeffs()) mpz_lcm(cl.get_mpz_t(), cl.get_mpz_t(), c.get_den_mpz_t());
        }
        for (int j = 0; j < m; ++j) {
            row[j] *= mpq_class(cl);
            b[i][j] = row[j].to_int();
        }
        scale[i] = s * RatFun(QPoly(std::vector<mpq_class>{mpq_class(cl)}), QPoly(1));
    }
    return b;
}

}  // namespace

RatFun PolyMatrix::determinant() const {
    if (r_ != c_) throw std::invalid_argument("determinant of non-square matrix");
    int n = r_;
    if (n == 0) return RatFun(1);
    std::vector<RatFun> scale;
    auto b = clear_denominators(*this, scale);
    IntPoly prev(1);
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && b[p][k].is_zero()) ++p;
        if (p == n) return RatFun(0);
        if (p != k) {
            std::swap(b[p], b[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                b[i][j] = (b[k][k] * b[i][j] - b[i][k] * b[k][j]).divexact(prev);
            b[i][k] = IntPoly();
        }
        prev = b[k][k];
    }
    RatFun det(prev * mpz_class(sign));
    for (const auto& s : scale) det /= s;
    return det;
}

PolyMatrix PolyMatrix::inverse() const {
    if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
    int n = r_;
    std::vector<RatFun> scale;
    auto b = clear_denominators(*this, scale);
    for (int i = 0; i < n; ++i) {
        b[i].resize(2 * n);
        b[i][n + i] = IntPoly(1);
    }
    // fraction-free Gauss-Jordan: every intermediate entry is a minor of [B|I]
    IntPoly prev(1);
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && b[p][k].is_zero()) ++p;
        if (p == n) throw SingularMatrix("PolyMatrix::inverse: singular matrix (det = 0)", RatFun(0));
        if (p != k) std::swap(b[p], b[k]);
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            for (int j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                b[i][j] = (b[k][k] * b[i][j] - b[i][k] * b[k][j]).divexact(prev);
            }
            b[i][k] = IntPoly();
        }
        prev = b[k][k];
    }
    // left block is prev * I, right block is prev * B^{-1}
    PolyMatrix inv(n, n);
    QPoly d(prev);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (b[i][n + j].is_zero()) continue;
            // row i of B picked up scale[i]; A^{-1} = B^{-1} diag(scale)
            inv(i, j) = RatFun(QPoly(b[i][n + j]), d) * scale[j];
        }
    if (!(inv * *this).is_identity())
        throw std::logic_error("PolyMatrix::inverse: product check failed");
    return inv;
}

}  // namespace greenpoly
