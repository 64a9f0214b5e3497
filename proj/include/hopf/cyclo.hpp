#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hopf {

using Rational = mpq_class;

struct CycField;

// Exact element of Q(zeta_M), stored as coefficients of 1, z, ..., z^{phi(M)-1}
// reduced modulo the M-th cyclotomic polynomial.
class CycScalar {
public:
    CycScalar();
    CycScalar(long v);  // NOLINT: integers promote freely
    explicit CycScalar(const Rational& r, long modulus = 1);

    static CycScalar root_of_unity(long M, long k);
    static CycScalar from_coeffs(long M, std::vector<Rational> coeffs);

    long modulus() const;
    int degree() const { return static_cast<int>(c_.size()); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational to_rational() const;

    CycScalar embed(long M2) const;
    CycScalar inv() const;
    CycScalar pow(long long e) const;
    std::optional<long> multiplicative_order() const;

    // x = rho * zeta_M^k with rho > 0 rational, k in [0, M)
    std::optional<std::pair<Rational, long>> as_scaled_root() const;

    std::string str() const;
    std::string pretty() const;
    static CycScalar parse(const std::string& s);

    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    CycScalar& operator/=(const CycScalar& o);

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    // lexicographic on coefficient vectors at a common modulus
    friend int compare(const CycScalar& a, const CycScalar& b);
    friend bool operator<(const CycScalar& a, const CycScalar& b) { return compare(a, b) < 0; }

private:
    CycScalar(const CycField* f, std::vector<Rational> c) : f_(f), c_(std::move(c)) {}
    void unify(CycScalar& o);

    const CycField* f_;
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const CycScalar& x);

long euler_phi(long M);
long lcm_long(long a, long b);

}  // namespace hopf
