#include "hopf/poly.hpp"

#include "hopf/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hopf {

void qpoly_trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    qpoly_trim(out);
    return out;
}

QPoly qpoly_sub(QPoly a, const QPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    qpoly_trim(a);
    return a;
}

QPoly qpoly_divmod(QPoly a, const QPoly& b, QPoly& rem)
{
    qpoly_trim(a);
    if (b.empty() || b.back() == 0)
        throw Error("DivisionByZero", "polynomial division by zero");
    QPoly quo;
    if (a.size() >= b.size())
        quo.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        Rational f = a.back() / lead;
        quo[shift] = f;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        qpoly_trim(a);
    }
    rem = std::move(a);
    return quo;
}

QPoly qpoly_gcd(QPoly a, QPoly b)
{
    qpoly_trim(a);
    qpoly_trim(b);
    while (!b.empty()) {
        QPoly r;
        qpoly_divmod(a, b, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a)
            c /= lead;
    }
    return a;
}

Rational qpoly_eval(const QPoly& p, const Rational& x)
{
    Rational acc = 0;
    for (size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n)
{
    if (n < 0)
        n = -n;
    std::vector<std::pair<mpz_class, int>> fac;
    for (mpz_class p = 2; p * p <= n && p < 2000000; ++p) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        fac.emplace_back(p, e);
    }
    if (n > 1)
        fac.emplace_back(n, 1);
    std::vector<mpz_class> out{1};
    for (auto& [p, e] : fac) {
        size_t sz = out.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i)
                out.push_back(out[i] * pk);
        }
    }
    return out;
}

}  // namespace

std::vector<Rational> rational_roots(QPoly p)
{
    qpoly_trim(p);
    std::set<Rational> roots;
    if (p.size() <= 1)
        return {};
    size_t low = 0;
    while (p[low] == 0)
        ++low;
    if (low > 0) {
        roots.insert(Rational(0));
        p.erase(p.begin(), p.begin() + low);
    }
    if (p.size() > 1) {
        mpz_class den = 1;
        for (auto& c : p)
            den = lcm(den, c.get_den());
        std::vector<mpz_class> z;
        for (auto& c : p)
            z.push_back(mpz_class(c * den));
        for (auto& a : divisors(z.front())) {
            for (auto& b : divisors(z.back())) {
                for (int sgn : {1, -1}) {
                    Rational r(mpz_class(sgn * a), b);
                    r.canonicalize();
                    if (qpoly_eval(p, r) == 0)
                        roots.insert(r);
                }
            }
        }
    }
    return {roots.begin(), roots.end()};
}

void cpoly_trim(CPoly& p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

CPoly cpoly_mul(const CPoly& a, const CPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    CPoly out(a.size() + b.size() - 1, CycScalar(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    cpoly_trim(out);
    return out;
}

CPoly cpoly_add(CPoly a, const CPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), CycScalar(0));
    for (size_t i = 0; i < b.size(); ++i)
        a[i] += b[i];
    cpoly_trim(a);
    return a;
}

CycScalar cpoly_eval(const CPoly& p, const CycScalar& x)
{
    CycScalar acc(0);
    for (size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

CPoly cpoly_divmod(CPoly a, const CPoly& b, CPoly& rem)
{
    cpoly_trim(a);
    if (b.empty() || b.back().is_zero())
        throw Error("DivisionByZero", "polynomial division by zero");
    CPoly quo;
    if (a.size() >= b.size())
        quo.assign(a.size() - b.size() + 1, CycScalar(0));
    const CycScalar lead_inv = b.back().inv();
    while (!a.empty() && a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        CycScalar f = a.back() * lead_inv;
        quo[shift] = f;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        cpoly_trim(a);
    }
    rem = std::move(a);
    return quo;
}

CPoly cpoly_gcd(CPoly a, CPoly b)
{
    cpoly_trim(a);
    cpoly_trim(b);
    while (!b.empty()) {
        CPoly r;
        cpoly_divmod(a, b, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        CycScalar inv = a.back().inv();
        for (auto& c : a)
            c *= inv;
    }
    return a;
}

CPoly cpoly_derivative(const CPoly& p)
{
    CPoly d;
    for (size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * CycScalar(static_cast<long>(i)));
    cpoly_trim(d);
    return d;
}

int cpoly_distinct_roots(const CPoly& p0)
{
    CPoly p = p0;
    cpoly_trim(p);
    if (p.size() <= 1)
        return 0;
    CPoly rem;
    CPoly sq = cpoly_divmod(p, cpoly_gcd(p, cpoly_derivative(p)), rem);
    cpoly_trim(sq);
    return static_cast<int>(sq.size()) - 1;
}

std::vector<CycScalar> scaled_root_roots(const CPoly& p0, long M)
{
    CPoly p = p0;
    cpoly_trim(p);
    std::vector<CycScalar> out;
    if (p.size() <= 1)
        return out;
    for (auto& c : p)
        c = c.embed(std::lcm(M, c.modulus()));
    long L = M;
    for (auto& c : p)
        L = std::lcm(L, c.modulus());
    for (auto& c : p)
        c = c.embed(L);
    long phi = euler_phi(L);
    // rho -> -rho covers zeta^{k + L/2} when L is even
    long kmax = (L % 2 == 0) ? L / 2 : L;
    auto push_unique = [&](const CycScalar& x) {
        for (auto& y : out)
            if (y == x)
                return;
        out.push_back(x);
    };
    bool zero_root = p[0].is_zero();
    if (zero_root)
        push_unique(CycScalar(Rational(0), M));
    for (long k = 0; k < kmax; ++k) {
        // p(rho z^k) = sum_d p_d z^{kd} rho^d, split per coordinate
        std::vector<QPoly> coord(phi, QPoly(p.size(), Rational(0)));
        for (size_t d = 0; d < p.size(); ++d) {
            CycScalar t = p[d] * CycScalar::root_of_unity(L, k * static_cast<long>(d));
            for (long m = 0; m < phi; ++m)
                coord[m][d] = t.coeffs()[m];
        }
        QPoly g;
        for (auto& c : coord)
            g = qpoly_gcd(g, c);
        for (auto& rho : rational_roots(g)) {
            if (rho == 0)
                continue;
            CycScalar x = CycScalar(rho, L) * CycScalar::root_of_unity(L, k);
            if (cpoly_eval(p, x).is_zero())
                push_unique(x.embed(L));
        }
    }
    return out;
}

}  // namespace hopf
