#include "hopf/cyclo.hpp"

#include "hopf/error.hpp"
#include "hopf/poly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace hopf {

struct CycField {
    long M = 1;
    int phi = 1;
    std::vector<long> cyclo;                   // monic, length phi + 1
    std::vector<std::vector<Rational>> power;     // z^e for e in [0, M)
};

namespace {

std::mutex registry_mutex;
std::map<long, std::unique_ptr<CycField>>& registry()
{
    static std::map<long, std::unique_ptr<CycField>> r;
    return r;
}

std::vector<long> int_div_exact(std::vector<long> a, const std::vector<long>& b)
{
    // b monic
    std::vector<long> quo(a.size() - b.size() + 1, 0);
    for (size_t s = quo.size(); s-- > 0;) {
        long f = a[s + b.size() - 1];
        quo[s] = f;
        for (size_t i = 0; i < b.size(); ++i)
            a[s + i] -= f * b[i];
    }
    return quo;
}

const CycField* build_locked(long M)
{
    auto& reg = registry();
    auto it = reg.find(M);
    if (it != reg.end())
        return it->second.get();
    std::vector<long> num(M + 1, 0);
    num[0] = -1;
    num[M] = 1;
    for (long d = 1; d < M; ++d) {
        if (M % d)
            continue;
        const CycField* fd = build_locked(d);
        num = int_div_exact(num, fd->cyclo);
    }
    auto f = std::make_unique<CycField>();
    f->M = M;
    f->cyclo = num;
    f->phi = static_cast<int>(num.size()) - 1;
    int phi = f->phi;
    f->power.resize(M);
    std::vector<Rational> cur(phi, Rational(0));
    cur[0] = 1;
    for (long e = 0; e < M; ++e) {
        f->power[e] = cur;
        // cur *= z
        Rational top = cur[phi - 1];
        for (int i = phi - 1; i > 0; --i)
            cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0) {
            for (int i = 0; i < phi; ++i)
                cur[i] -= top * Rational(f->cyclo[i]);
        }
    }
    const CycField* out = f.get();
    reg.emplace(M, std::move(f));
    return out;
}

const CycField* intern(long M)
{
    if (M < 1)
        throw Error("IncompatibleModulus", "modulus must be positive");
    std::lock_guard<std::mutex> lock(registry_mutex);
    return build_locked(M);
}

const CycField* rational_field()
{
    static const CycField* f = intern(1);
    return f;
}

}  // namespace

long euler_phi(long M)
{
    long result = M;
    long m = M;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0)
                m /= p;
            result -= result / p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

long lcm_long(long a, long b)
{
    return std::lcm(a, b);
}

CycScalar::CycScalar() : f_(rational_field()), c_(1, Rational(0)) {}

CycScalar::CycScalar(long v) : f_(rational_field()), c_(1, Rational(v)) {}

CycScalar::CycScalar(const Rational& r, long modulus) : f_(intern(modulus)), c_(f_->phi, Rational(0))
{
    c_[0] = r;
    c_[0].canonicalize();
}

CycScalar CycScalar::root_of_unity(long M, long k)
{
    const CycField* f = intern(M);
    long e = ((k % M) + M) % M;
    return CycScalar(f, f->power[e]);
}

CycScalar CycScalar::from_coeffs(long M, std::vector<Rational> coeffs)
{
    const CycField* f = intern(M);
    if (static_cast<int>(coeffs.size()) != f->phi)
        throw Error("ParseError", "coefficient count must equal phi(M)");
    for (auto& c : coeffs)
        c.canonicalize();
    return CycScalar(f, std::move(coeffs));
}

long CycScalar::modulus() const
{
    return f_->M;
}

bool CycScalar::is_zero() const
{
    for (const auto& c : c_)
        if (c != 0)
            return false;
    return true;
}

bool CycScalar::is_rational() const
{
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

bool CycScalar::is_one() const
{
    return is_rational() && c_[0] == 1;
}

Rational CycScalar::to_rational() const
{
    if (!is_rational())
        throw Error("NotRational", str());
    return c_[0];
}

CycScalar CycScalar::embed(long M2) const
{
    long M = f_->M;
    if (M2 % M != 0)
        throw Error("IncompatibleModulus", "cannot embed modulus " + std::to_string(M) + " into " + std::to_string(M2));
    if (M2 == M)
        return *this;
    const CycField* g = intern(M2);
    std::vector<Rational> out(g->phi, Rational(0));
    long step = M2 / M;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0)
            continue;
        const auto& pw = g->power[(static_cast<long>(j) * step) % M2];
        for (int i = 0; i < g->phi; ++i)
            if (pw[i] != 0)
                out[i] += c_[j] * pw[i];
    }
    return CycScalar(g, std::move(out));
}

void CycScalar::unify(CycScalar& o)
{
    if (f_ == o.f_)
        return;
    long L = std::lcm(f_->M, o.f_->M);
    if (f_->M != L)
        *this = embed(L);
    if (o.f_->M != L)
        o = o.embed(L);
}

CycScalar CycScalar::operator-() const
{
    CycScalar r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o)
{
    if (f_ == o.f_) {
        for (size_t i = 0; i < c_.size(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    if (o.f_->M == 1 || (o.is_rational() && f_->M % o.f_->M == 0)) {
        c_[0] += o.c_[0];
        return *this;
    }
    CycScalar b = o;
    unify(b);
    return *this += b;
}

CycScalar& CycScalar::operator-=(const CycScalar& o)
{
    return *this += -o;
}

CycScalar& CycScalar::operator*=(const CycScalar& o)
{
    if (o.is_rational() && (f_ == o.f_ || f_->M % o.f_->M == 0)) {
        const Rational r = o.c_[0];
        for (auto& c : c_)
            c *= r;
        return *this;
    }
    if (is_rational() && o.f_->M % f_->M == 0) {
        Rational r = c_[0];
        *this = o;
        for (auto& c : c_)
            c *= r;
        return *this;
    }
    if (f_ != o.f_) {
        CycScalar b = o;
        unify(b);
        return *this *= b;
    }
    int phi = f_->phi;
    std::vector<Rational> prod(2 * phi - 1, Rational(0));
    for (int i = 0; i < phi; ++i) {
        if (c_[i] == 0)
            continue;
        for (int j = 0; j < phi; ++j)
            if (o.c_[j] != 0)
                prod[i + j] += c_[i] * o.c_[j];
    }
    std::vector<Rational> out(prod.begin(), prod.begin() + phi);
    for (int e = phi; e < 2 * phi - 1; ++e) {
        if (prod[e] == 0)
            continue;
        const auto& pw = f_->power[e % f_->M];
        for (int i = 0; i < phi; ++i)
            if (pw[i] != 0)
                out[i] += prod[e] * pw[i];
    }
    c_ = std::move(out);
    return *this;
}

CycScalar& CycScalar::operator/=(const CycScalar& o)
{
    return *this *= o.inv();
}

CycScalar CycScalar::inv() const
{
    if (is_zero())
        throw Error("DivisionByZero", "inverse of zero");
    if (is_rational())
        return CycScalar(f_, [&] {
            std::vector<Rational> v(c_.size(), Rational(0));
            v[0] = 1 / c_[0];
            return v;
        }());
    // extended Euclid: s*a + t*Phi = g, g constant
    QPoly phi_poly(f_->cyclo.begin(), f_->cyclo.end());
    QPoly a(c_.begin(), c_.end());
    qpoly_trim(a);
    QPoly r0 = phi_poly, r1 = a;
    QPoly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        QPoly rem;
        QPoly quo = qpoly_divmod(r0, r1, rem);
        QPoly s2 = qpoly_sub(s0, qpoly_mul(quo, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty())
        throw Error("DivisionByZero", "element not invertible");
    Rational g = r1[0];
    QPoly rem;
    qpoly_divmod(s1, phi_poly, rem);
    std::vector<Rational> out(f_->phi, Rational(0));
    for (size_t i = 0; i < rem.size(); ++i)
        out[i] = rem[i] / g;
    return CycScalar(f_, std::move(out));
}

CycScalar CycScalar::pow(long long e) const
{
    if (e < 0)
        return inv().pow(-e);
    CycScalar base = *this;
    CycScalar acc(Rational(1), f_->M);
    while (e > 0) {
        if (e & 1)
            acc *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return acc;
}

std::optional<long> CycScalar::multiplicative_order() const
{
    if (is_zero())
        throw Error("DivisionByZero", "order of zero");
    long L = std::lcm(2L, f_->M);
    for (long d = 1; d <= L; ++d) {
        if (L % d)
            continue;
        if (pow(d).is_one())
            return d;
    }
    return std::nullopt;
}

std::optional<std::pair<Rational, long>> CycScalar::as_scaled_root() const
{
    if (is_zero())
        return std::nullopt;
    long M = f_->M;
    for (long k = 0; k < M; ++k) {
        CycScalar y = *this * root_of_unity(M, -k);
        if (y.is_rational() && y.c_[0] > 0)
            return std::make_pair(y.c_[0], k);
    }
    return std::nullopt;
}

std::string CycScalar::str() const
{
    std::ostringstream os;
    os << "cyc(" << f_->M << ";";
    for (size_t i = 0; i < c_.size(); ++i)
        os << (i ? ", " : " ") << c_[i].get_str();
    os << ")";
    return os.str();
}

std::string CycScalar::pretty() const
{
    if (is_rational())
        return c_[0].get_str();
    return str();
}

namespace {

Rational parse_rational(std::string s)
{
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos)
        throw Error("ParseError", "empty rational");
    s = s.substr(a, b - a + 1);
    if (!s.empty() && s[0] == '+')
        s = s.substr(1);
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw Error("ParseError", "bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace

CycScalar CycScalar::parse(const std::string& text)
{
    size_t a = text.find_first_not_of(" \t");
    if (a == std::string::npos)
        throw Error("ParseError", "empty scalar");
    std::string s = text.substr(a, text.find_last_not_of(" \t") - a + 1);
    if (s.rfind("cyc(", 0) == 0) {
        if (s.back() != ')')
            throw Error("ParseError", "missing ')' in '" + s + "'");
        std::string body = s.substr(4, s.size() - 5);
        size_t semi = body.find(';');
        if (semi == std::string::npos)
            throw Error("ParseError", "missing ';' in '" + s + "'");
        long M = std::stol(body.substr(0, semi));
        std::vector<Rational> cs;
        std::string rest = body.substr(semi + 1);
        size_t pos = 0;
        while (pos <= rest.size()) {
            size_t comma = rest.find(',', pos);
            if (comma == std::string::npos)
                comma = rest.size();
            cs.push_back(parse_rational(rest.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return from_coeffs(M, std::move(cs));
    }
    return CycScalar(parse_rational(s));
}

bool operator==(const CycScalar& a, const CycScalar& b)
{
    if (a.f_ == b.f_)
        return a.c_ == b.c_;
    CycScalar x = a, y = b;
    x.unify(y);
    return x.c_ == y.c_;
}

int compare(const CycScalar& a, const CycScalar& b)
{
    CycScalar x = a, y = b;
    x.unify(y);
    for (size_t i = 0; i < x.c_.size(); ++i) {
        int c = cmp(x.c_[i], y.c_[i]);
        if (c)
            return c < 0 ? -1 : 1;
    }
    return 0;
}

std::ostream& operator<<(std::ostream& os, const CycScalar& x)
{
    return os << x.pretty();
}

}  // namespace hopf
