#include "hopf/algebra.hpp"

#include "hopf/error.hpp"

#include <numeric>
#include <sstream>
#include <tuple>

namespace hopf {

namespace {

long long mod_floor(long long a, long long m)
{
    long long r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error("Overflow", "Laurent exponent overflow");
    return r;
}

}  // namespace

AlgebraParams AlgebraParams::make(int n, int n1, const std::array<CycScalar, 3>& beta, long extra_modulus,
                                  long q_power)
{
    if (n < 2 || n1 < 1)
        throw Error("ParameterConstraint", "need n >= 2 and n1 >= 1");
    if (std::gcd(q_power, static_cast<long>(n)) != 1)
        throw Error("ParameterConstraint", "q must be a primitive n-th root of unity");
    AlgebraParams p;
    p.n = n;
    p.n1 = n1;
    long M = std::lcm(2L * n, extra_modulus);
    for (const auto& b : beta)
        M = std::lcm(M, b.modulus());
    p.M = M;
    p.qexp = mod_floor((M / n) * q_power, M);
    p.q = CycScalar::root_of_unity(M, p.qexp);
    p.beta1 = beta[0].embed(M);
    p.beta2 = beta[1].embed(M);
    p.beta3 = beta[2].embed(M);
    p.t = n / std::gcd(n, n1);
    p.u = n / p.t;
    return p;
}

CycScalar AlgebraParams::zeta(long long k) const
{
    return CycScalar::root_of_unity(M, static_cast<long>(mod_floor(k, M)));
}

CycScalar AlgebraParams::qpow(long long e) const
{
    return zeta(mod_floor(e, n) * qexp);
}

CycScalar AlgebraParams::sqrtq_pow(long long e) const
{
    long long h = (n % 2) ? mod_floor(qexp * ((n + 1) / 2), M) : qexp / 2;
    return zeta(mod_floor(e, 2 * n) * h);
}

std::string AlgebraParams::describe() const
{
    std::ostringstream os;
    os << "n=" << n << " n1=" << n1 << " M=" << M << " q=zeta_" << M << "^" << qexp << " beta=(" << beta1 << ","
       << beta2 << "," << beta3 << ")";
    return os.str();
}

std::string Monomial::str() const
{
    std::ostringstream os;
    os << "a^" << i << " b^" << j << " c^" << k << " x^" << u << " y^" << v;
    return os.str();
}

Element Element::monomial(const Monomial& m, const CycScalar& c)
{
    Element e;
    e.add(m, c);
    return e;
}

Element Element::scalar(const CycScalar& c)
{
    return monomial(Monomial{}, c);
}

void Element::add(const Monomial& m, const CycScalar& c)
{
    if (c.is_zero())
        return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& o)
{
    for (const auto& [m, c] : o.terms_)
        add(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o)
{
    for (const auto& [m, c] : o.terms_)
        add(m, -c);
    return *this;
}

Element Element::operator+(const Element& o) const
{
    Element r = *this;
    return r += o;
}

Element Element::operator-(const Element& o) const
{
    Element r = *this;
    return r -= o;
}

Element Element::operator*(const CycScalar& c) const
{
    Element r;
    for (const auto& [m, x] : terms_)
        r.add(m, x * c);
    return r;
}

bool Element::operator==(const Element& o) const
{
    if (terms_.size() != o.terms_.size())
        return false;
    for (auto a = terms_.begin(), b = o.terms_.begin(); a != terms_.end(); ++a, ++b)
        if (a->first != b->first || a->second != b->second)
            return false;
    return true;
}

std::string Element::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += c.str() + " * " + m.str();
    }
    return s;
}

Element Element::parse(const std::string& text)
{
    Element e;
    std::string s = text;
    if (s.find_first_not_of(" \t") == std::string::npos || s == "0")
        return e;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(" + ", pos);
        std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        size_t star = term.find(" * ");
        if (star == std::string::npos)
            throw Error("ParseError", "term without ' * ': " + term);
        CycScalar c = CycScalar::parse(term.substr(0, star));
        std::istringstream is(term.substr(star + 3));
        Monomial m;
        std::string tok;
        while (is >> tok) {
            if (tok.size() < 3 || tok[1] != '^')
                throw Error("ParseError", "bad factor " + tok);
            long long ex = std::stoll(tok.substr(2));
            switch (tok[0]) {
            case 'a': m.i = ex; break;
            case 'b': m.j = ex; break;
            case 'c': m.k = ex; break;
            case 'x': m.u = static_cast<int>(ex); break;
            case 'y': m.v = static_cast<int>(ex); break;
            default: throw Error("ParseError", "bad generator " + tok);
            }
        }
        e.add(m, c);
        if (next == std::string::npos)
            break;
        pos = next + 3;
    }
    return e;
}

template <std::size_t K>
std::string TensorElement<K>::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [key, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += c.str() + " *";
        for (std::size_t r = 0; r < K; ++r)
            s += (r ? " (x) " : " ") + key[r].str();
    }
    return s;
}

template class TensorElement<2>;
template class TensorElement<3>;

HopfAlgebra::HopfAlgebra(AlgebraParams p) : p_(std::move(p))
{
    int n = p_.n;
    for (int e = 0; e < n; ++e)
        qpow_.push_back(p_.qpow(e));
    snf_.assign(n, std::vector<std::vector<Term>>(n));
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            snf_[v][u] = straighten(v, u);

    Tensor2 dx, dy, unit;
    unit.add({Monomial{}, Monomial{}}, CycScalar(1));
    dx.add({Monomial{0, 0, 0, 1, 0}, Monomial{p_.n1, 0, 0, 0, 0}}, CycScalar(1));
    dx.add({Monomial{0, 1, 0, 0, 0}, Monomial{0, 0, 0, 1, 0}}, CycScalar(1));
    dy.add({Monomial{0, 0, 0, 0, 1}, Monomial{p_.n1, 0, 0, 0, 0}}, CycScalar(1));
    dy.add({Monomial{0, 0, 1, 0, 0}, Monomial{0, 0, 0, 0, 1}}, CycScalar(1));
    std::vector<Tensor2> dxp{unit}, dyp{unit};
    for (int k = 1; k < n; ++k) {
        dxp.push_back(tensor_multiply(dxp.back(), dx));
        dyp.push_back(tensor_multiply(dyp.back(), dy));
    }
    dxy_.assign(n, std::vector<Tensor2>(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            dxy_[u][v] = tensor_multiply(dxp[u], dyp[v]);

    // s(x) = -q^{-n1} a^{-n1} b^{-1} x, s(y) = -q^{n1} a^{-n1} c^{-1} y
    Element sx = Element::monomial(Monomial{-p_.n1, -1, 0, 1, 0}, -p_.qpow(-p_.n1));
    Element sy = Element::monomial(Monomial{-p_.n1, 0, -1, 0, 1}, -p_.qpow(p_.n1));
    std::vector<Element> sxp{one()}, syp{one()};
    for (int k = 1; k < n; ++k) {
        sxp.push_back(multiply(sxp.back(), sx));
        syp.push_back(multiply(syp.back(), sy));
    }
    sxy_.assign(n, std::vector<Element>(n));
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            sxy_[v][u] = multiply(syp[v], sxp[u]);
}

std::vector<HopfAlgebra::Term> HopfAlgebra::straighten(int v, int u) const
{
    // words over {x,y} with a central-ish prefix a^I b^J c^K
    using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::string>;
    std::map<Key, CycScalar> pending, done;
    pending[{0, 0, 0, std::string(v, 'y') + std::string(u, 'x')}] = CycScalar(1);
    const CycScalar qm = p_.qpow(-p_.n1);
    auto put = [](std::map<Key, CycScalar>& m, const Key& k, const CycScalar& c) {
        if (c.is_zero())
            return;
        auto [it, fresh] = m.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                m.erase(it);
        }
    };
    while (!pending.empty()) {
        auto it = pending.begin();
        auto [I, J, K, w] = it->first;
        CycScalar c = it->second;
        pending.erase(it);
        size_t p = w.find("yx");
        if (p == std::string::npos) {
            put(done, {I, J, K, w}, c);
            continue;
        }
        std::string w1 = w.substr(0, p), w2 = w.substr(p + 2);
        put(pending, {I, J, K, w1 + "xy" + w2}, c * qm);
        long long nx = 0, ny = 0;
        for (char ch : w1)
            (ch == 'x' ? nx : ny)++;
        put(pending, {I + 2 * p_.n1, J, K, w1 + w2}, c * p_.beta3 * p_.qpow(2LL * p_.n1 * (nx - ny)));
        put(pending, {I, J + 1, K + 1, w1 + w2}, -c * p_.beta3);
    }
    std::vector<Term> out;
    for (const auto& [key, c] : done) {
        const auto& [I, J, K, w] = key;
        int nx = 0, ny = 0;
        for (char ch : w)
            (ch == 'x' ? nx : ny)++;
        out.push_back({c, Monomial{I, J, K, nx, ny}});
    }
    return out;
}

void HopfAlgebra::add_reduced(Element& out, const CycScalar& c, std::int64_t i, std::int64_t j, std::int64_t k,
                              int u, int v) const
{
    // x^n = beta1 (a^{n n1} - b^n), y^n = beta2 (a^{n n1} - c^n); both central
    const int n = p_.n;
    const std::int64_t nn1 = static_cast<std::int64_t>(n) * p_.n1;
    if (u >= n) {
        if (p_.beta1.is_zero())
            return;
        CycScalar cb = c * p_.beta1;
        add_reduced(out, cb, checked_add(i, nn1), j, k, u - n, v);
        add_reduced(out, -cb, i, checked_add(j, n), k, u - n, v);
        return;
    }
    if (v >= n) {
        if (p_.beta2.is_zero())
            return;
        CycScalar cb = c * p_.beta2;
        add_reduced(out, cb, checked_add(i, nn1), j, k, u, v - n);
        add_reduced(out, -cb, i, j, checked_add(k, n), u, v - n);
        return;
    }
    out.add(Monomial{i, j, k, u, v}, c);
}

Element HopfAlgebra::multiply(const Monomial& m1, const Monomial& m2) const
{
    const int n = p_.n;
    Element out;
    // x^u1 y^v1 a^i2 = q^{i2 (u1 - v1)} a^i2 x^u1 y^v1
    CycScalar c0 = qpow_[mod_floor(mod_floor(m2.i, n) * (m1.u - m1.v), n)];
    std::int64_t gi = checked_add(m1.i, m2.i), gj = checked_add(m1.j, m2.j), gk = checked_add(m1.k, m2.k);
    for (const auto& t : snf_[m1.v][m2.u]) {
        CycScalar c = c0 * t.c * qpow_[mod_floor(mod_floor(t.m.i, n) * m1.u, n)];
        add_reduced(out, c, checked_add(gi, t.m.i), checked_add(gj, t.m.j), checked_add(gk, t.m.k), m1.u + t.m.u,
                    t.m.v + m2.v);
    }
    return out;
}

Element HopfAlgebra::multiply(const Element& e1, const Element& e2) const
{
    Element out;
    for (const auto& [m1, c1] : e1.terms())
        for (const auto& [m2, c2] : e2.terms()) {
            CycScalar c = c1 * c2;
            Element prod = multiply(m1, m2);
            for (const auto& [m, x] : prod.terms())
                out.add(m, x * c);
        }
    return out;
}

Element HopfAlgebra::power(const Element& e, int k) const
{
    Element acc = one();
    for (int r = 0; r < k; ++r)
        acc = multiply(acc, e);
    return acc;
}

Element HopfAlgebra::one() const
{
    return Element::scalar(CycScalar(1));
}

Element HopfAlgebra::mono(std::int64_t i, std::int64_t j, std::int64_t k, int u, int v) const
{
    if (u < 0 || v < 0)
        throw Error("ParseError", "negative x/y exponent");
    Element e;
    add_reduced(e, CycScalar(1), i, j, k, 0, 0);
    Element r = e;
    for (int s = 0; s < u; ++s)
        r = multiply(r, gen('x'));
    for (int s = 0; s < v; ++s)
        r = multiply(r, gen('y'));
    return r;
}

Element HopfAlgebra::gen(char g) const
{
    switch (g) {
    case 'a': return Element::monomial(Monomial{1, 0, 0, 0, 0});
    case 'A': return Element::monomial(Monomial{-1, 0, 0, 0, 0});
    case 'b': return Element::monomial(Monomial{0, 1, 0, 0, 0});
    case 'B': return Element::monomial(Monomial{0, -1, 0, 0, 0});
    case 'c': return Element::monomial(Monomial{0, 0, 1, 0, 0});
    case 'C': return Element::monomial(Monomial{0, 0, -1, 0, 0});
    case 'x': return Element::monomial(Monomial{0, 0, 0, 1, 0});
    case 'y': return Element::monomial(Monomial{0, 0, 0, 0, 1});
    default: throw Error("ParseError", std::string("unknown generator ") + g);
    }
}

Element HopfAlgebra::word(const std::string& letters) const
{
    Element r = one();
    for (char ch : letters)
        if (ch != ' ')
            r = multiply(r, gen(ch));
    return r;
}

template <std::size_t K>
TensorElement<K> HopfAlgebra::tensor_multiply(const TensorElement<K>& s, const TensorElement<K>& t) const
{
    TensorElement<K> out;
    for (const auto& [k1, c1] : s.terms())
        for (const auto& [k2, c2] : t.terms()) {
            std::array<Element, K> parts;
            for (std::size_t r = 0; r < K; ++r)
                parts[r] = multiply(k1[r], k2[r]);
            CycScalar c = c1 * c2;
            // cartesian product of the component expansions
            std::vector<std::pair<typename TensorElement<K>::Key, CycScalar>> acc{{{}, c}};
            for (std::size_t r = 0; r < K; ++r) {
                std::vector<std::pair<typename TensorElement<K>::Key, CycScalar>> next;
                for (const auto& [key, x] : acc)
                    for (const auto& [m, y] : parts[r].terms()) {
                        auto k = key;
                        k[r] = m;
                        next.emplace_back(k, x * y);
                    }
                acc = std::move(next);
            }
            for (const auto& [key, x] : acc)
                out.add(key, x);
        }
    return out;
}

template Tensor2 HopfAlgebra::tensor_multiply<2>(const Tensor2&, const Tensor2&) const;
template Tensor3 HopfAlgebra::tensor_multiply<3>(const Tensor3&, const Tensor3&) const;

Tensor2 HopfAlgebra::coproduct(const Monomial& m) const
{
    Tensor2 out;
    for (const auto& [key, c] : dxy_[m.u][m.v].terms()) {
        auto k = key;
        for (auto& part : k) {
            part.i = checked_add(part.i, m.i);
            part.j = checked_add(part.j, m.j);
            part.k = checked_add(part.k, m.k);
        }
        out.add(k, c);
    }
    return out;
}

Tensor2 HopfAlgebra::coproduct(const Element& e) const
{
    Tensor2 out;
    for (const auto& [m, c] : e.terms()) {
        Tensor2 d = coproduct(m);
        for (const auto& [key, x] : d.terms())
            out.add(key, x * c);
    }
    return out;
}

CycScalar HopfAlgebra::counit(const Element& e) const
{
    CycScalar s(0);
    for (const auto& [m, c] : e.terms())
        if (m.u == 0 && m.v == 0)
            s += c;
    return s;
}

Element HopfAlgebra::antipode(const Monomial& m) const
{
    return multiply(sxy_[m.v][m.u], Element::monomial(Monomial{-m.i, -m.j, -m.k, 0, 0}));
}

Element HopfAlgebra::antipode(const Element& e) const
{
    Element out;
    for (const auto& [m, c] : e.terms())
        out += antipode(m) * c;
    return out;
}

Element HopfAlgebra::random_element(std::mt19937_64& rng, int degree_bound) const
{
    // coefficients from {0, +-1, +-q, +-q^2}
    const CycScalar coefs[] = {CycScalar(0), CycScalar(1), CycScalar(-1), p_.q, -p_.q, p_.qpow(2), -p_.qpow(2)};
    Element e;
    int nterms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < nterms; ++t) {
        Monomial m;
        for (;;) {
            m.i = static_cast<std::int64_t>(rng() % 5) - 2;
            m.j = static_cast<std::int64_t>(rng() % 5) - 2;
            m.k = static_cast<std::int64_t>(rng() % 5) - 2;
            m.u = static_cast<int>(rng() % p_.n);
            m.v = static_cast<int>(rng() % p_.n);
            long long deg = std::llabs(m.i) + std::llabs(m.j) + std::llabs(m.k) + m.u + m.v;
            if (deg <= degree_bound)
                break;
        }
        e.add(m, coefs[rng() % 7]);
    }
    return e;
}

}  // namespace hopf
