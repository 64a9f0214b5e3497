#pragma once

#include "hopf/cyclo.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace hopf {

struct AlgebraParams {
    int n = 2;
    int n1 = 1;
    long M = 2;     // every scalar lives in Q(zeta_M)
    long qexp = 1;  // q = zeta_M^qexp
    CycScalar q;
    CycScalar beta1, beta2, beta3;
    int t = 2;  // order of q^n1
    int u = 1;  // n / t

    // q = zeta_n^q_power; extra_modulus is folded into M (e.g. N for quotients)
    static AlgebraParams make(int n, int n1, const std::array<CycScalar, 3>& beta, long extra_modulus = 1,
                              long q_power = 1);

    CycScalar zeta(long long k) const;
    CycScalar qpow(long long e) const;
    // fixed square root of q: q^{(n+1)/2} for odd n, zeta_{2n} for even n
    CycScalar sqrtq_pow(long long e) const;
    std::string describe() const;
};

struct Monomial {
    std::int64_t i = 0, j = 0, k = 0;
    int u = 0, v = 0;
    auto operator<=>(const Monomial&) const = default;
    std::string str() const;
};

class Element {
public:
    Element() = default;
    static Element monomial(const Monomial& m, const CycScalar& c = CycScalar(1));
    static Element scalar(const CycScalar& c);

    void add(const Monomial& m, const CycScalar& c);
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const CycScalar& c) const;
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, CycScalar>& terms() const { return terms_; }
    std::string str() const;
    static Element parse(const std::string& s);

private:
    std::map<Monomial, CycScalar> terms_;
};

template <std::size_t K>
class TensorElement {
public:
    using Key = std::array<Monomial, K>;
    void add(const Key& key, const CycScalar& c)
    {
        if (c.is_zero())
            return;
        auto [it, fresh] = terms_.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    TensorElement& operator+=(const TensorElement& o)
    {
        for (const auto& [k, c] : o.terms_)
            add(k, c);
        return *this;
    }
    bool operator==(const TensorElement& o) const
    {
        if (terms_.size() != o.terms_.size())
            return false;
        for (auto a = terms_.begin(), b = o.terms_.begin(); a != terms_.end(); ++a, ++b)
            if (a->first != b->first || a->second != b->second)
                return false;
        return true;
    }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, CycScalar>& terms() const { return terms_; }
    std::string str() const;

private:
    std::map<Key, CycScalar> terms_;
};

using Tensor2 = TensorElement<2>;
using Tensor3 = TensorElement<3>;

// H_beta with precomputed straightening tables; immutable after construction.
class HopfAlgebra {
public:
    explicit HopfAlgebra(AlgebraParams p);
    const AlgebraParams& params() const { return p_; }

    Element one() const;
    Element mono(std::int64_t i, std::int64_t j, std::int64_t k, int u, int v) const;
    Element gen(char g) const;  // one of a b c x y, or A B C for inverses
    // product of generator letters, e.g. "yxxA"
    Element word(const std::string& letters) const;

    Element multiply(const Element& e1, const Element& e2) const;
    Element multiply(const Monomial& m1, const Monomial& m2) const;
    Element power(const Element& e, int k) const;

    Tensor2 coproduct(const Element& e) const;
    Tensor2 coproduct(const Monomial& m) const;
    CycScalar counit(const Element& e) const;
    Element antipode(const Element& e) const;
    Element antipode(const Monomial& m) const;

    template <std::size_t K>
    TensorElement<K> tensor_multiply(const TensorElement<K>& s, const TensorElement<K>& t) const;

    Element random_element(std::mt19937_64& rng, int degree_bound) const;

private:
    struct Term {
        CycScalar c;
        Monomial m;
    };
    std::vector<Term> straighten(int v, int u) const;
    void add_reduced(Element& out, const CycScalar& c, std::int64_t i, std::int64_t j, std::int64_t k, int u,
                     int v) const;

    AlgebraParams p_;
    std::vector<CycScalar> qpow_;                        // q^e, e in [0, n)
    std::vector<std::vector<std::vector<Term>>> snf_;    // y^v x^u in normal form
    std::vector<std::vector<Tensor2>> dxy_;              // Delta(x^u y^v)
    std::vector<std::vector<Element>> sxy_;              // s(y)^v s(x)^u
};

struct AxiomResult {
    std::string name;
    bool passed = true;
    long checked = 0;
    std::string witness;
};

struct AxiomReport {
    std::vector<AxiomResult> results;
    bool passed() const;
};

AxiomReport check_hopf_axioms(const HopfAlgebra& H, int degree_bound, int n_random, std::uint64_t seed);

}  // namespace hopf
