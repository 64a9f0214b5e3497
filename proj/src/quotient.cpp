#include "hopf/quotient.hpp"

#include "hopf/error.hpp"

#include <set>

namespace hopf {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

QuotientParams QuotientParams::make(const AlgebraParams& p, int m, int n2, int n3)
{
    if (m < 1)
        throw Error("ParameterConstraint", "m must be positive");
    if (n2 < 0 || n2 >= p.n - 1 || n3 < 0 || n3 >= p.n - 1)
        throw Error("ParameterConstraint", "n2, n3 must lie in [0, n-1)");
    if (p.n1 >= m * (p.n - 1))
        throw Error("ParameterConstraint", "need n1 < m(n-1)");
    QuotientParams qp;
    qp.m = m;
    qp.n2 = n2;
    qp.n3 = n3;
    qp.N = static_cast<long>(p.n) * (p.n - 1) * m;
    if (p.M % qp.N != 0)
        throw Error("IncompatibleModulus", "working modulus must be a multiple of N");
    return qp;
}

AlgebraParams quotient_algebra_params(int n, int n1, const std::array<CycScalar, 3>& beta, int m)
{
    return AlgebraParams::make(n, n1, beta, static_cast<long>(n) * (n - 1) * m);
}

Element quotient_reduce(const AlgebraParams& p, const QuotientParams& qp, const Element& e)
{
    const std::int64_t bshift = static_cast<std::int64_t>(p.n) * qp.m * qp.n2;
    const std::int64_t cshift = static_cast<std::int64_t>(qp.m) * p.n * qp.n3;
    Element out;
    for (const auto& [m, c] : e.terms()) {
        std::int64_t i = mod_floor(m.i, qp.N) + mod_floor(m.j, qp.N) * bshift + mod_floor(m.k, qp.N) * cshift;
        out.add(Monomial{mod_floor(i, qp.N), 0, 0, m.u, m.v}, c);
    }
    return out;
}

Element quotient_multiply(const HopfAlgebra& H, const QuotientParams& qp, const Element& e1, const Element& e2)
{
    return quotient_reduce(H.params(), qp, H.multiply(e1, e2));
}

std::vector<Element> quotient_basis(const AlgebraParams& p, const QuotientParams& qp)
{
    std::vector<Element> out;
    for (long j = 0; j < qp.N; ++j)
        for (int u = 0; u < p.n; ++u)
            for (int v = 0; v < p.n; ++v)
                out.push_back(Element::monomial(Monomial{j, 0, 0, u, v}));
    return out;
}

int quotient_span_dimension(const AlgebraParams& p, const QuotientParams& qp)
{
    // images of a^i b^j c^k x^u y^v over a window that covers every residue
    std::set<Monomial> seen;
    for (long i = 0; i < qp.N; ++i)
        for (long j = 0; j < 2; ++j)
            for (long k = 0; k < 2; ++k)
                for (int u = 0; u < p.n; ++u)
                    for (int v = 0; v < p.n; ++v) {
                        Element r = quotient_reduce(p, qp, Element::monomial(Monomial{i, j, k, u, v}));
                        seen.insert(r.terms().begin()->first);
                    }
    return static_cast<int>(seen.size());
}

void ElementSpan::reduce(Element& e) const
{
    auto it = e.terms().begin();
    while (it != e.terms().end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        Monomial key = it->first;
        CycScalar f = it->second;
        e -= row->second * f;
        it = e.terms().lower_bound(key);
    }
}

bool ElementSpan::insert(Element e)
{
    reduce(e);
    if (e.is_zero())
        return false;
    auto first = e.terms().begin();
    Monomial piv = first->first;
    CycScalar inv = first->second.inv();
    rows_.emplace(piv, e * inv);
    return true;
}

bool ElementSpan::contains(Element e) const
{
    reduce(e);
    return e.is_zero();
}

std::vector<Element> ElementSpan::basis() const
{
    std::vector<Element> out;
    for (const auto& [k, r] : rows_)
        out.push_back(r);
    return out;
}

IdempotentReport central_idempotents(const HopfAlgebra& H, const QuotientParams& qp, bool block_dims)
{
    const AlgebraParams& p = H.params();
    const int blocks = qp.m * (p.n - 1);
    const long step = p.M / blocks;  // omega = zeta_M^step
    IdempotentReport rep;
    for (int i = 0; i < blocks; ++i) {
        Element e;
        for (int j = 0; j < blocks; ++j)
            e.add(Monomial{static_cast<std::int64_t>(p.n) * j, 0, 0, 0, 0},
                  p.zeta(static_cast<long long>(step) * i * j) * CycScalar(Rational(1, blocks)));
        rep.idempotents.push_back(quotient_reduce(p, qp, e));
    }
    Element sum;
    for (int i = 0; i < blocks; ++i) {
        const Element& ei = rep.idempotents[i];
        sum += ei;
        for (int j = 0; j < blocks; ++j) {
            Element prod = quotient_multiply(H, qp, ei, rep.idempotents[j]);
            if (prod != (i == j ? ei : Element()))
                rep.orthogonal = false;
        }
        for (char g : {'a', 'x', 'y'}) {
            Element h = H.gen(g);
            if (quotient_multiply(H, qp, ei, h) != quotient_multiply(H, qp, h, ei))
                rep.central = false;
        }
    }
    rep.complete = (sum == H.one());
    if (block_dims) {
        auto basis = quotient_basis(p, qp);
        for (const auto& ei : rep.idempotents) {
            ElementSpan span;
            for (const auto& b : basis)
                span.insert(quotient_multiply(H, qp, ei, b));
            rep.block_dims.push_back(span.dim());
        }
    }
    return rep;
}

namespace {

Element block_generator(const HopfAlgebra& H, const QuotientParams& qp, const Element& ei, int block)
{
    const AlgebraParams& p = H.params();
    CycScalar w0i = p.zeta(static_cast<long long>(p.M / qp.N) * block);
    return quotient_multiply(H, qp, ei, H.gen('a')) * w0i;
}

}  // namespace

WeightIdempotentReport weight_idempotents(const HopfAlgebra& H, const QuotientParams& qp, int block)
{
    const AlgebraParams& p = H.params();
    auto cent = central_idempotents(H, qp, false);
    if (block < 0 || block >= static_cast<int>(cent.idempotents.size()))
        throw Error("ParameterConstraint", "block index out of range");
    const Element& ei = cent.idempotents[block];
    Element g = block_generator(H, qp, ei, block);
    std::vector<Element> gp{ei};
    for (int j = 1; j < p.n; ++j)
        gp.push_back(quotient_multiply(H, qp, gp.back(), g));

    WeightIdempotentReport rep;
    rep.block = block;
    for (int k = 0; k < p.n; ++k) {
        Element f;
        for (int j = 0; j < p.n; ++j)
            f += gp[j] * (p.qpow(static_cast<long long>(k) * j) * CycScalar(Rational(1, p.n)));
        rep.f.push_back(f);
    }
    Element sum;
    for (int k = 0; k < p.n; ++k) {
        sum += rep.f[k];
        for (int l = 0; l < p.n; ++l) {
            Element prod = quotient_multiply(H, qp, rep.f[k], rep.f[l]);
            if (prod != (k == l ? rep.f[k] : Element()))
                rep.orthogonal = false;
        }
        const Element& prev = rep.f[(k + p.n - 1) % p.n];
        const Element& next = rep.f[(k + 1) % p.n];
        if (quotient_multiply(H, qp, rep.f[k], H.gen('x')) != quotient_multiply(H, qp, H.gen('x'), prev))
            rep.shift_x = false;
        if (quotient_multiply(H, qp, rep.f[k], H.gen('y')) != quotient_multiply(H, qp, H.gen('y'), next))
            rep.shift_y = false;
    }
    rep.complete = (sum == ei);
    return rep;
}

IntegralReport integral_check(const HopfAlgebra& H, const QuotientParams& qp)
{
    const AlgebraParams& p = H.params();
    IntegralReport rep;
    for (long i = 0; i < qp.N; ++i)
        rep.lambda.add(Monomial{i, 0, 0, p.n - 1, p.n - 1}, CycScalar(Rational(1, qp.N)));
    rep.counit_zero = H.counit(rep.lambda).is_zero();
    for (const auto& h : quotient_basis(p, qp)) {
        ++rep.checked;
        Element expect = rep.lambda * H.counit(h);
        bool l = quotient_multiply(H, qp, h, rep.lambda) == expect;
        bool r = quotient_multiply(H, qp, rep.lambda, h) == expect;
        if ((!l || !r) && rep.witness.empty())
            rep.witness = h.str();
        rep.left = rep.left && l;
        rep.right = rep.right && r;
    }
    return rep;
}

std::array<CycScalar, 2> block_betas(const AlgebraParams& p, const QuotientParams& qp, int block)
{
    // a^n acts on e_i H as omega^{-i}
    const int blocks = qp.m * (p.n - 1);
    const long step = p.M / blocks;
    auto an_pow = [&](long long e) { return p.zeta(-static_cast<long long>(step) * block * e); };
    long long nn1 = p.n1;
    long long bn = static_cast<long long>(p.n) * qp.m * qp.n2;  // b^n = (a^n)^{n m n2}
    long long cn = static_cast<long long>(p.n) * qp.m * qp.n3;
    return {p.beta1 * (an_pow(nn1) - an_pow(bn)), p.beta2 * (an_pow(nn1) - an_pow(cn))};
}

bool RadicalReport::passed() const
{
    return ideal && nilpotent && generator_order && quotient_dim > 0 && radical_dim + quotient_dim == block_dim;
}

RadicalReport radical_check(const HopfAlgebra& H, const QuotientParams& qp, int block)
{
    const AlgebraParams& p = H.params();
    auto cent = central_idempotents(H, qp, false);
    if (block < 0 || block >= static_cast<int>(cent.idempotents.size()))
        throw Error("ParameterConstraint", "block index out of range");
    RadicalReport rep;
    rep.block = block;
    auto bb = block_betas(p, qp, block);
    rep.beta1_block = bb[0];
    rep.beta2_block = bb[1];
    if (!bb[0].is_zero() || !bb[1].is_zero() || !p.beta3.is_zero())
        throw Error("PreconditionViolated", "block is not of the degenerate type");

    const Element& ei = cent.idempotents[block];
    Element g = block_generator(H, qp, ei, block);
    std::vector<Element> gp{ei};
    for (int r = 1; r <= p.n; ++r)
        gp.push_back(quotient_multiply(H, qp, gp.back(), g));

    ElementSpan all, jspan;
    std::vector<Element> jbasis;
    for (int r = 0; r < p.n; ++r)
        for (int u = 0; u < p.n; ++u)
            for (int v = 0; v < p.n; ++v) {
                Element e = quotient_multiply(H, qp, gp[r], H.mono(0, 0, 0, u, v));
                all.insert(e);
                if (u + v > 0 && jspan.insert(e))
                    jbasis.push_back(e);
            }
    rep.block_dim = all.dim();
    rep.radical_dim = jspan.dim();
    rep.quotient_dim = rep.block_dim - rep.radical_dim;

    auto in_j = [](const Element& e) {
        for (const auto& [m, c] : e.terms())
            if (m.u == 0 && m.v == 0)
                return false;
        return true;
    };
    for (const auto& b : jbasis)
        for (char h : {'a', 'x', 'y'}) {
            Element gh = H.gen(h);
            if (!in_j(quotient_multiply(H, qp, gh, b)) || !in_j(quotient_multiply(H, qp, b, gh)))
                rep.ideal = false;
        }

    // powers J^k until zero
    std::vector<Element> cur = jbasis;
    int k = 1;
    const int limit = p.n * p.n;
    while (!cur.empty() && k <= limit) {
        ElementSpan next;
        std::vector<Element> nb;
        for (const auto& a : cur)
            for (const auto& b : jbasis) {
                Element prod = quotient_multiply(H, qp, a, b);
                if (next.insert(prod))
                    nb.push_back(prod);
            }
        cur = std::move(nb);
        ++k;
    }
    rep.nilpotent = cur.empty();
    rep.nilpotency_index = rep.nilpotent ? k : -1;
    // g^n = e_i: the quotient is the group algebra of Z_n
    rep.generator_order = (gp[p.n] == ei);
    return rep;
}

}  // namespace hopf
