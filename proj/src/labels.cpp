#include "hopf/error.hpp"
#include "hopf/modules.hpp"
#include "sequences.hpp"

#include <algorithm>
#include <cctype>

namespace hopf {

using detail::fit;

namespace {

std::string strip(const std::string& s)
{
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            out += ch;
    return out;
}

// split at depth-0 occurrences of any character in seps
std::vector<std::string> split_top(const std::string& s, const std::string& seps, std::vector<char>* found = nullptr)
{
    std::vector<std::string> parts(1);
    int depth = 0;
    for (char ch : s) {
        if (ch == '(')
            ++depth;
        if (ch == ')')
            --depth;
        if (depth == 0 && seps.find(ch) != std::string::npos) {
            parts.emplace_back();
            if (found)
                found->push_back(ch);
        } else {
            parts.back() += ch;
        }
    }
    if (depth != 0)
        throw Error("ParseError", "unbalanced parentheses in '" + s + "'");
    return parts;
}

long parse_long(const std::string& s)
{
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size())
            throw Error("ParseError", "bad integer '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw Error("ParseError", "bad integer '" + s + "'");
    }
}

CycScalar parse_atom(const std::string& s, const AlgebraParams& p)
{
    if (s.empty())
        throw Error("ParseError", "empty scalar");
    if (s[0] == '-')
        return -parse_atom(s.substr(1), p);
    if (s == "q")
        return p.q;
    if (s == "sq")
        return p.sqrtq_pow(1);
    if (s.rfind("q^", 0) == 0)
        return p.qpow(parse_long(s.substr(2)));
    if (s.rfind("sq^", 0) == 0)
        return p.sqrtq_pow(parse_long(s.substr(3)));
    if (s.rfind("zeta(", 0) == 0 && s.back() == ')') {
        auto args = split_top(s.substr(5, s.size() - 6), ",");
        if (args.size() != 2)
            throw Error("ParseError", "zeta(M,k) expects two integers");
        return fit(p, CycScalar::root_of_unity(parse_long(args[0]), parse_long(args[1])));
    }
    return fit(p, CycScalar::parse(s));
}

}  // namespace

CycScalar parse_scalar(const std::string& text, const AlgebraParams& p)
{
    std::string s = strip(text);
    auto factors = split_top(s, "*");
    CycScalar out(Rational(1), p.M);
    for (const auto& f : factors)
        out *= parse_atom(f, p);
    return out;
}

std::string SimpleLabel::str() const
{
    std::string head;
    switch (kind) {
    case Kind::V0: head = "V0"; break;
    case Kind::VI: head = "VI"; break;
    case Kind::VII: head = "VII"; break;
    case Kind::Vr: head = r ? "V" + std::to_string(r) : "Vr"; break;
    }
    std::string s = head + "(" + g1.pretty() + "," + gamma2.pretty() + "," + gamma3.pretty() + ";" + std::to_string(i);
    if (kseed && (kind == Kind::VI || kind == Kind::VII))
        s += ";" + kseed->pretty();
    return s + ")";
}

SimpleLabel parse_label(const std::string& text, const AlgebraParams& p)
{
    std::string s = strip(text);
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw Error("ParseError", "label must look like Kind(g1,gamma2,gamma3;i)");
    std::string head = s.substr(0, open);
    std::vector<char> seps;
    auto args = split_top(s.substr(open + 1, s.size() - open - 2), ",;", &seps);
    if (args.size() < 4 || seps[0] != ',' || seps[1] != ',' || seps[2] != ';')
        throw Error("ParseError", "label must look like Kind(g1,gamma2,gamma3;i)");
    for (size_t k = 3; k < seps.size(); ++k)
        if (seps[k] != ';')
            throw Error("ParseError", "extra label fields are separated by ';'");
    SimpleLabel l;
    l.g1 = parse_scalar(args[0], p);
    l.gamma2 = parse_scalar(args[1], p);
    l.gamma3 = parse_scalar(args[2], p);
    long i = parse_long(args[3]);
    l.i = static_cast<int>(((i % p.n) + p.n) % p.n);
    size_t extra = args.size() - 4;
    if (head == "V0") {
        l.kind = Kind::V0;
        if (extra)
            throw Error("ParseError", "V0 takes no extra fields");
    } else if (head == "VI" || head == "VII") {
        l.kind = head == "VI" ? Kind::VI : Kind::VII;
        if (extra > 1)
            throw Error("ParseError", head + " takes at most a seed");
        if (extra)
            l.kseed = parse_scalar(args[4], p);
    } else if (head == "Vr") {
        l.kind = Kind::Vr;
        if (extra > 1)
            throw Error("ParseError", "Vr takes at most r");
        if (extra)
            l.r = static_cast<int>(parse_long(args[4]));
    } else if (head.size() > 1 && head[0] == 'V' &&
               std::all_of(head.begin() + 1, head.end(), [](char ch) { return std::isdigit(ch); })) {
        l.kind = Kind::Vr;
        l.r = static_cast<int>(parse_long(head.substr(1)));
        if (extra)
            throw Error("ParseError", head + " takes no extra fields");
    } else {
        throw Error("ParseError", "unknown module kind '" + head + "'");
    }
    if (l.kind == Kind::Vr && l.r == 1)
        throw Error("ParseError", "V1 is written V0");
    return l;
}

std::pair<CycScalar, int> coset_rep(const AlgebraParams& p, const CycScalar& w)
{
    CycScalar lam = fit(p, w);
    CycScalar rep;
    if (auto sr = lam.as_scaled_root()) {
        Rational rho = sr->first;
        long k = sr->second;
        if (rho < 0) {
            rho = -rho;
            k += p.M / 2;
        }
        rep = CycScalar(rho, p.M) * p.zeta(((k % (p.M / p.n)) + p.M) % (p.M / p.n));
    } else {
        rep = lam;
        for (int j = 1; j < p.n; ++j)
            rep = std::min(rep, lam * p.qpow(j));
    }
    for (int e = 0; e < p.n; ++e)
        if (rep * p.qpow(e) == lam)
            return {rep, e};
    throw Error("InternalInconsistency", "coset representative not on the orbit");
}

namespace {

// affine factors of the seed product k * prod_j F_j(k), and the value it must take
std::vector<CPoly> seed_factors(const AlgebraParams& p, const SimpleLabel& l, CycScalar& rhs)
{
    CycScalar lam0 = fit(p, l.g1) * p.qpow(l.i);
    std::vector<CPoly> fac;
    if (l.kind == Kind::VI) {
        fac = detail::vi_polys(p, lam0, l.gamma2, l.gamma3);
        rhs = beta2pp(p, l.g1, l.gamma3);
    } else {
        fac = detail::vii_polys(p, lam0, l.gamma2, l.gamma3);
        rhs = beta1pp(p, l.g1, l.gamma2);
    }
    fac[0] = CPoly{CycScalar(Rational(0), p.M), CycScalar(Rational(1), p.M)};
    return fac;
}

}  // namespace

CPoly seed_constraint(const AlgebraParams& p, const SimpleLabel& l)
{
    CycScalar rhs;
    CPoly f{CycScalar(Rational(1), p.M)};
    for (const auto& g : seed_factors(p, l, rhs))
        f = cpoly_mul(f, g);
    f[0] -= rhs;
    cpoly_trim(f);
    return f;
}

std::vector<CycScalar> solve_k_seed(const AlgebraParams& p, const SimpleLabel& l)
{
    if (l.kind != Kind::VI && l.kind != Kind::VII)
        throw Error("WrongType", "only VI and VII carry a seed");
    if (l.kind == Kind::VI && beta1pp(p, l.g1, l.gamma2).is_zero())
        throw Error("WrongType", "VI needs beta1'' != 0");
    if (l.kind == Kind::VII && (!beta1pp(p, l.g1, l.gamma2).is_zero() || beta2pp(p, l.g1, l.gamma3).is_zero()))
        throw Error("WrongType", "VII needs beta1'' = 0 and beta2'' != 0");
    CycScalar rhs;
    auto fac = seed_factors(p, l, rhs);
    std::vector<CycScalar> roots;
    if (rhs.is_zero()) {
        // the product vanishes exactly at the roots of its affine factors
        for (const auto& g : fac) {
            CycScalar k = -g[0] / g[1];
            if (std::find(roots.begin(), roots.end(), k) == roots.end())
                roots.push_back(k);
        }
    } else {
        roots = scaled_root_roots(seed_constraint(p, l), p.M);
    }
    if (roots.empty())
        throw Error("FieldTooSmall", "no seed of the form rho*zeta_" + std::to_string(p.M) + "^k for " + l.str());
    std::sort(roots.begin(), roots.end());
    return roots;
}

SimpleLabel canonical_label(const AlgebraParams& p, const SimpleLabel& l)
{
    SimpleLabel out = l;
    out.g1 = fit(p, l.g1);
    out.gamma2 = fit(p, l.gamma2);
    out.gamma3 = fit(p, l.gamma3);
    CycScalar mu = out.g1 * p.qpow(l.i);
    switch (l.kind) {
    case Kind::V0: {
        auto [rep, e] = coset_rep(p, mu);
        out.g1 = rep;
        out.i = e;
        out.r = 0;
        out.kseed.reset();
        return out;
    }
    case Kind::Vr: {
        int len = l.r;
        CycScalar top = mu;
        if (beta3pp(p, mu, out.gamma2, out.gamma3).is_zero()) {
            len = len ? len : p.t;
            top = mu * p.sqrtq_pow(len - 1);
        } else if (!len) {
            auto c = detail::chain_coeffs(p, top, out.gamma2, out.gamma3, p.t);
            for (int j = 1; j <= p.t && !len; ++j)
                if (c[j].is_zero())
                    len = j;
        }
        auto [rep, e] = coset_rep(p, top);
        out.g1 = rep;
        out.i = e;
        out.r = len;
        out.kseed.reset();
        return out;
    }
    case Kind::VI:
    case Kind::VII: {
        CycScalar k = l.kseed ? fit(p, *l.kseed) : solve_k_seed(p, l).front();
        auto [rep, e] = coset_rep(p, mu);
        const int n = p.n;
        // eigenvalue of yx (VI) or xy (VII) on each weight space, indexed by basis position
        std::vector<CycScalar> ev(n);
        CycScalar target;
        int pos = -1;
        if (l.kind == Kind::VI) {
            const CycScalar B = beta1pp(p, out.g1, out.gamma2);
            auto Y = detail::eval_all(detail::vi_polys(p, mu, out.gamma2, out.gamma3), k);
            for (int j = 0; j + 1 < n; ++j)
                ev[j] = Y[j + 1];
            ev[n - 1] = B * k;
            target = rep * p.q;
            for (int j = 0; j < n; ++j)
                if (mu * p.qpow(-j) == target)
                    pos = j;
            out.kseed = ev.at(pos) / B;
        } else {
            const CycScalar C = beta2pp(p, out.g1, out.gamma3);
            auto X = detail::eval_all(detail::vii_polys(p, mu, out.gamma2, out.gamma3), k);
            ev = X;
            target = rep;
            for (int j = 0; j < n; ++j)
                if (mu * p.qpow(j) == target)
                    pos = j;
            out.kseed = ev.at(pos) / C;
        }
        out.g1 = rep;
        out.i = 0;
        out.r = 0;
        return out;
    }
    }
    return out;
}

}  // namespace hopf
