#include "hopf/grothendieck.hpp"

#include "hopf/error.hpp"

#include <algorithm>
#include <set>

namespace hopf {

namespace {

constexpr size_t alt_cap = 20000;

void dedupe(GAlt& a)
{
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (a.size() > alt_cap)
        throw Error("Overflow", "too many alternative readings");
}

int mod_n(long long k, int n)
{
    return static_cast<int>(((k % n) + n) % n);
}

}  // namespace

GRingElement gr_add(GRingElement a, const GRingElement& b, long k)
{
    for (const auto& [l, c] : b) {
        long& v = a[l];
        v += k * c;
        if (v == 0)
            a.erase(l);
    }
    return a;
}

GRingElement gr_scale(const GRingElement& a, long k)
{
    return gr_add({}, a, k);
}

GRingElement gr_mul(FusionEngine& e, const GRingElement& a, const GRingElement& b)
{
    GRingElement out;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b)
            for (const auto& [l, m] : e.fuse(la, lb))
                out = gr_add(std::move(out), {{l, m}}, ca * cb);
    return out;
}

GRingElement gr_pow(FusionEngine& e, const GRingElement& a, int k)
{
    if (k < 0)
        throw Error("PreconditionViolated", "negative power in the representation ring");
    GRingElement out = gr_one(e);
    for (int j = 0; j < k; ++j)
        out = gr_mul(e, out, a);
    return out;
}

GRingElement gr_class(FusionEngine& e, const std::string& label)
{
    e.module(label);
    return {{e.canonical(label), 1}};
}

GRingElement gr_one(FusionEngine& e)
{
    return gr_class(e, "V0(1,1,1;0)");
}

std::string gr_str(const GRingElement& a)
{
    std::string s;
    for (const auto& [l, c] : a) {
        if (s.empty())
            s = c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        long m = c < 0 ? -c : c;
        s += (m == 1 ? "" : std::to_string(m) + "*") + l;
    }
    return s.empty() ? "0" : s;
}

GAlt alt_of(const GRingElement& a)
{
    return {a};
}

GAlt alt_add(const GAlt& a, const GAlt& b, long k)
{
    GAlt out;
    for (const auto& x : a)
        for (const auto& y : b)
            out.push_back(gr_add(x, y, k));
    dedupe(out);
    return out;
}

GAlt alt_scale(const GAlt& a, long k)
{
    GAlt out;
    for (const auto& x : a)
        out.push_back(gr_scale(x, k));
    dedupe(out);
    return out;
}

GAlt alt_mul(FusionEngine& e, const GAlt& a, const GAlt& b)
{
    GAlt out;
    for (const auto& x : a)
        for (const auto& y : b)
            out.push_back(gr_mul(e, x, y));
    dedupe(out);
    return out;
}

const char* reading_name(GReading r)
{
    switch (r) {
    case GReading::Printed: return "printed";
    case GReading::LabelShift: return "label-shift";
    case GReading::Trivial: return "g=1";
    }
    return "?";
}

GPoly GeneratorDictionary::g(int k) const
{
    return {{mod_n(k, params().n), 1}};
}

GPoly GeneratorDictionary::s() const
{
    GPoly c;
    for (int p = 0; p < params().n; ++p)
        c[p] += 1;
    return c;
}

GPoly GeneratorDictionary::s_prime() const
{
    GPoly c;
    for (int k = 1; k <= params().u; ++k)
        c[mod_n(static_cast<long long>(k) * params().t, params().n)] += 1;
    return c;
}

GPoly GeneratorDictionary::s_dprime() const
{
    GPoly c;
    for (int k = 0; k < params().t; ++k)
        c[mod_n(params().n - k, params().n)] += 1;
    return c;
}

GRingElement GeneratorDictionary::module_class(const SimpleLabel& l)
{
    const std::string s = l.str();
    try {
        return gr_class(e_, s);
    } catch (const Error& x) {
        if (x.code() == "FieldTooSmall")
            throw;
        throw Error("UnboundGenerator", s + " is not a module here (" + x.what() + ")");
    }
}

GRingElement GeneratorDictionary::v0(const CycScalar& g1, const CycScalar& gamma2, const CycScalar& gamma3)
{
    return module_class({Kind::V0, g1, gamma2, gamma3, 0, 0, std::nullopt});
}

GRingElement GeneratorDictionary::z(int r)
{
    return module_class({Kind::Vr, CycScalar(1), CycScalar(1), CycScalar(1), 0, r, std::nullopt});
}

GRingElement GeneratorDictionary::z_prime(const CycScalar& g1)
{
    return module_class({Kind::Vr, g1, CycScalar(1), CycScalar(1), 0, params().t, std::nullopt});
}

GRingElement GeneratorDictionary::z_dprime(const CycScalar& xi)
{
    return module_class({Kind::Vr, CycScalar(1), CycScalar(1), xi, 0, params().t, std::nullopt});
}

GRingElement GeneratorDictionary::z_tilde(const CycScalar& xi)
{
    return module_class({Kind::Vr, CycScalar(1), xi, CycScalar(1), 0, params().t, std::nullopt});
}

GRingElement GeneratorDictionary::eta()
{
    return v0(params().sqrtq_pow(1), CycScalar(1), params().qpow(params().n1));
}

GRingElement GeneratorDictionary::eta_prime()
{
    return v0(params().sqrtq_pow(1), params().qpow(params().n1), CycScalar(1));
}

GAlt GeneratorDictionary::seeds(Kind kind, const CycScalar& g1, const CycScalar& gamma2, const CycScalar& gamma3,
                                int i)
{
    SimpleLabel l{kind, g1, gamma2, gamma3, mod_n(i, params().n), 0, std::nullopt};
    std::vector<CycScalar> ks;
    try {
        ks = solve_k_seed(params(), l);
    } catch (const Error& x) {
        if (x.code() == "FieldTooSmall")
            throw;
        throw Error("UnboundGenerator", l.str() + " is not a module here (" + x.what() + ")");
    }
    GAlt out;
    for (const auto& k : ks) {
        l.kseed = k;
        out.push_back(module_class(l));
    }
    dedupe(out);
    return out;
}

GAlt GeneratorDictionary::x(const CycScalar& g1, const CycScalar& zeta2)
{
    return seeds(Kind::VI, g1, CycScalar(1), zeta2);
}

GAlt GeneratorDictionary::y(const CycScalar& e1, const CycScalar& e2)
{
    return seeds(Kind::VII, e1, e2, CycScalar(1));
}

GAlt GeneratorDictionary::shift_label(const std::string& label, int k)
{
    const AlgebraParams& p = params();
    SimpleLabel l = parse_label(label, p);
    switch (l.kind) {
    case Kind::V0:
        l.i = mod_n(l.i + k, p.n);
        return {module_class(l)};
    case Kind::Vr: {
        const ModuleRep& m = e_.module(label);
        CycScalar top = m.a(0, 0) * p.qpow(k);
        if (beta3pp(p, top, l.gamma2, l.gamma3).is_zero())
            throw Error("UnboundGenerator", "shifting " + label + " lands on a one-dimensional weight");
        auto [rep, e] = coset_rep(p, top);
        return {module_class({Kind::Vr, rep, l.gamma2, l.gamma3, e, m.dim, std::nullopt})};
    }
    case Kind::VI:
    case Kind::VII: {
        // the label's own i is 0 after canonicalization
        return seeds(l.kind, l.g1, l.gamma2, l.gamma3, l.i + k);
    }
    }
    return {};
}

GAlt GeneratorDictionary::g_times(int k, const GRingElement& x)
{
    k = mod_n(k, params().n);
    if (k == 0 || reading_ == GReading::Trivial)
        return {x};
    if (reading_ == GReading::Printed) {
        GRingElement gk = module_class({Kind::V0, CycScalar(1), CycScalar(1), CycScalar(1), k, 0, std::nullopt});
        return {gr_mul(e_, gk, x)};
    }
    GAlt out{GRingElement{}};
    for (const auto& [l, c] : x)
        out = alt_add(out, shift_label(l, k), c);
    return out;
}

GAlt GeneratorDictionary::act(const GPoly& c, const GAlt& xs)
{
    GAlt out;
    for (const auto& x : xs) {
        GAlt acc{GRingElement{}};
        for (const auto& [k, m] : c)
            if (m)
                acc = alt_add(acc, g_times(k, x), m);
        out.insert(out.end(), acc.begin(), acc.end());
    }
    dedupe(out);
    return out;
}

namespace {

long binom(long a, long b)
{
    if (b < 0 || a < b)
        return 0;
    long r = 1;
    for (long j = 1; j <= b; ++j)
        r = r * (a - b + j) / j;
    return r;
}

}  // namespace

GAlt chebyshev_z(GeneratorDictionary& d, int r)
{
    FusionEngine& e = d.engine();
    const int n = d.params().n;
    GRingElement z2 = d.z(2);
    GAlt out{GRingElement{}};
    for (int v = 0; 2 * v <= r - 1; ++v) {
        long c = binom(r - 1 - v, v) * (v % 2 ? -1 : 1);
        GAlt term = d.act(d.g((n - 1) * v), gr_pow(e, z2, r - 1 - 2 * v));
        out = alt_add(out, term, c);
    }
    return out;
}

bool RelationOutcome::holds_as_printed() const
{
    for (const auto& c : checks)
        if (c.holds && c.reading.rfind("printed", 0) == 0)
            return true;
    return false;
}

std::vector<std::string> RelationOutcome::holding_readings() const
{
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (c.holds)
            out.push_back(c.reading);
    return out;
}

bool SuiteReport::passed() const
{
    if (relations.empty())
        return false;
    for (const auto& r : relations)
        if (!r.holds_as_printed())
            return false;
    return true;
}

int SuiteReport::count_holding() const
{
    int k = 0;
    for (const auto& r : relations)
        k += r.holds_as_printed();
    return k;
}

RelationOutcome check_relation(FusionEngine& e, const RelationSpec& spec)
{
    RelationOutcome out;
    out.relation = spec.relation;
    out.instance = spec.instance;
    for (GReading rd : {GReading::Printed, GReading::LabelShift, GReading::Trivial}) {
        for (const auto& variant : spec.variants) {
            RelationCheck c;
            c.reading = std::string(reading_name(rd)) + (variant.empty() ? "" : "/" + variant);
            GeneratorDictionary d(e, rd);
            try {
                auto [lhs, rhs] = spec.eval(d, variant);
                c.evaluated = true;
                size_t best = 0;
                size_t best_size = SIZE_MAX;
                const GRingElement* best_l = nullptr;
                for (const auto& l : lhs)
                    for (const auto& r : rhs) {
                        GRingElement diff = gr_add(l, r, -1);
                        if (diff.size() < best_size) {
                            best_size = diff.size();
                            best_l = &l;
                            c.rhs = gr_str(r);
                            c.diff = gr_str(diff);
                            best = 1;
                        }
                        if (diff.empty())
                            c.holds = true;
                    }
                if (best && out.lhs.empty())
                    out.lhs = gr_str(*best_l);
            } catch (const Error& x) {
                c.error = x.what();
            }
            out.checks.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace hopf
