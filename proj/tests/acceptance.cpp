#include "hopf/error.hpp"
#include "hopf/grothendieck.hpp"
#include "hopf/quotient.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace hopf;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::array<CycScalar, 3> beta(int b1, int b2, int b3)
{
    return {CycScalar(b1), CycScalar(b2), CycScalar(b3)};
}

std::array<CycScalar, 3> beta_mask(int mask)
{
    return beta(mask & 1, (mask >> 1) & 1, (mask >> 2) & 1);
}

std::string fmt_time(double s)
{
    std::ostringstream o;
    o.precision(2);
    o << std::fixed << s << " s";
    return o.str();
}

Outcome hopf_axioms()
{
    auto t0 = Clock::now();
    int ok = 0, total = 0;
    std::string bad;
    for (auto [n, n1] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 3}})
        for (int mask = 0; mask < 8; ++mask) {
            HopfAlgebra H(AlgebraParams::make(n, n1, beta_mask(mask)));
            AxiomReport r = check_hopf_axioms(H, 4, 100, 1000 + total);
            ++total;
            if (r.passed())
                ++ok;
            else if (bad.empty())
                bad = " first failure " + H.params().describe();
        }
    double s = seconds_since(t0);
    return {ok == total && s < 60, std::to_string(ok) + "/" + std::to_string(total) + " parameter sets, " +
                                       fmt_time(s) + bad};
}

Outcome basis_arithmetic()
{
    int checked = 0, failed = 0;
    // with beta3 = 0 the relation is exactly y^k x = q^{-k n1} x y^k
    for (int n : {3, 4, 5})
        for (int n1 = 1; n1 < n; ++n1) {
            auto p = AlgebraParams::make(n, n1, beta(1, 1, 0));
            HopfAlgebra H(p);
            for (int k = 1; k < n; ++k) {
                ++checked;
                Element lhs = H.multiply(H.mono(0, 0, 0, 0, k), H.gen('x'));
                if (lhs != H.mono(0, 0, 0, 1, k) * p.qpow(-static_cast<long long>(k) * n1))
                    ++failed;
            }
        }
    // with beta3 != 0 the straightened form carries a y^{k-1} correction, checked against the induction on k
    int printed_bad = 0;
    for (int n : {3, 4, 5})
        for (int n1 = 1; n1 < n; ++n1) {
            auto p = AlgebraParams::make(n, n1, beta(1, 1, 1));
            HopfAlgebra H(p);
            CycScalar alpha(1), uk(1);
            for (int k = 1; k < n; ++k) {
                ++checked;
                const long long e = -static_cast<long long>(k) * n1;
                Element lhs = H.multiply(H.mono(0, 0, 0, 0, k), H.gen('x'));
                Element rhs = H.mono(0, 0, 0, 1, k) * p.qpow(e) + H.mono(2 * n1, 0, 0, 0, k - 1) * alpha -
                              H.mono(0, 1, 1, 0, k - 1) * uk;
                if (lhs != rhs)
                    ++failed;
                Element printed = H.mono(0, 0, 0, 1, k) * p.qpow(e) +
                                  (H.mono(2 * n1, 0, 0, 0, 0) - H.mono(0, 1, 1, 0, 0)) * uk;
                printed_bad += lhs != printed;
                alpha = p.qpow(e) + p.qpow(-2 * n1) * alpha;
                uk = p.qpow(e) + uk;
            }
        }
    auto p = AlgebraParams::make(4, 3, beta(1, 1, 1));
    HopfAlgebra H(p);
    std::mt19937_64 rng(2024);
    int assoc_bad = 0;
    for (int t = 0; t < 200; ++t) {
        Element a = H.random_element(rng, 3), b = H.random_element(rng, 3), c = H.random_element(rng, 3);
        assoc_bad += H.multiply(H.multiply(a, b), c) != H.multiply(a, H.multiply(b, c));
    }
    return {failed == 0 && assoc_bad == 0,
            std::to_string(checked - failed) + "/" + std::to_string(checked) + " commutation identities, " +
                std::to_string(200 - assoc_bad) + "/200 associative triples; the beta3 term as displayed (no y^(k-1)) fails in " +
                std::to_string(printed_bad) + " cases with k >= 2"};
}

Outcome idempotents()
{
    auto p = quotient_algebra_params(3, 1, beta(1, 1, 1), 2);
    auto qp = QuotientParams::make(p, 2, 1, 0);
    HopfAlgebra H(p);
    IdempotentReport r = central_idempotents(H, qp);
    bool dims = !r.block_dims.empty();
    int total = 0;
    for (int d : r.block_dims) {
        dims = dims && d == 27;
        total += d;
    }
    const int count = static_cast<int>(r.idempotents.size());
    return {count == 6 && r.passed() && dims,
            "found " + std::to_string(count) + " central idempotents (expected 6); orthogonal=" +
                std::to_string(r.orthogonal) + " complete=" + std::to_string(r.complete) +
                " central=" + std::to_string(r.central) + "; every block 27-dimensional=" + std::to_string(dims) +
                ", blocks sum to " + std::to_string(total) + " = dim"};
}

Outcome integral()
{
    auto p = quotient_algebra_params(3, 1, beta(1, 1, 1), 1);
    auto qp = QuotientParams::make(p, 1, 0, 0);
    HopfAlgebra H(p);
    IntegralReport r = integral_check(H, qp);
    const long want = qp.N * p.n * p.n;
    return {r.passed() && r.checked == want,
            "eps(lambda)=0: " + std::to_string(r.counit_zero) + ", two-sided on " + std::to_string(r.checked) + "/" +
                std::to_string(want) + " monomials" + (r.witness.empty() ? "" : ", witness " + r.witness)};
}

Outcome radical()
{
    auto p = quotient_algebra_params(3, 1, beta(1, 1, 0), 1);
    auto qp = QuotientParams::make(p, 1, 0, 0);
    HopfAlgebra H(p);
    RadicalReport r = radical_check(H, qp, 0);
    return {r.passed() && r.quotient_dim == p.n,
            "block " + std::to_string(r.block_dim) + ", radical " + std::to_string(r.radical_dim) + ", quotient " +
                std::to_string(r.quotient_dim) + ", nilpotent of index " + std::to_string(r.nilpotency_index)};
}

struct SweepModule {
    AlgebraParams p;
    ModuleRep m;
};

// every simple the constructors accept on a grid of parameters
std::vector<SweepModule> sweep(std::array<int, 4>& kinds, int& rejected)
{
    std::vector<SweepModule> out;
    std::vector<std::pair<int, int>> shapes{{2, 1}, {3, 1}, {3, 2}, {4, 1}};
    for (auto [n, n1] : shapes)
        for (int mask = 0; mask < 8; ++mask) {
            auto p = AlgebraParams::make(n, n1, beta_mask(mask));
            std::vector<CycScalar> vals{CycScalar(1), CycScalar(2), p.q};
            int i = 0;
            for (const auto& g1 : vals)
                for (const auto& g2 : vals)
                    for (const auto& g3 : vals) {
                        i = (i + 1) % n;
                        std::vector<std::function<ModuleRep()>> tries{
                            [&] { return build_V0(p, g1, g2, g3, i); },
                            [&] { return build_Vr(p, g1, g2, g3, i); },
                            [&] { return build_module(p, SimpleLabel{Kind::VI, g1, g2, g3, i, 0, std::nullopt}); },
                            [&] { return build_module(p, SimpleLabel{Kind::VII, g1, g2, g3, i, 0, std::nullopt}); },
                        };
                        for (int kind = 0; kind < 4; ++kind) {
                            try {
                                out.push_back({p, tries[kind]()});
                                ++kinds[kind];
                            } catch (const Error& e) {
                                if (e.code() != "WrongType" && e.code() != "FieldTooSmall")
                                    throw;
                                ++rejected;
                            }
                        }
                    }
        }
    return out;
}

Outcome constructors(const std::vector<SweepModule>& mods, const std::array<int, 4>& kinds)
{
    int ok = 0;
    std::string bad;
    for (const auto& s : mods) {
        bool good = verify_module(s.p, s.m).passed && is_simple(s.m);
        ok += good;
        if (!good && bad.empty())
            bad = ", first failure " + s.m.descriptor;
    }
    bool all_kinds = kinds[0] && kinds[1] && kinds[2] && kinds[3];
    return {ok == static_cast<int>(mods.size()) && mods.size() >= 50 && all_kinds,
            std::to_string(ok) + "/" + std::to_string(mods.size()) + " modules verified and simple (V0 " +
                std::to_string(kinds[0]) + ", Vr " + std::to_string(kinds[1]) + ", VI " + std::to_string(kinds[2]) +
                ", VII " + std::to_string(kinds[3]) + ")" + bad};
}

Outcome extensions()
{
    auto p = AlgebraParams::make(3, 1, beta(1, 0, 0));
    std::vector<CycScalar> ks{CycScalar(0), CycScalar(0)};
    Matrix e0(4, 1);
    e0(0, 0) = CycScalar(1);
    ModuleRep v = build_extension_prop46(p, 0, CycScalar(1), ks);
    bool v_nonsplit = verify_module(p, v).passed && !is_split(v, e0);
    bool v0_split = is_split(build_extension_prop46(p, 0, CycScalar(0), ks), e0);

    auto p4 = AlgebraParams::make(4, 2, beta(0, 0, 1));
    ModuleRep L = build_extension_prop47(p4, CycScalar(1), CycScalar(2), CycScalar(1), 1);
    Matrix E(4, 2);
    E(2, 0) = CycScalar(1);
    E(3, 1) = CycScalar(1);
    bool l_nonsplit = verify_module(p4, L).passed && !is_split(L, E);

    auto p3 = AlgebraParams::make(3, 1, beta(0, 0, 1));
    ModuleRep a = build_V0(p3, CycScalar(1), CycScalar(1), CycScalar(1), 0);
    ModuleRep b = build_Vr(p3, CycScalar(1), CycScalar(1), CycScalar(1), 0);
    bool sum_split = is_split(p3, direct_sum(a, b), b, a);
    return {v_nonsplit && l_nonsplit && sum_split && v0_split,
            "V(varsigma=1) non-split " + std::to_string(v_nonsplit) + ", L non-split " + std::to_string(l_nonsplit) +
                ", direct sum splits " + std::to_string(sum_split) + ", V(0) splits " + std::to_string(v0_split)};
}

struct FusionCase {
    std::string left, right;
    SimpleLabel expected;
};

SimpleLabel lab(Kind k, const CycScalar& g1, const CycScalar& g2, const CycScalar& g3, int i)
{
    return {k, g1, g2, g3, i, 0, std::nullopt};
}

bool product_matches(FusionEngine& e, const FusionCase& c)
{
    FusionVector f = e.fuse(c.left, c.right);
    if (f.size() != 1 || f.begin()->second != 1 || e.fuse(c.right, c.left) != f)
        return false;
    const AlgebraParams& p = e.params();
    SimpleLabel want = c.expected;
    if (want.kind == Kind::V0 || want.kind == Kind::Vr)
        return e.canonical(want.str()) == f.begin()->first;
    for (const auto& k : solve_k_seed(p, want)) {
        want.kseed = k;
        if (e.canonical(want.str()) == f.begin()->first)
            return true;
    }
    return false;
}

bool intertwined(FusionEngine& e, const FusionCase& c)
{
    const AlgebraParams& p = e.params();
    ModuleRep t = tensor(p, e.module(c.left), e.module(c.right));
    FusionVector f = e.fuse(c.left, c.right);
    auto iso = find_isomorphism(t, e.module(f.begin()->first));
    return iso && iso->rank() == t.dim;
}

Outcome fusion_oracles()
{
    using Group = std::vector<std::pair<std::array<int, 5>, std::vector<FusionCase>>>;
    const CycScalar one(1);
    auto c = [](long a, long b = 1) { return CycScalar(Rational(a, b)); };
    // {n, n1, beta1, beta2, beta3}
    std::map<std::string, Group> lemmas;
    lemmas["V0 V0"] = {
        {{3, 1, 0, 0, 0},
         {{"V0(2,1,1;0)", "V0(3,1,1;1)", lab(Kind::V0, c(6), one, one, 1)},
          {"V0(1/2,5,7;2)", "V0(3,2,1/7;2)", lab(Kind::V0, c(3, 2), c(10), one, 1)}}},
        {{3, 1, 1, 0, 0},
         {{"V0(2,2,3;1)", "V0(1,1,1;2)", lab(Kind::V0, c(2), c(2), c(3), 0)},
          {"V0(2,2,1;0)", "V0(3,3,5;1)", lab(Kind::V0, c(6), c(6), c(5), 1)}}},
        {{2, 1, 0, 1, 0}, {{"V0(2,3,2;1)", "V0(3,1,3;1)", lab(Kind::V0, c(6), c(3), c(6), 0)}}},
        {{3, 1, 0, 0, 1}, {{"V0(1,2,1/2;0)", "V0(2,4,1;0)", lab(Kind::V0, c(2), c(8), c(1, 2), 0)}}},
    };
    lemmas["VI V0"] = {
        {{3, 1, 1, 0, 0},
         {{"VI(2,1,1;0)", "V0(1,1,1;1)", lab(Kind::VI, c(2), one, one, 1)},
          {"VI(2,1,1;0)", "V0(3,3,1;0)", lab(Kind::VI, c(6), c(3), one, 0)},
          {"VI(3,1,1;0)", "V0(2,2,1;2)", lab(Kind::VI, c(6), c(2), one, 2)},
          {"VI(5,1,1;0)", "V0(1,1,1;2)", lab(Kind::VI, c(5), one, one, 2)}}},
        {{2, 1, 1, 0, 0}, {{"VI(2,1,1;0)", "V0(3,3,1;1)", lab(Kind::VI, c(6), c(3), one, 1)}}},
    };
    lemmas["VII V0"] = {
        {{3, 1, 0, 1, 0},
         {{"VII(2,1,1;0)", "V0(2,1,2;1)", lab(Kind::VII, c(4), one, c(2), 1)},
          {"VII(2,1,1;0)", "V0(1,1,1;1)", lab(Kind::VII, c(2), one, one, 1)},
          {"VII(3,1,1;0)", "V0(3,1,3;0)", lab(Kind::VII, c(9), one, c(3), 0)},
          {"VII(2,1,1;0)", "V0(5,1,5;2)", lab(Kind::VII, c(10), one, c(5), 2)}}},
        {{2, 1, 0, 1, 0}, {{"VII(3,1,1;0)", "V0(2,1,2;1)", lab(Kind::VII, c(6), one, c(2), 1)}}},
    };
    lemmas["Vr V0"] = {
        {{3, 1, 0, 0, 1},
         {{"V2(1,1,1;0)", "V0(2,4,1;0)", lab(Kind::Vr, c(2), c(4), one, 0)},
          {"V2(1,1,1;0)", "V0(1,2,1/2;0)", lab(Kind::Vr, one, c(2), c(1, 2), 0)},
          {"V3(1,1,1;0)", "V0(2,4,1;0)", lab(Kind::Vr, c(2), c(4), one, 0)},
          {"V3(1,1,1;0)", "V0(3,3,3;0)", lab(Kind::Vr, c(3), c(3), c(3), 0)},
          {"V2(2,4,1;0)", "V0(3,3,3;0)", lab(Kind::Vr, c(6), c(12), c(3), 0)}}},
    };
    // r is carried by the left factor
    for (auto& [key, group] : lemmas)
        for (auto& [shape, cases] : group)
            for (auto& fc : cases)
                if (fc.expected.kind == Kind::Vr)
                    fc.expected.r = fc.left[1] - '0';

    bool pass = true;
    std::string detail;
    int iso_ok = 0, iso_total = 0;
    for (auto& [key, group] : lemmas) {
        int ok = 0, total = 0;
        bool iso_done = false;
        for (auto& [s, cases] : group) {
            FusionEngine e(AlgebraParams::make(s[0], s[1], beta(s[2], s[3], s[4])));
            for (const auto& fc : cases) {
                ++total;
                bool good = false;
                try {
                    good = product_matches(e, fc);
                } catch (const Error&) {
                }
                ok += good;
                if (good && !iso_done) {
                    ++iso_total;
                    iso_ok += intertwined(e, fc);
                    iso_done = true;
                }
            }
        }
        pass = pass && ok == total && total >= 5;
        detail += key + " " + std::to_string(ok) + "/" + std::to_string(total) + ", ";
    }
    pass = pass && iso_ok == iso_total && iso_total >= 3;
    return {pass, detail + "explicit isomorphisms " + std::to_string(iso_ok) + "/" + std::to_string(iso_total)};
}

bool starts_with(const std::string& s, const std::string& prefix)
{
    return s.rfind(prefix, 0) == 0;
}

bool holds_with(const RelationOutcome& r, const std::string& reading)
{
    for (const auto& c : r.checks)
        if (c.holds && starts_with(c.reading, reading))
            return true;
    return false;
}

Outcome z_relations()
{
    auto t0 = Clock::now();
    SuiteReport r = verify_suite("thm5.5", SuiteConfig{});
    int total = 0, printed = 0, triv = 0;
    for (const auto& o : r.relations) {
        if (!(starts_with(o.relation, "z2^2") || starts_with(o.relation, "z_r z2") ||
              starts_with(o.relation, "z_t z2") || starts_with(o.relation, "z_r = sum")))
            continue;
        ++total;
        printed += o.holds_as_printed();
        triv += holds_with(o, "g=1");
    }
    double s = seconds_since(t0);
    return {total == 5 && printed == total && s < 30,
            std::to_string(printed) + "/" + std::to_string(total) +
                " hold with g = [V0(1,1,1;1)] (not a module at n=3, beta3 != 0); " + std::to_string(triv) + "/" +
                std::to_string(total) + " hold with g -> 1; " + fmt_time(s)};
}

Outcome top_identity()
{
    bool pass = true;
    std::string detail;
    for (auto [n, n1] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}}) {
        SuiteReport r = top_identity_readings(n, n1);
        auto h = r.relations.at(0).holding_readings();
        detail += "(" + std::to_string(n) + "," + std::to_string(n1) + "): ";
        if (h.empty()) {
            pass = false;
            detail += "no reading holds";
            for (const auto& note : r.notes)
                detail += ", " + note;
        } else {
            for (size_t i = 0; i < h.size(); ++i)
                detail += (i ? " | " : "") + h[i];
        }
        detail += "; ";
    }
    return {pass, detail};
}

// relation display -> (instances holding as printed, instances evaluated)
struct CaseTally {
    int holding = 0, evaluated = 0, unbound = 0;
};

void tally(const SuiteReport& r, std::map<std::string, CaseTally>& cases)
{
    for (const auto& o : r.relations) {
        if (starts_with(o.relation, "restricted"))
            continue;
        CaseTally& t = cases[r.suite + ": " + o.relation];
        bool evaluated = false;
        for (const auto& c : o.checks)
            evaluated = evaluated || c.evaluated;
        if (!evaluated) {
            ++t.unbound;
            continue;
        }
        ++t.evaluated;
        t.holding += o.holds_as_printed();
    }
}

Outcome case_tables()
{
    bool pass = true;
    std::string detail;
    for (int n : {3, 2}) {
        std::map<std::string, CaseTally> cases;
        for (const char* s : {"thm5.8", "thm5.10", "thm5.13", "thm5.15"}) {
            SuiteConfig cfg;
            cfg.n = n;
            tally(verify_suite(s, cfg), cases);
        }
        int good = 0, counted = 0;
        for (const auto& [name, t] : cases) {
            if (n == 2 && t.evaluated == 0)
                continue;
            ++counted;
            bool ok = t.holding == t.evaluated && t.unbound == 0 && (n == 2 || t.evaluated >= 3);
            if (n == 2)
                ok = t.holding == t.evaluated;
            good += ok;
        }
        pass = pass && good == counted;
        detail += "n=" + std::to_string(n) + ": " + std::to_string(good) + "/" + std::to_string(counted) +
                  " cases hold as printed; ";
    }
    return {pass, detail + "see verify-relations for readings that do hold"};
}

Outcome gelaki()
{
    int ok = 0, total = 0, undefined = 0;
    std::string bad;
    for (auto [n, N] : std::vector<std::pair<int, long>>{{3, 6}, {3, 12}, {2, 4}})
        for (int mask = 0; mask < 8; ++mask)
            for (const auto& c : gelaki_orders(n, 1, N, beta_mask(mask))) {
                ++total;
                if (c.ok()) {
                    ++ok;
                } else if (!c.error.empty()) {
                    ++undefined;
                } else {
                    bad += "; " + c.name + " at (n,N)=(" + std::to_string(n) + "," + std::to_string(N) + "), beta=" +
                           std::to_string(mask & 1) + std::to_string((mask >> 1) & 1) +
                           std::to_string((mask >> 2) & 1) + " has order " + std::to_string(c.found) +
                           ", expected " + std::to_string(c.expected);
                }
            }
    SuiteReport r = verify_suite("cor-gelaki", SuiteConfig{});
    bool power = false;
    for (const auto& o : r.relations)
        if (starts_with(o.relation, "x*^"))
            power = o.holds_as_printed();
    return {ok == total && power, std::to_string(ok) + "/" + std::to_string(total) + " orders; " +
                                      std::to_string(undefined) + " undefined (V0(1,1,1;1) is not a module)" + bad +
                                      "; power relation at (3,6,1) " + (power ? "holds" : "fails")};
}

Outcome remark()
{
    auto t0 = Clock::now();
    SuiteReport r = verify_suite("remark5.21", SuiteConfig{});
    double s = seconds_since(t0);
    std::string detail;
    for (const auto& o : r.relations)
        detail += o.instance + (o.holds_as_printed() ? " equal" : " differ") + "; ";
    return {r.passed() && s < 300, detail + fmt_time(s)};
}

Outcome duality(const std::vector<SweepModule>& mods)
{
    int ok = 0, undecided = 0;
    std::string bad;
    for (const auto& s : mods) {
        const std::string triv = build_V0(s.p, CycScalar(1), CycScalar(1), CycScalar(1), 0).descriptor;
        try {
            FusionVector f = decompose(s.p, tensor(s.p, s.m, dual_module(s.p, s.m)));
            auto it = f.find(triv);
            if (it != f.end() && it->second >= 1)
                ++ok;
            else if (bad.empty())
                bad = ", first failure " + s.m.descriptor;
        } catch (const Error& e) {
            ++undecided;
            if (bad.empty())
                bad = ", " + s.m.descriptor + ": " + e.what();
        }
    }
    return {ok == static_cast<int>(mods.size()),
            std::to_string(ok) + "/" + std::to_string(mods.size()) + " contain the trivial class" + bad};
}

}  // namespace

int main()
{
    std::array<int, 4> kinds{0, 0, 0, 0};
    int rejected = 0;
    std::vector<SweepModule> mods;
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Hopf axioms", hopf_axioms},
        {"basis arithmetic", basis_arithmetic},
        {"central idempotents", idempotents},
        {"integral", integral},
        {"radical", radical},
        {"module constructors",
         [&] {
             mods = sweep(kinds, rejected);
             return constructors(mods, kinds);
         }},
        {"non-split extensions", extensions},
        {"fusion oracle agreement", fusion_oracles},
        {"z relations at n=3", z_relations},
        {"top identity readings", top_identity},
        {"x, y product case tables", case_tables},
        {"quotient generator orders", gelaki},
        {"beta2 independence of the quotient ring", remark},
        {"duality", [&] { return duality(mods); }},
    };
    int failed = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << "criterion " << k + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[k].first << ": "
                  << o.detail << std::endl;
    }
    return failed ? 1 : 0;
}
