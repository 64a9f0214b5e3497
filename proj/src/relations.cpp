#include "hopf/grothendieck.hpp"

#include "hopf/error.hpp"
#include "suites.hpp"

#include <numeric>

namespace hopf {

namespace {

using Eval = std::function<std::pair<GAlt, GAlt>(GeneratorDictionary&, const std::string&)>;

CycScalar fr(long a, long b = 1)
{
    return CycScalar(Rational(a, b));
}

std::string nm(const CycScalar& x)
{
    return x.pretty();
}

GPoly gp_add(GPoly a, const GPoly& b)
{
    for (const auto& [k, c] : b)
        a[k] += c;
    return a;
}

GPoly gp_mul(const GPoly& a, const GPoly& b, int n)
{
    GPoly out;
    for (const auto& [i, c] : a)
        for (const auto& [j, d] : b)
            out[(i + j) % n] += c * d;
    return out;
}

GPoly gp_scale(GPoly a, long k)
{
    for (auto& [e, c] : a)
        c *= k;
    return a;
}

// 1 + g^{n-1}
GPoly one_plus(const GeneratorDictionary& d)
{
    return gp_add(d.g(0), d.g(d.params().n - 1));
}

// minimal r in [1, t] with w = q^{(1-r) n1}; 0 when w is not in <q^{n1}>
int minimal_r(const AlgebraParams& p, const CycScalar& w)
{
    for (int r = 1; r <= p.t; ++r)
        if (w == p.qpow(static_cast<long long>(1 - r) * p.n1))
            return r;
    return 0;
}

int r_shift(int r, int p, int t)
{
    int v = ((r - 2 * p) % t + t) % t;
    return v == 0 ? t : v;
}

GRingElement z_or_unit(GeneratorDictionary& d, int r)
{
    if (r == 0)
        return {};
    if (r == 1)
        return d.one();
    return d.z(r);
}

// sum_p W(p) with W(p) = g^{n-p} z_t when r_p = t, else g^{n-p-r_p} z_{t-r_p} + g^{n-p} z_{r_p}
GAlt chain_sum(GeneratorDictionary& d, int r, int count)
{
    const int n = d.params().n;
    const int t = d.params().t;
    GAlt out{GRingElement{}};
    for (int p = 0; p < count; ++p) {
        int rp = r_shift(r, p, t);
        if (rp == t) {
            out = alt_add(out, d.act(d.g(n - p), d.z(t)));
        } else {
            out = alt_add(out, d.act(d.g(n - p - rp), z_or_unit(d, t - rp)));
            out = alt_add(out, d.act(d.g(n - p), z_or_unit(d, rp)));
        }
    }
    return out;
}

class Builder {
public:
    Builder(const AlgebraParams& p, std::string suite) : e_(p)
    {
        rep_.suite = std::move(suite);
        rep_.params = p.describe();
    }

    FusionEngine& engine() { return e_; }
    const AlgebraParams& params() const { return e_.params(); }

    void add(const std::string& relation, const std::string& instance, Eval eval,
             std::vector<std::string> variants = {""})
    {
        RelationSpec s{relation, instance, std::move(variants), std::move(eval)};
        rep_.relations.push_back(check_relation(e_, s));
    }

    void note(const std::string& s) { rep_.notes.push_back(s); }
    SuiteReport take() { return std::move(rep_); }

private:
    FusionEngine e_;
    SuiteReport rep_;
};

std::array<CycScalar, 3> beta_or(const SuiteConfig& cfg, std::array<CycScalar, 3> def)
{
    return cfg.beta ? *cfg.beta : def;
}

// beta1 = beta2 = 0, beta3 != 0
SuiteReport suite_zz(const SuiteConfig& cfg)
{
    auto beta = beta_or(cfg, {0, 0, 1});
    AlgebraParams p = AlgebraParams::make(cfg.n, cfg.n1, beta);
    if (!p.beta1.is_zero() || !p.beta2.is_zero() || p.beta3.is_zero())
        throw Error("PreconditionViolated", "thm5.5 needs beta = (0, 0, beta3 != 0)");
    Builder b(p, "thm5.5");
    const int n = p.n, t = p.t;
    const CycScalar sq = p.sqrtq_pow(1);

    if (t >= 3)
        b.add("z2^2 = z3 + g^(n-1)", "", [n](GeneratorDictionary& d, const std::string&) {
            GRingElement z2 = d.z(2);
            GAlt lhs{gr_mul(d.engine(), z2, z2)};
            GAlt rhs = alt_add({d.z(3)}, d.act(d.g(n - 1), d.one()));
            return std::pair{lhs, rhs};
        });
    for (int r = 2; r + 1 <= t; ++r)
        b.add("z_r z2 = z_(r+1) + g^(n-1) z_(r-1)", "r=" + std::to_string(r),
              [n, r](GeneratorDictionary& d, const std::string&) {
                  GAlt lhs{gr_mul(d.engine(), d.z(r), d.z(2))};
                  GAlt rhs = alt_add({d.z(r + 1)}, d.act(d.g(n - 1), z_or_unit(d, r - 1)));
                  return std::pair{lhs, rhs};
              });
    b.add("z_t z2 = 2 g^(n-1) z_(t-1) + g^(n-t) + 1", "t=" + std::to_string(t),
          [n, t](GeneratorDictionary& d, const std::string&) {
              GAlt lhs{gr_mul(d.engine(), d.z(t), d.z(2))};
              GAlt rhs = alt_scale(d.act(d.g(n - 1), z_or_unit(d, t - 1)), 2);
              rhs = alt_add(rhs, d.act(d.g(n - t), d.one()));
              rhs = alt_add(rhs, {d.one()});
              return std::pair{lhs, rhs};
          });
    for (int r = 2; r <= t; ++r)
        b.add("z_r = sum_v (-1)^v binom(r-1-v, v) g^((n-1)v) z2^(r-1-2v)", "r=" + std::to_string(r),
              [r](GeneratorDictionary& d, const std::string&) {
                  return std::pair{GAlt{d.z(r)}, chebyshev_z(d, r)};
              });

    // z' relations need xi generic; 2, 3, 5 and their products are never roots of unity
    const std::vector<CycScalar> gs{fr(2), fr(3), fr(5)};
    for (const auto& g1 : gs)
        b.add("z2 z'_xi = (1 + g^(n-1)) z'_(xi q^(n/2))", "xi~" + nm(g1),
              [g1, sq](GeneratorDictionary& d, const std::string& v) {
                  GAlt lhs{gr_mul(d.engine(), d.z(2), d.z_prime(g1))};
                  CycScalar sub = v == "subscript xi" ? g1 : g1 * sq;
                  return std::pair{lhs, d.act(one_plus(d), d.z_prime(sub))};
              },
              {"subscript xi q^(n/2)", "subscript xi"});
    const std::vector<std::pair<CycScalar, CycScalar>> generic{{fr(2), fr(3)}, {fr(2), fr(5)}, {fr(3), fr(1, 5)}};
    for (const auto& [g1, g2] : generic)
        b.add("z'_xi z'_xi' = s'' z'_(xi xi')", "xi~" + nm(g1) + ", xi'~" + nm(g2),
              [g1, g2, n, t](GeneratorDictionary& d, const std::string& v) {
                  GAlt lhs{gr_mul(d.engine(), d.z_prime(g1), d.z_prime(g2))};
                  GPoly c = d.s_dprime();
                  if (v == "g^(n-t) s''")
                      c = gp_mul(d.g(n - t), c, n);
                  return std::pair{lhs, d.act(c, d.z_prime(g1 * g2))};
              },
              {"s''", "g^(n-t) s''"});
    // xi xi' in <q^{n1}>: weight products 1, q, q^2
    for (int j = 0; j < 3; ++j) {
        CycScalar g1 = fr(2), g2 = p.qpow(j) / fr(2);
        int r = minimal_r(p, (g1 * g2).pow(2L * p.n1).inv());
        if (r == 0)
            continue;
        b.add("z'_xi z'_xi' = sum_p W(p), xi xi' in <q^n1>", "xi~2, xi'~q^" + std::to_string(j) + "/2",
              [g1, g2, r, t](GeneratorDictionary& d, const std::string&) {
                  GAlt lhs{gr_mul(d.engine(), d.z_prime(g1), d.z_prime(g2))};
                  return std::pair{lhs, chain_sum(d, r, t)};
              });
    }
    return b.take();
}

// beta1 beta3 != 0, beta2 = 0
SuiteReport suite_xz(const SuiteConfig& cfg)
{
    auto beta = beta_or(cfg, {1, 0, 1});
    AlgebraParams p = AlgebraParams::make(cfg.n, cfg.n1, beta);
    if (p.beta1.is_zero() || !p.beta2.is_zero() || p.beta3.is_zero())
        throw Error("PreconditionViolated", "thm5.8 needs beta = (beta1 != 0, 0, beta3 != 0)");
    Builder b(p, "thm5.8");
    const int n = p.n, n1 = p.n1;
    const long long nn1 = static_cast<long long>(n) * n1;
    const CycScalar q = p.qpow(1), sq = p.sqrtq_pow(1);
    using XP = std::pair<CycScalar, CycScalar>;

    struct Pair {
        XP a, b;
    };
    auto classify = [&](const Pair& pr) {
        CycScalar gg = pr.a.first * pr.b.first, zz = pr.a.second * pr.b.second;
        if (!gg.pow(nn1).is_one())
            return 1;
        return minimal_r(p, zz * gg.pow(-2LL * n1)) ? 2 : 3;
    };
    auto inst = [](const Pair& pr) {
        return "x(" + nm(pr.a.first) + "," + nm(pr.a.second) + ") x(" + nm(pr.b.first) + "," + nm(pr.b.second) + ")";
    };
    auto lhs_of = [](GeneratorDictionary& d, const Pair& pr) {
        return alt_mul(d.engine(), {d.x(pr.a.first, pr.a.second).front()}, d.x(pr.b.first, pr.b.second));
    };

    std::vector<Pair> pairs{
        {{fr(2), fr(1)}, {fr(3), fr(1)}},
        {{fr(2), fr(2)}, {fr(3), fr(1)}},
        {{fr(2), fr(1)}, {fr(1, 3), fr(2)}},
        {{fr(2), fr(1)}, {fr(1, 2), fr(1)}},
        {{fr(2), q}, {q / fr(2), q}},
        {{fr(2), fr(2)}, {fr(1, 2), fr(1, 2)}},
        {{fr(2), fr(2)}, {fr(1, 2), fr(1)}},
        {{fr(2), fr(3)}, {fr(1, 2), fr(1)}},
        {{fr(2), fr(2)}, {fr(1, 2), fr(3)}},
    };
    for (const auto& pr : pairs) {
        int c = classify(pr);
        CycScalar gg = pr.a.first * pr.b.first, zz = pr.a.second * pr.b.second;
        if (c == 1) {
            b.add("x x' = s x_(zeta1 zeta1', zeta2 zeta2')  [(zeta1 zeta1')^(n n1) != 1]", inst(pr),
                  [pr, gg, zz, lhs_of](GeneratorDictionary& d, const std::string&) {
                      return std::pair{lhs_of(d, pr), d.act(d.s(), d.x(gg, zz))};
                  });
        } else if (c == 2) {
            int r = minimal_r(p, zz * gg.pow(-2LL * n1));
            b.add("x x' = s' g_(zeta1 zeta1',1,zeta2 zeta2') sum_p (...)  [zeta2 zeta2' (zeta1 zeta1')^(-2n1) in <q^n1>]",
                  inst(pr), [pr, gg, zz, r, n, lhs_of](GeneratorDictionary& d, const std::string&) {
                      GAlt inner = alt_mul(d.engine(), {d.v0(gg, 1, zz)}, chain_sum(d, r, n));
                      return std::pair{lhs_of(d, pr), d.act(d.s_prime(), inner)};
                  });
        } else {
            b.add("x x' = u s g_(zeta1 zeta1',1,1) z''_(zeta2 zeta2')  [otherwise]", inst(pr),
                  [pr, gg, zz, lhs_of](GeneratorDictionary& d, const std::string&) {
                      GAlt rhs = alt_mul(d.engine(), {d.v0(gg, 1, 1)}, {d.z_dprime(zz)});
                      rhs = d.act(gp_scale(d.s(), d.params().u), rhs);
                      return std::pair{lhs_of(d, pr), rhs};
                  });
        }
    }
    const std::vector<XP> xs{{fr(2), fr(1)}, {fr(3), fr(1)}, {fr(2), fr(2)}};
    for (const auto& [g1, z2v] : xs)
        b.add("z2 x = (1 + g^(n-1)) x_(zeta1 q^(n/2), zeta2)", "x(" + nm(g1) + "," + nm(z2v) + ")",
              [g1, z2v, sq](GeneratorDictionary& d, const std::string& v) {
                  GAlt lhs = alt_mul(d.engine(), {d.z(2)}, {d.x(g1, z2v).front()});
                  CycScalar sub = v == "subscript zeta1" ? g1 : g1 * sq;
                  return std::pair{lhs, d.act(one_plus(d), d.x(sub, z2v))};
              },
              {"subscript zeta1 q^(n/2)", "subscript zeta1"});
    const std::vector<std::pair<XP, CycScalar>> xz{
        {{fr(2), fr(1)}, fr(2)}, {{fr(3), fr(1)}, fr(5)}, {{fr(2), fr(2)}, fr(3)}};
    for (const auto& [x, xi] : xz)
        b.add("x z''_xi = s'' x_(zeta1, zeta2 xi)", "x(" + nm(x.first) + "," + nm(x.second) + "), xi=" + nm(xi),
              [x, xi](GeneratorDictionary& d, const std::string&) {
                  GAlt lhs = alt_mul(d.engine(), {d.x(x.first, x.second).front()}, {d.z_dprime(xi)});
                  return std::pair{lhs, d.act(d.s_dprime(), d.x(x.first, x.second * xi))};
              });
    for (const auto& xi : {fr(2), fr(3), fr(5)})
        b.add("z2 z''_xi = eta (1 + g^(n-1)) z''_(xi q^(-n1))", "xi=" + nm(xi),
              [xi, n1](GeneratorDictionary& d, const std::string&) {
                  GAlt lhs{gr_mul(d.engine(), d.z(2), d.z_dprime(xi))};
                  GAlt z = alt_mul(d.engine(), {d.eta()}, {d.z_dprime(xi * d.params().qpow(-n1))});
                  return std::pair{lhs, d.act(one_plus(d), z)};
              });
    const std::vector<std::pair<CycScalar, CycScalar>> zz{{fr(2), fr(3)}, {fr(2), fr(5)}, {fr(3), fr(1, 5)}};
    for (const auto& [a, c] : zz)
        b.add("z''_xi z''_xi' = s'' z''_(xi xi')", "xi=" + nm(a) + ", xi'=" + nm(c),
              [a, c](GeneratorDictionary& d, const std::string&) {
                  GAlt lhs{gr_mul(d.engine(), d.z_dprime(a), d.z_dprime(c))};
                  return std::pair{lhs, d.act(d.s_dprime(), d.z_dprime(a * c))};
              });
    return b.take();
}

// one of beta1, beta2 nonzero, the others zero; mirror = false for x, true for y
SuiteReport suite_single(const SuiteConfig& cfg, bool mirror)
{
    const char* name = mirror ? "thm5.13" : "thm5.10";
    auto beta = beta_or(cfg, mirror ? std::array<CycScalar, 3>{0, 1, 0} : std::array<CycScalar, 3>{1, 0, 0});
    AlgebraParams p = AlgebraParams::make(cfg.n, cfg.n1, beta);
    bool ok = mirror ? (p.beta1.is_zero() && !p.beta2.is_zero()) : (!p.beta1.is_zero() && p.beta2.is_zero());
    if (!ok || !p.beta3.is_zero())
        throw Error("PreconditionViolated", std::string(name) + " needs exactly one of beta1, beta2 nonzero");
    Builder b(p, name);
    const long long nn1 = static_cast<long long>(p.n) * p.n1;
    const CycScalar q = p.qpow(1);
    const std::string sym = mirror ? "y" : "x";
    auto gen = [mirror](GeneratorDictionary& d, const CycScalar& g1) {
        return mirror ? d.y(g1, 1) : d.x(g1, 1);
    };
    const std::vector<std::pair<CycScalar, CycScalar>> pairs{
        {fr(2), fr(3)}, {fr(2), fr(1, 3)}, {fr(3), fr(5)},
        {fr(2), fr(1, 2)}, {fr(2), q / fr(2)}, {fr(3), q.pow(2) / fr(3)}};
    for (const auto& [a, c] : pairs) {
        CycScalar gg = a * c;
        std::string inst = sym + "(" + nm(a) + ") " + sym + "(" + nm(c) + ")";
        if (!gg.pow(nn1).is_one()) {
            b.add(sym + "_e " + sym + "_e' = s " + sym + "_(e e')  [(e e')^(n n1) != 1]", inst,
                  [a, c, gg, gen](GeneratorDictionary& d, const std::string&) {
                      GAlt lhs = alt_mul(d.engine(), {gen(d, a).front()}, gen(d, c));
                      return std::pair{lhs, d.act(d.s(), gen(d, gg))};
                  });
        } else {
            b.add(sym + "_e " + sym + "_e' = n s g_(e e',1,1)  [(e e')^(n n1) = 1]", inst,
                  [a, c, gg, gen](GeneratorDictionary& d, const std::string&) {
                      GAlt lhs = alt_mul(d.engine(), {gen(d, a).front()}, gen(d, c));
                      return std::pair{lhs, d.act(gp_scale(d.s(), d.params().n), d.v0(gg, 1, 1))};
                  });
        }
    }
    return b.take();
}

// beta1 beta2 != 0, beta3 = 0
SuiteReport suite_xy(const SuiteConfig& cfg)
{
    auto beta = beta_or(cfg, {1, 7, 0});
    AlgebraParams p = AlgebraParams::make(cfg.n, cfg.n1, beta);
    if (p.beta1.is_zero() || p.beta2.is_zero() || !p.beta3.is_zero())
        throw Error("PreconditionViolated", "thm5.15 needs beta = (beta1 != 0, beta2 != 0, 0)");
    Builder b(p, "thm5.15");
    const int n = p.n, n1 = p.n1;
    const long long nn1 = static_cast<long long>(n) * n1;
    const CycScalar q = p.qpow(1);
    using XP = std::pair<CycScalar, CycScalar>;
    auto xs = [](const XP& x) { return "x(" + nm(x.first) + "," + nm(x.second) + ")"; };
    auto ys = [](const XP& y) { return "y(" + nm(y.first) + "," + nm(y.second) + ")"; };
    if (n1 != 1)
        b.note("instances are tuned to n1 = 1");

    // x(g, g) has C = 0 and a single seed; x(2, 1), x(1/2, 1/4) have k^3 = 1 at n = 3, beta = (1, 7, 0)
    std::vector<std::pair<XP, XP>> pairs{
        {{fr(2), fr(2)}, {fr(3), fr(3)}},
        {{fr(2), fr(2) * q}, {fr(3), fr(3)}},
        {{fr(2), fr(2)}, {fr(5), fr(5)}},
        {{fr(2), fr(2)}, {fr(1, 2), fr(1, 2)}},
        {{fr(2), fr(2) * q}, {fr(1, 2), fr(1, 2)}},
        {{fr(2), fr(2)}, {q / fr(2), q / fr(2)}},
    };
    if (n == 3 && n1 == 1) {
        pairs.push_back({{fr(2), fr(2)}, {fr(1, 2), fr(1, 4)}});
        pairs.push_back({{fr(2), fr(2) * q}, {fr(1, 2), fr(1, 4)}});
        pairs.push_back({{fr(2), fr(1)}, {fr(1, 2), fr(1, 2)}});
    }
    for (const auto& [x1, x2] : pairs) {
        CycScalar gg = x1.first * x2.first, zz = x1.second * x2.second;
        auto lhs = [x1, x2](GeneratorDictionary& d) {
            return alt_mul(d.engine(), {d.x(x1.first, x1.second).front()}, d.x(x2.first, x2.second));
        };
        std::string inst = xs(x1) + " " + xs(x2);
        if (!gg.pow(nn1).is_one()) {
            b.add("x x' = s x_(zeta1 zeta1', zeta)  [(zeta1 zeta1')^(n n1) != 1]", inst,
                  [lhs, gg, zz](GeneratorDictionary& d, const std::string&) {
                      return std::pair{lhs(d), d.act(d.s(), d.x(gg, zz))};
                  });
        } else if (!zz.pow(n).is_one()) {
            // zeta^{1/n1} with n1 = 1
            b.add("x x' = s g_(zeta,zeta,zeta) y_(zeta1 zeta1' zeta^-1, zeta^-1)  [(zeta1 zeta1')^(n n1) = 1 != zeta^n]",
                  inst, [lhs, gg, zz](GeneratorDictionary& d, const std::string&) {
                      GAlt rhs = alt_mul(d.engine(), {d.v0(zz, zz, zz)}, d.y(gg / zz, zz.inv()));
                      return std::pair{lhs(d), d.act(d.s(), rhs)};
                  });
        } else {
            b.add("x x' = n s g_(zeta1 zeta1',1,zeta)  [(zeta1 zeta1')^(n n1) = zeta^n = 1]", inst,
                  [lhs, gg, zz](GeneratorDictionary& d, const std::string&) {
                      return std::pair{lhs(d), d.act(gp_scale(d.s(), d.params().n), d.v0(gg, 1, zz))};
                  });
        }
    }
    // y(e, e^{n1})
    const std::vector<std::pair<CycScalar, CycScalar>> ye{
        {fr(2), fr(3)}, {fr(2), fr(5)}, {fr(3), fr(1, 5)}, {fr(2), fr(1, 2)}, {fr(2), q / fr(2)}, {fr(3), q.pow(2) / fr(3)}};
    for (const auto& [e1, e2] : ye) {
        XP y1{e1, e1.pow(n1)}, y2{e2, e2.pow(n1)};
        CycScalar ee = e1 * e2, ep = y1.second * y2.second;
        auto lhs = [y1, y2](GeneratorDictionary& d) {
            return alt_mul(d.engine(), {d.y(y1.first, y1.second).front()}, d.y(y2.first, y2.second));
        };
        std::string inst = ys(y1) + " " + ys(y2);
        if (!ee.pow(nn1).is_one())
            b.add("y y' = s y_(e e', e2 e2')  [(e e')^(n n1) != 1]", inst,
                  [lhs, ee, ep](GeneratorDictionary& d, const std::string&) {
                      return std::pair{lhs(d), d.act(d.s(), d.y(ee, ep))};
                  });
        else
            b.add("y y' = n s g_(e e', e2 e2', 1)  [(e e')^(n n1) = 1]", inst,
                  [lhs, ee, ep](GeneratorDictionary& d, const std::string&) {
                      return std::pair{lhs(d), d.act(gp_scale(d.s(), d.params().n), d.v0(ee, ep, 1))};
                  });
    }
    // x(z1, z2) y(e, e^{n1}) with both x(z1, z2) and x(z1, z2 / e^{n1}) in the field
    std::vector<std::pair<XP, XP>> xy;
    if (n == 3 && n1 == 1)
        xy = {{{fr(2), fr(2)}, {fr(2), fr(2)}},
              {{fr(2), fr(1)}, {fr(1, 2), fr(1, 2)}},
              {{fr(2), fr(2) * q}, {fr(2), fr(2)}}};
    else
        b.note("x y instances need in-field seeds on both sides; only tabulated for n = 3, n1 = 1");
    for (const auto& [x, y] : xy) {
        std::string inst = xs(x) + " " + ys(y);
        auto rhs = [x, y](GeneratorDictionary& d) {
            GAlt r = alt_mul(d.engine(), {d.v0(y.first, y.second, y.second)}, d.x(x.first, x.second / y.second));
            return d.act(d.s(), r);
        };
        b.add("x y = s g_(e1,e2,e2) x_(zeta1, zeta2 e2^-1)", inst, [x, y, rhs](GeneratorDictionary& d, const std::string&) {
            GAlt lhs = alt_mul(d.engine(), {d.x(x.first, x.second).front()}, d.y(y.first, y.second));
            return std::pair{lhs, rhs(d)};
        });
        b.add("y x = s g_(e1,e2,e2) x_(zeta1, zeta2 e2^-1)", inst, [x, y, rhs](GeneratorDictionary& d, const std::string&) {
            GAlt lhs = alt_mul(d.engine(), {d.y(y.first, y.second).front()}, d.x(x.first, x.second));
            return std::pair{lhs, rhs(d)};
        });
    }
    return b.take();
}

// beta2 beta3 != 0, beta1 = 0
SuiteReport suite_yz(const SuiteConfig& cfg)
{
    auto beta = beta_or(cfg, {0, 1, 1});
    AlgebraParams p = AlgebraParams::make(cfg.n, cfg.n1, beta);
    if (!p.beta1.is_zero() || p.beta2.is_zero() || p.beta3.is_zero())
        throw Error("PreconditionViolated", "thm5.17 needs beta = (0, beta2 != 0, beta3 != 0)");
    Builder b(p, "thm5.17");
    const int n1 = p.n1;
    const CycScalar sq = p.sqrtq_pow(1);
    using YP = std::pair<CycScalar, CycScalar>;
    auto ys = [](const YP& y) { return "y(" + nm(y.first) + "," + nm(y.second) + ")"; };

    const std::vector<YP> yv{{fr(2), fr(1)}, {fr(3), fr(1)}, {fr(2), fr(2)}};
    for (const auto& y : yv)
        b.add("y z2 = (1 + g^(n-1)) y_(e1 q^(n/2), e2)", ys(y),
              [y, sq](GeneratorDictionary& d, const std::string& v) {
                  GAlt lhs = alt_mul(d.engine(), {d.y(y.first, y.second).front()}, {d.z(2)});
                  CycScalar sub = v == "subscript e1" ? y.first : y.first * sq;
                  return std::pair{lhs, d.act(one_plus(d), d.y(sub, y.second))};
              },
              {"subscript e1 q^(n/2)", "subscript e1"});
    const std::vector<std::pair<YP, CycScalar>> yz{{{fr(2), fr(1)}, fr(2)}, {{fr(3), fr(1)}, fr(5)}, {{fr(2), fr(2)}, fr(3)}};
    for (const auto& [y, xi] : yz)
        b.add("y z~_xi = s'' y_(e1, e2 xi)", ys(y) + ", xi=" + nm(xi), [y, xi](GeneratorDictionary& d, const std::string&) {
            GAlt lhs = alt_mul(d.engine(), {d.y(y.first, y.second).front()}, {d.z_tilde(xi)});
            return std::pair{lhs, d.act(d.s_dprime(), d.y(y.first, y.second * xi))};
        });
    for (const auto& xi : {fr(2), fr(3), fr(5)})
        b.add("z2 z~_xi = eta' (1 + g^(n-1)) z~_(xi q^(-n1))", "xi=" + nm(xi),
              [xi, n1](GeneratorDictionary& d, const std::string&) {
                  GAlt lhs{gr_mul(d.engine(), d.z(2), d.z_tilde(xi))};
                  GAlt z = alt_mul(d.engine(), {d.eta_prime()}, {d.z_tilde(xi * d.params().qpow(-n1))});
                  return std::pair{lhs, d.act(one_plus(d), z)};
              });
    const std::vector<std::pair<CycScalar, CycScalar>> zz{{fr(2), fr(3)}, {fr(2), fr(5)}, {fr(3), fr(1, 5)}};
    for (const auto& [a, c] : zz)
        b.add("z~_xi z~_xi' = s'' z~_(xi xi')", "xi=" + nm(a) + ", xi'=" + nm(c),
              [a, c](GeneratorDictionary& d, const std::string&) {
                  GAlt lhs{gr_mul(d.engine(), d.z_tilde(a), d.z_tilde(c))};
                  return std::pair{lhs, d.act(d.s_dprime(), d.z_tilde(a * c))};
              });
    const std::vector<std::pair<YP, YP>> yy{
        {{fr(2), fr(1)}, {fr(3), fr(1)}}, {{fr(2), fr(2)}, {fr(3), fr(1)}}, {{fr(2), fr(1)}, {fr(5), fr(3)}}};
    for (const auto& [y1, y2] : yy)
        b.add("y y' = s y_(e1 e1', e2 e2')  [(e1 e1')^(n n1) != 1]", ys(y1) + " " + ys(y2),
              [y1, y2](GeneratorDictionary& d, const std::string&) {
                  GAlt lhs = alt_mul(d.engine(), {d.y(y1.first, y1.second).front()}, d.y(y2.first, y2.second));
                  return std::pair{lhs, d.act(d.s(), d.y(y1.first * y2.first, y1.second * y2.second))};
              });
    return b.take();
}

// beta1 beta2 beta3 != 0
SuiteReport suite_xyz(const SuiteConfig& cfg)
{
    auto beta = beta_or(cfg, {1, 7, 1});
    AlgebraParams p = AlgebraParams::make(cfg.n, cfg.n1, beta);
    if (p.beta1.is_zero() || p.beta2.is_zero() || p.beta3.is_zero())
        throw Error("PreconditionViolated", "thm5.19 needs beta1 beta2 beta3 != 0");
    Builder b(p, "thm5.19");
    const int n = p.n, n1 = p.n1, t = p.t;
    const CycScalar sq = p.sqrtq_pow(1);
    b.note("VI seeds here solve a general polynomial; instances whose seeds leave the field report FieldTooSmall");

    for (const auto& xi : {fr(2), fr(3)})
        b.add("z2 z'_xi = (1 + g^(n-1)) z'_(xi q^(n/2))", "xi~" + nm(xi),
              [xi, sq](GeneratorDictionary& d, const std::string& v) {
                  GAlt lhs{gr_mul(d.engine(), d.z(2), d.z_prime(xi))};
                  CycScalar sub = v == "subscript xi" ? xi : xi * sq;
                  return std::pair{lhs, d.act(one_plus(d), d.z_prime(sub))};
              },
              {"subscript xi q^(n/2)", "subscript xi"});
    const std::vector<std::pair<CycScalar, CycScalar>> xv{{fr(2), fr(2)}, {fr(2), fr(1)}};
    for (const auto& [g1, z2v] : xv) {
        std::string xs = "x(" + nm(g1) + "," + nm(z2v) + ")";
        b.add("z2 x = (1 + g^(n-1)) x_(zeta1 q^(n/2), zeta2)", xs,
              [g1, z2v, sq](GeneratorDictionary& d, const std::string& v) {
                  GAlt lhs = alt_mul(d.engine(), {d.z(2)}, {d.x(g1, z2v).front()});
                  CycScalar sub = v == "subscript zeta1" ? g1 : g1 * sq;
                  return std::pair{lhs, d.act(one_plus(d), d.x(sub, z2v))};
              },
              {"subscript zeta1 q^(n/2)", "subscript zeta1"});
        b.add("x z'_xi = g^(n-t) s'' x_(zeta1 xi, zeta2)", xs + ", xi~3",
              [g1, z2v, n, t](GeneratorDictionary& d, const std::string&) {
                  GAlt lhs = alt_mul(d.engine(), {d.x(g1, z2v).front()}, {d.z_prime(fr(3))});
                  return std::pair{lhs, d.act(gp_mul(d.g(n - t), d.s_dprime(), n), d.x(g1 * 3, z2v))};
              });
        CycScalar e = fr(3);
        CycScalar e2 = e.pow(n1);
        b.add("x y = s g_(e1,e2,e2) x_(zeta1, zeta2 e2^-1)", xs + " y(3,3^n1)",
              [g1, z2v, e, e2](GeneratorDictionary& d, const std::string&) {
                  GAlt lhs = alt_mul(d.engine(), {d.x(g1, z2v).front()}, d.y(e, e2));
                  GAlt rhs = alt_mul(d.engine(), {d.v0(e, e2, e2)}, d.x(g1, z2v / e2));
                  return std::pair{lhs, d.act(d.s(), rhs)};
              });
    }
    for (const auto& e : {fr(2), fr(3)}) {
        CycScalar e2 = e.pow(n1);
        std::string ys = "y(" + nm(e) + "," + nm(e2) + ")";
        b.add("y z2 = (1 + g^(n-1)) y_(e1 q^(n/2), e2)", ys, [e, e2, sq](GeneratorDictionary& d, const std::string& v) {
            GAlt lhs = alt_mul(d.engine(), {d.y(e, e2).front()}, {d.z(2)});
            CycScalar sub = v == "subscript e1" ? e : e * sq;
            return std::pair{lhs, d.act(one_plus(d), d.y(sub, e2))};
        },
              {"subscript e1 q^(n/2)", "subscript e1"});
        b.add("y z'_xi = s'' y_(e1 xi, e2)", ys + ", xi~5", [e, e2](GeneratorDictionary& d, const std::string&) {
            GAlt lhs = alt_mul(d.engine(), {d.y(e, e2).front()}, {d.z_prime(fr(5))});
            return std::pair{lhs, d.act(d.s_dprime(), d.y(e * 5, e2))};
        });
    }
    for (const auto& [a, c] : std::vector<std::pair<CycScalar, CycScalar>>{{fr(2), fr(3)}, {fr(2), fr(5)}})
        b.add("z'_xi z'_xi' = g^(n-t) s'' z'_(xi xi')", "xi~" + nm(a) + ", xi'~" + nm(c),
              [a, c, n, t](GeneratorDictionary& d, const std::string& v) {
                  GAlt lhs{gr_mul(d.engine(), d.z_prime(a), d.z_prime(c))};
                  GPoly k = d.s_dprime();
                  if (v != "s''")
                      k = gp_mul(d.g(n - t), k, n);
                  return std::pair{lhs, d.act(k, d.z_prime(a * c))};
              },
              {"g^(n-t) s''", "s''"});
    b.add("x x' = s x_(zeta1 zeta1', zeta2 zeta2')", "x(2,2) x(3,3)", [](GeneratorDictionary& d, const std::string&) {
        GAlt lhs = alt_mul(d.engine(), {d.x(2, 2).front()}, d.x(3, 3));
        return std::pair{lhs, d.act(d.s(), d.x(6, 6))};
    });
    return b.take();
}

long lcm_range(int t)
{
    long l = 1;
    for (int v = 0; 2 * v <= t; ++v)
        l = std::lcm(l, static_cast<long>(t - v));
    return l;
}

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

SuiteReport top_identity_readings(int n, int n1, const CycScalar& beta3)
{
    AlgebraParams p = AlgebraParams::make(n, n1, {0, 0, beta3});
    if (beta3.is_zero())
        throw Error("PreconditionViolated", "the identity needs beta3 != 0");
    Builder b(p, "top-identity");
    const int t = p.t;
    const long L = lcm_range(t);
    std::vector<std::string> variants;
    for (int r = 2; r <= t; ++r)
        variants.push_back("R=" + std::to_string(r) + (r == t ? " (R=t)" : ""));
    b.add("L * (sum_v (-1)^v t/(t-v) binom(R-v, v) g^((n-1)v) z2^(t-2v) - g^(n-t) - 1) = 0",
          "n=" + std::to_string(n) + ", n1=" + std::to_string(n1),
          [t, L](GeneratorDictionary& d, const std::string& v) {
              const int nn = d.params().n;
              int R = std::stoi(v.substr(2));
              GRingElement z2 = d.z(2);
              GAlt acc{GRingElement{}};
              for (int w = 0; 2 * w <= t; ++w) {
                  long c = L / (t - w) * t * binom(R - w, w) * (w % 2 ? -1 : 1);
                  if (c)
                      acc = alt_add(acc, d.act(d.g((nn - 1) * w), gr_pow(d.engine(), z2, t - 2 * w)), c);
              }
              acc = alt_add(acc, d.act(d.g(nn - t), d.one()), -L);
              acc = alt_add(acc, {d.one()}, -L);
              return std::pair{acc, GAlt{GRingElement{}}};
          },
          variants);
    FusionEngine& e = b.engine();
    try {
        GeneratorDictionary d(e, GReading::Trivial);
        b.note("z2^t = " + gr_str(gr_pow(e, d.z(2), t)));
    } catch (const Error& x) {
        b.note(std::string("z2^t not computable: ") + x.what());
    }
    return b.take();
}

std::vector<std::string> suite_names()
{
    return {"thm5.5", "thm5.8", "thm5.10", "thm5.13", "thm5.15", "thm5.17", "thm5.19", "cor-gelaki", "radford",
            "remark5.21"};
}

SuiteReport verify_suite(const std::string& suite, const SuiteConfig& cfg)
{
    if (suite == "thm5.5")
        return suite_zz(cfg);
    if (suite == "thm5.8")
        return suite_xz(cfg);
    if (suite == "thm5.10")
        return suite_single(cfg, false);
    if (suite == "thm5.13")
        return suite_single(cfg, true);
    if (suite == "thm5.15")
        return suite_xy(cfg);
    if (suite == "thm5.17")
        return suite_yz(cfg);
    if (suite == "thm5.19")
        return suite_xyz(cfg);
    if (suite == "cor-gelaki")
        return suite_gelaki(cfg);
    if (suite == "radford")
        return suite_radford(cfg);
    if (suite == "remark5.21")
        return suite_remark(cfg);
    throw Error("PreconditionViolated", "unknown suite '" + suite + "'");
}

}  // namespace hopf
