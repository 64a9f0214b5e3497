#include "hopf/fusion.hpp"

#include "hopf/error.hpp"
#include "sequences.hpp"

#include <algorithm>
#include <set>

namespace hopf {

using detail::fit;

ModuleRep tensor(const AlgebraParams& p, const ModuleRep& m1, const ModuleRep& m2)
{
    ModuleRep t;
    t.dim = m1.dim * m2.dim;
    Matrix A2n = m2.a.pow(p.n1);
    t.a = kron(m1.a, m2.a);
    t.b = kron(m1.b, m2.b);
    t.c = kron(m1.c, m2.c);
    t.x = kron(m1.x, A2n) + kron(m1.b, m2.x);
    t.y = kron(m1.y, A2n) + kron(m1.c, m2.y);
    t.descriptor = "(" + m1.descriptor + ") x (" + m2.descriptor + ")";
    return t;
}

std::vector<SimpleLabel> candidate_simples(const AlgebraParams& p, const CycScalar& g1, const CycScalar& gamma2,
                                           const CycScalar& gamma3)
{
    std::vector<SimpleLabel> out;
    std::set<std::string> seen;
    auto add = [&](const ModuleRep& m) {
        if (seen.insert(m.label->str()).second)
            out.push_back(*m.label);
    };
    const CycScalar B = beta1pp(p, g1, gamma2), C = beta2pp(p, g1, gamma3);
    if (!B.is_zero() || !C.is_zero()) {
        SimpleLabel l{B.is_zero() ? Kind::VII : Kind::VI, fit(p, g1), fit(p, gamma2), fit(p, gamma3), 0, 0,
                      std::nullopt};
        for (const auto& k : solve_k_seed(p, l)) {
            l.kseed = k;
            add(build_module(p, l));
        }
        return out;
    }
    for (int i = 0; i < p.n; ++i) {
        CycScalar mu = fit(p, g1) * p.qpow(i);
        if (beta3pp(p, mu, gamma2, gamma3).is_zero())
            add(build_V0(p, g1, gamma2, gamma3, i));
        else {
            // when t = 1 no chain closes and the weight carries no simple
            try {
                add(build_Vr(p, g1, gamma2, gamma3, i));
            } catch (const Error& e) {
                if (e.code() != "WrongType")
                    throw;
            }
        }
    }
    return out;
}

int label_dim(const AlgebraParams& p, const SimpleLabel& l)
{
    switch (l.kind) {
    case Kind::V0: return 1;
    case Kind::Vr: return l.r ? l.r : p.t;
    default: return p.n;
    }
}

long fusion_dim(const AlgebraParams& p, const FusionVector& v)
{
    long d = 0;
    for (const auto& [k, m] : v)
        d += m * label_dim(p, parse_label(k, p));
    return d;
}

std::string fusion_str(const FusionVector& v)
{
    std::string s;
    for (const auto& [k, m] : v)
        s += (s.empty() ? "" : " + ") + (m == 1 ? "" : std::to_string(m) + "*") + k;
    return s.empty() ? "0" : s;
}

namespace {

struct WeightData {
    CycScalar w;
    std::vector<int> idx;
};

std::vector<WeightData> weight_spaces(const Matrix& a)
{
    std::vector<WeightData> ws;
    for (int i = 0; i < a.rows(); ++i) {
        auto it = std::find_if(ws.begin(), ws.end(), [&](const WeightData& d) { return d.w == a(i, i); });
        if (it == ws.end())
            ws.push_back({a(i, i), {i}});
        else
            it->idx.push_back(i);
    }
    return ws;
}

// tr((yx restricted to the weight space)^u) for u = 0..umax
std::vector<CycScalar> power_sums(const Matrix& Z, const std::vector<int>& idx, int umax)
{
    const int d = static_cast<int>(idx.size());
    Matrix B(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            B(i, j) = Z(idx[i], idx[j]);
    std::vector<CycScalar> out;
    Matrix P = Matrix::identity(d);
    for (int u = 0; u <= umax; ++u) {
        out.push_back(P.trace());
        P = P * B;
    }
    return out;
}

}  // namespace

FusionVector decompose(const AlgebraParams& p, const ModuleRep& m)
{
    if (!m.a.is_diagonal() || !m.b.is_scalar() || !m.c.is_scalar())
        throw Error("PreconditionViolated", "decompose needs diagonal a and scalar b, c");
    if (m.dim == 0)
        return {};
    const CycScalar g2 = m.b(0, 0), g3 = m.c(0, 0);
    auto ws = weight_spaces(m.a);
    // candidates from every weight coset present
    std::vector<SimpleLabel> cands;
    std::vector<ModuleRep> cmods;
    std::set<std::string> reps;
    for (const auto& w : ws) {
        auto rep = coset_rep(p, w.w).first;
        if (!reps.insert(rep.str()).second)
            continue;
        for (const auto& l : candidate_simples(p, rep, g2, g3)) {
            cands.push_back(l);
            cmods.push_back(build_module(p, l));
        }
    }
    // all weights touched by M or a candidate
    std::vector<CycScalar> weights;
    for (const auto& w : ws)
        weights.push_back(w.w);
    std::vector<std::vector<WeightData>> cws;
    for (const auto& cm : cmods) {
        cws.push_back(weight_spaces(cm.a));
        for (const auto& w : cws.back())
            if (std::find(weights.begin(), weights.end(), w.w) == weights.end())
                weights.push_back(w.w);
    }
    const Matrix Z = m.y * m.x;
    std::vector<Matrix> cZ;
    for (const auto& cm : cmods)
        cZ.push_back(cm.y * cm.x);

    std::vector<std::vector<CycScalar>> rows;
    std::vector<CycScalar> rhs;
    const int nc = static_cast<int>(cands.size());
    for (const auto& w : weights) {
        auto it = std::find_if(ws.begin(), ws.end(), [&](const WeightData& d) { return d.w == w; });
        int count = 0;
        for (int c = 0; c < nc; ++c)
            for (const auto& cw : cws[c])
                if (cw.w == w)
                    count += static_cast<int>(cw.idx.size());
        int umax = std::max(count, it == ws.end() ? 0 : static_cast<int>(it->idx.size()));
        std::vector<CycScalar> pm =
            it == ws.end() ? std::vector<CycScalar>(umax + 1, CycScalar(0)) : power_sums(Z, it->idx, umax);
        std::vector<std::vector<CycScalar>> pc(nc, std::vector<CycScalar>(umax + 1, CycScalar(0)));
        for (int c = 0; c < nc; ++c)
            for (const auto& cw : cws[c])
                if (cw.w == w)
                    pc[c] = power_sums(cZ[c], cw.idx, umax);
        for (int u = 0; u <= umax; ++u) {
            std::vector<CycScalar> row(nc);
            for (int c = 0; c < nc; ++c)
                row[c] = pc[c][u];
            rows.push_back(std::move(row));
            rhs.push_back(pm[u]);
        }
    }
    Matrix A(static_cast<int>(rows.size()), nc), b(static_cast<int>(rows.size()), 1);
    for (size_t i = 0; i < rows.size(); ++i) {
        for (int c = 0; c < nc; ++c)
            A(static_cast<int>(i), c) = rows[i][c];
        b(static_cast<int>(i), 0) = rhs[i];
    }
    if (A.rank() != nc) {
        std::string names;
        for (const auto& l : cands)
            names += " " + l.str();
        throw Error("RankDeficient", "candidate characters are dependent:" + names);
    }
    Matrix sol;
    if (!solve_linear(A, b, sol))
        throw Error("NoIntegerSolution", "characters of " + m.descriptor + " are not a combination of candidates");
    FusionVector out;
    long dim = 0;
    for (int c = 0; c < nc; ++c) {
        const CycScalar& v = sol(c, 0);
        if (!v.is_rational() || v.to_rational().get_den() != 1 || v.to_rational() < 0)
            throw Error("NoIntegerSolution", "multiplicity " + v.pretty() + " for " + cands[c].str());
        long k = v.to_rational().get_num().get_si();
        if (k) {
            out[cands[c].str()] = k;
            dim += k * cmods[c].dim;
        }
    }
    if (dim != m.dim)
        throw Error("InternalInconsistency", "dimension bookkeeping does not balance");
    return out;
}

std::string FusionEngine::canonical(const std::string& label)
{
    auto it = canon_.find(label);
    if (it != canon_.end())
        return it->second;
    std::string c = canonical_label(p_, parse_label(label, p_)).str();
    canon_[label] = c;
    return c;
}

const ModuleRep& FusionEngine::module(const std::string& label)
{
    std::string c = canonical(label);
    auto it = modules_.find(c);
    if (it == modules_.end())
        it = modules_.emplace(c, build_module(p_, parse_label(c, p_))).first;
    return it->second;
}

FusionVector FusionEngine::fuse(const std::string& l1, const std::string& l2)
{
    std::pair<std::string, std::string> key{canonical(l1), canonical(l2)};
    auto it = products_.find(key);
    if (it != products_.end())
        return it->second;
    const ModuleRep& m1 = module(key.first);
    const ModuleRep& m2 = module(key.second);
    FusionVector v = decompose(p_, tensor(p_, m1, m2));
    products_[key] = v;
    return v;
}

FusionVector fuse(const AlgebraParams& p, const SimpleLabel& l1, const SimpleLabel& l2)
{
    return decompose(p, tensor(p, build_module(p, l1), build_module(p, l2)));
}

FusionTable fusion_table(FusionEngine& engine, const std::vector<std::string>& labels)
{
    FusionTable t;
    for (const auto& l : labels)
        t.labels.push_back(engine.canonical(l));
    const size_t k = labels.size();
    t.cells.assign(k, std::vector<FusionVector>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            t.cells[i][j] = engine.fuse(t.labels[i], t.labels[j]);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            if (t.cells[i][j] != t.cells[j][i])
                t.commutative = false;
    return t;
}

}  // namespace hopf
