#include "hopf/modules.hpp"

#include "hopf/error.hpp"
#include "sequences.hpp"

namespace hopf {

namespace detail {

std::vector<CycScalar> chain_coeffs(const AlgebraParams& p, const CycScalar& lam, const CycScalar& g2,
                                    const CycScalar& g3, int len)
{
    std::vector<CycScalar> c{CycScalar(Rational(0), p.M)};
    const CycScalar qm = p.qpow(-p.n1);
    for (int j = 0; j < len; ++j)
        c.push_back(qm * c.back() + beta3pp(p, lam * p.qpow(-j), g2, g3));
    return c;
}

std::vector<CPoly> vi_polys(const AlgebraParams& p, const CycScalar& lam0, const CycScalar& g2, const CycScalar& g3)
{
    // Y_1 = q^{-n1} B k1 + s_0, Y_{j+1} = q^{-n1} Y_j + s_j, s_j = beta3''(lam0 q^{-j})
    const CycScalar B = beta1pp(p, lam0, g2);
    const CycScalar qm = p.qpow(-p.n1);
    std::vector<CPoly> Y(p.n);
    Y[1] = {beta3pp(p, lam0, g2, g3), qm * B};
    for (int j = 1; j + 1 < p.n; ++j)
        Y[j + 1] = {qm * Y[j][0] + beta3pp(p, lam0 * p.qpow(-j), g2, g3), qm * Y[j][1]};
    return Y;
}

std::vector<CPoly> vii_polys(const AlgebraParams& p, const CycScalar& lam0, const CycScalar& g2, const CycScalar& g3)
{
    // X_0 = C kn, X_{j+1} = q^{n1} (X_j - s_j), s_j = beta3''(lam0 q^j)
    const CycScalar C = beta2pp(p, lam0, g3);
    const CycScalar qp = p.qpow(p.n1);
    std::vector<CPoly> X(p.n);
    X[0] = {CycScalar(Rational(0), p.M), C};
    for (int j = 0; j + 1 < p.n; ++j)
        X[j + 1] = {qp * (X[j][0] - beta3pp(p, lam0 * p.qpow(j), g2, g3)), qp * X[j][1]};
    return X;
}

std::vector<CycScalar> eval_all(const std::vector<CPoly>& ps, const CycScalar& k)
{
    std::vector<CycScalar> out;
    for (const auto& q : ps)
        out.push_back(q.empty() ? CycScalar(0) : cpoly_eval(q, k));
    return out;
}

}  // namespace detail

using detail::fit;

CycScalar beta1pp(const AlgebraParams& p, const CycScalar& g1, const CycScalar& gamma2)
{
    // g1 may be any weight of the module: its n-th power is the central value of a^n
    return p.beta1 * (fit(p, g1).pow(static_cast<long long>(p.n) * p.n1) - fit(p, gamma2).pow(p.n));
}

CycScalar beta2pp(const AlgebraParams& p, const CycScalar& g1, const CycScalar& gamma3)
{
    return p.beta2 * (fit(p, g1).pow(static_cast<long long>(p.n) * p.n1) - fit(p, gamma3).pow(p.n));
}

CycScalar beta3pp(const AlgebraParams& p, const CycScalar& w, const CycScalar& gamma2, const CycScalar& gamma3)
{
    return p.beta3 * (fit(p, w).pow(2LL * p.n1) - fit(p, gamma2) * fit(p, gamma3));
}

const Matrix& ModuleRep::action(char g) const
{
    switch (g) {
    case 'a': return a;
    case 'b': return b;
    case 'c': return c;
    case 'x': return x;
    case 'y': return y;
    default: throw Error("ParseError", std::string("unknown generator ") + g);
    }
}

namespace {

ModuleRep blank(const AlgebraParams& p, int d, const CycScalar& g2, const CycScalar& g3)
{
    ModuleRep m;
    m.dim = d;
    m.a = Matrix(d, d);
    m.b = Matrix::scalar(d, fit(p, g2));
    m.c = Matrix::scalar(d, fit(p, g3));
    m.x = Matrix(d, d);
    m.y = Matrix(d, d);
    return m;
}

void require_units(const CycScalar& g1, const CycScalar& g2, const CycScalar& g3)
{
    if (g1.is_zero() || g2.is_zero() || g3.is_zero())
        throw Error("WrongType", "g1, gamma2, gamma3 must be nonzero");
}

ModuleRep chain_module(const AlgebraParams& p, const CycScalar& lam, const CycScalar& g2, const CycScalar& g3,
                       int len)
{
    auto c = detail::chain_coeffs(p, lam, g2, g3, len);
    ModuleRep m = blank(p, len, g2, g3);
    for (int j = 0; j < len; ++j) {
        m.a(j, j) = lam * p.qpow(-j);
        if (j + 1 < len)
            m.x(j + 1, j) = CycScalar(1);
        if (j >= 1)
            m.y(j - 1, j) = c[j];
    }
    return m;
}

int mod_n(long long i, int n)
{
    long long r = i % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

ModuleRep build_V0(const AlgebraParams& p, const CycScalar& g1, const CycScalar& gamma2, const CycScalar& gamma3,
                   int i)
{
    require_units(g1, gamma2, gamma3);
    CycScalar lam = fit(p, g1) * p.qpow(i);
    if (!beta1pp(p, g1, gamma2).is_zero() || !beta2pp(p, g1, gamma3).is_zero() ||
        !beta3pp(p, lam, gamma2, gamma3).is_zero())
        throw Error("WrongType", "V0 needs beta1'' = beta2'' = beta3''(i) = 0");
    ModuleRep m = blank(p, 1, gamma2, gamma3);
    m.a(0, 0) = lam;
    SimpleLabel l{Kind::V0, fit(p, g1), fit(p, gamma2), fit(p, gamma3), mod_n(i, p.n), 0, std::nullopt};
    m.label = canonical_label(p, l);
    m.descriptor = m.label->str();
    return m;
}

ModuleRep build_Vr(const AlgebraParams& p, const CycScalar& g1, const CycScalar& gamma2, const CycScalar& gamma3,
                   int i, int r)
{
    require_units(g1, gamma2, gamma3);
    if (!beta1pp(p, g1, gamma2).is_zero() || !beta2pp(p, g1, gamma3).is_zero())
        throw Error("WrongType", "Vr needs beta1'' = beta2'' = 0");
    if (p.beta3.is_zero())
        throw Error("WrongType", "Vr needs beta3 != 0");
    CycScalar mu = fit(p, g1) * p.qpow(i);
    CycScalar lam;
    int len;
    if (beta3pp(p, mu, gamma2, gamma3).is_zero()) {
        len = r ? r : p.t;
        if (len < 2 || len > p.t)
            throw Error("WrongType", "r must lie in [2, t]");
        lam = mu * p.sqrtq_pow(len - 1);
        if (!beta1pp(p, lam, gamma2).is_zero() || !beta2pp(p, lam, gamma3).is_zero())
            throw Error("WrongType", "the shifted top weight has beta1'' or beta2'' != 0");
    } else {
        lam = mu;
        auto c = detail::chain_coeffs(p, lam, gamma2, gamma3, p.t);
        len = 0;
        for (int j = 1; j <= p.t && !len; ++j)
            if (c[j].is_zero())
                len = j;
        if (len == 0)
            throw Error("WrongType", "no highest-weight chain of length <= t at this weight");
        if (r && r != len)
            throw Error("WrongType", "r = " + std::to_string(r) + " but the weight forces r = " + std::to_string(len));
    }
    auto c = detail::chain_coeffs(p, lam, gamma2, gamma3, len);
    if (!c[len].is_zero())
        throw Error("InternalInconsistency", "k_r does not vanish");
    for (int j = 1; j < len; ++j)
        if (c[j].is_zero())
            throw Error("InternalInconsistency", "k_" + std::to_string(j) + " vanishes below r");
    ModuleRep m = chain_module(p, lam, gamma2, gamma3, len);
    SimpleLabel l{Kind::Vr, fit(p, g1), fit(p, gamma2), fit(p, gamma3), mod_n(i, p.n), len, std::nullopt};
    m.label = canonical_label(p, l);
    m.descriptor = m.label->str();
    return m;
}

ModuleRep build_VI(const AlgebraParams& p, const CycScalar& g1, const CycScalar& gamma2, const CycScalar& gamma3,
                   int i, const CycScalar& k1)
{
    require_units(g1, gamma2, gamma3);
    const CycScalar B = beta1pp(p, g1, gamma2), C = beta2pp(p, g1, gamma3);
    if (B.is_zero())
        throw Error("WrongType", "VI needs beta1'' != 0");
    CycScalar lam0 = fit(p, g1) * p.qpow(i);
    CycScalar k = fit(p, k1);
    auto Y = detail::eval_all(detail::vi_polys(p, lam0, gamma2, gamma3), k);
    CycScalar prod = k;
    for (int j = 1; j < p.n; ++j)
        prod *= Y[j];
    if (prod != C)
        throw Error("SeedConstraintViolated", "k1=" + k.str() + " residual=" + (prod - C).str());
    const int n = p.n;
    ModuleRep m = blank(p, n, gamma2, gamma3);
    for (int j = 0; j < n; ++j) {
        m.a(j, j) = lam0 * p.qpow(-j);
        m.x((j + 1) % n, j) = (j + 1 < n) ? CycScalar(1) : B;
        if (j >= 1)
            m.y(j - 1, j) = Y[j];
    }
    m.y(n - 1, 0) = k;
    SimpleLabel l{Kind::VI, fit(p, g1), fit(p, gamma2), fit(p, gamma3), mod_n(i, p.n), 0, k};
    m.label = canonical_label(p, l);
    m.descriptor = m.label->str();
    return m;
}

ModuleRep build_VII(const AlgebraParams& p, const CycScalar& g1, const CycScalar& gamma2, const CycScalar& gamma3,
                    int i, const CycScalar& kn)
{
    require_units(g1, gamma2, gamma3);
    const CycScalar B = beta1pp(p, g1, gamma2), C = beta2pp(p, g1, gamma3);
    if (!B.is_zero() || C.is_zero())
        throw Error("WrongType", "VII needs beta1'' = 0 and beta2'' != 0");
    CycScalar lam0 = fit(p, g1) * p.qpow(i);
    CycScalar k = fit(p, kn);
    auto X = detail::eval_all(detail::vii_polys(p, lam0, gamma2, gamma3), k);
    CycScalar prod = k;
    for (int j = 1; j < p.n; ++j)
        prod *= X[j];
    if (prod != B)
        throw Error("SeedConstraintViolated", "kn=" + k.str() + " residual=" + (prod - B).str());
    const int n = p.n;
    ModuleRep m = blank(p, n, gamma2, gamma3);
    for (int j = 0; j < n; ++j) {
        m.a(j, j) = lam0 * p.qpow(j);
        m.y((j + 1) % n, j) = (j + 1 < n) ? CycScalar(1) : C;
        if (j >= 1)
            m.x(j - 1, j) = X[j];
    }
    m.x(n - 1, 0) = k;
    SimpleLabel l{Kind::VII, fit(p, g1), fit(p, gamma2), fit(p, gamma3), mod_n(i, p.n), 0, k};
    m.label = canonical_label(p, l);
    m.descriptor = m.label->str();
    return m;
}

ModuleRep build_module(const AlgebraParams& p, const SimpleLabel& l)
{
    switch (l.kind) {
    case Kind::V0: return build_V0(p, l.g1, l.gamma2, l.gamma3, l.i);
    case Kind::Vr: return build_Vr(p, l.g1, l.gamma2, l.gamma3, l.i, l.r);
    case Kind::VI:
    case Kind::VII: {
        CycScalar k = l.kseed ? *l.kseed : solve_k_seed(p, l).front();
        return l.kind == Kind::VI ? build_VI(p, l.g1, l.gamma2, l.gamma3, l.i, k)
                                  : build_VII(p, l.g1, l.gamma2, l.gamma3, l.i, k);
    }
    }
    throw Error("WrongType", "unknown kind");
}

VerifyReport verify_module(const AlgebraParams& p, const ModuleRep& m)
{
    VerifyReport rep;
    const Matrix &A = m.a, &B = m.b, &C = m.c, &X = m.x, &Y = m.y;
    auto check = [&](const std::string& name, bool ok) {
        rep.relations.emplace_back(name, ok);
        if (!ok && rep.passed) {
            rep.passed = false;
            rep.failed_relation = name;
        }
    };
    const int d = m.dim;
    bool shapes = A.rows() == d && B.rows() == d && C.rows() == d && X.rows() == d && Y.rows() == d;
    check("shapes", shapes);
    if (!shapes)
        return rep;
    bool inv = true;
    try {
        (void)A.inverse();
        (void)B.inverse();
        (void)C.inverse();
    } catch (const Error&) {
        inv = false;
    }
    check("a,b,c invertible", inv);
    check("ab=ba", A * B == B * A);
    check("ac=ca", A * C == C * A);
    check("bc=cb", B * C == C * B);
    check("xb=bx", X * B == B * X);
    check("xc=cx", X * C == C * X);
    check("yb=by", Y * B == B * Y);
    check("yc=cy", Y * C == C * Y);
    check("xa=qax", X * A == A * X * p.q);
    check("ya=q^-1ay", Y * A == A * Y * p.qpow(-1));
    const long long nn1 = static_cast<long long>(p.n) * p.n1;
    check("x^n=beta1(a^{nn1}-b^n)", X.pow(p.n) == (A.pow(nn1) - B.pow(p.n)) * p.beta1);
    check("y^n=beta2(a^{nn1}-c^n)", Y.pow(p.n) == (A.pow(nn1) - C.pow(p.n)) * p.beta2);
    check("yx-q^{-n1}xy=beta3(a^{2n1}-bc)", Y * X - X * Y * p.qpow(-p.n1) == (A.pow(2LL * p.n1) - B * C) * p.beta3);
    return rep;
}

namespace {

std::vector<CycScalar> flatten(const Matrix& m)
{
    return m.data();
}

}  // namespace

bool is_simple(const ModuleRep& m)
{
    const int d = m.dim;
    SpanBasis span(d * d);
    std::vector<Matrix> queue{Matrix::identity(d)};
    span.insert(flatten(queue[0]));
    const Matrix* gens[] = {&m.a, &m.b, &m.c, &m.x, &m.y};
    for (size_t q = 0; q < queue.size() && span.dim() < d * d; ++q) {
        for (const Matrix* g : gens) {
            Matrix w = (*g) * queue[q];
            if (span.insert(flatten(w)))
                queue.push_back(std::move(w));
        }
    }
    return span.dim() == d * d;
}

ModuleRep dual_module(const AlgebraParams& p, const ModuleRep& m)
{
    ModuleRep d;
    d.dim = m.dim;
    Matrix Ai = m.a.inverse(), Bi = m.b.inverse(), Ci = m.c.inverse();
    Matrix An = Ai.pow(p.n1);
    d.a = Ai.transpose();
    d.b = Bi.transpose();
    d.c = Ci.transpose();
    d.x = (An * Bi * m.x * (-p.qpow(-p.n1))).transpose();
    d.y = (An * Ci * m.y * (-p.qpow(p.n1))).transpose();
    d.descriptor = "dual(" + m.descriptor + ")";
    return d;
}

ModuleRep direct_sum(const ModuleRep& m1, const ModuleRep& m2)
{
    ModuleRep s;
    s.dim = m1.dim + m2.dim;
    auto blk = [&](const Matrix& u, const Matrix& v) {
        Matrix r(s.dim, s.dim);
        for (int i = 0; i < m1.dim; ++i)
            for (int j = 0; j < m1.dim; ++j)
                r(i, j) = u(i, j);
        for (int i = 0; i < m2.dim; ++i)
            for (int j = 0; j < m2.dim; ++j)
                r(m1.dim + i, m1.dim + j) = v(i, j);
        return r;
    };
    s.a = blk(m1.a, m2.a);
    s.b = blk(m1.b, m2.b);
    s.c = blk(m1.c, m2.c);
    s.x = blk(m1.x, m2.x);
    s.y = blk(m1.y, m2.y);
    s.descriptor = "(" + m1.descriptor + ") + (" + m2.descriptor + ")";
    return s;
}

std::vector<Matrix> intertwiners(const ModuleRep& from, const ModuleRep& to)
{
    const int d1 = from.dim, d2 = to.dim;
    // unknown T (d2 x d1), index i*d1 + j; equations T R1(g) - R2(g) T = 0
    std::vector<std::vector<CycScalar>> rows;
    for (char g : {'a', 'b', 'c', 'x', 'y'}) {
        const Matrix& R1 = from.action(g);
        const Matrix& R2 = to.action(g);
        for (int i = 0; i < d2; ++i)
            for (int j = 0; j < d1; ++j) {
                std::vector<CycScalar> row(static_cast<size_t>(d1) * d2, CycScalar(0));
                bool any = false;
                for (int k = 0; k < d1; ++k)
                    if (!R1(k, j).is_zero()) {
                        row[i * d1 + k] += R1(k, j);
                        any = true;
                    }
                for (int k = 0; k < d2; ++k)
                    if (!R2(i, k).is_zero()) {
                        row[k * d1 + j] -= R2(i, k);
                        any = true;
                    }
                if (any)
                    rows.push_back(std::move(row));
            }
    }
    Matrix sys(static_cast<int>(rows.size()), d1 * d2);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < d1 * d2; ++c)
            sys(static_cast<int>(r), c) = rows[r][c];
    Matrix ns = rows.empty() ? Matrix::identity(d1 * d2) : sys.nullspace();
    std::vector<Matrix> out;
    for (int f = 0; f < ns.cols(); ++f) {
        Matrix T(d2, d1);
        for (int i = 0; i < d2; ++i)
            for (int j = 0; j < d1; ++j)
                T(i, j) = ns(i * d1 + j, f);
        out.push_back(std::move(T));
    }
    return out;
}

std::optional<Matrix> find_isomorphism(const ModuleRep& m1, const ModuleRep& m2)
{
    if (m1.dim != m2.dim)
        return std::nullopt;
    auto hom = intertwiners(m1, m2);
    if (hom.empty())
        return std::nullopt;
    // a generic combination is invertible whenever the Hom space contains an isomorphism
    const long weights[][4] = {{1, 0, 0, 0}, {1, 2, 3, 5}, {7, -3, 11, 2}, {2, 13, -5, 17}, {1, -1, 1, -1}};
    for (const auto& w : weights) {
        Matrix T(m2.dim, m1.dim);
        for (size_t k = 0; k < hom.size(); ++k)
            T = T + hom[k] * CycScalar(w[k % 4] + static_cast<long>(k / 4) * 3);
        if (T.rank() == m1.dim)
            return T;
    }
    return std::nullopt;
}

bool isomorphic(const ModuleRep& m1, const ModuleRep& m2)
{
    return find_isomorphism(m1, m2).has_value();
}

namespace {

// P = [E | F] invertible with F drawn from standard basis vectors
Matrix complete_basis(const Matrix& E)
{
    const int d = E.rows();
    Matrix P = E;
    int have = E.rank();
    if (have != E.cols())
        throw Error("RankDeficient", "embedding is not injective");
    for (int j = 0; j < d && P.cols() < d; ++j) {
        Matrix e(d, 1);
        e(j, 0) = CycScalar(1);
        Matrix cand = hcat(P, e);
        if (cand.rank() > P.cols())
            P = cand;
    }
    return P;
}

Matrix conj_block(const Matrix& Pi, const Matrix& R, const Matrix& P, int from, int to)
{
    Matrix full = Pi * R * P;
    Matrix out(to - from, to - from);
    for (int i = from; i < to; ++i)
        for (int j = from; j < to; ++j)
            out(i - from, j - from) = full(i, j);
    return out;
}

}  // namespace

ModuleRep quotient_module(const ModuleRep& total, const Matrix& E)
{
    Matrix P = complete_basis(E);
    Matrix Pi = P.inverse();
    const int k = E.cols(), d = total.dim;
    ModuleRep q;
    q.dim = d - k;
    q.a = conj_block(Pi, total.a, P, k, d);
    q.b = conj_block(Pi, total.b, P, k, d);
    q.c = conj_block(Pi, total.c, P, k, d);
    q.x = conj_block(Pi, total.x, P, k, d);
    q.y = conj_block(Pi, total.y, P, k, d);
    q.descriptor = "quotient(" + total.descriptor + ")";
    return q;
}

ModuleRep submodule(const ModuleRep& total, const Matrix& E)
{
    Matrix P = complete_basis(E);
    Matrix Pi = P.inverse();
    const int k = E.cols();
    for (char g : {'a', 'b', 'c', 'x', 'y'}) {
        Matrix full = Pi * total.action(g) * P;
        for (int i = k; i < total.dim; ++i)
            for (int j = 0; j < k; ++j)
                if (!full(i, j).is_zero())
                    throw Error("NotSubmodule", "span is not stable under " + std::string(1, g));
    }
    ModuleRep s;
    s.dim = k;
    s.a = conj_block(Pi, total.a, P, 0, k);
    s.b = conj_block(Pi, total.b, P, 0, k);
    s.c = conj_block(Pi, total.c, P, 0, k);
    s.x = conj_block(Pi, total.x, P, 0, k);
    s.y = conj_block(Pi, total.y, P, 0, k);
    s.descriptor = "sub(" + total.descriptor + ")";
    return s;
}

bool is_split(const ModuleRep& total, const Matrix& E)
{
    submodule(total, E);  // validates stability
    Matrix P = complete_basis(E);
    Matrix Pi = P.inverse();
    const int d = total.dim, k = E.cols(), r = d - k;
    ModuleRep Q = quotient_module(total, E);
    Matrix pi = Pi.rows_range(k, d);  // r x d
    // unknown sigma (d x r), index i*r + j: R(g) sigma - sigma Q(g) = 0, pi sigma = I
    std::vector<std::vector<CycScalar>> rows;
    std::vector<CycScalar> rhs;
    for (char g : {'a', 'b', 'c', 'x', 'y'}) {
        const Matrix& R = total.action(g);
        const Matrix& Qg = Q.action(g);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < r; ++j) {
                std::vector<CycScalar> row(static_cast<size_t>(d) * r, CycScalar(0));
                for (int l = 0; l < d; ++l)
                    if (!R(i, l).is_zero())
                        row[l * r + j] += R(i, l);
                for (int l = 0; l < r; ++l)
                    if (!Qg(l, j).is_zero())
                        row[i * r + l] -= Qg(l, j);
                rows.push_back(std::move(row));
                rhs.push_back(CycScalar(0));
            }
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            std::vector<CycScalar> row(static_cast<size_t>(d) * r, CycScalar(0));
            for (int l = 0; l < d; ++l)
                row[l * r + j] = pi(i, l);
            rows.push_back(std::move(row));
            rhs.push_back(CycScalar(i == j ? 1 : 0));
        }
    Matrix A(static_cast<int>(rows.size()), d * r), b(static_cast<int>(rows.size()), 1);
    for (size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < d * r; ++j)
            A(static_cast<int>(i), j) = rows[i][j];
        b(static_cast<int>(i), 0) = rhs[i];
    }
    Matrix sol;
    return solve_linear(A, b, sol);
}

bool is_split(const AlgebraParams& /*p*/, const ModuleRep& total, const ModuleRep& sub, const ModuleRep& quot)
{
    if (sub.dim + quot.dim != total.dim)
        throw Error("ShapeMismatch", "dimensions do not add up");
    auto hom = intertwiners(sub, total);
    bool found = false;
    std::vector<Matrix> candidates = hom;
    if (hom.size() > 1) {
        Matrix T(total.dim, sub.dim);
        for (size_t k = 0; k < hom.size(); ++k)
            T = T + hom[k] * CycScalar(static_cast<long>(2 * k + 1));
        candidates.push_back(T);
    }
    for (const auto& E : candidates) {
        if (E.rank() != sub.dim)
            continue;
        if (!isomorphic(quotient_module(total, E), quot))
            continue;
        found = true;
        if (is_split(total, E))
            return true;
    }
    if (!found)
        throw Error("NotSubmodule", "no embedding with the requested quotient");
    return false;
}

ModuleRep build_extension_prop46(const AlgebraParams& p, int i, const CycScalar& varsigma,
                                 const std::vector<CycScalar>& ks)
{
    const int n = p.n;
    if (static_cast<int>(ks.size()) != n - 1)
        throw Error("ParameterConstraint", "need k_1..k_{n-1}");
    ModuleRep m = blank(p, n + 1, CycScalar(1), CycScalar(1));
    for (int t = 0; t <= n; ++t)
        m.a(t, t) = p.qpow(-t);
    for (int l = 1; l < n; ++l)
        m.x(l + 1, l) = CycScalar(1);
    m.x(1, n) = (p.qpow(i) - CycScalar(1)) * p.beta1;
    for (int l = 2; l <= n; ++l)
        m.y(l - 1, l) = fit(p, ks[n - l]);
    m.y(0, 1) = fit(p, varsigma);
    m.descriptor = "V(varsigma)";
    auto rep = verify_module(p, m);
    if (!rep.passed)
        throw Error("ParameterConstraint", "V(varsigma) violates " + rep.failed_relation);
    return m;
}

ModuleRep build_extension_prop47(const AlgebraParams& p, const CycScalar& g1, const CycScalar& gamma2,
                                 const CycScalar& gamma3, int i)
{
    require_units(g1, gamma2, gamma3);
    const int t = p.t;
    if (!beta1pp(p, g1, gamma2).is_zero() || !beta2pp(p, g1, gamma3).is_zero())
        throw Error("ParameterConstraint", "needs beta1'' = beta2'' = 0");
    // generic weight: g1^{-2n1} gamma2 gamma3 outside <q^{n1}>
    CycScalar ratio = fit(p, g1).pow(-2LL * p.n1) * fit(p, gamma2) * fit(p, gamma3);
    for (int v = 0; v < p.n; ++v)
        if (ratio == p.qpow(static_cast<long long>(v) * p.n1))
            throw Error("ParameterConstraint", "gamma lies on a q^{n1} orbit");
    ModuleRep m = blank(p, 2 * t, gamma2, gamma3);
    CycScalar top = fit(p, g1) * p.qpow(i);
    auto c = detail::chain_coeffs(p, top, gamma2, gamma3, 2 * t);
    for (int s = 0; s < 2 * t; ++s) {
        m.a(s, s) = top * p.qpow(-s);
        if (s + 1 < 2 * t)
            m.x(s + 1, s) = CycScalar(1);
        if (s >= 1 && s != t)
            m.y(s - 1, s) = c[s];
    }
    m.descriptor = "L(" + fit(p, g1).pretty() + "," + fit(p, gamma2).pretty() + "," + fit(p, gamma3).pretty() + ";" +
                   std::to_string(i) + ")";
    auto rep = verify_module(p, m);
    if (!rep.passed)
        throw Error("ParameterConstraint", "L violates " + rep.failed_relation);
    return m;
}

}  // namespace hopf
