#include "hopf/algebra.hpp"

#include <functional>

namespace hopf {

namespace {

Tensor3 delta_left(const HopfAlgebra& H, const Tensor2& t)
{
    Tensor3 out;
    for (const auto& [key, c] : t.terms()) {
        Tensor2 d = H.coproduct(key[0]);
        for (const auto& [k2, x] : d.terms())
            out.add({k2[0], k2[1], key[1]}, c * x);
    }
    return out;
}

Tensor3 delta_right(const HopfAlgebra& H, const Tensor2& t)
{
    Tensor3 out;
    for (const auto& [key, c] : t.terms()) {
        Tensor2 d = H.coproduct(key[1]);
        for (const auto& [k2, x] : d.terms())
            out.add({key[0], k2[0], k2[1]}, c * x);
    }
    return out;
}

bool grouplike_trivial(const Monomial& m)
{
    return m.u == 0 && m.v == 0;
}

}  // namespace

bool AxiomReport::passed() const
{
    for (const auto& r : results)
        if (!r.passed)
            return false;
    return true;
}

AxiomReport check_hopf_axioms(const HopfAlgebra& H, int degree_bound, int n_random, std::uint64_t seed)
{
    const int n = H.params().n;
    std::vector<Element> base{H.one(), H.gen('a'), H.gen('A'), H.gen('b'), H.gen('B'), H.gen('c'), H.gen('C'),
                              H.gen('x'), H.gen('y'), H.mono(0, 0, 0, n - 1, 0), H.mono(0, 0, 0, 0, n - 1),
                              H.mono(0, 0, 0, n - 1, n - 1)};
    std::mt19937_64 rng(seed);
    std::vector<Element> rnd;
    for (int r = 0; r < n_random; ++r)
        rnd.push_back(H.random_element(rng, degree_bound));

    std::vector<const Element*> singles;
    for (auto& e : base)
        singles.push_back(&e);
    for (auto& e : rnd)
        singles.push_back(&e);
    std::vector<std::pair<const Element*, const Element*>> pairs;
    for (auto& a : base)
        for (auto& b : base)
            pairs.emplace_back(&a, &b);
    for (size_t r = 0; r + 1 < rnd.size(); ++r)
        pairs.emplace_back(&rnd[r], &rnd[r + 1]);

    AxiomReport rep;
    auto run_single = [&](const std::string& name, const std::function<bool(const Element&)>& ok) {
        AxiomResult r;
        r.name = name;
        for (const Element* e : singles) {
            ++r.checked;
            if (!ok(*e)) {
                r.passed = false;
                r.witness = e->str();
                break;
            }
        }
        rep.results.push_back(r);
    };
    auto run_pair = [&](const std::string& name, const std::function<bool(const Element&, const Element&)>& ok) {
        AxiomResult r;
        r.name = name;
        for (auto [a, b] : pairs) {
            ++r.checked;
            if (!ok(*a, *b)) {
                r.passed = false;
                r.witness = "(" + a->str() + ") , (" + b->str() + ")";
                break;
            }
        }
        rep.results.push_back(r);
    };

    run_single("coassociativity", [&](const Element& h) {
        Tensor2 d = H.coproduct(h);
        return delta_left(H, d) == delta_right(H, d);
    });
    run_single("counit", [&](const Element& h) {
        Tensor2 d = H.coproduct(h);
        Element l, r;
        for (const auto& [key, c] : d.terms()) {
            if (grouplike_trivial(key[0]))
                l.add(key[1], c);
            if (grouplike_trivial(key[1]))
                r.add(key[0], c);
        }
        return l == h && r == h;
    });
    run_single("antipode", [&](const Element& h) {
        Tensor2 d = H.coproduct(h);
        Element l, r;
        for (const auto& [key, c] : d.terms()) {
            l += H.multiply(H.antipode(key[0]), Element::monomial(key[1], c));
            r += H.multiply(Element::monomial(key[0], c), H.antipode(key[1]));
        }
        Element e = Element::scalar(H.counit(h));
        return l == e && r == e;
    });
    run_pair("coproduct_multiplicative", [&](const Element& a, const Element& b) {
        return H.coproduct(H.multiply(a, b)) == H.tensor_multiply(H.coproduct(a), H.coproduct(b));
    });
    run_pair("counit_multiplicative", [&](const Element& a, const Element& b) {
        return H.counit(H.multiply(a, b)) == H.counit(a) * H.counit(b);
    });
    run_pair("antipode_antimultiplicative", [&](const Element& a, const Element& b) {
        return H.antipode(H.multiply(a, b)) == H.multiply(H.antipode(b), H.antipode(a));
    });
    return rep;
}

}  // namespace hopf
