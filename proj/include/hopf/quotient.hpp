#pragma once

#include "hopf/algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace hopf {

struct QuotientParams {
    int m = 1;
    int n2 = 0, n3 = 0;
    long N = 2;  // n (n-1) m

    // p.M must already be a multiple of N (build p with extra_modulus = N)
    static QuotientParams make(const AlgebraParams& p, int m, int n2, int n3);
};

AlgebraParams quotient_algebra_params(int n, int n1, const std::array<CycScalar, 3>& beta, int m);

// b -> a^{n m n2}, c -> a^{m n n3}, a^N -> 1
Element quotient_reduce(const AlgebraParams& p, const QuotientParams& qp, const Element& e);
Element quotient_multiply(const HopfAlgebra& H, const QuotientParams& qp, const Element& e1, const Element& e2);
std::vector<Element> quotient_basis(const AlgebraParams& p, const QuotientParams& qp);
int quotient_span_dimension(const AlgebraParams& p, const QuotientParams& qp);

// sparse row echelon over monomial keys
class ElementSpan {
public:
    bool insert(Element e);
    bool contains(Element e) const;
    int dim() const { return static_cast<int>(rows_.size()); }
    std::vector<Element> basis() const;

private:
    void reduce(Element& e) const;
    std::map<Monomial, Element> rows_;  // pivot -> row with unit pivot coefficient
};

struct IdempotentReport {
    std::vector<Element> idempotents;
    bool orthogonal = true, complete = true, central = true;
    std::vector<int> block_dims;
    bool passed() const { return orthogonal && complete && central; }
};

IdempotentReport central_idempotents(const HopfAlgebra& H, const QuotientParams& qp, bool block_dims = true);

struct WeightIdempotentReport {
    int block = 0;
    std::vector<Element> f;
    bool orthogonal = true, complete = true, shift_x = true, shift_y = true;
    bool passed() const { return orthogonal && complete && shift_x && shift_y; }
};

// f_k = (1/n) sum_j (q^k g)^j with block generator g = omega0^i e_i a
WeightIdempotentReport weight_idempotents(const HopfAlgebra& H, const QuotientParams& qp, int block);

struct IntegralReport {
    Element lambda;
    bool counit_zero = true, left = true, right = true;
    long checked = 0;
    std::string witness;
    bool passed() const { return counit_zero && left && right; }
};

IntegralReport integral_check(const HopfAlgebra& H, const QuotientParams& qp);

struct RadicalReport {
    int block = 0;
    CycScalar beta1_block, beta2_block;
    bool ideal = true, nilpotent = true, generator_order = true;
    int nilpotency_index = 0;
    int block_dim = 0, radical_dim = 0, quotient_dim = 0;
    bool passed() const;
};

// (beta1', beta2') of block i: x^n and y^n act on e_i H by these scalars
std::array<CycScalar, 2> block_betas(const AlgebraParams& p, const QuotientParams& qp, int block);
RadicalReport radical_check(const HopfAlgebra& H, const QuotientParams& qp, int block);

}  // namespace hopf
