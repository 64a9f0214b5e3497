#pragma once

// Coefficient sequences shared by the module builders and the label layer.

#include "hopf/algebra.hpp"
#include "hopf/poly.hpp"

#include <vector>

namespace hopf::detail {

inline CycScalar fit(const AlgebraParams& p, const CycScalar& x)
{
    return x.embed(p.M);
}

// Vr chain with top weight lam: c[j] for j = 0..len, y m_j = c[j] m_{j-1}, c[0] = 0
std::vector<CycScalar> chain_coeffs(const AlgebraParams& p, const CycScalar& lam, const CycScalar& g2,
                                    const CycScalar& g3, int len);

// VI: Y_j as affine polynomials in k1 (index j = 1..n-1; entry 0 unused)
std::vector<CPoly> vi_polys(const AlgebraParams& p, const CycScalar& lam0, const CycScalar& g2, const CycScalar& g3);
// VII: X_j as affine polynomials in kn (index j = 0..n-1)
std::vector<CPoly> vii_polys(const AlgebraParams& p, const CycScalar& lam0, const CycScalar& g2, const CycScalar& g3);

std::vector<CycScalar> eval_all(const std::vector<CPoly>& ps, const CycScalar& k);

}  // namespace hopf::detail
