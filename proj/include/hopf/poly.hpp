#pragma once

#include "hopf/cyclo.hpp"

#include <vector>

namespace hopf {

// dense univariate polynomials, index = degree
using QPoly = std::vector<Rational>;
using CPoly = std::vector<CycScalar>;

void qpoly_trim(QPoly& p);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
QPoly qpoly_sub(QPoly a, const QPoly& b);
QPoly qpoly_divmod(QPoly a, const QPoly& b, QPoly& rem);
QPoly qpoly_gcd(QPoly a, QPoly b);
Rational qpoly_eval(const QPoly& p, const Rational& x);

// distinct rational roots, ascending
std::vector<Rational> rational_roots(QPoly p);

void cpoly_trim(CPoly& p);
CPoly cpoly_mul(const CPoly& a, const CPoly& b);
CPoly cpoly_add(CPoly a, const CPoly& b);
CycScalar cpoly_eval(const CPoly& p, const CycScalar& x);
CPoly cpoly_divmod(CPoly a, const CPoly& b, CPoly& rem);
CPoly cpoly_gcd(CPoly a, CPoly b);  // monic
CPoly cpoly_derivative(const CPoly& p);
// number of distinct roots over the algebraic closure
int cpoly_distinct_roots(const CPoly& p);

// roots of p in Q(zeta_M) of the form rho * zeta_M^k with rho rational
std::vector<CycScalar> scaled_root_roots(const CPoly& p, long M);

}  // namespace hopf
