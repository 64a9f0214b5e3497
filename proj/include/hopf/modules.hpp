#pragma once

#include "hopf/algebra.hpp"
#include "hopf/matrix.hpp"
#include "hopf/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopf {

enum class Kind { V0, VI, VII, Vr };

// Kind(g1,gamma2,gamma3;i[;r][;kseed]); see README for the grammar and the two Vr conventions
struct SimpleLabel {
    Kind kind = Kind::V0;
    CycScalar g1{1}, gamma2{1}, gamma3{1};
    int i = 0;
    int r = 0;  // Vr only; 0 means "derive"
    std::optional<CycScalar> kseed;

    std::string str() const;
};

SimpleLabel parse_label(const std::string& text, const AlgebraParams& p);
// scalar expression: rational, cyc(M; ...), zeta(M,k), q, q^e, sq^e (powers of the fixed q^{1/2}), c*atom
CycScalar parse_scalar(const std::string& text, const AlgebraParams& p);

struct ModuleRep {
    int dim = 0;
    Matrix a, b, c, x, y;
    std::optional<SimpleLabel> label;
    std::string descriptor;

    const Matrix& action(char g) const;
};

// central parameters: x^n acts by beta1'' and y^n by beta2'' on highest-weight modules
CycScalar beta1pp(const AlgebraParams& p, const CycScalar& g1, const CycScalar& gamma2);
CycScalar beta2pp(const AlgebraParams& p, const CycScalar& g1, const CycScalar& gamma3);
// beta3 (w^{2 n1} - gamma2 gamma3) for an a-weight w
CycScalar beta3pp(const AlgebraParams& p, const CycScalar& w, const CycScalar& gamma2, const CycScalar& gamma3);

ModuleRep build_V0(const AlgebraParams& p, const CycScalar& g1, const CycScalar& gamma2, const CycScalar& gamma3,
                   int i);
// r = 0 picks t when g1 q^i is a V0 weight, otherwise the minimal admissible r
ModuleRep build_Vr(const AlgebraParams& p, const CycScalar& g1, const CycScalar& gamma2, const CycScalar& gamma3,
                   int i, int r = 0);
ModuleRep build_VI(const AlgebraParams& p, const CycScalar& g1, const CycScalar& gamma2, const CycScalar& gamma3,
                   int i, const CycScalar& k1);
ModuleRep build_VII(const AlgebraParams& p, const CycScalar& g1, const CycScalar& gamma2, const CycScalar& gamma3,
                    int i, const CycScalar& kn);
// missing seeds resolve to the first root returned by solve_k_seed
ModuleRep build_module(const AlgebraParams& p, const SimpleLabel& label);

// polynomial in the VI/VII seed whose roots are exactly the admissible seeds
CPoly seed_constraint(const AlgebraParams& p, const SimpleLabel& label);
// roots of the seed constraint of the form rho * zeta^k, sorted; throws FieldTooSmall when none
std::vector<CycScalar> solve_k_seed(const AlgebraParams& p, const SimpleLabel& label);

// the unique label naming the isomorphism class of build_module(label)
SimpleLabel canonical_label(const AlgebraParams& p, const SimpleLabel& label);
// canonical representative of the coset w <q> and the exponent i with w = rep * q^i
std::pair<CycScalar, int> coset_rep(const AlgebraParams& p, const CycScalar& w);

struct VerifyReport {
    bool passed = true;
    std::string failed_relation;
    std::vector<std::pair<std::string, bool>> relations;
};

VerifyReport verify_module(const AlgebraParams& p, const ModuleRep& m);
bool is_simple(const ModuleRep& m);
ModuleRep dual_module(const AlgebraParams& p, const ModuleRep& m);
ModuleRep direct_sum(const ModuleRep& m1, const ModuleRep& m2);

// basis of Hom_H(from, to) as dim(to) x dim(from) matrices
std::vector<Matrix> intertwiners(const ModuleRep& from, const ModuleRep& to);
// an invertible intertwiner, if one is found among integer combinations of a Hom basis
std::optional<Matrix> find_isomorphism(const ModuleRep& m1, const ModuleRep& m2);
bool isomorphic(const ModuleRep& m1, const ModuleRep& m2);

// columns of E span a submodule; returns the induced action on total / span(E)
ModuleRep quotient_module(const ModuleRep& total, const Matrix& E);
ModuleRep submodule(const ModuleRep& total, const Matrix& E);
// does 0 -> span(E) -> total -> total/span(E) -> 0 split
bool is_split(const ModuleRep& total, const Matrix& E);
// searches embeddings sub -> total with quotient isomorphic to quot
bool is_split(const AlgebraParams& p, const ModuleRep& total, const ModuleRep& sub, const ModuleRep& quot);

// basis v_0..v_n; ks = (k_1, ..., k_{n-1}) with y v_l = k_{n+1-l} v_{l-1} for l >= 2; throws ParameterConstraint
// when the displayed action is not a module for these parameters
ModuleRep build_extension_prop46(const AlgebraParams& p, int i, const CycScalar& varsigma,
                                 const std::vector<CycScalar>& ks);
// 2t-dimensional L; its last t basis vectors span a copy of V_t(g1, gamma2, gamma3; i - t + n)
ModuleRep build_extension_prop47(const AlgebraParams& p, const CycScalar& g1, const CycScalar& gamma2,
                                 const CycScalar& gamma3, int i);

}  // namespace hopf
