#pragma once

#include "hopf/modules.hpp"

#include <map>
#include <string>
#include <vector>

namespace hopf {

// canonical label string -> multiplicity
using FusionVector = std::map<std::string, long>;

ModuleRep tensor(const AlgebraParams& p, const ModuleRep& m1, const ModuleRep& m2);

// every simple whose weights lie in g1 <q> with b = gamma2, c = gamma3; canonical labels
std::vector<SimpleLabel> candidate_simples(const AlgebraParams& p, const CycScalar& g1, const CycScalar& gamma2,
                                           const CycScalar& gamma3);

// composition factors, matched through the power sums of yx on each a-weight space
// requires diagonal a and scalar b, c; throws RankDeficient or NoIntegerSolution
FusionVector decompose(const AlgebraParams& p, const ModuleRep& m);

int label_dim(const AlgebraParams& p, const SimpleLabel& l);
long fusion_dim(const AlgebraParams& p, const FusionVector& v);
std::string fusion_str(const FusionVector& v);

// memoizes modules and products for one parameter set
class FusionEngine {
public:
    explicit FusionEngine(const AlgebraParams& p) : p_(p) {}

    const AlgebraParams& params() const { return p_; }
    const ModuleRep& module(const std::string& label);
    std::string canonical(const std::string& label);
    FusionVector fuse(const std::string& l1, const std::string& l2);

private:
    AlgebraParams p_;
    std::map<std::string, std::string> canon_;
    std::map<std::string, ModuleRep> modules_;
    std::map<std::pair<std::string, std::string>, FusionVector> products_;
};

FusionVector fuse(const AlgebraParams& p, const SimpleLabel& l1, const SimpleLabel& l2);

struct FusionTable {
    std::vector<std::string> labels;
    std::vector<std::vector<FusionVector>> cells;  // cells[i][j] = labels[i] * labels[j]
    bool commutative = true;
};

FusionTable fusion_table(FusionEngine& engine, const std::vector<std::string>& labels);

}  // namespace hopf
