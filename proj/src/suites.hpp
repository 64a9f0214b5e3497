#pragma once

#include "hopf/grothendieck.hpp"

namespace hopf {

// suites implemented with the quotient machinery
SuiteReport suite_gelaki(const SuiteConfig& cfg);
SuiteReport suite_radford(const SuiteConfig& cfg);
SuiteReport suite_remark(const SuiteConfig& cfg);

}  // namespace hopf
