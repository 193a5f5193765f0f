#pragma once

#include <string>
#include <vector>

#include "degfusion/rational.hpp"

namespace degfusion {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample when failed
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
};

/// Root law, density agreement, channel range, ring axioms and Rep(sl2).
SuiteReport verify_fusion_vir(int bound);
/// Parity channel sets, degree law, ring axioms, Rep(osp(1|2)) and the
/// BSA calibration flag.
SuiteReport verify_fusion_ns(int bound);
/// Lattice identities and positivity of irreducible characters.
SuiteReport verify_chars(const Rational& order);
/// Tensor rules against weight peeling, matrix relations, CG orthonormality.
SuiteReport verify_reprings();

}  // namespace degfusion
