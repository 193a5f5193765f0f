#pragma once

#include <string>

#include "degfusion/qseries.hpp"
#include "degfusion/superalgebra.hpp"

namespace degfusion {

/// Lattice sectors of the rank-one lattice L = Z*alpha, <alpha, alpha> = 2.
enum class SectorLabel { VL, VLHalf };

std::string to_string(SectorLabel s);
SectorLabel parse_sector(std::string_view text);

/// Characters carry no q^{-c/24} prefactor. Module characters are exact to
/// depth order above their lowest weight; lattice characters up to q^order.
QSeries ch_verma(Flavor flavor, const Rational& h, const Rational& order);
/// (q^{m^2/4} - q^{(m+2)^2/4}) / prod (1 - q^n)
QSeries ch_irr_c1(int m, const Rational& order);
/// (q^{h_{1,q}} - q^{h_{1,q+2}}) * NS denominator
QSeries ch_irr_ns(int q_label, const Rational& order);
/// Theta series of the sector times the Heisenberg character.
QSeries ch_lattice(SectorLabel sector, const Rational& order);

/// V_L = sum (2n+1) L(1, n^2) and V_{L+1/2} = sum (2n+2) L(1, (2n+1)^2/4),
/// compared exactly up to q^order.
bool identity_check(SectorLabel sector, const Rational& order);

}  // namespace degfusion
