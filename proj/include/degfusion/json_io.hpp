#pragma once

#include <json.hpp>

#include "degfusion/bsa.hpp"
#include "degfusion/fusion.hpp"
#include "degfusion/polynomial.hpp"
#include "degfusion/qseries.hpp"
#include "degfusion/rep_rings.hpp"
#include "degfusion/verma.hpp"
#include "degfusion/zhu.hpp"

namespace degfusion {

using Json = nlohmann::ordered_json;

/// Rationals travel as strings: "3", "-1/4".
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Word& w);
Word word_from_json(const Json& j);

/// {"flavor","c","h","level","entries":[{"word","coeff"}]}
Json to_json(const VermaVector& v);
VermaVector verma_vector_from_json(const Json& j);

/// Coefficients in increasing degree.
Json to_json(const Polynomial1& p);
/// [{"x":i,"y":j,"coeff":"..."}]
Json to_json(const Polynomial2& p);
Json to_json(const ZhuImage& z);

/// Sorted [["exp","coeff"], ...]
Json to_json(const QSeries& s);

Json to_json(const CalibrationReport& r);
Json to_json(const FusionTable& t);
Json to_json(const std::vector<Channel>& channels, Flavor flavor);
Json to_json(const RingReport& r);

/// {"algebra":"osp","j":"3/2"}
Json to_json(const RepLabel& l);
RepLabel rep_label_from_json(const Json& j);
Json to_json(const RepMultiset& m);
Json to_json(const MatrixRealization& m, double tolerance);

}  // namespace degfusion
