#pragma once

#include <string>

#include "polymaass/expansion.hpp"
#include "polymaass/modforms.hpp"
#include "polymaass/qseries.hpp"

namespace polymaass {

// {"leading": int, "known_through": int, "coeffs": ["-1/2", "196884", ...]}
std::string qseries_to_json(const QSeries& s, int indent = -1);
QSeries qseries_from_json(const std::string& text);

// {"k": int, "m": int, "expansion": <qseries>}
std::string basis_to_json(const BasisElement& b, int indent = -1);

// {"k", "r", "n_min", "n_max", "cminus": [[n, j, re, im], ...], "cplus": [...]}
std::string expansion_to_json(const FourierWhittakerExpansion& e, int indent = -1);
FourierWhittakerExpansion expansion_from_json(const std::string& text);

}  // namespace polymaass
