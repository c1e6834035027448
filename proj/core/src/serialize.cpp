#include "polymaass/serialize.hpp"

#include <json.hpp>

namespace polymaass {

using nlohmann::json;

namespace {

json qseries_json(const QSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(rational_to_string(c));
  return json{{"leading", s.leading_exponent()}, {"known_through", s.known_through()}, {"coeffs", coeffs}};
}

json table_json(const std::map<FourierWhittakerExpansion::Key, cplx>& t) {
  json out = json::array();
  for (const auto& [key, c] : t) out.push_back(json::array({key.first, key.second, c.real(), c.imag()}));
  return out;
}

void read_table(const json& in, std::map<FourierWhittakerExpansion::Key, cplx>& t) {
  for (const auto& row : in) {
    if (!row.is_array() || row.size() != 4) throw Error("expansion entry must be [n, j, re, im]");
    t[{row[0].get<long>(), row[1].get<int>()}] = cplx(row[2].get<double>(), row[3].get<double>());
  }
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& ex) {
    throw Error(std::string("malformed JSON: ") + ex.what());
  }
}

}  // namespace

std::string qseries_to_json(const QSeries& s, int indent) { return qseries_json(s).dump(indent); }

QSeries qseries_from_json(const std::string& text) {
  json j = parse(text);
  try {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_string(c.get<std::string>()));
    return QSeries(j.at("leading").get<int>(), std::move(coeffs), j.at("known_through").get<int>());
  } catch (const json::exception& ex) {
    throw Error(std::string("invalid q-series JSON: ") + ex.what());
  }
}

std::string basis_to_json(const BasisElement& b, int indent) {
  return json{{"k", b.k}, {"m", b.m}, {"expansion", qseries_json(b.expansion)}}.dump(indent);
}

std::string expansion_to_json(const FourierWhittakerExpansion& e, int indent) {
  json j{{"k", e.k},
         {"r", e.r},
         {"n_min", e.n_min},
         {"n_max", e.n_max},
         {"cminus", table_json(e.cminus)},
         {"cplus", table_json(e.cplus)}};
  return j.dump(indent);
}

FourierWhittakerExpansion expansion_from_json(const std::string& text) {
  json j = parse(text);
  FourierWhittakerExpansion e;
  try {
    e.k = j.at("k").get<int>();
    e.r = j.at("r").get<int>();
    read_table(j.at("cminus"), e.cminus);
    read_table(j.at("cplus"), e.cplus);
    long lo = 0, hi = 0;
    for (const auto* t : {&e.cminus, &e.cplus})
      for (const auto& [key, c] : *t) {
        lo = std::min(lo, key.first);
        hi = std::max(hi, key.first);
      }
    e.n_min = j.value("n_min", lo);
    e.n_max = j.value("n_max", hi);
  } catch (const json::exception& ex) {
    throw Error(std::string("invalid expansion JSON: ") + ex.what());
  }
  for (const auto* t : {&e.cminus, &e.cplus})
    for (const auto& [key, c] : *t)
      if (key.second < 0 || key.second >= e.r) throw Error("expansion entry has j outside [0, r-1]");
  e.refresh_support();
  return e;
}

}  // namespace polymaass
