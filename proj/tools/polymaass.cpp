#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polymaass/expansion.hpp"
#include "polymaass/kloosterman.hpp"
#include "polymaass/modforms.hpp"
#include "polymaass/operators.hpp"
#include "polymaass/poincare.hpp"
#include "polymaass/serialize.hpp"
#include "polymaass/suite.hpp"

using namespace polymaass;
using nlohmann::ordered_json;

namespace {

struct Globals {
  bool json = false;
  std::string output;
  int order = 10;
  SuiteOptions suite;
};

std::vector<double> split_numbers(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(std::string("cannot parse ") + what + " '" + text + "'");
    }
  }
  return out;
}

cplx parse_complex(const std::string& text) {
  auto v = split_numbers(text, "complex number");
  if (v.size() == 1) return {v[0], 0.0};
  if (v.size() == 2) return {v[0], v[1]};
  throw Error("expected RE or RE,IM but got '" + text + "'");
}

EvalPoint parse_point(const std::string& text) {
  auto v = split_numbers(text, "point");
  if (v.size() != 2) throw Error("expected X,Y but got '" + text + "'");
  return EvalPoint(v[0], v[1]);
}

ordered_json complex_json(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(cplx z) { return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i"; }

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Error("failed to write to stdout");
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw Error("cannot open '" + g.output + "' for writing");
  out << text;
  out.close();
  if (!out) throw Error("failed to write '" + g.output + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poincare series, q-expansions and Maass form checks on the modular group"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file with default flag values; command-line flags win");

  Globals g;
  TruncationPolicy& pol = g.suite.policy;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_option("-o,--output", g.output, "Write to FILE instead of stdout");
  app.add_option("--tol", pol.target_tol, "Target tolerance")->capture_default_str();
  app.add_option("--cmax", pol.c_max, "Kloosterman modulus cutoff")->capture_default_str();
  app.add_option("--nmax", pol.n_max, "Fourier window |n| <= nmax")->capture_default_str();
  app.add_option("--fd-step-s", pol.fd_step_s, "Step for derivatives in s")->capture_default_str();
  app.add_option("--fd-step-z", pol.fd_step_z, "Relative stencil step in z")->capture_default_str();
  app.add_option("--order", g.order, "q-expansion order")->capture_default_str();
  app.add_option("--seed", g.suite.seed, "Seed for sampled points")->capture_default_str();

  int k = 0, r = 1;
  long m = 1, n = 1, c = 1;
  std::string s_text = "1", z_text = "0,1";

  auto* basis = app.add_subcommand("basis", "Exact Duke-Jenkins basis element f_{k,m}");
  basis->add_option("--weight", k, "Even weight k")->required();
  basis->add_option("--index", m, "Pole order m")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a form at a point");
  std::string kind, method = "fourier", closed = "F01";
  bool complete = false;
  eval->add_option("kind", kind, "poincare | eisenstein | closed-form")
      ->required()
      ->check(CLI::IsMember({"poincare", "eisenstein", "closed-form"}));
  eval->add_option("--k", k, "Weight");
  eval->add_option("--m", m, "Index; the parameter of closed forms Gk0 and F0_neg_m_0");
  eval->add_option("--s", s_text, "Spectral parameter RE[,IM]");
  eval->add_option("--z", z_text, "Point X,Y");
  eval->add_option("--method", method, "Poincare series: fourier | direct")
      ->check(CLI::IsMember({"fourier", "direct"}));
  eval->add_option("--name", closed, "Closed form: F01, G21, Gk0, F0_neg_m_0, F0_neg1_0");
  eval->add_flag("--complete", complete, "Completed Eisenstein series");

  auto* expand = app.add_subcommand("expand", "Fourier-Whittaker table of F_{k,m,r} or G_{k,m,r}");
  expand->add_option("--k", k, "Weight")->required();
  expand->add_option("--m", m, "Index")->required();
  expand->add_option("--r", r, "Depth index")->required();

  auto* kloo = app.add_subcommand("kloosterman", "Kloosterman sum K(m,n,c)");
  kloo->add_option("--m", m)->required();
  kloo->add_option("--n", n)->required();
  kloo->add_option("--c", c)->required();

  auto* lser = app.add_subcommand("lseries", "Truncated L_{m,n}(s) = sum_{c <= cmax} K(m,n,c) c^{-2s}");
  lser->add_option("--m", m)->required();
  lser->add_option("--n", n)->required();
  lser->add_option("--s", s_text, "RE[,IM]")->required();

  auto* check = app.add_subcommand("check", "Run verification checks, or xi/laplacian at one point");
  std::vector<std::string> ids{"all"};
  std::string format;
  bool timings = false;
  check->add_option("ids", ids, "all, check ids, prefix*, or xi / laplacian");
  check->add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  check->add_flag("--timings", timings, "Include runtime_ms");
  check->add_option("--k", k, "Weight (xi, laplacian)");
  check->add_option("--m", m, "Index (xi, laplacian)");
  check->add_option("--r", r, "Depth index (xi, laplacian)");
  check->add_option("--z", z_text, "Point X,Y (xi, laplacian)");

  auto* classify = app.add_subcommand("classify", "Depth of a stored expansion");
  std::string file;
  classify->add_option("--expansion", file, "Expansion JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    pol.validate();

    if (*basis) {
      BasisElement b = duke_jenkins(k, static_cast<int>(m), g.order);
      if (g.json) {
        emit(g, basis_to_json(b, 2) + "\n");
      } else {
        std::string out = "f_{" + std::to_string(k) + "," + std::to_string(m) + "}\n";
        const QSeries& q = b.expansion;
        for (size_t i = 0; i < q.coeffs().size(); ++i) {
          if (q.coeffs()[i] == 0) continue;
          out += "q^" + std::to_string(q.leading_exponent() + static_cast<int>(i)) + "\t" +
                 rational_to_string(q.coeffs()[i]) + "\n";
        }
        emit(g, out);
      }
      return 0;
    }

    if (*eval) {
      EvalPoint z = parse_point(z_text);
      cplx s = parse_complex(s_text);
      cplx value;
      ordered_json j{{"kind", kind}};
      if (kind == "poincare") {
        PoincareSpec spec{k, m, 0, s};
        value = method == "direct" ? poincare_direct(spec, z, pol) : poincare_fourier(spec, z, pol);
        j["k"] = k;
        j["m"] = m;
        j["s"] = complex_json(s);
        j["method"] = method;
      } else if (kind == "eisenstein") {
        value = complete ? complete_eisenstein(k, z, s, pol) : eisenstein_lattice(k, z, s, pol);
        j["k"] = k;
        j["s"] = complex_json(s);
        j["complete"] = complete;
      } else {
        ClosedForm f = closed_form_from_name(closed);
        int param = f == ClosedForm::Gk0 ? k : static_cast<int>(m);
        value = closed_form_eval(f, param, z, std::max(g.order, 1));
        j["name"] = closed;
        j["param"] = param;
      }
      j["z"] = complex_json(z.z());
      j["value"] = complex_json(value);
      emit(g, g.json ? dump(j) : fmt(value) + "\n");
      return 0;
    }

    if (*expand) {
      FourierWhittakerExpansion e = taylor_expansion({k, m, r, 0.0}, pol);
      if (g.json) {
        emit(g, expansion_to_json(e, 2) + "\n");
      } else {
        std::string out = "# n j sign re im\n";
        for (const auto* t : {&e.cminus, &e.cplus})
          for (const auto& [key, v] : *t)
            out += std::to_string(key.first) + " " + std::to_string(key.second) + " " +
                   (t == &e.cplus ? "+" : "-") + " " + fmt(v.real()) + " " + fmt(v.imag()) + "\n";
        emit(g, out);
      }
      return 0;
    }

    if (*kloo) {
      double v = kloosterman_sum(m, n, c);
      ordered_json j{{"m", m}, {"n", n}, {"c", c}, {"value", v}};
      emit(g, g.json ? dump(j) : fmt(v) + "\n");
      return 0;
    }

    if (*lser) {
      LSeriesResult res = l_series({m, n, parse_complex(s_text), pol.c_max});
      ordered_json j{{"m", m},
                     {"n", n},
                     {"s", complex_json(parse_complex(s_text))},
                     {"c_max", pol.c_max},
                     {"value", res.value},
                     {"abs_sum", res.abs_sum},
                     {"tail_estimate", res.tail_estimate},
                     {"terms", res.terms}};
      emit(g, g.json ? dump(j) : fmt(res.value) + "\ttail " + fmt(res.tail_estimate) + "\n");
      return 0;
    }

    if (*check) {
      if (format.empty()) format = g.json ? "json" : "text";
      std::vector<CheckReport> reports;
      if (ids.size() == 1 && (ids[0] == "xi" || ids[0] == "laplacian")) {
        EvalPoint z = parse_point(z_text);
        reports.push_back(ids[0] == "xi" ? check_xi_at(k, m, r, z, g.suite) : check_laplacian_at(k, m, r, z, g.suite));
      } else {
        reports = run_suite(ids, g.suite);
      }
      if (format == "json")
        emit(g, reports_to_json(reports, timings) + "\n");
      else if (format == "csv")
        emit(g, reports_to_csv(reports));
      else
        emit(g, reports_to_text(reports, timings));
      for (const auto& rep : reports)
        if (!rep.passed) return 1;
      return 0;
    }

    if (*classify) {
      FourierWhittakerExpansion e = expansion_from_json(read_file(file));
      double depth = depth_classify(e);
      ordered_json j{{"k", e.k}, {"r", e.r}, {"depth", depth}};
      emit(g, g.json ? dump(j) : fmt(depth) + "\n");
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
