#ifndef FPTI_CLI_HPP
#define FPTI_CLI_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpti/fsing.hpp"
#include "fpti/oracle.hpp"

namespace fpti::cli {

/// Parsed input file:
///
///   char: 2
///   vars: x y
///   order: grevlex        (optional: lex | grevlex, optionally followed by pot | top)
///   ideal:
///     y^2 + x^3
///   c: x^2                (optional test element)
///   u: y^2 + x^3          (optional Frobenius matrix for `star`, rank one)
struct InputSpec {
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  OrderSpec order;
  std::string order_text = "grevlex";
  std::vector<std::string> ideal;
  std::optional<std::string> c;
  std::optional<std::string> u;

  Ring ring;
  std::vector<Polynomial> generators;
};

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline Error parse_error(std::size_t line, std::size_t col, const std::string& msg) {
  return Error(ErrorKind::ParseError,
               "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

inline std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ' ' || ch == '\t' || ch == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline std::vector<std::string> split_words_commas_only(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

}  // namespace detail

inline InputSpec parse_input(const std::string& text) {
  InputSpec spec;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool in_ideal = false, have_char = false, have_vars = false, have_ideal = false;
  std::vector<std::pair<std::size_t, std::string>> ideal_lines;
  std::optional<std::pair<std::size_t, std::string>> c_line, u_line;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    if (detail::trim(line).empty()) continue;
    const bool indented = line[0] == ' ' || line[0] == '\t';
    auto colon = line.find(':');
    if (indented || colon == std::string::npos) {
      if (!in_ideal) throw detail::parse_error(lineno, 1, "expected 'key: value'");
      ideal_lines.emplace_back(lineno, detail::trim(line));
      continue;
    }
    in_ideal = false;
    std::string key = detail::trim(line.substr(0, colon));
    std::string value = detail::trim(line.substr(colon + 1));
    if (key == "char") {
      try {
        std::size_t used = 0;
        long v = std::stol(value, &used);
        if (used != value.size() || v < 0 || v > 0xffffffffL) throw std::invalid_argument("range");
        spec.p = static_cast<std::uint32_t>(v);
      } catch (const std::exception&) {
        throw detail::parse_error(lineno, colon + 2, "characteristic must be an integer");
      }
      have_char = true;
    } else if (key == "vars") {
      spec.vars = detail::split_words(value);
      have_vars = true;
    } else if (key == "order") {
      auto w = detail::split_words(value);
      if (w.empty() || w.size() > 2) throw detail::parse_error(lineno, colon + 2, "bad order");
      if (w[0] == "lex") spec.order.mono = MonoOrder::Lex;
      else if (w[0] == "grevlex") spec.order.mono = MonoOrder::GrevLex;
      else throw detail::parse_error(lineno, colon + 2, "unknown monomial order '" + w[0] + "'");
      if (w.size() == 2) {
        if (w[1] == "pot") spec.order.module = ModuleOrder::PositionOverTerm;
        else if (w[1] == "top") spec.order.module = ModuleOrder::TermOverPosition;
        else throw detail::parse_error(lineno, colon + 2, "unknown module order '" + w[1] + "'");
      }
      spec.order_text = value;
    } else if (key == "ideal") {
      in_ideal = true;
      have_ideal = true;
      for (auto& g : detail::split_words_commas_only(value)) ideal_lines.emplace_back(lineno, g);
    } else if (key == "c") {
      c_line.emplace(lineno, value);
    } else if (key == "u") {
      u_line.emplace(lineno, value);
    } else {
      throw detail::parse_error(lineno, 1, "unknown key '" + key + "'");
    }
  }
  if (!have_char) throw detail::parse_error(lineno, 1, "missing 'char:'");
  if (!have_vars || spec.vars.empty()) throw detail::parse_error(lineno, 1, "missing 'vars:'");
  if (!have_ideal) throw detail::parse_error(lineno, 1, "missing 'ideal:'");
  if (ideal_lines.empty()) throw detail::parse_error(lineno, 1, "ideal has no generators");

  spec.ring = make_ring(spec.p, spec.vars, spec.order);
  auto parse_at = [&](std::size_t ln, const std::string& s) {
    try {
      return parse_polynomial(spec.ring, s);
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(ln) + ": " + e.what());
    }
  };
  for (auto& [ln, s] : ideal_lines) {
    spec.ideal.push_back(s);
    spec.generators.push_back(parse_at(ln, s));
  }
  if (c_line) {
    spec.c = c_line->second;
    parse_at(c_line->first, c_line->second);
  }
  if (u_line) {
    spec.u = u_line->second;
    parse_at(u_line->first, u_line->second);
  }
  return spec;
}

struct Options {
  std::string format = "text";
  unsigned e = 1;
  std::size_t i = 0;
  std::size_t j = 0;
  bool i_set = false, j_set = false;
  unsigned emax = 8;
  std::uint64_t seed = kDefaultSeed;
  bool verify = false;
  int cap_iterations = 64;
};

struct Report {
  int exit_code = 0;
  std::string out;
  std::string err;
};

enum ExitCode { kOk = 0, kInputError = 1, kAssumptionFailure = 2, kResourceCap = 3, kInternal = 4 };

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::NoTestElement: return kAssumptionFailure;
    case ErrorKind::ResourceCap:
    case ErrorKind::IterationCap:
    case ErrorKind::StabilizationCapExceeded:
    case ErrorKind::ExponentOverflow:
    case ErrorKind::BoundsExceeded: return kResourceCap;
    case ErrorKind::InvariantViolation: return kInternal;
    default: return kInputError;
  }
}

/// Generators of the reduced Gröbner basis, largest leading term first.
inline std::vector<ModuleVector> canonical_generators(const Submodule& W, const Limits& lim = {}) {
  auto g = W.gb(lim).elements();
  std::reverse(g.begin(), g.end());
  return g;
}

namespace detail {

using nlohmann::json;

inline json vector_json(const ModuleVector& v) {
  if (v.rank() == 1) return to_string(v.component(0));
  json a = json::array();
  for (const auto& c : v.components()) a.push_back(to_string(c));
  return a;
}

inline json module_json(const Submodule& W, const Limits& lim) {
  json a = json::array();
  for (const auto& g : canonical_generators(W, lim)) a.push_back(vector_json(g));
  return a;
}

inline json matrix_json(const PolyMatrix& M) {
  json rows = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < M.cols(); ++j) r.push_back(to_string(M(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline void text_list(std::ostream& os, const std::string& title, const json& items) {
  os << title << ":\n";
  if (items.empty()) os << "  (none)\n";
  for (const auto& it : items) {
    if (it.is_string()) {
      os << "  " << it.get<std::string>() << "\n";
    } else {
      os << "  [";
      for (std::size_t k = 0; k < it.size(); ++k) os << (k ? ", " : "") << it[k].get<std::string>();
      os << "]\n";
    }
  }
}

inline void text_matrix(std::ostream& os, const std::string& title, const json& rows) {
  os << title << ":\n";
  for (const auto& r : rows) {
    os << "  [";
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? ", " : "") << r[k].get<std::string>();
    os << "]\n";
  }
}

/// Human-readable rendering of a result object; keys in a fixed order.
inline std::string render_text(const std::string& command, const InputSpec& spec, const json& result) {
  std::ostringstream os;
  os << "command: " << command << "\n";
  os << "ring: F_" << spec.p << "[";
  for (std::size_t k = 0; k < spec.vars.size(); ++k) os << (k ? ", " : "") << spec.vars[k];
  os << "], order " << spec.order_text << "\n";
  for (const auto& [key, val] : result.items()) {
    if (key == "A" || key == "U") {
      text_matrix(os, key, val);
    } else if (key == "loci" || key == "chain") {
      for (std::size_t k = 0; k < val.size(); ++k)
        text_list(os, key.substr(0, key.size() - (key == "loci" ? 1 : 0)) + (key == "loci" ? "us" : "") +
                          "[" + std::to_string(key == "loci" ? k + 1 : k) + "]",
                  val[k]);
    } else if (val.is_array()) {
      text_list(os, key, val);
    } else if (val.is_string()) {
      os << key << ": " << val.get<std::string>() << "\n";
    } else if (val.is_null()) {
      os << key << ": none\n";
    } else {
      os << key << ": " << val.dump() << "\n";
    }
  }
  return os.str();
}

}  // namespace detail

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"gb",  "froot",    "star", "ext",       "tau",
                                          "sandwich", "hsl", "noncm", "finjective"};
  return c;
}

/// Executes one command against a parsed spec. Never throws: failures are
/// reported through the exit code and `err`.
inline Report run(const std::string& command, const InputSpec& spec, const Options& opt) {
  using detail::json;
  Report rep;
  Limits lim;
  lim.star_iterations = opt.cap_iterations;
  json result = json::object();
  std::optional<bool> verified;
  const auto& ring = spec.ring;
  Ideal I = Ideal::ideal(ring, spec.generators);
  std::optional<Polynomial> c;
  if (spec.c) c = parse_polynomial(ring, *spec.c);

  auto finish = [&](int code) {
    if (verified) result["verify"] = *verified ? "ok" : "failed";
    if (opt.format == "json") {
      json doc{{"schema", 1},
               {"command", command},
               {"ring", {{"char", spec.p}, {"vars", spec.vars}, {"order", spec.order_text}}},
               {"result", result}};
      rep.out = doc.dump(2) + "\n";
    } else {
      rep.out = detail::render_text(command, spec, result);
    }
    rep.exit_code = code;
    if (code == kOk && verified && !*verified) rep.exit_code = kInternal;
    return rep;
  };

  try {
    if (opt.format != "text" && opt.format != "json")
      throw Error(ErrorKind::InvalidArgument, "unknown format '" + opt.format + "'");
    if (command == "gb") {
      const auto& G = I.gb(lim);
      result["generators"] = detail::module_json(I, lim);
      if (opt.verify) {
        // every pair of basis elements reduces to zero
        bool ok = true;
        auto el = G.elements();
        for (std::size_t a = 0; a < el.size() && ok; ++a)
          for (std::size_t b = a + 1; b < el.size() && ok; ++b) {
            const auto& la = el[a].lead();
            const auto& lb = el[b].lead();
            Monomial l = la.mono.lcm(lb.mono);
            Polynomial fa = Polynomial::monomial(ring, 1, l / la.mono) * el[a].component(0);
            Polynomial fb = Polynomial::monomial(ring, 1, l / lb.mono) * el[b].component(0);
            ok = normal_form(ModuleVector::scalar(fa - fb), G, lim).is_zero();
          }
        verified = ok;
      }
    } else if (command == "froot") {
      Submodule r = fe_root(I, opt.e, lim);
      result["e"] = opt.e;
      result["generators"] = detail::module_json(r, lim);
      if (opt.verify) verified = module_equal(r, oracle::dense_fe_root(I, opt.e), lim);
    } else if (command == "star") {
      Submodule V = I;
      PolyMatrix U(ring, 1, 1);
      if (spec.u) {
        U(0, 0) = parse_polynomial(ring, *spec.u);
      } else {
        auto pti = global_pti_cm(I, c, opt.seed, lim);
        std::vector<ModuleVector> g = pti.frobenius.A.columns();
        for (std::size_t k = 0; k < pti.frobenius.A.rows(); ++k)
          g.push_back(pti.c.c * ModuleVector::unit(ring, pti.frobenius.A.rows(), k));
        V = Submodule(ring, pti.frobenius.A.rows(), std::move(g));
        U = pti.frobenius.U;
      }
      const unsigned e = spec.u ? opt.e : 1;
      auto st = star_closure_traced(V, U, e, lim);
      result["e"] = e;
      result["generators"] = detail::module_json(st.module, lim);
      result["iterations"] = st.iterations;
      if (opt.verify) verified = oracle::verify_star_minimality(V, U, st.module, e, lim);
    } else if (command == "ext") {
      if (!opt.i_set) throw Error(ErrorKind::InvalidArgument, "ext needs -i");
      auto data = induced_frobenius_matrix(I, opt.i, opt.e, lim);
      result["i"] = opt.i;
      result["e"] = opt.e;
      result["zero"] = data.is_zero;
      result["A"] = detail::matrix_json(data.A);
      result["U"] = detail::matrix_json(data.U);
      if (opt.verify) {
        Submodule target = Submodule::from_matrix(bracket_power(data.A, opt.e));
        verified = contains(target, Submodule::from_matrix(data.U * data.A), lim);
      }
    } else if (command == "tau") {
      auto pti = global_pti_cm(I, c, opt.seed, lim);
      result["generators"] = detail::module_json(pti.Z, lim);
      result["c"] = to_string(pti.c.c);
      result["c_provenance"] = to_string(pti.c.provenance);
      result["h"] = pti.h;
      result["iterations"] = pti.iterations;
      result["validity"] = "parameter test ideal at primes of the Cohen-Macaulay locus";
      if (opt.verify) {
        Submodule V = Submodule::from_matrix(pti.frobenius.A);
        std::vector<ModuleVector> g = V.gens();
        for (std::size_t k = 0; k < pti.frobenius.A.rows(); ++k)
          g.push_back(pti.c.c * ModuleVector::unit(ring, pti.frobenius.A.rows(), k));
        verified = oracle::verify_star_minimality(Submodule(ring, V.rank(), g), pti.frobenius.U,
                                                  pti.star_module, 1, lim);
      }
    } else if (command == "sandwich") {
      auto sw = pti_sandwich(I, c, opt.seed, lim);
      result["lower"] = detail::module_json(sw.lower, lim);
      result["upper"] = detail::module_json(sw.upper, lim);
      result["J"] = detail::module_json(sw.J, lim);
      result["d"] = sw.d;
      result["c"] = to_string(sw.pti.c.c);
      result["exact"] = module_equal(sw.lower, sw.upper, lim);
      if (opt.verify) verified = contains(sw.upper, sw.lower, lim);
    } else if (command == "hsl") {
      if (!opt.j_set) throw Error(ErrorKind::InvalidArgument, "hsl needs -j");
      auto fill = [&](const HSLReport& h) {
        result["j"] = h.j;
        result["eta"] = h.eta >= 0 ? json(h.eta) : json(nullptr);
        json loci = json::array(), chain = json::array();
        for (const auto& l : h.loci) loci.push_back(detail::module_json(l, lim));
        for (const auto& b : h.chain) chain.push_back(detail::module_json(b, lim));
        result["loci"] = loci;
        result["chain"] = chain;
      };
      try {
        fpti::detail::require_proper(I, lim);
        auto res = free_resolution(I, lim);
        auto data = induced_frobenius_matrix(res, ext_presentation(res, opt.j, lim), 1, lim);
        auto h = hsl_chain(data, opt.emax, lim);
        fill(h);
        if (opt.verify) {
          Submodule next = data.is_zero ? h.chain.back()
                                        : sum(Submodule::from_matrix(data.A),
                                              fe_root(image_under(data.U, h.chain.back()), 1, lim));
          verified = module_equal(next, h.chain.back(), lim);
        }
      } catch (const HslCapExceeded& e) {
        fill(e.partial());
        rep.err = e.what();
        return finish(kResourceCap);
      }
    } else if (command == "noncm") {
      result["generators"] = detail::module_json(non_cm_locus(I, lim), lim);
    } else if (command == "finjective") {
      result["generators"] = detail::module_json(f_injective_locus(I, lim), lim);
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown command '" + command + "'");
    }
  } catch (const Error& e) {
    rep.exit_code = exit_code_for(e.kind());
    rep.err = e.what();
    return rep;
  }
  return finish(kOk);
}

/// Parse + run; parse failures map to exit code 1.
inline Report run_text(const std::string& command, const std::string& input, const Options& opt) {
  InputSpec spec;
  try {
    spec = parse_input(input);
  } catch (const Error& e) {
    return Report{exit_code_for(e.kind()), "", e.what()};
  }
  return run(command, spec, opt);
}

}  // namespace fpti::cli

#endif  // FPTI_CLI_HPP
