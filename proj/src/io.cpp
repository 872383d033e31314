#include "kms/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace kms::io {

namespace {

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(Errc::ParseError, std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

}  // namespace

RootDatum datum_from_json(const Json& j) {
  const Json* mat = &j;
  std::vector<std::string> labels;
  if (j.is_object()) {
    if (!j.contains("cartan")) throw Error(Errc::ParseError, "GCM object needs a \"cartan\" field");
    mat = &j.at("cartan");
    if (j.contains("labels")) {
      if (!j.at("labels").is_array()) throw Error(Errc::ParseError, "\"labels\" must be an array of strings");
      for (const auto& l : j.at("labels")) {
        if (!l.is_string()) throw Error(Errc::ParseError, "\"labels\" must be an array of strings");
        labels.push_back(l.get<std::string>());
      }
    }
  }
  if (!mat->is_array()) throw Error(Errc::ParseError, "Cartan matrix must be an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : *mat) {
    if (!r.is_array()) throw Error(Errc::ParseError, "Cartan matrix rows must be arrays");
    std::vector<std::int64_t> row;
    for (const auto& x : r) row.push_back(as_int(x, "Cartan entry"));
    rows.push_back(std::move(row));
  }
  return RootDatum::from_matrix(rows, labels);
}

RootDatum load_datum(const std::string& text) {
  std::string body = text;
  const std::string t = trim(text);
  if (!t.empty() && t.front() != '[' && t.front() != '{') {
    std::ifstream in(t);
    if (!in) throw Error(Errc::ParseError, "cannot read GCM file " + t);
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  Json j;
  try {
    j = Json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("GCM is not valid JSON: ") + e.what());
  }
  return datum_from_json(j);
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  if (trim(s).empty()) return out;
  for (const auto& item : split(s, ',')) {
    std::size_t used = 0;
    std::int64_t x = 0;
    try {
      x = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "not an integer: \"" + item + "\"");
    }
    if (used != item.size()) throw Error(Errc::ParseError, "not an integer: \"" + item + "\"");
    out.push_back(x);
  }
  return out;
}

BaseCoweight parse_coweight(const std::string& s, std::size_t rank) {
  auto n = parse_int_list(s);
  if (n.size() != rank)
    throw Error(Errc::ParseError, "coweight \"" + s + "\" has " + std::to_string(n.size()) + " entries, rank is " +
                                      std::to_string(rank));
  return BaseCoweight{std::move(n), trim(s)};
}

std::vector<BaseCoweight> parse_chain(const std::string& s, std::size_t rank) {
  std::vector<BaseCoweight> out;
  if (rank == 1 && s.find(';') == std::string::npos) {
    for (auto x : parse_int_list(s)) out.push_back(BaseCoweight{{x}, std::to_string(x)});
    return out;
  }
  for (const auto& item : split(s, ';'))
    if (!item.empty()) out.push_back(parse_coweight(item, rank));
  return out;
}

std::optional<Rational> parse_q(const std::string& s) {
  if (trim(s) == "formal") return std::nullopt;
  return parse_rational(trim(s));
}

Json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const LatticeVec& x) { return x.vec(); }

Json to_json(const VPoly& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(to_json(x));
  return Json{{"min_power", p.is_zero() ? 0 : p.low()}, {"coeff", c}};
}

Json to_json(const Classification& c) {
  Json blocks = Json::array();
  for (const auto& b : c.blocks)
    blocks.push_back(Json{{"kind", kind_name(b.kind)}, {"indices", b.indices}, {"determinant", to_json(b.determinant)}});
  return Json{{"blocks", blocks}};
}

Json to_json(const RootTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.roots) rows.push_back(Json{{"root", to_json(r.root)}, {"mult", r.mult}, {"real", r.real}});
  return rows;
}

Json to_json(const WeylElement& w) {
  return Json{{"word", w.word()}, {"length", w.length()}, {"offset", to_json(w.normal_form())}};
}

Json to_json(const AlgebraElement& e) {
  Json terms = Json::array();
  for (const auto& [off, c] : e.terms()) {
    Json t = to_json(c);
    terms.push_back(Json{{"offset", to_json(off)}, {"min_power", t["min_power"]}, {"coeff", t["coeff"]}});
  }
  return Json{{"base", Json{{"pairings", e.base().pairings}}}, {"terms", terms}};
}

Json to_json(const TruncatedSeries& s, const std::optional<Rational>& q) {
  Json terms = Json::array();
  if (q) {
    for (const auto& [off, c] : s.evaluate_at(*q))
      if (c != 0) terms.push_back(Json{{"offset", to_json(off)}, {"coeff", to_json(c)}});
  } else {
    for (const auto& [off, c] : s.element.terms()) terms.push_back(Json{{"offset", to_json(off)}, {"coeff", to_json(c)}});
  }
  Json out{{"base", Json{{"pairings", s.element.base().pairings}}}, {"depth", s.depth}};
  if (!q) out["denominator"] = to_json(s.denominator);
  out["terms"] = terms;
  out["exact"] = s.exact;
  out["omitted_factors"] = s.omitted_factors;
  return out;
}

Json to_json(const StabilizationReport& r) {
  Json chain = Json::array();
  for (const auto& c : r.chain) chain.push_back(c.pairings);
  Json probes = Json::array();
  for (std::size_t p = 0; p < r.probes.size(); ++p) {
    Json trace = Json::array();
    for (const auto& c : r.traces[p]) trace.push_back(to_json(c));
    Json entry{{"offset", to_json(r.probes[p])}, {"trace", trace}};
    entry["stable_from"] = r.stable_from[p] ? Json(*r.stable_from[p]) : Json(nullptr);
    probes.push_back(entry);
  }
  Json out{{"depth", r.depth}, {"chain", chain}, {"probes", probes}, {"stabilized", r.stabilized()}};
  out["first_stable_index"] = r.first_stable_index ? Json(*r.first_stable_index) : Json(nullptr);
  out["matches_upsilon"] = r.matches_upsilon ? Json(*r.matches_upsilon) : Json(nullptr);
  out["notes"] = r.notes;
  return out;
}

Json to_json(const padic::CosetCensus& c) {
  Json census = Json::object();
  for (auto it = c.census.rbegin(); it != c.census.rend(); ++it) census[std::to_string(it->first)] = it->second;
  return Json{{"q", c.q}, {"lambda", c.lambda}, {"precision", c.precision}, {"census", census}, {"total", c.total}};
}

Json to_json(const padic::IwahoriCensus& c) {
  Json pieces = Json::object();
  for (const auto& [label, piece] : c.pieces) pieces[label] = to_json(piece);
  return Json{{"spherical", to_json(c.spherical)},
              {"pieces", pieces},
              {"sums_match", c.sums_match},
              {"length_bound_ok", c.length_bound_ok}};
}

}  // namespace kms::io
