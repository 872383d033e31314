#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "kms/checks.hpp"
#include "kms/dl_algebra.hpp"
#include "kms/io.hpp"
#include "kms/version.hpp"

using kms::io::Json;

namespace {

struct Config {
  std::string command;
  std::string gcm;
  std::optional<std::int64_t> depth;
  std::optional<std::size_t> ball;
  std::string q;
  std::string lambda;
  std::string chain;
  std::string word;
  std::string v = "1";
  std::optional<int> precision;
  std::uint64_t seed = kms::checks::SuiteOptions{}.seed;
  std::string out;
  bool timing = false;
};

Json echo(const Config& c) {
  Json j{{"command", c.command}};
  if (!c.gcm.empty()) j["gcm"] = c.gcm;
  if (c.depth) j["depth"] = *c.depth;
  if (c.ball) j["ball"] = *c.ball;
  if (!c.q.empty()) j["q"] = c.q;
  if (!c.lambda.empty()) j["lambda"] = c.lambda;
  if (!c.chain.empty()) j["chain"] = c.chain;
  if (!c.word.empty()) j["word"] = c.word;
  if (c.command == "cfunction") j["v"] = c.v;
  if (c.precision) j["precision"] = *c.precision;
  if (c.command == "verify-all") j["seed"] = c.seed;
  return j;
}

kms::RootDatum datum(const Config& c) {
  if (c.gcm.empty()) throw kms::Error(kms::Errc::ParseError, "--gcm is required for " + c.command);
  return kms::io::load_datum(c.gcm);
}

std::int64_t need_depth(const Config& c) {
  if (!c.depth) throw kms::Error(kms::Errc::ParseError, "--depth is required for " + c.command);
  return *c.depth;
}

std::vector<std::size_t> parse_word(const std::string& s) {
  std::vector<std::size_t> w;
  for (auto x : kms::io::parse_int_list(s)) {
    if (x < 0) throw kms::Error(kms::Errc::ParseError, "word letters are nonnegative indices");
    w.push_back(static_cast<std::size_t>(x));
  }
  return w;
}

std::optional<kms::Rational> q_or_formal(const Config& c) { return c.q.empty() ? std::nullopt : kms::io::parse_q(c.q); }

int residue_q(const Config& c) {
  const auto q = q_or_formal(c);
  if (!q || denominator(*q) != 1) throw kms::Error(kms::Errc::ParseError, "--q must be an integer residue field size");
  return static_cast<int>(numerator(*q));
}

int precision(const Config& c) {
  if (!c.precision) throw kms::Error(kms::Errc::ParseError, "--precision is required for " + c.command);
  return *c.precision;
}

int lambda_m(const Config& c) {
  const auto n = kms::io::parse_int_list(c.lambda);
  if (n.size() != 1) throw kms::Error(kms::Errc::ParseError, "--lambda takes a single integer m for SL2");
  return static_cast<int>(n[0]);
}

Json element_json(const kms::AlgebraElement& e, const std::optional<kms::Rational>& q) {
  if (!q) return kms::io::to_json(e);
  Json terms = Json::array();
  for (const auto& [off, c] : e.evaluate_at(*q)) terms.push_back(Json{{"offset", kms::io::to_json(off)}, {"coeff", kms::io::to_json(c)}});
  return Json{{"base", Json{{"pairings", e.base().pairings}}}, {"terms", terms}};
}

Json run(const Config& c, bool& ok) {
  const std::string& cmd = c.command;
  if (cmd == "classify") return kms::io::to_json(datum(c).classification);
  if (cmd == "roots") {
    const auto d = datum(c);
    return Json{{"height_bound", need_depth(c)}, {"roots", kms::io::to_json(kms::roots_up_to_height(d.cartan, need_depth(c)))}};
  }
  if (cmd == "weyl-ball") {
    if (!c.ball) throw kms::Error(kms::Errc::ParseError, "--ball is required for weyl-ball");
    const kms::WeylGroup w(datum(c).cartan);
    Json rows = Json::array();
    for (const auto& e : w.ball(*c.ball)) rows.push_back(kms::io::to_json(e));
    return rows;
  }
  if (cmd == "dl-apply" || cmd == "integral") {
    const auto d = datum(c);
    const kms::DemazureLusztig dl(d.cartan);
    const auto lam = kms::io::parse_coweight(c.lambda, d.rank());
    const auto word = parse_word(c.word);
    const auto e = cmd == "integral" ? dl.integral_I(dl.weyl().from_word(word), lam)
                                     : dl.apply_T_w(word, kms::AlgebraElement::monomial(lam, kms::CorootVector(d.rank())));
    return element_json(e, q_or_formal(c));
  }
  if (cmd == "satake") {
    const auto d = datum(c);
    kms::SatakeOptions opts;
    opts.depth = c.depth;
    opts.ball_bound = c.ball;
    return kms::io::to_json(kms::satake_normalized(d, kms::io::parse_coweight(c.lambda, d.rank()), opts), q_or_formal(c));
  }
  if (cmd == "upsilon") return kms::io::to_json(kms::upsilon(datum(c), need_depth(c)), q_or_formal(c));
  if (cmd == "gk-shift") {
    const auto d = datum(c);
    const auto g0 = kms::upsilon(d, need_depth(c));
    return kms::io::to_json(kms::gk_shift(kms::io::parse_coweight(c.lambda, d.rank()), g0), q_or_formal(c));
  }
  if (cmd == "approx-check") {
    const auto d = datum(c);
    const auto rep = kms::approximation_check(d, kms::io::parse_chain(c.chain, d.rank()), need_depth(c));
    Json j = kms::io::to_json(rep);
    if (const auto q = q_or_formal(c)) {
      Json values = Json::array();
      for (const auto& trace : rep.traces) {
        Json row = Json::array();
        for (const auto& p : trace) row.push_back(kms::io::to_json(p.at_inverse_q(*q)));
        values.push_back(row);
      }
      j["evaluated_traces"] = values;
    }
    ok = rep.matches_upsilon != false;
    return j;
  }
  if (cmd == "cfunction") {
    const auto d = datum(c);
    const auto q = q_or_formal(c);
    if (!q) throw kms::Error(kms::Errc::ParseError, "cfunction needs a numeric --q");
    std::vector<kms::Rational> vals;
    for (const auto& item : kms::io::parse_int_list(c.v)) vals.emplace_back(item);
    const auto coroots = kms::finite_positive_roots(d.cartan.transpose());
    if (vals.size() != 1 && vals.size() != coroots.size())
      throw kms::Error(kms::Errc::ParseError, "--v needs 1 or " + std::to_string(coroots.size()) + " values");
    auto v = [&](const kms::CorootVector& a) {
      if (vals.size() == 1) return vals[0];
      for (std::size_t k = 0; k < coroots.size(); ++k)
        if (coroots[k] == a) return vals[k];
      throw kms::Error(kms::Errc::InvalidParameter, "no value for coroot " + a.str());
    };
    Json cor = Json::array();
    for (const auto& a : coroots) cor.push_back(kms::io::to_json(a));
    return Json{{"positive_coroots", cor}, {"value", kms::io::to_json(kms::finite_cfunction(d, v, *q))}};
  }
  if (cmd == "oracle-spherical") return kms::io::to_json(kms::padic::spherical_census(lambda_m(c), precision(c), residue_q(c)));
  if (cmd == "oracle-gk") return kms::io::to_json(kms::padic::gk_census(static_cast<int>(need_depth(c)), precision(c), residue_q(c)));
  if (cmd == "oracle-iwahori") {
    const auto census = kms::padic::iwahori_census(lambda_m(c), precision(c), residue_q(c));
    Json j = kms::io::to_json(census);
    ok = census.sums_match && census.length_bound_ok;
    return j;
  }
  if (cmd == "verify-all") {
    kms::checks::SuiteOptions opts;
    opts.seed = c.seed;
    Json rows = Json::array();
    for (const auto& r : kms::checks::run_suite(opts)) {
      ok = ok && r.passed;
      Json row{{"id", r.id}, {"name", r.name}, {"passed", r.passed}};
      if (!r.passed) row["diff"] = r.detail;
      if (c.timing) row["seconds"] = r.seconds;
      rows.push_back(row);
    }
    return Json{{"checks", rows}, {"all_passed", ok}};
  }
  throw kms::Error(kms::Errc::ParseError, "unknown command " + cmd);
}

void emit(const Json& doc, const std::string& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw kms::Error(kms::Errc::ParseError, "cannot write " + out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kac-Moody spherical functions, Demazure-Lusztig operators and an SL2 coset oracle"};
  app.set_version_flag("--version", std::string(kms::kVersion));
  app.require_subcommand(1);
  Config c;

  struct Command {
    const char* name;
    const char* help;
    std::vector<std::string> flags;
  };
  const std::vector<Command> commands{
      {"classify", "classify a GCM into finite/affine/indefinite blocks", {"gcm"}},
      {"roots", "positive roots with multiplicities up to height --depth", {"gcm", "depth"}},
      {"weyl-ball", "Weyl group elements of length <= --ball", {"gcm", "ball"}},
      {"dl-apply", "apply T_w for a reduced --word to e^lambda", {"gcm", "word", "lambda", "q"}},
      {"integral", "I_{w,lambda} for dominant regular lambda", {"gcm", "word", "lambda", "q"}},
      {"satake", "normalized Satake series from Macdonald's formula", {"gcm", "lambda", "depth", "ball", "q"}},
      {"upsilon", "Gindikin-Karpelevich product truncated at --depth", {"gcm", "depth", "q"}},
      {"gk-shift", "Upsilon rebased onto lambda", {"gcm", "lambda", "depth", "q"}},
      {"approx-check", "stabilization of Satake coefficients along a chain", {"gcm", "chain", "depth", "q"}},
      {"cfunction", "Macdonald's finite c-function", {"gcm", "q", "v"}},
      {"oracle-spherical", "SL2 spherical coset census", {"lambda", "precision", "q"}},
      {"oracle-gk", "SL2 Gindikin-Karpelevich coset census up to class -depth", {"depth", "precision", "q"}},
      {"oracle-iwahori", "SL2 Iwahori refinement of the spherical census", {"lambda", "precision", "q"}},
      {"verify-all", "run the acceptance checks", {"seed"}},
  };
  for (const auto& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->callback([&c, name = std::string(s.name)] { c.command = name; });
    for (const auto& f : s.flags) {
      if (f == "gcm") sub->add_option("--gcm", c.gcm, "GCM as inline JSON or a file path");
      if (f == "depth") sub->add_option("--depth", c.depth, "window depth D");
      if (f == "ball") sub->add_option("--ball", c.ball, "length bound L");
      if (f == "q") sub->add_option("--q", c.q, "exact rational q or \"formal\"");
      if (f == "lambda") sub->add_option("--lambda", c.lambda, "pairings n1,n2,... (SL2 oracle: m)");
      if (f == "chain") sub->add_option("--chain", c.chain, "chain of coweights, ';'-separated for rank > 1");
      if (f == "word") sub->add_option("--word", c.word, "reduced word as indices i1,i2,...");
      if (f == "v") sub->add_option("--v", c.v, "integer v values per positive coroot, or one constant");
      if (f == "precision") sub->add_option("--precision", c.precision, "t-adic precision N");
      if (f == "seed") sub->add_option("--seed", c.seed, "random seed for property checks");
    }
    sub->add_option("--out", c.out, "write the JSON document to this path");
    sub->add_flag("--timing", c.timing, "include wall-clock timing (output is then not reproducible)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Json doc{{"tool", "kms"}, {"version", kms::kVersion}, {"config", echo(c)}};
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  try {
    doc["result"] = run(c, ok);
  } catch (const kms::Error& e) {
    doc["error"] = Json{{"code", std::string(kms::errc_name(e.code()))}, {"message", e.what()}};
    std::cerr << "kms: " << e.what() << "\n";
    std::cout << doc.dump(2) << "\n";
    return 2;
  }
  if (c.timing)
    doc["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  try {
    emit(doc, c.out);
  } catch (const kms::Error& e) {
    std::cerr << "kms: " << e.what() << "\n";
    return 2;
  }
  if (!ok) std::cerr << "kms: check failed\n";
  return ok ? 0 : 1;
}
