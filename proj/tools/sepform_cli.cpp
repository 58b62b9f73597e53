#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "sepform/cli.hpp"

namespace {

using sepform::cli::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sepform::InvalidInput("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// {"P": ..., "Q": ..., "H": ...}; each value is a text polynomial or a
// triple array.
void load_input_file(const std::string& path, sepform::cli::SystemInput& in) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw sepform::ParseError(std::string("invalid JSON input: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw sepform::InvalidInput("input file must hold a JSON object");
  auto take = [&](const char* key, bool curve) -> std::optional<sepform::BivarPoly<sepform::BigInt>> {
    if (!doc.contains(key)) return std::nullopt;
    const json& v = doc[key];
    if (v.is_string()) {
      return curve ? sepform::cli::parse_curve_arg(v.get<std::string>())
                   : sepform::cli::parse_poly_arg(v.get<std::string>());
    }
    in.source_format = "json";
    return sepform::cli::parse_poly_json(v);
  };
  if (auto p = take("P", false)) in.P = p;
  if (auto q = take("Q", false)) in.Q = q;
  if (auto h = take("H", true)) in.H = h;
}

std::string human(const json& r) {
  std::ostringstream os;
  const std::string cmd = r.value("command", "");
  if (r.contains("error")) {
    os << "error: " << r["error"].get<std::string>() << "\n";
    return os.str();
  }
  if (cmd == "sepform") {
    os << "separating form: " << r["form"].get<std::string>() << "\n"
       << "  alpha = " << r["alpha"] << ", a = " << r["a"] << ", mu = " << r["mu"] << "\n"
       << "  N = " << r["N"] << ", candidates = " << r["candidates"] << ", rejected = " << r["rejected"].size()
       << "\n"
       << "  curve H(t, y) = " << r["curve"]["H"].get<std::string>() << "\n";
    if (r.contains("seed")) os << "  seed = " << r["seed"] << " (" << r["seed_source"].get<std::string>() << ")\n";
  } else if (cmd == "critcount") {
    os << "critical points: " << r["count"] << "\n";
  } else if (cmd == "luckyprime") {
    os << "lucky prime: " << r["mu"] << " (N = " << r["N"] << ", candidates = " << r["candidates"] << ")\n";
  } else if (cmd == "tridec") {
    for (const auto& e : r["entries"]) {
      os << "i = " << e["i"] << ": A = " << e["A"].get<std::string>() << ", B = " << e["B"].get<std::string>()
         << "\n";
    }
    os << "degree: " << r["degree"] << "\n";
  } else if (cmd == "subres") {
    for (std::size_t i = 0; i < r["S"].size(); ++i)
      os << "S_" << i << " = " << r["S"][i].get<std::string>() << "\n";
  }
  if (r.contains("verification")) os << "verified: " << (r["verification"]["ok"].get<bool>() ? "yes" : "NO") << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separating linear forms for bivariate integer systems"};
  app.require_subcommand(1);

  std::string P_text, Q_text, H_text, input_path;
  bool as_json = false, verify = false, det = false, lv = false;
  std::uint64_t seed = 0;
  std::size_t batch = 64, max_iter = 0;
  unsigned threads = 1;

  auto add_common = [&](CLI::App* c, bool system, bool curve, bool modes) {
    if (system) {
      c->add_option("-P", P_text, "first polynomial in x, y (text or [[c,i,j],...])");
      c->add_option("-Q", Q_text, "second polynomial in x, y");
    }
    if (curve) c->add_option("-H", H_text, "curve polynomial in t, y (or x, y)");
    c->add_option("--input", input_path, "JSON file with P, Q and/or H");
    c->add_flag("--json", as_json, "print the JSON report");
    c->add_flag("--verify", verify, "re-check the result independently");
    if (modes) {
      auto* d = c->add_flag("--det", det, "deterministic mode (default)");
      auto* l = c->add_flag("--las-vegas", lv, "Las-Vegas mode");
      d->excludes(l);
      c->add_option("--seed", seed, "RNG seed for Las-Vegas mode (default: SEPFORM_SEED or random)");
      c->add_option("--prime-batch", batch, "candidate primes per batch")->check(CLI::PositiveNumber);
      c->add_option("--max-iterations", max_iter, "cap on candidates (0 = none)");
      c->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    }
  };

  auto* c_sep = app.add_subcommand("sepform", "compute a separating linear form of {P, Q}");
  add_common(c_sep, true, false, true);
  auto* c_crit = app.add_subcommand("critcount", "count critical points of H w.r.t. y");
  add_common(c_crit, false, true, true);
  auto* c_tri = app.add_subcommand("tridec", "subresultant triangular decomposition of {P, Q}");
  add_common(c_tri, true, false, false);
  auto* c_lucky = app.add_subcommand("luckyprime", "find a lucky prime for H");
  add_common(c_lucky, false, true, true);
  auto* c_sub = app.add_subcommand("subres", "subresultant sequence of P and Q w.r.t. y");
  add_common(c_sub, true, false, false);

  CLI11_PARSE(app, argc, argv);

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  sepform::cli::SystemInput in;
  sepform::cli::Report rep;
  try {
    if (!input_path.empty()) load_input_file(input_path, in);
    if (!P_text.empty()) in.P = sepform::cli::parse_poly_arg(P_text);
    if (!Q_text.empty()) in.Q = sepform::cli::parse_poly_arg(Q_text);
    if (!H_text.empty()) in.H = sepform::cli::parse_curve_arg(H_text);
    for (const auto* t : {&P_text, &Q_text, &H_text}) {
      if (!t->empty() && t->find('[') != std::string::npos) in.source_format = "json";
    }
    in.mode = lv ? sepform::Strategy::las_vegas : sepform::Strategy::deterministic;
    if (auto* o = chosen->get_option_no_throw("--seed"); o && o->count() > 0) in.seed = seed;
    in.cfg.prime_batch = batch;
    in.cfg.max_iterations = max_iter;
    in.cfg.threads = threads;
    in.verify = verify;
    rep = sepform::cli::run(command, in);
  } catch (const sepform::InvalidInput& e) {
    rep.exit_code = sepform::cli::kExitInvalid;
    rep.body = {{"command", command}, {"error", e.what()}, {"kind", "invalid_input"}};
  }
  if (!rep.body.contains("error")) rep.body["input_format"] = in.source_format;

  if (as_json) {
    std::cout << rep.body.dump(2) << "\n";
  } else if (rep.body.contains("error")) {
    std::cerr << human(rep.body);
  } else {
    std::cout << human(rep.body);
  }
  return rep.exit_code;
}
