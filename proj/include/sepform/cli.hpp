#pragma once

// Command driver behind the `sepform` executable: parses inputs, runs one
// stage or the full pipeline, and builds a JSON report.

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sepform/oracle.hpp"
#include "sepform/parse.hpp"
#include "sepform/sepform.hpp"

namespace sepform::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalid = 2;

/// Largest modulus for which --verify enumerates Z_mu^2.
inline constexpr std::uint64_t kVerifyEnumerationLimit = 2000;

struct SystemInput {
  std::optional<BivarPoly<BigInt>> P, Q, H;
  std::string source_format = "text";  // "text" or "json"
  std::optional<std::uint64_t> seed;
  Strategy mode = Strategy::deterministic;
  SearchConfig cfg;
  bool verify = false;
};

struct Report {
  int exit_code = kExitOk;
  json body;
};

/// [[c, i, j], ...] with c an integer or a decimal string; i is the x
/// exponent and j the y exponent.
inline BivarPoly<BigInt> parse_poly_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial JSON must be an array of [c, i, j] triples");
  std::vector<Term> terms;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const json& t = j[k];
    if (!t.is_array() || t.size() != 3) throw ParseError("expected a [c, i, j] triple", k);
    BigInt c;
    if (t[0].is_string()) {
      const std::string s = t[0].get<std::string>();
      if (c.set_str(s, 10) != 0) throw ParseError("malformed integer coefficient '" + s + "'", k);
    } else if (t[0].is_number_integer()) {
      c = BigInt(t[0].dump());
    } else {
      throw ParseError("coefficient must be an integer or a decimal string", k);
    }
    if (!t[1].is_number_unsigned() || !t[2].is_number_unsigned()) {
      throw ParseError("exponents must be nonnegative integers", k);
    }
    terms.push_back({c, t[1].get<std::size_t>(), t[2].get<std::size_t>()});
  }
  return from_terms(terms);
}

/// Text in the v1 grammar, or a JSON triple array when it starts with '['.
inline BivarPoly<BigInt> parse_poly_arg(const std::string& text, const Variables& vars = {}) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    return parse_poly_json(j);
  }
  return parse_poly(text, vars);
}

/// Curve input accepts either t or x as the first variable.
inline BivarPoly<BigInt> parse_curve_arg(const std::string& text) {
  try {
    return parse_poly_arg(text, Variables{"t", "y"});
  } catch (const ParseError&) {
    return parse_poly_arg(text, Variables{"x", "y"});
  }
}

inline json poly_json(const BivarPoly<BigInt>& f, const std::string& vx = "x") { return to_string(f, vx, "y"); }
inline json upoly_json(const Poly<BigInt>& f, const std::string& v = "x") { return to_string(f, v); }

inline json strings(const std::vector<std::uint64_t>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

inline const char* mode_name(Strategy s) { return s == Strategy::deterministic ? "deterministic" : "las-vegas"; }

namespace detail {

inline const BivarPoly<BigInt>& need(const std::optional<BivarPoly<BigInt>>& p, const char* flag) {
  if (!p) throw InvalidInput(std::string("missing required option ") + flag);
  return *p;
}

inline std::string form_text(long long c) {
  if (c == 0) return "x";
  if (c == 1) return "x + y";
  if (c == -1) return "x - y";
  return c > 0 ? "x + " + std::to_string(c) + "*y" : "x - " + std::to_string(-c) + "*y";
}

inline json lucky_json(const LuckyPrime& lp) {
  return {{"mu", lp.mu},
          {"N", lp.N},
          {"N_mu", lp.N_mu},
          {"lower_bound", lp.lower_bound},
          {"candidates", lp.candidates},
          {"skipped", strings(lp.skipped)}};
}

struct SeedChoice {
  std::uint64_t seed;
  std::string source;
};

inline SeedChoice choose_seed(const SystemInput& in) {
  if (in.seed) return {*in.seed, "flag"};
  if (auto s = seed_from_env()) return {*s, "env"};
  std::random_device rd;
  const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  return {s, "random"};
}

inline json run_sepform(const SystemInput& in, bool& verified_ok) {
  const auto& P = need(in.P, "-P");
  const auto& Q = need(in.Q, "-Q");
  std::optional<Rng> rng;
  json out;
  out["command"] = "sepform";
  out["mode"] = mode_name(in.mode);
  if (in.mode == Strategy::las_vegas) {
    const auto choice = choose_seed(in);
    rng.emplace(choice.seed);
    out["seed"] = choice.seed;
    out["seed_source"] = choice.source;
  }
  const auto r = separating_form_full(P, Q, in.mode, rng ? &*rng : nullptr, in.cfg);
  const auto& f = r.form;
  out["a"] = f.a;
  out["alpha"] = f.alpha;
  out["coefficient"] = f.coefficient();
  out["form"] = form_text(f.coefficient());
  out["mu"] = f.mu;
  out["N"] = f.N;
  out["N_a"] = f.N_a;
  out["a_bound"] = f.a_bound;
  if (in.mode == Strategy::las_vegas) out["a_range"] = f.a_range;
  out["candidates"] = f.candidates;
  out["rejected"] = f.rejected;
  out["curve"] = {{"H", poly_json(r.curve.H, "t")},
                  {"deg_H", total_degree(r.curve.H).value()},
                  {"d", r.curve.d},
                  {"L", upoly_json(r.curve.L, "s")}};
  out["lucky_prime"] = lucky_json(r.lucky);
  out["timings"] = {{"reduction", f.timings.reduction},
                    {"count", f.timings.count},
                    {"lucky_prime", f.timings.lucky_prime},
                    {"form", f.timings.form}};
  const bool unseeded = out.contains("seed_source") && out["seed_source"] == "random";
  if (in.verify || unseeded) {
    json v;
    const BivarPoly<BigInt> Hy = partial_y(r.curve.H);
    v["lucky_prime"] = verify_lucky_prime(r.curve.H, r.lucky);
    v["form_mod_mu"] = verify_form_mod(r.curve.H, Hy, f);
    v["a_within_bound"] = static_cast<std::uint64_t>(f.a) <= f.a_bound;
    bool ok = v["lucky_prime"].get<bool>() && v["form_mod_mu"].get<bool>() && v["a_within_bound"].get<bool>();
    if (!in.verify) {
      v["ok"] = ok;
      verified_ok = ok;
      out["certificate"] = v;
      return out;
    }
    if (f.mu <= kVerifyEnumerationLimit) {
      const auto pts = oracle::enumerate_solutions_modp(reduce_mod(P, f.mu), reduce_mod(Q, f.mu));
      const bool inj = oracle::check_separating(pts, f.a, f.alpha);
      v["enumerated_points"] = pts.points.size();
      v["injective_on_enumerated_points"] = inj;
      ok = ok && inj;
    }
    v["ok"] = ok;
    verified_ok = ok;
    out["verification"] = v;
  }
  return out;
}

inline json run_critcount(const SystemInput& in, bool& verified_ok) {
  const auto& H = need(in.H, "-H");
  std::optional<Rng> rng;
  json out;
  out["command"] = "critcount";
  out["mode"] = mode_name(in.mode);
  GcdContext ctx;
  if (in.mode == Strategy::las_vegas) {
    const auto choice = choose_seed(in);
    rng.emplace(choice.seed);
    ctx = GcdContext{Strategy::las_vegas, &*rng};
    out["seed"] = choice.seed;
  }
  const auto cc = count_critical_points_detail(H, ctx, in.cfg.threads > 1);
  out["count"] = cc.count;
  out["degree_with_square"] = cc.degree_with_square;
  out["degree_plain"] = cc.degree_plain;
  if (in.verify) {
    json v;
    bool ok = true;
    if (H.deg() >= 2) {
      // Decomposition degrees through the full subresultant chain.
      const BivarPoly<BigInt> Hy = partial_y(H);
      const std::size_t a = triangular_decomposition(Hy * Hy, H).degree();
      const std::size_t b = triangular_decomposition(H, Hy).degree();
      v["tridec_count"] = a - b;
      ok = a - b == cc.count;
    }
    v["ok"] = ok;
    verified_ok = ok;
    out["verification"] = v;
  }
  return out;
}

inline json run_tridec(const SystemInput& in, bool& verified_ok) {
  BivarPoly<BigInt> P = need(in.P, "-P"), Q = need(in.Q, "-Q");
  json out;
  out["command"] = "tridec";
  bool swapped = false;
  if (P.deg() < Q.deg()) {
    std::swap(P, Q);
    swapped = true;
  }
  out["swapped"] = swapped;
  const auto T = triangular_decomposition(P, Q);
  json entries = json::array();
  for (const auto& e : T.entries) {
    entries.push_back({{"i", e.index}, {"A", upoly_json(e.A)}, {"B", poly_json(e.B)}});
  }
  out["entries"] = entries;
  json chain = json::array();
  for (const auto& g : T.gcd_chain) chain.push_back(upoly_json(g));
  out["gcd_chain"] = chain;
  out["degree"] = T.degree();
  if (in.verify) {
    json v;
    const auto dd = decomposition_degree(P, Q);
    Poly<BigInt> prod = Poly<BigInt>::constant(BigInt(1));
    bool coprime = true;
    for (std::size_t i = 0; i < T.entries.size(); ++i) {
      prod = prod * T.entries[i].A;
      for (std::size_t j = i + 1; j < T.entries.size(); ++j)
        coprime = coprime && gcd_int(T.entries[i].A, T.entries[j].A).deg() == 0;
    }
    const bool sqfree = prod.deg() == 0 || squarefree_part_int(prod).deg() == prod.deg();
    v["algorithm3_degree"] = dd.value;
    v["pairwise_coprime"] = coprime;
    v["product_squarefree"] = sqfree;
    v["ok"] = dd.value == T.degree() && coprime && sqfree;
    verified_ok = v["ok"].get<bool>();
    out["verification"] = v;
  }
  return out;
}

inline json run_luckyprime(const SystemInput& in, bool& verified_ok) {
  const auto& H = need(in.H, "-H");
  json out;
  out["command"] = "luckyprime";
  out["mode"] = mode_name(in.mode);
  if (!H.leading().is_constant()) {
    throw NonConstantLeadingCoefficient("Lc_y(H) must be a nonzero constant; shear H first");
  }
  LuckyPrime lp;
  if (in.mode == Strategy::las_vegas) {
    const auto choice = choose_seed(in);
    Rng rng(choice.seed);
    out["seed"] = choice.seed;
    lp = lasvegas_lucky_prime(H, rng, in.cfg);
  } else {
    lp = find_lucky_prime(H, in.cfg);
  }
  out.update(lucky_json(lp));
  if (in.verify) {
    const bool ok = verify_lucky_prime(H, lp);
    out["verification"] = {{"ok", ok}};
    verified_ok = ok;
  }
  return out;
}

inline json run_subres(const SystemInput& in, bool& verified_ok) {
  BivarPoly<BigInt> P = need(in.P, "-P"), Q = need(in.Q, "-Q");
  json out;
  out["command"] = "subres";
  bool swapped = false;
  if (P.deg() < Q.deg()) {
    std::swap(P, Q);
    swapped = true;
  }
  out["swapped"] = swapped;
  const auto seq = subres_sequence(P, Q);
  out["p"] = seq.p;
  out["q"] = seq.q;
  out["top_scaled"] = seq.top_scaled;
  json S = json::array(), s = json::array();
  for (std::size_t i = 0; i <= seq.q; ++i) {
    S.push_back(poly_json(seq.S[i]));
    s.push_back(upoly_json(seq.s[i]));
  }
  out["S"] = S;
  out["s"] = s;
  out["resultant"] = upoly_json(seq.s[0]);
  if (in.verify) {
    bool ok = true;
    if (seq.p + seq.q <= 10) {
      for (std::size_t i = 0; i <= seq.last_determinantal(); ++i)
        ok = ok && oracle::sylvester_subresultant(P, Q, i) == seq.S[i];
    }
    const auto pc = principal_coeffs(P, Q);
    for (std::size_t i = 0; i <= seq.q; ++i) ok = ok && pc[i] == seq.s[i];
    out["verification"] = {{"ok", ok}, {"oracle_used", seq.p + seq.q <= 10}};
    verified_ok = ok;
  }
  return out;
}

}  // namespace detail

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"sepform", "critcount", "tridec", "luckyprime", "subres"};
  return c;
}

/// Runs one command. Invalid input yields exit code 2, internal failures 1.
inline Report run(const std::string& command, const SystemInput& in) {
  Report rep;
  bool verified_ok = true;
  try {
    if (command == "sepform") {
      rep.body = detail::run_sepform(in, verified_ok);
    } else if (command == "critcount") {
      rep.body = detail::run_critcount(in, verified_ok);
    } else if (command == "tridec") {
      rep.body = detail::run_tridec(in, verified_ok);
    } else if (command == "luckyprime") {
      rep.body = detail::run_luckyprime(in, verified_ok);
    } else if (command == "subres") {
      rep.body = detail::run_subres(in, verified_ok);
    } else {
      throw InvalidInput("unknown command '" + command + "'");
    }
    rep.exit_code = verified_ok ? kExitOk : kExitInternal;
    if (!verified_ok) rep.body["error"] = "verification failed";
  } catch (const InvalidInput& e) {
    rep.exit_code = kExitInvalid;
    rep.body = {{"command", command}, {"error", e.what()}, {"kind", "invalid_input"}};
  } catch (const BudgetExhausted& e) {
    rep.exit_code = kExitInternal;
    rep.body = {{"command", command}, {"error", e.what()}, {"kind", "budget_exhausted"}};
  } catch (const std::exception& e) {
    rep.exit_code = kExitInternal;
    rep.body = {{"command", command}, {"error", e.what()}, {"kind", "internal"}};
  }
  return rep;
}

}  // namespace sepform::cli
