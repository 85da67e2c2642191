// aw: command-line front end for the Askey-Wilson kernel.
//
//   aw <command> [--a R] [--b R] [--c R] [--d R] (--u R | --q R)
//                [--n N | --n LO..HI] [--x F] [--backend exact|float]
//                [--precision BITS] [--tolerance F] [--format csv|json]
//                [--seed N] [--check NAME]
//
// Exit status: 0 on success or PASS, 1 on FAIL, 2 on usage errors.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aw/awcalc.hpp"
#include "aw/families.hpp"
#include "aw/structure.hpp"
#include "aw/zeros.hpp"

namespace {

using aw::Rational;

constexpr int kMaxDegree = 32;
constexpr int kDigits = 12;
constexpr int kTableDigits = 9;
constexpr const char* kPrecisionEnv = "AW_PRECISION";

struct Options {
  std::string command;
  std::optional<std::string> a, b, c, d, u, q, x;
  std::optional<std::string> n;
  std::optional<std::string> backend;
  std::optional<unsigned> precision;
  std::optional<double> tolerance;
  std::string format = "csv";
  unsigned long seed = 1;
  std::optional<std::string> check;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string status = "OK";
};

/// Parses "p/q", integers and decimal or scientific notation into an exact
/// rational. Decimal strings are exact rationals, so nothing is lost.
Rational parse_rational(const std::string& text, const char* what) {
  const auto fail = [&]() -> Rational {
    throw aw::UsageError(std::string("cannot parse --") + what + " value '" + text + "'");
  };
  if (text.empty()) return fail();
  if (text.find('/') != std::string::npos) {
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0) return fail();
    if (r.get_den() == 0) return fail();
    r.canonicalize();
    return r;
  }
  std::string mant = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string::npos) {
    mant = text.substr(0, e);
    try {
      std::size_t used = 0;
      exponent = std::stol(text.substr(e + 1), &used);
      if (used != text.size() - e - 1) return fail();
    } catch (const std::exception&) {
      return fail();
    }
  }
  bool negative = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    negative = mant[0] == '-';
    mant.erase(0, 1);
  }
  std::string digits;
  long frac = 0;
  bool seen_point = false;
  for (char ch : mant) {
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (ch >= '0' && ch <= '9') {
      digits += ch;
      if (seen_point) ++frac;
    } else {
      return fail();
    }
  }
  if (digits.empty()) return fail();
  Rational r{mpz_class(digits)};
  r *= aw::ipow(Rational(10), exponent - frac);
  return negative ? Rational(-r) : r;
}

bool looks_float(const std::string& text) { return text.find_first_of(".eE") != std::string::npos; }

std::pair<int, int> parse_range(const std::string& text) {
  const auto parse_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw aw::UsageError("");
      return v;
    } catch (const std::exception&) {
      throw aw::UsageError("cannot parse --n value '" + text + "'");
    }
  };
  int lo = 0;
  int hi = 0;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    lo = parse_int(text.substr(0, dots));
    hi = parse_int(text.substr(dots + 2));
  } else {
    lo = hi = parse_int(text);
  }
  if (lo < 0 || lo > hi || hi > kMaxDegree) {
    throw aw::UsageError("--n must satisfy 0 <= lo <= hi <= " + std::to_string(kMaxDegree));
  }
  return {lo, hi};
}

/// Everything the commands need, in exact form.
struct Inputs {
  Rational a, b, c, d;
  std::optional<Rational> u;  ///< set when --u was given
  Rational q;
  std::optional<Rational> x;
  int lo = 0;
  int hi = 0;
  bool exact = false;
  unsigned bits = 53;
  std::optional<double> tolerance;
};

Rational required(const std::optional<std::string>& v, const char* what) {
  if (!v) throw aw::UsageError(std::string("missing --") + what);
  return parse_rational(*v, what);
}

bool has_rational_fourth_root(const Rational& q) {
  try {
    (void)aw::QContext<Rational>::from_q(q).u();
    return true;
  } catch (const aw::UsageError&) {
    return false;
  }
}

struct Needs {
  bool abcd = true;
  bool base = true;
  bool n = true;
  bool float_only = false;
  bool quarter_root = true;  ///< exact mode requires a rational q^{1/4}
  const char* default_n = nullptr;
};

Inputs resolve(const Options& opt, const Needs& needs) {
  Inputs in;
  if (needs.abcd) {
    in.a = required(opt.a, "a");
    in.b = required(opt.b, "b");
    in.c = required(opt.c, "c");
    in.d = opt.command == "limits" ? Rational(0) : required(opt.d, "d");
  }
  if (needs.base) {
    if (opt.u.has_value() == opt.q.has_value()) throw aw::UsageError("give exactly one of --u or --q");
    if (opt.u) {
      in.u = parse_rational(*opt.u, "u");
      if (*in.u <= 0 || *in.u == 1) throw aw::UsageError("--u must be positive and different from 1");
      in.q = aw::ipow(*in.u, 4);
    } else {
      in.q = parse_rational(*opt.q, "q");
      if (in.q <= 0 || in.q == 1) throw aw::UsageError("--q must be positive and different from 1");
    }
  }
  if (opt.x) in.x = parse_rational(*opt.x, "x");
  if (opt.n || needs.default_n) {
    std::tie(in.lo, in.hi) = parse_range(opt.n ? *opt.n : std::string(needs.default_n));
  } else if (needs.n) {
    throw aw::UsageError("missing --n");
  }

  // Backend: an explicit choice wins; otherwise exact iff every numeric input
  // is written as an integer or p/q.
  bool inferred_exact = !needs.float_only;
  for (const auto* v : {&opt.a, &opt.b, &opt.c, &opt.d, &opt.u, &opt.q, &opt.x}) {
    if (*v && looks_float(**v)) inferred_exact = false;
  }
  if (opt.backend) {
    if (*opt.backend != "exact" && *opt.backend != "float") throw aw::UsageError("--backend must be exact or float");
    in.exact = *opt.backend == "exact";
    if (in.exact && needs.float_only) throw aw::UsageError(opt.command + " is computed in floating point only");
  } else {
    in.exact = inferred_exact;
  }

  std::optional<unsigned> bits = opt.precision;
  if (!bits) {
    if (const char* env = std::getenv(kPrecisionEnv); env != nullptr && *env != '\0') {
      try {
        bits = static_cast<unsigned>(std::stoul(env));
      } catch (const std::exception&) {
        throw aw::UsageError(std::string(kPrecisionEnv) + " must be a bit count");
      }
    }
  }
  if (in.exact && opt.precision) throw aw::UsageError("--precision conflicts with the exact backend");
  if (bits) {
    if (*bits < 53) throw aw::UsageError("precision must be at least 53 bits");
    in.bits = *bits;
  }
  if (in.exact && needs.base && needs.quarter_root && !in.u && !has_rational_fourth_root(in.q)) {
    throw aw::UsageError("q^{1/4} is irrational; exact mode needs a rational u (pass --u or use --backend float)");
  }
  in.tolerance = opt.tolerance;
  if (in.tolerance && !(*in.tolerance > 0)) throw aw::UsageError("--tolerance must be positive");
  return in;
}

template <class T>
std::string fmt(const T& v, int digits = kDigits) {
  return aw::ScalarTraits<T>::str(v, digits);
}

template <class T>
T conv(const Rational& v) {
  return aw::from_rational<T>(v);
}

template <class T>
aw::QContext<T> make_context(const Inputs& in) {
  if (in.u) return aw::QContext<T>::from_u(conv<T>(*in.u));
  return aw::QContext<T>::from_q(conv<T>(in.q));
}

template <class T>
aw::AWParams<T> make_params(const Inputs& in) {
  return {conv<T>(in.a), conv<T>(in.b), conv<T>(in.c), conv<T>(in.d), make_context<T>(in)};
}

/// Parameters for series and recurrence work, which only need q.
aw::AWParams<Rational> exact_series_params(const Inputs& in) {
  auto ctx = in.u ? aw::QContext<Rational>::from_u(*in.u) : aw::QContext<Rational>::from_q(in.q);
  return {in.a, in.b, in.c, in.d, ctx};
}

template <class T>
T default_tolerance(const Inputs& in) {
  if (in.tolerance) return T(*in.tolerance);
  if constexpr (aw::is_exact_v<T>) {
    return T(0);
  } else if constexpr (std::is_same_v<T, double>) {
    return T(1e-12);
  } else {
    return aw::ipow(T(2), -static_cast<long>(in.bits) + 8);
  }
}

// ---------------------------------------------------------------- eval

template <class T>
Table run_eval(const Inputs& in) {
  Table t;
  const auto params = exact_series_params(in);
  if (in.x) {
    t.header = {"n", "x", "value"};
  } else {
    t.header = {"n", "polynomial"};
  }
  for (int n = in.lo; n <= in.hi; ++n) {
    const auto p = aw::aw_monic(params, n).template map<T>(conv<T>);
    if (in.x) {
      const T x = conv<T>(*in.x);
      t.rows.push_back({std::to_string(n), fmt(x), fmt(p.evaluate(x))});
    } else {
      t.rows.push_back({std::to_string(n), p.str(kDigits)});
    }
  }
  return t;
}

// ---------------------------------------------------------------- zeros

template <class T>
Table run_zeros(const Inputs& in) {
  if (in.lo < 1) throw aw::UsageError("zeros need n >= 1");
  Table t;
  t.header = {"n", "k", "zero"};
  const auto coeffs = aw::recurrence_as<T>(aw::extract_recurrence(exact_series_params(in), in.hi));
  const T tol = default_tolerance<T>(in);
  for (int n = in.lo; n <= in.hi; ++n) {
    const auto zs = aw::zeros_sturm(coeffs, n, tol);
    for (std::size_t k = 0; k < zs.values.size(); ++k) {
      t.rows.push_back({std::to_string(n), std::to_string(k + 1), fmt(zs.values[k])});
    }
  }
  return t;
}

// ---------------------------------------------------------------- bounds

template <class T>
Table run_bounds(const Inputs& in) {
  if (in.lo < 2) throw aw::UsageError("bounds need n >= 2");
  Table t;
  t.header = {"n", "upper_on_smallest", "lower_on_largest", "I_n", "g2_root_minus", "g2_root_plus"};
  const auto params = make_params<T>(in);
  for (int n = in.lo; n <= in.hi; ++n) {
    const auto bp = aw::extreme_zero_bounds(params, n);
    const auto [rm, rp] = aw::g2_roots(params, n - 1);
    t.rows.push_back({std::to_string(n), fmt(bp.upper_on_smallest), fmt(bp.lower_on_largest), fmt(bp.I_n), fmt(rm),
                      fmt(rp)});
  }
  return t;
}

// ---------------------------------------------------------------- table1

Table run_table1(const Inputs& in, bool precision_given) {
  Table t;
  t.header = {"n", "smallest_zero", "upper_bound", "lower_bound", "largest_zero"};
  const unsigned bits = precision_given ? in.bits : 128U;
  for (const auto& row : aw::table1(bits, kTableDigits)) {
    t.rows.push_back({std::to_string(row.n), row.text[0], row.text[1], row.text[2], row.text[3]});
  }
  return t;
}

// ---------------------------------------------------------------- verify

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"product-rules", "dde",         "structure",          "contiguous",
                                              "expansion",     "koornwinder", "koornwinder-reduced", "band",
                                              "shift"};
  return names;
}

aw::XPoly<Rational> random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<Rational> c;
  for (int k = 0; k <= degree; ++k) {
    Rational v(num(rng), den(rng));
    v.canonicalize();
    if (k == degree && v == 0) v = 1;
    c.push_back(v);
  }
  return aw::XPoly<Rational>(std::move(c));
}

template <class T>
struct CaseResult {
  bool skip = false;
  bool pass = false;
  std::string residual;
};

template <class T>
CaseResult<T> judge(const T& residual, const T& tol) {
  CaseResult<T> r;
  r.residual = fmt(residual);
  if constexpr (aw::is_exact_v<T>) {
    r.pass = aw::is_zero(residual);
  } else {
    r.pass = aw::ScalarTraits<T>::is_finite(residual) && !(tol < residual);
  }
  return r;
}

template <class T>
T larger(const T& x, const T& y) {
  return x < y ? y : x;
}

template <class T>
CaseResult<T> run_check(const std::string& check, const aw::AWParams<T>& params, int n, const T& tol,
                        unsigned long seed) {
  const auto& ctx = params.ctx;
  const auto skip = [] { return CaseResult<T>{true, false, ""}; };
  const auto abs = [](const T& v) { return aw::ScalarTraits<T>::abs(v); };

  if (check == "product-rules") {
    std::mt19937_64 rng(seed * 1000003ULL + static_cast<unsigned long>(n));
    const auto f = random_poly(rng, n).template map<T>(conv<T>);
    const auto g = random_poly(rng, n).template map<T>(conv<T>);
    T worst(0);
    for (auto kind : {aw::IdentityKind::ProductD, aw::IdentityKind::ProductS, aw::IdentityKind::ComposeDS,
                      aw::IdentityKind::ComposeSS}) {
      worst = larger(worst, aw::verify_identity(ctx, kind, f, std::optional<aw::XPoly<T>>(g)).max_abs_coeff());
    }
    return judge(worst, tol);
  }
  if (check == "dde") return judge(aw::verify_dde(params, n).max_abs_coeff(), tol);
  if (check == "structure") {
    if (n < 2) return skip();
    return judge(aw::verify_structure_relation(params, n).max_abs_coeff(), tol);
  }
  if (check == "contiguous") {
    T worst(0);
    for (auto slot : {aw::Slot::A, aw::Slot::B, aw::Slot::C, aw::Slot::D}) {
      worst = larger(worst, aw::verify_contiguous(params, n, slot).max_abs_coeff());
    }
    return judge(worst, tol);
  }
  if (check == "expansion") {
    if (n < 4) return skip();
    try {
      const auto e = aw::expand_in_d2_basis(params, n);
      T worst = abs(T(e.band[4] * ctx.gamma_n(n + 2) * ctx.gamma_n(n + 1) - T(1)));
      for (int k = 2; k < n - 2; ++k) worst = larger(worst, abs(e.at(k)));
      return judge(worst, tol);
    } catch (const aw::InvariantError&) {
      return CaseResult<T>{false, false, "off-band"};
    }
  }
  if (check == "koornwinder") return judge(aw::verify_koornwinder(params, n).max_abs_coeff(), tol);
  if (check == "koornwinder-reduced") return judge(aw::verify_koornwinder_reduced(params, n).max_abs_coeff(), tol);
  if (check == "band") {
    if (n < 2) return skip();
    const auto family = aw::aw_monic_family(params, n + 3);
    const auto profile = aw::band_profile(ctx, std::span<const aw::XPoly<T>>(family), aw::pi_poly(params).pi, n);
    const auto sc = aw::structure_coefficients(params, n);
    T worst(0);
    for (int k = 0; k < n - 2; ++k) worst = larger(worst, abs(profile[static_cast<std::size_t>(k)]));
    for (int j = -2; j <= 2; ++j) worst = larger(worst, abs(T(profile[static_cast<std::size_t>(n + j)] - sc[j])));
    return judge(worst, tol);
  }
  if (check == "shift") {
    if (n < 1) return skip();
    const auto shifted = params.scaled(ctx.sqrt_q());
    const auto lhs = aw::dq(ctx, aw::aw_monic(params, n));
    const auto rhs = aw::aw_monic(shifted, n - 1) * ctx.gamma_n(n);
    return judge((lhs - rhs).max_abs_coeff(), tol);
  }
  throw aw::UsageError("unknown check '" + check + "'");
}

template <class T>
Table run_verify(const Inputs& in, const std::string& check, unsigned long seed) {
  Table t;
  t.header = {"check", "n", "status", "residual"};
  const auto params = make_params<T>(in);
  T tol;
  if constexpr (aw::is_exact_v<T>) {
    tol = T(0);
  } else {
    tol = in.tolerance ? T(*in.tolerance) : T(1e-8);
  }
  bool all_pass = true;
  const std::vector<std::string> checks = check == "all" ? check_names() : std::vector<std::string>{check};
  for (const auto& name : checks) {
    for (int n = in.lo; n <= in.hi; ++n) {
      const auto r = run_check(name, params, n, tol, seed);
      const char* status = r.skip ? "SKIP" : (r.pass ? "PASS" : "FAIL");
      if (!r.skip && !r.pass) all_pass = false;
      t.rows.push_back({name, std::to_string(n), status, r.residual});
    }
  }
  t.status = all_pass ? "PASS" : "FAIL";
  return t;
}

// ---------------------------------------------------------------- limits

Table run_limits(const Inputs& in) {
  Table t;
  t.header = {"case", "n", "d", "deviation", "target_distance"};
  const auto ctx = in.u ? aw::QContext<Rational>::from_u(*in.u) : aw::QContext<Rational>::from_q(in.q);
  const aw::LimitParams<Rational> lp{in.a, in.b, in.c};
  const std::array<Rational, 3> scales{Rational(10), Rational(100), Rational(1000)};
  const auto dbl = [](const Rational& v) { return fmt(v.get_d()); };
  bool ok = true;
  for (int n = in.lo; n <= in.hi; ++n) {
    for (auto kind : {aw::LimitKind::ContinuousDualQHahn, aw::LimitKind::AlSalamChihara,
                      aw::LimitKind::ContinuousBigQHermite, aw::LimitKind::ContinuousQHermite}) {
      std::vector<Rational> deviations;
      std::vector<Rational> distances;
      for (const auto& L : scales) {
        const auto est = aw::limit_family_eval(kind, lp, ctx, n, L);
        deviations.push_back(est.deviation);
        std::string target = "";
        if (kind == aw::LimitKind::ContinuousDualQHahn) {
          distances.push_back(
              aw::coefficient_distance(est.estimate, aw::cdqhahn_limit_target(in.a, in.b, in.c, ctx, n)));
          target = dbl(distances.back());
        }
        t.rows.push_back({aw::limit_kind_name(kind), std::to_string(n), dbl(L), dbl(est.deviation), target});
      }
      for (std::size_t i = 1; i < deviations.size(); ++i) {
        if (deviations[i - 1] != 0 && !(deviations[i] < deviations[i - 1])) ok = false;
      }
      if (distances.size() == 3 && n > 0 && !(distances[2] * 5 <= distances[1])) ok = false;
    }
  }
  t.status = ok ? "PASS" : "FAIL";
  return t;
}

// ---------------------------------------------------------------- output

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void emit(const Table& t, const Options& opt, const nlohmann::ordered_json& config) {
  if (opt.format == "json") {
    nlohmann::ordered_json doc;
    doc["command"] = opt.command;
    doc["config"] = config;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = row[i];
      doc["rows"].push_back(std::move(obj));
    }
    doc["status"] = t.status;
    std::cout << doc.dump(2) << "\n";
    return;
  }
  const auto line = [](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << csv_field(cells[i]);
    std::cout << "\n";
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

template <template <class> class F>
Table dispatch_float(const Inputs& in) {
  if (in.bits == 53) return F<double>::run(in);
  aw::PrecisionScope scope(in.bits);
  return F<aw::BigFloat>::run(in);
}

template <template <class> class F>
Table dispatch(const Inputs& in) {
  if (in.exact) return F<Rational>::run(in);
  if (in.bits == 53) return F<double>::run(in);
  aw::PrecisionScope scope(in.bits);
  return F<aw::BigFloat>::run(in);
}

template <class T>
struct EvalCmd {
  static Table run(const Inputs& in) { return run_eval<T>(in); }
};
template <class T>
struct ZerosCmd {
  static Table run(const Inputs& in) { return run_zeros<T>(in); }
};
template <class T>
struct BoundsCmd {
  static Table run(const Inputs& in) { return run_bounds<T>(in); }
};

int run(const Options& opt) {
  nlohmann::ordered_json config;
  for (const auto& [key, value] : {std::pair{"a", opt.a}, {"b", opt.b}, {"c", opt.c}, {"d", opt.d}, {"u", opt.u},
                                   {"q", opt.q}, {"n", opt.n}, {"x", opt.x}, {"backend", opt.backend},
                                   {"check", opt.check}}) {
    if (value) config[key] = *value;
  }
  if (opt.precision) config["precision"] = std::to_string(*opt.precision);
  if (opt.tolerance) config["tolerance"] = fmt(*opt.tolerance);
  config["seed"] = std::to_string(opt.seed);

  Table table;
  const std::string& cmd = opt.command;
  if (cmd == "eval") {
    table = dispatch<EvalCmd>(resolve(opt, {}));
  } else if (cmd == "zeros") {
    table = dispatch_float<ZerosCmd>(resolve(opt, {.float_only = true}));
  } else if (cmd == "bounds") {
    table = dispatch_float<BoundsCmd>(resolve(opt, {.float_only = true}));
  } else if (cmd == "table1") {
    const Inputs in = resolve(opt, {.abcd = false, .base = false, .n = false, .float_only = true});
    const bool given = opt.precision.has_value() || std::getenv(kPrecisionEnv) != nullptr;
    table = run_table1(in, given);
  } else if (cmd == "verify") {
    const std::string check = opt.check.value_or("all");
    if (check != "all" && std::find(check_names().begin(), check_names().end(), check) == check_names().end()) {
      throw aw::UsageError("unknown check '" + check + "'");
    }
    const Inputs in = resolve(opt, {});
    if (in.exact) {
      table = run_verify<Rational>(in, check, opt.seed);
    } else if (in.bits == 53) {
      table = run_verify<double>(in, check, opt.seed);
    } else {
      aw::PrecisionScope scope(in.bits);
      table = run_verify<aw::BigFloat>(in, check, opt.seed);
    }
  } else if (cmd == "limits") {
    const Inputs in = resolve(opt, {.n = false, .quarter_root = false, .default_n = "3"});
    table = run_limits(in);
  }
  emit(table, opt, config);
  return table.status == "FAIL" ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Askey-Wilson polynomial calculus"};
  Options opt;
  app.add_option("command", opt.command, "eval | zeros | bounds | table1 | verify | limits")
      ->required()
      ->check(CLI::IsMember({"eval", "zeros", "bounds", "table1", "verify", "limits"}));
  app.add_option("--a", opt.a, "parameter a (p/q or decimal)");
  app.add_option("--b", opt.b, "parameter b");
  app.add_option("--c", opt.c, "parameter c");
  app.add_option("--d", opt.d, "parameter d");
  app.add_option("--u", opt.u, "q^{1/4}");
  app.add_option("--q", opt.q, "base q");
  app.add_option("--n", opt.n, "degree N or range LO..HI");
  app.add_option("--x", opt.x, "evaluation point");
  app.add_option("--backend", opt.backend, "exact | float");
  app.add_option("--precision", opt.precision, "float precision in bits (default $AW_PRECISION or 53)");
  app.add_option("--tolerance", opt.tolerance, "float tolerance");
  app.add_option("--format", opt.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", opt.seed, "seed for randomized checks");
  app.add_option("--check", opt.check, "verify check name (default all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "aw: " << e.what() << "\n";
    return 2;
  }

  try {
    return run(opt);
  } catch (const aw::Error& e) {
    std::cerr << "aw: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "aw: " << e.what() << "\n";
    return 2;
  }
}
