#include "satake/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "satake/errors.hpp"
#include "satake/json_io.hpp"

namespace sph {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FieldOpts {
  std::optional<unsigned> p;
  std::optional<unsigned> k;
  std::optional<std::int64_t> q;
};

struct OutputOpts {
  bool csv = false;
  bool timing = false;
  std::string out;
  int jobs = 1;
  std::optional<int> precision;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

// (p, k) from --p/--k or the shorthand --q = p^k.
std::pair<unsigned, unsigned> resolve_field(const FieldOpts& f) {
  unsigned p = f.p.value_or(3);
  unsigned k = f.k.value_or(1);
  if (f.q) {
    std::int64_t q = *f.q;
    if (q < 2) throw UsageError("--q must be a prime power");
    std::int64_t base = 2;
    while (q % base != 0) ++base;
    unsigned e = 0;
    while (q % base == 0) {
      q /= base;
      ++e;
    }
    if (q != 1) throw UsageError("--q must be a prime power");
    if ((f.p && *f.p != base) || (f.k && *f.k != e)) throw UsageError("--q conflicts with --p/--k");
    p = static_cast<unsigned>(base);
    k = e;
  }
  return {p, k};
}

std::optional<int> env_precision() {
  const char* s = std::getenv("SATAKE_PRECISION");
  if (!s || !*s) return std::nullopt;
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != std::string(s).size() || v <= 0) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw UsageError(std::string("SATAKE_PRECISION must be a positive integer, got '") + s + "'");
  }
}

// Explicit flag first, then the environment, then 0 meaning "automatic".
int effective_precision(const OutputOpts& o) {
  if (o.precision) {
    if (*o.precision <= 0) throw UsageError("--precision must be positive");
    return *o.precision;
  }
  return env_precision().value_or(0);
}

FqElem parse_field_elem(const FqCtx& ctx, const std::string& text) {
  const auto parts = split(text, '/');
  std::vector<unsigned> c;
  for (const auto& part : parts) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(part, &used);
    } catch (...) {
      throw UsageError("bad field element '" + text + "'");
    }
    if (used != part.size()) throw UsageError("bad field element '" + text + "'");
    const long p = static_cast<long>(ctx.p());
    c.push_back(static_cast<unsigned>(((v % p) + p) % p));
  }
  if (c.size() > ctx.k()) throw UsageError("field element '" + text + "' has too many coordinates");
  return ctx.from_coeffs(c);
}

std::vector<FqElem> parse_alpha(const FqCtx& ctx, const std::string& text, int n) {
  if (text.empty()) return std::vector<FqElem>(static_cast<std::size_t>(std::max(0, n - 1)), ctx.one());
  std::vector<FqElem> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_field_elem(ctx, item));
  if (static_cast<int>(out.size()) != n - 1) throw UsageError("--alpha needs n-1 entries");
  for (auto x : out)
    if (x.code == 0) throw UsageError("--alpha entries must be nonzero");
  return out;
}

TorusElem parse_torus(const FqCtxPtr& ctx, const std::string& text, int n) {
  std::vector<int> vals;
  std::vector<FqElem> units;
  for (const auto& item : split(text, ',')) {
    const auto colon = item.find(':');
    const std::string v = trim(item.substr(0, colon));
    std::size_t used = 0;
    int val = 0;
    try {
      val = std::stoi(v, &used);
    } catch (...) {
      throw UsageError("bad valuation in --a '" + text + "'");
    }
    if (used != v.size()) throw UsageError("bad valuation in --a '" + text + "'");
    vals.push_back(val);
    units.push_back(colon == std::string::npos ? ctx->one() : parse_field_elem(*ctx, item.substr(colon + 1)));
  }
  if (static_cast<int>(vals.size()) != n) throw UsageError("--a '" + text + "' needs " + std::to_string(n) + " entries");
  for (auto u : units)
    if (u.code == 0) throw UsageError("unit parts in --a must be nonzero");
  return TorusElem(ctx, vals, units);
}

std::vector<NamedHecke> parse_f_list(const std::vector<std::string>& exprs, int n) {
  std::vector<NamedHecke> out;
  if (exprs.empty()) {
    for (int w = 0; w <= 2; ++w)
      for (const auto& l : partitions_of(w, n)) out.push_back({"a:" + l.to_string(), a_basis(l, 2)});
    return out;
  }
  for (const auto& e : exprs) out.push_back({e, parse_hecke(e, n, 2)});
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void emit(const std::string& text, const OutputOpts& o, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw UsageError("cannot open output file '" + o.out + "'");
  file << text;
}

int emit_reports(const std::string& command, const std::vector<Report>& reports, const OutputOpts& o,
                 std::ostream& out, std::ostream& err) {
  int passed = 0;
  bool precision_failure = false;
  for (const auto& r : reports) {
    if (r.pass) ++passed;
    if (r.precision_error) precision_failure = true;
  }
  std::string text;
  if (o.csv) {
    text = "id,lhs,rhs,sign,pass,wall_time\n";
    for (const auto& r : reports) {
      std::ostringstream wall;
      if (o.timing)
        wall << r.seconds;
      else
        wall << "-";
      text += csv_quote(r.id) + "," + csv_quote(r.lhs.to_string()) + "," + csv_quote(r.rhs.to_string()) + "," +
              (r.sign_exponent % 2 == 0 ? "1" : "-1") + "," + (r.pass ? "PASS" : "FAIL") + "," + wall.str() + "\n";
    }
  } else {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, o.timing));
    ordered_json j{{"command", command},
                   {"reports", arr},
                   {"summary",
                    {{"total", reports.size()},
                     {"passed", passed},
                     {"failed", static_cast<int>(reports.size()) - passed},
                     {"status", passed == static_cast<int>(reports.size()) ? "PASS" : "FAIL"}}}};
    text = j.dump(2) + "\n";
  }
  emit(text, o, out);
  for (const auto& r : reports)
    if (!r.error.empty()) err << r.id << ": " << r.error << "\n";
  if (precision_failure) return kExitUsage;
  return passed == static_cast<int>(reports.size()) ? kExitOk : kExitVerificationFailed;
}

void add_field_opts(CLI::App* app, FieldOpts& f) {
  app->add_option("--p", f.p, "residue characteristic");
  app->add_option("--k", f.k, "residue degree, q = p^k");
  app->add_option("--q", f.q, "residue field size (prime power shorthand for --p/--k)");
}

void add_output_opts(CLI::App* app, OutputOpts& o, bool reports) {
  app->add_flag("--csv", o.csv, "CSV instead of JSON");
  app->add_option("--out", o.out, "write output to FILE instead of standard output");
  if (reports) {
    app->add_flag("--timing", o.timing, "include wall time per case");
    app->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    app->add_option("--precision", o.precision, "series window N (checked again at N+2)");
  }
}

int emit_value(const std::string& command, const ordered_json& j, const std::vector<std::pair<std::string, std::string>>& rows,
               const OutputOpts& o, std::ostream& out) {
  std::string text;
  if (o.csv) {
    text = "key,value\n";
    for (const auto& [k, v] : rows) text += csv_quote(k) + "," + csv_quote(v) + "\n";
  } else {
    ordered_json full{{"command", command}};
    for (auto it = j.begin(); it != j.end(); ++it) full[it.key()] = it.value();
    text = full.dump(2) + "\n";
  }
  emit(text, o, out);
  return kExitOk;
}

template <typename Terms>
std::vector<std::pair<std::string, std::string>> term_rows(const Terms& terms) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [key, c] : terms) rows.emplace_back(key.to_string(), c.to_string());
  return rows;
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    if (kv.count(key)) throw UsageError(path + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

int to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const int x = std::stoi(v, &used);
    if (used == v.size()) return x;
  } catch (...) {
  }
  throw UsageError("config key '" + key + "' needs an integer, got '" + v + "'");
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw UsageError("config key '" + key + "' needs true/false, got '" + v + "'");
}

// Every combination of per-coordinate value lists "0,1,2 ; 0,2".
std::vector<std::string> cartesian_vals(const std::string& spec) {
  std::vector<std::vector<std::string>> axes;
  for (const auto& axis : split(spec, ';')) axes.push_back(split(axis, ','));
  std::vector<std::string> out{""};
  for (const auto& axis : axes) {
    std::vector<std::string> next;
    for (const auto& prefix : out)
      for (const auto& v : axis) next.push_back(prefix.empty() ? v : prefix + "," + v);
    out = std::move(next);
  }
  return out;
}

struct Runner {
  std::ostream& out;
  std::ostream& err;

  int fl(int n, const FieldOpts& fo, const std::vector<std::string>& a_texts, const std::string& alpha_text,
         const std::vector<std::string>& f_exprs, const OutputOpts& o) {
    const auto [p, k] = resolve_field(fo);
    if (p == 2) throw EvenCharacteristic("the hermitian side needs odd p");
    if (a_texts.empty()) throw UsageError("at least one --a is required");
    const auto ctx = build_field(p, k);
    const auto ctx2 = build_field(p, 2 * k);
    std::vector<TorusElem> as;
    for (const auto& t : a_texts) as.push_back(parse_torus(ctx, t, n));
    const auto alpha = parse_alpha(*ctx, alpha_text, n);
    const auto fs = parse_f_list(f_exprs, n);
    return emit_reports("verify fl", verify_fundamental_lemma(as, alpha, fs, ctx2, effective_precision(o), o.jobs), o, out, err);
  }

  int w0(int n, const FieldOpts& fo, const std::vector<int>& ds, const std::string& alpha_text,
         const std::vector<std::string>& f_exprs, const OutputOpts& o) {
    const auto [p, k] = resolve_field(fo);
    if (p == 2) throw EvenCharacteristic("the hermitian side needs odd p");
    const auto ctx = build_field(p, k);
    const auto ctx2 = build_field(p, 2 * k);
    const auto alpha = parse_alpha(*ctx, alpha_text, n);
    const auto fs = parse_f_list(f_exprs, n);
    return emit_reports("verify w0", verify_w0_identity(n, ds, alpha, fs, ctx, ctx2, effective_precision(o), o.jobs), o,
                        out, err);
  }

  int oracle(int n, const FieldOpts& fo, int max_weight, const OutputOpts& o) {
    const auto [p, k] = resolve_field(fo);
    const auto ctx = build_field(p, k);
    return emit_reports("verify satake-oracle", verify_satake_oracle(n, ctx, max_weight, effective_precision(o), o.jobs),
                        o, out, err);
  }

  int sweep(const std::string& path, OutputOpts o, bool csv_flag, bool timing_flag) {
    auto kv = read_config(path);
    static const std::set<std::string> known{"theorem", "n",   "p",    "k",          "q",   "precision", "alpha", "a",
                                             "a_vals",  "d",   "f",    "max_weight", "jobs", "out",      "csv",   "timing"};
    for (const auto& [key, v] : kv)
      if (!known.count(key)) throw UsageError("unknown config key '" + key + "'");
    if (!kv.count("theorem")) throw UsageError("config needs 'theorem' (fl, w0 or satake-oracle)");
    const std::string theorem = kv["theorem"];
    const int n = kv.count("n") ? to_int("n", kv["n"]) : 2;
    FieldOpts fo;
    if (kv.count("p")) fo.p = static_cast<unsigned>(to_int("p", kv["p"]));
    if (kv.count("k")) fo.k = static_cast<unsigned>(to_int("k", kv["k"]));
    if (kv.count("q")) fo.q = to_int("q", kv["q"]);
    // Command-line output flags win over the file.
    if (!o.precision && kv.count("precision")) o.precision = to_int("precision", kv["precision"]);
    if (o.jobs == 1 && kv.count("jobs")) o.jobs = to_int("jobs", kv["jobs"]);
    if (o.out.empty() && kv.count("out")) o.out = kv["out"];
    if (!csv_flag && kv.count("csv")) o.csv = to_bool("csv", kv["csv"]);
    if (!timing_flag && kv.count("timing")) o.timing = to_bool("timing", kv["timing"]);
    std::vector<std::string> fs;
    if (kv.count("f"))
      for (const auto& e : split(kv["f"], ';'))
        if (!e.empty()) fs.push_back(e);
    const std::string alpha = kv.count("alpha") ? kv["alpha"] : "";
    if (theorem == "fl") {
      std::vector<std::string> as;
      if (kv.count("a"))
        for (const auto& e : split(kv["a"], ';'))
          if (!e.empty()) as.push_back(e);
      if (kv.count("a_vals"))
        for (const auto& e : cartesian_vals(kv["a_vals"])) as.push_back(e);
      return fl(n, fo, as, alpha, fs, o);
    }
    if (theorem == "w0") {
      if (!kv.count("d")) throw UsageError("w0 sweep needs 'd'");
      return w0(n, fo, parse_int_list(kv["d"]), alpha, fs, o);
    }
    if (theorem == "satake-oracle") {
      const int w = kv.count("max_weight") ? to_int("max_weight", kv["max_weight"]) : 3;
      return oracle(n, fo, w, o);
    }
    throw UsageError("unknown theorem '" + theorem + "'");
  }
};

std::vector<int> padded(const std::string& text, int n) {
  auto v = parse_int_list(text);
  if (static_cast<int>(v.size()) > n) throw UsageError("partition '" + text + "' is longer than n");
  v.resize(static_cast<std::size_t>(n), 0);
  return v;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spherical Hecke algebras, Satake transforms and the base-change fundamental lemma", "satake"};
  app.require_subcommand(1);
  Runner runner{out, err};

  int n = 2;
  int r = 1;
  FieldOpts fo;
  OutputOpts oo;
  std::string f_text;
  std::string g_text;
  int rc = kExitOk;

  auto* sat = app.add_subcommand("satake", "Satake transform of a Hecke function");
  sat->add_option("--n", n, "rank")->check(CLI::PositiveNumber);
  sat->add_option("--r", r, "residue degree of the Hecke algebra")->check(CLI::PositiveNumber);
  sat->add_option("--f", f_text, "Hecke function, e.g. c:1,0 or 2*a:1,1 - c:0,0")->required();
  add_output_opts(sat, oo, false);
  sat->callback([&] {
    const auto f = parse_hecke(f_text, n, r);
    const auto s = satake(f);
    rc = emit_value("satake", {{"input", to_json(f)}, {"result", to_json(s)}, {"text", sympoly_text(s)}},
                    term_rows(s.terms()), oo, out);
  });

  std::string lambda_text;
  std::string mu_text;
  bool foulkes = false;
  auto* kos = app.add_subcommand("kostka", "Kostka numbers and Kostka-Foulkes polynomials");
  kos->add_option("--lambda", lambda_text, "shape")->required();
  kos->add_option("--mu", mu_text, "content")->required();
  kos->add_flag("--foulkes", foulkes, "charge q-analogue K_{lambda,mu}(q)");
  add_output_opts(kos, oo, false);
  kos->callback([&] {
    const auto mu_raw = parse_int_list(mu_text);
    const auto lam_raw = parse_int_list(lambda_text);
    const int len = static_cast<int>(std::max(mu_raw.size(), lam_raw.size()));
    const NPartition lambda(padded(lambda_text, len));
    ordered_json j{{"lambda", lambda.parts()}, {"mu", padded(mu_text, len)}, {"foulkes", foulkes}};
    std::string value;
    if (foulkes) {
      const auto kf = kostka_foulkes(lambda, NPartition(padded(mu_text, len)));
      value = kf.to_string();
      j["value"] = value;
      j["coeffs"] = kf.coeffs;
    } else {
      const auto kn = kostka_number(lambda, Composition(padded(mu_text, len)));
      value = std::to_string(kn);
      j["value"] = kn;
    }
    rc = emit_value("kostka", j, {{lambda.to_string() + "|" + Composition(padded(mu_text, len)).to_string(), value}}, oo,
                    out);
  });

  auto* bc = app.add_subcommand("base-change", "Base change b(f) from residue degree r to 1");
  bc->add_option("--n", n, "rank")->check(CLI::PositiveNumber);
  bc->add_option("--r", r, "residue degree of f")->check(CLI::PositiveNumber);
  bc->add_option("--f", f_text, "Hecke function")->required();
  add_output_opts(bc, oo, false);
  bc->callback([&] {
    const auto f = parse_hecke(f_text, n, r);
    const auto b = base_change(f);
    rc = emit_value("base-change", {{"input", to_json(f)}, {"result", to_json(b)}, {"text", hecke_text(b)}},
                    term_rows(b.terms()), oo, out);
  });

  auto* cv = app.add_subcommand("convolve", "Convolution product f * g");
  cv->add_option("--n", n, "rank")->check(CLI::PositiveNumber);
  cv->add_option("--r", r, "residue degree")->check(CLI::PositiveNumber);
  cv->add_option("--f", f_text, "left factor")->required();
  cv->add_option("--g", g_text, "right factor")->required();
  add_output_opts(cv, oo, false);
  cv->callback([&] {
    const auto f = parse_hecke(f_text, n, r);
    const auto g = parse_hecke(g_text, n, r);
    const auto h = convolve(f, g);
    rc = emit_value("convolve", {{"f", to_json(f)}, {"g", to_json(g)}, {"result", to_json(h)}, {"text", hecke_text(h)}},
                    term_rows(h.terms()), oo, out);
  });

  std::string s_text;
  auto* bp = app.add_subcommand("bprime", "Transfer b'(f) at a hermitian matrix");
  bp->add_option("--n", n, "rank")->check(CLI::PositiveNumber);
  bp->add_option("--f", f_text, "Hecke function with r = 2")->required();
  bp->add_option("--s", s_text, "row-major series entries separated by ';'")->required();
  add_field_opts(bp, fo);
  add_output_opts(bp, oo, false);
  bp->add_option("--precision", oo.precision, "series window");
  bp->callback([&] {
    const auto [p, k] = resolve_field(fo);
    if (p == 2) throw EvenCharacteristic("hermitian matrices need odd p");
    const auto ctx2 = build_field(p, 2 * k);
    const auto entries = split(s_text, ';');
    if (static_cast<int>(entries.size()) != n * n) throw UsageError("--s needs n*n entries");
    auto s = zero_matrix(ctx2, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s(i, j) = parse_series(ctx2, entries[static_cast<std::size_t>(i * n + j)]);
    validate_hermitian(s);
    const int prec = effective_precision(oo);
    const auto f = parse_hecke(f_text, n, 2);
    const auto profile = bprime_profile(s, prec > 0 ? prec : TruncSeries::kExact);
    const auto value = pair_profile(f, profile);
    ordered_json prof = ordered_json::array();
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [t, c] : profile) {
      prof.push_back({{"lambda", t.parts()}, {"count", c}});
      rows.emplace_back(t.to_string(), std::to_string(c));
    }
    const std::int64_t q = ipow(static_cast<std::int64_t>(p), k);
    rows.emplace_back("value", value.to_string());
    rc = emit_value("bprime",
                    {{"s", to_json(s)},
                     {"f", to_json(f)},
                     {"profile", prof},
                     {"value", to_json(value)},
                     {"text", value.to_string()},
                     {"value_at_q", value.specialize(q).to_string()}},
                    rows, oo, out);
  });

  auto* ver = app.add_subcommand("verify", "Verification harnesses");
  ver->require_subcommand(1);

  int max_weight = 3;
  auto* vo = ver->add_subcommand("satake-oracle", "closed-form Satake coefficients against lattice counting");
  vo->add_option("--n", n, "rank")->check(CLI::PositiveNumber);
  vo->add_option("--max-weight", max_weight, "largest |lambda|")->check(CLI::NonNegativeNumber);
  add_field_opts(vo, fo);
  add_output_opts(vo, oo, true);
  vo->callback([&] { rc = runner.oracle(n, fo, max_weight, oo); });

  std::vector<std::string> a_texts;
  std::vector<std::string> f_exprs;
  std::string alpha_text;
  auto* vf = ver->add_subcommand("fl", "I(a, b(f)) = (-1)^{val(a_1...a_{n-1})} J(a, b'(f))");
  vf->add_option("--n", n, "rank")->check(CLI::Range(1, 3));
  vf->add_option("--a", a_texts, "valuations of a_1..a_n, entries v or v:c0/c1 (repeatable)")->required();
  vf->add_option("--f", f_exprs, "test function with r = 2 (repeatable; default a-basis with |lambda| <= 2)");
  vf->add_option("--alpha", alpha_text, "character parameters, n-1 field elements");
  add_field_opts(vf, fo);
  add_output_opts(vf, oo, true);
  vf->callback([&] { rc = runner.fl(n, fo, a_texts, alpha_text, f_exprs, oo); });

  std::string d_text = "0,1";
  auto* vw = ver->add_subcommand("w0", "I(w0 a, b(f)) = (-1)^{d n(n-1)/2} J(w0 a, b'(f)) for a = pi^d");
  vw->add_option("--n", n, "rank")->check(CLI::Range(1, 3));
  vw->add_option("--d", d_text, "central exponents, comma separated");
  vw->add_option("--f", f_exprs, "test function with r = 2 (repeatable)");
  vw->add_option("--alpha", alpha_text, "character parameters");
  add_field_opts(vw, fo);
  add_output_opts(vw, oo, true);
  vw->callback([&] { rc = runner.w0(n, fo, parse_int_list(d_text), alpha_text, f_exprs, oo); });

  std::string config;
  auto* sw = app.add_subcommand("sweep", "Run a verification sweep described by a key=value file");
  sw->add_option("config", config, "config file")->required();
  add_output_opts(sw, oo, true);
  sw->callback([&] {
    rc = runner.sweep(config, oo, sw->count("--csv") > 0, sw->count("--timing") > 0);
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const PrecisionExhausted& e) {
    err << "precision error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}

}  // namespace sph
