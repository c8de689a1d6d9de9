#include "satake/json_io.hpp"

namespace sph {

using nlohmann::ordered_json;

ordered_json to_json(const ValueScalar& x) {
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : x.terms()) {
    ordered_json zeta = ordered_json::array();
    for (auto v : c.coeffs()) zeta.push_back(v);
    terms.push_back({{"v", e}, {"zeta", zeta}});
  }
  return {{"den", x.den()}, {"terms", terms}};
}

ordered_json to_json(const SymPoly& p) {
  ordered_json mons = ordered_json::array();
  for (const auto& [d, c] : p.terms()) mons.push_back({{"d", d.parts()}, {"coeff", to_json(c)}});
  return {{"n", p.n()}, {"monomials", mons}};
}

ordered_json to_json(const HeckeElem& f) {
  ordered_json terms = ordered_json::array();
  for (const auto& [l, c] : f.terms()) terms.push_back({{"lambda", l.parts()}, {"coeff", to_json(c)}});
  return {{"n", f.n()}, {"r", f.r()}, {"basis", "c"}, {"terms", terms}};
}

ordered_json to_json(const SeriesMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

ordered_json to_json(const Report& r, bool timing) {
  ordered_json j{{"id", r.id},
                 {"kind", r.kind},
                 {"n", r.n},
                 {"q", r.q},
                 {"a", r.a},
                 {"alpha", r.alpha},
                 {"f", r.f},
                 {"lhs", to_json(r.lhs)},
                 {"rhs", to_json(r.rhs)},
                 {"lhs_text", r.lhs.to_string()},
                 {"rhs_text", r.rhs.to_string()},
                 {"lhs_at_q", r.lhs_at_q.to_string()},
                 {"rhs_at_q", r.rhs_at_q.to_string()},
                 {"sign_exponent", r.sign_exponent},
                 {"sign", r.sign_exponent % 2 == 0 ? 1 : -1},
                 {"pass", r.pass},
                 {"stable", r.stable},
                 {"precision", r.precision}};
  if (!r.error.empty()) j["error"] = r.error;
  if (timing) j["wall_time"] = r.seconds;
  return j;
}

namespace {

std::string bracket(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

template <typename Terms>
std::string render(const Terms& terms, const std::string& symbol) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms) {
    std::string cs = c.to_string();
    bool negative = false;
    // Pull a single leading minus out of simple coefficients.
    if (cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos && cs.find(" - ") == std::string::npos) {
      negative = true;
      cs = cs.substr(1);
    }
    if (!out.empty())
      out += negative ? " - " : " + ";
    else if (negative)
      out += "-";
    const bool compound = cs.find(' ') != std::string::npos;
    if (cs != "1") out += (compound ? "(" + cs + ")" : cs) + "*";
    out += symbol + bracket(key.parts());
  }
  return out;
}

}  // namespace

std::string sympoly_text(const SymPoly& p) { return render(p.terms(), "m"); }
std::string hecke_text(const HeckeElem& f) { return render(f.terms(), "c"); }

}  // namespace sph
