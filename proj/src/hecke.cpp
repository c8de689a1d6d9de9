#include "satake/hecke.hpp"

#include <cctype>
#include <stdexcept>

#include "satake/errors.hpp"

namespace sph {

HeckeElem::HeckeElem(int n, int r) : n_(n), r_(r) {
  if (n < 1) throw std::invalid_argument("HeckeElem: rank must be positive");
  if (r < 1) throw std::invalid_argument("HeckeElem: extension degree must be positive");
}

HeckeElem::HeckeElem(int n, int r, Terms terms) : HeckeElem(n, r) {
  for (const auto& [l, c] : terms) add_term(l, c);
}

HeckeElem HeckeElem::basis(const NPartition& lambda, int r) {
  HeckeElem f(lambda.size(), r);
  f.add_term(lambda, ValueScalar(1));
  return f;
}

void HeckeElem::add_term(const NPartition& l, const ValueScalar& c) {
  if (l.size() != n_) throw std::invalid_argument("HeckeElem: partition length differs from rank");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(l, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ValueScalar HeckeElem::coeff(const NPartition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? ValueScalar() : it->second;
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& o) {
  if (o.n_ != n_ || o.r_ != r_) throw std::invalid_argument("HeckeElem: rank or extension degree mismatch");
  for (const auto& [l, c] : o.terms_) add_term(l, c);
  return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& o) {
  if (o.n_ != n_ || o.r_ != r_) throw std::invalid_argument("HeckeElem: rank or extension degree mismatch");
  for (const auto& [l, c] : o.terms_) add_term(l, -c);
  return *this;
}

HeckeElem HeckeElem::scaled(const ValueScalar& c) const {
  HeckeElem out(n_, r_);
  for (const auto& [l, x] : terms_) out.add_term(l, x * c);
  return out;
}

namespace {

SymPoly satake_basis(const NPartition& lambda, int r) {
  return hall_littlewood(lambda, r).scaled(ValueScalar::v_power(r * pairing_2delta(lambda)));
}

}  // namespace

SymPoly satake(const HeckeElem& f) {
  SymPoly out(f.n());
  for (const auto& [l, c] : f.terms()) out += satake_basis(l, f.r()).scaled(c);
  return out;
}

HeckeElem satake_inv(const SymPoly& p, int r) {
  HeckeElem out(p.n(), r);
  SymPoly rest = p;
  // The leading monomial of Φ_r(c_λ) is v^{r·2⟨λ,δ⟩} m_λ; lex order refines dominance.
  while (!rest.is_zero()) {
    const auto [lead, c] = *rest.terms().begin();
    const auto coeff = c * ValueScalar::v_power(-r * pairing_2delta(lead));
    out += HeckeElem::basis(lead, r).scaled(coeff);
    rest -= satake_basis(lead, r).scaled(coeff);
  }
  return out;
}

HeckeElem a_basis(const NPartition& lambda, int r) { return satake_inv(schur(lambda), r); }

HeckeElem base_change(const HeckeElem& f) { return satake_inv(adams(satake(f), f.r()), 1); }

HeckeElem convolve(const HeckeElem& f, const HeckeElem& g) {
  if (f.n() != g.n() || f.r() != g.r()) throw std::invalid_argument("convolve: rank or extension degree mismatch");
  return satake_inv(multiply(satake(f), satake(g)), f.r());
}

ValueScalar eval_on_type(const HeckeElem& f, const std::optional<NPartition>& type) {
  if (!type) return {};
  return f.coeff(*type);
}

ValueScalar eval_hecke(const HeckeElem& f, const SeriesMatrix& m) {
  if (m.rows() != f.n()) throw std::invalid_argument("eval_hecke: matrix size differs from rank");
  return eval_on_type(f, cartan_type(m));
}

ValueScalar satake_oracle(const HeckeElem& f, const Composition& d, const FqCtxPtr& ctx, int precision) {
  if (f.r() != 1) throw std::invalid_argument("satake_oracle: requires extension degree 1");
  if (d.size() != f.n()) throw std::invalid_argument("satake_oracle: exponent length differs from rank");
  ValueScalar acc;
  mv_enumerate(d, ctx, [&](const LatticeGens& l) { acc += eval_hecke(f, truncate_matrix(l.gens, precision)); });
  return acc * ValueScalar::v_power(-pairing_2delta(d));
}

std::int64_t convolve_oracle(const NPartition& lambda, const NPartition& mu, const SeriesMatrix& m,
                             const FqCtxPtr& ctx) {
  const int n = lambda.size();
  if (mu.size() != n || m.rows() != n) throw std::invalid_argument("convolve_oracle: size mismatch");
  const auto type_m = cartan_type(m);
  if (!type_m || type_m->weight() != lambda.weight() + mu.weight()) return 0;
  std::int64_t count = 0;
  for (const auto& l : sublattices(n, lambda.weight(), ctx)) {
    if (NPartition(elementary_divisors(l.gens)) != lambda) continue;
    // Type of G^{-1}M from adj(G)·M = det(G)·G^{-1}M.
    const int w = lambda.weight();
    auto e = elementary_divisors(adjugate(l.gens) * m);
    bool contained = true;
    for (auto& x : e) {
      x -= w;
      if (x < 0) contained = false;
    }
    if (contained && NPartition(e) == mu) ++count;
  }
  return count;
}

namespace {

class HeckeParser {
 public:
  HeckeParser(const std::string& text, int n, int r) : s_(text), n_(n), r_(r) {}

  HeckeElem parse() {
    HeckeElem acc(n_, r_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    for (;;) {
      acc += term().scaled(ValueScalar(negate ? -1 : 1));
      skip();
      if (i_ >= s_.size()) break;
      if (accept('+'))
        negate = false;
      else if (accept('-'))
        negate = true;
      else
        fail("expected '+' or '-'");
    }
    return acc;
  }

 private:
  const std::string& s_;
  int n_;
  int r_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse Hecke element '" + s_ + "': " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  bool at_digit() {
    skip();
    return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
  }
  long integer() {
    skip();
    const std::size_t start = i_;
    if (i_ < s_.size() && s_[i_] == '-') ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == start || s_.substr(start, i_ - start) == "-") fail("expected integer");
    return std::stol(s_.substr(start, i_ - start));
  }
  HeckeElem term() {
    ValueScalar coeff(1);
    for (;;) {
      skip();
      if (at_digit()) {
        coeff = coeff * ValueScalar(integer());
        if (!accept('*')) fail("expected '*' after coefficient");
      } else if (i_ < s_.size() && s_[i_] == 'v') {
        ++i_;
        int e = 1;
        if (accept('^')) e = static_cast<int>(integer());
        coeff = coeff * ValueScalar::v_power(e);
        if (!accept('*')) fail("expected '*' after v-power");
      } else {
        break;
      }
    }
    skip();
    if (i_ >= s_.size() || (s_[i_] != 'c' && s_[i_] != 'a')) fail("expected basis tag 'c:' or 'a:'");
    const char tag = s_[i_++];
    if (!accept(':')) fail("expected ':' after basis tag");
    std::vector<int> parts;
    parts.push_back(static_cast<int>(integer()));
    while (accept(',')) parts.push_back(static_cast<int>(integer()));
    if (static_cast<int>(parts.size()) != n_)
      fail("partition has " + std::to_string(parts.size()) + " parts, expected " + std::to_string(n_));
    const NPartition lambda(parts);
    return (tag == 'c' ? HeckeElem::basis(lambda, r_) : a_basis(lambda, r_)).scaled(coeff);
  }
};

}  // namespace

HeckeElem parse_hecke(const std::string& text, int n, int r) { return HeckeParser(text, n, r).parse(); }

}  // namespace sph
