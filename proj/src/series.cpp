#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "satake/errors.hpp"
#include "satake/localmodel.hpp"

namespace sph {

namespace {

int clamp_prec(long long p) { return p >= TruncSeries::kExact ? TruncSeries::kExact : static_cast<int>(p); }

void require_same_field(const TruncSeries& a, const TruncSeries& b) {
  if (a.ctx() != b.ctx() && (a.ctx()->p() != b.ctx()->p() || a.ctx()->k() != b.ctx()->k()))
    throw std::invalid_argument("series over different fields");
}

}  // namespace

TruncSeries::TruncSeries(FqCtxPtr ctx, int precision) : ctx_(std::move(ctx)), prec_(clamp_prec(precision)) {
  if (!ctx_) throw std::invalid_argument("TruncSeries: null field context");
}

TruncSeries TruncSeries::monomial(FqCtxPtr ctx, FqElem c, int e, int precision) {
  TruncSeries s(std::move(ctx), precision);
  s.lo_ = e;
  s.c_ = {c};
  s.normalize();
  return s;
}

TruncSeries TruncSeries::from_coeffs(FqCtxPtr ctx, int lo, const std::vector<FqElem>& coeffs, int precision) {
  TruncSeries s(std::move(ctx), precision);
  s.lo_ = lo;
  s.c_ = coeffs;
  s.normalize();
  return s;
}

void TruncSeries::normalize() {
  if (hi() > prec_) c_.resize(static_cast<std::size_t>(std::max(0, prec_ - lo_)));
  while (!c_.empty() && c_.back().code == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].code == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    lo_ += static_cast<int>(lead);
  }
  if (c_.empty()) lo_ = 0;
}

std::optional<int> TruncSeries::valuation() const {
  if (c_.empty()) return std::nullopt;
  return lo_;
}

FqElem TruncSeries::coeff(int e) const {
  if (e >= prec_) throw PrecisionExhausted("coefficient of pi^" + std::to_string(e) + " beyond precision " + std::to_string(prec_));
  if (e < lo_ || e >= hi()) return ctx_->zero();
  return c_[static_cast<std::size_t>(e - lo_)];
}

TruncSeries TruncSeries::truncated(int precision) const {
  TruncSeries s = *this;
  s.prec_ = std::min(prec_, clamp_prec(precision));
  s.normalize();
  return s;
}

TruncSeries TruncSeries::principal_part() const {
  TruncSeries s(ctx_);
  if (c_.empty() || lo_ >= 0) return s;
  if (prec_ < 0) throw PrecisionExhausted("principal part beyond precision");
  s.lo_ = lo_;
  s.c_.assign(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(-lo_, static_cast<std::ptrdiff_t>(c_.size())));
  s.normalize();
  return s;
}

TruncSeries TruncSeries::integral_part() const {
  TruncSeries s(ctx_, prec_);
  if (c_.empty()) return s;
  if (lo_ >= 0) return *this;
  if (hi() > 0) {
    s.lo_ = 0;
    s.c_.assign(c_.begin() + (-lo_), c_.end());
  }
  s.normalize();
  return s;
}

TruncSeries TruncSeries::shifted(int k) const {
  TruncSeries s = *this;
  if (!s.c_.empty()) s.lo_ += k;
  s.prec_ = is_exact() ? kExact : clamp_prec(static_cast<long long>(prec_) + k);
  return s;
}

TruncSeries TruncSeries::scaled(FqElem a) const {
  TruncSeries s = *this;
  for (auto& x : s.c_) x = ctx_->mul(x, a);
  s.normalize();
  return s;
}

TruncSeries TruncSeries::frobenius(unsigned times) const {
  TruncSeries s = *this;
  for (auto& x : s.c_) x = ctx_->frobenius(x, times);
  return s;
}

bool TruncSeries::in_subfield(unsigned m) const {
  return std::all_of(c_.begin(), c_.end(), [&](FqElem x) { return ctx_->in_subfield(x, m); });
}

TruncSeries TruncSeries::inverse(int cap) const {
  if (c_.empty()) throw PrecisionExhausted("inverse of a series that is zero to precision");
  const int v = lo_;
  if (is_exact() && c_.size() == 1) return monomial(ctx_, ctx_->inv(c_[0]), -v);
  const int target = std::min(clamp_prec(cap), is_exact() ? kExact : clamp_prec(static_cast<long long>(prec_) - 2LL * v));
  const int count = target + v;  // coefficients of 1/u needed
  TruncSeries r(ctx_, target);
  if (count <= 0) return r;
  const FqElem w0 = ctx_->inv(c_[0]);
  std::vector<FqElem> w(static_cast<std::size_t>(count), ctx_->zero());
  w[0] = w0;
  for (int k = 1; k < count; ++k) {
    FqElem acc = ctx_->zero();
    for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j)
      acc = ctx_->add(acc, ctx_->mul(c_[static_cast<std::size_t>(j)], w[static_cast<std::size_t>(k - j)]));
    w[static_cast<std::size_t>(k)] = ctx_->neg(ctx_->mul(w0, acc));
  }
  r.lo_ = -v;
  r.c_ = std::move(w);
  r.normalize();
  return r;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries s = *this;
  for (auto& x : s.c_) x = ctx_->neg(x);
  return s;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  require_same_field(a, b);
  TruncSeries s(a.ctx_, std::min(a.prec_, b.prec_));
  if (a.c_.empty() && b.c_.empty()) return s;
  const int lo = a.c_.empty() ? b.lo_ : (b.c_.empty() ? a.lo_ : std::min(a.lo_, b.lo_));
  const int hi = std::max(a.c_.empty() ? lo : a.hi(), b.c_.empty() ? lo : b.hi());
  s.lo_ = lo;
  s.c_.assign(static_cast<std::size_t>(hi - lo), a.ctx_->zero());
  for (int e = a.lo_; e < a.hi(); ++e) s.c_[static_cast<std::size_t>(e - lo)] = a.c_[static_cast<std::size_t>(e - a.lo_)];
  for (int e = b.lo_; e < b.hi(); ++e) {
    auto& slot = s.c_[static_cast<std::size_t>(e - lo)];
    slot = a.ctx_->add(slot, b.c_[static_cast<std::size_t>(e - b.lo_)]);
  }
  s.normalize();
  return s;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  require_same_field(a, b);
  const long long pa = a.is_exact() ? TruncSeries::kExact : static_cast<long long>(a.prec_) + b.val_or_prec();
  const long long pb = b.is_exact() ? TruncSeries::kExact : static_cast<long long>(b.prec_) + a.val_or_prec();
  TruncSeries s(a.ctx_, clamp_prec(std::min(pa, pb)));
  if (a.c_.empty() || b.c_.empty()) return s;
  const auto& f = *a.ctx_;
  s.lo_ = a.lo_ + b.lo_;
  s.c_.assign(a.c_.size() + b.c_.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].code == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) s.c_[i + j] = f.add(s.c_[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  s.normalize();
  return s;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  if (a.ctx_->p() != b.ctx_->p() || a.ctx_->k() != b.ctx_->k()) return false;
  return a.prec_ == b.prec_ && a.lo_ == b.lo_ && a.c_ == b.c_;
}

std::string TruncSeries::to_string() const {
  std::string out;
  for (int e = lo_; e < hi(); ++e) {
    const FqElem c = c_[static_cast<std::size_t>(e - lo_)];
    if (c.code == 0) continue;
    if (!out.empty()) out += " + ";
    const std::string cs = ctx_->to_string(c);
    if (e == 0) {
      out += cs;
      continue;
    }
    if (c != ctx_->one()) out += cs + "*";
    out += "pi";
    if (e != 1) out += "^" + std::to_string(e);
  }
  if (!is_exact()) {
    if (!out.empty()) out += " + ";
    out += "O(pi^" + std::to_string(prec_) + ")";
  }
  return out.empty() ? "0" : out;
}

namespace {

class SeriesParser {
 public:
  SeriesParser(const FqCtxPtr& ctx, const std::string& text) : ctx_(ctx), s_(text) {}

  TruncSeries parse() {
    TruncSeries acc(ctx_);
    skip();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++i_;
    } else if (peek() == '+') {
      ++i_;
    }
    for (;;) {
      term(acc, negate);
      skip();
      if (i_ >= s_.size()) break;
      const char c = s_[i_++];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negate = c == '-';
    }
    return acc;
  }

 private:
  const FqCtxPtr& ctx_;
  const std::string& s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("series parse error at offset " + std::to_string(i_) + " in '" + s_ + "': " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(const std::string& tok) {
    skip();
    if (s_.compare(i_, tok.size(), tok) == 0) {
      i_ += tok.size();
      return true;
    }
    return false;
  }
  long integer() {
    skip();
    const std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == start || (i_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start])))) fail("expected integer");
    return std::stol(s_.substr(start, i_ - start));
  }
  int exponent() {
    if (!accept("^")) return 1;
    if (accept("(")) {
      const auto e = integer();
      if (!accept(")")) fail("expected ')'");
      return static_cast<int>(e);
    }
    return static_cast<int>(integer());
  }
  FqElem coefficient() {
    if (accept("[")) {
      std::vector<unsigned> c;
      do {
        const long x = integer();
        const long p = static_cast<long>(ctx_->p());
        c.push_back(static_cast<unsigned>(((x % p) + p) % p));
      } while (accept(","));
      if (!accept("]")) fail("expected ']'");
      return ctx_->from_coeffs(c);
    }
    return ctx_->from_int(integer());
  }
  void term(TruncSeries& acc, bool negate) {
    if (accept("O(")) {
      if (!accept("pi")) fail("expected pi inside O(...)");
      const int e = exponent();
      if (!accept(")")) fail("expected ')'");
      acc = acc + TruncSeries(ctx_, e);
      return;
    }
    FqElem c = ctx_->one();
    int e = 0;
    if (accept("pi")) {
      e = exponent();
    } else {
      c = coefficient();
      if (accept("*")) {
        if (!accept("pi")) fail("expected pi after '*'");
        e = exponent();
      } else if (accept("pi")) {
        e = exponent();
      }
    }
    if (negate) c = ctx_->neg(c);
    acc = acc + TruncSeries::monomial(ctx_, c, e);
  }
};

}  // namespace

TruncSeries parse_series(const FqCtxPtr& ctx, const std::string& text) { return SeriesParser(ctx, text).parse(); }

FqElem residue(const TruncSeries& x) { return x.coeff(-1); }

}  // namespace sph
