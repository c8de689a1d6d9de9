#include "satake/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "satake/errors.hpp"

namespace sph {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int x : parts_)
    if (x < 0) throw std::invalid_argument("composition parts must be non-negative");
}

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Composition::sorted_desc() const {
  auto s = parts_;
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

std::string Composition::to_string() const { return join(parts_); }

NPartition::NPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be non-negative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int NPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int NPartition::length() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int x) { return x > 0; }));
}

std::string NPartition::to_string() const { return join(parts_); }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in integer list '" + text + "'");
    const auto body = item.substr(b, e - b + 1);
    std::size_t used = 0;
    const int value = std::stoi(body, &used);
    if (used != body.size()) throw std::invalid_argument("bad integer '" + body + "'");
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

QPoly::QPoly(std::vector<std::int64_t> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::int64_t QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs.size())) return 0;
  return coeffs[static_cast<std::size_t>(k)];
}

std::int64_t QPoly::eval(std::int64_t q) const {
  std::int64_t acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * q + coeffs[i];
  return acc;
}

bool QPoly::has_nonneg_coeffs() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c >= 0; });
}

std::string QPoly::to_string() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto c = coeffs[k];
    if (c == 0) continue;
    const auto mag = c < 0 ? -c : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (k == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag) + "*";
    s += "q";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

bool dominance_leq(const Composition& mu, const NPartition& lambda) {
  if (mu.size() != lambda.size()) throw WeightMismatch("dominance_leq: length mismatch");
  if (mu.weight() != lambda.weight()) throw WeightMismatch("dominance_leq: weight mismatch");
  const auto s = mu.sorted_desc();
  int a = 0;
  int b = 0;
  for (int i = 0; i < lambda.size(); ++i) {
    a += s[static_cast<std::size_t>(i)];
    b += lambda[i];
    if (a > b) return false;
  }
  return true;
}

int pairing_2delta(const Composition& d) {
  const int n = d.size();
  int acc = 0;
  for (int i = 1; i <= n; ++i) acc += d[i - 1] * (n + 1 - 2 * i);
  return acc;
}

namespace {

// Adds letter `letter` as a horizontal strip of size `count`, row by row.
void add_strip(const NPartition& lambda, const Composition& d, int letter, Tableau& t, int row, int remaining,
               const std::function<void(const Tableau&)>& visit);

void place_letter(const NPartition& lambda, const Composition& d, int letter, Tableau& t,
                  const std::function<void(const Tableau&)>& visit) {
  if (letter > d.size()) {
    visit(t);
    return;
  }
  add_strip(lambda, d, letter, t, 0, d[letter - 1], visit);
}

void add_strip(const NPartition& lambda, const Composition& d, int letter, Tableau& t, int row, int remaining,
               const std::function<void(const Tableau&)>& visit) {
  if (remaining == 0) {
    place_letter(lambda, d, letter + 1, t, visit);
    return;
  }
  if (row >= lambda.size()) return;
  auto& cur = t[static_cast<std::size_t>(row)];
  const int len = static_cast<int>(cur.size());
  // A horizontal strip never puts the new letter below an earlier copy of itself.
  const int above = row == 0 ? lambda[0] : static_cast<int>(t[static_cast<std::size_t>(row) - 1].size());
  int cap = std::min(lambda[row], above) - len;
  if (row > 0) {
    // Boxes in the row above that already hold `letter` cannot sit over a new box.
    const auto& up = t[static_cast<std::size_t>(row) - 1];
    int limit = len;
    while (limit < static_cast<int>(up.size()) && up[static_cast<std::size_t>(limit)] < letter) ++limit;
    cap = std::min(cap, limit - len);
  }
  cap = std::min(cap, remaining);
  for (int k = cap; k >= 0; --k) {
    for (int i = 0; i < k; ++i) cur.push_back(letter);
    add_strip(lambda, d, letter, t, row + 1, remaining - k, visit);
    for (int i = 0; i < k; ++i) cur.pop_back();
  }
}

}  // namespace

void for_each_ssyt(const NPartition& lambda, const Composition& d, const std::function<void(const Tableau&)>& visit) {
  if (lambda.weight() != d.weight()) throw WeightMismatch("tableau enumeration: weight mismatch");
  Tableau t(static_cast<std::size_t>(lambda.size()));
  place_letter(lambda, d, 1, t, visit);
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (auto row = t.rbegin(); row != t.rend(); ++row) w.insert(w.end(), row->begin(), row->end());
  return w;
}

std::int64_t kostka_number(const NPartition& lambda, const Composition& d) {
  if (lambda.size() != d.size()) throw WeightMismatch("kostka_number: length mismatch");
  std::int64_t count = 0;
  for_each_ssyt(lambda, d, [&](const Tableau&) { ++count; });
  return count;
}

int charge(const std::vector<int>& word) {
  int top = 0;
  for (int x : word) {
    if (x < 1) throw std::invalid_argument("charge: letters must be positive");
    top = std::max(top, x);
  }
  std::vector<int> content(static_cast<std::size_t>(top) + 1, 0);
  for (int x : word) ++content[static_cast<std::size_t>(x)];
  for (int r = 1; r < top; ++r)
    if (content[static_cast<std::size_t>(r)] < content[static_cast<std::size_t>(r) + 1] ||
        content[static_cast<std::size_t>(r)] == 0)
      throw std::invalid_argument("charge: content is not a partition");

  const auto len = static_cast<int>(word.size());
  std::vector<bool> used(word.size(), false);
  int total = 0;
  int left = len;
  while (left > 0) {
    int biggest = 0;
    for (int i = 0; i < len; ++i)
      if (!used[static_cast<std::size_t>(i)]) biggest = std::max(biggest, word[static_cast<std::size_t>(i)]);
    // Scan leftwards cyclically for 1, 2, ...; wrapping past the left end bumps the index.
    int pos = len;
    int index = 0;
    for (int r = 1; r <= biggest; ++r) {
      int found = -1;
      for (int j = pos - 1; j >= 0; --j)
        if (!used[static_cast<std::size_t>(j)] && word[static_cast<std::size_t>(j)] == r) {
          found = j;
          break;
        }
      if (found < 0) {
        for (int j = len - 1; j >= pos; --j)
          if (!used[static_cast<std::size_t>(j)] && word[static_cast<std::size_t>(j)] == r) {
            found = j;
            break;
          }
        if (r > 1) ++index;
      }
      used[static_cast<std::size_t>(found)] = true;
      --left;
      total += index;
      pos = found;
    }
  }
  return total;
}

QPoly kostka_foulkes(const NPartition& lambda, const NPartition& mu) {
  if (lambda.size() != mu.size()) throw WeightMismatch("kostka_foulkes: length mismatch");
  if (lambda.weight() != mu.weight()) throw WeightMismatch("kostka_foulkes: weight mismatch");
  std::vector<std::int64_t> c;
  for_each_ssyt(lambda, mu.as_composition(), [&](const Tableau& t) {
    const auto k = static_cast<std::size_t>(charge(reading_word(t)));
    if (c.size() <= k) c.resize(k + 1, 0);
    ++c[k];
  });
  return QPoly(std::move(c));
}

namespace {

void gen_partitions(int remaining, int cap, int slots, std::vector<int>& cur, std::vector<NPartition>& out) {
  if (slots == 0) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  for (int x = std::min(cap, remaining); x >= 0; --x) {
    if (static_cast<long>(x) * slots < remaining) break;
    cur.push_back(x);
    gen_partitions(remaining - x, x, slots - 1, cur, out);
    cur.pop_back();
  }
}

void gen_compositions(int remaining, int slots, std::vector<int>& cur, std::vector<Composition>& out) {
  if (slots == 1) {
    cur.push_back(remaining);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int x = remaining; x >= 0; --x) {
    cur.push_back(x);
    gen_compositions(remaining - x, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<NPartition> partitions_of(int weight, int n) {
  if (weight < 0 || n < 1) throw std::invalid_argument("partitions_of: need weight >= 0 and n >= 1");
  std::vector<NPartition> out;
  std::vector<int> cur;
  gen_partitions(weight, weight, n, cur, out);
  return out;
}

std::vector<Composition> compositions_of(int weight, int n) {
  if (weight < 0 || n < 1) throw std::invalid_argument("compositions_of: need weight >= 0 and n >= 1");
  std::vector<Composition> out;
  std::vector<int> cur;
  gen_compositions(weight, n, cur, out);
  return out;
}

}  // namespace sph
