#include "affwt/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "affwt/error.hpp"

namespace affwt {

namespace {

bool same_key(const Monomial::Term& a, const Monomial::Term& b) { return a.i == b.i && a.k == b.k; }

// Partial sums S_0..S_K of row i, K = row_bound(i).
std::vector<Int> partial_sums(const Monomial& m, int i) {
  const int bound = m.row_bound(i);
  std::vector<Int> sums(static_cast<std::size_t>(bound) + 1, 0);
  for (const auto& t : m.terms()) {
    if (t.i == i) sums[static_cast<std::size_t>(t.k)] = t.exp;
  }
  for (std::size_t k = 1; k < sums.size(); ++k) sums[k] = checked_add(sums[k], sums[k - 1]);
  return sums;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  Int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    auto token = text_.substr(start, pos_ - start);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) fail("expected an integer");
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("monomial '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Monomial Monomial::from_terms(std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.i < 0 || t.k < 0) {
      throw IndexError("Y(" + std::to_string(t.i) + "," + std::to_string(t.k) + ") has a negative index");
    }
  }
  std::sort(terms.begin(), terms.end());
  Monomial m;
  for (const auto& t : terms) {
    if (!m.terms_.empty() && same_key(m.terms_.back(), t)) {
      m.terms_.back().exp = checked_add(m.terms_.back().exp, t.exp);
    } else {
      m.terms_.push_back(t);
    }
  }
  std::erase_if(m.terms_, [](const Term& t) { return t.exp == 0; });
  return m;
}

Monomial Monomial::var(int i, int k, Int exp) { return from_terms({Term{i, k, exp}}); }

Monomial Monomial::parse(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty input");
  if (cur.peek('1')) {
    cur.expect('1');
    if (!cur.done()) cur.fail("trailing characters after '1'");
    return {};
  }
  std::vector<Term> terms;
  while (!cur.done()) {
    cur.expect('Y');
    cur.expect('(');
    Int i = cur.integer();
    cur.expect(',');
    Int k = cur.integer();
    cur.expect(')');
    Int exp = 1;
    if (cur.peek('^')) {
      cur.expect('^');
      exp = cur.integer();
    }
    if (i < 0 || k < 0 || i > 1'000'000 || k > 1'000'000) cur.fail("index out of range");
    terms.push_back({static_cast<int>(i), static_cast<int>(k), exp});
  }
  return from_terms(std::move(terms));
}

std::string Monomial::to_string() const {
  if (terms_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out << ' ';
    out << "Y(" << t.i << ',' << t.k << ')';
    if (t.exp != 1) out << '^' << t.exp;
    first = false;
  }
  return out.str();
}

Int Monomial::exponent(int i, int k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{i, k, 0},
                             [](const Term& a, const Term& b) { return a.i != b.i ? a.i < b.i : a.k < b.k; });
  return (it != terms_.end() && it->i == i && it->k == k) ? it->exp : 0;
}

int Monomial::max_level() const {
  int best = 0;
  for (const auto& t : terms_) best = std::max(best, t.k);
  return best;
}

int Monomial::row_bound(int i) const {
  int best = 0;
  for (const auto& t : terms_) {
    if (t.i == i) best = std::max(best, t.k);
  }
  return best;
}

Int Monomial::row_sum(int i) const {
  Int sum = 0;
  for (const auto& t : terms_) {
    if (t.i == i) sum = checked_add(sum, t.exp);
  }
  return sum;
}

int Monomial::max_index() const { return terms_.empty() ? -1 : terms_.back().i; }

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  out.terms_.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && (a->i < b->i || (a->i == b->i && a->k < b->k)))) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || !same_key(*a, *b)) {
      out.terms_.push_back(*b++);
    } else {
      Int e = checked_add(a->exp, b->exp);
      if (e != 0) out.terms_.push_back({a->i, a->k, e});
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(Int e) const {
  if (e == 0) return {};
  Monomial out = *this;
  for (auto& t : out.terms_) t.exp = checked_mul(t.exp, e);
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::uint64_t v) {
    v ^= v >> 33;
    v *= 0xff51afd7ed558ccdULL;
    v ^= v >> 33;
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const auto& t : terms_) {
    mix((static_cast<std::uint64_t>(static_cast<std::uint32_t>(t.i)) << 32) | static_cast<std::uint32_t>(t.k));
    mix(static_cast<std::uint64_t>(t.exp));
  }
  return h;
}

DominantWeight::DominantWeight(std::vector<Int> p) : p_(std::move(p)) {
  for (Int x : p_) {
    if (x < 0) throw ParseError("dominant weight coefficients must be nonnegative");
  }
}

DominantWeight DominantWeight::parse(std::string_view text) {
  std::vector<Int> p;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(start, end - start);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("invalid dominant weight '" + std::string(text) + "'");
    }
    p.push_back(value);
    start = end + 1;
  }
  return DominantWeight(std::move(p));
}

WeightVector wt_classical(const CartanDatum& datum, const Monomial& m) {
  if (m.max_index() >= static_cast<int>(datum.num_nodes())) datum.check_index(m.max_index());
  WeightVector w(datum.num_nodes());
  for (const auto& t : m.terms()) {
    auto& slot = w.lambda[static_cast<std::size_t>(t.i)];
    slot = checked_add(slot, t.exp);
  }
  return w;
}

Int phi(const Monomial& m, int i) {
  auto sums = partial_sums(m, i);
  return *std::max_element(sums.begin(), sums.end());
}

Int eps(const Monomial& m, int i, CrystalVariant variant) {
  if (variant == CrystalVariant::ModifiedInfinity) {
    // phi_i - <h_i, wt>, and <h_i, wt> = sum_k y_{i,k}
    return checked_sub(phi(m, i), m.row_sum(i));
  }
  // max over k in Z of -sum_{j>k} y_{i,j}; k = -1 contributes -total, k >= K contributes 0
  auto sums = partial_sums(m, i);
  const Int total = sums.back();
  Int best = checked_neg(total);
  for (Int s : sums) best = std::max(best, checked_sub(s, total));
  return best;
}

int kf(const Monomial& m, int i) {
  auto sums = partial_sums(m, i);
  auto it = std::max_element(sums.begin(), sums.end());  // first maximum
  return static_cast<int>(it - sums.begin());
}

int ke(const Monomial& m, int i) {
  auto sums = partial_sums(m, i);
  const Int best = *std::max_element(sums.begin(), sums.end());
  int k = static_cast<int>(sums.size()) - 1;
  while (sums[static_cast<std::size_t>(k)] != best) --k;
  return k;
}

Monomial a_variable(const CartanDatum& datum, int i, int k) {
  datum.check_index(i);
  if (k < 0) throw IndexError("A-variable level must be nonnegative");
  std::vector<Monomial::Term> terms{{i, k, 1}, {i, k + 1, 1}};
  for (int j = 0; j < static_cast<int>(datum.num_nodes()); ++j) {
    if (j == i) continue;
    const int c = datum.cartan(j, i);
    if (c != 0) terms.push_back({j, k + datum.orientation(j, i), c});
  }
  return Monomial::from_terms(std::move(terms));
}

std::optional<Monomial> apply_f(const CartanDatum& datum, CrystalVariant variant, const Monomial& m, int i) {
  datum.check_index(i);
  if (variant == CrystalVariant::HighestWeight && phi(m, i) == 0) return std::nullopt;
  return a_variable(datum, i, kf(m, i)).inverse() * m;
}

std::optional<Monomial> apply_e(const CartanDatum& datum, CrystalVariant variant, const Monomial& m, int i) {
  datum.check_index(i);
  if (eps(m, i, variant) == 0) return std::nullopt;
  return a_variable(datum, i, ke(m, i)) * m;
}

std::optional<Monomial> apply_word(const CartanDatum& datum, CrystalVariant variant, const Monomial& start,
                                   std::span<const int> word) {
  std::optional<Monomial> cur = start;
  for (auto it = word.rbegin(); it != word.rend() && cur; ++it) cur = apply_f(datum, variant, *cur, *it);
  return cur;
}

std::vector<int> parse_word(std::string_view text) {
  std::vector<int> word;
  std::size_t start = 0;
  bool all_blank = std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (all_blank) return word;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(start, end - start);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
      throw ParseError("invalid word '" + std::string(text) + "'");
    }
    word.push_back(value);
    start = end + 1;
  }
  return word;
}

std::string format_word(std::span<const int> word) {
  std::string out;
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(word[j]);
  }
  return out;
}

Monomial h_lambda(const DominantWeight& lambda) {
  std::vector<Monomial::Term> terms;
  const auto& p = lambda.coefficients();
  for (std::size_t i = 0; i < p.size(); ++i) terms.push_back({static_cast<int>(i), 0, p[i]});
  return Monomial::from_terms(std::move(terms));
}

Monomial embed_lambda(const Monomial& m, const DominantWeight& lambda) { return h_lambda(lambda).inverse() * m; }

Monomial expand_a_product(const CartanDatum& datum, const ATable& table) {
  std::vector<Monomial::Term> terms;
  for (const auto& e : table.entries()) {
    const auto a = a_variable(datum, e.i, e.k);
    for (const auto& t : a.terms()) terms.push_back({t.i, t.k, checked_mul(t.exp, e.a)});
  }
  return Monomial::from_terms(std::move(terms));
}

}  // namespace affwt
