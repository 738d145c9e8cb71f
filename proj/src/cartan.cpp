#include "affwt/cartan.hpp"

#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>

#include "affwt/error.hpp"

namespace affwt {

AffineType::AffineType(Family family, int rank) : family_(family), rank_(rank) {
  const int min_rank = family == Family::A ? 1 : 3;
  if (rank < min_rank) {
    throw UnsupportedTypeError(std::string(family == Family::A ? "A" : "B") + std::to_string(rank) +
                               ": rank must be at least " + std::to_string(min_rank));
  }
}

AffineType AffineType::parse(std::string_view text) {
  if (text.size() < 2) throw ParseError("invalid type string '" + std::string(text) + "'");
  Family family;
  switch (std::toupper(static_cast<unsigned char>(text.front()))) {
    case 'A':
      family = Family::A;
      break;
    case 'B':
      family = Family::B;
      break;
    default:
      throw UnsupportedTypeError("unsupported type family '" + std::string(text) + "'");
  }
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError("invalid rank in type string '" + std::string(text) + "'");
  }
  return AffineType(family, rank);
}

std::string AffineType::name() const {
  return (family_ == Family::A ? "A" : "B") + std::to_string(rank_);
}

std::ostream& operator<<(std::ostream& os, const AffineType& t) { return os << t.name(); }

WeightVector& WeightVector::operator+=(const WeightVector& rhs) {
  if (lambda.size() != rhs.lambda.size()) throw Error("weight vectors of different rank");
  for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] = checked_add(lambda[i], rhs.lambda[i]);
  dcoef = checked_add(dcoef, rhs.dcoef);
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& rhs) {
  if (lambda.size() != rhs.lambda.size()) throw Error("weight vectors of different rank");
  for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] = checked_sub(lambda[i], rhs.lambda[i]);
  dcoef = checked_sub(dcoef, rhs.dcoef);
  return *this;
}

WeightVector operator+(WeightVector lhs, const WeightVector& rhs) { return lhs += rhs; }
WeightVector operator-(WeightVector lhs, const WeightVector& rhs) { return lhs -= rhs; }

WeightVector operator*(Int scalar, WeightVector w) {
  for (auto& x : w.lambda) x = checked_mul(scalar, x);
  w.dcoef = checked_mul(scalar, w.dcoef);
  return w;
}

namespace {

void append_term(std::ostringstream& out, bool& first, Int coef, const std::string& symbol) {
  if (coef == 0) return;
  Int mag = coef < 0 ? -coef : coef;
  if (first) {
    if (coef < 0) out << '-';
  } else {
    out << (coef < 0 ? " - " : " + ");
  }
  if (mag != 1) out << mag;
  out << symbol;
  first = false;
}

}  // namespace

std::string format_weight(const WeightVector& w) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < w.lambda.size(); ++i) {
    append_term(out, first, w.lambda[i], "Λ" + std::to_string(i));
  }
  append_term(out, first, w.dcoef, "δ");
  if (first) return "0";
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const WeightVector& w) { return os << format_weight(w); }

CartanDatum::CartanDatum(AffineType type) : type_(type) {
  const int size = static_cast<int>(type_.num_nodes());
  const int n = type_.rank();
  matrix_.assign(static_cast<std::size_t>(size * size), 0);
  auto at = [&](int i, int j) -> int& { return matrix_[static_cast<std::size_t>(i * size + j)]; };
  for (int i = 0; i < size; ++i) at(i, i) = 2;

  if (type_.family() == Family::A) {
    if (n == 1) {
      at(0, 1) = -2;
      at(1, 0) = -2;
    } else {
      for (int i = 0; i < size; ++i) {
        int j = (i + 1) % size;
        at(i, j) = -1;
        at(j, i) = -1;
      }
    }
  } else {
    // 0 and 1 fork off node 2; node n is the short root.
    at(0, 2) = at(2, 0) = -1;
    at(1, 2) = at(2, 1) = -1;
    for (int i = 2; i + 1 < n; ++i) at(i, i + 1) = at(i + 1, i) = -1;
    at(n - 1, n) = -1;
    at(n, n - 1) = -2;
  }
}

int CartanDatum::cartan(int i, int j) const {
  check_index(i);
  check_index(j);
  return matrix_[static_cast<std::size_t>(i) * num_nodes() + static_cast<std::size_t>(j)];
}

int CartanDatum::orientation(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) throw IndexError("orientation o_{i,i} is undefined");
  const int n = rank();
  if (type_.family() == Family::A) {
    // I is Z/(n+1); the wrap-around edge is oriented n -> 0.
    if (i == 0 && j == n) return 0;
    if (i == n && j == 0) return 1;
  }
  return i < j ? 1 : 0;
}

void CartanDatum::check_index(int i) const {
  if (!valid_index(i)) {
    throw IndexError("index " + std::to_string(i) + " outside I = {0.." + std::to_string(rank()) +
                     "} for " + type_.name());
  }
}

CartanDatum build_datum(const AffineType& type) { return CartanDatum(type); }

WeightVector simple_root(const CartanDatum& datum, int j) {
  datum.check_index(j);
  WeightVector w(datum.num_nodes());
  for (std::size_t i = 0; i < datum.num_nodes(); ++i) w.lambda[i] = datum.cartan(static_cast<int>(i), j);
  w.dcoef = j == 0 ? 1 : 0;
  return w;
}

std::vector<Int> delta_in_roots(const CartanDatum& datum) {
  std::vector<Int> d(datum.num_nodes(), 1);
  if (datum.type().family() == Family::B) {
    for (std::size_t i = 2; i < d.size(); ++i) d[i] = 2;
  }
  return d;
}

WeightVector fundamental_combination(const std::vector<Int>& p) { return WeightVector(p, 0); }

}  // namespace affwt
