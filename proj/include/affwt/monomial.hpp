#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affwt/atable.hpp"
#include "affwt/cartan.hpp"

namespace affwt {

/// Laurent monomial prod Y_{i,k}^{y_{i,k}} in commuting variables (the
/// formal 1 of the modified model is implicit). Canonical form: terms sorted
/// by (i, k), no zero exponents, so equality is structural.
class Monomial {
 public:
  struct Term {
    int i;
    int k;
    Int exp;
    friend auto operator<=>(const Term&, const Term&) = default;
  };

  Monomial() = default;

  /// Merges duplicate keys and drops zero exponents. Requires i >= 0, k >= 0.
  static Monomial from_terms(std::vector<Term> terms);
  static Monomial var(int i, int k, Int exp = 1);

  /// Grammar: "1" | term (" " term)*, term := "Y(" i "," k ")" ["^" int].
  static Monomial parse(std::string_view text);
  std::string to_string() const;

  std::span<const Term> terms() const { return terms_; }
  bool is_one() const { return terms_.empty(); }
  Int exponent(int i, int k) const;

  /// Largest k with some y_{i,k} != 0 (0 for the empty monomial).
  int max_level() const;
  /// Largest k with y_{i,k} != 0 (0 for an empty row).
  int row_bound(int i) const;
  /// sum_k y_{i,k}.
  Int row_sum(int i) const;
  /// Largest node index appearing, or -1.
  int max_index() const;

  Monomial operator*(const Monomial& rhs) const;
  Monomial inverse() const;
  Monomial pow(Int e) const;

  std::size_t hash() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Term> terms_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

inline Monomial mul(const Monomial& a, const Monomial& b) { return a * b; }
inline Monomial inv(const Monomial& m) { return m.inverse(); }

/// Which epsilon / f rules apply: the modified model of B(inf), or
/// Kashiwara's model of B(lambda).
enum class CrystalVariant { ModifiedInfinity, HighestWeight };

/// lambda = sum p_i Lambda_i with every p_i >= 0.
class DominantWeight {
 public:
  explicit DominantWeight(std::vector<Int> p);
  static DominantWeight parse(std::string_view text);  // "0,2,0"

  const std::vector<Int>& coefficients() const { return p_; }
  WeightVector weight() const { return fundamental_combination(p_); }

 private:
  std::vector<Int> p_;
};

/// sum_i (sum_k y_{i,k}) Lambda_i; the delta part is left at 0.
WeightVector wt_classical(const CartanDatum& datum, const Monomial& m);

Int phi(const Monomial& m, int i);
Int eps(const Monomial& m, int i, CrystalVariant variant);
int kf(const Monomial& m, int i);
int ke(const Monomial& m, int i);

/// A_{i,k} = Y_{i,k} Y_{i,k+1} prod_{j != i} Y_{j, k + o_{j,i}}^{C_{ji}}.
Monomial a_variable(const CartanDatum& datum, int i, int k);

/// std::nullopt is the crystal's 0.
std::optional<Monomial> apply_f(const CartanDatum& datum, CrystalVariant variant, const Monomial& m, int i);
std::optional<Monomial> apply_e(const CartanDatum& datum, CrystalVariant variant, const Monomial& m, int i);

/// word (b1, ..., bl) acts as f_{b1} f_{b2} ... f_{bl}: the rightmost letter first.
std::optional<Monomial> apply_word(const CartanDatum& datum, CrystalVariant variant, const Monomial& start,
                                   std::span<const int> word);

/// Comma-separated node indices, e.g. "0,1,0,0,0". Empty string gives the empty word.
std::vector<int> parse_word(std::string_view text);
std::string format_word(std::span<const int> word);

Monomial h_lambda(const DominantWeight& lambda);
/// H_lambda^{-1} M, the B(inf) component of the embedding M(lambda) -> M(inf) (x) T_lambda.
Monomial embed_lambda(const Monomial& m, const DominantWeight& lambda);

Monomial expand_a_product(const CartanDatum& datum, const ATable& table);

}  // namespace affwt
