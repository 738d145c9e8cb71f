#include "affwt/delta.hpp"

#include <algorithm>
#include <numeric>

#include "affwt/error.hpp"

namespace affwt {

namespace {

void require_type(const CartanDatum& datum, Family family, int min_rank, int max_rank, const char* what) {
  const auto& t = datum.type();
  if (t.family() != family || t.rank() < min_rank || t.rank() > max_rank) {
    throw UnsupportedTypeError(std::string(what) + " does not apply to type " + t.name());
  }
}

void require_indices(const CartanDatum& datum, const Monomial& m) {
  if (m.max_index() >= static_cast<int>(datum.num_nodes())) datum.check_index(m.max_index());
}

void check_reconstruction(const CartanDatum& datum, const Monomial& m, const ATable& table) {
  if (expand_a_product(datum, table) != m) {
    throw NotInCrystalError(m.to_string() + " is not in M(inf) of type " + datum.type().name() +
                            " (A-variable expansion does not reproduce it)");
  }
}

}  // namespace

ATable a1_recursion(const CartanDatum& datum, const Monomial& m) {
  require_type(datum, Family::A, 1, 1, "a1_recursion");
  require_indices(datum, m);
  ATable table;
  Int prev0 = 0;
  Int prev1 = 0;
  const int last = m.max_level() + 1;
  for (int k = 0; k <= last; ++k) {
    Int a1 = m.exponent(1, k);
    if (k > 0) a1 = checked_add(a1, checked_sub(checked_mul(2, prev0), prev1));
    Int a0 = checked_add(m.exponent(0, k), checked_mul(2, a1));
    if (k > 0) a0 = checked_sub(a0, prev0);
    table.set(0, k, a0);
    table.set(1, k, a1);
    prev0 = a0;
    prev1 = a1;
  }
  check_reconstruction(datum, m, table);
  return table;
}

Int a1_closed(const Monomial& m, int i, int k) {
  Int sum = 0;
  if (i == 0) {
    for (int j = 0; j <= k; ++j) {
      sum = checked_add(sum, checked_mul(2 * j + 1, m.exponent(0, k - j)));
      sum = checked_add(sum, checked_mul(2 * j + 2, m.exponent(1, k - j)));
    }
    return sum;
  }
  if (i != 1) throw IndexError("a1_closed: index must be 0 or 1");
  sum = checked_mul(2 * k + 1, m.exponent(1, 0));
  for (int j = 0; j <= k - 1; ++j) {
    sum = checked_add(sum, checked_mul(2 * j + 1, m.exponent(1, k - j)));
    sum = checked_add(sum, checked_mul(2 * j + 2, m.exponent(0, k - j - 1)));
  }
  return sum;
}

Int d_a1(const Monomial& m) {
  Int sum = 0;
  for (int k = 0; k <= m.max_level(); ++k) sum = checked_add(sum, a1_closed(m, 0, k));
  return sum;
}

std::vector<Int> solve_cyclic_differences(std::span<const Int> c) {
  Int total = 0;
  for (Int x : c) total = checked_add(total, x);
  if (total != 0) {
    throw InconsistentSystemError("cyclic difference system is inconsistent (sum of right-hand sides is " +
                                  std::to_string(total) + ")");
  }
  std::vector<Int> a(c.size(), 0);
  for (std::size_t i = 1; i < c.size(); ++i) a[i] = checked_add(a[i - 1], c[i]);
  return a;
}

std::vector<Int> column_differences(const CartanDatum& datum, const Monomial& m, int k) {
  const int size = static_cast<int>(datum.num_nodes());
  std::vector<Int> c(datum.num_nodes(), 0);
  for (int i = 0; i < size; ++i) {
    Int s = 0;
    for (int l = 0; l <= k; ++l) s = checked_add(s, m.exponent((i + l) % size, k - l));
    c[static_cast<std::size_t>(i)] = s;
  }
  return c;
}

ATable an_algorithm(const CartanDatum& datum, const Monomial& m) {
  require_type(datum, Family::A, 2, 1 << 20, "an_algorithm");
  require_indices(datum, m);
  ATable table;
  if (m.is_one()) return table;

  const int size = static_cast<int>(datum.num_nodes());
  // Step 1: top column m with some y_{i,top+1} != 0. If M has nothing above
  // level 0 it cannot be in M(inf); try top = 0 and let reconstruction fail.
  const int top = std::max(m.max_level() - 1, 0);

  std::vector<Int> above;  // column k+1
  for (int k = top; k >= 0; --k) {
    auto c = column_differences(datum, m, k);
    std::vector<Int> column;
    try {
      column = solve_cyclic_differences(c);
    } catch (const InconsistentSystemError& e) {
      throw InconsistentSystemError(m.to_string() + " is not in M(inf): column " + std::to_string(k) + ": " +
                                    e.what());
    }
    Int shift;
    if (above.empty()) {
      shift = checked_neg(*std::max_element(column.begin(), column.end()));
    } else {
      shift = checked_sub(above[static_cast<std::size_t>(size - 1)], column[0]);
      for (int i = 1; i < size; ++i) {
        shift = std::min(shift, checked_sub(above[static_cast<std::size_t>(i - 1)], column[static_cast<std::size_t>(i)]));
      }
    }
    for (auto& x : column) x = checked_add(x, shift);
    for (int i = 0; i < size; ++i) table.set(i, k, column[static_cast<std::size_t>(i)]);
    above = std::move(column);
  }
  check_reconstruction(datum, m, table);
  return table;
}

ATable bn_columns(const CartanDatum& datum, const Monomial& m, int columns) {
  require_type(datum, Family::B, 3, 1 << 20, "bn_recursion");
  require_indices(datum, m);
  const int n = datum.rank();
  const auto nodes = datum.num_nodes();
  ATable table;
  std::vector<Int> prev(nodes, 0);
  std::vector<Int> cur(nodes, 0);
  auto p = [&](int i) { return prev[static_cast<std::size_t>(i)]; };
  auto c = [&](int i) -> Int& { return cur[static_cast<std::size_t>(i)]; };
  for (int k = 0; k < columns; ++k) {
    c(0) = checked_sub(checked_add(m.exponent(0, k), p(2)), p(0));
    c(1) = checked_sub(checked_add(m.exponent(1, k), p(2)), p(1));
    c(2) = checked_add(checked_add(m.exponent(2, k), c(0)), c(1));
    c(2) = checked_sub(checked_add(c(2), p(3)), p(2));
    for (int i = 3; i <= n - 1; ++i) {
      c(i) = checked_add(checked_add(m.exponent(i, k), c(i - 1)), p(i + 1));
      c(i) = checked_sub(c(i), p(i));
    }
    c(n) = checked_sub(checked_add(m.exponent(n, k), checked_mul(2, c(n - 1))), p(n));
    for (int i = 0; i <= n; ++i) table.set(i, k, c(i));
    std::swap(prev, cur);
  }
  return table;
}

ATable bn_recursion(const CartanDatum& datum, const Monomial& m) {
  require_type(datum, Family::B, 3, 1 << 20, "bn_recursion");
  require_indices(datum, m);
  const int support = m.max_level();
  const int guard = support + datum.rank() + 1;
  ATable table = bn_columns(datum, m, guard + 2);
  // Beyond the support the recursion is homogeneous: one zero column forces
  // all later ones to vanish, so a nonzero column past the guard means the
  // table never terminates.
  if (table.max_column() > guard) {
    throw NotInCrystalError(m.to_string() + " is not in M(inf) of type " + datum.type().name() +
                            " (recursion does not terminate)");
  }
  check_reconstruction(datum, m, table);
  return table;
}

Int b3_closed(const Monomial& mono, int i, int m) {
  if (i < 0 || i > 3) throw IndexError("b3_closed: index must be in 0..3");
  if (mono.max_index() > 3) throw IndexError("b3_closed: " + mono.to_string() + " has an index above 3");
  auto fl = [](Int x) { return floor_div(x, 2); };
  Int sum = 0;
  for (int k = 0; k <= m; ++k) {
    const Int y0 = mono.exponent(0, m - k);
    const Int y1 = mono.exponent(1, m - k);
    const Int y2 = mono.exponent(2, m - k);
    const Int y3 = mono.exponent(3, m - k);
    const Int fork = 2 * fl(k) - fl(k - 1);
    Int term = 0;
    switch (i) {
      case 0:
        term = fork * y0 + fl(k + 1) * y1 + k * y2 + fl(k) * y3;
        break;
      case 1:
        term = fl(k + 1) * y0 + fork * y1 + k * y2 + fl(k) * y3;
        break;
      case 2:
        term = (k + 1) * y0 + (k + 1) * y1 + (2 * k + 1) * y2 + k * y3;
        break;
      default:
        term = 2 * fl(k + 2) * y0 + 2 * fl(k + 2) * y1 + (2 * k + 2) * y2 + (2 * fl(k) + 1) * y3;
        break;
    }
    sum = checked_add(sum, term);
  }
  return sum;
}

Int d_b3(const Monomial& m) {
  Int sum = 0;
  for (int level = 0; level <= m.max_level(); ++level) sum = checked_add(sum, b3_closed(m, 0, level));
  return sum;
}

ATable a_table(const CartanDatum& datum, const Monomial& m) {
  const auto& t = datum.type();
  if (t.family() == Family::A) return t.rank() == 1 ? a1_recursion(datum, m) : an_algorithm(datum, m);
  return bn_recursion(datum, m);
}

Int delta_coefficient(const CartanDatum& datum, const Monomial& m) {
  const auto& t = datum.type();
  if (t.family() == Family::A && t.rank() == 1) {
    a1_recursion(datum, m);  // membership
    return d_a1(m);
  }
  return a_table(datum, m).row_sum(0);
}

WeightVector wt_affine(const CartanDatum& datum, const Monomial& m) {
  WeightVector w = wt_classical(datum, m);
  w.dcoef = delta_coefficient(datum, m);
  return w;
}

WeightVector wt_lambda(const CartanDatum& datum, const Monomial& m, const DominantWeight& lambda) {
  if (lambda.coefficients().size() != datum.num_nodes()) {
    throw ParseError("dominant weight needs " + std::to_string(datum.num_nodes()) + " coefficients for type " +
                     datum.type().name());
  }
  WeightVector w = wt_classical(datum, m);
  w.dcoef = delta_coefficient(datum, embed_lambda(m, lambda));
  return w;
}

}  // namespace affwt
