#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "affwt/checked.hpp"

namespace affwt {

/// Position (i, k) of a variable Y_{i,k} or A_{i,k}.
struct Key {
  int i = 0;
  int k = 0;
  friend auto operator<=>(const Key&, const Key&) = default;
};

/// Exponents a_{i,k} of a product of A-variables. Absent keys are zero.
class ATable {
 public:
  struct Entry {
    int i;
    int k;
    Int a;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  ATable() = default;
  ATable(std::initializer_list<Entry> entries);

  Int get(int i, int k) const;
  /// Stores a; a zero removes the key.
  void set(int i, int k, Int a);
  void add(int i, int k, Int delta);

  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }
  /// Largest k in the support, or -1 for the empty table.
  int max_column() const;
  /// sum_k a_{i,k}.
  Int row_sum(int i) const;

  /// Entries sorted by (k, i).
  std::vector<Entry> entries() const;

  friend bool operator==(const ATable&, const ATable&) = default;

 private:
  std::map<Key, Int> values_;  // ordered by (i, k)
};

/// "{a(0,0)=-3, a(1,0)=-1}" in (k, i) order.
std::string to_string(const ATable& table);

}  // namespace affwt
