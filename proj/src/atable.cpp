#include "affwt/atable.hpp"

#include <algorithm>
#include <sstream>

namespace affwt {

ATable::ATable(std::initializer_list<Entry> entries) {
  for (const auto& e : entries) add(e.i, e.k, e.a);
}

Int ATable::get(int i, int k) const {
  auto it = values_.find(Key{i, k});
  return it == values_.end() ? 0 : it->second;
}

void ATable::set(int i, int k, Int a) {
  if (a == 0) {
    values_.erase(Key{i, k});
  } else {
    values_[Key{i, k}] = a;
  }
}

void ATable::add(int i, int k, Int delta) { set(i, k, checked_add(get(i, k), delta)); }

int ATable::max_column() const {
  int best = -1;
  for (const auto& [key, a] : values_) best = std::max(best, key.k);
  return best;
}

Int ATable::row_sum(int i) const {
  Int sum = 0;
  for (auto it = values_.lower_bound(Key{i, 0}); it != values_.end() && it->first.i == i; ++it) {
    sum = checked_add(sum, it->second);
  }
  return sum;
}

std::vector<ATable::Entry> ATable::entries() const {
  std::vector<Entry> out;
  out.reserve(values_.size());
  for (const auto& [key, a] : values_) out.push_back({key.i, key.k, a});
  std::sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) {
    return x.k != y.k ? x.k < y.k : x.i < y.i;
  });
  return out;
}

std::string to_string(const ATable& table) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& e : table.entries()) {
    if (!first) out << ", ";
    out << "a(" << e.i << ',' << e.k << ")=" << e.a;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace affwt
