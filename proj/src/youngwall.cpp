#include "affwt/youngwall.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "affwt/error.hpp"

namespace affwt {

namespace {

void check_rank(int n) {
  if (n < 1) throw UnsupportedTypeError("Young walls need n >= 1");
}

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

void check_color(int i, int n) {
  if (i < 0 || i > n) throw IndexError("color " + std::to_string(i) + " outside 0.." + std::to_string(n));
}

}  // namespace

YoungWall::YoungWall(std::vector<int> rows) : rows_(std::move(rows)) {
  for (int r : rows_) {
    if (r < 0) throw ParseError("row lengths must be nonnegative");
  }
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
}

YoungWall YoungWall::parse(std::string_view text) {
  std::vector<int> rows;
  auto trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  if (trimmed.empty()) return {};
  std::size_t start = 0;
  while (start <= trimmed.size()) {
    auto end = trimmed.find(',', start);
    if (end == std::string_view::npos) end = trimmed.size();
    auto token = trimmed.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
      throw ParseError("invalid wall rows '" + std::string(text) + "'");
    }
    rows.push_back(value);
    start = end + 1;
  }
  return YoungWall(std::move(rows));
}

std::string YoungWall::to_string() const {
  if (rows_.empty()) return "";
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += ',';
    out += std::to_string(rows_[r]);
  }
  return out;
}

int YoungWall::total_boxes() const {
  int total = 0;
  for (int r : rows_) total += r;
  return total;
}

std::size_t YoungWallHash::operator()(const YoungWall& w) const {
  std::size_t h = 1469598103934665603ULL;
  for (int r : w.rows()) {
    h ^= static_cast<std::size_t>(r) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

int box_color(int row, int column, int n) { return mod(row - column + 1, n + 1); }

bool is_proper(const YoungWall& w, int n) {
  check_rank(n);
  const int period = n + 1;
  for (int q = 0; q < w.height(); ++q) {
    for (int p = q + period; p < w.height(); p += period) {
      if (w.row(p) > w.row(q)) return false;
    }
  }
  return true;
}

ATable column_counts(const YoungWall& w, int n) {
  check_rank(n);
  ATable counts;
  for (int r = 0; r < w.height(); ++r) {
    for (int c = 1; c <= w.row(r); ++c) counts.add(box_color(r, c, n), c, 1);
  }
  return counts;
}

bool has_removable_delta(const YoungWall& w, int n, int k) {
  check_rank(n);
  if (k < 1) throw IndexError("wall columns are numbered from 1");
  auto counts = column_counts(w, n);
  for (int i = 0; i <= n; ++i) {
    if (!(counts.get(mod(i - 1, n + 1), k + 1) < counts.get(i, k))) return false;
  }
  return true;
}

YoungWall remove_delta(const YoungWall& w, int n, int k) {
  if (!has_removable_delta(w, n, k)) {
    throw NoRemovableDeltaError("column " + std::to_string(k) + " of wall [" + w.to_string() +
                                "] has no removable delta");
  }
  // Same color in column k means same row class mod n+1; within a class the
  // highest row reaching column k is shortened so the class stays weakly
  // decreasing upwards.
  std::vector<int> rows = w.rows();
  const int period = n + 1;
  for (int cls = 0; cls < period; ++cls) {
    int target = -1;
    for (int r = cls; r < w.height(); r += period) {
      if (w.row(r) >= k) target = r;
    }
    if (target < 0 || w.row(target) != k) {
      throw NoRemovableDeltaError("column " + std::to_string(k) + " of wall [" + w.to_string() +
                                  "]: color class " + std::to_string(cls) + " has no removable box");
    }
    --rows[static_cast<std::size_t>(target)];
  }
  return YoungWall(std::move(rows));
}

YoungWall reduce(const YoungWall& w, int n) {
  YoungWall cur = w;
  for (;;) {
    int width = 0;
    for (int r : cur.rows()) width = std::max(width, r);
    int found = 0;
    for (int k = 1; k <= width && !found; ++k) {
      if (has_removable_delta(cur, n, k)) found = k;
    }
    if (!found) return cur;
    cur = remove_delta(cur, n, found);
  }
}

bool is_reduced(const YoungWall& w, int n) {
  int width = 0;
  for (int r : w.rows()) width = std::max(width, r);
  for (int k = 1; k <= width; ++k) {
    if (has_removable_delta(w, n, k)) return false;
  }
  return true;
}

int Signature::minus_count() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.sign == Sign::Minus; }));
}

int Signature::plus_count() const { return static_cast<int>(entries.size()) - minus_count(); }

bool Signature::well_formed() const {
  bool seen_plus = false;
  for (const auto& e : entries) {
    if (e.sign == Sign::Plus) seen_plus = true;
    if (e.sign == Sign::Minus && seen_plus) return false;
  }
  return true;
}

std::vector<SignatureEntry> signature_sequence(const YoungWall& w, int n, int i) {
  check_rank(n);
  check_color(i, n);
  std::vector<SignatureEntry> seq;
  // One period of empty rows above the support yields one fresh slot per color.
  const int last_row = w.height() + n;
  for (int r = 0; r <= last_row; ++r) {
    const int len = w.row(r);
    if (len > 0 && box_color(r, len, n) == i) seq.push_back({Sign::Minus, r, len});
    if (box_color(r, len + 1, n) == i) seq.push_back({Sign::Plus, r, len + 1});
  }
  std::stable_sort(seq.begin(), seq.end(), [](const SignatureEntry& a, const SignatureEntry& b) {
    return a.column != b.column ? a.column > b.column : a.row < b.row;
  });
  return seq;
}

Signature signature(const YoungWall& w, int n, int i) {
  Signature sig;
  for (const auto& e : signature_sequence(w, n, i)) {
    if (e.sign == Sign::Minus && !sig.entries.empty() && sig.entries.back().sign == Sign::Plus) {
      sig.entries.pop_back();
    } else {
      sig.entries.push_back(e);
    }
  }
  return sig;
}

YoungWall apply_f(const YoungWall& w, int n, int i) {
  auto sig = signature(w, n, i);
  auto it = std::find_if(sig.entries.begin(), sig.entries.end(), [](const auto& e) { return e.sign == Sign::Plus; });
  if (it == sig.entries.end()) throw InvariantError("i-signature without an admissible slot");
  std::vector<int> rows = w.rows();
  if (static_cast<int>(rows.size()) <= it->row) rows.resize(static_cast<std::size_t>(it->row) + 1, 0);
  ++rows[static_cast<std::size_t>(it->row)];
  YoungWall out(std::move(rows));
  if (!is_proper(out, n)) {
    throw InvariantError("f_" + std::to_string(i) + " of [" + w.to_string() + "] produced improper wall [" +
                         out.to_string() + "]");
  }
  return out;
}

std::optional<YoungWall> apply_e(const YoungWall& w, int n, int i) {
  auto sig = signature(w, n, i);
  auto it = std::find_if(sig.entries.rbegin(), sig.entries.rend(), [](const auto& e) { return e.sign == Sign::Minus; });
  if (it == sig.entries.rend()) return std::nullopt;
  std::vector<int> rows = w.rows();
  --rows[static_cast<std::size_t>(it->row)];
  return YoungWall(std::move(rows));
}

Int wall_eps(const YoungWall& w, int n, int i) { return signature(w, n, i).minus_count(); }

WeightVector wall_weight(const YoungWall& w, int n) {
  CartanDatum datum(AffineType(Family::A, n));
  WeightVector total(datum.num_nodes());
  auto counts = column_counts(w, n);
  for (int i = 0; i <= n; ++i) total -= counts.row_sum(i) * simple_root(datum, i);
  return total;
}

Monomial psi(const YoungWall& w, int n) {
  CartanDatum datum(AffineType(Family::A, n));
  ATable exps;
  for (const auto& e : column_counts(w, n).entries()) exps.set(e.i, e.k - 1, -e.a);
  return expand_a_product(datum, exps);
}

YoungWall wall_from_a_table(const ATable& table, int n) {
  check_rank(n);
  const int period = n + 1;
  const int width = table.max_column() + 1;
  std::vector<int> rows;
  for (int cls = 0; cls < period; ++cls) {
    // boxes of class cls in column c carry color (cls - c + 1) mod (n+1)
    std::vector<Int> reach;
    for (int c = 1; c <= width; ++c) {
      const Int count = -table.get(box_color(cls, c, n), c - 1);
      if (count < 0 || (!reach.empty() && count > reach.back())) {
        throw InvariantError("A-table " + to_string(table) + " is not the table of a proper Young wall");
      }
      reach.push_back(count);
    }
    const Int rows_in_class = reach.empty() ? 0 : reach.front();
    for (Int j = 0; j < rows_in_class; ++j) {
      int len = 0;
      while (len < width && reach[static_cast<std::size_t>(len)] > j) ++len;
      const auto r = static_cast<std::size_t>(cls + j * period);
      if (rows.size() <= r) rows.resize(r + 1, 0);
      rows[r] = len;
    }
  }
  for (const auto& e : table.entries()) {
    if (e.i < 0 || e.i > n) throw IndexError("A-table index outside 0.." + std::to_string(n));
  }
  return YoungWall(std::move(rows));
}

std::string render(const YoungWall& w, int n) {
  check_rank(n);
  int width = 0;
  for (int r : w.rows()) width = std::max(width, r);
  std::ostringstream out;
  for (int r = w.height() - 1; r >= 0; --r) {
    for (int c = width; c >= 1; --c) {
      if (c <= w.row(r)) {
        const int color = box_color(r, c, n);
        out << '[' << color << ']';
      } else {
        out << " . ";
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace affwt
