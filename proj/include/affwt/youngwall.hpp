#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affwt/atable.hpp"
#include "affwt/cartan.hpp"
#include "affwt/monomial.hpp"

namespace affwt {

/// Generalized Young wall of type A_n^(1): rows[r] is the number of boxes in
/// row r (0 = bottom), boxes stacked from the right edge. No trailing empty
/// rows.
class YoungWall {
 public:
  YoungWall() = default;
  explicit YoungWall(std::vector<int> rows);

  /// "2,2,2,1,1" (bottom row first); "" or "0" is the empty wall.
  static YoungWall parse(std::string_view text);
  std::string to_string() const;

  const std::vector<int>& rows() const { return rows_; }
  int height() const { return static_cast<int>(rows_.size()); }
  int row(int r) const { return r < height() ? rows_[static_cast<std::size_t>(r)] : 0; }
  bool empty() const { return rows_.empty(); }
  int total_boxes() const;

  friend auto operator<=>(const YoungWall&, const YoungWall&) = default;

 private:
  std::vector<int> rows_;
};

struct YoungWallHash {
  std::size_t operator()(const YoungWall& w) const;
};

/// Color of row r (from 0), column c (from 1, counted from the right): (r - c + 1) mod (n+1).
int box_color(int row, int column, int n);

bool is_proper(const YoungWall& w, int n);

/// a_{i,k} = number of i-colored boxes in column k (k >= 1).
ATable column_counts(const YoungWall& w, int n);

bool has_removable_delta(const YoungWall& w, int n, int k);
/// Removes one box of each color from column k. Throws NoRemovableDeltaError.
YoungWall remove_delta(const YoungWall& w, int n, int k);
/// Repeatedly removes the removable delta in the smallest column.
YoungWall reduce(const YoungWall& w, int n);
bool is_reduced(const YoungWall& w, int n);

enum class Sign { Minus, Plus };

struct SignatureEntry {
  Sign sign;
  int row;
  int column;  // column of the box (Minus) or of the slot (Plus)
  friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
};

/// i-signature after cancelling (+,-) pairs: all minuses, then all pluses.
struct Signature {
  std::vector<SignatureEntry> entries;

  int minus_count() const;
  int plus_count() const;
  bool well_formed() const;
};

/// Removable i-boxes and i-admissible slots in reading order (decreasing
/// column, ties bottom to top), before cancellation.
std::vector<SignatureEntry> signature_sequence(const YoungWall& w, int n, int i);
Signature signature(const YoungWall& w, int n, int i);

YoungWall apply_f(const YoungWall& w, int n, int i);
std::optional<YoungWall> apply_e(const YoungWall& w, int n, int i);
Int wall_eps(const YoungWall& w, int n, int i);

/// -sum_i k_i alpha_i, k_i the number of i-boxes.
WeightVector wall_weight(const YoungWall& w, int n);

/// prod A_{i,k}^{-a_{i,k+1}} with a the column counts.
Monomial psi(const YoungWall& w, int n);

/// Inverse of the column-count part of psi: the proper wall whose column
/// counts are -a_{i,k-1}. Throws InvariantError when no proper wall has
/// these counts.
YoungWall wall_from_a_table(const ATable& table, int n);

/// ASCII grid, top row first, color digits for boxes.
std::string render(const YoungWall& w, int n);

}  // namespace affwt
