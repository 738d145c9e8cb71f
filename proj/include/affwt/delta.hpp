#pragma once

#include <span>
#include <vector>

#include "affwt/atable.hpp"
#include "affwt/cartan.hpp"
#include "affwt/monomial.hpp"

namespace affwt {

// --- A_1^(1) ---------------------------------------------------------------

/// Column-by-column solution of M = prod A_{i,k}^{a_{i,k}} in type A1
/// (a_{1,k} first, then a_{0,k}). Throws NotInCrystalError when the
/// resulting product does not reproduce M.
ATable a1_recursion(const CartanDatum& datum, const Monomial& m);

/// Closed form of a_{i,k} in type A1 as a weighted sum of the y's.
Int a1_closed(const Monomial& m, int i, int k);

/// sum over k <= K of a1_closed(m, 0, k), K the support bound of m.
Int d_a1(const Monomial& m);

// --- A_n^(1), n >= 2 -------------------------------------------------------

/// Particular solution of a_i - a_{i-1} = c_i (indices mod n+1) with a_0 = 0.
/// Every other solution is a constant shift of this one.
/// Throws InconsistentSystemError when sum(c) != 0.
std::vector<Int> solve_cyclic_differences(std::span<const Int> c);

/// Right-hand sides c_i = sum_{l=0}^{k} y_{i+l, k-l} of the column-k system.
std::vector<Int> column_differences(const CartanDatum& datum, const Monomial& m, int k);

/// The A-table of the reduced proper Young wall of m: top column shifted so
/// its maximum is 0, lower columns shifted maximally subject to
/// a_{i,k} <= min(0, a_{i-1,k+1}).
ATable an_algorithm(const CartanDatum& datum, const Monomial& m);

// --- B_n^(1), n >= 3 -------------------------------------------------------

/// The triangular recursion for the first `columns` columns, without any
/// membership check. Linear in m.
ATable bn_columns(const CartanDatum& datum, const Monomial& m, int columns);

/// bn_columns run to termination plus a reconstruction check.
ATable bn_recursion(const CartanDatum& datum, const Monomial& m);

/// Floor-coefficient closed form of a_{i,m} in type B3.
Int b3_closed(const Monomial& mono, int i, int m);

Int d_b3(const Monomial& m);

// --- dispatch --------------------------------------------------------------

/// A-table used for the delta coefficient of the given type.
ATable a_table(const CartanDatum& datum, const Monomial& m);

/// D(M): the coefficient of delta in wt(M) for M in M(inf).
Int delta_coefficient(const CartanDatum& datum, const Monomial& m);

/// wt_classical(M) + D(M) delta.
WeightVector wt_affine(const CartanDatum& datum, const Monomial& m);

/// Weight of M in M(lambda): classical part from M, delta part D(H_lambda^{-1} M).
WeightVector wt_lambda(const CartanDatum& datum, const Monomial& m, const DominantWeight& lambda);

}  // namespace affwt
