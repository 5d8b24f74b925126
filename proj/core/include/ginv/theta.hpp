#pragma once

#include <bitset>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ginv/matrix.hpp"

namespace ginv {

/// The seven defining equations for a candidate S of T:
///   (1) TST = T      (2) STS = S      (3) (TS)* = TS   (4) (ST)* = ST
///   (5) TS = ST      (6) ST^2 = T     (7) TS^2 = S
enum class PenroseEquation : int {
  kInner = 1,
  kOuter = 2,
  kLeftHermitian = 3,
  kRightHermitian = 4,
  kCommuting = 5,
  kRightAbsorb = 6,
  kLeftAbsorb = 7,
};

/// Nonempty subset of {1,...,7}.
class ThetaSet {
public:
  ThetaSet(std::initializer_list<int> ids);

  static ThetaSet inner() { return {1}; }
  static ThetaSet outer() { return {2}; }
  static ThetaSet generalized() { return {1, 2}; }
  static ThetaSet moore_penrose() { return {1, 2, 3, 4}; }
  static ThetaSet group() { return {1, 2, 5}; }
  static ThetaSet core_matrix() { return {1, 3, 7}; }
  static ThetaSet core_operator() { return {1, 2, 3, 6, 7}; }

  /// Accepts an alias name ("moore_penrose", "core_matrix", ...) or a
  /// comma-separated id list, optionally braced: "1,3,7" / "{1,3,7}".
  /// Throws std::invalid_argument on anything else.
  static ThetaSet parse(std::string_view text);

  bool contains(int id) const { return id >= 1 && id <= 7 && bits_.test(static_cast<std::size_t>(id)); }
  std::vector<PenroseEquation> equations() const;
  std::string to_string() const;

  friend bool operator==(const ThetaSet&, const ThetaSet&) = default;

private:
  ThetaSet() = default;
  std::bitset<8> bits_;
};

/// Exact evaluation of one equation. Both matrices must be square of the same
/// size; throws DimensionError otherwise.
bool check_equation(PenroseEquation eq, const Matrix& t, const Matrix& s);

/// Conjunction of check_equation over theta.
bool is_theta_inverse(const ThetaSet& theta, const Matrix& t, const Matrix& s);

struct IndexReport {
  std::size_t index = 0;
  /// rank(T^0), rank(T^1), ..., ending at the first repeated value.
  std::vector<std::size_t> rank_sequence;
};

/// Smallest k with rank(T^k) == rank(T^(k+1)); never exceeds n.
IndexReport index(const Matrix& t);

// Constructors below verify their result against the defining equations and
// throw InternalInconsistencyError if the check fails.

/// {1,2,3,4}-inverse of a square matrix.
Matrix moore_penrose(const Matrix& t);

/// {1,2,5}-inverse f (gf)^-2 g. Throws IndexError when index(t) >= 2.
Matrix group_inverse(const Matrix& t);

/// Core inverse f (gf)^-1 (f*f)^-1 f*. Throws IndexError when index(t) >= 2.
/// Checked against equations (1),(2),(3),(6),(7), T T^core = P_T,
/// R(T^core) = R(T) and N(T^core) = N(T*).
Matrix core_inverse(const Matrix& t);

/// P_T = T T^+, the orthogonal projector onto R(T).
Matrix orthogonal_projector(const Matrix& t);

/// T S = P_T and R(S) contained in R(T). Throws IndexError if index(t) > 1.
bool is_core_inverse_def11(const Matrix& t, const Matrix& s);

/// T S T = T, R(S) = R(T) and N(S) = N(T*).
bool is_core_inverse_def12(const Matrix& t, const Matrix& s);

}  // namespace ginv
