#include "ginv/theta.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <utility>

#include "ginv/error.hpp"
#include "ginv/linalg.hpp"

namespace ginv {

namespace {

void require_square_pair(const Matrix& t, const Matrix& s) {
  if (!t.is_square() || !s.is_square() || t.rows() != s.rows()) {
    throw DimensionError("theta-inverse checks need square matrices of equal size");
  }
}

void require_square(const Matrix& t, const char* what) {
  if (!t.is_square()) throw DimensionError(std::string(what) + ": matrix must be square");
}

void verify(bool ok, const char* what) {
  if (!ok) throw InternalInconsistencyError(std::string(what) + " failed its postcondition check");
}

struct Alias {
  std::string_view name;
  ThetaSet (*make)();
};

constexpr std::array<Alias, 7> kAliases{{
    {"inner", &ThetaSet::inner},
    {"outer", &ThetaSet::outer},
    {"generalized", &ThetaSet::generalized},
    {"moore_penrose", &ThetaSet::moore_penrose},
    {"group", &ThetaSet::group},
    {"core_matrix", &ThetaSet::core_matrix},
    {"core_operator", &ThetaSet::core_operator},
}};

}  // namespace

ThetaSet::ThetaSet(std::initializer_list<int> ids) {
  for (int id : ids) {
    if (id < 1 || id > 7) throw std::invalid_argument("equation id out of range 1..7");
    bits_.set(static_cast<std::size_t>(id));
  }
  if (bits_.none()) throw std::invalid_argument("theta set must be nonempty");
}

ThetaSet ThetaSet::parse(std::string_view text) {
  for (const auto& alias : kAliases) {
    if (text == alias.name) return alias.make();
  }
  if (!text.empty() && text.front() == '{' && text.back() == '}') {
    text = text.substr(1, text.size() - 2);
  }
  ThetaSet out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    int id = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size() || id < 1 || id > 7) {
      throw std::invalid_argument("invalid theta set: " + std::string(text));
    }
    out.bits_.set(static_cast<std::size_t>(id));
    pos = end + 1;
  }
  if (out.bits_.none()) throw std::invalid_argument("theta set must be nonempty");
  return out;
}

std::vector<PenroseEquation> ThetaSet::equations() const {
  std::vector<PenroseEquation> out;
  for (int id = 1; id <= 7; ++id) {
    if (contains(id)) out.push_back(static_cast<PenroseEquation>(id));
  }
  return out;
}

std::string ThetaSet::to_string() const {
  std::string out = "{";
  for (int id = 1; id <= 7; ++id) {
    if (!contains(id)) continue;
    if (out.size() > 1) out += ',';
    out += static_cast<char>('0' + id);
  }
  return out + "}";
}

bool check_equation(PenroseEquation eq, const Matrix& t, const Matrix& s) {
  require_square_pair(t, s);
  switch (eq) {
    case PenroseEquation::kInner:
      return t * s * t == t;
    case PenroseEquation::kOuter:
      return s * t * s == s;
    case PenroseEquation::kLeftHermitian: {
      const Matrix ts = t * s;
      return ts.adjoint() == ts;
    }
    case PenroseEquation::kRightHermitian: {
      const Matrix st = s * t;
      return st.adjoint() == st;
    }
    case PenroseEquation::kCommuting:
      return t * s == s * t;
    case PenroseEquation::kRightAbsorb:
      return s * t * t == t;
    case PenroseEquation::kLeftAbsorb:
      return t * s * s == s;
  }
  throw std::invalid_argument("unknown equation id");
}

bool is_theta_inverse(const ThetaSet& theta, const Matrix& t, const Matrix& s) {
  require_square_pair(t, s);
  const auto eqs = theta.equations();
  return std::all_of(eqs.begin(), eqs.end(),
                     [&](PenroseEquation eq) { return check_equation(eq, t, s); });
}

IndexReport index(const Matrix& t) {
  require_square(t, "index");
  IndexReport report;
  report.rank_sequence.push_back(t.rows());
  Matrix p = t;
  for (std::size_t k = 0;; ++k) {
    report.rank_sequence.push_back(rank(p));
    if (report.rank_sequence[k] == report.rank_sequence[k + 1]) {
      report.index = k;
      return report;
    }
    p = p * t;
  }
}

Matrix moore_penrose(const Matrix& t) {
  require_square(t, "moore_penrose");
  Matrix s = pseudo_inverse(t);
  verify(is_theta_inverse(ThetaSet::moore_penrose(), t, s), "moore_penrose");
  return s;
}

Matrix group_inverse(const Matrix& t) {
  require_square(t, "group_inverse");
  const auto [f, g, r] = full_rank_factorization(t);
  const Matrix gf = g * f;
  if (determinant(gf).is_zero()) throw IndexError("group inverse does not exist: index(T) >= 2");
  const Matrix gf_inv = inverse(gf);
  Matrix s = f * gf_inv * gf_inv * g;
  verify(is_theta_inverse(ThetaSet::group(), t, s), "group_inverse");
  return s;
}

Matrix core_inverse(const Matrix& t) {
  require_square(t, "core_inverse");
  const auto [f, g, r] = full_rank_factorization(t);
  const Matrix gf = g * f;
  if (determinant(gf).is_zero()) throw IndexError("core inverse does not exist: index(T) >= 2");
  const Matrix fs = f.adjoint();
  Matrix s = f * inverse(gf) * inverse(fs * f) * fs;

  verify(is_theta_inverse(ThetaSet::core_operator(), t, s), "core_inverse equations");
  verify(t * s == orthogonal_projector(t), "core_inverse T*S = P_T");
  verify(same_range(s, t), "core_inverse R(S) = R(T)");
  verify(same_range(null_space_basis(s), null_space_basis(t.adjoint())), "core_inverse N(S) = N(T*)");
  return s;
}

Matrix orthogonal_projector(const Matrix& t) { return t * pseudo_inverse(t); }

bool is_core_inverse_def11(const Matrix& t, const Matrix& s) {
  require_square_pair(t, s);
  if (index(t).index > 1) throw IndexError("definition via P_T requires index(T) <= 1");
  return t * s == orthogonal_projector(t) && subspace_leq(s, t);
}

bool is_core_inverse_def12(const Matrix& t, const Matrix& s) {
  require_square_pair(t, s);
  return t * s * t == t && same_range(s, t) &&
         same_range(null_space_basis(s), null_space_basis(t.adjoint()));
}

}  // namespace ginv
