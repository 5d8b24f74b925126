#include "ginv/fixtures.hpp"

namespace ginv::fixtures {

namespace {

Matrix base_t() { return {{1, 0, 2, 4}, {2, 1, -1, 0}, {2, 2, 0, 1}, {1, -2, 0, 2}}; }

Matrix base_t_core() {
  return scaled({{-30, 60, 40, 10}, {21, -18, 8, -31}, {-15, 30, 40, -35}, {42, -36, -24, 18}}, 120);
}

}  // namespace

Matrix scaled(std::initializer_list<std::initializer_list<std::int64_t>> rows, std::int64_t den) {
  return Matrix(rows) * Scalar::rational(1, den);
}

ReferenceCase range_preserving() {
  return {
      base_t(),
      {{0, -1, 0, -4}, {-2, -2, -2, 2}, {-4, -2, -4, 0}, {4, -1, 4, 0}},
      {{1, -1, 2, 0}, {0, -1, -3, 2}, {-2, 0, -4, 1}, {5, -3, 4, 2}},
      base_t_core(),
      scaled({{30, 0, 10, 10}, {-201, 18, -88, 11}, {-75, 0, -40, 5}, {-222, 36, -86, 22}}, 90),
  };
}

ReferenceCase range_violating() {
  return {
      base_t(),
      {{1, 0, -2, -2}, {-2, 1, 1, -1}, {-2, -2, 2, 2}, {-1, 2, 0, -2}},
      {{2, 0, 0, 2}, {0, 2, 0, -1}, {0, 0, 2, 3}, {0, 0, 0, 0}},
      base_t_core(),
      scaled({{6, 4, -4, 22}, {-1, 2, 2, -1}, {3, 6, -2, 19}, {-2, -4, 4, -18}}, 8),
  };
}

Matrix range_violating_tbar_core() {
  return scaled({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}}, 2);
}

Matrix range_basis() { return Matrix{{1, 2, 2, 1}, {0, 1, 2, -2}, {2, -1, 0, 0}}.transpose(); }

}  // namespace ginv::fixtures
