#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "ginv/cli/report.hpp"
#include "ginv/harness.hpp"
#include "ginv/matrix.hpp"

namespace ginv::cli {

/// Size cap from GINV_MAX_DIM (default 64).
std::size_t max_dim();

/// Reads and parses a matrix file, enforcing the size cap.
Matrix load_matrix(const std::string& path);

// Each command fills a Report and sets its exit status; exceptions from the
// library propagate to run(), which maps them onto exit codes.

/// kind: mp, group, core, projector or index.
Report compute(std::string_view kind, const Matrix& t);
Report perturb(const Matrix& t, const Matrix& delta_t);
Report verify_theta(std::string_view theta, const Matrix& t, const Matrix& s);
Report verify_core(const Matrix& t, const Matrix& s);
Report fixtures();

struct FuzzArgs {
  std::string kind;
  std::size_t trials = 100;
  harness::GeneratorConfig cfg;
  unsigned threads = 1;
  std::optional<std::uint64_t> replay;
};
Report fuzz(const FuzzArgs& args);

Report witnesses(std::size_t trials, std::uint64_t seed);

/// Full command-line entry point. Writes the text report (or JSON with
/// --json) to `out`, diagnostics to `err`, and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ginv::cli
