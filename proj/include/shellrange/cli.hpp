#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "shellrange/core_matrix.hpp"
#include "shellrange/hyp_models.hpp"

namespace shellrange {

enum class Subcommand { Classify, Range, Shell, NR, Verify, Emit };
enum class OutputFormat { Json, Csv, Svg };

struct RunConfig {
  Subcommand subcommand = Subcommand::Classify;
  Model model = Model::BCK2;  ///< planar model; spatial output uses its 3D counterpart
  std::size_t samples = 100000;
  bool samples_given = false;
  std::uint64_t seed = 0;
  double tolerance = 1e-8;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> output_path;
};

/// Writes the document for `cfg` to `out`. Returns the process exit code:
/// 0 ok, 1 configuration error, 2 failed verification.
int run(const RunConfig& cfg, const Mat2C& a, std::ostream& out);

int cli_main(int argc, char** argv);

}  // namespace shellrange
