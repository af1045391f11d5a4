#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wiener/claims.hpp"
#include "wiener/graph.hpp"
#include "wiener/roots.hpp"

namespace wiener {

/// Shortest round-trip text is not stable across libraries; fixed 17
/// significant digits are.
std::string format_double(double v);

std::string to_json(const ClaimReport& report, int indent = 2);
std::string to_json(const std::vector<ClaimReport>& reports, int indent = 2);
std::string to_json(const ExtremalReport& report, int indent = 2);

/// claim_id,params,verdict,witnesses,counterexamples,runtime_s
std::string suite_csv(const std::vector<ClaimReport>& reports);

struct RootRecord {
  std::string source;
  std::optional<DistanceDistribution> distribution;
  std::vector<ComplexRoot> roots;
  std::vector<ImaginaryRoot> imaginary;
  /// Set instead of the other fields when the input could not be analysed.
  std::string error;
};

/// Root data for one graph: source, d-vector, W, Wiener index, annulus,
/// roots and exact purely imaginary roots.
RootRecord analyse(std::string source, const DistanceDistribution& dd);

std::string to_json(const std::vector<RootRecord>& records, int indent = 2);
/// source,d,re,im,residual,exact,error
std::string to_csv(const std::vector<RootRecord>& records);

/// Bare "re,im" rows, the root 0 first for each record.
std::string scatter_csv(const std::vector<RootRecord>& records);

}  // namespace wiener
