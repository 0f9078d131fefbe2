#pragma once

#include <optional>
#include <string>

#include "analytic_map.hpp"
#include "sup_search.hpp"

namespace blochcomp::spec {

/// Parse or validation failure, with position/offending-node context in what().
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct BudgetOverrides {
  std::optional<int> k_max;
  std::optional<double> rel_tol;
  std::optional<int> profile_k_max;
};

/// A validated map-specification document: a JSON-syntax expression tree for
/// the self-map plus optional harmonic components and budget overrides.
struct MapSpecDocument {
  std::optional<fn::AnalyticMap> map;
  bool map_is_extremal = false;  // root node has kind "extremal"
  double alpha = 1.0;
  std::optional<fn::AnalyticMap> h;
  std::optional<fn::AnalyticMap> g;
  BudgetOverrides budget;
  std::string source_text;  // verbatim input, for the run-record digest
};

/// Parses a document. Node kinds: "poly", "moebius", "blaschke", "series",
/// "scale", "compose", "product", "affine", "extremal", "boundary_power".
/// Complex numbers are two-element arrays [re, im] (a bare number is read as a
/// real). Throws ParseError on malformed input.
MapSpecDocument parse_spec(const std::string& text);

/// FNV-1a digest of the input text, for reproducible run records.
std::string digest(const std::string& text);

}  // namespace blochcomp::spec
