#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphon/densities.hpp"
#include "graphon/multipodal.hpp"
#include "graphon/optimize.hpp"
#include "graphon/spectral.hpp"
#include "graphon/verify.hpp"

namespace graphon {

/// Formats a double with 17 significant digits (exact round trip).
std::string format_double17(double v);

/// Graphon document: {"c": [...], "p": [[...]], "format_version": 1} plus the
/// optional metadata keys "label" and "provenance". In strict mode unknown
/// keys are rejected; in lenient mode they are preserved for round trips.
struct GraphonDocument {
    MultipodalGraphon graphon;
    int format_version = 1;
    std::optional<std::string> label;
    std::optional<std::string> provenance;
    std::string extra_fields;  // canonical JSON object of preserved unknown keys
};

/// Parses and validates. Off-symmetric inputs are symmetrized only when the
/// largest asymmetry is <= 1e-12; otherwise the diagnostic names the first
/// offending index pair. All invariant violations name indices.
MultipodalGraphon read_graphon(const std::string& bytes, bool strict = true);
GraphonDocument read_graphon_document(const std::string& bytes, bool strict = true);

/// Canonical JSON: keys sorted, floats with 17 significant digits, no
/// locale dependence. Refuses non-finite values. read(write(x)) == x on all
/// fields, and write is byte-stable.
std::string write_graphon(const MultipodalGraphon& g,
                          const std::optional<std::string>& label = std::nullopt);
std::string write_graphon_document(const GraphonDocument& doc);
std::string write_report(const DensityReport& report,
                         const Spectrum* spectral = nullptr,
                         const std::vector<double>* moments = nullptr,
                         std::optional<double> moment_center = std::nullopt);
std::string write_result(const OptimizerResult& result);
std::string write_verify(const VerifyReport& report);

}  // namespace graphon
