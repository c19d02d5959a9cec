#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lseries/bounds.hpp"
#include "lseries/coefficients.hpp"
#include "lseries/seminorms.hpp"
#include "lseries/series.hpp"

namespace lseries {

/// Round-trip decimal form, stable across runs.
std::string format_double(double x);

/// Write via a temporary file and rename, so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

// CSV layouts; the columns are documented in the README and append-only.
std::string to_csv(const CoefficientTable& table);
std::string to_csv(const std::vector<SeminormReport>& reports);
std::string to_csv(const TailProfile& profile);
std::string to_csv(const std::vector<BoundCertificate>& certificates);

}  // namespace lseries
