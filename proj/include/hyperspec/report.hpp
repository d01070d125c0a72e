#pragma once

#include <iosfwd>
#include <string>

#include "hyperspec/extremal.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec {

enum class OutputFormat { json, csv, text };

OutputFormat parse_format(const std::string& name);

// Every JSON document carries "schema": 1 at the top level. Field layouts are
// listed in README.md; the emitters below are the source of truth.

void write_spectral(std::ostream& out, OutputFormat format, const std::string& family, const SpectralResult& result,
                    bool with_vector);
void write_extremal(std::ostream& out, OutputFormat format, const ExtremalReport& report);
void write_verification(std::ostream& out, OutputFormat format, const std::string& suite,
                        const std::vector<VerificationReport>& reports);

}  // namespace hyperspec
