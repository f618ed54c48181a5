#pragma once

#include "spinchain/experiments.hpp"
#include "spinchain/transfer.hpp"

#include <string>

namespace spinchain {

/// %.17g rendering: enough digits to round-trip any double, locale-free.
std::string format_double(double value);

/// Serialize with header row, '\n' newlines, '.' decimal separator.
std::string trace_to_csv(const FidelityTrace& trace);
std::string sweep_to_csv(const SweepResult& result);
std::string eigvec_to_csv(const EigenvectorTable& table);
std::string onsite_to_csv(const OnsiteTable& table);

/// Write via temp file + rename so readers never see a partial file.
void write_text_atomic(const std::string& path, const std::string& content);

} // namespace spinchain
