#pragma once

#include <span>
#include <string>
#include <vector>

#include "gdh/model.hpp"

namespace gdh {

/// Shortest decimal that round-trips the double (capped at 17 significant
/// digits by construction). Non-finite values print as "nan"/"inf"/"-inf".
std::string format_real(double x);

/// One CSV document: comma-separated, header row, LF line endings, UTF-8,
/// reals in shortest round-trip form.
std::string csv_document(std::span<const std::string> header,
                         std::span<const std::vector<double>> columns);

/// Parses {"a","b","p","w","Z"}; the presence of {"beta1","gamma1"} triggers
/// the Huxley reduction instead (optional "p" still honored, "Z" forced 0).
ModelParams params_from_json(const std::string& text);

/// {"regime": ..., "w_lower": ..., "w_upper": ...|null} for the admissible
/// -w interval.
std::string regime_report_json(const Regime& regime);

void write_text_file(const std::string& path, const std::string& content);

} // namespace gdh
