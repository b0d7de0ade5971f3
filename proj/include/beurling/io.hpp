#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "beurling/analysis.hpp"
#include "beurling/combo.hpp"
#include "beurling/constructor.hpp"
#include "beurling/mobius.hpp"
#include "beurling/verify.hpp"

namespace beurling {

/// Shortest round-trip decimal form; identical bytes for identical values.
std::string format_double(double v);

/// Combo wire format: [{"num": "...", "den": "...", "modulus": m}, ...] with
/// decimal-string numerators/denominators (arbitrary precision).
nlohmann::json combo_to_json(const Combo& f);
Combo combo_from_json(const nlohmann::json& j);

/// Trace CSV: i, k_i, mu_hat (integer when integral, else num/den),
/// j_searched, b_at_ki (num/den). `config_line` is echoed as a leading
/// comment for provenance.
std::string trace_csv(const ConstructionState& state, const std::string& config_line);

/// Trace JSON: the CSV content as rows plus the final combo.
nlohmann::json trace_to_json(const ConstructionState& state, const nlohmann::json& config);

/// Sieve CSV: t, mu, g_float, g_exact (num/den when available, else empty).
std::string mobius_csv(const MobiusTable& table, const std::string& config_line);

nlohmann::json report_to_json(const Report& report);

/// The verify document: {config, reports, [timing_ms]}. timing_ms is only
/// present when requested, so default outputs are byte-stable across runs.
nlohmann::json reports_document(const std::vector<Report>& reports, const nlohmann::json& config,
                                std::optional<std::int64_t> timing_ms);

struct IdentityRow {
  std::complex<double> s;
  std::complex<double> lhs;
  std::complex<double> rhs;
  double tail_bound = 0.0;
};
std::string identity_csv(const std::vector<IdentityRow>& rows, const std::string& config_line);

struct NormRow {
  std::int64_t index = 0;
  std::int64_t k = 0;
  double l2_lower = 0.0;
  double l2_upper = 0.0;
};
std::string norms_csv(const std::vector<NormRow>& rows, const std::string& config_line);

}  // namespace beurling
