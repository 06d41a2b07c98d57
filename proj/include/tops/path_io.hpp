#pragma once

#include <cstdint>
#include <string>

#include "tops/engine.hpp"

namespace tops {

enum class OutputFormat { csv, json };

/// Serialize a LeadLagPath. CSV columns are exactly
/// index,date,x_mean,x_fwd,x_bwd (header included).
std::string path_to_csv(const LeadLagPath& p);
std::string path_to_json(const LeadLagPath& p);

/// Parse either serialization back (format detected from content).
LeadLagPath parse_path_file(const std::string& text);

/// FNV-1a 64-bit content fingerprint, hex-encoded; used in run manifests.
std::string fnv1a64_hex(std::string_view data);

std::string read_file(const std::string& path);           // throws EmptyInput
void write_file(const std::string& path, std::string_view data);

} // namespace tops
