#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "wellcov/verdict.hpp"

namespace wellcov::cli {

std::uint64_t fnv1a64(std::string_view data);

/// "fnv1a:" + 16 hex digits of fnv1a64(data).
std::string digest(std::string_view data);

/// Inverse of ClassQuery::to_string; throws Error on unknown syntax.
ClassQuery parse_property(const std::string& text);

nlohmann::ordered_json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

/// One-line human rendering ("none" for empty certificates).
std::string describe_certificate(const Certificate& c);

}  // namespace wellcov::cli
