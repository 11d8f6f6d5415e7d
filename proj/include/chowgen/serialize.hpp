#pragma once

// Versioned JSON documents for presentations, graded groups and series.

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "chowgen/chern.hpp"
#include "chowgen/grstruct.hpp"
#include "chowgen/presentations.hpp"

namespace chowgen {

inline constexpr int kSchemaVersion = 1;

struct PresentationDocument {
  Presentation presentation;
  std::optional<GroupSpec> spec;
  bool simplified = false;
};

nlohmann::ordered_json to_json(const PresentationDocument& doc);
/// Inverse of to_json. Throws InvalidArgument on schema or parse errors.
PresentationDocument presentation_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const GradedAbelianGroup& g);
nlohmann::ordered_json to_json(const ChernSeries& s);

/// Family by CLI name ("orthogonal", "hilbert-even", ...); "hilbert" is not a
/// family on its own and yields nullopt.
std::optional<Family> family_from_name(std::string_view name);

}  // namespace chowgen
