#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace drifteval {

// The eight scientific-value dimensions. Order here is the canonical
// reporting order everywhere in the library.
enum class Dimension : int {
  originality = 0,
  paradigm_relatedness,
  acceptability,
  implementability,
  applicability,
  effectiveness,
  implicational_explicitness,
  clarity,
};

inline constexpr std::size_t kDimensionCount = 8;

inline constexpr std::array<Dimension, kDimensionCount> kDimensions = {
    Dimension::originality,    Dimension::paradigm_relatedness,
    Dimension::acceptability,  Dimension::implementability,
    Dimension::applicability,  Dimension::effectiveness,
    Dimension::implicational_explicitness, Dimension::clarity,
};

// All scales start at 1. The first six dimensions run 1..4, the last two 1..3.
constexpr int scale_min(Dimension) { return 1; }

constexpr int scale_max(Dimension d) {
  switch (d) {
    case Dimension::implicational_explicitness:
    case Dimension::clarity:
      return 3;
    default:
      return 4;
  }
}

// Machine-facing column name (also the CSV header spelling).
constexpr std::string_view dimension_name(Dimension d) {
  switch (d) {
    case Dimension::originality: return "originality";
    case Dimension::paradigm_relatedness: return "paradigm_relatedness";
    case Dimension::acceptability: return "acceptability";
    case Dimension::implementability: return "implementability";
    case Dimension::applicability: return "applicability";
    case Dimension::effectiveness: return "effectiveness";
    case Dimension::implicational_explicitness: return "implicational_explicitness";
    case Dimension::clarity: return "clarity";
  }
  return "";
}

// Human-facing label used in printed tables.
constexpr std::string_view dimension_label(Dimension d) {
  switch (d) {
    case Dimension::originality: return "Originality";
    case Dimension::paradigm_relatedness: return "Paradigm relatedness";
    case Dimension::acceptability: return "Acceptability";
    case Dimension::implementability: return "Implementability";
    case Dimension::applicability: return "Applicability";
    case Dimension::effectiveness: return "Effectiveness";
    case Dimension::implicational_explicitness: return "Implicational explicitness";
    case Dimension::clarity: return "Clarity";
  }
  return "";
}

inline std::optional<Dimension> dimension_from_name(std::string_view name) {
  for (Dimension d : kDimensions)
    if (dimension_name(d) == name) return d;
  return std::nullopt;
}

// Fixed-size map keyed by Dimension; always holds all eight entries.
template <typename T>
struct DimMap {
  std::array<T, kDimensionCount> values{};

  T& operator[](Dimension d) { return values[static_cast<std::size_t>(d)]; }
  const T& operator[](Dimension d) const { return values[static_cast<std::size_t>(d)]; }

  friend bool operator==(const DimMap&, const DimMap&) = default;
};

}  // namespace drifteval
