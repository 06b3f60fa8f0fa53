#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace tailor {

/// The closed response vocabulary: 21 game elements in canonical alphabetical
/// order. Index 0 is Acknowledgment, index 20 is Time Pressure.
inline constexpr int kElementCount = 21;

const std::array<std::string_view, kElementCount>& element_names();

/// Case-insensitive lookup; returns the canonical 0-based index.
std::optional<int> element_index(std::string_view name);

/// Canonical display name for a 0-based index; throws on out-of-range.
std::string_view element_name(int index);

/// Learning activity types LAT1..LAT6 (remember .. create), 0-based inside.
inline constexpr int kLatCount = 6;

const std::array<std::string_view, kLatCount>& lat_labels();        // "LAT1"..
const std::array<std::string_view, kLatCount>& lat_descriptions();  // "remember"..

/// Accepts "1".."6", "LAT3", or a description like "apply" (case-insensitive).
std::optional<int> lat_index(std::string_view text);

std::string_view lat_label(int index);

}  // namespace tailor
