#include "core/elements.hpp"

#include "core/common.hpp"

namespace tailor {

const std::array<std::string_view, kElementCount>& element_names() {
    static const std::array<std::string_view, kElementCount> names = {
        "Acknowledgment", "Chance",     "Competition", "Cooperation",
        "Economy",        "Imposed Choice", "Level",   "Narrative",
        "Novelty",        "Objectives", "Point",       "Progression",
        "Puzzles",        "Rarity",     "Renovation",  "Reputation",
        "Sensation",      "Social Pressure", "Stats",  "Storytelling",
        "Time Pressure",
    };
    return names;
}

std::optional<int> element_index(std::string_view name) {
    const std::string key = lower_copy(trim_copy(name));
    const auto& names = element_names();
    for (int i = 0; i < kElementCount; ++i)
        if (lower_copy(names[i]) == key) return i;
    return std::nullopt;
}

std::string_view element_name(int index) {
    if (index < 0 || index >= kElementCount)
        fail(ErrorCode::invalid_argument,
             "game element index out of range: " + std::to_string(index));
    return element_names()[index];
}

const std::array<std::string_view, kLatCount>& lat_labels() {
    static const std::array<std::string_view, kLatCount> labels = {
        "LAT1", "LAT2", "LAT3", "LAT4", "LAT5", "LAT6",
    };
    return labels;
}

const std::array<std::string_view, kLatCount>& lat_descriptions() {
    static const std::array<std::string_view, kLatCount> descs = {
        "remember", "understand", "apply", "analyze", "evaluate", "create",
    };
    return descs;
}

std::optional<int> lat_index(std::string_view text) {
    const std::string key = lower_copy(trim_copy(text));
    if (key.size() == 1 && key[0] >= '1' && key[0] <= '6') return key[0] - '1';
    for (int i = 0; i < kLatCount; ++i) {
        if (key == lower_copy(lat_labels()[i])) return i;
        if (key == lat_descriptions()[i]) return i;
    }
    return std::nullopt;
}

std::string_view lat_label(int index) {
    if (index < 0 || index >= kLatCount)
        fail(ErrorCode::invalid_argument,
             "LAT index out of range: " + std::to_string(index));
    return lat_labels()[index];
}

}  // namespace tailor
