#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/elements.hpp"

namespace tailor {

/// Three distinct game elements ranked first/second/third.
struct PreferenceTriple {
    std::array<int, 3> elements{};  // canonical 0-based element indices

    bool contains(int element) const {
        return elements[0] == element || elements[1] == element || elements[2] == element;
    }
};

enum class Gender { female, male, other };

std::string_view gender_name(Gender g);
std::optional<Gender> parse_gender(std::string_view text);

/// One survey completion: demographics, gaming profile, the six ranked
/// triples, and the repeated attention-check triple.
struct RespondentRecord {
    std::string id;
    Gender gender = Gender::other;
    int age = 0;
    std::string country;
    std::string education;
    int gamification_years = 0;  // researched gamification iff > 0
    double weekly_hours = 0.0;
    std::string genre;
    std::string setting;
    std::array<PreferenceTriple, kLatCount> preferences{};
    int attention_lat = 0;  // which LAT was repeated (0-based)
    PreferenceTriple attention_triple{};

    bool researched_gamification() const { return gamification_years > 0; }
};

/// One long-format training row: the respondent's covariates plus the LAT
/// context, with the element chosen at one rank.
struct Observation {
    Gender gender = Gender::other;
    int age = 0;
    std::string country;
    std::string education;
    bool researched_gamification = false;
    double weekly_hours = 0.0;
    std::string genre;
    std::string setting;
    int lat = 0;       // 0-based
    int response = 0;  // canonical element index
    int rank = 1;      // 1..3
    double weight = 1.0;
};

/// Fixed education vocabulary (frozen order).
const std::vector<std::string>& education_levels();
/// Fixed setting vocabulary (frozen order).
const std::vector<std::string>& setting_levels();

// Wide CSV: id,gender,age,country,education,gamification_years,weekly_hours,
// genre,setting, then rank{1,2,3}_lat{1..6} grouped by LAT, then
// attention_lat (1-6) and attention_rank{1,2,3}. Header required; columns may
// appear in any order but the set must match exactly.
std::vector<RespondentRecord> parse_wide_csv_text(std::string_view text);
std::vector<RespondentRecord> parse_wide_csv(const std::string& path);

std::string to_wide_csv(const std::vector<RespondentRecord>& records);
void write_wide_csv(const std::vector<RespondentRecord>& records, const std::string& path);

struct FilterEntry {
    std::string id;
    int match_count = 0;
    bool kept = false;
};

struct FilterResult {
    std::vector<RespondentRecord> kept;
    std::vector<RespondentRecord> discarded;
    std::vector<FilterEntry> report;  // one entry per input record, input order
};

/// Keeps a record iff its attention triple shares at least `min_matches`
/// elements (as sets; rank order ignored) with the primary triple of the
/// repeated LAT.
FilterResult consistency_filter(const std::vector<RespondentRecord>& records,
                                int min_matches = 2);

int triple_match_count(const PreferenceTriple& a, const PreferenceTriple& b);

/// Wide-to-long conversion: 6 LATs x 3 ranks = 18 observations per record.
std::vector<Observation> to_long(const std::vector<RespondentRecord>& records);

struct LevelCount {
    std::string level;
    int count = 0;
    double fraction = 0.0;
};

struct NumericSummary {
    double mean = 0, sd = 0, min = 0, q25 = 0, median = 0, q75 = 0, max = 0;
};

struct DatasetSummary {
    int n = 0;
    // categorical fields in report order; counts sorted desc then by level name
    std::vector<std::pair<std::string, std::vector<LevelCount>>> categorical;
    NumericSummary age;
    NumericSummary weekly_hours;
};

/// Frequency and dispersion report over a non-empty record list. Quartiles use
/// linear interpolation; SD is the sample standard deviation.
DatasetSummary summarize(const std::vector<RespondentRecord>& records);

}  // namespace tailor
