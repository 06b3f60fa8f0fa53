#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "core/survey.hpp"

namespace tailor {

enum class CovariateKind { nominal, numeric };

struct Covariate {
    std::string name;
    CovariateKind kind = CovariateKind::nominal;
    std::vector<std::string> levels;  // nominal only; frozen order

    std::optional<int> level_index(std::string_view value) const;
};

/// Ordered covariate descriptors shared by the three rank trees. The order is
/// frozen (gender, age, country, education, researched_gamification,
/// weekly_playing_hours, preferred_genre, preferred_setting, lat) and level
/// lists are frozen at training time.
struct CovariateSchema {
    std::vector<Covariate> covariates;

    size_t size() const { return covariates.size(); }
    const Covariate& at(size_t j) const;
    int index_of(std::string_view name) const;  // -1 when absent

    void validate() const;  // unique names, unique levels, kind consistency
    bool operator==(const CovariateSchema& other) const;
};

/// A single covariate value: level code for nominal, raw value for numeric.
struct CovariateValue {
    int code = -1;      // nominal
    double value = 0;   // numeric
};

/// What the recommender is asked about: the eight user/context inputs plus
/// the LAT to gamify.
struct Query {
    Gender gender = Gender::other;
    int age = 0;
    std::string country;
    std::string education;
    bool researched_gamification = false;
    double weekly_hours = 0.0;
    std::string genre;
    std::string setting;
    int lat = 0;  // 0-based
};

enum class UnseenLevelPolicy { error, majority_branch };

std::string_view policy_name(UnseenLevelPolicy p);
std::optional<UnseenLevelPolicy> parse_policy(std::string_view text);

/// Builds the standard nine-covariate schema: fixed vocabularies for gender,
/// education, researched flag, setting and LAT; country and genre levels
/// frozen from the observations (sorted so the schema is input-order
/// independent). With `lat_ordinal` the LAT becomes a numeric covariate.
CovariateSchema build_schema(const std::vector<Observation>& observations,
                             bool lat_ordinal = false);

/// Encodes one observation's covariates against a frozen schema.
std::vector<CovariateValue> encode_observation(const CovariateSchema& schema,
                                               const Observation& obs);

/// Encodes a query; unseen nominal levels yield an unseen_level error.
std::vector<CovariateValue> encode_query(const CovariateSchema& schema, const Query& query);

/// The level string a query supplies for nominal covariate `j` (used for
/// diagnostics and codegen).
std::string query_field_text(const Query& query, const Covariate& cov);

}  // namespace tailor
