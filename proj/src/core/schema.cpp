#include "core/schema.hpp"

#include <algorithm>
#include <set>

#include "core/common.hpp"

namespace tailor {

std::optional<int> Covariate::level_index(std::string_view value) const {
    for (size_t i = 0; i < levels.size(); ++i)
        if (levels[i] == value) return static_cast<int>(i);
    return std::nullopt;
}

const Covariate& CovariateSchema::at(size_t j) const {
    if (j >= covariates.size())
        fail(ErrorCode::invalid_argument, "covariate index out of range: " + std::to_string(j));
    return covariates[j];
}

int CovariateSchema::index_of(std::string_view name) const {
    for (size_t j = 0; j < covariates.size(); ++j)
        if (covariates[j].name == name) return static_cast<int>(j);
    return -1;
}

void CovariateSchema::validate() const {
    std::set<std::string> names;
    for (const auto& cov : covariates) {
        if (cov.name.empty()) fail(ErrorCode::corrupt, "covariate with empty name");
        if (!names.insert(cov.name).second)
            fail(ErrorCode::corrupt, "duplicate covariate name \"" + cov.name + "\"");
        if (cov.kind == CovariateKind::numeric) {
            if (!cov.levels.empty())
                fail(ErrorCode::corrupt, "numeric covariate \"" + cov.name + "\" has levels");
        } else {
            if (cov.levels.size() < 2)
                fail(ErrorCode::corrupt,
                     "nominal covariate \"" + cov.name + "\" needs at least two levels");
            std::set<std::string> seen;
            for (const auto& level : cov.levels)
                if (!seen.insert(level).second)
                    fail(ErrorCode::corrupt, "duplicate level \"" + level + "\" in covariate \"" +
                                                 cov.name + "\"");
        }
    }
}

bool CovariateSchema::operator==(const CovariateSchema& other) const {
    if (covariates.size() != other.covariates.size()) return false;
    for (size_t j = 0; j < covariates.size(); ++j) {
        const auto& a = covariates[j];
        const auto& b = other.covariates[j];
        if (a.name != b.name || a.kind != b.kind || a.levels != b.levels) return false;
    }
    return true;
}

std::string_view policy_name(UnseenLevelPolicy p) {
    return p == UnseenLevelPolicy::error ? "error" : "majority_branch";
}

std::optional<UnseenLevelPolicy> parse_policy(std::string_view text) {
    const std::string key = lower_copy(trim_copy(text));
    if (key == "error") return UnseenLevelPolicy::error;
    if (key == "majority_branch" || key == "majority-branch" || key == "majority")
        return UnseenLevelPolicy::majority_branch;
    return std::nullopt;
}

CovariateSchema build_schema(const std::vector<Observation>& observations, bool lat_ordinal) {
    std::set<std::string> countries, genres;
    for (const auto& obs : observations) {
        countries.insert(obs.country);
        genres.insert(obs.genre);
    }

    CovariateSchema schema;
    schema.covariates.push_back({"gender", CovariateKind::nominal, {"female", "male", "other"}});
    schema.covariates.push_back({"age", CovariateKind::numeric, {}});
    schema.covariates.push_back(
        {"country", CovariateKind::nominal, {countries.begin(), countries.end()}});
    schema.covariates.push_back({"education", CovariateKind::nominal, education_levels()});
    schema.covariates.push_back({"researched_gamification", CovariateKind::nominal, {"no", "yes"}});
    schema.covariates.push_back({"weekly_playing_hours", CovariateKind::numeric, {}});
    schema.covariates.push_back(
        {"preferred_genre", CovariateKind::nominal, {genres.begin(), genres.end()}});
    schema.covariates.push_back({"preferred_setting", CovariateKind::nominal, setting_levels()});
    if (lat_ordinal) {
        schema.covariates.push_back({"lat", CovariateKind::numeric, {}});
    } else {
        std::vector<std::string> lats;
        for (int i = 0; i < kLatCount; ++i) lats.emplace_back(lat_label(i));
        schema.covariates.push_back({"lat", CovariateKind::nominal, std::move(lats)});
    }
    schema.validate();
    return schema;
}

namespace {

CovariateValue nominal_value(const Covariate& cov, std::string_view text, ErrorCode code) {
    auto idx = cov.level_index(text);
    if (!idx)
        fail(code, "value \"" + std::string(text) + "\" is not a level of covariate \"" +
                       cov.name + "\"");
    return {.code = *idx, .value = 0};
}

}  // namespace

std::vector<CovariateValue> encode_observation(const CovariateSchema& schema,
                                               const Observation& obs) {
    std::vector<CovariateValue> out;
    out.reserve(schema.size());
    for (const auto& cov : schema.covariates) {
        if (cov.name == "age") {
            out.push_back({.code = -1, .value = static_cast<double>(obs.age)});
        } else if (cov.name == "weekly_playing_hours") {
            out.push_back({.code = -1, .value = obs.weekly_hours});
        } else if (cov.name == "lat" && cov.kind == CovariateKind::numeric) {
            out.push_back({.code = -1, .value = static_cast<double>(obs.lat + 1)});
        } else if (cov.name == "gender") {
            out.push_back(nominal_value(cov, gender_name(obs.gender), ErrorCode::data));
        } else if (cov.name == "country") {
            out.push_back(nominal_value(cov, obs.country, ErrorCode::data));
        } else if (cov.name == "education") {
            out.push_back(nominal_value(cov, obs.education, ErrorCode::data));
        } else if (cov.name == "researched_gamification") {
            out.push_back(
                nominal_value(cov, obs.researched_gamification ? "yes" : "no", ErrorCode::data));
        } else if (cov.name == "preferred_genre") {
            out.push_back(nominal_value(cov, obs.genre, ErrorCode::data));
        } else if (cov.name == "preferred_setting") {
            out.push_back(nominal_value(cov, obs.setting, ErrorCode::data));
        } else if (cov.name == "lat") {
            out.push_back(nominal_value(cov, lat_label(obs.lat), ErrorCode::data));
        } else {
            fail(ErrorCode::internal, "unhandled covariate \"" + cov.name + "\"");
        }
    }
    return out;
}

std::string query_field_text(const Query& query, const Covariate& cov) {
    if (cov.name == "gender") return std::string(gender_name(query.gender));
    if (cov.name == "country") return query.country;
    if (cov.name == "education") return query.education;
    if (cov.name == "researched_gamification") return query.researched_gamification ? "yes" : "no";
    if (cov.name == "preferred_genre") return query.genre;
    if (cov.name == "preferred_setting") return query.setting;
    if (cov.name == "lat") return std::string(lat_label(query.lat));
    fail(ErrorCode::internal, "covariate \"" + cov.name + "\" has no text form");
}

std::vector<CovariateValue> encode_query(const CovariateSchema& schema, const Query& query) {
    if (query.lat < 0 || query.lat >= kLatCount)
        fail(ErrorCode::invalid_argument, "lat must be in 1..6");
    std::vector<CovariateValue> out;
    out.reserve(schema.size());
    for (const auto& cov : schema.covariates) {
        if (cov.kind == CovariateKind::numeric) {
            double v = 0;
            if (cov.name == "age") v = static_cast<double>(query.age);
            else if (cov.name == "weekly_playing_hours") v = query.weekly_hours;
            else if (cov.name == "lat") v = static_cast<double>(query.lat + 1);
            else fail(ErrorCode::internal, "unhandled numeric covariate \"" + cov.name + "\"");
            out.push_back({.code = -1, .value = v});
        } else {
            out.push_back(nominal_value(cov, query_field_text(query, cov),
                                        ErrorCode::unseen_level));
        }
    }
    return out;
}

}  // namespace tailor
