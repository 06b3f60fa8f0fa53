#include "core/survey.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "core/common.hpp"
#include "core/csv.hpp"

namespace tailor {

std::string_view gender_name(Gender g) {
    switch (g) {
        case Gender::female: return "female";
        case Gender::male: return "male";
        case Gender::other: return "other";
    }
    return "other";
}

std::optional<Gender> parse_gender(std::string_view text) {
    const std::string key = lower_copy(trim_copy(text));
    if (key == "female") return Gender::female;
    if (key == "male") return Gender::male;
    if (key == "other" || key == "other gender") return Gender::other;
    return std::nullopt;
}

const std::vector<std::string>& education_levels() {
    static const std::vector<std::string> levels = {
        "High School", "Technical education", "Undergraduate",
        "MsC", "Ph.D", "Other Education",
    };
    return levels;
}

const std::vector<std::string>& setting_levels() {
    static const std::vector<std::string> levels = {"Singleplayer", "Multiplayer"};
    return levels;
}

namespace {

std::string canonical_level(const std::vector<std::string>& levels, std::string_view text,
                            const char* what, int line) {
    const std::string key = lower_copy(trim_copy(text));
    for (const auto& level : levels)
        if (lower_copy(level) == key) return level;
    fail(ErrorCode::data, "line " + std::to_string(line) + ": unknown " + what + " value \"" +
                              std::string(text) + "\"");
}

std::vector<std::string> wide_columns() {
    std::vector<std::string> cols = {"id",     "gender",    "age",
                                     "country", "education", "gamification_years",
                                     "weekly_hours", "genre", "setting"};
    for (int lat = 1; lat <= kLatCount; ++lat)
        for (int rank = 1; rank <= 3; ++rank)
            cols.push_back("rank" + std::to_string(rank) + "_lat" + std::to_string(lat));
    cols.push_back("attention_lat");
    for (int rank = 1; rank <= 3; ++rank)
        cols.push_back("attention_rank" + std::to_string(rank));
    return cols;
}

int parse_element_field(const std::string& value, const std::string& column, int line) {
    auto idx = element_index(value);
    if (!idx)
        fail(ErrorCode::data, "line " + std::to_string(line) + ", column " + column +
                                  ": unknown game element \"" + value + "\"");
    return *idx;
}

PreferenceTriple make_triple(int a, int b, int c, const std::string& where, int line) {
    if (a == b || a == c || b == c)
        fail(ErrorCode::data, "line " + std::to_string(line) + ": duplicate element in triple (" +
                                  where + ")");
    return PreferenceTriple{{a, b, c}};
}

long parse_int_field(const std::string& value, const std::string& column, int line) {
    const std::string t = trim_copy(value);
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(t, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != t.size() || t.empty())
        fail(ErrorCode::data, "line " + std::to_string(line) + ", column " + column +
                                  ": expected an integer, got \"" + value + "\"");
    return v;
}

double parse_real_field(const std::string& value, const std::string& column, int line) {
    const std::string t = trim_copy(value);
    size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(t, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != t.size() || t.empty() || !std::isfinite(v))
        fail(ErrorCode::data, "line " + std::to_string(line) + ", column " + column +
                                  ": expected a number, got \"" + value + "\"");
    return v;
}

}  // namespace

std::vector<RespondentRecord> parse_wide_csv_text(std::string_view text) {
    const auto rows = csv::parse(text);
    if (rows.empty()) fail(ErrorCode::parse, "empty file: header row required");

    const auto expected = wide_columns();
    std::map<std::string, size_t> col;
    for (size_t i = 0; i < rows[0].fields.size(); ++i) {
        const std::string name = lower_copy(trim_copy(rows[0].fields[i]));
        if (!col.emplace(name, i).second)
            fail(ErrorCode::parse, "duplicate column \"" + name + "\"");
    }
    for (const auto& name : expected)
        if (!col.count(name)) fail(ErrorCode::parse, "missing column \"" + name + "\"");
    if (col.size() != expected.size())
        for (const auto& [name, idx] : col)
            if (std::find(expected.begin(), expected.end(), name) == expected.end())
                fail(ErrorCode::parse, "unexpected column \"" + name + "\"");

    std::vector<RespondentRecord> records;
    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        const int line = row.line;
        if (row.fields.size() != expected.size())
            fail(ErrorCode::parse, "line " + std::to_string(line) + ": expected " +
                                       std::to_string(expected.size()) + " fields, found " +
                                       std::to_string(row.fields.size()));
        auto field = [&](const std::string& name) -> const std::string& {
            return row.fields[col.at(name)];
        };

        RespondentRecord rec;
        rec.id = trim_copy(field("id"));
        auto gender = parse_gender(field("gender"));
        if (!gender)
            fail(ErrorCode::data, "line " + std::to_string(line) + ": unknown gender \"" +
                                      field("gender") + "\"");
        rec.gender = *gender;
        const long age = parse_int_field(field("age"), "age", line);
        if (age < 0)
            fail(ErrorCode::data, "line " + std::to_string(line) + ": age must be non-negative");
        rec.age = static_cast<int>(age);
        rec.country = trim_copy(field("country"));
        if (rec.country.empty())
            fail(ErrorCode::data, "line " + std::to_string(line) + ": empty country");
        rec.education = canonical_level(education_levels(), field("education"), "education", line);
        const long years = parse_int_field(field("gamification_years"), "gamification_years", line);
        if (years < 0)
            fail(ErrorCode::data,
                 "line " + std::to_string(line) + ": gamification_years must be non-negative");
        rec.gamification_years = static_cast<int>(years);
        rec.weekly_hours = parse_real_field(field("weekly_hours"), "weekly_hours", line);
        if (rec.weekly_hours < 0)
            fail(ErrorCode::data,
                 "line " + std::to_string(line) + ": weekly_hours must be non-negative");
        rec.genre = trim_copy(field("genre"));
        if (rec.genre.empty())
            fail(ErrorCode::data, "line " + std::to_string(line) + ": empty genre");
        rec.setting = canonical_level(setting_levels(), field("setting"), "setting", line);

        for (int lat = 0; lat < kLatCount; ++lat) {
            std::array<int, 3> e{};
            for (int rank = 1; rank <= 3; ++rank) {
                const std::string column =
                    "rank" + std::to_string(rank) + "_lat" + std::to_string(lat + 1);
                e[rank - 1] = parse_element_field(field(column), column, line);
            }
            rec.preferences[lat] =
                make_triple(e[0], e[1], e[2], "lat" + std::to_string(lat + 1), line);
        }

        const long att = parse_int_field(field("attention_lat"), "attention_lat", line);
        if (att < 1 || att > kLatCount)
            fail(ErrorCode::data,
                 "line " + std::to_string(line) + ": attention_lat must be in 1.." +
                     std::to_string(kLatCount));
        rec.attention_lat = static_cast<int>(att) - 1;
        std::array<int, 3> ae{};
        for (int rank = 1; rank <= 3; ++rank) {
            const std::string column = "attention_rank" + std::to_string(rank);
            ae[rank - 1] = parse_element_field(field(column), column, line);
        }
        rec.attention_triple = make_triple(ae[0], ae[1], ae[2], "attention", line);

        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<RespondentRecord> parse_wide_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_wide_csv_text(buf.str());
}

std::string to_wide_csv(const std::vector<RespondentRecord>& records) {
    std::string out = csv::join_row(wide_columns());
    for (const auto& rec : records) {
        std::vector<std::string> fields;
        fields.push_back(rec.id);
        fields.emplace_back(gender_name(rec.gender));
        fields.push_back(std::to_string(rec.age));
        fields.push_back(rec.country);
        fields.push_back(rec.education);
        fields.push_back(std::to_string(rec.gamification_years));
        fields.push_back(format_double(rec.weekly_hours));
        fields.push_back(rec.genre);
        fields.push_back(rec.setting);
        for (int lat = 0; lat < kLatCount; ++lat)
            for (int rank = 0; rank < 3; ++rank)
                fields.emplace_back(element_name(rec.preferences[lat].elements[rank]));
        fields.push_back(std::to_string(rec.attention_lat + 1));
        for (int rank = 0; rank < 3; ++rank)
            fields.emplace_back(element_name(rec.attention_triple.elements[rank]));
        out += csv::join_row(fields);
    }
    return out;
}

void write_wide_csv(const std::vector<RespondentRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::io, "cannot write " + path);
    out << to_wide_csv(records);
    if (!out) fail(ErrorCode::io, "write failed: " + path);
}

int triple_match_count(const PreferenceTriple& a, const PreferenceTriple& b) {
    int count = 0;
    for (int e : a.elements)
        if (b.contains(e)) ++count;
    return count;
}

FilterResult consistency_filter(const std::vector<RespondentRecord>& records, int min_matches) {
    if (min_matches < 0 || min_matches > 3)
        fail(ErrorCode::invalid_argument, "min_matches must be in 0..3");
    FilterResult result;
    for (const auto& rec : records) {
        const int matches =
            triple_match_count(rec.attention_triple, rec.preferences[rec.attention_lat]);
        const bool keep = matches >= min_matches;
        result.report.push_back({rec.id, matches, keep});
        (keep ? result.kept : result.discarded).push_back(rec);
    }
    return result;
}

std::vector<Observation> to_long(const std::vector<RespondentRecord>& records) {
    std::vector<Observation> out;
    out.reserve(records.size() * kLatCount * 3);
    for (const auto& rec : records) {
        for (int lat = 0; lat < kLatCount; ++lat) {
            for (int rank = 1; rank <= 3; ++rank) {
                Observation obs;
                obs.gender = rec.gender;
                obs.age = rec.age;
                obs.country = rec.country;
                obs.education = rec.education;
                obs.researched_gamification = rec.researched_gamification();
                obs.weekly_hours = rec.weekly_hours;
                obs.genre = rec.genre;
                obs.setting = rec.setting;
                obs.lat = lat;
                obs.rank = rank;
                obs.response = rec.preferences[lat].elements[rank - 1];
                obs.weight = 1.0;
                out.push_back(std::move(obs));
            }
        }
    }
    return out;
}

namespace {

NumericSummary summarize_numeric(std::vector<double> values) {
    NumericSummary s;
    const size_t n = values.size();
    std::sort(values.begin(), values.end());
    double sum = 0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(n);
    double ss = 0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
    s.min = values.front();
    s.max = values.back();
    auto quantile = [&](double p) {
        const double h = p * static_cast<double>(n - 1);
        const size_t lo = static_cast<size_t>(std::floor(h));
        const size_t hi = std::min(lo + 1, n - 1);
        const double frac = h - static_cast<double>(lo);
        return values[lo] + frac * (values[hi] - values[lo]);
    };
    s.q25 = quantile(0.25);
    s.median = quantile(0.50);
    s.q75 = quantile(0.75);
    return s;
}

std::vector<LevelCount> count_levels(const std::vector<std::string>& values, int n) {
    std::map<std::string, int> counts;
    for (const auto& v : values) ++counts[v];
    std::vector<LevelCount> out;
    for (const auto& [level, count] : counts)
        out.push_back({level, count, static_cast<double>(count) / n});
    std::sort(out.begin(), out.end(), [](const LevelCount& a, const LevelCount& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.level < b.level;
    });
    return out;
}

}  // namespace

DatasetSummary summarize(const std::vector<RespondentRecord>& records) {
    if (records.empty()) fail(ErrorCode::invalid_argument, "cannot summarize an empty dataset");
    DatasetSummary s;
    s.n = static_cast<int>(records.size());

    auto collect = [&](const char* name, auto getter) {
        std::vector<std::string> values;
        values.reserve(records.size());
        for (const auto& rec : records) values.push_back(getter(rec));
        s.categorical.emplace_back(name, count_levels(values, s.n));
    };
    collect("gender", [](const RespondentRecord& r) { return std::string(gender_name(r.gender)); });
    collect("country", [](const RespondentRecord& r) { return r.country; });
    collect("education", [](const RespondentRecord& r) { return r.education; });
    collect("researched_gamification",
            [](const RespondentRecord& r) { return r.researched_gamification() ? "yes" : "no"; });
    collect("genre", [](const RespondentRecord& r) { return r.genre; });
    collect("setting", [](const RespondentRecord& r) { return r.setting; });

    std::vector<double> ages, hours;
    for (const auto& rec : records) {
        ages.push_back(static_cast<double>(rec.age));
        hours.push_back(rec.weekly_hours);
    }
    s.age = summarize_numeric(std::move(ages));
    s.weekly_hours = summarize_numeric(std::move(hours));
    return s;
}

}  // namespace tailor
