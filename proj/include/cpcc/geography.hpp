#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cpcc::proxies {

enum class GeoLevel { continent = 0, country = 1, city = 2 };

std::string_view geo_level_name(GeoLevel level);
std::optional<GeoLevel> parse_geo_level(std::string_view name);

/// Geographic intent of one keyword. Absent fields mean "no information";
/// a present city always comes with its country and continent.
struct GeoTag {
    std::optional<std::string> continent;
    std::optional<std::string> country;
    std::optional<std::string> city;

    bool empty() const { return !continent && !country && !city; }
    const std::optional<std::string>& at(GeoLevel level) const;

    bool operator==(const GeoTag&) const = default;
};

struct GazetteerEntry {
    std::string alias;  // normalized surface form, one or more tokens
    GeoLevel level = GeoLevel::city;
    std::string city;
    std::string country;
    std::string continent;
};

/// The seven continent labels used at the continent resolution.
const std::vector<std::string>& continent_labels();

/// Alias table plus the city -> country -> continent hierarchy.
class Gazetteer {
public:
    /// CSV with header alias,level,city,country,continent.
    static Gazetteer from_csv(std::istream& in);
    /// Reads <dir>/gazetteer.csv.
    static Gazetteer load_dir(const std::filesystem::path& dir);
    static const Gazetteer& builtin();

    /// Adds one alias, checking it against the existing hierarchy.
    void add(GazetteerEntry entry);

    const GazetteerEntry* find(std::string_view alias) const;
    std::size_t max_alias_tokens() const { return max_alias_tokens_; }
    std::size_t alias_count() const { return aliases_.size(); }

    /// Sorted label set at a resolution.
    std::vector<std::string> labels(GeoLevel level) const;
    std::optional<std::string> country_of(std::string_view city) const;
    std::optional<std::string> continent_of(std::string_view country) const;

    void write_csv(std::ostream& out) const;

private:
    std::unordered_map<std::string, GazetteerEntry> aliases_;
    std::map<std::string, std::string, std::less<>> city_country_;
    std::map<std::string, std::string, std::less<>> country_continent_;
    std::size_t max_alias_tokens_ = 0;
};

/// Scans the tokens left to right taking the longest alias at each position.
/// Among the matches the most specific level wins, then the longer alias,
/// then the earlier one. The hierarchy is completed upward.
GeoTag tag_geography(std::string_view keyword, const Gazetteer& g);

std::vector<GeoTag> tag_all(const std::vector<std::string>& keywords, const Gazetteer& g);

std::string_view builtin_gazetteer_csv();

} // namespace cpcc::proxies
