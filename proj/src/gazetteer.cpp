#include "cpcc/geography.hpp"
#include "cpcc/error.hpp"
#include "cpcc/ingest.hpp"
#include "cpcc/text_format.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace cpcc::proxies {

std::string_view geo_level_name(GeoLevel level) {
    switch (level) {
        case GeoLevel::continent: return "continent";
        case GeoLevel::country: return "country";
        case GeoLevel::city: return "city";
    }
    return "city";
}

std::optional<GeoLevel> parse_geo_level(std::string_view name) {
    if (name == "continent") return GeoLevel::continent;
    if (name == "country") return GeoLevel::country;
    if (name == "city") return GeoLevel::city;
    return std::nullopt;
}

const std::optional<std::string>& GeoTag::at(GeoLevel level) const {
    switch (level) {
        case GeoLevel::continent: return continent;
        case GeoLevel::country: return country;
        case GeoLevel::city: return city;
    }
    return city;
}

const std::vector<std::string>& continent_labels() {
    static const std::vector<std::string> labels{"africa",  "antarctica", "asia",         "europe",
                                                 "north america", "oceania", "south america"};
    return labels;
}

namespace {

bool is_continent(std::string_view s) {
    const auto& labels = continent_labels();
    return std::find(labels.begin(), labels.end(), s) != labels.end();
}

} // namespace

void Gazetteer::add(GazetteerEntry e) {
    const auto canonical = ingest::normalize_keyword(e.alias);
    require(canonical.has_value(), ErrorCode::data, "gazetteer: empty alias");
    e.alias = *canonical;
    require(is_continent(e.continent), ErrorCode::data,
            "gazetteer: unknown continent '" + e.continent + "' for alias '" + e.alias + "'");
    if (e.level == GeoLevel::continent) {
        e.country.clear();
        e.city.clear();
    } else {
        require(!e.country.empty(), ErrorCode::data, "gazetteer: alias '" + e.alias + "' lacks a country");
        const auto [it, inserted] = country_continent_.emplace(e.country, e.continent);
        require(inserted || it->second == e.continent, ErrorCode::data,
                "gazetteer: country '" + e.country + "' mapped to two continents");
        if (e.level == GeoLevel::country) {
            e.city.clear();
        } else {
            require(!e.city.empty(), ErrorCode::data, "gazetteer: city alias '" + e.alias + "' lacks a city");
            const auto [ct, city_new] = city_country_.emplace(e.city, e.country);
            require(city_new || ct->second == e.country, ErrorCode::data,
                    "gazetteer: city '" + e.city + "' mapped to two countries");
        }
    }
    const auto existing = aliases_.find(e.alias);
    if (existing != aliases_.end()) {
        const auto& x = existing->second;
        require(x.level == e.level && x.city == e.city && x.country == e.country && x.continent == e.continent,
                ErrorCode::data, "gazetteer: alias '" + e.alias + "' defined twice with different targets");
        return;
    }
    max_alias_tokens_ = std::max(max_alias_tokens_, ingest::tokens(e.alias).size());
    aliases_.emplace(e.alias, std::move(e));
}

Gazetteer Gazetteer::from_csv(std::istream& in) {
    Gazetteer g;
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), ErrorCode::data, "gazetteer: empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    require(line == "alias,level,city,country,continent", ErrorCode::data,
            "gazetteer: expected header alias,level,city,country,continent");
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto f = split_csv_line(line);
        require(f.size() == 5, ErrorCode::data, "gazetteer line " + std::to_string(line_no) + ": expected 5 fields");
        const auto level = parse_geo_level(f[1]);
        require(level.has_value(), ErrorCode::data,
                "gazetteer line " + std::to_string(line_no) + ": unknown level '" + f[1] + "'");
        g.add({f[0], *level, f[2], f[3], f[4]});
    }
    return g;
}

Gazetteer Gazetteer::load_dir(const std::filesystem::path& dir) {
    const auto path = dir / "gazetteer.csv";
    std::ifstream in(path);
    require(in.good(), ErrorCode::io, "cannot read gazetteer " + path.string());
    return from_csv(in);
}

const Gazetteer& Gazetteer::builtin() {
    static const Gazetteer g = [] {
        std::istringstream in{std::string(builtin_gazetteer_csv())};
        return from_csv(in);
    }();
    return g;
}

const GazetteerEntry* Gazetteer::find(std::string_view alias) const {
    const auto it = aliases_.find(std::string(alias));
    return it == aliases_.end() ? nullptr : &it->second;
}

std::vector<std::string> Gazetteer::labels(GeoLevel level) const {
    std::vector<std::string> out;
    switch (level) {
        case GeoLevel::continent: out = continent_labels(); break;
        case GeoLevel::country:
            for (const auto& [country, _] : country_continent_) out.push_back(country);
            break;
        case GeoLevel::city:
            for (const auto& [city, _] : city_country_) out.push_back(city);
            break;
    }
    return out;
}

std::optional<std::string> Gazetteer::country_of(std::string_view city) const {
    const auto it = city_country_.find(city);
    if (it == city_country_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> Gazetteer::continent_of(std::string_view country) const {
    const auto it = country_continent_.find(country);
    if (it == country_continent_.end()) return std::nullopt;
    return it->second;
}

void Gazetteer::write_csv(std::ostream& out) const {
    std::vector<const GazetteerEntry*> rows;
    rows.reserve(aliases_.size());
    for (const auto& [_, e] : aliases_) rows.push_back(&e);
    std::sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) { return a->alias < b->alias; });
    out << "alias,level,city,country,continent\n";
    for (const auto* e : rows) {
        out << csv_field(e->alias) << ',' << geo_level_name(e->level) << ',' << csv_field(e->city) << ','
            << csv_field(e->country) << ',' << csv_field(e->continent) << '\n';
    }
}

GeoTag tag_geography(std::string_view keyword, const Gazetteer& g) {
    const auto canonical = ingest::normalize_keyword(keyword);
    if (!canonical) return {};
    const auto toks = ingest::tokens(*canonical);

    struct Match {
        const GazetteerEntry* entry;
        std::size_t length;
        std::size_t start;
    };
    std::optional<Match> best;
    std::size_t s = 0;
    while (s < toks.size()) {
        std::optional<Match> here;
        const std::size_t longest = std::min(g.max_alias_tokens(), toks.size() - s);
        for (std::size_t len = longest; len >= 1 && !here; --len) {
            std::string phrase(toks[s]);
            for (std::size_t i = 1; i < len; ++i) {
                phrase.push_back(' ');
                phrase.append(toks[s + i]);
            }
            if (const auto* e = g.find(phrase)) here = Match{e, len, s};
        }
        if (!here) {
            ++s;
            continue;
        }
        const auto better = [](const Match& a, const Match& b) {
            if (a.entry->level != b.entry->level) return a.entry->level > b.entry->level;
            return a.length > b.length;  // equal length: keep the earlier one
        };
        if (!best || better(*here, *best)) best = here;
        s += here->length;
    }
    if (!best) return {};

    const auto& e = *best->entry;
    GeoTag tag;
    tag.continent = e.continent;
    if (e.level != GeoLevel::continent) tag.country = e.country;
    if (e.level == GeoLevel::city) tag.city = e.city;
    return tag;
}

std::vector<GeoTag> tag_all(const std::vector<std::string>& keywords, const Gazetteer& g) {
    std::vector<GeoTag> out;
    out.reserve(keywords.size());
    for (const auto& kw : keywords) out.push_back(tag_geography(kw, g));
    return out;
}

} // namespace cpcc::proxies
