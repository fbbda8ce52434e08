#include "cpcc/error.hpp"
#include "cpcc/geography.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace cpcc;
using namespace cpcc::proxies;

namespace {

Gazetteer small_gazetteer() {
    std::istringstream in(
        "alias,level,city,country,continent\n"
        "spain,country,,spain,europe\n"
        "san sebastian,city,san sebastian,spain,europe\n"
        "sebastian,city,sebastian,usa,north america\n"
        "europe,continent,,,europe\n"
        "york,city,york,uk,europe\n"
        "new york,city,new york,usa,north america\n"
        "usa,country,,usa,north america\n");
    return Gazetteer::from_csv(in);
}

} // namespace

TEST(Geography, BuiltinExamples) {
    const auto& g = Gazetteer::builtin();
    EXPECT_EQ(tag_geography("car rental lisbon airport", g),
              (GeoTag{"europe", "portugal", "lisbon"}));
    EXPECT_EQ(tag_geography("car rental portugal", g), (GeoTag{"europe", "portugal", std::nullopt}));
    EXPECT_TRUE(tag_geography("cheap car rental deals", g).empty());
}

TEST(Geography, BuiltinHierarchyIsComplete) {
    const auto& g = Gazetteer::builtin();
    EXPECT_EQ(g.labels(GeoLevel::continent), continent_labels());
    for (const auto& city : g.labels(GeoLevel::city)) {
        const auto country = g.country_of(city);
        ASSERT_TRUE(country) << city;
        ASSERT_TRUE(g.continent_of(*country)) << city;
    }
    EXPECT_GT(g.alias_count(), 100u);
}

TEST(Geography, LongestAliasAndSpecificity) {
    const auto g = small_gazetteer();
    EXPECT_EQ(tag_geography("car rental new york", g), (GeoTag{"north america", "usa", "new york"}));
    EXPECT_EQ(tag_geography("car rental san sebastian", g), (GeoTag{"europe", "spain", "san sebastian"}));
    // City beats country regardless of position.
    EXPECT_EQ(tag_geography("spain car rental york", g), (GeoTag{"europe", "uk", "york"}));
    EXPECT_EQ(tag_geography("europe rental", g), (GeoTag{"europe", std::nullopt, std::nullopt}));
    // Partial token matches do not count.
    EXPECT_TRUE(tag_geography("yorkshire spainish", g).empty());
}

TEST(Geography, EarlierMatchWinsAmongEquals) {
    const auto g = small_gazetteer();
    EXPECT_EQ(tag_geography("york sebastian", g).city, std::optional<std::string>("york"));
}

TEST(Geography, RejectsInconsistentHierarchy) {
    std::istringstream bad("alias,level,city,country,continent\n"
                           "porto,city,porto,portugal,europe\n"
                           "oporto,city,porto,spain,europe\n");
    EXPECT_THROW(Gazetteer::from_csv(bad), Error);
    std::istringstream header("alias,city\n");
    EXPECT_THROW(Gazetteer::from_csv(header), Error);
    std::istringstream continent("alias,level,city,country,continent\nx,country,,x,atlantis\n");
    EXPECT_THROW(Gazetteer::from_csv(continent), Error);
}

TEST(Geography, CsvRoundTrip) {
    const auto& g = Gazetteer::builtin();
    std::ostringstream out;
    g.write_csv(out);
    std::istringstream in(out.str());
    const auto back = Gazetteer::from_csv(in);
    EXPECT_EQ(back.alias_count(), g.alias_count());
    for (auto level : {GeoLevel::continent, GeoLevel::country, GeoLevel::city}) {
        EXPECT_EQ(back.labels(level), g.labels(level));
    }
}

TEST(Geography, LevelNames) {
    EXPECT_EQ(parse_geo_level("country"), GeoLevel::country);
    EXPECT_EQ(geo_level_name(GeoLevel::city), "city");
    EXPECT_FALSE(parse_geo_level("planet"));
}
