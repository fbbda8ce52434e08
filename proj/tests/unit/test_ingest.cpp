#include "cpcc/ingest.hpp"
#include "cpcc/rng.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

using namespace cpcc;
using namespace cpcc::ingest;

namespace {

ParseResult parse(const std::string& text) {
    std::istringstream in(text);
    return parse_events(in);
}

RawEvent make_event(std::string keyword, std::string url, std::string date, std::int64_t clicks = 1,
                    double cost = 1.0) {
    RawEvent e;
    e.keyword = std::move(keyword);
    e.url = std::move(url);
    e.impressions = 10;
    e.clicks = clicks;
    e.cost = cost;
    e.date = *parse_date(date);
    return e;
}

} // namespace

TEST(Parse, FieldPassthrough) {
    const auto r = parse(R"({"keyword":"car rental porto","query":"q","url":"https://a.pt","device":"mobile",)"
                         R"("search_type":"paid","impressions":12,"clicks":4,"cost":10.0,"date":"2021-05-03"})");
    ASSERT_EQ(r.events.size(), 1u);
    ASSERT_TRUE(r.rejections.empty());
    const auto& e = r.events[0];
    EXPECT_EQ(e.keyword, "car rental porto");
    EXPECT_EQ(e.device, "mobile");
    EXPECT_EQ(e.search_type, "paid");
    EXPECT_EQ(e.impressions, 12);
    EXPECT_EQ(e.clicks, 4);
    EXPECT_EQ(e.cost, 10.0);
    EXPECT_EQ(format_date(e.date), "2021-05-03");
}

TEST(Parse, BadDateRejected) {
    const auto r = parse(R"({"keyword":"k","impressions":1,"clicks":1,"cost":1,"date":"2021-13-40"})");
    EXPECT_TRUE(r.events.empty());
    ASSERT_EQ(r.rejections.size(), 1u);
    EXPECT_EQ(r.rejections[0].reason, "bad date");
    EXPECT_EQ(r.rejections[0].line, 1u);
}

TEST(Parse, MalformedLineDoesNotAbort) {
    const std::string good = R"({"keyword":"k","impressions":1,"clicks":1,"cost":1,"date":"2021-01-04"})";
    const auto r = parse(good + "\n{not json\n" + good + "\n");
    EXPECT_EQ(r.events.size(), 2u);
    ASSERT_EQ(r.rejections.size(), 1u);
    EXPECT_EQ(r.rejections[0].line, 2u);
    EXPECT_EQ(r.rejections[0].reason, "malformed record");
}

TEST(Parse, RejectionReasons) {
    const std::map<std::string, std::string> cases{
        {R"({"impressions":1,"date":"2021-01-04"})", "missing keyword"},
        {R"({"keyword":"k","impressions":"x","date":"2021-01-04"})", "bad impressions"},
        {R"({"keyword":"k","impressions":-1,"date":"2021-01-04"})", "negative impressions"},
        {R"({"keyword":"k","impressions":1,"clicks":-2,"date":"2021-01-04"})", "negative clicks"},
        {R"({"keyword":"k","impressions":1,"cost":-0.5,"date":"2021-01-04"})", "negative cost"},
        {R"([1,2,3])", "malformed record"},
    };
    for (const auto& [line, reason] : cases) {
        const auto r = parse(line);
        ASSERT_EQ(r.rejections.size(), 1u) << line;
        EXPECT_EQ(r.rejections[0].reason, reason) << line;
    }
}

TEST(Parse, NumericStringsAndMissingValues) {
    const auto r = parse(R"({"keyword":"k","impressions":"7","clicks":"3","cost":"2.5","date":"2021-01-04T10:00:00"})"
                         "\n"
                         R"({"keyword":"k","impressions":7,"clicks":"n/a","date":"2021-01-04"})");
    ASSERT_EQ(r.events.size(), 2u);
    EXPECT_EQ(r.events[0].impressions, 7);
    EXPECT_EQ(r.events[0].clicks, 3);
    EXPECT_EQ(r.events[0].cost, 2.5);
    EXPECT_FALSE(r.events[1].clicks);
    EXPECT_FALSE(r.events[1].cost);
    EXPECT_TRUE(filter_relevant(std::vector<RawEvent>{r.events[1]}).empty());
}

TEST(Parse, SerializeRoundTrip) {
    Rng rng(3);
    std::vector<RawEvent> events;
    for (int i = 0; i < 200; ++i) {
        RawEvent e;
        e.keyword = "car rental " + std::to_string(rng.index(1000));
        e.query = i % 3 ? "q \"quoted\" \\ " + std::to_string(i) : "";
        e.url = "https://site" + std::to_string(i % 7) + ".com/x";
        e.device = i % 2 ? "mobile" : "desktop";
        e.impressions = static_cast<std::int64_t>(rng.index(100000));
        if (i % 5) e.clicks = static_cast<std::int64_t>(rng.index(500));
        if (i % 4) e.cost = rng.uniform(0.0, 1000.0);
        e.date = *parse_date("2020-01-01") + std::chrono::days{static_cast<int>(rng.index(900))};
        events.push_back(e);
    }
    std::ostringstream out;
    write_events(out, events);
    const auto back = parse(out.str());
    EXPECT_TRUE(back.rejections.empty());
    EXPECT_EQ(back.events, events);
}

TEST(Normalize, Examples) {
    EXPECT_EQ(normalize_keyword("Car   Rental!!"), "car rental");
    EXPECT_EQ(normalize_keyword("car-rental Zürich"), "car rental zurich");
    EXPECT_EQ(normalize_keyword("car rental lisbon"), "car rental lisbon");
    EXPECT_EQ(normalize_keyword("  ÉVORA  Aluguer "), "evora aluguer");
    EXPECT_FALSE(normalize_keyword("!!! ..."));
    EXPECT_FALSE(normalize_keyword(""));
    EXPECT_EQ(transliterate(U'ü'), "u");
}

TEST(Normalize, IdempotentOnRandomText) {
    const std::vector<std::string> pieces{"Car", "RENTAL", "  ", "-", "!", "Zürich", "São", "Paulo", "ß", "ø",
                                          "\t", "42", "Ñ", "日本", "l'aéroport", "\xff", "co.uk", "__"};
    Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        std::string raw;
        const auto n = 1 + rng.index(8);
        for (std::uint64_t j = 0; j < n; ++j) raw += pieces[rng.index(pieces.size())];
        const auto once = normalize_keyword(raw);
        if (!once) continue;
        ASSERT_FALSE(once->empty());
        for (char c : *once) {
            ASSERT_TRUE((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == ' ') << raw;
        }
        ASSERT_EQ(once->front() == ' ' || once->back() == ' ', false);
        ASSERT_EQ(once->find("  "), std::string::npos);
        ASSERT_EQ(normalize_keyword(*once), once) << raw;
    }
}

TEST(Normalize, DropsEmptyKeywords) {
    std::vector<RawEvent> events{make_event("Car Rental", "a.com", "2021-01-04"),
                                 make_event("???", "a.com", "2021-01-04")};
    events[0].query = "Cheap CAR-rental";
    std::size_t dropped = 0;
    const auto out = normalize_events(events, &dropped);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(dropped, 1u);
    EXPECT_EQ(out[0].keyword, "car rental");
    EXPECT_EQ(out[0].query, "cheap car rental");
}

TEST(Domain, Examples) {
    EXPECT_EQ(extract_domain("https://www.example.co.uk/offers?x=1"), "example.co.uk");
    EXPECT_EQ(extract_domain("example.com"), "example.com");
    EXPECT_FALSE(extract_domain("not a url"));
    EXPECT_EQ(extract_domain("http://Shop.Example.COM:8080/path"), "example.com");
    EXPECT_FALSE(extract_domain("https://co.uk/"));
    EXPECT_EQ(public_suffix("a.b.co.uk"), "co.uk");
}

TEST(Relevance, Examples) {
    auto porto = make_event("car rental porto", "a.com", "2021-01-04");
    auto flights = make_event("cheap flights", "a.com", "2021-01-04");
    flights.query = "hotel deals";
    auto via_query = make_event("rent a car", "a.com", "2021-01-04");
    via_query.query = "car rental faro";
    auto rentals = make_event("car rentals", "a.com", "2021-01-04");
    auto no_cost = make_event("car rental", "a.com", "2021-01-04");
    no_cost.cost.reset();
    const std::vector<RawEvent> all{porto, flights, via_query, rentals, no_cost};
    const auto kept = filter_relevant(all);
    ASSERT_EQ(kept.size(), 2u);
    EXPECT_EQ(kept[0], porto);
    EXPECT_EQ(kept[1], via_query);
}

namespace {

// One domain with `mentions` events spread over `present_days` distinct days
// of a global span fixed by an anchor domain covering every day.
std::vector<RawEvent> domain_fixture(std::int64_t span, std::int64_t present_days, std::int64_t mentions) {
    std::vector<RawEvent> ev;
    const auto day0 = *parse_date("2021-01-01");
    for (std::int64_t d = 0; d < span; ++d) {
        auto e = make_event("car rental", "https://anchor.com", "2021-01-01");
        e.date = day0 + std::chrono::days{d};
        ev.push_back(e);
    }
    for (std::int64_t i = 0; i < mentions; ++i) {
        auto e = make_event("car rental", "https://www.target.com/x", "2021-01-01");
        e.date = day0 + std::chrono::days{i % present_days};
        ev.push_back(e);
    }
    return ev;
}

const DomainStats& stats_for(const DomainFilterResult& r, const std::string& d) {
    for (const auto& s : r.stats) {
        if (s.domain == d) return s;
    }
    throw std::runtime_error("no stats for " + d);
}

} // namespace

TEST(DomainFilter, ConjunctionSemantics) {
    // span 30 days, target present on 10 -> 20 missing dates.
    const auto excluded = filter_domains(domain_fixture(30, 10, 500), 15, 1000);
    EXPECT_EQ(stats_for(excluded, "target.com").missing_dates, 20);
    EXPECT_EQ(stats_for(excluded, "target.com").total_mentions, 500);
    EXPECT_TRUE(stats_for(excluded, "target.com").excluded);
    EXPECT_EQ(excluded.events.size(), 30u);

    const auto many = filter_domains(domain_fixture(30, 10, 5000), 15, 1000);
    EXPECT_FALSE(stats_for(many, "target.com").excluded);
    EXPECT_EQ(many.events.size(), 5030u);

    const auto complete = filter_domains(domain_fixture(30, 30, 30), 15, 1000);
    EXPECT_EQ(stats_for(complete, "target.com").missing_dates, 0);
    EXPECT_FALSE(stats_for(complete, "target.com").excluded);
    EXPECT_EQ(complete.span_days, 30);
}

TEST(DomainFilter, MatchesBruteForceRecount) {
    Rng rng(5);
    const std::vector<std::string> hosts{"https://a.com", "http://www.b.co.uk/x", "c.pt", "https://d.de/q?z",
                                         "nonsense", "https://e.com.br"};
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<RawEvent> ev;
        const auto n = 50 + rng.index(400);
        for (std::uint64_t i = 0; i < n; ++i) {
            auto e = make_event("car rental", hosts[rng.index(hosts.size())], "2021-03-01");
            e.date += std::chrono::days{static_cast<int>(rng.index(40))};
            ev.push_back(e);
        }
        const std::int64_t max_missing = static_cast<std::int64_t>(rng.index(30));
        const std::int64_t min_mentions = static_cast<std::int64_t>(rng.index(150));
        const auto r = filter_domains(ev, max_missing, min_mentions);

        std::map<std::string, std::set<Date>> dates;
        std::map<std::string, std::int64_t> count;
        Date lo = ev[0].date, hi = ev[0].date;
        std::size_t bad = 0;
        for (const auto& e : ev) {
            lo = std::min(lo, e.date);
            hi = std::max(hi, e.date);
            const auto d = extract_domain(e.url);
            if (!d) {
                ++bad;
                continue;
            }
            dates[*d].insert(e.date);
            ++count[*d];
        }
        const std::int64_t span = (hi - lo).count() + 1;
        EXPECT_EQ(r.span_days, span);
        EXPECT_EQ(r.unparsable_urls, bad);
        ASSERT_EQ(r.stats.size(), dates.size());
        std::size_t kept = 0;
        for (const auto& [d, ds] : dates) {
            const auto& s = stats_for(r, d);
            const std::int64_t missing = span - static_cast<std::int64_t>(ds.size());
            EXPECT_EQ(s.missing_dates, missing);
            EXPECT_EQ(s.total_mentions, count[d]);
            const bool ex = missing > max_missing && count[d] < min_mentions;
            EXPECT_EQ(s.excluded, ex) << d;
            if (!ex) kept += static_cast<std::size_t>(count[d]);
        }
        EXPECT_EQ(r.events.size(), kept);
    }
}

TEST(Dedup, KeepsFirstOccurrence) {
    auto a = make_event("car rental", "a.com", "2021-01-04");
    auto b = a;
    b.impressions = 11;
    const auto out = drop_exact_duplicates({a, b, a, a, b});
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0], a);
    EXPECT_EQ(out[1], b);
}
