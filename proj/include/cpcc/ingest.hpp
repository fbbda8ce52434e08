#pragma once

#include "cpcc/calendar.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cpcc::ingest {

/// One ad-event record. clicks <= impressions is deliberately not enforced;
/// real logs violate it. Missing or unparsable clicks/cost are kept as
/// nullopt and removed later by filter_relevant.
struct RawEvent {
    std::string keyword;
    std::string query;
    std::string url;
    std::string device;
    std::string search_type;
    std::int64_t impressions = 0;
    std::optional<std::int64_t> clicks;
    std::optional<double> cost;
    Date date{};

    bool operator==(const RawEvent&) const = default;
};

struct Rejection {
    std::size_t line = 0;  // 1-based
    std::string reason;
};

struct ParseResult {
    std::vector<RawEvent> events;
    std::vector<Rejection> rejections;
};

/// Reads line-delimited JSON records. Malformed lines are rejected with a
/// reason and never abort the stream; blank lines are skipped.
ParseResult parse_events(std::istream& in);
ParseResult read_events(const std::filesystem::path& path);

std::string serialize_event(const RawEvent& event);
void write_events(std::ostream& out, std::span<const RawEvent> events);
void write_rejections(std::ostream& out, std::span<const Rejection> rejections);

/// Canonical form: lowercase ASCII letters/digits, single spaces, no
/// punctuation. Non-ASCII characters are transliterated through a static
/// table; unknown ones are dropped. Returns nullopt when nothing remains.
std::optional<std::string> normalize_keyword(std::string_view raw);

/// ASCII replacement for a non-ASCII code point: a lowercase string, " " for
/// separators, "" for characters that vanish, nullopt when unknown.
std::optional<std::string_view> transliterate(char32_t cp);

std::vector<std::string_view> tokens(std::string_view canonical);

/// Replaces keyword and query with their canonical forms. Events whose
/// keyword normalizes to empty are dropped and counted.
std::vector<RawEvent> normalize_events(std::vector<RawEvent> events, std::size_t* dropped = nullptr);

/// Registrable domain (public suffix + one label) or nullopt.
std::optional<std::string> extract_domain(std::string_view url);
/// Public suffix of a lowercase host under the bundled suffix rules.
std::string public_suffix(std::string_view host);

/// Keeps events whose keyword or query holds both tokens "car" and "rental"
/// and whose clicks and cost are both present.
std::vector<RawEvent> filter_relevant(std::span<const RawEvent> events);

struct DomainStats {
    std::string domain;
    std::int64_t total_mentions = 0;
    std::int64_t missing_dates = 0;
    bool excluded = false;
};

struct DomainFilterResult {
    std::vector<RawEvent> events;
    std::vector<DomainStats> stats;  // sorted by domain
    std::size_t unparsable_urls = 0;  // dropped: no registrable domain
    std::int64_t span_days = 0;
};

inline constexpr std::int64_t kDefaultMaxMissing = 15;
inline constexpr std::int64_t kDefaultMinMentions = 1000;

/// Excludes a domain's events iff missing_dates > max_missing AND
/// total_mentions < min_mentions. Missing dates are days in the global
/// min..max date range of `events` without any event for the domain.
DomainFilterResult filter_domains(std::span<const RawEvent> events,
                                  std::int64_t max_missing = kDefaultMaxMissing,
                                  std::int64_t min_mentions = kDefaultMinMentions);

/// Removes exact duplicates, keeping the first occurrence.
std::vector<RawEvent> drop_exact_duplicates(std::vector<RawEvent> events);

} // namespace cpcc::ingest
