#include "cpcc/ingest.hpp"
#include "cpcc/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <unordered_set>

namespace cpcc::ingest {

using nlohmann::json;

namespace {

// Numeric field that may arrive as a JSON number or a numeric string.
enum class FieldState { ok, missing, unparsable, negative };

template <typename T>
FieldState read_number(const json& obj, const char* key, T& out) {
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return FieldState::missing;
    if (it->is_number()) {
        if constexpr (std::is_integral_v<T>) {
            if (it->is_number_float()) {
                const double v = it->get<double>();
                if (v != static_cast<double>(static_cast<T>(v))) return FieldState::unparsable;
                out = static_cast<T>(v);
            } else if (it->is_number_unsigned()) {
                out = static_cast<T>(it->get<std::uint64_t>());
            } else {
                out = it->get<T>();
            }
        } else {
            out = it->get<T>();
        }
    } else if (it->is_string()) {
        const auto& s = it->get_ref<const std::string&>();
        T v{};
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return FieldState::unparsable;
        out = v;
    } else {
        return FieldState::unparsable;
    }
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(out)) return FieldState::unparsable;
    }
    return out < T{} ? FieldState::negative : FieldState::ok;
}

std::string text_field(const json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) return {};
    return it->get<std::string>();
}

// Returns the rejection reason, or empty on success.
std::string parse_line(const std::string& line, RawEvent& ev) {
    const json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (obj.is_discarded() || !obj.is_object()) return "malformed record";

    const auto kw = obj.find("keyword");
    if (kw == obj.end() || !kw->is_string()) return "missing keyword";
    ev.keyword = kw->get<std::string>();
    ev.query = text_field(obj, "query");
    ev.url = text_field(obj, "url");
    ev.device = text_field(obj, "device");
    ev.search_type = text_field(obj, "search_type");

    const auto date_it = obj.find("date");
    if (date_it == obj.end() || !date_it->is_string()) return "bad date";
    std::string_view date_text = date_it->get_ref<const std::string&>();
    if (date_text.size() > 10 && date_text[10] == 'T') date_text = date_text.substr(0, 10);
    const auto date = parse_date(date_text);
    if (!date) return "bad date";
    ev.date = *date;

    switch (read_number(obj, "impressions", ev.impressions)) {
        case FieldState::ok: break;
        case FieldState::negative: return "negative impressions";
        default: return "bad impressions";
    }

    std::int64_t clicks = 0;
    switch (read_number(obj, "clicks", clicks)) {
        case FieldState::ok: ev.clicks = clicks; break;
        case FieldState::negative: return "negative clicks";
        default: ev.clicks.reset(); break;
    }
    double cost = 0.0;
    switch (read_number(obj, "cost", cost)) {
        case FieldState::ok: ev.cost = cost; break;
        case FieldState::negative: return "negative cost";
        default: ev.cost.reset(); break;
    }
    return {};
}

bool has_intent(std::string_view canonical) {
    bool car = false, rental = false;
    for (auto t : tokens(canonical)) {
        car = car || t == "car";
        rental = rental || t == "rental";
    }
    return car && rental;
}

} // namespace

ParseResult parse_events(std::istream& in) {
    ParseResult result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        RawEvent ev;
        if (auto reason = parse_line(line, ev); reason.empty()) {
            result.events.push_back(std::move(ev));
        } else {
            result.rejections.push_back({line_no, std::move(reason)});
        }
    }
    return result;
}

ParseResult read_events(const std::filesystem::path& path) {
    std::ifstream in(path);
    require(in.good(), ErrorCode::io, "cannot read events file " + path.string());
    return parse_events(in);
}

std::string serialize_event(const RawEvent& e) {
    json obj = json::object();
    obj["keyword"] = e.keyword;
    obj["query"] = e.query;
    obj["url"] = e.url;
    obj["device"] = e.device;
    obj["search_type"] = e.search_type;
    obj["impressions"] = e.impressions;
    obj["clicks"] = e.clicks ? json(*e.clicks) : json(nullptr);
    obj["cost"] = e.cost ? json(*e.cost) : json(nullptr);
    obj["date"] = format_date(e.date);
    return obj.dump();
}

void write_events(std::ostream& out, std::span<const RawEvent> events) {
    for (const auto& e : events) out << serialize_event(e) << '\n';
}

void write_rejections(std::ostream& out, std::span<const Rejection> rejections) {
    for (const auto& r : rejections) {
        out << json{{"line", r.line}, {"reason", r.reason}}.dump() << '\n';
    }
}

std::optional<std::string> normalize_keyword(std::string_view raw) {
    std::string spaced;
    spaced.reserve(raw.size());
    std::size_t i = 0;
    while (i < raw.size()) {
        const auto b0 = static_cast<unsigned char>(raw[i]);
        if (b0 < 0x80) {
            const char c = static_cast<char>(b0);
            if (c >= 'A' && c <= 'Z') {
                spaced.push_back(static_cast<char>(c - 'A' + 'a'));
            } else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
                spaced.push_back(c);
            } else if (c != '\'' && c != '`') {
                spaced.push_back(' ');
            }
            ++i;
            continue;
        }
        // UTF-8 decode; malformed sequences drop one byte.
        std::size_t len = 0;
        char32_t cp = 0;
        if ((b0 & 0xE0) == 0xC0) { len = 2; cp = b0 & 0x1F; }
        else if ((b0 & 0xF0) == 0xE0) { len = 3; cp = b0 & 0x0F; }
        else if ((b0 & 0xF8) == 0xF0) { len = 4; cp = b0 & 0x07; }
        bool ok = len != 0 && i + len <= raw.size();
        for (std::size_t k = 1; ok && k < len; ++k) {
            const auto b = static_cast<unsigned char>(raw[i + k]);
            if ((b & 0xC0) != 0x80) ok = false;
            cp = (cp << 6) | (b & 0x3F);
        }
        if (!ok) {
            ++i;
            continue;
        }
        if (const auto mapped = transliterate(cp)) spaced.append(*mapped);
        i += len;
    }

    std::string out;
    out.reserve(spaced.size());
    for (auto t : tokens(spaced)) {
        if (!out.empty()) out.push_back(' ');
        out.append(t);
    }
    if (out.empty()) return std::nullopt;
    return out;
}

std::vector<std::string_view> tokens(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ') ++end;
        if (end > pos) out.push_back(text.substr(pos, end - pos));
        pos = end;
    }
    return out;
}

std::vector<RawEvent> normalize_events(std::vector<RawEvent> events, std::size_t* dropped) {
    std::vector<RawEvent> out;
    out.reserve(events.size());
    std::size_t n_dropped = 0;
    for (auto& e : events) {
        auto kw = normalize_keyword(e.keyword);
        if (!kw) {
            ++n_dropped;
            continue;
        }
        e.keyword = std::move(*kw);
        e.query = normalize_keyword(e.query).value_or(std::string{});
        out.push_back(std::move(e));
    }
    if (dropped) *dropped = n_dropped;
    return out;
}

std::vector<RawEvent> filter_relevant(std::span<const RawEvent> events) {
    std::vector<RawEvent> out;
    for (const auto& e : events) {
        if (!e.clicks || !e.cost) continue;
        if (has_intent(e.keyword) || has_intent(e.query)) out.push_back(e);
    }
    return out;
}

DomainFilterResult filter_domains(std::span<const RawEvent> events, std::int64_t max_missing,
                                  std::int64_t min_mentions) {
    DomainFilterResult result;
    if (events.empty()) return result;

    const auto [min_it, max_it] = std::minmax_element(
        events.begin(), events.end(), [](const RawEvent& a, const RawEvent& b) { return a.date < b.date; });
    result.span_days = (max_it->date - min_it->date).count() + 1;

    // Pass 1: statistics per registrable domain.
    std::vector<std::optional<std::string>> domains;
    domains.reserve(events.size());
    std::map<std::string, std::pair<std::int64_t, std::set<Date>>> per_domain;
    for (const auto& e : events) {
        domains.push_back(extract_domain(e.url));
        if (!domains.back()) continue;
        auto& [mentions, dates] = per_domain[*domains.back()];
        ++mentions;
        dates.insert(e.date);
    }
    std::unordered_set<std::string> excluded;
    for (const auto& [domain, entry] : per_domain) {
        DomainStats s;
        s.domain = domain;
        s.total_mentions = entry.first;
        s.missing_dates = result.span_days - static_cast<std::int64_t>(entry.second.size());
        s.excluded = s.missing_dates > max_missing && s.total_mentions < min_mentions;
        if (s.excluded) excluded.insert(domain);
        result.stats.push_back(std::move(s));
    }

    // Pass 2: filter.
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (!domains[i]) {
            ++result.unparsable_urls;
            continue;
        }
        if (!excluded.contains(*domains[i])) result.events.push_back(events[i]);
    }
    return result;
}

std::vector<RawEvent> drop_exact_duplicates(std::vector<RawEvent> events) {
    std::unordered_set<std::string> seen;
    std::vector<RawEvent> out;
    out.reserve(events.size());
    for (auto& e : events) {
        if (seen.insert(serialize_event(e)).second) out.push_back(std::move(e));
    }
    return out;
}

} // namespace cpcc::ingest
