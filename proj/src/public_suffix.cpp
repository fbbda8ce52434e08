#include "cpcc/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <unordered_set>
#include <vector>

namespace cpcc::ingest {

namespace {

// Snapshot of the ICANN section of the public suffix list, trimmed to the
// TLDs and second-level registries seen in travel and car-rental traffic.
// Wildcard ("*.") and exception ("!") rules follow the list's semantics.
constexpr std::string_view kSuffixRules = R"(
com net org info biz io co app eu travel aero mobi name pro tv me cc online site
store shop club xyz top rentals cars car auto holiday holidays deals tours
ac ad ae af ag al am ao ar at au az ba bb bd be bg bh bj bo br bs bw by bz ca ch
ci ck cl cm cn cr cu cv cy cz de dk do dz ec ee eg es et fi fj fo fr ga ge gh gi
gl gr gt hk hn hr hu id ie il in iq ir is it jm jo jp ke kh kr kw kz la lb li lk
lt lu lv ly ma mc md me mg mk mn mo mt mu mv mx my mz na ng ni nl no np nz om pa
pe ph pk pl pr ps pt py qa ro rs ru rw sa sc se sg si sk sn sv th tn tr tt tw tz
ua ug uk us uy uz ve vn za zm zw
co.uk org.uk me.uk ltd.uk plc.uk net.uk ac.uk gov.uk nhs.uk sch.uk
com.au net.au org.au edu.au gov.au asn.au id.au
co.nz net.nz org.nz govt.nz ac.nz
com.br net.br org.br gov.br
com.mx org.mx gob.mx net.mx
com.ar org.ar gob.ar net.ar
co.jp ne.jp or.jp ac.jp go.jp gr.jp
co.za org.za net.za gov.za
com.tr org.tr net.tr gov.tr
com.cn net.cn org.cn gov.cn
co.in net.in org.in firm.in gen.in ind.in
co.il org.il net.il
com.pt org.pt gov.pt
com.es nom.es org.es gob.es edu.es
co.at or.at gv.at ac.at
com.gr org.gr net.gr
com.pl net.pl org.pl
com.sg net.sg org.sg
com.my net.my org.my
co.kr or.kr ne.kr
com.hk net.hk org.hk
com.tw net.tw org.tw
co.th in.th or.th
com.co net.co org.co
com.pe org.pe
com.ec
co.id or.id web.id
com.ph net.ph
com.vn net.vn
com.eg
co.ma net.ma
com.ng
co.ke
com.cy
com.mt
com.ua
com.hr
co.rs
*.ck !www.ck
*.bd
*.kawasaki.jp !city.kawasaki.jp
)";

struct SuffixRules {
    std::unordered_set<std::string> exact;
    std::unordered_set<std::string> wildcard;   // "*.x" stored as "x"
    std::unordered_set<std::string> exception;  // "!a.x" stored as "a.x"

    SuffixRules() {
        std::size_t pos = 0;
        while (pos < kSuffixRules.size()) {
            while (pos < kSuffixRules.size() && std::isspace(static_cast<unsigned char>(kSuffixRules[pos]))) ++pos;
            std::size_t end = pos;
            while (end < kSuffixRules.size() && !std::isspace(static_cast<unsigned char>(kSuffixRules[end]))) ++end;
            if (end > pos) {
                std::string rule{kSuffixRules.substr(pos, end - pos)};
                if (rule.starts_with("*.")) {
                    wildcard.insert(rule.substr(2));
                } else if (rule.starts_with("!")) {
                    exception.insert(rule.substr(1));
                } else {
                    exact.insert(std::move(rule));
                }
            }
            pos = end;
        }
    }
};

const SuffixRules& rules() {
    static const SuffixRules instance;
    return instance;
}

std::vector<std::string_view> split_labels(std::string_view host) {
    std::vector<std::string_view> labels;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= host.size(); ++i) {
        if (i == host.size() || host[i] == '.') {
            labels.push_back(host.substr(start, i - start));
            start = i + 1;
        }
    }
    return labels;
}

// Joins the trailing `count` labels.
std::string tail(const std::vector<std::string_view>& labels, std::size_t count) {
    std::string out;
    for (std::size_t i = labels.size() - count; i < labels.size(); ++i) {
        if (!out.empty()) out.push_back('.');
        out.append(labels[i]);
    }
    return out;
}

bool valid_label(std::string_view label) {
    if (label.empty() || label.size() > 63) return false;
    if (label.front() == '-' || label.back() == '-') return false;
    return std::all_of(label.begin(), label.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
    });
}

} // namespace

std::string public_suffix(std::string_view host) {
    const auto labels = split_labels(host);
    const auto& r = rules();
    // Longest match wins; exceptions override and drop their leftmost label.
    std::size_t best = 1;  // implicit "*" rule
    for (std::size_t n = 1; n <= labels.size(); ++n) {
        const std::string candidate = tail(labels, n);
        if (r.exception.contains(candidate)) {
            return tail(labels, n - 1);
        }
        if (r.exact.contains(candidate)) best = std::max(best, n);
        if (r.wildcard.contains(candidate)) best = std::max(best, n + 1);
    }
    return tail(labels, std::min(best, labels.size()));
}

std::optional<std::string> extract_domain(std::string_view url) {
    while (!url.empty() && std::isspace(static_cast<unsigned char>(url.front()))) url.remove_prefix(1);
    while (!url.empty() && std::isspace(static_cast<unsigned char>(url.back()))) url.remove_suffix(1);
    if (url.empty()) return std::nullopt;
    if (std::any_of(url.begin(), url.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
        return std::nullopt;
    }

    if (const auto scheme = url.find("://"); scheme != std::string_view::npos) {
        const auto s = url.substr(0, scheme);
        const bool scheme_ok = !s.empty() && std::isalpha(static_cast<unsigned char>(s.front())) &&
                               std::all_of(s.begin(), s.end(), [](char c) {
                                   return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
                               });
        if (!scheme_ok) return std::nullopt;
        url.remove_prefix(scheme + 3);
    } else if (url.starts_with("//")) {
        url.remove_prefix(2);
    }

    auto authority = url.substr(0, url.find_first_of("/?#"));
    if (const auto at = authority.rfind('@'); at != std::string_view::npos) authority.remove_prefix(at + 1);
    if (const auto colon = authority.find(':'); colon != std::string_view::npos) {
        const auto port = authority.substr(colon + 1);
        if (!std::all_of(port.begin(), port.end(), [](char c) { return c >= '0' && c <= '9'; })) return std::nullopt;
        authority = authority.substr(0, colon);
    }

    std::string host;
    host.reserve(authority.size());
    for (char c : authority) host.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (!host.empty() && host.back() == '.') host.pop_back();

    const auto labels = split_labels(host);
    if (labels.size() < 2) return std::nullopt;
    if (!std::all_of(labels.begin(), labels.end(), valid_label)) return std::nullopt;
    const auto& last = labels.back();
    if (std::all_of(last.begin(), last.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        return std::nullopt;  // IPv4 literal
    }

    const std::string suffix = public_suffix(host);
    const std::size_t suffix_labels = split_labels(suffix).size();
    if (labels.size() <= suffix_labels) return std::nullopt;
    return tail(labels, suffix_labels + 1);
}

} // namespace cpcc::ingest
