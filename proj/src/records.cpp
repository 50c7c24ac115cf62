#include "subsums/records.hpp"

#include "subsums/naive.hpp"
#include "subsums/sumset.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>

namespace subsums {

using json = nlohmann::ordered_json;

namespace {

json slack_json(const std::optional<Rational>& r) {
    return r ? json(format_rational(*r)) : json(nullptr);
}

}  // namespace

SubsetFlags subset_flags(const GroupSubset& s) {
    SubsetFlags f;
    f.zero_free = !s.contains(0);
    f.asymmetric = is_asymmetric(s);
    f.symmetric = is_symmetric(s);
    f.generating = span(s).order() == s.group().order();
    f.sigma_aperiodic = is_aperiodic(sigma(s));
    return f;
}

bool searchable(ClaimId c) {
    switch (c) {
        case ClaimId::KWEDGE_T11:
        case ClaimId::LEMMA_12:
        case ClaimId::LEMMA_14:
        case ClaimId::LEMMA_19:
        case ClaimId::LEMMA_20:
        case ClaimId::PREHISTORIC:
        case ClaimId::KNESER:
            return false;
        default:
            return true;
    }
}

bool SearchRecord::violated() const {
    return std::any_of(slacks.begin(), slacks.end(), [](const ClaimSlack& c) { return c.violated; });
}

SearchRecord make_record(const GroupSubset& s, const std::vector<ClaimId>& claims, std::uint64_t rank) {
    const auto& g = s.group();
    SearchRecord r;
    r.group = g.to_string();
    r.canonical_form = g.canonical_form();
    r.set = s.to_hex();
    r.size = static_cast<std::uint32_t>(s.size());
    r.sigma_size = sigma(s).size();
    r.flags = subset_flags(s);
    r.rank = rank;
    for (ClaimId c : claims) {
        if (!searchable(c)) {
            throw std::invalid_argument(std::string(to_string(c)) + " needs auxiliary inputs and cannot be searched");
        }
        const auto rep = check(c, s);
        ClaimSlack cs{c, std::nullopt, false};
        if (rep.hypotheses_met) {
            cs.slack = rep.slack;
            cs.violated = !rep.holds;
        }
        r.slacks.push_back(cs);
    }
    return r;
}

std::string to_jsonl(const SearchRecord& r) {
    json j;
    j["v"] = kRecordVersion;
    j["group"] = r.group;
    j["canonical_form"] = r.canonical_form;
    j["set"] = r.set;
    j["size"] = r.size;
    j["sigma_size"] = r.sigma_size;
    json slacks = json::object();
    json violated = json::array();
    for (const auto& c : r.slacks) {
        slacks[std::string(to_string(c.claim))] = slack_json(c.slack);
        if (c.violated) violated.push_back(std::string(to_string(c.claim)));
    }
    j["slacks"] = slacks;
    j["violated"] = violated;
    j["flags"] = {{"zero_free", r.flags.zero_free},
                  {"asymmetric", r.flags.asymmetric},
                  {"symmetric", r.flags.symmetric},
                  {"generating", r.flags.generating},
                  {"sigma_aperiodic", r.flags.sigma_aperiodic}};
    j["rank"] = r.rank;
    return j.dump();
}

SearchRecord from_jsonl(std::string_view line) {
    const auto j = json::parse(line);
    if (!j.is_object()) throw std::invalid_argument("record is not a JSON object");
    const int v = j.at("v").get<int>();
    if (v != kRecordVersion) {
        throw std::invalid_argument("unsupported record version " + std::to_string(v) + " (expected " +
                                    std::to_string(kRecordVersion) + ")");
    }
    SearchRecord r;
    r.group = j.at("group").get<std::string>();
    r.canonical_form = j.at("canonical_form").get<std::vector<std::uint32_t>>();
    r.set = j.at("set").get<std::string>();
    r.size = j.at("size").get<std::uint32_t>();
    r.sigma_size = j.at("sigma_size").get<std::uint64_t>();
    std::vector<std::string> violated = j.at("violated").get<std::vector<std::string>>();
    for (const auto& [name, value] : j.at("slacks").items()) {
        ClaimSlack c{parse_claim(name), std::nullopt, false};
        if (!value.is_null()) c.slack = parse_rational(value.get<std::string>());
        c.violated = std::find(violated.begin(), violated.end(), name) != violated.end();
        r.slacks.push_back(c);
    }
    const auto& f = j.at("flags");
    r.flags.zero_free = f.at("zero_free").get<bool>();
    r.flags.asymmetric = f.at("asymmetric").get<bool>();
    r.flags.symmetric = f.at("symmetric").get<bool>();
    r.flags.generating = f.at("generating").get<bool>();
    r.flags.sigma_aperiodic = f.at("sigma_aperiodic").get<bool>();
    r.rank = j.at("rank").get<std::uint64_t>();
    return r;
}

void write_records(const std::filesystem::path& path, const std::vector<SearchRecord>& records) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    for (const auto& r : records) out << to_jsonl(r) << '\n';
    if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

std::vector<SearchRecord> read_records(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::vector<SearchRecord> out;
    std::size_t pos = 0, line = 0;
    while (pos < data.size()) {
        ++line;
        const auto nl = data.find('\n', pos);
        const auto where = path.string() + ":" + std::to_string(line) + ": ";
        if (nl == std::string::npos) throw RecordError(where + "truncated record (no end of line)", line);
        try {
            out.push_back(from_jsonl(std::string_view(data).substr(pos, nl - pos)));
        } catch (const std::exception& e) {
            throw RecordError(where + e.what(), line);
        }
        pos = nl + 1;
    }
    return out;
}

std::optional<std::string> verify_record(const SearchRecord& r) {
    const auto g = parse_group(r.group);
    if (g.canonical_form() != r.canonical_form) return "canonical form does not match the group";
    const auto s = GroupSubset::from_hex(g, r.set);
    if (s.size() != r.size) return "stored size differs from the set";
    const auto sig = naive_sigma(s);
    if (sig.size() != r.sigma_size) {
        return "stored |Σ(S)| = " + std::to_string(r.sigma_size) + " but enumeration gives " +
               std::to_string(sig.size());
    }
    if (subset_flags(s) != r.flags) return "stored flags differ";
    for (const auto& c : r.slacks) {
        const auto rep = check(c.claim, s);
        std::optional<Rational> slack;
        bool violated = false;
        if (rep.hypotheses_met) {
            violated = !rep.holds;
            slack = rep.slack;
            if (has_closed_form(c.claim)) {
                const bool disjunctive = c.claim == ClaimId::OLSON_T1 || c.claim == ClaimId::MAIN_T2 ||
                                         c.claim == ClaimId::MAIN_T2_ODD;
                // the even-order and odd-order forms of Theorem 2 use different right-hand sides
                const ClaimId form =
                    c.claim == ClaimId::MAIN_T2 && g.order() % 2 == 1 ? ClaimId::MAIN_T2_ODD : c.claim;
                slack = Rational(static_cast<std::int64_t>(sig.size())) - bound_value(form, s);
                if (!disjunctive) violated = *slack < Rational(0);
            }
        }
        if (slack != c.slack || violated != c.violated) {
            return std::string("stored result for ") + std::string(to_string(c.claim)) + " differs";
        }
    }
    return std::nullopt;
}

}  // namespace subsums
