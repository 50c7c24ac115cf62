#include "subsums/search.hpp"

#include "subsums/parallel.hpp"
#include "subsums/sumset.hpp"

#include <boost/crc.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <fstream>
#include <sstream>

namespace subsums {

using json = nlohmann::ordered_json;

namespace {

struct Chunk {
    std::size_t group_index;
    std::uint64_t from;
    std::uint64_t to;
};

std::vector<Chunk> chunks_from(const std::vector<SubsetEnumerator>& enums, SearchCursor start,
                               std::uint64_t width) {
    std::vector<Chunk> out;
    for (std::size_t gi = start.group_index; gi < enums.size(); ++gi) {
        const auto end = enums[gi].rank_end();
        for (std::uint64_t r = gi == start.group_index ? start.rank : 0; r < end;) {
            const std::uint64_t to = end - r > width ? r + width : end;
            out.push_back({gi, r, to});
            r = to;
        }
    }
    return out;
}

std::vector<SubsetEnumerator> enumerators(const std::vector<GroupSpec>& groups, const SubsetConstraints& c) {
    std::vector<SubsetEnumerator> out;
    for (const auto& g : groups) out.emplace_back(g, c);
    return out;
}

json constraints_json(const SubsetConstraints& c) {
    return {{"zero_free", c.zero_free},   {"asymmetric", c.asymmetric},
            {"symmetric", c.symmetric},   {"generating", c.generating},
            {"sigma_aperiodic", c.sigma_aperiodic}, {"size_min", c.size_min},
            {"size_max", c.size_max}};
}

SubsetConstraints constraints_from(const json& j) {
    SubsetConstraints c;
    c.zero_free = j.at("zero_free").get<bool>();
    c.asymmetric = j.at("asymmetric").get<bool>();
    c.symmetric = j.at("symmetric").get<bool>();
    c.generating = j.at("generating").get<bool>();
    c.sigma_aperiodic = j.at("sigma_aperiodic").get<bool>();
    c.size_min = j.at("size_min").get<std::uint32_t>();
    c.size_max = j.at("size_max").get<std::uint32_t>();
    return c;
}

json config_json(const SearchConfig& c) {
    json groups = json::array();
    for (const auto& g : c.groups) groups.push_back(g.to_string());
    json claims = json::array();
    for (auto id : c.claims) claims.push_back(std::string(to_string(id)));
    return {{"groups", groups},
            {"constraints", constraints_json(c.constraints)},
            {"claims", claims},
            {"chunk_ranks", c.chunk_ranks}};
}

SearchConfig config_from(const json& j) {
    SearchConfig c;
    for (const auto& g : j.at("groups")) c.groups.push_back(parse_group(g.get<std::string>()));
    c.constraints = constraints_from(j.at("constraints"));
    for (const auto& id : j.at("claims")) c.claims.push_back(parse_claim(id.get<std::string>()));
    c.chunk_ranks = j.at("chunk_ranks").get<std::uint64_t>();
    return c;
}

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::ostringstream os;
    os << std::put_time(&utc, "%FT%TZ");
    return os.str();
}

struct RunState {
    SearchSummary summary;
    std::uint64_t bytes = 0;
};

void write_manifest(const std::filesystem::path& path, const SearchConfig& config,
                    const std::filesystem::path& records, const RunState& st) {
    json min_slack = json::object();
    for (const auto& [id, v] : st.summary.min_slack) min_slack[std::string(to_string(id))] = format_rational(v);
    json violations = json::array();
    for (const auto& r : st.summary.violations) violations.push_back(to_jsonl(r));
    json j = {{"version", kManifestVersion},
              {"tool_version", kToolVersion},
              {"config_hash", config_hash(config)},
              {"config", config_json(config)},
              {"records", records.filename().string()},
              {"cursor",
               {{"group_index", st.summary.cursor.group_index}, {"rank", st.summary.cursor.rank}}},
              {"records_written", st.summary.records},
              {"bytes_written", st.bytes},
              {"min_slack", min_slack},
              {"violations", violations},
              {"rejected", st.summary.rejected},
              {"complete", st.summary.complete},
              {"updated_at", utc_now()}};
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << j.dump(2) << '\n';
        if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    std::filesystem::rename(tmp, path);
}

void absorb(RunState& st, const SearchRecord& r) {
    ++st.summary.records;
    for (const auto& c : r.slacks) {
        if (!c.slack) continue;
        auto it = st.summary.min_slack.find(c.claim);
        if (it == st.summary.min_slack.end()) st.summary.min_slack.emplace(c.claim, *c.slack);
        else if (*c.slack < it->second) it->second = *c.slack;
    }
    if (r.violated()) {
        if (confirm_violation(r)) st.summary.violations.push_back(r);
        else ++st.summary.rejected;
    }
}

SearchSummary drive(const SearchConfig& config, const std::filesystem::path& records,
                    const std::filesystem::path& manifest, RunState st, const SearchOptions& opt) {
    const auto enums = enumerators(config.groups, config.constraints);
    const auto chunks = chunks_from(enums, st.summary.cursor, config.chunk_ranks);
    std::ofstream out(records, std::ios::binary | std::ios::app);
    if (!out) throw std::runtime_error("cannot open " + records.string() + " for appending");

    const unsigned threads = std::max(1u, opt.threads);
    const std::size_t batch = static_cast<std::size_t>(threads) * 8;
    std::uint64_t written_this_run = 0;
    for (std::size_t base = 0; base < chunks.size(); base += batch) {
        const std::size_t n = std::min(batch, chunks.size() - base);
        std::vector<std::vector<SearchRecord>> results(n);
        parallel_for(n, threads, [&](std::size_t i) {
            const auto& ch = chunks[base + i];
            const auto& e = enums[ch.group_index];
            std::uint64_t cur = ch.from;
            while (auto s = e.next(cur, ch.to)) results[i].push_back(make_record(*s, config.claims, cur - 1));
        });
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& r : results[i]) {
                const auto line = to_jsonl(r) + '\n';
                if (opt.stop_after && written_this_run == *opt.stop_after) {
                    out.write(line.data(), static_cast<std::streamsize>(line.size() / 2));
                    out.flush();
                    st.summary.complete = false;
                    return st.summary;
                }
                out.write(line.data(), static_cast<std::streamsize>(line.size()));
                st.bytes += line.size();
                ++written_this_run;
                absorb(st, r);
            }
        }
        out.flush();
        if (!out) throw std::runtime_error("write to " + records.string() + " failed");
        const auto& last = chunks[base + n - 1];
        st.summary.cursor = {last.group_index, last.to};
        write_manifest(manifest, config, records, st);
        if (opt.progress) {
            std::ostringstream os;
            os << "search: " << config.groups[last.group_index].to_string() << " (" << last.group_index + 1
               << "/" << config.groups.size() << ") rank " << last.to << "/"
               << enums[last.group_index].rank_end() << ", " << st.summary.records << " records";
            opt.progress(os.str());
        }
    }
    st.summary.cursor = {config.groups.size(), 0};
    st.summary.complete = true;
    write_manifest(manifest, config, records, st);
    return st.summary;
}

}  // namespace

void SubsetConstraints::validate() const {
    if (symmetric && asymmetric) {
        throw std::invalid_argument("constraints symmetric and asymmetric are mutually exclusive");
    }
    if (size_min > size_max) throw std::invalid_argument("size_min exceeds size_max");
}

bool SubsetConstraints::accepts(const GroupSubset& s) const {
    if (s.size() < size_min || s.size() > size_max) return false;
    if (zero_free && s.contains(0)) return false;
    if (asymmetric && !is_asymmetric(s)) return false;
    if (symmetric && !is_symmetric(s)) return false;
    if (generating && span(s).order() != s.group().order()) return false;
    if (sigma_aperiodic && !is_aperiodic(sigma(s))) return false;
    return true;
}

SubsetEnumerator::SubsetEnumerator(GroupSpec g, SubsetConstraints c) : group_(std::move(g)), c_(c) {
    c_.validate();
    const auto n = group_.order();
    if (n > kMaxSearchOrder) {
        throw std::length_error("subset enumeration limited to groups of order " +
                                std::to_string(kMaxSearchOrder) + ", got " + std::to_string(n));
    }
    end_ = std::uint64_t{1} << n;
    singleton_atoms_ = !c_.symmetric;
    if (c_.zero_free || c_.asymmetric) forbidden_ |= 1;
    for (Element x = 0; x < n; ++x) {
        const Element nx = group_.neg(x);
        if (c_.symmetric && nx < x) forbidden_ |= std::uint64_t{1} << x;
        if (c_.asymmetric) {
            if (nx == x) forbidden_ |= std::uint64_t{1} << x;
            else if (x < nx) conflicts_.emplace_back(static_cast<int>(x), static_cast<int>(nx));
        }
    }
}

std::uint64_t SubsetEnumerator::skip(std::uint64_t m) const {
    const int n = static_cast<int>(group_.order());
    while (m < end_) {
        if (const auto bad = m & forbidden_) {
            const int f = 63 - __builtin_clzll(bad);
            m = ((m >> f) + 1) << f;
            continue;
        }
        int q = -1;
        for (const auto& [lo, hi] : conflicts_) {
            if ((m >> lo & 1) && (m >> hi & 1)) q = std::max(q, lo);
        }
        if (q >= 0) {
            m = ((m >> q) + 1) << q;
            continue;
        }
        if (singleton_atoms_) {
            const auto pc = static_cast<std::uint32_t>(__builtin_popcountll(m));
            if (pc > c_.size_max) {
                m += m & (~m + 1);
                continue;
            }
            if (pc < c_.size_min) {
                std::uint32_t need = c_.size_min - pc;
                std::uint64_t filled = m;
                for (int b = 0; b < n && need > 0; ++b) {
                    const auto bit = std::uint64_t{1} << b;
                    if (!(filled & bit) && !(forbidden_ & bit)) {
                        filled |= bit;
                        --need;
                    }
                }
                if (need > 0) return end_;
                m = filled;
                continue;
            }
        }
        return m;
    }
    return end_;
}

std::optional<GroupSubset> SubsetEnumerator::next(std::uint64_t& cursor, std::uint64_t limit) const {
    limit = std::min(limit, end_);
    while (cursor < limit) {
        const auto m = skip(cursor);
        if (m >= limit) break;
        cursor = m + 1;
        auto s = unrank(m);
        if (s.size() < c_.size_min || s.size() > c_.size_max) continue;
        if (c_.generating && span(s).order() != group_.order()) continue;
        if (c_.sigma_aperiodic && !is_aperiodic(sigma(s))) continue;
        return s;
    }
    cursor = limit;
    return std::nullopt;
}

GroupSubset SubsetEnumerator::unrank(std::uint64_t rank) const {
    auto s = GroupSubset::from_mask(group_, rank);
    if (c_.symmetric) s |= negate(s);
    return s;
}

std::uint64_t SubsetEnumerator::rank(const GroupSubset& s) const {
    if (!c_.symmetric) return s.mask();
    return s.mask() & ~forbidden_;
}

std::vector<GroupSubset> enumerate_subsets(const GroupSpec& g, const SubsetConstraints& c) {
    SubsetEnumerator e(g, c);
    std::vector<GroupSubset> out;
    std::uint64_t cur = 0;
    while (auto s = e.next(cur, e.rank_end())) out.push_back(std::move(*s));
    return out;
}

std::uint64_t count_subsets(const GroupSpec& g, const SubsetConstraints& c) {
    SubsetEnumerator e(g, c);
    std::uint64_t count = 0;
    std::uint64_t cur = 0;
    while (e.next(cur, e.rank_end())) ++count;
    return count;
}

std::vector<GroupSpec> dedupe_groups(const std::vector<GroupSpec>& groups) {
    std::vector<GroupSpec> out;
    std::vector<std::vector<std::uint32_t>> seen;
    for (const auto& g : groups) {
        auto cf = g.canonical_form();
        if (std::find(seen.begin(), seen.end(), cf) != seen.end()) continue;
        seen.push_back(std::move(cf));
        out.push_back(g);
    }
    return out;
}

std::filesystem::path manifest_path(const std::filesystem::path& records) {
    auto p = records;
    p += ".manifest.json";
    return p;
}

std::string config_hash(const SearchConfig& c) {
    const auto text = config_json(c).dump();
    boost::crc_32_type crc;
    crc.process_bytes(text.data(), text.size());
    std::ostringstream os;
    os << std::hex << std::setw(8) << std::setfill('0') << crc.checksum();
    return os.str();
}

bool confirm_violation(const SearchRecord& r) { return r.violated() && !verify_record(r).has_value(); }

SearchSummary run_search(const SearchConfig& config, const std::filesystem::path& records,
                         const SearchOptions& options) {
    config.constraints.validate();
    if (config.chunk_ranks == 0) throw std::invalid_argument("chunk size must be positive");
    for (auto c : config.claims) {
        if (!searchable(c)) {
            throw std::invalid_argument(std::string(to_string(c)) + " needs auxiliary inputs and cannot be searched");
        }
    }
    {
        std::ofstream truncate(records, std::ios::binary | std::ios::trunc);
        if (!truncate) throw std::runtime_error("cannot open " + records.string() + " for writing");
    }
    const auto manifest = manifest_path(records);
    RunState st;
    write_manifest(manifest, config, records, st);
    return drive(config, records, manifest, std::move(st), options);
}

SearchSummary resume_search(const std::filesystem::path& manifest, const SearchOptions& options) {
    std::ifstream in(manifest);
    if (!in) throw std::runtime_error("cannot open manifest " + manifest.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw std::runtime_error("manifest " + manifest.string() + " is not valid JSON: " + e.what());
    }
    const int version = j.value("version", 0);
    if (version != kManifestVersion) {
        throw std::runtime_error("manifest version " + std::to_string(version) + " is not supported (expected " +
                                 std::to_string(kManifestVersion) + "); refusing to resume");
    }
    const auto config = config_from(j.at("config"));
    if (config_hash(config) != j.at("config_hash").get<std::string>()) {
        throw std::runtime_error("manifest configuration hash mismatch; refusing to resume");
    }
    const auto records = manifest.parent_path() / j.at("records").get<std::string>();

    RunState st;
    st.summary.cursor = {j.at("cursor").at("group_index").get<std::size_t>(),
                         j.at("cursor").at("rank").get<std::uint64_t>()};
    st.summary.records = j.at("records_written").get<std::uint64_t>();
    st.summary.rejected = j.at("rejected").get<std::uint64_t>();
    st.summary.complete = j.at("complete").get<bool>();
    st.bytes = j.at("bytes_written").get<std::uint64_t>();
    for (const auto& [name, v] : j.at("min_slack").items()) {
        st.summary.min_slack.emplace(parse_claim(name), parse_rational(v.get<std::string>()));
    }
    for (const auto& line : j.at("violations")) st.summary.violations.push_back(from_jsonl(line.get<std::string>()));

    const auto size = std::filesystem::exists(records) ? std::filesystem::file_size(records) : 0;
    if (size < st.bytes) {
        throw std::runtime_error("records file " + records.string() + " is shorter than the checkpoint (" +
                                 std::to_string(size) + " < " + std::to_string(st.bytes) + " bytes)");
    }
    std::filesystem::resize_file(records, st.bytes);
    if (st.summary.complete) return st.summary;
    return drive(config, records, manifest, std::move(st), options);
}

std::vector<SearchRecord> find_extremal(const std::vector<GroupSpec>& groups, ClaimId claim,
                                        const SubsetConstraints& c, unsigned threads) {
    if (!has_closed_form(claim)) {
        throw std::invalid_argument(std::string(to_string(claim)) + " has no closed-form bound to minimise");
    }
    c.validate();
    const auto gs = dedupe_groups(groups);
    const auto enums = enumerators(gs, c);
    const auto chunks = chunks_from(enums, {}, std::uint64_t{1} << 12);
    // per chunk: size -> (min slack, records at that slack)
    using Cells = std::map<std::uint32_t, std::pair<Rational, std::vector<SearchRecord>>>;
    std::vector<Cells> partial(chunks.size());
    auto merge = [](Cells& into, std::uint32_t size, const Rational& slack, std::vector<SearchRecord> recs) {
        auto it = into.find(size);
        if (it == into.end() || slack < it->second.first) {
            into[size] = {slack, std::move(recs)};
        } else if (slack == it->second.first) {
            for (auto& r : recs) it->second.second.push_back(std::move(r));
        }
    };
    parallel_for(chunks.size(), threads, [&](std::size_t i) {
        const auto& ch = chunks[i];
        const auto& e = enums[ch.group_index];
        std::uint64_t cur = ch.from;
        while (auto s = e.next(cur, ch.to)) {
            auto r = make_record(*s, {claim}, cur - 1);
            if (!r.slacks[0].slack) continue;
            const auto slack = *r.slacks[0].slack;
            merge(partial[i], r.size, slack, {std::move(r)});
        }
    });
    std::vector<SearchRecord> out;
    std::size_t i = 0;
    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
        Cells cells;
        for (; i < chunks.size() && chunks[i].group_index == gi; ++i) {
            for (auto& [size, cell] : partial[i]) merge(cells, size, cell.first, std::move(cell.second));
        }
        for (auto& [size, cell] : cells) {
            for (auto& r : cell.second) out.push_back(std::move(r));
        }
    }
    return out;
}

FuzzVerdict fuzz_conjecture(const std::vector<GroupSpec>& groups, const SubsetConstraints& c, unsigned threads) {
    c.validate();
    const auto gs = dedupe_groups(groups);
    const auto enums = enumerators(gs, c);
    const auto chunks = chunks_from(enums, {}, std::uint64_t{1} << 12);
    struct Partial {
        std::uint64_t instances = 0;
        std::optional<SearchRecord> min_record;
        std::map<std::uint32_t, Rational> by_size;
        std::vector<SearchRecord> negative;
    };
    std::vector<Partial> partial(chunks.size());
    parallel_for(chunks.size(), threads, [&](std::size_t i) {
        const auto& ch = chunks[i];
        const auto& e = enums[ch.group_index];
        auto& p = partial[i];
        std::uint64_t cur = ch.from;
        while (auto s = e.next(cur, ch.to)) {
            auto r = make_record(*s, {ClaimId::CONJECTURE}, cur - 1);
            if (!r.slacks[0].slack) continue;
            ++p.instances;
            const auto slack = *r.slacks[0].slack;
            auto it = p.by_size.find(r.size);
            if (it == p.by_size.end()) p.by_size.emplace(r.size, slack);
            else if (slack < it->second) it->second = slack;
            if (r.slacks[0].violated) p.negative.push_back(r);
            if (!p.min_record || slack < *p.min_record->slacks[0].slack) p.min_record = std::move(r);
        }
    });
    FuzzVerdict v;
    for (const auto& g : gs) v.per_group.push_back({g.to_string(), 0});
    for (std::size_t i = 0; i < chunks.size(); ++i) {
        auto& p = partial[i];
        v.instances += p.instances;
        v.per_group[chunks[i].group_index].instances += p.instances;
        for (const auto& [size, slack] : p.by_size) {
            auto it = v.min_slack_by_size.find(size);
            if (it == v.min_slack_by_size.end()) v.min_slack_by_size.emplace(size, slack);
            else if (slack < it->second) it->second = slack;
        }
        if (p.min_record && (!v.min_slack || *p.min_record->slacks[0].slack < *v.min_slack)) {
            v.min_slack = *p.min_record->slacks[0].slack;
            v.min_record = p.min_record;
        }
        for (auto& r : p.negative) {
            if (confirm_violation(r)) v.counterexamples.push_back(std::move(r));
            else ++v.rejected;
        }
    }
    v.exhausted = v.counterexamples.empty();
    return v;
}

}  // namespace subsums
