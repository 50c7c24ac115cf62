#include "subsums/cli.hpp"

#include "subsums/claims.hpp"
#include "subsums/search.hpp"
#include "subsums/structure.hpp"
#include "subsums/sumset.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <thread>

namespace subsums {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<std::string> groups;
    std::string set;
    std::vector<std::string> claims;
    std::uint64_t max_order = kDefaultMaxOrder;
    std::uint32_t min_order = 1;
    std::string out_path;
    std::string resume;
    std::string in_path;
    bool json = false;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::uint32_t k = 0;
    std::string x;
    std::string y;
    std::string b;
    std::string subgroup;
    std::int64_t t = 0;
    SubsetConstraints constraints;
    std::uint64_t stop_after = 0;
    std::uint64_t chunk = std::uint64_t{1} << 12;
    bool extremal = false;
};

struct Given {
    CLI::Option* set = nullptr;
    CLI::Option* max_order = nullptr;
    CLI::Option* out = nullptr;
    CLI::Option* resume = nullptr;
    CLI::Option* k = nullptr;
    CLI::Option* x = nullptr;
    CLI::Option* y = nullptr;
    CLI::Option* b = nullptr;
    CLI::Option* subgroup = nullptr;
    CLI::Option* t = nullptr;
    CLI::Option* stop_after = nullptr;
};

bool given(const CLI::Option* o) { return o && o->count() > 0; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_subgroup(const Subgroup& h) {
    std::string s = "<";
    for (std::size_t i = 0; i < h.generators().size(); ++i) {
        if (i) s += ',';
        s += format_element(h.group(), h.generators()[i]);
    }
    return s + "> (order " + std::to_string(h.order()) + ")";
}

Json subgroup_json(const Subgroup& h) {
    Json gens = Json::array();
    for (auto e : h.generators()) gens.push_back(format_element(h.group(), e));
    return {{"generators", gens}, {"order", h.order()}, {"carrier", h.carrier().to_hex()}};
}

class Command {
public:
    Command(const Options& o, const Given& g, std::ostream& out, std::ostream& err)
        : o_(o), given_(g), out_(out), err_(err) {}

    int sigma() {
        const auto s = require_set();
        const auto sig = subsums::sigma(s);
        if (o_.json) {
            emit({{"command", "sigma"}, {"group", s.group().to_string()}, {"set", s.to_hex()},
                  {"size", sig.size()}, {"sigma", sig.to_hex()}, {"aperiodic", is_aperiodic(sig)}});
        } else {
            out_ << "|Σ(S)| = " << sig.size() << "\nΣ(S) = " << format_subset(sig) << '\n';
        }
        return 0;
    }

    int sigma_star() {
        const auto s = require_set();
        const auto sig = subsums::sigma_star(s);
        if (o_.json) {
            emit({{"command", "sigma-star"}, {"group", s.group().to_string()}, {"set", s.to_hex()},
                  {"size", sig.size()}, {"sigma_star", sig.to_hex()}});
        } else {
            out_ << "|Σ*(S)| = " << sig.size() << "\nΣ*(S) = " << format_subset(sig) << '\n';
        }
        return 0;
    }

    int kwedge() {
        const auto a = require_set();
        if (given(given_.k)) {
            const auto w = k_wedge(o_.k, a);
            if (o_.json) {
                emit({{"command", "kwedge"}, {"group", a.group().to_string()}, {"set", a.to_hex()},
                      {"k", o_.k}, {"size", w.size()}, {"kwedge", w.to_hex()}});
            } else {
                out_ << "|" << o_.k << "∧A| = " << w.size() << '\n'
                     << o_.k << "∧A = " << format_subset(w) << '\n';
            }
            return 0;
        }
        const auto layers = k_wedge_layers(a);
        if (o_.json) {
            Json sizes = Json::array();
            for (const auto& l : layers) sizes.push_back(l.size());
            emit({{"command", "kwedge"}, {"group", a.group().to_string()}, {"set", a.to_hex()},
                  {"sizes", sizes}});
        } else {
            out_ << "k\t|k∧A|\n";
            for (std::size_t k = 0; k < layers.size(); ++k) out_ << k << '\t' << layers[k].size() << '\n';
        }
        return 0;
    }

    int period() {
        const auto x = require_set();
        const auto h = subsums::period(x);
        if (o_.json) {
            emit({{"command", "period"}, {"group", x.group().to_string()}, {"set", x.to_hex()},
                  {"period", subgroup_json(h)}, {"aperiodic", h.is_trivial()}});
        } else {
            out_ << "period = " << format_subgroup(h) << "\naperiodic = " << yes_no(h.is_trivial()) << '\n';
        }
        return 0;
    }

    int lambda() {
        const auto b = require_set();
        const auto& g = b.group();
        if (given(given_.x)) {
            const auto x = parse_element(g, o_.x);
            const auto v = subsums::lambda(b, x);
            if (o_.json) {
                emit({{"command", "lambda"}, {"group", g.to_string()}, {"set", b.to_hex()},
                      {"x", format_element(g, x)}, {"lambda", v}});
            } else {
                out_ << "λ_B(" << format_element(g, x) << ") = " << v << '\n';
            }
            return 0;
        }
        Json values = Json::object();
        if (!o_.json) out_ << "x\tλ_B(x)\n";
        for (Element x = 0; x < g.order(); ++x) {
            const auto v = subsums::lambda(b, x);
            if (o_.json) {
                values[format_element(g, x)] = v;
            } else {
                out_ << format_element(g, x) << '\t' << v << '\n';
            }
        }
        if (o_.json) emit({{"command", "lambda"}, {"group", g.to_string()}, {"set", b.to_hex()}, {"lambda", values}});
        return 0;
    }

    int hp_rep() {
        const auto s = require_set();
        const auto hp = hp_representation(s);
        if (o_.json) {
            Json reps = Json::array();
            for (const auto& r : hp.representations) {
                Json j = {{"subgroup", subgroup_json(r.subgroup)},
                          {"kind", to_string(r.kind)},
                          {"quotient_size", r.quotient_size},
                          {"certificate", format_certificate(s, r)}};
                if (r.ap) {
                    Quotient q(s.group(), r.subgroup);
                    j["ap"] = {format_element(s.group(), q.label(r.ap->start)),
                               format_element(s.group(), q.label(r.ap->difference))};
                }
                reps.push_back(std::move(j));
            }
            emit({{"command", "hp-rep"}, {"group", s.group().to_string()}, {"set", s.to_hex()},
                  {"hypotheses_met", hp.hypotheses_met}, {"vosper_capped", hp.vosper_capped},
                  {"representations", reps}});
        } else {
            out_ << "hypotheses_met = " << yes_no(hp.hypotheses_met) << '\n';
            if (hp.vosper_capped) out_ << "vosper test capped for some quotients\n";
            if (hp.representations.empty()) out_ << "no representation\n";
            for (const auto& r : hp.representations) out_ << format_certificate(s, r) << '\n';
        }
        return 0;
    }

    int faithful() {
        const auto s = require_set();
        const bool f = is_faithful(s);
        const bool sf = is_super_faithful(s);
        if (o_.json) {
            emit({{"command", "faithful"}, {"group", s.group().to_string()}, {"set", s.to_hex()},
                  {"faithful", f}, {"super_faithful", sf}});
        } else {
            out_ << "faithful = " << yes_no(f) << "\nsuper-faithful = " << yes_no(sf) << '\n';
        }
        return 0;
    }

    int layers() {
        const auto t = require_set();
        const auto k = require_subgroup(t.group());
        const auto cl = coset_layers(k, t);
        const auto& g = t.group();
        auto labels = [&](const GroupSubset& layer) {
            std::vector<std::string> out;
            layer.for_each([&](Element id) { out.push_back(format_element(g, cl.quotient.label(id))); });
            return out;
        };
        if (o_.json) {
            Json ls = Json::array();
            for (const auto& l : cl.layers) ls.push_back(labels(l));
            emit({{"command", "layers"}, {"group", g.to_string()}, {"set", t.to_hex()},
                  {"subgroup", subgroup_json(k)}, {"quotient", cl.quotient.group().to_string()},
                  {"layers", ls}});
        } else {
            out_ << "G/K = " << cl.quotient.group().to_string() << " (cosets labelled by least element)\n";
            for (std::size_t i = 0; i < cl.layers.size(); ++i) {
                out_ << "T_" << i + 1 << " = {";
                const auto l = labels(cl.layers[i]);
                for (std::size_t j = 0; j < l.size(); ++j) out_ << (j ? "," : "") << l[j] << "+K";
                out_ << "}\n";
            }
        }
        return 0;
    }

    int ap_stats() {
        const auto s = require_set();
        const auto h = require_subgroup(s.group());
        const auto st = ap_case_stats(s, h);
        Json j = {{"command", "ap-stats"},
                  {"group", s.group().to_string()},
                  {"set", s.to_hex()},
                  {"subgroup", subgroup_json(h)},
                  {"h", st.h},
                  {"v", st.v},
                  {"t", st.t},
                  {"u", st.u},
                  {"ell", st.ell},
                  {"m", st.m},
                  {"normalized", st.normalized.to_hex()},
                  {"sigma_size", st.sigma_size},
                  {"valid", st.valid},
                  {"claims_asserted", st.claims_asserted},
                  {"claim1", st.claim1},
                  {"claim2", st.claim2},
                  {"claim3", st.claim3},
                  {"ell_below_quotient", st.ell_below_quotient},
                  {"lemma18_asserted", st.lemma18_asserted},
                  {"lemma18", st.lemma18},
                  {"proposition_asserted", st.proposition_asserted},
                  {"proposition", st.proposition},
                  {"holds", st.holds()}};
        if (o_.json) {
            emit(j);
        } else {
            for (const auto& [key, v] : j.items()) {
                if (key == "command" || key == "subgroup") continue;
                out_ << key << " = ";
                if (v.is_boolean()) {
                    out_ << yes_no(v.get<bool>());
                } else if (v.is_string()) {
                    out_ << v.get<std::string>();
                } else {
                    out_ << v.dump();
                }
                if (key == "normalized") out_ << ' ' << format_subset(st.normalized);
                out_ << '\n';
            }
            out_ << "subgroup = " << format_subgroup(h) << '\n';
        }
        return st.holds() ? 0 : 1;
    }

    int check() {
        if (o_.claims.size() != 1) throw UsageError("check takes exactly one --claim");
        const auto claim = parse_claim(o_.claims[0]);
        const auto s = require_set();
        const auto& g = s.group();
        ClaimAux aux;
        if (given(given_.b)) aux.set_b = parse_subset(g, o_.b);
        if (given(given_.x)) aux.x = parse_element(g, o_.x);
        if (given(given_.y)) aux.y = parse_element(g, o_.y);
        if (given(given_.k)) aux.k = o_.k;
        if (given(given_.subgroup)) aux.subgroup = span(parse_subset(g, o_.subgroup));
        if (given(given_.t)) aux.t = o_.t;
        const auto r = subsums::check(claim, s, aux);
        // violations of claims evaluable from (G, S) must survive the naive Σ re-computation
        const bool confirmed = !r.holds && (!searchable(claim) || confirm_violation(make_record(s, {claim}, 0)));
        if (o_.json) {
            Json j = {{"claim", std::string(to_string(claim))},
                      {"group", g.to_string()},
                      {"set", s.to_hex()},
                      {"lhs", r.lhs},
                      {"rhs", r.rhs ? Json(format_rational(*r.rhs)) : Json(nullptr)},
                      {"slack", r.slack ? Json(format_rational(*r.slack)) : Json(nullptr)},
                      {"branch", r.branch},
                      {"witness", r.witness ? Json(r.witness->to_hex()) : Json(nullptr)},
                      {"hypotheses_met", r.hypotheses_met},
                      {"holds", r.holds}};
            if (r.witness_element) j["witness_element"] = format_element(g, *r.witness_element);
            if (!r.note.empty()) j["note"] = r.note;
            emit(j);
        } else {
            out_ << "claim           " << to_string(claim) << '\n'
                 << "group           " << g.to_string() << '\n'
                 << "set             " << format_subset(s) << '\n'
                 << "hypotheses_met  " << yes_no(r.hypotheses_met) << '\n'
                 << "holds           " << yes_no(r.holds) << '\n'
                 << "lhs             " << r.lhs << '\n';
            if (r.rhs) out_ << "rhs             " << format_rational(*r.rhs) << '\n';
            if (r.slack) out_ << "slack           " << format_rational(*r.slack) << '\n';
            if (!r.branch.empty()) out_ << "branch          " << r.branch << '\n';
            if (r.witness) out_ << "witness         " << format_subset(*r.witness) << '\n';
            if (r.witness_element) out_ << "witness_element " << format_element(g, *r.witness_element) << '\n';
            if (!r.note.empty()) out_ << "note            " << r.note << '\n';
        }
        if (!r.holds && !confirmed) err_ << "violation not reproduced by the naive re-computation\n";
        return confirmed ? 1 : 0;
    }

    int cr() {
        const auto g = require_group();
        const auto c = critical_number(g);
        if (o_.json) {
            emit({{"command", "cr"}, {"group", g.to_string()}, {"cr", c.value},
                  {"trivial_convention", c.trivial_convention}});
        } else {
            out_ << "cr = " << c.value << '\n';
            if (c.trivial_convention) out_ << "(trivial group: no zero-free elements)\n";
        }
        return 0;
    }

    int search() {
        const SearchOptions opt{.threads = o_.threads,
                                .stop_after = given(given_.stop_after) ? std::optional(o_.stop_after)
                                                                       : std::nullopt,
                                .progress = [this](const std::string& line) { err_ << line << '\n'; }};
        if (o_.extremal) return extremal();
        SearchSummary sum;
        if (given(given_.resume)) {
            if (!o_.groups.empty() || !o_.claims.empty()) {
                throw UsageError("--resume takes its configuration from the manifest");
            }
            sum = resume_search(o_.resume, opt);
        } else {
            if (!given(given_.out)) throw UsageError("search needs --out or --resume");
            SearchConfig cfg{.groups = suite_groups(), .constraints = o_.constraints, .claims = claims(),
                             .chunk_ranks = o_.chunk};
            if (cfg.claims.empty()) throw UsageError("search needs at least one --claim");
            for (auto c : cfg.claims) {
                if (!searchable(c)) {
                    throw UsageError(std::string(to_string(c)) + " needs inputs beyond (G, S)");
                }
            }
            sum = run_search(cfg, o_.out_path, opt);
        }
        Json mins = Json::object();
        for (const auto& [c, v] : sum.min_slack) mins[std::string(to_string(c))] = format_rational(v);
        Json violations = Json::array();
        for (const auto& r : sum.violations) violations.push_back(Json::parse(to_jsonl(r)));
        if (o_.json) {
            emit({{"command", "search"}, {"records", sum.records}, {"complete", sum.complete},
                  {"min_slack", mins}, {"violations", violations}, {"rejected", sum.rejected}});
        } else {
            out_ << "records = " << sum.records << "\ncomplete = " << yes_no(sum.complete) << '\n';
            for (const auto& [c, v] : sum.min_slack) {
                out_ << "min slack " << to_string(c) << " = " << format_rational(v) << '\n';
            }
            out_ << "violations = " << sum.violations.size() << "\nrejected = " << sum.rejected << '\n';
            for (const auto& r : sum.violations) out_ << to_jsonl(r) << '\n';
        }
        return sum.violations.empty() ? 0 : 1;
    }

    int fuzz() {
        auto c = o_.constraints;
        c.zero_free = true;
        c.sigma_aperiodic = true;
        const auto groups = suite_groups();
        err_ << "fuzz: " << groups.size() << " groups\n";
        const auto v = fuzz_conjecture(groups, c, o_.threads);
        err_ << "fuzz: " << v.instances << " instances\n";
        Json per_group = Json::object();
        for (const auto& gc : v.per_group) per_group[gc.group] = gc.instances;
        Json by_size = Json::object();
        for (const auto& [size, s] : v.min_slack_by_size) by_size[std::to_string(size)] = format_rational(s);
        Json ce = Json::array();
        for (const auto& r : v.counterexamples) ce.push_back(Json::parse(to_jsonl(r)));
        Json verdict = {{"command", "fuzz"},
                        {"exhausted", v.exhausted},
                        {"instances", v.instances},
                        {"min_slack", v.min_slack ? Json(format_rational(*v.min_slack)) : Json(nullptr)},
                        {"min_record", v.min_record ? Json::parse(to_jsonl(*v.min_record)) : Json(nullptr)},
                        {"min_slack_by_size", by_size},
                        {"per_group", per_group},
                        {"counterexamples", ce},
                        {"rejected", v.rejected}};
        if (given(given_.out)) {
            Json cert = verdict;
            cert["tool_version"] = kToolVersion;
            cert["constraints"] = {{"zero_free", c.zero_free}, {"asymmetric", c.asymmetric},
                                   {"symmetric", c.symmetric}, {"generating", c.generating},
                                   {"sigma_aperiodic", c.sigma_aperiodic}, {"size_min", c.size_min},
                                   {"size_max", c.size_max}};
            std::ofstream f(o_.out_path);
            f << cert.dump(2) << '\n';
            if (!f) throw std::runtime_error("cannot write " + o_.out_path);
        }
        if (o_.json) {
            emit(verdict);
        } else {
            out_ << "exhausted = " << yes_no(v.exhausted) << "\ninstances = " << v.instances << '\n';
            if (v.min_slack) {
                const auto& r = *v.min_record;
                const auto g = parse_group(r.group);
                out_ << "min slack = " << format_rational(*v.min_slack) << " at " << r.group << ' '
                     << format_subset(GroupSubset::from_hex(g, r.set)) << '\n';
            }
            for (const auto& [size, s] : v.min_slack_by_size) {
                out_ << "min slack |S|=" << size << " = " << format_rational(s) << '\n';
            }
            out_ << "counterexamples = " << v.counterexamples.size() << "\nrejected = " << v.rejected << '\n';
            for (const auto& r : v.counterexamples) out_ << to_jsonl(r) << '\n';
        }
        return v.counterexamples.empty() ? 0 : 1;
    }

    int report() {
        if (o_.in_path.empty()) throw UsageError("report needs --in");
        const auto records = read_records(o_.in_path);
        std::map<ClaimId, Rational> mins;
        std::uint64_t confirmed = 0;
        std::uint64_t mismatched = 0;
        std::vector<std::string> problems;
        for (std::size_t i = 0; i < records.size(); ++i) {
            const auto& r = records[i];
            if (auto why = verify_record(r)) {
                ++mismatched;
                problems.push_back(o_.in_path + ":" + std::to_string(i + 1) + ": " + *why);
                continue;
            }
            if (r.violated()) ++confirmed;
            for (const auto& cs : r.slacks) {
                if (!cs.slack) continue;
                auto it = mins.find(cs.claim);
                if (it == mins.end() || *cs.slack < it->second) mins[cs.claim] = *cs.slack;
            }
        }
        Json jm = Json::object();
        for (const auto& [c, v] : mins) jm[std::string(to_string(c))] = format_rational(v);
        if (o_.json) {
            emit({{"command", "report"}, {"records", records.size()}, {"verified", records.size() - mismatched},
                  {"mismatched", mismatched}, {"violations", confirmed}, {"min_slack", jm}});
        } else {
            out_ << "records = " << records.size() << "\nverified = " << records.size() - mismatched
                 << "\nmismatched = " << mismatched << "\nviolations = " << confirmed << '\n';
            for (const auto& [c, v] : mins) out_ << "min slack " << to_string(c) << " = " << format_rational(v) << '\n';
        }
        for (const auto& p : problems) err_ << p << '\n';
        if (confirmed) return 1;
        return mismatched ? 2 : 0;
    }

private:
    int extremal() {
        if (o_.claims.size() != 1) throw UsageError("--extremal takes exactly one --claim");
        const auto claim = parse_claim(o_.claims[0]);
        const auto recs = find_extremal(suite_groups(), claim, o_.constraints, o_.threads);
        if (recs.empty()) err_ << "no instances\n";
        for (const auto& r : recs) {
            if (o_.json) {
                out_ << to_jsonl(r) << '\n';
            } else {
                const auto g = parse_group(r.group);
                out_ << r.group << "\t|S|=" << r.size << "\tslack=" << format_rational(*r.slacks[0].slack)
                     << '\t' << format_subset(GroupSubset::from_hex(g, r.set)) << '\n';
            }
        }
        return 0;
    }

    void emit(const Json& j) { out_ << j.dump() << '\n'; }

    GroupSpec require_group() const {
        if (o_.groups.size() != 1) throw UsageError("expected exactly one --group");
        return parse_group(o_.groups[0], o_.max_order);
    }

    GroupSubset require_set() const {
        const auto g = require_group();
        if (!given(given_.set)) throw UsageError("missing --set");
        return parse_subset(g, o_.set);
    }

    Subgroup require_subgroup(const GroupSpec& g) const {
        if (!given(given_.subgroup)) throw UsageError("missing --subgroup");
        return span(parse_subset(g, o_.subgroup));
    }

    std::vector<ClaimId> claims() const {
        std::vector<ClaimId> out;
        for (const auto& c : o_.claims) out.push_back(parse_claim(c));
        return out;
    }

    std::vector<GroupSpec> suite_groups() const {
        std::vector<GroupSpec> out;
        for (const auto& text : o_.groups) out.push_back(parse_group(text, o_.max_order));
        if (out.empty()) {
            if (!given(given_.max_order)) throw UsageError("give --group or --max-order");
            if (o_.max_order > kMaxSearchOrder) {
                throw UsageError("--max-order for a suite is at most " + std::to_string(kMaxSearchOrder));
            }
            for (const auto& f : abelian_groups_up_to(static_cast<std::uint32_t>(o_.max_order))) {
                auto g = make_group(f);
                if (g.order() >= o_.min_order) out.push_back(std::move(g));
            }
        }
        return dedupe_groups(out);
    }

    const Options& o_;
    const Given& given_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    std::map<CLI::App*, Given> givens;
    CLI::App app{"Subset sums in finite abelian groups", "subsums"};
    app.require_subcommand(1);

    auto add_group = [&](CLI::App* c, Given& gv, bool many) {
        c->add_option("--group", o.groups, many ? "group, e.g. Z4xZ2 (repeatable)" : "group, e.g. Z4xZ2")
            ->allow_extra_args(false);
        gv.max_order = c->add_option("--max-order", o.max_order, "largest accepted group order")
                           ->envname("SUBSUMS_MAX_ORDER");
    };
    auto add_set = [&](CLI::App* c, Given& gv, const std::string& what) {
        gv.set = c->add_option("--set", o.set, what + " literal, e.g. 1,2,-3 or \"(1,0),(0,1)\"");
    };
    auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "one JSON object per line"); };
    auto add_threads = [&](CLI::App* c) {
        c->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    };
    auto add_constraints = [&](CLI::App* c) {
        c->add_flag("--zero-free", o.constraints.zero_free, "0 not in S");
        c->add_flag("--asymmetric", o.constraints.asymmetric, "S and -S disjoint");
        c->add_flag("--symmetric", o.constraints.symmetric, "S = -S");
        c->add_flag("--generating", o.constraints.generating, "S generates G");
        c->add_flag("--aperiodic", o.constraints.sigma_aperiodic, "Σ(S) aperiodic");
        c->add_option("--size-min", o.constraints.size_min, "smallest |S|");
        c->add_option("--size-max", o.constraints.size_max, "largest |S|");
        c->add_option("--min-order", o.min_order, "smallest group order with --max-order");
    };

    struct Spec {
        const char* name;
        const char* help;
        int (Command::*run)();
    };
    const std::vector<Spec> specs{
        {"sigma", "subset sums Σ(S)", &Command::sigma},
        {"sigma-star", "non-empty subset sums Σ*(S)", &Command::sigma_star},
        {"kwedge", "sums of k distinct elements", &Command::kwedge},
        {"period", "period subgroup of a set", &Command::period},
        {"lambda", "λ_B(x) = |(B + x) \\ B|", &Command::lambda},
        {"hp-rep", "AP and Vosper representations of S ∪ {0} ∪ (−S)", &Command::hp_rep},
        {"faithful", "faithfulness of S ∪ {0} ∪ (−S)", &Command::faithful},
        {"layers", "coset layers of a set over a subgroup", &Command::layers},
        {"ap-stats", "statistics of the AP case", &Command::ap_stats},
        {"check", "check one claim on one set", &Command::check},
        {"cr", "critical number of a group", &Command::cr},
        {"search", "exhaustive claim search with resumable output", &Command::search},
        {"fuzz", "exhaustive conjecture check", &Command::fuzz},
        {"report", "re-verify and summarise a record file", &Command::report},
    };
    std::map<CLI::App*, int (Command::*)()> dispatch;
    for (const auto& s : specs) {
        auto* c = app.add_subcommand(s.name, s.help);
        dispatch[c] = s.run;
        auto& gv = givens[c];
        const std::string name = s.name;
        add_json(c);
        if (name == "report") {
            c->add_option("--in", o.in_path, "record file")->required();
            continue;
        }
        const bool suite = name == "search" || name == "fuzz";
        add_group(c, gv, suite);
        if (suite) {
            add_threads(c);
            add_constraints(c);
            gv.out = c->add_option("--out", o.out_path, name == "search" ? "record file" : "certificate file");
            if (name == "search") {
                c->add_option("--claim", o.claims, "claim id (repeatable)");
                gv.resume = c->add_option("--resume", o.resume, "manifest of an interrupted run");
                gv.stop_after = c->add_option("--stop-after", o.stop_after, "simulate a crash after n records");
                c->add_option("--chunk", o.chunk, "ranks per work unit")->check(CLI::PositiveNumber);
                c->add_flag("--extremal", o.extremal, "minimal-slack sets per (group, |S|)");
            }
            continue;
        }
        if (name == "cr") continue;
        add_set(c, gv, name == "lambda" ? "B" : name == "kwedge" ? "A" : name == "period" ? "X" : "S");
        if (name == "kwedge") gv.k = c->add_option("--k", o.k, "number of summands");
        if (name == "lambda") gv.x = c->add_option("--x", o.x, "element");
        if (name == "layers" || name == "ap-stats") {
            gv.subgroup = c->add_option("--subgroup", o.subgroup, "subgroup generators");
        }
        if (name == "check") {
            c->add_option("--claim", o.claims, "claim id");
            gv.b = c->add_option("--b", o.b, "auxiliary set B (or Y, T)");
            gv.x = c->add_option("--x", o.x, "auxiliary element x");
            gv.y = c->add_option("--y", o.y, "auxiliary element y");
            gv.k = c->add_option("--k", o.k, "number of summands");
            gv.subgroup = c->add_option("--subgroup", o.subgroup, "auxiliary subgroup generators");
            gv.t = c->add_option("--t", o.t, "auxiliary integer t");
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << '\n';
        return 2;
    }

    auto* sub = app.get_subcommands().front();
    Command cmd(o, givens.at(sub), out, err);
    try {
        return (cmd.*dispatch.at(sub))();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace subsums
