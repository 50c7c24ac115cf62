#include "subsums/structure.hpp"

#include "subsums/sumset.hpp"
#include "subsums/valid.hpp"

#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace subsums {

KneserReport kneser_check(const GroupSubset& x, const GroupSubset& y) {
    const auto xy = sumset(x, y);
    auto h = period(xy);
    const auto xh = sumset(x, h.carrier()).size();
    const auto yh = sumset(y, h.carrier()).size();
    KneserReport r{xy.size(), static_cast<std::int64_t>(xh + yh) - h.order(), std::move(h)};
    if (static_cast<std::int64_t>(r.lhs) < r.rhs) {
        throw std::logic_error("Kneser inequality violated for X=" + format_subset(x) +
                               " Y=" + format_subset(y) + " in " + x.group().to_string());
    }
    return r;
}

std::optional<ApParams> arithmetic_progression(const GroupSubset& x) {
    if (x.empty()) throw std::invalid_argument("arithmetic progression test needs a non-empty set");
    const auto& g = x.group();
    const auto m = x.size();
    if (m == 1) return ApParams{x.min_element(), 0};
    for (Element d = 1; d < g.order(); ++d) {
        const auto ord = g.element_order(d);
        if (ord < m) continue;
        // X is an AP with difference d iff X \ (X + d) is its unique start,
        // or X is a whole coset of <d>
        const auto starts = x - shift(x, d);
        Element a;
        if (starts.empty()) {
            if (ord != m) continue;
            a = x.min_element();
        } else {
            if (starts.size() != 1) continue;
            a = starts.min_element();
        }
        Element e = a;
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            ok = x.contains(e);
            e = g.add(e, d);
        }
        if (ok) return ApParams{a, d};
    }
    return std::nullopt;
}

VosperResult vosper_test(const GroupSubset& x, std::uint32_t cap) {
    const auto& g = x.group();
    const std::uint32_t n = g.order();
    if (n > cap || n > 64) {
        throw std::length_error("Vosper test limited to groups of order " + std::to_string(cap) +
                                ", got " + std::to_string(n));
    }
    std::vector<std::uint64_t> shifted(n);
    for (Element y = 0; y < n; ++y) shifted[y] = shift(x, y).mask();
    const std::uint32_t xs = static_cast<std::uint32_t>(x.size());

    // Translating Y does not change |X + Y|, so Y always contains 0; Y with
    // |Y| > |G| - |X| give X + Y = G.
    std::uint64_t witness = 0;
    for (std::uint32_t k = 2; k <= n && k + xs <= n && witness == 0; ++k) {
        const std::uint32_t need = std::min(n - 1, xs + k);
        std::function<void(Element, std::uint32_t, std::uint64_t, std::uint64_t)> rec =
            [&](Element from, std::uint32_t left, std::uint64_t ymask, std::uint64_t acc) {
                if (witness) return;
                if (left == 0) {
                    if (static_cast<std::uint32_t>(std::popcount(acc)) < need) witness = ymask;
                    return;
                }
                for (Element e = from; e + left <= n && !witness; ++e) {
                    rec(e + 1, left - 1, ymask | (std::uint64_t{1} << e), acc | shifted[e]);
                }
            };
        rec(1, k - 1, 1, shifted[0]);
    }
    if (witness == 0) return {true, std::nullopt};
    return {false, GroupSubset::from_mask(g, witness)};
}

std::string to_string(RepresentationKind k) {
    return k == RepresentationKind::AP ? "AP" : "Vosper";
}

namespace {

bool defining_inequality(const GroupSubset& a, const Subgroup& h) {
    const auto n = a.group().order();
    const auto ah = sumset(a, h.carrier()).size();
    return ah < std::min<std::size_t>(n, h.order() + a.size());
}

void require_generating(const GroupSubset& s) {
    if (span(s).order() != s.group().order()) {
        throw std::invalid_argument("S = " + format_subset(s) + " does not generate " +
                                    s.group().to_string());
    }
}

}  // namespace

HpAnalysis hp_representation(const GroupSubset& s, std::uint32_t vosper_cap) {
    require_generating(s);
    const auto& g = s.group();
    const auto a = hat(s);
    HpAnalysis out;
    out.hypotheses_met = 2 * a.size() <= g.order();
    for (const auto& h : subgroups(g)) {
        if (!defining_inequality(a, h)) continue;
        Quotient q(g, h);
        const auto p = q.project(a);
        if (auto ap = arithmetic_progression(p)) {
            out.representations.push_back({h, RepresentationKind::AP, ap, q.group().order()});
        }
        if (q.group().order() > vosper_cap) {
            out.vosper_capped = true;
            continue;
        }
        if (is_vosper(p, vosper_cap)) {
            out.representations.push_back(
                {h, RepresentationKind::Vosper, std::nullopt, q.group().order()});
        }
    }
    return out;
}

bool revalidate(const GroupSubset& s, const Representation& r, std::uint32_t vosper_cap) {
    const auto a = hat(s);
    if (!defining_inequality(a, r.subgroup)) return false;
    Quotient q(s.group(), r.subgroup);
    if (q.group().order() != r.quotient_size) return false;
    const auto p = q.project(a);
    if (r.kind == RepresentationKind::Vosper) return is_vosper(p, vosper_cap);
    if (!r.ap) return false;
    const auto& qg = q.group();
    GroupSubset terms(qg);
    Element e = r.ap->start;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (terms.contains(e)) return false;
        terms.insert(e);
        e = qg.add(e, r.ap->difference);
    }
    return terms == p;
}

std::string format_certificate(const GroupSubset& s, const Representation& r) {
    const auto& g = s.group();
    std::ostringstream os;
    os << "group=" << g.to_string() << " set=" << s.to_hex() << " H=[";
    for (std::size_t i = 0; i < r.subgroup.generators().size(); ++i) {
        os << (i ? "," : "") << format_element(g, r.subgroup.generators()[i]);
    }
    os << "] kind=" << to_string(r.kind);
    if (r.ap) {
        Quotient q(g, r.subgroup);
        os << " ap=(" << format_element(g, q.label(r.ap->start)) << ','
           << format_element(g, q.label(r.ap->difference)) << ')';
    }
    os << " quotient=" << r.quotient_size;
    return os.str();
}

namespace {

// |jÂ| >= min(|G|, j*slope + offset) for every j >= 1.
bool grows_at_least(const GroupSubset& s, std::int64_t slope, std::int64_t offset) {
    const auto a = hat(s);
    const std::int64_t n = a.group().order();
    GroupSubset cur = a;
    for (std::int64_t j = 1;; ++j) {
        const std::int64_t size = static_cast<std::int64_t>(cur.size());
        if (size == n) return true;
        if (size < std::min(n, j * slope + offset)) return false;
        auto next = sumset(cur, a);
        // a stationary proper chain eventually falls below any rising bound
        if (next == cur) return slope <= 0;
        cur = std::move(next);
    }
}

}  // namespace

bool is_faithful(const GroupSubset& s) {
    const std::int64_t a = static_cast<std::int64_t>(hat(s).size());
    return grows_at_least(s, a - 1, 1);
}

bool is_super_faithful(const GroupSubset& s) {
    const std::int64_t a = static_cast<std::int64_t>(hat(s).size());
    return grows_at_least(s, a + 1, -1);
}

TwoHatReport check_2hat_periodic(const GroupSubset& s, const Subgroup& h) {
    const auto& g = s.group();
    if (!(h.group() == g)) throw std::invalid_argument("subgroup belongs to a different group");
    const auto a = hat(s);
    TwoHatReport r;
    r.defining_inequality = defining_inequality(a, h);
    r.periodic = is_periodic_under(sumset(a, a), h);

    Quotient q(g, h);
    std::vector<std::uint32_t> count(q.group().order(), 0);
    a.for_each([&](Element e) { ++count[q.project(e)]; });
    const std::uint32_t hs = h.order();
    for (Element qa = 0; qa < count.size(); ++qa) {
        if (!count[qa]) continue;
        if (qa != 0 && 2 * count[qa] <= hs) r.fact2 = false;
        for (Element qb = qa + 1; qb < count.size(); ++qb) {
            if (count[qb] && count[qa] + count[qb] <= hs) r.fact1 = false;
        }
    }
    return r;
}

CosetLayers coset_layers(const Subgroup& k, const GroupSubset& t) {
    Quotient q(t.group(), k);
    std::vector<std::uint32_t> count(q.group().order(), 0);
    t.for_each([&](Element e) { ++count[q.project(e)]; });
    CosetLayers out{q, {}};
    for (std::uint32_t i = 1; i <= k.order(); ++i) {
        GroupSubset layer(q.group());
        for (Element c = 0; c < count.size(); ++c) {
            if (count[c] >= i) layer.insert(c);
        }
        if (layer.empty()) break;
        out.layers.push_back(std::move(layer));
    }
    return out;
}

ApCaseStats ap_case_stats(const GroupSubset& s, const Subgroup& h) {
    const auto& g = s.group();
    if (s.contains(0) || !is_asymmetric(s)) {
        throw std::invalid_argument("AP case statistics need 0 ∉ S and S ∩ (−S) = ∅");
    }
    require_generating(s);
    const auto a = hat(s);
    if (!defining_inequality(a, h)) {
        throw std::invalid_argument("H does not satisfy |Ŝ + H| < min(|G|, |Ŝ| + |H|)");
    }
    Quotient q(g, h);
    const auto& qg = q.group();
    const auto p = q.project(a);
    if (!arithmetic_progression(p)) {
        throw std::invalid_argument("projection of Ŝ is not an arithmetic progression");
    }
    if (p.size() % 2 == 0) {
        throw std::invalid_argument("projected progression has even length; no sign normalisation");
    }
    const std::uint32_t v = static_cast<std::uint32_t>(p.size() / 2);

    // find d with φ(Ŝ) = {id : -v <= i <= v}; index[c] = i
    std::vector<std::int64_t> index(qg.order(), 0);
    if (v > 0) {
        bool found = false;
        for (Element d = 1; d < qg.order() && !found; ++d) {
            GroupSubset terms(qg);
            std::fill(index.begin(), index.end(), 0);
            Element e = 0;
            for (std::uint32_t i = 1; i <= v; ++i) {
                e = qg.add(e, d);
                terms.insert(e);
                terms.insert(qg.neg(e));
                index[e] = i;
                index[qg.neg(e)] = -static_cast<std::int64_t>(i);
            }
            terms.insert(0);
            found = terms == p && terms.size() == 2 * v + 1;
        }
        if (!found) throw std::logic_error("symmetric progression has no centred difference");
    }

    ApCaseStats st{.normalized = GroupSubset(g)};
    st.h = h.order();
    st.v = v;
    st.m = qg.order();
    std::vector<std::uint32_t> layer(v + 1, 0);
    s.for_each([&](Element x) {
        const auto i = index[q.project(x)];
        const Element y = i < 0 ? g.neg(x) : x;
        st.normalized.insert(y);
        ++layer[static_cast<std::size_t>(i < 0 ? -i : i)];
    });
    st.t = layer[0];
    for (std::uint32_t i = 1; i <= v; ++i) {
        st.u += st.h - layer[i];
        st.ell += i * layer[i];
    }
    if (static_cast<std::int64_t>(s.size()) !=
        static_cast<std::int64_t>(v) * st.h + st.t - st.u) {
        throw std::logic_error("AP layer bookkeeping inconsistent: |S| != vh + t - u");
    }

    st.sigma_size = sigma(st.normalized).size();
    st.valid = is_valid_subset(st.normalized);
    if (st.valid && v >= 1) {
        st.claims_asserted = true;
        st.claim1 = 4 * st.t <= st.h;
        st.claim2 = st.u <= st.t;
        st.claim3 = 2 * static_cast<std::int64_t>(st.ell) >=
                    static_cast<std::int64_t>(st.h) * v * (v + 1) - 2 * static_cast<std::int64_t>(st.u) * v;
        st.ell_below_quotient = st.ell < st.m;
        if (st.ell_below_quotient) {
            st.lemma18_asserted = true;
            st.lemma18 = static_cast<std::int64_t>(st.sigma_size) >=
                         (static_cast<std::int64_t>(st.ell) - 1) * st.h + 4 * st.t;
        }
        const std::int64_t n = static_cast<std::int64_t>(s.size());
        if (n >= 4) {
            st.proposition_asserted = true;
            st.proposition = 2 * static_cast<std::int64_t>(st.sigma_size) >= n * (n + 1) + 2;
        }
    }
    return st;
}

}  // namespace subsums
