#pragma once

#include "subsums/subgroup.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace subsums {

inline constexpr std::uint32_t kDefaultVosperCap = 20;

struct KneserReport {
    std::size_t lhs = 0;   // |X + Y|
    std::int64_t rhs = 0;  // |X + H| + |Y + H| - |H|
    Subgroup period;
};

/// Evaluates Kneser's inequality for X + Y with H its period. A violation
/// can only come from a kernel bug and is thrown as std::logic_error.
KneserReport kneser_check(const GroupSubset& x, const GroupSubset& y);

struct ApParams {
    Element start = 0;
    Element difference = 0;
};

/// Some (a, d) with X = {a, a+d, ..., a+(m-1)d}, m = |X|, all terms
/// distinct. Differences are tried in ascending order, then starts.
std::optional<ApParams> arithmetic_progression(const GroupSubset& x);

struct VosperResult {
    bool vosper = true;
    /// On failure, a violating Y of minimal size (normalised to contain 0).
    std::optional<GroupSubset> witness;
};

/// |X + Y| >= min(|G| - 1, |X| + |Y|) for every Y with |Y| >= 2.
/// Throws std::length_error when |G| exceeds `cap`.
VosperResult vosper_test(const GroupSubset& x, std::uint32_t cap = kDefaultVosperCap);
inline bool is_vosper(const GroupSubset& x, std::uint32_t cap = kDefaultVosperCap) {
    return vosper_test(x, cap).vosper;
}

enum class RepresentationKind { AP, Vosper };

std::string to_string(RepresentationKind k);

struct Representation {
    Subgroup subgroup;
    RepresentationKind kind;
    std::optional<ApParams> ap;  // in quotient coset ids
    std::uint32_t quotient_size = 0;
};

struct HpAnalysis {
    /// 0 ∈ Â, Â generating, |Â| <= |G|/2 for Â = Ŝ.
    bool hypotheses_met = false;
    std::vector<Representation> representations;
    /// Some candidate quotient was too large for the Vosper brute force.
    bool vosper_capped = false;
};

/// Every subgroup H with |Ŝ + H| < min(|G|, |H| + |Ŝ|) whose projection of Ŝ
/// is an arithmetic progression and/or a Vosper subset of G/H, one entry per
/// kind. Throws std::invalid_argument if S does not generate G.
HpAnalysis hp_representation(const GroupSubset& s, std::uint32_t vosper_cap = kDefaultVosperCap);

/// Re-checks the defining inequality and the projection's classification.
bool revalidate(const GroupSubset& s, const Representation& r,
                std::uint32_t vosper_cap = kDefaultVosperCap);

/// group=<spec> set=<hex> H=[gens] kind=AP|Vosper ap=(a,d) quotient=<n>
std::string format_certificate(const GroupSubset& s, const Representation& r);

/// |jÂ| >= min(|G|, j(|Â|-1)+1) for every j >= 1.
bool is_faithful(const GroupSubset& s);
/// |jÂ| >= min(|G|, j(|Â|+1)-1) for every j >= 1.
bool is_super_faithful(const GroupSubset& s);

struct TwoHatReport {
    bool defining_inequality = false;  // |Ŝ + H| < min(|G|, |Ŝ| + |H|)
    bool periodic = false;             // H ⊆ period(2Ŝ)
    bool fact1 = true;                 // distinct Q, R in φ(Ŝ): |Ŝ_Q| + |Ŝ_R| > |H|
    bool fact2 = true;                 // Q ≠ H: 2|Ŝ_Q| > |H|
    bool holds() const { return !defining_inequality || (periodic && fact1 && fact2); }
};

TwoHatReport check_2hat_periodic(const GroupSubset& s, const Subgroup& h);

struct CosetLayers {
    Quotient quotient;
    /// T_i = {Q : |T ∩ Q| >= i} for i = 1..l, l the last non-empty layer.
    std::vector<GroupSubset> layers;
};

CosetLayers coset_layers(const Subgroup& k, const GroupSubset& t);

struct ApCaseStats {
    std::uint32_t h = 0;
    std::uint32_t v = 0;
    std::uint32_t t = 0;
    std::uint32_t u = 0;
    std::uint32_t ell = 0;
    std::uint32_t m = 0;  // |G/H|
    /// S after the sign swaps, S = S_0 ∪ S_1 ∪ ... ∪ S_v.
    GroupSubset normalized;
    std::size_t sigma_size = 0;
    bool valid = false;
    /// Claims I-III and Lemma 18 are asserted only for valid S with v >= 1.
    bool claims_asserted = false;
    bool claim1 = true;  // t <= h/4
    bool claim2 = true;  // u <= t
    bool claim3 = true;  // ℓ >= hv(v+1)/2 - uv
    /// ℓ < |G/H|; otherwise the valid case is impossible (|Σ(S)| > |G|/2).
    bool ell_below_quotient = true;
    bool lemma18_asserted = false;
    bool lemma18 = true;  // |Σ(S)| >= (ℓ-1)h + 4t
    /// |Σ(S)| >= |S|(|S|+1)/2 + 1 when |S| >= 4 and S is valid.
    bool proposition_asserted = false;
    bool proposition = true;

    bool holds() const {
        return claim1 && claim2 && claim3 && ell_below_quotient && lemma18 && proposition;
    }
};

/// Statistics of the AP case for generating S with S ∩ (−S) = ∅, 0 ∉ S, and
/// Ŝ having an AP-representation with subgroup H. Performs the sign
/// normalisation itself. Throws std::invalid_argument when H does not give
/// an AP-representation or the projected progression has even length.
ApCaseStats ap_case_stats(const GroupSubset& s, const Subgroup& h);

}  // namespace subsums
