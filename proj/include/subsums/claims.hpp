#pragma once

#include "subsums/rational.hpp"
#include "subsums/subgroup.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace subsums {

enum class ClaimId {
    OLSON_T1,
    MAIN_T2,
    MAIN_T2_ODD,
    DEVOS_T3,
    SYM_T4,
    SYM_T4_ODD,
    PERIODIC_T5,
    CONJECTURE,
    KWEDGE_T11,
    LEMMA_2S,
    LEMMA_2S1,
    LEMMA_12,
    LEMMA_13,
    LEMMA_14,
    LEMMA_18,
    LEMMA_19,
    LEMMA_20,
    PREHISTORIC,
    KNESER,
    OBS_APERIODIC,
    HP_T10,
};

inline constexpr std::array<ClaimId, 21> kAllClaims = {
    ClaimId::OLSON_T1,   ClaimId::MAIN_T2,     ClaimId::MAIN_T2_ODD,   ClaimId::DEVOS_T3,
    ClaimId::SYM_T4,     ClaimId::SYM_T4_ODD,  ClaimId::PERIODIC_T5,   ClaimId::CONJECTURE,
    ClaimId::KWEDGE_T11, ClaimId::LEMMA_2S,    ClaimId::LEMMA_2S1,     ClaimId::LEMMA_12,
    ClaimId::LEMMA_13,   ClaimId::LEMMA_14,    ClaimId::LEMMA_18,      ClaimId::LEMMA_19,
    ClaimId::LEMMA_20,   ClaimId::PREHISTORIC, ClaimId::KNESER,        ClaimId::OBS_APERIODIC,
    ClaimId::HP_T10,
};

std::string_view to_string(ClaimId c);
/// Case-insensitive; throws std::invalid_argument for unknown names.
ClaimId parse_claim(std::string_view text);

/// The verbatim statement fragment each claim is checked against.
std::string_view claim_anchor(ClaimId c);

/// True for claims whose right-hand side depends only on (G, S).
bool has_closed_form(ClaimId c);

/// Claim-specific extra inputs.
struct ClaimAux {
    std::optional<GroupSubset> set_b;     // B for λ lemmas, Y for Kneser/prehistoric, T for OBS
    std::optional<Element> x;             // LEMMA_12 / LEMMA_13 element
    std::optional<Element> y;             // LEMMA_12 second element
    std::optional<std::uint32_t> k;       // KWEDGE_T11
    std::optional<Subgroup> subgroup;     // LEMMA_18 H, KWEDGE_T11 coset form, PREHISTORIC coset form
    std::optional<std::int64_t> t;        // LEMMA_20
};

struct ClaimReport {
    ClaimId claim = ClaimId::CONJECTURE;
    GroupSubset set;
    bool hypotheses_met = false;
    bool holds = true;
    std::int64_t lhs = 0;
    std::optional<Rational> rhs;
    std::optional<Rational> slack;
    std::string branch;
    std::optional<GroupSubset> witness;
    std::optional<Element> witness_element;
    std::string note;

    explicit ClaimReport(GroupSubset s) : set(std::move(s)) {}
};

/// 1 if |S| is even or 2|S|^2 + 3|S| <= 2|⟨S⟩| + 5, else 0. S non-empty.
int xi(const GroupSubset& s);
/// ξ(S′) for a half S′ of a symmetric S with no element of order <= 2.
int xi_prime(const GroupSubset& s);
/// The closed form |S|^2/2 + 3|S|/2 <= 2|⟨S⟩| + 5; agrees with xi_prime when |S|/2 is odd.
int xi_prime_displayed(const GroupSubset& s);
/// One S′ with S = S′ ∪ (−S′): the smaller of each {x, −x}.
GroupSubset symmetric_half(const GroupSubset& s);

/// Exact right-hand side of a closed-form claim.
Rational bound_value(ClaimId c, const GroupSubset& s);

/// Evaluates the claim's hypotheses on (S, aux) exactly as stated; when
/// they hold, evaluates the conclusion. Throws std::invalid_argument when
/// a required aux input is missing or malformed.
ClaimReport check(ClaimId c, const GroupSubset& s, const ClaimAux& aux = {});

inline constexpr std::uint32_t kDefaultCriticalCap = 16;

struct CriticalNumber {
    std::uint32_t value = 0;
    /// The trivial group has no zero-free elements; reported as 0 by convention.
    bool trivial_convention = false;
};

CriticalNumber critical_number(const GroupSpec& g, std::uint32_t cap = kDefaultCriticalCap);

}  // namespace subsums
