#pragma once

#include "subsums/records.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace subsums {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kManifestVersion = 1;
/// Subset ranks are bit strings held in 64-bit words.
inline constexpr std::uint32_t kMaxSearchOrder = 63;

struct SubsetConstraints {
    bool zero_free = false;
    bool asymmetric = false;  // S ∩ (−S) = ∅
    bool symmetric = false;
    bool generating = false;
    bool sigma_aperiodic = false;
    std::uint32_t size_min = 0;
    std::uint32_t size_max = std::numeric_limits<std::uint32_t>::max();

    /// Throws std::invalid_argument for symmetric ∧ asymmetric or size_min > size_max.
    void validate() const;
    bool accepts(const GroupSubset& s) const;
    friend bool operator==(const SubsetConstraints&, const SubsetConstraints&) = default;
};

/// Subsets satisfying the constraints in increasing rank. The rank of S is
/// the integer value of its bit string; symmetric subsets are ranked by the
/// bit string of their orbit representatives (the smaller flat index of
/// each {x, −x}). Filters run structure first, Σ-aperiodicity last.
class SubsetEnumerator {
public:
    SubsetEnumerator(GroupSpec g, SubsetConstraints c);

    const GroupSpec& group() const { return group_; }
    /// One past the largest rank.
    std::uint64_t rank_end() const { return end_; }

    /// The first accepted subset with rank in [cursor, limit); advances the
    /// cursor past it, or to `limit` when there is none.
    std::optional<GroupSubset> next(std::uint64_t& cursor, std::uint64_t limit) const;
    GroupSubset unrank(std::uint64_t rank) const;
    std::uint64_t rank(const GroupSubset& s) const;

private:
    std::uint64_t skip(std::uint64_t m) const;

    GroupSpec group_;
    SubsetConstraints c_;
    std::uint64_t end_ = 0;
    std::uint64_t forbidden_ = 0;
    std::vector<std::pair<int, int>> conflicts_;  // (lower, higher) positions of x and −x
    bool singleton_atoms_ = true;
};

std::vector<GroupSubset> enumerate_subsets(const GroupSpec& g, const SubsetConstraints& c);
std::uint64_t count_subsets(const GroupSpec& g, const SubsetConstraints& c);

/// First occurrence of each isomorphism class, in input order.
std::vector<GroupSpec> dedupe_groups(const std::vector<GroupSpec>& groups);

struct SearchConfig {
    std::vector<GroupSpec> groups;
    SubsetConstraints constraints;
    std::vector<ClaimId> claims;
    std::uint64_t chunk_ranks = std::uint64_t{1} << 12;
};

struct SearchCursor {
    std::size_t group_index = 0;
    std::uint64_t rank = 0;
    friend bool operator==(const SearchCursor&, const SearchCursor&) = default;
};

struct SearchSummary {
    std::uint64_t records = 0;
    std::map<ClaimId, Rational> min_slack;
    /// Violations that survived the naive re-computation.
    std::vector<SearchRecord> violations;
    /// Flagged records the re-computation contradicted.
    std::uint64_t rejected = 0;
    bool complete = false;
    SearchCursor cursor;
};

struct SearchOptions {
    unsigned threads = 1;
    /// Simulated crash: stop after writing this many records of the run,
    /// leaving half of the next line behind and the manifest stale.
    std::optional<std::uint64_t> stop_after;
    std::function<void(const std::string&)> progress;
};

std::filesystem::path manifest_path(const std::filesystem::path& records);
/// Hash of the canonical configuration; a resume refuses on mismatch.
std::string config_hash(const SearchConfig& c);

/// Fresh run: truncates `records`, writes `<records>.manifest.json`.
SearchSummary run_search(const SearchConfig& config, const std::filesystem::path& records,
                         const SearchOptions& options = {});
/// Continues the run described by the manifest. Truncates the record file
/// to the checkpointed length first. Throws std::runtime_error on a version
/// or configuration mismatch.
SearchSummary resume_search(const std::filesystem::path& manifest, const SearchOptions& options = {});

/// Records of minimal slack per (group, |S|) cell, ties kept, in
/// (group, size, rank) order. Requires a closed-form claim.
std::vector<SearchRecord> find_extremal(const std::vector<GroupSpec>& groups, ClaimId claim,
                                        const SubsetConstraints& c, unsigned threads = 1);

struct GroupCount {
    std::string group;
    std::uint64_t instances = 0;
};

struct FuzzVerdict {
    bool exhausted = true;
    std::uint64_t instances = 0;
    std::vector<GroupCount> per_group;
    std::optional<Rational> min_slack;
    std::optional<SearchRecord> min_record;
    std::map<std::uint32_t, Rational> min_slack_by_size;
    std::vector<SearchRecord> counterexamples;
    std::uint64_t rejected = 0;
};

/// Conjecture check over every subset meeting `c` (default: zero-free with
/// Σ(S) aperiodic) in each group. Negative slacks are reported only after
/// surviving verify_record.
FuzzVerdict fuzz_conjecture(const std::vector<GroupSpec>& groups, const SubsetConstraints& c,
                            unsigned threads = 1);

/// Oracle gate: true when the record's flagged violation is confirmed.
bool confirm_violation(const SearchRecord& r);

}  // namespace subsums
