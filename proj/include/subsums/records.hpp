#pragma once

#include "subsums/claims.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subsums {

inline constexpr int kRecordVersion = 1;

struct SubsetFlags {
    bool zero_free = false;
    bool asymmetric = false;
    bool symmetric = false;
    bool generating = false;
    bool sigma_aperiodic = false;

    friend bool operator==(const SubsetFlags&, const SubsetFlags&) = default;
};

SubsetFlags subset_flags(const GroupSubset& s);

struct ClaimSlack {
    ClaimId claim;
    std::optional<Rational> slack;  // empty when the hypotheses are unmet
    bool violated = false;

    friend bool operator==(const ClaimSlack&, const ClaimSlack&) = default;
};

struct SearchRecord {
    std::string group;
    std::vector<std::uint32_t> canonical_form;
    std::string set;  // hex bit string
    std::uint32_t size = 0;
    std::uint64_t sigma_size = 0;
    std::vector<ClaimSlack> slacks;
    SubsetFlags flags;
    std::uint64_t rank = 0;

    bool violated() const;
    friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

/// Evaluates the claims on S. Claims needing auxiliary inputs are rejected.
SearchRecord make_record(const GroupSubset& s, const std::vector<ClaimId>& claims, std::uint64_t rank);

/// Claims evaluable from (G, S) alone.
bool searchable(ClaimId c);

/// One line of JSON, no trailing newline.
std::string to_jsonl(const SearchRecord& r);
SearchRecord from_jsonl(std::string_view line);

class RecordError : public std::runtime_error {
public:
    RecordError(const std::string& what, std::size_t line) : std::runtime_error(what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

void write_records(const std::filesystem::path& path, const std::vector<SearchRecord>& records);
/// Throws RecordError naming the 1-based line of a corrupt, truncated or
/// wrong-version record.
std::vector<SearchRecord> read_records(const std::filesystem::path& path);

/// Re-derives every stored value from (group, set) with the naive Σ
/// enumeration; returns a description of the first mismatch, if any.
std::optional<std::string> verify_record(const SearchRecord& r);

}  // namespace subsums
