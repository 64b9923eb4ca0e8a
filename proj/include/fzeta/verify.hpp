#pragma once

#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fzeta/modmath.hpp"

namespace fzeta {

// The closed catalog of checkable identities. Names are the stable CLI /
// report vocabulary.
enum class IdentityId {
    dep1_vanish,
    symsum,
    dep2_eval,
    antipode,
    hoffman_duality,
    reversal,
    eval_112,
    parity_112,
    sum_formula,
    oyama,
    ohno_fs,
    shF,
    shF2,
    PQ_exact,
    PQ2_modp,
    lemma_A,
    lemma_B,
    U_telescope,
    O_depth1,
    O_depth2,
    main,
    main_k2eq2,
    kaneko_conjecture,
    ohno_classical,
};

inline constexpr std::array<IdentityId, 24> kAllIdentities = {
    IdentityId::dep1_vanish,   IdentityId::symsum,
    IdentityId::dep2_eval,     IdentityId::antipode,
    IdentityId::hoffman_duality, IdentityId::reversal,
    IdentityId::eval_112,      IdentityId::parity_112,
    IdentityId::sum_formula,   IdentityId::oyama,
    IdentityId::ohno_fs,       IdentityId::shF,
    IdentityId::shF2,          IdentityId::PQ_exact,
    IdentityId::PQ2_modp,      IdentityId::lemma_A,
    IdentityId::lemma_B,       IdentityId::U_telescope,
    IdentityId::O_depth1,      IdentityId::O_depth2,
    IdentityId::main,          IdentityId::main_k2eq2,
    IdentityId::kaneko_conjecture, IdentityId::ohno_classical,
};

// How a given identity's cells are decided.
enum class FieldKind { ModP, Exact, Real };

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);
FieldKind field_of(IdentityId id);

// One verdict cell. `prime` is empty for exact/real identities; `weight`
// is empty where no single weight applies. Cells computed at primes at or
// below the guarantee floor (p <= 2N) carry `outside_guarantee` and never
// count as failures.
struct ReportEntry {
    IdentityId identity;
    std::string params;
    std::optional<std::uint32_t> prime;
    std::optional<int> weight;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    bool outside_guarantee = false;
};

class Report {
  public:
    void append(ReportEntry e) { entries_.push_back(std::move(e)); }
    void append(const Report& other);

    const std::vector<ReportEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    // Canonical order: identity (catalog order), params lexicographic,
    // prime ascending, weight ascending.
    void sort_entries();

    std::size_t passed() const noexcept;
    std::size_t failed() const noexcept;   // excludes outside-guarantee cells
    std::size_t flagged() const noexcept;  // outside-guarantee cells
    bool all_pass() const noexcept { return failed() == 0; }

    std::string summary() const;  // "PASS k/n" or "FAIL k/n" (+ flag count)

    // One JSON object per line, fields in the order
    // identity, params, prime, weight, lhs, rhs, pass.
    void write_json_lines(std::ostream& os) const;
    // Same columns as CSV, with a header row.
    void write_csv(std::ostream& os) const;

  private:
    std::vector<ReportEntry> entries_;
};

// Grid caps parsed from "name<=value" clauses; each identity accepts only
// its documented knobs (k, k_sum, weight, depth, m, n, l, s, terms).
struct GridOptions {
    std::map<std::string, long> caps;
};

// Run one identity over its (possibly capped) parameter grid at the given
// primes and series cutoff. Exact/real identities ignore the prime list.
// Cells at primes <= 2*cutoff are flagged outside the guarantee.
Report run_identity(IdentityId id, const std::vector<Prime>& primes, int cutoff,
                    const GridOptions& opts = {});

// Every identity over its default grid, in catalog order.
Report run_all(const std::vector<Prime>& primes, int cutoff);

}  // namespace fzeta
