#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cgv {

enum class Agreement { confirmed, refuted, indeterminate };

std::string_view to_string(Agreement a);
Agreement agreement_from_string(std::string_view text);

/// A printed claim: its canonical value and a short verbatim fragment locating it.
struct PaperClaim {
  std::string value;
  std::string citation;

  friend bool operator==(const PaperClaim&, const PaperClaim&) = default;
};

/// Result of one verification.
///
/// `agreement` is confirmed only when `computed` equals the claim value
/// exactly, refuted when they differ, and indeterminate when there is no claim,
/// the claim is ambiguous, or the computation did not reach a verdict.
struct CheckReport {
  std::string check_id;
  std::string computed;
  std::optional<PaperClaim> paper_claim;
  Agreement agreement = Agreement::indeterminate;
  std::vector<std::string> notes;
  std::int64_t elapsed_ms = 0;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Builds a report and derives the agreement flag from `computed` vs the claim.
/// `decided == false` (an inconclusive computation) forces indeterminate.
CheckReport make_report(std::string check_id, std::string computed, std::optional<PaperClaim> claim,
                        std::vector<std::string> notes = {}, bool decided = true);

/// Same, but the claim exists only as an unresolved or ambiguous statement.
CheckReport make_unresolved_report(std::string check_id, std::string computed, PaperClaim claim,
                                   std::vector<std::string> notes = {});

}  // namespace cgv
