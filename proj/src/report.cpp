#include "cgv/report.hpp"

#include <stdexcept>

namespace cgv {

std::string_view to_string(Agreement a) {
  switch (a) {
    case Agreement::confirmed:
      return "confirmed";
    case Agreement::refuted:
      return "refuted";
    case Agreement::indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

Agreement agreement_from_string(std::string_view text) {
  if (text == "confirmed") return Agreement::confirmed;
  if (text == "refuted") return Agreement::refuted;
  if (text == "indeterminate") return Agreement::indeterminate;
  throw std::invalid_argument("unknown agreement '" + std::string(text) + "'");
}

CheckReport make_report(std::string check_id, std::string computed, std::optional<PaperClaim> claim,
                        std::vector<std::string> notes, bool decided) {
  CheckReport out;
  out.check_id = std::move(check_id);
  out.computed = std::move(computed);
  if (claim && decided) {
    out.agreement = claim->value == out.computed ? Agreement::confirmed : Agreement::refuted;
  }
  out.paper_claim = std::move(claim);
  out.notes = std::move(notes);
  return out;
}

CheckReport make_unresolved_report(std::string check_id, std::string computed, PaperClaim claim,
                                   std::vector<std::string> notes) {
  return make_report(std::move(check_id), std::move(computed), std::move(claim), std::move(notes), false);
}

}  // namespace cgv
