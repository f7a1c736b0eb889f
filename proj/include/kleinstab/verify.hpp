#pragma once

// Fixed test vectors from the worked examples, plus known discrepancies in printed
// closed forms and bounds, which are reported but do not fail the run.

#include <string>
#include <vector>

namespace kleinstab {

enum class CheckStatus { Pass, Fail, DocumentedMismatch };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
};

std::string status_name(CheckStatus s);

std::vector<Check> run_verification();

/// True iff no check has status Fail.
bool verification_passed(const std::vector<Check>& checks);

}  // namespace kleinstab
