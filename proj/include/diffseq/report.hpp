#pragma once

#include <string>
#include <vector>

#include "diffseq/json_io.hpp"

namespace diffseq {

/// Record of the identities a verification routine established. Failures
/// are not recorded here; they raise VerificationFailure.
struct Report {
  std::string module;
  std::string operation;
  int n = 0;
  std::vector<std::string> checks;

  void add(std::string check) { checks.push_back(std::move(check)); }
  Json to_json() const;
};

/// Throws VerificationFailure unless residual is zero.
void require_zero(const DiffPoly& residual, const std::string& module,
                  const std::string& operation, const std::string& stage);
void require_zero(const ExpDiffPoly& residual, const std::string& module,
                  const std::string& operation, const std::string& stage);

}  // namespace diffseq
