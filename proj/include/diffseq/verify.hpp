#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "diffseq/kernels.hpp"
#include "diffseq/report.hpp"

namespace diffseq {

/// One identity suite, run once for every n in [min_n, max_n]. The body
/// throws VerificationFailure when an identity fails.
struct Suite {
  std::string name;
  int min_n = 1;
  std::function<std::vector<Report>(int n, std::uint64_t seed)> body;
};

class SuiteRegistry {
 public:
  void add(Suite suite);
  /// nullptr when absent.
  const Suite* find(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::vector<Suite> suites_;
};

/// lemma1, interleave, matrix, symmetry, csg, painleve, integrals.
const SuiteRegistry& default_suites();

/// Runs the named suites ("all" selects every suite) for n up to max_n.
/// Output order does not depend on scheduling. Throws InvalidArgument for
/// an unknown suite and rethrows the first failure in task order.
Json run_verify(const SuiteRegistry& registry, const std::string& suite, int max_n,
                std::uint64_t seed, Exec exec = Exec::parallel);

}  // namespace diffseq
