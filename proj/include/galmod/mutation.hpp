#pragma once

#include <optional>
#include <string>
#include <vector>

namespace galmod {

/// Deliberate defects that the verification suite must detect.
enum class Mutation {
  None,
  FlipUpsilonSign,        // negate the centered pairing exponent
  DropAlphaNormalization, // omit the 1/e factor in the tame generator
  OmegaUsesCi,            // act on zeta by c(i) instead of c(i^{-1})
};

Mutation active_mutation();
std::string mutation_name(Mutation m);
std::optional<Mutation> parse_mutation(const std::string& name);
std::vector<Mutation> all_mutations();

/// Installs a mutation for the lifetime of the guard.
class ScopedMutation {
 public:
  explicit ScopedMutation(Mutation m);
  ~ScopedMutation();
  ScopedMutation(const ScopedMutation&) = delete;
  ScopedMutation& operator=(const ScopedMutation&) = delete;

 private:
  Mutation previous_;
};

}  // namespace galmod
