#include "galmod/mutation.hpp"

#include <atomic>

namespace galmod {

namespace {
std::atomic<Mutation> current{Mutation::None};
}

Mutation active_mutation() { return current.load(std::memory_order_relaxed); }

std::string mutation_name(Mutation m) {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::FlipUpsilonSign: return "flip-upsilon-sign";
    case Mutation::DropAlphaNormalization: return "drop-alpha-normalization";
    case Mutation::OmegaUsesCi: return "omega-uses-c-i";
  }
  return "none";
}

std::optional<Mutation> parse_mutation(const std::string& name) {
  for (Mutation m : {Mutation::None, Mutation::FlipUpsilonSign, Mutation::DropAlphaNormalization, Mutation::OmegaUsesCi})
    if (mutation_name(m) == name) return m;
  return std::nullopt;
}

std::vector<Mutation> all_mutations() {
  return {Mutation::FlipUpsilonSign, Mutation::DropAlphaNormalization, Mutation::OmegaUsesCi};
}

ScopedMutation::ScopedMutation(Mutation m) : previous_(current.exchange(m)) {}

ScopedMutation::~ScopedMutation() { current.store(previous_); }

}  // namespace galmod
