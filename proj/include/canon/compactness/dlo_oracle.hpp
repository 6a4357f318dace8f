#pragma once

#include "canon/proof/prover.hpp"

namespace canon::compactness {

/// Decision procedure for sentences over constants and `lt/2`, relative to
/// the theory of dense linear orders without endpoints. A set is consistent
/// with DLO iff some interpretation of its constants in (Q, <) satisfies it;
/// only the weak ordering of the constants matters, so the search ranges over
/// weak orderings and evaluates quantifiers on test points. Constants that
/// never share a sentence are independent and searched separately. Other
/// signatures fall back to GenericOracle.
class DloOracle : public proof::ConsistencyOracle {
 public:
  std::string id() const override { return "dlo"; }
  proof::Consistency check(const syntax::Signature& signature, const std::vector<syntax::Formula>& sentences,
                           const proof::Budget& budget) const override;
};

}  // namespace canon::compactness
