#pragma once

#include <stdexcept>

namespace rlqas {

/// A caller broke an interface contract (e.g. stepped with a masked action).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rlqas
