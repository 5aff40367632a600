#include "orbitals/errors.h"

namespace orbitals {

void ThrowDomainError(const std::string& what) { throw DomainError(what); }

}  // namespace orbitals
