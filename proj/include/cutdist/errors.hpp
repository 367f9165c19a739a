#pragma once

#include <stdexcept>
#include <string>

namespace cutdist {

// Raised when a request exceeds a configured capability limit (for example an
// exact cube-cut volume beyond the 2^n enumeration cap). Kept distinct from
// std::domain_error so callers can map it to a different exit code.
class capability_error : public std::runtime_error {
public:
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cutdist
