#include "spindiscord/error.hpp"

#include <sstream>

namespace spindiscord {

namespace {
std::string ferro_message(double delta) {
  std::ostringstream os;
  os << "ferromagnetic regime: delta = " << delta
     << " <= -1, the ground state leaves the Sz=0 sector (discord is 0 there)";
  return os.str();
}
}  // namespace

FerromagneticRegimeError::FerromagneticRegimeError(double delta)
    : DomainError(ferro_message(delta)), delta_(delta) {}

}  // namespace spindiscord
