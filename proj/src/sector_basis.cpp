#include "spindiscord/sector_basis.hpp"

#include <bit>
#include <sstream>

#include "spindiscord/error.hpp"

namespace spindiscord {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

SectorBasis::SectorBasis(int n_sites, int n_up) : n_sites_(n_sites), n_up_(n_up) {
  if (n_sites < 4 || n_sites % 2 != 0 || n_sites > kMaxSites) {
    std::ostringstream os;
    os << "unsupported ring size " << n_sites << ": need even N >= 4 and N <= "
       << kMaxSites;
    throw UnsupportedError(os.str());
  }
  if (n_up < 0 || n_up > n_sites) {
    std::ostringstream os;
    os << "n_up = " << n_up << " outside [0, " << n_sites << "]";
    throw DomainError(os.str());
  }

  binom_.assign(static_cast<std::size_t>(n_sites) + 1,
                std::vector<std::size_t>(static_cast<std::size_t>(n_up) + 2, 0));
  for (int n = 0; n <= n_sites; ++n)
    for (int k = 0; k <= n_up + 1; ++k) binom_[n][k] = binomial(n, k);

  states_.reserve(binomial(n_sites, n_up));
  if (n_up == 0) {
    states_.push_back(0);
    return;
  }
  // Gosper's hack: next larger integer with the same popcount.
  const Config last = ((Config{1} << n_up) - 1) << (n_sites - n_up);
  Config c = (Config{1} << n_up) - 1;
  while (true) {
    states_.push_back(c);
    if (c == last) break;
    const Config low = c & (~c + 1);
    const Config ripple = c + low;
    c = (((ripple ^ c) >> 2) / low) | ripple;
  }
}

bool SectorBasis::contains(Config c) const noexcept {
  return (c >> n_sites_) == 0 && std::popcount(c) == n_up_;
}

SectorBasis build_sector(int n_sites, int n_up) { return SectorBasis(n_sites, n_up); }

}  // namespace spindiscord
