#include "spindiscord/gs_cache.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace spindiscord {

namespace {

constexpr char kMagic[6] = {'S', 'D', 'K', 'G', 'S', '1'};
constexpr std::size_t kHeaderSize = 6 + 4 + 4 + 8 + 8 + 8 + 8;

static_assert(std::endian::native == std::endian::little ||
                  std::endian::native == std::endian::big,
              "mixed-endian platforms are not supported");

template <typename T>
void put(std::vector<std::byte>& out, T value) {
  auto raw = std::bit_cast<std::array<std::byte, sizeof(T)>>(value);
  if constexpr (std::endian::native == std::endian::big) std::reverse(raw.begin(), raw.end());
  out.insert(out.end(), raw.begin(), raw.end());
}

template <typename T>
T get(std::span<const std::byte> in, std::size_t offset) {
  std::array<std::byte, sizeof(T)> raw;
  std::memcpy(raw.data(), in.data() + offset, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(raw.begin(), raw.end());
  return std::bit_cast<T>(raw);
}

std::string hex_double(double x) {
  std::ostringstream os;
  os << std::hex << std::bit_cast<std::uint64_t>(x);
  return os.str();
}

}  // namespace

std::uint32_t crc32(std::span<const std::byte> bytes) {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed large buffers in chunks.
  std::size_t offset = 0;
  while (offset < bytes.size()) {
    const std::size_t chunk = std::min<std::size_t>(bytes.size() - offset, 1U << 30);
    crc = ::crc32(crc, reinterpret_cast<const Bytef*>(bytes.data() + offset),
                  static_cast<uInt>(chunk));
    offset += chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

std::vector<std::byte> encode_ground_state(const GroundState& gs) {
  std::vector<std::byte> out;
  const auto dim = static_cast<std::uint64_t>(gs.amplitudes.size());
  out.reserve(kHeaderSize + dim * 8 + 4);
  for (char c : kMagic) out.push_back(static_cast<std::byte>(c));
  put(out, static_cast<std::uint32_t>(gs.basis->n_sites()));
  put(out, static_cast<std::uint32_t>(gs.basis->n_up()));
  put(out, gs.delta);
  put(out, gs.tol);
  put(out, gs.energy);
  put(out, dim);
  const std::size_t payload_start = out.size();
  for (Eigen::Index i = 0; i < gs.amplitudes.size(); ++i) put(out, gs.amplitudes(i));
  const auto crc = crc32(std::span<const std::byte>(out).subspan(payload_start));
  put(out, crc);
  return out;
}

std::optional<DecodedGroundState> decode_ground_state(std::span<const std::byte> bytes) {
  if (bytes.size() < kHeaderSize + 4) return std::nullopt;
  if (std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0) return std::nullopt;
  DecodedGroundState d;
  std::size_t off = sizeof(kMagic);
  d.n_sites = get<std::uint32_t>(bytes, off);
  off += 4;
  d.n_up = get<std::uint32_t>(bytes, off);
  off += 4;
  d.delta = get<double>(bytes, off);
  off += 8;
  d.tol = get<double>(bytes, off);
  off += 8;
  d.energy = get<double>(bytes, off);
  off += 8;
  const auto dim = get<std::uint64_t>(bytes, off);
  off += 8;
  if (dim > (bytes.size() - kHeaderSize - 4) / 8 || bytes.size() != kHeaderSize + dim * 8 + 4)
    return std::nullopt;
  const auto payload = bytes.subspan(kHeaderSize, dim * 8);
  if (crc32(payload) != get<std::uint32_t>(bytes, kHeaderSize + dim * 8)) return std::nullopt;
  d.amplitudes.resize(dim);
  for (std::uint64_t i = 0; i < dim; ++i) d.amplitudes[i] = get<double>(payload, i * 8);
  return d;
}

GroundStateCache::GroundStateCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path GroundStateCache::path_for(int n_sites, double delta,
                                                 const GroundStateOptions& opt) const {
  std::ostringstream name;
  name << "gs_N" << n_sites << "_d" << hex_double(delta) << "_t" << hex_double(opt.tol) << "_s"
       << opt.seed << "_v" << kCacheCodeVersion << ".bin";
  return dir_ / name.str();
}

std::optional<GroundState> GroundStateCache::load(int n_sites, double delta,
                                                  const GroundStateOptions& opt) const {
  const auto path = path_for(n_sites, delta, opt);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto decoded =
      decode_ground_state(std::as_bytes(std::span<const char>(raw.data(), raw.size())));
  if (!decoded || decoded->n_sites != static_cast<std::uint32_t>(n_sites) ||
      decoded->n_up != static_cast<std::uint32_t>(n_sites / 2) ||
      std::bit_cast<std::uint64_t>(decoded->delta) != std::bit_cast<std::uint64_t>(delta) ||
      std::bit_cast<std::uint64_t>(decoded->tol) != std::bit_cast<std::uint64_t>(opt.tol))
    return std::nullopt;

  auto basis = std::make_shared<const SectorBasis>(n_sites, n_sites / 2);
  if (decoded->amplitudes.size() != basis->size()) return std::nullopt;
  GroundState gs;
  gs.basis = std::move(basis);
  gs.delta = delta;
  gs.energy = decoded->energy;
  gs.amplitudes = Eigen::Map<const Eigen::VectorXd>(decoded->amplitudes.data(),
                                                    static_cast<Eigen::Index>(decoded->amplitudes.size()));
  gs.residual = residual_norm(*gs.basis, delta, gs.amplitudes, gs.energy);
  // A record that no longer solves the eigenproblem is treated as a miss.
  if (!(gs.residual <= 1e-8 * std::max(1.0, std::abs(gs.energy)))) return std::nullopt;
  gs.tol = opt.tol;
  gs.seed = opt.seed;
  return gs;
}

void GroundStateCache::store(const GroundState& gs) const {
  std::filesystem::create_directories(dir_);
  GroundStateOptions opt;
  opt.tol = gs.tol;
  opt.seed = gs.seed;
  const auto path = path_for(gs.n_sites(), gs.delta, opt);
  const auto bytes = encode_ground_state(gs);
  // Write then rename so a concurrent reader never sees a partial record.
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("cannot write ground-state cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

GroundState GroundStateCache::get_or_solve(int n_sites, double delta, const GroundStateOptions& opt) {
  if (auto cached = load(n_sites, delta, opt)) {
    ++hits_;
    return std::move(*cached);
  }
  ++misses_;
  GroundState gs = ground_state(n_sites, delta, opt);
  store(gs);
  return gs;
}

}  // namespace spindiscord
