#include "sz/cache.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <sstream>

#include "sz/error.hpp"

namespace sz {

namespace {

constexpr std::array<char, 4> kMagic{'S', 'Z', 'G', 'T'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ostream& out, T v) {
  std::array<char, sizeof(T)> buf;
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xff);
  out.write(buf.data(), buf.size());
}

template <typename T>
T get(std::istream& in) {
  std::array<unsigned char, sizeof(T)> buf;
  if (!in.read(reinterpret_cast<char*>(buf.data()), buf.size())) throw GroupError("group cache is truncated");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  return static_cast<T>(v);
}

}  // namespace

std::filesystem::path cache_file(const std::filesystem::path& dir, std::uint32_t q, std::uint32_t modulus) {
  std::ostringstream name;
  name << "sz" << q << "_mod" << std::hex << modulus << ".bin";
  return dir / name.str();
}

void save_group(const std::filesystem::path& file, const GroupTable& g, std::uint32_t q, std::uint32_t modulus) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  const auto tmp = std::filesystem::path(file.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw GroupError("cannot write group cache " + tmp.string());
    out.write(kMagic.data(), kMagic.size());
    put<std::uint32_t>(out, kVersion);
    put<std::uint32_t>(out, q);
    put<std::uint32_t>(out, modulus);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(g.degree()));
    put<std::uint64_t>(out, g.order());
    put<std::uint32_t>(out, static_cast<std::uint32_t>(g.generators().size()));
    for (const auto s : g.generators()) put<std::uint32_t>(out, s);
    for (ElementId x = 0; x < g.order(); ++x) {
      for (const auto p : g.images(x)) put<std::uint16_t>(out, p);
    }
    put<std::uint64_t>(out, g.digest());
    if (!out) throw GroupError("failed writing group cache " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

std::optional<GroupTable> load_group(const std::filesystem::path& file, std::uint32_t q, std::uint32_t modulus) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) throw GroupError("not a group cache: " + file.string());
  if (get<std::uint32_t>(in) != kVersion) throw GroupError("unsupported group cache version");
  if (get<std::uint32_t>(in) != q || get<std::uint32_t>(in) != modulus) {
    throw GroupError("group cache " + file.string() + " was built for a different field");
  }
  const auto degree = get<std::uint32_t>(in);
  const auto order = get<std::uint64_t>(in);
  if (degree == 0 || degree > 65536 || order == 0 || order > (std::uint64_t{1} << 26)) {
    throw GroupError("group cache header is out of range");
  }
  const auto ngens = get<std::uint32_t>(in);
  std::vector<ElementId> gens(ngens);
  for (auto& s : gens) s = get<std::uint32_t>(in);
  std::vector<Perm> elements;
  elements.reserve(order);
  std::vector<std::uint16_t> img(degree);
  for (std::uint64_t x = 0; x < order; ++x) {
    for (auto& p : img) p = get<std::uint16_t>(in);
    elements.emplace_back(img);
  }
  const auto digest = get<std::uint64_t>(in);
  GroupTable g = GroupTable::from_elements(std::move(elements), gens);
  if (g.digest() != digest) throw GroupError("group cache digest mismatch: " + file.string());
  return g;
}

}  // namespace sz
