#include "sz/group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sz/error.hpp"

namespace sz {

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kDenseLimit = std::size_t{1} << 22;

std::string_view bytes_of(std::span<const std::uint16_t> images) {
  return {reinterpret_cast<const char*>(images.data()), images.size() * sizeof(std::uint16_t)};
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupTable

GroupTable GroupTable::enumerate(std::span<const Perm> generators, std::size_t cap, std::size_t degree) {
  if (!generators.empty()) degree = generators.front().degree();
  if (degree == 0) throw GroupError("cannot enumerate a group of degree 0");
  for (const auto& p : generators) {
    if (p.degree() != degree) throw GroupError("generators have different degrees");
  }
  std::vector<Perm> gens;
  for (const auto& p : generators) {
    if (!p.is_identity()) gens.push_back(p);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  GroupTable t;
  t.degree_ = degree;
  const Perm id = Perm::identity(degree);
  t.elements_.assign(id.images().begin(), id.images().end());
  std::unordered_map<std::string, ElementId> seen;
  seen.emplace(std::string(bytes_of(id.images())), 0);

  std::vector<std::uint16_t> scratch(degree);
  for (std::size_t head = 0; head < seen.size(); ++head) {
    for (const auto& s : gens) {
      const std::uint16_t* g = t.elements_.data() + head * degree;
      for (std::size_t p = 0; p < degree; ++p) scratch[p] = s[g[p]];
      std::string key(bytes_of(scratch));
      if (seen.find(key) != seen.end()) continue;
      if (seen.size() >= cap) {
        throw GroupError("group order exceeds the enumeration cap of " + std::to_string(cap) + " elements");
      }
      seen.emplace(std::move(key), static_cast<ElementId>(seen.size()));
      t.elements_.insert(t.elements_.end(), scratch.begin(), scratch.end());
    }
  }
  t.order_ = seen.size();
  for (const auto& s : gens) t.generators_.push_back(seen.at(std::string(bytes_of(s.images()))));
  t.finalize();
  return t;
}

GroupTable GroupTable::from_elements(std::vector<Perm> elements, std::span<const ElementId> generator_ids) {
  if (elements.empty() || !elements.front().is_identity()) {
    throw GroupError("stored element list must start with the identity");
  }
  GroupTable t;
  t.degree_ = elements.front().degree();
  t.order_ = elements.size();
  t.elements_.reserve(t.order_ * t.degree_);
  for (const auto& e : elements) {
    if (e.degree() != t.degree_) throw GroupError("stored elements have different degrees");
    t.elements_.insert(t.elements_.end(), e.images().begin(), e.images().end());
  }
  for (const auto g : generator_ids) {
    if (g >= t.order_) throw GroupError("generator id out of range");
  }
  t.generators_.assign(generator_ids.begin(), generator_ids.end());
  t.finalize();
  // Closure check: every element times every generator stays in the list.
  for (ElementId g = 0; g < t.order_; ++g) {
    for (const auto s : t.generators_) {
      std::vector<std::uint16_t> img(t.degree_);
      const auto a = t.images(g);
      const auto b = t.images(s);
      for (std::size_t p = 0; p < t.degree_; ++p) img[p] = b[a[p]];
      if (!t.find(img)) throw GroupError("stored element list is not closed under its generators");
    }
  }
  return t;
}

void GroupTable::finalize() {
  // Greedy base: keep adding the smallest point moved by the first element
  // that fixes the current base pointwise.
  std::vector<ElementId> candidates(order_ > 0 ? order_ - 1 : 0);
  std::iota(candidates.begin(), candidates.end(), ElementId{1});
  base_.clear();
  while (!candidates.empty()) {
    const auto img = images(candidates.front());
    std::uint16_t point = 0;
    while (img[point] == point) ++point;
    base_.push_back(point);
    std::erase_if(candidates, [&](ElementId g) { return images(g)[point] != point; });
  }
  if (base_.size() > 4 && degree_ > 256) throw GroupError("base too long for the lookup key");
  if (base_.size() > 8) throw GroupError("base too long for the lookup key");

  double dense_size = 1;
  for (std::size_t i = 0; i < base_.size(); ++i) dense_size *= static_cast<double>(degree_);
  dense_lookup_.clear();
  sparse_lookup_.clear();
  const bool dense = dense_size <= static_cast<double>(kDenseLimit);
  if (dense) dense_lookup_.assign(static_cast<std::size_t>(dense_size), kUnassigned);

  std::vector<std::uint16_t> bimg(base_.size());
  for (ElementId g = 0; g < order_; ++g) {
    const auto img = images(g);
    for (std::size_t k = 0; k < base_.size(); ++k) bimg[k] = img[base_[k]];
    const std::uint64_t key = key_of(bimg);
    bool fresh;
    if (dense) {
      fresh = dense_lookup_[key] == kUnassigned;
      dense_lookup_[key] = g;
    } else {
      fresh = sparse_lookup_.emplace(key, g).second;
    }
    if (!fresh) throw GroupError("two elements agree on the base; element list has duplicates");
  }

  inverse_.assign(order_, 0);
  std::vector<std::uint16_t> inv_img(degree_);
  for (ElementId g = 0; g < order_; ++g) {
    const auto img = images(g);
    for (std::size_t p = 0; p < degree_; ++p) inv_img[img[p]] = static_cast<std::uint16_t>(p);
    const auto h = find(inv_img);
    if (!h) throw GroupError("element list is not closed under inversion");
    inverse_[g] = *h;
  }

  orders_.assign(order_, 1);
  for (ElementId g = 1; g < order_; ++g) {
    std::uint32_t n = 1;
    ElementId x = g;
    while (x != identity()) {
      try {
        x = mul(x, g);
      } catch (const std::out_of_range&) {
        x = kUnassigned;
      }
      if (x >= order_) throw GroupError("element list is not closed under multiplication");
      ++n;
    }
    orders_[g] = n;
  }
}

std::uint64_t GroupTable::key_of(std::span<const std::uint16_t> base_images) const {
  std::uint64_t key = 0;
  if (!dense_lookup_.empty()) {
    for (auto it = base_images.rbegin(); it != base_images.rend(); ++it) key = key * degree_ + *it;
    return key;
  }
  const unsigned width = base_images.size() <= 4 ? 16 : 8;
  for (const auto b : base_images) key = (key << width) | b;
  return key;
}

Perm GroupTable::element(ElementId g) const {
  const auto img = images(g);
  return Perm(std::vector<std::uint16_t>(img.begin(), img.end()));
}

std::optional<ElementId> GroupTable::find(std::span<const std::uint16_t> img) const {
  if (img.size() != degree_) return std::nullopt;
  std::uint16_t bimg[8];
  for (std::size_t k = 0; k < base_.size(); ++k) bimg[k] = img[base_[k]];
  const std::uint64_t key = key_of({bimg, base_.size()});
  ElementId g;
  if (!dense_lookup_.empty()) {
    g = dense_lookup_[key];
    if (g == kUnassigned) return std::nullopt;
  } else {
    const auto it = sparse_lookup_.find(key);
    if (it == sparse_lookup_.end()) return std::nullopt;
    g = it->second;
  }
  const auto stored = images(g);
  if (!std::equal(stored.begin(), stored.end(), img.begin())) return std::nullopt;
  return g;
}

ElementId GroupTable::id_of(const Perm& p) const {
  const auto g = find(p.images());
  if (!g) throw GroupError("permutation is not an element of the group");
  return *g;
}

ElementId GroupTable::mul(ElementId a, ElementId b) const {
  const auto ia = images(a);
  const auto ib = images(b);
  std::uint16_t bimg[8];
  for (std::size_t k = 0; k < base_.size(); ++k) bimg[k] = ib[ia[base_[k]]];
  const std::uint64_t key = key_of({bimg, base_.size()});
  return dense_lookup_.empty() ? sparse_lookup_.at(key) : dense_lookup_[key];
}

ElementId GroupTable::conj(ElementId g, ElementId x) const {
  const auto ix = images(x);
  const auto ixinv = images(inverse_[x]);
  const auto ig = images(g);
  std::uint16_t bimg[8];
  for (std::size_t k = 0; k < base_.size(); ++k) bimg[k] = ix[ig[ixinv[base_[k]]]];
  const std::uint64_t key = key_of({bimg, base_.size()});
  return dense_lookup_.empty() ? sparse_lookup_.at(key) : dense_lookup_[key];
}

ElementId GroupTable::pow(ElementId g, std::int64_t k) const {
  if (k < 0) {
    g = inv(g);
    k = -k;
  }
  k %= orders_[g];
  ElementId r = identity();
  while (k != 0) {
    if (k & 1) r = mul(r, g);
    g = mul(g, g);
    k >>= 1;
  }
  return r;
}

std::uint32_t GroupTable::exponent() const {
  std::uint32_t e = 1;
  for (const auto o : orders_) e = std::lcm(e, o);
  return e;
}

std::uint64_t GroupTable::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto v : elements_) {
    h ^= v & 0xffU;
    h *= 0x100000001b3ULL;
    h ^= v >> 8;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Subgroups

namespace {

// Breadth-first closure of the identity under right multiplication by seeds.
Bitset closure_members(const GroupTable& g, std::span<const ElementId> seeds, std::vector<ElementId>* list) {
  Bitset members(g.order());
  std::vector<ElementId> queue{GroupTable::identity()};
  members.set(GroupTable::identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto s : seeds) {
      const ElementId x = g.mul(queue[head], s);
      if (!members.test(x)) {
        members.set(x);
        queue.push_back(x);
      }
    }
  }
  if (list != nullptr) *list = std::move(queue);
  return members;
}

std::vector<ElementId> greedy_generators(const GroupTable& g, const std::vector<ElementId>& elements) {
  std::vector<ElementId> gens;
  Bitset current(g.order());
  current.set(GroupTable::identity());
  std::size_t current_order = 1;
  for (const auto x : elements) {
    if (current_order == elements.size()) break;
    if (current.test(x)) continue;
    gens.push_back(x);
    current = closure_members(g, gens, nullptr);
    current_order = current.count();
  }
  return gens;
}

}  // namespace

Subgroup Subgroup::from_members(const GroupTable& g, Bitset members, std::vector<ElementId> gens) {
  if (members.size() != g.order()) throw GroupError("member bitset does not match the group order");
  if (!members.test(GroupTable::identity())) throw GroupError("subgroup does not contain the identity");
  Subgroup s;
  s.elements_.reserve(members.count());
  members.for_each([&](std::size_t i) { s.elements_.push_back(static_cast<ElementId>(i)); });
  if (g.order() % s.elements_.size() != 0) {
    throw GroupError("subgroup order " + std::to_string(s.elements_.size()) + " does not divide " +
                     std::to_string(g.order()));
  }
  s.members_ = std::move(members);
  if (gens.empty()) gens = greedy_generators(g, s.elements_);
  std::erase(gens, GroupTable::identity());
  s.gens_ = std::move(gens);
  return s;
}

Subgroup closure(const GroupTable& g, std::span<const ElementId> seeds) {
  std::vector<ElementId> gens;
  for (const auto s : seeds) {
    if (s != GroupTable::identity()) gens.push_back(s);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Bitset members = closure_members(g, gens, nullptr);
  return Subgroup::from_members(g, std::move(members), std::move(gens));
}

Subgroup whole_group(const GroupTable& g) {
  Bitset all(g.order());
  all.set_all();
  return Subgroup::from_members(g, std::move(all),
                                std::vector<ElementId>(g.generators().begin(), g.generators().end()));
}

Subgroup trivial_subgroup(const GroupTable& g) {
  Bitset one(g.order());
  one.set(GroupTable::identity());
  return Subgroup::from_members(g, std::move(one));
}

Subgroup intersect(const GroupTable& g, const Subgroup& a, const Subgroup& b) {
  return Subgroup::from_members(g, a.members() & b.members());
}

Subgroup conjugate(const GroupTable& g, const Subgroup& k, ElementId x) {
  Bitset members(g.order());
  for (const auto e : k.elements()) members.set(g.conj(e, x));
  std::vector<ElementId> gens;
  for (const auto s : k.generators()) gens.push_back(g.conj(s, x));
  return Subgroup::from_members(g, std::move(members), std::move(gens));
}

Subgroup normalizer(const GroupTable& g, const Subgroup& k) {
  Bitset members(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    const bool normalizes = std::all_of(k.generators().begin(), k.generators().end(),
                                        [&](ElementId s) { return k.contains(g.conj(s, x)); });
    if (normalizes) members.set(x);
  }
  return Subgroup::from_members(g, std::move(members));
}

Subgroup centralizer(const GroupTable& g, const Subgroup& k) {
  Bitset members(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    const bool commutes = std::all_of(k.generators().begin(), k.generators().end(),
                                      [&](ElementId s) { return g.mul(s, x) == g.mul(x, s); });
    if (commutes) members.set(x);
  }
  return Subgroup::from_members(g, std::move(members));
}

Subgroup center(const GroupTable& g, const Subgroup& k) { return intersect(g, centralizer(g, k), k); }

Subgroup core(const GroupTable& g, const Subgroup& k) {
  const ConjugateOrbit orbit = conjugate_orbit(g, k);
  Bitset members(g.order());
  for (const auto e : k.elements()) {
    const bool in_all = std::all_of(orbit.representatives.begin(), orbit.representatives.end(),
                                    [&](ElementId r) { return k.contains(g.conj(e, g.inv(r))); });
    if (in_all) members.set(e);
  }
  return Subgroup::from_members(g, std::move(members));
}

namespace {

Subgroup normal_closure_under(const GroupTable& g, std::vector<ElementId> seeds, std::span<const ElementId> by) {
  Subgroup s = closure(g, seeds);
  for (;;) {
    std::vector<ElementId> extra;
    for (const auto e : s.generators()) {
      for (const auto x : by) {
        const ElementId c = g.conj(e, x);
        if (!s.contains(c)) extra.push_back(c);
      }
    }
    if (extra.empty()) return s;
    seeds.insert(seeds.end(), extra.begin(), extra.end());
    s = closure(g, seeds);
  }
}

}  // namespace

Subgroup normal_closure(const GroupTable& g, std::span<const ElementId> seeds) {
  return normal_closure_under(g, std::vector<ElementId>(seeds.begin(), seeds.end()), g.generators());
}

Subgroup derived_subgroup(const GroupTable& g, const Subgroup& k) {
  std::vector<ElementId> commutators;
  for (const auto a : k.generators()) {
    for (const auto b : k.generators()) {
      commutators.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    }
  }
  return normal_closure_under(g, std::move(commutators), k.generators());
}

bool is_normal(const GroupTable& g, const Subgroup& k) {
  for (const auto s : k.generators()) {
    for (const auto x : g.generators()) {
      if (!k.contains(g.conj(s, x))) return false;
    }
  }
  return true;
}

Subgroup pointwise_stabilizer(const GroupTable& g, std::span<const std::uint16_t> points) {
  Bitset members(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    const auto img = g.images(x);
    if (std::all_of(points.begin(), points.end(), [&](std::uint16_t p) { return img[p] == p; })) members.set(x);
  }
  return Subgroup::from_members(g, std::move(members));
}

ConjugateOrbit conjugate_orbit(const GroupTable& g, const Subgroup& k) {
  ConjugateOrbit orbit;
  orbit.normalizer = normalizer(g, k);
  orbit.index_of.assign(g.order(), kUnassigned);
  for (ElementId x = 0; x < g.order(); ++x) {
    if (orbit.index_of[x] != kUnassigned) continue;
    const auto idx = static_cast<std::uint32_t>(orbit.representatives.size());
    orbit.representatives.push_back(x);
    for (const auto n : orbit.normalizer.elements()) orbit.index_of[g.mul(n, x)] = idx;
  }
  return orbit;
}

bool is_trivial_intersection(const GroupTable& g, const Subgroup& k) {
  const ConjugateOrbit orbit = conjugate_orbit(g, k);
  for (const auto r : orbit.representatives) {
    const ElementId rinv = g.inv(r);
    std::size_t common = 0;
    for (const auto e : k.elements()) common += k.contains(g.conj(e, rinv)) ? 1 : 0;
    if (common != 1 && common != k.order()) return false;
  }
  return true;
}

std::vector<ConjugacyClass> conjugacy_classes(const GroupTable& g) {
  std::vector<bool> assigned(g.order(), false);
  std::vector<ConjugacyClass> classes;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (assigned[x]) continue;
    ConjugacyClass c;
    c.representative = x;
    c.element_order = g.element_order(x);
    c.members.push_back(x);
    assigned[x] = true;
    for (std::size_t head = 0; head < c.members.size(); ++head) {
      for (const auto s : g.generators()) {
        const ElementId y = g.conj(c.members[head], s);
        if (!assigned[y]) {
          assigned[y] = true;
          c.members.push_back(y);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    return std::tuple(a.element_order, a.size(), a.representative) <
           std::tuple(b.element_order, b.size(), b.representative);
  });
  return classes;
}

std::vector<std::uint32_t> class_lookup(const GroupTable& g, const std::vector<ConjugacyClass>& classes) {
  std::vector<std::uint32_t> out(g.order(), kUnassigned);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (const auto x : classes[i].members) out[x] = static_cast<std::uint32_t>(i);
  }
  return out;
}

}  // namespace sz
