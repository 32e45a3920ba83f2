#pragma once

// Exact irreducible character tables by class-matrix eigenspaces over a
// prime field, lifted to cyclotomic integers.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "sz/cyclotomic.hpp"
#include "sz/group.hpp"

namespace sz {

struct CharacterClass {
  ElementId representative = 0;
  std::size_t size = 0;
  std::uint32_t element_order = 1;
  std::size_t centralizer_order = 0;
  std::uint32_t inverse_class = 0;
};

struct CharacterTable {
  std::size_t group_order = 0;
  std::uint32_t exponent = 1;
  std::uint64_t prime = 0;
  std::vector<CharacterClass> classes;
  std::vector<std::uint32_t> class_of;     // element id -> column
  std::vector<std::vector<Cyc>> irr;       // rows: characters, columns: classes
  std::vector<std::int64_t> degrees;
  std::shared_ptr<const CyclotomicField> field;

  std::size_t size() const { return classes.size(); }
};

struct CharacterTableOptions {
  unsigned jobs = 1;
  std::size_t column_permutation_cap = 40320;
};

/// Throws CharacterTableError if any invariant fails (these would be bugs).
CharacterTable character_table(const GroupTable& g, const CharacterTableOptions& options = {});

struct TableChecks {
  bool square = false;
  std::int64_t degree_square_sum = 0;
  bool degree_sum_matches = false;
  bool degrees_divide = false;
  bool row_orthogonal = false;
  bool column_orthogonal = false;
  bool all_pass() const {
    return square && degree_sum_matches && degrees_divide && row_orthogonal && column_orthogonal;
  }
};

TableChecks check_table(const CharacterTable& t);

/// Inner product <a, b> over the table's classes; throws if not an integer.
std::int64_t inner_product(const CharacterTable& t, const std::vector<Cyc>& a, const std::vector<Cyc>& b);

/// A subgroup re-enumerated as its own table, with the map back to G.
struct SubgroupTable {
  GroupTable table;
  std::vector<ElementId> to_ambient;  // local id -> id in G
};

SubgroupTable standalone(const GroupTable& g, const Subgroup& h);

/// H-class -> G-class; every element of each H-class is checked.
std::vector<std::uint32_t> class_fusion(const SubgroupTable& h, const CharacterTable& th, const CharacterTable& tg);

std::string table_to_csv(const CharacterTable& t);
nlohmann::json table_to_json(const CharacterTable& t);

}  // namespace sz
