#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace detrad {

// An interned variable. Ordering follows declaration order in the owning
// VarPool, which is also the printing priority (first declared prints first
// and is largest under the canonical graded reverse lexicographic order).
class Variable {
 public:
  Variable() : id_(-1) {}
  explicit Variable(std::int32_t id) : id_(id) {}
  std::int32_t id() const { return id_; }
  auto operator<=>(const Variable&) const = default;

 private:
  std::int32_t id_;
};

// Interning table mapping names to Variables. User-declared names must be
// identifiers ([A-Za-z_][A-Za-z0-9_]*) and must not start with the reserved
// prefix '#', which marks internally generated variables (relation variables,
// the adjoined variable of radical-membership checks).
class VarPool {
 public:
  static constexpr char kReservedPrefix = '#';

  Variable intern(const std::string& name);   // throws ParseError on bad names
  Variable fresh(const std::string& stem);    // mints a new '#'-prefixed name

  std::optional<Variable> find(const std::string& name) const;
  const std::string& name(Variable v) const;
  std::vector<Variable> all() const;          // declaration order
  std::size_t size() const { return names_.size(); }

  static bool is_identifier(const std::string& name);

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::int32_t> index_;
};

}  // namespace detrad
