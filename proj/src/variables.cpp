#include "detrad/variables.hpp"

#include <cctype>

#include "detrad/errors.hpp"

namespace detrad {

bool VarPool::is_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
    return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Variable VarPool::intern(const std::string& name) {
  if (!name.empty() && name[0] == kReservedPrefix)
    throw ParseError("variable name '" + name +
                     "' uses the reserved prefix '#'");
  if (!is_identifier(name))
    throw ParseError("invalid variable name '" + name + "'");
  auto it = index_.find(name);
  if (it != index_.end()) return Variable(it->second);
  auto id = static_cast<std::int32_t>(names_.size());
  names_.push_back(name);
  index_.emplace(name, id);
  return Variable(id);
}

Variable VarPool::fresh(const std::string& stem) {
  std::string base = std::string(1, kReservedPrefix) + stem;
  std::string name = base;
  for (int k = 2; index_.count(name); ++k)
    name = base + "_" + std::to_string(k);
  auto id = static_cast<std::int32_t>(names_.size());
  names_.push_back(name);
  index_.emplace(name, id);
  return Variable(id);
}

std::optional<Variable> VarPool::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return Variable(it->second);
}

const std::string& VarPool::name(Variable v) const {
  if (v.id() < 0 || static_cast<std::size_t>(v.id()) >= names_.size())
    throw InvalidArgumentError("variable does not belong to this pool");
  return names_[static_cast<std::size_t>(v.id())];
}

std::vector<Variable> VarPool::all() const {
  std::vector<Variable> out;
  out.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i)
    out.emplace_back(static_cast<std::int32_t>(i));
  return out;
}

}  // namespace detrad
