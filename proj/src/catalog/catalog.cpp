#include "heunref/catalog/catalog.hpp"

#include <fnmatch.h>

#include "entry_support.hpp"
#include "heunref/errors.hpp"

namespace heunref {

namespace {

std::vector<Identity> build_catalog() {
  std::vector<Identity> out;
  detail::add_heun_entries(out);
  detail::add_hypergeometric_entries(out);
  detail::add_product_entries(out);
  for (Identity& e : out)
    if (!e.exclude) e.exclude = [](const ParamSet&) -> std::optional<std::string> { return std::nullopt; };
  return out;
}

}  // namespace

const std::vector<Identity>& catalog() {
  static const std::vector<Identity> entries = build_catalog();
  return entries;
}

const Identity* find_identity(const std::string& id) {
  for (const Identity& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

ConcreteIdentity instantiate(const std::string& id, const ParamSet& params, const std::string& variant) {
  const Identity* e = find_identity(id);
  if (!e) throw ParameterError("unknown identity " + id);
  return instantiate(*e, params, variant);
}

bool glob_match(const std::string& pattern, const std::string& id) {
  return ::fnmatch(pattern.c_str(), id.c_str(), 0) == 0;
}

std::vector<const Identity*> select_identities(const std::string& pattern) {
  std::vector<const Identity*> out;
  for (const Identity& e : catalog())
    if (glob_match(pattern, e.id)) out.push_back(&e);
  return out;
}

}  // namespace heunref
