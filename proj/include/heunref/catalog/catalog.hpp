#pragma once

#include <string>
#include <vector>

#include "heunref/catalog/identity.hpp"
#include "heunref/catalog/param_set.hpp"

namespace heunref {

/// All catalog entries, in a fixed order. Built once; immutable.
const std::vector<Identity>& catalog();

/// nullptr when no entry has this id.
const Identity* find_identity(const std::string& id);

/// find_identity + instantiate. Unknown ids raise ParameterError.
ConcreteIdentity instantiate(const std::string& id, const ParamSet& params, const std::string& variant = "printed");

/// Shell-style glob over ids ('*', '?', '[...]').
bool glob_match(const std::string& pattern, const std::string& id);

/// Entries whose id matches pattern, in catalog order.
std::vector<const Identity*> select_identities(const std::string& pattern);

}  // namespace heunref
