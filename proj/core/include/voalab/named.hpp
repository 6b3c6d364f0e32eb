#pragma once

#include <string>
#include <vector>

#include "voalab/fock.hpp"

namespace voalab {

struct UnknownName : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Catalog of named states. u16 is built on first use; the others are cheap.
const State& named_vector(const std::string& name);
bool is_named_vector(const std::string& name);
const std::vector<std::string>& named_vector_names();

}  // namespace voalab
