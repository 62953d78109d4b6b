#pragma once

#include <string>
#include <vector>

#include "hlya/document.hpp"

namespace hlya {

/* Built-in example algebras, addressable on the command line as
   "fixture:<name>". All are defined over Q. */
std::vector<std::string> fixture_names();
AnyAlgebraDocument fixture(const std::string& name);

}  // namespace hlya
