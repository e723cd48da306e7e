#ifndef CLONEDUAL_INSTANCE_IO_HPP
#define CLONEDUAL_INSTANCE_IO_HPP

#include <filesystem>
#include <string>
#include <variant>

#include "clonedual/clone_algebra.hpp"
#include "clonedual/duality.hpp"
#include "clonedual/finspace.hpp"
#include "clonedual/tower.hpp"

namespace clonedual {

// A validated instance of one of the file kinds.
using Instance = std::variant<FinSpace, FinAlgebra, Tower, UniformMap, AlgHom>;

// One of: space, algebra, tower, map, hom.
std::string kind_of(const Instance& instance);

// Parses and validates an instance document.  Throws SchemaError with
// parse/field diagnostics; domain invariant violations (a non-surjective
// bond, a non-uniform map, ...) surface as the library's own errors.
Instance ingest_text(const std::string& text);
Instance ingest(const std::filesystem::path& path);

// Canonical document for the instance; ingest(emit(x)) == x.
std::string emit(const Instance& instance);

// Human-oriented summary with derived facts, for the inspect command.
std::string describe(const Instance& instance);

}  // namespace clonedual

#endif
