#ifndef PARCELFORGE_CORPUS_HPP
#define PARCELFORGE_CORPUS_HPP

#include <parcelforge/instance.hpp>

namespace parcelforge {

// Built-in named instances (deterministic; small enough for brute force).
std::vector<Instance> corpus();
Instance corpus_instance(const std::string& name);  // throws ParseError if unknown

} // namespace parcelforge

#endif
