#pragma once

#include <stdexcept>
#include <string>

namespace svdt {

// Crystal operators come in raise/lower pairs; a raise undoes a lower and
// vice versa wherever both are defined.
enum class Dir { raise, lower };

inline Dir opposite(Dir d) { return d == Dir::raise ? Dir::lower : Dir::raise; }

// Thrown when a caller violates a documented precondition.
struct contract_error : std::logic_error {
  explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace svdt
